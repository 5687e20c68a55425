#include "doctest.h"
#include "lagrangian_support.hpp"

using namespace lagrel;
using testing::StateFlavour;

namespace {

Matrix<Q> M(const char* text) { return parse_matrix(text); }

}  // namespace

TEST_CASE("Lagrangian predicate") {
    CHECK(is_lagrangian(Relation::identity(2)));
    CHECK_FALSE(is_lagrangian(Relation::total(0, 4)));
    CHECK(is_lagrangian(LagrangianRelation::cup(1).affine()));
    CHECK(is_lagrangian(LagrangianRelation::cup(2).affine()));
    CHECK(is_lagrangian(Relation::empty(2, 2)));
    CHECK_FALSE(is_lagrangian(Relation::point({Q(1), Q(2), Q(3), Q(4)}).reshape(0)));
    CHECK_THROWS_AS(LagrangianRelation::make(0, 2, Relation::total(0, 4)), Error);
}

TEST_CASE("compact structure of the Lagrangian layer") {
    using LR = LagrangianRelation;
    LR snake = LR::identity(1).tensor(LR::cup(1)).compose(LR::cap(1).tensor(LR::identity(1)));
    CHECK(snake == LR::identity(1));
    LR snake2 = LR::cup(1).tensor(LR::identity(1)).compose(LR::identity(1).tensor(LR::cap(1)));
    CHECK(snake2 == LR::identity(1));
    CHECK(LR::symmetry(1, 2).compose(LR::symmetry(2, 1)) == LR::identity(3));
    CHECK(LR::cup(1) == grey_spider(0, 2, Q(0), Q(0)));
    testing::Random rng(5);
    for (int t = 0; t < 20; ++t) {
        LR r = testing::random_map(rng, 1, 2, StateFlavour::Complex);
        CHECK(unname(name(r), 1) == r);
        LR bent = LR::cup(1).tensor(LR::identity(0)).compose(LR::identity(1).tensor(r));
        CHECK(bent == name(r));
    }
}

TEST_CASE("tensor interleaves modes") {
    LagrangianRelation a = grey_spider(0, 1, Q(2), Q(0));
    LagrangianRelation b = white_spider(0, 1, Q(3), Q(0));
    LagrangianRelation ab = a.tensor(b);
    CHECK(ab.affine().contains({Q(-2), Q(7), Q(5), Q(3)}));
    CHECK_FALSE(ab.affine().contains({Q(5), Q(-2), Q(3), Q(7)}));
}

TEST_CASE("AP form examples") {
    Q r = Q(Rational(5, 3));
    APForm delta = ap_form(grey_spider(0, 1, r, Q(0)));
    CHECK(delta.vertices == std::vector<std::size_t>{0});
    CHECK(delta.phi == M("0"));
    CHECK(delta.mu == Vector<Q>{r});
    APForm vac = ap_form(vacuum());
    CHECK(vac.phi == M("i"));
    CHECK(vac.mu == Vector<Q>{Q(0)});
    APForm point = ap_form(white_spider(0, 1, r, Q(0)));
    CHECK(point.vertices.empty());
    CHECK(point.xshift == Vector<Q>{r});
    CHECK_THROWS_AS(ap_form(LagrangianRelation::empty(0, 1)), Error);
    CHECK_THROWS_AS(ap_form(LagrangianRelation::identity(1)), Error);
}

TEST_CASE("AP form round trip and invariance under re-presentation") {
    testing::Random rng(41);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = rng.integer(1, 3);
        LagrangianRelation s = testing::random_state(rng, n, StateFlavour::Complex);
        APForm ap = ap_form(s);
        CHECK(from_ap(ap) == s);
        Matrix<Q> p = rng.invertible(n, true);
        LagrangianRelation again =
            LagrangianRelation::from_constraints(0, n, p * s.affine().constraints(), p * s.affine().rhs());
        CHECK(ap_form(again) == ap);
    }
}

TEST_CASE("positivity examples") {
    CHECK(is_positive(vacuum()));
    CHECK(is_positive(white_spider(0, 1, Q(0), Q::i())));
    CHECK(white_spider(0, 1, Q(0), Q::i()) == vacuum());
    CHECK_FALSE(is_positive(vacuum().conjugate()));
    CHECK_FALSE(is_positive(white_spider(0, 1, Q(0), -Q::i())));
    testing::Random rng(8);
    for (int t = 0; t < 20; ++t) {
        LagrangianRelation s = from_ap([&] {
            APForm ap = testing::random_ap(rng, 2, StateFlavour::Positive);
            ap.phi = real_part(ap.phi);
            return ap;
        }());
        CHECK(is_positive(s));
    }
    CHECK(is_positive(LagrangianRelation::empty(1, 1)));
    Matrix<Q> g(1, 2);
    g(0, 0) = Q(1);
    CHECK_FALSE(is_positive(LagrangianRelation::from_constraints(0, 1, g, {Q::i()})));
}

TEST_CASE("quasi-reality examples") {
    CHECK(is_quasi_real(vacuum()));
    CHECK_FALSE(is_quasi_real(white_spider(1, 1, Q(0), Q(Rational(3, 2)))));
    CHECK(is_positive(white_spider(1, 1, Q(0), Q(Rational(3, 2)))));
    CHECK(is_quasi_real(LagrangianRelation::empty(2, 1)));
    CHECK(is_quasi_real(LagrangianRelation::identity(2)));
}

TEST_CASE("quasi-reality agrees with the chi-form oracle") {
    testing::Random rng(77);
    int yes = 0;
    for (int t = 0; t < 100; ++t) {
        StateFlavour f = rng.coin() ? StateFlavour::QuasiReal : StateFlavour::Positive;
        LagrangianRelation r = testing::random_map(rng, rng.integer(0, 1), rng.integer(1, 2), f);
        bool q = is_quasi_real(r);
        CHECK(q == testing::quasi_real_by_chi(r));
        yes += q;
    }
    CHECK(yes > 20);
}

TEST_CASE("positivity tests agree on random complex states") {
    testing::Random rng(19);
    int yes = 0;
    for (int t = 0; t < 200; ++t) {
        StateFlavour f = rng.coin() ? StateFlavour::Complex : StateFlavour::Positive;
        LagrangianRelation s = testing::random_state(rng, rng.integer(1, 3), f);
        bool a = positive_by_ap(s), b = positive_by_form(s);
        CHECK(a == b);
        yes += a;
    }
    CHECK(yes > 50);
}

TEST_CASE("closure under composition and tensor") {
    testing::Random rng(53);
    for (int t = 0; t < 60; ++t) {
        StateFlavour f = rng.coin() ? StateFlavour::Positive : StateFlavour::QuasiReal;
        std::size_t a = rng.integer(0, 2), b = rng.integer(0, 2), c = rng.integer(0, 2);
        LagrangianRelation r = testing::random_map(rng, a, b, f), s = testing::random_map(rng, b, c, f);
        LagrangianRelation comp = r.compose(s), tens = r.tensor(s);
        if (f == StateFlavour::Positive) {
            CHECK(is_positive(comp));
            CHECK(is_positive(tens));
        } else {
            CHECK(is_quasi_real(comp));
            CHECK(is_quasi_real(tens));
        }
        CHECK(is_lagrangian(comp.affine()));
    }
}

TEST_CASE("omega duality of Lagrangian generator matrices") {
    testing::Random rng(61);
    for (int t = 0; t < 40; ++t) {
        std::size_t n = rng.integer(0, 1), m = rng.integer(1, 2);
        LagrangianRelation r = testing::random_map(rng, n, m, StateFlavour::Complex);
        const Matrix<Q>& b = r.affine().constraints();
        Relation ker = Relation::from_constraints(2 * n, 2 * m, b, Vector<Q>(b.rows(), Q(0)));
        Relation img = Relation::from_image(2 * n, 2 * m, twisted_form(n, m) * b.transpose(),
                                            Vector<Q>(2 * (n + m), Q(0)));
        CHECK(ker == img);
    }
}

TEST_CASE("symplectic matrices") {
    CHECK(is_symplectic(M("0,1;-1,0")));
    CHECK(is_symplectic(M("2,0;0,1/2")));
    CHECK_FALSE(is_symplectic(M("2,0;0,2")));
    CHECK_THROWS_AS(is_symplectic(M("1,0,0;0,1,0;0,0,1")), Error);
    testing::Random rng(3);
    for (int t = 0; t < 20; ++t) CHECK(is_symplectic(testing::random_symplectic(rng, 2)));
    Matrix<Q> a = M("1,2;0,1"), bsym = M("1,1/2;1/2,0");
    CHECK(is_symplectic(sp_diag(a)));
    CHECK(is_symplectic(sp_shear_upper(bsym)));
    CHECK(is_symplectic(sp_shear_lower(bsym)));
    CHECK(is_symplectic(sp_fourier(2)));
}

TEST_CASE("rotations") {
    CHECK(symplectic_rotation(Rational(1), Rational(0)) == Matrix<Q>::identity(2));
    CHECK(symplectic_rotation(Rational(0), Rational(1)) == M("0,-1;1,0"));
    Matrix<Q> r = symplectic_rotation(Rational(3, 5), Rational(4, 5));
    CHECK(is_symplectic(r));
    CHECK(r.transpose() * r == Matrix<Q>::identity(2));
    Matrix<Q> o = orthogonal_rotation(circle_from_tan_half(Rational(2, 7)));
    CHECK(is_symplectic(o));
    CHECK(o.transpose() * o == Matrix<Q>::identity(4));
    CHECK_THROWS_AS(symplectic_rotation(Rational(1), Rational(1)), Error);
}

TEST_CASE("graphs of affine symplectomorphisms are faithful") {
    testing::Random rng(71);
    for (int t = 0; t < 30; ++t) {
        Matrix<Q> s1 = testing::random_symplectic(rng, 2), s2 = testing::random_symplectic(rng, 2);
        Vector<Q> c1 = rng.real_vector(4), c2 = rng.real_vector(4);
        LagrangianRelation g1 = graph(s1, c1), g2 = graph(s2, c2);
        CHECK((g1 == g2) == (s1 == s2 && c1 == c2));
        auto back = graph_matrix(g1);
        REQUIRE(back.has_value());
        CHECK(back->first == s1);
        CHECK(back->second == c1);
        CHECK(graph(s1, c1).compose(graph(s2, c2)) == graph(s2 * s1, s2 * c1 + c2));
    }
    CHECK_THROWS_AS(graph(M("2,0;0,2")), Error);
}

TEST_CASE("spider generators are flexsymmetric") {
    testing::Random rng(13);
    for (int t = 0; t < 30; ++t) {
        std::size_t in = rng.integer(0, 2), out = rng.integer(0, 2);
        if (in + out == 0) continue;
        Q a = rng.complex(), b = rng.complex();
        for (int colour = 0; colour < 2; ++colour) {
            LagrangianRelation s = colour ? white_spider(in, out, a, b) : grey_spider(in, out, a, b);
            LagrangianRelation named = name(s);
            std::vector<std::size_t> perm(in + out);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng.engine());
            CHECK(named.compose(LagrangianRelation::mode_permutation(perm)) == named);
            CHECK(name(colour ? white_spider(0, in + out, a, b) : grey_spider(0, in + out, a, b)) == named);
        }
    }
}

TEST_CASE("generator semantics") {
    CHECK(grey_spider(1, 1, Q(0), Q(0)) == LagrangianRelation::identity(1));
    CHECK(white_spider(1, 1, Q(0), Q(0)) == squeeze(Q(-1)));
    CHECK(fourier().compose(fourier_inverse()) == LagrangianRelation::identity(1));
    CHECK(fourier().compose(fourier()) == squeeze(Q(-1)));
    CHECK(squeeze(Q(2)).compose(squeeze(Q(Rational(1, 2)))) == LagrangianRelation::identity(1));
    CHECK(squeeze(Q(3)) == graph(M("1/3,0;0,3")));
    CHECK(grey_spider(1, 1, Q(0), Q(5)) == graph(M("1,5;0,1")));
    CHECK(grey_spider(0, 0, Q(1), Q(0)).is_empty());
    CHECK_FALSE(grey_spider(0, 0, Q(1), Q(2)).is_empty());
}

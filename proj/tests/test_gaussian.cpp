#include <cmath>
#include <numbers>

#include "doctest.h"
#include "lagrangian_support.hpp"
#include "lagrel/gaussian.hpp"

using namespace lagrel;
using testing::StateFlavour;

namespace {

Matrix<Q> M(const char* text) { return parse_matrix(text); }

GaussMap random_gauss_map(testing::Random& rng, std::size_t in, std::size_t out) {
    std::size_t r = static_cast<std::size_t>(rng.integer(0, static_cast<long>(out)));
    return GaussMap::make(rng.real_matrix(out, in, 2, 2), rng.real_psd(out, r), rng.real_vector(out, 2, 2));
}

PhaseMatrix random_phase(testing::Random& rng, std::size_t n, bool displaced = true) {
    Matrix<Q> v = rng.real_psd(n, n) + Matrix<Q>::identity(n);
    Matrix<Q> phi = rng.real_symmetric(n, 2, 2) + Q::i() * v;
    return PhaseMatrix::make(phi, displaced ? rng.real_vector(2 * n, 2, 2) : Vector<Q>(2 * n, Q(0)));
}

ExtendedGaussian random_extended(testing::Random& rng, std::size_t n) {
    ExtendedGaussian g;
    g.modes = n;
    for (std::size_t j = 0; j < n; ++j) (rng.coin(0.7) ? g.vertices : g.leaves).push_back(j);
    const std::size_t k = g.vertices.size(), nl = g.leaves.size();
    g.L = rng.real_matrix(k, nl, 2, 2);
    g.sigma = rng.real_psd(k, static_cast<std::size_t>(rng.integer(0, static_cast<long>(k))));
    g.mu = rng.real_vector(k, 2, 2);
    g.dual_shift = rng.real_vector(nl, 2, 2);
    return g;
}

}  // namespace

TEST_CASE("Gauss map construction is validated") {
    CHECK_NOTHROW(GaussMap::make(M("1"), M("2"), {Q(0)}));
    CHECK_THROWS_AS(GaussMap::make(M("1"), M("-1"), {Q(0)}), Error);
    CHECK_THROWS_AS(GaussMap::make(M("i"), M("1"), {Q(0)}), Error);
    CHECK_THROWS_AS(GaussMap::make(M("1,0"), M("1,0;0,1"), {Q(0)}), Error);
    CHECK_THROWS_AS(gauss_compose(GaussMap::identity(2), GaussMap::identity(1)), Error);
}

TEST_CASE("Gauss composition examples") {
    testing::Random rng(31);
    GaussMap g = random_gauss_map(rng, 2, 2);
    CHECK(gauss_compose(GaussMap::identity(2), g) == g);
    CHECK(gauss_compose(g, GaussMap::identity(2)) == g);

    Matrix<Q> b = M("1,2;0,3;1,-1");
    Matrix<Q> sigma = M("2,1;1,1");
    GaussMap h = GaussMap::make(b, Matrix<Q>(3, 3), Vector<Q>(3, Q(0)));
    GaussMap noisy = GaussMap::make(Matrix<Q>::identity(2), sigma, Vector<Q>(2, Q(0)));
    GaussMap pushed = gauss_compose(noisy, h);
    CHECK(pushed.A == b);
    CHECK(pushed.sigma == M("10,9,1;9,9,0;1,0,1"));
    CHECK(pushed.sigma == b * sigma * b.transpose());

    GaussMap source = GaussMap::distribution(sigma, {Q(1), Q(-1)});
    GaussMap out = gauss_compose(source, GaussMap::make(b, M("1,0,0;0,0,0;0,0,1"), Vector<Q>(3, Q(0))));
    CHECK(out.sigma == M("1,0,0;0,0,0;0,0,1") + b * sigma * b.transpose());
    CHECK(out.mu == Vector<Q>{Q(-1), Q(-3), Q(2)});
}

TEST_CASE("embedding into Gaussian relations is functorial") {
    testing::Random rng(32);
    int distinguished = 0;
    for (int t = 0; t < 30; ++t) {
        std::size_t n = rng.index(3), m = 1 + rng.index(2), k = 1 + rng.index(2);
        GaussMap g = random_gauss_map(rng, n, m), h = random_gauss_map(rng, m, k);
        LagrangianRelation composite = to_gaussrel(g).compose(to_gaussrel(h));
        CHECK(to_gaussrel(gauss_compose(g, h)) == composite);
        CHECK(is_quasi_real(composite));
        CHECK(to_gaussrel(gauss_tensor(g, h)) == to_gaussrel(g).tensor(to_gaussrel(h)));
        if (n == m && m == k) {
            GaussMap literal{h.A * g.A, h.sigma + g.A.transpose() * g.sigma * g.A, h.mu + g.A * g.mu};
            if (!(to_gaussrel(literal) == composite)) ++distinguished;
        }
    }
    CHECK(distinguished > 0);
}

TEST_CASE("Gauss maps round trip through the embedding") {
    testing::Random rng(33);
    for (int t = 0; t < 30; ++t) {
        GaussMap g = random_gauss_map(rng, rng.index(3), 1 + rng.index(2));
        LagrangianRelation r = to_gaussrel(g);
        CHECK(is_positive(r));
        CHECK(from_gaussrel(r) == g);
    }
    CHECK_THROWS_AS(from_gaussrel(fourier()), Error);
    CHECK_THROWS_AS(from_gaussrel(qgauss_state(PhaseMatrix::make(M("1+i")))), Error);
    CHECK(from_gaussrel(vacuum().compose(fourier())).sigma == M("1"));
}

TEST_CASE("extended Gaussian extraction examples") {
    ExtendedGaussian vac = extract_extended_gaussian(vacuum());
    CHECK(vac.sigma == M("1"));
    CHECK(vac.mu == Vector<Q>{Q(0)});
    CHECK(vac.fibre().cols() == 0);
    CHECK(to_gaussrel(GaussMap::distribution(M("1"), {Q(0)})) == vacuum());

    Q r(Rational::parse("3/2"));
    ExtendedGaussian delta = extract_extended_gaussian(grey_spider(0, 1, r, Q(0)));
    CHECK(delta.vertices.empty());
    CHECK(delta.sigma.rows() == 0);
    CHECK(delta.fibre() == M("1"));
    CHECK(delta.dual_shift == Vector<Q>{-r});

    ExtendedGaussian point = extract_extended_gaussian(white_spider(0, 1, r, Q(0)));
    CHECK(point.sigma == M("0"));
    CHECK(point.mu == Vector<Q>{r});
    CHECK(point.fibre().cols() == 0);

    CHECK_THROWS_AS(extract_extended_gaussian(qgauss_state(PhaseMatrix::make(M("1+i")))), Error);
    try {
        extract_extended_gaussian(qgauss_state(PhaseMatrix::make(M("1+i"))));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotQuasiReal);
    }
}

TEST_CASE("extended Gaussians round trip") {
    testing::Random rng(34);
    for (int t = 0; t < 30; ++t) {
        ExtendedGaussian g = random_extended(rng, 1 + rng.index(3));
        LagrangianRelation s = to_gaussrel(g);
        CHECK(is_lagrangian(s.affine()));
        CHECK(is_quasi_real(s));
        ExtendedGaussian back = extract_extended_gaussian(s);
        CHECK(to_gaussrel(back) == s);
        CHECK(rank(back.fibre()) == rank(g.fibre()));
        CHECK(kernel(back.fibre().transpose()).cols() == back.vertices.size());
    }
    int inside = 0, outside = 0;
    for (int t = 0; t < 40; ++t) {
        LagrangianRelation s = testing::random_state(rng, 1 + rng.index(3), StateFlavour::QuasiReal);
        try {
            ExtendedGaussian g = extract_extended_gaussian(s);
            CHECK(to_gaussrel(g) == s);
            ++inside;
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotInFragment);
            ++outside;
        }
    }
    CHECK(inside > 0);
    MESSAGE("quasi-real states displaced off the real fragment: " << outside);
}

TEST_CASE("phase matrices and Wigner covariances") {
    CHECK(phase_to_covariance(M("i,0;0,i")) == Matrix<Q>::identity(4));
    CHECK(phase_to_covariance(M("-1+i")) == M("2,1;1,1"));
    CHECK(covariance_to_phase(M("2,1;1,1")).phi == M("-1+i"));
    CHECK_THROWS_AS(phase_to_covariance(M("1")), Error);
    CHECK_THROWS_AS(PhaseMatrix::make(M("i,1;0,i")), Error);

    for (const char* bad : {"2,0;0,1", "-1,0;0,-1", "1,1;0,1", "1,0,0;0,1,0;0,0,1"}) {
        try {
            covariance_to_phase(M(bad));
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::NotAQuantumCovariance);
        }
    }

    testing::Random rng(35);
    for (int t = 0; t < 50; ++t) {
        std::size_t n = 1 + rng.index(2);
        PhaseMatrix p = random_phase(rng, n, false);
        Matrix<Q> delta = phase_to_covariance(p.phi);
        CHECK(is_symmetric(delta));
        CHECK(determinant(delta) == Q(1));
        CHECK(is_psd(delta + Q::i() * symplectic_form<Q>(n)));
        CHECK(covariance_to_phase(delta).phi == p.phi);
    }
}

TEST_CASE("covariance records and states") {
    testing::Random rng(36);
    PhaseMatrix vac = PhaseMatrix::make(M("i"));
    CHECK(qgauss_state(vac) == vacuum());
    CHECK(quantum_gaussian(vac).covariance == Matrix<Q>::identity(2));
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + rng.index(2);
        PhaseMatrix p = random_phase(rng, n);
        QuantumGaussian g = quantum_gaussian(p);
        CHECK(phase_matrix(g) == p);
        LagrangianRelation s = qgauss_state(p);
        CHECK(is_positive(s));
        CHECK(s.affine().contains(p.displacement));
        CHECK(is_quasi_real(s) == real_part(p.phi).is_zero());
        LagrangianRelation pairing = s.compose(qgauss_effect(p));
        CHECK_FALSE(pairing.is_empty());
    }
}

TEST_CASE("unitary action on covariance records") {
    testing::Random rng(37);
    for (int t = 0; t < 30; ++t) {
        std::size_t n = 1 + rng.index(2);
        PhaseMatrix p = random_phase(rng, n);
        Matrix<Q> s = testing::random_symplectic(rng, n, 3);
        Vector<Q> shift = rng.real_vector(2 * n, 2, 2);
        LagrangianRelation moved = qgauss_state(p).compose(qgauss_unitary(s, shift));
        QuantumGaussian acted = qgauss_act(quantum_gaussian(p), s, shift);
        CHECK(qgauss_state(phase_matrix(acted)) == moved);
        CHECK(is_positive(moved));
    }
    for (int t = 0; t < 10; ++t) {
        PhaseMatrix p = random_phase(rng, 1);
        Rational u = rng.rational(4, 4);
        CirclePoint c = CirclePoint::from_tan_half(u);
        QuantumGaussian acted = qgauss_act(quantum_gaussian(p), symplectic_rotation(c), Vector<Q>(2, Q(0)));
        CHECK(determinant(acted.covariance) == Q(1));
        CHECK(is_psd(acted.covariance + Q::i() * symplectic_form<Q>(1)));
    }
    CHECK_THROWS_AS(qgauss_unitary(M("2,0;0,1"), Vector<Q>(2, Q(0))), Error);
}

TEST_CASE("projection agrees with relational composition") {
    testing::Random rng(38);
    for (int t = 0; t < 30; ++t) {
        std::size_t measured = 1 + rng.index(2), kept = 1 + rng.index(2);
        PhaseMatrix state = random_phase(rng, measured + kept);
        PhaseMatrix effect = random_phase(rng, measured);
        QuantumGaussian projected = qgauss_project(quantum_gaussian(state), quantum_gaussian(effect));
        LagrangianRelation oracle =
            qgauss_state(state).compose(qgauss_effect(effect).tensor(LagrangianRelation::identity(kept)));
        CHECK(qgauss_state(phase_matrix(projected)) == oracle);
    }
    PhaseMatrix a = random_phase(rng, 1), b = random_phase(rng, 1);
    Matrix<Q> phi = direct_sum(a.phi, b.phi);
    Vector<Q> disp{a.s()[0], b.s()[0], a.t()[0], b.t()[0]};
    QuantumGaussian product = quantum_gaussian(PhaseMatrix::make(phi, disp));
    QuantumGaussian marginal = qgauss_project(product, quantum_gaussian(a));
    CHECK(marginal == quantum_gaussian(b));
}

TEST_CASE("doubling embedding") {
    LagrangianRelation doubled = double_state(quantum_gaussian(PhaseMatrix::make(M("i"))));
    CHECK(doubled.out() == 2);
    CHECK(is_positive(doubled));
    CHECK(is_quasi_real(doubled));
    testing::Random rng(39);
    for (int t = 0; t < 10; ++t) {
        PhaseMatrix p = random_phase(rng, 1 + rng.index(2));
        LagrangianRelation d = double_state(quantum_gaussian(p));
        CHECK(is_quasi_real(d));
        CHECK(from_gaussrel(d).sigma == quantum_gaussian(p).covariance);
    }
}

TEST_CASE("Wigner density") {
    PhaseMatrix vac = PhaseMatrix::make(M("i"));
    CHECK(wigner_density_at(vac, {0.0, 0.0}) == doctest::Approx(1.0 / std::numbers::pi));
    PhaseMatrix squeezed = PhaseMatrix::make(M("-1/2+2i"));
    for (double q : {0.3, -1.2}) {
        for (double p : {0.7, 2.0}) {
            CHECK(wigner_density_at(squeezed, {q, p}) == doctest::Approx(wigner_density_at(squeezed, {-q, -p})));
        }
    }
    PhaseMatrix shifted = PhaseMatrix::make(M("1/3+3/2i"), {Q(1), Q(Rational::parse("-1/2"))});
    CHECK(wigner_density_at(shifted, {-0.5, 1.0}) == doctest::Approx(1.0 / std::numbers::pi));
    const double h = 0.05;
    double total = 0.0;
    for (double q = -8.0; q <= 8.0; q += h)
        for (double p = -10.0; p <= 10.0; p += h) total += wigner_density_at(shifted, {q, p}) * h * h;
    CHECK(std::abs(total - 1.0) < 1e-3);
}

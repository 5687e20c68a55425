#include <cmath>
#include <random>

#include "doctest.h"
#include "lagrel/gaussian.hpp"
#include "lagrel/protocols.hpp"
#include "random_support.hpp"

using namespace lagrel;
using LR = LagrangianRelation;

namespace {

Rational r(const char* text) { return Rational::parse(text); }

bool orthogonal_symplectic(const Matrix<Q>& s) {
    const std::size_t n = s.rows();
    return is_symplectic(s) && s.transpose() * s == Matrix<Q>::identity(n);
}

double float_defect(const std::vector<std::vector<double>>& s) {
    const std::size_t n = s.size(), m = n / 2;
    auto omega = [m](std::size_t i, std::size_t j) {
        if (i < m && j == i + m) return 1.0;
        if (i >= m && j + m == i) return -1.0;
        return 0.0;
    };
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double sts = 0.0, stos = 0.0;
            for (std::size_t k = 0; k < n; ++k) {
                sts += s[k][i] * s[k][j];
                for (std::size_t l = 0; l < n; ++l) stos += s[k][i] * omega(k, l) * s[l][j];
            }
            worst = std::max({worst, std::abs(sts - (i == j ? 1.0 : 0.0)), std::abs(stos - omega(i, j))});
        }
    }
    return worst;
}

}  // namespace

TEST_CASE("LOv generators denote orthogonal symplectic graphs") {
    testing::Random rng(90);
    const LovGenerator unitary[] = {LovGenerator::PhaseShifter, LovGenerator::WavePlate, LovGenerator::Beamsplitter,
                                    LovGenerator::PolarisingBeamsplitter};
    for (int t = 0; t < 20; ++t) {
        CirclePoint p = CirclePoint::from_tan_half(rng.rational(4, 4));
        for (LovGenerator g : unitary) {
            Diagram d = lov_to_diagram(g, p);
            CHECK_NOTHROW(d.check_calculus(Calculus::GQGA));
            auto m = graph_matrix(interpret(d, Calculus::GQGA));
            REQUIRE(m.has_value());
            CHECK(orthogonal_symplectic(m->first));
            CHECK(m->second == Vector<Q>(m->first.rows(), Q(0)));
        }
    }
    CirclePoint zero;
    CHECK(interpret(lov_to_diagram(LovGenerator::Beamsplitter, zero), Calculus::GQGA) == LR::identity(4));
    CirclePoint p(r("3/5"), r("4/5"));
    CHECK(interpret(lov_to_diagram(LovGenerator::PhaseShifter, p).compose(
                        lov_to_diagram(LovGenerator::PhaseShifter, p.inverse())),
                    Calculus::GQGA) == LR::identity(2));
    LR pbs = interpret(lov_to_diagram(LovGenerator::PolarisingBeamsplitter), Calculus::GQGA);
    CHECK(pbs.compose(pbs.converse()) == LR::identity(4));
    CHECK(pbs.compose(pbs) == LR::identity(4));

    CHECK(interpret(lov_to_diagram(LovGenerator::Vacuum), Calculus::GQGA) == vacuum().tensor(vacuum()));
    PhaseMatrix vac = PhaseMatrix::make(parse_matrix("i,0;0,i"));
    CHECK(interpret(lov_to_diagram(LovGenerator::Effect), Calculus::GQGA) == qgauss_effect(vac));
    CHECK(lov_arity(LovGenerator::Effect) == std::pair<std::size_t, std::size_t>{1, 0});
}

TEST_CASE("LOv float matrices stay orthogonal and symplectic") {
    std::mt19937_64 rng(91);
    std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
    for (int t = 0; t < 100; ++t) {
        double theta = angle(rng);
        for (LovGenerator g : {LovGenerator::PhaseShifter, LovGenerator::WavePlate, LovGenerator::Beamsplitter,
                               LovGenerator::PolarisingBeamsplitter})
            CHECK(float_defect(lov_float_matrix(g, theta)) <= 1e-9);
    }
    CHECK(float_defect(lov_float_matrix(LovGenerator::PhaseShifter, M_PI)) <= 1e-9);
    CHECK_THROWS_AS(lov_float_matrix(LovGenerator::Vacuum, 0.0), Error);
}

TEST_CASE("LOv names and circuits") {
    CHECK(parse_lov_generator("beamsplitter") == LovGenerator::Beamsplitter);
    CHECK(lov_generator_name(LovGenerator::WavePlate) == "wave-plate");
    try {
        parse_lov_generator("mirror");
        FAIL("accepted an unknown generator");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::UnknownGenerator);
    }
    LovCircuit c = LovCircuit::from_json(
        R"({"wires": 3, "gates": [{"name": "beamsplitter", "wires": [2, 0], "angle": ["3/5", "4/5"]},
                                  {"name": "phase-shifter", "wires": [1], "angle": ["0", "1"]},
                                  {"name": "polarising-beamsplitter", "wires": [0, 1]}]})");
    Diagram d = lov_to_diagram(c);
    CHECK(d.in() == 6);
    auto m = graph_matrix(interpret(d, Calculus::GQGA));
    REQUIRE(m.has_value());
    CHECK(orthogonal_symplectic(m->first));
    LovCircuit with_state = LovCircuit::from_json(R"({"wires": 1, "gates": [{"name": "vacuum", "wires": []}]})");
    CHECK_THROWS_AS(lov_to_diagram(with_state), Error);
    CHECK_THROWS_AS(LovCircuit::from_json("{\"wires\": 1,"), Error);
}

TEST_CASE("active squeezing and shearing extensions") {
    CHECK(interpret(gqga_squeeze(Q(1)), Calculus::GQGA) == LR::identity(2));
    CHECK(interpret(gqga_squeeze(Q(2)).compose(gqga_squeeze(Q(r("1/2")))), Calculus::GQGA) == LR::identity(2));
    CHECK(interpret(gqga_shear(Q(0)), Calculus::GQGA) == LR::identity(2));
    Q a(r("-5/3"));
    Matrix<Q> shear = sp_shear_upper(Matrix<Q>::from_rows({{Q(0), Q(0)}, {Q(0), a}}));
    CHECK(interpret(gqga_shear(a), Calculus::GQGA) == qgauss_unitary(shear, Vector<Q>(4, Q(0))));
    try {
        gqga_squeeze(Q(0));
        FAIL("accepted a zero squeeze");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ZeroSqueeze);
    }
}

TEST_CASE("teleportation") {
    for (const char* a : {"0", "3/2", "-7"})
        for (const char* b : {"0", "1/3"}) CHECK(demo_teleportation(Rational(0), r(a), r(b)) == LR::identity(1));
    for (const char* eps : {"1/4", "1", "4"}) {
        Rational e = r(eps);
        LR diagram_path = demo_teleportation(e, r("1/2"), r("-2"));
        CHECK(diagram_path == teleportation_relation(e, r("1/2"), r("-2")));
        LR noise = to_gaussrel(GaussMap::make(Matrix<Q>::identity(1), Matrix<Q>::from_rows({{Q(e)}}), {Q(0)}));
        CHECK(demo_teleportation(e, r("1/2"), r("0")) == noise);
        // With b != 0 the channel is the noise conjugated by the z-translation by b.
        LR conjugated = translation({Q(2), Q(0)}).compose(noise).compose(translation({Q(-2), Q(0)}));
        CHECK(diagram_path == conjugated);
        CHECK(is_positive(diagram_path));
    }
    CHECK_NOTHROW(teleportation_diagram(r("2"), r("0"), r("0")).check_calculus(Calculus::GQGA));
    try {
        demo_teleportation(r("-1"));
        FAIL("accepted a negative epsilon");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NegativeEpsilon);
    }
}

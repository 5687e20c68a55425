#include "lagrel/axioms.hpp"

#include "lagrel/gates.hpp"
#include "lagrel/synthesis.hpp"

namespace lagrel {

namespace {

using Params = std::vector<Q>;
using Sides = std::pair<Diagram, Diagram>;

Diagram G(std::size_t in, std::size_t out, const Q& a = Q(0), const Q& b = Q(0)) {
    return spider_diagram(NodeKind::ZSpider, in, out, a, b);
}
Diagram W(std::size_t in, std::size_t out, const Q& a = Q(0), const Q& b = Q(0)) {
    return spider_diagram(NodeKind::XSpider, in, out, a, b);
}
Diagram F() { return box_diagram(NodeKind::Fourier); }
Diagram Fi() { return box_diagram(NodeKind::FourierInv); }
Diagram S(const Q& c) { return box_diagram(NodeKind::Squeeze, c); }
Diagram I(std::size_t n) { return Diagram::wires(n); }
Diagram A() { return antipode_diagram(); }
Diagram V() { return vacuum_diagram(); }
Diagram E() { return empty_scalar_diagram(); }
Diagram none() { return Diagram(0, 0); }
Diagram operator*(const Diagram& f, const Diagram& g) { return f.tensor(g); }
Diagram operator>>(const Diagram& f, const Diagram& g) { return f.compose(g); }

CirclePoint circle(const Params& p, std::size_t k) { return CirclePoint(p[2 * k].re(), p[2 * k + 1].re()); }

bool always(const Params&) { return true; }

std::function<bool(const Params&)> nonzero(std::vector<std::size_t> which) {
    return [which](const Params& p) {
        for (std::size_t k : which)
            if (p[k].is_zero()) return false;
        return true;
    };
}

AxiomFamily family(std::string name, Calculus c, std::size_t arity, std::function<Sides(const Params&)> build,
                   std::function<Diagram(const Params&)> mutant, std::function<bool(const Params&)> admissible = always,
                   std::string side = "", std::size_t circles = 0) {
    return AxiomFamily{std::move(name), c,          arity,           circles,          std::move(side),
                       std::move(admissible), std::move(build), std::move(mutant)};
}

// Equations shared by the symplectic and affine presentations: the phase-free Frobenius,
// bialgebra and Hopf structure of the two spiders.
void add_structural(std::vector<AxiomFamily>& t, Calculus c) {
    t.push_back(family(
        "grey-identity", c, 0, [](const Params&) { return Sides{G(1, 1), I(1)}; }, [](const Params&) { return A(); }));
    t.push_back(family(
        "antipode-involution", c, 0, [](const Params&) { return Sides{A() >> A(), I(1)}; },
        [](const Params&) { return A(); }));
    t.push_back(family(
        "bialgebra", c, 0,
        [](const Params&) {
            return Sides{W(2, 1) >> G(1, 2), (G(1, 2) * G(1, 2)) >> (I(1) * swap_diagram() * I(1)) >> (W(2, 1) * W(2, 1))};
        },
        [](const Params&) { return (G(1, 2) * G(1, 2)) >> (W(2, 1) * W(2, 1)); }));
    t.push_back(family(
        "hopf", c, 0, [](const Params&) { return Sides{G(1, 2) >> (I(1) * A()) >> W(2, 1), G(1, 0) >> W(0, 1)}; },
        [](const Params&) { return I(1); }));
}

std::vector<AxiomFamily> gsa_table() {
    const Calculus c = Calculus::GSA;
    std::vector<AxiomFamily> t;
    t.push_back(family(
        "grey-fusion", c, 4,
        [](const Params& p) { return Sides{G(2, 1, p[0], p[1]) >> G(1, 2, p[2], p[3]), G(2, 2, p[0] + p[2], p[1] + p[3])}; },
        [](const Params& p) { return G(2, 2, p[0] + p[2] + Q(1), p[1] + p[3]); }));
    t.push_back(family(
        "white-fusion", c, 4,
        [](const Params& p) {
            return Sides{W(2, 1, p[0], p[1]) >> A() >> W(1, 2, p[2], p[3]), W(2, 2, p[0] + p[2], p[1] + p[3])};
        },
        [](const Params& p) { return W(2, 2, p[0] + p[2] + Q(1), p[1] + p[3]); }));
    add_structural(t, c);
    t.push_back(family(
        "fourier-square", c, 0, [](const Params&) { return Sides{F() >> F(), A()}; },
        [](const Params&) { return I(1); }));
    t.push_back(family(
        "fourier-inverse", c, 0, [](const Params&) { return Sides{F() >> Fi(), I(1)}; },
        [](const Params&) { return F(); }));
    t.push_back(family(
        "fourier-euler", c, 0,
        [](const Params&) { return Sides{G(1, 1, Q(0), Q(1)) >> W(1, 1, Q(0), Q(1)) >> A() >> G(1, 1, Q(0), Q(1)), F()}; },
        [](const Params&) { return Fi(); }));
    t.push_back(family(
        "colour-change", c, 2,
        [](const Params& p) { return Sides{F() >> G(1, 2, p[0], p[1]) >> (F() * F()), W(1, 2, p[0], p[1])}; },
        [](const Params& p) { return W(1, 2, p[0], p[1] + Q(1)); }));
    t.push_back(family(
        "colour-change-state", c, 2, [](const Params& p) { return Sides{G(0, 1, p[0], p[1]) >> F(), W(0, 1, p[0], p[1])}; },
        [](const Params& p) { return W(0, 1, p[0] + Q(1), p[1]); }));
    t.push_back(family(
        "copy", c, 1, [](const Params& p) { return Sides{W(0, 1, p[0]) >> G(1, 2), W(0, 1, p[0]) * W(0, 1, p[0])}; },
        [](const Params& p) { return W(0, 1, p[0]) * W(0, 1, p[0] + Q(1)); }));
    t.push_back(family(
        "cocopy", c, 1, [](const Params& p) { return Sides{G(0, 1, p[0]) >> W(1, 2), G(0, 1, -p[0]) * G(0, 1, -p[0])}; },
        [](const Params& p) { return G(0, 1, p[0]) * G(0, 1, p[0] + Q(1)); }));
    t.push_back(family(
        "discard", c, 2, [](const Params& p) { return Sides{W(0, 1, p[0], p[1]) >> G(1, 0), none()}; },
        [](const Params&) { return E(); }));
    t.push_back(family(
        "squeeze-compose", c, 2, [](const Params& p) { return Sides{S(p[0]) >> S(p[1]), S(p[0] * p[1])}; },
        [](const Params& p) { return S(p[0] * p[1] * Q(2)); }, nonzero({0, 1}), "c1 != 0 and c2 != 0"));
    t.push_back(family(
        "squeeze-inverse", c, 1, [](const Params& p) { return Sides{S(p[0]) >> S(p[0].inverse()), I(1)}; },
        [](const Params&) { return S(Q(2)); }, nonzero({0}), "c != 0"));
    t.push_back(family(
        "squeeze-grey", c, 3,
        [](const Params& p) {
            const Q& z = p[2];
            return Sides{G(1, 2, p[0], p[1]) >> (S(z) * S(z)), S(z) >> G(1, 2, p[0] / z, p[1] / (z * z))};
        },
        [](const Params& p) { return S(p[2]) >> G(1, 2, p[0] / p[2] + Q(1), p[1] / (p[2] * p[2])); }, nonzero({2}),
        "c != 0"));
    t.push_back(family(
        "squeeze-white", c, 3,
        [](const Params& p) {
            const Q& z = p[2];
            return Sides{W(1, 2, p[0], p[1]) >> (S(z) * S(z)), S(z) >> W(1, 2, p[0] * z, p[1] * z * z)};
        },
        [](const Params& p) { return S(p[2]) >> W(1, 2, p[0] * p[2] + Q(1), p[1] * p[2] * p[2]); }, nonzero({2}),
        "c != 0"));
    t.push_back(family(
        "squeeze-fourier", c, 1, [](const Params& p) { return Sides{S(p[0]) >> F(), F() >> S(p[0].inverse())}; },
        [](const Params& p) { return F() >> S(p[0]); }, nonzero({0}), "c != 0"));
    t.push_back(family(
        "empty-absorbs", c, 2, [](const Params& p) { return Sides{E() * G(1, 1, p[0], p[1]), E() * (G(1, 0) >> G(0, 1))}; },
        [](const Params&) { return G(1, 0) >> G(0, 1); }));
    t.push_back(family(
        "phase-free-scalar", c, 1, [](const Params& p) { return Sides{G(0, 0, Q(0), p[0]), none()}; },
        [](const Params&) { return E(); }));
    t.push_back(family(
        "zero-scalar", c, 1, [](const Params& p) { return Sides{G(0, 0, p[0]), E()}; },
        [](const Params&) { return none(); }, nonzero({0}), "a != 0"));
    return t;
}

std::vector<AxiomFamily> gaa_table() {
    const Calculus c = Calculus::GAA;
    std::vector<AxiomFamily> t;
    t.push_back(family(
        "grey-fusion", c, 0, [](const Params&) { return Sides{G(2, 1) >> G(1, 2), G(2, 2)}; },
        [](const Params&) { return G(2, 1) * G(0, 1); }));
    t.push_back(family(
        "white-fusion", c, 2,
        [](const Params& p) { return Sides{W(2, 1, p[0]) >> A() >> W(1, 2, p[1]), W(2, 2, p[0] + p[1])}; },
        [](const Params& p) { return W(2, 2, p[0] + p[1] + Q(1)); }));
    add_structural(t, c);
    t.push_back(family(
        "copy", c, 1, [](const Params& p) { return Sides{W(0, 1, p[0]) >> G(1, 2), W(0, 1, p[0]) * W(0, 1, p[0])}; },
        [](const Params& p) { return W(0, 1, p[0]) * W(0, 1, p[0] + Q(1)); }));
    t.push_back(family(
        "discard", c, 1, [](const Params& p) { return Sides{W(0, 1, p[0]) >> G(1, 0), none()}; },
        [](const Params&) { return E(); }));
    t.push_back(family(
        "add-states", c, 3,
        [](const Params& p) { return Sides{(W(0, 1, p[0]) * W(0, 1, p[1])) >> W(2, 1, p[2]), W(0, 1, p[2] - p[0] - p[1])}; },
        [](const Params& p) { return W(0, 1, p[2] + p[0] + p[1] + Q(1)); }));
    t.push_back(family(
        "scalar-compose", c, 2, [](const Params& p) { return Sides{S(p[0]) >> S(p[1]), S(p[0] * p[1])}; },
        [](const Params& p) { return S(p[0] * p[1] + Q(1)); }));
    t.push_back(family(
        "scalar-inverse", c, 1, [](const Params& p) { return Sides{S(p[0]) >> S(p[0].inverse()), I(1)}; },
        [](const Params&) { return S(Q(2)); }, nonzero({0}), "c != 0"));
    t.push_back(family(
        "scalar-copy", c, 1, [](const Params& p) { return Sides{S(p[0]) >> G(1, 2), G(1, 2) >> (S(p[0]) * S(p[0]))}; },
        [](const Params& p) { return G(1, 2) >> (S(p[0]) * S(p[0] + Q(1))); }));
    t.push_back(family(
        "scalar-sum", c, 1, [](const Params& p) { return Sides{(S(p[0]) * S(p[0])) >> W(2, 1), W(2, 1) >> S(p[0])}; },
        [](const Params& p) { return W(2, 1) >> S(p[0] + Q(1)); }));
    t.push_back(family(
        "scalar-add", c, 2,
        [](const Params& p) { return Sides{G(1, 2) >> (S(p[0]) * S(p[1])) >> W(2, 1) >> A(), S(p[0] + p[1])}; },
        [](const Params& p) { return S(p[0] + p[1] + Q(1)); }));
    t.push_back(family(
        "scalar-state", c, 2, [](const Params& p) { return Sides{W(0, 1, p[0]) >> S(p[1]), W(0, 1, p[0] * p[1])}; },
        [](const Params& p) { return W(0, 1, p[0] * p[1] + Q(1)); }));
    t.push_back(family(
        "scalar-discard", c, 1, [](const Params& p) { return Sides{S(p[0]) >> G(1, 0), G(1, 0)}; },
        [](const Params&) { return E() * G(1, 0); }));
    t.push_back(family(
        "scalar-zero", c, 0, [](const Params&) { return Sides{S(Q(0)), G(1, 0) >> W(0, 1)}; },
        [](const Params&) { return I(1); }));
    t.push_back(family(
        "scalar-minus-one", c, 0, [](const Params&) { return Sides{S(Q(-1)), A()}; },
        [](const Params&) { return I(1); }));
    t.push_back(family(
        "empty-absorbs", c, 1, [](const Params& p) { return Sides{E() * S(p[0]), E() * (G(1, 0) >> G(0, 1))}; },
        [](const Params&) { return G(1, 0) >> G(0, 1); }));
    t.push_back(family(
        "phase-free-scalar", c, 0, [](const Params&) { return Sides{W(0, 0), none()}; },
        [](const Params&) { return E(); }));
    t.push_back(family(
        "zero-scalar", c, 1, [](const Params& p) { return Sides{W(0, 0, p[0]), E()}; },
        [](const Params&) { return none(); }, nonzero({0}), "a != 0"));
    return t;
}

bool on_circle(const Params& p, std::size_t circles) {
    for (std::size_t k = 0; k < circles; ++k)
        if (p[2 * k] * p[2 * k] + p[2 * k + 1] * p[2 * k + 1] != Q(1) || !is_real(Vector<Q>{p[2 * k], p[2 * k + 1]}))
            return false;
    return true;
}

std::vector<AxiomFamily> gga_table() {
    const Calculus c = Calculus::GGA;
    std::vector<AxiomFamily> t;
    t.push_back(family(
        "vacuum-rotation", c, 2,
        [](const Params& p) { return Sides{(V() * V()) >> passive_rotation(circle(p, 0)), V() * V()}; },
        [](const Params&) { return (V() * V()) >> (S(Q(2)) * I(1)); },
        [](const Params& p) { return on_circle(p, 1); }, "c^2 + s^2 = 1", 1));
    t.push_back(family(
        "vacuum-rotation-3", c, 4,
        [](const Params& p) {
            Diagram first = passive_rotation(circle(p, 0)) * I(1);
            Diagram second = I(1) * passive_rotation(circle(p, 1));
            return Sides{(V() * V() * V()) >> first >> second, V() * V() * V()};
        },
        [](const Params&) { return V() * V() * (V() >> S(Q(3))); },
        [](const Params& p) { return on_circle(p, 2); }, "both points on the unit circle", 2));
    t.push_back(family(
        "vacuum-reflection", c, 0, [](const Params&) { return Sides{V() >> S(Q(-1)), V()}; },
        [](const Params&) { return V() >> S(Q(2)); }));
    t.push_back(family(
        "vacuum-effect", c, 1, [](const Params& p) { return Sides{V() >> W(1, 0, p[0]), none()}; },
        [](const Params&) { return E(); }));
    t.push_back(family(
        "vacuum-effect-pair", c, 2,
        [](const Params& p) { return Sides{(V() * V()) >> (W(1, 0, p[0]) * W(1, 0, p[1])), none()}; },
        [](const Params&) { return E(); }));
    t.push_back(family(
        "vacuum-discard", c, 0, [](const Params&) { return Sides{V() >> G(1, 0), none()}; },
        [](const Params&) { return E(); }));
    return t;
}

std::vector<AxiomFamily> gqga_table() {
    const Calculus c = Calculus::GQGA;
    std::vector<AxiomFamily> t;
    t.push_back(family(
        "vacuum-phase-rotation", c, 2,
        [](const Params& p) { return Sides{V() >> phase_rotation(circle(p, 0)), V()}; },
        [](const Params&) { return V() >> S(Q(2)); },
        [](const Params& p) { return on_circle(p, 1) && !p[0].is_zero(); }, "c^2 + s^2 = 1 and c != 0", 1));
    t.push_back(family(
        "vacuum-fourier", c, 0, [](const Params&) { return Sides{V() >> F(), V()}; },
        [](const Params&) { return V() >> S(Q(2)); }));
    t.push_back(family(
        "vacuum-fourier-inverse", c, 0, [](const Params&) { return Sides{V() >> Fi(), V()}; },
        [](const Params&) { return V() >> shear_z(Q(1)); }));
    t.push_back(family(
        "vacuum-passive-rotation", c, 2,
        [](const Params& p) { return Sides{(V() * V()) >> passive_rotation(circle(p, 0)), V() * V()}; },
        [](const Params&) { return V() * (V() >> shear_x(Q(1))); },
        [](const Params& p) { return on_circle(p, 1); }, "c^2 + s^2 = 1", 1));
    t.push_back(family(
        "vacuum-grey-effect", c, 2, [](const Params& p) { return Sides{V() >> G(1, 0, p[0], p[1]), none()}; },
        [](const Params&) { return E(); }));
    t.push_back(family(
        "vacuum-white-effect", c, 2, [](const Params& p) { return Sides{V() >> W(1, 0, p[0], p[1]), none()}; },
        [](const Params&) { return E(); }));
    t.push_back(family(
        "vacuum-effect-pair", c, 2,
        [](const Params& p) { return Sides{(V() * V()) >> (G(1, 0, p[0]) * W(1, 0, p[1])), none()}; },
        [](const Params&) { return E(); }));
    return t;
}

Q sample_scalar(std::mt19937_64& rng, bool complex) {
    std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
    Rational re(num(rng), den(rng));
    if (!complex) return Q(re);
    return Q(re, Rational(num(rng), den(rng)));
}

}  // namespace

const std::vector<AxiomFamily>& axiom_table(Calculus calculus) {
    static const std::vector<AxiomFamily> gsa = gsa_table(), gaa = gaa_table(), gga = gga_table(), gqga = gqga_table();
    switch (calculus) {
        case Calculus::GSA: return gsa;
        case Calculus::GAA: return gaa;
        case Calculus::GGA: return gga;
        case Calculus::GQGA: return gqga;
    }
    fail(ErrorKind::UnknownKind, "unknown calculus");
}

const AxiomFamily& find_axiom(Calculus calculus, const std::string& name) {
    for (const AxiomFamily& f : axiom_table(calculus))
        if (f.name == name) return f;
    fail(ErrorKind::UnknownKind, "no axiom named " + name + " in " + std::string(calculus_name(calculus)));
}

AxiomInstance instantiate(const AxiomFamily& family, const std::vector<Q>& params) {
    require(params.size() == family.arity, ErrorKind::DimensionMismatch,
            family.name + " takes " + std::to_string(family.arity) + " parameters");
    require(family.admissible(params), ErrorKind::SideConditionViolated,
            family.name + " requires " + family.side_condition);
    auto [lhs, rhs] = family.build(params);
    return AxiomInstance{family.name, family.calculus, std::move(lhs), std::move(rhs)};
}

AxiomInstance instantiate_mutant(const AxiomFamily& family, const std::vector<Q>& params) {
    AxiomInstance ax = instantiate(family, params);
    ax.name += "/mutant";
    ax.rhs = family.mutant(params);
    return ax;
}

bool check_axiom(const AxiomInstance& ax) {
    ax.lhs.check_calculus(ax.calculus);
    ax.rhs.check_calculus(ax.calculus);
    require(ax.lhs.in() == ax.rhs.in() && ax.lhs.out() == ax.rhs.out(), ErrorKind::DimensionMismatch,
            ax.name + ": sides have different types");
    if (ax.calculus == Calculus::GAA) return interpret_affine(ax.lhs) == interpret_affine(ax.rhs);
    return interpret(ax.lhs, ax.calculus) == interpret(ax.rhs, ax.calculus);
}

std::vector<Q> sample_parameters(const AxiomFamily& family, std::mt19937_64& rng) {
    const bool complex = family.calculus == Calculus::GSA;
    for (int attempt = 0; attempt < 1000; ++attempt) {
        std::vector<Q> p;
        for (std::size_t k = 0; k < family.circles; ++k) {
            CirclePoint point = CirclePoint::from_tan_half(sample_scalar(rng, false).re());
            if (std::bernoulli_distribution(0.1)(rng)) point = CirclePoint(Rational(-1), Rational(0));
            p.push_back(Q(point.c()));
            p.push_back(Q(point.s()));
        }
        while (p.size() < family.arity) p.push_back(sample_scalar(rng, complex));
        if (family.admissible(p)) return p;
    }
    fail(ErrorKind::SideConditionViolated, "could not sample parameters for " + family.name);
}

std::vector<AxiomResult> run_axiom_suite(Calculus calculus, std::size_t samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<AxiomResult> results;
    for (const AxiomFamily& f : axiom_table(calculus)) {
        AxiomResult r{calculus, f.name, 0, 0, false};
        std::vector<Q> first;
        for (std::size_t k = 0; k < samples; ++k) {
            std::vector<Q> p = sample_parameters(f, rng);
            if (k == 0) first = p;
            ++r.samples;
            r.passed += check_axiom(instantiate(f, p));
        }
        r.mutant_rejected = !check_axiom(instantiate_mutant(f, first));
        results.push_back(std::move(r));
    }
    return results;
}

}  // namespace lagrel

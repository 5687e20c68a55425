#include "lagrel/protocols.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <json.hpp>

#include "lagrel/gates.hpp"
#include "lagrel/gaussian.hpp"
#include "lagrel/synthesis.hpp"

namespace lagrel {

namespace {

using FloatMatrix = std::vector<std::vector<double>>;

constexpr std::array<std::pair<LovGenerator, std::string_view>, 6> kLovNames{{
    {LovGenerator::PhaseShifter, "phase-shifter"},
    {LovGenerator::WavePlate, "wave-plate"},
    {LovGenerator::Beamsplitter, "beamsplitter"},
    {LovGenerator::PolarisingBeamsplitter, "polarising-beamsplitter"},
    {LovGenerator::Vacuum, "vacuum"},
    {LovGenerator::Effect, "effect"},
}};

// Wires (1H, 1V, 2H, 2V) reordered to (1H, 2H, 1V, 2V) and back.
const std::vector<std::size_t> kByPolarisation{0, 2, 1, 3};

Diagram vacuum_effect_diagram() {
    Diagram d(1, 0);
    d.connect(Endpoint::input(0), Endpoint::at(d.add_node(NodeKind::Vacuum), 0));
    return d;
}

// Shear z -> z + i epsilon x realised with vacuum gadgets on a 1 -> 1 grey spider.
Diagram noisy_shear(const Rational& epsilon) {
    Diagram d(1, 1);
    std::size_t v = d.grey();
    d.connect(Endpoint::input(0), d.leg(v));
    d.connect(d.leg(v), Endpoint::output(0));
    for (const Rational& r : rational_squares(epsilon)) {
        std::size_t hub = d.grey();
        d.connect(d.leg(hub), Endpoint::at(d.add_node(NodeKind::Vacuum), 0));
        add_edge_gadget(d, v, hub, Q(r));
    }
    return d;
}

FloatMatrix identity_matrix(std::size_t n) {
    FloatMatrix m(n, std::vector<double>(n, 0.0));
    for (std::size_t k = 0; k < n; ++k) m[k][k] = 1.0;
    return m;
}

FloatMatrix multiply(const FloatMatrix& a, const FloatMatrix& b) {
    FloatMatrix c(a.size(), std::vector<double>(b[0].size(), 0.0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t k = 0; k < b.size(); ++k)
            for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

// 2x2 block acting on the (z, x) pair of one mode among n.
FloatMatrix on_mode(std::size_t mode, std::size_t n, const std::array<double, 4>& m) {
    FloatMatrix s = identity_matrix(2 * n);
    s[mode][mode] = m[0];
    s[mode][n + mode] = m[1];
    s[n + mode][mode] = m[2];
    s[n + mode][n + mode] = m[3];
    return s;
}

// Rotation of one mode by three shears, matching phase_rotation.
FloatMatrix float_phase_rotation(std::size_t mode, std::size_t n, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    if (std::abs(1.0 + c) < 1e-12) return on_mode(mode, n, {-1.0, 0.0, 0.0, -1.0});
    const double t = s / (1.0 + c);
    FloatMatrix outer = on_mode(mode, n, {1.0, -t, 0.0, 1.0});
    FloatMatrix middle = on_mode(mode, n, {1.0, 0.0, s, 1.0});
    return multiply(outer, multiply(middle, outer));
}

// Real rotation of modes (i, j) applied to both blocks, matching passive_rotation.
FloatMatrix float_passive_rotation(std::size_t i, std::size_t j, std::size_t n, double theta) {
    const double c = std::cos(theta), s = std::sin(theta);
    FloatMatrix r = identity_matrix(2 * n);
    for (std::size_t block : {std::size_t(0), n}) {
        r[block + i][block + i] = c;
        r[block + i][block + j] = -s;
        r[block + j][block + i] = s;
        r[block + j][block + j] = c;
    }
    return r;
}

FloatMatrix float_swap(std::size_t i, std::size_t j, std::size_t n) {
    FloatMatrix r = identity_matrix(2 * n);
    for (std::size_t block : {std::size_t(0), n}) {
        r[block + i][block + i] = 0.0;
        r[block + j][block + j] = 0.0;
        r[block + i][block + j] = 1.0;
        r[block + j][block + i] = 1.0;
    }
    return r;
}

Diagram on_wire(std::size_t wire, std::size_t total, const Diagram& gate) {
    return Diagram::wires(wire).tensor(gate).tensor(Diagram::wires(total - wire - gate.in()));
}

Vector<Q> point(const Rational& z, const Rational& x) { return {Q(z), Q(x)}; }

}  // namespace

Diagram permutation_diagram(const std::vector<std::size_t>& perm) {
    Diagram d(perm.size(), perm.size());
    for (std::size_t k = 0; k < perm.size(); ++k) d.connect(Endpoint::input(k), Endpoint::output(perm[k]));
    d.validate();
    return d;
}

LovGenerator parse_lov_generator(std::string_view name) {
    for (const auto& [g, text] : kLovNames)
        if (text == name) return g;
    fail(ErrorKind::UnknownGenerator, "unknown LOv generator '" + std::string(name) + "'");
}

std::string_view lov_generator_name(LovGenerator g) {
    for (const auto& [h, text] : kLovNames)
        if (h == g) return text;
    fail(ErrorKind::UnknownGenerator, "unknown LOv generator");
}

std::pair<std::size_t, std::size_t> lov_arity(LovGenerator g) {
    switch (g) {
        case LovGenerator::PhaseShifter:
        case LovGenerator::WavePlate: return {1, 1};
        case LovGenerator::Beamsplitter:
        case LovGenerator::PolarisingBeamsplitter: return {2, 2};
        case LovGenerator::Vacuum: return {0, 1};
        case LovGenerator::Effect: return {1, 0};
    }
    fail(ErrorKind::UnknownGenerator, "unknown LOv generator");
}

Diagram lov_to_diagram(LovGenerator g, const CirclePoint& angle) {
    switch (g) {
        case LovGenerator::PhaseShifter: return phase_rotation(angle).tensor(phase_rotation(angle));
        case LovGenerator::WavePlate: return passive_rotation(angle);
        case LovGenerator::Beamsplitter: {
            Diagram rotate = passive_rotation(angle).tensor(passive_rotation(angle));
            return permutation_diagram(kByPolarisation).compose(rotate).compose(permutation_diagram(kByPolarisation));
        }
        case LovGenerator::PolarisingBeamsplitter: return permutation_diagram({0, 3, 2, 1});
        case LovGenerator::Vacuum: return tensor_power(vacuum_diagram(), 2);
        case LovGenerator::Effect: return tensor_power(vacuum_effect_diagram(), 2);
    }
    fail(ErrorKind::UnknownGenerator, "unknown LOv generator");
}

LovCircuit LovCircuit::from_json(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::ParseError, e.what());
    }
    try {
        LovCircuit c;
        c.wires = j.at("wires").get<std::size_t>();
        for (const auto& g : j.at("gates")) {
            LovGate gate;
            gate.generator = parse_lov_generator(g.at("name").get<std::string>());
            gate.wires = g.at("wires").get<std::vector<std::size_t>>();
            if (g.contains("angle")) {
                auto pair = g.at("angle").get<std::vector<std::string>>();
                require(pair.size() == 2, ErrorKind::ParseError, "angle must be a pair [c, s]");
                try {
                    gate.angle = CirclePoint(Rational::parse(pair[0]), Rational::parse(pair[1]));
                } catch (const Error& e) {
                    if (e.kind() == ErrorKind::NotOnCircle) throw;
                    fail(ErrorKind::ParseError, e.what());
                }
            }
            c.gates.push_back(std::move(gate));
        }
        return c;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::ParseError, e.what());
    }
}

Diagram lov_to_diagram(const LovCircuit& circuit) {
    const std::size_t modes = 2 * circuit.wires;
    Diagram d = Diagram::wires(modes);
    for (const LovGate& gate : circuit.gates) {
        auto [in, out] = lov_arity(gate.generator);
        require(in == out, ErrorKind::UnknownGenerator,
                std::string(lov_generator_name(gate.generator)) + " is not a unitary gate");
        require(gate.wires.size() == in, ErrorKind::DimensionMismatch,
                std::string(lov_generator_name(gate.generator)) + " acts on " + std::to_string(in) + " wires");
        for (std::size_t w : gate.wires)
            require(w < circuit.wires, ErrorKind::DimensionMismatch, "gate wire out of range");
        Diagram g = lov_to_diagram(gate.generator, gate.angle);
        if (in == 1) {
            d = d.compose(on_wire(2 * gate.wires[0], modes, g));
            continue;
        }
        require(gate.wires[0] != gate.wires[1], ErrorKind::DimensionMismatch, "two-wire gate on a single wire");
        // Route the two optical wires to positions 0 and 1, apply, and route back.
        std::vector<std::size_t> order{2 * gate.wires[0], 2 * gate.wires[0] + 1, 2 * gate.wires[1],
                                       2 * gate.wires[1] + 1};
        for (std::size_t k = 0; k < modes; ++k)
            if (std::find(order.begin(), order.end(), k) == order.end()) order.push_back(k);
        std::vector<std::size_t> to_front(modes), to_back(modes);
        for (std::size_t k = 0; k < modes; ++k) {
            to_front[order[k]] = k;
            to_back[k] = order[k];
        }
        d = d.compose(permutation_diagram(to_front))
                .compose(g.tensor(Diagram::wires(modes - 4)))
                .compose(permutation_diagram(to_back));
    }
    return d;
}

std::vector<std::vector<double>> lov_float_matrix(LovGenerator g, double theta) {
    switch (g) {
        case LovGenerator::PhaseShifter:
            return multiply(float_phase_rotation(0, 2, theta), float_phase_rotation(1, 2, theta));
        case LovGenerator::WavePlate: return float_passive_rotation(0, 1, 2, theta);
        case LovGenerator::Beamsplitter:
            return multiply(float_passive_rotation(0, 2, 4, theta), float_passive_rotation(1, 3, 4, theta));
        case LovGenerator::PolarisingBeamsplitter: return float_swap(1, 3, 4);
        default: fail(ErrorKind::UnknownGenerator, std::string(lov_generator_name(g)) + " is not a unitary gate");
    }
}

Diagram gqga_squeeze(const Q& a) {
    require(!a.is_zero(), ErrorKind::ZeroSqueeze, "squeezing parameter must be nonzero");
    require(is_real(Vector<Q>{a}), ErrorKind::NotInFragment, "squeezing parameter must be real");
    return Diagram::wires(1).tensor(box_diagram(NodeKind::Squeeze, a));
}

Diagram gqga_shear(const Q& a) {
    require(is_real(Vector<Q>{a}), ErrorKind::NotInFragment, "shear parameter must be real");
    return Diagram::wires(1).tensor(shear_z(a));
}

Diagram teleportation_diagram(const Rational& epsilon, const Rational& a, const Rational& b) {
    require(epsilon.sign() >= 0, ErrorKind::NegativeEpsilon, "epsilon must be nonnegative");
    Diagram noise = box_diagram(NodeKind::Fourier).compose(noisy_shear(epsilon)).compose(box_diagram(NodeKind::FourierInv));
    Diagram bell = spider_diagram(NodeKind::ZSpider, 0, 2).compose(Diagram::wires(1).tensor(noise));
    Diagram cap(2, 0);
    cap.connect(Endpoint::input(0), Endpoint::input(1));
    Diagram effect = translation_diagram(point(-b, -a)).tensor(Diagram::wires(1)).compose(cap);
    return Diagram::wires(1)
        .tensor(bell)
        .compose(effect.tensor(Diagram::wires(1)))
        .compose(translation_diagram(point(b, a)));
}

LagrangianRelation demo_teleportation(const Rational& epsilon, const Rational& a, const Rational& b) {
    return interpret(teleportation_diagram(epsilon, a, b), Calculus::GQGA);
}

LagrangianRelation teleportation_relation(const Rational& epsilon, const Rational& a, const Rational& b) {
    require(epsilon.sign() >= 0, ErrorKind::NegativeEpsilon, "epsilon must be nonnegative");
    using LR = LagrangianRelation;
    LR noise = to_gaussrel(GaussMap::make(Matrix<Q>::identity(1), Matrix<Q>::from_rows({{Q(epsilon)}}), {Q(0)}));
    LR bell = grey_spider(0, 2, Q(0), Q(0)).compose(LR::identity(1).tensor(noise));
    LR effect = translation(point(-b, -a)).tensor(LR::identity(1)).compose(LR::cap(1));
    return LR::identity(1).tensor(bell).compose(effect.tensor(LR::identity(1))).compose(translation(point(b, a)));
}

}  // namespace lagrel

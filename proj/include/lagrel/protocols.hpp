#pragma once

#include <string>
#include <vector>

#include "lagrel/diagram.hpp"

namespace lagrel {

// Diagram routing input k to output perm[k].
Diagram permutation_diagram(const std::vector<std::size_t>& perm);

// Passive linear optics: optical wire k carries the horizontal mode on diagram wire 2k and
// the vertical mode on wire 2k + 1.
enum class LovGenerator { PhaseShifter, WavePlate, Beamsplitter, PolarisingBeamsplitter, Vacuum, Effect };

LovGenerator parse_lov_generator(std::string_view name);  // throws UnknownGenerator
std::string_view lov_generator_name(LovGenerator g);
// Optical input and output counts of a generator.
std::pair<std::size_t, std::size_t> lov_arity(LovGenerator g);
// GQGA image of a generator at an exact angle; the angle is ignored by the unparametrised ones.
Diagram lov_to_diagram(LovGenerator g, const CirclePoint& angle = CirclePoint());

struct LovGate {
    LovGenerator generator = LovGenerator::PhaseShifter;
    std::vector<std::size_t> wires;
    CirclePoint angle;
};

struct LovCircuit {
    std::size_t wires = 0;
    std::vector<LovGate> gates;

    // {"wires": n, "gates": [{"name": "beamsplitter", "wires": [0, 1], "angle": ["3/5", "4/5"]}]}
    static LovCircuit from_json(std::string_view text);
};

// Unitary circuit on `wires` optical wires as a diagram on 2 * wires modes.
Diagram lov_to_diagram(const LovCircuit& circuit);

// Symplectic matrix of a unitary generator at a floating-point angle, built from the same
// shear and rotation decompositions as the exact diagrams.
std::vector<std::vector<double>> lov_float_matrix(LovGenerator g, double theta);

// Active squeezing of the vertical mode of one optical wire; throws ZeroSqueeze for a = 0.
Diagram gqga_squeeze(const Q& a);
// Position-momentum shear z -> z + a x of the vertical mode of one optical wire.
Diagram gqga_shear(const Q& a);

// Continuous-variable teleportation: a Bell resource with position noise epsilon, a Bell-basis
// effect with recorded outcome (a, b) and the displacement correction on the receiver's wire.
Diagram teleportation_diagram(const Rational& epsilon, const Rational& a, const Rational& b);
// Interpretation of the teleportation diagram; throws NegativeEpsilon.
LagrangianRelation demo_teleportation(const Rational& epsilon, const Rational& a = Rational(0),
                                      const Rational& b = Rational(0));
// The same composite built directly from relations, without diagrams.
LagrangianRelation teleportation_relation(const Rational& epsilon, const Rational& a = Rational(0),
                                          const Rational& b = Rational(0));

}  // namespace lagrel

#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "lagrel/diagram.hpp"

namespace lagrel {

struct AxiomInstance {
    std::string name;
    Calculus calculus = Calculus::GSA;
    Diagram lhs;
    Diagram rhs;
};

// One equation schema of a presentation, parametrised by scalars. The first 2 * circles
// parameters are read as points (c, s) on the unit circle.
struct AxiomFamily {
    std::string name;
    Calculus calculus = Calculus::GSA;
    std::size_t arity = 0;
    std::size_t circles = 0;
    std::string side_condition;
    std::function<bool(const std::vector<Q>&)> admissible;
    std::function<std::pair<Diagram, Diagram>(const std::vector<Q>&)> build;
    // Right-hand side with a deliberate error, used as a mutation control.
    std::function<Diagram(const std::vector<Q>&)> mutant;
};

const std::vector<AxiomFamily>& axiom_table(Calculus calculus);
const AxiomFamily& find_axiom(Calculus calculus, const std::string& name);

// Throws SideConditionViolated when the parameters break the family's side condition.
AxiomInstance instantiate(const AxiomFamily& family, const std::vector<Q>& params);
AxiomInstance instantiate_mutant(const AxiomFamily& family, const std::vector<Q>& params);
// Exact semantic equality of both sides (affine interpretation for GAA).
bool check_axiom(const AxiomInstance& ax);
// Random parameters satisfying the side condition: Gaussian rationals for GSA, rationals otherwise.
std::vector<Q> sample_parameters(const AxiomFamily& family, std::mt19937_64& rng);

struct AxiomResult {
    Calculus calculus = Calculus::GSA;
    std::string name;
    std::size_t samples = 0;
    std::size_t passed = 0;
    bool mutant_rejected = false;

    bool ok() const { return passed == samples && mutant_rejected; }
};

std::vector<AxiomResult> run_axiom_suite(Calculus calculus, std::size_t samples, std::uint64_t seed);

}  // namespace lagrel

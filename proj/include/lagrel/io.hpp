#pragma once

#include <string>
#include <string_view>

#include "lagrel/gaussian.hpp"
#include "lagrel/lagrangian.hpp"

namespace lagrel {

// JSON records with scalars in the exact text encoding ("3/4", "1-2i") and sorted keys.
// Matrices are arrays of rows; the shape fields disambiguate empty matrices.
// Parsers throw ParseError, with line and column for malformed JSON.

// {"in": n, "out": m, "empty": false, "constraints": [[...]], "rhs": [...]}
std::string relation_to_json(const LagrangianRelation& r);
LagrangianRelation relation_from_json(std::string_view text);

// {"in": n, "out": m, "A": [[...]], "sigma": [[...]], "mu": [...]}
std::string gauss_map_to_json(const GaussMap& g);
GaussMap gauss_map_from_json(std::string_view text);

// {"modes", "vertices", "leaves", "L", "sigma", "mu", "dual_shift"}
std::string extended_gaussian_to_json(const ExtendedGaussian& g);
ExtendedGaussian extended_gaussian_from_json(std::string_view text);

// {"phi": [[...]], "displacement": [...]}
std::string phase_matrix_to_json(const PhaseMatrix& p);
PhaseMatrix phase_matrix_from_json(std::string_view text);

}  // namespace lagrel

#pragma once

#include <vector>

#include "lagrel/diagram.hpp"

namespace lagrel {

// Rationals r_t with sum r_t^2 = d for d >= 0.
std::vector<Rational> rational_squares(const Rational& d);
// Real vectors w_t with sum w_t w_t^T = v for a real positive semidefinite v.
std::vector<Vector<Q>> rank_one_terms(const Matrix<Q>& v);

// GAA diagram n -> k whose interpretation is the linear map x |-> A x:
// copy spiders on the inputs, weighted sum spiders on the outputs.
Diagram matrix_diagram(const Matrix<Q>& a);
// Per-wire translation by a real vector (z shifts, then x shifts) on n wires.
Diagram translation_diagram(const Vector<Q>& shift);
// Adds the edge gadget {z_u += w x_v, z_v += w x_u} between spiders u and v.
void add_edge_gadget(Diagram& d, std::size_t u, std::size_t v, const Q& w);

// Normal-form diagram whose interpretation in the calculus equals the relation.
// GGA needs a quasi-real relation and GQGA a positive one; throws NotInFragment otherwise.
Diagram synthesize_normal_form(const LagrangianRelation& r, Calculus calculus);
// GAA diagram for an affine relation on position coordinates.
Diagram synthesize_affine(const Relation& r);

// Graph-state import: grey vertices with symplectic phases U_vv, edge gadgets weighted
// by U_uv and vacuum gadgets for V. Throws NotPositiveDefinite unless V > 0.
Diagram import_graph_state(const Matrix<Q>& u, const Matrix<Q>& v);

}  // namespace lagrel

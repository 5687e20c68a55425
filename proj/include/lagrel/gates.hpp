#pragma once

#include <string>
#include <vector>

#include "lagrel/diagram.hpp"

namespace lagrel {

// Single spider with its first `in` legs on the inputs and the remaining legs on the outputs.
Diagram spider_diagram(NodeKind kind, std::size_t in, std::size_t out, const Q& a = Q(0), const Q& b = Q(0));
// Fourier, inverse Fourier or squeeze box as a 1 -> 1 diagram.
Diagram box_diagram(NodeKind kind, const Q& param = Q(0));
Diagram vacuum_diagram();
Diagram swap_diagram();
// The phase-free 1 -> 1 white spider, (z, x) -> (-z, -x).
Diagram antipode_diagram();
// Legless white spider with phase (1, 0), denoting the empty relation 0 -> 0.
Diagram empty_scalar_diagram();
// n-fold tensor power; the 0 -> 0 diagram for n = 0.
Diagram tensor_power(const Diagram& d, std::size_t n);

// z -> z + b x.
Diagram shear_z(const Q& b);
// x -> x + b z.
Diagram shear_x(const Q& b);
// (z, x) -> (c z - s x, s z + c x) by three shears; the double Fourier box when c = -1.
Diagram phase_rotation(const CirclePoint& p);
// Real rotation of two modes acting on both the z and x blocks.
Diagram passive_rotation(const CirclePoint& p);
// Two grey spiders joined by an edge gadget: z_1 += w x_2, z_2 += w x_1.
Diagram controlled_z(const Q& w);

}  // namespace lagrel

#pragma once

#include <string>

#include "lagrel/diagram.hpp"

namespace lagrel {

// Graphviz rendering: grey and white circles for spiders, boxes for Fourier and squeeze
// nodes, a triangle for the vacuum and points for the boundary.
std::string to_dot(const Diagram& d);
// TikZ picture with inputs on the left, nodes in a middle column and outputs on the right.
std::string to_tikz(const Diagram& d);

}  // namespace lagrel

#include "doctest.h"
#include "lagrel/gates.hpp"
#include "lagrel/render.hpp"

using namespace lagrel;

namespace {

Diagram sample() {
    Diagram d(1, 1);
    std::size_t g = d.grey(Q(1), Q(0));
    std::size_t s = d.squeeze(Q(Rational(2, 3)));
    std::size_t v = d.add_node(NodeKind::Vacuum);
    d.connect(Endpoint::input(0), d.leg(g));
    d.connect(d.leg(g), Endpoint::at(s, 0));
    d.connect(Endpoint::at(s, 1), Endpoint::output(0));
    d.connect(d.leg(g), Endpoint::at(v, 0));
    return d;
}

}  // namespace

TEST_CASE("DOT output") {
    CHECK(to_dot(sample()) ==
          "graph diagram {\n"
          "  rankdir=LR;\n"
          "  \"in0\" [shape=point];\n"
          "  \"out0\" [shape=point];\n"
          "  \"n0\" [label=\"1, 0\", shape=circle, style=filled, fillcolor=gray];\n"
          "  \"n1\" [label=\"2/3\", shape=box];\n"
          "  \"n2\" [label=\"\", shape=triangle, style=filled, fillcolor=gray];\n"
          "  \"in0\" -- \"n0\";\n"
          "  \"n0\" -- \"n1\";\n"
          "  \"n1\" -- \"out0\";\n"
          "  \"n0\" -- \"n2\";\n"
          "}\n");
    std::string white = to_dot(box_diagram(NodeKind::FourierInv).compose(antipode_diagram()));
    CHECK(white.find("label=\"F^-1\", shape=box") != std::string::npos);
    CHECK(white.find("fillcolor=white") != std::string::npos);
}

TEST_CASE("TikZ output") {
    std::string tikz = to_tikz(sample());
    CHECK(tikz.rfind("\\begin{tikzpicture}\n", 0) == 0);
    CHECK(tikz.find("\\node[circle, draw, fill=gray!50, minimum size=4mm] (n0) at (2,0) {$1, 0$};") !=
          std::string::npos);
    CHECK(tikz.find("\\node[rectangle, draw, fill=white] (n1) at (2,-1) {$2/3$};") != std::string::npos);
    CHECK(tikz.find("regular polygon sides=3") != std::string::npos);
    CHECK(tikz.find("\\draw (in0) -- (n0);") != std::string::npos);
    CHECK(tikz.find("\\end{tikzpicture}\n") != std::string::npos);
}

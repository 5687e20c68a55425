#include "lagrel/render.hpp"

#include <cctype>
#include <sstream>

namespace lagrel {

namespace {

std::string phase_label(const Node& n) {
    if (n.a.is_zero() && n.b.is_zero()) return "";
    return n.a.str() + ", " + n.b.str();
}

std::string node_label(const Node& n) {
    switch (n.kind) {
        case NodeKind::ZSpider:
        case NodeKind::XSpider: return phase_label(n);
        case NodeKind::Fourier: return "F";
        case NodeKind::FourierInv: return "F^-1";
        case NodeKind::Squeeze: return n.param.str();
        case NodeKind::Vacuum: return "";
    }
    return "";
}

std::string tikz_label(const Node& n) {
    switch (n.kind) {
        case NodeKind::FourierInv: return "$F^{-1}$";
        case NodeKind::Fourier: return "$F$";
        default: {
            std::string text = node_label(n);
            return text.empty() ? "" : "$" + text + "$";
        }
    }
}

std::string tikz_style(NodeKind kind) {
    switch (kind) {
        case NodeKind::ZSpider: return "circle, draw, fill=gray!50, minimum size=4mm";
        case NodeKind::XSpider: return "circle, draw, fill=white, minimum size=4mm";
        case NodeKind::Fourier:
        case NodeKind::FourierInv:
        case NodeKind::Squeeze: return "rectangle, draw, fill=white";
        case NodeKind::Vacuum: return "regular polygon, regular polygon sides=3, draw, fill=gray!50, inner sep=1pt";
    }
    return "draw";
}

std::string endpoint_name(const Diagram& d, const Endpoint& e) {
    switch (e.type) {
        case Endpoint::Type::Input: return d.input_names()[e.index];
        case Endpoint::Type::Output: return d.output_names()[e.index];
        case Endpoint::Type::Port: return d.nodes()[e.index].id;
    }
    return "";
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

// TikZ node names may not contain ':' or spaces.
std::string tikz_name(const std::string& s) {
    std::string out;
    for (char c : s) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '-';
    return out;
}

}  // namespace

std::string to_dot(const Diagram& d) {
    std::ostringstream out;
    out << "graph diagram {\n  rankdir=LR;\n";
    for (const std::string& name : d.input_names()) out << "  " << quoted(name) << " [shape=point];\n";
    for (const std::string& name : d.output_names()) out << "  " << quoted(name) << " [shape=point];\n";
    for (const Node& n : d.nodes()) {
        out << "  " << quoted(n.id) << " [label=" << quoted(node_label(n));
        switch (n.kind) {
            case NodeKind::ZSpider: out << ", shape=circle, style=filled, fillcolor=gray"; break;
            case NodeKind::XSpider: out << ", shape=circle, style=filled, fillcolor=white"; break;
            case NodeKind::Fourier:
            case NodeKind::FourierInv:
            case NodeKind::Squeeze: out << ", shape=box"; break;
            case NodeKind::Vacuum: out << ", shape=triangle, style=filled, fillcolor=gray"; break;
        }
        out << "];\n";
    }
    for (const Edge& e : d.edges())
        out << "  " << quoted(endpoint_name(d, e.a)) << " -- " << quoted(endpoint_name(d, e.b)) << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_tikz(const Diagram& d) {
    std::ostringstream out;
    out << "\\begin{tikzpicture}\n";
    for (std::size_t k = 0; k < d.in(); ++k)
        out << "  \\coordinate (" << tikz_name(d.input_names()[k]) << ") at (0," << -static_cast<long>(k) << ");\n";
    for (std::size_t k = 0; k < d.nodes().size(); ++k) {
        const Node& n = d.nodes()[k];
        out << "  \\node[" << tikz_style(n.kind) << "] (" << tikz_name(n.id) << ") at (2," << -static_cast<long>(k)
            << ") {" << tikz_label(n) << "};\n";
    }
    for (std::size_t k = 0; k < d.out(); ++k)
        out << "  \\coordinate (" << tikz_name(d.output_names()[k]) << ") at (4," << -static_cast<long>(k) << ");\n";
    for (const Edge& e : d.edges())
        out << "  \\draw (" << tikz_name(endpoint_name(d, e.a)) << ") -- (" << tikz_name(endpoint_name(d, e.b))
            << ");\n";
    out << "\\end{tikzpicture}\n";
    return out.str();
}

}  // namespace lagrel

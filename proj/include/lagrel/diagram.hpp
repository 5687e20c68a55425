#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "lagrel/lagrangian.hpp"

namespace lagrel {

enum class NodeKind { ZSpider, XSpider, Fourier, FourierInv, Squeeze, Vacuum };
enum class Calculus { GSA, GAA, GGA, GQGA };
enum class Backend { Exact, Float };

std::string_view kind_name(NodeKind kind);
NodeKind parse_kind(std::string_view text);
std::string_view calculus_name(Calculus c);
Calculus parse_calculus(std::string_view text);
Backend parse_backend(std::string_view text);

// ZSpider is the grey spider and XSpider the white spider. Fourier and Squeeze nodes
// read port 0 as their input leg and port 1 as their output leg; Vacuum has port 0 only.
struct Node {
    std::string id;
    NodeKind kind = NodeKind::ZSpider;
    Q a;
    Q b;
    Q param;

    bool is_spider() const { return kind == NodeKind::ZSpider || kind == NodeKind::XSpider; }
    friend bool operator==(const Node&, const Node&) = default;
};

struct Endpoint {
    enum class Type { Port, Input, Output };
    Type type = Type::Port;
    std::size_t index = 0;  // node index or boundary position
    std::size_t port = 0;

    static Endpoint at(std::size_t node, std::size_t port) { return {Type::Port, node, port}; }
    static Endpoint input(std::size_t k) { return {Type::Input, k, 0}; }
    static Endpoint output(std::size_t k) { return {Type::Output, k, 0}; }
    friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

struct Edge {
    Endpoint a;
    Endpoint b;
    friend bool operator==(const Edge&, const Edge&) = default;
};

// Undirected open graph over the generators with ordered boundary inputs and outputs.
class Diagram {
public:
    Diagram() = default;
    Diagram(std::size_t inputs, std::size_t outputs);

    static Diagram wires(std::size_t n);

    std::size_t in() const { return inputs_.size(); }
    std::size_t out() const { return outputs_.size(); }
    const std::vector<Node>& nodes() const { return nodes_; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<std::string>& input_names() const { return inputs_; }
    const std::vector<std::string>& output_names() const { return outputs_; }

    std::size_t add_node(NodeKind kind, const Q& a = Q(0), const Q& b = Q(0), const Q& param = Q(0));
    std::size_t add_node(Node node);
    std::size_t grey(const Q& a = Q(0), const Q& b = Q(0)) { return add_node(NodeKind::ZSpider, a, b); }
    std::size_t white(const Q& a = Q(0), const Q& b = Q(0)) { return add_node(NodeKind::XSpider, a, b); }
    std::size_t squeeze(const Q& c) { return add_node(NodeKind::Squeeze, Q(0), Q(0), c); }

    // Next unused port of a spider node.
    Endpoint leg(std::size_t node);
    void connect(const Endpoint& a, const Endpoint& b);
    // Joins two spider nodes through a fresh leg on each.
    void link(std::size_t u, std::size_t v);
    // Joins spider u to the input port of a two-port node and its output port to spider v.
    void through(std::size_t u, std::size_t box, std::size_t v);

    // Number of ports in use on a node.
    std::size_t degree(std::size_t node) const;

    // Structural checks; throws IllFormedDiagram.
    void validate() const;
    // Generator restrictions of a calculus; throws IllFormedDiagram.
    void check_calculus(Calculus c) const;

    // Sequential composition: this, then next.
    Diagram compose(const Diagram& next) const;
    Diagram tensor(const Diagram& other) const;
    // Relational converse; spider phases and Fourier boxes are adjusted for the z-negating cup.
    // Throws NotInFragment on vacuum nodes.
    Diagram converse() const;
    // Reads the first k outputs as inputs (inverse of bending inputs to outputs).
    Diagram unbend(std::size_t k) const;

    std::string to_json() const;
    static Diagram from_json(std::string_view text);

    friend bool operator==(const Diagram&, const Diagram&) = default;

private:
    std::vector<Node> nodes_;
    std::vector<Edge> edges_;
    std::vector<std::string> inputs_;
    std::vector<std::string> outputs_;
    std::vector<std::size_t> next_port_;
};

// Interpretation into affine Lagrangian relations, contracting edges in the given order
// (default: file order). Throws IllFormedDiagram and BackendMismatch.
LagrangianRelation interpret(const Diagram& d, Calculus calculus, Backend backend = Backend::Exact);
LagrangianRelation interpret_in_order(const Diagram& d, Calculus calculus, const std::vector<std::size_t>& edge_order);
// Interpretation of a GAA diagram as an affine relation on the position coordinates.
Relation interpret_affine(const Diagram& d);

// Name of a single generator node with the given number of legs, port-major.
LagrangianRelation generator_name(const Node& node, std::size_t legs);

}  // namespace lagrel

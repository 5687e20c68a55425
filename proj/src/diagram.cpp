#include "lagrel/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "json.hpp"

namespace lagrel {

namespace {

using json = nlohmann::json;

constexpr NodeKind kAllKinds[] = {NodeKind::ZSpider, NodeKind::XSpider, NodeKind::Fourier,
                                  NodeKind::FourierInv, NodeKind::Squeeze, NodeKind::Vacuum};

std::string boundary_name(bool input, std::size_t k) { return (input ? "in" : "out") + std::to_string(k); }

std::vector<std::string> boundary_names(bool input, std::size_t n) {
    std::vector<std::string> v;
    for (std::size_t k = 0; k < n; ++k) v.push_back(boundary_name(input, k));
    return v;
}

bool two_port(NodeKind k) { return k == NodeKind::Fourier || k == NodeKind::FourierInv || k == NodeKind::Squeeze; }

// Ordering key for endpoints, used to walk through boundary junctions.
using Key = std::tuple<int, std::size_t, std::size_t>;
Key key_of(const Endpoint& e) { return {static_cast<int>(e.type), e.index, e.port}; }

}  // namespace

std::string_view kind_name(NodeKind kind) {
    switch (kind) {
        case NodeKind::ZSpider: return "ZSpider";
        case NodeKind::XSpider: return "XSpider";
        case NodeKind::Fourier: return "Fourier";
        case NodeKind::FourierInv: return "FourierInv";
        case NodeKind::Squeeze: return "Squeeze";
        case NodeKind::Vacuum: return "Vacuum";
    }
    return "?";
}

NodeKind parse_kind(std::string_view text) {
    for (NodeKind k : kAllKinds)
        if (kind_name(k) == text) return k;
    fail(ErrorKind::UnknownKind, "unknown node kind '" + std::string(text) + "'");
}

std::string_view calculus_name(Calculus c) {
    switch (c) {
        case Calculus::GSA: return "gsa";
        case Calculus::GAA: return "gaa";
        case Calculus::GGA: return "gga";
        case Calculus::GQGA: return "gqga";
    }
    return "?";
}

Calculus parse_calculus(std::string_view text) {
    for (Calculus c : {Calculus::GSA, Calculus::GAA, Calculus::GGA, Calculus::GQGA})
        if (calculus_name(c) == text) return c;
    fail(ErrorKind::UnknownKind, "unknown calculus '" + std::string(text) + "'");
}

Backend parse_backend(std::string_view text) {
    if (text == "exact") return Backend::Exact;
    if (text == "float") return Backend::Float;
    fail(ErrorKind::UnknownKind, "unknown backend '" + std::string(text) + "'");
}

Diagram::Diagram(std::size_t inputs, std::size_t outputs)
    : inputs_(boundary_names(true, inputs)), outputs_(boundary_names(false, outputs)) {}

Diagram Diagram::wires(std::size_t n) {
    Diagram d(n, n);
    for (std::size_t k = 0; k < n; ++k) d.connect(Endpoint::input(k), Endpoint::output(k));
    return d;
}

std::size_t Diagram::add_node(NodeKind kind, const Q& a, const Q& b, const Q& param) {
    Node n;
    n.kind = kind;
    if (kind == NodeKind::ZSpider || kind == NodeKind::XSpider) {
        n.a = a;
        n.b = b;
    }
    if (kind == NodeKind::Squeeze) n.param = param;
    return add_node(std::move(n));
}

std::size_t Diagram::add_node(Node node) {
    if (node.id.empty()) node.id = "n" + std::to_string(nodes_.size());
    nodes_.push_back(std::move(node));
    next_port_.push_back(0);
    return nodes_.size() - 1;
}

Endpoint Diagram::leg(std::size_t node) {
    require(node < nodes_.size(), ErrorKind::IllFormedDiagram, "node index out of range");
    require(nodes_[node].is_spider(), ErrorKind::IllFormedDiagram, "only spiders have free legs");
    return Endpoint::at(node, next_port_[node]++);
}

void Diagram::connect(const Endpoint& a, const Endpoint& b) {
    for (const Endpoint& e : {a, b})
        if (e.type == Endpoint::Type::Port) {
            require(e.index < nodes_.size(), ErrorKind::IllFormedDiagram, "node index out of range");
            next_port_[e.index] = std::max(next_port_[e.index], e.port + 1);
        }
    edges_.push_back({a, b});
}

void Diagram::link(std::size_t u, std::size_t v) { connect(leg(u), leg(v)); }

void Diagram::through(std::size_t u, std::size_t box, std::size_t v) {
    connect(leg(u), Endpoint::at(box, 0));
    connect(Endpoint::at(box, 1), leg(v));
}

std::size_t Diagram::degree(std::size_t node) const {
    std::size_t d = 0;
    for (const Edge& e : edges_)
        for (const Endpoint& p : {e.a, e.b})
            if (p.type == Endpoint::Type::Port && p.index == node) d = std::max(d, p.port + 1);
    return d;
}

void Diagram::validate() const {
    std::set<std::string> ids;
    for (const Node& n : nodes_) {
        require(!n.id.empty() && n.id.find(':') == std::string::npos, ErrorKind::IllFormedDiagram,
                "node ids must be nonempty and free of ':'");
        require(ids.insert(n.id).second, ErrorKind::IllFormedDiagram, "duplicate node id '" + n.id + "'");
    }
    std::vector<std::set<std::size_t>> used(nodes_.size());
    std::vector<int> in_uses(inputs_.size(), 0), out_uses(outputs_.size(), 0);
    for (const Edge& e : edges_) {
        for (const Endpoint& p : {e.a, e.b}) {
            switch (p.type) {
                case Endpoint::Type::Port:
                    require(p.index < nodes_.size(), ErrorKind::IllFormedDiagram, "edge refers to a missing node");
                    require(used[p.index].insert(p.port).second, ErrorKind::IllFormedDiagram,
                            "port " + std::to_string(p.port) + " of node '" + nodes_[p.index].id + "' is used twice");
                    break;
                case Endpoint::Type::Input:
                    require(p.index < inputs_.size(), ErrorKind::IllFormedDiagram, "edge refers to a missing input");
                    ++in_uses[p.index];
                    break;
                case Endpoint::Type::Output:
                    require(p.index < outputs_.size(), ErrorKind::IllFormedDiagram, "edge refers to a missing output");
                    ++out_uses[p.index];
                    break;
            }
        }
    }
    for (std::size_t k = 0; k < inputs_.size(); ++k)
        require(in_uses[k] == 1, ErrorKind::IllFormedDiagram, "input '" + inputs_[k] + "' must be used exactly once");
    for (std::size_t k = 0; k < outputs_.size(); ++k)
        require(out_uses[k] == 1, ErrorKind::IllFormedDiagram,
                "output '" + outputs_[k] + "' must be used exactly once");
    for (std::size_t v = 0; v < nodes_.size(); ++v) {
        const Node& n = nodes_[v];
        const std::size_t d = used[v].size();
        require(used[v].empty() || *used[v].rbegin() + 1 == d, ErrorKind::IllFormedDiagram,
                "ports of node '" + n.id + "' are not numbered contiguously");
        if (two_port(n.kind))
            require(d == 2, ErrorKind::IllFormedDiagram, "node '" + n.id + "' must have degree 2");
        if (n.kind == NodeKind::Vacuum)
            require(d == 1, ErrorKind::IllFormedDiagram, "vacuum '" + n.id + "' must have degree 1");
    }
}

void Diagram::check_calculus(Calculus c) const {
    validate();
    for (const Node& n : nodes_) {
        auto reject = [&](const std::string& why) {
            fail(ErrorKind::IllFormedDiagram,
                 "node '" + n.id + "' (" + std::string(kind_name(n.kind)) + ") is not in " +
                     std::string(calculus_name(c)) + ": " + why);
        };
        const bool real = n.a.is_real() && n.b.is_real() && n.param.is_real();
        switch (c) {
            case Calculus::GSA:
                if (n.kind == NodeKind::Vacuum) reject("vacuum is not a generator");
                break;
            case Calculus::GAA:
                if (!real) reject("parameters must be real");
                if (n.kind == NodeKind::Fourier || n.kind == NodeKind::FourierInv || n.kind == NodeKind::Vacuum)
                    reject("generator not available");
                if (n.kind == NodeKind::ZSpider && !(n.a.is_zero() && n.b.is_zero())) reject("grey spiders are phase-free");
                if (n.kind == NodeKind::XSpider && !n.b.is_zero()) reject("symplectic phases are not available");
                break;
            case Calculus::GGA:
                if (!real) reject("parameters must be real");
                if (n.kind == NodeKind::Fourier || n.kind == NodeKind::FourierInv) reject("generator not available");
                if (n.is_spider() && !n.b.is_zero()) reject("symplectic phases are not available");
                break;
            case Calculus::GQGA:
                if (!real) reject("parameters must be real");
                break;
        }
    }
}

Diagram Diagram::tensor(const Diagram& other) const {
    Diagram d(in() + other.in(), out() + other.out());
    for (const Node& n : nodes_) d.add_node(Node{"", n.kind, n.a, n.b, n.param});
    for (const Node& n : other.nodes_) d.add_node(Node{"", n.kind, n.a, n.b, n.param});
    auto shift = [&](Endpoint e, std::size_t nodes, std::size_t ins, std::size_t outs) {
        switch (e.type) {
            case Endpoint::Type::Port: e.index += nodes; break;
            case Endpoint::Type::Input: e.index += ins; break;
            case Endpoint::Type::Output: e.index += outs; break;
        }
        return e;
    };
    for (const Edge& e : edges_) d.connect(e.a, e.b);
    for (const Edge& e : other.edges_)
        d.connect(shift(e.a, nodes_.size(), in(), out()), shift(e.b, nodes_.size(), in(), out()));
    return d;
}

Diagram Diagram::compose(const Diagram& next) const {
    require(out() == next.in(), ErrorKind::DimensionMismatch, "diagram boundaries do not match");
    const std::size_t offset = nodes_.size();
    Diagram d(in(), next.out());
    for (const Node& n : nodes_) d.add_node(Node{"", n.kind, n.a, n.b, n.param});
    for (const Node& n : next.nodes_) d.add_node(Node{"", n.kind, n.a, n.b, n.param});

    // Endpoints in a common space: outputs of this and inputs of next are junctions,
    // tagged as Output endpoints of this and Input endpoints of next respectively.
    enum Side { First, Second };
    struct Tagged {
        Side side;
        Endpoint e;
    };
    auto is_junction = [](const Tagged& t) {
        return (t.side == First && t.e.type == Endpoint::Type::Output) ||
               (t.side == Second && t.e.type == Endpoint::Type::Input);
    };
    auto tkey = [](const Tagged& t) { return std::tuple_cat(std::make_tuple(static_cast<int>(t.side)), key_of(t.e)); };
    std::map<decltype(tkey(Tagged{})), Tagged> partner;
    std::vector<std::pair<Tagged, Tagged>> all;
    for (const Edge& e : edges_) all.push_back({{First, e.a}, {First, e.b}});
    for (const Edge& e : next.edges_) all.push_back({{Second, e.a}, {Second, e.b}});
    for (const auto& [a, b] : all) {
        partner[tkey(a)] = b;
        partner[tkey(b)] = a;
    }
    auto twin = [](const Tagged& t) {
        return t.side == First ? Tagged{Second, Endpoint::input(t.e.index)} : Tagged{First, Endpoint::output(t.e.index)};
    };
    auto outer = [&](const Tagged& t) {
        Endpoint e = t.e;
        if (e.type == Endpoint::Type::Port && t.side == Second) e.index += offset;
        return e;
    };
    std::set<decltype(tkey(Tagged{}))> done;
    for (const auto& [start, first_step] : all) {
        for (const Tagged& s : {start, first_step}) {
            if (is_junction(s) || done.count(tkey(s))) continue;
            Tagged cur = partner.at(tkey(s));
            while (is_junction(cur)) cur = partner.at(tkey(twin(cur)));
            done.insert(tkey(s));
            done.insert(tkey(cur));
            d.connect(outer(s), outer(cur));
        }
    }
    return d;
}

Diagram Diagram::converse() const {
    Diagram d(out(), in());
    for (const Node& n : nodes_) {
        Node m = n;
        switch (n.kind) {
            case NodeKind::ZSpider:
                m.a = -n.a;
                m.b = -n.b;
                break;
            case NodeKind::XSpider: m.b = -n.b; break;
            case NodeKind::Fourier: m.kind = NodeKind::FourierInv; break;
            case NodeKind::FourierInv: m.kind = NodeKind::Fourier; break;
            case NodeKind::Squeeze: break;
            case NodeKind::Vacuum:
                fail(ErrorKind::NotInFragment, "the converse of the vacuum is not a generator");
        }
        d.add_node(std::move(m));
    }
    auto flip = [&](Endpoint e) {
        switch (e.type) {
            case Endpoint::Type::Input: e.type = Endpoint::Type::Output; break;
            case Endpoint::Type::Output: e.type = Endpoint::Type::Input; break;
            case Endpoint::Type::Port: break;
        }
        return e;
    };
    for (const Edge& e : edges_) d.connect(flip(e.a), flip(e.b));
    return d;
}

Diagram Diagram::unbend(std::size_t k) const {
    require(in() == 0 && k <= out(), ErrorKind::DimensionMismatch, "only states can be unbent");
    Diagram d(k, out() - k);
    for (const Node& n : nodes_) d.add_node(Node{n.id, n.kind, n.a, n.b, n.param});
    auto move = [&](Endpoint e) {
        if (e.type == Endpoint::Type::Output) {
            if (e.index < k) {
                e.type = Endpoint::Type::Input;
            } else {
                e.index -= k;
            }
        }
        return e;
    };
    for (const Edge& e : edges_) d.connect(move(e.a), move(e.b));
    return d;
}

std::string Diagram::to_json() const {
    json j;
    j["wires"] = std::to_string(in()) + "/" + std::to_string(out());
    j["inputs"] = inputs_;
    j["outputs"] = outputs_;
    json nodes = json::array();
    for (const Node& n : nodes_) {
        json o;
        o["id"] = n.id;
        o["kind"] = std::string(kind_name(n.kind));
        if (n.is_spider()) o["phase"] = {n.a.str(), n.b.str()};
        if (n.kind == NodeKind::Squeeze) o["param"] = n.param.str();
        nodes.push_back(o);
    }
    j["nodes"] = nodes;
    auto name = [&](const Endpoint& e) -> std::string {
        switch (e.type) {
            case Endpoint::Type::Port: return nodes_[e.index].id + ":" + std::to_string(e.port);
            case Endpoint::Type::Input: return inputs_[e.index];
            case Endpoint::Type::Output: return outputs_[e.index];
        }
        return "";
    };
    json edges = json::array();
    for (const Edge& e : edges_) edges.push_back({name(e.a), name(e.b)});
    j["edges"] = edges;
    return j.dump(2) + "\n";
}

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorKind::ParseError, what); }

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

const json& field(const json& o, const char* name, const std::string& where) {
    if (!o.is_object() || !o.contains(name)) parse_fail(where + ": missing field '" + name + "'");
    return o.at(name);
}

std::string text_of(const json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    parse_fail(where + ": expected a scalar string");
}

Q scalar_of(const json& v, const std::string& where) {
    try {
        return Q::parse(text_of(v, where));
    } catch (const Error& e) {
        parse_fail(where + ": " + e.what());
    }
}

std::vector<std::string> names_of(const json& v, const std::string& where) {
    if (!v.is_array()) parse_fail(where + ": expected an array of names");
    std::vector<std::string> out;
    for (const auto& x : v) {
        if (!x.is_string()) parse_fail(where + ": expected a string");
        out.push_back(x.get<std::string>());
    }
    return out;
}

}  // namespace

Diagram Diagram::from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
        parse_fail("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
    }
    if (!j.is_object()) parse_fail("diagram must be a JSON object");
    Diagram d;
    d.inputs_ = names_of(field(j, "inputs", "diagram"), "inputs");
    d.outputs_ = names_of(field(j, "outputs", "diagram"), "outputs");
    if (j.contains("wires")) {
        std::string w = text_of(j.at("wires"), "wires");
        if (w != std::to_string(d.in()) + "/" + std::to_string(d.out()))
            parse_fail("wires '" + w + "' disagrees with the boundary lists");
    }
    std::map<std::string, Endpoint> boundary;
    for (std::size_t k = 0; k < d.in(); ++k)
        if (!boundary.emplace(d.inputs_[k], Endpoint::input(k)).second) parse_fail("duplicate boundary name");
    for (std::size_t k = 0; k < d.out(); ++k)
        if (!boundary.emplace(d.outputs_[k], Endpoint::output(k)).second) parse_fail("duplicate boundary name");
    std::map<std::string, std::size_t> ids;
    const json& nodes = field(j, "nodes", "diagram");
    if (!nodes.is_array()) parse_fail("nodes must be an array");
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        const json& o = nodes[k];
        std::string where = "node " + std::to_string(k);
        Node n;
        n.id = text_of(field(o, "id", where), where + ".id");
        try {
            n.kind = parse_kind(text_of(field(o, "kind", where), where + ".kind"));
        } catch (const Error& e) {
            parse_fail(where + ": " + e.what());
        }
        if (n.is_spider()) {
            const json& ph = field(o, "phase", where);
            if (!ph.is_array() || ph.size() != 2) parse_fail(where + ": phase must be a pair");
            n.a = scalar_of(ph[0], where + ".phase");
            n.b = scalar_of(ph[1], where + ".phase");
        }
        if (n.kind == NodeKind::Squeeze) n.param = scalar_of(field(o, "param", where), where + ".param");
        if (!ids.emplace(n.id, k).second) parse_fail(where + ": duplicate id '" + n.id + "'");
        d.add_node(std::move(n));
    }
    auto resolve = [&](const std::string& s) {
        auto b = boundary.find(s);
        if (b != boundary.end()) return b->second;
        auto colon = s.rfind(':');
        if (colon == std::string::npos) parse_fail("unknown endpoint '" + s + "'");
        auto node = ids.find(s.substr(0, colon));
        if (node == ids.end()) parse_fail("endpoint '" + s + "' names an unknown node");
        std::string port = s.substr(colon + 1);
        if (port.empty() || port.find_first_not_of("0123456789") != std::string::npos)
            parse_fail("endpoint '" + s + "' has a malformed port");
        return Endpoint::at(node->second, std::stoul(port));
    };
    const json& edges = field(j, "edges", "diagram");
    if (!edges.is_array()) parse_fail("edges must be an array");
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            parse_fail("each edge must be a pair of endpoint strings");
        d.connect(resolve(e[0].get<std::string>()), resolve(e[1].get<std::string>()));
    }
    d.validate();
    return d;
}

}  // namespace lagrel

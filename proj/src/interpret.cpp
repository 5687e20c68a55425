#include <map>
#include <numeric>
#include <optional>

#include "lagrel/diagram.hpp"

namespace lagrel {

namespace {

// Affine name of a GAA node on the position coordinates of its legs.
Relation affine_name(const Node& node, std::size_t legs) {
    switch (node.kind) {
        case NodeKind::ZSpider: {
            Matrix<Q> c(legs == 0 ? 0 : legs - 1, legs);
            for (std::size_t k = 1; k < legs; ++k) {
                c(k - 1, 0) = Q(1);
                c(k - 1, k) = Q(-1);
            }
            return Relation::from_constraints(0, legs, c, Vector<Q>(c.rows(), Q(0)));
        }
        case NodeKind::XSpider: {
            if (legs == 0) return node.a.is_zero() ? Relation::total(0, 0) : Relation::empty(0, 0);
            Matrix<Q> c(1, legs);
            for (std::size_t k = 0; k < legs; ++k) c(0, k) = Q(1);
            return Relation::from_constraints(0, legs, c, {node.a});
        }
        case NodeKind::Squeeze: {
            Matrix<Q> c(1, 2);
            c(0, 0) = -node.param;
            c(0, 1) = Q(1);
            return Relation::from_constraints(0, 2, c, {Q(0)});
        }
        default:
            fail(ErrorKind::IllFormedDiagram, "generator has no affine interpretation");
    }
}

// Incremental contraction of a diagram. The running state lives on the open ports,
// each contributing `width` coordinates stored mode by mode.
class Contraction {
public:
    Contraction(const Diagram& d, bool symplectic) : d_(d), width_(symplectic ? 2 : 1) {
        state_ = Relation::total(0, 0);
        added_.assign(d.nodes().size(), false);
    }

    void run(const std::vector<std::size_t>& order) {
        const auto& edges = d_.edges();
        for (std::size_t e : order) {
            require(e < edges.size(), ErrorKind::DimensionMismatch, "edge order refers to a missing edge");
            process(edges[e]);
        }
        for (std::size_t v = 0; v < d_.nodes().size(); ++v) ensure(v);
    }

    // Relation with the input modes first, in the interleaved per-mode layout.
    Relation boundary_state() const {
        const std::size_t n = d_.in(), m = d_.out();
        std::vector<std::size_t> order;
        for (std::size_t k = 0; k < n; ++k) order.push_back(position(Slot{Endpoint::input(k)}));
        for (std::size_t k = 0; k < m; ++k) order.push_back(position(Slot{Endpoint::output(k)}));
        require(order.size() == slots_.size(), ErrorKind::IllFormedDiagram, "dangling node ports remain open");
        std::vector<std::size_t> perm;
        if (width_ == 2) {
            for (auto p : order) perm.push_back(2 * p);
            for (auto p : order) perm.push_back(2 * p + 1);
        } else {
            perm = order;
        }
        return state_.permute_coordinates(perm, 0);
    }

private:
    struct Slot {
        Endpoint e;
        friend bool operator==(const Slot& a, const Slot& b) { return a.e == b.e; }
    };

    std::size_t position(const Slot& s) const {
        for (std::size_t k = 0; k < slots_.size(); ++k)
            if (slots_[k] == s) return k;
        fail(ErrorKind::IllFormedDiagram, "endpoint is not open");
    }

    void append(const Relation& name, const std::vector<Slot>& slots) {
        const std::size_t k0 = slots_.size(), k1 = slots.size(), w = width_;
        const Matrix<Q>& a = state_.constraints();
        const Matrix<Q>& b = name.constraints();
        if (state_.is_empty() || name.is_empty()) {
            state_ = Relation::empty(0, w * (k0 + k1));
        } else {
            Matrix<Q> c(a.rows() + b.rows(), w * (k0 + k1));
            c.set_block(0, 0, a);
            c.set_block(a.rows(), w * k0, b);
            state_ = Relation::from_constraints(0, w * (k0 + k1), c, concat(state_.rhs(), name.rhs()));
        }
        slots_.insert(slots_.end(), slots.begin(), slots.end());
    }

    // Adds the name of a node with its legs as open slots.
    void ensure(std::size_t v) {
        if (added_[v]) return;
        added_[v] = true;
        const Node& node = d_.nodes()[v];
        const std::size_t legs = d_.degree(v);
        std::vector<Slot> slots;
        for (std::size_t p = 0; p < legs; ++p) slots.push_back(Slot{Endpoint::at(v, p)});
        if (width_ == 1) {
            append(affine_name(node, legs), slots);
            return;
        }
        Relation named = generator_name(node, legs).affine();
        std::vector<std::size_t> perm;
        for (std::size_t k = 0; k < legs; ++k) {
            perm.push_back(k);
            perm.push_back(legs + k);
        }
        append(named.permute_coordinates(perm, 0), slots);
    }

    void cup(const Endpoint& a, const Endpoint& b) {
        Relation c = width_ == 2 ? LagrangianRelation::cup(1).affine() : Relation::cup(1);
        if (width_ == 2) c = c.permute_coordinates({0, 2, 1, 3}, 0);
        append(c, {Slot{a}, Slot{b}});
    }

    void process(const Edge& e) {
        const bool pa = e.a.type == Endpoint::Type::Port, pb = e.b.type == Endpoint::Type::Port;
        if (!pa && !pb) {
            cup(e.a, e.b);
            return;
        }
        if (pa) ensure(e.a.index);
        if (pb) ensure(e.b.index);
        if (pa && pb) {
            contract(position(Slot{e.a}), position(Slot{e.b}));
            return;
        }
        const Endpoint& port = pa ? e.a : e.b;
        const Endpoint& boundary = pa ? e.b : e.a;
        slots_[position(Slot{port})] = Slot{boundary};
    }

    void contract(std::size_t p, std::size_t q) {
        const std::size_t w = width_, total = w * slots_.size();
        Matrix<Q> extra(w, total);
        if (w == 2) {
            extra(0, 2 * p) = Q(1);
            extra(0, 2 * q) += Q(1);
            extra(1, 2 * p + 1) = Q(1);
            extra(1, 2 * q + 1) -= Q(1);
        } else {
            extra(0, p) = Q(1);
            extra(0, q) -= Q(1);
        }
        Relation joined = state_.with_constraints(extra, Vector<Q>(w, Q(0)));
        std::vector<std::size_t> gone;
        for (std::size_t j = 0; j < w; ++j) {
            gone.push_back(w * p + j);
            if (q != p) gone.push_back(w * q + j);
        }
        state_ = joined.eliminate(gone, 0);
        std::vector<Slot> kept;
        for (std::size_t k = 0; k < slots_.size(); ++k)
            if (k != p && k != q) kept.push_back(slots_[k]);
        slots_ = std::move(kept);
    }

    const Diagram& d_;
    std::size_t width_;
    Relation state_;
    std::vector<Slot> slots_;
    std::vector<bool> added_;
};

std::vector<std::size_t> file_order(const Diagram& d) {
    std::vector<std::size_t> order(d.edges().size());
    std::iota(order.begin(), order.end(), 0);
    return order;
}

}  // namespace

LagrangianRelation generator_name(const Node& node, std::size_t legs) {
    switch (node.kind) {
        case NodeKind::ZSpider: return grey_spider(0, legs, node.a, node.b);
        case NodeKind::XSpider: return white_spider(0, legs, node.a, node.b);
        case NodeKind::Fourier: return name(fourier());
        case NodeKind::FourierInv: return name(fourier_inverse());
        case NodeKind::Squeeze: return name(squeeze(node.param));
        case NodeKind::Vacuum: return vacuum();
    }
    fail(ErrorKind::UnknownKind, "unknown node kind");
}

LagrangianRelation interpret_in_order(const Diagram& d, Calculus calculus, const std::vector<std::size_t>& edge_order) {
    require(calculus != Calculus::GAA, ErrorKind::IllFormedDiagram,
            "GAA diagrams are interpreted as affine relations; use interpret_affine");
    d.check_calculus(calculus);
    Contraction c(d, true);
    c.run(edge_order);
    LagrangianRelation state = LagrangianRelation::trusted(0, d.in() + d.out(), c.boundary_state());
    return unname(state, d.in());
}

LagrangianRelation interpret(const Diagram& d, Calculus calculus, Backend backend) {
    require(backend == Backend::Exact, ErrorKind::BackendMismatch,
            "relational interpretation needs the exact backend");
    if (calculus == Calculus::GAA) {
        d.check_calculus(Calculus::GAA);
        return interpret_in_order(d, Calculus::GSA, file_order(d));
    }
    return interpret_in_order(d, calculus, file_order(d));
}

Relation interpret_affine(const Diagram& d) {
    d.check_calculus(Calculus::GAA);
    Contraction c(d, false);
    c.run(file_order(d));
    return c.boundary_state().reshape(d.in());
}

}  // namespace lagrel

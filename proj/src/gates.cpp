#include "lagrel/gates.hpp"

#include "lagrel/synthesis.hpp"

namespace lagrel {

Diagram spider_diagram(NodeKind kind, std::size_t in, std::size_t out, const Q& a, const Q& b) {
    require(kind == NodeKind::ZSpider || kind == NodeKind::XSpider, ErrorKind::UnknownKind, "expected a spider kind");
    Diagram d(in, out);
    std::size_t v = d.add_node(kind, a, b);
    for (std::size_t k = 0; k < in; ++k) d.connect(Endpoint::input(k), d.leg(v));
    for (std::size_t k = 0; k < out; ++k) d.connect(d.leg(v), Endpoint::output(k));
    return d;
}

Diagram box_diagram(NodeKind kind, const Q& param) {
    require(kind == NodeKind::Fourier || kind == NodeKind::FourierInv || kind == NodeKind::Squeeze,
            ErrorKind::UnknownKind, "expected a two-port box kind");
    Diagram d(1, 1);
    std::size_t v = d.add_node(kind, Q(0), Q(0), param);
    d.connect(Endpoint::input(0), Endpoint::at(v, 0));
    d.connect(Endpoint::at(v, 1), Endpoint::output(0));
    return d;
}

Diagram vacuum_diagram() {
    Diagram d(0, 1);
    d.connect(Endpoint::at(d.add_node(NodeKind::Vacuum), 0), Endpoint::output(0));
    return d;
}

Diagram swap_diagram() {
    Diagram d(2, 2);
    d.connect(Endpoint::input(0), Endpoint::output(1));
    d.connect(Endpoint::input(1), Endpoint::output(0));
    return d;
}

Diagram antipode_diagram() { return spider_diagram(NodeKind::XSpider, 1, 1); }

Diagram empty_scalar_diagram() { return spider_diagram(NodeKind::XSpider, 0, 0, Q(1)); }

Diagram tensor_power(const Diagram& d, std::size_t n) {
    Diagram out(0, 0);
    for (std::size_t k = 0; k < n; ++k) out = out.tensor(d);
    return out;
}

Diagram shear_z(const Q& b) { return spider_diagram(NodeKind::ZSpider, 1, 1, Q(0), b); }

Diagram shear_x(const Q& b) { return spider_diagram(NodeKind::XSpider, 1, 1, Q(0), -b).compose(antipode_diagram()); }

Diagram phase_rotation(const CirclePoint& p) {
    if (p.c() == Rational(-1)) return box_diagram(NodeKind::Fourier).compose(box_diagram(NodeKind::Fourier));
    Q t(p.s() / (Rational(1) + p.c()));
    return shear_z(-t).compose(shear_x(Q(p.s()))).compose(shear_z(-t));
}

Diagram passive_rotation(const CirclePoint& p) {
    return matrix_diagram(Matrix<Q>::from_rows({{Q(p.c()), Q(-p.s())}, {Q(p.s()), Q(p.c())}}));
}

Diagram controlled_z(const Q& w) {
    Diagram d(2, 2);
    std::size_t u = d.grey(), v = d.grey();
    d.connect(Endpoint::input(0), d.leg(u));
    d.connect(Endpoint::input(1), d.leg(v));
    d.connect(d.leg(u), Endpoint::output(0));
    d.connect(d.leg(v), Endpoint::output(1));
    if (!w.is_zero()) add_edge_gadget(d, u, v, w);
    return d;
}

}  // namespace lagrel

#include "lagrel/io.hpp"

#include <json.hpp>

namespace lagrel {

using json = nlohmann::json;

namespace {

[[noreturn]] void parse_fail(const std::string& what) { fail(ErrorKind::ParseError, what); }

json parse_object(std::string_view text, const char* what) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        const std::size_t end = e.byte == 0 ? 0 : e.byte - 1;
        for (std::size_t i = 0; i < end && i < text.size(); ++i) {
            if (text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        parse_fail("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed JSON");
    }
    if (!j.is_object()) parse_fail(std::string(what) + " must be a JSON object");
    return j;
}

const json& field(const json& o, const char* name) {
    if (!o.contains(name)) parse_fail(std::string("missing field '") + name + "'");
    return o.at(name);
}

std::size_t size_of(const json& o, const char* name) {
    const json& v = field(o, name);
    if (!v.is_number_unsigned()) parse_fail(std::string("field '") + name + "' must be a non-negative integer");
    return v.get<std::size_t>();
}

Q scalar_of(const json& v) {
    if (v.is_number_integer()) return Q(Rational(v.get<long long>()));
    if (!v.is_string()) parse_fail("expected a scalar string");
    try {
        return Q::parse(v.get<std::string>());
    } catch (const Error& e) {
        parse_fail(e.what());
    }
}

json vector_json(const Vector<Q>& v) {
    json a = json::array();
    for (const Q& x : v) a.push_back(x.str());
    return a;
}

json matrix_json(const Matrix<Q>& m) {
    json a = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).str());
        a.push_back(row);
    }
    return a;
}

Vector<Q> vector_of(const json& o, const char* name, std::size_t n) {
    const json& v = field(o, name);
    if (!v.is_array() || v.size() != n)
        parse_fail(std::string("field '") + name + "' must be an array of length " + std::to_string(n));
    Vector<Q> out;
    for (const json& x : v) out.push_back(scalar_of(x));
    return out;
}

Matrix<Q> matrix_of(const json& o, const char* name, std::size_t rows, std::size_t cols) {
    const json& v = field(o, name);
    if (!v.is_array() || v.size() != rows)
        parse_fail(std::string("field '") + name + "' must have " + std::to_string(rows) + " rows");
    Matrix<Q> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!v[i].is_array() || v[i].size() != cols)
            parse_fail(std::string("field '") + name + "' must have " + std::to_string(cols) + " columns");
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = scalar_of(v[i][j]);
    }
    return m;
}

std::vector<std::size_t> indices_of(const json& o, const char* name) {
    const json& v = field(o, name);
    if (!v.is_array()) parse_fail(std::string("field '") + name + "' must be an array");
    std::vector<std::size_t> out;
    for (const json& x : v) {
        if (!x.is_number_unsigned()) parse_fail(std::string("field '") + name + "' must hold indices");
        out.push_back(x.get<std::size_t>());
    }
    return out;
}

template <class F>
auto rethrow_as_parse(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const Error& e) {
        if (e.kind() == ErrorKind::ParseError) throw;
        parse_fail(e.what());
    }
}

}  // namespace

std::string relation_to_json(const LagrangianRelation& r) {
    json j;
    j["in"] = r.in();
    j["out"] = r.out();
    j["empty"] = r.is_empty();
    j["constraints"] = matrix_json(r.affine().constraints());
    j["rhs"] = vector_json(r.affine().rhs());
    return j.dump(2) + "\n";
}

LagrangianRelation relation_from_json(std::string_view text) {
    json j = parse_object(text, "relation");
    const std::size_t in = size_of(j, "in"), out = size_of(j, "out");
    if (j.contains("empty") && j.at("empty").is_boolean() && j.at("empty").get<bool>())
        return LagrangianRelation::empty(in, out);
    const json& rows = field(j, "constraints");
    if (!rows.is_array()) parse_fail("field 'constraints' must be an array");
    Matrix<Q> c = matrix_of(j, "constraints", rows.size(), 2 * (in + out));
    Vector<Q> rhs = vector_of(j, "rhs", rows.size());
    return rethrow_as_parse([&] { return LagrangianRelation::from_constraints(in, out, c, rhs); });
}

std::string gauss_map_to_json(const GaussMap& g) {
    json j;
    j["in"] = g.in();
    j["out"] = g.out();
    j["A"] = matrix_json(g.A);
    j["sigma"] = matrix_json(g.sigma);
    j["mu"] = vector_json(g.mu);
    return j.dump(2) + "\n";
}

GaussMap gauss_map_from_json(std::string_view text) {
    json j = parse_object(text, "Gauss map");
    const std::size_t in = size_of(j, "in"), out = size_of(j, "out");
    Matrix<Q> a = matrix_of(j, "A", out, in);
    Matrix<Q> sigma = matrix_of(j, "sigma", out, out);
    Vector<Q> mu = vector_of(j, "mu", out);
    return rethrow_as_parse([&] { return GaussMap::make(a, sigma, mu); });
}

std::string extended_gaussian_to_json(const ExtendedGaussian& g) {
    json j;
    j["modes"] = g.modes;
    j["vertices"] = g.vertices;
    j["leaves"] = g.leaves;
    j["L"] = matrix_json(g.L);
    j["sigma"] = matrix_json(g.sigma);
    j["mu"] = vector_json(g.mu);
    j["dual_shift"] = vector_json(g.dual_shift);
    return j.dump(2) + "\n";
}

ExtendedGaussian extended_gaussian_from_json(std::string_view text) {
    json j = parse_object(text, "extended Gaussian");
    ExtendedGaussian g;
    g.modes = size_of(j, "modes");
    g.vertices = indices_of(j, "vertices");
    g.leaves = indices_of(j, "leaves");
    if (g.vertices.size() + g.leaves.size() != g.modes) parse_fail("vertices and leaves must partition the modes");
    std::vector<bool> seen(g.modes, false);
    for (std::size_t k : g.vertices) {
        if (k >= g.modes || seen[k]) parse_fail("vertices and leaves must partition the modes");
        seen[k] = true;
    }
    for (std::size_t k : g.leaves) {
        if (k >= g.modes || seen[k]) parse_fail("vertices and leaves must partition the modes");
        seen[k] = true;
    }
    const std::size_t k = g.vertices.size();
    g.L = matrix_of(j, "L", k, g.leaves.size());
    g.sigma = matrix_of(j, "sigma", k, k);
    g.mu = vector_of(j, "mu", k);
    g.dual_shift = vector_of(j, "dual_shift", g.leaves.size());
    return g;
}

std::string phase_matrix_to_json(const PhaseMatrix& p) {
    json j;
    j["phi"] = matrix_json(p.phi);
    j["displacement"] = vector_json(p.displacement);
    return j.dump(2) + "\n";
}

PhaseMatrix phase_matrix_from_json(std::string_view text) {
    json j = parse_object(text, "phase matrix");
    const json& rows = field(j, "phi");
    if (!rows.is_array()) parse_fail("field 'phi' must be an array");
    const std::size_t n = rows.size();
    Matrix<Q> phi = matrix_of(j, "phi", n, n);
    Vector<Q> disp = j.contains("displacement") ? vector_of(j, "displacement", 2 * n) : Vector<Q>(2 * n, Q(0));
    return rethrow_as_parse([&] { return PhaseMatrix::make(phi, disp); });
}

}  // namespace lagrel

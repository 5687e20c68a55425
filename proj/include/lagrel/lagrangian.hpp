#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lagrel/affine.hpp"

namespace lagrel {

// Affine Lagrangian relation n -> m over Q(i). Coordinates are ordered
// (z_in, x_in, z_out, x_out) with n and m modes; z is momentum-like, x position-like.
// The compact structure bends a leg by negating its z component.
class LagrangianRelation {
public:
    LagrangianRelation() = default;

    // Checked construction; throws NotLagrangian unless the relation is empty or Lagrangian.
    static LagrangianRelation make(std::size_t in, std::size_t out, const Relation& r);
    static LagrangianRelation from_constraints(std::size_t in, std::size_t out, const Matrix<Q>& g, const Vector<Q>& rhs);
    // Construction without the Lagrangian check, for results of operations that preserve it.
    static LagrangianRelation trusted(std::size_t in, std::size_t out, Relation r);

    static LagrangianRelation empty(std::size_t in, std::size_t out);
    static LagrangianRelation identity(std::size_t n);
    // Mode permutation: output mode k is input mode perm[k].
    static LagrangianRelation mode_permutation(const std::vector<std::size_t>& perm);
    static LagrangianRelation symmetry(std::size_t n, std::size_t m);
    // 0 -> 2n state {z_a = -z_b, x_a = x_b} pairing mode k with mode n + k.
    static LagrangianRelation cup(std::size_t n);
    static LagrangianRelation cap(std::size_t n);

    std::size_t in() const { return in_; }
    std::size_t out() const { return out_; }
    bool is_empty() const { return rel_.is_empty(); }
    bool is_state() const { return in_ == 0; }
    const Relation& affine() const { return rel_; }

    LagrangianRelation compose(const LagrangianRelation& next) const;
    LagrangianRelation tensor(const LagrangianRelation& other) const;
    LagrangianRelation converse() const;
    LagrangianRelation conjugate() const;

    std::string str() const { return rel_.str(); }
    friend bool operator==(const LagrangianRelation& a, const LagrangianRelation& b) {
        return a.in_ == b.in_ && a.out_ == b.out_ && a.rel_ == b.rel_;
    }

private:
    LagrangianRelation(std::size_t in, std::size_t out, Relation r) : in_(in), out_(out), rel_(std::move(r)) {}

    std::size_t in_ = 0;
    std::size_t out_ = 0;
    Relation rel_;
};

// Matrix of the twisted form omega_out - omega_in on (v_in, v_out).
Matrix<Q> twisted_form(std::size_t in, std::size_t out);

// Dimension and isotropy test for a relation with dom = 2n and cod = 2m; empty relations pass.
bool is_lagrangian(const Relation& r);

// Bend all inputs to outputs (input legs first) and back.
LagrangianRelation name(const LagrangianRelation& r);
LagrangianRelation unname(const LagrangianRelation& state, std::size_t in);

// Relation whose coordinates are new_k = signs[k] * old_{perm[k]}.
Relation signed_permute(const Relation& r, const std::vector<std::size_t>& perm, const std::vector<int>& signs,
                        std::size_t new_dom);

// Reduced AP form of a nonempty state: vertex rows z_V + L z_Lf - phi x_V = -mu,
// leaf rows x_Lf - L^T x_V = xshift.
struct APForm {
    std::size_t modes = 0;
    std::vector<std::size_t> vertices;
    std::vector<std::size_t> leaves;
    Matrix<Q> L;
    Matrix<Q> phi;
    Vector<Q> mu;
    Vector<Q> xshift;

    std::vector<std::size_t> permutation() const;
    std::string fingerprint() const;
    friend bool operator==(const APForm&, const APForm&) = default;
};

APForm ap_form(const LagrangianRelation& state);
LagrangianRelation from_ap(const APForm& ap);
// AP form of the name of a map (identity on states).
APForm canonical_ap(const LagrangianRelation& r);
std::string fingerprint(const LagrangianRelation& r);

// True iff some real vector satisfies the relation's constraints.
bool has_real_point(const Relation& r);
std::optional<Vector<Q>> real_point(const Relation& r);

bool positive_by_ap(const LagrangianRelation& r);
bool positive_by_form(const LagrangianRelation& r);
bool is_positive(const LagrangianRelation& r);
bool is_quasi_real(const LagrangianRelation& r);

// Symplectic matrices act on (z, x) with omega(v, w) = z.x' - x.z'.
bool is_symplectic(const Matrix<Q>& s);
Matrix<Q> sp_diag(const Matrix<Q>& a);
Matrix<Q> sp_shear_upper(const Matrix<Q>& b);
Matrix<Q> sp_shear_lower(const Matrix<Q>& b);
Matrix<Q> sp_fourier(std::size_t n);
Matrix<Q> unitary_symplectic(const Matrix<Q>& c, const Matrix<Q>& s);
// One-mode rotation [[c, -s], [s, c]] on (z, x).
Matrix<Q> symplectic_rotation(const CirclePoint& p);
Matrix<Q> symplectic_rotation(const Rational& c, const Rational& s);
// Real rotation R applied to both the z and x blocks of two modes.
Matrix<Q> orthogonal_rotation(const CirclePoint& p);

// Graph {v_out = S v_in + shift}; throws NotSymplectic.
LagrangianRelation graph(const Matrix<Q>& s, const Vector<Q>& shift);
LagrangianRelation graph(const Matrix<Q>& s);
LagrangianRelation translation(const Vector<Q>& shift);
// Recover (S, shift) when the relation is the graph of an affine map.
std::optional<std::pair<Matrix<Q>, Vector<Q>>> graph_matrix(const LagrangianRelation& r);

// Generator relations of the symplectic calculus.
// Grey (a, b) m -> n: all x equal, sum z_in - sum z_out + b x = a.
// White (a, b) m -> n: inputs carry z, outputs -z, sum x_in + sum x_out - b z = a.
LagrangianRelation grey_spider(std::size_t in, std::size_t out, const Q& a, const Q& b);
LagrangianRelation white_spider(std::size_t in, std::size_t out, const Q& a, const Q& b);
// (z, x) -> (x, -z) and its inverse.
LagrangianRelation fourier();
LagrangianRelation fourier_inverse();
// {x_out = c x_in, z_in = c z_out}; for c != 0 this is (z, x) -> (z / c, c x).
LagrangianRelation squeeze(const Q& c);
// The state z = i x.
LagrangianRelation vacuum();

}  // namespace lagrel

#pragma once

#include <algorithm>
#include <numeric>

#include "lagrel/lagrangian.hpp"
#include "random_support.hpp"

namespace lagrel::testing {

enum class StateFlavour { Complex, Positive, QuasiReal };

// Random AP data with a random vertex set; positive and quasi-real flavours constrain the
// invariants so the resulting state lies in the requested class.
inline APForm random_ap(Random& rng, std::size_t n, StateFlavour flavour) {
    APForm ap;
    ap.modes = n;
    for (std::size_t j = 0; j < n; ++j) (rng.coin(0.7) ? ap.vertices : ap.leaves).push_back(j);
    const std::size_t k = ap.vertices.size(), nl = ap.leaves.size();
    switch (flavour) {
        case StateFlavour::Complex:
            ap.L = rng.coin(0.6) ? rng.complex_matrix(k, nl, 2, 2) : rng.real_matrix(k, nl, 2, 2);
            ap.phi = rng.complex_symmetric(k, 2, 2);
            ap.mu = rng.coin() ? rng.complex_vector(k, 2, 2) : rng.real_vector(k, 2, 2);
            ap.xshift = rng.coin() ? rng.complex_vector(nl, 2, 2) : rng.real_vector(nl, 2, 2);
            break;
        case StateFlavour::Positive:
        case StateFlavour::QuasiReal: {
            ap.L = rng.real_matrix(k, nl, 2, 2);
            Matrix<Q> v = rng.real_psd(k, rng.integer(0, static_cast<long>(k)));
            Matrix<Q> u = flavour == StateFlavour::Positive ? rng.real_symmetric(k, 2, 2) : Matrix<Q>(k, k);
            ap.phi = u + Q::i() * v;
            ap.mu = rng.real_vector(k, 2, 2);
            ap.xshift = rng.real_vector(nl, 2, 2);
            break;
        }
    }
    return ap;
}

inline LagrangianRelation random_state(Random& rng, std::size_t n, StateFlavour flavour) {
    LagrangianRelation s = from_ap(random_ap(rng, n, flavour));
    if (flavour == StateFlavour::Positive && rng.coin()) {
        Vector<Q> shift = rng.real_vector(2 * n, 2, 2);
        s = s.compose(translation(shift));
    }
    return s;
}

inline LagrangianRelation random_map(Random& rng, std::size_t in, std::size_t out, StateFlavour flavour) {
    return unname(random_state(rng, in + out, flavour), in);
}

// Random word in the symplectic generators diag(A, A^-T), upper/lower shears and Fourier.
inline Matrix<Q> random_symplectic(Random& rng, std::size_t n, int length = 4) {
    Matrix<Q> s = Matrix<Q>::identity(2 * n);
    for (int t = 0; t < length; ++t) {
        Matrix<Q> g;
        switch (rng.integer(0, 3)) {
            case 0: g = sp_diag(rng.invertible(n)); break;
            case 1: g = sp_shear_upper(rng.real_symmetric(n, 2, 2)); break;
            case 2: g = sp_shear_lower(rng.real_symmetric(n, 2, 2)); break;
            default: g = sp_fourier(n); break;
        }
        s = g * s;
    }
    return s;
}

// Quasi-real check through the chi form on an image basis (test oracle only).
inline bool quasi_real_by_chi(const LagrangianRelation& r) {
    if (r.is_empty()) return true;
    if (!positive_by_form(r)) return false;
    const std::size_t n = r.in(), m = r.out();
    auto chi = [](std::size_t k) {
        Matrix<Q> c(2 * k, 2 * k);
        for (std::size_t i = 0; i < k; ++i) c(i, k + i) = c(k + i, i) = Q(1);
        return c;
    };
    Matrix<Q> twisted = direct_sum(-chi(n), chi(m));
    Matrix<Q> k = r.affine().linear_basis();
    return (k.adjoint() * twisted * k).is_zero();
}

}  // namespace lagrel::testing

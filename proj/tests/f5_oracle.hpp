#pragma once

#include <functional>
#include <random>

#include "f5.hpp"
#include "lagrel/affine.hpp"

namespace lagrel::testing {

using RelF5 = AffineRelation<F5>;

inline RelF5 random_f5_relation(std::mt19937_64& gen, std::size_t dom, std::size_t cod) {
    std::uniform_int_distribution<int> digit(0, 4);
    std::uniform_int_distribution<std::size_t> rows_dist(0, dom + cod);
    const std::size_t r = rows_dist(gen);
    Matrix<F5> c(r, dom + cod);
    Vector<F5> rhs(r);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < dom + cod; ++j) c(i, j) = F5(digit(gen));
        rhs[i] = F5(digit(gen));
    }
    return RelF5::from_constraints(dom, cod, c, rhs);
}

inline void for_each_point(std::size_t n, const std::function<void(const Vector<F5>&)>& f) {
    std::size_t total = 1;
    for (std::size_t k = 0; k < n; ++k) total *= 5;
    Vector<F5> v(n);
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t c = code;
        for (std::size_t k = 0; k < n; ++k) {
            v[k] = F5(static_cast<long>(c % 5));
            c /= 5;
        }
        f(v);
    }
}

// Brute-force check that `composite` contains exactly the pairs (a, c) with some b
// satisfying (a, b) in r and (b, c) in s. Returns the number of mismatching points.
inline std::size_t composition_mismatches(const RelF5& r, const RelF5& s, const RelF5& composite) {
    const std::size_t n = r.dom(), m = r.cod(), k = s.cod();
    std::size_t bad = 0;
    for_each_point(n + k, [&](const Vector<F5>& ac) {
        bool exists = false;
        for_each_point(m, [&](const Vector<F5>& b) {
            if (exists) return;
            Vector<F5> ab(ac.begin(), ac.begin() + n);
            ab.insert(ab.end(), b.begin(), b.end());
            Vector<F5> bc = b;
            bc.insert(bc.end(), ac.begin() + n, ac.end());
            exists = r.contains(ab) && s.contains(bc);
        });
        if (exists != composite.contains(ac)) ++bad;
    });
    return bad;
}

}  // namespace lagrel::testing

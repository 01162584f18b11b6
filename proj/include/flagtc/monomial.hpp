#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <span>
#include <string>
#include <vector>

namespace flagtc {

using Exp = std::uint16_t;
using Exps = std::vector<Exp>;

/* Exponent vector (n_1,...,n_k) over the generators x_1..x_k.
 * GF(2) coefficients are implicit: a monomial is present or it is not. */
struct Monomial {
    Exps e;

    static Monomial unit(std::size_t k) { return Monomial{Exps(k, 0)}; }

    std::size_t vars() const { return e.size(); }
    int degree() const { return std::accumulate(e.begin(), e.end(), 0); }
    bool is_unit() const {
        return std::all_of(e.begin(), e.end(), [](Exp x) { return x == 0; });
    }

    Monomial times(const Monomial& o) const {
        Monomial r = *this;
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] = static_cast<Exp>(r.e[i] + o.e[i]);
        return r;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

/* Canonical term order: degree ascending, then exponent vectors
 * lexicographically descending (x1^2 precedes x1*x2 precedes x2^2).
 * Used for serialization and for the sorted term sets of RawPoly. */
inline bool term_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return a.e > b.e;
}

inline std::uint64_t hash_exps(std::span<const Exp> e) {
    std::uint64_t h = 1469598103934665603ull;
    for (Exp x : e) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return h;
}

struct ExpsHash {
    using is_transparent = void;
    std::uint64_t operator()(const Exps& e) const { return hash_exps(e); }
    std::uint64_t operator()(std::span<const Exp> e) const { return hash_exps(e); }
};
struct ExpsEq {
    using is_transparent = void;
    bool operator()(const Exps& a, const Exps& b) const { return a == b; }
    bool operator()(const Exps& a, std::span<const Exp> b) const {
        return std::equal(a.begin(), a.end(), b.begin(), b.end());
    }
    bool operator()(std::span<const Exp> a, const Exps& b) const {
        return std::equal(a.begin(), a.end(), b.begin(), b.end());
    }
};

}  // namespace flagtc

#include "flagtc/rawpoly.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>

namespace flagtc {

namespace {

void require_same_vars(const RawPoly& p, const RawPoly& q) {
    if (p.vars() != q.vars())
        throw std::invalid_argument("variable-count mismatch: " + std::to_string(p.vars()) +
                                    " vs " + std::to_string(q.vars()));
}

std::vector<Monomial> normalize(std::vector<Monomial> ts) {
    std::sort(ts.begin(), ts.end(), term_less);
    std::vector<Monomial> out;
    out.reserve(ts.size());
    for (auto& m : ts) {
        if (!out.empty() && out.back() == m)
            out.pop_back();  // pairs cancel mod 2
        else
            out.push_back(std::move(m));
    }
    return out;
}

}  // namespace

RawPoly::RawPoly(std::size_t vars, std::vector<Monomial> terms) : vars_(vars) {
    for (const auto& m : terms)
        if (m.vars() != vars) throw std::invalid_argument("monomial arity mismatch");
    terms_ = normalize(std::move(terms));
}

RawPoly RawPoly::one(std::size_t vars) {
    RawPoly p(vars);
    p.terms_.push_back(Monomial::unit(vars));
    return p;
}

RawPoly RawPoly::generator(std::size_t vars, std::size_t j, Exp power) {
    if (j < 1 || j > vars) throw std::invalid_argument("generator index out of range");
    Monomial m = Monomial::unit(vars);
    m.e[j - 1] = power;
    RawPoly p(vars);
    p.terms_.push_back(std::move(m));
    return p;
}

int RawPoly::degree() const {
    int d = -1;
    for (const auto& m : terms_) d = std::max(d, m.degree());
    return d;
}

bool RawPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_.front().degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Monomial& m) { return m.degree() == d; });
}

bool RawPoly::contains(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, term_less);
    return it != terms_.end() && *it == m;
}

void RawPoly::toggle(const Monomial& m) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m, term_less);
    if (it != terms_.end() && *it == m)
        terms_.erase(it);
    else
        terms_.insert(it, m);
}

RawPoly poly_add(const RawPoly& p, const RawPoly& q) {
    require_same_vars(p, q);
    RawPoly r(p.vars());
    auto a = p.terms().begin(), ae = p.terms().end();
    auto b = q.terms().begin(), be = q.terms().end();
    std::vector<Monomial> out;
    while (a != ae && b != be) {
        if (*a == *b) {
            ++a;
            ++b;
        } else if (term_less(*a, *b)) {
            out.push_back(*a++);
        } else {
            out.push_back(*b++);
        }
    }
    out.insert(out.end(), a, ae);
    out.insert(out.end(), b, be);
    return RawPoly(p.vars(), std::move(out));
}

RawPoly poly_mul(const RawPoly& p, const RawPoly& q) {
    require_same_vars(p, q);
    std::vector<Monomial> out;
    out.reserve(p.term_count() * q.term_count());
    for (const auto& a : p.terms())
        for (const auto& b : q.terms()) out.push_back(a.times(b));
    return RawPoly(p.vars(), std::move(out));
}

RawPoly poly_pow(const RawPoly& p, unsigned long long n) {
    RawPoly acc = RawPoly::one(p.vars());
    RawPoly base = p;
    while (n) {
        if (n & 1) acc = poly_mul(acc, base);
        n >>= 1;
        if (n) base = poly_mul(base, base);
    }
    return acc;
}

namespace {

/* memo key: (t, variable subset as bitmask) */
using SymMemo = std::map<std::pair<int, std::uint64_t>, RawPoly>;

std::uint64_t mask_of(std::span<const int> vars, std::size_t k) {
    std::uint64_t m = 0;
    for (int v : vars) {
        if (v < 1 || static_cast<std::size_t>(v) > k)
            throw std::invalid_argument("symmetric polynomial: variable index out of range");
        m |= std::uint64_t{1} << (v - 1);
    }
    return m;
}

int top_var(std::uint64_t mask) { return 64 - std::countl_zero(mask); }  // 1-based

RawPoly elem_rec(int t, std::uint64_t mask, std::size_t k, SymMemo& memo) {
    if (t == 0) return RawPoly::one(k);
    if (mask == 0) return RawPoly::zero(k);
    auto key = std::make_pair(t, mask);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int x = top_var(mask);
    std::uint64_t rest = mask & ~(std::uint64_t{1} << (x - 1));
    RawPoly r = poly_add(elem_rec(t, rest, k, memo),
                         poly_mul(RawPoly::generator(k, x), elem_rec(t - 1, rest, k, memo)));
    memo.emplace(key, r);
    return r;
}

RawPoly comp_rec(int t, std::uint64_t mask, std::size_t k, SymMemo& memo) {
    if (t == 0) return RawPoly::one(k);
    if (mask == 0) return RawPoly::zero(k);
    auto key = std::make_pair(t, mask);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    int x = top_var(mask);
    std::uint64_t rest = mask & ~(std::uint64_t{1} << (x - 1));
    RawPoly r = poly_add(comp_rec(t, rest, k, memo),
                         poly_mul(RawPoly::generator(k, x), comp_rec(t - 1, mask, k, memo)));
    memo.emplace(key, r);
    return r;
}

}  // namespace

RawPoly elementary_symmetric(int t, std::span<const int> vars, std::size_t k) {
    if (t < 0) throw std::invalid_argument("elementary_symmetric: negative degree");
    SymMemo memo;
    return elem_rec(t, mask_of(vars, k), k, memo);
}

RawPoly complete_symmetric(int t, std::span<const int> vars, std::size_t k) {
    if (t < 0) throw std::invalid_argument("complete_symmetric: negative degree");
    SymMemo memo;
    return comp_rec(t, mask_of(vars, k), k, memo);
}

namespace {
std::vector<int> prefix_vars(std::size_t nvars) {
    std::vector<int> v(nvars);
    for (std::size_t i = 0; i < nvars; ++i) v[i] = static_cast<int>(i + 1);
    return v;
}
}  // namespace

RawPoly elementary_symmetric_prefix(int t, std::size_t nvars, std::size_t k) {
    auto v = prefix_vars(nvars);
    return elementary_symmetric(t, v, k);
}

RawPoly complete_symmetric_prefix(int t, std::size_t nvars, std::size_t k) {
    auto v = prefix_vars(nvars);
    return complete_symmetric(t, v, k);
}

bool verify_eh_identity(int j, int k) {
    if (j < 1 || k < 1) throw std::invalid_argument("verify_eh_identity: j, k >= 1 required");
    auto vars = prefix_vars(static_cast<std::size_t>(k));
    RawPoly acc = RawPoly::zero(static_cast<std::size_t>(k));
    for (int t = 0; t <= j; ++t) {
        acc = poly_add(acc, poly_mul(elementary_symmetric(t, vars, k),
                                     complete_symmetric(j - t, vars, k)));
    }
    return acc.is_zero();
}

}  // namespace flagtc

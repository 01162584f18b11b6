#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "flagtc/monomial.hpp"

namespace flagtc {

/* Polynomial over GF(2) in k variables, no relations imposed.
 * Terms are a sorted set of monomials; addition is symmetric difference. */
class RawPoly {
public:
    RawPoly() = default;
    explicit RawPoly(std::size_t vars) : vars_(vars) {}
    RawPoly(std::size_t vars, std::vector<Monomial> terms);

    static RawPoly zero(std::size_t vars) { return RawPoly(vars); }
    static RawPoly one(std::size_t vars);
    /* x_j, 1-based j */
    static RawPoly generator(std::size_t vars, std::size_t j, Exp power = 1);

    std::size_t vars() const { return vars_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /* max term degree; -1 for the zero polynomial */
    int degree() const;
    bool is_homogeneous() const;
    bool contains(const Monomial& m) const;

    void toggle(const Monomial& m);

    friend bool operator==(const RawPoly& a, const RawPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

private:
    std::size_t vars_ = 0;
    std::vector<Monomial> terms_;  // sorted by term_less, unique
};

RawPoly poly_add(const RawPoly& p, const RawPoly& q);
RawPoly poly_mul(const RawPoly& p, const RawPoly& q);
RawPoly poly_pow(const RawPoly& p, unsigned long long n);

/* e_t and h_t in the 1-based variable subset `vars` of x_1..x_k, built with
 * the recurrences
 *   e_j(S u {x}) = e_j(S) + x e_{j-1}(S)
 *   h_j(S u {x}) = h_j(S) + x h_{j-1}(S u {x})
 * (e_0 = h_0 = 1, and both vanish for j >= 1 over the empty set). */
RawPoly elementary_symmetric(int t, std::span<const int> vars, std::size_t k);
RawPoly complete_symmetric(int t, std::span<const int> vars, std::size_t k);
/* convenience: the first `nvars` variables of an ambient k */
RawPoly elementary_symmetric_prefix(int t, std::size_t nvars, std::size_t k);
RawPoly complete_symmetric_prefix(int t, std::size_t nvars, std::size_t k);

/* sum_{t=0..j} e_t(x_1..x_k) h_{j-t}(x_1..x_k) == 0 over GF(2), j >= 1 */
bool verify_eh_identity(int j, int k);

}  // namespace flagtc

#pragma once

#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "flagtc/parse.hpp"
#include "flagtc/rawpoly.hpp"
#include "flagtc/ring.hpp"

namespace flagtc {

/* H*(F(1^k,m); F_2) with its minimal presentation
 *     h_{m+i}(x_1,...,x_{k+1-i}) = 0,   1 <= i <= k,
 * reduced onto the additive basis x(n_1,...,n_k), n_i <= m+k-i.
 *
 * Basis classes are indexed by the mixed-radix rank of (n_1,...,n_k) in the
 * box prod [0, m+k-i]. The rewrite caches are filled at construction (plus a
 * lock-guarded overflow memo for monomial reduction); all public operations
 * are const and safe to call concurrently. */
struct RingOptions {
    std::size_t max_basis = std::size_t{1} << 22;
};

class FlagRing final : public Ring {
public:
    using Options = RingOptions;
    /* flips one bit of one rewrite rule after construction; exists so the
     * verification suite's fault-injection mode has something to detect */
    struct Tamper {
        int var;
        std::size_t bit;
    };

    FlagRing(int k, int m, const Options& opt = {});
    FlagRing(int k, int m, Tamper t, const Options& opt = {});

    int k() const { return k_; }
    int m() const { return m_; }
    int dim() const { return dim_; }
    /* n_i <= bound(i), 1-based i; bound(i) = m+k-i */
    int bound(int i) const { return bounds_[i - 1]; }
    FlagSpace space() const { return FlagSpace{k_, m_}; }

    /* Ring interface */
    std::size_t basis_size() const override { return basis_size_; }
    int top_degree() const override { return dim_; }
    int degree(BasisRank r) const override { return degree_of_[r]; }
    BasisRank one_rank() const override { return 0; }
    BasisRank top_rank() const override { return top_rank_; }
    std::size_t generator_count() const override { return static_cast<std::size_t>(k_); }
    BasisRank generator_rank(std::size_t j) const override;
    void mul_basis_into(BasisRank a, BasisRank b, Bits& acc) const override;
    void mul_basis_by_gen_power_into(BasisRank a, std::size_t j, long long e,
                                     Bits& acc) const override;
    int ctop_basis_pair(BasisRank a, BasisRank b) const override;
    const std::vector<BasisRank>& degree_slice(int d) const override { return slices_[d]; }
    std::string basis_label(BasisRank r) const override;
    std::string describe() const override { return format_space(space()); }

    BasisRank rank_of(std::span<const Exp> exps) const;
    Monomial monomial_of(BasisRank r) const;
    bool in_basis(std::span<const Exp> exps) const;

    /* unique expansion in the additive basis; idempotent on normal forms */
    RingElement normal_form(const RawPoly& p) const;
    const RingElement& nf_monomial(std::span<const Exp> exps) const;
    RingElement element_from_poly(const RawPoly& p) const { return normal_form(p); }
    RawPoly to_poly(const RingElement& a) const;

    /* reduction by x_i^{m+k-j} -> x_i^{m+k-i} e_{i-j}(x_1..x_{i-1}); exact on
     * the top-class coefficient, cheaper than normal_form at top degree */
    RingElement top_projection_rewrite(const RawPoly& p) const;
    /* coefficient of the top class in the reduction of a raw exponent vector */
    int ctop_raw(std::span<const Exp> exps) const;

    /* coefficients of prod_{i=1..k} (1-x^{m+i})/(1-x) */
    std::vector<long long> poincare_polynomial() const { return poincare_; }

    /* h_{m+i}(x_{l_1},...,x_{l_{k-j}}) = 0 over all subsets, 0 <= j < i <= k */
    CheckReport verify_extended_relations() const;
    /* x_1^{m+k-1}...x_j^{m+k-j} x_j = 0, top class nonzero, top * x_i = 0 */
    CheckReport verify_annihilator() const;
    /* (x_1...x_i)^l h_j(x_1..x_i) = 0 when i+j+l > m+k; checks all triples
     * with excess i+j+l-(m+k) in [1, max_excess] */
    CheckReport verify_tau_relations(int max_excess = 3) const;

private:
    void build();
    const RingElement& xpow(int i, long long e) const;  // NF of x_i^e, e > bound(i)
    RingElement reduce_monomial(std::span<const Exp> exps) const;
    RingElement rho_monomial(std::span<const Exp> exps) const;
    int ctop_cell(std::span<const Exp> exps) const;
    std::size_t ctop_index(std::span<const Exp> exps) const;

    int k_, m_, dim_;
    std::vector<Exp> bounds_;
    std::vector<std::uint64_t> radix_;
    std::size_t basis_size_ = 0;
    BasisRank top_rank_ = 0;
    std::vector<std::uint16_t> degree_of_;
    std::vector<std::vector<BasisRank>> slices_;
    std::vector<long long> poincare_;
    RingElement zero_;

    /* univariate rewrite cache: xpow_[i-1][e - bound(i) - 1] = NF(x_i^e).
     * The eager vectors are fixed at construction and read without locking;
     * exponents past them go to the lock-guarded side table. */
    std::vector<std::vector<RingElement>> xpow_;
    mutable std::unique_ptr<std::atomic<long long>[]> xpow_zero_from_;
    mutable std::map<std::pair<int, long long>, RingElement> xpow_extra_;
    mutable std::mutex xpow_mx_;

    mutable std::unordered_map<Exps, RingElement, ExpsHash, ExpsEq> nf_memo_;
    mutable std::shared_mutex nf_mx_;
    mutable std::unordered_map<Exps, RingElement, ExpsHash, ExpsEq> rho_memo_;
    mutable std::shared_mutex rho_mx_;

    /* dense top-coefficient table over the clamped box [0, m+k-1]^k */
    mutable std::vector<std::int8_t> ctop_;
    std::vector<std::uint64_t> ctop_radix_;
};

ZDProductSpec top_z_product(const FlagRing& ring, int tensor_factor);

}  // namespace flagtc

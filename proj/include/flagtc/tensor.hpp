#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "flagtc/flag_ring.hpp"
#include "flagtc/parse.hpp"
#include "flagtc/ring.hpp"

namespace flagtc {

struct ResourceLimitError : std::runtime_error {
    ResourceLimitError(const std::string& what, std::size_t limit)
        : std::runtime_error(what + " (ceiling " + std::to_string(limit) + ")"), limit(limit) {}
    std::size_t limit;
};

struct EvalLimits {
    std::size_t max_terms = 100'000'000;
    int workers = 0;  // 0 = hardware concurrency, capped
};

/* s-fold tensor power of a base ring; s >= 2.  Tuples of basis classes are
 * packed base-B into one 64-bit word, component 1 least significant. */
class TensorRing {
public:
    TensorRing(const Ring& base, int s);

    const Ring& base() const { return *base_; }
    int s() const { return s_; }
    std::size_t B() const { return B_; }
    int top_degree() const { return s_ * base_->top_degree(); }

    std::uint64_t pack(std::span<const BasisRank> tuple) const;
    std::vector<BasisRank> unpack(std::uint64_t t) const;
    std::uint64_t top_tuple() const;
    int tuple_degree(std::uint64_t t) const;
    std::string tuple_label(std::uint64_t t) const;

    friend bool operator==(const TensorRing& a, const TensorRing& b) {
        return a.base_ == b.base_ && a.s_ == b.s_;
    }

private:
    const Ring* base_;
    int s_;
    std::size_t B_;
};

/* GF(2)-set of tensor basis tuples, all components in normal form */
class TensorElement {
public:
    explicit TensorElement(const TensorRing& r) : ring_(r) {}
    TensorElement(const TensorRing& r, std::vector<std::uint64_t> terms);

    const TensorRing& ring() const { return ring_; }
    const std::vector<std::uint64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    /* max total degree over terms; -1 if zero */
    int degree() const;
    bool contains(std::uint64_t packed) const;

    friend bool operator==(const TensorElement& a, const TensorElement& b) {
        return a.ring_ == b.ring_ && a.terms_ == b.terms_;
    }

private:
    TensorRing ring_;
    std::vector<std::uint64_t> terms_;  // sorted packed tuples
};

/* a placed in the given tensor factor, identity elsewhere */
TensorElement lift(const TensorRing& ring, int factor, const RingElement& a);
/* z_{i,j} = x_{1,j} + x_{i,j}; 2 <= i <= s, 1 <= j <= generator count */
TensorElement zero_divisor(const TensorRing& ring, int i, int j);

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b,
                         const EvalLimits& limits = {});

/* the product prod z_{i,j}^{n_{i,j}}, evaluated factor by factor with
 * componentwise reduction; empty spec gives 1 */
TensorElement evaluate_zd_product(const TensorRing& ring, const ZDProductSpec& spec,
                                  const EvalLimits& limits = {});

int coefficient_of(const TensorElement& a, std::span<const BasisRank> tuple);

/* coefficient of the top tuple in the product of a top-degree spec; the
 * fast path projects each tensor factor onto its top class before folding */
int top_coefficient(const TensorRing& ring, const ZDProductSpec& spec,
                    const EvalLimits& limits = {});

/* a * z_{s+1,1}^{m+k-1} ... z_{s+1,k}^{m} in the (s+1)-power ring; the
 * group-by-last-component argument keeps this nonzero whenever a is */
TensorElement pad_with_top_factor(const TensorElement& a, const EvalLimits& limits = {});

/* image under the iterated cup product (all factors multiplied together) */
RingElement diagonal_image(const TensorElement& a);

/* top projection of one tensor factor of a flag base: the base-ring element
 * Q with Q = sum over Lucas-admissible splits t of prod z_{i,j}^{n_j}, of
 * ctop(x^t) * NF(x^{n-t}).  Exponents are indexed by generator (1-based). */
RingElement flag_factor_top_projection(const FlagRing& ring, std::span<const long long> exps);

/* the same projection for any base ring; flag bases take the fast path */
RingElement factor_top_projection(const Ring& ring, std::span<const long long> exps,
                                  const EvalLimits& limits = {});

/* embedding H*(F(1,2))^{(x)s} -> H*(N_n)^{(x)s} induced by x1 |-> a1 */
TensorElement embed_rp2(const TensorRing& target, const TensorElement& p);

}  // namespace flagtc

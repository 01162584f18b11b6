#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flagtc/bits.hpp"
#include "flagtc/monomial.hpp"
#include "flagtc/rawpoly.hpp"

namespace flagtc {

using BasisRank = std::uint32_t;

/* What the tensor-power machinery needs from a base ring: a finite graded
 * GF(2) basis with 1-dimensional top piece, generators of degree 1, and
 * multiplication resolved to normal form. Implementations are immutable
 * after construction and shareable across threads. */
class Ring {
public:
    virtual ~Ring() = default;

    virtual std::size_t basis_size() const = 0;
    virtual int top_degree() const = 0;
    virtual int degree(BasisRank r) const = 0;
    virtual BasisRank one_rank() const = 0;
    virtual BasisRank top_rank() const = 0;
    virtual std::size_t generator_count() const = 0;
    virtual BasisRank generator_rank(std::size_t j) const = 0;  // 1-based j

    /* acc ^= (basis_a * basis_b) in normal form */
    virtual void mul_basis_into(BasisRank a, BasisRank b, Bits& acc) const = 0;
    /* acc ^= (basis_a * g_j^e) in normal form; 1-based j, e >= 0 */
    virtual void mul_basis_by_gen_power_into(BasisRank a, std::size_t j, long long e,
                                             Bits& acc) const = 0;
    /* coefficient of the top class in basis_a * basis_b */
    virtual int ctop_basis_pair(BasisRank a, BasisRank b) const;

    virtual const std::vector<BasisRank>& degree_slice(int d) const = 0;
    virtual std::string basis_label(BasisRank r) const = 0;
    virtual std::string describe() const = 0;

    Bits empty_element() const { return Bits(basis_size()); }
};

/* GF(2)-set of basis classes of one ring; always in normal form. */
class RingElement {
public:
    RingElement() : ring_(nullptr) {}
    explicit RingElement(const Ring& r) : ring_(&r), bits_(r.basis_size()) {}
    RingElement(const Ring& r, Bits b) : ring_(&r), bits_(std::move(b)) {}

    const Ring* ring() const { return ring_; }
    const Bits& bits() const { return bits_; }
    Bits& bits() { return bits_; }

    bool is_zero() const { return bits_.none(); }
    std::size_t term_count() const { return bits_.count(); }
    /* max degree of a present basis class; -1 if zero */
    int degree() const;
    bool is_homogeneous() const;

    RingElement& operator^=(const RingElement& o);
    friend bool operator==(const RingElement& a, const RingElement& b) {
        return a.ring_ == b.ring_ && a.bits_ == b.bits_;
    }

private:
    const Ring* ring_;
    Bits bits_;
};

bool equals(const RingElement& a, const RingElement& b);
bool is_zero(const RingElement& a);

/* full ring product of two normal-form elements */
RingElement ring_mul(const RingElement& a, const RingElement& b);

struct CheckItem {
    std::string what;
    bool pass;
};
struct CheckReport {
    std::vector<CheckItem> items;
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const auto& it : items) n += !it.pass;
        return n;
    }
};

/* number of basis classes per degree */
std::vector<long long> degree_counts(const Ring& r);

/* height of each generator: the largest e with g_j^e != 0 */
long long generator_height(const Ring& r, std::size_t j);

/* image of a polynomial in the generators, folded one power at a time;
 * agrees with FlagRing::normal_form on flag rings */
RingElement element_from_generators(const Ring& r, const RawPoly& p);

}  // namespace flagtc

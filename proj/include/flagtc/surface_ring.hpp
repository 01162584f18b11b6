#pragma once

#include <string>
#include <vector>

#include "flagtc/ring.hpp"

namespace flagtc {

/* H*(N_n; F_2) for the closed non-orientable surface of genus n.
 * Basis {1, a_1, ..., a_n, T} with a_i a_j = 0 (i != j), a_i^2 = T,
 * a_i T = 0, T^2 = 0.  Implemented as an explicit multiplication table;
 * this ring is not a truncated symmetric-polynomial quotient. */
class SurfaceRing final : public Ring {
public:
    explicit SurfaceRing(int n);

    int genus() const { return n_; }

    std::size_t basis_size() const override { return static_cast<std::size_t>(n_) + 2; }
    int top_degree() const override { return 2; }
    int degree(BasisRank r) const override { return r == 0 ? 0 : (r <= static_cast<BasisRank>(n_) ? 1 : 2); }
    BasisRank one_rank() const override { return 0; }
    BasisRank top_rank() const override { return static_cast<BasisRank>(n_) + 1; }
    std::size_t generator_count() const override { return static_cast<std::size_t>(n_); }
    BasisRank generator_rank(std::size_t j) const override;
    void mul_basis_into(BasisRank a, BasisRank b, Bits& acc) const override;
    void mul_basis_by_gen_power_into(BasisRank a, std::size_t j, long long e,
                                     Bits& acc) const override;
    const std::vector<BasisRank>& degree_slice(int d) const override { return slices_[d]; }
    std::string basis_label(BasisRank r) const override;
    std::string describe() const override { return "N(" + std::to_string(n_) + ")"; }

    /* a_i a_j = 0 (i != j), a_i^2 = T, a_i T = 0, T^2 = 0 */
    CheckReport verify_relations() const;

private:
    int n_;
    std::vector<std::vector<BasisRank>> slices_;
};

}  // namespace flagtc

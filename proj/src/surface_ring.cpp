#include "flagtc/surface_ring.hpp"

#include <stdexcept>

namespace flagtc {

SurfaceRing::SurfaceRing(int n) : n_(n) {
    if (n < 1) throw std::invalid_argument("SurfaceRing: genus >= 1 required");
    slices_.resize(3);
    slices_[0] = {0};
    for (int j = 1; j <= n_; ++j) slices_[1].push_back(static_cast<BasisRank>(j));
    slices_[2] = {top_rank()};
}

BasisRank SurfaceRing::generator_rank(std::size_t j) const {
    if (j < 1 || j > static_cast<std::size_t>(n_))
        throw std::invalid_argument("surface generator index out of range");
    return static_cast<BasisRank>(j);
}

void SurfaceRing::mul_basis_into(BasisRank a, BasisRank b, Bits& acc) const {
    if (a == 0) {
        acc.flip(b);
        return;
    }
    if (b == 0) {
        acc.flip(a);
        return;
    }
    /* both positive degree: a_i a_i = T, everything else in degree > 2 dies */
    if (a == b && a <= static_cast<BasisRank>(n_)) acc.flip(top_rank());
}

void SurfaceRing::mul_basis_by_gen_power_into(BasisRank a, std::size_t j, long long e,
                                              Bits& acc) const {
    BasisRank g = generator_rank(j);
    if (e == 0) {
        acc.flip(a);
        return;
    }
    if (e == 1) {
        mul_basis_into(a, g, acc);
        return;
    }
    if (e == 2 && a == 0) {
        acc.flip(top_rank());
        return;
    }
    /* a_j^e = 0 for e >= 3, and a * a_j^2 = a * T = 0 for a != 1 */
}

std::string SurfaceRing::basis_label(BasisRank r) const {
    if (r == 0) return "1";
    if (r <= static_cast<BasisRank>(n_)) return "a" + std::to_string(r);
    return "T";
}

CheckReport SurfaceRing::verify_relations() const {
    CheckReport rep;
    Bits acc = empty_element();
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            acc.reset();
            mul_basis_into(generator_rank(i), generator_rank(j), acc);
            bool ok = (i == j) ? (acc.count() == 1 && acc.test(top_rank())) : acc.none();
            rep.items.push_back({"a" + std::to_string(i) + "*a" + std::to_string(j) +
                                     (i == j ? " = T" : " = 0"),
                                 ok});
        }
        acc.reset();
        mul_basis_into(generator_rank(i), top_rank(), acc);
        rep.items.push_back({"a" + std::to_string(i) + "*T = 0", acc.none()});
    }
    acc.reset();
    mul_basis_into(top_rank(), top_rank(), acc);
    rep.items.push_back({"T*T = 0", acc.none()});
    rep.items.push_back({"basis cardinality n + 2",
                         basis_size() == static_cast<std::size_t>(n_) + 2});
    return rep;
}

}  // namespace flagtc

#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace flagtc {

/* Fixed-size GF(2) vector. XOR is addition; everything here is branch-light
 * because the tensor workloads are dominated by symmetric differences of
 * large degree slices. */
class Bits {
public:
    Bits() = default;
    explicit Bits(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }

    bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { w_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void flip(std::size_t i) { w_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
    void reset() { std::fill(w_.begin(), w_.end(), 0); }

    bool any() const {
        for (auto w : w_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }

    Bits& operator^=(const Bits& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    friend bool operator==(const Bits& a, const Bits& b) { return a.n_ == b.n_ && a.w_ == b.w_; }

    /* parity of |a AND b|; the GF(2) pairing used by top-coefficient folds */
    bool dot(const Bits& o) const {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
        return std::popcount(acc) & 1u;
    }

    template <class F>
    void for_each_set(F&& f) const {
        for (std::size_t wi = 0; wi < w_.size(); ++wi) {
            std::uint64_t w = w_[wi];
            while (w) {
                unsigned b = std::countr_zero(w);
                f(wi * 64 + b);
                w &= w - 1;
            }
        }
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

}  // namespace flagtc

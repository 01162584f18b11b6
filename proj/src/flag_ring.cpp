#include "flagtc/flag_ring.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace flagtc {

int Ring::ctop_basis_pair(BasisRank a, BasisRank b) const {
    Bits acc = empty_element();
    mul_basis_into(a, b, acc);
    return acc.test(top_rank()) ? 1 : 0;
}

int RingElement::degree() const {
    int d = -1;
    bits_.for_each_set([&](std::size_t r) {
        d = std::max(d, ring_->degree(static_cast<BasisRank>(r)));
    });
    return d;
}

bool RingElement::is_homogeneous() const {
    int d = -2;
    bool homo = true;
    bits_.for_each_set([&](std::size_t r) {
        int dr = ring_->degree(static_cast<BasisRank>(r));
        if (d == -2)
            d = dr;
        else if (dr != d)
            homo = false;
    });
    return homo;
}

RingElement& RingElement::operator^=(const RingElement& o) {
    if (ring_ != o.ring_) throw std::invalid_argument("ring mismatch");
    bits_ ^= o.bits_;
    return *this;
}

bool equals(const RingElement& a, const RingElement& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("ring mismatch");
    return a.bits() == b.bits();
}

bool is_zero(const RingElement& a) { return a.is_zero(); }

RingElement ring_mul(const RingElement& a, const RingElement& b) {
    if (a.ring() != b.ring()) throw std::invalid_argument("ring mismatch");
    const Ring& R = *a.ring();
    RingElement out(R);
    a.bits().for_each_set([&](std::size_t ra) {
        b.bits().for_each_set([&](std::size_t rb) {
            R.mul_basis_into(static_cast<BasisRank>(ra), static_cast<BasisRank>(rb), out.bits());
        });
    });
    return out;
}

std::vector<long long> degree_counts(const Ring& r) {
    std::vector<long long> out(r.top_degree() + 1, 0);
    for (int d = 0; d <= r.top_degree(); ++d)
        out[d] = static_cast<long long>(r.degree_slice(d).size());
    return out;
}

long long generator_height(const Ring& r, std::size_t j) {
    long long h = 0;
    Bits cur = r.empty_element();
    cur.set(r.generator_rank(j));
    while (cur.any() && h <= r.top_degree()) {
        ++h;
        Bits next = r.empty_element();
        cur.for_each_set([&](std::size_t a) {
            r.mul_basis_by_gen_power_into(static_cast<BasisRank>(a), j, 1, next);
        });
        cur = std::move(next);
    }
    return h;
}

RingElement element_from_generators(const Ring& r, const RawPoly& p) {
    if (p.vars() != r.generator_count())
        throw std::invalid_argument("polynomial arity does not match the generator count");
    RingElement out(r);
    for (const auto& mono : p.terms()) {
        RingElement cur(r);
        cur.bits().set(r.one_rank());
        for (std::size_t j = 0; j < mono.vars() && !cur.is_zero(); ++j) {
            if (mono.e[j] == 0) continue;
            RingElement next(r);
            cur.bits().for_each_set([&](std::size_t a) {
                r.mul_basis_by_gen_power_into(static_cast<BasisRank>(a), j + 1, mono.e[j],
                                              next.bits());
            });
            cur = std::move(next);
        }
        out ^= cur;
    }
    return out;
}

/* ---------------------------------------------------------------------- */

FlagRing::FlagRing(int k, int m, const Options& opt) : k_(k), m_(m) {
    if (k < 1 || m < 1) throw std::invalid_argument("FlagRing: k >= 1 and m >= 1 required");
    if (k > 32) throw std::invalid_argument("FlagRing: k too large");
    std::size_t size = 1;
    for (int i = 1; i <= k; ++i) {
        size *= static_cast<std::size_t>(m + i);
        if (size > opt.max_basis)
            throw std::invalid_argument("FlagRing: basis size exceeds the configured ceiling");
    }
    build();
}

FlagRing::FlagRing(int k, int m, Tamper t, const Options& opt) : FlagRing(k, m, opt) {
    if (t.var < 1 || t.var > k_ || xpow_[t.var - 1].empty())
        throw std::invalid_argument("FlagRing: bad tamper target");
    auto& rule = xpow_[t.var - 1][0];
    rule.bits().flip(t.bit % basis_size_);
}

void FlagRing::build() {
    dim_ = k_ * m_ + k_ * (k_ - 1) / 2;
    bounds_.resize(k_);
    for (int i = 1; i <= k_; ++i) bounds_[i - 1] = static_cast<Exp>(m_ + k_ - i);

    radix_.assign(k_, 1);
    for (int i = k_ - 2; i >= 0; --i)
        radix_[i] = radix_[i + 1] * static_cast<std::uint64_t>(bounds_[i + 1] + 1);
    basis_size_ = radix_[0] * static_cast<std::uint64_t>(bounds_[0] + 1);
    top_rank_ = static_cast<BasisRank>(basis_size_ - 1);

    degree_of_.resize(basis_size_);
    slices_.assign(dim_ + 1, {});
    {
        Exps v(k_, 0);
        for (std::size_t r = 0; r < basis_size_; ++r) {
            int d = 0;
            for (Exp x : v) d += x;
            degree_of_[r] = static_cast<std::uint16_t>(d);
            slices_[d].push_back(static_cast<BasisRank>(r));
            for (int i = k_ - 1; i >= 0; --i) {
                if (v[i] < bounds_[i]) {
                    ++v[i];
                    break;
                }
                v[i] = 0;
            }
        }
    }

    poincare_.assign(1, 1);
    for (int i = 1; i <= k_; ++i) {
        std::vector<long long> next(poincare_.size() + m_ + i - 1, 0);
        for (std::size_t d = 0; d < poincare_.size(); ++d)
            for (int t = 0; t < m_ + i; ++t) next[d + t] += poincare_[d];
        poincare_ = std::move(next);
    }

    zero_ = RingElement(*this);

    /* univariate rewrite cache.  Eager range (k-i+2)*bound(i) covers every
     * exponent the reduction of a product of two basis monomials can reach,
     * so those lookups never lock. */
    xpow_.resize(k_);
    xpow_zero_from_ = std::make_unique<std::atomic<long long>[]>(k_);
    for (int i = 0; i < k_; ++i) xpow_zero_from_[i].store(-1);
    for (int i = 1; i <= k_; ++i) {
        long long b = bounds_[i - 1];
        long long eager_max = (k_ - i + 2) * b + 1;
        auto& vec = xpow_[i - 1];
        /* seed: x_i^{b+1} = sum_t x_i^{b+1-t} h_t(x_1..x_{i-1}), every
         * monomial of which already lies in the basis box */
        RingElement seed(*this);
        for (long long t = 1; t <= b + 1; ++t) {
            RawPoly h = complete_symmetric_prefix(static_cast<int>(t), i - 1, k_);
            for (const auto& mono : h.terms()) {
                Exps e = mono.e;
                e[i - 1] = static_cast<Exp>(b + 1 - t);
                seed.bits().flip(rank_of(e));
            }
        }
        vec.push_back(std::move(seed));
        while (static_cast<long long>(vec.size()) + b < eager_max) {
            if (vec.back().is_zero()) break;
            RingElement next(*this);
            Exps scratch(k_);
            vec.back().bits().for_each_set([&](std::size_t u) {
                Monomial um = monomial_of(static_cast<BasisRank>(u));
                if (um.e[i - 1] < bounds_[i - 1]) {
                    ++um.e[i - 1];
                    next.bits().flip(rank_of(um.e));
                    return;
                }
                /* x_i exponent hits bound+1: splice the seed in */
                vec[0].bits().for_each_set([&](std::size_t w) {
                    Monomial wm = monomial_of(static_cast<BasisRank>(w));
                    for (int q = 0; q < k_; ++q)
                        scratch[q] = static_cast<Exp>(wm.e[q] + (q == i - 1 ? 0 : um.e[q]));
                    if (in_basis(scratch))
                        next.bits().flip(rank_of(scratch));
                    else
                        next ^= nf_monomial(scratch);
                });
            });
            vec.push_back(std::move(next));
        }
        if (vec.back().is_zero())
            xpow_zero_from_[i - 1].store(b + static_cast<long long>(vec.size()));
    }

    /* dense top-coefficient table over the clamped box [0, m+k-1]^k */
    ctop_radix_.assign(k_, 1);
    for (int i = k_ - 2; i >= 0; --i)
        ctop_radix_[i] = ctop_radix_[i + 1] * static_cast<std::uint64_t>(m_ + k_);
    std::size_t cells = ctop_radix_[0] * static_cast<std::uint64_t>(m_ + k_);
    ctop_.assign(cells, -1);
    {
        Exps v(k_, 0);
        for (std::size_t c = 0; c < cells; ++c) {
            ctop_cell(v);
            for (int i = k_ - 1; i >= 0; --i) {
                if (v[i] + 1 < m_ + k_) {
                    ++v[i];
                    break;
                }
                v[i] = 0;
            }
        }
    }
}

BasisRank FlagRing::generator_rank(std::size_t j) const {
    if (j < 1 || j > static_cast<std::size_t>(k_))
        throw std::invalid_argument("generator index out of range");
    return static_cast<BasisRank>(radix_[j - 1]);
}

BasisRank FlagRing::rank_of(std::span<const Exp> exps) const {
    std::uint64_t r = 0;
    for (int i = 0; i < k_; ++i) r += radix_[i] * exps[i];
    return static_cast<BasisRank>(r);
}

Monomial FlagRing::monomial_of(BasisRank r) const {
    Monomial m = Monomial::unit(k_);
    std::uint64_t rest = r;
    for (int i = 0; i < k_; ++i) {
        m.e[i] = static_cast<Exp>(rest / radix_[i]);
        rest %= radix_[i];
    }
    return m;
}

bool FlagRing::in_basis(std::span<const Exp> exps) const {
    for (int i = 0; i < k_; ++i)
        if (exps[i] > bounds_[i]) return false;
    return true;
}

const RingElement& FlagRing::xpow(int i, long long e) const {
    const auto& vec = xpow_[i - 1];
    long long b = bounds_[i - 1];
    assert(e > b);
    long long zf = xpow_zero_from_[i - 1].load();
    if (zf >= 0 && e >= zf) return zero_;
    if (e - b - 1 < static_cast<long long>(vec.size())) return vec[e - b - 1];

    /* past the eager range: extend the side table one exponent at a time;
     * vec covers (b, b + size], so the first missing exponent is b+size+1 */
    std::scoped_lock lk(xpow_mx_);
    if (auto it = xpow_extra_.find({i, e}); it != xpow_extra_.end()) return it->second;
    long long start = b + static_cast<long long>(vec.size()) + 1;
    const RingElement* prev = &vec.back();
    for (long long ee = start; ee <= e; ++ee) {
        if (auto it = xpow_extra_.find({i, ee}); it != xpow_extra_.end()) {
            prev = &it->second;
            continue;
        }
        RingElement next(*this);
        Exps scratch(k_);
        prev->bits().for_each_set([&](std::size_t u) {
            Monomial um = monomial_of(static_cast<BasisRank>(u));
            if (um.e[i - 1] < bounds_[i - 1]) {
                ++um.e[i - 1];
                next.bits().flip(rank_of(um.e));
                return;
            }
            vec[0].bits().for_each_set([&](std::size_t w) {
                Monomial wm = monomial_of(static_cast<BasisRank>(w));
                for (int q = 0; q < k_; ++q)
                    scratch[q] = static_cast<Exp>(wm.e[q] + (q == i - 1 ? 0 : um.e[q]));
                if (in_basis(scratch))
                    next.bits().flip(rank_of(scratch));
                else
                    next ^= nf_monomial(scratch);
            });
        });
        if (next.is_zero()) {
            xpow_zero_from_[i - 1].store(ee);
            return zero_;
        }
        auto [it, ok] = xpow_extra_.emplace(std::make_pair(i, ee), std::move(next));
        (void)ok;
        prev = &it->second;
    }
    return *prev;
}

RingElement FlagRing::reduce_monomial(std::span<const Exp> exps) const {
    int oi = 0;
    for (int i = k_; i >= 1; --i) {
        if (exps[i - 1] > bounds_[i - 1]) {
            oi = i;
            break;
        }
    }
    RingElement acc(*this);
    if (oi == 0) {
        acc.bits().set(rank_of(exps));
        return acc;
    }
    const RingElement& sub = xpow(oi, exps[oi - 1]);
    Exps scratch(k_);
    sub.bits().for_each_set([&](std::size_t w) {
        Monomial wm = monomial_of(static_cast<BasisRank>(w));
        for (int q = 0; q < k_; ++q)
            scratch[q] = static_cast<Exp>(wm.e[q] + (q == oi - 1 ? 0 : exps[q]));
        if (in_basis(scratch))
            acc.bits().flip(rank_of(scratch));
        else
            acc ^= nf_monomial(scratch);
    });
    return acc;
}

const RingElement& FlagRing::nf_monomial(std::span<const Exp> exps) const {
    {
        std::shared_lock lk(nf_mx_);
        if (auto it = nf_memo_.find(exps); it != nf_memo_.end()) return it->second;
    }
    RingElement val = reduce_monomial(exps);
    std::unique_lock lk(nf_mx_);
    auto [it, ok] = nf_memo_.emplace(Exps(exps.begin(), exps.end()), std::move(val));
    (void)ok;
    return it->second;
}

RingElement FlagRing::normal_form(const RawPoly& p) const {
    if (p.vars() != static_cast<std::size_t>(k_))
        throw std::invalid_argument("normal_form: polynomial has " + std::to_string(p.vars()) +
                                    " variables, ring has " + std::to_string(k_));
    RingElement acc(*this);
    for (const auto& mono : p.terms()) {
        if (in_basis(mono.e))
            acc.bits().flip(rank_of(mono.e));
        else
            acc ^= nf_monomial(mono.e);
    }
    return acc;
}

RawPoly FlagRing::to_poly(const RingElement& a) const {
    if (a.ring() != this) throw std::invalid_argument("to_poly: ring mismatch");
    std::vector<Monomial> terms;
    a.bits().for_each_set(
        [&](std::size_t r) { terms.push_back(monomial_of(static_cast<BasisRank>(r))); });
    return RawPoly(k_, std::move(terms));
}

void FlagRing::mul_basis_into(BasisRank a, BasisRank b, Bits& acc) const {
    Exp buf[32];
    std::uint64_t ra = a, rb = b;
    bool boxed = true;
    for (int i = 0; i < k_; ++i) {
        Exp ea = static_cast<Exp>(ra / radix_[i]);
        Exp eb = static_cast<Exp>(rb / radix_[i]);
        ra %= radix_[i];
        rb %= radix_[i];
        buf[i] = static_cast<Exp>(ea + eb);
        boxed = boxed && buf[i] <= bounds_[i];
    }
    std::span<const Exp> exps(buf, static_cast<std::size_t>(k_));
    if (boxed) {
        acc.flip(rank_of(exps));
        return;
    }
    acc ^= nf_monomial(exps).bits();
}

void FlagRing::mul_basis_by_gen_power_into(BasisRank a, std::size_t j, long long e,
                                           Bits& acc) const {
    if (j < 1 || j > static_cast<std::size_t>(k_))
        throw std::invalid_argument("generator index out of range");
    if (e == 0) {
        acc.flip(a);
        return;
    }
    long long zf = xpow_zero_from_[j - 1].load();
    Monomial mono = monomial_of(a);
    long long total = mono.e[j - 1] + e;
    if (zf >= 0 && total >= zf) return;  // known zero power divides the product
    if (total > 60000) {
        /* force discovery of the vanishing exponent, then retry */
        (void)xpow(static_cast<int>(j), 2LL * (m_ + k_));
        zf = xpow_zero_from_[j - 1].load();
        if (zf >= 0 && total >= zf) return;
        throw std::invalid_argument("generator power too large");
    }
    mono.e[j - 1] = static_cast<Exp>(total);
    if (in_basis(mono.e)) {
        acc.flip(rank_of(mono.e));
        return;
    }
    acc ^= nf_monomial(mono.e).bits();
}

int FlagRing::ctop_basis_pair(BasisRank a, BasisRank b) const {
    Exp buf[32];
    std::uint64_t ra = a, rb = b;
    for (int i = 0; i < k_; ++i) {
        Exp ea = static_cast<Exp>(ra / radix_[i]);
        Exp eb = static_cast<Exp>(rb / radix_[i]);
        ra %= radix_[i];
        rb %= radix_[i];
        buf[i] = static_cast<Exp>(ea + eb);
        if (buf[i] >= m_ + k_) return 0;
    }
    return ctop_[ctop_index(std::span<const Exp>(buf, static_cast<std::size_t>(k_)))];
}

std::size_t FlagRing::ctop_index(std::span<const Exp> exps) const {
    std::uint64_t r = 0;
    for (int i = 0; i < k_; ++i) r += ctop_radix_[i] * exps[i];
    return static_cast<std::size_t>(r);
}

/* the top-projection rule: x_i^{m+k-j} -> x_i^{m+k-i} e_{i-j}(x_1..x_{i-1});
 * children outside the clamped box are multiples of x^{m+k} and vanish */
int FlagRing::ctop_cell(std::span<const Exp> exps) const {
    std::size_t idx = ctop_index(exps);
    std::int8_t& cell = ctop_[idx];
    if (cell >= 0) return cell;
    int oi = 0;
    for (int i = k_; i >= 1; --i) {
        if (exps[i - 1] > bounds_[i - 1]) {
            oi = i;
            break;
        }
    }
    if (oi == 0) {
        cell = (rank_of(exps) == top_rank_) ? 1 : 0;
        return cell;
    }
    int j = m_ + k_ - exps[oi - 1];  // 1 <= j < oi
    int pick = oi - j;               // subset size from {1..oi-1}
    Exps child(exps.begin(), exps.end());
    child[oi - 1] = bounds_[oi - 1];
    int acc = 0;
    std::vector<int> sel(pick);
    /* iterate subsets of {0..oi-2} of size `pick` */
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == pick) {
            bool dead = false;
            for (int q = 0; q < pick; ++q) {
                ++child[sel[q]];
                if (child[sel[q]] >= m_ + k_) dead = true;
            }
            if (!dead) acc ^= ctop_cell(child);
            for (int q = 0; q < pick; ++q) --child[sel[q]];
            return;
        }
        for (int c = start; c <= oi - 2 - (pick - depth - 1); ++c) {
            sel[depth] = c;
            self(self, c + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    cell = static_cast<std::int8_t>(acc);
    return cell;
}

int FlagRing::ctop_raw(std::span<const Exp> exps) const {
    for (int i = 0; i < k_; ++i)
        if (exps[i] >= m_ + k_) return 0;
    return ctop_[ctop_index(exps)];  // table fully built at construction
}

RingElement FlagRing::rho_monomial(std::span<const Exp> exps) const {
    for (int i = 0; i < k_; ++i)
        if (exps[i] >= m_ + k_) return RingElement(*this);
    {
        std::shared_lock lk(rho_mx_);
        if (auto it = rho_memo_.find(exps); it != rho_memo_.end()) return it->second;
    }
    int oi = 0;
    for (int i = k_; i >= 1; --i) {
        if (exps[i - 1] > bounds_[i - 1]) {
            oi = i;
            break;
        }
    }
    RingElement acc(*this);
    if (oi == 0) {
        acc.bits().set(rank_of(exps));
        return acc;
    }
    int j = m_ + k_ - exps[oi - 1];
    int pick = oi - j;
    Exps child(exps.begin(), exps.end());
    child[oi - 1] = bounds_[oi - 1];
    std::vector<int> sel(pick);
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == pick) {
            for (int q = 0; q < pick; ++q) ++child[sel[q]];
            acc ^= rho_monomial(child);
            for (int q = 0; q < pick; ++q) --child[sel[q]];
            return;
        }
        for (int c = start; c <= oi - 2 - (pick - depth - 1); ++c) {
            sel[depth] = c;
            self(self, c + 1, depth + 1);
        }
    };
    rec(rec, 0, 0);
    {
        std::unique_lock lk(rho_mx_);
        rho_memo_.emplace(Exps(exps.begin(), exps.end()), acc);
    }
    return acc;
}

RingElement FlagRing::top_projection_rewrite(const RawPoly& p) const {
    if (p.vars() != static_cast<std::size_t>(k_))
        throw std::invalid_argument("top_projection_rewrite: variable-count mismatch");
    RingElement acc(*this);
    for (const auto& mono : p.terms()) acc ^= rho_monomial(mono.e);
    return acc;
}

std::string FlagRing::basis_label(BasisRank r) const { return format_monomial(monomial_of(r)); }

/* ------------------------- structural checks -------------------------- */

CheckReport FlagRing::verify_extended_relations() const {
    CheckReport rep;
    std::vector<int> subset;
    auto rec = [&](auto&& self, int next, int want) -> void {
        if (static_cast<int>(subset.size()) == want) {
            int j = k_ - want;
            for (int i = j + 1; i <= k_; ++i) {
                RawPoly h = complete_symmetric(m_ + i, subset, k_);
                bool ok = normal_form(h).is_zero();
                std::string what = "h_" + std::to_string(m_ + i) + "(";
                for (std::size_t q = 0; q < subset.size(); ++q)
                    what += (q ? "," : "") + std::string("x") + std::to_string(subset[q]);
                what += ") = 0";
                rep.items.push_back({std::move(what), ok});
            }
            return;
        }
        for (int v = next; v <= k_; ++v) {
            subset.push_back(v);
            self(self, v + 1, want);
            subset.pop_back();
        }
    };
    for (int size = 1; size <= k_; ++size) rec(rec, 1, size);
    return rep;
}

CheckReport FlagRing::verify_annihilator() const {
    CheckReport rep;
    for (int j = 1; j <= k_; ++j) {
        Monomial m = Monomial::unit(k_);
        for (int i = 1; i <= j; ++i) m.e[i - 1] = bounds_[i - 1];
        ++m.e[j - 1];
        RawPoly p(k_, {m});
        rep.items.push_back({"x1^" + std::to_string(bounds_[0]) + "...x" + std::to_string(j) +
                                 "^" + std::to_string(bounds_[j - 1]) + " * x" + std::to_string(j) +
                                 " = 0",
                             normal_form(p).is_zero()});
    }
    Monomial top = Monomial::unit(k_);
    for (int i = 0; i < k_; ++i) top.e[i] = bounds_[i];
    RingElement tc = normal_form(RawPoly(k_, {top}));
    rep.items.push_back({"top class nonzero", !tc.is_zero()});
    rep.items.push_back(
        {"top class is its own normal form", tc.term_count() == 1 && tc.bits().test(top_rank_)});
    for (int i = 1; i <= k_; ++i) {
        Monomial t2 = top;
        ++t2.e[i - 1];
        rep.items.push_back({"top * x" + std::to_string(i) + " = 0",
                             normal_form(RawPoly(k_, {t2})).is_zero()});
    }
    return rep;
}

CheckReport FlagRing::verify_tau_relations(int max_excess) const {
    CheckReport rep;
    for (int i = 1; i <= k_; ++i) {
        for (int excess = 1; excess <= max_excess; ++excess) {
            int total = m_ + k_ + excess;  // i + j + l
            for (int l = 0; l <= total - i; ++l) {
                int j = total - i - l;
                Monomial tau = Monomial::unit(k_);
                for (int q = 1; q <= i; ++q) tau.e[q - 1] = static_cast<Exp>(l);
                RawPoly p = poly_mul(RawPoly(k_, {tau}), complete_symmetric_prefix(j, i, k_));
                bool ok = normal_form(p).is_zero();
                rep.items.push_back({"(x1..x" + std::to_string(i) + ")^" + std::to_string(l) +
                                         " h_" + std::to_string(j) + " = 0",
                                     ok});
            }
        }
    }
    return rep;
}

ZDProductSpec top_z_product(const FlagRing& ring, int tensor_factor) {
    ZDProductSpec spec;
    for (int j = 1; j <= ring.k(); ++j)
        spec.factors.push_back({tensor_factor, j, ring.bound(j)});
    return spec;
}

}  // namespace flagtc

#include "flagtc/tensor.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "flagtc/surface_ring.hpp"

namespace flagtc {

TensorRing::TensorRing(const Ring& base, int s) : base_(&base), s_(s), B_(base.basis_size()) {
    if (s < 2) throw std::invalid_argument("TensorRing: s >= 2 required");
    double bits = s * std::log2(static_cast<double>(B_));
    if (bits >= 63.0)
        throw std::invalid_argument("TensorRing: basis^s exceeds the packed-tuple range");
}

std::uint64_t TensorRing::pack(std::span<const BasisRank> tuple) const {
    if (tuple.size() != static_cast<std::size_t>(s_))
        throw std::invalid_argument("tuple length must equal s");
    std::uint64_t r = 0;
    for (int i = s_ - 1; i >= 0; --i) {
        if (tuple[i] >= B_) throw std::invalid_argument("tuple component out of basis range");
        r = r * B_ + tuple[i];
    }
    return r;
}

std::vector<BasisRank> TensorRing::unpack(std::uint64_t t) const {
    std::vector<BasisRank> out(s_);
    for (int i = 0; i < s_; ++i) {
        out[i] = static_cast<BasisRank>(t % B_);
        t /= B_;
    }
    return out;
}

std::uint64_t TensorRing::top_tuple() const {
    std::uint64_t r = 0;
    for (int i = 0; i < s_; ++i) r = r * B_ + base_->top_rank();
    return r;
}

int TensorRing::tuple_degree(std::uint64_t t) const {
    int d = 0;
    for (int i = 0; i < s_; ++i) {
        d += base_->degree(static_cast<BasisRank>(t % B_));
        t /= B_;
    }
    return d;
}

std::string TensorRing::tuple_label(std::uint64_t t) const {
    auto tuple = unpack(t);
    /* two factors over a flag base: the lambda/rho notation */
    if (s_ == 2 && dynamic_cast<const FlagRing*>(base_)) {
        const auto& fr = static_cast<const FlagRing&>(*base_);
        std::string l = format_monomial(fr.monomial_of(tuple[0]), "\xce\xbb");
        std::string r = format_monomial(fr.monomial_of(tuple[1]), "\xcf\x81");
        if (l == "1" && r == "1") return "1";
        if (l == "1") return r;
        if (r == "1") return l;
        return l + "*" + r;
    }
    std::string out;
    for (int i = 0; i < s_; ++i) {
        if (i) out += " (x) ";
        out += base_->basis_label(tuple[i]);
    }
    return out;
}

TensorElement::TensorElement(const TensorRing& r, std::vector<std::uint64_t> terms) : ring_(r) {
    std::sort(terms.begin(), terms.end());
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) % 2) terms_.push_back(terms[i]);
        i = j;
    }
}

int TensorElement::degree() const {
    int d = -1;
    for (auto t : terms_) d = std::max(d, ring_.tuple_degree(t));
    return d;
}

bool TensorElement::contains(std::uint64_t packed) const {
    return std::binary_search(terms_.begin(), terms_.end(), packed);
}

TensorElement lift(const TensorRing& ring, int factor, const RingElement& a) {
    if (factor < 1 || factor > ring.s())
        throw std::invalid_argument("lift: tensor factor out of range");
    if (a.ring() != &ring.base()) throw std::invalid_argument("lift: base ring mismatch");
    std::vector<std::uint64_t> terms;
    std::uint64_t shift = 1;
    for (int i = 1; i < factor; ++i) shift *= ring.B();
    std::uint64_t ones = 0;  // all components = one_rank
    for (int i = 0; i < ring.s(); ++i) {
        std::uint64_t c = (i + 1 == factor) ? 0 : ring.base().one_rank();
        std::uint64_t w = 1;
        for (int q = 0; q < i; ++q) w *= ring.B();
        ones += w * c;
    }
    a.bits().for_each_set([&](std::size_t r) { terms.push_back(ones + shift * r); });
    return TensorElement(ring, std::move(terms));
}

TensorElement zero_divisor(const TensorRing& ring, int i, int j) {
    if (i < 2 || i > ring.s())
        throw std::invalid_argument("zero_divisor: factor index must satisfy 2 <= i <= s");
    const Ring& R = ring.base();
    if (j < 1 || static_cast<std::size_t>(j) > R.generator_count())
        throw std::invalid_argument("zero_divisor: generator index out of range");
    BasisRank g = R.generator_rank(j);
    std::vector<BasisRank> tup(ring.s(), static_cast<BasisRank>(R.one_rank()));
    std::vector<std::uint64_t> terms;
    tup[0] = g;
    terms.push_back(ring.pack(tup));
    tup[0] = static_cast<BasisRank>(R.one_rank());
    tup[i - 1] = g;
    terms.push_back(ring.pack(tup));
    return TensorElement(ring, std::move(terms));
}

namespace {

/* toggle-accumulating set of packed tuples */
class TupleAcc {
public:
    explicit TupleAcc(std::size_t limit) : limit_(limit) {}
    void toggle(std::uint64_t t) {
        auto it = set_.find(t);
        if (it != set_.end())
            set_.erase(it);
        else {
            if (set_.size() >= limit_)
                throw ResourceLimitError("tensor term count exceeded the ceiling", limit_);
            set_.insert(t);
        }
    }
    std::vector<std::uint64_t> take() {
        std::vector<std::uint64_t> v(set_.begin(), set_.end());
        std::sort(v.begin(), v.end());
        return v;
    }

private:
    std::unordered_set<std::uint64_t> set_;
    std::size_t limit_;
};

}  // namespace

TensorElement tensor_mul(const TensorElement& a, const TensorElement& b,
                         const EvalLimits& limits) {
    if (!(a.ring() == b.ring())) throw std::invalid_argument("tensor_mul: ring mismatch");
    const TensorRing& TR = a.ring();
    const Ring& R = TR.base();
    int s = TR.s();
    std::uint64_t B = TR.B();
    TupleAcc acc(limits.max_terms);
    std::vector<Bits> comp(s);
    for (auto ta : a.terms()) {
        for (auto tb : b.terms()) {
            std::uint64_t ua = ta, ub = tb;
            bool dead = false;
            for (int i = 0; i < s && !dead; ++i) {
                comp[i] = R.empty_element();
                R.mul_basis_into(static_cast<BasisRank>(ua % B), static_cast<BasisRank>(ub % B),
                                 comp[i]);
                if (comp[i].none()) dead = true;
                ua /= B;
                ub /= B;
            }
            if (dead) continue;
            /* expand the product of the per-component sums */
            std::vector<std::uint64_t> partial{0};
            std::uint64_t w = 1;
            for (int i = 0; i < s; ++i) {
                std::vector<std::uint64_t> next;
                next.reserve(partial.size() * comp[i].count());
                comp[i].for_each_set([&](std::size_t r) {
                    for (auto p : partial) next.push_back(p + w * r);
                });
                partial = std::move(next);
                w *= B;
            }
            for (auto p : partial) acc.toggle(p);
        }
    }
    return TensorElement(TR, acc.take());
}

namespace {

/* per-factor polynomial in (factor 1) x (own factor): rows indexed by the
 * own-factor basis rank, row bits over factor-1 ranks */
struct PairTable {
    std::vector<Bits> rows;
    explicit PairTable(const Ring& R) : rows(R.basis_size(), Bits(R.basis_size())) {}
    std::size_t term_count() const {
        std::size_t n = 0;
        for (const auto& r : rows) n += r.count();
        return n;
    }
};

std::vector<long long> submasks_of(long long n) {
    if (std::popcount(static_cast<unsigned long long>(n)) > 24)
        throw ResourceLimitError("binomial expansion too wide", 1u << 24);
    std::vector<long long> out;
    long long t = n;
    for (;;) {
        out.push_back(t);
        if (t == 0) break;
        t = (t - 1) & n;
    }
    return out;
}

void mul_pair_by_z_power(const Ring& R, PairTable& P, int j, long long n,
                         const EvalLimits& limits) {
    PairTable out(R);
    auto ts = submasks_of(n);
    Bits own(R.basis_size());
    Bits left(R.basis_size());
    for (std::size_t b = 0; b < P.rows.size(); ++b) {
        if (P.rows[b].none()) continue;
        for (long long t : ts) {
            own.reset();
            R.mul_basis_by_gen_power_into(static_cast<BasisRank>(b), j, t, own);
            if (own.none()) continue;
            left.reset();
            P.rows[b].for_each_set([&](std::size_t a) {
                R.mul_basis_by_gen_power_into(static_cast<BasisRank>(a), j, n - t, left);
            });
            if (left.none()) continue;
            own.for_each_set([&](std::size_t b2) { out.rows[b2] ^= left; });
        }
    }
    P.rows = std::move(out.rows);
    if (P.term_count() > limits.max_terms)
        throw ResourceLimitError("pair-table term count exceeded the ceiling", limits.max_terms);
}

/* exponents per generator for each tensor factor (index 2..s), gaps = 0 */
std::vector<std::vector<long long>> group_by_factor(const TensorRing& ring,
                                                    const ZDProductSpec& spec) {
    const Ring& R = ring.base();
    std::vector<std::vector<long long>> per(ring.s() + 1);
    for (auto& v : per) v.assign(R.generator_count(), 0);
    for (const auto& f : spec.canonical().factors) {
        if (f.factor < 2 || f.factor > ring.s())
            throw std::invalid_argument("zero-divisor factor index out of range for s=" +
                                        std::to_string(ring.s()));
        if (f.gen < 1 || static_cast<std::size_t>(f.gen) > R.generator_count())
            throw std::invalid_argument("zero-divisor generator index out of range");
        per[f.factor][f.gen - 1] += f.exp;
    }
    return per;
}

PairTable build_factor_table(const Ring& R, std::span<const long long> exps,
                             const EvalLimits& limits) {
    PairTable P(R);
    P.rows[R.one_rank()].set(R.one_rank());
    for (std::size_t j = 0; j < exps.size(); ++j)
        if (exps[j] > 0) mul_pair_by_z_power(R, P, static_cast<int>(j + 1), exps[j], limits);
    return P;
}

}  // namespace

TensorElement evaluate_zd_product(const TensorRing& ring, const ZDProductSpec& spec,
                                  const EvalLimits& limits) {
    const Ring& R = ring.base();
    int s = ring.s();
    std::uint64_t B = ring.B();
    auto per = group_by_factor(ring, spec);

    if (s == 2) {
        bool empty = true;
        for (auto e : per[2])
            if (e) empty = false;
        std::vector<std::uint64_t> terms;
        if (empty) {
            std::vector<BasisRank> ones(2, static_cast<BasisRank>(R.one_rank()));
            terms.push_back(ring.pack(ones));
            return TensorElement(ring, std::move(terms));
        }
        PairTable P = build_factor_table(R, per[2], limits);
        for (std::size_t b = 0; b < P.rows.size(); ++b)
            P.rows[b].for_each_set([&](std::size_t a) { terms.push_back(a + B * b); });
        return TensorElement(ring, std::move(terms));
    }

    /* suffix map: packed ranks of factors 2..i -> bits over factor 1 */
    std::unordered_map<std::uint64_t, Bits> cur;
    Bits unit(R.basis_size());
    unit.set(R.one_rank());
    cur.emplace(0, std::move(unit));
    std::uint64_t w = 1;
    for (int i = 2; i <= s; ++i) {
        bool empty = true;
        for (auto e : per[i])
            if (e) empty = false;
        std::unordered_map<std::uint64_t, Bits> next;
        if (empty) {
            for (auto& [suffix, bits] : cur)
                next.emplace(suffix + w * R.one_rank(), std::move(bits));
        } else {
            PairTable P = build_factor_table(R, per[i], limits);
            for (auto& [suffix, bits] : cur) {
                for (std::size_t b = 0; b < P.rows.size(); ++b) {
                    if (P.rows[b].none()) continue;
                    Bits prod(R.basis_size());
                    bits.for_each_set([&](std::size_t a) {
                        P.rows[b].for_each_set([&](std::size_t a2) {
                            R.mul_basis_into(static_cast<BasisRank>(a),
                                             static_cast<BasisRank>(a2), prod);
                        });
                    });
                    if (prod.none()) continue;
                    auto [it, fresh] = next.try_emplace(suffix + w * b, R.basis_size());
                    (void)fresh;
                    it->second ^= prod;
                    if (it->second.none()) next.erase(it);
                    else if (next.size() > limits.max_terms)
                        throw ResourceLimitError("tensor accumulation exceeded the ceiling",
                                                 limits.max_terms);
                }
            }
            std::size_t total = 0;
            for (auto& [suffix, bits] : next) {
                (void)suffix;
                total += bits.count();
                if (total > limits.max_terms)
                    throw ResourceLimitError("tensor term count exceeded the ceiling",
                                             limits.max_terms);
            }
        }
        cur = std::move(next);
        w *= B;
    }

    std::vector<std::uint64_t> terms;
    for (auto& [suffix, bits] : cur) {
        bits.for_each_set([&](std::size_t a) { terms.push_back(a + B * suffix); });
        if (terms.size() > limits.max_terms)
            throw ResourceLimitError("tensor term count exceeded the ceiling", limits.max_terms);
    }
    return TensorElement(ring, std::move(terms));
}

int coefficient_of(const TensorElement& a, std::span<const BasisRank> tuple) {
    return a.contains(a.ring().pack(tuple)) ? 1 : 0;
}

RingElement flag_factor_top_projection(const FlagRing& ring, std::span<const long long> exps) {
    int k = ring.k();
    if (exps.size() != static_cast<std::size_t>(k))
        throw std::invalid_argument("flag_factor_top_projection: exponent arity mismatch");
    int dim = ring.dim();
    RingElement q(ring);
    /* split each z^n by Lucas; keep own-factor parts t with |t| = dim that
     * hit the top class, tally the factor-1 parts x^{n-t} */
    std::vector<std::vector<long long>> masks(k);
    std::vector<long long> suffix_max(k + 1, 0);
    for (int j = 0; j < k; ++j) masks[j] = submasks_of(exps[j]);
    for (int j = k - 1; j >= 0; --j)
        suffix_max[j] = suffix_max[j + 1] + std::min<long long>(exps[j], ring.m() + k - 1);
    Exps t(k, 0), left(k, 0);
    auto rec = [&](auto&& self, int j, long long got) -> void {
        if (got > dim || got + suffix_max[j] < dim) return;
        if (j == k) {
            if (ring.ctop_raw(t) == 0) return;
            q ^= ring.nf_monomial(left);
            return;
        }
        for (long long tj : masks[j]) {
            if (tj >= ring.m() + k) continue;  // own part would carry a vanishing power
            t[j] = static_cast<Exp>(tj);
            long long lj = exps[j] - tj;
            if (lj > 60000) continue;
            left[j] = static_cast<Exp>(lj);
            self(self, j + 1, got + tj);
        }
    };
    rec(rec, 0, 0);
    return q;
}

RingElement factor_top_projection(const Ring& R, std::span<const long long> exps,
                                  const EvalLimits& limits) {
    if (const auto* fr = dynamic_cast<const FlagRing*>(&R))
        return flag_factor_top_projection(*fr, exps);
    PairTable P = build_factor_table(R, exps, limits);
    RingElement q(R);
    q.bits() = P.rows[R.top_rank()];
    return q;
}

int top_coefficient(const TensorRing& ring, const ZDProductSpec& spec, const EvalLimits& limits) {
    const Ring& R = ring.base();
    if (spec.degree() != ring.top_degree())
        throw std::invalid_argument("top_coefficient: spec degree " +
                                    std::to_string(spec.degree()) + " != top degree " +
                                    std::to_string(ring.top_degree()));
    auto per = group_by_factor(ring, spec);
    RingElement cur(R);
    cur.bits().set(R.one_rank());
    for (int i = 2; i < ring.s(); ++i) {
        RingElement q = factor_top_projection(R, per[i], limits);
        if (q.is_zero()) return 0;
        cur = ring_mul(cur, q);
        if (cur.is_zero()) return 0;
    }
    RingElement last = factor_top_projection(R, per[ring.s()], limits);
    int parity = 0;
    cur.bits().for_each_set([&](std::size_t a) {
        last.bits().for_each_set([&](std::size_t b) {
            parity ^= R.ctop_basis_pair(static_cast<BasisRank>(a), static_cast<BasisRank>(b));
        });
    });
    return parity;
}

TensorElement pad_with_top_factor(const TensorElement& a, const EvalLimits& limits) {
    if (a.is_zero()) throw std::invalid_argument("pad_with_top_factor: element is zero");
    const TensorRing& TR = a.ring();
    const auto* fr = dynamic_cast<const FlagRing*>(&TR.base());
    if (!fr)
        throw std::invalid_argument("pad_with_top_factor: flag-manifold base required");
    const FlagRing& R = *fr;
    int k = R.k();
    TensorRing out_ring(R, TR.s() + 1);
    std::uint64_t B = TR.B();
    std::uint64_t wlast = 1;
    for (int i = 0; i < TR.s(); ++i) wlast *= B;

    /* expansion of prod_j z_{s+1,j}^{bound(j)}: every split lands in the
     * basis on both sides, so the terms are just (x^{b-t}, x^t) pairs */
    std::vector<std::pair<BasisRank, BasisRank>> pairs;  // (factor-1 part, new-factor part)
    Exps t(k, 0), left(k, 0);
    auto rec = [&](auto&& self, int j) -> void {
        if (j == k) {
            pairs.emplace_back(R.rank_of(left), R.rank_of(t));
            return;
        }
        for (long long tj : submasks_of(R.bound(j + 1))) {
            t[j] = static_cast<Exp>(tj);
            left[j] = static_cast<Exp>(R.bound(j + 1) - tj);
            self(self, j + 1);
        }
    };
    rec(rec, 0);

    TupleAcc acc(limits.max_terms);
    Bits prod(R.basis_size());
    for (auto term : a.terms()) {
        BasisRank first = static_cast<BasisRank>(term % B);
        std::uint64_t rest = term - first;
        for (auto [lpart, npart] : pairs) {
            prod.reset();
            R.mul_basis_into(first, lpart, prod);
            prod.for_each_set([&](std::size_t a1) {
                acc.toggle(a1 + rest + wlast * npart);
            });
        }
    }
    return TensorElement(out_ring, acc.take());
}

RingElement diagonal_image(const TensorElement& a) {
    const TensorRing& TR = a.ring();
    const Ring& R = TR.base();
    std::uint64_t B = TR.B();
    RingElement out(R);
    for (auto term : a.terms()) {
        RingElement cur(R);
        cur.bits().set(static_cast<BasisRank>(term % B));
        std::uint64_t rest = term / B;
        for (int i = 1; i < TR.s(); ++i) {
            RingElement nxt(R);
            cur.bits().for_each_set([&](std::size_t x) {
                R.mul_basis_into(static_cast<BasisRank>(x), static_cast<BasisRank>(rest % B),
                                 nxt.bits());
            });
            cur = std::move(nxt);
            rest /= B;
            if (cur.is_zero()) break;
        }
        out ^= cur;
    }
    return out;
}

TensorElement embed_rp2(const TensorRing& target, const TensorElement& p) {
    const auto* sr = dynamic_cast<const SurfaceRing*>(&target.base());
    if (!sr) throw std::invalid_argument("embed_rp2: surface tensor ring required");
    const auto* fr = dynamic_cast<const FlagRing*>(&p.ring().base());
    if (!fr || fr->k() != 1 || fr->m() != 2)
        throw std::invalid_argument("embed_rp2: source must be a power of H*(F(1,2))");
    if (p.ring().s() != target.s()) throw std::invalid_argument("embed_rp2: s mismatch");
    /* F(1,2) ranks 0,1,2 (1, x1, x1^2) -> surface ranks (1, a1, T) */
    BasisRank map[3] = {sr->one_rank(), sr->generator_rank(1), sr->top_rank()};
    std::uint64_t Bsrc = p.ring().B();
    std::vector<std::uint64_t> terms;
    for (auto term : p.terms()) {
        std::uint64_t out = 0, w = 1;
        for (int i = 0; i < target.s(); ++i) {
            out += w * map[term % Bsrc];
            term /= Bsrc;
            w *= target.B();
        }
        terms.push_back(out);
    }
    return TensorElement(target, std::move(terms));
}

}  // namespace flagtc

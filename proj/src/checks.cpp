#include "flagtc/checks.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "flagtc/surface_ring.hpp"
#include "flagtc/zcl.hpp"

namespace flagtc {

namespace {

/* ------------------------------------------------------------------ */
/* Independent linear-algebra oracle: the degree-d slice of the relation
 * ideal is spanned by monomial multiples of h_{m+i}(x_1..x_{k+1-i}); row
 * reduction over GF(2) then projects any monomial onto the residue basis.
 * Nothing here touches the rewrite engine. */

void each_monomial(int vars, int degree, Exps& cur, int pos,
                   const std::function<void(const Exps&)>& fn) {
    if (pos == vars - 1) {
        cur[pos] = static_cast<Exp>(degree);
        fn(cur);
        return;
    }
    for (int v = 0; v <= degree; ++v) {
        cur[pos] = static_cast<Exp>(v);
        each_monomial(vars, degree - v, cur, pos + 1, fn);
    }
}

void each_monomial(int vars, int degree, const std::function<void(const Exps&)>& fn) {
    Exps cur(vars, 0);
    if (vars == 0) return;
    each_monomial(vars, degree, cur, 0, fn);
}

/* h_t in the first nv of k variables, by plain enumeration */
std::vector<Exps> oracle_h(int t, int nv, int k) {
    std::vector<Exps> out;
    if (t == 0) {
        out.push_back(Exps(k, 0));
        return out;
    }
    if (nv == 0) return out;
    each_monomial(nv, t, [&](const Exps& m) {
        Exps full(k, 0);
        std::copy(m.begin(), m.end(), full.begin());
        out.push_back(full);
    });
    return out;
}

class NFOracle {
public:
    NFOracle(int k, int m) : k_(k), m_(m), dim_(k * m + k * (k - 1) / 2) {
        for (int i = 1; i <= k_; ++i) relations_.push_back(oracle_h(m_ + i, k_ + 1 - i, k_));
        degrees_.resize(dim_ + 1);
        for (int d = 0; d <= dim_; ++d) build_degree(d);
    }

    int dim() const { return dim_; }

    /* engine-independent normal form of a degree-d monomial, as the set of
     * residue (in-box) monomials */
    std::vector<Exps> reduce(const Exps& mono) const {
        int d = 0;
        for (Exp e : mono) d += e;
        const Slice& sl = degrees_[d];
        Bits vec(sl.cols.size());
        vec.set(sl.index.at(mono));
        for (const auto& row : sl.rows) {
            std::size_t pivot = row.second;
            if (vec.test(pivot)) vec ^= row.first;
        }
        std::vector<Exps> out;
        vec.for_each_set([&](std::size_t c) { out.push_back(sl.cols[c]); });
        return out;
    }

    /* pivots must be exactly the out-of-box monomials */
    bool pivots_match_box(int d) const { return degrees_[d].pivots_ok; }
    std::size_t residue_count(int d) const { return degrees_[d].residue_count; }

private:
    struct Slice {
        std::vector<Exps> cols;            // out-of-box monomials first
        std::map<Exps, std::size_t> index;
        std::vector<std::pair<Bits, std::size_t>> rows;  // reduced row, pivot col
        bool pivots_ok = true;
        std::size_t residue_count = 0;
    };

    bool in_box(const Exps& e) const {
        for (int i = 0; i < k_; ++i)
            if (e[i] > m_ + k_ - 1 - i) return false;
        return true;
    }

    void build_degree(int d) {
        Slice& sl = degrees_[d];
        std::vector<Exps> boxed;
        each_monomial(k_, d, [&](const Exps& m) {
            if (in_box(m))
                boxed.push_back(m);
            else
                sl.cols.push_back(m);
        });
        std::size_t nonbox = sl.cols.size();
        sl.cols.insert(sl.cols.end(), boxed.begin(), boxed.end());
        for (std::size_t c = 0; c < sl.cols.size(); ++c) sl.index[sl.cols[c]] = c;

        for (int i = 1; i <= k_; ++i) {
            int rel_deg = m_ + i;
            if (d < rel_deg) continue;
            each_monomial(k_, d - rel_deg, [&](const Exps& mu) {
                Bits row(sl.cols.size());
                for (const auto& term : relations_[i - 1]) {
                    Exps prod(k_);
                    for (int q = 0; q < k_; ++q) prod[q] = static_cast<Exp>(mu[q] + term[q]);
                    row.flip(sl.index.at(prod));
                }
                for (const auto& r : sl.rows)
                    if (row.test(r.second)) row ^= r.first;
                if (row.any()) {
                    std::size_t pivot = 0;
                    for (std::size_t c = 0; c < sl.cols.size(); ++c)
                        if (row.test(c)) {
                            pivot = c;
                            break;
                        }
                    if (pivot >= nonbox) sl.pivots_ok = false;
                    sl.rows.push_back({std::move(row), pivot});
                }
            });
        }
        if (sl.rows.size() != nonbox) sl.pivots_ok = false;
        sl.residue_count = sl.cols.size() - sl.rows.size();
    }

    int k_, m_, dim_;
    std::vector<std::vector<Exps>> relations_;
    std::vector<Slice> degrees_;
};

/* ------------------------------------------------------------------ */

struct Suite {
    const SuiteOptions& opt;
    std::vector<CriterionResult> out;
    CriterionResult* cur = nullptr;

    explicit Suite(const SuiteOptions& o) : opt(o) {}

    void begin(int number, const std::string& title, bool long_running = false) {
        out.push_back({});
        cur = &out.back();
        cur->number = number;
        cur->title = title;
        cur->long_running = long_running;
    }
    void item(const std::string& id, bool pass, const std::string& detail = "") {
        cur->items.push_back({id, pass, detail});
        if (!pass) cur->pass = false;
    }
};

std::string bounds_str(long long lo, long long hi) {
    return "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

std::uint64_t lcg_next(std::uint64_t& state) {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
}

void criterion_ring_structure(Suite& S) {
    S.begin(1, "ring structure: rewrite engine vs row-reduction oracle, k<=3 m<=4");
    for (int k = 1; k <= 3; ++k) {
        for (int m = 1; m <= 4; ++m) {
            FlagRing ring(k, m);
            NFOracle oracle(k, m);
            std::string tag = ring.describe();
            bool nf_ok = true, rank_ok = true;
            long long mismatches = 0;
            for (int d = 0; d <= ring.dim(); ++d) {
                if (!oracle.pivots_match_box(d)) rank_ok = false;
                if (oracle.residue_count(d) !=
                    ring.degree_slice(d).size())
                    rank_ok = false;
                each_monomial(k, d, [&](const Exps& mono) {
                    auto expect = oracle.reduce(mono);
                    RingElement got = ring.normal_form(RawPoly(k, {Monomial{mono}}));
                    Bits want = ring.empty_element();
                    for (const auto& e : expect) want.flip(ring.rank_of(e));
                    if (!(want == got.bits())) {
                        nf_ok = false;
                        ++mismatches;
                    }
                });
            }
            S.item("oracle-normal-form " + tag, nf_ok,
                   mismatches ? std::to_string(mismatches) + " mismatches" : "");
            S.item("oracle-rank-ledger " + tag, rank_ok);
            long long count = 1;
            for (int i = 1; i <= k; ++i) count *= (m + i);
            auto pc = ring.poincare_polynomial();
            long long pcsum = 0;
            bool slice_ok = pc.size() == static_cast<std::size_t>(ring.dim()) + 1;
            for (std::size_t d = 0; d < pc.size(); ++d) {
                pcsum += pc[d];
                if (slice_ok &&
                    pc[d] != static_cast<long long>(ring.degree_slice(static_cast<int>(d)).size()))
                    slice_ok = false;
            }
            S.item("basis-count " + tag, static_cast<long long>(ring.basis_size()) == count &&
                                             pcsum == count);
            S.item("poincare-slices " + tag, slice_ok);
        }
    }
}

void criterion_structural_relations(Suite& S, bool inject_fault) {
    S.begin(2, "structural relations: extended, annihilator, tau, k<=4 m<=5");
    if (inject_fault) {
        /* run the relation checks against a ring with one corrupted rewrite
         * rule; these items are expected to fail, driving a nonzero exit */
        FlagRing bad(2, 1, FlagRing::Tamper{2, 1});
        S.item("extended-relations F(1^2,1) [fault injected]",
               bad.verify_extended_relations().all_pass(),
               "one bit of the x2 rule was deliberately flipped");
        S.item("annihilator F(1^2,1) [fault injected]", bad.verify_annihilator().all_pass(),
               "one bit of the x2 rule was deliberately flipped");
    }
    for (int k = 1; k <= 4; ++k) {
        for (int m = 1; m <= 5; ++m) {
            FlagRing ring(k, m);
            std::string tag = ring.describe();
            auto ext = ring.verify_extended_relations();
            S.item("extended-relations " + tag, ext.all_pass(),
                   std::to_string(ext.items.size()) + " instances");
            auto ann = ring.verify_annihilator();
            S.item("annihilator " + tag, ann.all_pass());
            auto tau = ring.verify_tau_relations();
            S.item("tau-relations " + tag, tau.all_pass(),
                   std::to_string(tau.items.size()) + " instances");
        }
    }
}

void criterion_heights(Suite& S) {
    S.begin(3, "heights and top class, k<=4 m<=5");
    for (int k = 1; k <= 4; ++k) {
        for (int m = 1; m <= 5; ++m) {
            FlagRing ring(k, m);
            std::string tag = ring.describe();
            bool ok = true;
            for (int i = 1; i <= k; ++i) {
                RingElement alive =
                    ring.normal_form(RawPoly::generator(k, i, static_cast<Exp>(m + k - 1)));
                RingElement dead =
                    ring.normal_form(RawPoly::generator(k, i, static_cast<Exp>(m + k)));
                if (alive.is_zero() || !dead.is_zero()) ok = false;
            }
            S.item("heights " + tag, ok);
            Monomial top = Monomial::unit(k);
            for (int i = 1; i <= k; ++i) top.e[i - 1] = static_cast<Exp>(m + k - i);
            RingElement t = ring.normal_form(RawPoly(k, {top}));
            S.item("top-class " + tag, !t.is_zero() && t.term_count() == 1 &&
                                           t.bits().test(ring.top_rank()));
        }
    }
}

ZDProductSpec power_product(int k, long long e, int factor = 2) {
    ZDProductSpec spec;
    for (int j = 1; j <= k; ++j) spec.factors.push_back({factor, j, e});
    return spec;
}

void criterion_two_factor_certificates(Suite& S, const EvalLimits& limits) {
    S.begin(4, "two-factor certificates in F(1^k,2^e) and F(1^k,2^e-1)");
    const std::pair<int, int> cases[] = {{1, 1}, {1, 2}, {2, 1}, {2, 2}, {3, 1}};
    for (auto [k, e] : cases) {
        long long p = 1LL << e;
        FlagRing ring(k, static_cast<int>(p));
        TensorRing TR(ring, 2);
        auto el = evaluate_zd_product(TR, power_product(k, 2 * p - 1), limits);
        S.item("(z1..z" + std::to_string(k) + ")^" + std::to_string(2 * p - 1) + " nonzero in " +
                   ring.describe() + "(x)2",
               !el.is_zero(), std::to_string(el.term_count()) + " terms");
    }
    for (int e : {2, 3}) {
        long long p = 1LL << e;
        FlagRing ring(2, static_cast<int>(p - 1));
        TensorRing TR(ring, 2);
        ZDProductSpec spec;
        spec.factors = {{2, 1, 2 * p - 1}, {2, 2, 2 * p - 2}};
        auto el = evaluate_zd_product(TR, spec, limits);
        auto rank2 = [&](long long a, long long b) {
            Exps ev = {static_cast<Exp>(a), static_cast<Exp>(b)};
            return ring.rank_of(ev);
        };
        std::vector<BasisRank> t1 = {rank2(p, p - 2), rank2(p, p - 1)};
        std::vector<BasisRank> t2 = {rank2(p, p - 1), rank2(p, p - 2)};
        std::vector<std::uint64_t> expected = {TR.pack(t1), TR.pack(t2)};
        TensorElement want(TR, std::move(expected));
        S.item("closed form z1^" + std::to_string(2 * p - 1) + "z2^" + std::to_string(2 * p - 2) +
                   " in " + ring.describe() + "(x)2",
               el == want, "two basis terms");
    }
    {
        FlagRing ring(3, 2);
        TensorRing TR(ring, 2);
        ZDProductSpec spec;
        spec.factors = {{2, 1, 7}, {2, 2, 6}, {2, 3, 3}};
        S.item("z1^7 z2^6 z3^3 nonzero in F(1^3,2)(x)2",
               !evaluate_zd_product(TR, spec, limits).is_zero());
    }
}

void criterion_coefficient_witnesses(Suite& S, const EvalLimits& limits) {
    S.begin(5, "coefficient witnesses at k=2, e=2");
    {
        FlagRing ring(2, 4);
        TensorRing TR(ring, 2);
        auto el = evaluate_zd_product(TR, power_product(2, 7), limits);
        Exps l = {2, 3}, r = {5, 4};
        std::vector<BasisRank> tup = {ring.rank_of(l), ring.rank_of(r)};
        S.item("basis witness in (z1z2)^7 over F(1^2,4)(x)2", coefficient_of(el, tup) == 1);
    }
    {
        FlagRing ring(2, 3);
        TensorRing TR(ring, 2);
        ZDProductSpec spec;
        spec.factors = {{2, 1, 7}, {2, 2, 6}};
        auto el = evaluate_zd_product(TR, spec, limits);
        Exps b1l = {4, 2}, b1r = {4, 3}, b2l = {4, 3}, b2r = {4, 2};
        std::vector<BasisRank> t1 = {ring.rank_of(b1l), ring.rank_of(b1r)};
        std::vector<BasisRank> t2 = {ring.rank_of(b2l), ring.rank_of(b2r)};
        S.item("beta1 in z1^7 z2^6 over F(1^2,3)(x)2", coefficient_of(el, t1) == 1);
        S.item("beta2 in z1^7 z2^6 over F(1^2,3)(x)2", coefficient_of(el, t2) == 1);
    }
}

void criterion_sharpness(Suite& S, const EvalLimits& limits, bool include_long) {
    S.begin(6, "sharpness of the odd family: (z1..zk)^{2^{e+1}-1} = 0 at m = 2^e-1");
    S.item("sharpness k=2 e=2", sharpness_check(2, 2, limits));
    S.item("sharpness k=3 e=2", sharpness_check(3, 2, limits));
    {
        FlagRing ring(3, 3);
        TensorRing TR(ring, 2);
        ZDProductSpec spec;
        spec.factors = {{2, 1, 7}, {2, 2, 7}, {2, 3, 6}};
        auto el = evaluate_zd_product(TR, spec, limits);
        S.item("16-term expansion at k=3 e=2", el.term_count() == 16,
               std::to_string(el.term_count()) + " terms");
    }
    {
        FlagRing ring(4, 3);
        TensorRing TR(ring, 2);
        ZDProductSpec spec;
        spec.factors = {{2, 1, 7}, {2, 2, 7}, {2, 3, 7}, {2, 4, 6}};
        auto el = evaluate_zd_product(TR, spec, limits);
        S.item("1128-term expansion at k=4 e=2", el.term_count() == 1128,
               std::to_string(el.term_count()) + " terms");
    }
    if (include_long) S.item("sharpness k=4 e=2 (long)", sharpness_check(4, 2, limits));
}

void check_report(Suite& S, const std::string& id, const TCBound& b, long long lo, long long hi) {
    std::ostringstream os;
    os << "got " << bounds_str(b.lower, b.upper) << ", want " << bounds_str(lo, hi);
    S.item(id, b.lower == lo && b.upper == hi, os.str());
}

void criterion_complete_flags(Suite& S, const EvalLimits& limits) {
    S.begin(7, "complete flags: F5 witness and interval reports");
    {
        FlagRing ring(4, 1);
        TensorRing TR(ring, 2);
        ZDProductSpec spec = parse_zd_spec("z[2,1]^7*z[2,2]^6*z[2,3]^3*z[2,4]^2");
        S.item("z1^7 z2^6 z3^3 z4^2 nonzero in F(1^4,1)(x)2",
               !evaluate_zd_product(TR, spec, limits).is_zero());
    }
    ReportOptions ropt;
    ropt.limits = limits;
    check_report(S, "tc-report F(1,1,1) s=2", tc_report(FlagSpace{2, 1}, 2, ropt), 5, 6);
    check_report(S, "tc-report F(1,1,3) s=2", tc_report(FlagSpace{2, 3}, 2, ropt), 13, 14);
    {
        TCBound b = tc_report(FlagSpace{4, 1}, 2, ropt);
        bool witness_ok = b.witness && format_zd_spec(*b.witness) ==
                                           "z[2,1]^7*z[2,2]^6*z[2,3]^3*z[2,4]^2";
        S.item("tc-report F(1^4,1) s=2 = [18,20] via recorded witness",
               b.lower == 18 && b.upper == 20 && witness_ok,
               bounds_str(b.lower, b.upper) + " provenance=" + b.provenance);
    }
    {
        TCBound b = tc_report(FlagSpace{3, 2}, 2, ropt);
        S.item("tc-report F(1^3,2) s=2 inside [16,18]",
               b.lower >= 16 && b.upper <= 18 && b.lower <= b.upper,
               bounds_str(b.lower, b.upper));
    }
    {
        /* the delta-maximization example: delta=2,e=3 beats delta=0,e=2 */
        bool ok = closed_form_lower_bound(3, 6, 2, 3) == 36 && closed_form_lower_bound(3, 6, 0, 2) == 21;
        TCBound b = tc_report(FlagSpace{3, 6}, 2, ropt);
        S.item("delta maximization for F(1^3,6)", ok && b.lower == 36 && b.upper == 42,
               bounds_str(b.lower, b.upper));
    }
}

void criterion_higher_certificates(Suite& S, const EvalLimits& limits) {
    S.begin(8, "threefold certificates and sharp TC_s values");
    struct Case {
        int k, e;
    };
    for (auto [k, e] : {Case{1, 1}, Case{1, 2}, Case{2, 1}, Case{2, 2}, Case{3, 2}}) {
        HigherCertificate h = higher_certificate(k, e, 3);
        FlagRing ring(h.space.k, h.space.m);
        TensorRing TR(ring, 3);
        int c = top_coefficient(TR, h.spec, limits);
        S.item("top coefficient of " + h.family + " e=" + std::to_string(e) + " in " +
                   ring.describe() + "(x)3",
               c == 1);
        ReportOptions ropt;
        ropt.limits = limits;
        TCBound b = tc_report(h.space, 3, ropt);
        S.item("tc-report " + ring.describe() + " s=3 sharp", b.lower == b.upper &&
                                                                  b.lower == h.lower,
               bounds_str(b.lower, b.upper));
    }
    {
        HigherCertificate h = even_k2_certificate(2, 3);
        FlagRing ring(2, 4);
        TensorRing TR(ring, 3);
        S.item("even-family witness nonzero in F(1,1,4)(x)3",
               !evaluate_zd_product(TR, h.spec, limits).is_zero());
        ReportOptions ropt;
        ropt.limits = limits;
        TCBound b = tc_report(FlagSpace{2, 4}, 3, ropt);
        S.item("tc-report F(1,1,4) s=3 = [26,27]", b.lower == 26 && b.upper == 27,
               bounds_str(b.lower, b.upper));
    }
    {
        HigherCertificate h = f112_certificate(3);
        FlagRing ring(2, 2);
        TensorRing TR(ring, 3);
        S.item("F(1,1,2) witness nonzero at s=3",
               !evaluate_zd_product(TR, h.spec, limits).is_zero());
        ReportOptions ropt;
        ropt.limits = limits;
        TCBound b = tc_report(FlagSpace{2, 2}, 3, ropt);
        S.item("tc-report F(1,1,2) s=3 = [12,15]", b.lower == 12 && b.upper == 15,
               bounds_str(b.lower, b.upper));
    }
}

void criterion_search_f5(Suite& S, const SuiteOptions& opt) {
    S.begin(9, "search reproduction: threefold products on F(1^4,1)");
    FlagRing ring(4, 1);
    ZDProductSpec prefix = parse_zd_spec("z[2,1]^7*z[2,2]^6*z[2,3]^3*z[2,4]^2");
    SearchOptions sopt;
    sopt.limits = opt.limits;
    sopt.workers = opt.workers;
    auto res = exhaustive_search(ring, 3, prefix, {{3, 1}, {3, 2}, {3, 3}, {3, 4}}, 12, sopt);
    std::vector<long long> wanted = {1, 3, 5, 3};
    bool has = std::find(res.solutions.begin(), res.solutions.end(), wanted) !=
               res.solutions.end();
    S.item("six solutions at z3-degree 12", res.solutions.size() == 6,
           std::to_string(res.solutions.size()) + " of " + std::to_string(res.candidates) +
               " candidates");
    S.item("(1,3,5,3) among them", has);
}

void criterion_long_searches(Suite& S, const SuiteOptions& opt) {
    S.begin(10, "extended searches on F(1^4,5)", true);
    if (!opt.include_long) {
        S.item("skipped (enable with --include-long)", true, "gated");
        return;
    }
    FlagRing ring(4, 5);
    SearchOptions sopt;
    sopt.limits = opt.limits;
    sopt.workers = opt.workers;
    {
        ZDProductSpec prefix = parse_zd_spec("z[2,1]^15*z[2,2]^14*z[2,3]^7*z[2,4]^6");
        auto res = exhaustive_search(ring, 3, prefix, {{3, 1}, {3, 2}, {3, 3}, {3, 4}}, 36, sopt);
        S.item("no nonzero threefold product at z3-degree 36", res.solutions.empty(),
               std::to_string(res.candidates) + " candidates");
    }
    {
        ZDProductSpec prefix = parse_zd_spec(
            "z[2,1]^15*z[2,2]^14*z[2,3]^7*z[2,4]^6*z[3,1]^7*z[3,2]^7*z[3,3]^7*z[3,4]^14");
        auto res = exhaustive_search(ring, 4, prefix, {{4, 1}, {4, 2}, {4, 3}, {4, 4}}, 27, sopt);
        std::vector<long long> wanted = {5, 7, 7, 8};
        bool has = std::find(res.solutions.begin(), res.solutions.end(), wanted) !=
                   res.solutions.end();
        S.item("(5,7,7,8) extends the prefix to a nonzero fourfold product", has,
               std::to_string(res.solutions.size()) + " solutions of " +
                   std::to_string(res.candidates) + " candidates");
        /* the recorded count for this search shape; the engine measures 12
         * here (cross-checked against an independent evaluation route), so
         * a failure of this item reflects the recorded count, not a missing
         * witness */
        S.item("recorded solution count (96) at this shape", res.solutions.size() == 96,
               std::to_string(res.solutions.size()) + " found");
    }
}

void criterion_surfaces(Suite& S, const EvalLimits& limits) {
    S.begin(11, "surfaces: TC_s(N_n) = 2s");
    for (int n = 1; n <= 5; ++n) {
        bool all = true;
        for (int s : {3, 4, 5}) {
            TCBound b = verify_surface_tcs(n, s, limits);
            if (!(b.lower == 2 * s && b.upper == 2 * s)) all = false;
        }
        S.item("tc_s(N(" + std::to_string(n) + ")) = 2s for s in {3,4,5}", all);
    }
    for (int n = 1; n <= 5; ++n) {
        SurfaceRing ring(n);
        TensorRing TR(ring, 3);
        bool ok = true;
        for (int i = 2; i <= 3; ++i) {
            ZDProductSpec cube, fourth;
            cube.factors = {{i, 1, 3}};
            fourth.factors = {{i, 1, 4}};
            if (evaluate_zd_product(TR, cube, limits).is_zero()) ok = false;
            if (!evaluate_zd_product(TR, fourth, limits).is_zero()) ok = false;
        }
        S.item("c^3 nonzero, c^4 zero over N(" + std::to_string(n) + ")", ok);
    }
}

void criterion_properties(Suite& S, const SuiteOptions& opt) {
    S.begin(12, "gap monotonicity, padding, pruning");
    ReportOptions ropt;
    ropt.limits = opt.limits;
    {
        auto g = gap_sequence(1, 2, 5, ropt);
        bool ok = g[0].value == 1;
        for (std::size_t i = 1; i < g.size(); ++i) ok = ok && g[i].value == 0;
        S.item("gaps for F(1,2): 1,0,0,0", ok);
    }
    {
        auto g = gap_sequence(2, 2, 5, ropt);
        bool ok = g[0].value == 4;
        for (std::size_t i = 1; i < g.size(); ++i) ok = ok && g[i].value == 3;
        S.item("gaps for F(1,1,2): 4,3,3,3", ok);
    }
    {
        auto g = gap_sequence(2, 4, 5, ropt);
        bool ok = g[0].value == 4;
        for (std::size_t i = 1; i < g.size(); ++i) ok = ok && g[i].value == 1;
        S.item("gaps for F(1,1,4): 4,1,1,1", ok);
    }
    {
        auto g = gap_sequence(3, 2, 4, ropt);
        bool mono = true;
        for (std::size_t i = 1; i < g.size(); ++i) mono = mono && g[i].value <= g[i - 1].value;
        S.item("gap sequence F(1^3,2) nonincreasing", mono);
    }

    /* padding keeps random nonzero two-factor products nonzero */
    for (auto [k, m] : {std::pair{1, 2}, std::pair{2, 1}}) {
        FlagRing ring(k, m);
        TensorRing TR(ring, 2);
        long long cap = default_exponent_cap(ring);
        std::uint64_t state = 0x5eed0000 + 17 * k + m;
        int checked = 0, failures = 0;
        while (checked < 50) {
            ZDProductSpec spec;
            for (int j = 1; j <= k; ++j) {
                long long e = static_cast<long long>(lcg_next(state) % (cap + 1));
                if (e) spec.factors.push_back({2, j, e});
            }
            auto el = evaluate_zd_product(TR, spec, opt.limits);
            if (el.is_zero()) continue;
            ++checked;
            auto padded = pad_with_top_factor(el, opt.limits);
            if (padded.is_zero()) ++failures;
        }
        S.item("padding preserves nonvanishing on 50 products over " + ring.describe(),
               failures == 0);
    }

    /* pruned caps agree with an unpruned run */
    for (auto [k, m] : {std::pair{1, 2}, std::pair{2, 1}}) {
        FlagRing ring(k, m);
        bool same = true;
        std::vector<std::pair<int, int>> positions;
        for (int j = 1; j <= k; ++j) positions.push_back({2, j});
        for (long long d = 1; d <= 2 * ring.dim(); ++d) {
            SearchOptions pruned;
            pruned.limits = opt.limits;
            pruned.workers = opt.workers;
            SearchOptions wide = pruned;
            wide.caps.assign(positions.size(), d);
            auto a = exhaustive_search(ring, 2, {}, positions, d, pruned);
            auto b = exhaustive_search(ring, 2, {}, positions, d, wide);
            if (a.solutions != b.solutions) same = false;
        }
        S.item("pruned search = unpruned search over " + ring.describe() + "(x)2", same);
    }
}

}  // namespace

std::vector<CriterionResult> run_verification_suite(const SuiteOptions& opt) {
    Suite S(opt);
    auto timed = [&](auto&& fn) {
        auto t0 = std::chrono::steady_clock::now();
        fn();
        auto t1 = std::chrono::steady_clock::now();
        S.cur->seconds = std::chrono::duration<double>(t1 - t0).count();
    };
    timed([&] { criterion_ring_structure(S); });
    timed([&] { criterion_structural_relations(S, opt.inject_fault); });
    timed([&] { criterion_heights(S); });
    timed([&] { criterion_two_factor_certificates(S, opt.limits); });
    timed([&] { criterion_coefficient_witnesses(S, opt.limits); });
    timed([&] { criterion_sharpness(S, opt.limits, opt.include_long); });
    timed([&] { criterion_complete_flags(S, opt.limits); });
    timed([&] { criterion_higher_certificates(S, opt.limits); });
    timed([&] { criterion_search_f5(S, opt); });
    timed([&] { criterion_long_searches(S, opt); });
    timed([&] { criterion_surfaces(S, opt.limits); });
    timed([&] { criterion_properties(S, opt); });
    return S.out;
}

bool suite_passed(const std::vector<CriterionResult>& results) {
    for (const auto& c : results)
        if (!c.pass) return false;
    return true;
}

}  // namespace flagtc

#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "flagtc/flag_ring.hpp"

using namespace flagtc;

namespace {

std::uint64_t rng_state = 0xfeedface12345678ull;
std::uint64_t rnd() {
    rng_state ^= rng_state << 13;
    rng_state ^= rng_state >> 7;
    rng_state ^= rng_state << 17;
    return rng_state;
}

RawPoly random_poly(std::size_t k, int max_terms, int max_exp) {
    std::vector<Monomial> terms;
    int n = 1 + static_cast<int>(rnd() % max_terms);
    for (int t = 0; t < n; ++t) {
        Monomial m = Monomial::unit(k);
        for (std::size_t i = 0; i < k; ++i) m.e[i] = static_cast<Exp>(rnd() % (max_exp + 1));
        terms.push_back(std::move(m));
    }
    return RawPoly(k, std::move(terms));
}

/* homogeneous random polynomial of the given degree */
RawPoly random_homogeneous(const FlagRing& ring, int degree, int max_terms) {
    std::size_t k = ring.k();
    std::vector<Monomial> terms;
    int n = 1 + static_cast<int>(rnd() % max_terms);
    for (int t = 0; t < n; ++t) {
        Monomial m = Monomial::unit(k);
        int left = degree;
        for (std::size_t i = 0; i + 1 < k; ++i) {
            int v = static_cast<int>(rnd() % (left + 1));
            m.e[i] = static_cast<Exp>(v);
            left -= v;
        }
        m.e[k - 1] = static_cast<Exp>(left);
        terms.push_back(std::move(m));
    }
    return RawPoly(k, std::move(terms));
}

RawPoly relation(const FlagRing& ring, int i) {
    return complete_symmetric_prefix(ring.m() + i, ring.k() + 1 - i, ring.k());
}

}  // namespace

TEST_CASE("ring construction and basic counts") {
    FlagRing rp2(1, 2);
    CHECK(rp2.dim() == 2);
    CHECK(rp2.basis_size() == 3);  // 1, x1, x1^2

    FlagRing f111(2, 1);
    CHECK(f111.basis_size() == 6);
    CHECK(f111.dim() == 3);
    CHECK(f111.poincare_polynomial() == std::vector<long long>{1, 2, 2, 1});

    FlagRing f5(4, 1);
    CHECK(f5.dim() == 10);
    CHECK(f5.basis_size() == 120);

    CHECK_THROWS_AS(FlagRing(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(FlagRing(2, 0), std::invalid_argument);
}

TEST_CASE("normal form in F(1,1,1)") {
    FlagRing ring(2, 1);
    RingElement nf = ring.normal_form(parse_poly("x2^2", 2));
    CHECK(nf == ring.normal_form(parse_poly("x1^2 + x1*x2", 2)));
    CHECK_FALSE(nf.is_zero());
    CHECK(equals(ring.normal_form(parse_poly("x2^2 + x1^2 + x1*x2", 2)),
                 RingElement(ring)));
}

TEST_CASE("heights of generators") {
    for (auto [k, m] : {std::pair{1, 2}, std::pair{2, 1}, std::pair{2, 3}, std::pair{3, 2}}) {
        FlagRing ring(k, m);
        for (int i = 1; i <= k; ++i) {
            CHECK_FALSE(
                ring.normal_form(RawPoly::generator(k, i, static_cast<Exp>(m + k - 1))).is_zero());
            CHECK(ring.normal_form(RawPoly::generator(k, i, static_cast<Exp>(m + k))).is_zero());
            CHECK(ring.normal_form(RawPoly::generator(k, i, static_cast<Exp>(m + k + 3))).is_zero());
        }
    }
}

TEST_CASE("normal form is idempotent and linear") {
    FlagRing ring(3, 2);
    for (int round = 0; round < 30; ++round) {
        RawPoly p = random_poly(3, 8, 7);
        RingElement nf = ring.normal_form(p);
        CHECK(ring.normal_form(ring.to_poly(nf)) == nf);
        RawPoly q = random_poly(3, 8, 7);
        RingElement sum = ring.normal_form(poly_add(p, q));
        RingElement expect = ring.normal_form(p);
        expect ^= ring.normal_form(q);
        CHECK(sum == expect);
    }
}

TEST_CASE("confluence: adding ideal members does not change the normal form") {
    for (auto [k, m] : {std::pair{2, 2}, std::pair{3, 1}, std::pair{3, 2}}) {
        FlagRing ring(k, m);
        for (int round = 0; round < 20; ++round) {
            RawPoly p = random_poly(k, 6, m + k);
            RawPoly q = p;
            for (int i = 1; i <= k; ++i) {
                if (rnd() % 2) continue;
                RawPoly mult = random_poly(k, 3, 2);
                q = poly_add(q, poly_mul(mult, relation(ring, i)));
            }
            CHECK(ring.normal_form(p) == ring.normal_form(q));
        }
    }
}

TEST_CASE("relation ideal reduces to zero under all variable permutations") {
    FlagRing ring(3, 2);
    std::vector<int> perm = {1, 2, 3};
    std::sort(perm.begin(), perm.end());
    do {
        for (int i = 1; i <= 3; ++i) {
            RawPoly rel = relation(ring, i);
            std::vector<Monomial> permuted;
            for (const auto& mono : rel.terms()) {
                Monomial m2 = Monomial::unit(3);
                for (int q = 0; q < 3; ++q) m2.e[perm[q] - 1] = mono.e[q];
                permuted.push_back(std::move(m2));
            }
            CHECK(ring.normal_form(RawPoly(3, std::move(permuted))).is_zero());
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("structural check reports pass on healthy rings") {
    for (auto [k, m] : {std::pair{2, 2}, std::pair{3, 1}}) {
        FlagRing ring(k, m);
        CHECK(ring.verify_extended_relations().all_pass());
        CHECK(ring.verify_annihilator().all_pass());
        CHECK(ring.verify_tau_relations().all_pass());
    }
}

TEST_CASE("tampered rewrite rule is detected") {
    FlagRing bad(2, 1, FlagRing::Tamper{2, 3});
    bool clean = bad.verify_extended_relations().all_pass() &&
                 bad.verify_annihilator().all_pass();
    CHECK_FALSE(clean);
}

TEST_CASE("top projection agrees with the normal form on the top coefficient") {
    FlagRing ring(3, 2);  // dim 9
    int dim = ring.dim();
    for (int round = 0; round < 100; ++round) {
        RawPoly p = random_homogeneous(ring, dim, 6);
        RingElement full = ring.normal_form(p);
        RingElement rho = ring.top_projection_rewrite(p);
        CHECK(full.bits().test(ring.top_rank()) == rho.bits().test(ring.top_rank()));
    }
    /* the identity case of the rule: x_i^{m+k-i} is its own reduction */
    for (int i = 1; i <= 3; ++i) {
        RawPoly p = RawPoly::generator(3, i, static_cast<Exp>(ring.bound(i)));
        CHECK(ring.top_projection_rewrite(p) == ring.normal_form(p));
    }
}

TEST_CASE("ctop matches the reduced top coefficient on raw monomials") {
    for (auto [k, m] : {std::pair{2, 2}, std::pair{3, 2}}) {
        FlagRing ring(k, m);
        for (int round = 0; round < 200; ++round) {
            Exps e(k);
            int left = ring.dim();
            for (int i = 0; i + 1 < k; ++i) {
                int v = static_cast<int>(rnd() % (left + 1));
                e[i] = static_cast<Exp>(v);
                left -= v;
            }
            e[k - 1] = static_cast<Exp>(left);
            RingElement nf = ring.normal_form(RawPoly(k, {Monomial{e}}));
            CHECK(ring.ctop_raw(e) == (nf.bits().test(ring.top_rank()) ? 1 : 0));
        }
    }
}

TEST_CASE("poincare polynomial matches slice sizes") {
    for (auto [k, m] : {std::pair{1, 4}, std::pair{2, 3}, std::pair{4, 2}}) {
        FlagRing ring(k, m);
        auto pc = ring.poincare_polynomial();
        REQUIRE(pc.size() == static_cast<std::size_t>(ring.dim()) + 1);
        long long total = 0;
        for (int d = 0; d <= ring.dim(); ++d) {
            CHECK(pc[d] == static_cast<long long>(ring.degree_slice(d).size()));
            total += pc[d];
        }
        CHECK(total == static_cast<long long>(ring.basis_size()));
        CHECK(pc[ring.dim()] == 1);  // one-dimensional top
    }
}

#include <doctest.h>

#include <algorithm>

#include "flagtc/tensor.hpp"
#include "flagtc/zcl.hpp"

using namespace flagtc;

namespace {

std::uint64_t rng_state = 0x1234abcd5678ull;
std::uint64_t rnd() {
    rng_state ^= rng_state << 13;
    rng_state ^= rng_state >> 7;
    rng_state ^= rng_state << 17;
    return rng_state;
}

ZDProductSpec random_spec(int s, int k, long long cap) {
    ZDProductSpec spec;
    for (int i = 2; i <= s; ++i)
        for (int j = 1; j <= k; ++j) {
            long long e = static_cast<long long>(rnd() % (cap + 1));
            if (e) spec.factors.push_back({i, j, e});
        }
    return spec;
}

}  // namespace

TEST_CASE("lift and zero divisors") {
    FlagRing ring(2, 1);
    TensorRing TR(ring, 2);
    RingElement x1(ring);
    x1.bits().set(ring.generator_rank(1));

    TensorElement lambda1 = lift(TR, 1, x1);
    TensorElement rho1 = lift(TR, 2, x1);
    CHECK(lambda1.term_count() == 1);
    CHECK_FALSE(lambda1 == rho1);

    TensorElement z1 = zero_divisor(TR, 2, 1);
    TensorElement sum = tensor_mul(lambda1, lift(TR, 2, RingElement(ring)));  // zero
    CHECK(sum.is_zero());
    CHECK(z1.term_count() == 2);
    CHECK(diagonal_image(z1).is_zero());

    RingElement one(ring);
    one.bits().set(ring.one_rank());
    CHECK(lift(TR, 1, one).term_count() == 1);
    CHECK_THROWS_AS(lift(TR, 3, x1), std::invalid_argument);
    CHECK_THROWS_AS(zero_divisor(TR, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(zero_divisor(TR, 2, 5), std::invalid_argument);
}

TEST_CASE("lift is multiplicative per factor") {
    FlagRing ring(2, 2);
    TensorRing TR(ring, 3);
    for (int round = 0; round < 10; ++round) {
        RawPoly pa(2, {Monomial{{static_cast<Exp>(rnd() % 3), static_cast<Exp>(rnd() % 2)}}});
        RawPoly pb(2, {Monomial{{static_cast<Exp>(rnd() % 3), static_cast<Exp>(rnd() % 2)}}});
        RingElement a = ring.normal_form(pa), b = ring.normal_form(pb);
        int factor = 1 + static_cast<int>(rnd() % 3);
        TensorElement lhs = tensor_mul(lift(TR, factor, a), lift(TR, factor, b));
        TensorElement rhs = lift(TR, factor, ring_mul(a, b));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("evaluation is independent of factor order") {
    FlagRing ring(2, 1);
    TensorRing TR(ring, 3);
    ZDProductSpec spec = parse_zd_spec("z[2,1]^2*z[3,2]^1*z[2,2]^1*z[3,1]^2");
    ZDProductSpec shuffled;
    shuffled.factors = {spec.factors[3], spec.factors[0], spec.factors[2], spec.factors[1]};
    CHECK(evaluate_zd_product(TR, spec) == evaluate_zd_product(TR, shuffled));

    /* and matches multiplying the zero-divisors one at a time */
    TensorElement slow(TR, {TR.pack(std::vector<BasisRank>(3, ring.one_rank()))});
    for (const auto& f : spec.factors)
        for (long long t = 0; t < f.exp; ++t)
            slow = tensor_mul(slow, zero_divisor(TR, f.factor, f.gen));
    CHECK(slow == evaluate_zd_product(TR, spec));
}

TEST_CASE("known nilpotence: z^{2^{e+1}} vanishes when m + k <= 2^{e+1}") {
    /* F(1,2^e): z_1^{2^{e+1}} = 0 */
    for (int e : {1, 2}) {
        long long p = 1LL << e;
        FlagRing ring(1, static_cast<int>(p));
        TensorRing TR(ring, 2);
        ZDProductSpec spec;
        spec.factors = {{2, 1, 2 * p}};
        CHECK(evaluate_zd_product(TR, spec).is_zero());
        spec.factors = {{2, 1, 2 * p - 1}};
        CHECK_FALSE(evaluate_zd_product(TR, spec).is_zero());
    }
    /* F(1^2,2): m+k = 4 <= 4 */
    FlagRing ring(2, 2);
    TensorRing TR(ring, 2);
    ZDProductSpec spec;
    spec.factors = {{2, 1, 4}};
    CHECK(evaluate_zd_product(TR, spec).is_zero());
}

TEST_CASE("two-factor product of the three-fold flag") {
    /* z1^3 z2^2 != 0 = z1^3 z2^3 in F(1,1,1)^(x)2 */
    FlagRing ring(2, 1);
    TensorRing TR(ring, 2);
    CHECK_FALSE(evaluate_zd_product(TR, parse_zd_spec("z1^3*z2^2")).is_zero());
    CHECK(evaluate_zd_product(TR, parse_zd_spec("z1^3*z2^3")).is_zero());
}

TEST_CASE("multiplicative unit and empty elements") {
    FlagRing ring(2, 2);
    TensorRing TR(ring, 2);
    TensorElement a = evaluate_zd_product(TR, parse_zd_spec("z1^2*z2"));
    TensorElement one = evaluate_zd_product(TR, parse_zd_spec("1"));
    CHECK(tensor_mul(a, one) == a);
    TensorElement zero(TR);
    std::vector<BasisRank> tup = {ring.top_rank(), ring.top_rank()};
    CHECK(coefficient_of(zero, tup) == 0);
    CHECK(tensor_mul(a, zero).is_zero());
}

TEST_CASE("coefficient_of and top_coefficient agree with full evaluation") {
    for (auto [k, m] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 1}, std::pair{2, 2},
                        std::pair{3, 1}, std::pair{3, 2}}) {
        FlagRing ring(k, m);
        long long cap = default_exponent_cap(ring);
        for (int s : {2, 3}) {
            TensorRing TR(ring, s);
            int hits = 0, rounds = 0;
            while (hits < 8 && rounds < 200) {
                ++rounds;
                ZDProductSpec spec = random_spec(s, k, cap);
                if (spec.degree() != TR.top_degree()) continue;
                ++hits;
                TensorElement el = evaluate_zd_product(TR, spec);
                auto tup = TR.unpack(TR.top_tuple());
                int slow = coefficient_of(el, tup);
                int fast = top_coefficient(TR, spec);
                CHECK(slow == fast);
                /* the top slice is one-dimensional */
                CHECK((el.term_count() != 0) == (slow == 1));
            }
        }
    }
}

TEST_CASE("top_coefficient rejects degree-deficient specs") {
    FlagRing ring(2, 1);
    TensorRing TR(ring, 2);
    CHECK_THROWS_AS(top_coefficient(TR, parse_zd_spec("z1^3")), std::invalid_argument);
}

TEST_CASE("padding keeps nonzero elements nonzero and stacks") {
    FlagRing ring(2, 1);
    TensorRing TR(ring, 2);
    TensorElement el = evaluate_zd_product(TR, parse_zd_spec("z1^3*z2^2"));
    REQUIRE_FALSE(el.is_zero());
    TensorElement padded = pad_with_top_factor(el);
    CHECK(padded.ring().s() == 3);
    CHECK_FALSE(padded.is_zero());
    TensorElement twice = pad_with_top_factor(padded);
    CHECK(twice.ring().s() == 4);
    CHECK_FALSE(twice.is_zero());

    /* padding equals multiplying by the top z-product in the bigger ring */
    TensorRing TR3(ring, 3);
    ZDProductSpec lifted = parse_zd_spec("z[2,1]^3*z[2,2]^2");
    ZDProductSpec with_pad = lifted;
    for (const auto& f : top_z_product(ring, 3).factors) with_pad.factors.push_back(f);
    CHECK(padded == evaluate_zd_product(TR3, with_pad));

    CHECK_THROWS_AS(pad_with_top_factor(TensorElement(TR)), std::invalid_argument);
}

TEST_CASE("tensor product is associative and bilinear") {
    FlagRing ring(2, 1);
    TensorRing TR(ring, 2);
    auto el = [&](const char* s) { return evaluate_zd_product(TR, parse_zd_spec(s)); };
    TensorElement a = el("z1"), b = el("z2^2"), c = el("z1*z2");
    CHECK(tensor_mul(tensor_mul(a, b), c) == tensor_mul(a, tensor_mul(b, c)));
    /* (a+b)c = ac + bc: addition is symmetric difference of term sets */
    std::vector<std::uint64_t> sum_terms = a.terms();
    for (auto t : b.terms()) sum_terms.push_back(t);
    TensorElement sum(TR, std::move(sum_terms));
    TensorElement ac = tensor_mul(a, c), bc = tensor_mul(b, c);
    std::vector<std::uint64_t> rhs_terms = ac.terms();
    for (auto t : bc.terms()) rhs_terms.push_back(t);
    CHECK(tensor_mul(sum, c) == TensorElement(TR, std::move(rhs_terms)));
}

TEST_CASE("universal nilpotence bound z^{2(m+k)-1} = 0") {
    for (auto [k, m] : {std::pair{1, 3}, std::pair{2, 3}, std::pair{3, 1}}) {
        FlagRing ring(k, m);
        TensorRing TR(ring, 2);
        ZDProductSpec spec;
        spec.factors = {{2, 1, 2LL * (m + k) - 1}};
        CHECK(evaluate_zd_product(TR, spec).is_zero());
    }
}

TEST_CASE("diagonal image kills every zero-divisor product") {
    FlagRing ring(2, 2);
    for (int s : {2, 3}) {
        TensorRing TR(ring, s);
        for (int round = 0; round < 20; ++round) {
            ZDProductSpec spec = random_spec(s, 2, 4);
            if (spec.factors.empty()) continue;
            CHECK(diagonal_image(evaluate_zd_product(TR, spec)).is_zero());
        }
    }
}

TEST_CASE("tensor term serialization") {
    FlagRing ring(2, 1);
    TensorRing TR(ring, 2);
    TensorElement el = evaluate_zd_product(TR, parse_zd_spec("z1^3*z2^2"));
    REQUIRE_FALSE(el.is_zero());
    std::string label = TR.tuple_label(el.terms().front());
    CHECK(label.find("\xce\xbb") != std::string::npos);  // lambda side present
}

#include <doctest.h>

#include "flagtc/parse.hpp"
#include "flagtc/rawpoly.hpp"

using namespace flagtc;

namespace {

RawPoly P(const char* text, std::size_t k) { return parse_poly(text, k); }

std::uint64_t rng_state = 0x9e3779b97f4a7c15ull;
std::uint64_t rnd() {
    rng_state ^= rng_state << 13;
    rng_state ^= rng_state >> 7;
    rng_state ^= rng_state << 17;
    return rng_state;
}

RawPoly random_poly(std::size_t k, int max_terms, int max_exp) {
    std::vector<Monomial> terms;
    int n = static_cast<int>(rnd() % (max_terms + 1));
    for (int t = 0; t < n; ++t) {
        Monomial m = Monomial::unit(k);
        for (std::size_t i = 0; i < k; ++i) m.e[i] = static_cast<Exp>(rnd() % (max_exp + 1));
        terms.push_back(std::move(m));
    }
    return RawPoly(k, std::move(terms));
}

}  // namespace

TEST_CASE("gf2 addition cancels") {
    CHECK(poly_add(P("x1 + x2", 2), P("x2 + x1^2", 2)) == P("x1 + x1^2", 2));
    RawPoly p = P("x1^3*x2 + x2", 2);
    CHECK(poly_add(p, p).is_zero());
    CHECK(poly_add(p, RawPoly::zero(2)) == p);
}

TEST_CASE("products over gf2") {
    CHECK(poly_mul(P("x1 + x2", 2), P("x1 + x2", 2)) == P("x1^2 + x2^2", 2));
    CHECK(poly_mul(P("x1", 2), P("x2", 2)) == P("x1*x2", 2));
    CHECK(poly_mul(P("1 + x1", 1), P("1 + x1", 1)) == P("1 + x1^2", 1));
    CHECK_THROWS_AS(poly_mul(P("x1", 1), P("x1", 2)), std::invalid_argument);
}

TEST_CASE("ring axioms on random polynomials") {
    for (int round = 0; round < 50; ++round) {
        RawPoly a = random_poly(3, 6, 4), b = random_poly(3, 6, 4), c = random_poly(3, 6, 4);
        CHECK(poly_add(a, b) == poly_add(b, a));
        CHECK(poly_mul(a, b) == poly_mul(b, a));
        CHECK(poly_add(poly_add(a, b), c) == poly_add(a, poly_add(b, c)));
        CHECK(poly_mul(poly_mul(a, b), c) == poly_mul(a, poly_mul(b, c)));
        CHECK(poly_mul(a, poly_add(b, c)) == poly_add(poly_mul(a, b), poly_mul(a, c)));
        /* Frobenius */
        RawPoly s = poly_add(a, b);
        CHECK(poly_mul(s, s) == poly_add(poly_mul(a, a), poly_mul(b, b)));
        /* degrees add exactly: the polynomial ring has no zero divisors */
        if (!a.is_zero() && !b.is_zero() && a.is_homogeneous() && b.is_homogeneous())
            CHECK(poly_mul(a, b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("elementary symmetric polynomials") {
    CHECK(elementary_symmetric_prefix(2, 3, 3) == P("x1*x2 + x1*x3 + x2*x3", 3));
    CHECK(elementary_symmetric_prefix(0, 3, 3) == RawPoly::one(3));
    CHECK(elementary_symmetric_prefix(3, 2, 2).is_zero());
    std::vector<int> vars = {2, 3};
    CHECK(elementary_symmetric(1, vars, 3) == P("x2 + x3", 3));
}

TEST_CASE("complete symmetric polynomials") {
    CHECK(complete_symmetric_prefix(2, 2, 2) == P("x1^2 + x1*x2 + x2^2", 2));
    CHECK(complete_symmetric_prefix(0, 2, 2) == RawPoly::one(2));
    CHECK(complete_symmetric_prefix(1, 3, 3) == P("x1 + x2 + x3", 3));
    CHECK(complete_symmetric_prefix(2, 0, 2).is_zero());
}

TEST_CASE("h decomposition identity") {
    /* h_j(x1..xk) = h_j(x1..x_{k-1}) + x_k h_{j-1}(x1..xk) */
    for (int k = 1; k <= 4; ++k) {
        for (int j = 1; j <= 7; ++j) {
            RawPoly lhs = complete_symmetric_prefix(j, k, k);
            RawPoly rhs = poly_add(
                complete_symmetric_prefix(j, k - 1, k),
                poly_mul(RawPoly::generator(k, k), complete_symmetric_prefix(j - 1, k, k)));
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("e-h alternating identity vanishes mod 2") {
    CHECK(verify_eh_identity(1, 1));
    CHECK(verify_eh_identity(3, 2));
    CHECK(verify_eh_identity(5, 4));
    for (int j = 1; j <= 8; ++j)
        for (int k = 1; k <= 8; ++k) CHECK(verify_eh_identity(j, k));
}

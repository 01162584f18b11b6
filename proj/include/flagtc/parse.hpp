#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "flagtc/rawpoly.hpp"

namespace flagtc {

struct ParseError : std::runtime_error {
    ParseError(const std::string& msg, int line, int column)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ")"),
          line(line),
          column(column),
          message(msg) {}
    int line;
    int column;
    std::string message;
};

/* Manifold spec strings.
 *   F(1^k,m)   semi-complete flag manifold, k >= 1, m >= 1
 *   F(1^k)     complete flag, shorthand for F(1^{k-1},1)
 *   F(1,...,1,m)  fully spelled out
 *   N(n)       closed non-orientable surface of genus n
 */
struct FlagSpace {
    int k;
    int m;
    friend bool operator==(const FlagSpace&, const FlagSpace&) = default;
};
struct SurfaceSpace {
    int n;
    friend bool operator==(const SurfaceSpace&, const SurfaceSpace&) = default;
};
using Space = std::variant<FlagSpace, SurfaceSpace>;

Space parse_space(std::string_view text);
std::string format_space(const Space& s);

/* One z[i,j]^n (or c[i,j]^n) factor of a zero-divisor product: tensor factor
 * i >= 2, generator j >= 1. */
struct ZDFactor {
    int factor;
    int gen;
    long long exp;
    friend bool operator==(const ZDFactor&, const ZDFactor&) = default;
};

struct ZDProductSpec {
    std::vector<ZDFactor> factors;

    long long degree() const {
        long long d = 0;
        for (const auto& f : factors) d += f.exp;
        return d;
    }
    bool empty() const { return factors.empty(); }
    /* duplicate (i,j) entries merged, sorted by (i,j), zero exponents dropped */
    ZDProductSpec canonical() const;
    int max_factor() const;
    int max_gen() const;
};

/* Grammar: factors 'z[i,j]' / 'c[i,j]' / 'zJ' (s=2 shorthand for z[2,J]),
 * optional '^n', joined by '*' or juxtaposition; parenthesized groups may be
 * raised to a power: (z1*z2*z3)^7. Whitespace-insensitive. "1" or an empty
 * string is the empty product. */
ZDProductSpec parse_zd_spec(std::string_view text);
std::string format_zd_spec(const ZDProductSpec& spec, char letter = 'z');

/* Polynomial grammar: terms joined by '+'; a term is a '*'-or-juxtaposition
 * product of generators 'xJ' with optional '^n' and of integer constants
 * (reduced mod 2). E.g. "x1^3*x2 + x3". */
RawPoly parse_poly(std::string_view text, std::size_t k);
std::string format_poly(const RawPoly& p);
std::string format_monomial(const Monomial& m, std::string_view var = "x");

}  // namespace flagtc

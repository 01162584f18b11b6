#include "flagtc/parse.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace flagtc {

namespace {

/* single-line cursor; column is 1-based offset into the original text */
class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!eat(c)) fail(std::string("expected '") + c + "' in " + what);
    }
    long long integer(const char* what) {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail(std::string("expected integer in ") + what);
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1'000'000'000LL) fail("integer too large");
            ++pos_;
        }
        return v;
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(msg, 1, static_cast<int>(pos_) + 1);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Space parse_space(std::string_view text) {
    Cursor c(text);
    char head = c.peek();
    if (head == 'N' || head == 'n') {
        c.eat(head);
        c.expect('(', "surface spec");
        long long n = c.integer("surface genus");
        c.expect(')', "surface spec");
        if (!c.done()) c.fail("trailing input after surface spec");
        if (n < 1) c.fail("surface genus must be >= 1");
        return SurfaceSpace{static_cast<int>(n)};
    }
    if (head != 'F' && head != 'f') c.fail("manifold spec must start with 'F' or 'N'");
    c.eat(head);
    c.expect('(', "flag spec");
    std::vector<long long> blocks;
    for (;;) {
        long long v = c.integer("flag block");
        if (c.eat('^')) {
            long long rep = c.integer("block repetition");
            if (v != 1) c.fail("only blocks of size 1 may be repeated with '^'");
            if (rep < 1) c.fail("repetition must be >= 1");
            for (long long r = 0; r < rep; ++r) blocks.push_back(1);
        } else {
            blocks.push_back(v);
        }
        if (!c.eat(',')) break;
    }
    c.expect(')', "flag spec");
    if (!c.done()) c.fail("trailing input after flag spec");
    /* F(1^k) is the complete flag F(1^{k-1},1); otherwise all blocks but the
     * last must be 1 and the last is m */
    if (blocks.size() < 2) c.fail("flag spec needs at least two blocks");
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i)
        if (blocks[i] != 1) c.fail("only the last flag block may exceed 1");
    long long m = blocks.back();
    long long k = static_cast<long long>(blocks.size()) - 1;
    if (m < 1) c.fail("flag block m must be >= 1");
    if (k < 1) c.fail("flag spec needs k >= 1");
    return FlagSpace{static_cast<int>(k), static_cast<int>(m)};
}

std::string format_space(const Space& s) {
    if (std::holds_alternative<SurfaceSpace>(s))
        return "N(" + std::to_string(std::get<SurfaceSpace>(s).n) + ")";
    const auto& f = std::get<FlagSpace>(s);
    if (f.k == 1) return "F(1," + std::to_string(f.m) + ")";
    return "F(1^" + std::to_string(f.k) + "," + std::to_string(f.m) + ")";
}

ZDProductSpec ZDProductSpec::canonical() const {
    std::map<std::pair<int, int>, long long> agg;
    for (const auto& f : factors) agg[{f.factor, f.gen}] += f.exp;
    ZDProductSpec out;
    for (const auto& [key, exp] : agg)
        if (exp != 0) out.factors.push_back({key.first, key.second, exp});
    return out;
}

int ZDProductSpec::max_factor() const {
    int m = 0;
    for (const auto& f : factors) m = std::max(m, f.factor);
    return m;
}

int ZDProductSpec::max_gen() const {
    int m = 0;
    for (const auto& f : factors) m = std::max(m, f.gen);
    return m;
}

namespace {

void parse_zd_product(Cursor& c, ZDProductSpec& out, int depth);

/* factor := 'z'|'c' ('[' i ',' j ']' | J) ['^' n] | '1' | '(' product ')' ['^' n] */
void parse_zd_factor(Cursor& c, ZDProductSpec& out, int depth) {
    char head = c.peek();
    if (head == '(') {
        c.eat('(');
        ZDProductSpec group;
        parse_zd_product(c, group, depth + 1);
        c.expect(')', "grouped product");
        long long p = 1;
        if (c.eat('^')) p = c.integer("group exponent");
        for (auto f : group.factors) {
            f.exp *= p;
            out.factors.push_back(f);
        }
        return;
    }
    if (head == '1') {
        c.eat('1');
        return;
    }
    if (head != 'z' && head != 'Z' && head != 'c' && head != 'C')
        c.fail("expected a zero-divisor factor 'z[i,j]' or 'c[i,j]'");
    c.eat(head);
    int factor = 2, gen = 0;
    if (c.eat('[')) {
        factor = static_cast<int>(c.integer("tensor factor index"));
        c.expect(',', "zero-divisor index pair");
        gen = static_cast<int>(c.integer("generator index"));
        c.expect(']', "zero-divisor index pair");
    } else {
        /* zJ: the two-factor notation, z_J = z[2,J] */
        gen = static_cast<int>(c.integer("generator index"));
    }
    long long exp = 1;
    if (c.eat('^')) exp = c.integer("exponent");
    if (factor < 2) c.fail("tensor factor index must be >= 2 (z[1,j] vanishes)");
    if (gen < 1) c.fail("generator index must be >= 1");
    if (exp < 0) c.fail("exponent must be >= 0");
    out.factors.push_back({factor, gen, exp});
}

void parse_zd_product(Cursor& c, ZDProductSpec& out, int depth) {
    if (depth > 16) c.fail("grouping too deep");
    for (;;) {
        parse_zd_factor(c, out, depth);
        if (c.eat('*')) continue;
        char h = c.peek();
        if (h == 'z' || h == 'Z' || h == 'c' || h == 'C' || h == '(' || h == '1') continue;
        break;
    }
}

}  // namespace

ZDProductSpec parse_zd_spec(std::string_view text) {
    ZDProductSpec out;
    Cursor c(text);
    if (c.done()) return out;
    parse_zd_product(c, out, 0);
    if (!c.done()) c.fail("trailing input after product");
    return out;
}

std::string format_zd_spec(const ZDProductSpec& spec, char letter) {
    ZDProductSpec canon = spec.canonical();
    if (canon.factors.empty()) return "1";
    std::string out;
    for (const auto& f : canon.factors) {
        if (!out.empty()) out += "*";
        out += letter;
        out += "[" + std::to_string(f.factor) + "," + std::to_string(f.gen) + "]";
        if (f.exp != 1) out += "^" + std::to_string(f.exp);
    }
    return out;
}

namespace {

/* term := (generator | integer)+ with '*' or juxtaposition; generators are
 * written xJ in flag rings and aJ in surface rings, both letters accepted */
bool parse_poly_term(Cursor& c, std::size_t k, Monomial& mono, bool& coeff_odd) {
    mono = Monomial::unit(k);
    coeff_odd = true;
    bool saw_factor = false;
    for (;;) {
        char h = c.peek();
        if (h == 'x' || h == 'X' || h == 'a' || h == 'A') {
            c.eat(h);
            long long j = c.integer("generator index");
            if (j < 1 || static_cast<std::size_t>(j) > k)
                c.fail("generator index out of range for k=" + std::to_string(k));
            long long e = 1;
            if (c.eat('^')) e = c.integer("exponent");
            if (e > 60000) c.fail("exponent too large");
            mono.e[j - 1] = static_cast<Exp>(mono.e[j - 1] + e);
            saw_factor = true;
        } else if (std::isdigit(static_cast<unsigned char>(h))) {
            long long v = c.integer("constant");
            long long e = 1;
            if (c.eat('^')) e = c.integer("exponent");
            if (v % 2 == 0 && e > 0) coeff_odd = false;
            saw_factor = true;
        } else if (h == '*') {
            c.eat('*');
        } else {
            break;
        }
    }
    return saw_factor;
}

}  // namespace

RawPoly parse_poly(std::string_view text, std::size_t k) {
    Cursor c(text);
    std::vector<Monomial> terms;
    if (c.done()) c.fail("empty polynomial");
    for (;;) {
        Monomial m;
        bool odd;
        if (!parse_poly_term(c, k, m, odd)) c.fail("expected a term");
        if (odd) terms.push_back(std::move(m));
        if (!c.eat('+')) break;
    }
    if (!c.done()) c.fail("trailing input after polynomial");
    return RawPoly(k, std::move(terms));
}

std::string format_monomial(const Monomial& m, std::string_view var) {
    std::string out;
    for (std::size_t i = 0; i < m.vars(); ++i) {
        if (m.e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += std::string(var) + std::to_string(i + 1);
        if (m.e[i] > 1) out += "^" + std::to_string(m.e[i]);
    }
    return out.empty() ? "1" : out;
}

std::string format_poly(const RawPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& m : p.terms()) {
        if (!out.empty()) out += " + ";
        out += format_monomial(m);
    }
    return out;
}

}  // namespace flagtc

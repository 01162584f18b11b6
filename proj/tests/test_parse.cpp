#include <doctest.h>

#include "flagtc/parse.hpp"

using namespace flagtc;

TEST_CASE("manifold spec grammar") {
    CHECK(parse_space("F(1^3,6)") == Space{FlagSpace{3, 6}});
    CHECK(parse_space("F(1,1,1)") == Space{FlagSpace{2, 1}});
    CHECK(parse_space("F(1,2)") == Space{FlagSpace{1, 2}});
    CHECK(parse_space(" F( 1^4 , 5 ) ") == Space{FlagSpace{4, 5}});
    /* F(1^k) is the complete flag, i.e. m = 1 with k-1 leading lines */
    CHECK(parse_space("F(1^5)") == Space{FlagSpace{4, 1}});
    CHECK(parse_space("N(2)") == Space{SurfaceSpace{2}});
    CHECK_THROWS_AS(parse_space("F(2,3)"), ParseError);
    CHECK_THROWS_AS(parse_space("F(1^3,6) junk"), ParseError);
    CHECK_THROWS_AS(parse_space("Q(3)"), ParseError);
    CHECK_THROWS_AS(parse_space("N(0)"), ParseError);
}

TEST_CASE("spec grammar round trip") {
    for (const char* text : {"F(1,2)", "F(1^2,3)", "F(1^4,5)", "N(3)"}) {
        Space sp = parse_space(text);
        CHECK(format_space(sp) == text);
        CHECK(parse_space(format_space(sp)) == sp);
    }
}

TEST_CASE("zero-divisor product grammar") {
    ZDProductSpec spec = parse_zd_spec("z[2,1]^15 * z[2,2]^14 * z[3,1]^7");
    CHECK(spec.factors.size() == 3);
    CHECK(spec.degree() == 36);
    CHECK(spec.max_factor() == 3);

    /* grouped powers expand */
    ZDProductSpec grouped = parse_zd_spec("(z1*z2*z3)^7");
    CHECK(grouped.degree() == 21);
    CHECK(format_zd_spec(grouped) == "z[2,1]^7*z[2,2]^7*z[2,3]^7");

    /* zJ is shorthand for z[2,J]; juxtaposition works */
    CHECK(format_zd_spec(parse_zd_spec("z1^3z2^2")) == "z[2,1]^3*z[2,2]^2");
    CHECK(format_zd_spec(parse_zd_spec("c[3,1]^2"), 'c') == "c[3,1]^2");
    CHECK(parse_zd_spec("1").empty());
    CHECK(parse_zd_spec("").empty());

    /* duplicates merge in canonical form */
    CHECK(format_zd_spec(parse_zd_spec("z1^2*z1^3")) == "z[2,1]^5");

    CHECK_THROWS_AS(parse_zd_spec("z[1,1]"), ParseError);
    CHECK_THROWS_AS(parse_zd_spec("z[2,0]"), ParseError);
    CHECK_THROWS_AS(parse_zd_spec("w[2,1]"), ParseError);
    try {
        parse_zd_spec("z[2,1]^3 + z[2,2]");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 1);
        CHECK(e.column > 1);
    }
}

TEST_CASE("zd spec round trip") {
    for (const char* text :
         {"z[2,1]^7*z[2,2]^6*z[2,3]^3*z[2,4]^2", "z[2,1]", "z[3,2]^15", "1"}) {
        ZDProductSpec spec = parse_zd_spec(text);
        CHECK(format_zd_spec(spec) == text);
        CHECK(format_zd_spec(parse_zd_spec(format_zd_spec(spec))) == text);
    }
}

TEST_CASE("polynomial grammar") {
    CHECK(parse_poly("x1^3*x2 + x3", 3).term_count() == 2);
    CHECK(parse_poly("x1 x2", 2) == parse_poly("x1*x2", 2));
    CHECK(parse_poly("x1x2", 2) == parse_poly("x1*x2", 2));
    CHECK(parse_poly("2", 1).is_zero());
    CHECK(parse_poly("0", 2).is_zero());
    CHECK(parse_poly("1 + x1 + x1", 2) == RawPoly::one(2));
    CHECK(parse_poly("3*x1", 1) == parse_poly("x1", 1));
    CHECK_THROWS_AS(parse_poly("x4", 3), ParseError);
    CHECK_THROWS_AS(parse_poly("", 2), ParseError);
    CHECK_THROWS_AS(parse_poly("x1 +", 2), ParseError);
}

TEST_CASE("polynomial serialization is canonical and round trips") {
    RawPoly p = parse_poly("x2^2 + x1*x2 + x1^2 + 1", 2);
    CHECK(format_poly(p) == "1 + x1^2 + x1*x2 + x2^2");
    CHECK(parse_poly(format_poly(p), 2) == p);
    CHECK(format_poly(RawPoly::zero(2)) == "0");
}

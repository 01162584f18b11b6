#include <doctest.h>

#include <fstream>

#include "flagtc/json_out.hpp"

using namespace flagtc;
using nlohmann::json;

namespace {

/* minimal structural validation against the checked-in schemas: required
 * keys must exist with the right type, no other constraint */
bool type_matches(const json& value, const std::string& type) {
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "array") return value.is_array();
    if (type == "object") return value.is_object();
    if (type == "string|null") return value.is_string() || value.is_null();
    if (type == "integer|null") return value.is_number_integer() || value.is_null();
    return false;
}

void check_schema(const json& doc, const std::string& name) {
    std::ifstream in(std::string(FLAGTC_SCHEMA_DIR) + "/" + name + ".schema.json");
    REQUIRE_MESSAGE(in.good(), "missing schema for " << name);
    json schema = json::parse(in);
    for (auto& [field, type] : schema["required"].items()) {
        REQUIRE_MESSAGE(doc.contains(field), name << ": missing field " << field);
        CHECK_MESSAGE(type_matches(doc[field], type.get<std::string>()),
                      name << "." << field << " has wrong type");
    }
    if (schema.contains("optional"))
        for (auto& [field, type] : schema["optional"].items())
            if (doc.contains(field))
                CHECK_MESSAGE(type_matches(doc[field], type.get<std::string>()),
                              name << "." << field << " has wrong type");
}

}  // namespace

TEST_CASE("every command output validates against its schema") {
    FlagRing ring(2, 1);

    json basis = json_basis(ring, 100);
    check_schema(basis, "basis");
    CHECK(basis["basis_count"] == 6);
    CHECK(basis["poincare"] == json::array({1, 2, 2, 1}));

    RingElement nf = ring.normal_form(parse_poly("x2^2", 2));
    json reduce = json_reduce(ring, "x2^2", nf);
    check_schema(reduce, "reduce");
    CHECK(reduce["is_zero"] == false);
    CHECK(reduce["degree"] == 2);
    CHECK(reduce["terms"] == json::array({"x1^2", "x1*x2"}));

    json verify = json_verify_ring(ring);
    check_schema(verify, "verify-ring");
    CHECK(verify["pass"] == true);

    TensorRing tr(ring, 2);
    ZDProductSpec spec = parse_zd_spec("z1^3*z2^2");
    TensorElement el = evaluate_zd_product(tr, spec);
    json zdp = json_zdp(tr, spec, el, true, 'z');
    check_schema(zdp, "zdp");
    CHECK(zdp["nonzero"] == true);
    CHECK(zdp["degree"] == 5);

    SearchResult sr;
    sr.candidates = 10;
    sr.solutions = {{3, 2}};
    json search = json_search("F(1,1,1)", 2, {}, {{2, 1}, {2, 2}}, 5, sr);
    check_schema(search, "search");

    json sharp = json_sharpness(2, 2, true);
    check_schema(sharp, "sharpness");
    CHECK(sharp["space"] == "F(1^2,3)");

    TCBound bound = tc_report(FlagSpace{2, 1}, 2);
    json rep = json_tc_report(bound, 'z');
    check_schema(rep, "tc-report");
    CHECK(rep["lower"] == 5);
    CHECK(rep["upper"] == 6);

    json gap = json_gap(gap_sequence(2, 1, 3));
    check_schema(gap, "gap");

    std::vector<CriterionResult> fake(1);
    fake[0].number = 1;
    fake[0].title = "x";
    fake[0].items.push_back({"a", true, ""});
    json vp = json_verify_paper(fake, false);
    check_schema(vp, "verify-paper");
    CHECK(vp["pass"] == true);
}

TEST_CASE("zdp reports the two-term closed form") {
    FlagRing ring(2, 3);
    TensorRing tr(ring, 2);
    ZDProductSpec spec = parse_zd_spec("z1^7*z2^6");
    TensorElement el = evaluate_zd_product(tr, spec);
    json doc = json_zdp(tr, spec, el, true, 'z');
    CHECK(doc["term_count"] == 2);
    REQUIRE(doc.contains("terms"));
    REQUIRE(doc["terms"].size() == 2);
}

TEST_CASE("pretty rendering stays in sync with the JSON") {
    FlagRing ring(2, 1);
    json basis = json_basis(ring, 100);
    std::string text = render_pretty(basis);
    CHECK(text.find("dim 3") != std::string::npos);
    CHECK(text.find("basis 6") != std::string::npos);
    TCBound bound = tc_report(FlagSpace{2, 1}, 2);
    std::string rep = render_pretty(json_tc_report(bound, 'z'));
    CHECK(rep.find("[5, 6]") != std::string::npos);
}

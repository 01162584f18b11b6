#include "flagtc/json_out.hpp"

#include <algorithm>
#include <sstream>

#include "flagtc/surface_ring.hpp"

namespace flagtc {

using nlohmann::json;

json json_basis(const Ring& ring, std::size_t max_list) {
    const auto* flag = dynamic_cast<const FlagRing*>(&ring);
    json by_degree = json::array();
    std::size_t listed = 0;
    for (int d = 0; d <= ring.top_degree(); ++d) {
        json level;
        level["degree"] = d;
        json monos = json::array();
        if (flag) {
            std::vector<Monomial> monomials;
            for (BasisRank r : ring.degree_slice(d)) monomials.push_back(flag->monomial_of(r));
            std::sort(monomials.begin(), monomials.end(), term_less);
            for (const auto& m : monomials) {
                if (listed >= max_list) break;
                monos.push_back(format_monomial(m));
                ++listed;
            }
        } else {
            for (BasisRank r : ring.degree_slice(d)) {
                if (listed >= max_list) break;
                monos.push_back(ring.basis_label(r));
                ++listed;
            }
        }
        level["monomials"] = monos;
        by_degree.push_back(level);
    }
    json out{{"command", "basis"},
             {"space", ring.describe()},
             {"dim", ring.top_degree()},
             {"basis_count", ring.basis_size()},
             {"poincare", flag ? json(flag->poincare_polynomial()) : json(degree_counts(ring))},
             {"basis", by_degree},
             {"truncated", listed < ring.basis_size()}};
    if (flag) {
        out["k"] = flag->k();
        out["m"] = flag->m();
    } else if (const auto* surf = dynamic_cast<const SurfaceRing*>(&ring)) {
        out["n"] = surf->genus();
    }
    return out;
}

json json_reduce(const Ring& ring, const std::string& expr, const RingElement& nf) {
    json terms = json::array();
    if (const auto* flag = dynamic_cast<const FlagRing*>(&ring)) {
        RawPoly canon = flag->to_poly(nf);
        for (const auto& m : canon.terms()) terms.push_back(format_monomial(m));
    } else {
        nf.bits().for_each_set(
            [&](std::size_t r) { terms.push_back(ring.basis_label(static_cast<BasisRank>(r))); });
    }
    json out{{"command", "reduce"},
             {"space", ring.describe()},
             {"input", expr},
             {"terms", terms},
             {"is_zero", nf.is_zero()}};
    out["degree"] = nf.is_zero() ? json(nullptr) : json(nf.degree());
    return out;
}

json json_verify_ring(const Ring& ring) {
    auto pack = [](const char* name, const CheckReport& rep) {
        json failures = json::array();
        for (const auto& it : rep.items)
            if (!it.pass) failures.push_back(it.what);
        return json{{"name", name},
                    {"cases", rep.items.size()},
                    {"pass", rep.all_pass()},
                    {"failures", failures}};
    };
    json checks = json::array();
    if (const auto* flag = dynamic_cast<const FlagRing*>(&ring)) {
        checks.push_back(pack("extended-relations", flag->verify_extended_relations()));
        checks.push_back(pack("annihilator", flag->verify_annihilator()));
        checks.push_back(pack("tau-relations", flag->verify_tau_relations()));
    } else if (const auto* surf = dynamic_cast<const SurfaceRing*>(&ring)) {
        checks.push_back(pack("multiplication-table", surf->verify_relations()));
    }
    auto counts = degree_counts(ring);
    bool ledger = true;
    long long sum = 0;
    for (long long c : counts) sum += c;
    ledger = sum == static_cast<long long>(ring.basis_size()) && counts.back() == 1;
    if (const auto* flag = dynamic_cast<const FlagRing*>(&ring)) {
        long long expect = 1;
        for (int i = 1; i <= flag->k(); ++i) expect *= (flag->m() + i);
        ledger = ledger && sum == expect && counts == flag->poincare_polynomial();
    }
    checks.push_back(json{{"name", "dimension-ledger"},
                          {"cases", counts.size()},
                          {"pass", ledger},
                          {"failures", json::array()}});
    bool pass = true;
    for (const auto& c : checks) pass = pass && c["pass"].get<bool>();
    return json{{"command", "verify-ring"}, {"space", ring.describe()}, {"checks", checks},
                {"pass", pass}};
}

json json_zdp(const TensorRing& tr, const ZDProductSpec& spec, const TensorElement& el,
              bool dump_terms, char letter) {
    json out{{"command", "zdp"},
             {"space", tr.base().describe()},
             {"s", tr.s()},
             {"spec", format_zd_spec(spec, letter)},
             {"nonzero", !el.is_zero()},
             {"degree", spec.degree()},
             {"term_count", el.term_count()}};
    if (dump_terms) {
        json terms = json::array();
        for (auto t : el.terms()) terms.push_back(tr.tuple_label(t));
        out["terms"] = terms;
    }
    return out;
}

json json_search(const std::string& space, int s, const ZDProductSpec& prefix,
                 const std::vector<std::pair<int, int>>& positions, long long free_degree,
                 const SearchResult& result) {
    json pos = json::array();
    for (auto [i, j] : positions)
        pos.push_back("z[" + std::to_string(i) + "," + std::to_string(j) + "]");
    json sols = json::array();
    for (const auto& sol : result.solutions) sols.push_back(sol);
    return json{{"command", "search"},
                {"space", space},
                {"s", s},
                {"prefix", format_zd_spec(prefix)},
                {"free", pos},
                {"free_degree", free_degree},
                {"candidates", result.candidates},
                {"solution_count", result.solutions.size()},
                {"solutions", sols}};
}

json json_sharpness(int k, int e, bool zero) {
    long long p = 1LL << e;
    return json{{"command", "sharpness"},
                {"k", k},
                {"e", e},
                {"space", "F(1^" + std::to_string(k) + "," + std::to_string(p - 1) + ")"},
                {"exponent", 2 * p - 1},
                {"zero", zero}};
}

json json_tc_report(const TCBound& bound, char letter) {
    json out{{"command", "tc-report"},
             {"space", format_space(bound.space)},
             {"s", bound.s},
             {"lower", bound.lower},
             {"upper", bound.upper},
             {"provenance", bound.provenance},
             {"detail", bound.detail}};
    out["witness"] = bound.witness ? json(format_zd_spec(*bound.witness, letter)) : json(nullptr);
    out["witness_space"] = bound.witness_space;
    return out;
}

json json_gap(const std::vector<GapValue>& gaps) {
    json vals = json::array();
    for (const auto& g : gaps)
        vals.push_back(json{{"s", g.s}, {"gap", g.value}, {"lower", g.lower}, {"upper", g.upper}});
    json out{{"command", "gap"}, {"values", vals}};
    if (!gaps.empty()) {
        out["k"] = gaps.front().k;
        out["m"] = gaps.front().m;
        out["space"] = format_space(FlagSpace{gaps.front().k, gaps.front().m});
    }
    return out;
}

json json_verify_paper(const std::vector<CriterionResult>& results, bool include_long) {
    json checks = json::array();
    std::size_t passed = 0, failed = 0;
    for (const auto& c : results) {
        json items = json::array();
        for (const auto& it : c.items) {
            items.push_back(json{{"id", it.id}, {"pass", it.pass}, {"detail", it.detail}});
            (it.pass ? passed : failed) += 1;
        }
        checks.push_back(json{{"criterion", c.number},
                              {"title", c.title},
                              {"long_running", c.long_running},
                              {"pass", c.pass},
                              {"seconds", c.seconds},
                              {"items", items}});
    }
    return json{{"command", "verify-paper"},
                {"include_long", include_long},
                {"criteria", checks},
                {"passed", passed},
                {"failed", failed},
                {"pass", failed == 0}};
}

std::string render_pretty(const json& doc) {
    std::ostringstream os;
    const std::string cmd = doc.value("command", "");
    if (cmd == "basis") {
        os << doc["space"].get<std::string>() << ": dim " << doc["dim"] << ", basis "
           << doc["basis_count"] << "\npoincare:";
        for (const auto& c : doc["poincare"]) os << " " << c;
        os << "\n";
        for (const auto& level : doc["basis"]) {
            os << "  deg " << level["degree"] << ":";
            for (const auto& m : level["monomials"]) os << " " << m.get<std::string>();
            os << "\n";
        }
    } else if (cmd == "reduce") {
        os << doc["input"].get<std::string>() << "  ->  ";
        if (doc["is_zero"].get<bool>())
            os << "0\n";
        else {
            bool first = true;
            for (const auto& t : doc["terms"]) {
                os << (first ? "" : " + ") << t.get<std::string>();
                first = false;
            }
            os << "   (degree " << doc["degree"] << ")\n";
        }
    } else if (cmd == "verify-ring" || cmd == "verify-paper") {
        const char* key = cmd == "verify-ring" ? "checks" : "criteria";
        for (const auto& c : doc[key]) {
            os << (c["pass"].get<bool>() ? "PASS " : "FAIL ");
            if (cmd == "verify-ring")
                os << c["name"].get<std::string>() << " (" << c["cases"] << " cases)\n";
            else
                os << c["criterion"] << ". " << c["title"].get<std::string>() << "\n";
        }
        os << (doc["pass"].get<bool>() ? "all passed\n" : "FAILURES present\n");
    } else if (cmd == "zdp") {
        os << doc["spec"].get<std::string>() << " in " << doc["space"].get<std::string>()
           << "^(x)" << doc["s"] << ": " << (doc["nonzero"].get<bool>() ? "nonzero" : "zero")
           << ", degree " << doc["degree"] << ", " << doc["term_count"] << " terms\n";
        if (doc.contains("terms"))
            for (const auto& t : doc["terms"]) os << "  " << t.get<std::string>() << "\n";
    } else if (cmd == "search") {
        os << doc["solution_count"] << " solutions (of " << doc["candidates"]
           << " candidates) at free degree " << doc["free_degree"] << "\n";
        for (const auto& sol : doc["solutions"]) {
            os << "  (";
            bool first = true;
            for (const auto& v : sol) {
                os << (first ? "" : ",") << v;
                first = false;
            }
            os << ")\n";
        }
    } else if (cmd == "sharpness") {
        os << doc["space"].get<std::string>() << ": (z1...zk)^" << doc["exponent"] << " is "
           << (doc["zero"].get<bool>() ? "zero" : "nonzero") << "\n";
    } else if (cmd == "tc-report") {
        os << "TC_" << doc["s"] << "(" << doc["space"].get<std::string>() << ") in ["
           << doc["lower"] << ", " << doc["upper"] << "]\n";
        if (!doc["witness"].is_null())
            os << "witness: " << doc["witness"].get<std::string>() << " ("
               << doc["provenance"].get<std::string>() << ")\n";
    } else if (cmd == "gap") {
        for (const auto& v : doc["values"])
            os << "s=" << v["s"] << ": gap " << v["gap"] << " (zcl >= " << v["lower"]
               << ", upper " << v["upper"] << ")\n";
    } else {
        os << doc.dump(2) << "\n";
    }
    return os.str();
}

}  // namespace flagtc

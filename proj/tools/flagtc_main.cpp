#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "flagtc/json_out.hpp"
#include "flagtc/surface_ring.hpp"

using namespace flagtc;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

struct Config {
    std::size_t max_terms = 100'000'000;
    int workers = 0;
    std::optional<std::string> store;
    bool pretty = false;
};

void load_config_file(Config& cfg, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    json j = json::parse(in);
    if (j.contains("max_terms")) cfg.max_terms = j["max_terms"].get<std::size_t>();
    if (j.contains("workers")) cfg.workers = j["workers"].get<int>();
    if (j.contains("store")) cfg.store = j["store"].get<std::string>();
}

void emit(const Config& cfg, const json& doc) {
    if (cfg.pretty)
        std::cout << render_pretty(doc);
    else
        std::cout << doc.dump() << "\n";
}

std::unique_ptr<Ring> make_ring(const Space& space) {
    if (std::holds_alternative<SurfaceSpace>(space))
        return std::make_unique<SurfaceRing>(std::get<SurfaceSpace>(space).n);
    auto f = std::get<FlagSpace>(space);
    return std::make_unique<FlagRing>(f.k, f.m);
}

char spec_letter(const Space& space) {
    return std::holds_alternative<SurfaceSpace>(space) ? 'c' : 'z';
}

void append_store(const Config& cfg, const std::string& space, int s, const ZDProductSpec& spec,
                  bool nonzero) {
    if (!cfg.store) return;
    StoreRecord rec;
    rec.space = space;
    rec.s = s;
    rec.spec = format_zd_spec(spec);
    rec.nonzero = nonzero;
    rec.degree = spec.degree();
    store_append(*cfg.store, rec);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mod-2 cohomology of flag manifolds and surfaces: zero-divisor products and "
                 "topological-complexity bounds"};
    app.require_subcommand(1);

    Config cfg;
    std::string config_path;
    app.add_option("--config", config_path, "JSON config file (max_terms, workers, store)");
    std::size_t max_terms_flag = 0;
    int workers_flag = 0;
    auto* max_terms_opt =
        app.add_option("--max-terms", max_terms_flag, "term-count ceiling for evaluations");
    auto* workers_opt =
        app.add_option("--workers", workers_flag, "worker threads for searches (0 = auto)");
    std::string store_path;
    auto* store_opt = app.add_option("--store", store_path, "append-only JSONL result store");
    app.add_flag("--pretty", cfg.pretty, "render human-readable tables instead of raw JSON");

    std::string space_str, expr, prefix_str, free_str;
    int s = 2, karg = 2, earg = 2, smax = 4;
    long long degree = 0;
    bool dump_terms = false, include_long = false, inject_fault = false;
    std::size_t max_list = 4096;

    auto* basis = app.add_subcommand("basis", "additive basis and Poincare polynomial");
    basis->add_option("--space", space_str, "manifold spec, e.g. F(1^3,2)")->required();
    basis->add_option("--max-list", max_list, "cap on listed monomials");

    auto* reduce = app.add_subcommand("reduce", "normal form of a polynomial in the ring");
    reduce->add_option("--space", space_str)->required();
    reduce->add_option("--expr", expr, "polynomial, e.g. \"x1^3*x2 + x3\"")->required();

    auto* verify_ring = app.add_subcommand("verify-ring", "structural relation checks");
    verify_ring->add_option("--space", space_str)->required();

    auto* zdp = app.add_subcommand("zdp", "evaluate a zero-divisor product");
    zdp->add_option("--space", space_str)->required();
    zdp->add_option("--s", s, "tensor power")->required();
    zdp->add_option("--expr", expr, "product, e.g. \"z[2,1]^7*z[2,2]^6\"")->required();
    zdp->add_flag("--dump-terms", dump_terms, "include the full term list");

    auto* search = app.add_subcommand("search", "exhaustive exponent search");
    search->add_option("--space", space_str)->required();
    search->add_option("--s", s)->required();
    search->add_option("--prefix", prefix_str, "fixed part of the product");
    search->add_option("--free", free_str, "comma list of free positions, e.g. \"z[3,1],z[3,2]\"")
        ->required();
    search->add_option("--degree", degree, "total degree of the free part")->required();

    auto* sharp = app.add_subcommand("sharpness", "does (z1...zk)^{2^{e+1}-1} vanish at m=2^e-1");
    sharp->add_option("--k", karg)->required();
    sharp->add_option("--e", earg)->required();

    auto* report = app.add_subcommand("tc-report", "certified TC_s interval");
    report->add_option("--space", space_str)->required();
    report->add_option("--s", s)->required();

    auto* gap = app.add_subcommand("gap", "gap sequence s*dim - zcl_s for s = 2..s-max");
    gap->add_option("--space", space_str)->required();
    gap->add_option("--s-max", smax);

    auto* verify_paper = app.add_subcommand("verify-paper", "run the verification suite");
    verify_paper->add_flag("--include-long", include_long, "also run the extended searches");
    verify_paper->add_flag("--inject-fault", inject_fault,
                           "corrupt one rewrite rule first; the suite must then fail");

    /* global flags remain usable after the subcommand name */
    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        std::cout << json{{"error", {{"message", e.what()}, {"kind", "usage"}}}}.dump() << "\n";
        return kExitUsage;
    }

    try {
        /* config file first, explicit flags override */
        if (!config_path.empty()) load_config_file(cfg, config_path);
        if (max_terms_opt->count()) cfg.max_terms = max_terms_flag;
        if (workers_opt->count()) cfg.workers = workers_flag;
        if (store_opt->count()) cfg.store = store_path;
        EvalLimits limits;
        limits.max_terms = cfg.max_terms;
        limits.workers = cfg.workers;

        if (basis->parsed()) {
            auto ring = make_ring(parse_space(space_str));
            emit(cfg, json_basis(*ring, max_list));
            return kExitOk;
        }
        if (reduce->parsed()) {
            auto ring = make_ring(parse_space(space_str));
            RingElement nf =
                element_from_generators(*ring, parse_poly(expr, ring->generator_count()));
            emit(cfg, json_reduce(*ring, expr, nf));
            return kExitOk;
        }
        if (verify_ring->parsed()) {
            auto ring = make_ring(parse_space(space_str));
            json doc = json_verify_ring(*ring);
            emit(cfg, doc);
            return doc["pass"].get<bool>() ? kExitOk : kExitVerificationFailed;
        }
        if (zdp->parsed()) {
            Space space = parse_space(space_str);
            ZDProductSpec spec = parse_zd_spec(expr);
            auto ring = make_ring(space);
            TensorRing tr(*ring, s);
            TensorElement el = evaluate_zd_product(tr, spec, limits);
            append_store(cfg, format_space(space), s, spec, !el.is_zero());
            emit(cfg, json_zdp(tr, spec, el, dump_terms, spec_letter(space)));
            return kExitOk;
        }
        if (search->parsed()) {
            Space space = parse_space(space_str);
            auto ring = make_ring(space);
            ZDProductSpec prefix =
                prefix_str.empty() ? ZDProductSpec{} : parse_zd_spec(prefix_str);
            std::vector<std::pair<int, int>> positions;
            {
                /* --free is a comma-separated list of z[i,j] positions; the
                 * commas inside brackets belong to the index pairs */
                std::string token;
                int depth = 0;
                auto flush = [&] {
                    if (token.find_first_not_of(" \t") == std::string::npos) return;
                    ZDProductSpec one = parse_zd_spec(token);
                    for (const auto& f : one.factors) positions.push_back({f.factor, f.gen});
                    token.clear();
                };
                for (char ch : free_str) {
                    if (ch == '[') ++depth;
                    if (ch == ']') --depth;
                    if (ch == ',' && depth == 0) {
                        flush();
                        continue;
                    }
                    token += ch;
                }
                flush();
            }
            SearchOptions sopt;
            sopt.limits = limits;
            sopt.workers = cfg.workers;
            SearchResult res = exhaustive_search(*ring, s, prefix, positions, degree, sopt);
            if (cfg.store) {
                for (const auto& sol : res.solutions) {
                    ZDProductSpec full = prefix;
                    for (std::size_t q = 0; q < positions.size(); ++q)
                        if (sol[q])
                            full.factors.push_back(
                                {positions[q].first, positions[q].second, sol[q]});
                    append_store(cfg, ring->describe(), s, full, true);
                }
            }
            emit(cfg, json_search(ring->describe(), s, prefix, positions, degree, res));
            return kExitOk;
        }
        if (sharp->parsed()) {
            bool zero = sharpness_check(karg, earg, limits);
            emit(cfg, json_sharpness(karg, earg, zero));
            return kExitOk;
        }
        if (report->parsed()) {
            Space space = parse_space(space_str);
            ReportOptions ropt;
            ropt.limits = limits;
            ropt.store_path = cfg.store;
            TCBound bound = tc_report(space, s, ropt);
            if (bound.witness)
                append_store(cfg, bound.witness_space, s, *bound.witness, bound.lower > 0);
            emit(cfg, json_tc_report(bound, spec_letter(space)));
            return kExitOk;
        }
        if (gap->parsed()) {
            Space space = parse_space(space_str);
            if (!std::holds_alternative<FlagSpace>(space))
                throw std::invalid_argument("gap sequences are defined for flag manifolds");
            auto f = std::get<FlagSpace>(space);
            ReportOptions ropt;
            ropt.limits = limits;
            ropt.store_path = cfg.store;
            emit(cfg, json_gap(gap_sequence(f.k, f.m, smax, ropt)));
            return kExitOk;
        }
        if (verify_paper->parsed()) {
            SuiteOptions sopt;
            sopt.include_long = include_long;
            sopt.inject_fault = inject_fault;
            sopt.limits = limits;
            sopt.workers = cfg.workers;
            auto results = run_verification_suite(sopt);
            json doc = json_verify_paper(results, include_long);
            emit(cfg, doc);
            return suite_passed(results) ? kExitOk : kExitVerificationFailed;
        }
        std::cout << json{{"error", {{"message", "no subcommand"}, {"kind", "usage"}}}}.dump()
                  << "\n";
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        std::cout << json{{"error", {{"message", e.what()}, {"kind", "resource"}}}}.dump()
                  << "\n";
        return kExitResource;
    } catch (const ParseError& e) {
        std::cout << json{{"error",
                           {{"message", e.message}, {"kind", "parse"}, {"line", e.line},
                            {"column", e.column}}}}
                         .dump()
                  << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cout << json{{"error", {{"message", e.what()}, {"kind", "usage"}}}}.dump() << "\n";
        return kExitUsage;
    }
}

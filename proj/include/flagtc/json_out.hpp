#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "flagtc/checks.hpp"
#include "flagtc/zcl.hpp"

namespace flagtc {

/* JSON documents for every CLI command; the CLI prints these verbatim and
 * --pretty renders tables from the same objects */

nlohmann::json json_basis(const Ring& ring, std::size_t max_list);
nlohmann::json json_reduce(const Ring& ring, const std::string& expr, const RingElement& nf);
nlohmann::json json_verify_ring(const Ring& ring);
nlohmann::json json_zdp(const TensorRing& tr, const ZDProductSpec& spec,
                        const TensorElement& el, bool dump_terms, char letter);
nlohmann::json json_search(const std::string& space, int s, const ZDProductSpec& prefix,
                           const std::vector<std::pair<int, int>>& positions,
                           long long free_degree, const SearchResult& result);
nlohmann::json json_sharpness(int k, int e, bool zero);
nlohmann::json json_tc_report(const TCBound& bound, char letter);
nlohmann::json json_gap(const std::vector<GapValue>& gaps);
nlohmann::json json_verify_paper(const std::vector<CriterionResult>& results, bool include_long);

std::string render_pretty(const nlohmann::json& doc);

}  // namespace flagtc

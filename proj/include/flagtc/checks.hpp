#pragma once

#include <string>
#include <vector>

#include "flagtc/tensor.hpp"

namespace flagtc {

struct CheckResult {
    std::string id;
    bool pass = false;
    std::string detail;
};

struct CriterionResult {
    int number = 0;
    std::string title;
    bool long_running = false;
    bool pass = true;
    double seconds = 0.0;
    std::vector<CheckResult> items;
    std::size_t failed() const {
        std::size_t n = 0;
        for (const auto& it : items) n += !it.pass;
        return n;
    }
};

struct SuiteOptions {
    bool include_long = false;
    /* corrupts one rewrite rule in a scratch ring before checking it; the
     * suite must then fail, which is what this mode demonstrates */
    bool inject_fault = false;
    EvalLimits limits;
    int workers = 0;
};

/* the full verification suite, one criterion per entry */
std::vector<CriterionResult> run_verification_suite(const SuiteOptions& opt = {});

bool suite_passed(const std::vector<CriterionResult>& results);

}  // namespace flagtc

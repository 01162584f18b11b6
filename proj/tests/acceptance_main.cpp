/* Acceptance harness: runs every criterion of the verification suite and
 * prints one PASS/FAIL line per criterion.  Exit code 0 iff everything that
 * ran passed.  --include-long adds the extended searches. */

#include <cstdio>
#include <cstring>

#include "flagtc/checks.hpp"

int main(int argc, char** argv) {
    flagtc::SuiteOptions opt;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--include-long") == 0) opt.include_long = true;
        if (std::strcmp(argv[i], "--inject-fault") == 0) opt.inject_fault = true;
    }
    auto results = flagtc::run_verification_suite(opt);
    std::size_t failed = 0;
    for (const auto& c : results) {
        bool gated = c.long_running && !opt.include_long;
        std::printf("%s  %2d. %s (%zu checks, %.1fs)%s\n",
                    c.pass ? "PASS" : "FAIL", c.number, c.title.c_str(), c.items.size(),
                    c.seconds, gated ? " [gated: --include-long]" : "");
        if (!c.pass) {
            ++failed;
            for (const auto& it : c.items)
                if (!it.pass)
                    std::printf("      failed: %s%s%s\n", it.id.c_str(),
                                it.detail.empty() ? "" : " — ", it.detail.c_str());
        }
    }
    std::printf("%zu of %zu criteria passed\n", results.size() - failed, results.size());
    return failed == 0 ? 0 : 1;
}

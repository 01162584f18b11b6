#pragma once

#include <optional>
#include <string>
#include <vector>

#include "flagtc/flag_ring.hpp"
#include "flagtc/parse.hpp"
#include "flagtc/tensor.hpp"

namespace flagtc {

/* Certified interval for TC_s: lower from a re-verified nonzero product of
 * s-th zero-divisors, upper from s * dim. */
struct TCBound {
    Space space;
    int s = 2;
    long long lower = 0;
    long long upper = 0;
    std::optional<ZDProductSpec> witness;
    std::string witness_space;  // ring the witness was evaluated in
    std::string provenance;     // closed-form | registry | store | surface-certificate
    std::string detail;
};

struct GapValue {
    int k = 0, m = 0, s = 2;
    long long value = 0;  // s*dim - best verified zcl
    long long lower = 0, upper = 0;
};

/* (k-delta+eps)(2^{e+1}-1) + max(0, (delta-1)(2^e-1)) - eps,
 * requires 0 <= delta <= k-1 and 2*delta <= 2^e <= m+delta */
long long closed_form_lower_bound(int k, long long m, int delta, int e);

/* the two-factor certificate
 * (z_1...z_{k-d})^{2^{e+1}-1} z_{k-d+1}^{2^{e+1}-2} (z_{k-d+2}...z_k)^{2^e-1}
 * living in F(1^k, 2^e-d)^{(x)2} */
ZDProductSpec two_factor_certificate(int k, int e, int delta);

struct HigherCertificate {
    FlagSpace space;
    int s;
    ZDProductSpec spec;
    long long lower;
    std::string family;
};

/* the s-fold certificates: k = 1, 2, 3 in F(1^k, 2^e-k+1) reach s*dim */
HigherCertificate higher_certificate(int k, int e, int s);
/* F(1,1,2^e), e >= 2: reaches s(2^{e+1}+1) - 1 */
HigherCertificate even_k2_certificate(int e, int s);
/* F(1,1,2): reaches 5s - 3 */
HigherCertificate f112_certificate(int s);

/* largest exponent not yet forced to vanish: z^{2^t} = 0 once 2^t >= m+k */
long long default_exponent_cap(const FlagRing& ring);

struct SearchOptions {
    EvalLimits limits;
    std::vector<long long> caps;  // per free position; empty = default caps
    int workers = 0;              // 0 = hardware concurrency
};

struct SearchResult {
    std::vector<std::vector<long long>> solutions;  // lexicographically sorted
    std::uint64_t candidates = 0;
};

/* all assignments of exponents to `free_positions` with the given total
 * degree whose product (together with the prefix) is nonzero */
SearchResult exhaustive_search(const Ring& ring, int s, const ZDProductSpec& prefix,
                               const std::vector<std::pair<int, int>>& free_positions,
                               long long free_degree, const SearchOptions& opt = {});

/* true iff (z_1...z_k)^{2^{e+1}-1} = 0 in F(1^k, 2^e-1)^{(x)2} */
bool sharpness_check(int k, int e, const EvalLimits& limits = {});

struct StoreRecord {
    std::string space;
    int s = 2;
    std::string spec;
    bool nonzero = false;
    long long degree = 0;
    std::string timestamp;
};

void store_append(const std::string& path, const StoreRecord& rec);
std::vector<StoreRecord> store_read(const std::string& path);

struct ReportOptions {
    EvalLimits limits;
    std::optional<std::string> store_path;
    int max_padded_verification_s = 8;  // beyond: padding argued structurally
};

TCBound tc_report(const Space& space, int s, const ReportOptions& opt = {});
std::vector<GapValue> gap_sequence(int k, int m, int s_max, const ReportOptions& opt = {});

/* evaluates c_{2,1}^3 c_{3,1}^3 prod_{i>=4} c_{i,1}^2 in H*(N_n)^{(x)s} */
TCBound verify_surface_tcs(int n, int s, const EvalLimits& limits = {});

struct KnownWitness {
    const char* space;
    int s;
    const char* spec;
    const char* label;
};
std::vector<KnownWitness> known_witnesses();

}  // namespace flagtc

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace abptk {

/// str(F) >= ceil(codim Sing(F) / 2).
std::int64_t strength_lb_sing(std::int64_t codim_sing);

/// B_hom(F) >= (d - 1) * ceil(codim Sing(F) / 2).
std::int64_t kumar_abp_lb(std::int64_t d, std::int64_t codim_sing);

/// Smallest r >= 0 with k^r >= s (the exact ceil(log_k s) for k >= 2).
std::int64_t ceil_log(std::int64_t k, std::int64_t s);

/// Largest t >= 0 with t^m <= v.
std::int64_t floor_root(std::int64_t v, std::int64_t m);

/// str_k(F) >= min{c + 1, ceil(log_k s)} for k >= 2; the k = 1 branch is
/// the slice-rank bound c + 1.
std::int64_t restricted_strength_lb(std::int64_t k, std::int64_t c, std::int64_t s);

/// Metadata a bound formula consumes. Formulas refuse (throw) when a field
/// they need is missing.
struct BoundInput {
    std::int64_t d = 0;
    std::int64_t n_vars = 0;
    std::optional<std::int64_t> codim_sing;
    std::optional<std::int64_t> c;  // subvariety codim threshold
    std::optional<std::int64_t> s;  // subvariety degree bound
    std::string provenance = "paper-metadata";  // paper-metadata | computed | user-claimed
};

struct TraceEntry {
    std::optional<std::int64_t> j;  // absent for whole-report entries
    std::string rule;
    std::int64_t value = 0;
    std::string note;
};

struct BoundReport {
    std::map<std::int64_t, std::int64_t> per_j_lower;
    std::int64_t total_abp_lower = 0;
    std::vector<TraceEntry> formula_trace;
    std::string status = "proven";  // proven | conjecture
};

/// Per-j lower bounds for P_{n,d} aggregated over the layers, plus the two
/// closed forms (the small-degree one gated by d^2 <= 2^{n+1}, and the
/// general display in both the stated and the proof-exponent readings).
BoundReport p_family_report(std::int64_t n, std::int64_t d);

/// Totals 3(d-1)+2 for n = 4 (d >= 5) and 2(d-1)+2 for n = 2; other even n
/// get the conjectural value, tagged, never asserted.
BoundReport shioda_report(std::int64_t n, std::int64_t d);

/// Power-sum report: Kumar's bound spread across the layers.
BoundReport power_sum_report(std::int64_t n, std::int64_t d);

/// Per-layer aggregation from explicit metadata: each layer takes the best
/// of the singular-locus bound and, when c and s are present, the
/// restricted-strength bound.
BoundReport report_from_input(const BoundInput& in);

}  // namespace abptk

#include "abptk/bounds.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace abptk {

namespace {

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

/// k^r with saturation above the comparison range.
std::int64_t sat_pow(std::int64_t k, std::int64_t r, std::int64_t cap) {
    if (k == 0) return r == 0 ? 1 : 0;
    std::int64_t acc = 1;
    for (std::int64_t i = 0; i < r; ++i) {
        if (acc > cap / k) return cap + 1;
        acc *= k;
    }
    return acc;
}

}  // namespace

std::int64_t strength_lb_sing(std::int64_t codim_sing) {
    if (codim_sing < 0) throw std::invalid_argument("strength_lb_sing: negative codimension");
    return ceil_div(codim_sing, 2);
}

std::int64_t kumar_abp_lb(std::int64_t d, std::int64_t codim_sing) {
    if (d < 2) throw std::invalid_argument("kumar_abp_lb: d >= 2 required");
    return (d - 1) * strength_lb_sing(codim_sing);
}

std::int64_t ceil_log(std::int64_t k, std::int64_t s) {
    if (k < 2 || s < 1) throw std::invalid_argument("ceil_log: k >= 2 and s >= 1 required");
    std::int64_t r = 0;
    while (sat_pow(k, r, s) < s) ++r;
    return r;
}

std::int64_t floor_root(std::int64_t v, std::int64_t m) {
    if (v < 0 || m < 1) throw std::invalid_argument("floor_root: v >= 0 and m >= 1 required");
    std::int64_t t = 0;
    while (sat_pow(t + 1, m, v) <= v) ++t;
    return t;
}

std::int64_t restricted_strength_lb(std::int64_t k, std::int64_t c, std::int64_t s) {
    if (s < 2) throw std::invalid_argument("restricted_strength_lb: s >= 2 required");
    if (c < 0 || k < 1) throw std::invalid_argument("restricted_strength_lb: c >= 0, k >= 1 required");
    if (k == 1) return c + 1;
    return std::min(c + 1, ceil_log(k, s));
}

namespace {

/// Fills per_j (symmetrized under j <-> d-j), totals it, and appends the
/// per-layer trace.
void aggregate(BoundReport& rep, std::int64_t d,
               const std::function<std::int64_t(std::int64_t)>& per_layer) {
    for (std::int64_t j = 1; j <= d - 1; ++j)
        rep.per_j_lower[j] = std::max(per_layer(j), per_layer(d - j));
    rep.total_abp_lower = 0;
    for (auto& [j, v] : rep.per_j_lower) {
        rep.total_abp_lower += v;
        rep.formula_trace.push_back({j, "per-layer", v, ""});
    }
    rep.formula_trace.push_back({std::nullopt, "total", rep.total_abp_lower, "sum over layers"});
}

}  // namespace

BoundReport p_family_report(std::int64_t n, std::int64_t d) {
    if (n < 1 || d < 2) throw std::invalid_argument("p_family_report: n >= 1 and d >= 2 required");
    BoundReport rep;
    std::int64_t base = ceil_div(n + 1, 2);  // codim Sing = n+1
    auto per_layer = [&](std::int64_t j) {
        return std::max(base, restricted_strength_lb(j, n, d));
    };
    aggregate(rep, d, per_layer);

    // Small-degree closed form, applicable for d >= 3 under the exact gate
    // d <= 2^{(n+1)/2}, i.e. d^2 <= 2^{n+1}.
    bool gate = d >= 3 && n + 1 <= 62 && d * d <= (std::int64_t{1} << (n + 1));
    std::int64_t closed_small = (d - 1) * ceil_div(n + 1, 2) + 2 * ((n + 1) / 2);
    rep.formula_trace.push_back({std::nullopt, "closed-form-small-degree", closed_small,
                                 gate ? "applicable: d >= 3 and d^2 <= 2^{n+1}"
                                      : "not applicable: needs d >= 3 and d^2 <= 2^{n+1}"});

    // General-degree display: stated sum limit uses exponent 2/(n+1); the
    // proof text uses 2/(n+2). Both are emitted; negative summands clamp.
    std::int64_t t1 = floor_root(d, n + 1);
    auto general = [&](std::int64_t t2, const std::string& rule, std::string note) {
        std::int64_t val = (d - 1) * ceil_div(n + 1, 2) + 2 * ((n + 1) / 2) * t1;
        bool clamped = false;
        for (std::int64_t j = std::max<std::int64_t>(t1 + 1, 2); j <= t2; ++j) {
            std::int64_t term = ceil_log(j, d) - base;
            if (term < 0) {
                term = 0;
                clamped = true;
            }
            val += term;
        }
        if (clamped) note += "; negative summands clamped at 0";
        bool disjoint = 2 * t1 <= d - 1 && t2 <= d - 1 - t1;
        if (!disjoint) note += "; split regions overlap: display can exceed the per-layer total";
        rep.formula_trace.push_back({std::nullopt, rule, val, std::move(note)});
        return std::pair<std::int64_t, bool>{val, disjoint};
    };
    general(floor_root(d * d, n + 1), "closed-form-general-stated",
            "warning: statement exponent 2/(n+1) disagrees with the proof's 2/(n+2)");
    general(floor_root(d * d, n + 2), "closed-form-general-proof-exponent", "");
    return rep;
}

BoundReport shioda_report(std::int64_t n, std::int64_t d) {
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("shioda_report: even n >= 2 required");
    if (d < 3) throw std::invalid_argument("shioda_report: d >= 3 required");
    BoundReport rep;
    std::int64_t mid = ceil_div(n + 2, 2);  // empty singular locus in P^{n+1}
    std::int64_t sr;
    if (n == 2) {
        sr = 3;
    } else if (n == 4) {
        sr = d >= 5 ? 4 : mid;
        if (d < 5)
            rep.formula_trace.push_back({std::nullopt, "sr-branch-inactive", mid,
                                         "exact slice rank of S_{4,d} is proven for d >= 5 only"});
    } else {
        sr = n / 2 + 2;  // conjectural value
        rep.status = "conjecture";
        rep.formula_trace.push_back({std::nullopt, "conjectured-slice-rank", sr,
                                     "slice rank n/2 + 2 is conjectural for n >= 6"});
    }
    auto per_layer = [&](std::int64_t j) { return (j == 1 || j == d - 1) ? sr : mid; };
    aggregate(rep, d, per_layer);
    return rep;
}

BoundReport power_sum_report(std::int64_t n, std::int64_t d) {
    if (n < 0 || d < 2) throw std::invalid_argument("power_sum_report: n >= 0 and d >= 2 required");
    BoundReport rep;
    std::int64_t base = ceil_div(n + 1, 2);  // empty singular locus in P^n
    aggregate(rep, d, [&](std::int64_t) { return base; });
    rep.formula_trace.push_back(
        {std::nullopt, "kumar", kumar_abp_lb(d, n + 1), "(d-1) * ceil((n+1)/2), Sing empty"});
    return rep;
}

BoundReport report_from_input(const BoundInput& in) {
    if (in.d < 2) throw std::invalid_argument("report_from_input: d >= 2 required");
    if (!in.codim_sing && !(in.c && in.s))
        throw std::invalid_argument(
            "report_from_input: needs codim_sing or both c and s (formula refuses)");
    BoundReport rep;
    std::int64_t base = in.codim_sing ? strength_lb_sing(*in.codim_sing) : 0;
    auto per_layer = [&](std::int64_t j) {
        std::int64_t v = base;
        if (in.c && in.s && *in.s >= 2) v = std::max(v, restricted_strength_lb(j, *in.c, *in.s));
        return v;
    };
    aggregate(rep, in.d, per_layer);
    rep.formula_trace.push_back({std::nullopt, "metadata", 0, "provenance: " + in.provenance});
    return rep;
}

}  // namespace abptk

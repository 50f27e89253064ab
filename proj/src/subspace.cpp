#include "abptk/subspace.hpp"

namespace abptk {

std::vector<std::vector<std::size_t>> pivot_patterns_colex(std::size_t n, std::size_t r) {
    std::vector<std::vector<std::size_t>> all;
    if (r > n) return all;
    std::vector<std::size_t> c(r);
    for (std::size_t i = 0; i < r; ++i) c[i] = i;
    while (true) {
        all.push_back(c);
        // next combination in lex order
        std::size_t i = r;
        while (i > 0 && c[i - 1] == n - r + i - 1) --i;
        if (i == 0) break;
        ++c[i - 1];
        for (std::size_t j = i; j < r; ++j) c[j] = c[j - 1] + 1;
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) {
        return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
    });
    return all;
}

std::uint64_t gaussian_binomial(std::size_t n, std::size_t r, std::uint64_t p) {
    if (r > n) return 0;
    // prod_{i=0}^{r-1} (p^{n-i} - 1) / (p^{r-i} - 1), computed as an exact
    // integer via the q-factorial recurrence to avoid intermediate overflow
    const __uint128_t max128 = ~__uint128_t{0};
    __uint128_t acc = 1;
    auto qint = [p, max128](std::size_t m) {  // 1 + p + ... + p^{m-1}
        __uint128_t s = 0, pw = 1;
        for (std::size_t i = 0; i < m; ++i) {
            s += pw;
            if (i + 1 < m) {
                if (pw > max128 / p) throw std::overflow_error("gaussian binomial overflow");
                pw *= p;
            }
        }
        return s;
    };
    // [n choose r]_p = prod_{i=1}^{r} qint(n - r + i) / qint(i)
    for (std::size_t i = 1; i <= r; ++i) {
        __uint128_t q = qint(n - r + i);
        if (acc > max128 / q) throw std::overflow_error("gaussian binomial overflow");
        acc *= q;
        acc /= qint(i);  // exact at every step (q-binomial coefficients are integers)
    }
    if (acc > static_cast<__uint128_t>(UINT64_MAX))
        throw std::overflow_error("gaussian binomial exceeds 64 bits");
    return static_cast<std::uint64_t>(acc);
}

namespace {

/// Free entry slots of an echelon matrix with the given pivot pattern:
/// (row i, column j) with j not a pivot and j > pivots[i], row-major.
std::vector<std::pair<std::size_t, std::size_t>> free_slots(
    const std::vector<std::size_t>& pivots, std::size_t n) {
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t i = 0; i < pivots.size(); ++i)
        for (std::size_t j = pivots[i] + 1; j < n; ++j)
            if (!is_pivot[j]) slots.emplace_back(i, j);
    return slots;
}

Matrix<Fp> echelon_from_counter(const std::vector<std::size_t>& pivots,
                                const std::vector<std::pair<std::size_t, std::size_t>>& slots,
                                std::uint64_t counter, std::size_t n, Fp::Context ctx) {
    Matrix<Fp> m(pivots.size(), n, ctx);
    for (std::size_t i = 0; i < pivots.size(); ++i) m.at(i, pivots[i]) = ctx.one();
    for (const auto& [i, j] : slots) {
        m.at(i, j) = ctx.from_int(static_cast<long>(counter % ctx.p));
        counter /= ctx.p;
    }
    return m;
}

std::uint64_t pow_u64(std::uint64_t b, std::size_t e) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < e; ++i) r *= b;
    return r;
}

SearchResult run_search(const Polynomial<Fp>& f, std::size_t r, const SearchOptions& opts) {
    if (r > f.num_vars()) throw std::invalid_argument("search: codim exceeds variable count");
    auto ctx = f.context();
    std::size_t n = f.num_vars();
    auto patterns = pivot_patterns_colex(n, r);

    std::uint64_t total = gaussian_binomial(n, r, ctx.p);
    SearchResult res;
    if (total > opts.budget) {
        res.candidates = total;
        res.budget_exceeded = true;
        return res;
    }

    auto scan_pattern = [&](const std::vector<std::size_t>& pivots) {
        std::vector<LinearSubspace<Fp>> hits;
        auto slots = free_slots(pivots, n);
        std::uint64_t count = pow_u64(ctx.p, slots.size());
        for (std::uint64_t c = 0; c < count; ++c) {
            auto m = echelon_from_counter(pivots, slots, c, n, ctx);
            LinearSubspace<Fp> q(m, pivots);
            if (opts.through_point && !q.contains_point(*opts.through_point)) continue;
            if (contains_check(f, q)) hits.push_back(std::move(q));
        }
        return hits;
    };

    if (opts.threads > 1 && patterns.size() > 1) {
        std::vector<std::future<std::vector<LinearSubspace<Fp>>>> futs;
        futs.reserve(patterns.size());
        for (const auto& pat : patterns)
            futs.push_back(std::async(std::launch::async, scan_pattern, pat));
        for (auto& fu : futs)
            for (auto& q : fu.get()) res.found.push_back(std::move(q));
    } else {
        for (const auto& pat : patterns)
            for (auto& q : scan_pattern(pat)) res.found.push_back(std::move(q));
    }
    res.candidates = total;
    return res;
}

}  // namespace

SearchResult exhaustive_search(const Polynomial<Fp>& f, std::size_t r, const SearchOptions& opts) {
    SearchOptions o = opts;
    o.through_point.reset();
    return run_search(f, r, o);
}

SearchResult search_through_point(const Polynomial<Fp>& f, const std::vector<Fp>& p0,
                                  std::size_t r, const SearchOptions& opts) {
    if (p0.size() != f.num_vars())
        throw std::invalid_argument("search_through_point: point length mismatch");
    bool all_zero = true;
    for (const auto& c : p0) all_zero = all_zero && c.is_zero();
    if (all_zero) throw std::invalid_argument("search_through_point: zero vector is not a point");
    SearchOptions o = opts;
    o.through_point = p0;
    return run_search(f, r, o);
}

std::vector<ChartSystem> build_chart_systems(const Polynomial<Rational>& f, std::size_t r) {
    if (r > f.num_vars()) throw std::invalid_argument("build_chart_systems: codim too large");
    std::size_t n = f.num_vars();
    auto patterns = pivot_patterns_colex(n, r);
    std::vector<ChartSystem> systems;
    systems.reserve(patterns.size());
    for (const auto& pivots : patterns) {
        ChartSystem cs;
        cs.pivots = pivots;
        cs.unknown_slots = free_slots(pivots, n);
        cs.num_unknowns = cs.unknown_slots.size();
        // Combined ring: unknowns u_0..u_{m-1}, then the free x-variables.
        std::vector<bool> is_pivot(n, false);
        for (auto p : pivots) is_pivot[p] = true;
        std::vector<std::size_t> free_vars;
        for (std::size_t j = 0; j < n; ++j)
            if (!is_pivot[j]) free_vars.push_back(j);
        std::size_t m = cs.num_unknowns;
        std::size_t big = m + free_vars.size();
        Rational::Context ctx;
        std::vector<std::size_t> free_pos(n, SIZE_MAX);
        for (std::size_t t = 0; t < free_vars.size(); ++t) free_pos[free_vars[t]] = m + t;
        std::vector<Polynomial<Rational>> images;
        images.reserve(n);
        for (std::size_t j = 0; j < n; ++j) images.push_back(Polynomial<Rational>::zero(big, ctx));
        for (std::size_t t = 0; t < free_vars.size(); ++t)
            images[free_vars[t]] = Polynomial<Rational>::variable(big, m + t, ctx);
        for (std::size_t s = 0; s < m; ++s) {
            auto [row, col] = cs.unknown_slots[s];
            // x_{pivots[row]} gets -u_s * x_col
            Monomial mo(big);
            mo.exps[s] += 1;
            mo.exps[free_pos[col]] += 1;
            images[pivots[row]] += Polynomial<Rational>::monomial(big, mo, Rational(-1));
        }
        auto substituted = f.compose(images);
        // group by the x-part of each monomial; the u-part polynomials are the equations
        std::map<Monomial, Polynomial<Rational>, GrlexGreater> groups;
        for (const auto& [mo, c] : substituted.terms()) {
            Monomial xpart(big), upart(m);
            for (std::size_t v = 0; v < big; ++v) {
                if (v < m)
                    upart.exps[v] = mo.exps[v];
                else
                    xpart.exps[v] = mo.exps[v];
            }
            auto it = groups.find(xpart);
            if (it == groups.end())
                it = groups.emplace(xpart, Polynomial<Rational>::zero(m, ctx)).first;
            it->second.add_term(upart, c);
        }
        for (auto& [xp, eq] : groups)
            if (!eq.is_zero()) cs.equations.push_back(eq);
        systems.push_back(std::move(cs));
    }
    return systems;
}

namespace {

/// The single unknown of a one-term equation unit*u^e, if it has that shape.
std::optional<std::size_t> forced_unknown(const Polynomial<Rational>& eq) {
    if (eq.term_count() != 1) return std::nullopt;
    const auto& [m, c] = *eq.terms().begin();
    std::optional<std::size_t> var;
    for (std::size_t i = 0; i < m.exps.size(); ++i) {
        if (m.exps[i] == 0) continue;
        if (var) return std::nullopt;  // more than one unknown in the term
        var = i;
    }
    return var;  // nullopt for a constant term: handled as refutation elsewhere
}

Polynomial<Rational> kill_variable(const Polynomial<Rational>& eq, std::size_t var) {
    Polynomial<Rational> r(eq.num_vars(), eq.context());
    for (const auto& [m, c] : eq.terms())
        if (m.exps[var] == 0) r.add_term(m, c);
    return r;
}

ChartOutcome run_chart(const ChartSystem& cs) {
    ChartOutcome out;
    std::vector<Polynomial<Rational>> eqs = cs.equations;
    bool changed = true;
    while (changed) {
        changed = false;
        std::vector<Polynomial<Rational>> next;
        for (const auto& eq : eqs) {
            if (eq.is_zero()) continue;
            if (*eq.degree() == 0) {  // nonzero constant: contradiction
                out.refuted = true;
                out.residual.clear();
                return out;
            }
            next.push_back(eq);
        }
        eqs = std::move(next);
        for (const auto& eq : eqs) {
            auto var = forced_unknown(eq);
            if (!var) continue;
            out.forced_zero.push_back(*var);
            for (auto& e : eqs) e = kill_variable(e, *var);
            changed = true;
            break;
        }
    }
    out.residual = eqs;
    return out;
}

}  // namespace

RefuteResult propagation_refute(const std::vector<ChartSystem>& systems) {
    RefuteResult res;
    res.per_chart.reserve(systems.size());
    for (const auto& cs : systems) res.per_chart.push_back(run_chart(cs));
    res.refuted = true;
    for (std::size_t i = 0; i < res.per_chart.size(); ++i) {
        if (!res.per_chart[i].refuted) {
            res.refuted = false;
            if (!res.witness_chart) res.witness_chart = i;
        }
    }
    if (systems.empty()) res.refuted = false;  // nothing to refute
    return res;
}

}  // namespace abptk

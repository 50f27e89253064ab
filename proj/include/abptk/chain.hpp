#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "abptk/abp.hpp"
#include "abptk/matrix.hpp"
#include "abptk/polynomial.hpp"

namespace abptk {

/// For one target generator: the linear-form multipliers against each
/// source generator, so that target = sum_i source_i * multiplier_i.
template <class K>
struct InclusionCertificate {
    std::vector<LinearForm<K>> multipliers;
};

/// Descending ideal chain I_1 > I_2 > ... > I_d = <F>, level k holding the
/// degree-k generators of I_k. levels[k-1] is level k. certificates[k-1],
/// when populated, witnesses the inclusion of level k+1 into level k; the
/// JSON format carries levels only, so file-loaded chains are re-certified
/// by the solver.
template <class K>
struct IdealChain {
    std::size_t num_vars = 0;
    typename K::Context ctx;
    std::vector<std::vector<Polynomial<K>>> levels;
    std::vector<std::vector<InclusionCertificate<K>>> certificates;

    std::size_t depth() const { return levels.size(); }

    bool certificates_consistent() const {
        if (certificates.size() + 1 != levels.size()) return false;
        for (std::size_t k = 0; k + 1 < levels.size(); ++k) {
            if (certificates[k].size() != levels[k + 1].size()) return false;
            for (const auto& cert : certificates[k])
                if (cert.multipliers.size() != levels[k].size()) return false;
        }
        return true;
    }
};

template <class K>
struct InclusionResult {
    bool ok = false;
    std::vector<InclusionCertificate<K>> certificates;  // one per target generator
    std::size_t failed_index = 0;                       // first unrepresentable generator
};

/// Solves target_j = sum_i source_i * L_ij exactly for linear forms L_ij.
/// Unknowns: (num_vars * #source) coefficients; equations: one per monomial
/// of degree k+1. Underdetermined systems take the canonical rref solution
/// (free variables zero).
template <class K>
InclusionResult<K> check_inclusion(const std::vector<Polynomial<K>>& source,
                                   const std::vector<Polynomial<K>>& target) {
    InclusionResult<K> res;
    if (source.empty() || target.empty())
        throw std::invalid_argument("check_inclusion: empty generator list");
    auto ctx = source.front().context();
    std::size_t n = source.front().num_vars();
    std::size_t w = source.size();

    for (std::size_t j = 0; j < target.size(); ++j) {
        const auto& tgt = target[j];
        // column space: products source_i * x_v
        std::vector<Polynomial<K>> columns;
        columns.reserve(w * n);
        for (std::size_t i = 0; i < w; ++i)
            for (std::size_t v = 0; v < n; ++v)
                columns.push_back(source[i] * Polynomial<K>::variable(n, v, ctx));
        // row index: union of monomials across columns and the target
        std::map<Monomial, std::size_t, GrlexGreater> rows;
        auto note = [&rows](const Polynomial<K>& p) {
            for (const auto& [m, c] : p.terms()) rows.emplace(m, 0);
        };
        for (const auto& col : columns) note(col);
        note(tgt);
        std::size_t idx = 0;
        for (auto& [m, i] : rows) i = idx++;

        Matrix<K> a(rows.size(), columns.size(), ctx);
        for (std::size_t c = 0; c < columns.size(); ++c)
            for (const auto& [m, coeff] : columns[c].terms()) a.at(rows.at(m), c) = coeff;
        std::vector<K> b(rows.size(), ctx.zero());
        for (const auto& [m, coeff] : tgt.terms()) b[rows.at(m)] = coeff;

        auto sol = solve_linear(a, b);
        if (!sol) {
            res.ok = false;
            res.failed_index = j;
            return res;
        }
        InclusionCertificate<K> cert;
        for (std::size_t i = 0; i < w; ++i) {
            LinearForm<K> lf = LinearForm<K>::zero(n, ctx);
            for (std::size_t v = 0; v < n; ++v) lf.coeffs[v] = (*sol)[i * n + v];
            cert.multipliers.push_back(std::move(lf));
        }
        res.certificates.push_back(std::move(cert));
    }
    res.ok = true;
    return res;
}

/// Level k = the polynomials computed from the source to each layer-k
/// vertex, zero polynomials (dead vertices) dropped. The program's own
/// labels certify every inclusion and are stored on the chain.
template <class K>
IdealChain<K> extract_chain(const Abp<K>& a) {
    auto val = a.validate();
    if (!val.ok) throw std::invalid_argument("extract_chain: invalid ABP: " + val.violation);
    IdealChain<K> chain;
    chain.num_vars = a.num_vars();
    chain.ctx = a.context();
    std::vector<std::vector<std::size_t>> live;  // per layer, surviving vertex indices
    for (std::size_t k = 1; k < a.num_layers(); ++k) {
        std::vector<Polynomial<K>> level;
        std::vector<std::size_t> kept;
        for (std::size_t v = 0; v < a.widths()[k]; ++v) {
            auto p = a.expand({0, 0}, {k, v});
            if (p.is_zero()) continue;
            level.push_back(std::move(p));
            kept.push_back(v);
        }
        if (level.empty())
            throw std::invalid_argument("extract_chain: the program computes the zero polynomial");
        chain.levels.push_back(std::move(level));
        live.push_back(std::move(kept));
    }
    for (std::size_t k = 0; k + 1 < chain.levels.size(); ++k) {
        std::vector<InclusionCertificate<K>> certs;
        for (std::size_t jt = 0; jt < live[k + 1].size(); ++jt) {
            InclusionCertificate<K> cert;
            for (std::size_t it = 0; it < live[k].size(); ++it) {
                auto lf = LinearForm<K>::zero(a.num_vars(), a.context());
                for (const auto& e : a.edges())
                    if (e.layer == k + 1 && e.from == live[k][it] && e.to == live[k + 1][jt])
                        lf = e.label;
                cert.multipliers.push_back(std::move(lf));
            }
            certs.push_back(std::move(cert));
        }
        chain.certificates.push_back(std::move(certs));
    }
    return chain;
}

/// The program whose layer-k width is the level-k generator count and whose
/// labels come from the inclusion certificates. Expands back to the chain's
/// final polynomial exactly.
template <class K>
Abp<K> synthesize_abp(const IdealChain<K>& chain) {
    if (chain.levels.empty()) throw std::invalid_argument("synthesize_abp: empty chain");
    std::size_t d = chain.levels.size();
    auto ctx = chain.ctx;
    std::size_t n = chain.num_vars;
    for (std::size_t k = 0; k < d; ++k) {
        if (chain.levels[k].empty()) throw std::invalid_argument("synthesize_abp: empty level");
        for (const auto& g : chain.levels[k])
            if (g.is_zero() || !g.is_homogeneous() || *g.degree() != k + 1)
                throw std::invalid_argument("synthesize_abp: level " + std::to_string(k + 1) +
                                            " generator of wrong degree");
    }
    if (chain.levels.back().size() != 1)
        throw std::invalid_argument("synthesize_abp: final level must hold a single polynomial");

    std::vector<std::size_t> widths;
    widths.push_back(1);
    for (const auto& lvl : chain.levels) widths.push_back(lvl.size());
    Abp<K> a(n, ctx, widths);

    // First layer: the degree-1 generators are the labels themselves.
    for (std::size_t i = 0; i < chain.levels[0].size(); ++i) {
        auto lf = as_linear_form(chain.levels[0][i]);
        if (!lf) throw std::invalid_argument("synthesize_abp: level 1 generator is not linear");
        a.add_edge(0, 0, i, *lf);
    }
    bool stored = chain.certificates_consistent();
    for (std::size_t k = 0; k + 1 < d; ++k) {
        std::vector<InclusionCertificate<K>> certs;
        if (stored) {
            certs = chain.certificates[k];
        } else {
            auto inc = check_inclusion(chain.levels[k], chain.levels[k + 1]);
            if (!inc.ok)
                throw std::invalid_argument("synthesize_abp: inclusion fails at level " +
                                            std::to_string(k + 1) + " -> " + std::to_string(k + 2) +
                                            " (generator " + std::to_string(inc.failed_index) + ")");
            certs = std::move(inc.certificates);
        }
        for (std::size_t j = 0; j < certs.size(); ++j)
            for (std::size_t i = 0; i < certs[j].multipliers.size(); ++i) {
                const auto& lf = certs[j].multipliers[i];
                if (!lf.is_zero()) a.add_edge(k + 1, i, j, lf);
            }
    }
    return a;
}

/// Prunes K-linearly-dependent generators per level (keeping the earliest
/// independent set), for re-synthesis at smaller widths.
template <class K>
IdealChain<K> minimize_chain(const IdealChain<K>& chain) {
    IdealChain<K> out;
    out.num_vars = chain.num_vars;
    out.ctx = chain.ctx;
    for (const auto& lvl : chain.levels) {
        // coefficient matrix of the level, one row per generator
        std::map<Monomial, std::size_t, GrlexGreater> cols;
        for (const auto& g : lvl)
            for (const auto& [m, c] : g.terms()) cols.emplace(m, 0);
        std::size_t idx = 0;
        for (auto& [m, i] : cols) i = idx++;
        Matrix<K> mt(cols.size(), lvl.size(), chain.ctx);
        for (std::size_t j = 0; j < lvl.size(); ++j)
            for (const auto& [m, c] : lvl[j].terms()) mt.at(cols.at(m), j) = c;
        auto [red, piv] = rref(std::move(mt));
        std::vector<Polynomial<K>> kept;
        for (auto p : piv) kept.push_back(lvl[p]);
        out.levels.push_back(std::move(kept));
    }
    return out;
}

}  // namespace abptk

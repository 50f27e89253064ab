#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abptk/polynomial.hpp"
#include "abptk/rational.hpp"
#include "abptk/subspace.hpp"

namespace abptk {

/// F = sum G_k H_k with homogeneous factors of degree strictly between 0
/// and deg F; restriction j pins deg G_k = j for every k (j = 1 is a slice
/// decomposition).
template <class K>
struct StrengthDecomposition {
    std::vector<std::pair<Polynomial<K>, Polynomial<K>>> pairs;
    std::size_t target_degree = 0;
    std::optional<std::size_t> restriction;

    std::size_t summands() const { return pairs.size(); }
};

struct DecompCheck {
    bool ok = false;
    std::string message;  // first failed check
};

template <class K>
DecompCheck verify(const Polynomial<K>& f, const StrengthDecomposition<K>& dec) {
    auto fail = [](std::string m) { return DecompCheck{false, std::move(m)}; };
    if (f.is_zero() || !f.is_homogeneous()) return fail("target polynomial not nonzero homogeneous");
    auto d = *f.degree();
    if (dec.target_degree != d) return fail("decomposition degree disagrees with target degree");
    if (dec.restriction && (*dec.restriction < 1 || *dec.restriction > d - 1))
        return fail("restriction out of range");
    Polynomial<K> sum(f.num_vars(), f.context());
    for (std::size_t k = 0; k < dec.pairs.size(); ++k) {
        const auto& [g, h] = dec.pairs[k];
        std::string at = "pair " + std::to_string(k);
        if (g.is_zero() || h.is_zero()) return fail(at + ": zero factor");
        if (!g.is_homogeneous() || !h.is_homogeneous()) return fail(at + ": non-homogeneous factor");
        auto dg = *g.degree(), dh = *h.degree();
        if (dg < 1 || dg > d - 1 || dh < 1 || dh > d - 1) return fail(at + ": factor degree out of range");
        if (dg + dh != d) return fail(at + ": factor degrees do not sum to target degree");
        if (dec.restriction && dg != *dec.restriction)
            return fail(at + ": first factor degree differs from restriction");
        sum += g * h;
    }
    if (sum != f) return fail("identity mismatch");
    return {true, "ok"};
}

/// The displayed slice decomposition of S_{n,d}, n even: n/2 + 2 summands
/// with slices x1, x3, ..., x_{n-1}, x_n, x_{n+1}.
StrengthDecomposition<Rational> shioda_slice_decomposition(std::size_t n, std::size_t d);

/// The (n+1)-summand j-restricted decomposition of P_{n,d}:
/// x0^j * x0^{d-j} + sum_k (x_{2k-1} x_{2k}^{j-1}) * x_{2k}^{d-j}.
StrengthDecomposition<Rational> p_restricted_decomposition(std::size_t n, std::size_t d,
                                                           std::size_t j);

/// Swapping the factor pairs turns a j-restricted decomposition into a
/// (d-j)-restricted one with the same summand count.
template <class K>
StrengthDecomposition<K> swap_pairs(const StrengthDecomposition<K>& dec) {
    StrengthDecomposition<K> out;
    out.target_degree = dec.target_degree;
    if (dec.restriction) out.restriction = dec.target_degree - *dec.restriction;
    for (const auto& [g, h] : dec.pairs) out.pairs.emplace_back(h, g);
    return out;
}

/// Slice decomposition F = sum L_k H_k with L_k the defining forms of Q.
/// The forms are completed to a coordinate system via their rref pivots,
/// F is rewritten in the new coordinates and each monomial is claimed by
/// its lowest-index slice. Requires contains_check(F, Q).
template <class K>
StrengthDecomposition<K> slice_from_subspace(const Polynomial<K>& f, const LinearSubspace<K>& q) {
    if (f.is_zero() || !f.is_homogeneous() || *f.degree() < 2)
        throw std::invalid_argument("slice_from_subspace: homogeneous input of degree >= 2 required");
    if (q.codim() == 0) throw std::invalid_argument("slice_from_subspace: subspace has no forms");
    if (!contains_check(f, q))
        throw std::invalid_argument("slice_from_subspace: polynomial is not in the form ideal");
    auto ctx = f.context();
    std::size_t n = f.num_vars();
    std::size_t r = q.codim();
    const auto& piv = q.pivots();
    std::vector<bool> is_pivot(n, false);
    for (auto p : piv) is_pivot[p] = true;

    // Change of coordinates y = T x: rows 0..r-1 are the forms, the rest
    // are the non-pivot standard coordinates (lowest index first).
    Matrix<K> t(n, n, ctx);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j) t.at(i, j) = q.echelon().at(i, j);
    std::size_t row = r;
    for (std::size_t j = 0; j < n; ++j)
        if (!is_pivot[j]) t.at(row++, j) = ctx.one();

    // Inverse substitution x = T^{-1} y, solved column by column.
    Matrix<K> tinv(n, n, ctx);
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<K> e(n, ctx.zero());
        e[j] = ctx.one();
        auto sol = solve_linear(t, e);
        for (std::size_t i = 0; i < n; ++i) tinv.at(i, j) = (*sol)[i];
    }
    std::vector<LinearForm<K>> x_in_y;
    x_in_y.reserve(n);
    for (std::size_t i = 0; i < n; ++i) x_in_y.push_back(LinearForm<K>(tinv.row(i)));
    auto f_y = f.substitute_linear(x_in_y);

    // Group monomials by their lowest slice coordinate.
    std::vector<Polynomial<K>> h_y(r, Polynomial<K>::zero(n, ctx));
    for (const auto& [m, c] : f_y.terms()) {
        std::size_t slice = r;
        for (std::size_t i = 0; i < r; ++i)
            if (m.exps[i] > 0) {
                slice = i;
                break;
            }
        if (slice == r)
            throw std::logic_error("slice_from_subspace: monomial misses every slice coordinate");
        Monomial rest = m;
        rest.exps[slice] -= 1;
        h_y[slice].add_term(rest, c);
    }

    // Map the cofactors back: y_i as linear forms in x.
    std::vector<LinearForm<K>> y_in_x;
    y_in_x.reserve(n);
    for (std::size_t i = 0; i < n; ++i) y_in_x.push_back(LinearForm<K>(t.row(i)));
    StrengthDecomposition<K> out;
    out.target_degree = static_cast<std::size_t>(*f.degree());
    out.restriction = 1;
    auto qforms = q.forms();
    for (std::size_t i = 0; i < r; ++i) {
        if (h_y[i].is_zero()) continue;  // dropped: the definitions require nonzero factors
        auto h_x = h_y[i].substitute_linear(y_in_x);
        out.pairs.emplace_back(qforms[i].to_polynomial(ctx), std::move(h_x));
    }
    return out;
}

/// The subspace cut by the span of the slice forms; codim <= summand count
/// with equality iff the slices are independent.
template <class K>
LinearSubspace<K> subspace_from_slice(const StrengthDecomposition<K>& dec) {
    if (!dec.restriction || *dec.restriction != 1)
        throw std::invalid_argument("subspace_from_slice: slice decomposition (restriction 1) required");
    if (dec.pairs.empty()) throw std::invalid_argument("subspace_from_slice: empty decomposition");
    std::vector<LinearForm<K>> forms;
    for (const auto& [g, h] : dec.pairs) {
        auto lf = as_linear_form(g);
        if (!lf || lf->is_zero())
            throw std::invalid_argument("subspace_from_slice: a slice is not a nonzero linear form");
        forms.push_back(*lf);
    }
    return LinearSubspace<K>(dec.pairs.front().first.num_vars(),
                             dec.pairs.front().first.context(), forms);
}

}  // namespace abptk

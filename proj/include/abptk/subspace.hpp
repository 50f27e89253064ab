#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "abptk/matrix.hpp"
#include "abptk/polynomial.hpp"
#include "abptk/prime_field.hpp"
#include "abptk/rational.hpp"

namespace abptk {

/// Projective linear subspace cut out by independent linear forms, stored
/// as the canonical reduced row echelon matrix of the forms. codim = rank.
template <class K>
class LinearSubspace {
   public:
    using Context = typename K::Context;

    /// Canonicalizes: dependent forms collapse, zero forms drop.
    LinearSubspace(std::size_t nvars, Context ctx, const std::vector<LinearForm<K>>& forms)
        : nvars_(nvars), ctx_(ctx), echelon_(0, nvars, ctx) {
        Matrix<K> m(forms.size(), nvars, ctx);
        for (std::size_t i = 0; i < forms.size(); ++i) {
            if (forms[i].num_vars() != nvars)
                throw std::invalid_argument("subspace form has wrong variable count");
            for (std::size_t j = 0; j < nvars; ++j) m.at(i, j) = forms[i].coeffs[j];
        }
        auto [red, piv] = rref(std::move(m));
        pivots_ = piv;
        echelon_ = Matrix<K>(piv.size(), nvars, ctx);
        for (std::size_t i = 0; i < piv.size(); ++i)
            for (std::size_t j = 0; j < nvars; ++j) echelon_.at(i, j) = red.at(i, j);
    }

    /// From an already-reduced echelon matrix (trusted; used by enumerators).
    LinearSubspace(Matrix<K> echelon, std::vector<std::size_t> pivots)
        : nvars_(echelon.cols()), ctx_(echelon.context()), echelon_(std::move(echelon)),
          pivots_(std::move(pivots)) {}

    std::size_t num_vars() const { return nvars_; }
    Context context() const { return ctx_; }
    std::size_t codim() const { return echelon_.rows(); }
    const Matrix<K>& echelon() const { return echelon_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    std::vector<LinearForm<K>> forms() const {
        std::vector<LinearForm<K>> fs;
        for (std::size_t i = 0; i < echelon_.rows(); ++i) fs.emplace_back(echelon_.row(i));
        return fs;
    }

    bool contains_point(const std::vector<K>& p) const {
        for (std::size_t i = 0; i < echelon_.rows(); ++i) {
            K acc = ctx_.zero();
            for (std::size_t j = 0; j < nvars_; ++j) acc += echelon_.at(i, j) * p[j];
            if (!acc.is_zero()) return false;
        }
        return true;
    }

    friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
        return a.nvars_ == b.nvars_ && a.echelon_ == b.echelon_;
    }

   private:
    std::size_t nvars_;
    Context ctx_;
    Matrix<K> echelon_;
    std::vector<std::size_t> pivots_;
};

/// F with every pivot variable of Q eliminated via its defining forms;
/// the restriction of F to a parametrization of Q by the free variables.
template <class K>
Polynomial<K> restrict_to_subspace(const Polynomial<K>& f, const LinearSubspace<K>& q) {
    if (f.num_vars() != q.num_vars())
        throw std::invalid_argument("restrict_to_subspace: variable count mismatch");
    auto ctx = f.context();
    std::size_t n = f.num_vars();
    std::vector<LinearForm<K>> images;
    images.reserve(n);
    for (std::size_t j = 0; j < n; ++j) images.push_back(LinearForm<K>::unit(n, j, ctx));
    const auto& piv = q.pivots();
    for (std::size_t i = 0; i < piv.size(); ++i) {
        auto img = LinearForm<K>::zero(n, ctx);
        for (std::size_t j = 0; j < n; ++j) {
            if (j == piv[i]) continue;
            img.coeffs[j] = -q.echelon().at(i, j);  // x_piv = -sum of free entries
        }
        images[piv[i]] = img;
    }
    return f.substitute_linear(images);
}

/// Ideal-theoretic containment Z(F) >= Q: the restriction of F to a
/// parametrization of Q is the zero polynomial.
template <class K>
bool contains_check(const Polynomial<K>& f, const LinearSubspace<K>& q) {
    return restrict_to_subspace(f, q).is_zero();
}

// ---------------------------------------------------------------------------
// Exhaustive echelon enumeration over a prime field
// ---------------------------------------------------------------------------

/// Pivot patterns (r-subsets of 0..n-1) in colex order.
std::vector<std::vector<std::size_t>> pivot_patterns_colex(std::size_t n, std::size_t r);

/// Number of codim-r subspaces of P^{n-1} over F_p (Gaussian binomial),
/// by the product formula.
std::uint64_t gaussian_binomial(std::size_t n, std::size_t r, std::uint64_t p);

struct SearchOptions {
    std::uint64_t budget = 5'000'000;  // candidate cap
    std::optional<std::vector<Fp>> through_point;
    unsigned threads = 1;
};

struct SearchResult {
    std::vector<LinearSubspace<Fp>> found;  // deterministic enumeration order
    std::uint64_t candidates = 0;
    bool budget_exceeded = false;
};

/// Enumerates ALL codim-r subspaces over F_p via row-echelon representatives
/// and returns exactly those passing contains_check. Shards across pivot
/// patterns when opts.threads > 1; the merged order is the enumeration order
/// regardless of scheduling.
SearchResult exhaustive_search(const Polynomial<Fp>& f, std::size_t r,
                               const SearchOptions& opts = {});

/// exhaustive_search restricted to subspaces whose zero set contains p0.
SearchResult search_through_point(const Polynomial<Fp>& f, const std::vector<Fp>& p0,
                                  std::size_t r, const SearchOptions& opts = {});

// ---------------------------------------------------------------------------
// Rational chart systems and the propagation micro-solver
// ---------------------------------------------------------------------------

/// Containment-as-equations for one echelon pivot pattern: the unknowns are
/// the free entries of the echelon matrix (row-major), and the equations are
/// the coefficients of F composed with the chart's parametrization. Some
/// subspace in this chart lies in Z(F) iff the equations have a common
/// rational solution.
struct ChartSystem {
    std::vector<std::size_t> pivots;
    std::size_t num_unknowns = 0;
    std::vector<std::pair<std::size_t, std::size_t>> unknown_slots;  // (row, column)
    std::vector<Polynomial<Rational>> equations;                     // in the unknowns
};

std::vector<ChartSystem> build_chart_systems(const Polynomial<Rational>& f, std::size_t r);

struct ChartOutcome {
    bool refuted = false;
    std::vector<std::size_t> forced_zero;          // unknown indices forced to 0
    std::vector<Polynomial<Rational>> residual;    // simplified leftover equations
};

struct RefuteResult {
    bool refuted = false;                      // true only if every chart is refuted
    std::optional<std::size_t> witness_chart;  // first inconclusive chart
    std::vector<ChartOutcome> per_chart;
};

/// Sound micro-solver: repeatedly (i) an equation of the form unit*u^e = 0
/// forces u = 0, (ii) substitute forced zeros and re-simplify; an equation
/// that becomes a nonzero constant refutes its chart. "refuted" means no
/// codim-r rational subspace lies in Z(F); anything less is inconclusive.
RefuteResult propagation_refute(const std::vector<ChartSystem>& systems);

}  // namespace abptk

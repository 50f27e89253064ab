#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "abptk/polynomial.hpp"

namespace abptk {

/// Vertex address inside an ABP: layer index, then index within the layer.
struct Vertex {
    std::size_t layer = 0;
    std::size_t index = 0;
};

/// Homogeneous algebraic branching program: a layered DAG with one source,
/// one sink and nonzero linear forms on the edges. The polynomial computed
/// between two vertices is the sum over paths of the products of labels.
template <class K>
class Abp {
   public:
    using Context = typename K::Context;

    struct Edge {
        std::size_t layer;  // from layer `layer` to `layer + 1`
        std::size_t from;
        std::size_t to;
        LinearForm<K> label;
    };

    Abp(std::size_t nvars, Context ctx, std::vector<std::size_t> widths)
        : nvars_(nvars), ctx_(ctx), widths_(std::move(widths)) {}

    std::size_t num_vars() const { return nvars_; }
    Context context() const { return ctx_; }
    const std::vector<std::size_t>& widths() const { return widths_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t num_layers() const { return widths_.size(); }
    std::size_t depth() const { return widths_.empty() ? 0 : widths_.size() - 1; }

    /// Inner vertex count.
    std::size_t size() const {
        std::size_t s = 0;
        for (std::size_t k = 1; k + 1 < widths_.size(); ++k) s += widths_[k];
        return s;
    }

    /// Parallel edges between the same vertex pair merge by label addition;
    /// a merge that cancels to zero stays stored so validate can report it.
    void add_edge(std::size_t layer, std::size_t from, std::size_t to, LinearForm<K> label) {
        if (label.num_vars() != nvars_)
            throw std::invalid_argument("add_edge: label variable count mismatch");
        for (auto& e : edges_) {
            if (e.layer == layer && e.from == from && e.to == to) {
                for (std::size_t i = 0; i < nvars_; ++i) e.label.coeffs[i] += label.coeffs[i];
                return;
            }
        }
        edges_.push_back(Edge{layer, from, to, std::move(label)});
        std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
            return std::tie(a.layer, a.from, a.to) < std::tie(b.layer, b.from, b.to);
        });
    }

    struct Validation {
        bool ok = true;
        std::string violation;  // first violation, with location
    };

    Validation validate() const {
        auto fail = [](std::string msg) { return Validation{false, std::move(msg)}; };
        if (widths_.size() < 2) return fail("fewer than two layers");
        if (widths_.front() != 1) return fail("source layer width != 1");
        if (widths_.back() != 1) return fail("sink layer width != 1");
        for (std::size_t k = 0; k < widths_.size(); ++k)
            if (widths_[k] == 0) return fail("empty layer " + std::to_string(k));
        for (const auto& e : edges_) {
            std::string at = "edge (" + std::to_string(e.layer) + "," + std::to_string(e.from) +
                             ")->(" + std::to_string(e.layer + 1) + "," + std::to_string(e.to) + ")";
            if (e.layer + 1 >= widths_.size()) return fail(at + ": non-consecutive layers");
            if (e.from >= widths_[e.layer] || e.to >= widths_[e.layer + 1])
                return fail(at + ": vertex index out of range");
            if (e.label.num_vars() != nvars_) return fail(at + ": label variable count mismatch");
            if (e.label.is_zero()) return fail(at + ": zero label");
        }
        return {};
    }

    /// Polynomial computed between two vertices, by per-layer accumulation
    /// (never path enumeration).
    Polynomial<K> expand(Vertex from, Vertex to) const {
        if (from.layer >= to.layer)
            throw std::invalid_argument("expand: start layer must precede end layer");
        if (from.layer >= widths_.size() || to.layer >= widths_.size() ||
            from.index >= widths_[from.layer] || to.index >= widths_[to.layer])
            throw std::invalid_argument("expand: vertex out of range");
        std::vector<Polynomial<K>> cur(widths_[from.layer], Polynomial<K>::zero(nvars_, ctx_));
        cur[from.index] = Polynomial<K>::constant(nvars_, ctx_.one());
        for (std::size_t k = from.layer; k < to.layer; ++k) {
            std::vector<Polynomial<K>> next(widths_[k + 1], Polynomial<K>::zero(nvars_, ctx_));
            for (const auto& e : edges_) {
                if (e.layer != k || cur[e.from].is_zero()) continue;
                next[e.to] += cur[e.from] * e.label.to_polynomial(ctx_);
            }
            cur = std::move(next);
        }
        return cur[to.index];
    }

    /// Source -> sink expansion: the polynomial computed by the program.
    Polynomial<K> expand() const { return expand({0, 0}, {widths_.size() - 1, 0}); }

    /// Scalar dynamic program; equals evaluate(expand(), point).
    K evaluate(const std::vector<K>& point) const {
        if (point.size() != nvars_) throw std::invalid_argument("evaluate: point length mismatch");
        std::vector<K> cur(widths_[0], ctx_.zero());
        cur[0] = ctx_.one();
        for (std::size_t k = 0; k + 1 < widths_.size(); ++k) {
            std::vector<K> next(widths_[k + 1], ctx_.zero());
            for (const auto& e : edges_) {
                if (e.layer != k) continue;
                next[e.to] += cur[e.from] * e.label.evaluate(point);
            }
            cur = std::move(next);
        }
        return cur[0];
    }

   private:
    std::size_t nvars_;
    Context ctx_;
    std::vector<std::size_t> widths_;
    std::vector<Edge> edges_;
};

/// Upper-bound witness: one path per term, each monomial split into deg F
/// linear labels with the coefficient on the last one. Size (#terms)(d-1).
template <class K>
Abp<K> naive_abp_from_polynomial(const Polynomial<K>& f) {
    if (f.is_zero() || !f.is_homogeneous() || *f.degree() < 1)
        throw std::invalid_argument(
            "naive_abp_from_polynomial: nonzero homogeneous input of degree >= 1 required");
    auto ctx = f.context();
    auto nvars = f.num_vars();
    auto d = *f.degree();
    std::size_t nterms = f.term_count();
    std::vector<std::size_t> widths(d + 1, nterms);
    widths.front() = widths.back() = 1;
    Abp<K> a(nvars, ctx, widths);
    std::size_t t = 0;
    for (const auto& [m, c] : f.terms()) {
        std::vector<std::size_t> factors;  // variable indices with multiplicity
        for (std::size_t i = 0; i < nvars; ++i)
            for (std::uint32_t e = 0; e < m.exps[i]; ++e) factors.push_back(i);
        for (std::size_t k = 0; k < d; ++k) {
            auto label = LinearForm<K>::unit(nvars, factors[k], ctx);
            if (k + 1 == d) label.coeffs[factors[k]] = c;
            std::size_t from = (k == 0) ? 0 : t;
            std::size_t to = (k + 1 == d) ? 0 : t;
            a.add_edge(k, from, to, std::move(label));
        }
        ++t;
    }
    return a;
}

}  // namespace abptk

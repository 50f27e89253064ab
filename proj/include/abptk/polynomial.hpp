#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "abptk/monomial.hpp"

namespace abptk {

template <class K>
class Polynomial;

/// Degree-1 homogeneous polynomial as a bare coefficient vector.
template <class K>
struct LinearForm {
    std::vector<K> coeffs;

    LinearForm() = default;
    explicit LinearForm(std::vector<K> c) : coeffs(std::move(c)) {}

    static LinearForm zero(std::size_t nvars, typename K::Context ctx) {
        return LinearForm(std::vector<K>(nvars, ctx.zero()));
    }
    static LinearForm unit(std::size_t nvars, std::size_t var, typename K::Context ctx) {
        auto f = zero(nvars, ctx);
        f.coeffs[var] = ctx.one();
        return f;
    }

    std::size_t num_vars() const { return coeffs.size(); }
    bool is_zero() const {
        for (const auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }

    K evaluate(const std::vector<K>& point) const {
        if (point.size() != coeffs.size())
            throw std::invalid_argument("linear form evaluated at point of wrong length");
        K acc = coeffs.empty() ? K() : coeffs[0].context().zero();
        for (std::size_t i = 0; i < coeffs.size(); ++i) acc += coeffs[i] * point[i];
        return acc;
    }

    Polynomial<K> to_polynomial(typename K::Context ctx) const;

    friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.coeffs == b.coeffs; }
};

/// Sparse multivariate polynomial over an exact field. Terms are kept in
/// descending graded-lex order and never store zero coefficients.
template <class K>
class Polynomial {
   public:
    using Context = typename K::Context;
    using TermMap = std::map<Monomial, K, GrlexGreater>;

    Polynomial(std::size_t nvars, Context ctx) : nvars_(nvars), ctx_(ctx) {}

    static Polynomial zero(std::size_t nvars, Context ctx) { return Polynomial(nvars, ctx); }

    static Polynomial constant(std::size_t nvars, const K& c) {
        Polynomial p(nvars, c.context());
        p.add_term(Monomial(nvars), c);
        return p;
    }

    static Polynomial monomial(std::size_t nvars, const Monomial& m, const K& c) {
        if (m.num_vars() != nvars) throw std::invalid_argument("monomial variable count mismatch");
        Polynomial p(nvars, c.context());
        p.add_term(m, c);
        return p;
    }

    static Polynomial variable(std::size_t nvars, std::size_t i, Context ctx) {
        return monomial(nvars, Monomial::unit(nvars, i), ctx.one());
    }

    std::size_t num_vars() const { return nvars_; }
    Context context() const { return ctx_; }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Monomial& m, const K& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(m, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    K coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? ctx_.zero() : it->second;
    }

    /// Max total degree, or nullopt for the zero polynomial.
    std::optional<std::uint64_t> degree() const {
        if (terms_.empty()) return std::nullopt;
        return terms_.begin()->first.degree();  // grlex-descending: first term has max degree
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        auto d = terms_.begin()->first.degree();
        for (const auto& [m, c] : terms_)
            if (m.degree() != d) return false;
        return true;
    }

    Polynomial operator-() const {
        Polynomial r(nvars_, ctx_);
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
        return r;
    }

    Polynomial& operator+=(const Polynomial& o) {
        check_compatible(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Polynomial& operator-=(const Polynomial& o) {
        check_compatible(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        a.check_compatible(b);
        Polynomial r(a.nvars_, a.ctx_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }

    Polynomial scaled(const K& s) const {
        Polynomial r(nvars_, ctx_);
        if (s.is_zero()) return r;
        for (const auto& [m, c] : terms_) r.terms_.emplace(m, c * s);
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.nvars_ == b.nvars_ && a.ctx_ == b.ctx_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

    Polynomial partial_derivative(std::size_t var) const {
        if (var >= nvars_) throw std::invalid_argument("partial_derivative: variable out of range");
        Polynomial r(nvars_, ctx_);
        for (const auto& [m, c] : terms_) {
            if (m.exps[var] == 0) continue;
            Monomial dm = m;
            dm.exps[var] -= 1;
            r.add_term(dm, c * ctx_.from_int(static_cast<long>(m.exps[var])));
        }
        return r;
    }

    K evaluate(const std::vector<K>& point) const {
        if (point.size() != nvars_)
            throw std::invalid_argument("evaluate: point length != variable count");
        K acc = ctx_.zero();
        for (const auto& [m, c] : terms_) {
            K t = c;
            for (std::size_t i = 0; i < nvars_; ++i)
                if (m.exps[i] > 0) t *= point[i].pow(m.exps[i]);
            acc += t;
        }
        return acc;
    }

    /// F(g_0, ..., g_{n-1}) for arbitrary polynomial images living in a common
    /// target ring (one image per variable of F).
    Polynomial compose(const std::vector<Polynomial>& images) const {
        if (images.size() != nvars_)
            throw std::invalid_argument("compose: one image per variable required");
        if (nvars_ == 0) throw std::invalid_argument("compose: no variables");
        std::size_t tvars = images[0].num_vars();
        Context tctx = images[0].context();
        if (!(tctx == ctx_)) throw std::invalid_argument("compose: coefficient field mismatch");
        for (const auto& g : images)
            if (g.num_vars() != tvars || !(g.context() == tctx))
                throw std::invalid_argument("compose: images live in different rings");
        // cache image powers per variable
        std::vector<std::vector<Polynomial>> powers(nvars_);
        Polynomial result(tvars, tctx);
        for (const auto& [m, c] : terms_) {
            Polynomial t = Polynomial::constant(tvars, c);
            for (std::size_t i = 0; i < nvars_; ++i) {
                auto e = m.exps[i];
                if (e == 0) continue;
                auto& pw = powers[i];
                if (pw.empty()) pw.push_back(images[i]);  // pw[k] = images[i]^(k+1)
                while (pw.size() < e) pw.push_back(pw.back() * images[i]);
                t = t * pw[e - 1];
            }
            result += t;
        }
        return result;
    }

    /// Each x_i replaced by the i-th linear form over the same ring.
    Polynomial substitute_linear(const std::vector<LinearForm<K>>& forms) const {
        if (forms.size() != nvars_)
            throw std::invalid_argument("substitute_linear: one form per variable required");
        std::vector<Polynomial> images;
        images.reserve(nvars_);
        for (const auto& f : forms) {
            if (f.num_vars() != nvars_)
                throw std::invalid_argument("substitute_linear: form variable count mismatch");
            images.push_back(f.to_polynomial(ctx_));
        }
        return compose(images);
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [m, c] : terms_) {
            if (!s.empty()) s += " + ";
            if (m.is_constant()) {
                s += c.str();
            } else if (c.is_one()) {
                s += m.str();
            } else {
                s += "(" + c.str() + ")*" + m.str();
            }
        }
        return s;
    }

   private:
    void check_compatible(const Polynomial& o) const {
        if (nvars_ != o.nvars_)
            throw std::invalid_argument("polynomial variable count mismatch: " +
                                        std::to_string(nvars_) + " vs " + std::to_string(o.nvars_));
        if (!(ctx_ == o.ctx_)) throw std::invalid_argument("polynomial coefficient field mismatch");
    }

    std::size_t nvars_;
    Context ctx_;
    TermMap terms_;
};

template <class K>
Polynomial<K> LinearForm<K>::to_polynomial(typename K::Context ctx) const {
    Polynomial<K> p(coeffs.size(), ctx);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        p.add_term(Monomial::unit(coeffs.size(), i), coeffs[i]);
    return p;
}

/// Scaled so the grlex-leading coefficient is one; zero passes through.
template <class K>
Polynomial<K> monic(const Polynomial<K>& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.terms().begin()->second.inverse());
}

/// Extracts a linear form from a homogeneous degree-1 polynomial.
template <class K>
std::optional<LinearForm<K>> as_linear_form(const Polynomial<K>& p) {
    LinearForm<K> f = LinearForm<K>::zero(p.num_vars(), p.context());
    for (const auto& [m, c] : p.terms()) {
        if (m.degree() != 1) return std::nullopt;
        for (std::size_t i = 0; i < p.num_vars(); ++i)
            if (m.exps[i] == 1) f.coeffs[i] = c;
    }
    return f;
}

/// Coefficients c_0..c_d with F(a p + b q) = sum c_i a^(d-i) b^i as a
/// polynomial identity in fresh variables a, b. Exact expansion over an
/// internal rank-2 substitution, never numeric interpolation.
template <class K>
std::vector<K> pencil_coefficients(const Polynomial<K>& f, const std::vector<K>& p,
                                   const std::vector<K>& q) {
    if (!f.is_homogeneous() || f.is_zero())
        throw std::invalid_argument("pencil_coefficients: nonzero homogeneous input required");
    if (p.size() != f.num_vars() || q.size() != f.num_vars())
        throw std::invalid_argument("pencil_coefficients: point length mismatch");
    auto ctx = f.context();
    auto d = *f.degree();
    std::vector<Polynomial<K>> images;
    images.reserve(f.num_vars());
    for (std::size_t i = 0; i < f.num_vars(); ++i) {
        Polynomial<K> img(2, ctx);
        img.add_term(Monomial::unit(2, 0), p[i]);
        img.add_term(Monomial::unit(2, 1), q[i]);
        images.push_back(img);
    }
    auto ab = f.compose(images);
    std::vector<K> c(d + 1, ctx.zero());
    for (std::uint64_t i = 0; i <= d; ++i) {
        Monomial m(2);
        m.exps[0] = static_cast<std::uint32_t>(d - i);
        m.exps[1] = static_cast<std::uint32_t>(i);
        c[i] = ab.coefficient(m);
    }
    return c;
}

/// sum_i dF/dx_i(v) * w_i.
template <class K>
K polar_pairing(const Polynomial<K>& f, const std::vector<K>& v, const std::vector<K>& w) {
    if (v.size() != f.num_vars() || w.size() != f.num_vars())
        throw std::invalid_argument("polar_pairing: point length mismatch");
    K acc = f.context().zero();
    for (std::size_t i = 0; i < f.num_vars(); ++i)
        acc += f.partial_derivative(i).evaluate(v) * w[i];
    return acc;
}

}  // namespace abptk

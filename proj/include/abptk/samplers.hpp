#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "abptk/abp.hpp"
#include "abptk/polynomial.hpp"
#include "abptk/rational.hpp"
#include "abptk/subspace.hpp"

namespace abptk {

/// Seeded generators for randomized suites. Every randomized test and the
/// reproducibility runner share these, so a seed pins the whole run.
class Sampler {
   public:
    explicit Sampler(std::uint64_t seed) : eng_(seed) {}

    std::int64_t int_in(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(eng_);
    }

    Rational rational(long max_num = 4, long max_den = 3, bool nonzero = false) {
        while (true) {
            long num = static_cast<long>(int_in(-max_num, max_num));
            long den = static_cast<long>(int_in(1, max_den));
            if (nonzero && num == 0) continue;
            return Rational(num, den);
        }
    }

    Rational positive_rational(long max_num = 3, long max_den = 2) {
        return Rational(static_cast<long>(int_in(1, max_num)), static_cast<long>(int_in(1, max_den)));
    }

    std::vector<Rational> point(std::size_t nvars, long max_num = 4, long max_den = 3) {
        std::vector<Rational> p;
        p.reserve(nvars);
        for (std::size_t i = 0; i < nvars; ++i) p.push_back(rational(max_num, max_den));
        return p;
    }

    Monomial monomial_of_degree(std::size_t nvars, std::uint64_t deg) {
        Monomial m(nvars);
        for (std::uint64_t i = 0; i < deg; ++i)
            m.exps[static_cast<std::size_t>(int_in(0, static_cast<std::int64_t>(nvars) - 1))] += 1;
        return m;
    }

    Polynomial<Rational> homogeneous(std::size_t nvars, std::uint64_t deg, std::size_t max_terms = 5) {
        Polynomial<Rational> f(nvars, {});
        auto t = int_in(1, static_cast<std::int64_t>(max_terms));
        while (f.is_zero()) {
            for (std::int64_t i = 0; i < t; ++i)
                f.add_term(monomial_of_degree(nvars, deg), rational(3, 2, true));
        }
        return f;
    }

    LinearForm<Rational> linear_form(std::size_t nvars, bool nonnegative = false) {
        while (true) {
            LinearForm<Rational> lf = LinearForm<Rational>::zero(nvars, {});
            for (std::size_t i = 0; i < nvars; ++i)
                lf.coeffs[i] = nonnegative ? Rational(static_cast<long>(int_in(0, 2)),
                                                      static_cast<long>(int_in(1, 2)))
                                           : rational(2, 2);
            if (!lf.is_zero()) return lf;
        }
    }

    /// Fully connected layered program; nonnegative labels guarantee no
    /// source-to-vertex cancellation, so every inner vertex stays live.
    Abp<Rational> abp(std::size_t nvars, std::size_t max_depth = 4, std::size_t max_width = 3,
                      bool nonnegative = true) {
        std::size_t depth = static_cast<std::size_t>(int_in(2, static_cast<std::int64_t>(max_depth)));
        std::vector<std::size_t> widths(depth + 1, 1);
        for (std::size_t k = 1; k < depth; ++k)
            widths[k] = static_cast<std::size_t>(int_in(1, static_cast<std::int64_t>(max_width)));
        Abp<Rational> a(nvars, {}, widths);
        for (std::size_t k = 0; k < depth; ++k)
            for (std::size_t i = 0; i < widths[k]; ++i)
                for (std::size_t j = 0; j < widths[k + 1]; ++j)
                    a.add_edge(k, i, j, linear_form(nvars, nonnegative));
        return a;
    }

    /// Random codim-r subspace together with a random polynomial planted in
    /// its form ideal: F = sum L_i H_i, homogeneous of the given degree.
    std::pair<LinearSubspace<Rational>, Polynomial<Rational>> planted_instance(
        std::size_t nvars, std::size_t r, std::uint64_t deg) {
        while (true) {
            std::vector<LinearForm<Rational>> forms;
            for (std::size_t i = 0; i < r; ++i) forms.push_back(linear_form(nvars));
            LinearSubspace<Rational> q(nvars, {}, forms);
            if (q.codim() != r) continue;
            Polynomial<Rational> f(nvars, {});
            for (std::size_t i = 0; i < r; ++i)
                f += forms[i].to_polynomial(Rational::Context{}) * homogeneous(nvars, deg - 1, 3);
            if (f.is_zero() || !f.is_homogeneous()) continue;
            return {q, f};
        }
    }

   private:
    std::mt19937_64 eng_;
};

}  // namespace abptk

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "abptk/polynomial.hpp"
#include "abptk/rational.hpp"
#include "abptk/subspace.hpp"

namespace abptk {

/// First partials of F, zero entries dropped.
template <class K>
std::vector<Polynomial<K>> sing_generators(const Polynomial<K>& f) {
    if (!f.is_homogeneous()) throw std::invalid_argument("sing_generators: homogeneous input required");
    std::vector<Polynomial<K>> gens;
    for (std::size_t i = 0; i < f.num_vars(); ++i) {
        auto g = f.partial_derivative(i);
        if (!g.is_zero()) gens.push_back(std::move(g));
    }
    return gens;
}

struct SingularLocusReport {
    std::vector<Polynomial<Rational>> generators;
    std::vector<LinearForm<Rational>> reduced_linear_forms;  // echelon rows when reduced
    std::size_t codim = 0;   // rank of the forms; equals num_vars when the locus is empty
    bool empty_locus = false;
    bool reduced = false;    // false: reduction gave up; residual holds the leftovers
    std::vector<Polynomial<Rational>> residual;
};

/// Fixpoint of two set-preserving rewrites: a generator that is c*L^e with
/// L linear becomes L, and every other generator is reduced modulo the
/// forms found so far (pivot variables substituted away); generators that
/// become zero are dropped. Handles exactly the ideal shapes the partials
/// of the named families produce; anything else is reported unreduced.
SingularLocusReport pure_power_reduce(const std::vector<Polynomial<Rational>>& gens);

enum class SingVerdict { ok, failure, inconclusive };

struct SingCheck {
    SingVerdict verdict = SingVerdict::failure;
    std::string message;
    SingularLocusReport report;
};

/// Both containments: every partial of F vanishes identically on a
/// parametrization of the claimed subspace, and the reduced forms span
/// exactly the claimed span. Unreduced generators make the check
/// inconclusive rather than failed.
SingCheck verify_claimed_sing(const Polynomial<Rational>& f, const LinearSubspace<Rational>& claimed);

/// cL^e pattern probe: the linear form L with g = c*L^e, if there is one.
std::optional<std::pair<Rational, LinearForm<Rational>>> as_scaled_linear_power(
    const Polynomial<Rational>& g);

/// Coprime integer coefficients with positive leading coefficient; the
/// zero set is unchanged and reductions mod p stay meaningful.
Polynomial<Rational> primitive_integer_form(const Polynomial<Rational>& g);

}  // namespace abptk

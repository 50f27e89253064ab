#include "abptk/singular.hpp"

namespace abptk {

namespace {

using Q = Rational;
using Poly = Polynomial<Q>;

/// Substitutes away the pivot variable of each echelon form in g.
Poly reduce_modulo_forms(const Poly& g, const LinearSubspace<Q>& span) {
    if (span.codim() == 0) return g;
    return restrict_to_subspace(g, span);
}

}  // namespace

std::optional<std::pair<Rational, LinearForm<Rational>>> as_scaled_linear_power(const Poly& g) {
    if (g.is_zero() || !g.is_homogeneous()) return std::nullopt;
    auto d = *g.degree();
    if (d == 0) return std::nullopt;
    std::size_t n = g.num_vars();
    Q::Context ctx;
    if (d == 1) {
        auto lf = as_linear_form(g);
        return std::make_pair(Q(1), *lf);
    }
    // For g = c*L^e the grlex-leading term is c*a_j0^e x_j0^e with j0 the
    // leading variable of L; normalize a_j0 = 1 and read the remaining
    // coefficients off the x_j0^{e-1} x_j terms.
    const auto& [lead, clead] = *g.terms().begin();
    std::size_t j0 = 0;
    bool pure = false;
    for (std::size_t j = 0; j < n; ++j) {
        if (lead.exps[j] == d) {
            j0 = j;
            pure = true;
        } else if (lead.exps[j] != 0) {
            return std::nullopt;
        }
    }
    if (!pure) return std::nullopt;
    LinearForm<Q> cand = LinearForm<Q>::unit(n, j0, ctx);
    Q e_c = Q(static_cast<long>(d)) * clead;
    for (std::size_t j = 0; j < n; ++j) {
        if (j == j0) continue;
        Monomial m(n);
        m.exps[j0] = static_cast<std::uint32_t>(d - 1);
        m.exps[j] = 1;
        cand.coeffs[j] = g.coefficient(m) / e_c;  // coeff of x_j0^{d-1} x_j is c*d*a_j
    }
    Poly reconstructed = cand.to_polynomial(ctx);
    Poly power = Poly::constant(n, clead);
    for (std::uint64_t i = 0; i < d; ++i) power = power * reconstructed;
    if (power == g) return std::make_pair(clead, cand);
    return std::nullopt;
}

Polynomial<Rational> primitive_integer_form(const Poly& g) {
    if (g.is_zero()) return g;
    std::vector<Q> coeffs;
    coeffs.reserve(g.term_count());
    for (const auto& [m, c] : g.terms()) coeffs.push_back(c);
    auto s = Q::primitive_scale(coeffs);
    if (g.terms().begin()->second.sign() < 0) s = -s;
    return g.scaled(s);
}

SingularLocusReport pure_power_reduce(const std::vector<Poly>& gens) {
    SingularLocusReport rep;
    rep.generators = gens;
    if (gens.empty()) {
        rep.reduced = true;
        rep.codim = 0;
        return rep;
    }
    std::size_t n = gens.front().num_vars();
    Q::Context ctx;
    std::vector<LinearForm<Q>> forms;
    std::vector<Poly> pending = gens;
    bool changed = true;
    while (changed) {
        changed = false;
        LinearSubspace<Q> span(n, ctx, forms);
        std::vector<Poly> next;
        for (const auto& g : pending) {
            Poly h = reduce_modulo_forms(g, span);
            if (h.is_zero()) {
                changed = true;
                continue;
            }
            if (auto hit = as_scaled_linear_power(h)) {
                forms.push_back(hit->second);
                changed = true;
            } else {
                next.push_back(std::move(h));
            }
        }
        pending = std::move(next);
    }
    LinearSubspace<Q> span(n, ctx, forms);
    rep.reduced_linear_forms = span.forms();
    rep.codim = span.codim();
    rep.empty_locus = span.codim() == n;
    rep.reduced = pending.empty();
    rep.residual = std::move(pending);
    return rep;
}

SingCheck verify_claimed_sing(const Poly& f, const LinearSubspace<Q>& claimed) {
    SingCheck out;
    auto gens = sing_generators(f);
    // containment 1: all partials vanish identically on the claimed subspace
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (!contains_check(gens[i], claimed)) {
            out.verdict = SingVerdict::failure;
            out.message = "a partial derivative does not vanish on the claimed subspace";
            return out;
        }
    }
    out.report = pure_power_reduce(gens);
    if (!out.report.reduced) {
        out.verdict = SingVerdict::inconclusive;
        out.message = "reduction left non-pure-power generators; containment holds but equality "
                      "is uncertified";
        return out;
    }
    // containment 2: the certified forms span exactly the claimed span
    LinearSubspace<Q> got(f.num_vars(), {}, out.report.reduced_linear_forms);
    if (!(got == claimed)) {
        out.verdict = SingVerdict::failure;
        out.message = "reduced locus differs from the claim (codim " +
                      std::to_string(got.codim()) + " vs " + std::to_string(claimed.codim()) + ")";
        return out;
    }
    out.verdict = SingVerdict::ok;
    out.message = "ok";
    return out;
}

}  // namespace abptk

#include "abptk/decomp.hpp"

#include <stdexcept>

#include "abptk/families.hpp"

namespace abptk {

namespace {
using Q = Rational;
using Poly = Polynomial<Q>;

Poly var_power(std::size_t nvars, std::size_t i, std::uint32_t e) {
    return Poly::monomial(nvars, Monomial::unit(nvars, i, e), Q(1));
}
}  // namespace

StrengthDecomposition<Rational> shioda_slice_decomposition(std::size_t n, std::size_t d) {
    if (n % 2 != 0 || n < 2) throw std::invalid_argument("shioda_slice_decomposition: even n >= 2 required");
    if (d < 3) throw std::invalid_argument("shioda_slice_decomposition: d >= 3 required");
    std::size_t nvars = n + 2;
    StrengthDecomposition<Q> dec;
    dec.target_degree = d;
    dec.restriction = 1;
    // sum_{k=0}^{n/2-1} x_{2k+1} (x_{2k+2}^{d-1} + x_{2k} x_{2k+1}^{d-2})
    for (std::size_t k = 0; k < n / 2; ++k) {
        auto slice = var_power(nvars, 2 * k + 1, 1);
        Poly h = var_power(nvars, 2 * k + 2, static_cast<std::uint32_t>(d - 1));
        Monomial m(nvars);
        m.exps[2 * k] += 1;
        m.exps[2 * k + 1] += static_cast<std::uint32_t>(d - 2);
        h += Poly::monomial(nvars, m, Q(1));
        dec.pairs.emplace_back(std::move(slice), std::move(h));
    }
    // + x_n * x_0^{d-1} + x_{n+1} * x_{n+1}^{d-1}
    dec.pairs.emplace_back(var_power(nvars, n, 1), var_power(nvars, 0, static_cast<std::uint32_t>(d - 1)));
    dec.pairs.emplace_back(var_power(nvars, n + 1, 1),
                           var_power(nvars, n + 1, static_cast<std::uint32_t>(d - 1)));
    return dec;
}

StrengthDecomposition<Rational> p_restricted_decomposition(std::size_t n, std::size_t d,
                                                           std::size_t j) {
    if (n < 1 || d < 2) throw std::invalid_argument("p_restricted_decomposition: n >= 1, d >= 2 required");
    if (j < 1 || j > d - 1)
        throw std::invalid_argument("p_restricted_decomposition: 1 <= j <= d-1 required");
    std::size_t nvars = 2 * n + 1;
    StrengthDecomposition<Q> dec;
    dec.target_degree = d;
    dec.restriction = j;
    dec.pairs.emplace_back(var_power(nvars, 0, static_cast<std::uint32_t>(j)),
                           var_power(nvars, 0, static_cast<std::uint32_t>(d - j)));
    for (std::size_t k = 1; k <= n; ++k) {
        Monomial g(nvars);
        g.exps[2 * k - 1] = 1;
        g.exps[2 * k] = static_cast<std::uint32_t>(j - 1);
        dec.pairs.emplace_back(Poly::monomial(nvars, g, Q(1)),
                               var_power(nvars, 2 * k, static_cast<std::uint32_t>(d - j)));
    }
    return dec;
}

}  // namespace abptk

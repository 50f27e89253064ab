#include "abptk/families.hpp"

#include <stdexcept>

namespace abptk {

namespace {

using Q = Rational;
using Poly = Polynomial<Q>;

Poly power_monomial(std::size_t nvars, std::size_t i, std::uint32_t e) {
    return Poly::monomial(nvars, Monomial::unit(nvars, i, e), Q(1));
}

Poly chain_term(std::size_t nvars, std::size_t i, std::size_t j, std::uint32_t e) {
    // x_i * x_j^e
    Monomial m(nvars);
    m.exps[i] += 1;
    m.exps[j] += e;
    return Poly::monomial(nvars, m, Q(1));
}

}  // namespace

Polynomial<Rational> make_power_sum(std::size_t n, std::size_t d) {
    if (d < 2) throw std::invalid_argument("make_power_sum: d >= 2 required");
    std::size_t nvars = n + 1;
    Poly f(nvars, {});
    for (std::size_t i = 0; i < nvars; ++i) f += power_monomial(nvars, i, d);
    return f;
}

Polynomial<Rational> make_P(std::size_t n, std::size_t d) {
    if (n < 1 || d < 2) throw std::invalid_argument("make_P: n >= 1 and d >= 2 required");
    std::size_t nvars = 2 * n + 1;
    Poly f = power_monomial(nvars, 0, d);
    for (std::size_t k = 1; k <= n; ++k) f += chain_term(nvars, 2 * k - 1, 2 * k, d - 1);
    return f;
}

Polynomial<Rational> make_S(std::size_t n, std::size_t d) {
    if (n < 1 || d < 3) throw std::invalid_argument("make_S: n >= 1 and d >= 3 required");
    std::size_t nvars = n + 2;
    Poly f(nvars, {});
    for (std::size_t i = 0; i < n; ++i)
        f += chain_term(nvars, i, i + 1, d - 1);  // x_i x_{i+1}^{d-1}, i = 0..n-1
    f += chain_term(nvars, n, 0, d - 1);          // x_n x_0^{d-1}
    f += power_monomial(nvars, n + 1, d);         // x_{n+1}^d
    return f;
}

Polynomial<Rational> make_S_hat(std::size_t n, std::size_t d) {
    if (n < 1 || d < 3) throw std::invalid_argument("make_S_hat: n >= 1 and d >= 3 required");
    std::size_t nvars = n + 1;  // customary x_1..x_{n+1} indexing, internally 0-based
    Poly f(nvars, {});
    for (std::size_t i = 1; i <= n - 1; ++i) f += chain_term(nvars, i - 1, i, d - 1);
    f += power_monomial(nvars, n, d);
    return f;
}

Abp<Rational> figure1_abp() {
    using LF = LinearForm<Q>;
    Abp<Q> a(2, {}, {1, 2, 2, 1});
    auto lf = [](long cx, long cy) { return LF({Q(cx), Q(cy)}); };
    auto half = [](long cx2, long cy2) { return LF({Q(cx2, 2), Q(cy2, 2)}); };
    a.add_edge(0, 0, 0, lf(1, 1));    // x + y
    a.add_edge(0, 0, 1, lf(0, 1));    // y
    a.add_edge(1, 0, 0, half(0, 1));  // y/2
    a.add_edge(1, 0, 1, lf(1, 0));    // x
    a.add_edge(1, 1, 0, half(1, 0));  // x/2
    a.add_edge(2, 0, 0, lf(-1, 0));   // -x
    a.add_edge(2, 1, 0, lf(1, -1));   // x - y
    return a;
}

FamilyDescriptor descriptor_power_sum(std::size_t n, std::size_t d) {
    FamilyDescriptor fd;
    fd.name = "power_sum";
    fd.n = n;
    fd.d = d;
    fd.num_vars = n + 1;
    fd.codim_sing = n + 1;
    fd.sing_empty = true;
    for (std::size_t i = 0; i <= n; ++i) fd.sing_vars.push_back(i);
    fd.sing_provenance = "computed";
    return fd;
}

FamilyDescriptor descriptor_P(std::size_t n, std::size_t d) {
    FamilyDescriptor fd;
    fd.name = "P";
    fd.n = n;
    fd.d = d;
    fd.num_vars = 2 * n + 1;
    if (d >= 3) {
        // Sing = Z(x0, x2, ..., x_{2n}), codim n+1
        fd.codim_sing = n + 1;
        fd.sing_empty = false;
        for (std::size_t k = 0; k <= n; ++k) fd.sing_vars.push_back(2 * k);
    } else {
        // d = 2: all partials are linear, the locus is empty
        fd.codim_sing = 2 * n + 1;
        fd.sing_empty = true;
        for (std::size_t i = 0; i < 2 * n + 1; ++i) fd.sing_vars.push_back(i);
    }
    fd.sing_provenance = "computed";
    fd.degree_divisor_s = d;
    fd.subvariety_codim_threshold_c = n;
    fd.known_sr_upper = n + 1;
    fd.known_sr_exact = n + 1;
    return fd;
}

FamilyDescriptor descriptor_S(std::size_t n, std::size_t d) {
    FamilyDescriptor fd;
    fd.name = "S";
    fd.n = n;
    fd.d = d;
    fd.num_vars = n + 2;
    // Empty singular locus; the partials are not pure powers, so the
    // reduction engine cannot certify this and the claim is carried as
    // literature metadata instead of being recomputed.
    fd.codim_sing = n + 2;
    fd.sing_empty = true;
    fd.sing_provenance = "paper-metadata";
    if (n % 2 == 0) {
        fd.known_sr_upper = n / 2 + 2;
        if (n == 2 || (n == 4 && d >= 5)) fd.known_sr_exact = n / 2 + 2;
    }
    return fd;
}

FamilyDescriptor descriptor_S_hat(std::size_t n, std::size_t d) {
    FamilyDescriptor fd;
    fd.name = "S_hat";
    fd.n = n;
    fd.d = d;
    fd.num_vars = n + 1;
    // Single point: internal x_0 free, all other variables cut out.
    fd.codim_sing = n;
    fd.sing_empty = false;
    for (std::size_t i = 1; i <= n; ++i) fd.sing_vars.push_back(i);
    fd.sing_provenance = "computed";
    if (n % 2 == 0) {
        fd.known_sr_upper = n / 2 + 1;
        fd.known_sr_exact = n / 2 + 1;
    }
    return fd;
}

}  // namespace abptk

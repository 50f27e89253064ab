#include <doctest.h>

#include "abptk/families.hpp"
#include "abptk/singular.hpp"

using namespace abptk;
using Q = Rational;
using Poly = Polynomial<Q>;

TEST_CASE("power sum") {
    auto f = make_power_sum(2, 3);
    Poly expected(3, {});
    for (std::size_t i = 0; i < 3; ++i) expected.add_term(Monomial::unit(3, i, 3), Q(1));
    CHECK(f == expected);
    CHECK(make_power_sum(0, 5) == Poly::monomial(1, Monomial::unit(1, 0, 5), Q(1)));
    CHECK_THROWS_AS(make_power_sum(2, 1), std::invalid_argument);
}

TEST_CASE("P family") {
    auto f = make_P(1, 3);
    Poly expected(3, {});
    expected.add_term(Monomial({3, 0, 0}), Q(1));
    expected.add_term(Monomial({0, 1, 2}), Q(1));
    CHECK(f == expected);
    CHECK(f.is_homogeneous());
    for (std::size_t n : {2u, 5u})
        for (std::size_t d : {2u, 6u}) {
            auto p = make_P(n, d);
            CHECK(p.num_vars() == 2 * n + 1);
            CHECK(p.term_count() == n + 1);
            CHECK(*p.degree() == d);
        }
}

TEST_CASE("Shioda polynomials") {
    auto s = make_S(4, 5);
    CHECK(s.num_vars() == 6);
    CHECK(s.term_count() == 6);
    CHECK(*s.degree() == 5);
    // spot-check two chain terms and the power term
    Monomial chain0(6);
    chain0.exps[0] = 1;
    chain0.exps[1] = 4;
    CHECK(s.coefficient(chain0) == Q(1));
    Monomial wrap(6);
    wrap.exps[4] = 1;
    wrap.exps[0] = 4;
    CHECK(s.coefficient(wrap) == Q(1));
    CHECK(s.coefficient(Monomial::unit(6, 5, 5)) == Q(1));

    auto sh = make_S_hat(4, 5);
    CHECK(sh.num_vars() == 5);
    CHECK(sh.term_count() == 4);
}

TEST_CASE("S with x0 = 0 equals S_hat up to the variable shift") {
    for (std::size_t n : {2u, 4u, 6u})
        for (std::size_t d : {3u, 5u}) {
            auto s = make_S(n, d);
            std::vector<LinearForm<Q>> imgs;
            imgs.push_back(LinearForm<Q>::zero(n + 2, {}));
            for (std::size_t i = 1; i < n + 2; ++i) imgs.push_back(LinearForm<Q>::unit(n + 2, i, {}));
            auto cut = s.substitute_linear(imgs);
            auto sh = make_S_hat(n, d);
            Poly lifted(n + 2, {});
            for (const auto& [m, c] : sh.terms()) {
                Monomial shifted(n + 2);
                for (std::size_t i = 0; i < sh.num_vars(); ++i) shifted.exps[i + 1] = m.exps[i];
                lifted.add_term(shifted, c);
            }
            CHECK(cut == lifted);
        }
}

TEST_CASE("figure-1 program shape") {
    auto a = figure1_abp();
    CHECK(a.num_vars() == 2);
    CHECK(a.widths() == std::vector<std::size_t>({1, 2, 2, 1}));
    CHECK(a.validate().ok);
    CHECK(a.size() == 4);
}

TEST_CASE("descriptor metadata matches the recomputed singular locus") {
    auto check_family = [](const FamilyDescriptor& fd, const Poly& f) {
        auto rep = pure_power_reduce(sing_generators(f));
        REQUIRE(rep.reduced);
        CHECK(rep.codim == fd.codim_sing);
        CHECK(rep.empty_locus == fd.sing_empty);
        std::vector<LinearForm<Q>> claimed;
        for (auto v : fd.sing_vars) claimed.push_back(LinearForm<Q>::unit(fd.num_vars, v, {}));
        LinearSubspace<Q> want(fd.num_vars, {}, claimed);
        LinearSubspace<Q> got(fd.num_vars, {}, rep.reduced_linear_forms);
        CHECK(got == want);
    };
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t d = 2; d <= 6; ++d)
            check_family(descriptor_power_sum(n, d), make_power_sum(n, d));
    for (std::size_t n = 1; n <= 6; ++n)
        for (std::size_t d = 2; d <= 6; ++d) check_family(descriptor_P(n, d), make_P(n, d));
    for (std::size_t n = 2; n <= 6; n += 2)
        for (std::size_t d = 3; d <= 6; ++d) check_family(descriptor_S_hat(n, d), make_S_hat(n, d));
}

TEST_CASE("descriptor bound metadata") {
    auto p = descriptor_P(3, 4);
    CHECK(p.degree_divisor_s == 4);
    CHECK(p.subvariety_codim_threshold_c == 3);
    CHECK(p.known_sr_exact == 4);
    auto s = descriptor_S(4, 5);
    CHECK(s.known_sr_upper == 4);
    CHECK(s.known_sr_exact == 4);
    CHECK(s.sing_empty);
    CHECK(s.sing_provenance == "paper-metadata");
    auto s34 = descriptor_S(4, 4);
    CHECK(s34.known_sr_upper == 4);
    CHECK_FALSE(s34.known_sr_exact.has_value());
    auto sh = descriptor_S_hat(6, 3);
    CHECK(sh.known_sr_exact == 4);
    CHECK(sh.codim_sing == 6);
}

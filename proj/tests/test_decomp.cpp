#include <doctest.h>

#include "abptk/decomp.hpp"
#include "abptk/families.hpp"
#include "abptk/samplers.hpp"

using namespace abptk;
using Q = Rational;
using Poly = Polynomial<Q>;

namespace {
Poly var(std::size_t n, std::size_t i) { return Poly::variable(n, i, {}); }
}  // namespace

TEST_CASE("verify accepts a single-product slice decomposition") {
    auto f = var(2, 0) * var(2, 0) + var(2, 0) * var(2, 1);  // x^2 + xy
    StrengthDecomposition<Q> dec;
    dec.target_degree = 2;
    dec.restriction = 1;
    dec.pairs.emplace_back(var(2, 0), var(2, 0) + var(2, 1));
    auto chk = verify(f, dec);
    CHECK(chk.ok);
    CHECK(dec.summands() == 1);
}

TEST_CASE("verify rejects a perturbed identity") {
    auto f = make_S(4, 5);
    auto dec = shioda_slice_decomposition(4, 5);
    auto perturbed = f + Poly::monomial(6, Monomial::unit(6, 0, 5), Q(1));
    auto chk = verify(perturbed, dec);
    CHECK_FALSE(chk.ok);
    CHECK(chk.message == "identity mismatch");
}

TEST_CASE("verify names the first structural failure") {
    auto f = var(2, 0) * var(2, 0);
    StrengthDecomposition<Q> dec;
    dec.target_degree = 2;
    SUBCASE("zero factor") {
        dec.pairs.emplace_back(var(2, 0), Poly::zero(2, Q::Context{}));
        CHECK(verify(f, dec).message == "pair 0: zero factor");
    }
    SUBCASE("degree range") {
        dec.pairs.emplace_back(f, Poly::constant(2, Q(1)));
        auto msg = verify(f, dec).message;
        CHECK(msg.find("degree out of range") != std::string::npos);
    }
    SUBCASE("restriction violation") {
        dec.target_degree = 3;
        dec.restriction = 1;
        auto g = var(2, 0) * var(2, 0);
        dec.pairs.emplace_back(g, var(2, 1));
        auto chk = verify(f * var(2, 0), dec);
        CHECK(chk.message == "pair 0: first factor degree differs from restriction");
    }
}

TEST_CASE("shioda slice decomposition") {
    SUBCASE("n = 4, d = 5: four summands, slices x1 x3 x4 x5") {
        auto dec = shioda_slice_decomposition(4, 5);
        CHECK(dec.summands() == 4);
        std::vector<std::size_t> slice_vars;
        for (const auto& [g, h] : dec.pairs) {
            auto lf = as_linear_form(g);
            REQUIRE(lf.has_value());
            for (std::size_t i = 0; i < 6; ++i)
                if (!lf->coeffs[i].is_zero()) slice_vars.push_back(i);
        }
        CHECK(slice_vars == std::vector<std::size_t>({1, 3, 4, 5}));
        CHECK(verify(make_S(4, 5), dec).ok);
    }
    SUBCASE("summand counts and identities across the grid") {
        CHECK(shioda_slice_decomposition(2, 3).summands() == 3);
        CHECK(shioda_slice_decomposition(6, 4).summands() == 5);
        for (std::size_t n : {2u, 4u, 6u})
            for (std::size_t d : {3u, 4u, 5u, 6u})
                CHECK(verify(make_S(n, d), shioda_slice_decomposition(n, d)).ok);
    }
    CHECK_THROWS_AS(shioda_slice_decomposition(3, 4), std::invalid_argument);
}

TEST_CASE("P-family restricted decomposition") {
    SUBCASE("n = 1, d = 3, j = 1") {
        auto dec = p_restricted_decomposition(1, 3, 1);
        REQUIRE(dec.summands() == 2);
        CHECK(dec.pairs[0].first == var(3, 0));
        CHECK(dec.pairs[0].second == var(3, 0) * var(3, 0));
        CHECK(dec.pairs[1].first == var(3, 1));
        CHECK(dec.pairs[1].second == var(3, 2) * var(3, 2));
        CHECK(verify(make_P(1, 3), dec).ok);
    }
    SUBCASE("n = 2, d = 5, j = 3") {
        auto dec = p_restricted_decomposition(2, 5, 3);
        CHECK(dec.summands() == 3);
        for (const auto& [g, h] : dec.pairs) CHECK(*g.degree() == 3);
        CHECK(verify(make_P(2, 5), dec).ok);
    }
    SUBCASE("summand count is n+1 for every j") {
        for (std::size_t n = 1; n <= 6; ++n)
            for (std::size_t d = 2; d <= 6; ++d)
                for (std::size_t j = 1; j <= d - 1; ++j) {
                    auto dec = p_restricted_decomposition(n, d, j);
                    CHECK(dec.summands() == n + 1);
                    CHECK(verify(make_P(n, d), dec).ok);
                }
    }
    CHECK_THROWS_AS(p_restricted_decomposition(1, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(p_restricted_decomposition(1, 3, 0), std::invalid_argument);
}

TEST_CASE("pair swap turns j-restricted into (d-j)-restricted") {
    for (std::size_t n : {1u, 3u})
        for (std::size_t d : {4u, 6u})
            for (std::size_t j = 1; j <= d - 1; ++j) {
                auto dec = p_restricted_decomposition(n, d, j);
                auto swapped = swap_pairs(dec);
                CHECK(swapped.summands() == dec.summands());
                REQUIRE(swapped.restriction.has_value());
                CHECK(*swapped.restriction == d - j);
                CHECK(verify(make_P(n, d), swapped).ok);
            }
}

TEST_CASE("slice_from_subspace") {
    SUBCASE("single slice") {
        auto f = var(2, 0) * var(2, 0) + var(2, 0) * var(2, 1);
        LinearSubspace<Q> q(2, {}, {LinearForm<Q>::unit(2, 0, {})});
        auto dec = slice_from_subspace(f, q);
        REQUIRE(dec.summands() == 1);
        CHECK(dec.pairs[0].first == var(2, 0));
        CHECK(dec.pairs[0].second == var(2, 0) + var(2, 1));
        CHECK(verify(f, dec).ok);
    }
    SUBCASE("containment precondition") {
        auto f = Poly::monomial(2, Monomial::unit(2, 0, 3), Q(1));  // x0^3
        LinearSubspace<Q> q(2, {}, {LinearForm<Q>::unit(2, 1, {})});
        CHECK_THROWS_AS(slice_from_subspace(f, q), std::invalid_argument);
    }
    SUBCASE("S_{4,5} against Z(x1,x3,x4,x5)") {
        auto f = make_S(4, 5);
        std::vector<LinearForm<Q>> forms;
        for (std::size_t v : {1, 3, 4, 5}) forms.push_back(LinearForm<Q>::unit(6, v, {}));
        LinearSubspace<Q> q(6, {}, forms);
        auto dec = slice_from_subspace(f, q);
        CHECK(dec.summands() == 4);
        CHECK(verify(f, dec).ok);
        // slices are exactly the defining forms of q, in order
        for (std::size_t i = 0; i < dec.summands(); ++i)
            CHECK(dec.pairs[i].first == q.forms()[i].to_polynomial(Q::Context{}));
    }
    SUBCASE("non-coordinate forms") {
        // F = (x0 + x1) * h0 + x2 * h1 is in <x0 + x1, x2>
        auto l0 = var(3, 0) + var(3, 1);
        auto f = l0 * (var(3, 0) * var(3, 2)) + var(3, 2) * (var(3, 1) * var(3, 1));
        LinearSubspace<Q> q(3, {}, {LinearForm<Q>({Q(1), Q(1), Q(0)}), LinearForm<Q>::unit(3, 2, {})});
        auto dec = slice_from_subspace(f, q);
        CHECK(verify(f, dec).ok);
    }
}

TEST_CASE("subspace_from_slice") {
    SUBCASE("shioda slices cut Z(x1,x3,x4,x5)") {
        auto dec = shioda_slice_decomposition(4, 5);
        auto q = subspace_from_slice(dec);
        CHECK(q.codim() == 4);
        std::vector<LinearForm<Q>> forms;
        for (std::size_t v : {1, 3, 4, 5}) forms.push_back(LinearForm<Q>::unit(6, v, {}));
        CHECK(q == LinearSubspace<Q>(6, {}, forms));
    }
    SUBCASE("dependent slices collapse") {
        StrengthDecomposition<Q> dec;
        dec.target_degree = 3;
        dec.restriction = 1;
        dec.pairs.emplace_back(var(2, 0), var(2, 0) * var(2, 1));
        dec.pairs.emplace_back(var(2, 0).scaled(Q(2)), var(2, 1) * var(2, 1));
        auto q = subspace_from_slice(dec);
        CHECK(q.codim() == 1);
    }
    SUBCASE("rejects non-slice input") {
        StrengthDecomposition<Q> dec;
        dec.target_degree = 4;
        dec.restriction = 2;
        dec.pairs.emplace_back(var(2, 0) * var(2, 0), var(2, 1) * var(2, 1));
        CHECK_THROWS_AS(subspace_from_slice(dec), std::invalid_argument);
    }
}

TEST_CASE("slice round-trip property") {
    Sampler gen(61);
    for (int t = 0; t < 40; ++t) {
        std::size_t nvars = static_cast<std::size_t>(gen.int_in(2, 4));
        std::size_t r = static_cast<std::size_t>(gen.int_in(1, std::min<std::size_t>(2, nvars - 1)));
        auto [q, f] = gen.planted_instance(nvars, r, static_cast<std::uint64_t>(gen.int_in(2, 4)));
        REQUIRE(contains_check(f, q));
        auto dec = slice_from_subspace(f, q);
        CHECK(verify(f, dec).ok);
        auto q2 = subspace_from_slice(dec);
        // the rebuilt subspace contains q's span (grouping can drop a slice
        // whose cofactor vanished), and the rebuilt decomposition verifies
        auto dec2 = slice_from_subspace(f, q2);
        CHECK(verify(f, dec2).ok);
    }
}

TEST_CASE("verification works over a prime field") {
    Fp::Context ctx{5};
    auto x = Polynomial<Fp>::variable(2, 0, ctx);
    auto y = Polynomial<Fp>::variable(2, 1, ctx);
    StrengthDecomposition<Fp> dec;
    dec.target_degree = 2;
    dec.restriction = 1;
    dec.pairs.emplace_back(x, x + y.scaled(Fp(3, 5)));
    CHECK(verify(x * x + (x * y).scaled(Fp(3, 5)), dec).ok);
    CHECK_FALSE(verify(x * x, dec).ok);
}

TEST_CASE("strength lower-bound consistency with family metadata") {
    // every verified decomposition with r summands respects
    // r >= ceil(codim_sing / 2)
    for (std::size_t n = 1; n <= 4; ++n)
        for (std::size_t d = 3; d <= 6; ++d) {
            auto fd = descriptor_P(n, d);
            auto dec = p_restricted_decomposition(n, d, 1);
            REQUIRE(verify(make_P(n, d), dec).ok);
            CHECK(dec.summands() >= (fd.codim_sing + 1) / 2);
        }
    for (std::size_t n : {2u, 4u, 6u})
        for (std::size_t d = 3; d <= 6; ++d) {
            auto fd = descriptor_S(n, d);
            auto dec = shioda_slice_decomposition(n, d);
            REQUIRE(verify(make_S(n, d), dec).ok);
            CHECK(dec.summands() >= (fd.codim_sing + 1) / 2);
        }
}

#include <doctest.h>

#include "abptk/bounds.hpp"
#include "abptk/chain.hpp"
#include "abptk/families.hpp"
#include "abptk/samplers.hpp"

using namespace abptk;
using Q = Rational;
using Poly = Polynomial<Q>;

namespace {
Poly var(std::size_t n, std::size_t i) { return Poly::variable(n, i, {}); }
}  // namespace

TEST_CASE("chain extraction from the figure-1 program") {
    auto chain = extract_chain(figure1_abp());
    REQUIRE(chain.depth() == 3);
    auto x = var(2, 0), y = var(2, 1);
    REQUIRE(chain.levels[0].size() == 2);
    CHECK(chain.levels[0][0] == x + y);
    CHECK(chain.levels[0][1] == y);
    REQUIRE(chain.levels[1].size() == 2);
    // A[s, (2,0)] = (x+y) y/2 + y x/2 = xy + y^2/2 ; A[s, (2,1)] = (x+y) x
    CHECK(chain.levels[1][0] == x * y + (y * y).scaled(Q(1, 2)));
    CHECK(chain.levels[1][1] == x * x + x * y);
    REQUIRE(chain.levels[2].size() == 1);
    CHECK(chain.levels[2][0] == figure1_abp().expand());
}

TEST_CASE("chain extraction from a path program") {
    auto f = Poly::monomial(1, Monomial::unit(1, 0, 4), Q(1));
    auto chain = extract_chain(naive_abp_from_polynomial(f));
    REQUIRE(chain.depth() == 4);
    for (std::size_t k = 0; k < 4; ++k) {
        REQUIRE(chain.levels[k].size() == 1);
        CHECK(chain.levels[k][0] ==
              Poly::monomial(1, Monomial::unit(1, 0, static_cast<std::uint32_t>(k + 1)), Q(1)));
    }
}

TEST_CASE("naive power-sum chain has per-monomial levels") {
    auto f = make_power_sum(2, 3);
    auto chain = extract_chain(naive_abp_from_polynomial(f));
    REQUIRE(chain.depth() == 3);
    for (std::size_t k = 0; k + 1 < chain.depth(); ++k) {
        REQUIRE(chain.levels[k].size() == 3);
        for (std::size_t i = 0; i < 3; ++i)
            CHECK(chain.levels[k][i] ==
                  Poly::monomial(3, Monomial::unit(3, i, static_cast<std::uint32_t>(k + 1)), Q(1)));
    }
}

TEST_CASE("check_inclusion") {
    SUBCASE("x^2 + xy = x (x + y)") {
        std::vector<Poly> src{var(2, 0), var(2, 1)};
        std::vector<Poly> tgt{var(2, 0) * var(2, 0) + var(2, 0) * var(2, 1)};
        auto res = check_inclusion(src, tgt);
        REQUIRE(res.ok);
        REQUIRE(res.certificates.size() == 1);
        // the certificate reproduces the generator
        Poly sum(2, {});
        for (std::size_t i = 0; i < 2; ++i)
            sum += src[i] * res.certificates[0].multipliers[i].to_polynomial(Q::Context{});
        CHECK(sum == tgt[0]);
        // canonical solution: x (x+y) + y * 0
        CHECK(res.certificates[0].multipliers[0] == LinearForm<Q>({Q(1), Q(1)}));
        CHECK(res.certificates[0].multipliers[1].is_zero());
    }
    SUBCASE("y^2 is not in <x> in degree 2") {
        std::vector<Poly> src{var(2, 0)};
        std::vector<Poly> tgt{var(2, 1) * var(2, 1)};
        auto res = check_inclusion(src, tgt);
        CHECK_FALSE(res.ok);
        CHECK(res.failed_index == 0);
    }
    SUBCASE("figure-1 level certificates substitute back") {
        auto chain = extract_chain(figure1_abp());
        auto res = check_inclusion(chain.levels[0], chain.levels[1]);
        REQUIRE(res.ok);
        for (std::size_t j = 0; j < chain.levels[1].size(); ++j) {
            Poly sum(2, {});
            for (std::size_t i = 0; i < chain.levels[0].size(); ++i)
                sum += chain.levels[0][i] *
                       res.certificates[j].multipliers[i].to_polynomial(Q::Context{});
            CHECK(sum == chain.levels[1][j]);
        }
    }
}

TEST_CASE("synthesis") {
    SUBCASE("single-generator chain becomes a path program") {
        IdealChain<Q> chain;
        chain.num_vars = 1;
        chain.ctx = {};
        for (std::uint32_t k = 1; k <= 4; ++k)
            chain.levels.push_back({Poly::monomial(1, Monomial::unit(1, 0, k), Q(1))});
        auto a = synthesize_abp(chain);
        CHECK(a.widths() == std::vector<std::size_t>({1, 1, 1, 1, 1}));
        CHECK(a.expand() == chain.levels.back()[0]);
    }
    SUBCASE("figure-1 chain synthesizes to the same polynomial and widths") {
        auto chain = extract_chain(figure1_abp());
        auto a = synthesize_abp(chain);
        CHECK(a.widths() == figure1_abp().widths());
        CHECK(a.expand() == figure1_abp().expand());
        CHECK(a.validate().ok);
    }
    SUBCASE("redundant padded generator widens the program, same polynomial") {
        auto chain = extract_chain(figure1_abp());
        // pad level 1 with a rational combination of its generators
        auto pad = chain.levels[0][0].scaled(Q(2)) + chain.levels[0][1].scaled(Q(-1, 3));
        chain.levels[0].push_back(pad);
        auto a = synthesize_abp(chain);
        CHECK(a.widths() == std::vector<std::size_t>({1, 3, 2, 1}));
        CHECK(a.expand() == figure1_abp().expand());
        SUBCASE("minimize prunes it back") {
            auto minimized = minimize_chain(chain);
            auto b = synthesize_abp(minimized);
            CHECK(b.widths() == figure1_abp().widths());
            CHECK(b.expand() == figure1_abp().expand());
        }
    }
    SUBCASE("uncertifiable chains are rejected") {
        IdealChain<Q> chain;
        chain.num_vars = 2;
        chain.ctx = {};
        chain.levels.push_back({var(2, 0)});
        chain.levels.push_back({var(2, 1) * var(2, 1)});
        CHECK_THROWS_AS(synthesize_abp(chain), std::invalid_argument);
    }
    SUBCASE("degree bookkeeping is enforced") {
        IdealChain<Q> chain;
        chain.num_vars = 2;
        chain.ctx = {};
        chain.levels.push_back({var(2, 0) * var(2, 0)});  // degree 2 at level 1
        CHECK_THROWS_AS(synthesize_abp(chain), std::invalid_argument);
    }
}

TEST_CASE("extraction stores the program's labels as certificates") {
    auto a = figure1_abp();
    auto chain = extract_chain(a);
    REQUIRE(chain.certificates_consistent());
    for (std::size_t k = 0; k + 1 < chain.depth(); ++k)
        for (std::size_t j = 0; j < chain.levels[k + 1].size(); ++j) {
            Poly sum(2, {});
            for (std::size_t i = 0; i < chain.levels[k].size(); ++i)
                sum += chain.levels[k][i] *
                       chain.certificates[k][j].multipliers[i].to_polynomial(Q::Context{});
            CHECK(sum == chain.levels[k + 1][j]);
        }
}

TEST_CASE("dead vertices are dropped and widths shrink") {
    // cancellation kills A[source, (2,0)]: the vertex carries the zero
    // polynomial, extraction normalizes it away
    Abp<Q> a(2, {}, {1, 2, 2, 1});
    a.add_edge(0, 0, 0, LinearForm<Q>({Q(1), Q(0)}));   // x
    a.add_edge(0, 0, 1, LinearForm<Q>({Q(1), Q(0)}));   // x
    a.add_edge(1, 0, 0, LinearForm<Q>({Q(0), Q(1)}));   // y
    a.add_edge(1, 1, 0, LinearForm<Q>({Q(0), Q(-1)}));  // -y, cancels the path above
    a.add_edge(1, 0, 1, LinearForm<Q>({Q(1), Q(0)}));   // x
    a.add_edge(2, 0, 0, LinearForm<Q>({Q(0), Q(1)}));   // from the dead vertex
    a.add_edge(2, 1, 0, LinearForm<Q>({Q(1), Q(0)}));   // x
    REQUIRE(a.validate().ok);
    auto x3 = Poly::monomial(2, Monomial({3, 0}), Q(1));
    REQUIRE(a.expand() == x3);
    auto chain = extract_chain(a);
    REQUIRE(chain.depth() == 3);
    CHECK(chain.levels[0].size() == 2);
    CHECK(chain.levels[1].size() == 1);  // the dead vertex is gone
    auto back = synthesize_abp(chain);
    CHECK(back.widths() == std::vector<std::size_t>({1, 2, 1, 1}));
    CHECK(back.expand() == x3);
}

TEST_CASE("round-trip on random programs") {
    Sampler gen(73);
    for (int t = 0; t < 40; ++t) {
        auto a = gen.abp(static_cast<std::size_t>(gen.int_in(2, 3)));
        auto chain = extract_chain(a);
        std::size_t size_from_levels = 0;
        for (std::size_t k = 0; k + 1 < chain.depth(); ++k) size_from_levels += chain.levels[k].size();
        CHECK(size_from_levels == a.size());  // no dead vertices with these labels
        auto back = synthesize_abp(chain);   // stored-certificate path
        CHECK(back.widths() == a.widths());
        CHECK(back.expand() == a.expand());
        chain.certificates.clear();
        auto solved = synthesize_abp(chain);  // solver path, canonical certificates
        CHECK(solved.widths() == a.widths());
        CHECK(solved.expand() == a.expand());
    }
}

TEST_CASE("per-level counts dominate the family lower bounds") {
    // level-k generator count of any program computing P_{n,d} is >= the
    // computed str_k lower bound; the naive program makes this concrete
    for (std::size_t n : {1u, 2u})
        for (std::size_t d : {3u, 4u}) {
            auto f = make_P(n, d);
            auto chain = extract_chain(naive_abp_from_polynomial(f));
            auto rep = p_family_report(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d));
            for (std::size_t k = 0; k + 1 < chain.depth(); ++k) {
                auto lb = rep.per_j_lower.at(static_cast<std::int64_t>(k + 1));
                CHECK(static_cast<std::int64_t>(chain.levels[k].size()) >= lb);
            }
        }
}

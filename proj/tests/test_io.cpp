#include <doctest.h>

#include <fstream>
#include <sstream>

#include "abptk/chain.hpp"
#include "abptk/decomp.hpp"
#include "abptk/families.hpp"
#include "abptk/io.hpp"
#include "abptk/samplers.hpp"

using namespace abptk;
using abptk::io::json;
using Q = Rational;

namespace {

json load_fixture(const std::string& name) {
    std::ifstream in(std::string(ABPTK_SOURCE_DIR) + "/fixtures/" + name);
    REQUIRE(in.good());
    json j;
    in >> j;
    return j;
}

}  // namespace

TEST_CASE("field tags") {
    CHECK(io::parse_field_tag("Q").rational);
    auto t = io::parse_field_tag("Fp:31");
    CHECK_FALSE(t.rational);
    CHECK(t.p == 31);
    CHECK_THROWS_AS(io::parse_field_tag("Fp:6"), std::invalid_argument);
    CHECK_THROWS_AS(io::parse_field_tag("R"), std::invalid_argument);
}

TEST_CASE("polynomial json round-trip") {
    auto f = make_S(4, 5);
    auto j = io::poly_to_json(f);
    CHECK(j.at("field") == "Q");
    auto back = io::poly_from_json(j);
    REQUIRE(back.index() == 0);
    CHECK(std::get<0>(back) == f);
    CHECK(io::poly_to_json(back) == j);

    auto fp = io::poly_mod_p(f, 3);
    auto jp = io::poly_to_json(fp);
    CHECK(jp.at("field") == "Fp:3");
    auto backp = io::poly_from_json(jp);
    REQUIRE(backp.index() == 1);
    CHECK(std::get<1>(backp) == fp);
}

TEST_CASE("terms serialize in descending graded-lex order") {
    auto f = make_P(2, 3);
    auto j = io::poly_to_json(f);
    // x0^3 comes first, then x1 x2^2, then x3 x4^2
    CHECK(j.at("terms")[0].at("exps") == json::array({3, 0, 0, 0, 0}));
    CHECK(j.at("terms")[1].at("exps") == json::array({0, 1, 2, 0, 0}));
    CHECK(j.at("terms")[2].at("exps") == json::array({0, 0, 0, 1, 2}));
}

TEST_CASE("rational coefficients round-trip exactly") {
    Sampler gen(79);
    for (int t = 0; t < 30; ++t) {
        auto f = gen.homogeneous(3, 3, 6);
        auto back = io::poly_from_json(io::poly_to_json(f));
        CHECK(std::get<0>(back) == f);
    }
}

TEST_CASE("abp json round-trip") {
    auto a = figure1_abp();
    auto j = io::abp_to_json(a);
    auto back = io::abp_from_json(j);
    REQUIRE(back.index() == 0);
    const auto& b = std::get<0>(back);
    CHECK(b.widths() == a.widths());
    CHECK(b.expand() == a.expand());
    CHECK(io::abp_to_json(back) == j);
}

TEST_CASE("decomp and chain round-trips") {
    auto dec = shioda_slice_decomposition(4, 5);
    auto j = io::decomp_to_json(dec);
    auto back = io::decomp_from_json(j);
    REQUIRE(back.index() == 0);
    CHECK(io::decomp_to_json(std::get<0>(back)) == j);
    CHECK(verify(make_S(4, 5), std::get<0>(back)).ok);

    auto chain = extract_chain(figure1_abp());
    auto cj = io::chain_to_json(chain);
    auto cback = io::chain_from_json(cj);
    REQUIRE(cback.index() == 0);
    CHECK(io::chain_to_json(std::get<0>(cback)) == cj);
}

TEST_CASE("subspace json round-trip") {
    std::vector<LinearForm<Q>> forms;
    forms.push_back(LinearForm<Q>({Q(1), Q(1, 2), Q(0)}));
    forms.push_back(LinearForm<Q>({Q(0), Q(0), Q(1)}));
    LinearSubspace<Q> q(3, {}, forms);
    auto j = io::subspace_to_json(q);
    auto back = io::subspace_from_json(j);
    REQUIRE(back.index() == 0);
    CHECK(std::get<0>(back) == q);
}

TEST_CASE("mod-p reduction") {
    auto f = make_P(1, 3);
    auto fp = io::poly_mod_p(f, 2);
    CHECK(fp.term_count() == 2);
    auto half = Polynomial<Q>::monomial(1, Monomial::unit(1, 0, 2), Q(1, 2));
    CHECK_THROWS_AS(io::poly_mod_p(half, 2), std::invalid_argument);
    CHECK(io::poly_mod_p(half, 3).coefficient(Monomial::unit(1, 0, 2)) == Fp(2, 3));
    CHECK_THROWS_AS(io::abp_mod_p(figure1_abp(), 2), std::invalid_argument);  // the 1/2 labels
    auto a3 = io::abp_mod_p(figure1_abp(), 3);
    CHECK(a3.validate().ok);
}

TEST_CASE("bundled fixtures round-trip to identical values") {
    SUBCASE("figure-1 program fixture") {
        auto j = load_fixture("fig1_abp.json");
        auto a = io::abp_from_json(j);
        CHECK(io::abp_to_json(a) == j);
        REQUIRE(a.index() == 0);
        CHECK(std::get<0>(a).expand() == figure1_abp().expand());
        CHECK(std::get<0>(a).size() == 4);
    }
    SUBCASE("shioda polynomial fixture") {
        auto j = load_fixture("shioda_s45.json");
        auto f = io::poly_from_json(j);
        CHECK(io::poly_to_json(f) == j);
        REQUIRE(f.index() == 0);
        CHECK(std::get<0>(f) == make_S(4, 5));
    }
    SUBCASE("shioda decomposition fixture verifies") {
        auto j = load_fixture("shioda_s45_decomp.json");
        auto dec = io::decomp_from_json(j);
        REQUIRE(dec.index() == 0);
        CHECK(io::decomp_to_json(std::get<0>(dec)) == j);
        CHECK(verify(make_S(4, 5), std::get<0>(dec)).ok);
    }
}

TEST_CASE("parse errors carry context") {
    CHECK_THROWS(io::poly_from_json(json{{"vars", 2}, {"field", "Q"}}));
    CHECK_THROWS(io::poly_from_json(json{
        {"vars", 2}, {"field", "Q"}, {"terms", json::array({json{{"coeff", "1"}, {"exps", {1}}}})}}));
}

TEST_CASE("digest is stable") {
    CHECK(io::digest_hex("abc") == io::digest_hex("abc"));
    CHECK(io::digest_hex("abc") != io::digest_hex("abd"));
}

TEST_CASE("point parsing") {
    auto q = io::parse_point_q("1/2, -3, 0");
    REQUIRE(q.size() == 3);
    CHECK(q[0] == Q(1, 2));
    CHECK(q[1] == Q(-3));
    auto f = io::parse_point_fp("0,1,4", 3);
    CHECK(f[2] == Fp(1, 3));
}

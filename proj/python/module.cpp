#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "abptk/acceptance.hpp"
#include "abptk/bounds.hpp"
#include "abptk/chain.hpp"
#include "abptk/decomp.hpp"
#include "abptk/families.hpp"
#include "abptk/io.hpp"
#include "abptk/singular.hpp"
#include "abptk/subspace.hpp"

namespace py = pybind11;
using abptk::io::json;

namespace {

// Exact values cross the boundary as JSON strings; nothing is ever rounded.

std::string family_emit(const std::string& name, std::size_t n, std::size_t d,
                        const std::string& field) {
    auto tag = abptk::io::parse_field_tag(field);
    if (name == "fig1") {
        auto a = abptk::figure1_abp();
        return (tag.rational ? abptk::io::abp_to_json(a)
                             : abptk::io::abp_to_json(abptk::io::abp_mod_p(a, tag.p)))
            .dump();
    }
    abptk::Polynomial<abptk::Rational> f(1, {});
    if (name == "powersum")
        f = abptk::make_power_sum(n, d);
    else if (name == "P")
        f = abptk::make_P(n, d);
    else if (name == "S")
        f = abptk::make_S(n, d);
    else if (name == "Shat")
        f = abptk::make_S_hat(n, d);
    else
        throw std::invalid_argument("unknown family '" + name + "'");
    return (tag.rational ? abptk::io::poly_to_json(f)
                         : abptk::io::poly_to_json(abptk::io::poly_mod_p(f, tag.p)))
        .dump();
}

std::string poly_eval(const std::string& poly_json, const std::vector<std::string>& point) {
    auto f = abptk::io::poly_from_json(json::parse(poly_json));
    return std::visit(
        [&](const auto& p) {
            using K = typename std::decay_t<decltype(p)>::TermMap::mapped_type;
            std::vector<K> pt;
            for (const auto& s : point) {
                if constexpr (std::is_same_v<K, abptk::Rational>)
                    pt.push_back(abptk::Rational::parse(s));
                else
                    pt.push_back(abptk::Fp::parse(s, p.context().p));
            }
            return p.evaluate(pt).str();
        },
        f);
}

std::string abp_validate(const std::string& abp_json) {
    auto a = abptk::io::abp_from_json(json::parse(abp_json));
    return std::visit(
        [](const auto& x) {
            auto v = x.validate();
            return json{{"ok", v.ok}, {"size", x.size()}, {"violation", v.violation}}.dump();
        },
        a);
}

std::string abp_expand(const std::string& abp_json) {
    auto a = abptk::io::abp_from_json(json::parse(abp_json));
    return std::visit([](const auto& x) { return abptk::io::poly_to_json(x.expand()).dump(); }, a);
}

std::string decomp_verify(const std::string& poly_json, const std::string& decomp_json) {
    auto f = abptk::io::poly_from_json(json::parse(poly_json));
    auto dec = abptk::io::decomp_from_json(json::parse(decomp_json));
    abptk::DecompCheck chk;
    std::size_t r = 0;
    if (f.index() == 0 && dec.index() == 0) {
        chk = abptk::verify(std::get<0>(f), std::get<0>(dec));
        r = std::get<0>(dec).summands();
    } else if (f.index() == 1 && dec.index() == 1) {
        chk = abptk::verify(std::get<1>(f), std::get<1>(dec));
        r = std::get<1>(dec).summands();
    } else {
        throw std::invalid_argument("field mismatch between polynomial and decomposition");
    }
    return json{{"ok", chk.ok}, {"message", chk.message}, {"summands", r}}.dump();
}

std::string shioda_decomposition(std::size_t n, std::size_t d) {
    return abptk::io::decomp_to_json(abptk::shioda_slice_decomposition(n, d)).dump();
}

std::string p_restricted(std::size_t n, std::size_t d, std::size_t j) {
    return abptk::io::decomp_to_json(abptk::p_restricted_decomposition(n, d, j)).dump();
}

std::string sing_compute(const std::string& poly_json) {
    auto f = abptk::io::poly_from_json(json::parse(poly_json));
    if (f.index() != 0) throw std::invalid_argument("sing_compute expects a rational polynomial");
    auto rep = abptk::pure_power_reduce(abptk::sing_generators(std::get<0>(f)));
    return abptk::io::sing_report_to_json(rep).dump();
}

std::string chain_extract(const std::string& abp_json) {
    auto a = abptk::io::abp_from_json(json::parse(abp_json));
    return std::visit(
        [](const auto& x) { return abptk::io::chain_to_json(abptk::extract_chain(x)).dump(); }, a);
}

std::string chain_synthesize(const std::string& chain_json, bool minimize) {
    auto c = abptk::io::chain_from_json(json::parse(chain_json));
    return std::visit(
        [&](const auto& ch) {
            auto use = minimize ? abptk::minimize_chain(ch) : ch;
            return abptk::io::abp_to_json(abptk::synthesize_abp(use)).dump();
        },
        c);
}

std::string bounds_compute(const std::string& family, std::int64_t n, std::int64_t d) {
    abptk::BoundReport rep;
    if (family == "powersum")
        rep = abptk::power_sum_report(n, d);
    else if (family == "P")
        rep = abptk::p_family_report(n, d);
    else if (family == "S")
        rep = abptk::shioda_report(n, d);
    else
        throw std::invalid_argument("unknown family '" + family + "'");
    return abptk::io::bound_report_to_json(rep).dump();
}

std::string search_subspaces(const std::string& poly_json, std::size_t codim,
                             std::uint64_t budget) {
    auto f = abptk::io::poly_from_json(json::parse(poly_json));
    if (f.index() != 1)
        throw std::invalid_argument("search_subspaces expects a prime-field polynomial");
    abptk::SearchOptions opts;
    opts.budget = budget;
    auto res = abptk::exhaustive_search(std::get<1>(f), codim, opts);
    json found = json::array();
    for (const auto& q : res.found) found.push_back(abptk::io::subspace_to_json(q));
    return json{{"status", res.budget_exceeded ? "budget-exceeded"
                                               : (res.found.empty() ? "none-found" : "found")},
                {"candidates", res.candidates},
                {"found", found}}
        .dump();
}

std::string refute_rational(const std::string& poly_json, std::size_t codim) {
    auto f = abptk::io::poly_from_json(json::parse(poly_json));
    if (f.index() != 0)
        throw std::invalid_argument("refute_rational expects a rational polynomial");
    auto res = abptk::propagation_refute(abptk::build_chart_systems(std::get<0>(f), codim));
    json j{{"status", res.refuted ? "refuted" : "inconclusive"}};
    if (res.witness_chart) j["witness_chart"] = *res.witness_chart;
    return j.dump();
}

std::string run_acceptance_py(std::uint64_t seed) {
    std::ostringstream os;
    bool ok = abptk::print_acceptance(os, seed);
    return json{{"pass", ok}, {"table", os.str()}}.dump();
}

}  // namespace

PYBIND11_MODULE(abptk_core, m) {
    m.doc() = "exact computer-algebra core: homogeneous ABPs, strength/slice decompositions, "
              "subspace search and lower-bound calculators";
    m.def("family_emit", &family_emit, py::arg("name"), py::arg("n") = 1, py::arg("d") = 3,
          py::arg("field") = "Q");
    m.def("poly_eval", &poly_eval, py::arg("poly_json"), py::arg("point"));
    m.def("abp_validate", &abp_validate, py::arg("abp_json"));
    m.def("abp_expand", &abp_expand, py::arg("abp_json"));
    m.def("decomp_verify", &decomp_verify, py::arg("poly_json"), py::arg("decomp_json"));
    m.def("shioda_decomposition", &shioda_decomposition, py::arg("n"), py::arg("d"));
    m.def("p_restricted_decomposition", &p_restricted, py::arg("n"), py::arg("d"), py::arg("j"));
    m.def("sing_compute", &sing_compute, py::arg("poly_json"));
    m.def("chain_extract", &chain_extract, py::arg("abp_json"));
    m.def("chain_synthesize", &chain_synthesize, py::arg("chain_json"), py::arg("minimize") = false);
    m.def("bounds_compute", &bounds_compute, py::arg("family"), py::arg("n"), py::arg("d"));
    m.def("search_subspaces", &search_subspaces, py::arg("poly_json"), py::arg("codim"),
          py::arg("budget") = 5'000'000);
    m.def("refute_rational", &refute_rational, py::arg("poly_json"), py::arg("codim"));
    m.def("run_acceptance", &run_acceptance_py, py::arg("seed") = 20240917);
    m.attr("__version__") = "0.1.0";
}

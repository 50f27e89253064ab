#include "abptk/io.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace abptk::io {

namespace {

std::string coeff_str(const Rational& c) { return c.str(); }
std::string coeff_str(const Fp& c) { return c.str(); }

Rational coeff_parse(const std::string& s, const Rational::Context&) { return Rational::parse(s); }
Fp coeff_parse(const std::string& s, const Fp::Context& ctx) { return Fp::parse(s, ctx.p); }

template <class K>
json poly_to_json_impl(const Polynomial<K>& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms()) {
        json t;
        t["coeff"] = coeff_str(c);
        t["exps"] = m.exps;
        terms.push_back(std::move(t));
    }
    return json{{"vars", f.num_vars()}, {"field", field_name(f.context())}, {"terms", terms}};
}

template <class K>
Polynomial<K> poly_from_json_impl(const json& j, typename K::Context ctx) {
    std::size_t nvars = j.at("vars").get<std::size_t>();
    Polynomial<K> f(nvars, ctx);
    for (const auto& t : j.at("terms")) {
        auto exps = t.at("exps").get<std::vector<std::uint32_t>>();
        if (exps.size() != nvars) throw std::invalid_argument("term exponent length != vars");
        f.add_term(Monomial(std::move(exps)), coeff_parse(t.at("coeff").get<std::string>(), ctx));
    }
    return f;
}

template <class K>
json label_to_json(const LinearForm<K>& lf) {
    json a = json::array();
    for (const auto& c : lf.coeffs) a.push_back(coeff_str(c));
    return a;
}

template <class K>
LinearForm<K> label_from_json(const json& j, std::size_t nvars, typename K::Context ctx) {
    if (!j.is_array() || j.size() != nvars)
        throw std::invalid_argument("label length != variable count");
    LinearForm<K> lf = LinearForm<K>::zero(nvars, ctx);
    for (std::size_t i = 0; i < nvars; ++i)
        lf.coeffs[i] = coeff_parse(j[i].get<std::string>(), ctx);
    return lf;
}

template <class K>
json abp_to_json_impl(const Abp<K>& a) {
    json edges = json::array();
    for (const auto& e : a.edges())
        edges.push_back(json{{"layer", e.layer},
                             {"from", e.from},
                             {"to", e.to},
                             {"label", label_to_json(e.label)}});
    return json{{"vars", a.num_vars()},
                {"field", field_name(a.context())},
                {"widths", a.widths()},
                {"edges", edges}};
}

template <class K>
Abp<K> abp_from_json_impl(const json& j, typename K::Context ctx) {
    std::size_t nvars = j.at("vars").get<std::size_t>();
    Abp<K> a(nvars, ctx, j.at("widths").get<std::vector<std::size_t>>());
    for (const auto& e : j.at("edges"))
        a.add_edge(e.at("layer").get<std::size_t>(), e.at("from").get<std::size_t>(),
                   e.at("to").get<std::size_t>(), label_from_json<K>(e.at("label"), nvars, ctx));
    return a;
}

template <class K>
json decomp_to_json_impl(const StrengthDecomposition<K>& dec) {
    json pairs = json::array();
    for (const auto& [g, h] : dec.pairs)
        pairs.push_back(json{{"g", poly_to_json_impl(g)}, {"h", poly_to_json_impl(h)}});
    json j{{"degree", dec.target_degree}, {"pairs", pairs}};
    if (dec.restriction)
        j["restriction"] = *dec.restriction;
    else
        j["restriction"] = nullptr;
    return j;
}

template <class K>
StrengthDecomposition<K> decomp_from_json_impl(const json& j, typename K::Context ctx) {
    StrengthDecomposition<K> dec;
    dec.target_degree = j.at("degree").get<std::size_t>();
    if (j.contains("restriction") && !j.at("restriction").is_null())
        dec.restriction = j.at("restriction").get<std::size_t>();
    for (const auto& pr : j.at("pairs"))
        dec.pairs.emplace_back(poly_from_json_impl<K>(pr.at("g"), ctx),
                               poly_from_json_impl<K>(pr.at("h"), ctx));
    return dec;
}

template <class K>
json chain_to_json_impl(const IdealChain<K>& c) {
    json levels = json::array();
    for (const auto& lvl : c.levels) {
        json gens = json::array();
        for (const auto& g : lvl) gens.push_back(poly_to_json_impl(g));
        levels.push_back(std::move(gens));
    }
    return json{{"vars", c.num_vars}, {"field", field_name(c.ctx)}, {"levels", levels}};
}

template <class K>
IdealChain<K> chain_from_json_impl(const json& j, typename K::Context ctx) {
    IdealChain<K> c;
    c.num_vars = j.at("vars").get<std::size_t>();
    c.ctx = ctx;
    for (const auto& lvl : j.at("levels")) {
        std::vector<Polynomial<K>> gens;
        for (const auto& g : lvl) gens.push_back(poly_from_json_impl<K>(g, ctx));
        c.levels.push_back(std::move(gens));
    }
    return c;
}

template <class K>
json subspace_to_json_impl(const LinearSubspace<K>& q) {
    json forms = json::array();
    for (const auto& f : q.forms()) forms.push_back(label_to_json(f));
    return json{{"vars", q.num_vars()}, {"field", field_name(q.context())}, {"forms", forms}};
}

template <class K>
LinearSubspace<K> subspace_from_json_impl(const json& j, typename K::Context ctx) {
    std::size_t nvars = j.at("vars").get<std::size_t>();
    std::vector<LinearForm<K>> forms;
    for (const auto& f : j.at("forms")) forms.push_back(label_from_json<K>(f, nvars, ctx));
    return LinearSubspace<K>(nvars, ctx, forms);
}

FieldTag field_of(const json& j) {
    return parse_field_tag(j.at("field").get<std::string>());
}

}  // namespace

std::string field_name(const Rational::Context&) { return "Q"; }
std::string field_name(const Fp::Context& ctx) { return "Fp:" + std::to_string(ctx.p); }

FieldTag parse_field_tag(const std::string& tag) {
    if (tag == "Q") return {true, 0};
    if (tag.rfind("Fp:", 0) == 0) {
        unsigned long p = std::stoul(tag.substr(3));
        if (p < 2 || p > (1ul << 31)) throw std::invalid_argument("field modulus out of range");
        // small trial-division primality check; desk-scale moduli
        for (unsigned long q = 2; q * q <= p; ++q)
            if (p % q == 0) throw std::invalid_argument("field modulus " + std::to_string(p) + " is not prime");
        return {false, static_cast<std::uint32_t>(p)};
    }
    throw std::invalid_argument("unknown field tag '" + tag + "' (expected Q or Fp:<p>)");
}

json poly_to_json(const Polynomial<Rational>& f) { return poly_to_json_impl(f); }
json poly_to_json(const Polynomial<Fp>& f) { return poly_to_json_impl(f); }
json poly_to_json(const PolyAny& f) {
    return std::visit([](const auto& p) { return poly_to_json_impl(p); }, f);
}

PolyAny poly_from_json(const json& j) {
    auto tag = field_of(j);
    if (tag.rational) return poly_from_json_impl<Rational>(j, {});
    return poly_from_json_impl<Fp>(j, Fp::Context{tag.p});
}

json abp_to_json(const Abp<Rational>& a) { return abp_to_json_impl(a); }
json abp_to_json(const Abp<Fp>& a) { return abp_to_json_impl(a); }
json abp_to_json(const AbpAny& a) {
    return std::visit([](const auto& x) { return abp_to_json_impl(x); }, a);
}

AbpAny abp_from_json(const json& j) {
    auto tag = field_of(j);
    if (tag.rational) return abp_from_json_impl<Rational>(j, {});
    return abp_from_json_impl<Fp>(j, Fp::Context{tag.p});
}

json decomp_to_json(const StrengthDecomposition<Rational>& dec) { return decomp_to_json_impl(dec); }
json decomp_to_json(const StrengthDecomposition<Fp>& dec) { return decomp_to_json_impl(dec); }

DecompAny decomp_from_json(const json& j) {
    if (j.at("pairs").empty()) throw std::invalid_argument("decomposition has no pairs");
    auto tag = field_of(j.at("pairs")[0].at("g"));
    if (tag.rational) return decomp_from_json_impl<Rational>(j, {});
    return decomp_from_json_impl<Fp>(j, Fp::Context{tag.p});
}

json chain_to_json(const IdealChain<Rational>& c) { return chain_to_json_impl(c); }
json chain_to_json(const IdealChain<Fp>& c) { return chain_to_json_impl(c); }

ChainAny chain_from_json(const json& j) {
    auto tag = field_of(j);
    if (tag.rational) return chain_from_json_impl<Rational>(j, {});
    return chain_from_json_impl<Fp>(j, Fp::Context{tag.p});
}

json subspace_to_json(const LinearSubspace<Rational>& q) { return subspace_to_json_impl(q); }
json subspace_to_json(const LinearSubspace<Fp>& q) { return subspace_to_json_impl(q); }

SubspaceAny subspace_from_json(const json& j) {
    auto tag = field_of(j);
    if (tag.rational) return subspace_from_json_impl<Rational>(j, {});
    return subspace_from_json_impl<Fp>(j, Fp::Context{tag.p});
}

json bound_report_to_json(const BoundReport& rep) {
    json per = json::object();
    for (const auto& [j, v] : rep.per_j_lower) per[std::to_string(j)] = v;
    json trace = json::array();
    for (const auto& t : rep.formula_trace) {
        json e{{"rule", t.rule}, {"value", t.value}};
        if (t.j) e["j"] = *t.j;
        if (!t.note.empty()) e["note"] = t.note;
        trace.push_back(std::move(e));
    }
    return json{{"per_j_lower", per},
                {"total", rep.total_abp_lower},
                {"status", rep.status},
                {"formula_trace", trace}};
}

json sing_report_to_json(const SingularLocusReport& rep) {
    json gens = json::array();
    for (const auto& g : rep.generators) gens.push_back(poly_to_json(g));
    json forms = json::array();
    for (const auto& f : rep.reduced_linear_forms) forms.push_back(label_to_json(f));
    json residual = json::array();
    for (const auto& g : rep.residual) residual.push_back(poly_to_json(g));
    json j{{"generators", gens},
           {"status", rep.reduced ? "reduced" : "unreduced"},
           {"reduced_linear_forms", forms}};
    if (rep.reduced) {
        if (rep.empty_locus)
            j["codim"] = "empty";
        else
            j["codim"] = rep.codim;
        j["codim_rank"] = rep.codim;
    }
    if (!rep.residual.empty()) j["residual"] = residual;
    return j;
}

Polynomial<Fp> poly_mod_p(const Polynomial<Rational>& f, std::uint32_t p) {
    Fp::Context ctx{p};
    Polynomial<Fp> out(f.num_vars(), ctx);
    for (const auto& [m, c] : f.terms()) {
        Fp den = Fp::parse(c.den_str(), p);
        if (den.is_zero())
            throw std::invalid_argument("coefficient denominator vanishes mod " + std::to_string(p));
        out.add_term(m, Fp::parse(c.num_str(), p) / den);
    }
    return out;
}

Abp<Fp> abp_mod_p(const Abp<Rational>& a, std::uint32_t p) {
    Fp::Context ctx{p};
    Abp<Fp> out(a.num_vars(), ctx, a.widths());
    for (const auto& e : a.edges()) {
        LinearForm<Fp> lf = LinearForm<Fp>::zero(a.num_vars(), ctx);
        for (std::size_t i = 0; i < a.num_vars(); ++i) {
            const auto& c = e.label.coeffs[i];
            Fp den = Fp::parse(c.den_str(), p);
            if (den.is_zero())
                throw std::invalid_argument("label denominator vanishes mod " + std::to_string(p));
            lf.coeffs[i] = Fp::parse(c.num_str(), p) / den;
        }
        out.add_edge(e.layer, e.from, e.to, std::move(lf));
    }
    return out;
}

namespace {
std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        // trim spaces
        auto b = item.find_first_not_of(" \t");
        auto e = item.find_last_not_of(" \t");
        parts.push_back(b == std::string::npos ? "" : item.substr(b, e - b + 1));
    }
    return parts;
}
}  // namespace

std::vector<Rational> parse_point_q(const std::string& s) {
    std::vector<Rational> pt;
    for (const auto& c : split_csv(s)) pt.push_back(Rational::parse(c));
    return pt;
}

std::vector<Fp> parse_point_fp(const std::string& s, std::uint32_t p) {
    std::vector<Fp> pt;
    for (const auto& c : split_csv(s)) pt.push_back(Fp::parse(c, p));
    return pt;
}

std::string digest_hex(const std::string& content) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : content) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace abptk::io

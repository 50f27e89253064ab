#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "abptk/acceptance.hpp"
#include "abptk/bounds.hpp"
#include "abptk/chain.hpp"
#include "abptk/decomp.hpp"
#include "abptk/families.hpp"
#include "abptk/io.hpp"
#include "abptk/singular.hpp"
#include "abptk/subspace.hpp"

namespace {

using abptk::io::json;

constexpr const char* kVersion = "0.1.0";

// exit codes: 0 success / found / pass, 1 verification failure / none found,
// 2 usage or input error, 3 budget exceeded, 4 inconclusive
enum ExitCode { kOk = 0, kFail = 1, kUsage = 2, kBudget = 3, kInconclusive = 4 };

struct Output {
    std::string format = "text";
    std::optional<std::string> manifest_path;
    std::vector<std::pair<std::string, std::string>> input_digests;
    std::string command_line;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    void note_input(const std::string& path, const std::string& content) {
        input_digests.emplace_back(path, abptk::io::digest_hex(content));
    }

    void finish(const json& result, int code) const {
        if (!manifest_path) return;
        json m;
        m["command"] = command_line;
        m["version"] = kVersion;
        json inputs = json::array();
        for (const auto& [p, d] : input_digests) inputs.push_back(json{{"path", p}, {"digest", d}});
        m["inputs"] = inputs;
        m["elapsed_ms"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - started)
                              .count();
        m["exit"] = code;
        m["result_digest"] = abptk::io::digest_hex(result.dump());
        std::ofstream out(*manifest_path);
        out << m.dump(2) << "\n";
    }
};

json load_json(Output& out, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    out.note_input(path, ss.str());
    try {
        return json::parse(ss.str());
    } catch (const json::parse_error& e) {
        throw CLI::ValidationError(path + ": " + e.what());
    }
}

void emit(Output& out, const json& j, const std::string& text, int code) {
    if (out.format == "json")
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text;
    out.finish(j, code);
}

std::string poly_summary(const abptk::io::PolyAny& f) {
    return std::visit([](const auto& p) { return p.str(); }, f);
}

int cmd_family_emit(Output& out, const std::string& name, std::size_t n, std::size_t d,
                    const std::string& field, const std::string& to_file) {
    json j;
    auto tag = abptk::io::parse_field_tag(field);
    if (name == "fig1") {
        auto a = abptk::figure1_abp();
        j = tag.rational ? abptk::io::abp_to_json(a)
                         : abptk::io::abp_to_json(abptk::io::abp_mod_p(a, tag.p));
    } else {
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
            throw CLI::ValidationError("unknown family '" + name + "'");
        j = tag.rational ? abptk::io::poly_to_json(f)
                         : abptk::io::poly_to_json(abptk::io::poly_mod_p(f, tag.p));
    }
    if (!to_file.empty()) {
        std::ofstream f(to_file);
        f << j.dump(2) << "\n";
        emit(out, j, "wrote " + to_file + "\n", kOk);
    } else {
        std::cout << j.dump(2) << "\n";
        out.finish(j, kOk);
    }
    return kOk;
}

int cmd_poly_eval(Output& out, const std::string& poly_path, const std::string& point) {
    auto f = abptk::io::poly_from_json(load_json(out, poly_path));
    std::string value = std::visit(
        [&](const auto& p) {
            using K = typename std::decay_t<decltype(p)>::TermMap::mapped_type;
            if constexpr (std::is_same_v<K, abptk::Rational>) {
                return p.evaluate(abptk::io::parse_point_q(point)).str();
            } else {
                return p.evaluate(abptk::io::parse_point_fp(point, p.context().p)).str();
            }
        },
        f);
    json j{{"value", value}};
    emit(out, j, value + "\n", kOk);
    return kOk;
}

int cmd_poly_expand_check(Output& out, const std::string& poly_path) {
    auto raw = load_json(out, poly_path);
    auto f = abptk::io::poly_from_json(raw);
    auto ser = abptk::io::poly_to_json(f);
    auto f2 = abptk::io::poly_from_json(ser);
    bool stable = abptk::io::poly_to_json(f2) == ser;
    bool canonical = ser == raw;
    bool homogeneous = std::visit([](const auto& p) { return p.is_homogeneous(); }, f);
    json j{{"round_trip_stable", stable}, {"canonical", canonical}, {"homogeneous", homogeneous}};
    if (homogeneous) {
        auto deg = std::visit(
            [](const auto& p) -> std::int64_t {
                return p.is_zero() ? -1 : static_cast<std::int64_t>(*p.degree());
            },
            f);
        j["degree"] = deg;
    }
    std::ostringstream text;
    text << (stable ? "round-trip: stable\n" : "round-trip: UNSTABLE\n")
         << (canonical ? "input form: canonical\n" : "input form: re-serialization differs\n")
         << (homogeneous ? "homogeneous: yes\n" : "homogeneous: no\n");
    int code = stable ? kOk : kFail;
    emit(out, j, text.str(), code);
    return code;
}

int cmd_abp(Output& out, const std::string& sub, const std::string& abp_path,
            const std::string& point) {
    auto any = abptk::io::abp_from_json(load_json(out, abp_path));
    if (sub == "validate") {
        auto [ok, msg] = std::visit(
            [](const auto& a) {
                auto v = a.validate();
                return std::pair<bool, std::string>(v.ok, v.violation);
            },
            any);
        std::size_t size = std::visit([](const auto& a) { return a.size(); }, any);
        json j{{"ok", ok}, {"size", size}};
        if (!ok) j["violation"] = msg;
        emit(out, j, ok ? "ok, size " + std::to_string(size) + "\n" : "violation: " + msg + "\n",
             ok ? kOk : kFail);
        return ok ? kOk : kFail;
    }
    if (sub == "expand") {
        json j = std::visit(
            [](const auto& a) { return abptk::io::poly_to_json(a.expand()); }, any);
        emit(out, j, j.dump(2) + "\n", kOk);
        return kOk;
    }
    // eval
    std::string value = std::visit(
        [&](const auto& a) {
            using K = typename std::decay_t<decltype(a)>::Context;
            if constexpr (std::is_same_v<K, abptk::Rational::Context>) {
                return a.evaluate(abptk::io::parse_point_q(point)).str();
            } else {
                return a.evaluate(abptk::io::parse_point_fp(point, a.context().p)).str();
            }
        },
        any);
    json j{{"value", value}};
    emit(out, j, value + "\n", kOk);
    return kOk;
}

int cmd_decomp_verify(Output& out, const std::string& poly_path, const std::string& dec_path) {
    auto f = abptk::io::poly_from_json(load_json(out, poly_path));
    auto dec = abptk::io::decomp_from_json(load_json(out, dec_path));
    abptk::DecompCheck chk;
    if (f.index() == 0 && dec.index() == 0)
        chk = abptk::verify(std::get<0>(f), std::get<0>(dec));
    else if (f.index() == 1 && dec.index() == 1)
        chk = abptk::verify(std::get<1>(f), std::get<1>(dec));
    else
        throw CLI::ValidationError("polynomial and decomposition live over different fields");
    std::size_t r = dec.index() == 0 ? std::get<0>(dec).summands() : std::get<1>(dec).summands();
    json j{{"ok", chk.ok}, {"message", chk.message}, {"summands", r}};
    emit(out, j,
         (chk.ok ? "ok, r = " + std::to_string(r) : "failure: " + chk.message) + "\n",
         chk.ok ? kOk : kFail);
    return chk.ok ? kOk : kFail;
}

int cmd_decomp_make(Output& out, const std::string& kind, std::size_t n, std::size_t d,
                    std::size_t jr, const std::string& poly_path, const std::string& sub_path,
                    const std::string& to_file) {
    abptk::StrengthDecomposition<abptk::Rational> dec;
    if (kind == "shioda") {
        dec = abptk::shioda_slice_decomposition(n, d);
    } else if (kind == "p-restricted") {
        dec = abptk::p_restricted_decomposition(n, d, jr);
    } else if (kind == "from-subspace") {
        auto f = abptk::io::poly_from_json(load_json(out, poly_path));
        auto q = abptk::io::subspace_from_json(load_json(out, sub_path));
        if (f.index() != 0 || q.index() != 0)
            throw CLI::ValidationError("from-subspace expects rational inputs");
        dec = abptk::slice_from_subspace(std::get<0>(f), std::get<0>(q));
    } else {
        throw CLI::ValidationError("unknown decomposition kind '" + kind + "'");
    }
    json j = abptk::io::decomp_to_json(dec);
    if (!to_file.empty()) {
        std::ofstream f(to_file);
        f << j.dump(2) << "\n";
        emit(out, j, "wrote " + to_file + "\n", kOk);
    } else {
        std::cout << j.dump(2) << "\n";
        out.finish(j, kOk);
    }
    return kOk;
}

int cmd_sing(Output& out, const std::string& poly_path, const std::string& claim_path) {
    auto fa = abptk::io::poly_from_json(load_json(out, poly_path));
    if (fa.index() != 0) throw CLI::ValidationError("sing compute expects a rational polynomial");
    const auto& f = std::get<0>(fa);
    if (!claim_path.empty()) {
        auto qa = abptk::io::subspace_from_json(load_json(out, claim_path));
        if (qa.index() != 0) throw CLI::ValidationError("claim must be rational");
        auto chk = abptk::verify_claimed_sing(f, std::get<0>(qa));
        std::string verdict = chk.verdict == abptk::SingVerdict::ok ? "ok"
                              : chk.verdict == abptk::SingVerdict::failure ? "failure"
                                                                           : "inconclusive";
        json j{{"verdict", verdict},
               {"message", chk.message},
               {"report", abptk::io::sing_report_to_json(chk.report)}};
        int code = chk.verdict == abptk::SingVerdict::ok ? kOk
                   : chk.verdict == abptk::SingVerdict::failure ? kFail
                                                                : kInconclusive;
        emit(out, j, verdict + ": " + chk.message + "\n", code);
        return code;
    }
    auto rep = abptk::pure_power_reduce(abptk::sing_generators(f));
    json j = abptk::io::sing_report_to_json(rep);
    // the report itself is the output, in either format
    int code = rep.reduced ? kOk : kInconclusive;
    emit(out, j, j.dump(2) + "\n", code);
    return code;
}

int cmd_search(Output& out, const std::string& poly_path, std::size_t codim,
               const std::string& through, std::uint64_t budget, bool refute, unsigned threads) {
    auto fa = abptk::io::poly_from_json(load_json(out, poly_path));
    if (refute) {
        if (fa.index() != 0)
            throw CLI::ValidationError("--refute-rational expects a rational polynomial");
        auto systems = abptk::build_chart_systems(std::get<0>(fa), codim);
        auto res = abptk::propagation_refute(systems);
        json j{{"status", res.refuted ? "refuted" : "inconclusive"},
               {"charts", systems.size()},
               {"mode", "rational-refuter"}};
        if (res.witness_chart) j["witness_chart"] = *res.witness_chart;
        std::ostringstream text;
        text << (res.refuted ? "refuted: no rational subspace of codim " + std::to_string(codim) +
                                   " lies in the zero set\n"
                             : "inconclusive (witness chart " +
                                   std::to_string(res.witness_chart.value_or(0)) + ")\n");
        // refuted is a definitive none-found
        int code = res.refuted ? kFail : kInconclusive;
        emit(out, j, text.str(), code);
        return code;
    }
    if (fa.index() != 1)
        throw CLI::ValidationError("search subspaces needs a prime-field polynomial "
                                   "(or --refute-rational over Q)");
    const auto& f = std::get<1>(fa);
    abptk::SearchOptions opts;
    opts.budget = budget;
    opts.threads = threads;
    abptk::SearchResult res;
    if (!through.empty()) {
        auto p0 = abptk::io::parse_point_fp(through, f.context().p);
        res = abptk::search_through_point(f, p0, codim, opts);
    } else {
        res = abptk::exhaustive_search(f, codim, opts);
    }
    // results stream as JSON lines, then a summary line
    std::ostringstream stream;
    for (const auto& q : res.found) stream << abptk::io::subspace_to_json(q).dump() << "\n";
    json summary{{"status", res.budget_exceeded ? "budget-exceeded"
                                                : (res.found.empty() ? "none-found" : "found")},
                 {"candidates", res.candidates},
                 {"found", res.found.size()},
                 {"note", "heuristic: finite-field consistency signal, not a proof over C"}};
    stream << summary.dump() << "\n";
    std::cout << stream.str();
    int code = res.budget_exceeded ? kBudget : (res.found.empty() ? kFail : kOk);
    out.finish(summary, code);
    return code;
}

int cmd_chain(Output& out, const std::string& sub, const std::string& path, bool minimize) {
    if (sub == "extract") {
        auto any = abptk::io::abp_from_json(load_json(out, path));
        json j = std::visit(
            [](const auto& a) { return abptk::io::chain_to_json(abptk::extract_chain(a)); }, any);
        emit(out, j, j.dump(2) + "\n", kOk);
        return kOk;
    }
    auto any = abptk::io::chain_from_json(load_json(out, path));
    json j = std::visit(
        [&](const auto& c) {
            auto use = minimize ? abptk::minimize_chain(c) : c;
            return abptk::io::abp_to_json(abptk::synthesize_abp(use));
        },
        any);
    emit(out, j, j.dump(2) + "\n", kOk);
    return kOk;
}

int cmd_bounds(Output& out, const std::string& family, std::int64_t n, std::int64_t d,
               std::optional<std::int64_t> codim_sing, std::optional<std::int64_t> c,
               std::optional<std::int64_t> s) {
    abptk::BoundReport rep;
    if (codim_sing || c || s) {
        // explicit metadata, at the caller's risk
        abptk::BoundInput in;
        in.d = d;
        in.n_vars = n;
        in.codim_sing = codim_sing;
        in.c = c;
        in.s = s;
        in.provenance = "user-claimed";
        rep = abptk::report_from_input(in);
    } else if (family == "powersum")
        rep = abptk::power_sum_report(n, d);
    else if (family == "P")
        rep = abptk::p_family_report(n, d);
    else if (family == "S")
        rep = abptk::shioda_report(n, d);
    else
        throw CLI::ValidationError("unknown family '" + family + "'");
    json j = abptk::io::bound_report_to_json(rep);
    std::ostringstream text;
    text << "total: " << rep.total_abp_lower << " (" << rep.status << ")\n";
    for (const auto& [jj, v] : rep.per_j_lower) text << "  str_" << jj << " >= " << v << "\n";
    emit(out, j, text.str(), kOk);
    return kOk;
}

int cmd_repro(Output& out, std::uint64_t seed) {
    std::ostringstream table;
    bool ok = abptk::print_acceptance(table, seed);
    json j{{"pass", ok}, {"seed", seed}};
    std::cout << table.str();
    out.finish(j, ok ? kOk : kFail);
    return ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for homogeneous ABPs, strength decompositions and "
                 "subspace search"};
    app.require_subcommand(1);

    Output out;
    for (int i = 0; i < argc; ++i) out.command_line += std::string(i ? " " : "") + argv[i];
    app.add_option("--format", out.format, "output format")->check(CLI::IsMember({"text", "json"}));
    std::string manifest;
    app.add_option("--manifest", manifest, "write a run manifest to this file");

    // family emit
    auto* family = app.add_subcommand("family", "named polynomial and program families");
    auto* femit = family->add_subcommand("emit", "write a family member as JSON");
    std::string fname, ffield = "Q", fout;
    std::size_t fn = 1, fd = 3;
    femit->add_option("--name", fname, "powersum|P|S|Shat|fig1")->required();
    femit->add_option("--n", fn, "family index");
    femit->add_option("--d", fd, "degree");
    femit->add_option("--field", ffield, "Q or Fp:<p>");
    femit->add_option("-o,--out", fout, "output file (default stdout)");

    // poly
    auto* poly = app.add_subcommand("poly", "polynomial utilities");
    auto* peval = poly->add_subcommand("eval", "evaluate at a point");
    std::string ppath, ppoint;
    peval->add_option("--poly", ppath)->required();
    peval->add_option("--point", ppoint, "comma-separated coordinates")->required();
    auto* pcheck = poly->add_subcommand("expand-check", "canonical form and round-trip check");
    std::string pcheck_path;
    pcheck->add_option("--poly", pcheck_path)->required();

    // abp
    auto* abp = app.add_subcommand("abp", "algebraic branching programs");
    std::string apath, apoint;
    auto* avalidate = abp->add_subcommand("validate", "check structural invariants");
    avalidate->add_option("--abp", apath)->required();
    auto* aexpand = abp->add_subcommand("expand", "source-to-sink polynomial");
    aexpand->add_option("--abp", apath)->required();
    auto* aeval = abp->add_subcommand("eval", "scalar evaluation");
    aeval->add_option("--abp", apath)->required();
    aeval->add_option("--point", apoint)->required();

    // decomp
    auto* decomp = app.add_subcommand("decomp", "strength decompositions");
    auto* dverify = decomp->add_subcommand("verify", "check a decomposition against a polynomial");
    std::string dpoly, ddec;
    dverify->add_option("--poly", dpoly)->required();
    dverify->add_option("--decomp", ddec)->required();
    auto* dmake = decomp->add_subcommand("make", "construct a named decomposition");
    std::string dkind, dmpoly, dmsub, dmout;
    std::size_t dn = 2, dd = 3, dj = 1;
    dmake->add_option("--kind", dkind, "shioda|p-restricted|from-subspace")->required();
    dmake->add_option("--n", dn);
    dmake->add_option("--d", dd);
    dmake->add_option("--j", dj, "restriction degree (p-restricted)");
    dmake->add_option("--poly", dmpoly, "polynomial file (from-subspace)");
    dmake->add_option("--subspace", dmsub, "forms file (from-subspace)");
    dmake->add_option("-o,--out", dmout);

    // search
    auto* search = app.add_subcommand("search", "linear subspaces in hypersurfaces");
    auto* ssub = search->add_subcommand("subspaces", "enumerate or refute");
    std::string spoly, sthrough;
    std::size_t scodim = 1;
    std::uint64_t sbudget = 5'000'000;
    bool srefute = false;
    unsigned sthreads = 1;
    ssub->add_option("--poly", spoly)->required();
    ssub->add_option("--codim", scodim)->required();
    ssub->add_option("--through-point", sthrough, "restrict to subspaces containing this point");
    ssub->add_option("--budget", sbudget, "candidate cap");
    ssub->add_option("--threads", sthreads, "worker shards");
    ssub->add_flag("--refute-rational", srefute, "chart propagation over Q instead of enumeration");

    // sing
    auto* sing = app.add_subcommand("sing", "singular locus");
    auto* scompute = sing->add_subcommand("compute", "generators and pure-power reduction");
    std::string sipoly, siclaim;
    scompute->add_option("--poly", sipoly)->required();
    scompute->add_option("--claim", siclaim, "claimed locus as a forms file");

    // chain
    auto* chain = app.add_subcommand("chain", "ideal chains");
    auto* cextract = chain->add_subcommand("extract", "chain of a program");
    std::string cabp, cchain;
    bool cmin = false;
    cextract->add_option("--abp", cabp)->required();
    auto* csynth = chain->add_subcommand("synthesize", "program of a chain");
    csynth->add_option("--chain", cchain)->required();
    csynth->add_flag("--minimize", cmin, "prune linearly dependent generators per level");

    // bounds
    auto* bounds = app.add_subcommand("bounds", "lower-bound calculators");
    auto* bcompute = bounds->add_subcommand("compute", "per-layer report for a family");
    std::string bfamily;
    std::int64_t bn = 1, bd = 3;
    std::optional<std::int64_t> bcodim, bc, bs;
    bcompute->add_option("--family", bfamily, "powersum|P|S");
    bcompute->add_option("--n", bn)->required();
    bcompute->add_option("--d", bd)->required();
    bcompute->add_option("--codim-sing", bcodim, "user-claimed codim of the singular locus");
    bcompute->add_option("--c", bc, "user-claimed subvariety codim threshold");
    bcompute->add_option("--s", bs, "user-claimed subvariety degree bound");

    // repro
    auto* repro = app.add_subcommand("repro", "reproducibility battery");
    auto* rall = repro->add_subcommand("all", "run every acceptance criterion");
    std::uint64_t rseed = 20240917;
    rall->add_option("--seed", rseed, "seed for the randomized suites");

    // global options (--format, --manifest) may appear after any subcommand
    auto allow_fallthrough = [](auto&& self, CLI::App* a) -> void {
        a->fallthrough();
        for (auto* s : a->get_subcommands({})) self(self, s);
    };
    for (auto* s : app.get_subcommands({})) allow_fallthrough(allow_fallthrough, s);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kUsage;
    }

    if (!manifest.empty()) out.manifest_path = manifest;

    try {
        if (femit->parsed()) return cmd_family_emit(out, fname, fn, fd, ffield, fout);
        if (peval->parsed()) return cmd_poly_eval(out, ppath, ppoint);
        if (pcheck->parsed()) return cmd_poly_expand_check(out, pcheck_path);
        if (avalidate->parsed()) return cmd_abp(out, "validate", apath, "");
        if (aexpand->parsed()) return cmd_abp(out, "expand", apath, "");
        if (aeval->parsed()) return cmd_abp(out, "eval", apath, apoint);
        if (dverify->parsed()) return cmd_decomp_verify(out, dpoly, ddec);
        if (dmake->parsed()) return cmd_decomp_make(out, dkind, dn, dd, dj, dmpoly, dmsub, dmout);
        if (ssub->parsed())
            return cmd_search(out, spoly, scodim, sthrough, sbudget, srefute, sthreads);
        if (scompute->parsed()) return cmd_sing(out, sipoly, siclaim);
        if (cextract->parsed()) return cmd_chain(out, "extract", cabp, false);
        if (csynth->parsed()) return cmd_chain(out, "synthesize", cchain, cmin);
        if (bcompute->parsed()) return cmd_bounds(out, bfamily, bn, bd, bcodim, bc, bs);
        if (rall->parsed()) return cmd_repro(out, rseed);
        std::cerr << "no subcommand selected\n";
        return kUsage;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const abptk::io::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kFail;
    }
}

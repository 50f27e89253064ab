#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <json.hpp>

#include "abptk/abp.hpp"
#include "abptk/bounds.hpp"
#include "abptk/chain.hpp"
#include "abptk/decomp.hpp"
#include "abptk/polynomial.hpp"
#include "abptk/prime_field.hpp"
#include "abptk/rational.hpp"
#include "abptk/singular.hpp"
#include "abptk/subspace.hpp"

namespace abptk::io {

using json = nlohmann::json;

/// Runtime-tagged values for file and CLI boundaries; the typed core stays
/// templated over the field.
using PolyAny = std::variant<Polynomial<Rational>, Polynomial<Fp>>;
using AbpAny = std::variant<Abp<Rational>, Abp<Fp>>;
using SubspaceAny = std::variant<LinearSubspace<Rational>, LinearSubspace<Fp>>;
using DecompAny = std::variant<StrengthDecomposition<Rational>, StrengthDecomposition<Fp>>;
using ChainAny = std::variant<IdealChain<Rational>, IdealChain<Fp>>;

/// "Q" or "Fp:<p>".
std::string field_name(const Rational::Context&);
std::string field_name(const Fp::Context& ctx);

struct FieldTag {
    bool rational = true;
    std::uint32_t p = 0;
};
FieldTag parse_field_tag(const std::string& tag);

// polynomial: { "vars": n, "field": "Q"|"Fp:<p>",
//               "terms": [ { "coeff": "<string>", "exps": [e0..] } ] }
// terms sorted graded-lex descending; exact round-trip.
json poly_to_json(const Polynomial<Rational>& f);
json poly_to_json(const Polynomial<Fp>& f);
json poly_to_json(const PolyAny& f);
PolyAny poly_from_json(const json& j);

// abp: { "vars": n, "field": ..., "widths": [..],
//        "edges": [ { "layer": k, "from": i, "to": j, "label": ["c0",..] } ] }
json abp_to_json(const Abp<Rational>& a);
json abp_to_json(const Abp<Fp>& a);
json abp_to_json(const AbpAny& a);
AbpAny abp_from_json(const json& j);

// decomposition: { "degree": d, "restriction": j|null, "pairs": [ {"g":.., "h":..} ] }
json decomp_to_json(const StrengthDecomposition<Rational>& dec);
json decomp_to_json(const StrengthDecomposition<Fp>& dec);
DecompAny decomp_from_json(const json& j);

// chain: { "vars": n, "field": ..., "levels": [ [ <polynomial>, ... ], ... ] }
json chain_to_json(const IdealChain<Rational>& c);
json chain_to_json(const IdealChain<Fp>& c);
ChainAny chain_from_json(const json& j);

// subspace forms: { "vars": n, "field": ..., "forms": [ ["c0",..], ... ] }
json subspace_to_json(const LinearSubspace<Rational>& q);
json subspace_to_json(const LinearSubspace<Fp>& q);
SubspaceAny subspace_from_json(const json& j);

json bound_report_to_json(const BoundReport& rep);
json sing_report_to_json(const SingularLocusReport& rep);

/// Reduces a rational polynomial mod p; fails when a denominator vanishes.
Polynomial<Fp> poly_mod_p(const Polynomial<Rational>& f, std::uint32_t p);
Abp<Fp> abp_mod_p(const Abp<Rational>& a, std::uint32_t p);

/// Point parser: comma-separated field-element strings, e.g. "0,1,0" or "1/2,3".
std::vector<Rational> parse_point_q(const std::string& s);
std::vector<Fp> parse_point_fp(const std::string& s, std::uint32_t p);

/// FNV-1a 64 content digest, hex; used by run manifests.
std::string digest_hex(const std::string& content);

}  // namespace abptk::io

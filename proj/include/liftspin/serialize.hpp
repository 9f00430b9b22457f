#ifndef LIFTSPIN_SERIALIZE_HPP
#define LIFTSPIN_SERIALIZE_HPP

#include <json.hpp>

#include <liftspin/combinat.hpp>
#include <liftspin/exactalg.hpp>
#include <liftspin/lfactors.hpp>
#include <liftspin/satake.hpp>
#include <liftspin/verify.hpp>

namespace liftspin
{

using json = nlohmann::ordered_json;

// {"terms": [{"e": [e_a, e_b, e_q, e_T], "c": "<decimal>"}]} in canonical order.
json to_json(const LaurentPoly &x);
LaurentPoly laurent_from_json(const json &j);

// {"genus", "mode", "mu0", "mus", "similitude_exponent"}
json to_json(const SymbolicSatake &params);
json to_json(const NumericSatake &params);

// {"label", "degree", "coeffs": [<LaurentPoly> per T-degree]}
json to_json(const LocalFactor &factor);
// Numeric coefficients as [re, im] pairs of the normalized variable.
json to_json(const NumericLocalFactor &factor, double normalization = 0.0);

json to_json(const VerificationReport &report, bool include_witness);

// {"n", "entries": [{"m", "r", "alpha", "beta"}]} over 0 <= m <= n, |r| <= m(2n-m).
json beta_table_json(const BetaTable &table);

} // namespace liftspin

#endif

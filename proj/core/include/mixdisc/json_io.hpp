#pragma once

#include <nlohmann/json.hpp>

#include "mixdisc/hodge.hpp"
#include "mixdisc/positivity.hpp"
#include "mixdisc/teissier.hpp"

namespace mixdisc {

// JSON wire format. Every number is an exact rational string "p/q" (or "p");
// a Gaussian rational is {"re": …, "im": …}; a Hermitian matrix is
// {"n": …, "entries": [[…]]} with the full matrix present. Readers validate
// shape and Hermitian symmetry and throw InputError on any violation.

using nlohmann::json;

void to_json(json& j, const Rational& r);
void to_json(json& j, const GaussianRational& z);
void to_json(json& j, const HermitianMatrix& m);
void to_json(json& j, const Signature& s);
void to_json(json& j, const FunctionalVec& f);
void to_json(json& j, const PositivityReport& r);
void to_json(json& j, const MPositivity& m);
void to_json(json& j, const ConeReport& r);
void to_json(json& j, const HodgeIndexReport& r);
void to_json(json& j, const LefschetzSplit& s);
void to_json(json& j, const HypothesisFlags& f);
void to_json(json& j, const Verdict& v);
void to_json(json& j, const AlexandrovResult& r);
void to_json(json& j, const KtReport& r);
void to_json(json& j, const SequenceReport& r);
void to_json(json& j, const EqualityQuery& q);
void to_json(json& j, const Counterexample& c);

json vector_to_json(std::span<const Rational> v);
json matrix_to_json(const RationalMatrix& m);

/// Accepts a rational string or a JSON integer.
Rational rational_from_json(const json& j);
/// Accepts {"re","im"} (either part may be omitted) or a bare rational (real).
GaussianRational gaussian_from_json(const json& j);
HermitianMatrix hermitian_from_json(const json& j);
RationalVector vector_from_json(const json& j);
/// {"n": …, "matrices": […]}.
MatrixTuple tuple_from_json(const json& j);
/// Array of n−2 matrices; n is taken from `n` (a key of the enclosing object).
OmegaTuple omega_from_json(const json& omega, std::size_t n);
/// [{"matrix": …, "multiplicity": k}, …].
std::vector<Multiplicity> multiplicities_from_json(const json& j);
/// {"m": …, "kaehler": […], "eta": … (default I), "alpha": …}.
ConeQuery cone_query_from_json(const json& j);

/// Required member lookup; throws InputError("missing_field").
const json& require(const json& j, const char* key);

}  // namespace mixdisc

#include "mixdisc/json_io.hpp"

#include <string>

namespace mixdisc {

const json& require(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError("missing_field", std::string("missing required field '") + key + "'");
  return j.at(key);
}

void to_json(json& j, const Rational& r) { j = r.str(); }

void to_json(json& j, const GaussianRational& z) { j = json{{"re", z.re.str()}, {"im", z.im.str()}}; }

void to_json(json& j, const HermitianMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    json row = json::array();
    for (std::size_t k = 0; k < m.dim(); ++k) row.push_back(m(i, k));
    rows.push_back(std::move(row));
  }
  j = json{{"n", m.dim()}, {"entries", std::move(rows)}};
}

void to_json(json& j, const Signature& s) { j = json{{"pos", s.positive}, {"zero", s.zero}, {"neg", s.negative}}; }

void to_json(json& j, const FunctionalVec& f) { j = json{{"n", f.n}, {"coeffs", vector_to_json(f.coeffs)}}; }

void to_json(json& j, const PositivityReport& r) {
  j = json{{"kind", to_string(r.kind)}, {"coefficients", vector_to_json(r.coefficients)}};
  if (r.psd())
    j["rank"] = r.rank;
  else
    j["failing_index"] = *r.failing_index;
}

void to_json(json& j, const MPositivity& m) {
  j = json{{"positive", m.positive()}, {"values", vector_to_json(m.values)}};
  if (m.fails_at) j["fails_at"] = json{{"k", *m.fails_at}, {"value", m.values[*m.fails_at - 1]}};
}

void to_json(json& j, const ConeReport& r) {
  j = json{{"membership", to_string(r.membership)}, {"m_positivity", r.certificate}};
}

void to_json(json& j, const HodgeIndexReport& r) {
  j = json{{"verdict", to_string(r.verdict)}, {"signature", r.restricted}};
  switch (r.verdict) {
    case HodgeVerdict::SatisfiesHIT: j["witness"] = nullptr; break;
    case HodgeVerdict::SemiNegativeWithKernel: {
      json k = json::array();
      for (const auto& v : r.kernel) k.push_back(vector_to_json(v));
      j["witness"] = std::move(k);
      break;
    }
    case HodgeVerdict::Indefinite: j["witness"] = vector_to_json(*r.witness); break;
  }
}

void to_json(json& j, const LefschetzSplit& s) { j = json{{"c", s.c}, {"gamma", s.gamma}}; }

void to_json(json& j, const HypothesisFlags& f) {
  j = json{{"omega_psd", f.omega_psd},   {"a_psd", f.a_psd},         {"d_omega_a_a", f.aa},
           {"d_omega_b_b", f.bb},        {"b1_holds", f.b1_holds()}, {"b2_holds", f.b2_holds()},
           {"failures", f.failures()}};
}

void to_json(json& j, const Verdict& v) {
  j = json{{"verdict", to_string(v.tag)}, {"lhs", v.lhs}, {"rhs", v.rhs}, {"gap", v.gap()}, {"flags", v.flags}};
  j["witness"] = v.witness ? json{{"s0", v.witness->s0}, {"t0", v.witness->t0}} : json(nullptr);
  if (v.fa) j["functional_a"] = *v.fa;
  if (v.fb) j["functional_b"] = *v.fb;
  if (!v.detail.empty()) j["detail"] = v.detail;
}

void to_json(json& j, const AlexandrovResult& r) { j = json{{"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", r.holds}}; }

void to_json(json& j, const KtReport& r) {
  j = r.verdict;
  j["matrices_proportional"] = r.matrices_proportional;
  j["prefix_hodge_index"] = r.prefix_hodge_index;
}

void to_json(json& j, const SequenceReport& r) {
  j = json{{"s", vector_to_json(r.s)},
           {"equality_positions", r.equality_positions},
           {"log_concave", r.log_concave},
           {"nondegenerate", r.nondegenerate},
           {"violation", r.violation}};
  j["end_functionals_proportional"] =
      r.end_functionals_proportional ? json(*r.end_functionals_proportional) : json(nullptr);
}

void to_json(json& j, const EqualityQuery& q) {
  j = json{{"n", q.omega.n()}, {"omega", q.omega.items()}, {"a", q.a}, {"b", q.b}, {"mode", to_string(q.mode)}};
}

void to_json(json& j, const Counterexample& c) { j = json{{"query", c.query}, {"verdict", c.verdict}}; }

json vector_to_json(std::span<const Rational> v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json matrix_to_json(const RationalMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw InputError("rational_syntax", "expected a rational string, got " + j.dump());
}

GaussianRational gaussian_from_json(const json& j) {
  if (j.is_object()) {
    for (const auto& [key, _] : j.items())
      if (key != "re" && key != "im") throw InputError("gaussian_syntax", "unexpected field '" + key + "'");
    GaussianRational z;
    if (j.contains("re")) z.re = rational_from_json(j.at("re"));
    if (j.contains("im")) z.im = rational_from_json(j.at("im"));
    return z;
  }
  return GaussianRational(rational_from_json(j));
}

HermitianMatrix hermitian_from_json(const json& j) {
  const json& entries = require(j, "entries");
  if (!entries.is_array() || entries.empty()) throw InputError("matrix_shape", "'entries' must be a non-empty array");
  const std::size_t n = entries.size();
  if (j.contains("n") && (!j.at("n").is_number_unsigned() || j.at("n").get<std::size_t>() != n))
    throw InputError("matrix_shape", "'n' does not match the number of rows");
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = entries[i];
    if (!row.is_array() || row.size() != n) throw InputError("matrix_shape", "row " + std::to_string(i) + " has wrong length");
    for (std::size_t k = 0; k < n; ++k) m(i, k) = gaussian_from_json(row[k]);
  }
  return HermitianMatrix(std::move(m));
}

RationalVector vector_from_json(const json& j) {
  if (!j.is_array()) throw InputError("vector_syntax", "expected an array of rationals");
  RationalVector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

namespace {

std::vector<HermitianMatrix> matrices_from_json(const json& arr) {
  if (!arr.is_array()) throw InputError("tuple_shape", "expected an array of matrices");
  std::vector<HermitianMatrix> out;
  for (const auto& m : arr) out.push_back(hermitian_from_json(m));
  return out;
}

}  // namespace

MatrixTuple tuple_from_json(const json& j) {
  MatrixTuple t(matrices_from_json(require(j, "matrices")));
  if (j.contains("n") && (!j.at("n").is_number_unsigned() || j.at("n").get<std::size_t>() != t.n()))
    throw InputError("tuple_shape", "'n' does not match the number of matrices");
  return t;
}

OmegaTuple omega_from_json(const json& omega, std::size_t n) { return OmegaTuple(n, matrices_from_json(omega)); }

std::vector<Multiplicity> multiplicities_from_json(const json& j) {
  if (!j.is_array()) throw InputError("multiplicity", "prefix must be an array");
  std::vector<Multiplicity> out;
  for (const auto& item : j) {
    const json& k = require(item, "multiplicity");
    if (!k.is_number_integer() || k.get<long long>() < 0)
      throw InputError("multiplicity", "multiplicity must be a non-negative integer");
    out.emplace_back(hermitian_from_json(require(item, "matrix")), static_cast<int>(k.get<long long>()));
  }
  return out;
}

ConeQuery cone_query_from_json(const json& j) {
  HermitianMatrix alpha = hermitian_from_json(require(j, "alpha"));
  const json& m = require(j, "m");
  if (!m.is_number_unsigned()) throw InputError("cone_query", "'m' must be a non-negative integer");
  HermitianMatrix eta = j.contains("eta") ? hermitian_from_json(j.at("eta")) : HermitianMatrix::identity(alpha.dim());
  ConeQuery q{m.get<std::size_t>(), j.contains("kaehler") ? matrices_from_json(j.at("kaehler")) : std::vector<HermitianMatrix>{},
              std::move(eta), std::move(alpha)};
  q.validate();
  return q;
}

}  // namespace mixdisc

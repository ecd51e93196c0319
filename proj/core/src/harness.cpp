#include "mixdisc/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "mixdisc/json_io.hpp"
#include "mixdisc/linalg.hpp"
#include "mixdisc/positivity.hpp"

namespace mixdisc {

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
  return SplitMix64(seed ^ static_cast<std::uint64_t>(trial)).next();
}

std::uint64_t fnv1a(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

InstanceGenerator::InstanceGenerator(const GeneratorConfig& config, std::size_t trial)
    : rng_(trial_seed(config.seed, trial)), n_(config.n), bound_(config.entry_bound), profile_(config.rank_profile) {
  if (n_ == 0) throw InputError("dimension", "generator needs n >= 1");
  if (bound_ < 1) throw InputError("entry_bound", "entry bound must be positive");
  for (auto r : profile_)
    if (r > n_) throw InputError("rank_profile", "rank " + std::to_string(r) + " exceeds n = " + std::to_string(n_));
}

Rational InstanceGenerator::rational() {
  const auto p = rng_.uniform(-bound_, bound_);
  const auto q = rng_.uniform(1, bound_);
  return Rational(mpz_class(static_cast<long>(p)), mpz_class(static_cast<long>(q)));
}

Rational InstanceGenerator::nonzero_rational() {
  for (;;) {
    Rational r = rational();
    if (!r.is_zero()) return r;
  }
}

GaussianRational InstanceGenerator::gaussian() { return {rational(), rational()}; }

HermitianMatrix InstanceGenerator::hermitian() {
  ComplexMatrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i) {
    m(i, i) = rational();
    for (std::size_t j = i + 1; j < n_; ++j) {
      m(i, j) = gaussian();
      m(j, i) = m(i, j).conj();
    }
  }
  return HermitianMatrix(std::move(m));
}

HermitianMatrix InstanceGenerator::psd(std::size_t r) {
  if (r > n_) throw InputError("rank_profile", "requested rank exceeds n");
  if (r == 0) {
    ranks_.push_back(0);
    return HermitianMatrix::zero(n_);
  }
  constexpr int kAttempts = 32;
  std::optional<HermitianMatrix> h;
  std::size_t rank = 0;
  for (int attempt = 0; attempt < kAttempts && rank != r; ++attempt) {
    ComplexMatrix l(n_, r);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t k = 0; k < r; ++k) l(i, k) = gaussian();
    h.emplace(l * l.adjoint());
    const PositivityReport rep = is_psd(*h);
    if (!rep.psd()) throw std::logic_error("L*L^H failed the PSD test");
    rank = rep.rank;
  }
  // The exact rank, which falls short of r only if every attempt degenerated.
  ranks_.push_back(rank);
  return std::move(*h);
}

std::size_t InstanceGenerator::next_rank() {
  if (profile_.empty()) return static_cast<std::size_t>(rng_.uniform(1, static_cast<std::int64_t>(n_)));
  return profile_[profile_pos_++ % profile_.size()];
}

HermitianMatrix gen_psd(const GeneratorConfig& config, std::size_t r) {
  InstanceGenerator gen(config, 0);
  return gen.psd(r);
}

std::optional<std::size_t> SuiteReport::first_violation() const {
  for (std::size_t k = 0; k < trials.size(); ++k)
    if (trials[k].violation) return k;
  return std::nullopt;
}

nlohmann::json SuiteReport::to_json(bool per_trial, bool timing) const {
  json out;
  out["suite"] = suite;
  json ranks = json::array();
  for (auto r : config.rank_profile) ranks.push_back(r);
  out["config"] = json{{"n", config.n},
                       {"seed", config.seed},
                       {"trials", config.trials},
                       {"entry_bound", config.entry_bound},
                       {"rank_profile", std::move(ranks)}};
  out["trials"] = trials.size();
  out["violations"] = violations;
  out["verdicts"] = verdict_counts;
  out["counters"] = counters;

  std::uint64_t digest = 0xcbf29ce484222325ull;
  for (const auto& t : trials) {
    char line[96];
    std::snprintf(line, sizeof line, "%zu:%016llx:%d:", t.trial_index,
                  static_cast<unsigned long long>(t.instance_hash), t.violation ? 1 : 0);
    digest ^= fnv1a(std::string(line) + t.verdict);
    digest *= 0x100000001b3ull;
  }
  char hex[17];
  std::snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(digest));
  out["digest"] = hex;

  if (auto k = first_violation()) {
    const auto& t = trials[*k];
    out["first_violation"] = json{{"trial_index", t.trial_index}, {"verdict", t.verdict}, {"witness", t.witness}};
  } else {
    out["first_violation"] = nullptr;
  }
  if (per_trial) {
    json list = json::array();
    for (const auto& t : trials) {
      char h[17];
      std::snprintf(h, sizeof h, "%016llx", static_cast<unsigned long long>(t.instance_hash));
      json e{{"trial_index", t.trial_index}, {"instance_hash", h},  {"n", t.n},
             {"ranks", t.ranks},             {"verdict", t.verdict}, {"violation", t.violation}};
      if (timing) e["elapsed_ms"] = t.elapsed_ms;
      list.push_back(std::move(e));
    }
    out["reports"] = std::move(list);
  }
  return out;
}

namespace {

// One trial's outcome, filled by a suite body.
struct Outcome {
  json instance;
  std::string verdict;
  bool violation = false;
  json diagnostics;
};

using SuiteBody = std::function<Outcome(InstanceGenerator&, std::map<std::string, std::size_t>&)>;

std::vector<HermitianMatrix> psd_items(InstanceGenerator& gen, std::size_t count) {
  std::vector<HermitianMatrix> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(gen.psd_from_profile());
  return out;
}

std::vector<HermitianMatrix> pd_items(InstanceGenerator& gen, std::size_t count) {
  std::vector<HermitianMatrix> out;
  for (std::size_t k = 0; k < count; ++k) out.push_back(gen.psd(gen.n()));
  return out;
}

Outcome mixed_disc_oracle_trial(InstanceGenerator& gen, std::map<std::string, std::size_t>&) {
  std::vector<HermitianMatrix> items;
  for (std::size_t k = 0; k < gen.n(); ++k) items.push_back(gen.hermitian());
  const MatrixTuple t(std::move(items));
  const Rational fast = mixed_disc(t);
  const Rational slow = mixed_disc_oracle(t);
  Outcome o{json{{"matrices", t.items()}}, fast == slow ? "agree" : "disagree", fast != slow, {}};
  if (o.violation) o.diagnostics = json{{"polarization", fast}, {"oracle", slow}};
  return o;
}

Outcome alexandrov_trial(InstanceGenerator& gen, std::map<std::string, std::size_t>&) {
  const std::size_t n = gen.n();
  const OmegaTuple omega(n, psd_items(gen, n - 2));
  const HermitianMatrix a = gen.psd_from_profile();
  const HermitianMatrix b = gen.hermitian();
  const AlexandrovResult r = alexandrov_verify(omega, a, b);
  Outcome o{json{{"omega", omega.items()}, {"a", a}, {"b", b}}, r.holds ? (r.lhs == r.rhs ? "equality" : "strict") : "fails",
            !r.holds, {}};
  if (o.violation) o.diagnostics = r;
  return o;
}

// Equality-seeking b for the classifier suites.
Outcome classify_trial(InstanceGenerator& gen, std::map<std::string, std::size_t>& counters, Mode mode) {
  const std::size_t n = gen.n();
  const OmegaTuple omega(n, psd_items(gen, n - 2));
  const HermitianMatrix a = gen.psd_from_profile();
  const HermitianBasis basis(n);

  auto random_combination = [&](const std::vector<RationalVector>& vecs) {
    RationalVector c(n * n);
    for (const auto& v : vecs) {
      const Rational w = gen.rational();
      for (std::size_t k = 0; k < c.size(); ++k) c[k] += w * v[k];
    }
    return basis.recompose(c);
  };

  const Rational lambda = gen.nonzero_rational();
  const auto strategy = gen.rng().uniform(0, 4);
  HermitianMatrix b = a;
  switch (strategy) {
    case 0:  // proportional
      b = lambda * a;
      break;
    case 1: {  // λa plus an element of the kernel of A ↦ D(Ω, A, ·)
      const GramMatrix g = gram(omega);
      b = lambda * a + random_combination(kernel(g.entries));
      break;
    }
    case 2: {  // λa plus a primitive direction for a
      b = lambda * a + random_combination(primitive_space(omega, a).basis_vectors);
      break;
    }
    case 3:
      b = gen.hermitian();
      break;
    default:
      b = gen.psd_from_profile();
      break;
  }
  const bool b_psd = is_psd(b).psd();
  if (!b_psd) ++counters["non_psd_b"];

  const EqualityQuery q{omega, a, b, mode};
  const Verdict v = classify_equality(q);
  if (v.tag != VerdictTag::HypothesisViolated && v.lhs == v.rhs) {
    ++counters["equality_detected"];
    if (!b_psd) ++counters["equality_with_non_psd_b"];
  }
  if (v.tag == VerdictTag::EqualityProportional) ++counters["proportionality_witness"];
  Outcome o{q, std::string(to_string(v.tag)), v.tag == VerdictTag::TheoremViolation, {}};
  if (o.violation) o.diagnostics = v;
  return o;
}

Outcome hodge_index_trial(InstanceGenerator& gen, std::map<std::string, std::size_t>&) {
  const std::size_t n = gen.n();
  const OmegaTuple omega(n, pd_items(gen, n - 2));
  const HermitianMatrix eta = gen.psd(n);
  const HodgeIndexReport r = hodge_index_check(omega, eta);
  const Signature full = signature(gram(omega).entries);
  const std::size_t d = n * n;
  const bool ok = r.verdict == HodgeVerdict::SatisfiesHIT && r.restricted == Signature{0, 0, d - 1} &&
                  full == Signature{1, 0, d - 1};
  Outcome o{json{{"omega", omega.items()}, {"eta", eta}}, std::string(to_string(r.verdict)), !ok, {}};
  if (o.violation) o.diagnostics = json{{"restricted", r.restricted}, {"full", full}};
  return o;
}

// Shared instance stream of the semi-negativity and zero-eigenvector suites.
std::pair<OmegaTuple, HermitianMatrix> boundary_instance(InstanceGenerator& gen) {
  const std::size_t n = gen.n();
  OmegaTuple omega(n, psd_items(gen, n - 2));
  HermitianMatrix eta = gen.psd_from_profile();
  return {std::move(omega), std::move(eta)};
}

Outcome semi_negativity_trial(InstanceGenerator& gen, std::map<std::string, std::size_t>& counters) {
  auto [omega, eta] = boundary_instance(gen);
  Outcome o{json{{"omega", omega.items()}, {"eta", eta}}, "", false, {}};
  if (functional(omega, eta).is_zero()) {
    o.verdict = "skipped_zero_functional";
    return o;
  }
  const HodgeIndexReport r = hodge_index_check(omega, eta);
  o.verdict = to_string(r.verdict);
  counters["null_directions"] += r.kernel.size();
  o.violation = r.restricted.positive != 0;
  if (o.violation) o.diagnostics = r;
  return o;
}

Outcome zero_eigenvector_trial(InstanceGenerator& gen, std::map<std::string, std::size_t>& counters) {
  auto [omega, eta] = boundary_instance(gen);
  Outcome o{json{{"omega", omega.items()}, {"eta", eta}}, "", false, {}};
  if (functional(omega, eta).is_zero()) {
    o.verdict = "skipped_zero_functional";
    return o;
  }
  if (pairing(omega, eta, eta).is_zero()) {
    o.verdict = "skipped_degenerate_eta";
    return o;
  }
  const HodgeIndexReport r = hodge_index_check(omega, eta);
  if (r.verdict != HodgeVerdict::SemiNegativeWithKernel) {
    o.verdict = to_string(r.verdict);
    o.violation = r.verdict == HodgeVerdict::Indefinite;
    return o;
  }
  const HermitianBasis basis(omega.n());
  std::size_t failures = 0;
  for (const auto& v : r.kernel) {
    const ZeroVectorCheck z = zero_vector_check(omega, eta, basis.recompose(v));
    ++counters["null_directions_checked"];
    if (!z.functional_vanishes) {
      ++failures;
      if (o.diagnostics.is_null()) o.diagnostics = json{{"gamma", vector_to_json(v)}, {"functional", z.functional}};
    }
  }
  o.verdict = failures == 0 ? "null_directions_vanish" : "null_direction_with_nonzero_functional";
  o.violation = failures != 0;
  return o;
}

Outcome lefschetz_trial(InstanceGenerator& gen, std::map<std::string, std::size_t>&) {
  const std::size_t n = gen.n();
  const OmegaTuple omega(n, psd_items(gen, n - 2));
  const HermitianMatrix eta = gen.psd_from_profile();
  const HermitianMatrix beta = gen.hermitian();
  Outcome o{json{{"omega", omega.items()}, {"eta", eta}, {"beta", beta}}, "", false, {}};
  if (pairing(omega, eta, eta).is_zero()) {
    try {
      (void)lefschetz(omega, eta, beta);
      o.verdict = "accepted_degenerate_eta";
      o.violation = true;
    } catch (const PreconditionError&) {
      o.verdict = "rejected_degenerate_eta";
    }
    return o;
  }
  const LefschetzSplit s = lefschetz(omega, eta, beta);
  const bool reconstructs = s.c * eta + s.gamma == beta;
  const bool primitive = functional(omega, eta)(s.gamma).is_zero();
  const bool orthogonal = pairing(omega, eta, s.gamma).is_zero();
  o.verdict = "split";
  o.violation = !(reconstructs && primitive && orthogonal);
  if (o.violation)
    o.diagnostics = json{{"split", s}, {"reconstructs", reconstructs}, {"primitive", primitive}, {"orthogonal", orthogonal}};
  return o;
}

Outcome sk_chain_trial(InstanceGenerator& gen, std::map<std::string, std::size_t>& counters) {
  const HermitianMatrix alpha = gen.psd_from_profile();
  const bool proportional = gen.rng().uniform(0, 2) == 0;
  HermitianMatrix beta = proportional ? gen.nonzero_rational().abs() * alpha : gen.psd_from_profile();
  const SequenceReport r = sk_chain(alpha, beta);
  Outcome o{json{{"alpha", alpha}, {"beta", beta}}, "", r.violation, {}};
  if (r.end_functionals_proportional) {
    ++counters["full_chains"];
    o.verdict = *r.end_functionals_proportional ? "chain_proportional" : "chain_non_proportional";
  } else {
    o.verdict = r.equality_positions.size() + 2 == r.s.size() ? "chain_equal_degenerate" : "chain_not_equal";
  }
  if (o.violation) o.diagnostics = r;
  return o;
}

Outcome counterexample_trial(InstanceGenerator& gen, std::map<std::string, std::size_t>&) {
  const std::size_t n = gen.n();
  std::vector<GaussianRational> v(n);
  do {
    for (auto& x : v) x = gen.gaussian();
  } while (std::all_of(v.begin(), v.end(), [](const GaussianRational& z) { return z.is_zero(); }));
  const HermitianMatrix a = HermitianMatrix::outer(v);
  // n² − 2 kernel vectors; a nonzero random combination.
  RationalVector comb(n * n - 2);
  do {
    for (auto& c : comb) c = gen.rational();
  } while (is_zero_vector(comb));
  const Counterexample cx = counterexample_generate(n, a, comb);
  const Verdict& vd = cx.verdict;
  const bool ok = vd.tag == VerdictTag::EqualityNonProportionalOutsideHypotheses && vd.lhs == vd.rhs &&
                  vd.flags.bb.sign() < 0 && !vd.flags.b1_holds() && !vd.flags.b2_holds();
  Outcome o{cx.query, std::string(to_string(vd.tag)), !ok, {}};
  if (o.violation) o.diagnostics = vd;
  return o;
}

const std::map<std::string, SuiteBody, std::less<>>& suites() {
  static const std::map<std::string, SuiteBody, std::less<>> table{
      {"mixed-disc-oracle", mixed_disc_oracle_trial},
      {"alexandrov", alexandrov_trial},
      {"classify-b1", [](auto& g, auto& c) { return classify_trial(g, c, Mode::B1); }},
      {"classify-b2", [](auto& g, auto& c) { return classify_trial(g, c, Mode::B2); }},
      {"hodge-index", hodge_index_trial},
      {"semi-negativity", semi_negativity_trial},
      {"zero-eigenvector", zero_eigenvector_trial},
      {"lefschetz", lefschetz_trial},
      {"sk-chain", sk_chain_trial},
      {"counterexample", counterexample_trial},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, _] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const GeneratorConfig& config) {
  const auto it = suites().find(name);
  if (it == suites().end()) throw InputError("suite", "unknown suite '" + std::string(name) + "'");
  const bool needs_omega = name != "mixed-disc-oracle" && name != "sk-chain";
  if (needs_omega && config.n < 2) throw InputError("dimension", "suite '" + std::string(name) + "' needs n >= 2");
  if (name == "mixed-disc-oracle" && config.n > 5) throw InputError("oracle_cap", "oracle suite is capped at n <= 5");

  SuiteReport report;
  report.suite = std::string(name);
  report.config = config;
  report.trials.reserve(config.trials);
  for (std::size_t k = 0; k < config.trials; ++k) {
    InstanceGenerator gen(config, k);
    const auto start = std::chrono::steady_clock::now();
    Outcome o = it->second(gen, report.counters);
    const auto stop = std::chrono::steady_clock::now();

    TrialReport t;
    t.trial_index = k;
    t.instance_hash = fnv1a(o.instance.dump());
    t.n = config.n;
    t.ranks = gen.ranks();
    t.verdict = std::move(o.verdict);
    t.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
    t.violation = o.violation;
    if (t.violation) {
      t.witness = json{{"instance", std::move(o.instance)}, {"diagnostics", std::move(o.diagnostics)}};
      ++report.violations;
    }
    ++report.verdict_counts[t.verdict];
    report.trials.push_back(std::move(t));
  }
  return report;
}

}  // namespace mixdisc

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mixdisc/hermitian.hpp"

namespace mixdisc {

/// splitmix64: small, fast, and fully specified, so instance streams are
/// reproducible across platforms and standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(next() % span);
  }

 private:
  std::uint64_t state_;
};

/// Seed of trial `trial`: (seed XOR trial) pushed through one splitmix step.
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

struct GeneratorConfig {
  std::size_t n = 3;
  std::uint64_t seed = 42;
  /// Target ranks for generated PSD matrices, consumed cyclically within a
  /// trial. Empty: each PSD matrix draws its rank uniformly from 1..n.
  std::vector<std::size_t> rank_profile;
  /// Bound on |numerator| and denominator of sampled rationals.
  std::int64_t entry_bound = 10;
  std::size_t trials = 100;
};

/// Random exact instances for one trial.
class InstanceGenerator {
 public:
  InstanceGenerator(const GeneratorConfig& config, std::size_t trial);

  SplitMix64& rng() { return rng_; }
  std::size_t n() const { return n_; }

  Rational rational();
  Rational nonzero_rational();
  GaussianRational gaussian();
  HermitianMatrix hermitian();
  /// L·Lᴴ with L n×r. Resampled (bounded number of attempts) until the exact
  /// rank equals r, so r = n yields a PD matrix.
  HermitianMatrix psd(std::size_t r);
  /// Next rank from the profile (or uniform in 1..n).
  std::size_t next_rank();
  HermitianMatrix psd_from_profile() { return psd(next_rank()); }
  /// Exact ranks of the PSD matrices produced so far, in order.
  const std::vector<std::size_t>& ranks() const { return ranks_; }

 private:
  SplitMix64 rng_;
  std::size_t n_;
  std::int64_t bound_;
  std::vector<std::size_t> profile_;
  std::size_t profile_pos_ = 0;
  std::vector<std::size_t> ranks_;
};

/// gen_psd(config, r): the rank-r PSD matrix a fresh generator for trial 0
/// of `config` produces first.
HermitianMatrix gen_psd(const GeneratorConfig& config, std::size_t r);

struct TrialReport {
  std::size_t trial_index = 0;
  std::uint64_t instance_hash = 0;
  std::size_t n = 0;
  std::vector<std::size_t> ranks;
  std::string verdict;
  double elapsed_ms = 0;
  bool violation = false;
  /// Full instance and diagnostics, kept only for violations.
  nlohmann::json witness;
};

struct SuiteReport {
  std::string suite;
  GeneratorConfig config;
  std::vector<TrialReport> trials;
  std::map<std::string, std::size_t> verdict_counts;
  /// Suite-specific tallies, e.g. null directions examined.
  std::map<std::string, std::size_t> counters;
  std::size_t violations = 0;

  std::optional<std::size_t> first_violation() const;
  /// Machine-readable summary. Timing is excluded unless requested so that
  /// identical configs give byte-identical output.
  nlohmann::json to_json(bool per_trial = false, bool timing = false) const;
};

const std::vector<std::string>& suite_names();

/// Throws InputError("suite") for an unknown name.
SuiteReport run_suite(std::string_view name, const GeneratorConfig& config);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(std::string_view bytes);

}  // namespace mixdisc

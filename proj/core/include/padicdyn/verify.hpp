#pragma once

#include <cstdint>
#include <random>
#include <string>

#include "padicdyn/basin.hpp"
#include "padicdyn/gibbs.hpp"

namespace padicdyn {

struct VerifyConfig {
  unsigned long p = 5;
  unsigned samples = 20;    // parameter sets
  unsigned points = 200;    // sampled points per set for region checks
  unsigned precision = 32;  // certificate precision N
  std::uint64_t seed = 0;
  bool inject_failure = false;  // test hook: plants one known-bad comparison
};

struct CheckCount {
  std::string name;
  unsigned long pass = 0;
  unsigned long fail = 0;
  std::vector<std::string> counterexamples;  // p-adic literals of failures
};

struct VerifyReport {
  std::vector<CheckCount> checks;
  bool all_pass() const;
  /// Deterministic serialization: fixed key order, no environment-dependent data.
  std::string to_json() const;
};

/// Seeded parameters with m = val(q) >= 2 and val(theta-1) >= m + 2, so every
/// region tag is nonempty and tier2 holds.
ModelParams sample_tier2_params(const Prime& p, std::mt19937_64& rng);

/// Seeded tier1 parameters (val(theta-1) >= 1 unconstrained against val(q)).
ModelParams sample_tier1_params(const Prime& p, std::mt19937_64& rng);

/// Runs the fixed-point, congruence, multiplier, transition, scaling, basin
/// and exp/log suites over seeded samples. Throws HypothesisViolated when
/// samples == 0.
VerifyReport run_verification(const VerifyConfig& cfg);

}  // namespace padicdyn

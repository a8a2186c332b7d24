#pragma once

#include <cstdint>
#include <random>

#include "padicdyn/potts.hpp"

namespace padicdyn {

/// The region partition of Dom(f) = Q_p \ {pole}, with the annulus around the
/// pole split into its three sub-shells.
enum class Region { A0, A1, A2, A0Inf, A1Inf1, A1Inf2, AInf1, AInf2, AInf3, Singular };

const char* region_name(Region r);
constexpr int kRegionCount = 10;

/// Exact classification by norm comparisons. Requires tier2 and k = 3.
Region classify_region(const ModelParams& params, const FixedPointReport& fps,
                       const PadicNumber& x);

struct TransitionCheck {
  Region from;
  Region to;
  bool claim_satisfied;  // the applicable inclusion, plus the sharp A0/AInf2 bounds
};

/// Applies f once and checks the applicable inclusion:
/// {A0,A1,A2,A0Inf} -> A0 (with contraction factor <= |theta-1|/|q| inside A0),
/// {AInf1,AInf2,AInf3} -> A1 (with |f(x)-1| = 1 on AInf2), A1Inf1 -> A0Inf.
TransitionCheck check_transition(const ModelParams& params, const FixedPointReport& fps,
                                 const PadicNumber& x);

struct ScalingCheck {
  Norm lhs;  // |f(xa) - f(xb)|
  Norm rhs;  // (|q|/|theta-1|) * |xa - xb|
  bool equal;
};

/// Exact expansion factor on the repelling shell A1Inf2.
ScalingCheck pairwise_scaling(const ModelParams& params, const FixedPointReport& fps,
                              const PadicNumber& xa, const PadicNumber& xb);

/// Smallest n0 with f^(n0)(x) outside A1Inf2, from r = |x - x1| alone.
long predict_escape_time(const ModelParams& params, const FixedPointReport& fps,
                         const PadicNumber& x);

enum class BasinStatus { InBasin, EventuallySingular, Repeller, BudgetExceeded };
const char* basin_status_name(BasinStatus s);

struct BasinResult {
  BasinStatus status = BasinStatus::BudgetExceeded;
  unsigned steps = 0;
  /// Repeller verdicts are at certificate precision only unless the root is
  /// known exactly; reruns at higher N sharpen them.
  bool at_precision_caveat = false;
  long theoretical_step_bound = 0;  // n0 + 2 when starting in A1Inf2, else 2
};

/// Decides membership in the basin of x0 = 1 by exact iteration; InBasin is
/// declared on entry into the forward-invariant contracting ball A0.
BasinResult basin_membership(const ModelParams& params, const FixedPointReport& fps,
                             const PadicNumber& x, unsigned budget);

struct SampleSpec {
  long min_valuation = -2;   // window of valuations for random offsets
  long max_valuation = 8;
  unsigned count = 1000;     // random points drawn before targeted fill
  unsigned min_per_region = 1;
  std::uint64_t seed = 0;
};

/// Deterministic point generator covering every (nonempty) region tag at least
/// min_per_region times; throws CoverageUnreachable naming an empty region.
std::vector<std::pair<PadicNumber, Region>> enumerate_ball_representatives(
    const ModelParams& params, const FixedPointReport& fps, const SampleSpec& spec);

}  // namespace padicdyn

#include "padicdyn/basin.hpp"

#include <array>
#include <map>

namespace padicdyn {

const char* region_name(Region r) {
  switch (r) {
    case Region::A0: return "A0";
    case Region::A1: return "A1";
    case Region::A2: return "A2";
    case Region::A0Inf: return "A0Inf";
    case Region::A1Inf1: return "A1Inf1";
    case Region::A1Inf2: return "A1Inf2";
    case Region::AInf1: return "AInf1";
    case Region::AInf2: return "AInf2";
    case Region::AInf3: return "AInf3";
    case Region::Singular: return "Singular";
  }
  return "?";
}

const char* basin_status_name(BasinStatus s) {
  switch (s) {
    case BasinStatus::InBasin: return "in-basin";
    case BasinStatus::EventuallySingular: return "eventually-singular";
    case BasinStatus::Repeller: return "repeller";
    case BasinStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "?";
}

Region classify_region(const ModelParams& params, const FixedPointReport& fps,
                       const PadicNumber& x) {
  params.require_tier2();
  params.require_classification_regime();

  const Norm q_norm = params.q_padic().norm();
  const Norm t_norm = (params.theta() - params.x0()).norm();
  const PadicNumber pole = params.x_infinity();

  Norm d_pole = (x - pole).norm();
  if (d_pole.is_zero) return Region::Singular;

  Norm d_one = (x - params.x0()).norm();
  if (d_one < q_norm) return Region::A0;
  if (d_one > q_norm) return Region::A1;

  // |x - 1| = |q| forces |x - pole| <= |q|; the shells around the pole split
  // on where |x - pole| falls relative to |theta - 1| and |q||theta - 1|.
  if (d_pole == q_norm) return Region::A0Inf;
  if (d_pole > t_norm) return Region::A2;
  if (d_pole == t_norm) {
    Norm d_x1 = (x - fps.x1_representative).norm();
    return (d_x1 == t_norm) ? Region::A1Inf1 : Region::A1Inf2;
  }
  Norm qt = q_norm * t_norm;
  if (d_pole < qt) return Region::AInf1;
  if (d_pole == qt) return Region::AInf2;
  return Region::AInf3;
}

TransitionCheck check_transition(const ModelParams& params, const FixedPointReport& fps,
                                 const PadicNumber& x) {
  Region from = classify_region(params, fps, x);
  if (from == Region::Singular) throw WrongRegion("pole has no image under the map");

  PadicNumber fx = eval_map(params, x);
  Region to = classify_region(params, fps, fx);

  const Norm q_norm = params.q_padic().norm();
  const Norm t_norm = (params.theta() - params.x0()).norm();

  TransitionCheck check{from, to, false};
  switch (from) {
    case Region::A0: {
      Norm bound = (t_norm / q_norm) * (x - params.x0()).norm();
      check.claim_satisfied = (to == Region::A0) && (fx - params.x0()).norm() <= bound;
      break;
    }
    case Region::A1:
    case Region::A2:
    case Region::A0Inf:
      check.claim_satisfied = (to == Region::A0);
      break;
    case Region::AInf1:
    case Region::AInf3:
      check.claim_satisfied = (to == Region::A1);
      break;
    case Region::AInf2:
      check.claim_satisfied =
          (to == Region::A1) && (fx - params.x0()).norm() == Norm::one();
      break;
    case Region::A1Inf1:
      check.claim_satisfied = (to == Region::A0Inf);
      break;
    case Region::A1Inf2: {
      // image distance to x1 scales by exactly |q|/|theta - 1|
      Norm lhs = (fx - fps.x1_representative).norm();
      Norm rhs = (q_norm / t_norm) * (x - fps.x1_representative).norm();
      check.claim_satisfied = (lhs == rhs);
      break;
    }
    case Region::Singular:
      break;
  }
  return check;
}

ScalingCheck pairwise_scaling(const ModelParams& params, const FixedPointReport& fps,
                              const PadicNumber& xa, const PadicNumber& xb) {
  if (classify_region(params, fps, xa) != Region::A1Inf2 ||
      classify_region(params, fps, xb) != Region::A1Inf2) {
    throw WrongRegion("pairwise scaling holds on the shell around x1 only");
  }
  ScalingCheck check;
  check.lhs = (eval_map(params, xa) - eval_map(params, xb)).norm();
  Norm factor = params.q_padic().norm() / (params.theta() - params.x0()).norm();
  check.rhs = factor * (xa - xb).norm();
  check.equal = (check.lhs == check.rhs);
  return check;
}

long predict_escape_time(const ModelParams& params, const FixedPointReport& fps,
                         const PadicNumber& x) {
  if (classify_region(params, fps, x) != Region::A1Inf2) {
    throw WrongRegion("escape time is defined on the shell around x1");
  }
  Norm d = (x - fps.x1_representative).norm();
  if (d.is_zero) throw AtRepeller();
  long rho = -d.exp;
  long a = params.theta_val();
  long step = a - static_cast<long>(params.q_val());
  // rho > a on the shell; distance valuation drops by (a - m) per iteration
  return (rho - a + step - 1) / step;
}

BasinResult basin_membership(const ModelParams& params, const FixedPointReport& fps,
                             const PadicNumber& x, unsigned budget) {
  params.require_tier2();
  BasinResult result;
  Region start = classify_region(params, fps, x);
  if (start == Region::A1Inf2) {
    Norm d = (x - fps.x1_representative).norm();
    result.theoretical_step_bound =
        d.is_zero ? 0 : predict_escape_time(params, fps, x) + 2;
  } else if (start != Region::Singular) {
    result.theoretical_step_bound = 2;
  }

  const PadicNumber pole = params.x_infinity();
  const Norm q_norm = params.q_padic().norm();
  const long repel_limit = static_cast<long>(fps.precision) - 2;

  PadicNumber cur = x;
  for (unsigned step = 0; step <= budget; ++step) {
    if (cur == pole) {
      result.status = BasinStatus::EventuallySingular;
      result.steps = step;
      return result;
    }
    Norm d_x1 = (cur - fps.x1_representative).norm();
    if (d_x1.is_zero || d_x1 <= Norm::power(-repel_limit)) {
      result.status = BasinStatus::Repeller;
      result.steps = step;
      result.at_precision_caveat = !fps.y1.exact.has_value();
      return result;
    }
    if ((cur - params.x0()).norm() < q_norm) {
      result.status = BasinStatus::InBasin;
      result.steps = step;
      return result;
    }
    if (step == budget) break;
    cur = eval_map(params, cur);
  }
  result.status = BasinStatus::BudgetExceeded;
  result.steps = budget;
  return result;
}

namespace {

// index-th unit residue avoiding the classes in `skip` (values mod p)
BigInt unit_avoiding(const Prime& p, unsigned index, const std::vector<long>& skip) {
  BigInt pv = p.value();
  unsigned seen = 0;
  for (BigInt c = 1;; ++c) {
    BigInt r = c % pv;
    if (r == 0) continue;
    bool bad = false;
    for (long s : skip) {
      if (r == mod_reduce(BigInt(s), pv)) { bad = true; break; }
    }
    if (bad) continue;
    if (seen++ == index) return c;
  }
}

BigRat p_power(const Prime& p, long e) {
  if (e >= 0) return BigRat(p.pow(static_cast<unsigned>(e)));
  return BigRat(1) / BigRat(p.pow(static_cast<unsigned>(-e)));
}

// deterministic index-th representative of a region, or nullopt when empty
std::optional<PadicNumber> target_sample(const ModelParams& params,
                                         const FixedPointReport& fps, Region region,
                                         unsigned index) {
  const Prime& p = params.p();
  const long m = static_cast<long>(params.q_val());
  const long a = params.theta_val();
  const PadicNumber pole = params.x_infinity();
  const PadicNumber one = params.x0();
  const PadicNumber tm1 = params.theta() - one;
  BigInt u = unit_avoiding(p, index, {});

  switch (region) {
    case Region::A0:
      return one + PadicNumber(p, p_power(p, m + 1 + (index % 3)) * BigRat(u));
    case Region::A1: {
      long v = static_cast<long>(index % (m + 2)) - 2;  // valuations -2 .. m-1
      return one + PadicNumber(p, p_power(p, v) * BigRat(u));
    }
    case Region::A0Inf: {
      BigInt c = unit_avoiding(p, index, {-1});
      return one + params.q_padic() * PadicNumber(p, c);
    }
    case Region::A2:
      if (a < m + 2) return std::nullopt;
      return pole + PadicNumber(p, p_power(p, m + 1 + (index % (a - m - 1))) * BigRat(u));
    case Region::A1Inf1: {
      BigInt c = unit_avoiding(p, index, {3});
      return pole + tm1 * PadicNumber(p, c);
    }
    case Region::A1Inf2:
      return fps.x1_representative +
             PadicNumber(p, p_power(p, a + 1 + (index % 3)) * BigRat(u));
    case Region::AInf1:
      return pole + PadicNumber(p, p_power(p, m + a + 1 + (index % 3)) * BigRat(u));
    case Region::AInf2:
      return pole + PadicNumber(p, p_power(p, m + a) * BigRat(u));
    case Region::AInf3:
      if (m < 2) return std::nullopt;
      return pole + PadicNumber(p, p_power(p, a + 1 + (index % (m - 1))) * BigRat(u));
    case Region::Singular:
      return pole;
  }
  return std::nullopt;
}

}  // namespace

std::vector<std::pair<PadicNumber, Region>> enumerate_ball_representatives(
    const ModelParams& params, const FixedPointReport& fps, const SampleSpec& spec) {
  params.require_tier2();
  params.require_classification_regime();

  std::vector<std::pair<PadicNumber, Region>> out;
  std::array<unsigned, kRegionCount> counts{};
  auto push = [&](const PadicNumber& x) {
    Region r = classify_region(params, fps, x);
    ++counts[static_cast<int>(r)];
    out.emplace_back(x, r);
  };

  const Prime& p = params.p();
  const std::array<PadicNumber, 3> centers{params.x0(), params.x_infinity(),
                                           fps.x1_representative};
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<long> val_dist(spec.min_valuation, spec.max_valuation);
  std::uniform_int_distribution<std::uint64_t> unit_dist(0, 999'999);

  for (unsigned i = 0; i < spec.count; ++i) {
    const PadicNumber& c = centers[rng() % centers.size()];
    long v = val_dist(rng);
    BigInt u = BigInt(unit_dist(rng));
    if (u % p.value() == 0) ++u;
    push(c + PadicNumber(p, p_power(p, v) * BigRat(u)));
  }

  for (int r = 0; r < kRegionCount; ++r) {
    Region region = static_cast<Region>(r);
    for (unsigned j = 0; counts[r] < spec.min_per_region; ++j) {
      auto x = target_sample(params, fps, region, j);
      if (!x) {
        throw CoverageUnreachable(std::string(region_name(region)) +
                                  " is empty for these parameters");
      }
      Region got = classify_region(params, fps, *x);
      if (got != region) {
        throw Error(std::string("targeted sample for ") + region_name(region) +
                    " landed in " + region_name(got));
      }
      push(*x);
    }
  }
  return out;
}

}  // namespace padicdyn

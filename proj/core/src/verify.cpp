#include "padicdyn/verify.hpp"

#include <sstream>

#include "padicdyn/literal.hpp"

namespace padicdyn {

bool VerifyReport::all_pass() const {
  for (const CheckCount& c : checks) {
    if (c.fail != 0) return false;
  }
  return true;
}

std::string VerifyReport::to_json() const {
  std::ostringstream os;
  os << "{\"checks\":[";
  for (std::size_t i = 0; i < checks.size(); ++i) {
    const CheckCount& c = checks[i];
    if (i) os << ",";
    os << "{\"name\":\"" << c.name << "\",\"pass\":" << c.pass << ",\"fail\":" << c.fail
       << ",\"counterexamples\":[";
    for (std::size_t j = 0; j < c.counterexamples.size(); ++j) {
      if (j) os << ",";
      os << "\"" << c.counterexamples[j] << "\"";
    }
    os << "]}";
  }
  os << "],\"all_pass\":" << (all_pass() ? "true" : "false") << "}";
  return os.str();
}

namespace {

BigInt random_unit(const Prime& p, std::mt19937_64& rng) {
  BigInt u = BigInt(rng() % 1000) + 1;
  if (u % p.value() == 0) ++u;
  return u;
}

ModelParams make_params(const Prime& p, unsigned m, unsigned a, std::mt19937_64& rng) {
  BigInt pm1 = p.value() - 1;
  BigInt s = BigInt(rng() % pm1.convert_to<std::uint64_t>()) + 1;
  BigInt qv = p.pow(m) * s;
  unsigned long q = qv.convert_to<unsigned long>();
  BigInt u = random_unit(p, rng);
  PadicNumber theta(p, BigRat(1) + BigRat(p.pow(a)) * BigRat(u));
  return ModelParams(p, q, theta, 3);
}

}  // namespace

ModelParams sample_tier2_params(const Prime& p, std::mt19937_64& rng) {
  unsigned m = 2 + static_cast<unsigned>(rng() % 2);
  unsigned a = m + 2 + static_cast<unsigned>(rng() % 2);
  return make_params(p, m, a, rng);
}

ModelParams sample_tier1_params(const Prime& p, std::mt19937_64& rng) {
  unsigned m = 1 + static_cast<unsigned>(rng() % 3);
  unsigned a = 1 + static_cast<unsigned>(rng() % 5);
  for (int tries = 0; tries < 16; ++tries) {
    ModelParams params = make_params(p, m, a, rng);
    if (params.tier1()) return params;
  }
  throw HypothesisViolated("could not sample tier1 parameters");
}

VerifyReport run_verification(const VerifyConfig& cfg) {
  if (cfg.samples == 0) throw HypothesisViolated("empty verification suite");
  Prime p(BigInt(cfg.p));
  std::mt19937_64 rng(cfg.seed);
  const unsigned N = cfg.precision;

  CheckCount fixed{"unique-fixed-point"};
  CheckCount congruence{"congruence"};
  CheckCount multipliers{"multipliers"};
  CheckCount transitions{"transitions"};
  CheckCount scaling{"scaling"};
  CheckCount escape{"escape-time"};
  CheckCount basin{"basin"};
  CheckCount explog{"exp-log"};

  auto record = [](CheckCount& c, bool ok, const std::string& witness) {
    if (ok) {
      ++c.pass;
    } else {
      ++c.fail;
      if (c.counterexamples.size() < 8) c.counterexamples.push_back(witness);
    }
  };

  for (unsigned s = 0; s < cfg.samples; ++s) {
    ModelParams params = sample_tier2_params(p, rng);
    const std::string tag =
        "q=" + std::to_string(params.q()) + " theta=" + to_rational_literal(params.theta());

    FixedPointReport fps = find_fixed_points(params, N);
    PadicNumber y1 = fps.y1.representative(p);
    bool fp_ok = (fps.y1.initial_residue == 3) && (y1.norm() == Norm::one()) &&
                 (fps.y1_minus_3_norm == y1_distance_constant(params));
    record(fixed, fp_ok, tag);

    record(congruence, fps.congruence && fps.congruence->pass, tag);

    Norm t_norm = (params.theta() - params.x0()).norm();
    Norm q_norm = params.q_padic().norm();
    bool mult_ok = (fps.multiplier_x0 == t_norm / q_norm) &&
                   (fps.multiplier_x1 == q_norm / t_norm) &&
                   (fps.class_x0 == FixedPointClass::Attracting) &&
                   (fps.class_x1 == FixedPointClass::Repelling);
    // finite difference at x0: |f(x)-f(1)| / |x-1| equals the multiplier
    PadicNumber delta(p, BigRat(p.pow(params.q_val() + 3)));
    PadicNumber xnear = params.x0() + delta;
    Norm fd = (eval_map(params, xnear) - params.x0()).norm() / delta.norm();
    mult_ok = mult_ok && (fd == fps.multiplier_x0);
    if (cfg.inject_failure && s == 0) mult_ok = false;
    record(multipliers, mult_ok, tag);

    SampleSpec spec;
    spec.count = cfg.points;
    spec.min_per_region = 3;
    spec.seed = rng();
    auto pts = enumerate_ball_representatives(params, fps, spec);
    bool trans_ok = true;
    std::string trans_witness;
    std::vector<PadicNumber> shell;
    for (const auto& [x, region] : pts) {
      if (region == Region::Singular) continue;
      if (region == Region::A1Inf2 && !(x - fps.x1_representative).norm().is_zero) {
        shell.push_back(x);
      }
      TransitionCheck tc = check_transition(params, fps, x);
      if (!tc.claim_satisfied) {
        trans_ok = false;
        trans_witness = tag + " x=" + to_rational_literal(x) + " " +
                        region_name(tc.from) + "->" + region_name(tc.to);
        break;
      }
    }
    record(transitions, trans_ok, trans_witness.empty() ? tag : trans_witness);

    bool scale_ok = true;
    for (std::size_t i = 0; i + 1 < shell.size() && i < 20; ++i) {
      if (shell[i] == shell[i + 1]) continue;
      if (!pairwise_scaling(params, fps, shell[i], shell[i + 1]).equal) {
        scale_ok = false;
        break;
      }
    }
    record(scaling, scale_ok, tag);

    bool escape_ok = true;
    for (const PadicNumber& x : shell) {
      long n0 = predict_escape_time(params, fps, x);
      PadicNumber cur = x;
      long observed = 0;
      while (classify_region(params, fps, cur) == Region::A1Inf2 && observed <= n0 + 2) {
        cur = eval_map(params, cur);
        ++observed;
      }
      if (observed != n0) {
        escape_ok = false;
        break;
      }
    }
    record(escape, escape_ok, tag);

    bool basin_ok = true;
    unsigned tested = 0;
    for (const auto& [x, region] : pts) {
      if (region == Region::Singular) continue;
      if (tested++ >= 40) break;
      BasinResult br = basin_membership(params, fps, x, 64);
      if (br.status == BasinStatus::Repeller || br.status == BasinStatus::EventuallySingular) {
        continue;
      }
      if (br.status != BasinStatus::InBasin) {
        basin_ok = false;
        break;
      }
      // monotone contraction once inside A0
      PadicNumber cur = x;
      for (unsigned i = 0; i < br.steps; ++i) cur = eval_map(params, cur);
      Norm d = (cur - params.x0()).norm();
      for (int i = 0; i < 4 && !d.is_zero; ++i) {
        cur = eval_map(params, cur);
        Norm d2 = (cur - params.x0()).norm();
        if (!(d2 < d)) {
          basin_ok = false;
          break;
        }
        d = d2;
      }
      if (!basin_ok) break;
    }
    record(basin, basin_ok, tag);

    bool el_ok = true;
    for (int i = 0; i < 8 && el_ok; ++i) {
      long v = 1 + static_cast<long>(rng() % 4);
      PadicNumber x(p, BigRat(p.pow(static_cast<unsigned>(v))) * BigRat(random_unit(p, rng)));
      PadicNumber ex = exp_p(x, N);
      el_ok = ((ex - params.x0()).norm() == x.norm()) &&
              ((log_p(ex, N) - x).norm() <= Norm::power(-static_cast<long>(N) + 1));
    }
    record(explog, el_ok, tag);
  }

  VerifyReport report;
  report.checks = {fixed, congruence, multipliers, transitions,
                   scaling, escape, basin, explog};
  return report;
}

}  // namespace padicdyn

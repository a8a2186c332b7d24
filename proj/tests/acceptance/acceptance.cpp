// Acceptance gate: one pass/fail line per criterion, nonzero exit on any failure.
// argv[1] (optional) is the CLI binary path, used by the determinism criterion.

#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>

#include "padicdyn/literal.hpp"
#include "padicdyn/verify.hpp"

using namespace padicdyn;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
Clock::time_point last_report = Clock::now();

void report(int index, const char* name, bool pass, const std::string& detail = "") {
  auto now = Clock::now();
  double secs = std::chrono::duration<double>(now - last_report).count();
  last_report = now;
  std::cout << "criterion " << index << " (" << name << "): " << (pass ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << "  [" << detail << "]";
  std::cout << "  (" << secs << "s)" << std::endl;
  if (!pass) ++failures;
}

std::vector<ModelParams> tier1_sets(unsigned per_prime, std::uint64_t seed) {
  std::vector<ModelParams> out;
  for (unsigned long pv : {5ul, 11ul, 17ul, 23ul, 29ul}) {
    Prime p{BigInt(pv)};
    std::mt19937_64 rng(seed ^ pv);
    for (unsigned i = 0; i < per_prime; ++i) out.push_back(sample_tier1_params(p, rng));
  }
  return out;
}

std::vector<ModelParams> tier2_sets(unsigned per_prime, std::uint64_t seed) {
  std::vector<ModelParams> out;
  for (unsigned long pv : {5ul, 11ul, 17ul, 23ul, 29ul}) {
    Prime p{BigInt(pv)};
    std::mt19937_64 rng(seed ^ (pv * 31));
    for (unsigned i = 0; i < per_prime; ++i) out.push_back(sample_tier2_params(p, rng));
  }
  return out;
}

// 1: unique certified root of the fixed-point cubic, residue 3, exact norm,
//    cross-checked against the exhaustive mod p^4 scan
void criterion_unique_fixed_point() {
  auto t0 = Clock::now();
  auto sets = tier1_sets(40, 2024);  // 200 sets
  bool ok = sets.size() == 200;
  std::string detail;
  for (const ModelParams& m : sets) {
    FixedPointReport fps = find_fixed_points(m, 12);
    PadicNumber y1 = fps.y1.representative(m.p());
    bool here = (fps.y1.initial_residue == 3) && (y1.norm() == Norm::one()) &&
                (fps.y1_minus_3_norm == y1_distance_constant(m));
    auto [xf, yf, zf] = fixed_point_cubics(m);
    (void)xf;
    here = here && (fps.y1_minus_3_norm == root_norm_estimate(zf));
    // residue chain agreement: among residues == 3 mod p, the scan has exactly y1
    BigInt res4 = fps.y1.residue_mod(4, m.p());
    unsigned matching = 0;
    bool found = false;
    for (const BigInt& r : roots_mod_pk(yf, 4)) {
      if (mod_reduce(r, m.p().value()) == 3) {
        ++matching;
        if (r == res4) found = true;
      }
    }
    here = here && found && (matching == 1);
    if (!here && detail.empty()) {
      detail = "p=" + m.p().value().str() + " q=" + std::to_string(m.q());
    }
    ok = ok && here;
  }
  auto secs = std::chrono::duration<double>(Clock::now() - t0).count();
  ok = ok && secs < 30.0;
  std::ostringstream extra;
  extra << "200 sets, " << secs << "s";
  report(1, "unique fixed point + scan cross-check", ok,
         detail.empty() ? extra.str() : detail);
}

// 2: y1 == 3 + s0 p^m (mod p^(m+1)), s0 == -s (mod p); anchor instance included
void criterion_congruence() {
  bool ok = true;
  for (const ModelParams& m : tier2_sets(20, 77)) {
    FixedPointReport fps = find_fixed_points(m, 12);
    ok = ok && fps.congruence && fps.congruence->pass;
  }
  Prime p5{BigInt(5)};
  ModelParams anchor(p5, 5, PadicNumber(p5, 26), 3);
  FixedPointReport fps = find_fixed_points(anchor, 12);
  ok = ok && fps.y1.residue_mod(2, p5) == 23 && fps.congruence && fps.congruence->pass;
  report(2, "congruence of the nontrivial root", ok);
}

// 3: multiplier norms, classifications, finite-difference agreement
void criterion_multipliers() {
  bool ok = true;
  for (const ModelParams& m : tier2_sets(20, 4242)) {
    FixedPointReport fps = find_fixed_points(m, 16);
    Norm t = (m.theta() - m.x0()).norm();
    Norm q = m.q_padic().norm();
    ok = ok && fps.multiplier_x0 == t / q && fps.multiplier_x1 == q / t;
    ok = ok && fps.class_x0 == FixedPointClass::Attracting &&
         fps.class_x1 == FixedPointClass::Repelling;
    // the difference quotient is first-order only below |q| at x0, |theta-1| at x1
    PadicNumber delta0(m.p(), BigRat(m.p().pow(m.q_val() + 3)));
    PadicNumber delta1(m.p(), BigRat(m.p().pow(static_cast<unsigned>(m.theta_val()) + 3)));
    Norm fd0 = (eval_map(m, m.x0() + delta0) - m.x0()).norm() / delta0.norm();
    Norm fd1 = (eval_map(m, fps.x1_representative + delta1) -
                eval_map(m, fps.x1_representative)).norm() / delta1.norm();
    ok = ok && fd0 == fps.multiplier_x0 && fd1 == fps.multiplier_x1;
  }
  report(3, "multipliers and finite differences", ok);
}

// 4: >= 10^4 points per set covering all ten tags; every transition claim holds
void criterion_transitions() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail;
  auto sets = tier2_sets(1, 555);  // one rich set per prime
  for (const ModelParams& m : sets) {
    FixedPointReport fps = find_fixed_points(m, 32);
    SampleSpec spec;
    spec.count = 10000;
    spec.min_per_region = 10;
    spec.seed = 1;
    auto pts = enumerate_ball_representatives(m, fps, spec);
    ok = ok && pts.size() >= 10000;
    std::array<unsigned, kRegionCount> counts{};
    for (const auto& [x, region] : pts) {
      ++counts[static_cast<int>(region)];
      if (region == Region::Singular) continue;
      TransitionCheck tc = check_transition(m, fps, x);
      if (!tc.claim_satisfied) {
        ok = false;
        if (detail.empty()) {
          detail = std::string(region_name(tc.from)) + "->" + region_name(tc.to) +
                   " x=" + to_rational_literal(x);
        }
      }
    }
    for (unsigned c : counts) ok = ok && c > 0;
  }
  auto secs = std::chrono::duration<double>(Clock::now() - t0).count();
  ok = ok && secs < 120.0;
  std::ostringstream extra;
  extra << sets.size() << " sets x 10^4 points, " << secs << "s";
  report(4, "region transitions", ok, detail.empty() ? extra.str() : detail);
}

// 5: exact scaling on 10^3 shell pairs; escape times across >= 5 levels
void criterion_scaling_escape() {
  bool ok = true;
  Prime p5{BigInt(5)};
  ModelParams m(p5, 25, PadicNumber(p5, BigRat(1) + BigRat(15625)), 3);  // m=2, a=6
  FixedPointReport fps = find_fixed_points(m, 48);
  long a = m.theta_val();
  std::mt19937_64 rng(31337);

  auto shell_point = [&](long t) {
    BigInt u = BigInt(rng() % 10000) + 1;
    if (u % 5 == 0) ++u;
    return fps.x1_representative +
           PadicNumber(p5, BigRat(p5.pow(static_cast<unsigned>(a + t))) * BigRat(u));
  };

  unsigned pairs = 0;
  while (pairs < 1000) {
    PadicNumber xa = shell_point(1 + static_cast<long>(rng() % 10));
    PadicNumber xb = shell_point(1 + static_cast<long>(rng() % 10));
    if (xa == xb) continue;
    ++pairs;
    ok = ok && pairwise_scaling(m, fps, xa, xb).equal;
  }

  unsigned points = 0;
  std::array<bool, 11> level_seen{};
  while (points < 1000) {
    long t = 1 + static_cast<long>(rng() % 10);
    PadicNumber x = shell_point(t);
    ++points;
    level_seen[static_cast<std::size_t>(t)] = true;
    long n0 = predict_escape_time(m, fps, x);
    PadicNumber cur = x;
    long observed = 0;
    while (classify_region(m, fps, cur) == Region::A1Inf2 && observed <= n0 + 1) {
      cur = eval_map(m, cur);
      ++observed;
    }
    ok = ok && observed == n0;
  }
  unsigned levels = 0;
  for (bool b : level_seen) levels += b ? 1 : 0;
  ok = ok && levels >= 5;
  report(5, "shell scaling and escape times", ok);
}

// 6: every sampled point off the repeller and the pole's backward orbit reaches
//    A0 within budget and contracts monotonically afterwards
void criterion_basin() {
  bool ok = true;
  unsigned long reached = 0, singular = 0, repeller = 0;
  for (const ModelParams& m : tier2_sets(2, 909)) {
    FixedPointReport fps = find_fixed_points(m, 32);
    SampleSpec spec;
    spec.count = 300;
    spec.min_per_region = 5;
    spec.seed = 7;
    for (const auto& [x, region] : enumerate_ball_representatives(m, fps, spec)) {
      BasinResult br = basin_membership(m, fps, x, 100);
      if (br.status == BasinStatus::EventuallySingular) {
        ++singular;
        continue;
      }
      if (br.status == BasinStatus::Repeller) {
        ++repeller;
        continue;
      }
      if (br.status != BasinStatus::InBasin) {
        ok = false;
        continue;
      }
      ++reached;
      // keep representatives mod p^512 so exact rationals don't balloon under
      // repeated cubing; every norm compared below has valuation far under 512
      auto trim = [](const PadicNumber& v) {
        return (!v.is_zero() && v.valuation() >= 0) ? v.reduced_mod(512) : v;
      };
      PadicNumber cur = trim(x);
      for (unsigned i = 0; i < br.steps; ++i) cur = trim(eval_map(m, cur));
      Norm d = (cur - m.x0()).norm();
      for (int i = 0; i < 3 && !d.is_zero; ++i) {
        cur = trim(eval_map(m, cur));
        Norm d2 = (cur - m.x0()).norm();
        ok = ok && d2 < d;
        d = d2;
      }
      (void)region;
    }
  }
  std::ostringstream extra;
  extra << reached << " in basin, " << singular << " singular, " << repeller
        << " at repeller";
  report(6, "basin of attraction", ok, extra.str());
}

// 7: exp/log norm identities and round trips at N in {16, 64}
void criterion_exp_log() {
  bool ok = true;
  for (unsigned long pv : {5ul, 11ul, 17ul}) {
    Prime p{BigInt(pv)};
    std::mt19937_64 rng(pv * 999);
    for (unsigned N : {16u, 64u}) {
      for (int i = 0; i < 167; ++i) {
        long v = 1 + static_cast<long>(rng() % 4);
        BigInt u = BigInt(rng() % 100000) + 1;
        if (u % p.value() == 0) ++u;
        PadicNumber x(p, BigRat(p.pow(static_cast<unsigned>(v))) * BigRat(u));
        PadicNumber ex = exp_p(x, N);
        ok = ok && (ex - PadicNumber(p, 1)).norm() == x.norm();
        PadicNumber back = log_p(ex, N);
        PadicNumber diff = back - x;
        ok = ok && (diff.is_zero() || diff.valuation() >= static_cast<long>(N));
        // |log(y)| = |y - 1| on the same sample, via y = ex
        PadicNumber ly = log_p(ex, N);
        ok = ok && ly.norm() == (ex - PadicNumber(p, 1)).norm();
      }
    }
  }
  report(7, "exp/log identities", ok, "10^3 points, N in {16, 64}");
}

// 8: catalogue soundness, case A presence, symbolic factorization
void criterion_gibbs() {
  bool ok = true;
  Prime p5{BigInt(5)};
  for (unsigned long q : {5ul, 10ul, 15ul}) {
    ModelParams m(p5, q, PadicNumber(p5, 26), 3);
    CatalogDiagnostics diag;
    auto catalog = enumerate_tipgm(m, 24, &diag);
    ok = ok && !catalog.empty() && catalog.front().kase == TipgmCase::A;
    long slack = consistency_slack(m);
    for (const BoundaryVector& bv : catalog) {
      ok = ok && bv.consistency_pass;
      std::vector<PadicNumber> h;
      for (const PadicNumber& zi : bv.z_vector(m)) h.push_back(log_p(zi, 32));
      auto F = recursion_step(m, h, 32);
      for (std::size_t i = 0; i < h.size(); ++i) {
        PadicNumber diff = h[i] - PadicNumber(p5, 3) * F[i];
        ok = ok && (diff.is_zero() || diff.valuation() >= 24 - slack);
      }
    }
  }
  // (z+2)^3 - 27z == (z-1)^2 (z+8)
  Polynomial two = Polynomial::from_rationals(p5, {2, 1});
  Polynomial lhs = two * two * two - Polynomial::from_rationals(p5, {0, 27});
  Polynomial m1 = Polynomial::from_rationals(p5, {-1, 1});
  Polynomial rhs = m1 * m1 * Polynomial::from_rationals(p5, {8, 1});
  ok = ok && lhs.degree() == rhs.degree();
  for (int i = 0; i <= lhs.degree() && ok; ++i) {
    ok = lhs.coeff(i).value() == rhs.coeff(i).value();
  }
  report(8, "catalogue soundness", ok);
}

// 9: two CLI verify runs with one seed produce byte-identical JSON
void criterion_determinism(const char* cli) {
  if (!cli) {
    report(9, "determinism", false, "no CLI path given");
    return;
  }
  auto run = [&]() {
    std::string cmd = std::string(cli) +
                      " verify --p 5 --samples 3 --points 60 --prec 20 --seed 42 2>/dev/null";
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    pclose(pipe);
    return out;
  };
  std::string a = run(), b = run();
  report(9, "determinism", !a.empty() && a == b,
         std::to_string(a.size()) + " bytes each");
}

}  // namespace

int main(int argc, char** argv) {
  const char* cli = argc > 1 ? argv[1] : nullptr;
  criterion_unique_fixed_point();
  criterion_congruence();
  criterion_multipliers();
  criterion_transitions();
  criterion_scaling_escape();
  criterion_basin();
  criterion_exp_log();
  criterion_gibbs();
  criterion_determinism(cli);
  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : "FAILURES PRESENT") << std::endl;
  return failures == 0 ? 0 : 1;
}

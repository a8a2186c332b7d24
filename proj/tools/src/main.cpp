#include <cstdlib>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "padicdyn/basin.hpp"
#include "padicdyn/gibbs.hpp"
#include "padicdyn/literal.hpp"
#include "padicdyn/verify.hpp"

using namespace padicdyn;

namespace {

struct Options {
  std::string p = "5";
  unsigned long q = 5;
  std::string theta;
  std::string J;
  unsigned k = 3;
  unsigned prec = 64;
  std::uint64_t seed = 0;
  unsigned samples = 0;
  unsigned points = 200;
  unsigned min_per_region = 25;
  unsigned budget = 100;
  std::string x;
  bool json = false;
  bool inject_failure = false;
};

void add_model_flags(CLI::App* cmd, Options& opt) {
  cmd->add_option("--p", opt.p, "prime modulus");
  cmd->add_option("--q", opt.q, "number of spin states");
  cmd->add_option("--theta", opt.theta, "theta literal (rational or digit form)");
  cmd->add_option("--J", opt.J, "coupling literal; theta = exp_p(J)");
  cmd->add_option("--k", opt.k, "tree order");
  cmd->add_option("--prec", opt.prec, "certificate precision N");
  cmd->add_option("--seed", opt.seed, "RNG seed");
}

ModelParams build_params(const Options& opt) {
  if (opt.theta.empty() == opt.J.empty()) {
    throw HypothesisViolated("provide exactly one of --theta / --J");
  }
  Prime p((BigInt(opt.p)));
  PadicNumber theta = opt.theta.empty()
                          ? theta_from_J(parse_literal(opt.J, p), opt.prec)
                          : parse_literal(opt.theta, p);
  return ModelParams(p, opt.q, theta, opt.k);
}

std::string norm_str(const Norm& n, const Prime& p) {
  if (n.is_zero) return "0";
  if (n.exp >= 0) return BigInt(p.pow(static_cast<unsigned>(n.exp))).str();
  return "1/" + BigInt(p.pow(static_cast<unsigned>(-n.exp))).str();
}

unsigned thread_count() {
  if (const char* env = std::getenv("PADIC_DYNAMICS_THREADS")) {
    long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return 1;
}

int cmd_fixed_points(const Options& opt) {
  ModelParams params = build_params(opt);
  FixedPointReport fps = find_fixed_points(params, opt.prec);
  const Prime& p = params.p();

  if (opt.json) {
    std::ostringstream os;
    os << "{\"x0\":\"1\",\"x1\":\"" << to_rational_literal(fps.x1_representative)
       << "\",\"y1_residue\":\"" << fps.y1.residue_mod(opt.prec, p).str()
       << "\",\"precision\":" << fps.precision << ",\"y1_minus_3_norm\":\""
       << norm_str(fps.y1_minus_3_norm, p) << "\",\"multiplier_x0\":\""
       << norm_str(fps.multiplier_x0, p) << "\",\"multiplier_x1\":\""
       << norm_str(fps.multiplier_x1, p) << "\",\"class_x0\":\""
       << fixed_point_class_name(fps.class_x0) << "\",\"class_x1\":\""
       << fixed_point_class_name(fps.class_x1) << "\"";
    if (fps.congruence) {
      os << ",\"congruence\":{\"s0\":" << fps.congruence->s0.str()
         << ",\"m\":" << fps.congruence->m
         << ",\"pass\":" << (fps.congruence->pass ? "true" : "false") << "}";
    }
    os << "}";
    std::cout << os.str() << "\n";
    return 0;
  }

  std::cout << "x0 = 1  (multiplier " << norm_str(fps.multiplier_x0, p) << ", "
            << fixed_point_class_name(fps.class_x0) << ")\n";
  std::cout << "x1 = " << to_digit_literal(fps.x1_representative, opt.prec) << "  (multiplier "
            << norm_str(fps.multiplier_x1, p) << ", " << fixed_point_class_name(fps.class_x1)
            << ")\n";
  std::cout << "y1 = " << to_digit_literal(fps.y1.representative(p), opt.prec) << "   |y1 - 3| = "
            << norm_str(fps.y1_minus_3_norm, p) << "\n";
  if (fps.congruence) {
    BigInt mod = p.pow(fps.congruence->m + 1);
    std::cout << "y1 == " << fps.y1.residue_mod(fps.congruence->m + 1, p).str() << " (mod "
              << mod.str() << ")   s0 = " << fps.congruence->s0.str()
              << ", m = " << fps.congruence->m << "  ["
              << (fps.congruence->pass ? "pass" : "FAIL") << "]\n";
    if (!fps.congruence->pass) return 1;
  }
  return 0;
}

int cmd_verify(const Options& opt) {
  if (opt.samples == 0) throw HypothesisViolated("--samples must be positive");
  VerifyConfig cfg;
  cfg.p = BigInt(opt.p).convert_to<unsigned long>();
  cfg.samples = opt.samples;
  cfg.points = opt.points;
  cfg.precision = opt.prec;
  cfg.seed = opt.seed;
  cfg.inject_failure = opt.inject_failure;
  VerifyReport report = run_verification(cfg);
  std::cout << report.to_json() << "\n";
  return report.all_pass() ? 0 : 1;
}

int cmd_orbit(const Options& opt) {
  ModelParams params = build_params(opt);
  PadicNumber x = parse_literal(opt.x, params.p());
  const bool classifiable = params.tier2() && params.k() == 3 &&
                            params.p().suitable_for_cubic_dynamics();
  std::optional<FixedPointReport> fps;
  if (classifiable) fps = find_fixed_points(params, opt.prec);

  OrbitResult result = orbit(params, x, opt.budget, fps ? &*fps : nullptr);
  for (std::size_t i = 0; i < result.trajectory.size(); ++i) {
    const PadicNumber& xi = result.trajectory[i];
    std::cout << i << "  " << to_rational_literal(xi);
    if (fps) std::cout << "  " << region_name(classify_region(params, *fps, xi));
    std::cout << "\n";
  }
  std::cout << "status: " << orbit_status_name(result.status) << "\n";
  return result.status == OrbitStatus::BudgetExhausted ? 3 : 0;
}

int cmd_classify(const Options& opt) {
  ModelParams params = build_params(opt);
  PadicNumber x = parse_literal(opt.x, params.p());
  FixedPointReport fps = find_fixed_points(params, opt.prec);
  std::cout << region_name(classify_region(params, fps, x)) << "\n";
  return 0;
}

int cmd_census(const Options& opt) {
  ModelParams params = build_params(opt);
  FixedPointReport fps = find_fixed_points(params, opt.prec);

  SampleSpec spec;
  spec.count = opt.samples ? opt.samples : 10000;
  spec.min_per_region = opt.min_per_region;
  spec.seed = opt.seed;
  auto pts = enumerate_ball_representatives(params, fps, spec);

  struct Row {
    int from = -1;
    int to = -1;
    bool ok = true;
    std::string x;
  };
  std::vector<Row> rows(pts.size());
  unsigned workers = std::max(1u, std::min(thread_count(),
                                           std::thread::hardware_concurrency()));
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      Row& row = rows[i];
      row.x = to_rational_literal(pts[i].first);
      row.from = static_cast<int>(pts[i].second);
      if (pts[i].second == Region::Singular) continue;
      TransitionCheck tc = check_transition(params, fps, pts[i].first);
      row.to = static_cast<int>(tc.to);
      row.ok = tc.claim_satisfied;
    }
  };
  if (workers <= 1) {
    work(0, rows.size());
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (rows.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      std::size_t b = std::min<std::size_t>(w * chunk, rows.size());
      std::size_t e = std::min<std::size_t>(b + chunk, rows.size());
      if (b < e) pool.emplace_back(work, b, e);
    }
    for (auto& t : pool) t.join();
  }

  long matrix[kRegionCount][kRegionCount] = {};
  bool all_ok = true;
  for (const Row& row : rows) {
    std::cout << "{\"x\":\"" << row.x << "\",\"from\":\""
              << region_name(static_cast<Region>(row.from)) << "\"";
    if (row.to >= 0) {
      std::cout << ",\"to\":\"" << region_name(static_cast<Region>(row.to)) << "\",\"ok\":"
                << (row.ok ? "true" : "false");
      matrix[row.from][row.to]++;
      all_ok = all_ok && row.ok;
    }
    std::cout << "}\n";
  }
  std::cout << "{\"summary\":{";
  bool first = true;
  for (int i = 0; i < kRegionCount; ++i) {
    for (int j = 0; j < kRegionCount; ++j) {
      if (!matrix[i][j]) continue;
      if (!first) std::cout << ",";
      first = false;
      std::cout << "\"" << region_name(static_cast<Region>(i)) << "->"
                << region_name(static_cast<Region>(j)) << "\":" << matrix[i][j];
    }
  }
  std::cout << "},\"all_ok\":" << (all_ok ? "true" : "false") << "}\n";
  return all_ok ? 0 : 1;
}

int cmd_gibbs(const Options& opt) {
  ModelParams params = build_params(opt);
  CatalogDiagnostics diag;
  std::vector<BoundaryVector> catalog = enumerate_tipgm(params, opt.prec, &diag);
  std::cout << "[";
  for (std::size_t i = 0; i < catalog.size(); ++i) {
    const BoundaryVector& bv = catalog[i];
    if (i) std::cout << ",";
    std::cout << "\n {\"case\":\"" << tipgm_case_name(bv.kase) << "\",\"partition\":\""
              << bv.partition.to_string() << "\",\"root_residues\":[";
    if (bv.root) {
      unsigned digits = std::min(opt.prec, 8u);
      std::cout << "\"" << bv.root->residue_mod(digits, params.p()).str() << "\"";
      if (bv.companion) {
        std::cout << ",\"" << bv.companion->residue_mod(digits).str() << "\"";
      }
    }
    std::cout << "],\"precision\":" << opt.prec << ",\"consistency_check\":\""
              << (bv.consistency_pass ? "pass" : "fail") << "\"}";
  }
  std::cout << "\n]\n";
  for (const std::string& note : diag.unresolved) {
    std::cerr << "unresolved: " << note << "\n";
  }
  bool sound = true;
  for (const BoundaryVector& bv : catalog) sound = sound && bv.consistency_pass;
  return sound ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact p-adic dynamics of the order-3 Potts-Bethe map"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* fixed = app.add_subcommand("fixed-points", "fixed points and multipliers");
  add_model_flags(fixed, opt);
  fixed->add_flag("--json", opt.json, "machine-readable output");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suites");
  add_model_flags(verify, opt);
  verify->add_option("--samples", opt.samples, "parameter sets to sample")->default_val(20);
  verify->add_option("--points", opt.points, "points per set");
  verify->add_flag("--json", opt.json);
  verify->add_flag("--inject-failure", opt.inject_failure)->group("");

  CLI::App* orb = app.add_subcommand("orbit", "iterate the map from a point");
  add_model_flags(orb, opt);
  orb->add_option("--x", opt.x, "starting point literal")->required();
  orb->add_option("--budget", opt.budget, "max iterations");

  CLI::App* cls = app.add_subcommand("classify", "region of a point");
  add_model_flags(cls, opt);
  cls->add_option("--x", opt.x, "point literal")->required();

  CLI::App* census = app.add_subcommand("census", "region/transition census (JSON lines)");
  add_model_flags(census, opt);
  census->add_option("--samples", opt.samples, "points to sample");
  census->add_option("--min-per-region", opt.min_per_region);

  CLI::App* gibbs = app.add_subcommand("gibbs", "boundary-solution catalogue");
  add_model_flags(gibbs, opt);

  CLI11_PARSE(app, argc, argv);

  try {
    if (fixed->parsed()) return cmd_fixed_points(opt);
    if (verify->parsed()) return cmd_verify(opt);
    if (orb->parsed()) return cmd_orbit(opt);
    if (cls->parsed()) return cmd_classify(opt);
    if (census->parsed()) return cmd_census(opt);
    if (gibbs->parsed()) return cmd_gibbs(opt);
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const HypothesisViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const WrongResidueClassModThree& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const GuardViolated& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

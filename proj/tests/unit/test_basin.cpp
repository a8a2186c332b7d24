#include <doctest.h>

#include <array>
#include <string>

#include "padicdyn/basin.hpp"

using namespace padicdyn;

namespace {
const Prime p5{BigInt(5)};

// m = 2, a = 6: every region tag is nonempty
ModelParams rich_params() {
  return ModelParams(p5, 25, PadicNumber(p5, BigRat(1) + BigRat(15625)), 3);
}

// independent classification oracle, straight from the norm definitions
Region oracle_region(const ModelParams& m, const FixedPointReport& fps,
                     const PadicNumber& x) {
  Norm q = m.q_padic().norm();
  Norm t = (m.theta() - m.x0()).norm();
  Norm d1 = (x - m.x0()).norm();
  Norm dp = (x - m.x_infinity()).norm();
  Norm dr = (x - fps.x1_representative).norm();
  if (dp.is_zero) return Region::Singular;
  if (d1 < q) return Region::A0;
  if (d1 > q) return Region::A1;
  if (dp == q) return Region::A0Inf;
  if (t < dp && dp < q) return Region::A2;
  if (dp == t && dr == t) return Region::A1Inf1;
  if (dp == t && dr < t) return Region::A1Inf2;
  if (!dp.is_zero && dp < q * t) return Region::AInf1;
  if (dp == q * t) return Region::AInf2;
  return Region::AInf3;
}
}  // namespace

TEST_CASE("region coverage and agreement with the oracle") {
  ModelParams m = rich_params();
  FixedPointReport fps = find_fixed_points(m, 32);
  SampleSpec spec;
  spec.count = 800;
  spec.min_per_region = 5;
  spec.seed = 3;
  auto pts = enumerate_ball_representatives(m, fps, spec);
  std::array<unsigned, kRegionCount> counts{};
  for (const auto& [x, region] : pts) {
    CHECK(region == oracle_region(m, fps, x));
    ++counts[static_cast<int>(region)];
  }
  for (unsigned c : counts) CHECK(c >= 5);
}

TEST_CASE("empty regions are reported") {
  // m = 1, a = 2: A2 (needs a >= m+2) and AInf3 (needs m >= 2) are empty
  ModelParams thin(p5, 5, PadicNumber(p5, 26), 3);
  FixedPointReport fps = find_fixed_points(thin, 16);
  SampleSpec spec;
  spec.count = 50;
  spec.min_per_region = 1;
  CHECK_THROWS_AS(enumerate_ball_representatives(thin, fps, spec), CoverageUnreachable);
}

TEST_CASE("transition claims hold on generated points") {
  ModelParams m = rich_params();
  FixedPointReport fps = find_fixed_points(m, 32);
  SampleSpec spec;
  spec.count = 400;
  spec.min_per_region = 5;
  spec.seed = 9;
  for (const auto& [x, region] : enumerate_ball_representatives(m, fps, spec)) {
    if (region == Region::Singular) continue;
    TransitionCheck tc = check_transition(m, fps, x);
    CHECK(tc.claim_satisfied);
    switch (tc.from) {
      case Region::A0:
      case Region::A1:
      case Region::A2:
      case Region::A0Inf:
        CHECK(tc.to == Region::A0);
        break;
      case Region::AInf1:
      case Region::AInf2:
      case Region::AInf3:
        CHECK(tc.to == Region::A1);
        break;
      case Region::A1Inf1:
        CHECK(tc.to == Region::A0Inf);
        break;
      default:
        break;
    }
  }
}

TEST_CASE("exact scaling on the repelling shell") {
  ModelParams m = rich_params();
  FixedPointReport fps = find_fixed_points(m, 32);
  long a = m.theta_val();
  std::vector<PadicNumber> shell;
  for (long t = 1; t <= 4; ++t) {
    for (long u : {1L, 2L, 7L}) {
      shell.push_back(fps.x1_representative +
                      PadicNumber(p5, BigRat(p5.pow(static_cast<unsigned>(a + t))) * u));
    }
  }
  for (std::size_t i = 0; i + 1 < shell.size(); ++i) {
    if (shell[i] == shell[i + 1]) continue;
    ScalingCheck sc = pairwise_scaling(m, fps, shell[i], shell[i + 1]);
    CHECK(sc.equal);
    CHECK(sc.lhs == sc.rhs);
  }
  CHECK_THROWS_AS(pairwise_scaling(m, fps, m.x0(), shell[0]), WrongRegion);
}

TEST_CASE("escape time prediction equals observation") {
  ModelParams m = rich_params();
  FixedPointReport fps = find_fixed_points(m, 32);
  long a = m.theta_val();  // 6; d = a - m = 4
  for (long t = 1; t <= 8; ++t) {
    PadicNumber x = fps.x1_representative +
                    PadicNumber(p5, BigRat(p5.pow(static_cast<unsigned>(a + t))) * 3);
    long n0 = predict_escape_time(m, fps, x);
    CHECK(n0 == (t + 3) / 4);  // ceil(t / (a - m)) with a - m = 4
    PadicNumber cur = x;
    long observed = 0;
    while (classify_region(m, fps, cur) == Region::A1Inf2) {
      cur = eval_map(m, cur);
      ++observed;
      REQUIRE(observed <= n0 + 1);
    }
    CHECK(observed == n0);
  }
  CHECK_THROWS_AS(predict_escape_time(m, fps, m.x0()), WrongRegion);
}

TEST_CASE("basin membership") {
  ModelParams m = rich_params();
  FixedPointReport fps = find_fixed_points(m, 32);

  BasinResult inside = basin_membership(m, fps, PadicNumber(p5, 0), 50);
  CHECK(inside.status == BasinStatus::InBasin);
  CHECK(inside.steps <= static_cast<unsigned>(inside.theoretical_step_bound));

  BasinResult pole = basin_membership(m, fps, m.x_infinity(), 50);
  CHECK(pole.status == BasinStatus::EventuallySingular);
  CHECK(pole.steps == 0);

  BasinResult rep = basin_membership(m, fps, fps.x1_representative, 50);
  CHECK(rep.status == BasinStatus::Repeller);
  CHECK(rep.at_precision_caveat);

  // a point deep on the shell escapes and then falls into the basin
  PadicNumber x = fps.x1_representative + PadicNumber(p5, BigRat(p5.pow(14)));
  BasinResult shell = basin_membership(m, fps, x, 50);
  CHECK(shell.status == BasinStatus::InBasin);
  CHECK(shell.steps <= static_cast<unsigned>(shell.theoretical_step_bound));

  BasinResult tight = basin_membership(m, fps, x, 1);
  CHECK(tight.status == BasinStatus::BudgetExceeded);
}

TEST_CASE("region names") {
  CHECK(std::string(region_name(Region::A0)) == "A0");
  CHECK(std::string(region_name(Region::Singular)) == "Singular");
  CHECK(std::string(basin_status_name(BasinStatus::InBasin)) == "in-basin");
}

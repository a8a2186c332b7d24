#include "padicdyn/potts.hpp"

namespace padicdyn {

namespace {

PadicNumber rat_pow(const PadicNumber& x, unsigned k) {
  BigRat acc(1);
  BigRat v = x.value();
  for (unsigned i = 0; i < k; ++i) acc *= v;
  return PadicNumber(x.prime(), acc);
}

}  // namespace

ModelParams::ModelParams(Prime p, unsigned long q, PadicNumber theta, unsigned k)
    : p_(std::move(p)), q_(q), theta_(std::move(theta)), k_(k) {
  if (q_ < 2) throw HypothesisViolated("q must be at least 2");
  if (k_ < 1) throw HypothesisViolated("k must be at least 1");
  PadicNumber one(p_, 1);
  if (theta_ == one) throw HypothesisViolated("theta = 1 is excluded");
  if (!in_Ep(theta_)) throw HypothesisViolated("theta must lie in E_p");
}

PadicNumber ModelParams::x_infinity() const {
  return PadicNumber(p_, BigRat(2) - theta_.value() - BigRat(BigInt(q_)));
}

bool ModelParams::tier1() const {
  PadicNumber one(p_, 1);
  if ((theta_ - one).norm() >= Norm::one()) return false;
  if (q_padic().norm() >= Norm::one()) return false;
  PadicNumber rest = one - theta_ - q_padic();
  return !rest.is_zero();
}

bool ModelParams::tier2() const {
  if (!tier1()) return false;
  PadicNumber one(p_, 1);
  return (theta_ - one).norm() < q_padic().norm();
}

void ModelParams::require_tier1() const {
  if (!tier1()) {
    throw HypothesisViolated("need |theta-1| < 1, |q| < 1 and (theta-1)(1-theta-q) != 0");
  }
}

void ModelParams::require_tier2() const {
  require_tier1();
  if (!tier2()) throw HypothesisViolated("need |theta-1| < |q|");
}

void ModelParams::require_classification_regime() const {
  if (k_ != 3) throw HypothesisViolated("classification requires tree order k = 3");
  if (!p_.suitable_for_cubic_dynamics()) throw WrongResidueClassModThree();
}

unsigned ModelParams::q_val() const {
  PadicNumber qp = q_padic();
  if (qp.norm() >= Norm::one()) throw HypothesisViolated("q is a p-adic unit");
  return static_cast<unsigned>(qp.valuation());
}

BigInt ModelParams::q_unit() const { return q_padic().unit_num(); }

long ModelParams::theta_val() const {
  return (theta_ - PadicNumber(p_, 1)).valuation();
}

const char* fixed_point_class_name(FixedPointClass c) {
  switch (c) {
    case FixedPointClass::Attracting: return "attracting";
    case FixedPointClass::Indifferent: return "indifferent";
    case FixedPointClass::Repelling: return "repelling";
  }
  return "?";
}

const char* orbit_status_name(OrbitStatus s) {
  switch (s) {
    case OrbitStatus::FixedPoint: return "fixed-point";
    case OrbitStatus::AtRepeller: return "at-repeller";
    case OrbitStatus::ConvergedToA0: return "converged-to-A0";
    case OrbitStatus::Singular: return "singular";
    case OrbitStatus::BudgetExhausted: return "budget-exhausted";
  }
  return "?";
}

PadicNumber eval_map(const ModelParams& params, const PadicNumber& x) {
  PadicNumber denom = x - params.x_infinity();
  if (denom.is_zero()) throw SingularInput();
  BigRat g = params.theta().value() * x.value() + BigRat(BigInt(params.q())) - 1;
  return rat_pow(PadicNumber(params.p(), g / denom.value()), params.k());
}

PadicNumber eval_derivative(const ModelParams& params, const PadicNumber& x) {
  PadicNumber denom = x - params.x_infinity();
  if (denom.is_zero()) throw SingularInput();
  const BigRat th = params.theta().value();
  const BigRat qq(BigInt(params.q()));
  BigRat g = th * x.value() + qq - 1;
  BigRat h = denom.value();
  BigRat gk(1), hk(1);
  for (unsigned i = 0; i + 1 < params.k(); ++i) gk *= g;
  for (unsigned i = 0; i < params.k() + 1; ++i) hk *= h;
  BigRat d = BigRat(BigInt(params.k())) * (th - 1) * (th - 1 + qq) * gk / hk;
  return PadicNumber(params.p(), d);
}

Norm multiplier_at(const ModelParams& params, const FixedPointReport& fps, bool at_x0) {
  if (at_x0) return eval_derivative(params, params.x0()).norm();
  return eval_derivative(params, fps.x1_representative).norm();
}

std::tuple<Polynomial, Polynomial, Polynomial> fixed_point_cubics(const ModelParams& params) {
  params.require_tier1();
  const Prime& p = params.p();
  const BigRat th = params.theta().value();
  const BigRat qq(BigInt(params.q()));
  const BigRat r = 1 - th - qq;

  // x-form: (theta-1)(theta x+q-1)((theta+1)x+theta+2q-3) - (x+q-1)(x+theta+q-2)^2
  Polynomial lin1 = Polynomial::from_rationals(p, {qq - 1, th});
  Polynomial lin2 = Polynomial::from_rationals(p, {th + 2 * qq - 3, th + 1});
  Polynomial lin3 = Polynomial::from_rationals(p, {qq - 1, 1});
  Polynomial lin4 = Polynomial::from_rationals(p, {th + qq - 2, 1});
  Polynomial xform = (lin1 * lin2).scaled(PadicNumber(p, th - 1)) - lin3 * lin4 * lin4;

  // y-form: y^3 - (1+theta+theta^2)y^2 - (2theta+1)(1-theta-q)y - (1-theta-q)^2
  Polynomial yform = Polynomial::from_rationals(
      p, {-r * r, -(2 * th + 1) * r, -(1 + th + th * th), BigRat(1)});

  // z-form via z = y - 3
  BigRat A = 8 - th - th * th;
  BigRat B = 21 - 6 * th * (th + 1) - (2 * th + 1) * r;
  BigRat C = qq * (4 * th + 5) - (th - 1) * (4 * th + 14) - qq * qq;
  Polynomial zform = Polynomial::from_rationals(p, {C, B, A, BigRat(1)});

  return {xform, yform, zform};
}

Norm y1_distance_constant(const ModelParams& params) {
  const BigRat th = params.theta().value();
  const BigRat qq(BigInt(params.q()));
  BigRat C = qq * (4 * th + 5) - (th - 1) * (4 * th + 14) - qq * qq;
  return PadicNumber(params.p(), C).norm();
}

FixedPointReport find_fixed_points(const ModelParams& params, unsigned N) {
  params.require_tier1();
  params.require_classification_regime();
  const Prime& p = params.p();

  auto [xform, yform, zform] = fixed_point_cubics(params);
  (void)xform;
  (void)zform;

  // Hensel lift at residue 3; the root engine must agree that it is unique.
  RootCertificate y1 = hensel_lift(yform, 3, N);
  std::vector<RootCertificate> all = cubic_roots_Qp(yform, N);
  if (all.size() != 1) {
    throw Error("expected a unique root of the fixed-point cubic, found " +
                std::to_string(all.size()));
  }

  PadicNumber y1_rep = y1.representative(p);
  PadicNumber one(p, 1);
  PadicNumber x1 = one - params.q_padic() + (params.theta() - one) * (y1_rep - one);
  FixedPointReport report{y1, x1, N, Norm::zero(), Norm::zero(), Norm::zero(),
                          FixedPointClass::Indifferent, FixedPointClass::Indifferent,
                          std::nullopt};
  report.y1_minus_3_norm = (y1_rep - PadicNumber(p, 3)).norm();
  report.multiplier_x0 = eval_derivative(params, params.x0()).norm();
  report.multiplier_x1 = eval_derivative(params, report.x1_representative).norm();
  report.class_x0 = classify_fixed_point(report.multiplier_x0);
  report.class_x1 = classify_fixed_point(report.multiplier_x1);
  if (params.tier2()) {
    report.congruence = verify_corollary_congruence(params, report);
  }
  return report;
}

CongruenceCheck verify_corollary_congruence(const ModelParams& params,
                                            const FixedPointReport& fps) {
  params.require_tier2();
  const Prime& p = params.p();
  CongruenceCheck check;
  check.m = params.q_val();
  check.s0 = mod_reduce(-params.q_unit(), p.value());
  if (check.s0 == 0) check.s0 = p.value();  // unreachable: s is a unit

  BigInt modulus = p.pow(check.m + 1);
  BigInt y1_mod = fps.y1.residue_mod(check.m + 1, p);
  BigInt expected = mod_reduce(3 + check.s0 * p.pow(check.m), modulus);
  bool congruent = (y1_mod == expected);

  // equivalent form: |y1 - 3 + q| < |q|
  PadicNumber y1_rep = fps.y1.representative(p);
  PadicNumber residue = y1_rep - PadicNumber(p, 3) + params.q_padic();
  bool norm_form = residue.norm() < params.q_padic().norm();
  check.pass = congruent && norm_form;
  return check;
}

FixedPointClass classify_fixed_point(const Norm& multiplier) {
  if (multiplier < Norm::one()) return FixedPointClass::Attracting;
  if (multiplier == Norm::one()) return FixedPointClass::Indifferent;
  return FixedPointClass::Repelling;
}

OrbitResult orbit(const ModelParams& params, const PadicNumber& start, unsigned max_iter,
                  const FixedPointReport* fps) {
  OrbitResult result;
  PadicNumber x = start;
  result.trajectory.push_back(x);
  const PadicNumber pole = params.x_infinity();
  const bool track_a0 = params.tier1();
  const Norm q_norm = params.q_padic().norm();

  for (unsigned step = 0;; ++step) {
    if (x == pole) {
      result.status = OrbitStatus::Singular;
      return result;
    }
    if (x == params.x0()) {
      result.status = OrbitStatus::FixedPoint;
      return result;
    }
    if (fps) {
      Norm d = (x - fps->x1_representative).norm();
      long limit = static_cast<long>(fps->precision) - 2;
      if (d.is_zero || d <= Norm::power(-limit)) {
        result.status = OrbitStatus::AtRepeller;
        return result;
      }
    }
    if (track_a0 && (x - params.x0()).norm() < q_norm) {
      result.status = OrbitStatus::ConvergedToA0;
      return result;
    }
    if (step >= max_iter) {
      result.status = OrbitStatus::BudgetExhausted;
      return result;
    }
    x = eval_map(params, x);
    result.trajectory.push_back(x);
  }
}

}  // namespace padicdyn

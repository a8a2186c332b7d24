#pragma once

#include <optional>
#include <tuple>

#include "padicdyn/functions.hpp"
#include "padicdyn/roots.hpp"

namespace padicdyn {

/// Parameters of the Potts-Bethe map f(x) = ((theta*x + q - 1)/(x + theta + q - 2))^k.
/// theta must lie in E_p and differ from 1. theta == 1 - q is representable
/// (needed by the degenerate Gibbs case) but fails tier1.
class ModelParams {
 public:
  ModelParams(Prime p, unsigned long q, PadicNumber theta, unsigned k = 3);

  const Prime& p() const { return p_; }
  unsigned long q() const { return q_; }
  const PadicNumber& theta() const { return theta_; }
  unsigned k() const { return k_; }

  PadicNumber q_padic() const { return PadicNumber(p_, BigInt(q_)); }
  PadicNumber x0() const { return PadicNumber(p_, 1); }
  PadicNumber x_infinity() const;  // 2 - theta - q, the pole

  /// |theta - 1| < 1, |q| < 1 and (theta - 1)(1 - theta - q) != 0.
  bool tier1() const;
  /// tier1 and |theta - 1| < |q|.
  bool tier2() const;
  void require_tier1() const;
  void require_tier2() const;
  /// p >= 5, p == 2 (mod 3) and k == 3: the regime the classification covers.
  void require_classification_regime() const;

  /// Valuation m and unit s of q = p^m * s. Requires |q| < 1.
  unsigned q_val() const;
  BigInt q_unit() const;
  /// Valuation a of theta - 1 (theta != 1 enforced at construction).
  long theta_val() const;

 private:
  Prime p_;
  unsigned long q_;
  PadicNumber theta_;
  unsigned k_;
};

enum class FixedPointClass { Attracting, Indifferent, Repelling };
const char* fixed_point_class_name(FixedPointClass c);

/// Congruence data for the nontrivial root: y1 == 3 + s0 * p^m (mod p^(m+1)).
struct CongruenceCheck {
  BigInt s0;
  unsigned m = 0;
  bool pass = false;
};

struct FixedPointReport {
  RootCertificate y1;            // unique root of the cubic in y, == 3 (mod p)
  PadicNumber x1_representative; // 1 - q + (theta-1)*(y1 - 1), mod p^precision_x1
  unsigned precision = 0;        // precision of the y1 certificate
  Norm y1_minus_3_norm;          // |y1 - 3|, equal to the closed-form constant
  Norm multiplier_x0;
  Norm multiplier_x1;
  FixedPointClass class_x0 = FixedPointClass::Indifferent;
  FixedPointClass class_x1 = FixedPointClass::Indifferent;
  std::optional<CongruenceCheck> congruence;  // filled under tier2
};

/// One map evaluation; throws SingularInput at the pole.
PadicNumber eval_map(const ModelParams& params, const PadicNumber& x);

/// f'(x) in closed form k(theta-1)(theta-1+q)(theta x+q-1)^(k-1)/(x+theta+q-2)^(k+1).
PadicNumber eval_derivative(const ModelParams& params, const PadicNumber& x);

/// Multiplier norm at a fixed point (x0, or x1 through its certificate).
Norm multiplier_at(const ModelParams& params, const FixedPointReport& fps, bool at_x0);

/// The three equivalent fixed-point cubics: in x, in y = (x-1+q)/(theta-1)+1,
/// and in z = y - 3. Requires tier1.
std::tuple<Polynomial, Polynomial, Polynomial> fixed_point_cubics(const ModelParams& params);

/// |C| of the z-form cubic: the closed-form value of |y1 - 3|.
Norm y1_distance_constant(const ModelParams& params);

/// Fix{f} = {1, x1}; solves the y-cubic by Hensel lifting at residue 3 and
/// cross-checks uniqueness through the root engine.
FixedPointReport find_fixed_points(const ModelParams& params, unsigned N);

/// y1 == 3 + s0 p^m (mod p^(m+1)) with s0 == -s (mod p); requires tier2.
CongruenceCheck verify_corollary_congruence(const ModelParams& params,
                                            const FixedPointReport& fps);

FixedPointClass classify_fixed_point(const Norm& multiplier);

enum class OrbitStatus { FixedPoint, AtRepeller, ConvergedToA0, Singular, BudgetExhausted };
const char* orbit_status_name(OrbitStatus s);

struct OrbitResult {
  std::vector<PadicNumber> trajectory;  // includes the starting point
  OrbitStatus status = OrbitStatus::BudgetExhausted;
};

/// Iterates the map until a fixed point, entry into the contracting ball A0,
/// the pole, or budget exhaustion. fps (when given) enables repeller detection
/// at certificate precision.
OrbitResult orbit(const ModelParams& params, const PadicNumber& start, unsigned max_iter,
                  const FixedPointReport* fps = nullptr);

}  // namespace padicdyn

#pragma once

#include <vector>

#include "padicdyn/padic.hpp"

namespace padicdyn {

/// Dense polynomial over Q_p with exact rational coefficients.
class Polynomial {
 public:
  explicit Polynomial(Prime p) : p_(std::move(p)) {}
  Polynomial(Prime p, std::vector<PadicNumber> coeffs);
  static Polynomial from_rationals(const Prime& p, const std::vector<BigRat>& coeffs);

  const Prime& prime() const { return p_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  PadicNumber coeff(std::size_t i) const;
  const std::vector<PadicNumber>& coeffs() const { return coeffs_; }

  PadicNumber evaluate(const PadicNumber& x) const;
  BigRat evaluate(const BigRat& x) const;
  /// f(r) mod p^k for an integer residue; coefficients must be p-adic integers.
  BigInt evaluate_mod(const BigInt& r, const BigInt& pk) const;

  Polynomial derivative() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(const PadicNumber& c) const;

  /// Substitution x -> p^v * t, then division by p^(min coefficient valuation),
  /// yielding integral coefficients with content valuation 0.
  Polynomial rescale_variable(long v) const;

  /// Synthetic division by (x - r); remainder must be exactly zero.
  Polynomial deflate(const BigRat& root) const;

  std::vector<BigRat> rational_coeffs() const;

 private:
  void trim();
  Prime p_;
  std::vector<PadicNumber> coeffs_;  // coeffs_[i] multiplies x^i; back() != 0
};

struct NewtonPolygonSegment {
  BigRat slope;      // hull slope; the roots on this segment have valuation -slope
  unsigned length;   // number of roots (with multiplicity)
};

/// Lower convex hull of {(i, val(a_i)) : a_i != 0}. Slopes weakly increasing.
std::vector<NewtonPolygonSegment> newton_polygon(const Polynomial& f);

/// Monic gcd over Q; detects rational multiple factors exactly.
Polynomial poly_gcd_rational(const Polynomial& a, const Polynomial& b);

}  // namespace padicdyn

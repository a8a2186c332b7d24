#pragma once

#include <compare>
#include <vector>

#include "padicdyn/prime.hpp"

namespace padicdyn {

/// Exact non-Archimedean norm value: either 0 or an integer power p^exp.
/// Kept symbolic so all norm comparisons and products are exact.
struct Norm {
  bool is_zero = true;
  long exp = 0;  // value is p^exp when !is_zero

  static Norm zero() { return Norm{true, 0}; }
  static Norm one() { return Norm{false, 0}; }
  static Norm power(long e) { return Norm{false, e}; }

  Norm operator*(const Norm& o) const {
    if (is_zero || o.is_zero) return zero();
    return power(exp + o.exp);
  }
  Norm operator/(const Norm& o) const {
    if (o.is_zero) throw DivisionByZero();
    if (is_zero) return zero();
    return power(exp - o.exp);
  }
  Norm pow(long k) const {
    if (is_zero) return zero();
    return power(exp * k);
  }

  friend bool operator==(const Norm& a, const Norm& b) {
    if (a.is_zero || b.is_zero) return a.is_zero == b.is_zero;
    return a.exp == b.exp;
  }
  friend std::strong_ordering operator<=>(const Norm& a, const Norm& b) {
    if (a.is_zero && b.is_zero) return std::strong_ordering::equal;
    if (a.is_zero) return std::strong_ordering::less;
    if (b.is_zero) return std::strong_ordering::greater;
    return a.exp <=> b.exp;
  }
};

enum class DomainClass { UnitSphere, MaximalIdeal, OutsideIntegers, Zero };

struct DigitExpansion {
  long valuation = 0;
  std::vector<BigInt> digits;  // base-p, digits[0] != 0 for nonzero numbers

  /// p^valuation * sum digits[i] p^i as an exact rational.
  BigRat reconstruct(const Prime& p) const;
};

/// Exact element of Q_p: a distinguished zero, or p^valuation * unit_num/unit_den
/// with unit_num/unit_den in Z_p^* (both coprime to p, fraction reduced, den > 0).
class PadicNumber {
 public:
  explicit PadicNumber(Prime p) : p_(std::move(p)) {}
  PadicNumber(Prime p, const BigRat& value);
  PadicNumber(Prime p, const BigInt& value);
  PadicNumber(Prime p, long value);

  /// Assemble from unit decomposition; unit_num/unit_den must be a unit.
  static PadicNumber from_unit(Prime p, long valuation, BigInt unit_num, BigInt unit_den);

  const Prime& prime() const { return p_; }
  bool is_zero() const { return zero_; }

  /// p-order of a nonzero value; zero is handled by callers via is_zero().
  long valuation() const;
  Norm norm() const;

  const BigInt& unit_num() const { return unum_; }
  const BigInt& unit_den() const { return uden_; }
  BigRat value() const;

  PadicNumber operator+(const PadicNumber& o) const;
  PadicNumber operator-(const PadicNumber& o) const;
  PadicNumber operator*(const PadicNumber& o) const;
  PadicNumber operator/(const PadicNumber& o) const;
  PadicNumber operator-() const;
  bool operator==(const PadicNumber& o) const;
  bool operator!=(const PadicNumber& o) const { return !(*this == o); }

  DomainClass classify() const;

  /// Canonical digit expansion d0...d_{N-1}; throws ZeroHasNoExpansion for 0.
  DigitExpansion digits(unsigned N) const;

  /// Canonical representative in [0, p^N) of a p-adic integer (valuation >= 0).
  BigInt residue_mod(unsigned N) const;

  /// The representative above as a PadicNumber (== *this mod p^N).
  PadicNumber reduced_mod(unsigned N) const;

 private:
  Prime p_;
  bool zero_ = true;
  long val_ = 0;
  BigInt unum_ = 0;
  BigInt uden_ = 1;
};

inline Norm norm(const PadicNumber& x) { return x.norm(); }

struct PadicBall {
  PadicNumber center;
  long radius_exponent;  // radius p^(-r)
  bool strict = true;    // |x - c| < p^(-r) when strict, <= otherwise

  bool contains(const PadicNumber& x) const {
    Norm d = (x - center).norm();
    Norm r = Norm::power(-radius_exponent);
    return strict ? d < r : d <= r;
  }
};

}  // namespace padicdyn

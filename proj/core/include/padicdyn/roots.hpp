#pragma once

#include <optional>
#include <vector>

#include "padicdyn/polynomial.hpp"

namespace padicdyn {

/// Certified root of a polynomial over Q_p: known to the stated precision,
/// with the unit decomposition root = p^valuation * unit.
struct RootCertificate {
  long valuation = 0;
  BigInt unit_residue;       // unit part mod p^precision, in [0, p^precision)
  unsigned precision = 0;    // digits of the unit part that are certified
  BigInt initial_residue;    // root mod p (unit residue mod p when valuation < 0)
  bool simple = true;        // f'(y0) != 0 mod p at the initial residue
  unsigned multiplicity = 1;
  DomainClass region = DomainClass::UnitSphere;
  std::optional<BigRat> exact;  // set when the root divides f exactly over Q

  PadicNumber representative(const Prime& p) const;
  /// Root mod p^k for integral roots (valuation >= 0), k <= precision.
  BigInt residue_mod(unsigned k, const Prime& p) const;
};

/// Euler criterion, mapped to +1 / -1. Requires p odd and p coprime to a.
int legendre_symbol(const BigInt& a, const Prime& p);

/// True iff d is a square in Q_p (p odd): even valuation and unit part a
/// quadratic residue. Zero counts as a square.
bool sqrt_exists(const PadicNumber& d);

/// Square root of d to unit precision N (Tonelli-Shanks mod p, then Hensel).
/// Empty when no square root exists.
std::optional<PadicNumber> padic_sqrt(const PadicNumber& d, unsigned N);

/// Lift a simple root mod p to precision N by Newton iteration.
/// Coefficients must be p-adic integers. Throws NotARootModP / SingularRootModP.
/// When trace is given, it receives val(f(y_i)) after each iteration.
RootCertificate hensel_lift(const Polynomial& f, const BigInt& y0, unsigned N,
                            std::vector<long>* trace = nullptr);

/// Exhaustive residue scan: all r mod p^k with f(r) == 0 mod p^k.
/// Enumeration budget guards p^k; exceeding it throws BudgetExceeded.
std::vector<BigInt> roots_mod_pk(const Polynomial& f, unsigned k,
                                 std::uint64_t budget = 10'000'000);

/// All roots of f in Q_p (degree <= 3) as certificates at precision N.
/// Rational multiple factors are split off exactly via gcd(f, f'); remaining
/// residues are located through the Newton polygon and Hensel lifting, with a
/// quadratic-residue decision (sqrt_exists) for quadratic factors.
/// Throws UnresolvedMultipleRoot if a singular residue cannot be certified.
std::vector<RootCertificate> roots_Qp(const Polynomial& f, unsigned N);

/// roots_Qp restricted to degree exactly 3.
std::vector<RootCertificate> cubic_roots_Qp(const Polynomial& f, unsigned N);

/// Norm of the unique small root of a monic cubic z^3 + Az^2 + Bz + C with
/// |A| = |B| = 1 and |C| < 1: equals |C|/|B|. Throws HypothesisViolated.
Norm root_norm_estimate(const Polynomial& f);

}  // namespace padicdyn

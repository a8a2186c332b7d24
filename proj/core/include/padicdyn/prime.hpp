#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "padicdyn/errors.hpp"

namespace padicdyn {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// a^e mod m, m > 0.
BigInt mod_pow(BigInt a, BigInt e, const BigInt& m);

/// Inverse of a mod m via extended Euclid; throws NotAUnit if gcd(a, m) != 1.
BigInt mod_inv(const BigInt& a, const BigInt& m);

/// Canonical representative of a mod m in [0, m).
BigInt mod_reduce(const BigInt& a, const BigInt& m);

/// A certified prime modulus. Deterministic Miller-Rabin for 64-bit inputs;
/// larger inputs are accepted with probabilistic certification only.
class Prime {
 public:
  explicit Prime(BigInt p);

  const BigInt& value() const { return p_; }
  int residue_class_mod_3() const { return mod3_; }
  bool certified_deterministically() const { return deterministic_; }

  /// True iff p >= 5 and p == 2 (mod 3): the regime where the cubic map
  /// has the unique nontrivial fixed point this library classifies.
  bool suitable_for_cubic_dynamics() const { return p_ >= 5 && mod3_ == 2; }

  bool operator==(const Prime& o) const { return p_ == o.p_; }
  bool operator!=(const Prime& o) const { return p_ != o.p_; }

  /// p^k for k >= 0.
  BigInt pow(unsigned k) const;

 private:
  BigInt p_;
  int mod3_ = 0;
  bool deterministic_ = true;
};

/// Miller-Rabin primality check; deterministic for n < 2^64.
bool is_prime(const BigInt& n, bool* deterministic = nullptr);

}  // namespace padicdyn

#include "padicdyn/prime.hpp"

#include <array>

namespace padicdyn {

BigInt mod_pow(BigInt a, BigInt e, const BigInt& m) {
  a = mod_reduce(a, m);
  BigInt r = 1;
  while (e > 0) {
    if ((e & 1) != 0) r = (r * a) % m;
    a = (a * a) % m;
    e >>= 1;
  }
  return r;
}

BigInt mod_inv(const BigInt& a, const BigInt& m) {
  BigInt r0 = m, r1 = mod_reduce(a, m);
  BigInt t0 = 0, t1 = 1;
  while (r1 != 0) {
    BigInt quot = r0 / r1;
    BigInt r2 = r0 - quot * r1;
    BigInt t2 = t0 - quot * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) throw NotAUnit("no inverse mod m");
  return mod_reduce(t0, m);
}

BigInt mod_reduce(const BigInt& a, const BigInt& m) {
  BigInt r = a % m;
  if (r < 0) r += m;
  return r;
}

namespace {

bool miller_rabin_witness(const BigInt& n, const BigInt& a, const BigInt& d, unsigned s) {
  BigInt x = mod_pow(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;  // a witnesses compositeness
}

}  // namespace

bool is_prime(const BigInt& n, bool* deterministic) {
  if (deterministic) *deterministic = true;
  if (n < 2) return false;
  for (int small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n == small) return true;
    if (n % small == 0) return false;
  }
  BigInt d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for n < 2^64 (Sorenson-Webster).
  static const std::array<int, 12> witnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  const bool in_deterministic_range = n < (BigInt(1) << 64);
  if (deterministic) *deterministic = in_deterministic_range;
  for (int a : witnesses) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

Prime::Prime(BigInt p) : p_(std::move(p)) {
  bool det = true;
  if (!is_prime(p_, &det)) {
    throw Error("not a prime: " + p_.str());
  }
  deterministic_ = det;
  mod3_ = static_cast<int>(p_ % 3);
}

BigInt Prime::pow(unsigned k) const {
  BigInt r = 1;
  for (unsigned i = 0; i < k; ++i) r *= p_;
  return r;
}

}  // namespace padicdyn

#include "padicdyn/functions.hpp"

namespace padicdyn {

long factorial_valuation(unsigned long n, const BigInt& p) {
  long v = 0;
  BigInt pk = p;
  while (pk <= n) {
    v += static_cast<long>(BigInt(n) / pk);
    pk *= p;
  }
  return v;
}

bool in_exp_domain(const PadicNumber& x) {
  if (x.is_zero()) return true;
  return x.valuation() >= 1;
}

bool in_log_domain(const PadicNumber& x) {
  PadicNumber one(x.prime(), 1);
  return (x - one).norm() < Norm::one();
}

bool in_Ep(const PadicNumber& x) { return in_log_domain(x); }

PadicNumber exp_p(const PadicNumber& x, unsigned N) {
  if (!in_exp_domain(x)) {
    throw OutsideConvergenceDomain("exp_p requires |x|_p <= p^-1");
  }
  const Prime& p = x.prime();
  if (x.is_zero()) return PadicNumber(p, 1);

  const long vx = x.valuation();
  const BigRat xv = x.value();
  // Term n has valuation n*vx - v_p(n!) >= n*(vx - 1/(p-1)); keep terms while
  // the lower bound is below N.
  BigRat sum(1);
  BigRat term(1);
  unsigned long n = 0;
  while (true) {
    ++n;
    // lower bound check: n*(vx*(p-1) - 1) >= N*(p-1) means term n and all
    // later terms vanish mod p^N
    if (BigInt(n) * (vx * (p.value() - 1) - 1) >= BigInt(N) * (p.value() - 1)) break;
    term *= xv;
    term /= BigRat(n);
    sum += term;
  }
  return PadicNumber(p, sum).reduced_mod(N);
}

PadicNumber log_p(const PadicNumber& x, unsigned N) {
  const Prime& p = x.prime();
  PadicNumber one(p, 1);
  PadicNumber t = x - one;
  if (t.is_zero()) return PadicNumber(p);
  if (t.norm() >= Norm::one()) {
    throw OutsideConvergenceDomain("log_p requires |x-1|_p < 1");
  }

  const long vt = t.valuation();
  const BigRat tv = t.value();
  // Term n has valuation n*vt - v_p(n) >= n*vt - log2(n); stop once that
  // increasing lower bound reaches N.
  BigRat sum(0);
  BigRat power(1);
  unsigned long n = 0;
  while (true) {
    ++n;
    long bits = 0;
    for (unsigned long m = n; m > 0; m >>= 1) ++bits;
    if (static_cast<long>(n) * vt - bits >= static_cast<long>(N) && n > 1) break;
    power *= tv;
    BigRat term = power / BigRat(n);
    if (n % 2 == 0) term = -term;
    sum += term;
  }
  return PadicNumber(p, sum).reduced_mod(N);
}

PadicNumber theta_from_J(const PadicNumber& J, unsigned N) { return exp_p(J, N); }

}  // namespace padicdyn

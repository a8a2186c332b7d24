#include <doctest.h>

#include <random>

#include "padicdyn/functions.hpp"

using namespace padicdyn;

namespace {
const Prime p5{BigInt(5)};

// independent oracle: v_p(n!) by summing v_p(i)
long factorial_valuation_naive(unsigned long n, long p) {
  long total = 0;
  for (unsigned long i = 2; i <= n; ++i) {
    unsigned long m = i;
    while (m % static_cast<unsigned long>(p) == 0) {
      ++total;
      m /= static_cast<unsigned long>(p);
    }
  }
  return total;
}

// independent oracle: partial exponential sum as an exact rational
BigRat exp_partial_sum(const BigRat& x, unsigned terms) {
  BigRat sum(1), term(1);
  for (unsigned n = 1; n <= terms; ++n) {
    term = term * x / BigRat(BigInt(n));
    sum += term;
  }
  return sum;
}
}  // namespace

TEST_CASE("factorial valuation matches the naive count") {
  for (unsigned long n : {0ul, 1ul, 5ul, 24ul, 25ul, 26ul, 100ul, 624ul, 625ul}) {
    CHECK(factorial_valuation(n, BigInt(5)) == factorial_valuation_naive(n, 5));
    CHECK(factorial_valuation(n, BigInt(11)) == factorial_valuation_naive(n, 11));
  }
}

TEST_CASE("convergence domains") {
  CHECK(in_exp_domain(PadicNumber(p5, 5)));
  CHECK(in_exp_domain(PadicNumber(p5, 0)));
  CHECK(!in_exp_domain(PadicNumber(p5, 1)));
  CHECK(in_log_domain(PadicNumber(p5, 26)));
  CHECK(!in_log_domain(PadicNumber(p5, 2)));
  CHECK(in_Ep(PadicNumber(p5, BigRat(1 + 25))));
  CHECK(!in_Ep(PadicNumber(p5, 3)));
  CHECK_THROWS_AS(exp_p(PadicNumber(p5, 1), 8), OutsideConvergenceDomain);
  CHECK_THROWS_AS(log_p(PadicNumber(p5, 2), 8), OutsideConvergenceDomain);
}

TEST_CASE("exp_p agrees with a long partial sum mod p^N") {
  const unsigned N = 12;
  PadicNumber x(p5, 25);
  PadicNumber e = exp_p(x, N);
  // 40 terms is far beyond the cutoff needed for N = 12 at valuation 2
  PadicNumber oracle(p5, exp_partial_sum(BigRat(25), 40));
  PadicNumber diff = e - oracle;
  CHECK((diff.is_zero() || diff.valuation() >= N));
}

TEST_CASE("norm identities of exp and log") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 60; ++i) {
    long v = 1 + static_cast<long>(rng() % 3);
    BigInt u = BigInt(rng() % 500) + 1;
    if (u % 5 == 0) ++u;
    PadicNumber x(p5, BigRat(BigInt(25) * u, BigInt(1)) / BigRat(BigInt(v * v)));
    if (!in_exp_domain(x) || x.is_zero()) continue;
    PadicNumber ex = exp_p(x, 20);
    CHECK((ex - PadicNumber(p5, 1)).norm() == x.norm());  // |exp(x) - 1| = |x|
    PadicNumber lx = log_p(ex, 20);
    PadicNumber diff = lx - x;
    CHECK((diff.is_zero() || diff.valuation() >= 20));  // log(exp x) == x
  }
}

TEST_CASE("exp turns sums into products mod p^N") {
  const unsigned N = 14;
  PadicNumber a(p5, 25), b(p5, 75);
  PadicNumber lhs = exp_p(a + b, N);
  PadicNumber rhs = exp_p(a, N + 2) * exp_p(b, N + 2);
  PadicNumber diff = lhs - rhs;
  CHECK((diff.is_zero() || diff.valuation() >= N));
}

TEST_CASE("log turns products into sums mod p^N") {
  const unsigned N = 14;
  PadicNumber a(p5, 26), b(p5, BigRat(1 + 50));
  PadicNumber lhs = log_p(a * b, N);
  PadicNumber rhs = log_p(a, N + 2) + log_p(b, N + 2);
  PadicNumber diff = lhs - rhs;
  CHECK((diff.is_zero() || diff.valuation() >= N));
}

TEST_CASE("theta_from_J lands in E_p with |theta - 1| = |J|") {
  PadicNumber J(p5, 25);
  PadicNumber theta = theta_from_J(J, 16);
  CHECK(in_Ep(theta));
  CHECK((theta - PadicNumber(p5, 1)).norm() == J.norm());
  CHECK(exp_p(PadicNumber(p5, 0), 8) == PadicNumber(p5, 1));
}

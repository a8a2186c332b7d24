#include <doctest.h>

#include <set>

#include "padicdyn/roots.hpp"

using namespace padicdyn;

namespace {
const Prime p5{BigInt(5)};
const Prime p11{BigInt(11)};

Polynomial make(const Prime& p, const std::vector<BigRat>& c) {
  return Polynomial::from_rationals(p, c);
}

// oracle: brute-force f(r) mod p^k over all residues
std::set<BigInt> brute_roots(const Polynomial& f, unsigned k) {
  BigInt pk = f.prime().pow(k);
  std::set<BigInt> out;
  for (BigInt r = 0; r < pk; ++r) {
    if (f.evaluate_mod(r, pk) == 0) out.insert(r);
  }
  return out;
}
}  // namespace

TEST_CASE("legendre symbol matches square enumeration") {
  for (const Prime& p : {p5, p11}) {
    std::set<BigInt> squares;
    for (BigInt a = 1; a < p.value(); ++a) squares.insert(mod_reduce(a * a, p.value()));
    for (BigInt a = 1; a < p.value(); ++a) {
      int expect = squares.count(a) ? 1 : -1;
      CHECK(legendre_symbol(a, p) == expect);
    }
  }
}

TEST_CASE("p-adic square roots") {
  // 6 is a QR mod 5 (1*1=1, 4*4=16=1, ... 6 == 1); sqrt(6) exists in Q_5
  PadicNumber six(p5, 6);
  CHECK(sqrt_exists(six));
  auto r = padic_sqrt(six, 12);
  REQUIRE(r.has_value());
  PadicNumber diff = (*r) * (*r) - six;
  CHECK((diff.is_zero() || diff.valuation() >= 12));

  CHECK(!sqrt_exists(PadicNumber(p5, 2)));          // 2 is not a QR mod 5
  CHECK(!sqrt_exists(PadicNumber(p5, 5)));          // odd valuation
  CHECK(sqrt_exists(PadicNumber(p5, 25)));
  CHECK(sqrt_exists(PadicNumber(p5, 0)));
  CHECK(padic_sqrt(PadicNumber(p5, 9), 10).has_value());
}

TEST_CASE("hensel lifting against the residue scan") {
  Polynomial f = make(p5, {-6, 0, 1});  // x^2 - 6, roots == 1, 4 mod 5
  RootCertificate r = hensel_lift(f, 1, 6);
  CHECK(r.valuation == 0);
  CHECK(r.simple);
  std::set<BigInt> mod_roots = brute_roots(f, 4);
  CHECK(mod_roots.count(r.residue_mod(4, p5)) == 1);

  CHECK_THROWS_AS(hensel_lift(f, 2, 6), NotARootModP);
  Polynomial sq = make(p5, {0, 0, 1});  // x^2: singular at 0
  CHECK_THROWS_AS(hensel_lift(sq, 0, 6), SingularRootModP);
}

TEST_CASE("hensel trace shows quadratic convergence") {
  Polynomial f = make(p5, {-6, 0, 1});
  std::vector<long> trace;
  hensel_lift(f, 1, 32, &trace);
  REQUIRE(trace.size() >= 2);
  // precision doubles per iteration, so val(f(y_i)) climbs past 2^i up to N
  for (std::size_t i = 1; i < trace.size(); ++i) {
    CHECK(trace[i] > trace[i - 1]);
    CHECK(trace[i] >= std::min(1L << i, 32L));
  }
  CHECK(trace.back() >= 32);
}

TEST_CASE("roots_mod_pk equals brute force") {
  Polynomial f = make(p5, {-1, 0, 0, 1});  // x^3 - 1
  for (unsigned k : {1u, 2u, 3u}) {
    auto got = roots_mod_pk(f, k);
    std::set<BigInt> expect = brute_roots(f, k);
    CHECK(std::set<BigInt>(got.begin(), got.end()) == expect);
  }
  CHECK_THROWS_AS(roots_mod_pk(f, 30), BudgetExceeded);
}

TEST_CASE("roots in Q_p: split rational and lifted roots") {
  // (x - 1)(x - 5)(x + 1/5) has roots at valuations 0, 1, -1
  Polynomial g = make(p5, {-1, 1}) * make(p5, {-5, 1}) * make(p5, {BigRat(1, 5), 1});
  auto roots = roots_Qp(g, 12);
  REQUIRE(roots.size() == 3);
  std::multiset<long> vals;
  for (const auto& r : roots) vals.insert(r.valuation);
  CHECK(vals == std::multiset<long>({-1, 0, 1}));
}

TEST_CASE("quadratic with no roots yields the empty set") {
  Polynomial f = make(p5, {-2, 0, 1});  // x^2 - 2, 2 not a QR mod 5
  CHECK(roots_Qp(f, 10).empty());
}

TEST_CASE("multiple rational roots carry multiplicity") {
  Polynomial f = make(p5, {8, -15, 6, 1});  // (x-1)^2 (x+8)
  auto roots = roots_Qp(f, 10);
  REQUIRE(roots.size() == 2);
  bool saw_double = false, saw_simple = false;
  for (const auto& r : roots) {
    REQUIRE(r.exact.has_value());
    if (*r.exact == 1) {
      CHECK(r.multiplicity == 2);
      saw_double = true;
    }
    if (*r.exact == -8) {
      CHECK(r.multiplicity == 1);
      saw_simple = true;
    }
  }
  CHECK(saw_double);
  CHECK(saw_simple);
}

TEST_CASE("cubic root residues agree with the mod p^k scan") {
  // y^3 - 703y^2 + 1590y - 900 over Q_5: unique root, residue 3 mod 5
  Polynomial f = make(p5, {-900, 1590, -703, 1});
  auto roots = cubic_roots_Qp(f, 8);
  REQUIRE(roots.size() == 1);
  CHECK(roots[0].initial_residue == 3);
  auto scan = roots_mod_pk(f, 4);
  BigInt res4 = roots[0].residue_mod(4, p5);
  bool found = false;
  for (const BigInt& r : scan) {
    if (r == res4) found = true;
  }
  CHECK(found);
  CHECK_THROWS_AS(cubic_roots_Qp(make(p5, {1, 1}), 8), HypothesisViolated);
}

TEST_CASE("small-root norm of a monic cubic") {
  Polynomial f = make(p5, {-2430, -2601, -694, 1});
  CHECK(root_norm_estimate(f) == Norm::power(-1));
  Polynomial bad = make(p5, {-2430, -2601, -695, 1});  // |A| < 1 breaks the shape
  CHECK_THROWS_AS(root_norm_estimate(bad), HypothesisViolated);
}

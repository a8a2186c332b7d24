#include "padicdyn/padic.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace padicdyn {

namespace {

// Strips all factors of p from n (n != 0); returns the number stripped.
long strip_p(BigInt& n, const BigInt& p) {
  long count = 0;
  while (n % p == 0) {
    n /= p;
    ++count;
  }
  return count;
}

}  // namespace

BigRat DigitExpansion::reconstruct(const Prime& p) const {
  BigInt acc = 0;
  BigInt scale = 1;
  for (const BigInt& d : digits) {
    acc += d * scale;
    scale *= p.value();
  }
  BigRat r(acc);
  if (valuation >= 0) {
    r *= BigRat(p.pow(static_cast<unsigned>(valuation)));
  } else {
    r /= BigRat(p.pow(static_cast<unsigned>(-valuation)));
  }
  return r;
}

PadicNumber::PadicNumber(Prime p, const BigRat& value) : p_(std::move(p)) {
  if (value == 0) return;
  BigInt num = boost::multiprecision::numerator(value);
  BigInt den = boost::multiprecision::denominator(value);  // den > 0, reduced
  zero_ = false;
  val_ = strip_p(num, p_.value()) - strip_p(den, p_.value());
  unum_ = num;
  uden_ = den;
}

PadicNumber::PadicNumber(Prime p, const BigInt& value)
    : PadicNumber(std::move(p), BigRat(value)) {}

PadicNumber::PadicNumber(Prime p, long value)
    : PadicNumber(std::move(p), BigRat(value)) {}

PadicNumber PadicNumber::from_unit(Prime p, long valuation, BigInt unit_num, BigInt unit_den) {
  if (unit_num == 0) throw Error("unit part cannot be zero");
  if (unit_num % p.value() == 0 || unit_den % p.value() == 0) {
    throw NotAUnit("unit part divisible by p");
  }
  BigRat u(unit_num, unit_den);
  PadicNumber r(std::move(p), u);
  r.val_ += valuation;
  return r;
}

long PadicNumber::valuation() const {
  if (zero_) throw Error("zero has no finite valuation");
  return val_;
}

Norm PadicNumber::norm() const {
  if (zero_) return Norm::zero();
  return Norm::power(-val_);
}

BigRat PadicNumber::value() const {
  if (zero_) return BigRat(0);
  BigRat u(unum_, uden_);
  if (val_ >= 0) {
    u *= BigRat(p_.pow(static_cast<unsigned>(val_)));
  } else {
    u /= BigRat(p_.pow(static_cast<unsigned>(-val_)));
  }
  return u;
}

PadicNumber PadicNumber::operator+(const PadicNumber& o) const {
  return PadicNumber(p_, value() + o.value());
}

PadicNumber PadicNumber::operator-(const PadicNumber& o) const {
  return PadicNumber(p_, value() - o.value());
}

PadicNumber PadicNumber::operator*(const PadicNumber& o) const {
  return PadicNumber(p_, value() * o.value());
}

PadicNumber PadicNumber::operator/(const PadicNumber& o) const {
  if (o.zero_) throw DivisionByZero();
  return PadicNumber(p_, value() / o.value());
}

PadicNumber PadicNumber::operator-() const {
  PadicNumber r(*this);
  if (!r.zero_) r.unum_ = -r.unum_;
  return r;
}

bool PadicNumber::operator==(const PadicNumber& o) const {
  if (zero_ || o.zero_) return zero_ == o.zero_;
  return val_ == o.val_ && unum_ == o.unum_ && uden_ == o.uden_;
}

DomainClass PadicNumber::classify() const {
  if (zero_) return DomainClass::Zero;
  if (val_ == 0) return DomainClass::UnitSphere;
  if (val_ > 0) return DomainClass::MaximalIdeal;
  return DomainClass::OutsideIntegers;
}

DigitExpansion PadicNumber::digits(unsigned N) const {
  if (zero_) throw ZeroHasNoExpansion();
  const BigInt pk = p_.pow(N);
  BigInt u = mod_reduce(unum_ * mod_inv(uden_, pk), pk);
  DigitExpansion exp;
  exp.valuation = val_;
  exp.digits.reserve(N);
  for (unsigned i = 0; i < N; ++i) {
    exp.digits.push_back(u % p_.value());
    u /= p_.value();
  }
  return exp;
}

BigInt PadicNumber::residue_mod(unsigned N) const {
  if (zero_) return 0;
  if (val_ < 0) throw Error("residue_mod requires a p-adic integer");
  const unsigned v = static_cast<unsigned>(val_);
  if (v >= N) return 0;
  const BigInt pk = p_.pow(N - v);
  BigInt u = mod_reduce(unum_ * mod_inv(uden_, pk), pk);
  return u * p_.pow(v);
}

PadicNumber PadicNumber::reduced_mod(unsigned N) const {
  return PadicNumber(p_, residue_mod(N));
}

}  // namespace padicdyn

#include "padicdyn/polynomial.hpp"

#include <algorithm>

namespace padicdyn {

Polynomial::Polynomial(Prime p, std::vector<PadicNumber> coeffs)
    : p_(std::move(p)), coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::from_rationals(const Prime& p, const std::vector<BigRat>& coeffs) {
  std::vector<PadicNumber> c;
  c.reserve(coeffs.size());
  for (const BigRat& r : coeffs) c.emplace_back(p, r);
  return Polynomial(p, std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

PadicNumber Polynomial::coeff(std::size_t i) const {
  if (i < coeffs_.size()) return coeffs_[i];
  return PadicNumber(p_);
}

PadicNumber Polynomial::evaluate(const PadicNumber& x) const {
  return PadicNumber(p_, evaluate(x.value()));
}

BigRat Polynomial::evaluate(const BigRat& x) const {
  BigRat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * x + it->value();
  }
  return acc;
}

BigInt Polynomial::evaluate_mod(const BigInt& r, const BigInt& pk) const {
  // Reduce each coefficient, then Horner mod pk.
  BigInt acc = 0;
  std::vector<BigInt> cres(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const PadicNumber& c = coeffs_[i];
    if (c.is_zero()) {
      cres[i] = 0;
      continue;
    }
    if (c.valuation() < 0) throw Error("evaluate_mod requires integral coefficients");
    BigInt u = mod_reduce(c.unit_num() * mod_inv(c.unit_den(), pk), pk);
    BigInt scale = 1;
    for (long j = 0; j < c.valuation(); ++j) scale = (scale * p_.value()) % pk;
    cres[i] = (u * scale) % pk;
  }
  for (auto it = cres.rbegin(); it != cres.rend(); ++it) {
    acc = (acc * mod_reduce(r, pk) + *it) % pk;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  std::vector<PadicNumber> c;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    c.push_back(coeffs_[i] * PadicNumber(p_, BigInt(i)));
  }
  return Polynomial(p_, std::move(c));
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<PadicNumber> c;
  std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) c.push_back(coeff(i) + o.coeff(i));
  return Polynomial(p_, std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<PadicNumber> c;
  std::size_t n = std::max(coeffs_.size(), o.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) c.push_back(coeff(i) - o.coeff(i));
  return Polynomial(p_, std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return Polynomial(p_);
  std::vector<PadicNumber> c(coeffs_.size() + o.coeffs_.size() - 1, PadicNumber(p_));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      c[i + j] = c[i + j] + coeffs_[i] * o.coeffs_[j];
    }
  }
  return Polynomial(p_, std::move(c));
}

Polynomial Polynomial::scaled(const PadicNumber& c) const {
  std::vector<PadicNumber> out;
  out.reserve(coeffs_.size());
  for (const PadicNumber& a : coeffs_) out.push_back(a * c);
  return Polynomial(p_, std::move(out));
}

Polynomial Polynomial::rescale_variable(long v) const {
  if (is_zero()) return *this;
  BigRat pv = (v >= 0) ? BigRat(p_.pow(static_cast<unsigned>(v)))
                       : BigRat(1, p_.pow(static_cast<unsigned>(-v)));
  std::vector<PadicNumber> c;
  BigRat scale(1);
  long minval = 0;
  bool have_min = false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    PadicNumber ci(p_, coeffs_[i].value() * scale);
    c.push_back(ci);
    scale *= pv;
    if (!ci.is_zero() && (!have_min || ci.valuation() < minval)) {
      minval = ci.valuation();
      have_min = true;
    }
  }
  BigRat unscale = (minval >= 0) ? BigRat(1, p_.pow(static_cast<unsigned>(minval)))
                                 : BigRat(p_.pow(static_cast<unsigned>(-minval)));
  for (PadicNumber& ci : c) ci = PadicNumber(p_, ci.value() * unscale);
  return Polynomial(p_, std::move(c));
}

Polynomial Polynomial::deflate(const BigRat& root) const {
  if (degree() < 1) throw Error("cannot deflate a constant");
  std::vector<BigRat> out(coeffs_.size() - 1);
  BigRat carry = coeffs_.back().value();
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) {
    out[i] = carry;
    carry = coeffs_[i].value() + carry * root;
  }
  if (carry != 0) throw Error("deflate: not an exact root");
  return Polynomial::from_rationals(p_, out);
}

std::vector<BigRat> Polynomial::rational_coeffs() const {
  std::vector<BigRat> out;
  out.reserve(coeffs_.size());
  for (const PadicNumber& c : coeffs_) out.push_back(c.value());
  return out;
}

std::vector<NewtonPolygonSegment> newton_polygon(const Polynomial& f) {
  if (f.is_zero()) throw Error("Newton polygon of the zero polynomial");
  // Points (i, val(a_i)) for nonzero coefficients.
  std::vector<std::pair<long, long>> pts;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    if (!f.coeffs()[i].is_zero()) {
      pts.emplace_back(static_cast<long>(i), f.coeffs()[i].valuation());
    }
  }
  // Lower convex hull, left to right.
  std::vector<std::pair<long, long>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // keep b only if it is strictly below the segment a--pt
      if ((b.second - a.second) * (pt.first - a.first) <
          (pt.second - a.second) * (b.first - a.first)) {
        break;
      }
      hull.pop_back();
    }
    hull.push_back(pt);
  }
  std::vector<NewtonPolygonSegment> segs;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    BigRat slope(BigInt(hull[i].second - hull[i - 1].second),
                 BigInt(hull[i].first - hull[i - 1].first));
    segs.push_back({slope, static_cast<unsigned>(hull[i].first - hull[i - 1].first)});
  }
  return segs;
}

Polynomial poly_gcd_rational(const Polynomial& a, const Polynomial& b) {
  std::vector<BigRat> A = a.rational_coeffs();
  std::vector<BigRat> B = b.rational_coeffs();
  auto deg = [](const std::vector<BigRat>& v) { return static_cast<int>(v.size()) - 1; };
  auto trim = [](std::vector<BigRat>& v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
  };
  trim(A);
  trim(B);
  while (!B.empty()) {
    // A mod B
    std::vector<BigRat> R = A;
    while (deg(R) >= deg(B)) {
      BigRat q = R.back() / B.back();
      int shift = deg(R) - deg(B);
      for (int i = 0; i <= deg(B); ++i) R[i + shift] -= q * B[i];
      trim(R);
      if (R.empty()) break;
    }
    A = std::move(B);
    B = std::move(R);
  }
  if (!A.empty()) {
    BigRat lead = A.back();
    for (BigRat& c : A) c /= lead;
  }
  return Polynomial::from_rationals(a.prime(), A);
}

}  // namespace padicdyn

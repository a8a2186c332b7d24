#include "padicdyn/roots.hpp"

#include <algorithm>
#include <map>

namespace padicdyn {

namespace {

BigInt pow_p(const Prime& p, long v) { return p.pow(static_cast<unsigned>(v)); }

// Valuation of f(c) for an exact rational c; returns false in ok when f(c) == 0.
long value_valuation(const Polynomial& f, const BigRat& c, bool& is_exact_zero) {
  PadicNumber v(f.prime(), f.evaluate(c));
  if (v.is_zero()) {
    is_exact_zero = true;
    return 0;
  }
  is_exact_zero = false;
  return v.valuation();
}

}  // namespace

PadicNumber RootCertificate::representative(const Prime& p) const {
  if (exact) return PadicNumber(p, *exact);
  BigRat v(unit_residue);
  if (valuation >= 0) {
    v *= BigRat(pow_p(p, valuation));
  } else {
    v /= BigRat(pow_p(p, -valuation));
  }
  return PadicNumber(p, v);
}

BigInt RootCertificate::residue_mod(unsigned k, const Prime& p) const {
  PadicNumber rep = representative(p);
  return rep.residue_mod(k);
}

int legendre_symbol(const BigInt& a, const Prime& p) {
  if (p.value() == 2) throw Error("legendre_symbol requires odd p");
  BigInt r = mod_reduce(a, p.value());
  if (r == 0) throw NotAUnit("legendre_symbol of a multiple of p");
  BigInt e = mod_pow(r, (p.value() - 1) / 2, p.value());
  return e == 1 ? 1 : -1;
}

namespace {

// Square root of a quadratic residue mod an odd prime (Tonelli-Shanks).
BigInt sqrt_mod_p(const BigInt& a, const Prime& prime) {
  const BigInt& p = prime.value();
  BigInt n = mod_reduce(a, p);
  if (n == 0) return 0;
  if (p % 4 == 3) return mod_pow(n, (p + 1) / 4, p);

  BigInt q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  BigInt z = 2;
  while (legendre_symbol(z, prime) != -1) ++z;
  BigInt m = s;
  BigInt c = mod_pow(z, q, p);
  BigInt t = mod_pow(n, q, p);
  BigInt r = mod_pow(n, (q + 1) / 2, p);
  while (t != 1) {
    BigInt i = 0;
    BigInt tt = t;
    while (tt != 1) {
      tt = (tt * tt) % p;
      ++i;
    }
    BigInt b = c;
    for (BigInt j = 0; j < m - i - 1; ++j) b = (b * b) % p;
    m = i;
    c = (b * b) % p;
    t = (t * c) % p;
    r = (r * b) % p;
  }
  return r;
}

}  // namespace

bool sqrt_exists(const PadicNumber& d) {
  if (d.is_zero()) return true;
  if (d.valuation() % 2 != 0) return false;
  const Prime& p = d.prime();
  BigInt u = mod_reduce(d.unit_num() * mod_inv(d.unit_den(), p.value()), p.value());
  return legendre_symbol(u, p) == 1;
}

std::optional<PadicNumber> padic_sqrt(const PadicNumber& d, unsigned N) {
  if (d.is_zero()) return PadicNumber(d.prime());
  if (!sqrt_exists(d)) return std::nullopt;
  const Prime& p = d.prime();
  const long v = d.valuation();
  const BigInt pk = p.pow(N);
  BigInt u = mod_reduce(d.unit_num() * mod_inv(d.unit_den(), pk), pk);
  // lift t^2 = u from mod p by t <- (t + u/t)/2
  BigInt t = sqrt_mod_p(u, p);
  BigInt modulus = p.value();
  unsigned have = 1;
  const BigInt inv2 = mod_inv(2, pk);
  while (have < N) {
    have = std::min(2 * have, N);
    modulus = p.pow(have);
    t = mod_reduce((t + (u % modulus) * mod_inv(t, modulus)) % modulus * (inv2 % modulus),
                   modulus);
  }
  BigRat root(t);
  if (v / 2 >= 0) {
    root *= BigRat(pow_p(p, v / 2));
  } else {
    root /= BigRat(pow_p(p, -(v / 2)));
  }
  return PadicNumber(p, root);
}

RootCertificate hensel_lift(const Polynomial& f, const BigInt& y0, unsigned N,
                            std::vector<long>* trace) {
  const Prime& p = f.prime();
  Polynomial fp = f.derivative();
  if (f.evaluate_mod(y0, p.value()) != 0) throw NotARootModP();
  if (fp.evaluate_mod(y0, p.value()) == 0) throw SingularRootModP();

  BigInt t = mod_reduce(y0, p.value());
  unsigned have = 1;
  while (have < N) {
    have = std::min(2 * have, N);
    BigInt m = p.pow(have);
    BigInt ft = f.evaluate_mod(t, m);
    BigInt dft = fp.evaluate_mod(t, m);
    t = mod_reduce(t - ft * mod_inv(dft, m), m);
    if (trace) {
      bool zero = false;
      long vv = value_valuation(f, BigRat(t), zero);
      trace->push_back(zero ? static_cast<long>(2 * N) : vv);
    }
  }

  RootCertificate cert;
  cert.initial_residue = mod_reduce(y0, p.value());
  cert.simple = true;
  if (t == 0) {
    // the residue chain is 0 to full precision; report as the zero residue
    cert.valuation = static_cast<long>(N);
    cert.unit_residue = 0;
    cert.precision = 0;
    cert.region = DomainClass::MaximalIdeal;
    return cert;
  }
  long v = 0;
  BigInt unit = t;
  while (unit % p.value() == 0) {
    unit /= p.value();
    ++v;
  }
  cert.valuation = v;
  cert.unit_residue = unit;
  cert.precision = N - static_cast<unsigned>(v);
  cert.region = (v == 0) ? DomainClass::UnitSphere : DomainClass::MaximalIdeal;
  // recognize exact rational roots with small representatives
  BigInt m = p.pow(N);
  for (const BigRat& cand : {BigRat(t), BigRat(t - m)}) {
    if (f.evaluate(cand) == 0) {
      cert.exact = cand;
      break;
    }
  }
  return cert;
}

std::vector<BigInt> roots_mod_pk(const Polynomial& f, unsigned k, std::uint64_t budget) {
  const Prime& p = f.prime();
  BigInt pk = p.pow(k);
  if (pk > budget) throw BudgetExceeded("residue enumeration mod p^k");
  std::vector<BigInt> out;
  if (pk < (BigInt(1) << 32)) {
    // fast path in 64-bit arithmetic
    const std::uint64_t m = static_cast<std::uint64_t>(pk);
    std::vector<std::uint64_t> c;
    for (std::size_t i = 0; i <= static_cast<std::size_t>(std::max(f.degree(), 0)); ++i) {
      BigInt ci = f.coeff(i).is_zero() ? BigInt(0) : f.coeff(i).residue_mod(k);
      c.push_back(static_cast<std::uint64_t>(ci));
    }
    for (std::uint64_t r = 0; r < m; ++r) {
      std::uint64_t acc = 0;
      for (std::size_t i = c.size(); i-- > 0;) acc = (acc * r + c[i]) % m;
      if (acc == 0) out.emplace_back(r);
    }
  } else {
    for (BigInt r = 0; r < pk; ++r) {
      if (f.evaluate_mod(r, pk) == 0) out.push_back(r);
    }
  }
  return out;
}

namespace {

// Builds a certificate from an exact rational root.
RootCertificate make_exact_cert(const Prime& p, const BigRat& r, unsigned multiplicity,
                                unsigned N) {
  RootCertificate cert;
  cert.exact = r;
  cert.multiplicity = multiplicity;
  cert.simple = (multiplicity == 1);
  PadicNumber x(p, r);
  if (x.is_zero()) {
    cert.valuation = 0;
    cert.unit_residue = 0;
    cert.precision = N;
    cert.initial_residue = 0;
    cert.region = DomainClass::Zero;
    return cert;
  }
  cert.valuation = x.valuation();
  cert.region = x.classify();
  BigInt pk = p.pow(N);
  cert.unit_residue = mod_reduce(x.unit_num() * mod_inv(x.unit_den(), pk), pk);
  cert.precision = N;
  cert.initial_residue =
      (cert.valuation > 0) ? BigInt(0)
                           : mod_reduce(cert.unit_residue, p.value());
  return cert;
}

// Certificate for a root known as an integer residue t of F (unit root in the
// rescaled variable), mapped back through y = p^v t.
RootCertificate make_unit_cert(const Prime& p, long v, const RootCertificate& tcert,
                               const Polynomial& original) {
  RootCertificate cert = tcert;
  cert.valuation = v + tcert.valuation;
  if (tcert.exact) {
    BigRat e = *tcert.exact;
    if (v >= 0) {
      e *= BigRat(pow_p(p, v));
    } else {
      e /= BigRat(pow_p(p, -v));
    }
    if (original.evaluate(e) == 0) {
      cert.exact = e;
    } else {
      cert.exact.reset();
    }
  }
  if (cert.valuation > 0) {
    cert.initial_residue = 0;
    cert.region = DomainClass::MaximalIdeal;
  } else if (cert.valuation == 0) {
    cert.initial_residue = mod_reduce(cert.unit_residue, p.value());
    cert.region = DomainClass::UnitSphere;
  } else {
    cert.initial_residue = mod_reduce(cert.unit_residue, p.value());
    cert.region = DomainClass::OutsideIntegers;
  }
  return cert;
}

long cubic_disc_valuation(const Polynomial& f) {
  BigRat a = f.coeff(3).value(), b = f.coeff(2).value(), c = f.coeff(1).value(),
         d = f.coeff(0).value();
  BigRat disc = 18 * a * b * c * d - 4 * b * b * b * d + b * b * c * c -
                4 * a * c * c * c - 27 * a * a * d * d;
  PadicNumber v(f.prime(), disc);
  if (v.is_zero()) return -1;  // caller treats as "not squarefree"
  return v.valuation();
}

// Newton iteration from a residue satisfying the strong Hensel condition
// val(F(c)) > 2 val(F'(c)); converges to the unique nearby root.
RootCertificate lift_strong(const Polynomial& F, const BigInt& c0, unsigned N, long e) {
  const Prime& p = F.prime();
  Polynomial Fp = F.derivative();
  const unsigned work_prec = N + 2 * static_cast<unsigned>(e) + 4;
  BigInt modulus = p.pow(work_prec);
  BigRat t(c0);
  for (int iter = 0; iter < 200; ++iter) {
    BigRat ft = F.evaluate(t);
    if (ft == 0) break;
    PadicNumber fval(p, ft);
    if (fval.valuation() >= static_cast<long>(N) + e) break;
    BigRat step = ft / Fp.evaluate(t);
    t -= step;
    // keep the representative bounded
    PadicNumber tn(p, t);
    t = BigRat(tn.residue_mod(work_prec));
  }
  RootCertificate cert;
  cert.simple = false;
  cert.initial_residue = mod_reduce(c0, p.value());
  PadicNumber tn(p, t);
  if (tn.is_zero() || F.evaluate(t) == 0) {
    return make_exact_cert(p, t, 1, N);
  }
  long v = tn.valuation();
  cert.valuation = v;
  BigInt pk = p.pow(N);
  cert.unit_residue = mod_reduce(tn.unit_num() * mod_inv(tn.unit_den(), pk), pk);
  cert.precision = N;
  cert.region = tn.classify();
  return cert;
}

// Finds all Z_p roots of a squarefree integral polynomial that reduce to a
// singular residue t0 mod p. Breadth-first digit extension with the strong
// Hensel condition as the certification test.
void refine_singular(const Polynomial& F, const BigInt& t0, unsigned N,
                     std::vector<RootCertificate>& out) {
  const Prime& p = F.prime();
  Polynomial Fp = F.derivative();
  long dv = cubic_disc_valuation(F);
  if (F.degree() == 2) {
    BigRat a = F.coeff(2).value(), b = F.coeff(1).value(), c = F.coeff(0).value();
    PadicNumber disc(p, b * b - 4 * a * c);
    dv = disc.is_zero() ? -1 : disc.valuation();
  }
  if (dv < 0) throw UnresolvedMultipleRoot("polynomial is not squarefree at refinement");
  const long depth_bound = dv + static_cast<long>(N) + 4;

  std::vector<BigInt> level = {mod_reduce(t0, p.value())};
  std::uint64_t evals = 0;
  for (long k = 1; k <= depth_bound && !level.empty(); ++k) {
    std::vector<BigInt> next;
    BigInt mk1 = p.pow(static_cast<unsigned>(k + 1));
    for (const BigInt& c : level) {
      bool exact_zero = false;
      long vf = value_valuation(F, BigRat(c), exact_zero);
      if (exact_zero) {
        out.push_back(make_exact_cert(p, BigRat(c), 1, N));
      } else {
        bool dzero = false;
        long vfp = value_valuation(Fp, BigRat(c), dzero);
        if (!dzero && vf > 2 * vfp) {
          out.push_back(lift_strong(F, c, N, vfp));
        }
      }
      // extend one digit
      BigInt step = p.pow(static_cast<unsigned>(k));
      for (BigInt j = 0; j < p.value(); ++j) {
        if (++evals > 200000) {
          throw UnresolvedMultipleRoot("refinement budget exhausted");
        }
        BigInt cc = c + j * step;
        if (F.evaluate_mod(cc, mk1) == 0) next.push_back(cc);
      }
    }
    level = std::move(next);
  }
  if (!level.empty() && out.empty()) {
    throw UnresolvedMultipleRoot("singular residue survives to depth bound uncertified");
  }
}

void dedupe(std::vector<RootCertificate>& certs, const Prime& p, unsigned N) {
  std::vector<RootCertificate> out;
  for (const RootCertificate& c : certs) {
    bool dup = false;
    for (const RootCertificate& o : out) {
      if (c.valuation == o.valuation) {
        unsigned k = std::min(c.precision, o.precision);
        if (k > 0 && mod_reduce(c.unit_residue, p.pow(k)) == mod_reduce(o.unit_residue, p.pow(k))) {
          dup = true;
          break;
        }
      }
      if (c.exact && o.exact && *c.exact == *o.exact) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(c);
  }
  certs = std::move(out);
}

void quadratic_roots(const Polynomial& f, unsigned N, std::vector<RootCertificate>& out) {
  const Prime& p = f.prime();
  BigRat a = f.coeff(2).value(), b = f.coeff(1).value(), c = f.coeff(0).value();
  PadicNumber disc(p, b * b - 4 * a * c);
  if (disc.is_zero()) {
    out.push_back(make_exact_cert(p, -b / (2 * a), 2, N));
    return;
  }
  if (!sqrt_exists(disc)) return;

  // exact square over Q?
  BigRat dv = disc.value();
  BigInt num = boost::multiprecision::numerator(dv);
  BigInt den = boost::multiprecision::denominator(dv);
  if (num > 0) {
    BigInt sn = boost::multiprecision::sqrt(num);
    BigInt sd = boost::multiprecision::sqrt(den);
    if (sn * sn == num && sd * sd == den) {
      BigRat s(sn, sd);
      for (const BigRat& r : {BigRat((-b + s) / (2 * a)), BigRat((-b - s) / (2 * a))}) {
        out.push_back(make_exact_cert(p, r, 1, N));
      }
      return;
    }
  }

  PadicNumber a_p(p, a);
  long pad = std::abs(disc.valuation()) / 2 + std::abs(a_p.valuation()) + 8;
  auto s = padic_sqrt(disc, N + static_cast<unsigned>(pad));
  for (int sign : {+1, -1}) {
    BigRat r = (-b + sign * s->value()) / (2 * a);
    PadicNumber x(p, r);
    RootCertificate cert;
    cert.simple = true;
    if (x.is_zero()) {
      out.push_back(make_exact_cert(p, BigRat(0), 1, N));
      continue;
    }
    cert.valuation = x.valuation();
    BigInt pk = p.pow(N);
    cert.unit_residue = mod_reduce(x.unit_num() * mod_inv(x.unit_den(), pk), pk);
    cert.precision = N;
    cert.region = x.classify();
    cert.initial_residue = x.valuation() > 0 ? BigInt(0)
                                             : mod_reduce(cert.unit_residue, p.value());
    out.push_back(cert);
  }
}

void cubic_roots_squarefree(const Polynomial& f, unsigned N,
                            std::vector<RootCertificate>& out) {
  const Prime& p = f.prime();
  if (p.value() > (BigInt(1) << 20)) {
    throw BudgetExceeded("root search mod p for large p");
  }
  for (const NewtonPolygonSegment& seg : newton_polygon(f)) {
    BigInt snum = boost::multiprecision::numerator(seg.slope);
    BigInt sden = boost::multiprecision::denominator(seg.slope);
    if (sden != 1) continue;  // fractional valuation: no roots in Q_p
    long v = -static_cast<long>(snum);
    Polynomial F = f.rescale_variable(v);
    Polynomial Fp = F.derivative();
    for (BigInt t0 = 1; t0 < p.value(); ++t0) {
      if (F.evaluate_mod(t0, p.value()) != 0) continue;
      if (Fp.evaluate_mod(t0, p.value()) != 0) {
        RootCertificate tc = hensel_lift(F, t0, N);
        out.push_back(make_unit_cert(p, v, tc, f));
      } else {
        std::vector<RootCertificate> tc;
        refine_singular(F, t0, N, tc);
        for (const RootCertificate& t : tc) out.push_back(make_unit_cert(p, v, t, f));
      }
    }
  }
}

}  // namespace

std::vector<RootCertificate> roots_Qp(const Polynomial& f, unsigned N) {
  if (f.is_zero()) throw Error("roots of the zero polynomial");
  if (f.degree() > 3) throw Error("roots_Qp supports degree <= 3");
  const Prime& p = f.prime();
  std::vector<RootCertificate> out;

  Polynomial work = f;
  // split off rational multiple factors exactly
  while (work.degree() >= 1) {
    Polynomial g = poly_gcd_rational(work, work.derivative());
    if (g.degree() < 1) break;
    BigRat r;
    if (g.degree() == 1) {
      r = -g.coeff(0).value() / g.coeff(1).value();
    } else {
      // for degree <= 3 a degree-2 gcd forces a triple root: g = (x - r)^2
      r = -g.coeff(1).value() / (2 * g.coeff(2).value());
      if (g.evaluate(r) != 0) {
        throw UnresolvedMultipleRoot("irrational multiple factor");
      }
    }
    unsigned mult = 0;
    while (work.degree() >= 1 && work.evaluate(r) == 0) {
      work = work.deflate(r);
      ++mult;
    }
    if (mult == 0) throw UnresolvedMultipleRoot("gcd root does not divide");
    out.push_back(make_exact_cert(p, r, mult, N));
  }

  switch (work.degree()) {
    case 1:
      out.push_back(make_exact_cert(p, -work.coeff(0).value() / work.coeff(1).value(), 1, N));
      break;
    case 2:
      quadratic_roots(work, N, out);
      break;
    case 3:
      cubic_roots_squarefree(work, N, out);
      break;
    default:
      break;
  }
  dedupe(out, p, N);
  return out;
}

std::vector<RootCertificate> cubic_roots_Qp(const Polynomial& f, unsigned N) {
  if (f.degree() != 3) throw HypothesisViolated("degree must be exactly 3");
  return roots_Qp(f, N);
}

Norm root_norm_estimate(const Polynomial& f) {
  if (f.degree() != 3) throw HypothesisViolated("root_norm_estimate requires a cubic");
  PadicNumber lead = f.coeff(3);
  if (lead != PadicNumber(f.prime(), 1)) {
    throw HypothesisViolated("root_norm_estimate requires a monic cubic");
  }
  Norm A = f.coeff(2).norm();
  Norm B = f.coeff(1).norm();
  Norm C = f.coeff(0).norm();
  if (!(B == A * A && A == Norm::one() && C < A * A * A)) {
    throw HypothesisViolated("coefficient norms must satisfy |B| = |A|^2 = 1 > |C|");
  }
  return C / B;
}

}  // namespace padicdyn

#include "padicdyn/gibbs.hpp"

#include <algorithm>

namespace padicdyn {

const char* tipgm_case_name(TipgmCase c) {
  switch (c) {
    case TipgmCase::A: return "A";
    case TipgmCase::B: return "B";
    case TipgmCase::C: return "C";
    case TipgmCase::Di: return "D(i)";
    case TipgmCase::Dii: return "D(ii)";
    case TipgmCase::Ei: return "E(i)";
    case TipgmCase::Eii: return "E(ii)";
    case TipgmCase::Eiii: return "E(iii)";
  }
  return "?";
}

void Partition::validate(unsigned long q, TipgmCase c) const {
  bool needs_m3 = (c == TipgmCase::Ei || c == TipgmCase::Eii || c == TipgmCase::Eiii);
  if (needs_m3 && !m3) throw HypothesisViolated("this case needs a three-part partition");
  unsigned long sum = m1 + m2 + (needs_m3 ? *m3 : 0);
  if (sum != q - 1) throw HypothesisViolated("partition parts must sum to q - 1");
}

std::string Partition::to_string() const {
  std::string s = std::to_string(m1) + "+" + std::to_string(m2);
  if (m3) s += "+" + std::to_string(*m3);
  return s;
}

namespace {

PadicNumber root_value(const ModelParams& params, const RootCertificate& cert) {
  return cert.representative(params.p());
}

bool in_Ep_not_one(const ModelParams& params, const PadicNumber& v) {
  return in_Ep(v) && v != params.x0();
}

// z1 = -((theta-1+3*mb)*z2 + shift)/(theta-1+3*ma) for D/E linear relations
PadicNumber companion_value(const ModelParams& params, unsigned long ma, unsigned long mb,
                            const BigRat& shift, const PadicNumber& z2) {
  const BigRat th = params.theta().value();
  BigRat den = th - 1 + 3 * BigRat(BigInt(ma));
  BigRat num = (th - 1 + 3 * BigRat(BigInt(mb))) * z2.value() + shift;
  return PadicNumber(params.p(), -num / den);
}

}  // namespace

std::vector<PadicNumber> BoundaryVector::z_vector(const ModelParams& params) const {
  const unsigned long n = params.q() - 1;
  const PadicNumber one = params.x0();
  std::vector<PadicNumber> z;
  z.reserve(n);
  auto fill = [&](const PadicNumber& v, unsigned long count) {
    for (unsigned long i = 0; i < count; ++i) z.push_back(v);
  };
  switch (kase) {
    case TipgmCase::A:
      fill(one, n);
      break;
    case TipgmCase::B:
      fill(root_value(params, *root), n);
      break;
    case TipgmCase::C:
      fill(one, partition.m1);
      fill(root_value(params, *root), partition.m2);
      break;
    case TipgmCase::Di:  // cubic solves for the z2 block, companion is z1
      fill(*companion, partition.m1);
      fill(root_value(params, *root), partition.m2);
      break;
    case TipgmCase::Dii:  // cubic solves for the z1 block
      fill(root_value(params, *root), partition.m1);
      fill(*companion, partition.m2);
      break;
    case TipgmCase::Ei:
    case TipgmCase::Eiii:
      fill(*companion, partition.m1);
      fill(root_value(params, *root), partition.m2);
      fill(one, *partition.m3);
      break;
    case TipgmCase::Eii:
      fill(root_value(params, *root), partition.m1);
      fill(*companion, partition.m2);
      fill(one, *partition.m3);
      break;
  }
  return z;
}

Polynomial case_cubic(TipgmCase c, const ModelParams& params, const Partition& part) {
  const Prime& p = params.p();
  const BigRat th = params.theta().value();
  const BigRat qq(BigInt(params.q()));
  const BigRat t2 = (th - 1) * (th - 1);

  auto guard = [&](unsigned long m) {
    if (th - 1 + 3 * BigRat(BigInt(m)) == 0) {
      throw GuardViolated("theta - 1 + 3m vanishes; the linear relation is undefined");
    }
  };
  auto de_cubic = [&](unsigned long ma, unsigned long mb, const BigRat& c0,
                      const BigRat& shift) {
    // [ (ma-mb) z + c0 ]^3 + (theta-1+3ma)^2 [ (theta-1+3mb) z^2 + shift z ]
    guard(ma);
    BigRat diff = BigRat(BigInt(ma)) - BigRat(BigInt(mb));
    Polynomial lin = Polynomial::from_rationals(p, {c0, diff});
    BigRat fa = th - 1 + 3 * BigRat(BigInt(ma));
    BigRat fb = th - 1 + 3 * BigRat(BigInt(mb));
    Polynomial quad = Polynomial::from_rationals(p, {BigRat(0), fa * fa * shift, fa * fa * fb});
    return lin * lin * lin + quad;
  };

  switch (c) {
    case TipgmCase::B: {
      BigRat n = qq - 1;
      return Polynomial::from_rationals(
          p, {BigRat(1), 3 * n - t2 * (th + 2), 3 * n * n - t2 * (th + 3 * n - 1),
              n * n * n});
    }
    case TipgmCase::C: {
      part.validate(params.q(), c);
      BigRat a(BigInt(part.m1 + 1));
      BigRat b(BigInt(part.m2));
      return Polynomial::from_rationals(
          p, {a * a * a, 3 * b * a * a - t2 * (th + 3 * a - 1),
              3 * b * b * a - t2 * (th + 3 * b - 1), b * b * b});
    }
    case TipgmCase::Di:
      part.validate(params.q(), c);
      return de_cubic(part.m1, part.m2, BigRat(BigInt(part.m1)) - 1, th + 2);
    case TipgmCase::Dii:
      part.validate(params.q(), c);
      return de_cubic(part.m2, part.m1, BigRat(BigInt(part.m2)) - 1, th + 2);
    case TipgmCase::Ei:
      part.validate(params.q(), c);
      return de_cubic(part.m1, part.m2,
                      BigRat(BigInt(part.m1)) - BigRat(BigInt(*part.m3)) - 1,
                      3 * BigRat(BigInt(*part.m3)) + th + 2);
    case TipgmCase::Eii:
      part.validate(params.q(), c);
      return de_cubic(part.m2, part.m1,
                      BigRat(BigInt(part.m2)) - BigRat(BigInt(*part.m3)) - 1,
                      3 * BigRat(BigInt(*part.m3)) + th + 2);
    case TipgmCase::A:
    case TipgmCase::Eiii:
      throw HypothesisViolated("no standalone cubic for this case");
  }
  throw HypothesisViolated("unknown case");
}

std::vector<BoundaryVector> enumerate_tipgm(
    const ModelParams& params, unsigned N, CatalogDiagnostics* diag,
    const std::optional<std::pair<TipgmCase, Partition>>& only) {
  params.require_tier1();
  if (params.q() > 20) {
    throw HypothesisViolated("catalogue enumeration is limited to q <= 20");
  }
  const unsigned long n = params.q() - 1;
  std::vector<BoundaryVector> out;

  auto wanted = [&](TipgmCase c, const Partition& pt) {
    if (!only) return true;
    if (only->first != c) return false;
    return only->second.m1 == pt.m1 && only->second.m2 == pt.m2 &&
           only->second.m3 == pt.m3;
  };
  auto finish = [&](BoundaryVector bv) {
    std::vector<Norm> res = consistency_residual(params, bv.z_vector(params));
    bv.consistency_pass = consistency_pass(params, res, N);
    out.push_back(std::move(bv));
  };
  auto solve_case = [&](TipgmCase c, const Partition& pt, unsigned long ma,
                        unsigned long mb, const BigRat& shift, bool has_companion) {
    if (!wanted(c, pt)) return;
    std::vector<RootCertificate> roots;
    try {
      roots = roots_Qp(case_cubic(c, params, pt), N);
    } catch (const Error& e) {
      if (diag) {
        diag->unresolved.push_back(std::string(tipgm_case_name(c)) + " " +
                                   pt.to_string() + ": " + e.what());
      }
      return;
    }
    for (const RootCertificate& r : roots) {
      PadicNumber v = root_value(params, r);
      if (!in_Ep_not_one(params, v)) continue;
      BoundaryVector bv;
      bv.kase = c;
      bv.partition = pt;
      bv.root = r;
      if (has_companion) {
        PadicNumber z1 = companion_value(params, ma, mb, shift, v);
        if (!in_Ep_not_one(params, z1)) continue;
        bv.companion = z1;
      }
      finish(std::move(bv));
    }
  };

  if (wanted(TipgmCase::A, Partition{})) {
    BoundaryVector a;
    finish(std::move(a));
  }

  {
    Partition pt{0, n, std::nullopt};
    solve_case(TipgmCase::B, pt, 0, 0, BigRat(0), false);
  }

  const BigRat th = params.theta().value();
  auto guard_ok = [&](unsigned long m) { return th - 1 + 3 * BigRat(BigInt(m)) != 0; };

  for (unsigned long m1 = 1; m1 + 1 <= n; ++m1) {
    unsigned long m2 = n - m1;
    Partition pt{m1, m2, std::nullopt};
    solve_case(TipgmCase::C, pt, 0, 0, BigRat(0), false);
    if (guard_ok(m1)) {
      solve_case(TipgmCase::Di, pt, m1, m2, th + 2, true);
    } else if (guard_ok(m2)) {
      solve_case(TipgmCase::Dii, pt, m2, m1, th + 2, true);
    } else if (diag) {
      diag->skipped.push_back("D " + pt.to_string() + ": both guards fail");
    }
  }

  for (unsigned long m1 = 1; m1 + 2 <= n; ++m1) {
    for (unsigned long m2 = 1; m1 + m2 + 1 <= n; ++m2) {
      unsigned long m3 = n - m1 - m2;
      Partition pt{m1, m2, m3};
      BigRat shift = 3 * BigRat(BigInt(m3)) + th + 2;
      if (guard_ok(m1)) {
        solve_case(TipgmCase::Ei, pt, m1, m2, shift, true);
      } else if (guard_ok(m2)) {
        solve_case(TipgmCase::Eii, pt, m2, m1, shift, true);
      } else if (diag) {
        diag->skipped.push_back("E " + pt.to_string() + ": both guards fail");
      }
    }
  }
  // E(iii) needs theta = 1 - q exactly, which tier1 rules out; solve_E3 is the
  // entry point for that degenerate family.
  return out;
}

std::vector<RootCertificate> solve_E3(const ModelParams& params, const PadicNumber& z1,
                                      unsigned N) {
  const BigRat th = params.theta().value();
  const BigRat qq(BigInt(params.q()));
  if (th != 1 - qq) throw HypothesisViolated("this family needs theta = 1 - q exactly");
  if (params.q() % 3 != 0 || params.q() < 6) {
    throw HypothesisViolated("no partition with m1 = m2 = m3 + 1 exists for this q");
  }
  if (!in_Ep(z1)) throw HypothesisViolated("z1 must lie in E_p");

  // (z2 + (z1+1))^3 - 27 z1 z2, expanded in z2
  BigRat w = z1.value() + 1;
  Polynomial f = Polynomial::from_rationals(
      params.p(), {w * w * w, 3 * w * w - 27 * z1.value(), 3 * w, BigRat(1)});
  std::vector<RootCertificate> roots = roots_Qp(f, N);
  std::vector<RootCertificate> kept;
  for (const RootCertificate& r : roots) {
    if (in_Ep(root_value(params, r))) kept.push_back(r);
  }
  return kept;
}

std::vector<Norm> consistency_residual(const ModelParams& params,
                                       const std::vector<PadicNumber>& z) {
  for (const PadicNumber& zi : z) {
    if (!in_Ep(zi)) throw HypothesisViolated("all z_i must lie in E_p");
  }
  const Prime& p = params.p();
  BigRat S(0);
  for (const PadicNumber& zi : z) S += zi.value();
  BigRat den = params.theta().value() + S;
  PadicNumber den_p(p, den);
  if (den_p.is_zero()) throw DenominatorVanishes("theta + sum z_j = 0");

  std::vector<Norm> out;
  out.reserve(z.size());
  const BigRat th = params.theta().value();
  for (const PadicNumber& zi : z) {
    BigRat g = ((th - 1) * zi.value() + S + 1) / den;
    BigRat gk(1);
    for (unsigned i = 0; i < params.k(); ++i) gk *= g;
    out.push_back(PadicNumber(p, zi.value() - gk).norm());
  }
  return out;
}

long consistency_slack(const ModelParams& params) {
  // residual derivative has valuation >= -2 val(theta + q - 1); +2 headroom
  PadicNumber d = params.theta() + params.q_padic() - params.x0();
  long v = d.is_zero() ? 0 : d.valuation();
  return 2 * v + 2;
}

bool consistency_pass(const ModelParams& params, const std::vector<Norm>& residuals,
                      unsigned N) {
  long bound = static_cast<long>(N) - consistency_slack(params);
  for (const Norm& r : residuals) {
    if (!(r <= Norm::power(-bound))) return false;
  }
  return true;
}

std::vector<PadicNumber> recursion_step(const ModelParams& params,
                                        const std::vector<PadicNumber>& h, unsigned N) {
  const Prime& p = params.p();
  const unsigned guard = N + 4;  // headroom for the quotient and log truncation
  std::vector<PadicNumber> z;
  z.reserve(h.size());
  for (const PadicNumber& hi : h) z.push_back(exp_p(hi, guard));

  PadicNumber S(p, 0);
  for (const PadicNumber& zi : z) S = S + zi;
  PadicNumber den = params.theta() + S;
  if (den.is_zero()) throw OutsideConvergenceDomain("theta + sum exp(h_j) = 0");

  const PadicNumber one = params.x0();
  std::vector<PadicNumber> out;
  out.reserve(h.size());
  for (std::size_t i = 0; i < h.size(); ++i) {
    PadicNumber arg = ((params.theta() - one) * z[i] + S + one) / den;
    out.push_back(log_p(arg, N));
  }
  return out;
}

std::vector<PadicNumber> tipgm_to_boundary_field(const ModelParams& params,
                                                 const std::vector<PadicNumber>& z,
                                                 const PadicNumber& h_free, unsigned N) {
  std::vector<PadicNumber> out;
  out.reserve(z.size() + 1);
  for (const PadicNumber& zi : z) out.push_back(log_p(h_free * zi, N));
  out.push_back(log_p(h_free, N));
  return out;
}

}  // namespace padicdyn

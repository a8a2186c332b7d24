#pragma once

#include <optional>

#include "padicdyn/potts.hpp"

namespace padicdyn {

/// Solution families of the translation-invariant boundary system for k = 3.
/// A: all-ones. B: one repeated value. C: a 1-block plus a z-block.
/// D: two value blocks (i/ii are the two linear parameterizations).
/// E: two value blocks plus a 1-block; Eiii is the degenerate theta = 1 - q form.
enum class TipgmCase { A, B, C, Di, Dii, Ei, Eii, Eiii };
const char* tipgm_case_name(TipgmCase c);

struct Partition {
  unsigned long m1 = 0;
  unsigned long m2 = 0;
  std::optional<unsigned long> m3;

  /// All declared parts >= 1 and summing to q - 1.
  void validate(unsigned long q, TipgmCase c) const;
  std::string to_string() const;
};

/// One certified boundary solution: the cubic root plus, for D/E, the value of
/// the companion block from the linear relation. All values in E_p \ {1}
/// except case A.
struct BoundaryVector {
  TipgmCase kase = TipgmCase::A;
  Partition partition;
  std::optional<RootCertificate> root;   // empty for case A
  std::optional<PadicNumber> companion;  // D/E: the linearly determined block value
  bool consistency_pass = false;

  /// Expands to the full z-vector of length q - 1 (block values repeated).
  std::vector<PadicNumber> z_vector(const ModelParams& params) const;
};

struct CatalogDiagnostics {
  std::vector<std::string> unresolved;  // root-engine failures, never dropped silently
  std::vector<std::string> skipped;     // guard-excluded parameterizations
};

/// Exact coefficients of the displayed cubic for the given case and partition.
/// Cases A and Eiii have no standalone cubic here (Eiii goes through solve_E3).
/// Throws GuardViolated when the D/E linear-relation denominator vanishes.
Polynomial case_cubic(TipgmCase c, const ModelParams& params, const Partition& part);

/// Full catalogue: case A always, then every admissible (case, partition) with
/// its cubic solved over Q_p, roots filtered to E_p \ {1}, companions from the
/// linear relations. `only` restricts to a single (case, partition).
/// Requires tier1 and q <= 20.
std::vector<BoundaryVector> enumerate_tipgm(
    const ModelParams& params, unsigned N, CatalogDiagnostics* diag = nullptr,
    const std::optional<std::pair<TipgmCase, Partition>>& only = std::nullopt);

/// Degenerate family: theta = 1 - q with m1 = m2 = m3 + 1. For a given z1 in
/// E_p, solves (z1 + z2 + 1)^3 = 27 z1 z2 for z2 and filters to E_p.
std::vector<RootCertificate> solve_E3(const ModelParams& params, const PadicNumber& z1,
                                      unsigned N);

/// Residual norms |z_i - (((theta-1)z_i + S + 1)/(theta + S))^k| with
/// S = sum z_j. Throws DenominatorVanishes when theta + S has norm below
/// the q-norm floor that the certified-precision analysis assumes.
std::vector<Norm> consistency_residual(const ModelParams& params,
                                       const std::vector<PadicNumber>& z);

/// Certified-precision threshold: residuals of a valid vector at unit
/// precision N are 0 mod p^(N - slack).
long consistency_slack(const ModelParams& params);
bool consistency_pass(const ModelParams& params, const std::vector<Norm>& residuals,
                      unsigned N);

/// One application of F_i = log_p(((theta-1)exp(h_i) + sum exp(h_j) + 1) /
/// (theta + sum exp(h_j))); translation-invariant solutions satisfy h = k F(h).
std::vector<PadicNumber> recursion_step(const ModelParams& params,
                                        const std::vector<PadicNumber>& h, unsigned N);

/// Boundary field (log_p(h z_1), ..., log_p(h z_{q-1}), log_p(h)).
std::vector<PadicNumber> tipgm_to_boundary_field(const ModelParams& params,
                                                 const std::vector<PadicNumber>& z,
                                                 const PadicNumber& h_free, unsigned N);

}  // namespace padicdyn

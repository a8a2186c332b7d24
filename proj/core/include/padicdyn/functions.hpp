#pragma once

#include "padicdyn/padic.hpp"

namespace padicdyn {

/// Convergence domain of exp_p: B(0, p^(-1/(p-1))). For p >= 3 this is
/// exactly {valuation >= 1} together with 0.
bool in_exp_domain(const PadicNumber& x);

/// Convergence domain of log_p: B(1, 1).
bool in_log_domain(const PadicNumber& x);

/// E_p = {|x - 1|_p < p^(-1/(p-1))} = {|x - 1|_p < 1} for p >= 3.
bool in_Ep(const PadicNumber& x);

/// Truncated p-adic exponential, congruent to exp_p(x) mod p^N.
/// Term cutoff uses the exact factorial valuation v_p(n!) = (n - s_p(n))/(p-1).
/// Throws OutsideConvergenceDomain unless x is in the exp domain.
PadicNumber exp_p(const PadicNumber& x, unsigned N);

/// Truncated p-adic logarithm, congruent to log_p(x) mod p^N.
/// Throws OutsideConvergenceDomain unless |x - 1|_p < 1.
PadicNumber log_p(const PadicNumber& x, unsigned N);

/// theta = exp_p(J) truncated mod p^N; |theta - 1|_p = |J|_p.
PadicNumber theta_from_J(const PadicNumber& J, unsigned N);

/// v_p(n!) via Legendre's formula.
long factorial_valuation(unsigned long n, const BigInt& p);

}  // namespace padicdyn

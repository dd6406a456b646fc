#pragma once

#include <gmpxx.h>

#include "sptkit/apfloat.hpp"
#include "sptkit/quadforms.hpp"

namespace sptkit {

/// Rectangular complex ball: independent real and imaginary balls.
struct ComplexBall {
  Apfloat re;
  Apfloat im;

  ComplexBall& operator+=(const ComplexBall& rhs) {
    re += rhs.re;
    im += rhs.im;
    return *this;
  }
};

/// Smallest truncation point the tail majorant accepts.
inline constexpr long kMinTruncation = 193;
/// First truncation tried by trace_S.
inline constexpr long kStartTruncation = 250;

/// C = 8 sqrt(6) pi^{3/2} + 16 pi^2 zeta(3/2)^2, with |b(m)| <= C e^{4 pi sqrt(m)}.
Apfloat coefficient_constant(long prec);

/**
 * Majorant for sum_{m > M} |b(m)| e^{-kappa m} where kappa = pi sqrt|D| / (a h):
 * with r = kappa - 4 pi / sqrt(M+1) > 0 it is C e^{-(M+1) r} / (1 - e^{-r}).
 * std::domain_error when r is not certainly positive.
 */
Apfloat tail_majorant(const QuadraticForm& q, const CosetRep& gamma, long M, long prec);

/**
 * f|gamma at tau_Q from its expansion at the cusp of gamma:
 *   zeta_Q e(-tau/h) + 12 mu(h) + sum_{m=1}^{M} phi_m b(m) e(m tau/h),
 * with tail_majorant added to both error radii. Phases are reduced exactly
 * before evaluation. std::invalid_argument for M < 193.
 */
ComplexBall evaluate_f_at(const QuadraticForm& q, const CosetRep& gamma, long M, long prec);

struct TraceResult {
  long n = 0;
  Apfloat value;           ///< real part of the assembled trace
  Apfloat imaginary;       ///< must contain zero
  double tail_bound = 0;   ///< rigorous error radius of `value` (truncation and rounding)
  mpz_class exact;         ///< 12 spt(n) + (24n - 1) p(n)
  double residual = 0;     ///< |value - exact| at the midpoint
  long truncation = 0;     ///< M used for every form
  long forms = 0;          ///< number of forms evaluated
  long precision = 0;
  bool success = false;    ///< the ball contains `exact` and tail_bound <= tolerance
};

/**
 * S(n) = sum_{u^2 | D} eps(u) sum_{Q reduced, primitive, disc D/u^2} f|gamma_Q (tau_Q).
 * M starts at 250 and doubles until the summed tail majorants fit in half of
 * `tolerance`. Throws PrecisionError when the final radius exceeds
 * `tolerance` and std::logic_error when the imaginary part is not zero
 * within its radius. prec <= 0 picks a default from n.
 */
TraceResult trace_S(long n, double tolerance = 1e-6, long prec = 0);

/// 12 spt(n) + (24n - 1) p(n).
mpz_class trace_S_exact(long n);

/// Leading terms of [1,1,6n], [2,1,3n], [3,1,2n], [6,1,n] at their cusps;
/// equals 2 sqrt(3) e^{lambda(n)}. The imaginary part must cancel.
Apfloat main_term_anchor(long n, long prec = 0);

}  // namespace sptkit

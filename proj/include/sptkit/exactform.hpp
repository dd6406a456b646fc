#pragma once

#include <optional>

#include <gmpxx.h>

#include "sptkit/apfloat.hpp"

namespace sptkit {

/// Reduced fraction with positive denominator.
using Rational = mpq_class;

/// num/den in lowest terms.
Rational make_rational(long num, long den);

/// lambda(n) = pi sqrt(24n - 1) / 6.
Apfloat lambda_of(long n, long prec);

/// max(64, ceil(lambda(n)/ln 2) + 64): enough bits to carry e^lambda(n)
/// with 64 guard bits.
long default_precision(long n);

/// s(d,c) = sum_{r=1}^{c-1} (r/c) ((dr/c) - floor(dr/c) - 1/2), exactly.
Rational dedekind_sum(long d, long c);

/**
 * A_c(n) = sum_{d mod c, (d,c)=1} e^{pi i s(d,c)} e^{-2 pi i d n / c}.
 *
 * Each phase is reduced exactly as a rational number of turns before the
 * trigonometric evaluation. The imaginary part must vanish to within the
 * accumulated error radius; std::logic_error otherwise.
 */
Apfloat kloosterman_A(long c, long n, long prec);

/// I_{3/2}(x) = (1/2) sqrt(2/(pi x)) [(1 - 1/x) e^x + (1 + 1/x) e^{-x}], x > 0.
Apfloat bessel_I_threehalf(const Apfloat& x);

/// Truncated Rademacher series for p(n) with Lehmer's remainder bound.
struct LehmerEstimate {
  Apfloat estimate;
  /// Upper bound for |R_2(n, N)|, rounded outward.
  Apfloat remainder_bound;

  /// True when |estimate - value| <= remainder_bound + rigorous error.
  bool contains(const mpz_class& value) const;
};

/**
 * p(n) ~ sqrt(12)/(24n-1) sum_{c=1}^{N} A_c(n)/sqrt(c)
 *          {(1 - c/lambda) e^{lambda/c} + (1 + c/lambda) e^{-lambda/c}}
 * with |R_2(n,N)| < N^{-2/3} pi^2/sqrt(3) {N^3/(2 lambda^3)(e^{lambda/N} - e^{-lambda/N})
 *                                          + 1/6 - N^2/lambda^2}.
 */
LehmerEstimate rademacher_p(long n, long terms, long prec);

/// Main terms and effective error bounds for p(n) and spt(n).
struct MainTermProfile {
  long n = 0;
  Apfloat lambda_n;
  std::optional<Apfloat> p_main;
  std::optional<Apfloat> p_err_bound;
  std::optional<Apfloat> spt_main;
  std::optional<Apfloat> spt_err_bound;
};

/// p_main = 2 sqrt(3)/(24n-1) (1 - 1/lambda) e^lambda, p_err_bound = 1313 e^{lambda/2}.
MainTermProfile p_main_term(long n, long prec);

/// spt_main = sqrt(3)/(pi sqrt(24n-1)) e^lambda,
/// spt_err_bound = 3.59e22 2^{q(n)} (24n-1)^2 e^{lambda/2}.
MainTermProfile spt_main_term(long n, long prec);

/// Both halves in one profile.
MainTermProfile main_term_profile(long n, long prec);

/// Lower bound sqrt(3)/(12n) (1 - 1/sqrt(n)) e^lambda and the matching upper
/// bound with 1 + 1/sqrt(n).
struct PartitionSqueeze {
  Apfloat lower;
  Apfloat upper;
};
PartitionSqueeze partition_squeeze(long n, long prec);

}  // namespace sptkit

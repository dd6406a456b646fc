#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sptkit/apfloat.hpp"

namespace sptkit {

// Constants of the effective bounds, as exact decimals.
inline constexpr const char* kSptErrorConstant = "3.59e22";
inline constexpr const char* kTraceErrorConstant = "4.30e23";
inline constexpr const char* kOmegaShift = "1.1714";
inline constexpr long kLehmerConstant = 1313;

/// q(n) = log(24n-1) / |log(log(24n-1)) - 1.1714|.
Apfloat q_of_n(long n, long prec);

/// alpha(n) = sqrt(3) / (pi sqrt(24n-1)).
Apfloat alpha_n(long n, long prec);
/// beta(n) = 2 sqrt(3)/(24n-1) (1 - 6/(pi sqrt(24n-1))).
Apfloat beta_n(long n, long prec);
/// gamma(n) = (sqrt(6)/pi) sqrt(n).
Apfloat gamma_n(long n, long prec);
/// gamma(n, eps) = (sqrt(6)/pi + eps) sqrt(n).
Apfloat gamma_n(long n, const Apfloat& eps, long prec);
/// 1 - sqrt(6)/pi, the epsilon that turns the refined squeeze into Chen's (1).
Apfloat chen_epsilon(long prec);

/// f(n) = alpha(n) e^{lambda(n)}, the main term of spt(n).
Apfloat spt_main(long n, long prec);
/// 3.59e22 2^{q(n)} (24n-1)^2 e^{lambda(n)/2}.
Apfloat spt_error_bound(long n, long prec);
/// 4.30e23 2^{q(n)} (24n-1)^2 e^{lambda(n)/2}.
Apfloat trace_error_bound(long n, long prec);
/// sqrt(3) 2^{q(n)} |D_n|^2, an upper bound for H(D_n).
Apfloat class_number_bound(long n, long prec);

/// M(n) = 2 sqrt(3) 3.59e22 lambda(n) 2^{q(n)} (24n-1)^2 e^{-lambda(n)/2}.
Apfloat m_of_n(long n, long prec);
/// g(n) = M(n) / (1 - M(n)); std::domain_error unless M(n) < 1 certainly.
Apfloat g_of_n(long n, long prec);

/// spt_2(n) = 2 log spt(n) - log spt(n+1) - log spt(n-1) from exact values.
Apfloat spt2(long n, long prec);

struct PdsEnvelope {
  Apfloat F_lower;
  Apfloat F_upper;
  Apfloat spt2_lower;
  Apfloat spt2_upper;
};

/**
 * Analytic envelopes for F(n) = 2 log f(n) - log f(n+1) - log f(n-1) and for
 * spt_2(n):
 *   F_lower    = 24 pi/(24(n+1)-1)^{3/2} - 1/n^2
 *   F_upper    = 24 pi/(24(n-1)-1)^{3/2} - 288/(24(n+1)-1)^2
 *   spt2_lower = F_lower - 2 g(n) - M(n+1) - M(n-1)
 *   spt2_upper = F_upper + 2 M(n) + g(n+1) + g(n-1)
 * Requires n >= 4 and M < 1 at n-1, n, n+1 (std::domain_error otherwise).
 */
PdsEnvelope pds_envelope(long n, long prec);

struct BoundsProfile {
  long n = 0;
  Apfloat lambda;
  Apfloat q;
  Apfloat M;
  std::optional<Apfloat> g;
  std::optional<Apfloat> F_lower;
  std::optional<Apfloat> F_upper;
  std::optional<Apfloat> spt2_lower;
  std::optional<Apfloat> spt2_upper;
};

/// Every quantity that is defined at n; optional fields stay empty where the
/// formula is invalid (M(n) >= 1, or n < 4 for the envelopes).
BoundsProfile bounds_profile(long n, long prec);

struct CFunctions {
  Apfloat alpha;
  Apfloat beta;
  Apfloat gamma;
  Apfloat gamma_eps;
  Apfloat c1;  ///< alpha - beta gamma
  Apfloat c2;  ///< 1313 gamma + 3.59e22 2^q (24n-1)^2
  Apfloat c3;  ///< c2 / c1
  Apfloat c4;  ///< beta gamma(n, eps) - alpha
  Apfloat c5;  ///< 1313 gamma(n, eps) + 3.59e22 2^q (24n-1)^2
  std::optional<Apfloat> c6_value;

  /// c5 / c4; std::domain_error when c4 is not certainly positive.
  const Apfloat& c6() const;
};

CFunctions c_functions(long n, const Apfloat& eps, long prec);

struct ThresholdRecord {
  std::string predicate_name;
  std::optional<long> claimed_threshold;
  long verified_threshold = 0;
  long scan_floor = 0;
  long scan_ceiling = 0;

  bool matches_claim() const {
    return claimed_threshold.has_value() && *claimed_threshold == verified_threshold;
  }
};

/**
 * Smallest n* in [lo, hi] such that `predicate` holds at every n in
 * [n*, hi]. Every point of [n*, hi] is evaluated, and n* - 1 is the first
 * failure found walking down from hi (or n* = lo when none fails).
 * std::runtime_error when the predicate fails at hi.
 */
ThresholdRecord find_threshold(std::string name, std::optional<long> claimed,
                               const std::function<bool(long)>& predicate, long lo, long hi);

// Rigorously decided predicates behind the reproduced constants. Each
// returns false where its ingredients are undefined (for example M >= 1).

/// n > (1/24)[((12/pi) log c3(n))^2 + 1]; holds from 5310.
bool lower_condition_holds(long n);
/// n > (1/24)[((12/pi) log c6(n, eps))^2 + 1] with c4(n, eps) > 0.
bool upper_condition_holds(long n, const std::function<Apfloat(long)>& eps);
/// Same with eps = 1 - sqrt(6)/pi; holds from 4845.
bool upper_condition_holds(long n);
/// c4(n, 1 - sqrt(6)/pi) > 0; holds from 4.
bool c4_positive(long n);
/// 2 sqrt(3) 3.59e22 lambda 2^q (24n-1)^2 < e^{lambda/2}, i.e. M(n) < 1; holds from 4698.
bool m_below_one(long n);
/// 3.59e22 2^q (24n-1)^2 e^{lambda/2} < alpha(n) e^{lambda} / (a n^k).
bool bk_condition_holds(long n, long a, long k);
/// spt2_lower(n) > 1/(24n)^{3/2}; holds from 6553.
bool spt2_lower_exceeds_target(long n);
/// spt2_upper(n) < 2/n^{3/2}; holds from 6445.
bool spt2_upper_below_target(long n);
/// Lower bound for 2 log spt(m+1) - log spt(36) - log spt(36+2m), m >= 4.
Apfloat chen4_lower_function(long m, long prec);
/// chen4_lower_function(m) > 0; holds from 6244.
bool chen4_bound_positive(long m);
/// 5/(3n^{5/2}) - 1/(2n^2) + 2M(n) + g(n+1) + g(n-1) at n.
Apfloat chen6_correction(long n, long prec);
/// chen6_correction(n) < 0; holds from 7211.
bool chen6_correction_negative(long n);

/// Smallest verified B_k(a) below `ceiling` for the (1 +- 1/(a n^k)) squeeze.
ThresholdRecord theorem_bounds_Bk(long a, long k, long ceiling = 20000);

/// Scan ceiling for every reproduced constant.
inline constexpr long kThresholdCeiling = 10000;

/// All named constants: 5310, 4845, 4, 4698, 5729, 6553, 6445, 6244, 7211.
std::vector<ThresholdRecord> reproduce_thresholds();

}  // namespace sptkit

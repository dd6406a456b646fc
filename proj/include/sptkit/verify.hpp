#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sptkit/apfloat.hpp"
#include "sptkit/bounds.hpp"

namespace sptkit {

struct ConjectureReport {
  int conjecture_id = 0;
  std::string statement;
  /// Threshold beyond which the analytic argument takes over.
  std::optional<ThresholdRecord> analytic_threshold;
  /// Further constants the argument depends on.
  std::vector<ThresholdRecord> auxiliary_thresholds;
  long exact_scan_lo = 0;  ///< first n (or a, or n - m) checked exactly
  long exact_scan_hi = 0;  ///< exclusive upper end of the exact scan
  long analytic_check_lo = 0;
  long analytic_check_hi = 0;  ///< inclusive; 0 when no spot check runs
  long comparisons = 0;        ///< exact or rigorous comparisons made
  std::vector<std::string> failures;
  /// Points just outside the conjectured range where the inequality fails.
  std::vector<std::string> boundary_witnesses;
  std::map<std::string, std::string> details;
  bool passed = false;
  double runtime_seconds = 0;

  /// failures empty and every claimed threshold reproduced.
  void finalize();
};

/// (sqrt(6)/pi) sqrt(n) p(n) < spt(n) < sqrt(n) p(n) on 5 <= n < 5310.
ConjectureReport verify_chen1();
/// spt(a) spt(b) > spt(a+b) for the finite pairs left by the C_a table.
ConjectureReport verify_chen2();
/// spt(n)^2 > spt(n-1) spt(n+1) on 36 <= n < 6553.
ConjectureReport verify_chen3();
/// spt(n)^2 > spt(n-m) spt(n+m) for 1 <= n - m <= 36, 1 < m < 6244.
ConjectureReport verify_chen4();
/// (n+1) spt(n-1) spt(n+1) > n spt(n)^2 on 13 <= n < 6445.
ConjectureReport verify_chen5();
/// spt(n-1) spt(n+1) (1 + pi/(sqrt(24) n^{3/2})) > spt(n)^2 on 73 <= n < 7211.
ConjectureReport verify_chen6();

/// Runs one conjecture by id (1..6); std::invalid_argument otherwise.
ConjectureReport verify_chen(int id);
std::vector<ConjectureReport> verify_all();

// Pieces of the pair argument, exposed for tables and tests.

/// T_a(C) = lambda(a) + lambda(Ca) - lambda(a + Ca), C a rational.
Apfloat T_a(long a, const mpq_class& C, long prec);
/// S_a(C) = (1 + 1/(a + Ca)) / ((1 - 1/a)(1 - 1/(Ca))).
Apfloat S_a(long a, const mpq_class& C, long prec);
/// T_a(C) - log(pi sqrt(24a - 1)/sqrt(3)) - log S_a(C).
Apfloat pair_margin(long a, const mpq_class& C, long prec);
/// pair_margin(a, 1) > 0.
bool pair_condition_at_one(long a);

struct CaEntry {
  long a = 0;
  double value = 0;     ///< root of pair_margin(a, C) = 0 on [1, 100], to 1e-4
  std::string rounded;  ///< value to two decimals
};

/// C_a for a = 2..5 by bisection.
std::vector<CaEntry> c_a_table();

/// (1 - 1/n) f(n) < spt(n) < (1 + 1/n) f(n) with f(n) = alpha(n) e^{lambda(n)}.
bool squeeze_holds(long n);

/// Deterministic JSON; runtime_seconds only when `with_runtime`.
nlohmann::json to_json(const ThresholdRecord& record);
nlohmann::json to_json(const ConjectureReport& report, bool with_runtime = false);

}  // namespace sptkit

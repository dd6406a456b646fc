#include "sptkit/verify.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <stdexcept>

#include "sptkit/exactform.hpp"
#include "sptkit/parallel.hpp"
#include "sptkit/qseries.hpp"

namespace sptkit {
namespace {

constexpr long kSpotCeiling = kThresholdCeiling;

// pi_lo < pi < pi_lo + 1e-14.
const mpz_class kPiLoNum("314159265358979");
const mpz_class kPiDen("100000000000000");

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Runs `holds` on every n in [lo, hi) and returns the failing n in order.
std::vector<long> failing_points(long lo, long hi, const std::function<bool(long)>& holds) {
  if (hi <= lo) return {};
  std::vector<char> ok(static_cast<std::size_t>(hi - lo), 0);
  parallel_for(lo, hi, [&](long n) { ok[static_cast<std::size_t>(n - lo)] = holds(n) ? 1 : 0; });
  std::vector<long> out;
  for (long n = lo; n < hi; ++n) {
    if (!ok[static_cast<std::size_t>(n - lo)]) out.push_back(n);
  }
  return out;
}

void add_failures(ConjectureReport& report, const std::vector<long>& points, const std::string& tag) {
  for (long n : points) report.failures.push_back(tag + "=" + std::to_string(n));
}

void add_boundary(ConjectureReport& report, const std::vector<long>& points) {
  for (long n : points) report.boundary_witnesses.push_back("n=" + std::to_string(n));
}

const mpz_class& spt_at(const ExactTable& t, long n) { return t.spt[static_cast<std::size_t>(n)]; }

// spt(n)^2 > spt(n-1) spt(n+1)
bool log_concave_at(const ExactTable& t, long n) {
  return spt_at(t, n) * spt_at(t, n) > spt_at(t, n - 1) * spt_at(t, n + 1);
}

// (n+1) spt(n-1) spt(n+1) > n spt(n)^2
bool chen5_at(const ExactTable& t, long n) {
  return (n + 1) * spt_at(t, n - 1) * spt_at(t, n + 1) > n * spt_at(t, n) * spt_at(t, n);
}

// A (1 + x) > B with x = pi / sqrt(24 n^3), A = spt(n-1) spt(n+1), B = spt(n)^2.
bool chen6_at(const ExactTable& t, long n) {
  const mpz_class A = spt_at(t, n - 1) * spt_at(t, n + 1);
  const mpz_class B = spt_at(t, n) * spt_at(t, n);
  if (A > B) return true;
  // x >= pi_lo / ceil(sqrt(24 n^3)).
  mpz_class s;
  mpz_class rem;
  const mpz_class radicand = mpz_class(24) * n * n * n;
  mpz_sqrtrem(s.get_mpz_t(), rem.get_mpz_t(), radicand.get_mpz_t());
  if (rem != 0) s += 1;
  if (A * (kPiDen * s + kPiLoNum) > B * kPiDen * s) return true;
  return decide_positive([&](long prec) {
    const Apfloat x = Apfloat::pi(prec) / sqrt(Apfloat::from_integer(radicand, prec));
    return Apfloat::from_integer(A, prec) * (1 + x) - Apfloat::from_integer(B, prec);
  });
}

// sqrt(6)/pi sqrt(n) p < spt < sqrt(n) p, i.e. 6 n p^2 < pi^2 spt^2 and spt^2 < n p^2.
bool chen1_at(const ExactTable& t, long n) {
  const mpz_class& p = t.p[static_cast<std::size_t>(n)];
  const mpz_class& s = spt_at(t, n);
  if (!(s * s < n * p * p)) return false;
  const mpz_class lhs = 6 * n * p * p * kPiDen * kPiDen;
  if (lhs < kPiLoNum * kPiLoNum * s * s) return true;
  return decide_positive([&](long prec) {
    const Apfloat pi = Apfloat::pi(prec);
    return square(pi) * Apfloat::from_integer(s * s, prec) - Apfloat::from_integer(6 * n * p * p, prec);
  });
}

std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, value);
  return buf;
}

Apfloat lambda_real(const mpq_class& x, long prec) {
  return Apfloat::pi(prec) * sqrt(24 * Apfloat::from_rational(x, prec) - 1) / 6;
}

}  // namespace

void ConjectureReport::finalize() {
  bool thresholds_ok = !analytic_threshold || !analytic_threshold->claimed_threshold ||
                       analytic_threshold->matches_claim();
  for (const ThresholdRecord& r : auxiliary_thresholds) {
    if (r.claimed_threshold && !r.matches_claim()) thresholds_ok = false;
  }
  passed = failures.empty() && thresholds_ok;
}

ConjectureReport verify_chen1() {
  const auto start = Clock::now();
  ConjectureReport report;
  report.conjecture_id = 1;
  report.statement = "sqrt(6)/pi sqrt(n) p(n) < spt(n) < sqrt(n) p(n) for n >= 5";
  report.analytic_threshold = find_threshold("lower_condition", 5310, lower_condition_holds, 1, kSpotCeiling);
  report.auxiliary_thresholds.push_back(find_threshold(
      "upper_condition", 4845, [](long n) { return upper_condition_holds(n); }, 1, kSpotCeiling));
  report.auxiliary_thresholds.push_back(find_threshold("c4_positive", 4, c4_positive, 1, kSpotCeiling));
  const long hi = report.analytic_threshold->verified_threshold;
  const auto table = exact_table(hi);
  report.exact_scan_lo = 5;
  report.exact_scan_hi = hi;
  add_failures(report, failing_points(5, hi, [&](long n) { return chen1_at(*table, n); }), "n");
  add_boundary(report, failing_points(1, 5, [&](long n) { return chen1_at(*table, n); }));
  report.comparisons = hi - 5;
  report.runtime_seconds = seconds_since(start);
  report.finalize();
  return report;
}

Apfloat T_a(long a, const mpq_class& C, long prec) {
  const mpq_class A(a);
  const mpq_class b = C * A;
  return lambda_real(A, prec) + lambda_real(b, prec) - lambda_real(A + b, prec);
}

Apfloat S_a(long a, const mpq_class& C, long prec) {
  const mpq_class A(a);
  const mpq_class b = C * A;
  const mpq_class value = (1 + 1 / (A + b)) / ((1 - 1 / A) * (1 - 1 / b));
  return Apfloat::from_rational(value, prec);
}

Apfloat pair_margin(long a, const mpq_class& C, long prec) {
  const Apfloat head = Apfloat::pi(prec) * sqrt(Apfloat::from_int(24 * a - 1, prec)) /
                       sqrt(Apfloat::from_int(3, prec));
  return T_a(a, C, prec) - log(head) - log(S_a(a, C, prec));
}

bool pair_condition_at_one(long a) {
  return decide_positive([a](long prec) { return pair_margin(a, mpq_class(1), prec); });
}

std::vector<CaEntry> c_a_table() {
  std::vector<CaEntry> out;
  for (long a = 2; a <= 5; ++a) {
    mpq_class lo(1);
    mpq_class hi(100);
    if (pair_margin(a, lo, 128).certainly_positive() || !pair_margin(a, hi, 128).certainly_positive()) {
      throw std::logic_error("c_a_table: no sign change on [1, 100] for a = " + std::to_string(a));
    }
    const mpq_class tol(1, 100000);
    while (hi - lo > tol) {
      mpq_class mid = (lo + hi) / 2;
      mid.canonicalize();
      if (decide_positive([&](long prec) { return pair_margin(a, mid, prec); })) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
    const double value = mpq_class((lo + hi) / 2).get_d();
    out.push_back({a, value, fixed(value, 2)});
  }
  return out;
}

bool squeeze_holds(long n) {
  if (n < 1) throw std::invalid_argument("squeeze_holds: n must be positive");
  const mpz_class s = spt(n);
  const long start = std::max(128L, default_precision(n));
  const bool above = decide_positive(
      [&](long prec) {
        return Apfloat::from_integer(s, prec) -
               (1 - 1 / Apfloat::from_int(n, prec)) * spt_main(n, prec);
      },
      start);
  if (!above) return false;
  return decide_positive(
      [&](long prec) {
        return (1 + 1 / Apfloat::from_int(n, prec)) * spt_main(n, prec) -
               Apfloat::from_integer(s, prec);
      },
      start);
}

ConjectureReport verify_chen2() {
  const auto start = Clock::now();
  ConjectureReport report;
  report.conjecture_id = 2;
  report.statement = "spt(a) spt(b) > spt(a+b) for (a,b) other than (2,2) and (3,3)";
  ThresholdRecord b1 = theorem_bounds_Bk(1, 1, kSpotCeiling);
  b1.claimed_threshold = 5729;
  report.analytic_threshold = b1;

  // The (1 +- 1/n) squeeze below B_1(1), and 500 points past it.
  const long squeeze_hi = b1.verified_threshold + 500;
  exact_table(squeeze_hi);
  add_failures(report, failing_points(1, squeeze_hi, squeeze_holds), "squeeze_n");
  report.details["squeeze_range"] = "[1, " + std::to_string(squeeze_hi) + ")";

  // The reduced pair condition for every a >= 6 up to the ceiling.
  add_failures(report, failing_points(6, kSpotCeiling + 1, pair_condition_at_one), "pair_condition_a");
  for (long a = 2; a < 6; ++a) {
    if (!pair_condition_at_one(a)) report.boundary_witnesses.push_back("pair_condition_a=" + std::to_string(a));
  }

  const std::vector<CaEntry> ca = c_a_table();
  const char* expected[] = {"27.87", "3.54", "1.79", "1.20"};
  long pairs = 0;
  const auto table = exact_table(6 * 30);
  for (const CaEntry& entry : ca) {
    report.details["C_" + std::to_string(entry.a)] = entry.rounded;
    if (entry.rounded != expected[entry.a - 2]) {
      report.failures.push_back("C_" + std::to_string(entry.a) + "=" + entry.rounded + " expected " +
                                expected[entry.a - 2]);
    }
    const auto b_max = static_cast<long>(std::ceil(entry.value * static_cast<double>(entry.a)));
    for (long b = entry.a; b <= b_max; ++b) {
      ++pairs;
      const bool holds = spt_at(*table, entry.a) * spt_at(*table, b) > spt_at(*table, entry.a + b);
      const bool excluded = (entry.a == 2 && b == 2) || (entry.a == 3 && b == 3);
      const std::string tag = "(a,b)=(" + std::to_string(entry.a) + "," + std::to_string(b) + ")";
      if (excluded) {
        if (holds) {
          report.failures.push_back(tag + " holds but is excluded");
        } else {
          report.boundary_witnesses.push_back(tag);
        }
      } else if (!holds) {
        report.failures.push_back(tag);
      }
    }
  }
  report.details["pairs_checked"] = std::to_string(pairs);
  report.exact_scan_lo = 2;
  report.exact_scan_hi = 6;
  report.analytic_check_lo = 6;
  report.analytic_check_hi = kSpotCeiling;
  report.comparisons = pairs + squeeze_hi - 1 + (kSpotCeiling - 5);
  report.runtime_seconds = seconds_since(start);
  report.finalize();
  return report;
}

ConjectureReport verify_chen3() {
  const auto start = Clock::now();
  ConjectureReport report;
  report.conjecture_id = 3;
  report.statement = "spt(n)^2 > spt(n-1) spt(n+1) for n >= 36";
  report.analytic_threshold =
      find_threshold("spt2_lower_exceeds_target", 6553, spt2_lower_exceeds_target, 2, kSpotCeiling);
  const long hi = report.analytic_threshold->verified_threshold;
  const auto table = exact_table(hi + 1);
  report.exact_scan_lo = 36;
  report.exact_scan_hi = hi;
  add_failures(report, failing_points(36, hi, [&](long n) { return log_concave_at(*table, n); }), "n");
  add_boundary(report, failing_points(2, 36, [&](long n) { return log_concave_at(*table, n); }));
  report.analytic_check_lo = hi;
  report.analytic_check_hi = kSpotCeiling;
  report.comparisons = hi - 36;
  report.runtime_seconds = seconds_since(start);
  report.finalize();
  return report;
}

ConjectureReport verify_chen4() {
  const auto start = Clock::now();
  ConjectureReport report;
  report.conjecture_id = 4;
  report.statement = "spt(n)^2 > spt(n-m) spt(n+m) for n > m > 1";
  report.analytic_threshold =
      find_threshold("chen4_bound_positive", 6244, chen4_bound_positive, 4, kSpotCeiling);
  const long m_hi = report.analytic_threshold->verified_threshold;
  const long top = 36 + 2 * (m_hi - 1);
  const auto table = exact_table(std::max(top, 2 * kSpotCeiling + 36));

  // Windows 1 <= n - m <= 36, 1 < m < m_hi.
  const auto bad = failing_points(2, m_hi, [&](long m) {
    for (long j = 1; j <= 36; ++j) {
      const long n = j + m;
      if (!(spt_at(*table, n) * spt_at(*table, n) > spt_at(*table, j) * spt_at(*table, n + m))) return false;
    }
    return true;
  });
  add_failures(report, bad, "m");
  report.exact_scan_lo = 2;
  report.exact_scan_hi = m_hi;
  report.comparisons = 36 * (m_hi - 2);

  // Facts the chain for m >= m_hi relies on.
  const mpz_class s36 = spt_at(*table, 36);
  report.details["spt_36"] = s36.get_str();
  if (!(s36 < 90000)) report.failures.push_back("spt(36)=" + s36.get_str() + " not below 90000");
  const long mono_hi = 2 * kSpotCeiling + 36;
  for (long n = 1; n < mono_hi; ++n) {
    if (!(spt_at(*table, n) < spt_at(*table, n + 1))) report.failures.push_back("increasing_n=" + std::to_string(n));
  }
  report.details["increasing_checked_through"] = std::to_string(mono_hi);
  report.analytic_check_lo = m_hi;
  report.analytic_check_hi = kSpotCeiling;
  report.runtime_seconds = seconds_since(start);
  report.finalize();
  return report;
}

ConjectureReport verify_chen5() {
  const auto start = Clock::now();
  ConjectureReport report;
  report.conjecture_id = 5;
  report.statement = "spt(n-1)/spt(n) (1 + 1/n) > spt(n)/spt(n+1) for n >= 13";
  report.analytic_threshold =
      find_threshold("spt2_upper_below_target", 6445, spt2_upper_below_target, 2, kSpotCeiling);
  const long hi = report.analytic_threshold->verified_threshold;
  const auto table = exact_table(hi + 1);
  report.exact_scan_lo = 13;
  report.exact_scan_hi = hi;
  add_failures(report, failing_points(13, hi, [&](long n) { return chen5_at(*table, n); }), "n");
  add_boundary(report, failing_points(2, 13, [&](long n) { return chen5_at(*table, n); }));

  // 2/n^{3/2} < 1/(n+1) < log(1 + 1/n) past the threshold.
  const auto chain = failing_points(hi, kSpotCeiling + 1, [](long n) {
    const mpz_class x(n);
    if (!(4 * (x + 1) * (x + 1) < x * x * x)) return false;
    return decide_positive([n](long prec) {
      const Apfloat inv = 1 / Apfloat::from_int(n, prec);
      return log(1 + inv) - 1 / Apfloat::from_int(n + 1, prec);
    });
  });
  add_failures(report, chain, "chain_n");
  report.analytic_check_lo = hi;
  report.analytic_check_hi = kSpotCeiling;
  report.comparisons = (hi - 13) + 2 * (kSpotCeiling + 1 - hi);
  report.runtime_seconds = seconds_since(start);
  report.finalize();
  return report;
}

ConjectureReport verify_chen6() {
  const auto start = Clock::now();
  ConjectureReport report;
  report.conjecture_id = 6;
  report.statement = "spt(n-1)/spt(n) (1 + pi/(sqrt(24) n^{3/2})) > spt(n)/spt(n+1) for n >= 73";
  report.analytic_threshold =
      find_threshold("chen6_correction_negative", 7211, chen6_correction_negative, 2, kSpotCeiling);
  const long hi = report.analytic_threshold->verified_threshold;
  const auto table = exact_table(hi + 1);
  report.exact_scan_lo = 73;
  report.exact_scan_hi = hi;
  add_failures(report, failing_points(73, hi, [&](long n) { return chen6_at(*table, n); }), "n");
  add_boundary(report, failing_points(2, 73, [&](long n) { return chen6_at(*table, n); }));

  // 24 pi/(24(n+1)-1)^{3/2} < y - y^2 + 3/(2 n^{5/2}) with y = 24 pi/(24n)^{3/2}, and
  // -288/(24(n+1)-1)^2 < 1/(6 n^{5/2}) - 1/(2 n^2), both for n >= 50.
  auto first_shift = [](long n, long shift) {
    return decide_positive([=](long prec) {
      const Apfloat pi = Apfloat::pi(prec);
      const Apfloat x = Apfloat::from_int(n, prec);
      const Apfloat m = Apfloat::from_int(24 * (n + shift) - 1, prec);
      const Apfloat y = 24 * pi / (24 * x * sqrt(24 * x));
      return y - square(y) + 3 / (2 * square(x) * sqrt(x)) - 24 * pi / (m * sqrt(m));
    });
  };
  add_failures(report, failing_points(50, kSpotCeiling + 1, [&](long n) { return first_shift(n, 1); }),
               "cwx_first_n");
  add_failures(report, failing_points(50, kSpotCeiling + 1, [](long n) {
                 return decide_positive([n](long prec) {
                   const Apfloat x = Apfloat::from_int(n, prec);
                   const Apfloat m = Apfloat::from_int(24 * (n + 1) - 1, prec);
                   return 1 / (6 * square(x) * sqrt(x)) - 1 / (2 * square(x)) + 288 / square(m);
                 });
               }),
               "cwx_second_n");
  // The upper envelope carries 24(n-1)-1, so the chain needs the first
  // inequality with that shift past the threshold as well.
  add_failures(report, failing_points(hi, kSpotCeiling + 1, [&](long n) { return first_shift(n, -1); }),
               "cwx_first_shifted_n");
  // x(1 - x) < log(1 + x) at x = 24 pi/(24n)^{3/2}.
  add_failures(report, failing_points(hi, kSpotCeiling + 1, [](long n) {
                 return decide_positive([n](long prec) {
                   const Apfloat x24 = Apfloat::from_int(24 * n, prec);
                   const Apfloat x = 24 * Apfloat::pi(prec) / (x24 * sqrt(x24));
                   return log(1 + x) - x * (1 - x);
                 });
               }),
               "log_chain_n");
  report.analytic_check_lo = hi;
  report.analytic_check_hi = kSpotCeiling;
  report.comparisons = (hi - 73) + 2 * (kSpotCeiling - 49) + 2 * (kSpotCeiling + 1 - hi);
  report.runtime_seconds = seconds_since(start);
  report.finalize();
  return report;
}

ConjectureReport verify_chen(int id) {
  switch (id) {
    case 1:
      return verify_chen1();
    case 2:
      return verify_chen2();
    case 3:
      return verify_chen3();
    case 4:
      return verify_chen4();
    case 5:
      return verify_chen5();
    case 6:
      return verify_chen6();
    default:
      throw std::invalid_argument("verify_chen: conjecture id must be 1..6");
  }
}

std::vector<ConjectureReport> verify_all() {
  std::vector<ConjectureReport> out;
  for (int id = 1; id <= 6; ++id) out.push_back(verify_chen(id));
  return out;
}

nlohmann::json to_json(const ThresholdRecord& record) {
  nlohmann::json j;
  j["predicate"] = record.predicate_name;
  j["claimed"] = record.claimed_threshold ? nlohmann::json(*record.claimed_threshold) : nlohmann::json();
  j["verified"] = record.verified_threshold;
  j["scan_floor"] = record.scan_floor;
  j["scan_ceiling"] = record.scan_ceiling;
  j["matches_claim"] = record.matches_claim();
  return j;
}

nlohmann::json to_json(const ConjectureReport& report, bool with_runtime) {
  nlohmann::json j;
  j["schema"] = "sptkit/1";
  j["conjecture"] = report.conjecture_id;
  j["statement"] = report.statement;
  j["analytic_threshold"] = report.analytic_threshold ? to_json(*report.analytic_threshold) : nlohmann::json();
  j["auxiliary_thresholds"] = nlohmann::json::array();
  for (const auto& r : report.auxiliary_thresholds) j["auxiliary_thresholds"].push_back(to_json(r));
  j["exact_scan"] = {report.exact_scan_lo, report.exact_scan_hi};
  j["analytic_check"] = {report.analytic_check_lo, report.analytic_check_hi};
  j["comparisons"] = report.comparisons;
  j["failures"] = report.failures;
  j["boundary_witnesses"] = report.boundary_witnesses;
  j["details"] = report.details;
  j["status"] = report.passed ? "pass" : "fail";
  if (with_runtime) j["runtime_seconds"] = report.runtime_seconds;
  return j;
}

}  // namespace sptkit

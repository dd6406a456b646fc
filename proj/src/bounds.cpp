#include "sptkit/bounds.hpp"

#include <stdexcept>
#include <string>

#include "sptkit/exactform.hpp"
#include "sptkit/qseries.hpp"

namespace sptkit {
namespace {

Apfloat constant(const char* literal, long prec) { return Apfloat::from_decimal(literal, prec); }

Apfloat root(long value, long prec) { return sqrt(Apfloat::from_int(value, prec)); }

// x^{3/2} and x^{5/2} for a positive integer x.
Apfloat pow_three_halves(long x, long prec) { return Apfloat::from_int(x, prec) * root(x, prec); }

// 2^q (24n-1)^2 e^{lambda/2}, the shape shared by both error terms.
Apfloat error_shape(long n, long prec) {
  const Apfloat d = Apfloat::from_int(24 * n - 1, prec);
  return exp2(q_of_n(n, prec)) * square(d) * exp(lambda_of(n, prec) / 2);
}

// e^{lambda/2} - 2 sqrt(3) K lambda 2^q (24n-1)^2, positive exactly when M(n) < 1.
Apfloat m_gap(long n, long prec) {
  const Apfloat lambda = lambda_of(n, prec);
  const Apfloat d = Apfloat::from_int(24 * n - 1, prec);
  const Apfloat rhs = 2 * root(3, prec) * constant(kSptErrorConstant, prec) * lambda *
                      exp2(q_of_n(n, prec)) * square(d);
  return exp(lambda / 2) - rhs;
}

// (1/24)[((12/pi) log x)^2 + 1].
Apfloat log_threshold(const Apfloat& x, long prec) {
  const Apfloat t = 12 * log(x) / Apfloat::pi(prec);
  return (square(t) + 1) / 24;
}

bool envelope_defined(long n) {
  return n >= 4 && m_below_one(n - 1) && m_below_one(n) && m_below_one(n + 1);
}

}  // namespace

Apfloat q_of_n(long n, long prec) {
  if (n < 1) throw std::invalid_argument("q_of_n: n must be positive");
  const Apfloat l = log(Apfloat::from_int(24 * n - 1, prec));
  return l / abs(log(l) - constant(kOmegaShift, prec));
}

Apfloat alpha_n(long n, long prec) {
  return root(3, prec) / (Apfloat::pi(prec) * root(24 * n - 1, prec));
}

Apfloat beta_n(long n, long prec) {
  const Apfloat s = root(24 * n - 1, prec);
  return 2 * root(3, prec) / (24 * n - 1) * (1 - 6 / (Apfloat::pi(prec) * s));
}

Apfloat gamma_n(long n, long prec) { return root(6, prec) / Apfloat::pi(prec) * root(n, prec); }

Apfloat gamma_n(long n, const Apfloat& eps, long prec) {
  return (root(6, prec) / Apfloat::pi(prec) + eps) * root(n, prec);
}

Apfloat chen_epsilon(long prec) { return 1 - root(6, prec) / Apfloat::pi(prec); }

Apfloat spt_main(long n, long prec) { return alpha_n(n, prec) * exp(lambda_of(n, prec)); }

Apfloat spt_error_bound(long n, long prec) {
  return constant(kSptErrorConstant, prec) * error_shape(n, prec);
}

Apfloat trace_error_bound(long n, long prec) {
  return constant(kTraceErrorConstant, prec) * error_shape(n, prec);
}

Apfloat class_number_bound(long n, long prec) {
  const Apfloat d = Apfloat::from_int(24 * n - 1, prec);
  return root(3, prec) * exp2(q_of_n(n, prec)) * square(d);
}

Apfloat m_of_n(long n, long prec) {
  const Apfloat lambda = lambda_of(n, prec);
  const Apfloat d = Apfloat::from_int(24 * n - 1, prec);
  return 2 * root(3, prec) * constant(kSptErrorConstant, prec) * lambda * exp2(q_of_n(n, prec)) *
         square(d) * exp(-lambda / 2);
}

Apfloat g_of_n(long n, long prec) {
  const Apfloat m = m_of_n(n, prec);
  if (!certainly_less(m, Apfloat::from_int(1, prec))) {
    throw std::domain_error("g_of_n: M(" + std::to_string(n) + ") is not below 1");
  }
  return m / (1 - m);
}

Apfloat spt2(long n, long prec) {
  if (n < 2) throw std::invalid_argument("spt2: n must be at least 2");
  const auto table = exact_table(n + 1);
  auto ln = [&](long k) { return log(Apfloat::from_integer(table->spt[static_cast<std::size_t>(k)], prec)); };
  return 2 * ln(n) - ln(n + 1) - ln(n - 1);
}

PdsEnvelope pds_envelope(long n, long prec) {
  if (!envelope_defined(n)) {
    throw std::domain_error("pds_envelope: undefined at n = " + std::to_string(n));
  }
  const Apfloat pi = Apfloat::pi(prec);
  const Apfloat n2 = square(Apfloat::from_int(n, prec));
  PdsEnvelope out{
      24 * pi / pow_three_halves(24 * (n + 1) - 1, prec) - 1 / n2,
      24 * pi / pow_three_halves(24 * (n - 1) - 1, prec) -
          288 / square(Apfloat::from_int(24 * (n + 1) - 1, prec)),
      Apfloat(prec), Apfloat(prec)};
  out.spt2_lower = out.F_lower - 2 * g_of_n(n, prec) - m_of_n(n + 1, prec) - m_of_n(n - 1, prec);
  out.spt2_upper = out.F_upper + 2 * m_of_n(n, prec) + g_of_n(n + 1, prec) + g_of_n(n - 1, prec);
  return out;
}

BoundsProfile bounds_profile(long n, long prec) {
  if (n < 1) throw std::invalid_argument("bounds_profile: n must be positive");
  BoundsProfile out;
  out.n = n;
  out.lambda = lambda_of(n, prec);
  out.q = q_of_n(n, prec);
  out.M = m_of_n(n, prec);
  if (m_below_one(n)) out.g = g_of_n(n, prec);
  if (n >= 4 && envelope_defined(n)) {
    PdsEnvelope env = pds_envelope(n, prec);
    out.F_lower = std::move(env.F_lower);
    out.F_upper = std::move(env.F_upper);
    out.spt2_lower = std::move(env.spt2_lower);
    out.spt2_upper = std::move(env.spt2_upper);
  }
  return out;
}

const Apfloat& CFunctions::c6() const {
  if (!c6_value) throw std::domain_error("c6: c4 is not positive at this n");
  return *c6_value;
}

CFunctions c_functions(long n, const Apfloat& eps, long prec) {
  if (n < 1) throw std::invalid_argument("c_functions: n must be positive");
  const Apfloat tail = constant(kSptErrorConstant, prec) * exp2(q_of_n(n, prec)) *
                       square(Apfloat::from_int(24 * n - 1, prec));
  CFunctions out{alpha_n(n, prec), beta_n(n, prec), gamma_n(n, prec), gamma_n(n, eps, prec),
                 Apfloat(prec),    Apfloat(prec),   Apfloat(prec),    Apfloat(prec),
                 Apfloat(prec),    std::nullopt};
  out.c1 = out.alpha - out.beta * out.gamma;
  out.c2 = kLehmerConstant * out.gamma + tail;
  out.c3 = out.c2 / out.c1;
  out.c4 = out.beta * out.gamma_eps - out.alpha;
  out.c5 = kLehmerConstant * out.gamma_eps + tail;
  if (out.c4.certainly_positive()) out.c6_value = out.c5 / out.c4;
  return out;
}

ThresholdRecord find_threshold(std::string name, std::optional<long> claimed,
                               const std::function<bool(long)>& predicate, long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("find_threshold: empty window");
  if (!predicate(hi)) {
    throw std::runtime_error("find_threshold: " + name + " fails at the scan ceiling " +
                             std::to_string(hi));
  }
  long n = hi - 1;
  while (n >= lo && predicate(n)) --n;
  return {std::move(name), claimed, n + 1, lo, hi};
}

bool m_below_one(long n) {
  return decide_positive([n](long prec) { return m_gap(n, prec); });
}

bool lower_condition_holds(long n) {
  return decide_positive([n](long prec) {
    const Apfloat eps = chen_epsilon(prec);
    const CFunctions c = c_functions(n, eps, prec);
    return n - log_threshold(c.c3, prec);
  });
}

bool upper_condition_holds(long n, const std::function<Apfloat(long)>& eps) {
  const bool c4_ok = decide_positive([&](long prec) { return c_functions(n, eps(prec), prec).c4; });
  if (!c4_ok) return false;
  return decide_positive([&](long prec) {
    const CFunctions c = c_functions(n, eps(prec), prec);
    if (!c.c6_value) return Apfloat(prec).with_error(1.0);  // undecided; ask for more bits
    return n - log_threshold(c.c6(), prec);
  });
}

bool upper_condition_holds(long n) { return upper_condition_holds(n, chen_epsilon); }

bool c4_positive(long n) {
  return decide_positive([n](long prec) { return c_functions(n, chen_epsilon(prec), prec).c4; });
}

bool bk_condition_holds(long n, long a, long k) {
  if (a < 1 || k < 1) throw std::invalid_argument("bk_condition_holds: a and k must be positive");
  return decide_positive([=](long prec) {
    // Both sides divided by e^{lambda/2}.
    const Apfloat lambda = lambda_of(n, prec);
    Apfloat nk = Apfloat::from_int(1, prec);
    for (long i = 0; i < k; ++i) nk = nk * n;
    const Apfloat lhs = alpha_n(n, prec) * exp(lambda / 2) / (a * nk);
    const Apfloat rhs = constant(kSptErrorConstant, prec) * exp2(q_of_n(n, prec)) *
                        square(Apfloat::from_int(24 * n - 1, prec));
    return lhs - rhs;
  });
}

bool spt2_lower_exceeds_target(long n) {
  if (!envelope_defined(n)) return false;
  return decide_positive([n](long prec) {
    return pds_envelope(n, prec).spt2_lower - 1 / pow_three_halves(24 * n, prec);
  });
}

bool spt2_upper_below_target(long n) {
  if (!envelope_defined(n)) return false;
  return decide_positive([n](long prec) {
    return 2 / pow_three_halves(n, prec) - pds_envelope(n, prec).spt2_upper;
  });
}

Apfloat chen4_lower_function(long m, long prec) {
  if (m < 4) throw std::invalid_argument("chen4_lower_function: m must be at least 4");
  const Apfloat pi = Apfloat::pi(prec);
  const Apfloat m1 = Apfloat::from_int(m + 1, prec);
  const Apfloat head = sqrt(6 * m1) / (2 * square(pi) * m1 * exp(1 / (6 * m1)));
  const Apfloat top = Apfloat::from_int(36 + 2 * m, prec);
  return 2 * log(head) + 4 * sqrt(m1) - log(Apfloat::from_int(90000, prec)) - log(sqrt(top)) -
         pi * sqrt(2 * top) / root(3, prec);
}

bool chen4_bound_positive(long m) {
  if (m < 4) return false;
  return decide_positive([m](long prec) { return chen4_lower_function(m, prec); });
}

Apfloat chen6_correction(long n, long prec) {
  const Apfloat x = Apfloat::from_int(n, prec);
  return 5 / (3 * square(x) * sqrt(x)) - 1 / (2 * square(x)) + 2 * m_of_n(n, prec) +
         g_of_n(n + 1, prec) + g_of_n(n - 1, prec);
}

bool chen6_correction_negative(long n) {
  if (n < 2 || !m_below_one(n - 1) || !m_below_one(n) || !m_below_one(n + 1)) return false;
  return decide_positive([n](long prec) { return -chen6_correction(n, prec); });
}

ThresholdRecord theorem_bounds_Bk(long a, long k, long ceiling) {
  return find_threshold("B" + std::to_string(k) + "(" + std::to_string(a) + ")", std::nullopt,
                        [=](long n) { return bk_condition_holds(n, a, k); }, 1, ceiling);
}

std::vector<ThresholdRecord> reproduce_thresholds() {
  const long hi = kThresholdCeiling;
  std::vector<ThresholdRecord> out;
  out.push_back(find_threshold("lower_condition", 5310, lower_condition_holds, 1, hi));
  out.push_back(find_threshold("upper_condition", 4845,
                               [](long n) { return upper_condition_holds(n); }, 1, hi));
  out.push_back(find_threshold("c4_positive", 4, c4_positive, 1, hi));
  out.push_back(find_threshold("m_below_one", 4698, m_below_one, 1, hi));
  ThresholdRecord b1 = theorem_bounds_Bk(1, 1, hi);
  b1.predicate_name = "bk_condition(a=1,k=1)";
  b1.claimed_threshold = 5729;
  out.push_back(std::move(b1));
  out.push_back(find_threshold("spt2_lower_exceeds_target", 6553, spt2_lower_exceeds_target, 2, hi));
  out.push_back(find_threshold("spt2_upper_below_target", 6445, spt2_upper_below_target, 2, hi));
  out.push_back(find_threshold("chen4_bound_positive", 6244, chen4_bound_positive, 4, hi));
  out.push_back(find_threshold("chen6_correction_negative", 7211, chen6_correction_negative, 2, hi));
  return out;
}

}  // namespace sptkit

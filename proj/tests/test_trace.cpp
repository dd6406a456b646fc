#include <cmath>

#include <gtest/gtest.h>

#include "sptkit/bounds.hpp"
#include "sptkit/exactform.hpp"
#include "sptkit/qseries.hpp"
#include "sptkit/trace.hpp"

using namespace sptkit;

namespace {

// 12 spt(n) + (24n - 1) p(n) from brute-force-checked small values.
mpz_class trace_oracle(long n) { return 12 * spt(n) + (24 * n - 1) * partition_p(n); }

}  // namespace

TEST(TraceExact, SmallValues) {
  EXPECT_EQ(trace_S_exact(1), 35);
  EXPECT_EQ(trace_S_exact(2), 130);
  EXPECT_EQ(trace_S_exact(4), 595);
  for (long n = 1; n <= 100; ++n) EXPECT_EQ(trace_S_exact(n), trace_oracle(n)) << n;
  EXPECT_THROW(trace_S_exact(0), std::invalid_argument);
}

TEST(TraceNumeric, RoundsToExactInteger) {
  for (long n : {1L, 2L, 4L, 7L, 12L, 24L, 25L}) {
    const TraceResult r = trace_S(n);
    EXPECT_TRUE(r.success) << n;
    EXPECT_EQ(r.exact, trace_oracle(n)) << n;
    EXPECT_TRUE(r.value.contains(r.exact)) << n;
    EXPECT_LT(r.residual, 0.5) << n;
    EXPECT_LE(r.tail_bound, 1e-6) << n;
    EXPECT_TRUE(r.imaginary.contains_zero()) << n;
    EXPECT_EQ(r.forms, discriminant_data(n).H) << n;
    EXPECT_GE(r.truncation, kStartTruncation) << n;
  }
}

TEST(TraceNumeric, TighterToleranceStillContainsExact) {
  const TraceResult r = trace_S(47, 1e-20);
  EXPECT_TRUE(r.success);
  EXPECT_LE(r.tail_bound, 1e-20);
  EXPECT_TRUE(r.value.contains(trace_oracle(47)));
  EXPECT_THROW(trace_S(3, 0.0), std::invalid_argument);
  EXPECT_THROW(trace_S(0), std::invalid_argument);
}

TEST(EvaluateF, RejectsShortTruncation) {
  const QuadraticForm q = make_form(6, 1, 1);
  const CosetRep& g = select_gamma(q);
  EXPECT_THROW(evaluate_f_at(q, g, kMinTruncation - 1, 128), std::invalid_argument);
  EXPECT_NO_THROW(evaluate_f_at(q, g, kMinTruncation, 128));
}

TEST(EvaluateF, InfinityCuspLeadingTerm) {
  // At [6,1,n] the expansion starts with e(-tau), of modulus e^{pi sqrt(24n-1)/6}.
  const long n = 30;
  const QuadraticForm q = make_form(6, 1, n);
  const ComplexBall v = evaluate_f_at(q, select_gamma(q), 400, 256);
  const double lead = std::exp(M_PI * std::sqrt(24.0 * n - 1) / 6);
  EXPECT_NEAR(std::hypot(v.re.to_double(), v.im.to_double()) / lead, 1.0, 1e-3);
}

TEST(TailMajorant, DecreasesInTruncation) {
  const QuadraticForm q = make_form(1, 1, 6);
  const CosetRep& g = select_gamma(q);
  Apfloat previous = tail_majorant(q, g, kMinTruncation, 128);
  for (long M = 2 * kMinTruncation; M <= 3000; M *= 2) {
    const Apfloat t = tail_majorant(q, g, M, 128);
    EXPECT_TRUE(t.certainly_positive());
    EXPECT_TRUE(certainly_less(t, previous)) << M;
    previous = t;
  }
  // Below the convergence point r <= 0.
  EXPECT_THROW(tail_majorant(q, g, 10, 128), std::domain_error);
}

TEST(CoefficientConstant, Value) {
  // 8 sqrt(6) pi^{3/2} + 16 pi^2 zeta(3/2)^2 in doubles.
  const double zeta32 = 2.612375348685488343;
  const double c = 8 * std::sqrt(6.0) * std::pow(M_PI, 1.5) + 16 * M_PI * M_PI * zeta32 * zeta32;
  EXPECT_NEAR(coefficient_constant(128).to_double(), c, 1e-9 * c);
}

TEST(MainTermAnchor, EqualsLeadingExponential) {
  for (long n : {6L, 10L, 50L, 200L}) {
    const long prec = default_precision(n);
    const Apfloat target = 2 * sqrt(Apfloat::from_int(3, prec)) * exp(lambda_of(n, prec));
    EXPECT_TRUE((main_term_anchor(n, prec) - target).contains_zero()) << n;
  }
}

TEST(MainTermAnchor, TraceApproachesAnchor) {
  double previous = 1e9;
  for (long n : {5L, 10L, 20L, 40L}) {
    const double ratio =
        (Apfloat::from_integer(trace_S_exact(n), 256) / main_term_anchor(n, 256)).to_double();
    const double gap = std::fabs(ratio - 1);
    EXPECT_LT(gap, previous) << n;
    previous = gap;
  }
}

TEST(MainTermAnchor, EffectiveTraceBoundHolds) {
  for (long n = 1; n <= 300; ++n) {
    const long prec = default_precision(n) + 32;
    const Apfloat anchor = 2 * sqrt(Apfloat::from_int(3, prec)) * exp(lambda_of(n, prec));
    const Apfloat gap = abs(Apfloat::from_integer(trace_S_exact(n), prec) - anchor);
    EXPECT_TRUE(certainly_less(gap, trace_error_bound(n, prec))) << n;
  }
}

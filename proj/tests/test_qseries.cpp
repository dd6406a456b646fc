#include <cmath>
#include <functional>
#include <random>
#include <thread>
#include <vector>

#include <gtest/gtest.h>

#include "sptkit/qseries.hpp"
#include "sptkit/trace.hpp"

using namespace sptkit;

namespace {

// Walks every partition of n into parts <= max_part, largest first.
void enumerate(long n, long max_part, std::vector<long>& parts,
               const std::function<void(const std::vector<long>&)>& visit) {
  if (n == 0) {
    visit(parts);
    return;
  }
  for (long k = std::min(n, max_part); k >= 1; --k) {
    parts.push_back(k);
    enumerate(n - k, k, parts, visit);
    parts.pop_back();
  }
}

struct Brute {
  long p = 0;
  long spt = 0;
};

Brute brute_force(long n) {
  Brute out;
  std::vector<long> parts;
  enumerate(n, n, parts, [&](const std::vector<long>& v) {
    ++out.p;
    const long smallest = v.back();
    for (long x : v) out.spt += (x == smallest);
  });
  return out;
}

IntegerSeries random_series(std::mt19937_64& rng, std::size_t order, long lead) {
  std::uniform_int_distribution<long> coeff(-50, 50);
  std::vector<mpz_class> c(order);
  for (auto& x : c) x = coeff(rng);
  return IntegerSeries(lead, std::move(c));
}

}  // namespace

TEST(EtaSeries, SmallOrders) {
  EXPECT_EQ(eta_series(1).coeffs(), std::vector<mpz_class>{1});
  const std::vector<mpz_class> six = {1, -1, -1, 0, 0, 1};
  EXPECT_EQ(eta_series(6).coeffs(), six);
  EXPECT_THROW(eta_series(0), std::invalid_argument);
}

TEST(EtaSeries, PentagonalNumberTheorem) {
  const long order = 400;
  std::vector<mpz_class> oracle(order);
  for (long k = -20; k <= 20; ++k) {
    const long e = k * (3 * k - 1) / 2;
    if (e < order) oracle[static_cast<std::size_t>(e)] += (k % 2 == 0) ? 1 : -1;
  }
  EXPECT_EQ(eta_series(order).coeffs(), oracle);
  // q^12 comes from k = -3, with sign (-1)^3.
  EXPECT_EQ(eta_series(13).coefficient(12), -1);
}

TEST(EisensteinE4, LeadingCoefficients) {
  const IntegerSeries e4 = eisenstein_E4(100);
  EXPECT_EQ(e4.coefficient(0), 1);
  EXPECT_EQ(e4.coefficient(1), 240);
  EXPECT_EQ(e4.coefficient(2), 2160);
  for (long m = 1; m < 100; ++m) {
    mpz_class sigma = 0;
    for (long d = 1; d <= m; ++d) {
      if (m % d == 0) sigma += mpz_class(d) * d * d;
    }
    EXPECT_EQ(e4.coefficient(m), 240 * sigma) << m;
  }
}

TEST(PartitionP, SmallValues) {
  EXPECT_EQ(partition_p(0), 1);
  EXPECT_EQ(partition_p(4), 5);
  EXPECT_EQ(partition_p(100), mpz_class("190569292"));
  EXPECT_THROW(partition_p(-1), std::invalid_argument);
}

TEST(PartitionP, MatchesCoinChangeCount) {
  // Number of ways to write n with parts 1..n, by the standard knapsack count.
  const long top = 2000;
  std::vector<mpz_class> ways(top + 1);
  ways[0] = 1;
  for (long part = 1; part <= top; ++part) {
    for (long n = part; n <= top; ++n) ways[static_cast<std::size_t>(n)] += ways[static_cast<std::size_t>(n - part)];
  }
  const auto table = exact_table(top);
  const IntegerSeries inverse = eta_series(top + 1).inverse();
  for (long n = 0; n <= top; ++n) {
    ASSERT_EQ(table->p[static_cast<std::size_t>(n)], ways[static_cast<std::size_t>(n)]) << n;
    ASSERT_EQ(inverse.coefficient(n), ways[static_cast<std::size_t>(n)]) << n;
  }
}

TEST(Spt, MatchesBruteForceEnumeration) {
  const IntegerSeries s = spt_series(41);
  EXPECT_EQ(s.coefficient(0), 0);
  for (long n = 1; n <= 40; ++n) {
    const Brute b = brute_force(n);
    EXPECT_EQ(s.coefficient(n), b.spt) << n;
    EXPECT_EQ(spt(n), b.spt) << n;
    EXPECT_EQ(partition_p(n), b.p) << n;
  }
  EXPECT_EQ(spt(4), 10);
  EXPECT_EQ(spt(1), 1);
  EXPECT_THROW(spt(0), std::invalid_argument);
}

TEST(Spt, TableAgreesWithSeries) {
  const IntegerSeries s = spt_series(600);
  for (long n = 1; n < 600; ++n) ASSERT_EQ(s.coefficient(n), spt(n)) << n;
}

TEST(Spt, ConcurrentReadersSeeOneTable) {
  std::vector<mpz_class> seen(8);
  std::vector<std::thread> workers;
  for (int i = 0; i < 8; ++i) {
    workers.emplace_back([&, i] { seen[static_cast<std::size_t>(i)] = spt(300 + 100 * i); });
  }
  for (auto& w : workers) w.join();
  const IntegerSeries s = spt_series(1001);
  for (int i = 0; i < 8; ++i) EXPECT_EQ(seen[static_cast<std::size_t>(i)], s.coefficient(300 + 100 * i));
}

TEST(FCoefficients, RegressionValues) {
  const IntegerSeries f = f_coefficients(7);
  EXPECT_EQ(f.leading_exponent(), -1);
  const std::vector<mpz_class> expected = {1, 12, 77, 376, 1299, 4600, 12025};
  EXPECT_EQ(f.coeffs(), expected);
  EXPECT_THROW(f_coefficients(1), std::invalid_argument);
}

TEST(FCoefficients, GrowthBound) {
  const IntegerSeries f = f_coefficients(60);
  const Apfloat C = coefficient_constant(128);
  for (long m = 1; m <= 50; ++m) {
    const Apfloat bound = C * exp(4 * Apfloat::pi(128) * sqrt(Apfloat::from_int(m, 128)));
    const Apfloat b = Apfloat::from_integer(abs(f.coefficient(m)), 128);
    EXPECT_TRUE(certainly_less(b, bound)) << m;
  }
  EXPECT_EQ(f.coefficient(0), 12);
}

TEST(IntegerSeriesOps, RandomAlgebraLaws) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const IntegerSeries a = random_series(rng, 12, 0);
    const IntegerSeries b = random_series(rng, 9, 1);
    const IntegerSeries c = random_series(rng, 15, -1);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c.shifted(1)), a * b + a * c.shifted(1));
  }
}

TEST(IntegerSeriesOps, TruncationPropagates) {
  const IntegerSeries a = IntegerSeries::one(5);
  const IntegerSeries b = eta_series(10);
  const IntegerSeries prod = a * b;
  EXPECT_EQ(prod.order(), 5u);
  EXPECT_THROW(prod.coefficient(5), std::out_of_range);
  EXPECT_EQ(prod.coefficient(-3), 0);
  const IntegerSeries sum = a + b;
  EXPECT_EQ(sum.max_known_exponent(), 4);
}

TEST(IntegerSeriesOps, InverseAndCompose) {
  const IntegerSeries eta = eta_series(50);
  EXPECT_EQ(eta * eta.inverse(), IntegerSeries::one(50));
  const IntegerSeries sq = eta.compose_power(2);
  EXPECT_EQ(sq.order(), 100u);
  EXPECT_EQ(sq.coefficient(2), -1);
  EXPECT_EQ(sq.coefficient(3), 0);
  EXPECT_THROW(IntegerSeries::one(3).scaled(2).inverse(), std::invalid_argument);
}

TEST(IntegerSeriesOps, ExactDivide) {
  const IntegerSeries s(0, {24, 48, -72});
  EXPECT_EQ(s.exact_divide(24), IntegerSeries(0, {1, 2, -3}));
  EXPECT_THROW(s.exact_divide(5), std::logic_error);
}

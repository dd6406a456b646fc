#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include <gmpxx.h>

namespace sptkit {

/**
 * Truncated q-expansion with exact integer coefficients.
 *
 * Stores the coefficients of q^e, q^(e+1), ..., q^(e+order-1) where e is the
 * leading exponent. Everything past q^(e+order-1) is unknown, and every
 * operation propagates that truncation instead of padding with zeros.
 */
class IntegerSeries {
 public:
  IntegerSeries() = default;
  IntegerSeries(long leading_exponent, std::vector<mpz_class> coeffs);

  static IntegerSeries zero(std::size_t order, long leading_exponent = 0);
  /// The series 1 known through q^(order-1).
  static IntegerSeries one(std::size_t order);

  long leading_exponent() const { return leading_; }
  std::size_t order() const { return coeffs_.size(); }
  /// Largest exponent whose coefficient is known.
  long max_known_exponent() const { return leading_ + static_cast<long>(coeffs_.size()) - 1; }

  const std::vector<mpz_class>& coeffs() const { return coeffs_; }
  /// Stored coefficient by index (index 0 is q^leading_exponent).
  const mpz_class& operator[](std::size_t index) const { return coeffs_[index]; }
  /// Coefficient of q^exponent; zero below the leading exponent, throws
  /// std::out_of_range past the truncation.
  mpz_class coefficient(long exponent) const;

  IntegerSeries truncated(std::size_t order) const;
  /// Multiplies by q^shift.
  IntegerSeries shifted(long shift) const;
  /// Substitutes q -> q^k.
  IntegerSeries compose_power(long k) const;
  IntegerSeries scaled(const mpz_class& factor) const;
  /// Divides every coefficient by `divisor`; throws std::logic_error when a
  /// coefficient is not divisible.
  IntegerSeries exact_divide(const mpz_class& divisor) const;
  /// Multiplicative inverse; the leading stored coefficient must be +-1.
  IntegerSeries inverse() const;

  friend IntegerSeries operator+(const IntegerSeries& a, const IntegerSeries& b);
  friend IntegerSeries operator-(const IntegerSeries& a, const IntegerSeries& b);
  friend IntegerSeries operator*(const IntegerSeries& a, const IntegerSeries& b);
  friend bool operator==(const IntegerSeries& a, const IntegerSeries& b) = default;

 private:
  long leading_ = 0;
  std::vector<mpz_class> coeffs_;
};

/// prod_{n>=1} (1 - q^n) through q^(order-1).
IntegerSeries eta_series(long order);

/// E_4 = 1 + 240 sum sigma_3(n) q^n through q^(order-1).
IntegerSeries eisenstein_E4(long order);

/// Exact p(n) by Euler's pentagonal recurrence.
mpz_class partition_p(long n);

/// sum_n spt(n) q^n through q^(order-1), built from the generating function
/// sum_{n>=1} q^n / ((1-q^n)^2 (q^{n+1};q)_inf).
IntegerSeries spt_series(long order);

/// Exact spt(n) for n >= 1, served from the shared table.
mpz_class spt(long n);

/**
 * Fourier coefficients b(m) of
 *   f = (E4(z) - 4E4(2z) - 9E4(3z) + 36E4(6z)) / (24 (eta(z)eta(2z)eta(3z)eta(6z))^2).
 * The result has leading exponent -1 and `order` stored coefficients, so it
 * covers b(-1), b(0), ..., b(order-2).
 */
IntegerSeries f_coefficients(long order);

/**
 * Exact p(n) and spt(n) for 0 <= n <= max_n. spt[0] is 0 by convention.
 * Immutable once built.
 */
struct ExactTable {
  long max_n = 0;
  std::vector<mpz_class> p;
  std::vector<mpz_class> spt;

  static ExactTable build(long max_n);
};

/**
 * Process-wide table covering at least 0..max_n. The returned snapshot stays
 * valid while held; a request past the current extent rebuilds the table
 * under a single writer lock and publishes the new snapshot.
 */
std::shared_ptr<const ExactTable> exact_table(long max_n);

/// Shared b(m) table covering at least m <= max_m.
std::shared_ptr<const IntegerSeries> f_coefficient_table(long max_m);

}  // namespace sptkit

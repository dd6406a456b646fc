#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>
#include <mpfr.h>

namespace sptkit {

/// Raised when a rigorous comparison cannot be decided at the largest
/// precision a caller allows.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Arbitrary-precision real with a rigorous error radius.
 *
 * The stored midpoint is an MPFR number at `precision()` bits; the radius is
 * a 64-bit MPFR number that is always rounded upward. Every operation
 * returns a ball guaranteed to contain the exact result of applying the
 * operation to any points of the input balls.
 *
 * Propagation rules (a, b midpoints; ea, eb radii; u = one ulp of the
 * rounded result, added only when MPFR reports an inexact result):
 *   a +- b   : ea + eb + u
 *   a * b    : |a| eb + |b| ea + ea eb + u
 *   a / b    : (|a| eb + |b| ea) / (|b| (|b| - eb)) + u, requires |b| > eb
 *   exp(a)   : exp(a) (exp(ea) - 1) + u
 *   log(a)   : ea / (a - ea) + u, requires a > ea
 *   sqrt(a)  : ea / (sqrt(a - ea) + sqrt(a)) + u
 *   cos, sin : ea + u
 */
class Apfloat {
 public:
  static constexpr long kMinPrecision = 64;

  Apfloat();
  explicit Apfloat(long precision_bits);
  Apfloat(const Apfloat& other);
  Apfloat(Apfloat&& other) noexcept;
  Apfloat& operator=(const Apfloat& other);
  Apfloat& operator=(Apfloat&& other) noexcept;
  ~Apfloat();

  static Apfloat from_integer(const mpz_class& value, long precision_bits);
  static Apfloat from_int(long value, long precision_bits);
  static Apfloat from_rational(const mpq_class& value, long precision_bits);
  /// Exact decimal literal such as "3.59e22" or "1.1714".
  static Apfloat from_decimal(std::string_view literal, long precision_bits);
  static Apfloat pi(long precision_bits);
  static Apfloat log2(long precision_bits);
  /// Riemann zeta at an exactly representable argument s > 1.
  static Apfloat zeta(double s, long precision_bits);

  long precision() const { return static_cast<long>(mpfr_get_prec(mid_)); }

  /// Radius rounded up to a double.
  double rigorous_error() const;
  double to_double() const;
  double lower_double() const;
  double upper_double() const;

  /// Returns a copy whose radius is enlarged by an upper bound for |extra|.
  Apfloat with_error(const Apfloat& extra) const;
  Apfloat with_error(double extra) const;

  bool contains(const mpz_class& value) const;
  bool contains_zero() const;
  bool certainly_positive() const;
  bool certainly_negative() const;

  /// Midpoint in scientific notation followed by "±" and the radius.
  std::string to_string(int digits = 20) const;
  /// Midpoint only, scientific notation with `digits` significant digits.
  std::string mid_string(int digits = 20) const;
  /// Midpoint as a fixed-point decimal with `fraction_digits` digits.
  std::string fixed_string(int fraction_digits) const;
  /// Outward-rounded upper endpoint, scientific notation.
  std::string upper_string(int digits = 20) const;

  Apfloat& operator+=(const Apfloat& rhs);
  Apfloat& operator-=(const Apfloat& rhs);
  Apfloat& operator*=(const Apfloat& rhs);
  Apfloat& operator/=(const Apfloat& rhs);

  friend Apfloat operator+(const Apfloat& a, const Apfloat& b);
  friend Apfloat operator-(const Apfloat& a, const Apfloat& b);
  friend Apfloat operator*(const Apfloat& a, const Apfloat& b);
  friend Apfloat operator/(const Apfloat& a, const Apfloat& b);
  friend Apfloat operator-(const Apfloat& a);

  friend Apfloat operator+(const Apfloat& a, long b);
  friend Apfloat operator-(const Apfloat& a, long b);
  friend Apfloat operator-(long a, const Apfloat& b);
  friend Apfloat operator*(const Apfloat& a, long b);
  friend Apfloat operator*(long a, const Apfloat& b);
  friend Apfloat operator/(const Apfloat& a, long b);
  friend Apfloat operator/(long a, const Apfloat& b);
  friend Apfloat operator+(long a, const Apfloat& b);

  friend Apfloat exp(const Apfloat& x);
  friend Apfloat log(const Apfloat& x);
  friend Apfloat sqrt(const Apfloat& x);
  friend Apfloat cos(const Apfloat& x);
  friend Apfloat sin(const Apfloat& x);
  friend Apfloat abs(const Apfloat& x);

  friend bool certainly_less(const Apfloat& a, const Apfloat& b);

  const __mpfr_struct* mid() const { return mid_; }
  const __mpfr_struct* rad() const { return rad_; }

 private:
  void add_rounding_error(int ternary);

  mpfr_t mid_;
  mpfr_t rad_;
};

Apfloat square(const Apfloat& x);
/// x^y for x > 0.
Apfloat pow(const Apfloat& x, const Apfloat& y);
/// 2^x.
Apfloat exp2(const Apfloat& x);

/// a < b holds for every pair of points in the two balls.
bool certainly_less(const Apfloat& a, const Apfloat& b);
inline bool certainly_greater(const Apfloat& a, const Apfloat& b) { return certainly_less(b, a); }

/// Exact rational value of a decimal literal ("-12.5e-3").
mpq_class decimal_to_rational(std::string_view literal);

/**
 * Decides the sign of an expression rigorously. `expr` is evaluated at
 * `start_bits`, doubling the precision while the resulting ball straddles
 * zero. Returns true for a certainly positive value, false for a certainly
 * negative one, and throws PrecisionError once `max_bits` is exceeded.
 */
bool decide_positive(const std::function<Apfloat(long)>& expr, long start_bits = 128,
                     long max_bits = 8192);

}  // namespace sptkit

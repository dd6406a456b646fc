#include "sptkit/apfloat.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <string>

namespace sptkit {
namespace {

constexpr mpfr_prec_t kRadiusBits = 64;

// Scratch MPFR variable with scoped lifetime.
class Scratch {
 public:
  explicit Scratch(mpfr_prec_t bits) { mpfr_init2(v_, bits); }
  ~Scratch() { mpfr_clear(v_); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
  mpfr_ptr get() { return v_; }
  operator mpfr_ptr() { return v_; }

 private:
  mpfr_t v_;
};

long checked_precision(long bits) {
  if (bits < Apfloat::kMinPrecision) {
    throw std::invalid_argument("Apfloat precision must be at least 64 bits");
  }
  return bits;
}

std::string take_string(char* raw) {
  std::string out(raw);
  mpfr_free_str(raw);
  return out;
}

}  // namespace

Apfloat::Apfloat() : Apfloat(128) {}

Apfloat::Apfloat(long precision_bits) {
  mpfr_init2(mid_, checked_precision(precision_bits));
  mpfr_init2(rad_, kRadiusBits);
  mpfr_set_zero(mid_, 1);
  mpfr_set_zero(rad_, 1);
}

Apfloat::Apfloat(const Apfloat& other) {
  mpfr_init2(mid_, mpfr_get_prec(other.mid_));
  mpfr_init2(rad_, kRadiusBits);
  mpfr_set(mid_, other.mid_, MPFR_RNDN);
  mpfr_set(rad_, other.rad_, MPFR_RNDU);
}

Apfloat::Apfloat(Apfloat&& other) noexcept {
  mpfr_init2(mid_, MPFR_PREC_MIN);
  mpfr_init2(rad_, kRadiusBits);
  mpfr_swap(mid_, other.mid_);
  mpfr_swap(rad_, other.rad_);
}

Apfloat& Apfloat::operator=(const Apfloat& other) {
  if (this != &other) {
    mpfr_set_prec(mid_, mpfr_get_prec(other.mid_));
    mpfr_set(mid_, other.mid_, MPFR_RNDN);
    mpfr_set(rad_, other.rad_, MPFR_RNDU);
  }
  return *this;
}

Apfloat& Apfloat::operator=(Apfloat&& other) noexcept {
  if (this != &other) {
    mpfr_swap(mid_, other.mid_);
    mpfr_swap(rad_, other.rad_);
  }
  return *this;
}

Apfloat::~Apfloat() {
  mpfr_clear(mid_);
  mpfr_clear(rad_);
}

void Apfloat::add_rounding_error(int ternary) {
  if (ternary == 0 || mpfr_zero_p(mid_)) return;
  Scratch ulp(kRadiusBits);
  mpfr_set_ui_2exp(ulp, 1, mpfr_get_exp(mid_) - mpfr_get_prec(mid_), MPFR_RNDU);
  mpfr_add(rad_, rad_, ulp, MPFR_RNDU);
}

Apfloat Apfloat::from_integer(const mpz_class& value, long precision_bits) {
  Apfloat out(precision_bits);
  out.add_rounding_error(mpfr_set_z(out.mid_, value.get_mpz_t(), MPFR_RNDN));
  return out;
}

Apfloat Apfloat::from_int(long value, long precision_bits) {
  Apfloat out(precision_bits);
  out.add_rounding_error(mpfr_set_si(out.mid_, value, MPFR_RNDN));
  return out;
}

Apfloat Apfloat::from_rational(const mpq_class& value, long precision_bits) {
  Apfloat out(precision_bits);
  out.add_rounding_error(mpfr_set_q(out.mid_, value.get_mpq_t(), MPFR_RNDN));
  return out;
}

Apfloat Apfloat::from_decimal(std::string_view literal, long precision_bits) {
  return from_rational(decimal_to_rational(literal), precision_bits);
}

Apfloat Apfloat::pi(long precision_bits) {
  Apfloat out(precision_bits);
  out.add_rounding_error(mpfr_const_pi(out.mid_, MPFR_RNDN));
  return out;
}

Apfloat Apfloat::log2(long precision_bits) {
  Apfloat out(precision_bits);
  out.add_rounding_error(mpfr_const_log2(out.mid_, MPFR_RNDN));
  return out;
}

Apfloat Apfloat::zeta(double s, long precision_bits) {
  if (!(s > 1.0)) throw std::domain_error("zeta: argument must exceed 1");
  Apfloat out(precision_bits);
  Scratch arg(64);
  mpfr_set_d(arg, s, MPFR_RNDN);
  out.add_rounding_error(mpfr_zeta(out.mid_, arg, MPFR_RNDN));
  return out;
}

double Apfloat::rigorous_error() const { return mpfr_get_d(rad_, MPFR_RNDU); }

double Apfloat::to_double() const { return mpfr_get_d(mid_, MPFR_RNDN); }

double Apfloat::lower_double() const {
  Scratch t(mpfr_get_prec(mid_) + 8);
  mpfr_sub(t, mid_, rad_, MPFR_RNDD);
  return mpfr_get_d(t, MPFR_RNDD);
}

double Apfloat::upper_double() const {
  Scratch t(mpfr_get_prec(mid_) + 8);
  mpfr_add(t, mid_, rad_, MPFR_RNDU);
  return mpfr_get_d(t, MPFR_RNDU);
}

Apfloat Apfloat::with_error(const Apfloat& extra) const {
  Apfloat out(*this);
  Scratch mag(kRadiusBits);
  mpfr_abs(mag, extra.mid_, MPFR_RNDU);
  mpfr_add(mag, mag, extra.rad_, MPFR_RNDU);
  mpfr_add(out.rad_, out.rad_, mag, MPFR_RNDU);
  return out;
}

Apfloat Apfloat::with_error(double extra) const {
  Apfloat out(*this);
  mpfr_add_d(out.rad_, out.rad_, std::fabs(extra), MPFR_RNDU);
  return out;
}

bool Apfloat::contains(const mpz_class& value) const {
  // |mid - value| is computed exactly, so the test is exact.
  const long z_bits = static_cast<long>(mpz_sizeinbase(value.get_mpz_t(), 2));
  long top = z_bits;
  long bottom = 0;
  if (!mpfr_zero_p(mid_)) {
    top = std::max(top, static_cast<long>(mpfr_get_exp(mid_)));
    bottom = std::min(0L, static_cast<long>(mpfr_get_exp(mid_) - mpfr_get_prec(mid_)));
  }
  Scratch diff(std::max<long>(top - bottom + 2, 64));
  mpfr_sub_z(diff, mid_, value.get_mpz_t(), MPFR_RNDN);
  mpfr_abs(diff, diff, MPFR_RNDN);
  return mpfr_lessequal_p(diff, rad_) != 0;
}

bool Apfloat::contains_zero() const {
  Scratch a(mpfr_get_prec(mid_));
  mpfr_abs(a, mid_, MPFR_RNDN);
  return mpfr_lessequal_p(a, rad_) != 0;
}

bool Apfloat::certainly_positive() const {
  Scratch lo(mpfr_get_prec(mid_) + 8);
  mpfr_sub(lo, mid_, rad_, MPFR_RNDD);
  return mpfr_sgn(lo.get()) > 0;
}

bool Apfloat::certainly_negative() const {
  Scratch hi(mpfr_get_prec(mid_) + 8);
  mpfr_add(hi, mid_, rad_, MPFR_RNDU);
  return mpfr_sgn(hi.get()) < 0;
}

std::string Apfloat::mid_string(int digits) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", std::max(digits - 1, 0), mid_);
  return take_string(raw);
}

std::string Apfloat::to_string(int digits) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.2RUe", rad_);
  return mid_string(digits) + "\xC2\xB1" + take_string(raw);
}

std::string Apfloat::fixed_string(int fraction_digits) const {
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Rf", fraction_digits, mid_);
  return take_string(raw);
}

std::string Apfloat::upper_string(int digits) const {
  Scratch hi(mpfr_get_prec(mid_) + 8);
  mpfr_add(hi, mid_, rad_, MPFR_RNDU);
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*RUe", std::max(digits - 1, 0), hi.get());
  return take_string(raw);
}

Apfloat& Apfloat::operator+=(const Apfloat& rhs) { return *this = *this + rhs; }
Apfloat& Apfloat::operator-=(const Apfloat& rhs) { return *this = *this - rhs; }
Apfloat& Apfloat::operator*=(const Apfloat& rhs) { return *this = *this * rhs; }
Apfloat& Apfloat::operator/=(const Apfloat& rhs) { return *this = *this / rhs; }

Apfloat operator+(const Apfloat& a, const Apfloat& b) {
  Apfloat out(std::max(a.precision(), b.precision()));
  const int t = mpfr_add(out.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(out.rad_, a.rad_, b.rad_, MPFR_RNDU);
  out.add_rounding_error(t);
  return out;
}

Apfloat operator-(const Apfloat& a, const Apfloat& b) {
  Apfloat out(std::max(a.precision(), b.precision()));
  const int t = mpfr_sub(out.mid_, a.mid_, b.mid_, MPFR_RNDN);
  mpfr_add(out.rad_, a.rad_, b.rad_, MPFR_RNDU);
  out.add_rounding_error(t);
  return out;
}

Apfloat operator*(const Apfloat& a, const Apfloat& b) {
  Apfloat out(std::max(a.precision(), b.precision()));
  const int t = mpfr_mul(out.mid_, a.mid_, b.mid_, MPFR_RNDN);
  Scratch abs_a(kRadiusBits), abs_b(kRadiusBits), term(kRadiusBits);
  mpfr_abs(abs_a, a.mid_, MPFR_RNDU);
  mpfr_abs(abs_b, b.mid_, MPFR_RNDU);
  mpfr_mul(out.rad_, abs_a, b.rad_, MPFR_RNDU);
  mpfr_mul(term, abs_b, a.rad_, MPFR_RNDU);
  mpfr_add(out.rad_, out.rad_, term, MPFR_RNDU);
  mpfr_mul(term, a.rad_, b.rad_, MPFR_RNDU);
  mpfr_add(out.rad_, out.rad_, term, MPFR_RNDU);
  out.add_rounding_error(t);
  return out;
}

Apfloat operator/(const Apfloat& a, const Apfloat& b) {
  Scratch abs_b_lo(kRadiusBits);
  mpfr_abs(abs_b_lo, b.mid_, MPFR_RNDD);
  if (mpfr_lessequal_p(abs_b_lo, b.rad_)) {
    throw std::domain_error("Apfloat division by a ball containing zero");
  }
  Apfloat out(std::max(a.precision(), b.precision()));
  const int t = mpfr_div(out.mid_, a.mid_, b.mid_, MPFR_RNDN);
  if (!mpfr_zero_p(a.rad_) || !mpfr_zero_p(b.rad_)) {
    Scratch num(kRadiusBits), term(kRadiusBits), den(kRadiusBits), gap(kRadiusBits);
    mpfr_abs(term, a.mid_, MPFR_RNDU);
    mpfr_mul(num, term, b.rad_, MPFR_RNDU);
    mpfr_abs(term, b.mid_, MPFR_RNDU);
    mpfr_mul(term, term, a.rad_, MPFR_RNDU);
    mpfr_add(num, num, term, MPFR_RNDU);
    mpfr_sub(gap, abs_b_lo, b.rad_, MPFR_RNDD);
    mpfr_mul(den, abs_b_lo, gap, MPFR_RNDD);
    mpfr_div(out.rad_, num, den, MPFR_RNDU);
  }
  out.add_rounding_error(t);
  return out;
}

Apfloat operator-(const Apfloat& a) {
  Apfloat out(a);
  mpfr_neg(out.mid_, out.mid_, MPFR_RNDN);
  return out;
}

Apfloat operator+(const Apfloat& a, long b) { return a + Apfloat::from_int(b, a.precision()); }
Apfloat operator+(long a, const Apfloat& b) { return b + a; }
Apfloat operator-(const Apfloat& a, long b) { return a - Apfloat::from_int(b, a.precision()); }
Apfloat operator-(long a, const Apfloat& b) { return Apfloat::from_int(a, b.precision()) - b; }
Apfloat operator*(const Apfloat& a, long b) { return a * Apfloat::from_int(b, a.precision()); }
Apfloat operator*(long a, const Apfloat& b) { return b * a; }
Apfloat operator/(const Apfloat& a, long b) { return a / Apfloat::from_int(b, a.precision()); }
Apfloat operator/(long a, const Apfloat& b) { return Apfloat::from_int(a, b.precision()) / b; }

Apfloat exp(const Apfloat& x) {
  Apfloat out(x.precision());
  const int t = mpfr_exp(out.mid_, x.mid_, MPFR_RNDN);
  if (!mpfr_zero_p(x.rad_)) {
    Scratch scale(kRadiusBits), grow(kRadiusBits);
    mpfr_exp(scale, x.mid_, MPFR_RNDU);
    mpfr_expm1(grow, x.rad_, MPFR_RNDU);
    mpfr_mul(out.rad_, scale, grow, MPFR_RNDU);
  }
  out.add_rounding_error(t);
  return out;
}

Apfloat log(const Apfloat& x) {
  Scratch lo(x.precision() + 8);
  mpfr_sub(lo, x.mid_, x.rad_, MPFR_RNDD);
  if (mpfr_sgn(lo.get()) <= 0) throw std::domain_error("Apfloat log of a non-positive ball");
  Apfloat out(x.precision());
  const int t = mpfr_log(out.mid_, x.mid_, MPFR_RNDN);
  if (!mpfr_zero_p(x.rad_)) mpfr_div(out.rad_, x.rad_, lo, MPFR_RNDU);
  out.add_rounding_error(t);
  return out;
}

Apfloat sqrt(const Apfloat& x) {
  if (mpfr_sgn(x.mid_) < 0) throw std::domain_error("Apfloat sqrt of a negative ball");
  Apfloat out(x.precision());
  const int t = mpfr_sqrt(out.mid_, x.mid_, MPFR_RNDN);
  if (!mpfr_zero_p(x.rad_)) {
    Scratch lo(x.precision() + 8);
    mpfr_sub(lo, x.mid_, x.rad_, MPFR_RNDD);
    if (mpfr_sgn(lo.get()) <= 0) {
      mpfr_add(lo, x.mid_, x.rad_, MPFR_RNDU);
      mpfr_sqrt(out.rad_, lo, MPFR_RNDU);
    } else {
      Scratch den(kRadiusBits), part(kRadiusBits);
      mpfr_sqrt(den, lo, MPFR_RNDD);
      mpfr_sqrt(part, x.mid_, MPFR_RNDD);
      mpfr_add(den, den, part, MPFR_RNDD);
      mpfr_div(out.rad_, x.rad_, den, MPFR_RNDU);
    }
  }
  out.add_rounding_error(t);
  return out;
}

Apfloat cos(const Apfloat& x) {
  Apfloat out(x.precision());
  const int t = mpfr_cos(out.mid_, x.mid_, MPFR_RNDN);
  mpfr_set(out.rad_, x.rad_, MPFR_RNDU);
  out.add_rounding_error(t);
  return out;
}

Apfloat sin(const Apfloat& x) {
  Apfloat out(x.precision());
  const int t = mpfr_sin(out.mid_, x.mid_, MPFR_RNDN);
  mpfr_set(out.rad_, x.rad_, MPFR_RNDU);
  out.add_rounding_error(t);
  return out;
}

Apfloat abs(const Apfloat& x) {
  Apfloat out(x);
  mpfr_abs(out.mid_, out.mid_, MPFR_RNDN);
  return out;
}

Apfloat square(const Apfloat& x) { return x * x; }

Apfloat pow(const Apfloat& x, const Apfloat& y) { return exp(y * log(x)); }

Apfloat exp2(const Apfloat& x) { return exp(x * Apfloat::log2(x.precision())); }

bool certainly_less(const Apfloat& a, const Apfloat& b) {
  const mpfr_prec_t bits = std::max(a.precision(), b.precision()) + 8;
  Scratch hi_a(bits), lo_b(bits);
  mpfr_add(hi_a, a.mid_, a.rad_, MPFR_RNDU);
  mpfr_sub(lo_b, b.mid_, b.rad_, MPFR_RNDD);
  return mpfr_less_p(hi_a, lo_b) != 0;
}

mpq_class decimal_to_rational(std::string_view literal) {
  std::string digits;
  long exponent = 0;
  bool negative = false;
  bool seen_point = false;
  std::size_t i = 0;
  if (i < literal.size() && (literal[i] == '-' || literal[i] == '+')) {
    negative = literal[i] == '-';
    ++i;
  }
  for (; i < literal.size(); ++i) {
    const char ch = literal[i];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_point) --exponent;
    } else if (ch == '.' && !seen_point) {
      seen_point = true;
    } else if (ch == 'e' || ch == 'E') {
      exponent += std::stol(std::string(literal.substr(i + 1)));
      break;
    } else {
      throw std::invalid_argument("malformed decimal literal: " + std::string(literal));
    }
  }
  if (digits.empty()) throw std::invalid_argument("malformed decimal literal: " + std::string(literal));
  mpz_class num(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  mpq_class out = exponent >= 0 ? mpq_class(num * scale) : mpq_class(num, scale);
  out.canonicalize();
  return negative ? mpq_class(-out) : out;
}

bool decide_positive(const std::function<Apfloat(long)>& expr, long start_bits, long max_bits) {
  for (long bits = std::max(start_bits, Apfloat::kMinPrecision); bits <= max_bits; bits *= 2) {
    const Apfloat value = expr(bits);
    if (value.certainly_positive()) return true;
    if (value.certainly_negative()) return false;
  }
  throw PrecisionError("sign undecided at " + std::to_string(max_bits) + " bits");
}

}  // namespace sptkit

#pragma once

#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace sptkit {

/// 2x2 integer matrix [[a, b], [c, d]].
struct Matrix2 {
  long a = 1;
  long b = 0;
  long c = 0;
  long d = 1;

  long det() const { return a * d - b * c; }
  /// Inverse of a determinant-one matrix (the adjugate); std::invalid_argument otherwise.
  Matrix2 inverse() const;
  friend Matrix2 operator*(const Matrix2& x, const Matrix2& y);
  friend bool operator==(const Matrix2&, const Matrix2&) = default;
};

/// Q(X, Y) = aX^2 + bXY + cY^2.
struct QuadraticForm {
  mpz_class a;
  mpz_class b;
  mpz_class c;

  mpz_class discriminant() const { return b * b - 4 * a * c; }
  bool is_primitive() const;
  /// |b| <= a <= c, with b >= 0 when |b| = a or a = c.
  bool is_reduced() const;
  std::string to_string() const;

  friend bool operator==(const QuadraticForm&, const QuadraticForm&) = default;
};

QuadraticForm make_form(long a, long b, long c);

/**
 * Q o sigma for sigma = [[alpha, beta], [gamma, delta]]:
 *   a' = a alpha^2 + b alpha gamma + c gamma^2
 *   b' = 2a alpha beta + b (alpha delta + beta gamma) + 2c gamma delta
 *   c' = a beta^2 + b beta delta + c delta^2
 * std::invalid_argument unless det(sigma) = 1.
 */
QuadraticForm act(const QuadraticForm& q, const Matrix2& sigma);

/// Primitive reduced forms of discriminant `delta`, sorted by (a, b, c).
/// std::invalid_argument unless delta < 0 and delta = 0, 1 (mod 4).
std::vector<QuadraticForm> reduced_forms(long delta);

/// Number of primitive reduced forms of discriminant `delta`.
long class_number(long delta);

struct DiscriminantData {
  long n = 0;
  long D = 0;              ///< 1 - 24n
  long fundamental_d = 0;  ///< D = fundamental_d * conductor_f^2
  long conductor_f = 1;
  std::vector<long> square_divisors;  ///< every u > 0 with u^2 | D
  std::map<long, int> epsilon;        ///< +1 iff u = +-1 (mod 12)
  std::map<long, long> h_per_u;       ///< h(D / u^2)
  long H = 0;                         ///< sum of h(D / u^2)
};

DiscriminantData discriminant_data(long n);

/// +1 when u = +-1 (mod 12), -1 otherwise.
int epsilon_of(long u);

enum class CuspKind { infinity, one_third, one_half, zero };

/**
 * One of the twelve right coset representatives of Gamma_0(6) in SL_2(Z).
 *
 * zeta_exponent is k with zeta_Q = e(k/12). The twist of the m-th
 * coefficient is phi_m = zeta_6^{(phi_constant + phi_slope * m) mod 6}.
 */
struct CosetRep {
  CuspKind kind = CuspKind::infinity;
  int param = 0;  ///< r, s or t; unused at infinity
  Matrix2 matrix;
  int width = 1;
  int mu_h = 1;
  int zeta_exponent = 0;
  int phi_constant = 0;
  int phi_slope = 0;

  /// Exponent of zeta_6 in phi_m, reduced to [0, 6).
  int phi_exponent(long m) const;
  std::string label() const;
};

/// The twelve representatives: infinity; 1/3 with r = 0, 1; 1/2 with
/// s = 0, 1, 2; 0 with t = 0..5.
const std::vector<CosetRep>& coset_reps();

/// The representative with the given cusp and parameter (taken mod the width).
const CosetRep& coset_rep(CuspKind kind, int param = 0);

/**
 * The unique representative gamma with act(q, gamma^{-1}) = [a', b', c'],
 * 6 | a' and b' = 1 (mod 12). std::logic_error when zero or several qualify.
 */
const CosetRep& select_gamma(const QuadraticForm& q);

/// tau_Q = (-b + sqrt(D)) / (2a): real part exact, imaginary part sqrt(abs_disc) / denominator.
struct HeegnerPoint {
  mpq_class real_part;
  mpz_class abs_disc;
  mpz_class denominator;  ///< 2a

  double imag_double() const;
};

HeegnerPoint heegner_point(const QuadraticForm& q);

}  // namespace sptkit

#include "sptkit/quadforms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <tuple>

namespace sptkit {
namespace {

long floor_mod(long x, long m) {
  const long r = x % m;
  return r < 0 ? r + m : r;
}

long isqrt(long x) {
  auto r = static_cast<long>(std::sqrt(static_cast<double>(x)));
  while (r * r > x) --r;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

CosetRep make_rep(CuspKind kind, int param) {
  CosetRep rep;
  rep.kind = kind;
  rep.param = param;
  switch (kind) {
    case CuspKind::infinity:
      break;
    case CuspKind::one_third:
      // [[1, r], [3, 3r+1]]: zeta = zeta_6^{3r}, phi_m = zeta_6^{3 + 3m(r+1)}
      rep.matrix = {1, param, 3, 3 * param + 1};
      rep.width = 2;
      rep.mu_h = -1;
      rep.zeta_exponent = static_cast<int>(floor_mod(6 * param, 12));
      rep.phi_constant = 3;
      rep.phi_slope = static_cast<int>(floor_mod(3 * (param + 1), 6));
      break;
    case CuspKind::one_half:
      // [[1, 1], [2, 3]] T^s: zeta = zeta_6^{3-2s}, phi_m = zeta_6^{3 + 2ms}
      rep.matrix = Matrix2{1, 1, 2, 3} * Matrix2{1, param, 0, 1};
      rep.width = 3;
      rep.mu_h = -1;
      rep.zeta_exponent = static_cast<int>(floor_mod(2 * (3 - 2 * param), 12));
      rep.phi_constant = 3;
      rep.phi_slope = static_cast<int>(floor_mod(2 * param, 6));
      break;
    case CuspKind::zero:
      // [[0, -1], [1, 0]] T^t: zeta = zeta_6^{-t}, phi_m = zeta_6^{mt}
      rep.matrix = Matrix2{0, -1, 1, 0} * Matrix2{1, param, 0, 1};
      rep.width = 6;
      rep.mu_h = 1;
      rep.zeta_exponent = static_cast<int>(floor_mod(-2 * param, 12));
      rep.phi_constant = 0;
      rep.phi_slope = param;
      break;
  }
  return rep;
}

}  // namespace

Matrix2 Matrix2::inverse() const {
  if (det() != 1) throw std::invalid_argument("Matrix2::inverse: determinant must be 1");
  return {d, -b, -c, a};
}

Matrix2 operator*(const Matrix2& x, const Matrix2& y) {
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c,
          x.c * y.b + x.d * y.d};
}

bool QuadraticForm::is_primitive() const {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g == 1;
}

bool QuadraticForm::is_reduced() const {
  if (a <= 0 || discriminant() >= 0) return false;
  if (abs(b) > a || a > c) return false;
  if ((abs(b) == a || a == c) && b < 0) return false;
  return true;
}

std::string QuadraticForm::to_string() const {
  return "[" + a.get_str() + "," + b.get_str() + "," + c.get_str() + "]";
}

QuadraticForm make_form(long a, long b, long c) { return {a, b, c}; }

QuadraticForm act(const QuadraticForm& q, const Matrix2& sigma) {
  if (sigma.det() != 1) throw std::invalid_argument("act: sigma must have determinant 1");
  const long al = sigma.a, be = sigma.b, ga = sigma.c, de = sigma.d;
  QuadraticForm out;
  out.a = q.a * al * al + q.b * al * ga + q.c * ga * ga;
  out.b = 2 * q.a * al * be + q.b * (al * de + be * ga) + 2 * q.c * ga * de;
  out.c = q.a * be * be + q.b * be * de + q.c * de * de;
  return out;
}

std::vector<QuadraticForm> reduced_forms(long delta) {
  if (delta >= 0 || (floor_mod(delta, 4) != 0 && floor_mod(delta, 4) != 1)) {
    throw std::invalid_argument("reduced_forms: invalid discriminant " + std::to_string(delta));
  }
  const long abs_delta = -delta;
  const long a_max = isqrt(abs_delta / 3);
  std::vector<QuadraticForm> out;
  for (long a = 1; a <= a_max; ++a) {
    for (long b = -a; b <= a; ++b) {
      if (floor_mod(b - delta, 2) != 0) continue;
      const long num = b * b - delta;
      if (num % (4 * a) != 0) continue;
      const long c = num / (4 * a);
      if (c < a) continue;
      if ((b == -a || a == c) && b < 0) continue;
      if (std::gcd(std::gcd(a, b), c) != 1) continue;
      out.push_back(make_form(a, b, c));
    }
  }
  std::sort(out.begin(), out.end(), [](const QuadraticForm& x, const QuadraticForm& y) {
    return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
  });
  return out;
}

long class_number(long delta) { return static_cast<long>(reduced_forms(delta).size()); }

int epsilon_of(long u) {
  const long r = floor_mod(u, 12);
  return (r == 1 || r == 11) ? 1 : -1;
}

DiscriminantData discriminant_data(long n) {
  if (n < 1) throw std::invalid_argument("discriminant_data: n must be positive");
  DiscriminantData out;
  out.n = n;
  out.D = 1 - 24 * n;
  // |D| = s f^2 with s squarefree; D is odd, so f is odd and -s = D (mod 4).
  long rest = -out.D;
  long f = 1;
  for (long p = 3; p * p <= rest; p += 2) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      f *= p;
    }
  }
  out.fundamental_d = -rest;
  out.conductor_f = f;
  for (long u = 1; u <= f; ++u) {
    if (f % u != 0) continue;
    out.square_divisors.push_back(u);
    out.epsilon[u] = epsilon_of(u);
    const long h = class_number(out.D / (u * u));
    out.h_per_u[u] = h;
    out.H += h;
  }
  return out;
}

int CosetRep::phi_exponent(long m) const {
  return static_cast<int>(floor_mod(phi_constant + floor_mod(m, 6) * phi_slope, 6));
}

std::string CosetRep::label() const {
  switch (kind) {
    case CuspKind::infinity:
      return "gamma_inf";
    case CuspKind::one_third:
      return "gamma_1/3," + std::to_string(param);
    case CuspKind::one_half:
      return "gamma_1/2," + std::to_string(param);
    case CuspKind::zero:
      return "gamma_0," + std::to_string(param);
  }
  return "";
}

const std::vector<CosetRep>& coset_reps() {
  static const std::vector<CosetRep> reps = [] {
    std::vector<CosetRep> out;
    out.push_back(make_rep(CuspKind::infinity, 0));
    for (int r = 0; r < 2; ++r) out.push_back(make_rep(CuspKind::one_third, r));
    for (int s = 0; s < 3; ++s) out.push_back(make_rep(CuspKind::one_half, s));
    for (int t = 0; t < 6; ++t) out.push_back(make_rep(CuspKind::zero, t));
    return out;
  }();
  return reps;
}

const CosetRep& coset_rep(CuspKind kind, int param) {
  int index = 0;
  switch (kind) {
    case CuspKind::infinity:
      return coset_reps()[0];
    case CuspKind::one_third:
      index = 1 + static_cast<int>(floor_mod(param, 2));
      break;
    case CuspKind::one_half:
      index = 3 + static_cast<int>(floor_mod(param, 3));
      break;
    case CuspKind::zero:
      index = 6 + static_cast<int>(floor_mod(param, 6));
      break;
  }
  return coset_reps()[static_cast<std::size_t>(index)];
}

const CosetRep& select_gamma(const QuadraticForm& q) {
  const CosetRep* hit = nullptr;
  int hits = 0;
  for (const CosetRep& rep : coset_reps()) {
    const QuadraticForm moved = act(q, rep.matrix.inverse());
    if (mpz_divisible_ui_p(moved.a.get_mpz_t(), 6) == 0) continue;
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), moved.b.get_mpz_t(), 12);
    if (r != 1) continue;
    hit = &rep;
    ++hits;
  }
  if (hits != 1) {
    throw std::logic_error("select_gamma: " + std::to_string(hits) + " representatives fit " +
                           q.to_string());
  }
  return *hit;
}

double HeegnerPoint::imag_double() const {
  return std::sqrt(abs_disc.get_d()) / denominator.get_d();
}

HeegnerPoint heegner_point(const QuadraticForm& q) {
  if (q.a <= 0 || q.discriminant() >= 0) {
    throw std::invalid_argument("heegner_point: form must be positive definite");
  }
  HeegnerPoint out;
  out.real_part = mpq_class(-q.b, 2 * q.a);
  out.real_part.canonicalize();
  out.abs_disc = -q.discriminant();
  out.denominator = 2 * q.a;
  return out;
}

}  // namespace sptkit

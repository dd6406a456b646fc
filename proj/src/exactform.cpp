#include "sptkit/exactform.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "sptkit/bounds.hpp"

namespace sptkit {

Rational make_rational(long num, long den) {
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Apfloat lambda_of(long n, long prec) {
  return Apfloat::pi(prec) * sqrt(Apfloat::from_int(24 * n - 1, prec)) / 6;
}

long default_precision(long n) {
  const double lambda = M_PI * std::sqrt(24.0 * static_cast<double>(n) - 1.0) / 6.0;
  return std::max(64L, static_cast<long>(std::ceil(lambda / std::log(2.0))) + 64);
}

Rational dedekind_sum(long d, long c) {
  if (c < 1) throw std::invalid_argument("dedekind_sum: c must be positive");
  if (std::gcd(d, c) != 1) throw std::invalid_argument("dedekind_sum: gcd(d, c) must be 1");
  Rational total = 0;
  const Rational half(1, 2);
  for (long r = 1; r < c; ++r) {
    // dr/c - floor(dr/c) is the least non-negative residue of dr over c.
    long residue = (d % c) * r % c;
    if (residue < 0) residue += c;
    total += make_rational(r, c) * (make_rational(residue, c) - half);
  }
  return total;
}

Apfloat kloosterman_A(long c, long n, long prec) {
  if (c < 1 || n < 1) throw std::invalid_argument("kloosterman_A: c and n must be positive");
  const Apfloat two_pi = Apfloat::pi(prec) * 2;
  Apfloat re(prec);
  Apfloat im(prec);
  for (long d = 0; d < c; ++d) {
    if (std::gcd(d, c) != 1) continue;
    // e^{pi i s} e^{-2 pi i dn/c} = e(s/2 - dn/c); reduce the turn count mod 1.
    Rational turns = dedekind_sum(d, c) / 2 - make_rational(d * (n % c), c);
    mpz_class whole;
    mpz_fdiv_q(whole.get_mpz_t(), turns.get_num_mpz_t(), turns.get_den_mpz_t());
    turns -= whole;
    const Apfloat angle = two_pi * Apfloat::from_rational(turns, prec);
    re += cos(angle);
    im += sin(angle);
  }
  if (!im.contains_zero()) {
    throw std::logic_error("kloosterman_A: imaginary part " + im.to_string(10) +
                           " exceeds its error budget");
  }
  return re.with_error(im);
}

Apfloat bessel_I_threehalf(const Apfloat& x) {
  if (!x.certainly_positive()) throw std::domain_error("bessel_I_threehalf: x must be positive");
  const long prec = x.precision();
  const Apfloat inv = 1 / x;
  const Apfloat bracket = (1 - inv) * exp(x) + (1 + inv) * exp(-x);
  return sqrt(2 / (Apfloat::pi(prec) * x)) * bracket / 2;
}

bool LehmerEstimate::contains(const mpz_class& value) const {
  return estimate.with_error(remainder_bound).contains(value);
}

LehmerEstimate rademacher_p(long n, long terms, long prec) {
  if (n < 1 || terms < 1) throw std::invalid_argument("rademacher_p: n and N must be positive");
  const Apfloat lambda = lambda_of(n, prec);
  Apfloat sum(prec);
  for (long c = 1; c <= terms; ++c) {
    const Apfloat ratio = Apfloat::from_int(c, prec) / lambda;
    const Apfloat arg = lambda / c;
    const Apfloat bracket = (1 - ratio) * exp(arg) + (1 + ratio) * exp(-arg);
    sum += kloosterman_A(c, n, prec) / sqrt(Apfloat::from_int(c, prec)) * bracket;
  }
  const Apfloat estimate = sqrt(Apfloat::from_int(12, prec)) / (24 * n - 1) * sum;

  const Apfloat big_n = Apfloat::from_int(terms, prec);
  const Apfloat pi = Apfloat::pi(prec);
  const Apfloat ratio = big_n / lambda;
  const Apfloat inner = square(ratio) * ratio / 2 * (exp(lambda / terms) - exp(-lambda / terms)) +
                        Apfloat::from_rational(Rational(1, 6), prec) - square(ratio);
  const Apfloat scale = exp(-(2 * log(big_n)) / 3) * square(pi) / sqrt(Apfloat::from_int(3, prec));
  const Apfloat remainder = scale * inner;
  return {estimate, remainder};
}

MainTermProfile p_main_term(long n, long prec) {
  if (n < 1) throw std::invalid_argument("p_main_term: n must be positive");
  MainTermProfile out;
  out.n = n;
  out.lambda_n = lambda_of(n, prec);
  const Apfloat& lambda = out.lambda_n;
  out.p_main = 2 * sqrt(Apfloat::from_int(3, prec)) / (24 * n - 1) * (1 - 1 / lambda) * exp(lambda);
  out.p_err_bound = 1313 * exp(lambda / 2);
  return out;
}

MainTermProfile spt_main_term(long n, long prec) {
  if (n < 1) throw std::invalid_argument("spt_main_term: n must be positive");
  MainTermProfile out;
  out.n = n;
  out.lambda_n = lambda_of(n, prec);
  const Apfloat& lambda = out.lambda_n;
  out.spt_main = alpha_n(n, prec) * exp(lambda);
  out.spt_err_bound = spt_error_bound(n, prec);
  return out;
}

MainTermProfile main_term_profile(long n, long prec) {
  MainTermProfile out = p_main_term(n, prec);
  MainTermProfile spt_part = spt_main_term(n, prec);
  out.spt_main = std::move(spt_part.spt_main);
  out.spt_err_bound = std::move(spt_part.spt_err_bound);
  return out;
}

PartitionSqueeze partition_squeeze(long n, long prec) {
  if (n < 1) throw std::invalid_argument("partition_squeeze: n must be positive");
  const Apfloat base = sqrt(Apfloat::from_int(3, prec)) / (12 * n) * exp(lambda_of(n, prec));
  const Apfloat shift = 1 / sqrt(Apfloat::from_int(n, prec));
  return {base * (1 - shift), base * (1 + shift)};
}

}  // namespace sptkit

#include "sptkit/trace.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "sptkit/exactform.hpp"
#include "sptkit/parallel.hpp"
#include "sptkit/qseries.hpp"

namespace sptkit {
namespace {

mpq_class frac(const mpz_class& num, const mpz_class& den) {
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

// e(x) = e^{2 pi i x} with x reduced exactly into [0, 1) first.
ComplexBall unit(mpq_class turns, long prec) {
  turns.canonicalize();
  mpz_class whole;
  mpz_fdiv_q(whole.get_mpz_t(), turns.get_num_mpz_t(), turns.get_den_mpz_t());
  turns -= whole;
  const Apfloat angle = 2 * Apfloat::pi(prec) * Apfloat::from_rational(turns, prec);
  return {cos(angle), sin(angle)};
}

ComplexBall scale(const ComplexBall& z, const Apfloat& x) { return {z.re * x, z.im * x}; }

// kappa = 2 pi Im(tau_Q) / h = pi sqrt|D| / (a h).
Apfloat kappa(const QuadraticForm& q, const CosetRep& gamma, long prec) {
  const Apfloat abs_disc = Apfloat::from_integer(-q.discriminant(), prec);
  const Apfloat ah = Apfloat::from_integer(q.a * gamma.width, prec);
  return Apfloat::pi(prec) * sqrt(abs_disc) / ah;
}

// zeta_Q e(-tau_Q/h): phase k/12 + b/(2ah), modulus e^{kappa}.
ComplexBall leading_term(const QuadraticForm& q, const CosetRep& gamma, long prec) {
  const mpq_class turns = frac(gamma.zeta_exponent, 12) + frac(q.b, 2 * q.a * gamma.width);
  return scale(unit(turns, prec), exp(kappa(q, gamma, prec)));
}

struct TermSpec {
  QuadraticForm form;
  const CosetRep* gamma;
  int sign;
};

std::vector<TermSpec> trace_terms(long n) {
  const DiscriminantData data = discriminant_data(n);
  std::vector<TermSpec> out;
  for (long u : data.square_divisors) {
    const long delta = data.D / (u * u);
    if ((delta % 24 + 24) % 24 != 1) {
      throw std::logic_error("trace_S: D/u^2 is not 1 mod 24 for u = " + std::to_string(u));
    }
    for (QuadraticForm& q : reduced_forms(delta)) {
      const CosetRep& gamma = select_gamma(q);
      out.push_back({std::move(q), &gamma, data.epsilon.at(u)});
    }
  }
  return out;
}

long trace_precision(long n, long prec) {
  if (prec > 0) return std::max(prec, Apfloat::kMinPrecision);
  return std::max(128L, default_precision(n) + 32);
}

}  // namespace

Apfloat coefficient_constant(long prec) {
  const Apfloat pi = Apfloat::pi(prec);
  const Apfloat z = Apfloat::zeta(1.5, prec);
  return 8 * sqrt(Apfloat::from_int(6, prec)) * pi * sqrt(pi) + 16 * square(pi) * square(z);
}

Apfloat tail_majorant(const QuadraticForm& q, const CosetRep& gamma, long M, long prec) {
  const Apfloat r = kappa(q, gamma, prec) - 4 * Apfloat::pi(prec) / sqrt(Apfloat::from_int(M + 1, prec));
  if (!r.certainly_positive()) {
    throw std::domain_error("tail_majorant: truncation " + std::to_string(M) +
                            " is too small for " + q.to_string());
  }
  return coefficient_constant(prec) * exp(-(M + 1) * r) / (1 - exp(-r));
}

ComplexBall evaluate_f_at(const QuadraticForm& q, const CosetRep& gamma, long M, long prec) {
  if (M < kMinTruncation) {
    throw std::invalid_argument("evaluate_f_at: M must be at least " + std::to_string(kMinTruncation));
  }
  const auto b = f_coefficient_table(M);
  const Apfloat tail = tail_majorant(q, gamma, M, prec);

  ComplexBall total = leading_term(q, gamma, prec);
  total.re += Apfloat::from_int(12 * gamma.mu_h, prec);

  const Apfloat step = exp(-kappa(q, gamma, prec));
  Apfloat decay = step;
  const mpz_class den = 2 * q.a * gamma.width;
  for (long m = 1; m <= M; ++m, decay *= step) {
    const mpz_class& coeff = (*b)[static_cast<std::size_t>(m + 1)];
    if (coeff == 0) continue;
    // phi_m e(m Re(tau)/h) = e(phi/6 - b m / (2ah))
    const mpq_class turns = frac(gamma.phi_exponent(m), 6) - frac(q.b * m, den);
    total += scale(unit(turns, prec), Apfloat::from_integer(coeff, prec) * decay);
  }
  total.re = total.re.with_error(tail);
  total.im = total.im.with_error(tail);
  return total;
}

mpz_class trace_S_exact(long n) {
  if (n < 1) throw std::invalid_argument("trace_S_exact: n must be positive");
  const auto table = exact_table(n);
  const auto i = static_cast<std::size_t>(n);
  return 12 * table->spt[i] + (24 * n - 1) * table->p[i];
}

TraceResult trace_S(long n, double tolerance, long prec) {
  if (n < 1) throw std::invalid_argument("trace_S: n must be positive");
  if (!(tolerance > 0)) throw std::invalid_argument("trace_S: tolerance must be positive");
  prec = trace_precision(n, prec);
  const std::vector<TermSpec> terms = trace_terms(n);

  long M = kStartTruncation;
  for (;; M *= 2) {
    if (M > (1L << 16)) throw PrecisionError("trace_S: truncation grew past 65536");
    double budget = 0;
    bool usable = true;
    for (const TermSpec& t : terms) {
      try {
        budget += tail_majorant(t.form, *t.gamma, M, prec).upper_double();
      } catch (const std::domain_error&) {
        usable = false;
        break;
      }
    }
    if (usable && budget <= tolerance / 2) break;
  }

  std::vector<ComplexBall> parts(terms.size(), ComplexBall{Apfloat(prec), Apfloat(prec)});
  parallel_for(0, static_cast<long>(terms.size()), [&](long i) {
    const TermSpec& t = terms[static_cast<std::size_t>(i)];
    parts[static_cast<std::size_t>(i)] = evaluate_f_at(t.form, *t.gamma, M, prec);
  });
  ComplexBall total{Apfloat(prec), Apfloat(prec)};
  for (std::size_t i = 0; i < terms.size(); ++i) {
    total += terms[i].sign > 0 ? parts[i] : ComplexBall{-parts[i].re, -parts[i].im};
  }
  if (!total.im.contains_zero()) {
    throw std::logic_error("trace_S: imaginary part " + total.im.to_string(10) +
                           " does not vanish at n = " + std::to_string(n));
  }

  TraceResult out;
  out.n = n;
  out.exact = trace_S_exact(n);
  out.tail_bound = total.re.rigorous_error();
  out.residual = std::abs((total.re - Apfloat::from_integer(out.exact, prec)).to_double());
  out.value = std::move(total.re);
  out.imaginary = std::move(total.im);
  out.truncation = M;
  out.forms = static_cast<long>(terms.size());
  out.precision = prec;
  if (out.tail_bound > tolerance) {
    throw PrecisionError("trace_S: error radius " + std::to_string(out.tail_bound) +
                         " exceeds tolerance at " + std::to_string(prec) + " bits");
  }
  out.success = out.value.contains(out.exact);
  return out;
}

Apfloat main_term_anchor(long n, long prec) {
  if (n < 1) throw std::invalid_argument("main_term_anchor: n must be positive");
  prec = trace_precision(n, prec);
  ComplexBall total{Apfloat(prec), Apfloat(prec)};
  for (long a : {1L, 2L, 3L, 6L}) {
    const QuadraticForm q = make_form(a, 1, 6 * n / a);
    total += leading_term(q, select_gamma(q), prec);
  }
  if (!total.im.contains_zero()) {
    throw std::logic_error("main_term_anchor: imaginary part does not cancel");
  }
  return total.re;
}

}  // namespace sptkit

#include "sptkit/qseries.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <string>

namespace sptkit {
namespace {

void require_order(long order, long minimum, const char* what) {
  if (order < minimum) {
    throw std::invalid_argument(std::string(what) + ": order must be at least " +
                                std::to_string(minimum));
  }
}

// p(0..max_n) via p(k) = sum_{j>=1} (-1)^(j+1) [p(k - j(3j-1)/2) + p(k - j(3j+1)/2)].
std::vector<mpz_class> partition_numbers(long max_n) {
  std::vector<mpz_class> p(static_cast<std::size_t>(max_n) + 1);
  p[0] = 1;
  for (long k = 1; k <= max_n; ++k) {
    mpz_class acc = 0;
    for (long j = 1;; ++j) {
      const long g1 = j * (3 * j - 1) / 2;
      if (g1 > k) break;
      const long g2 = j * (3 * j + 1) / 2;
      if (j % 2 == 1) {
        acc += p[k - g1];
        if (g2 <= k) acc += p[k - g2];
      } else {
        acc -= p[k - g1];
        if (g2 <= k) acc -= p[k - g2];
      }
    }
    p[k] = std::move(acc);
  }
  return p;
}

// Coefficients of A(q) = sum_{n>=1} q^n (q;q)_{n-1} / (1 - q^n) through
// q^(order-1). The spt generating function equals A(q) / (q;q)_inf because
//   q^n / ((1-q^n)^2 (q^{n+1};q)_inf) = q^n (q;q)_{n-1} / ((1-q^n) (q;q)_inf).
std::vector<mpz_class> spt_numerator(long order) {
  const auto len_total = static_cast<std::size_t>(order);
  std::vector<mpz_class> acc(len_total);
  // (q;q)_{n-1}, truncated to the degrees the n-th summand can still reach.
  std::vector<mpz_class> poch(len_total);
  if (!poch.empty()) poch[0] = 1;
  std::vector<mpz_class> term;
  for (long n = 1; n < order; ++n) {
    const auto len = static_cast<std::size_t>(order - n);
    const auto step = static_cast<std::size_t>(n);
    poch.resize(len);
    term.assign(poch.begin(), poch.end());
    for (std::size_t d = step; d < len; ++d) term[d] += term[d - step];
    for (std::size_t d = 0; d < len; ++d) acc[d + step] += term[d];
    // (q;q)_n = (q;q)_{n-1} (1 - q^n)
    for (std::size_t d = len; d-- > step;) poch[d] -= poch[d - step];
  }
  return acc;
}

std::vector<mpz_class> truncated_product(const std::vector<mpz_class>& a,
                                         const std::vector<mpz_class>& b, std::size_t order) {
  std::vector<mpz_class> out(order);
  for (std::size_t i = 0; i < std::min(order, a.size()); ++i) {
    if (a[i] == 0) continue;
    const std::size_t limit = std::min(order - i, b.size());
    for (std::size_t j = 0; j < limit; ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
  }
  return out;
}

}  // namespace

IntegerSeries::IntegerSeries(long leading_exponent, std::vector<mpz_class> coeffs)
    : leading_(leading_exponent), coeffs_(std::move(coeffs)) {}

IntegerSeries IntegerSeries::zero(std::size_t order, long leading_exponent) {
  return IntegerSeries(leading_exponent, std::vector<mpz_class>(order));
}

IntegerSeries IntegerSeries::one(std::size_t order) {
  IntegerSeries out = zero(order);
  if (order > 0) out.coeffs_[0] = 1;
  return out;
}

mpz_class IntegerSeries::coefficient(long exponent) const {
  if (exponent < leading_) return 0;
  if (exponent > max_known_exponent()) {
    throw std::out_of_range("coefficient of q^" + std::to_string(exponent) +
                            " lies past the truncation order");
  }
  return coeffs_[static_cast<std::size_t>(exponent - leading_)];
}

IntegerSeries IntegerSeries::truncated(std::size_t order) const {
  if (order > coeffs_.size()) throw std::invalid_argument("truncated: cannot extend a series");
  return IntegerSeries(leading_, std::vector<mpz_class>(coeffs_.begin(), coeffs_.begin() + order));
}

IntegerSeries IntegerSeries::shifted(long shift) const { return IntegerSeries(leading_ + shift, coeffs_); }

IntegerSeries IntegerSeries::compose_power(long k) const {
  if (k < 1) throw std::invalid_argument("compose_power: k must be positive");
  const auto step = static_cast<std::size_t>(k);
  std::vector<mpz_class> out(coeffs_.size() * step);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * step] = coeffs_[i];
  return IntegerSeries(leading_ * k, std::move(out));
}

IntegerSeries IntegerSeries::scaled(const mpz_class& factor) const {
  IntegerSeries out(*this);
  for (auto& c : out.coeffs_) c *= factor;
  return out;
}

IntegerSeries IntegerSeries::exact_divide(const mpz_class& divisor) const {
  if (divisor == 0) throw std::invalid_argument("exact_divide: zero divisor");
  IntegerSeries out(*this);
  for (std::size_t i = 0; i < out.coeffs_.size(); ++i) {
    if (!mpz_divisible_p(out.coeffs_[i].get_mpz_t(), divisor.get_mpz_t())) {
      throw std::logic_error("exact_divide: coefficient of q^" +
                             std::to_string(leading_ + static_cast<long>(i)) +
                             " is not divisible by " + divisor.get_str());
    }
    mpz_divexact(out.coeffs_[i].get_mpz_t(), out.coeffs_[i].get_mpz_t(), divisor.get_mpz_t());
  }
  return out;
}

IntegerSeries IntegerSeries::inverse() const {
  if (coeffs_.empty()) throw std::invalid_argument("inverse: empty series");
  const mpz_class& lead = coeffs_[0];
  if (lead != 1 && lead != -1) {
    throw std::invalid_argument("inverse: leading coefficient must be +-1");
  }
  const std::size_t n = coeffs_.size();
  std::vector<mpz_class> out(n);
  out[0] = lead;
  mpz_class acc;
  for (std::size_t k = 1; k < n; ++k) {
    acc = 0;
    for (std::size_t j = 1; j <= k; ++j) {
      if (coeffs_[j] != 0) mpz_addmul(acc.get_mpz_t(), coeffs_[j].get_mpz_t(), out[k - j].get_mpz_t());
    }
    out[k] = -lead * acc;
  }
  return IntegerSeries(-leading_, std::move(out));
}

IntegerSeries operator+(const IntegerSeries& a, const IntegerSeries& b) {
  const long lead = std::min(a.leading_, b.leading_);
  const long top = std::min(a.max_known_exponent(), b.max_known_exponent());
  IntegerSeries out = IntegerSeries::zero(static_cast<std::size_t>(std::max(0L, top - lead + 1)), lead);
  for (long e = lead; e <= top; ++e) {
    out.coeffs_[static_cast<std::size_t>(e - lead)] = a.coefficient(e) + b.coefficient(e);
  }
  return out;
}

IntegerSeries operator-(const IntegerSeries& a, const IntegerSeries& b) {
  return a + b.scaled(-1);
}

IntegerSeries operator*(const IntegerSeries& a, const IntegerSeries& b) {
  const std::size_t order = std::min(a.order(), b.order());
  return IntegerSeries(a.leading_ + b.leading_, truncated_product(a.coeffs_, b.coeffs_, order));
}

IntegerSeries eta_series(long order) {
  require_order(order, 1, "eta_series");
  const auto len = static_cast<std::size_t>(order);
  std::vector<mpz_class> c(len);
  c[0] = 1;
  for (std::size_t n = 1; n < len; ++n) {
    for (std::size_t d = len; d-- > n;) c[d] -= c[d - n];
  }
  return IntegerSeries(0, std::move(c));
}

IntegerSeries eisenstein_E4(long order) {
  require_order(order, 1, "eisenstein_E4");
  const auto len = static_cast<std::size_t>(order);
  std::vector<mpz_class> sigma3(len);
  for (std::size_t d = 1; d < len; ++d) {
    const mpz_class cube = mpz_class(static_cast<unsigned long>(d)) * d * d;
    for (std::size_t m = d; m < len; m += d) sigma3[m] += cube;
  }
  std::vector<mpz_class> c(len);
  c[0] = 1;
  for (std::size_t m = 1; m < len; ++m) c[m] = 240 * sigma3[m];
  return IntegerSeries(0, std::move(c));
}

mpz_class partition_p(long n) {
  if (n < 0) throw std::invalid_argument("partition_p: n must be non-negative");
  return partition_numbers(n).back();
}

IntegerSeries spt_series(long order) {
  require_order(order, 1, "spt_series");
  const auto len = static_cast<std::size_t>(order);
  const auto p = partition_numbers(order - 1);
  return IntegerSeries(0, truncated_product(p, spt_numerator(order), len));
}

ExactTable ExactTable::build(long max_n) {
  if (max_n < 1) throw std::invalid_argument("ExactTable: max_n must be positive");
  ExactTable table;
  table.max_n = max_n;
  table.p = partition_numbers(max_n);
  const auto len = static_cast<std::size_t>(max_n) + 1;
  table.spt = truncated_product(table.p, spt_numerator(max_n + 1), len);
  return table;
}

std::shared_ptr<const ExactTable> exact_table(long max_n) {
  static std::mutex mutex;
  static std::shared_ptr<const ExactTable> current;
  std::lock_guard<std::mutex> lock(mutex);
  if (!current || current->max_n < max_n) {
    const long target = std::max<long>(((max_n + 255) / 256) * 256, current ? current->max_n : 0);
    current = std::make_shared<const ExactTable>(ExactTable::build(target));
  }
  return current;
}

mpz_class spt(long n) {
  if (n < 1) throw std::invalid_argument("spt: n must be at least 1");
  return exact_table(n)->spt[static_cast<std::size_t>(n)];
}

IntegerSeries f_coefficients(long order) {
  require_order(order, 2, "f_coefficients");
  const auto len = static_cast<std::size_t>(order);
  auto at_power = [&](const IntegerSeries& s, long k) {
    return s.compose_power(k).truncated(len);
  };
  const IntegerSeries e4 = eisenstein_E4(order);
  const IntegerSeries numerator = e4 - at_power(e4, 2).scaled(4) - at_power(e4, 3).scaled(9) +
                                  at_power(e4, 6).scaled(36);
  const IntegerSeries eta = eta_series(order);
  const IntegerSeries eta_product = eta * at_power(eta, 2) * at_power(eta, 3) * at_power(eta, 6);
  // (eta(z)eta(2z)eta(3z)eta(6z))^2 = q * eta_product^2; the q folds into the leading exponent.
  const IntegerSeries quotient = numerator * (eta_product * eta_product).inverse();
  return quotient.exact_divide(24).shifted(-1);
}

std::shared_ptr<const IntegerSeries> f_coefficient_table(long max_m) {
  static std::mutex mutex;
  static std::shared_ptr<const IntegerSeries> current;
  std::lock_guard<std::mutex> lock(mutex);
  if (!current || current->max_known_exponent() < max_m) {
    const long target = std::max<long>(((max_m + 127) / 128) * 128, 256);
    current = std::make_shared<const IntegerSeries>(f_coefficients(target + 2));
  }
  return current;
}

}  // namespace sptkit

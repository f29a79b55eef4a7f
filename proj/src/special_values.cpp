#include "kgamma/special_values.hpp"

#include <cmath>
#include <utility>
#include <vector>

namespace kgamma {

Rational BernoulliCache::get(unsigned n) {
  std::scoped_lock lock(mu_);
  if (table_.empty()) table_.emplace(0u, Rational(1));
  for (unsigned m = static_cast<unsigned>(table_.size()); m <= n; ++m) {
    if (m > 1 && m % 2 == 1) {
      table_.emplace(m, Rational(0));
      continue;
    }
    Rational sum;
    for (unsigned j = 0; j < m; ++j) sum += Rational(binomial(m + 1, j)) * table_.at(j);
    table_.emplace(m, -sum / Rational(static_cast<long>(m) + 1));
  }
  return table_.at(n);
}

Rational bernoulli(unsigned n) {
  static BernoulliCache cache;
  return cache.get(n);
}

Rational bernoulli_poly(unsigned n, const Rational& x) {
  // Horner over descending powers: leading coefficient is B_0 = 1
  Rational acc;
  for (unsigned j = 0; j <= n; ++j) acc = acc * x + Rational(binomial(n, j)) * bernoulli(j);
  return acc;
}

Rational gen_bernoulli(unsigned n, const QuadChar& chi) {
  if (n < 1) throw std::invalid_argument("gen_bernoulli: n must be >= 1");
  const long f = chi.params().conductor;
  Rational sum;
  for (long a = 1; a <= f; ++a) {
    const int c = chi(a);
    if (c != 0) sum += Rational(c) * bernoulli_poly(n, Rational(a, f));
  }
  return Rational(f).pow(static_cast<long>(n) - 1) * sum;
}

ExactValue zeta_even_exact(long k) {
  if (k < 2) throw std::invalid_argument("zeta_even_exact: k must be >= 2");
  if (k % 2 != 0) throw std::domain_error("zeta_even_exact: no closed form in scope for odd k");
  static std::mutex mu;
  static std::map<long, ExactValue> cache;
  {
    std::scoped_lock lock(mu);
    if (const auto it = cache.find(k); it != cache.end()) return it->second;
  }
  const int sign = (k / 2) % 2 == 0 ? -1 : 1;  // (-1)^{k/2+1}
  Rational coeff = Rational(sign) * Rational(pow_z(2, static_cast<unsigned long>(k))) *
                   bernoulli(static_cast<unsigned>(k)) /
                   Rational(2 * factorial(static_cast<unsigned long>(k)));
  ExactValue value(std::move(coeff), k);
  std::scoped_lock lock(mu);
  cache.emplace(k, value);
  return value;
}

ExactValue l_odd_exact_disc(long k, const FieldParams& field) {
  if (k % 2 == 0) throw std::domain_error("l_odd_exact: no algebraic closed form at even arguments");
  if (k < 3) throw std::invalid_argument("l_odd_exact: k must be >= 3");
  static std::mutex mu;
  static std::map<std::pair<long, long>, ExactValue> cache;
  const auto key = std::make_pair(k, field.discriminant);
  {
    std::scoped_lock lock(mu);
    if (const auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const long f = field.conductor;
  const long s = f == field.d ? 1 : 2;  // sqrt|D| = s * sqrt(d)
  const int sign = ((k - 1) / 2) % 2 == 1 ? 1 : -1;  // (-1)^{1+(k-1)/2}
  const Rational bk = gen_bernoulli(static_cast<unsigned>(k), QuadChar(field));
  Rational coeff = Rational(sign * s) * Rational(pow_z(2, static_cast<unsigned long>(k - 1))) * bk /
                   Rational(pow_z(f, static_cast<unsigned long>(k)) * factorial(static_cast<unsigned long>(k)));
  if (coeff.sign() <= 0)
    throw std::logic_error("l_odd_exact: nonpositive coefficient, normalization broken");
  ExactValue value(std::move(coeff), k, 1, field.d);
  std::scoped_lock lock(mu);
  cache.emplace(key, value);
  return value;
}

LValueExact l_odd_exact(long k, long d) {
  const FieldParams field = field_params(d);
  if (field.conductor != d)
    throw std::domain_error("l_odd_exact: D = -d must be an odd fundamental discriminant (d = 3 mod 4)");
  return LValueExact{d, k, l_odd_exact_disc(k, field)};
}

namespace {

double pow_recip(long long m, long k) {
  // m^{-k} by binary exponentiation; m as double is exact for m < 2^53
  double result = 1.0;
  double base = static_cast<double>(m);
  for (long e = k; e > 0; e >>= 1) {
    if (e & 1) result *= base;
    base *= base;
    if (e > 1 && !std::isfinite(base)) return 0.0;  // term underflows to 0 anyway
  }
  return 1.0 / result;
}

struct KahanSum {
  double sum = 0, comp = 0;
  void add(double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

void check_numeric_args(long k, long terms) {
  if (k < 2) throw std::invalid_argument("numeric oracle: k must be >= 2");
  if (terms < 1000) throw std::invalid_argument("numeric oracle: terms must be >= 1000");
}

}  // namespace

DirichletSum l_numeric(long k, long d, long terms) {
  check_numeric_args(k, terms);
  const FieldParams field = field_params(d);
  std::vector<int> chi_period(static_cast<size_t>(field.conductor));
  for (long r = 0; r < field.conductor; ++r)
    chi_period[static_cast<size_t>(r)] = kronecker_symbol(field.discriminant, r);
  KahanSum acc;
  for (long long m = terms; m >= 1; --m) {
    const int c = chi_period[static_cast<size_t>(m % field.conductor)];
    if (c != 0) acc.add(c * pow_recip(m, k));
  }
  const double n = static_cast<double>(terms);
  return {acc.sum, std::pow(n, 1.0 - static_cast<double>(k)) / (static_cast<double>(k) - 1.0)};
}

DirichletSum zeta_numeric(long k, long terms) {
  check_numeric_args(k, terms);
  KahanSum acc;
  for (long long m = terms; m >= 1; --m) acc.add(pow_recip(m, k));
  // Euler-Maclaurin completion of the tail beyond `terms`
  const double n = static_cast<double>(terms);
  const double kk = static_cast<double>(k);
  const double tail = std::pow(n, 1.0 - kk) / (kk - 1.0) - std::pow(n, -kk) / 2.0 +
                      kk * std::pow(n, -kk - 1.0) / 12.0;
  const double residual = kk * (kk + 1.0) * (kk + 2.0) * std::pow(n, -kk - 3.0) / 360.0;
  return {acc.sum + tail, residual};
}

}  // namespace kgamma

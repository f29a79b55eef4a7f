#include "kgamma/rational.hpp"

namespace kgamma {

Rational::Rational(mpz_class num, mpz_class den) : q_(std::move(num), std::move(den)) {
  if (q_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
  q_.canonicalize();
}

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational Rational::from_string(std::string_view s) {
  auto strip = [](std::string_view v) {
    while (!v.empty() && v.front() == ' ') v.remove_prefix(1);
    while (!v.empty() && v.back() == ' ') v.remove_suffix(1);
    return v;
  };
  s = strip(s);
  if (s.empty()) throw std::invalid_argument("Rational: empty string");
  const auto slash = s.find('/');
  try {
    if (slash == std::string_view::npos) return Rational(mpz_class(std::string(s)));
    mpz_class num{std::string(strip(s.substr(0, slash)))};
    mpz_class den{std::string(strip(s.substr(slash + 1)))};
    return Rational(std::move(num), std::move(den));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: cannot parse '" + std::string(s) + "'");
  }
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (e < 0 && is_zero()) throw std::domain_error("Rational: negative power of zero");
  const auto ue = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class n = pow_z(num(), ue);
  mpz_class d = pow_z(den(), ue);
  // num/den coprime, so the powers are too; no re-reduction needed
  return e > 0 ? Rational(std::move(n), std::move(d)) : Rational(std::move(d), std::move(n));
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

mpz_class factorial(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class pow_z(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

bool is_squarefree(long long n) {
  if (n < 1) throw std::invalid_argument("is_squarefree: n must be positive");
  for (long long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      n /= p;
      if (n % p == 0) return false;
    }
  }
  return true;
}

}  // namespace kgamma

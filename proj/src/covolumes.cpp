#include "kgamma/covolumes.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <vector>

#include "kgamma/special_values.hpp"

namespace kgamma {
namespace {

std::vector<long> prime_divisors(long d) {
  std::vector<long> ps;
  long m = d;
  for (long p = 2; p * p <= m; ++p)
    if (m % p == 0) {
      ps.push_back(p);
      while (m % p == 0) m /= p;
    }
  if (m > 1) ps.push_back(m);
  return ps;
}

FieldParams checked_field(int n, long d, DiscCase c) {
  if (n < 1) throw std::invalid_argument("covolume: n must be >= 1");
  const FieldParams f = field_params(d);
  if ((c == DiscCase::MinusD) != f.two_unramified)
    throw std::domain_error(c == DiscCase::MinusD
                                ? "covolume: disc case -d requires d = 3 (mod 4)"
                                : "covolume: disc case -4d requires d = 1, 2 (mod 4)");
  return f;
}

// |D|^{(n^2+3n)/4}; the half-integer part lands in the sqrt(d) slot.
ExactValue disc_power(const FieldParams& f, int n) {
  const long e2 = static_cast<long>(n) * (n + 3) / 2;  // exponent of sqrt|D|
  const long s = f.conductor == f.d ? 1 : 2;           // sqrt|D| = s * sqrt(d)
  return ExactValue(Rational(pow_z(s, static_cast<unsigned long>(e2))), 0, e2, f.d);
}

// prod_{j=1}^{n} j! / (2 pi)^{j+1}
ExactValue factorial_product(int n) {
  mpz_class nums = 1;
  long exp = 0;
  for (int j = 1; j <= n; ++j) {
    nums *= factorial(static_cast<unsigned long>(j));
    exp += j + 1;
  }
  return ExactValue(Rational(std::move(nums), pow_z(2, static_cast<unsigned long>(exp))), -exp);
}

// zeta(2) L(3) zeta(4) L(5) ... up to index n+1; the L factors are dropped
// on the odd-n D=-4d rows.
ExactValue zeta_l_chain(int n, const FieldParams& f, bool zeta_only) {
  ExactValue prod(Rational(1));
  for (long k = 2; k <= n + 1; ++k) {
    if (k % 2 == 0)
      prod = prod * zeta_even_exact(k);
    else if (!zeta_only)
      prod = prod * l_odd_exact_disc(k, f);
  }
  return prod;
}

// prod_{p|d} (1 + (top/p) p^{-(n+1)/2}) with top = (-1)^{(n+3)/2} (times 2
// for the M lattice); odd n only.
Rational local_factor(long d, int n, bool two_in_top) {
  const long long top = ((n + 3) / 2 % 2 == 0 ? 1 : -1) * (two_in_top ? 2 : 1);
  Rational prod(1);
  for (long p : prime_divisors(d)) {
    const int sym = kronecker_symbol(top, p);
    prod *= Rational(1) + Rational(sym) / Rational(pow_z(p, static_cast<unsigned long>((n + 1) / 2)));
  }
  return prod;
}

// 2^n (1 - (-d/2)^{n+1} 2^{-(n+1)}) / (1 - (-d/2) 2^{-1})
Rational two_adic_factor(long d, int n) {
  const int md2 = kronecker_symbol(-d, 2);
  const int md2_pow = (n + 1) % 2 == 0 ? md2 * md2 : md2;
  const Rational num = Rational(1) - Rational(mpz_class(md2_pow), pow_z(2, static_cast<unsigned long>(n + 1)));
  const Rational den = Rational(1) - Rational(md2, 2);
  return Rational(pow_z(2, static_cast<unsigned long>(n))) * num / den;
}

long expected_pi_exp(int n, bool zeta_only) {
  long e = 0;
  for (int j = 1; j <= n; ++j) e -= j + 1;
  for (long k = 2; k <= n + 1; ++k)
    if (k % 2 == 0 || !zeta_only) e += k;
  return e;
}

Covolume finish(Lattice lat, int n, long d, DiscCase c, ExactValue v, long want_pi_exp) {
  if (v.coeff().sign() <= 0) throw std::logic_error("covolume: nonpositive value after assembly");
  if (v.pi_exp() != want_pi_exp) throw std::logic_error("covolume: pi exponent mismatch after assembly");
  return Covolume{lat, n, d, c, std::move(v)};
}

}  // namespace

Covolume vol_L(int n, long d, DiscCase disc_case) {
  const FieldParams f = checked_field(n, d, disc_case);
  const bool minus4d = disc_case == DiscCase::Minus4D;
  const bool zeta_only = n % 2 == 1 && minus4d;
  ExactValue v = disc_power(f, n) * factorial_product(n) * zeta_l_chain(n, f, zeta_only);
  if (n % 2 == 1) {
    v = v * ExactValue(local_factor(d, n, false));
    if (minus4d)
      v = v * ExactValue(Rational(1) - Rational(mpz_class(1), pow_z(2, static_cast<unsigned long>(n + 1))));
  }
  return finish(Lattice::L, n, d, disc_case, std::move(v), expected_pi_exp(n, zeta_only));
}

Covolume vol_M(int n, long d, DiscCase disc_case) {
  const FieldParams f = checked_field(n, d, disc_case);
  const bool minus4d = disc_case == DiscCase::Minus4D;
  const bool zeta_only = n % 2 == 1 && minus4d;
  ExactValue v = disc_power(f, n) * factorial_product(n) * zeta_l_chain(n, f, zeta_only);
  if (n % 2 == 1) {
    v = v * ExactValue(local_factor(d, n, true));
    if (minus4d) {
      const Rational half_euler = Rational(1) - Rational(mpz_class(1), pow_z(2, static_cast<unsigned long>(n + 1)));
      v = v * ExactValue(half_euler * Rational(pow_z(2, static_cast<unsigned long>(n))));
    } else {
      v = v * ExactValue(two_adic_factor(d, n));
    }
  } else {
    if (minus4d)
      v = v * ExactValue(Rational(pow_z(2, static_cast<unsigned long>(n)) - 1));
    else
      v = v * ExactValue(two_adic_factor(d, n));
  }
  return finish(Lattice::M, n, d, disc_case, std::move(v), expected_pi_exp(n, zeta_only));
}

namespace {

double cached_zeta_numeric(long k, long terms) {
  static std::mutex mu;
  static std::map<std::pair<long, long>, double> cache;
  std::scoped_lock lock(mu);
  auto [it, fresh] = cache.try_emplace(std::make_pair(k, terms), 0.0);
  if (fresh) it->second = zeta_numeric(k, terms).value;
  return it->second;
}

double cached_l_numeric(long k, long d, long terms) {
  static std::mutex mu;
  static std::map<std::tuple<long, long, long>, double> cache;
  std::scoped_lock lock(mu);
  auto [it, fresh] = cache.try_emplace(std::make_tuple(k, d, terms), 0.0);
  if (fresh) it->second = l_numeric(k, d, terms).value;
  return it->second;
}

}  // namespace

CovolumeNumeric vol_numeric(const Covolume& c, long terms) {
  const FieldParams f = field_params(c.d);
  const int n = c.n;
  const bool minus4d = c.disc_case == DiscCase::Minus4D;
  const bool zeta_only = n % 2 == 1 && minus4d;
  const double two_pi = 2.0 * std::acos(-1.0);

  double v = std::pow(static_cast<double>(f.conductor), n * (n + 3) / 4.0);
  double fact = 1.0;
  for (int j = 1; j <= n; ++j) {
    fact *= j;
    v *= fact / std::pow(two_pi, j + 1);
  }
  for (long k = 2; k <= n + 1; ++k) {
    if (k % 2 == 0)
      v *= cached_zeta_numeric(k, terms);
    else if (!zeta_only)
      v *= cached_l_numeric(k, c.d, terms);
  }
  // the local and 2-adic factors are rational in both routes
  if (n % 2 == 1) {
    v *= local_factor(c.d, n, c.lattice == Lattice::M).to_double();
    if (minus4d) v *= 1.0 - std::pow(2.0, -(n + 1.0));
  }
  if (c.lattice == Lattice::M) {
    if (minus4d)
      v *= n % 2 == 1 ? std::pow(2.0, n) : std::pow(2.0, n) - 1.0;
    else
      v *= two_adic_factor(c.d, n).to_double();
  }
  const double exact = to_double(c.value);
  return {v, std::abs(v - exact) / std::abs(v)};
}

}  // namespace kgamma

#include "kgamma/bruinier.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "kgamma/special_values.hpp"

namespace kgamma {

const std::array<long, 7>& supported_fields() {
  static const std::array<long, 7> fields = {3, 7, 11, 19, 43, 67, 163};
  return fields;
}

bool is_supported_field(long d) {
  const auto& f = supported_fields();
  return std::find(f.begin(), f.end(), d) != f.end();
}

namespace {

void check_args(long d, int n) {
  if (!is_supported_field(d))
    throw std::domain_error("unsupported d = " + std::to_string(d) +
                            "; supported: 3, 7, 11, 19, 43, 67, 163");
  if (n < 2) throw std::invalid_argument("James's theorem requires dimension >= 3, so n >= 2");
}

}  // namespace

ReflectionData reflection_data(long d) {
  if (!is_supported_field(d))
    throw std::domain_error("unsupported d = " + std::to_string(d) +
                            "; supported: 3, 7, 11, 19, 43, 67, 163");
  const long order1 = d == 3 ? 6 : 2;
  return ReflectionData{
      MirrorClass{Lattice::L, static_cast<int>(order1), Rational(order1 - 1, order1)},
      MirrorClass{Lattice::M, 2, Rational(1, 2)},
  };
}

Rational k_raw(long d, int n) {
  check_args(d, n);
  const ReflectionData refl = reflection_data(d);
  const ExactValue numerator =
      ExactValue(refl.root_length_1.weight) * vol_L(n - 1, d, DiscCase::MinusD).value +
      ExactValue(refl.root_length_2.weight) * vol_M(n - 1, d, DiscCase::MinusD).value;
  const ExactValue ratio = numerator / vol_L(n, d, DiscCase::MinusD).value;
  try {
    return ratio.as_rational();
  } catch (const NotRationalError&) {
    throw std::logic_error("k_raw: transcendental factors failed to cancel at d=" +
                           std::to_string(d) + ", n=" + std::to_string(n));
  }
}

Rational k_closed(long d, int n) {
  check_args(d, n);
  const long k = n + 1;  // index of the surviving zeta/L factor
  ExactValue num, den;
  if (n % 2 == 1) {
    // (2 pi)^{n+1} * inner / (scale * (d^{(n+1)/2} + s) * n! * zeta(n+1))
    const long s = n % 4 == 1 ? 1 : -1;  // ((-1)^{(n+3)/2}/d), d = 3 (mod 4)
    Rational inner;
    long scale = 2;
    if (d == 3) {
      inner = Rational(6) + Rational(pow_z(2, static_cast<unsigned long>(n)));
      scale = 6;
    } else if (d == 7) {
      inner = Rational(pow_z(2, static_cast<unsigned long>(n)));
    } else {
      inner = Rational(1) + (Rational(pow_z(2, static_cast<unsigned long>(n))) + Rational(1)) / Rational(3);
    }
    num = ExactValue(inner * Rational(pow_z(2, static_cast<unsigned long>(k))), k);
    const Rational den_rat = Rational(scale) *
                             (Rational(pow_z(d, static_cast<unsigned long>(k / 2))) + Rational(s)) *
                             Rational(factorial(static_cast<unsigned long>(n)));
    den = ExactValue(den_rat) * zeta_even_exact(k);
  } else {
    const Rational t(mpz_class(1), pow_z(d, static_cast<unsigned long>(n / 2)));  // d^{-n/2}
    const Rational p2n1(pow_z(2, static_cast<unsigned long>(n)) - 1);             // 2^n - 1
    const bool mod4_0 = n % 4 == 0;
    Rational inner, num_two_pow;
    long den_front = 2;
    if (d == 7) {
      // pi^{n+1} 2^{2n} (1 -+ 7^{-n/2}) / (7^{(n+1)/2} n! L(n+1))
      inner = mod4_0 ? Rational(1) - t : Rational(1) + t;
      num_two_pow = Rational(pow_z(2, static_cast<unsigned long>(2 * n)));
      den_front = 1;
    } else if (d == 3) {
      inner = mod4_0 ? Rational(5) * (Rational(1) - t) + (Rational(1) + t) * p2n1
                     : Rational(5) * (Rational(1) + t) + (Rational(1) - t) * p2n1;
      num_two_pow = Rational(pow_z(2, static_cast<unsigned long>(k)));
      den_front = 6;
    } else {
      inner = mod4_0 ? Rational(1) - t + p2n1 / Rational(3) * (Rational(1) + t)
                     : Rational(1) + t + p2n1 / Rational(3) * (Rational(1) - t);
      num_two_pow = Rational(pow_z(2, static_cast<unsigned long>(k)));
    }
    num = ExactValue(inner * num_two_pow, k);
    den = ExactValue(Rational(den_front) * Rational(pow_z(d, static_cast<unsigned long>(n / 2))) *
                         Rational(factorial(static_cast<unsigned long>(n))),
                     0, 1, d) *
          l_odd_exact(k, d).value;
  }
  try {
    return (num / den).as_rational();
  } catch (const NotRationalError&) {
    throw std::logic_error("k_closed: transcendental factors failed to cancel at d=" +
                           std::to_string(d) + ", n=" + std::to_string(n));
  }
}

int freeness_bound(long d, int n) {
  check_args(d, n);
  return d == 3 ? 7 * n + 7 : 2 * n + 2;
}

const char* to_string(Verdict v) { return v == Verdict::PossiblyFree ? "PossiblyFree" : "NotFree"; }

KReport verdict(long d, int n, bool enable_congruence) {
  const Rational raw = k_raw(d, n);
  const Rational closed = k_closed(d, n);
  if (raw != closed)
    throw std::logic_error("K(Gamma) route disagreement at d=" + std::to_string(d) + ", n=" +
                           std::to_string(n) + ": ratio gives " + raw.to_string() +
                           ", closed form gives " + closed.to_string());
  KReport r;
  r.d = d;
  r.n = n;
  r.k_exact = raw;
  r.k_float = to_double(ExactValue(raw));
  r.bound = freeness_bound(d, n);
  r.is_integer = raw.is_integer();
  r.passes_bound = raw >= Rational(r.bound);
  if (enable_congruence && d == 3) {
    bool ok = r.is_integer;
    if (ok) {
      mpz_class m = raw.num() % 6;
      if (m < 0) m += 6;
      ok = m == (n + 1) % 6;
    }
    r.congruence_ok = ok;
  }
  r.verdict = r.passes_bound && r.is_integer && r.congruence_ok.value_or(true)
                  ? Verdict::PossiblyFree
                  : Verdict::NotFree;
  return r;
}

VerdictTable sweep(std::vector<long> d_list, int n_max, bool enable_congruence) {
  if (n_max < 2) throw std::invalid_argument("sweep: n_max must be >= 2");
  std::sort(d_list.begin(), d_list.end());
  d_list.erase(std::unique(d_list.begin(), d_list.end()), d_list.end());

  VerdictTable table;
  for (long d : d_list)
    for (int n = 2; n <= n_max; ++n) table.reports.push_back(verdict(d, n, enable_congruence));

  std::vector<long> all_fail;
  for (long d : d_list) {
    std::vector<int> surviving;
    for (const KReport& r : table.reports)
      if (r.d == d && r.verdict == Verdict::PossiblyFree) surviving.push_back(r.n);
    if (surviving.empty()) {
      all_fail.push_back(d);
      continue;
    }
    std::ostringstream os;
    os << "d = " << d << ": possibly free only for n in {";
    for (size_t i = 0; i < surviving.size(); ++i) os << (i ? ", " : "") << surviving[i];
    os << "} (n = 2.." << n_max << " tested; the conditions are necessary, not sufficient)";
    table.summary.push_back(os.str());
  }
  if (!all_fail.empty()) {
    std::ostringstream os;
    os << (all_fail.size() == 1 ? "d = " : "d in {");
    for (size_t i = 0; i < all_fail.size(); ++i) os << (i ? ", " : "") << all_fail[i];
    os << (all_fail.size() == 1 ? "" : "}");
    os << ": not free for any n in 2.." << n_max;
    table.summary.push_back(os.str());
  }
  return table;
}

}  // namespace kgamma

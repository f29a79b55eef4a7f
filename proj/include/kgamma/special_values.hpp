#pragma once

#include <map>
#include <mutex>

#include "kgamma/characters.hpp"
#include "kgamma/exact_value.hpp"

namespace kgamma {

/// Append-only cache of Bernoulli numbers under the B_1 = -1/2 convention,
/// filled by the defining recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0.
/// get() is safe for concurrent callers.
class BernoulliCache {
 public:
  Rational get(unsigned n);

 private:
  std::mutex mu_;
  std::map<unsigned, Rational> table_;
};

/// B_n from a shared process-wide cache.
Rational bernoulli(unsigned n);

/// Bernoulli polynomial B_n(x) = sum_j C(n, j) B_j x^{n-j}.
Rational bernoulli_poly(unsigned n, const Rational& x);

/// Generalized Bernoulli number B_{n,chi} = f^{n-1} sum_{a=1}^{f} chi(a) B_n(a/f)
/// with f the conductor of chi. Vanishes for even n >= 2 when chi is odd.
Rational gen_bernoulli(unsigned n, const QuadChar& chi);

/// zeta(k) = (-1)^{k/2+1} (2 pi)^k B_k / (2 k!) for even k >= 2.
/// Odd k throws std::domain_error ("no closed form in scope").
ExactValue zeta_even_exact(long k);

struct LValueExact {
  long d = 0;
  long k = 0;
  ExactValue value;  // coeff > 0, pi_exp = k, sqrt_d_exp = 1
};

/// Exact L(k, chi_D) for odd k >= 3 and D = -d an odd fundamental
/// discriminant (d = 3 mod 4, squarefree). Even k or an unsuitable d throws.
LValueExact l_odd_exact(long k, long d);

/// Closed-form engine behind l_odd_exact, valid for every fundamental
/// discriminant D < 0 (even conductors included; sqrt|D| folds to 2 sqrt(d)):
///   L(k, chi_D) = (-1)^{1+(k-1)/2} (sqrt|D|/2) (2 pi/|D|)^k B_{k,chi} / k!
ExactValue l_odd_exact_disc(long k, const FieldParams& field);

struct DirichletSum {
  double value = 0;
  double tail_bound = 0;  // bound on the remainder not covered by `value`
};

/// Partial Dirichlet sum sum_{m=1}^{terms} chi_D(m)/m^k, compensated
/// summation smallest-first; tail bound terms^{1-k}/(k-1). Requires k >= 2
/// and terms >= 1000.
DirichletSum l_numeric(long k, long d, long terms);

/// Like l_numeric with chi = 1, completed with a three-term Euler-Maclaurin
/// tail so the result is usable down to k = 2; the reported bound covers the
/// residual after completion.
DirichletSum zeta_numeric(long k, long terms);

}  // namespace kgamma

#pragma once

#include <stdexcept>

namespace kgamma {

/// Full Kronecker symbol (a/n), defined for every integer pair with the
/// (a/2) supplement and (a/0) = 1 iff a = +-1. Binary-GCD-style reciprocity.
/// The single value n = LLONG_MIN is rejected.
int kronecker_symbol(long long a, long long n);

/// Field data for K = Q(sqrt(-d)), d positive squarefree.
/// D = -d when d = 3 (mod 4), else -4d; the conductor is |D|.
struct FieldParams {
  long d = 0;
  long discriminant = 0;  // D < 0, fundamental
  long conductor = 0;     // |D|
  bool two_unramified = false;   // true iff d = 3 (mod 4), i.e. D odd
  bool class_number_one = false; // true iff d in {1, 2, 3, 7, 11, 19, 43, 67, 163}
};

/// Throws std::invalid_argument for d < 1, std::domain_error if d is not
/// squarefree.
FieldParams field_params(long d);

/// The quadratic character chi_D(m) = (D/m) of Q(sqrt(-d)).
/// Completely multiplicative, odd (chi(-1) = -1), period |D|, and
/// chi(m) = 0 exactly when gcd(m, |D|) > 1.
class QuadChar {
 public:
  explicit QuadChar(FieldParams params) : params_(params) {}
  static QuadChar for_d(long d) { return QuadChar(field_params(d)); }

  int operator()(long long m) const { return kronecker_symbol(params_.discriminant, m); }
  const FieldParams& params() const { return params_; }

 private:
  FieldParams params_;
};

}  // namespace kgamma

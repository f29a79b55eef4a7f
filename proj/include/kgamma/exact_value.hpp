#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "kgamma/rational.hpp"

namespace kgamma {

/// Thrown by ExactValue::as_rational on a value with surviving
/// transcendental factors; carries the offending exponents.
class NotRationalError : public std::domain_error {
 public:
  NotRationalError(long pi_exp, int sqrt_d_exp, long d);
  long pi_exp() const { return pi_exp_; }
  int sqrt_d_exp() const { return sqrt_d_exp_; }
  long d() const { return d_; }

 private:
  long pi_exp_;
  int sqrt_d_exp_;
  long d_;
};

/// An element of Q * pi^a * sqrt(d)^b with b in {0, 1} and d a positive
/// squarefree integer. Canonical form:
///   - (sqrt(d))^2 is always folded into the coefficient, so b stays in {0,1};
///   - zero is (0, pi^0, sqrt^0);
///   - d collapses to 1 whenever b = 0 (the field parameter is inert then).
/// Two values are equal iff all four fields are equal.
class ExactValue {
 public:
  ExactValue() = default;  // zero
  ExactValue(Rational coeff) : coeff_(std::move(coeff)) { canonicalize(0); }  // NOLINT
  ExactValue(long v) : ExactValue(Rational(v)) {}                             // NOLINT
  ExactValue(Rational coeff, long pi_exp) : coeff_(std::move(coeff)), pi_exp_(pi_exp) { canonicalize(0); }
  /// General constructor; sqrt_d_exp may be any integer and is folded.
  ExactValue(Rational coeff, long pi_exp, long sqrt_d_exp, long d);

  static ExactValue pi_power(long a) { return ExactValue(Rational(1), a); }
  static ExactValue sqrt_of(long d) { return ExactValue(Rational(1), 0, 1, d); }

  const Rational& coeff() const { return coeff_; }
  long pi_exp() const { return pi_exp_; }
  int sqrt_d_exp() const { return sqrt_d_exp_; }
  long d() const { return d_; }

  bool is_zero() const { return coeff_.is_zero(); }
  bool is_rational() const { return pi_exp_ == 0 && sqrt_d_exp_ == 0; }

  /// Returns the coefficient when the value is plain rational, else throws
  /// NotRationalError with the surviving exponents.
  Rational as_rational() const;

  /// Canonical rendering: "<coeff> * pi^<a> * sqrt(<d>)^<b>" with zero
  /// exponents elided and unit exponents printed bare ("pi", "sqrt(7)").
  std::string to_string() const;
  /// Exact inverse of to_string; also accepts explicit "^1" and any-integer
  /// sqrt exponents (folded on construction).
  static ExactValue parse(std::string_view s);

  friend ExactValue operator*(const ExactValue& a, const ExactValue& b);
  friend ExactValue operator/(const ExactValue& a, const ExactValue& b);
  /// Defined for like terms only (equal exponents and d, or a zero operand);
  /// a sum of unlike terms leaves the value domain and throws.
  friend ExactValue operator+(const ExactValue& a, const ExactValue& b);
  friend ExactValue operator-(const ExactValue& a, const ExactValue& b);
  ExactValue operator-() const;

  bool operator==(const ExactValue&) const = default;

 private:
  void canonicalize(long sqrt_exp_extra);

  Rational coeff_{};
  long pi_exp_ = 0;
  int sqrt_d_exp_ = 0;
  long d_ = 1;
};

/// Decimal approximation with `digits` significant digits, computed via MPFR
/// with pi and sqrt(d) carried at digits + 10 guard digits and rounded
/// half-even.
std::string to_decimal_string(const ExactValue& x, int digits = 15);

/// Correctly rounded double approximation (MPFR round-to-nearest).
double to_double(const ExactValue& x);

}  // namespace kgamma

#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace kgamma {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Zero is stored uniquely as 0/1.
class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(const mpz_class& v) : q_(v) {}
  Rational(mpz_class num, mpz_class den);
  Rational(long num, long den);

  /// Parses "p" or "p/q" (base 10). Throws std::invalid_argument on
  /// malformed input, std::domain_error on q = 0.
  static Rational from_string(std::string_view s);

  const mpz_class& num() const { return q_.get_num(); }
  const mpz_class& den() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Integer power; e < 0 requires a nonzero base.
  Rational pow(long e) const;

  Rational abs() const;
  double to_double() const { return q_.get_d(); }
  std::string to_string() const;  // "p" or "p/q"
  const mpq_class& as_mpq() const { return q_; }

  friend Rational operator+(const Rational& a, const Rational& b) { return wrap(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return wrap(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return wrap(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("Rational: division by zero");
    return wrap(mpq_class(a.q_ / b.q_));
  }
  Rational operator-() const { return wrap(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

 private:
  static Rational wrap(mpq_class q) {  // q must already be canonical
    Rational r;
    r.q_ = std::move(q);
    return r;
  }
  mpq_class q_;  // kept canonical at all times
};

// Integer helpers shared across the library.
mpz_class factorial(unsigned long n);
mpz_class binomial(unsigned long n, unsigned long k);
mpz_class pow_z(const mpz_class& base, unsigned long e);
bool is_squarefree(long long n);  // n >= 1

}  // namespace kgamma

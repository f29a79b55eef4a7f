#include "kgamma/exact_value.hpp"

#include <mpfr.h>

#include <charconv>
#include <vector>

namespace kgamma {

NotRationalError::NotRationalError(long pi_exp, int sqrt_d_exp, long d)
    : std::domain_error("not rational: residual pi^" + std::to_string(pi_exp) +
                        " * sqrt(" + std::to_string(d) + ")^" + std::to_string(sqrt_d_exp)),
      pi_exp_(pi_exp),
      sqrt_d_exp_(sqrt_d_exp),
      d_(d) {}

ExactValue::ExactValue(Rational coeff, long pi_exp, long sqrt_d_exp, long d)
    : coeff_(std::move(coeff)), pi_exp_(pi_exp), d_(d) {
  if (d < 1) throw std::domain_error("ExactValue: field parameter must be positive");
  if (sqrt_d_exp != 0 && !is_squarefree(d))
    throw std::domain_error("ExactValue: field parameter must be squarefree");
  canonicalize(sqrt_d_exp);
}

void ExactValue::canonicalize(long sqrt_exp_raw) {
  if (d_ == 1) sqrt_exp_raw = 0;  // sqrt(1) = 1
  if (sqrt_exp_raw != 0 && !coeff_.is_zero()) {
    // fold (sqrt d)^2 = d; floor division keeps the remainder in {0, 1}
    const long q = sqrt_exp_raw >= 0 ? sqrt_exp_raw / 2 : (sqrt_exp_raw - 1) / 2;
    if (q != 0) coeff_ *= Rational(d_).pow(q);
    sqrt_d_exp_ = static_cast<int>(sqrt_exp_raw - 2 * q);
  } else {
    sqrt_d_exp_ = 0;
  }
  if (coeff_.is_zero()) {
    pi_exp_ = 0;
    sqrt_d_exp_ = 0;
  }
  if (sqrt_d_exp_ == 0) d_ = 1;
}

Rational ExactValue::as_rational() const {
  if (!is_rational()) throw NotRationalError(pi_exp_, sqrt_d_exp_, d_);
  return coeff_;
}

ExactValue operator*(const ExactValue& a, const ExactValue& b) {
  if (a.sqrt_d_exp_ != 0 && b.sqrt_d_exp_ != 0 && a.d_ != b.d_)
    throw std::domain_error("ExactValue: incompatible field parameters");
  ExactValue r;
  r.coeff_ = a.coeff_ * b.coeff_;
  r.pi_exp_ = a.pi_exp_ + b.pi_exp_;
  r.d_ = a.sqrt_d_exp_ != 0 ? a.d_ : b.d_;
  r.canonicalize(static_cast<long>(a.sqrt_d_exp_) + b.sqrt_d_exp_);
  return r;
}

ExactValue operator/(const ExactValue& a, const ExactValue& b) {
  if (b.is_zero()) throw std::domain_error("ExactValue: division by zero");
  // 1 / (c * pi^a * sqrt(d)) = (1/(c*d)) * pi^(-a) * sqrt(d)
  ExactValue inv;
  inv.coeff_ = Rational(1) / (b.sqrt_d_exp_ != 0 ? b.coeff_ * Rational(b.d_) : b.coeff_);
  inv.pi_exp_ = -b.pi_exp_;
  inv.sqrt_d_exp_ = b.sqrt_d_exp_;
  inv.d_ = b.d_;
  return a * inv;
}

ExactValue operator+(const ExactValue& a, const ExactValue& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.pi_exp_ != b.pi_exp_ || a.sqrt_d_exp_ != b.sqrt_d_exp_ || a.d_ != b.d_)
    throw std::domain_error("ExactValue: sum of unlike terms leaves the value domain");
  ExactValue r = a;
  r.coeff_ += b.coeff_;
  r.canonicalize(r.sqrt_d_exp_);
  return r;
}

ExactValue operator-(const ExactValue& a, const ExactValue& b) { return a + (-b); }

ExactValue ExactValue::operator-() const {
  ExactValue r = *this;
  r.coeff_ = -r.coeff_;
  return r;
}

std::string ExactValue::to_string() const {
  std::string s = coeff_.to_string();
  if (pi_exp_ != 0) {
    s += " * pi";
    if (pi_exp_ != 1) s += "^" + std::to_string(pi_exp_);
  }
  if (sqrt_d_exp_ != 0) s += " * sqrt(" + std::to_string(d_) + ")";
  return s;
}

namespace {

std::string_view trim(std::string_view v) {
  while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
  while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
  return v;
}

long parse_long(std::string_view v) {
  long out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc() || ptr != v.data() + v.size())
    throw std::invalid_argument("ExactValue: bad integer '" + std::string(v) + "'");
  return out;
}

}  // namespace

ExactValue ExactValue::parse(std::string_view s) {
  std::vector<std::string_view> parts;
  while (true) {
    const auto star = s.find('*');
    parts.push_back(trim(s.substr(0, star)));
    if (star == std::string_view::npos) break;
    s.remove_prefix(star + 1);
  }
  if (parts.empty() || parts.front().empty())
    throw std::invalid_argument("ExactValue: empty coefficient");

  Rational coeff = Rational::from_string(parts.front());
  long pi_exp = 0;
  long sqrt_exp = 0;
  long d = 1;
  for (size_t i = 1; i < parts.size(); ++i) {
    std::string_view p = parts[i];
    long exp = 1;
    const auto caret = p.rfind('^');
    if (caret != std::string_view::npos && p.find(')', caret) == std::string_view::npos) {
      exp = parse_long(trim(p.substr(caret + 1)));
      p = trim(p.substr(0, caret));
    }
    if (p == "pi") {
      pi_exp += exp;
    } else if (p.starts_with("sqrt(") && p.ends_with(")")) {
      const long rad = parse_long(trim(p.substr(5, p.size() - 6)));
      if (rad < 1) throw std::invalid_argument("ExactValue: sqrt radicand must be positive");
      if (rad == 1) continue;  // sqrt(1) = 1
      if (d == 1)
        d = rad;
      else if (d != rad)
        throw std::domain_error("ExactValue: incompatible field parameters");
      sqrt_exp += exp;
    } else {
      throw std::invalid_argument("ExactValue: unrecognized factor '" + std::string(p) + "'");
    }
  }
  return ExactValue(std::move(coeff), pi_exp, sqrt_exp, d);
}

namespace {

struct MpfrValue {
  explicit MpfrValue(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~MpfrValue() { mpfr_clear(v); }
  MpfrValue(const MpfrValue&) = delete;
  MpfrValue& operator=(const MpfrValue&) = delete;
  mpfr_t v;
};

void eval_mpfr(mpfr_ptr out, const ExactValue& x, mpfr_prec_t prec) {
  MpfrValue t(prec);
  mpfr_set_q(out, x.coeff().as_mpq().get_mpq_t(), MPFR_RNDN);
  if (x.pi_exp() != 0) {
    mpfr_const_pi(t.v, MPFR_RNDN);
    mpfr_pow_si(t.v, t.v, x.pi_exp(), MPFR_RNDN);
    mpfr_mul(out, out, t.v, MPFR_RNDN);
  }
  if (x.sqrt_d_exp() != 0) {
    mpfr_sqrt_ui(t.v, static_cast<unsigned long>(x.d()), MPFR_RNDN);
    mpfr_mul(out, out, t.v, MPFR_RNDN);
  }
}

}  // namespace

std::string to_decimal_string(const ExactValue& x, int digits) {
  if (digits < 1) throw std::invalid_argument("to_decimal_string: digits must be >= 1");
  // 10 guard digits beyond the requested precision
  const auto prec = static_cast<mpfr_prec_t>((digits + 10) * 3.3219280948873626) + 8;
  MpfrValue v(prec);
  eval_mpfr(v.v, x, prec);
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Rg", digits, v.v) < 0)
    throw std::runtime_error("to_decimal_string: formatting failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

double to_double(const ExactValue& x) {
  MpfrValue v(128);
  eval_mpfr(v.v, x, 128);
  return mpfr_get_d(v.v, MPFR_RNDN);
}

}  // namespace kgamma

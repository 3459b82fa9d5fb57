#include "quadgen/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <vector>

namespace quadgen {

namespace {

constexpr double kLog10Of2 = 0.30102999566398119521;

thread_local mpfr_prec_t t_default_bits = 384;

std::string_view trimmed(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

// -- Precision -----------------------------------------------------------

int Precision::decimal_digits() const {
  return static_cast<int>(std::ceil(static_cast<double>(bits_) * kLog10Of2));
}

Precision Precision::from_decimal_digits(int digits) {
  if (digits < 1) throw std::invalid_argument("Precision: digits must be >= 1");
  long bits = static_cast<long>(std::ceil(digits / kLog10Of2));
  bits = std::max(bits, 64L);
  while (Precision(bits).decimal_digits() < digits) ++bits;
  return Precision(bits);
}

// -- Rational ------------------------------------------------------------

Rational::Rational(long n, long d) {
  if (d == 0) throw std::invalid_argument("Rational: zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = trimmed(text);
  if (s.empty()) throw std::invalid_argument("Rational::parse: empty input");

  auto parse_mpz = [](std::string_view digits) {
    // strict [+-]?[0-9]+ — mpz_set_str alone would ignore embedded spaces
    bool valid = !digits.empty();
    for (std::size_t k = 0; k < digits.size(); ++k) {
      char c = digits[k];
      valid = valid && ((c >= '0' && c <= '9') ||
                        (k == 0 && (c == '+' || c == '-') && digits.size() > 1));
    }
    mpz_class z;
    if (!valid || mpz_set_str(z.get_mpz_t(), std::string(digits).c_str(), 10) != 0)
      throw std::invalid_argument("Rational::parse: malformed integer \"" +
                                  std::string(digits) + "\"");
    return z;
  };

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    mpz_class num = parse_mpz(s.substr(0, slash));
    mpz_class den = parse_mpz(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("Rational::parse: zero denominator");
    Rational r;
    r.v_ = mpq_class(num) / mpq_class(den);
    r.v_.canonicalize();
    return r;
  }

  // Decimal / scientific literal: every finite decimal is exactly rational.
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) negative = (s[i++] == '-');
  std::string digits;
  long frac_len = 0;
  bool seen_digit = false, seen_dot = false;
  for (; i < s.size(); ++i) {
    char c = s[i];
    if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_dot) ++frac_len;
    } else if (c == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  long exp10 = 0;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    bool exp_neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) exp_neg = (s[i++] == '-');
    if (i >= s.size()) throw std::invalid_argument("Rational::parse: malformed exponent");
    for (; i < s.size(); ++i) {
      char c = s[i];
      if (c < '0' || c > '9') break;
      exp10 = exp10 * 10 + (c - '0');
      if (exp10 > 1000000) throw std::invalid_argument("Rational::parse: exponent too large");
    }
    if (exp_neg) exp10 = -exp10;
  }
  if (!seen_digit || i != s.size())
    throw std::invalid_argument("Rational::parse: malformed literal \"" + std::string(s) + "\"");

  mpz_class mant = parse_mpz(digits.empty() ? "0" : digits);
  long net = exp10 - frac_len;
  mpz_class num = mant, den = 1;
  mpz_class ten = 10;
  if (net >= 0) {
    mpz_class scale;
    mpz_pow_ui(scale.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(net));
    num *= scale;
  } else {
    mpz_pow_ui(den.get_mpz_t(), ten.get_mpz_t(), static_cast<unsigned long>(-net));
  }
  Rational r;
  r.v_ = mpq_class(num) / mpq_class(den);
  r.v_.canonicalize();
  if (negative) r.v_ = -r.v_;
  return r;
}

Rational Rational::factorial(unsigned long n) {
  mpz_class z;
  mpz_fac_ui(z.get_mpz_t(), n);
  Rational r;
  r.v_ = mpq_class(z);
  return r;
}

Rational Rational::pow2(long e) {
  Rational r(1);
  if (e >= 0) {
    mpq_mul_2exp(r.v_.get_mpq_t(), r.v_.get_mpq_t(), static_cast<unsigned long>(e));
  } else {
    mpq_div_2exp(r.v_.get_mpq_t(), r.v_.get_mpq_t(), static_cast<unsigned long>(-e));
  }
  return r;
}

std::string Rational::to_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

// -- BigFloat ------------------------------------------------------------

BigFloat::BigFloat() {
  mpfr_init2(v_, t_default_bits);
  mpfr_set_zero(v_, 1);
}

BigFloat::BigFloat(long v) {
  mpfr_init2(v_, t_default_bits);
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(double v) {
  mpfr_init2(v_, t_default_bits);
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& q) {
  mpfr_init2(v_, t_default_bits);
  mpfr_set_q(v_, q.backend().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(long v, Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_si(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(double v, Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_d(v_, v, MPFR_RNDN);
}

BigFloat::BigFloat(const Rational& q, Precision p) {
  mpfr_init2(v_, p.bits());
  mpfr_set_q(v_, q.backend().get_mpq_t(), MPFR_RNDN);
}

BigFloat::BigFloat(const BigFloat& o) {
  mpfr_init2(v_, mpfr_get_prec(o.v_));
  mpfr_set(v_, o.v_, MPFR_RNDN);
}

BigFloat::BigFloat(BigFloat&& o) noexcept {
  v_[0] = o.v_[0];
  mpfr_init2(o.v_, 64);
  mpfr_set_zero(o.v_, 1);
}

BigFloat& BigFloat::operator=(const BigFloat& o) {
  if (this != &o) {
    mpfr_set_prec(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  return *this;
}

BigFloat& BigFloat::operator=(BigFloat&& o) noexcept {
  if (this != &o) mpfr_swap(v_, o.v_);
  return *this;
}

BigFloat::~BigFloat() { mpfr_clear(v_); }

BigFloat BigFloat::parse(std::string_view text) {
  return parse(text, Precision(t_default_bits));
}

BigFloat BigFloat::parse(std::string_view text, Precision p) {
  std::string s(trimmed(text));
  if (s.empty()) throw std::invalid_argument("BigFloat::parse: empty input");
  BigFloat r(0L, p);
  char* end = nullptr;
  mpfr_strtofr(r.v_, s.c_str(), &end, 10, MPFR_RNDN);
  if (end != s.c_str() + s.size())
    throw std::invalid_argument("BigFloat::parse: malformed literal \"" + s + "\"");
  return r;
}

BigFloat BigFloat::pow10(long e) {
  BigFloat ex(e);
  BigFloat r;
  mpfr_exp10(r.v_, ex.v_, MPFR_RNDN);
  return r;
}

Precision BigFloat::default_precision() { return Precision(t_default_bits); }

void BigFloat::set_default_precision(Precision p) { t_default_bits = p.bits(); }

std::string BigFloat::to_string() const {
  return to_string(precision().decimal_digits());
}

std::string BigFloat::to_string(int significant_digits) const {
  if (significant_digits < 1) significant_digits = 1;
  mpfr_t tmp;
  mpfr_init2(tmp, mpfr_get_prec(v_));
  mpfr_set(tmp, v_, MPFR_RNDN);
  if (mpfr_zero_p(tmp)) mpfr_setsign(tmp, tmp, 0, MPFR_RNDN);  // canonical +0
  char* raw = nullptr;
  mpfr_asprintf(&raw, "%.*Re", significant_digits - 1, tmp);
  std::string out(raw);
  mpfr_free_str(raw);
  mpfr_clear(tmp);
  return out;
}

BigFloat BigFloat::operator-() const {
  BigFloat r(0L, precision());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

BigFloat& BigFloat::operator+=(const BigFloat& o) {
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator-=(const BigFloat& o) {
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(const BigFloat& o) {
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator/=(const BigFloat& o) {
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

BigFloat& BigFloat::operator*=(long k) {
  mpfr_mul_si(v_, v_, k, MPFR_RNDN);
  return *this;
}

namespace {
Precision wider(const mpfr_t a, const mpfr_t b) {
  return Precision(std::max(mpfr_get_prec(a), mpfr_get_prec(b)));
}
}  // namespace

BigFloat operator+(const BigFloat& a, const BigFloat& b) {
  BigFloat r(0L, wider(a.v_, b.v_));
  mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator-(const BigFloat& a, const BigFloat& b) {
  BigFloat r(0L, wider(a.v_, b.v_));
  mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, const BigFloat& b) {
  BigFloat r(0L, wider(a.v_, b.v_));
  mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator/(const BigFloat& a, const BigFloat& b) {
  BigFloat r(0L, wider(a.v_, b.v_));
  mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
  return r;
}

BigFloat operator*(const BigFloat& a, long k) {
  BigFloat r(0L, a.precision());
  mpfr_mul_si(r.v_, a.v_, k, MPFR_RNDN);
  return r;
}

BigFloat abs(const BigFloat& a) {
  BigFloat r(0L, a.precision());
  mpfr_abs(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat sqrt(const BigFloat& a) {
  BigFloat r(0L, a.precision());
  mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
  return r;
}

BigFloat scalb2(const BigFloat& a, long e) {
  BigFloat r(0L, a.precision());
  mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
  return r;
}

bool is_effectively_zero(const BigFloat& x, const BigFloat& scale,
                         const BigFloat& tol) {
  if (tol.sign() <= 0)
    throw std::invalid_argument("is_effectively_zero: tol must be > 0");
  if (scale.sign() < 0)
    throw std::invalid_argument("is_effectively_zero: scale must be >= 0");
  const BigFloat one(1L, scale.precision());
  return abs(x) <= tol * (scale < one ? one : scale);
}

}  // namespace quadgen

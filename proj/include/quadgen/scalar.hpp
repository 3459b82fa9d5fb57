#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace quadgen {

/// Working precision of the arbitrary-precision float backend, in bits.
/// decimal_digits() is the derived significant-digit count used for
/// serialization and tolerance defaults.
class Precision {
 public:
  explicit Precision(long bits) : bits_(bits) {
    if (bits < 64) throw std::invalid_argument("Precision: bits must be >= 64");
  }

  long bits() const { return bits_; }
  int decimal_digits() const;

  /// Smallest precision whose decimal_digits() covers `digits`.
  static Precision from_decimal_digits(int digits);

  friend bool operator==(Precision, Precision) = default;

 private:
  long bits_;
};

/// Exact rational number, always reduced, denominator > 0.
class Rational {
 public:
  Rational() : v_(0) {}
  explicit Rational(long n) : v_(n) {}
  Rational(long n, long d);

  /// Accepts "p/q", integer, and finite decimal/scientific literals
  /// ("-3", "2.5", "1e-3"); every finite decimal is an exact rational.
  static Rational parse(std::string_view text);

  static Rational factorial(unsigned long n);
  static Rational pow2(long e);  // 2^e, e may be negative

  bool is_zero() const { return mpq_sgn(v_.get_mpq_t()) == 0; }
  int sign() const { return mpq_sgn(v_.get_mpq_t()); }
  double to_double() const { return v_.get_d(); }
  std::string to_string() const;  // canonical "p/q", e.g. "0/1", "-1/2"

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);
  Rational& operator*=(long k) { v_ *= k; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator*(Rational a, long k) { return a *= k; }
  friend Rational operator*(long k, Rational a) { return a *= k; }

  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) <=> 0;
  }
  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a, long b) {
    return mpq_cmp_si(a.v_.get_mpq_t(), b, 1) <=> 0;
  }
  friend bool operator==(const Rational& a, long b) {
    return mpq_cmp_si(a.v_.get_mpq_t(), b, 1) == 0;
  }

  friend Rational abs(const Rational& a) {
    Rational r;
    mpq_abs(r.v_.get_mpq_t(), a.v_.get_mpq_t());
    return r;
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& a) {
    return os << a.to_string();
  }

  const mpq_class& backend() const { return v_; }

 private:
  mpq_class v_;
};

/// Arbitrary-precision binary float backed by MPFR; every value carries its
/// precision in bits and all arithmetic rounds to nearest at the result's
/// precision (max of the operands'). Values made without an explicit
/// Precision use the thread-local default (384 bits unless scoped).
class BigFloat {
 public:
  BigFloat();
  explicit BigFloat(long v);
  explicit BigFloat(int v) : BigFloat(static_cast<long>(v)) {}
  explicit BigFloat(double v);
  explicit BigFloat(const Rational& q);
  BigFloat(long v, Precision p);
  BigFloat(int v, Precision p) : BigFloat(static_cast<long>(v), p) {}
  BigFloat(double v, Precision p);
  BigFloat(const Rational& q, Precision p);

  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  static BigFloat parse(std::string_view text);
  static BigFloat parse(std::string_view text, Precision p);
  static BigFloat pow10(long e);  // 10^e at default precision

  static Precision default_precision();
  static void set_default_precision(Precision p);

  Precision precision() const { return Precision(mpfr_get_prec(v_)); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  /// Decimal scientific notation with decimal_digits() significant digits.
  std::string to_string() const;
  std::string to_string(int significant_digits) const;

  BigFloat operator-() const;
  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  BigFloat& operator*=(long k);

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
  friend BigFloat operator*(const BigFloat& a, long k);
  friend BigFloat operator*(long k, const BigFloat& a) { return a * k; }

  friend std::strong_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    return mpfr_cmp(a.v_, b.v_) <=> 0;
  }
  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend std::strong_ordering operator<=>(const BigFloat& a, long b) {
    return mpfr_cmp_si(a.v_, b) <=> 0;
  }
  friend bool operator==(const BigFloat& a, long b) {
    return mpfr_cmp_si(a.v_, b) == 0;
  }

  friend BigFloat abs(const BigFloat& a);
  friend BigFloat sqrt(const BigFloat& a);
  /// a * 2^e, exact.
  friend BigFloat scalb2(const BigFloat& a, long e);

  friend std::ostream& operator<<(std::ostream& os, const BigFloat& a) {
    return os << a.to_string();
  }

 private:
  mpfr_t v_;
};

BigFloat abs(const BigFloat& a);
BigFloat sqrt(const BigFloat& a);
BigFloat scalb2(const BigFloat& a, long e);

/// RAII setter for the thread-local default BigFloat precision; the flavor
/// and precision of a computation are fixed once at its start.
class PrecisionScope {
 public:
  explicit PrecisionScope(Precision p)
      : saved_(BigFloat::default_precision()) {
    BigFloat::set_default_precision(p);
  }
  ~PrecisionScope() { BigFloat::set_default_precision(saved_); }
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  Precision saved_;
};

// -- zero test ----------------------------------------------------------

/// Rational flavor: exact zero test; scale and tol ignored.
inline bool is_effectively_zero(const Rational& x, const Rational&,
                                const Rational&) {
  return x.is_zero();
}

/// BigFloat flavor: |x| <= tol * max(scale, 1); requires tol > 0.
bool is_effectively_zero(const BigFloat& x, const BigFloat& scale,
                         const BigFloat& tol);

/// Default scan tolerance: exact (0) for Rational; 10^-(decimal_digits-10)
/// at the current default precision for BigFloat.
template <class S>
S default_zero_tolerance();
template <>
inline Rational default_zero_tolerance<Rational>() {
  return Rational(0);
}
template <>
inline BigFloat default_zero_tolerance<BigFloat>() {
  return BigFloat::pow10(-(BigFloat::default_precision().decimal_digits() - 10));
}

/// Relaxed tolerance for the conditioning diagnostic: half the working digits.
template <class S>
S relaxed_zero_tolerance();
template <>
inline Rational relaxed_zero_tolerance<Rational>() {
  return Rational(0);
}
template <>
inline BigFloat relaxed_zero_tolerance<BigFloat>() {
  return BigFloat::pow10(-(BigFloat::default_precision().decimal_digits() / 2));
}

// -- scalar concept -----------------------------------------------------

template <class S>
concept ScalarLike = requires(const S a, const S b, S m, long k) {
  S();
  S(k);
  { a + b } -> std::same_as<S>;
  { a - b } -> std::same_as<S>;
  { a* b } -> std::same_as<S>;
  { a / b } -> std::same_as<S>;
  { -a } -> std::same_as<S>;
  { a* k } -> std::same_as<S>;
  m += a;
  m -= a;
  m *= a;
  m *= k;
  { abs(a) } -> std::same_as<S>;
  { a < b } -> std::convertible_to<bool>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.sign() } -> std::convertible_to<int>;
  { a.to_string() } -> std::convertible_to<std::string>;
  { a.to_double() } -> std::convertible_to<double>;
  { is_effectively_zero(a, b, b) } -> std::convertible_to<bool>;
};

static_assert(ScalarLike<Rational>);
static_assert(ScalarLike<BigFloat>);

template <ScalarLike S>
S factorial(unsigned long m) {
  S r(1);
  for (unsigned long k = 2; k <= m; ++k) r *= static_cast<long>(k);
  return r;
}

template <ScalarLike S>
S power(const S& base, unsigned long e) {
  S r(1);
  S b = base;
  while (e > 0) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return r;
}

/// Flavor + precision record attached to computed rules.
struct ArithmeticInfo {
  std::string flavor;  // "rational" | "bigfloat"
  long precision_bits = 0;     // bigfloat only
  int precision_digits = 0;    // bigfloat only
};

template <ScalarLike S>
ArithmeticInfo arithmetic_info() {
  if constexpr (std::same_as<S, Rational>) {
    return {"rational", 0, 0};
  } else {
    Precision p = BigFloat::default_precision();
    return {"bigfloat", p.bits(), p.decimal_digits()};
  }
}

}  // namespace quadgen

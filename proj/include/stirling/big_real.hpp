#ifndef STIRLING_BIG_REAL_HPP
#define STIRLING_BIG_REAL_HPP

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <memory>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

#include "stirling/exact.hpp"

namespace stirling {

using Precision = mpfr_prec_t;

inline constexpr Precision kDefaultPrecision = 384;
inline constexpr Precision kMinPrecision = 64;

/// Bits needed for `digits` decimal digits, plus a few guard bits.
inline Precision bits_for_digits(unsigned digits) {
  return static_cast<Precision>(std::ceil(digits * 3.3219280948873623)) + 16;
}

/// Binary floating value that carries its own precision. Every operation rounds
/// to nearest; a binary operation works at the larger of its operands' precisions.
/// There is no ambient precision, so values of different precisions can be used
/// from different threads freely.
class BigReal {
 public:
  explicit BigReal(Precision prec = kDefaultPrecision) { init(prec); mpfr_set_zero(v_, 1); }
  BigReal(long value, Precision prec) { init(prec); mpfr_set_si(v_, value, MPFR_RNDN); }
  BigReal(int value, Precision prec) : BigReal(static_cast<long>(value), prec) {}
  BigReal(unsigned long value, Precision prec) { init(prec); mpfr_set_ui(v_, value, MPFR_RNDN); }
  BigReal(double value, Precision prec) { init(prec); mpfr_set_d(v_, value, MPFR_RNDN); }
  BigReal(const ExactInteger& value, Precision prec) { init(prec); mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN); }
  BigReal(const ExactRational& value, Precision prec) { init(prec); mpfr_set_q(v_, value.get_mpq_t(), MPFR_RNDN); }
  BigReal(const std::string& decimal, Precision prec) {
    init(prec);
    if (mpfr_set_str(v_, decimal.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("not a decimal number: " + decimal);
  }

  BigReal(const BigReal& other) { init(other.precision()); mpfr_set(v_, other.v_, MPFR_RNDN); }
  /// Copy rounded (or widened) to another precision.
  BigReal(const BigReal& other, Precision prec) { init(prec); mpfr_set(v_, other.v_, MPFR_RNDN); }
  BigReal(BigReal&& other) noexcept {
    init(other.precision());
    mpfr_swap(v_, other.v_);
  }
  BigReal& operator=(const BigReal& other) {
    if (this != &other) {
      mpfr_set_prec(v_, other.precision());
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }
  BigReal& operator=(BigReal&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }
  ~BigReal() { mpfr_clear(v_); }

  Precision precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  int sign() const { return mpfr_sgn(v_); }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }

  /// Scientific notation with `digits` significant digits, e.g. "9.99367381e-01".
  std::string to_string(int digits = 20) const { return format("%." + std::to_string(std::max(digits - 1, 0)) + "Re"); }

  /// Fixed notation with `decimals` digits after the point, rounded toward zero so
  /// that the printed digits are a prefix of the exact expansion.
  std::string to_fixed(int decimals) const { return format("%." + std::to_string(decimals) + "RZf"); }

  static BigReal nan(Precision prec) {
    BigReal r(prec);
    mpfr_set_nan(r.v_);
    return r;
  }

  BigReal& operator+=(const BigReal& o) { return apply(o, mpfr_add); }
  BigReal& operator-=(const BigReal& o) { return apply(o, mpfr_sub); }
  BigReal& operator*=(const BigReal& o) { return apply(o, mpfr_mul); }
  BigReal& operator/=(const BigReal& o) { return apply(o, mpfr_div); }
  BigReal& operator+=(long o) { mpfr_add_si(v_, v_, o, MPFR_RNDN); return *this; }
  BigReal& operator-=(long o) { mpfr_sub_si(v_, v_, o, MPFR_RNDN); return *this; }
  BigReal& operator*=(long o) { mpfr_mul_si(v_, v_, o, MPFR_RNDN); return *this; }
  BigReal& operator/=(long o) { mpfr_div_si(v_, v_, o, MPFR_RNDN); return *this; }

  BigReal operator-() const {
    BigReal r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

  friend BigReal operator+(BigReal a, const BigReal& b) { return a += b; }
  friend BigReal operator-(BigReal a, const BigReal& b) { return a -= b; }
  friend BigReal operator*(BigReal a, const BigReal& b) { return a *= b; }
  friend BigReal operator/(BigReal a, const BigReal& b) { return a /= b; }
  friend BigReal operator+(BigReal a, long b) { return a += b; }
  friend BigReal operator-(BigReal a, long b) { return a -= b; }
  friend BigReal operator*(BigReal a, long b) { return a *= b; }
  friend BigReal operator/(BigReal a, long b) { return a /= b; }
  friend BigReal operator+(long a, BigReal b) { return b += a; }
  friend BigReal operator*(long a, BigReal b) { return b *= a; }
  friend BigReal operator-(long a, const BigReal& b) {
    BigReal r(b.precision());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigReal operator/(long a, const BigReal& b) {
    BigReal r(b.precision());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_); }
  friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_); }
  friend bool operator<=(const BigReal& a, const BigReal& b) { return mpfr_lessequal_p(a.v_, b.v_); }
  friend bool operator>=(const BigReal& a, const BigReal& b) { return mpfr_greaterequal_p(a.v_, b.v_); }
  friend bool operator==(const BigReal& a, const BigReal& b) { return mpfr_equal_p(a.v_, b.v_); }
  friend bool operator<(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const BigReal& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const BigReal& x) { return os << x.to_string(); }

 private:
  void init(Precision prec) {
    if (prec < kMinPrecision) throw std::invalid_argument("precision below 64 bits");
    mpfr_init2(v_, prec);
  }

  BigReal& apply(const BigReal& o, int (*op)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t)) {
    if (o.precision() > precision()) mpfr_prec_round(v_, o.precision(), MPFR_RNDN);
    op(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  std::string format(const std::string& fmt) const {
    char* buf = nullptr;
    if (mpfr_asprintf(&buf, fmt.c_str(), v_) < 0) throw std::runtime_error("mpfr_asprintf failed");
    std::unique_ptr<char, void (*)(char*)> guard(buf, [](char* p) { mpfr_free_str(p); });
    return std::string(buf);
  }

  mpfr_t v_;
};

namespace detail {
template <int (*Fn)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t)>
BigReal unary(const BigReal& x) {
  BigReal r(x.precision());
  Fn(r.get(), x.get(), MPFR_RNDN);
  return r;
}
}  // namespace detail

inline BigReal sqrt(const BigReal& x) { return detail::unary<mpfr_sqrt>(x); }
inline BigReal exp(const BigReal& x) { return detail::unary<mpfr_exp>(x); }
inline BigReal log(const BigReal& x) { return detail::unary<mpfr_log>(x); }
inline BigReal abs(const BigReal& x) { return detail::unary<mpfr_abs>(x); }
inline BigReal cos(const BigReal& x) { return detail::unary<mpfr_cos>(x); }
inline BigReal sin(const BigReal& x) { return detail::unary<mpfr_sin>(x); }
inline BigReal cosh(const BigReal& x) { return detail::unary<mpfr_cosh>(x); }
inline BigReal sinh(const BigReal& x) { return detail::unary<mpfr_sinh>(x); }

inline BigReal floor(const BigReal& x) {
  BigReal r(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

inline BigReal pow(const BigReal& x, const BigReal& y) {
  BigReal r(std::max(x.precision(), y.precision()));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

inline BigReal pow(const BigReal& x, long k) {
  BigReal r(x.precision());
  mpfr_pow_si(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

inline BigReal atan2(const BigReal& y, const BigReal& x) {
  BigReal r(std::max(x.precision(), y.precision()));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

inline BigReal min(const BigReal& a, const BigReal& b) { return b < a ? b : a; }
inline BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

inline BigReal const_pi(Precision prec) {
  BigReal r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

inline BigReal const_log2(Precision prec) {
  BigReal r(prec);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

/// 10^-digits at the given precision.
inline BigReal pow10_neg(long digits, Precision prec) { return pow(BigReal(10L, prec), -digits); }

/// |a - b| / |b|, or |a| when b is zero.
inline BigReal relative_error(const BigReal& a, const BigReal& b) {
  if (b.is_zero()) return abs(a);
  return abs(a - b) / abs(b);
}

}  // namespace stirling

#endif  // STIRLING_BIG_REAL_HPP

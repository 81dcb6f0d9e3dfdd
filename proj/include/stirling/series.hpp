#ifndef STIRLING_SERIES_HPP
#define STIRLING_SERIES_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stirling/exact.hpp"
#include "stirling/exact_numbers.hpp"
#include "stirling/polynomial.hpp"

namespace stirling {

/// Power series in t truncated after t^order, exact rational coefficients.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(std::size_t order) : c_(order + 1) {}
  TruncatedSeries(std::size_t order, const ExactRational& constant) : c_(order + 1) { c_[0] = constant; }

  std::size_t order() const { return c_.size() - 1; }
  const ExactRational& operator[](std::size_t k) const { return c_.at(k); }
  ExactRational& operator[](std::size_t k) { return c_.at(k); }

  /// exp(scale * t).
  static TruncatedSeries exp(std::size_t order, const ExactRational& scale = 1) {
    TruncatedSeries s(order);
    ExactRational term = 1;
    for (std::size_t k = 0; k <= order; ++k) {
      s.c_[k] = term;
      term *= scale / static_cast<unsigned long>(k + 1);
    }
    return s;
  }

  /// sinh(scale * t), odd powers only.
  static TruncatedSeries sinh(std::size_t order, const ExactRational& scale = 1) {
    TruncatedSeries s(order);
    ExactRational term = scale;  // scale^k / k!
    for (std::size_t k = 1; k <= order; ++k) {
      if (k % 2 == 1) s.c_[k] = term;
      term *= scale / static_cast<unsigned long>(k + 1);
    }
    return s;
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  TruncatedSeries& operator*=(const ExactRational& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a, const TruncatedSeries& b) { return a += b; }
  friend TruncatedSeries operator-(TruncatedSeries a, const TruncatedSeries& b) { return a -= b; }
  friend TruncatedSeries operator*(TruncatedSeries a, const ExactRational& s) { return a *= s; }
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    a.check(b);
    TruncatedSeries out(a.order());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t k = 0; i + k < a.c_.size(); ++k) out.c_[i + k] += a.c_[i] * b.c_[k];
    }
    return out;
  }

  TruncatedSeries pow(unsigned long e) const {
    TruncatedSeries result(order(), 1);
    TruncatedSeries base = *this;
    while (e > 0) {
      if (e & 1) result = result * base;
      base = base * base;
      e >>= 1;
    }
    return result;
  }

  /// Multiplicative inverse; needs a nonzero constant term.
  TruncatedSeries inverse() const {
    if (c_[0] == 0) throw std::domain_error("series has no inverse");
    TruncatedSeries r(order());
    r.c_[0] = 1 / c_[0];
    for (std::size_t k = 1; k < c_.size(); ++k) {
      ExactRational acc = 0;
      for (std::size_t i = 1; i <= k; ++i) acc += c_[i] * r.c_[k - i];
      r.c_[k] = -acc / c_[0];
    }
    return r;
  }

 private:
  void check(const TruncatedSeries& o) const {
    if (o.c_.size() != c_.size()) throw std::invalid_argument("series orders differ");
  }
  std::vector<ExactRational> c_;
};

/// Which exponential generating function identity to check.
enum class EgfIdentity {
  chebyshev_column,  // sum_n C(n,j) t^(2n)/(2n)! = 2^(2j)/(2j)! sinh^(2j)(t/2)
  l_family,          // sum_n L_n(s) t^(2n)/(2n)! = 1/(1 - 4s sinh^2(t/2))
  q_family,          // sum_n Q_n(s) t^n/n!       = 1/(1 - s(e^t - 1))
};

inline EgfIdentity parse_egf_identity(std::string_view s) {
  if (s == "3.7" || s == "chebyshev_column") return EgfIdentity::chebyshev_column;
  if (s == "3.8" || s == "l_family") return EgfIdentity::l_family;
  if (s == "3.12" || s == "q_family") return EgfIdentity::q_family;
  throw std::invalid_argument("unknown generating function identity: " + std::string(s));
}

/// Closed-form side, expanded through t^order.
inline TruncatedSeries egf_closed_form(EgfIdentity which, std::size_t order, const ExactRational& param) {
  switch (which) {
    case EgfIdentity::chebyshev_column: {
      if (param < 0 || !is_integral(param)) throw std::invalid_argument("column index must be a non-negative integer");
      const unsigned long j = param.get_num().get_ui();
      const ExactRational scale = make_rational(ipow(2, 2 * j), factorial(2 * j));
      return TruncatedSeries::sinh(order, ExactRational(1, 2)).pow(2 * j) * scale;
    }
    case EgfIdentity::l_family: {
      const auto sh = TruncatedSeries::sinh(order, ExactRational(1, 2));
      TruncatedSeries denom(order, 1);
      denom -= (sh * sh) * (4 * param);
      return denom.inverse();
    }
    case EgfIdentity::q_family: {
      auto em1 = TruncatedSeries::exp(order);
      em1[0] -= 1;
      TruncatedSeries denom(order, 1);
      denom -= em1 * param;
      return denom.inverse();
    }
  }
  throw std::logic_error("unreachable");
}

/// Coefficient side, from the triangles and generating polynomials.
inline TruncatedSeries egf_coefficient_side(EgfIdentity which, std::size_t order, const ExactRational& param) {
  TruncatedSeries s(order);
  switch (which) {
    case EgfIdentity::chebyshev_column: {
      const long j = param.get_num().get_si();
      const auto t = build_triangle(Kind::chebyshev, 1, order / 2);
      for (std::size_t n = 0; 2 * n <= order; ++n) s[2 * n] = t.at(n, j) / ExactRational(factorial(2 * n));
      break;
    }
    case EgfIdentity::l_family:
      for (std::size_t n = 0; 2 * n <= order; ++n)
        s[2 * n] = eval_exact(l_poly(n), param) / ExactRational(factorial(2 * n));
      break;
    case EgfIdentity::q_family:
      for (std::size_t n = 0; n <= order; ++n) s[n] = eval_exact(q_poly(n), param) / ExactRational(factorial(n));
      break;
  }
  return s;
}

/// True when both sides agree in every coefficient t^0..t^order.
inline bool verify_egf(EgfIdentity which, std::size_t order, const ExactRational& param) {
  if (order < 1) throw std::invalid_argument("order must be at least 1");
  const auto lhs = egf_coefficient_side(which, order, param);
  const auto rhs = egf_closed_form(which, order, param);
  for (std::size_t k = 0; k <= order; ++k)
    if (lhs[k] != rhs[k]) return false;
  return true;
}

}  // namespace stirling

#endif  // STIRLING_SERIES_HPP

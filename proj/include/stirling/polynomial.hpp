#ifndef STIRLING_POLYNOMIAL_HPP
#define STIRLING_POLYNOMIAL_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "stirling/exact.hpp"
#include "stirling/exact_numbers.hpp"

namespace stirling {

/// Dense polynomial over the rationals; coeffs()[k] multiplies s^k. Trailing zeros
/// are trimmed, so the zero polynomial has no coefficients.
class ExactPoly {
 public:
  ExactPoly() = default;
  explicit ExactPoly(std::vector<ExactRational> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit ExactPoly(const std::vector<ExactInteger>& coeffs) {
    c_.reserve(coeffs.size());
    for (const auto& z : coeffs) c_.emplace_back(z);
    trim();
  }

  static ExactPoly monomial(const ExactRational& c, std::size_t k) {
    std::vector<ExactRational> v(k + 1);
    v[k] = c;
    return ExactPoly(std::move(v));
  }

  const std::vector<ExactRational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  ExactRational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : ExactRational(0); }
  const ExactRational& leading() const { return c_.back(); }

  ExactPoly& operator+=(const ExactPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
  }
  ExactPoly& operator-=(const ExactPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
  }
  ExactPoly& operator*=(const ExactRational& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
  }

  friend ExactPoly operator+(ExactPoly a, const ExactPoly& b) { return a += b; }
  friend ExactPoly operator-(ExactPoly a, const ExactPoly& b) { return a -= b; }
  friend ExactPoly operator*(ExactPoly a, const ExactRational& s) { return a *= s; }
  friend ExactPoly operator*(const ExactPoly& a, const ExactPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<ExactRational> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t k = 0; k < b.c_.size(); ++k) out[i + k] += a.c_[i] * b.c_[k];
    return ExactPoly(std::move(out));
  }
  friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }
  std::vector<ExactRational> c_;
};

/// Exact Horner evaluation.
inline ExactRational eval_exact(const ExactPoly& p, const ExactRational& z) {
  ExactRational acc = 0;
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

/// k-th derivative.
inline ExactPoly derivative(const ExactPoly& p, unsigned k = 1) {
  std::vector<ExactRational> c = p.coeffs();
  for (unsigned step = 0; step < k && !c.empty(); ++step) {
    for (std::size_t i = 1; i < c.size(); ++i) c[i - 1] = c[i] * static_cast<unsigned long>(i);
    c.pop_back();
  }
  return ExactPoly(std::move(c));
}

/// Q_n(s) = sum_j j! S(n,j) s^j.
inline ExactPoly q_poly(unsigned long n) { return ExactPoly(modified_row(Kind::stirling, n)); }

/// L_n(s) = sum_j (2j)! C(n,j) s^j with C the chebyshev-stirling numbers.
inline ExactPoly l_poly(unsigned long n) { return ExactPoly(modified_row(Kind::chebyshev, n)); }

/// Euler-Frobenius numerator P_n of sum_v v^n z^v = P_n(z) / (1-z)^(n+1), built by
/// the differential recurrence P_n = z(1-z) P_{n-1}' + n z P_{n-1} from P_0 = 1.
inline ExactPoly euler_frobenius(unsigned long n) {
  std::vector<ExactInteger> p{1};
  for (unsigned long m = 1; m <= n; ++m) {
    // p has degree m-1. Coefficient k of the result:
    //   k p_k (from z p') - (k-1) p_{k-1} (from -z^2 p') + m p_{k-1} (from m z p).
    std::vector<ExactInteger> next(m + 1);
    for (unsigned long k = 0; k <= m; ++k) {
      ExactInteger v = 0;
      if (k < p.size()) v += ExactInteger(k) * p[k];
      if (k >= 1 && k - 1 < p.size()) v += ExactInteger(m - (k - 1)) * p[k - 1];
      next[k] = std::move(v);
    }
    p = std::move(next);
  }
  return ExactPoly(p);
}

/// Independent route: P_n(z) = sum_j j! S(n,j) z^j (1-z)^(n-j).
inline ExactPoly euler_frobenius_worpitzky(unsigned long n) {
  const auto weights = modified_row(Kind::stirling, n);
  std::vector<ExactInteger> out(n + 1);
  for (unsigned long j = 0; j <= n; ++j) {
    if (weights[j] == 0) continue;
    // z^j (1-z)^(n-j) = sum_i C(n-j,i) (-1)^i z^(j+i)
    for (unsigned long i = 0; i <= n - j; ++i) {
      ExactInteger t = weights[j] * binomial(n - j, i);
      if (i % 2 == 0) out[j + i] += t;
      else out[j + i] -= t;
    }
  }
  return ExactPoly(out);
}

// ---------------------------------------------------------------------------
// Sturm root counting

/// Distinct real roots of a polynomial in the half-open interval (lower, upper].
/// An absent lower endpoint means -infinity.
struct RootCertificate {
  std::string polynomial_id;
  std::optional<ExactRational> lower;
  ExactRational upper;
  long count = 0;
  bool simple = false;
  /// Set when lower was a root and got moved down by kSturmShift.
  bool lower_shifted = false;
};

inline const ExactRational kSturmShift{1, 1000};

namespace detail {

using IntPoly = std::vector<ExactInteger>;

inline void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

/// Scales a rational polynomial by a positive constant to a primitive integer one.
inline IntPoly primitive_integer(const std::vector<ExactRational>& c) {
  ExactInteger den = 1;
  for (const auto& q : c) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  IntPoly out;
  out.reserve(c.size());
  ExactInteger content = 0;
  for (const auto& q : c) {
    ExactInteger v = q.get_num() * (den / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  if (content > 1)
    for (auto& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  trim(out);
  return out;
}

inline void make_primitive(IntPoly& p) {
  ExactInteger content = 0;
  for (const auto& v : p) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  if (content > 1)
    for (auto& v : p) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
}

/// Remainder of |lc(g)|^(deg f - deg g + 1) * f by g. The multiplier is positive,
/// so the sign pattern of a Sturm chain is preserved.
inline IntPoly positive_pseudo_remainder(IntPoly f, const IntPoly& g) {
  const std::size_t dg = g.size() - 1;
  const ExactInteger lc = g.back();
  const ExactInteger abs_lc = lc < 0 ? ExactInteger(-lc) : lc;
  const bool lc_negative = lc < 0;
  while (!f.empty() && f.size() - 1 >= dg) {
    const std::size_t shift = f.size() - 1 - dg;
    const ExactInteger lf = f.back();
    for (auto& v : f) v *= abs_lc;
    // f*|lc| - (sign(lc) lf) x^shift g has a zero leading coefficient.
    for (std::size_t i = 0; i <= dg; ++i) {
      if (lc_negative) f[i + shift] += lf * g[i];
      else f[i + shift] -= lf * g[i];
    }
    f.pop_back();
    trim(f);
  }
  return f;
}

inline IntPoly int_derivative(const IntPoly& p) {
  IntPoly d;
  for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
  trim(d);
  return d;
}

/// Sign of p(a/b) for b > 0, evaluated as the sign of b^deg * p(a/b).
inline int sign_at(const IntPoly& p, const ExactRational& x) {
  if (p.empty()) return 0;
  const ExactInteger& a = x.get_num();
  const ExactInteger& b = x.get_den();
  ExactInteger acc = p.back();
  ExactInteger bpow = 1;
  for (std::size_t i = p.size() - 1; i-- > 0;) {
    bpow *= b;
    acc = acc * a + p[i] * bpow;
  }
  return sgn(acc);
}

/// Sign as x -> -infinity.
inline int sign_at_minus_infinity(const IntPoly& p) {
  if (p.empty()) return 0;
  const int s = sgn(p.back());
  return (p.size() - 1) % 2 == 0 ? s : -s;
}

inline std::vector<IntPoly> sturm_chain(const IntPoly& p) {
  std::vector<IntPoly> chain{p};
  IntPoly d = int_derivative(p);
  if (d.empty()) return chain;
  make_primitive(d);
  chain.push_back(std::move(d));
  while (chain.back().size() > 1) {
    IntPoly r = positive_pseudo_remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& v : r) v = -v;
    make_primitive(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

template <class SignFn>
long sign_changes(const std::vector<IntPoly>& chain, SignFn sign_of) {
  long changes = 0;
  int last = 0;
  for (const auto& q : chain) {
    const int s = sign_of(q);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace detail

/// Counts distinct real roots of p in (lower, upper] with a Sturm chain over the
/// integers. If p(lower) = 0 the lower endpoint is moved to lower - 1/1000 once
/// (recorded in the certificate); a second hit is reported as an error.
inline RootCertificate sturm_count(const ExactPoly& p, std::optional<ExactRational> lower,
                                   const ExactRational& upper, std::string id = {}) {
  if (p.is_zero()) throw std::invalid_argument("sturm_count of the zero polynomial");
  if (lower && !(*lower < upper)) throw std::invalid_argument("sturm_count needs lower < upper");
  const auto ip = detail::primitive_integer(p.coeffs());

  RootCertificate cert;
  cert.polynomial_id = std::move(id);
  cert.upper = upper;
  if (lower && detail::sign_at(ip, *lower) == 0) {
    *lower -= kSturmShift;
    cert.lower_shifted = true;
    if (detail::sign_at(ip, *lower) == 0) throw std::runtime_error("sturm_count: lower endpoint is a root after shift");
  }
  cert.lower = lower;

  const auto chain = detail::sturm_chain(ip);
  // The last chain element is gcd(p, p') up to a constant.
  cert.simple = chain.back().size() == 1;
  const long at_upper = detail::sign_changes(chain, [&](const detail::IntPoly& q) { return detail::sign_at(q, upper); });
  const long at_lower =
      lower ? detail::sign_changes(chain, [&](const detail::IntPoly& q) { return detail::sign_at(q, *lower); })
            : detail::sign_changes(chain, [](const detail::IntPoly& q) { return detail::sign_at_minus_infinity(q); });
  cert.count = at_lower - at_upper;
  return cert;
}

inline RootCertificate sturm_count(const ExactPoly& p, const ExactRational& lower, const ExactRational& upper,
                                   std::string id = {}) {
  return sturm_count(p, std::optional<ExactRational>(lower), upper, std::move(id));
}

// ---------------------------------------------------------------------------
// Connection identities with the Euler-Frobenius polynomials

/// Q_n(z/(1-z)) == P_n(z) / (1-z)^n, exactly.
inline bool check_identity_314(unsigned long n, const ExactRational& z) {
  if (z == 1) throw std::invalid_argument("z = 1 is excluded");
  const ExactRational one_minus = 1 - z;
  const ExactRational lhs = eval_exact(q_poly(n), z / one_minus);
  const ExactRational rhs = eval_exact(euler_frobenius(n), z) / rpow(one_minus, n);
  return lhs == rhs;
}

/// L_n(z/(1-z)^2) == (2/(1+z)) P_{2n}(z) / (1-z)^(2n), exactly.
/// The identity is a statement about n >= 1 (at n = 0 the right side is 2/(1+z));
/// n = 0 is reported as holding vacuously.
inline bool check_identity_310(unsigned long n, const ExactRational& z) {
  if (z == 1 || z == -1) throw std::invalid_argument("z = 1 and z = -1 are excluded");
  if (n == 0) return true;
  const ExactRational one_minus = 1 - z;
  const ExactRational lhs = eval_exact(l_poly(n), z / (one_minus * one_minus));
  const ExactRational rhs =
      ExactRational(2) / (1 + z) * eval_exact(euler_frobenius(2 * n), z) / rpow(one_minus, 2 * n);
  return lhs == rhs;
}

}  // namespace stirling

#endif  // STIRLING_POLYNOMIAL_HPP

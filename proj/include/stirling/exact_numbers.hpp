#ifndef STIRLING_EXACT_NUMBERS_HPP
#define STIRLING_EXACT_NUMBERS_HPP

#include <cassert>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stirling/big_real.hpp"
#include "stirling/exact.hpp"

namespace stirling {

/// Which triangular recurrence a table follows.
///   stirling:  S(n,j) = S(n-1,j-1) + j S(n-1,j)
///   jacobi:    S(n,j) = S(n-1,j-1) + j(j + 2g - 1) S(n-1,j)
///   chebyshev: jacobi with 2g = 1, i.e. multiplier j^2
enum class Kind { stirling, chebyshev, jacobi };

inline std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::stirling: return "stirling";
    case Kind::chebyshev: return "chebyshev";
    case Kind::jacobi: return "jacobi";
  }
  return "?";
}

inline Kind parse_kind(std::string_view s) {
  if (s == "stirling") return Kind::stirling;
  if (s == "chebyshev") return Kind::chebyshev;
  if (s == "jacobi") return Kind::jacobi;
  throw std::invalid_argument("unknown kind: " + std::string(s));
}

namespace detail {

inline ExactRational recurrence_multiplier(Kind kind, const ExactRational& two_gamma, unsigned long j) {
  switch (kind) {
    case Kind::stirling: return ExactRational(j);
    case Kind::chebyshev: return ExactRational(ExactInteger(j) * j);
    case Kind::jacobi: return ExactRational(j) * (ExactRational(j) + two_gamma - 1);
  }
  return 0;
}

inline void require_integer_kind(Kind kind) {
  if (kind == Kind::jacobi) throw std::invalid_argument("integer rows exist only for stirling and chebyshev");
}

}  // namespace detail

/// Lower-triangular table of one family, rows 0..n_max. Immutable once built.
class Triangle {
 public:
  Kind kind() const { return kind_; }
  const ExactRational& two_gamma() const { return two_gamma_; }
  unsigned long n_max() const { return rows_.size() - 1; }

  std::span<const ExactRational> row(unsigned long n) const { return rows_.at(n); }

  /// Entry (n, j); zero whenever j lies outside [0, n].
  const ExactRational& at(unsigned long n, long j) const {
    const auto& r = rows_.at(n);
    if (j < 0 || static_cast<unsigned long>(j) >= r.size()) return zero_;
    return r[static_cast<std::size_t>(j)];
  }

  /// Entry (n, j) as an integer; throws if it is not one.
  ExactInteger integer_at(unsigned long n, long j) const {
    const auto& q = at(n, j);
    if (!is_integral(q)) throw std::domain_error("triangle entry is not an integer");
    return q.get_num();
  }

 private:
  friend Triangle build_triangle(Kind, const ExactRational&, unsigned long);
  Triangle(Kind kind, ExactRational two_gamma) : kind_(kind), two_gamma_(std::move(two_gamma)) {}

  Kind kind_;
  ExactRational two_gamma_;
  std::vector<std::vector<ExactRational>> rows_;
  ExactRational zero_{0};
};

/// Builds rows 0..n_max of the triangular recurrence with boundary values
/// S(n,0) = [n == 0], S(0,j) = [j == 0]. `two_gamma` is used only for jacobi
/// (chebyshev fixes it to 1, stirling ignores it).
inline Triangle build_triangle(Kind kind, const ExactRational& two_gamma, unsigned long n_max) {
  if (kind == Kind::jacobi && two_gamma <= 0) throw std::invalid_argument("two_gamma must be positive");
  Triangle t(kind, kind == Kind::jacobi ? two_gamma : ExactRational(1));
  t.rows_.reserve(n_max + 1);
  t.rows_.push_back({ExactRational(1)});

  if (kind == Kind::jacobi) {
    std::vector<ExactRational> mult(n_max + 1);
    for (unsigned long j = 0; j <= n_max; ++j) mult[j] = detail::recurrence_multiplier(kind, t.two_gamma_, j);
    for (unsigned long n = 1; n <= n_max; ++n) {
      const auto& prev = t.rows_.back();
      std::vector<ExactRational> cur(n + 1);
      for (unsigned long j = 1; j <= n; ++j) {
        cur[j] = prev[j - 1];
        if (j < n) cur[j] += mult[j] * prev[j];
      }
      t.rows_.push_back(std::move(cur));
    }
    return t;
  }

  // Integer families: run the recurrence in mpz and wrap afterwards.
  std::vector<ExactInteger> prev{1};
  for (unsigned long n = 1; n <= n_max; ++n) {
    std::vector<ExactInteger> cur(n + 1);
    for (unsigned long j = 1; j <= n; ++j) {
      cur[j] = prev[j - 1];
      if (j < n) {
        const unsigned long m = kind == Kind::stirling ? j : j * j;
        mpz_addmul_ui(cur[j].get_mpz_t(), prev[j].get_mpz_t(), m);
      }
    }
    std::vector<ExactRational> wrapped(n + 1);
    for (unsigned long j = 0; j <= n; ++j) wrapped[j] = ExactRational(cur[j]);
    t.rows_.push_back(std::move(wrapped));
    prev = std::move(cur);
  }
  return t;
}

/// Row n of the stirling or chebyshev triangle, computed with O(n) memory.
inline std::vector<ExactInteger> integer_row(Kind kind, unsigned long n) {
  detail::require_integer_kind(kind);
  std::vector<ExactInteger> row{1};
  row.reserve(n + 1);
  for (unsigned long m = 1; m <= n; ++m) {
    row.emplace_back(0);
    // In place, right to left: row[j] <- row[j-1] + mult(j) * row[j].
    for (unsigned long j = m; j >= 1; --j) {
      const unsigned long mult = kind == Kind::stirling ? j : j * j;
      row[j] *= mult;
      row[j] += row[j - 1];
    }
    row[0] = 0;
  }
  return row;
}

namespace detail {

inline ExactInteger exact_quotient(const ExactInteger& num, const ExactInteger& den) {
  if (!mpz_divisible_p(num.get_mpz_t(), den.get_mpz_t()))
    throw std::logic_error("alternating sum not divisible by its factorial weight");
  ExactInteger q;
  mpz_divexact(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return q;
}

}  // namespace detail

/// (1/j!) sum_{r=0}^{j} C(j,r) (-1)^r (j-r)^n, divided once at the end.
inline ExactInteger stirling_explicit(unsigned long n, unsigned long j) {
  ExactInteger sum = 0;
  for (unsigned long r = 0; r <= j; ++r) {
    ExactInteger term = binomial(j, r) * ipow(static_cast<long>(j - r), n);
    if (r % 2 == 0) sum += term;
    else sum -= term;
  }
  return detail::exact_quotient(sum, factorial(j));
}

/// (1/(2j)!) sum_{r=0}^{2j} C(2j,r) (-1)^r (j-r)^(2n).
inline ExactInteger chebyshev_explicit(unsigned long n, unsigned long j) {
  ExactInteger sum = 0;
  for (unsigned long r = 0; r <= 2 * j; ++r) {
    ExactInteger term = binomial(2 * j, r) * ipow(static_cast<long>(j) - static_cast<long>(r), 2 * n);
    if (r % 2 == 0) sum += term;
    else sum -= term;
  }
  return detail::exact_quotient(sum, factorial(2 * j));
}

/// Alternating Gamma-ratio sum for integer 2g = two_gamma:
///   sum_r (-1)^(r+j) (2r+2g-1) G(r+2g-1) (r(r+2g-1))^n / (r! (j-r)! G(j+r+2g)).
/// The r = 0 weight (2g-1) G(2g-1) is taken as its limit G(2g) = (2g-1)!, which
/// matters for 2g = 1. With 0^0 = 1 the n = 0 row reproduces [j == 0].
inline ExactRational jacobi_explicit(unsigned long n, unsigned long j, long two_gamma) {
  if (two_gamma < 1) throw std::invalid_argument("jacobi_explicit needs a positive integer two_gamma");
  const unsigned long g = static_cast<unsigned long>(two_gamma);
  ExactRational sum = 0;
  for (unsigned long r = 0; r <= j; ++r) {
    const ExactInteger weight = r == 0 ? factorial(g - 1) : ExactInteger(2 * r + g - 1) * factorial(r + g - 2);
    const ExactInteger power = ipow(ExactInteger(r) * (r + g - 1), n);
    const ExactInteger den = factorial(r) * factorial(j - r) * factorial(j + r + g - 1);
    ExactRational term = make_rational(weight * power, den);
    if ((r + j) % 2 == 0) sum += term;
    else sum -= term;
  }
  return sum;
}

/// Rational-gamma variant for callers holding 2g as an ExactRational.
inline ExactRational jacobi_explicit(unsigned long n, unsigned long j, const ExactRational& two_gamma) {
  if (!is_integral(two_gamma) || two_gamma <= 0)
    throw std::invalid_argument("jacobi_explicit is defined here only for positive integer two_gamma");
  return jacobi_explicit(n, j, two_gamma.get_num().get_si());
}

/// sum_{v=0}^{2n} C(2n,v) (-j)^(2n-v) S(v, 2j), reading S from a stirling triangle
/// with n_max >= 2n.
inline ExactInteger chebyshev_from_stirling(unsigned long n, unsigned long j, const Triangle& stirling) {
  if (stirling.kind() != Kind::stirling) throw std::invalid_argument("expected a stirling triangle");
  if (stirling.n_max() < 2 * n) throw std::out_of_range("stirling triangle too small");
  if (j == 0) return n == 0 ? 1 : 0;
  ExactInteger sum = 0;
  const long neg_j = -static_cast<long>(j);
  for (unsigned long v = 0; v <= 2 * n; ++v) {
    const ExactInteger s = stirling.integer_at(v, static_cast<long>(2 * j));
    if (s == 0) continue;
    sum += binomial(2 * n, v) * ipow(neg_j, 2 * n - v) * s;
  }
  return sum;
}

inline ExactInteger chebyshev_from_stirling(unsigned long n, unsigned long j) {
  return chebyshev_from_stirling(n, j, build_triangle(Kind::stirling, 1, 2 * n));
}

/// j! S(n,j) for stirling, (2j)! S(n,j) for chebyshev; entries j = 0..n.
inline std::vector<ExactInteger> modified_row(Kind kind, unsigned long n) {
  auto row = integer_row(kind, n);
  ExactInteger weight = 1;  // j! or (2j)!
  for (unsigned long j = 0; j <= n; ++j) {
    if (j > 0) weight *= kind == Kind::stirling ? ExactInteger(j) : ExactInteger(2 * j - 1) * (2 * j);
    row[j] *= weight;
  }
  return row;
}

enum class RowSumKind { stirling_modified, chebyshev_modified, bell };

/// Fubini number Q_n(1), its chebyshev analogue L_n(1), or the Bell number B_n.
inline ExactInteger row_sum(RowSumKind kind, unsigned long n) {
  std::vector<ExactInteger> row;
  switch (kind) {
    case RowSumKind::stirling_modified: row = modified_row(Kind::stirling, n); break;
    case RowSumKind::chebyshev_modified: row = modified_row(Kind::chebyshev, n); break;
    case RowSumKind::bell: row = integer_row(Kind::stirling, n); break;
  }
  ExactInteger s = 0;
  for (const auto& v : row) s += v;
  return s;
}

/// Fixed-j leading term as n grows:
///   stirling: j^n / j!
///   jacobi (integer 2g): G(j+2g-1) / (j! G(2j+2g-1)) * (j(j+2g-1))^n
///   chebyshev: the jacobi case 2g = 1.
inline BigReal fixed_j_leading_term(Kind kind, unsigned long n, unsigned long j, Precision prec,
                                    long two_gamma = 1) {
  if (j == 0) throw std::invalid_argument("fixed_j_leading_term needs j >= 1");
  if (kind == Kind::stirling) return BigReal(make_rational(ipow(static_cast<long>(j), n), factorial(j)), prec);
  const long g = kind == Kind::chebyshev ? 1 : two_gamma;
  if (g < 1) throw std::invalid_argument("two_gamma must be a positive integer");
  const unsigned long ug = static_cast<unsigned long>(g);
  const ExactInteger base = ExactInteger(j) * (j + ug - 1);
  const ExactRational coeff = make_rational(factorial(j + ug - 2), factorial(j) * factorial(2 * j + ug - 2));
  return BigReal(coeff * ExactRational(ipow(base, n)), prec);
}

}  // namespace stirling

#endif  // STIRLING_EXACT_NUMBERS_HPP

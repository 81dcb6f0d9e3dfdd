#ifndef STIRLING_ASYMPTOTICS_HPP
#define STIRLING_ASYMPTOTICS_HPP

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "stirling/analytic.hpp"
#include "stirling/big_real.hpp"
#include "stirling/exact.hpp"
#include "stirling/exact_numbers.hpp"
#include "stirling/polynomial.hpp"

namespace stirling {

namespace detail {

inline void require_family(Kind kind) {
  if (kind == Kind::jacobi) throw std::invalid_argument("asymptotics cover the stirling and chebyshev families");
}

/// Generating polynomial of the modified row: Q_n or L_n.
inline ExactPoly generating_poly(Kind kind, unsigned long n) { return kind == Kind::stirling ? q_poly(n) : l_poly(n); }

inline BigReal log_factorial(unsigned long n, Precision prec) { return log(BigReal(factorial(n), prec)); }

}  // namespace detail

// ---------------------------------------------------------------------------
// Moments of p(n,j) = w_j S(n,j) / A_n(1), A_n = Q_n or L_n

struct MomentSet {
  Kind kind = Kind::stirling;
  unsigned long n = 0;
  ExactRational mean;
  ExactRational variance;
  /// Third cumulant, exact: f3 + 3 f2 + f1 - 3 f2 f1 - 3 f1^2 + 2 f1^3 with f_k = A^(k)(1)/A(1).
  ExactRational third_cumulant;
  /// sqrt(n) * third_cumulant / variance^(3/2); NaN when degenerate.
  BigReal lambda3;
  /// variance == 0 (a one-point distribution).
  bool degenerate = false;
};

inline MomentSet moments_exact(Kind kind, unsigned long n, Precision prec = kDefaultPrecision) {
  detail::require_family(kind);
  if (n == 0) throw std::invalid_argument("moments_exact needs n >= 1");
  const ExactPoly a = detail::generating_poly(kind, n);
  const ExactRational one(1);
  const ExactRational total = eval_exact(a, one);
  const ExactRational f1 = eval_exact(derivative(a, 1), one) / total;
  const ExactRational f2 = eval_exact(derivative(a, 2), one) / total;
  const ExactRational f3 = eval_exact(derivative(a, 3), one) / total;

  MomentSet m;
  m.kind = kind;
  m.n = n;
  m.mean = f1;
  m.variance = f2 + f1 - f1 * f1;
  m.third_cumulant = f3 + 3 * f2 + f1 - 3 * f2 * f1 - 3 * f1 * f1 + 2 * f1 * f1 * f1;
  m.degenerate = m.variance == 0;
  if (m.degenerate) {
    m.lambda3 = BigReal::nan(prec);
  } else {
    const BigReal var(m.variance, prec);
    m.lambda3 = sqrt(BigReal(static_cast<long>(n), prec)) * BigReal(m.third_cumulant, prec) / (var * sqrt(var));
  }
  return m;
}

// ---------------------------------------------------------------------------
// Closed-form centring, scaling and skewness sequences

struct SeqParams {
  Kind kind = Kind::stirling;
  unsigned long n = 0;
  BigReal a;
  BigReal b;
  BigReal c;
};

/// stirling:
///   a = (n+1)/(2 log 2) - 1/2
///   b = (1 - log 2)/(2 log 2)^2 (n+1) - 1/4
///   c = sqrt(n) (2 - 3 log 2)(n+1) / (2 sqrt(b) log 2)^3
/// chebyshev (with omega = 2 log golden ratio):
///   a = (2n+1)/(sqrt5 omega) - 2/5
///   b = (1/(5 omega^2) - 2/(5 sqrt5 omega)) (2n+1) - 2/25
///   c = 2 sqrt(n)/(5 sqrt(b) omega)^3 {(2 sqrt5 omega^2 - 30 omega + 10 sqrt5) n
///                                      + 3 omega^3 + sqrt5 omega^2 - 15 omega + 5 sqrt5}
inline SeqParams abc(Kind kind, unsigned long n, Precision prec = kDefaultPrecision) {
  detail::require_family(kind);
  if (n == 0) throw std::invalid_argument("abc needs n >= 1");
  SeqParams p;
  p.kind = kind;
  p.n = n;
  const BigReal nn(static_cast<long>(n), prec);
  const BigReal root_n = sqrt(nn);
  if (kind == Kind::stirling) {
    const BigReal l2 = const_log2(prec);
    const BigReal n1 = nn + 1L;
    const BigReal two_l2 = l2 * 2L;
    p.a = n1 / two_l2 - BigReal(0.5, prec);
    p.b = (1L - l2) / (two_l2 * two_l2) * n1 - BigReal(0.25, prec);
    p.c = root_n * (2L - l2 * 3L) * n1 / pow(sqrt(p.b) * two_l2, 3);
  } else {
    const BigReal w = omega(prec);
    const BigReal s5 = sqrt(BigReal(5L, prec));
    const BigReal n21 = nn * 2L + 1L;
    p.a = n21 / (s5 * w) - BigReal(ExactRational(2, 5), prec);
    p.b = (1L / (w * w * 5L) - 2L / (s5 * w * 5L)) * n21 - BigReal(ExactRational(2, 25), prec);
    const BigReal w2 = w * w;
    const BigReal bracket =
        (s5 * w2 * 2L - w * 30L + s5 * 10L) * nn + w2 * w * 3L + s5 * w2 - w * 15L + s5 * 5L;
    p.c = root_n * 2L / pow(sqrt(p.b) * w * 5L, 3) * bracket;
  }
  return p;
}

// ---------------------------------------------------------------------------
// Approximants

struct Approximant {
  BigReal value;
  /// (j - a_n) / sqrt(b_n)
  BigReal x;
  /// c_n (x^3 - 3x) / (6 sqrt n)
  BigReal correction;
  /// False when 1 + correction <= 0; value is then NaN.
  bool valid = true;
};

/// stirling:  A(n,j)  = n! / (2 sqrt(2 pi b) j! (log 2)^(n+1)) e^(-x^2/2) (1 + corr)
/// chebyshev: A'(n,j) = 2 (2n)! / (sqrt(10 pi b') (2j)! omega^(2n+1)) e^(-x^2/2) (1 + corr)
/// Assembled as a sum of logarithms and exponentiated once.
inline Approximant approximant(Kind kind, unsigned long n, long j, Precision prec = kDefaultPrecision) {
  detail::require_family(kind);
  if (n < 1) throw std::invalid_argument("approximant needs n >= 1");
  if (j < 0) throw std::invalid_argument("approximant needs j >= 0");
  const SeqParams p = abc(kind, n, prec);
  const BigReal pi = const_pi(prec);
  const unsigned long uj = static_cast<unsigned long>(j);

  Approximant out;
  out.x = (BigReal(j, prec) - p.a) / sqrt(p.b);
  const BigReal& x = out.x;
  out.correction = p.c * (x * x * x - x * 3L) / (sqrt(BigReal(static_cast<long>(n), prec)) * 6L);
  const BigReal factor = out.correction + 1L;
  if (!(factor > 0L)) {
    out.valid = false;
    out.value = BigReal::nan(prec);
    return out;
  }

  BigReal log_value(prec);
  if (kind == Kind::stirling) {
    log_value = detail::log_factorial(n, prec) - log(BigReal(2L, prec)) - log(pi * p.b * 2L) / 2L -
                detail::log_factorial(uj, prec) - log(const_log2(prec)) * static_cast<long>(n + 1);
  } else {
    log_value = log(BigReal(2L, prec)) + detail::log_factorial(2 * n, prec) - log(pi * p.b * 10L) / 2L -
                detail::log_factorial(2 * uj, prec) - log(omega(prec)) * static_cast<long>(2 * n + 1);
  }
  log_value -= x * x / 2L;
  log_value += log(factor);
  out.value = exp(log_value);
  return out;
}

struct ApproxReport {
  Kind kind = Kind::stirling;
  unsigned long n = 0;
  long j = 0;
  ExactInteger exact;
  BigReal approx;
  BigReal ratio;
  BigReal x;
  BigReal correction_term;
  bool valid = true;
};

/// Exact S(n,j) (or C(n,j)) against the approximant, given the exact row n.
inline ApproxReport ratio_report(Kind kind, unsigned long n, long j, const std::vector<ExactInteger>& row,
                                 Precision prec = kDefaultPrecision) {
  if (row.size() != n + 1) throw std::invalid_argument("row length does not match n");
  const Approximant a = approximant(kind, n, j, prec);
  ApproxReport r;
  r.kind = kind;
  r.n = n;
  r.j = j;
  r.exact = j >= 0 && static_cast<unsigned long>(j) <= n ? row[static_cast<std::size_t>(j)] : ExactInteger(0);
  r.approx = a.value;
  r.x = a.x;
  r.correction_term = a.correction;
  r.valid = a.valid;
  r.ratio = a.valid ? BigReal(r.exact, prec) / a.value : BigReal::nan(prec);
  return r;
}

inline ApproxReport ratio_report(Kind kind, unsigned long n, long j, Precision prec = kDefaultPrecision) {
  detail::require_family(kind);
  return ratio_report(kind, n, j, integer_row(kind, n), prec);
}

// ---------------------------------------------------------------------------
// Convergence diagnostics

/// Log of the closed-form leading term of the row sum:
///   stirling:  Q_n(1) ~ n! / (2 (log 2)^(n+1))
///   chebyshev: L_n(1) ~ 2 (2n)! / (sqrt5 omega^(2n+1))
inline BigReal log_rowsum_leading(Kind kind, unsigned long n, Precision prec) {
  detail::require_family(kind);
  if (kind == Kind::stirling)
    return detail::log_factorial(n, prec) - log(BigReal(2L, prec)) -
           log(const_log2(prec)) * static_cast<long>(n + 1);
  return log(BigReal(2L, prec)) + detail::log_factorial(2 * n, prec) - log(sqrt(BigReal(5L, prec))) -
         log(omega(prec)) * static_cast<long>(2 * n + 1);
}

/// |exact row sum / closed-form leading term - 1|.
inline BigReal rowsum_gap(Kind kind, unsigned long n, Precision prec = kDefaultPrecision) {
  if (n < 1) throw std::invalid_argument("rowsum_gap needs n >= 1");
  const auto total = row_sum(kind == Kind::stirling ? RowSumKind::stirling_modified : RowSumKind::chebyshev_modified, n);
  return abs(exp(log(BigReal(total, prec)) - log_rowsum_leading(kind, n, prec)) - 1L);
}

struct MomentGap {
  BigReal mean;
  BigReal variance;
  BigReal lambda3;
};

/// |mu - a|, |sigma^2 - b|, |lambda3 - c|.
inline MomentGap moment_gap(Kind kind, unsigned long n, Precision prec = kDefaultPrecision) {
  if (n < 2) throw std::invalid_argument("moment_gap needs n >= 2");
  const MomentSet m = moments_exact(kind, n, prec);
  const SeqParams p = abc(kind, n, prec);
  return {abs(BigReal(m.mean, prec) - p.a), abs(BigReal(m.variance, prec) - p.b), abs(m.lambda3 - p.c)};
}

struct CltResidual {
  BigReal sup_residual;
  long argmax_j = 0;
  /// sup_residual * sqrt(n)
  BigReal scaled;
};

namespace detail {

/// Prefactor turning the modified weight w_j S(n,j) into the normalised left side
///   stirling:  2 sqrt(b) (log 2)^(n+1) / n!
///   chebyshev: sqrt(5 b') omega^(2n+1) / (2 (2n)!)
inline BigReal lattice_prefactor(Kind kind, unsigned long n, const SeqParams& p, Precision prec) {
  if (kind == Kind::stirling)
    return exp(log(sqrt(p.b) * 2L) + log(const_log2(prec)) * static_cast<long>(n + 1) - log_factorial(n, prec));
  return exp(log(sqrt(p.b * 5L) / 2L) + log(omega(prec)) * static_cast<long>(2 * n + 1) -
             log_factorial(2 * n, prec));
}

inline BigReal local_main_term(const BigReal& x, const SeqParams& p, Precision prec) {
  const BigReal root_n = sqrt(BigReal(static_cast<long>(p.n), prec));
  return gaussian_pdf(x) * (p.c * (x * x * x - x * 3L) / (root_n * 6L) + 1L);
}

}  // namespace detail

/// Supremum over j of |normalised lattice mass - phi(x)(1 + c(x^3 - 3x)/(6 sqrt n))|.
/// Scans 0 <= j <= n plus j = -1, n+1, n+10, where the left side is zero.
inline CltResidual clt_residual(Kind kind, unsigned long n, Precision prec = kDefaultPrecision) {
  detail::require_family(kind);
  if (n < 2) throw std::invalid_argument("clt_residual needs n >= 2");
  const SeqParams p = abc(kind, n, prec);
  const BigReal pref = detail::lattice_prefactor(kind, n, p, prec);
  const auto row = modified_row(kind, n);
  const BigReal root_b = sqrt(p.b);

  CltResidual out{BigReal(prec), 0, BigReal(prec)};
  auto consider = [&](long j, const BigReal& lhs) {
    const BigReal x = (BigReal(j, prec) - p.a) / root_b;
    const BigReal resid = abs(lhs - detail::local_main_term(x, p, prec));
    if (resid > out.sup_residual) {
      out.sup_residual = resid;
      out.argmax_j = j;
    }
  };
  for (unsigned long j = 0; j <= n; ++j) consider(static_cast<long>(j), pref * BigReal(row[j], prec));
  const BigReal zero(prec);
  for (long j : {-1L, static_cast<long>(n) + 1, static_cast<long>(n) + 10}) consider(j, zero);
  out.scaled = out.sup_residual * sqrt(BigReal(static_cast<long>(n), prec));
  return out;
}

/// The y grid {-4, -3.75, ..., 4} used by cdf_distance.
inline std::vector<BigReal> cdf_grid(Precision prec) {
  std::vector<BigReal> g;
  for (long k = -16; k <= 16; ++k) g.push_back(BigReal(k, prec) / 4L);
  return g;
}

/// sup over the y grid of |normalised partial sum over j <= a + y sqrt(b) - Phi(y)|.
/// stirling normalises by 1/Q_n(1); chebyshev by sqrt5 omega^(2n+1) / (2 (2n)!).
inline BigReal cdf_distance(Kind kind, unsigned long n, Precision prec = kDefaultPrecision) {
  detail::require_family(kind);
  if (n < 2) throw std::invalid_argument("cdf_distance needs n >= 2");
  const SeqParams p = abc(kind, n, prec);
  const auto row = modified_row(kind, n);
  BigReal norm(prec);
  if (kind == Kind::stirling) {
    ExactInteger total = 0;
    for (const auto& v : row) total += v;
    norm = 1L / BigReal(total, prec);
  } else {
    norm = exp(-log_rowsum_leading(kind, n, prec));
  }
  const BigReal root_b = sqrt(p.b);

  BigReal sup(prec);
  for (const BigReal& y : cdf_grid(prec)) {
    const BigReal limit = floor(p.a + y * root_b);
    ExactInteger partial = 0;
    for (unsigned long j = 0; j <= n && !(BigReal(static_cast<long>(j), prec) > limit); ++j) partial += row[j];
    const BigReal d = abs(BigReal(partial, prec) * norm - gaussian_cdf(y));
    if (d > sup) sup = d;
  }
  return sup;
}

}  // namespace stirling

#endif  // STIRLING_ASYMPTOTICS_HPP

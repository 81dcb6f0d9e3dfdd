#ifndef STIRLING_VERIFY_HPP
#define STIRLING_VERIFY_HPP

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stirling/analytic.hpp"
#include "stirling/asymptotics.hpp"
#include "stirling/exact_numbers.hpp"
#include "stirling/polynomial.hpp"
#include "stirling/series.hpp"
#include "stirling/unimodality.hpp"

namespace stirling {

struct SuiteFailure {
  std::string case_name;
  std::string expected;
  std::string got;
  std::string tolerance;
};

struct SuiteReport {
  std::string suite;
  long cases_run = 0;
  std::vector<SuiteFailure> failures;
  double wall_time_s = 0;
  unsigned precision_digits = 0;

  bool ok() const { return failures.empty(); }

  /// Counts a case; records a failure when `passed` is false.
  void check(bool passed, std::string case_name, std::string expected, std::string got, std::string tolerance = "exact") {
    ++cases_run;
    if (!passed) failures.push_back({std::move(case_name), std::move(expected), std::move(got), std::move(tolerance)});
  }
};

/// Knobs shared by the suites. Unset fields fall back to each suite's default range.
struct SuiteOptions {
  std::optional<unsigned long> n_max;
  std::optional<unsigned long> order;
  unsigned precision_digits = 100;
};

/// True when `value` printed in fixed notation (truncated) starts with `expected`,
/// e.g. "0.999376" against 0.9993761234 but not against 0.9993674.
inline bool matches_decimal_prefix(const BigReal& value, std::string_view expected) {
  const auto dot = expected.find('.');
  const int decimals = dot == std::string_view::npos ? 0 : static_cast<int>(expected.size() - dot - 1);
  return value.to_fixed(decimals + 4).starts_with(expected);
}

/// The two reported illustration ratios, n = 500.
struct PaperRatioCase {
  Kind kind;
  unsigned long n;
  long j;
  std::string_view expected;
};
inline constexpr PaperRatioCase kPaperRatioCases[] = {
    {Kind::stirling, 500, 360, "0.999376"},
    {Kind::chebyshev, 500, 461, "1.000891"},
};

namespace detail {

template <class Body>
SuiteReport run_suite(std::string name, const SuiteOptions& opt, Body body) {
  SuiteReport r;
  r.suite = std::move(name);
  r.precision_digits = opt.precision_digits;
  const auto t0 = std::chrono::steady_clock::now();
  body(r);
  r.wall_time_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

inline std::string str(long v) { return std::to_string(v); }

inline std::vector<ExactInteger> weighted(Kind kind, std::span<const ExactRational> row) {
  std::vector<ExactInteger> out(row.size());
  ExactInteger w = 1;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (j > 0) w *= kind == Kind::stirling ? ExactInteger(j) : ExactInteger(2 * j - 1) * (2 * j);
    out[j] = row[j].get_num() * w;
  }
  return out;
}

}  // namespace detail

inline SuiteReport verify_paper(const SuiteOptions& opt = {}) {
  return detail::run_suite("paper", opt, [&](SuiteReport& r) {
    const Precision prec = bits_for_digits(opt.precision_digits);
    for (const auto& c : kPaperRatioCases) {
      const auto rep = ratio_report(c.kind, c.n, c.j, prec);
      const std::string name = std::string(to_string(c.kind)) + " n=" + std::to_string(c.n) + " j=" + std::to_string(c.j);
      r.check(rep.valid && matches_decimal_prefix(rep.ratio, c.expected), name, std::string(c.expected),
              rep.valid ? rep.ratio.to_fixed(12) : "invalid", "first 6 decimal digits");
    }
  });
}

/// Recurrence against explicit sums for every 0 <= j <= n <= n_max (default 60).
inline SuiteReport verify_cross_routes(const SuiteOptions& opt = {}) {
  return detail::run_suite("cross", opt, [&](SuiteReport& r) {
    const unsigned long n_max = opt.n_max.value_or(60);
    const auto st = build_triangle(Kind::stirling, 1, 2 * n_max);
    const auto ch = build_triangle(Kind::chebyshev, 1, n_max);
    for (unsigned long n = 0; n <= n_max; ++n) {
      for (unsigned long j = 0; j <= n; ++j) {
        const long sj = static_cast<long>(j);
        const std::string at = "(" + std::to_string(n) + "," + std::to_string(j) + ")";
        const auto s_rec = st.integer_at(n, sj);
        const auto s_exp = stirling_explicit(n, j);
        r.check(s_rec == s_exp, "stirling recurrence vs explicit " + at, s_rec.get_str(), s_exp.get_str());
        const auto c_rec = ch.integer_at(n, sj);
        const auto c_exp = chebyshev_explicit(n, j);
        const auto c_dif = chebyshev_from_stirling(n, j, st);
        r.check(c_rec == c_exp, "chebyshev recurrence vs explicit " + at, c_rec.get_str(), c_exp.get_str());
        r.check(c_rec == c_dif, "chebyshev recurrence vs stirling difference " + at, c_rec.get_str(), c_dif.get_str());
      }
    }
    for (long g = 1; g <= 4; ++g) {
      const auto jt = build_triangle(Kind::jacobi, g, n_max);
      for (unsigned long n = 0; n <= n_max; ++n)
        for (unsigned long j = 0; j <= n; ++j) {
          const auto rec = jt.at(n, static_cast<long>(j));
          const auto expl = jacobi_explicit(n, j, g);
          r.check(rec == expl,
                  "jacobi 2g=" + std::to_string(g) + " (" + std::to_string(n) + "," + std::to_string(j) + ")",
                  rec.get_str(), expl.get_str());
        }
    }
  });
}

inline const std::vector<ExactRational>& identity_points() {
  static const std::vector<ExactRational> pts{ExactRational(1, 3), ExactRational(1, 2), ExactRational(-1, 2),
                                              ExactRational(-2), ExactRational(3)};
  return pts;
}

/// Connection identities for n <= n_max (default 25) at five rational points.
inline SuiteReport verify_identities(const SuiteOptions& opt = {}) {
  return detail::run_suite("identities", opt, [&](SuiteReport& r) {
    const unsigned long n_max = opt.n_max.value_or(25);
    for (unsigned long n = 0; n <= n_max; ++n)
      for (const auto& z : identity_points()) {
        const std::string at = "n=" + std::to_string(n) + " z=" + z.get_str();
        r.check(check_identity_314(n, z), "Q_n(z/(1-z)) = P_n(z)/(1-z)^n " + at, "equal", "differ");
        r.check(check_identity_310(n, z), "L_n(z/(1-z)^2) = 2/(1+z) P_2n(z)/(1-z)^2n " + at, "equal", "differ");
      }
  });
}

/// Generating-function coefficients through t^order (default 10).
inline SuiteReport verify_egf_suite(const SuiteOptions& opt = {}) {
  return detail::run_suite("egf", opt, [&](SuiteReport& r) {
    const std::size_t order = opt.order.value_or(10);
    for (unsigned long j = 0; j <= order / 2 + 1; ++j)
      r.check(verify_egf(EgfIdentity::chebyshev_column, order, ExactRational(j)),
              "chebyshev column j=" + std::to_string(j) + " order=" + std::to_string(order), "equal", "differ");
    const std::vector<ExactRational> params{ExactRational(0), ExactRational(1), ExactRational(1, 2),
                                            ExactRational(-1, 3), ExactRational(2)};
    for (const auto& s : params) {
      r.check(verify_egf(EgfIdentity::l_family, order, s), "L family s=" + s.get_str(), "equal", "differ");
      r.check(verify_egf(EgfIdentity::q_family, order, s), "Q family s=" + s.get_str(), "equal", "differ");
    }
  });
}

/// Root certificates. Default ranges: Q_n and P_n for n <= 40, L_n for n <= 30;
/// an explicit n_max applies to all three.
inline SuiteReport verify_zeros(const SuiteOptions& opt = {}) {
  return detail::run_suite("zeros", opt, [&](SuiteReport& r) {
    const unsigned long q_max = opt.n_max.value_or(40);
    const unsigned long l_max = opt.n_max.value_or(30);
    const unsigned long p_max = opt.n_max.value_or(40);
    const ExactRational zero(0);
    for (unsigned long n = 1; n <= q_max; ++n) {
      const auto c = sturm_count(q_poly(n), ExactRational(-1), zero, "Q_" + std::to_string(n));
      r.check(c.count == static_cast<long>(n) && c.simple, c.polynomial_id + " roots in (-1,0]",
              std::to_string(n) + " simple", std::to_string(c.count) + (c.simple ? " simple" : " repeated"));
    }
    for (unsigned long n = 1; n <= l_max; ++n) {
      const auto c = sturm_count(l_poly(n), ExactRational(-1, 4), zero, "L_" + std::to_string(n));
      r.check(c.count == static_cast<long>(n) && c.simple, c.polynomial_id + " roots in (-1/4,0]",
              std::to_string(n) + " simple", std::to_string(c.count) + (c.simple ? " simple" : " repeated"));
    }
    for (unsigned long n = 1; n <= p_max; ++n) {
      const auto p = euler_frobenius(n);
      const std::string id = "P_" + std::to_string(n);
      const auto all = sturm_count(p, std::nullopt, zero, id);
      r.check(p.degree() == static_cast<long>(n) && all.count == static_cast<long>(n) && all.simple,
              id + " has n simple roots in (-inf,0]", std::to_string(n), std::to_string(all.count));
      r.check(eval_exact(p, zero) == 0, id + "(0) = 0", "0", eval_exact(p, zero).get_str());
      const bool root_at_minus_one = eval_exact(p, ExactRational(-1)) == 0;
      r.check(root_at_minus_one == (n % 2 == 0), id + "(-1) = 0 iff n even", n % 2 == 0 ? "root" : "nonzero",
              root_at_minus_one ? "root" : "nonzero");
      // Split across (-inf,-1) and (-1,0): k-1 each for n = 2k, k each for n = 2k+1.
      const long below_or_at = sturm_count(p, std::nullopt, ExactRational(-1), id).count;
      const long left = below_or_at - (root_at_minus_one ? 1 : 0);
      const long middle = all.count - below_or_at - 1;  // excludes the root at 0
      const long expect = n % 2 == 0 ? static_cast<long>(n / 2) - 1 : static_cast<long>(n / 2);
      r.check(left == expect && middle == expect, id + " zero split", std::to_string(expect) + "/" + std::to_string(expect),
              std::to_string(left) + "/" + std::to_string(middle));
    }
  });
}

/// Peak-or-plateau shape of both modified rows for 3 <= n <= n_max (default 300).
inline SuiteReport verify_unimodality(const SuiteOptions& opt = {}) {
  return detail::run_suite("unimodality", opt, [&](SuiteReport& r) {
    const unsigned long n_max = opt.n_max.value_or(300);
    for (Kind kind : {Kind::stirling, Kind::chebyshev}) {
      const auto t = build_triangle(kind, 1, n_max);
      for (unsigned long n = 3; n <= n_max; ++n) {
        const auto row = detail::weighted(kind, t.row(n));
        const auto res = classify_unimodal(row);
        std::string got = res.shape == UnimodalShape::violation ? "violation" : "ok";
        if (res.counterexample) {
          const auto& c = *res.counterexample;
          got += " at j=" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," + std::to_string(c[2]);
        }
        r.check(res.shape != UnimodalShape::violation,
                std::string(to_string(kind)) + " modified row n=" + std::to_string(n), "peak or plateau", got);
      }
    }
  });
}

/// Eisenstein-series reconstruction of Q_n(1) at w = log 2 and of L_n(1) at
/// w = omega for n <= n_max (default 40), plus the remainder bound for
/// 2 <= n <= n_max at both points.
inline SuiteReport verify_eisenstein(const SuiteOptions& opt = {}) {
  return detail::run_suite("eisenstein", opt, [&](SuiteReport& r) {
    const unsigned long n_max = opt.n_max.value_or(40);
    const unsigned digits = opt.precision_digits;
    const Precision prec = bits_for_digits(digits);
    const BigReal tol = pow10_neg(static_cast<long>(digits) - 10, prec);
    const std::string tol_text = "relative 1e-" + std::to_string(digits - 10);
    const BigReal l2 = const_log2(prec);
    const BigReal w = omega(prec);
    const BigReal eps_scale = pow10_neg(static_cast<long>(digits) + 10, prec);
    auto series = [&](const BigReal& at, long k) { return eisenstein(at, k, pow(at, -k) * eps_scale).value; };

    for (unsigned long n = 2; n <= n_max; ++n) {
      // Q_n(1) = n! (1 - e^{-log 2}) sum = n!/2 sum
      const BigReal q = BigReal(factorial(n), prec) / 2L * series(l2, static_cast<long>(n + 1));
      const BigReal q_exact(row_sum(RowSumKind::stirling_modified, n), prec);
      const BigReal e = relative_error(q, q_exact);
      r.check(e < tol, "Q_" + std::to_string(n) + "(1) from series at log 2", q_exact.to_string(30), q.to_string(30), tol_text);
    }
    for (unsigned long n = 1; n <= n_max; ++n) {
      // L_n(1) = (2n)! (2(cosh w - 1)/sinh w) sum, with 2(cosh w - 1) = 1 at omega
      const BigReal l = BigReal(factorial(2 * n), prec) / sinh(w) * series(w, static_cast<long>(2 * n + 1));
      const BigReal l_exact(row_sum(RowSumKind::chebyshev_modified, n), prec);
      const BigReal e = relative_error(l, l_exact);
      r.check(e < tol, "L_" + std::to_string(n) + "(1) from series at omega", l_exact.to_string(30), l.to_string(30), tol_text);
    }
    for (const BigReal* at : {&l2, &w}) {
      const std::string where = at == &l2 ? "log 2" : "omega";
      for (unsigned long n = 2; n <= n_max; ++n) {
        const long k = static_cast<long>(n + 1);
        const BigReal rem = abs(eisenstein_remainder(k - 1, *at, series(*at, k)));
        const BigReal bound = lemma51_bound(k - 1, *at);
        r.check(rem <= bound, "remainder bound n=" + std::to_string(n) + " w=" + where, "<= " + bound.to_string(10),
                rem.to_string(10), "bound");
      }
    }
  });
}

/// Moment gaps against the closed-form sequences: strictly decreasing along
/// n = 10, 15, ..., 40 and below 1e-10 (stirling) / 1e-6 (chebyshev) at n = 20;
/// sigma^2/n > 0.05 for 10 <= n <= 400.
inline SuiteReport verify_moments(const SuiteOptions& opt = {}) {
  return detail::run_suite("moments", opt, [&](SuiteReport& r) {
    const Precision prec = bits_for_digits(opt.precision_digits);
    const unsigned long var_max = opt.n_max.value_or(400);
    for (Kind kind : {Kind::stirling, Kind::chebyshev}) {
      const std::string k(to_string(kind));
      std::optional<MomentGap> prev;
      unsigned long prev_n = 0;
      for (unsigned long n = 10; n <= 40; n += 5) {
        const auto g = moment_gap(kind, n, prec);
        if (prev) {
          const std::string at = k + " n=" + std::to_string(prev_n) + "->" + std::to_string(n);
          r.check(g.mean < prev->mean, "mean gap decreases " + at, "< " + prev->mean.to_string(6), g.mean.to_string(6), "strict");
          r.check(g.variance < prev->variance, "variance gap decreases " + at, "< " + prev->variance.to_string(6),
                  g.variance.to_string(6), "strict");
          r.check(g.lambda3 < prev->lambda3, "lambda3 gap decreases " + at, "< " + prev->lambda3.to_string(6),
                  g.lambda3.to_string(6), "strict");
        }
        if (n == 20) {
          const BigReal thr = pow10_neg(kind == Kind::stirling ? 10 : 6, prec);
          const std::string tt = kind == Kind::stirling ? "1e-10" : "1e-6";
          r.check(g.mean < thr && g.variance < thr && g.lambda3 < thr, k + " gaps at n=20", "< " + tt,
                  g.mean.to_string(4) + " " + g.variance.to_string(4) + " " + g.lambda3.to_string(4), tt);
        }
        prev = g;
        prev_n = n;
      }
      const auto t = build_triangle(kind, 1, var_max);
      for (unsigned long n = 10; n <= var_max; ++n) {
        const ExactPoly a(detail::weighted(kind, t.row(n)));
        const ExactRational one(1);
        const ExactRational total = eval_exact(a, one);
        const ExactRational f1 = eval_exact(derivative(a, 1), one) / total;
        const ExactRational f2 = eval_exact(derivative(a, 2), one) / total;
        const ExactRational ratio = (f2 + f1 - f1 * f1) / static_cast<unsigned long>(n);
        r.check(ratio > ExactRational(1, 20), k + " variance/n n=" + std::to_string(n), "> 0.05",
                std::to_string(ratio.get_d()));
      }
    }
  });
}

/// Local CLT residuals (sqrt(n)-scaled) decreasing over n = 100, 200, 400 and CDF
/// distances decreasing over n = 50, 200, 800, both families.
inline SuiteReport verify_clt(const SuiteOptions& opt = {}) {
  return detail::run_suite("clt", opt, [&](SuiteReport& r) {
    const Precision prec = bits_for_digits(opt.precision_digits);
    for (Kind kind : {Kind::stirling, Kind::chebyshev}) {
      const std::string k(to_string(kind));
      std::optional<BigReal> prev;
      for (unsigned long n : {100UL, 200UL, 400UL}) {
        const auto c = clt_residual(kind, n, prec);
        if (prev)
          r.check(c.scaled < *prev, k + " scaled CLT residual decreases to n=" + std::to_string(n), "< " + prev->to_string(6),
                  c.scaled.to_string(6), "strict");
        prev = c.scaled;
      }
      prev.reset();
      for (unsigned long n : {50UL, 200UL, 800UL}) {
        const auto d = cdf_distance(kind, n, prec);
        if (prev)
          r.check(d < *prev, k + " CDF distance decreases to n=" + std::to_string(n), "< " + prev->to_string(6),
                  d.to_string(6), "strict");
        prev = d;
      }
    }
  });
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"paper", "cross", "identities", "egf", "zeros",
                                              "unimodality", "eisenstein", "moments", "clt"};
  return names;
}

inline SuiteReport run_named_suite(std::string_view name, const SuiteOptions& opt) {
  if (name == "paper") return verify_paper(opt);
  if (name == "cross") return verify_cross_routes(opt);
  if (name == "identities") return verify_identities(opt);
  if (name == "egf") return verify_egf_suite(opt);
  if (name == "zeros") return verify_zeros(opt);
  if (name == "unimodality") return verify_unimodality(opt);
  if (name == "eisenstein") return verify_eisenstein(opt);
  if (name == "moments") return verify_moments(opt);
  if (name == "clt") return verify_clt(opt);
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

}  // namespace stirling

#endif  // STIRLING_VERIFY_HPP

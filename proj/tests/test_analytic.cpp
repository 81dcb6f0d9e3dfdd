#include <gtest/gtest.h>

#include <mpfr.h>

#include <vector>

#include "stirling/analytic.hpp"
#include "stirling/exact_numbers.hpp"
#include "stirling/polynomial.hpp"

using namespace stirling;

namespace {

const Precision kP = bits_for_digits(60);

BigReal tol(long digits) { return pow10_neg(digits, kP); }

// Romberg integration of f over [a, b] with `levels` halvings.
template <class F>
BigReal romberg(F f, const BigReal& a, const BigReal& b, int levels) {
  const Precision prec = a.precision();
  std::vector<std::vector<BigReal>> r(static_cast<std::size_t>(levels + 1));
  BigReal h = b - a;
  r[0].push_back((f(a) + f(b)) * h / 2L);
  for (int i = 1; i <= levels; ++i) {
    h /= 2L;
    BigReal mid(prec);
    const long count = 1L << (i - 1);
    for (long k = 1; k <= count; ++k) mid += f(a + h * (2 * k - 1));
    r[static_cast<std::size_t>(i)].push_back(r[static_cast<std::size_t>(i - 1)][0] / 2L + mid * h);
    BigReal four(1L, prec);
    for (int m = 1; m <= i; ++m) {
      four *= 4L;
      const auto& prev = r[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(m - 1)];
      const auto& cur = r[static_cast<std::size_t>(i)][static_cast<std::size_t>(m - 1)];
      r[static_cast<std::size_t>(i)].push_back(cur + (cur - prev) / (four - 1L));
    }
  }
  return r.back().back();
}

// Probabilists' Hermite polynomial from the derivative definition:
// (d/dx)^m e^{-x^2/2} = p_m(x) e^{-x^2/2} with p_{k+1} = p_k' - x p_k, He_m = (-1)^m p_m.
ExactPoly hermite_symbolic(unsigned m) {
  ExactPoly p(std::vector<ExactRational>{1});
  const ExactPoly x(std::vector<ExactRational>{0, 1});
  for (unsigned k = 0; k < m; ++k) p = derivative(p) - x * p;
  return m % 2 == 0 ? p : p * ExactRational(-1);
}

BigReal eval_poly(const ExactPoly& p, const BigReal& x) {
  BigReal acc(x.precision());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + BigReal(*it, x.precision());
  return acc;
}

}  // namespace

TEST(Bernoulli, KnownValues) {
  const auto b = bernoulli_numbers(12);
  EXPECT_EQ(b[0], 1);
  EXPECT_EQ(b[1], ExactRational(-1, 2));
  EXPECT_EQ(b[2], ExactRational(1, 6));
  EXPECT_EQ(b[3], 0);
  EXPECT_EQ(b[4], ExactRational(-1, 30));
  EXPECT_EQ(b[6], ExactRational(1, 42));
  EXPECT_EQ(b[10], ExactRational(5, 66));
  EXPECT_EQ(b[12], ExactRational(-691, 2730));
}

TEST(Eisenstein, SpecExamples) {
  const BigReal eps = tol(30);
  const auto at_log2 = eisenstein(const_log2(kP), 3, eps);
  EXPECT_LT(abs(at_log2.value - 3L), tol(30));
  const auto at_omega = eisenstein(omega(kP), 3, eps);
  EXPECT_LT(abs(at_omega.value - sqrt(BigReal(5L, kP)) / 2L), tol(30));
}

// sum_m (w + 2 pi i m)^-3 = cosh(w/2) / (8 sinh^3(w/2)), the second derivative of coth(w/2)/4.
TEST(Eisenstein, MatchesHyperbolicClosedForm) {
  for (const char* text : {"0.1", "0.5", "1.7", "3.0", "9.5"}) {
    const BigReal w(std::string(text), kP);
    const BigReal half = w / 2L;
    const BigReal expected = cosh(half) / (pow(sinh(half), 3) * 8L);
    EXPECT_LT(relative_error(eisenstein(w, 3, tol(70)).value, expected), tol(55)) << text;
  }
}

// n!/2 * sum_m (log 2 + 2 pi i m)^-(n+1) = Q_n(1).
TEST(Eisenstein, ReproducesFubiniNumbers) {
  const BigReal l2 = const_log2(kP);
  for (unsigned long n = 2; n <= 12; ++n) {
    const BigReal s = eisenstein(l2, static_cast<long>(n + 1), tol(70)).value;
    const BigReal q = BigReal(factorial(n), kP) / 2L * s;
    EXPECT_LT(relative_error(q, BigReal(row_sum(RowSumKind::stirling_modified, n), kP)), tol(55)) << n;
  }
}

TEST(Eisenstein, ReportsWork) {
  const auto r = eisenstein(BigReal(1L, kP), 5, tol(40));
  EXPECT_GE(r.terms_used, 64);
  EXPECT_GE(r.correction_terms, 1);
  EXPECT_LT(r.tail_bound, tol(40));
}

TEST(Eisenstein, LeadingTermDominates) {
  for (long k = 3; k <= 20; ++k) {
    const BigReal w = omega(kP);
    const BigReal rem = abs(eisenstein_remainder(k - 1, w, eisenstein(w, k, tol(70)).value));
    EXPECT_LE(rem, lemma51_bound(k - 1, w)) << k;
  }
}

TEST(Eisenstein, RejectsBadInput) {
  EXPECT_THROW(eisenstein(BigReal(0L, kP), 3, tol(10)), std::invalid_argument);
  EXPECT_THROW(eisenstein(BigReal(-1L, kP), 3, tol(10)), std::invalid_argument);
  EXPECT_THROW(eisenstein(BigReal(1L, kP), 2, tol(10)), std::invalid_argument);
}

TEST(Zeta, UpperBoundIsRigorousAndTight) {
  for (const char* text : {"1.5", "2", "3.5", "10", "20.5"}) {
    const BigReal s(std::string(text), kP);
    BigReal z(kP);
    mpfr_zeta(z.get(), s.get(), MPFR_RNDN);
    const BigReal ub = zeta_upper_bound(s);
    EXPECT_GE(ub, z) << text;
    EXPECT_LT(ub - z, BigReal(1e-3, kP)) << text;
  }
  EXPECT_THROW(zeta_upper_bound(BigReal(1L, kP)), std::invalid_argument);
}

TEST(Lemma51, Examples) {
  const BigReal l2 = const_log2(kP);
  const BigReal s(1.5, kP);
  const BigReal direct = zeta_upper_bound(s) * pow(l2 / (const_pi(kP) * 4L), s) * 2L;
  EXPECT_EQ(lemma51_bound(2, l2), direct);
  EXPECT_THROW(lemma51_bound(1, l2), std::invalid_argument);
  EXPECT_THROW(lemma51_bound(3, BigReal(0L, kP)), std::invalid_argument);
  // Decreasing in n once (w/4 pi)^(1/2) < 1 dominates.
  BigReal prev = lemma51_bound(4, l2);
  for (long n = 5; n <= 40; ++n) {
    const BigReal cur = lemma51_bound(n, l2);
    EXPECT_LT(cur, prev) << n;
    prev = cur;
  }
}

TEST(Omega, Examples) {
  const BigReal w = omega(kP);
  EXPECT_EQ(w.to_fixed(8), "0.96242365");
  EXPECT_LT(abs((cosh(w) - 1L) * 2L - 1L), tol(55));
  EXPECT_LT(abs(sinh(w) - sqrt(BigReal(5L, kP)) / 2L), tol(55));
}

TEST(Hermite, Examples) {
  const BigReal two(2L, kP);
  EXPECT_EQ(hermite(0, two), BigReal(1L, kP));
  EXPECT_EQ(hermite(1, two), two);
  EXPECT_EQ(hermite(4, two), BigReal(-5L, kP));
  for (const char* text : {"-1.3", "0", "0.7", "2.5"}) {
    const BigReal x(std::string(text), kP);
    EXPECT_LT(abs(hermite(3, x) - (x * x * x - x * 3L)), tol(55));
  }
}

TEST(Hermite, MatchesDerivativeDefinition) {
  for (unsigned m = 0; m <= 8; ++m) {
    const ExactPoly h = hermite_symbolic(m);
    for (const char* text : {"-2.25", "-0.5", "0", "1", "3.75"}) {
      const BigReal x(std::string(text), kP);
      EXPECT_LT(abs(hermite(m, x) - eval_poly(h, x)), tol(50)) << m << " " << text;
    }
  }
  EXPECT_EQ(hermite_symbolic(3), ExactPoly(std::vector<ExactRational>{0, -3, 0, 1}));
}

TEST(Gaussian, Examples) {
  const BigReal zero(kP);
  EXPECT_LT(abs(gaussian_cdf(zero) - BigReal(0.5, kP)), tol(58));
  EXPECT_EQ(gaussian_pdf(zero).to_fixed(10), "0.3989422804");
  for (const char* text : {"0.3", "1", "2.9", "3.1", "5", "12"}) {
    const BigReal x(std::string(text), kP);
    EXPECT_LT(abs(gaussian_cdf(x) + gaussian_cdf(-x) - 1L), tol(55)) << text;
  }
}

TEST(Gaussian, CdfMatchesQuadrature) {
  const Precision prec = bits_for_digits(40);
  const BigReal half = BigReal(1L, prec) / 2L;
  auto phi = [](const BigReal& t) { return gaussian_pdf(t); };
  for (long xi : {-3L, -1L, 0L, 1L, 3L}) {
    const BigReal x(xi, prec);
    const BigReal integral = romberg(phi, BigReal(prec), abs(x), 13);
    const BigReal expected = xi >= 0 ? half + integral : half - integral;
    EXPECT_LT(abs(gaussian_cdf(x) - expected), pow10_neg(20, prec)) << xi;
  }
}

// Both branches agree across the switch point at |x| = 3.
TEST(Gaussian, BranchesAgreeNearSwitch) {
  const BigReal below(std::string("2.999999"), kP);
  const BigReal above(std::string("3.000001"), kP);
  const BigReal slope = gaussian_pdf(BigReal(3L, kP));
  const BigReal predicted = gaussian_cdf(below) + slope * BigReal(std::string("0.000002"), kP);
  EXPECT_LT(abs(gaussian_cdf(above) - predicted), pow10_neg(13, kP));
  const BigReal far(-40L, kP);
  EXPECT_GT(gaussian_cdf(far), 0L);
  EXPECT_LT(gaussian_cdf(far), pow10_neg(340, kP));
}

TEST(Edgeworth, Examples) {
  const BigReal x(std::string("1.3"), kP);
  const BigReal l3(std::string("0.4"), kP), l4(std::string("-0.2"), kP);
  EXPECT_LT(abs(edgeworth_q(1, x, l3, l4) - gaussian_pdf(x) * (x * x * x - x * 3L) * l3 / 6L), tol(55));
  EXPECT_TRUE(edgeworth_q(1, BigReal(kP), l3, l4).is_zero());
  EXPECT_LT(abs(edgeworth_q(2, x, BigReal(kP), l4) - gaussian_pdf(x) * hermite(4, x) * l4 / 24L), tol(55));
  EXPECT_THROW(edgeworth_q(3, x, l3, l4), std::invalid_argument);
  EXPECT_THROW(edgeworth_q(0, x, l3, l4), std::invalid_argument);
}

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "stirling/polynomial.hpp"
#include "stirling/series.hpp"
#include "stirling/unimodality.hpp"

using namespace stirling;

namespace {

ExactPoly poly(std::initializer_list<long> c) {
  std::vector<ExactRational> v;
  for (long x : c) v.emplace_back(x);
  return ExactPoly(std::move(v));
}

ExactPoly from_roots(const std::vector<ExactRational>& roots) {
  ExactPoly p = poly({1});
  for (const auto& r : roots) p = p * ExactPoly(std::vector<ExactRational>{ExactRational(-r), ExactRational(1)});
  return p;
}

// Sign changes of p on a uniform grid over [lo, hi], plus exact zeros at grid points.
long grid_root_count(const ExactPoly& p, const ExactRational& lo, const ExactRational& hi, long steps) {
  long count = 0;
  int last = 0;
  for (long i = 1; i <= steps; ++i) {
    const ExactRational x = lo + (hi - lo) * ExactRational(i, steps);
    const ExactRational v = eval_exact(p, x);
    const int s = sgn(v);
    if (s == 0) {
      ++count;
      last = 0;
      continue;
    }
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

}  // namespace

TEST(ExactPoly, Basics) {
  EXPECT_EQ(ExactPoly().degree(), -1);
  EXPECT_TRUE(ExactPoly(std::vector<ExactRational>{0, 0}).is_zero());
  EXPECT_EQ(poly({1, 2, 0, 0}).degree(), 1);
  EXPECT_EQ(poly({1, 1}) * poly({-1, 1}), poly({-1, 0, 1}));
  EXPECT_EQ(poly({1, 2}) - poly({1, 2}), ExactPoly());
  EXPECT_EQ(ExactPoly::monomial(3, 2), poly({0, 0, 3}));
}

TEST(ExactPoly, GeneratingPolynomialExamples) {
  EXPECT_EQ(q_poly(2), poly({0, 1, 2}));
  EXPECT_EQ(q_poly(0), poly({1}));
  EXPECT_EQ(eval_exact(q_poly(3), 1), 13);
  EXPECT_EQ(l_poly(2), poly({0, 2, 24}));
  EXPECT_EQ(l_poly(0), poly({1}));
  EXPECT_EQ(eval_exact(l_poly(3), 1), 842);
}

TEST(ExactPoly, EulerFrobeniusExamples) {
  EXPECT_EQ(euler_frobenius(0), poly({1}));
  EXPECT_EQ(euler_frobenius(2), poly({0, 1, 1}));
  EXPECT_EQ(euler_frobenius(3), poly({0, 1, 4, 1}));
  EXPECT_EQ(eval_exact(euler_frobenius(2), -1), 0);
  EXPECT_EQ(eval_exact(euler_frobenius(3), 1), 6);
}

TEST(ExactPoly, EulerFrobeniusRoutesAgree) {
  for (unsigned long n = 0; n <= 50; ++n) {
    EXPECT_EQ(euler_frobenius(n), euler_frobenius_worpitzky(n)) << n;
    EXPECT_EQ(eval_exact(euler_frobenius(n), 1), ExactRational(factorial(n))) << n;
  }
}

// sum_v v^n z^v (1-z)^(n+1) truncated: the first n+1 coefficients of the power
// series are exactly P_n's coefficients.
TEST(ExactPoly, EulerFrobeniusMatchesDefiningSeries) {
  for (unsigned long n = 0; n <= 12; ++n) {
    std::vector<ExactRational> series(n + 2);
    for (unsigned long v = 0; v <= n + 1; ++v) series[v] = ExactRational(ipow(static_cast<long>(v), n));
    std::vector<ExactRational> factor(n + 2);
    for (unsigned long i = 0; i <= n + 1; ++i) factor[i] = ExactRational(binomial(n + 1, i) * (i % 2 == 0 ? 1 : -1));
    const ExactPoly prod = ExactPoly(series) * ExactPoly(factor);
    const ExactPoly p = euler_frobenius(n);
    for (unsigned long k = 0; k <= n; ++k) EXPECT_EQ(prod.coeff(k), p.coeff(k)) << n << " " << k;
  }
}

TEST(ExactPoly, EvalAndDerivativeExamples) {
  EXPECT_EQ(eval_exact(q_poly(2), 1), 3);
  EXPECT_EQ(eval_exact(ExactPoly(), ExactRational(7, 3)), 0);
  EXPECT_EQ(derivative(poly({0, 1, 2}), 1), poly({1, 4}));
  EXPECT_EQ(derivative(poly({0, 1, 2}), 0), poly({0, 1, 2}));
  EXPECT_EQ(eval_exact(derivative(q_poly(2), 1), 1), 5);
  EXPECT_EQ(derivative(poly({5, 1, 1, 1}), 3), poly({6}));
  EXPECT_TRUE(derivative(poly({5, 1}), 4).is_zero());
}

TEST(Sturm, SpecExamples) {
  const auto q = sturm_count(q_poly(3), ExactRational(-1), ExactRational(0), "Q_3");
  EXPECT_EQ(q.count, 3);
  EXPECT_TRUE(q.simple);
  EXPECT_EQ(q.polynomial_id, "Q_3");
  const auto l = sturm_count(l_poly(3), ExactRational(-1, 4), ExactRational(0));
  EXPECT_EQ(l.count, 3);
  EXPECT_TRUE(l.simple);
  EXPECT_EQ(sturm_count(poly({1}), ExactRational(-5), ExactRational(5)).count, 0);
  EXPECT_EQ(sturm_count(poly({1}), std::nullopt, ExactRational(5)).count, 0);
}

TEST(Sturm, SmallCasesAgreeWithGridSignChanges) {
  for (unsigned long n = 1; n <= 5; ++n) {
    EXPECT_EQ(sturm_count(q_poly(n), ExactRational(-1), ExactRational(0)).count,
              grid_root_count(q_poly(n), ExactRational(-1), ExactRational(0), 4000))
        << n;
  }
}

TEST(Sturm, ShiftsLowerEndpointThatIsARoot) {
  const ExactPoly p = from_roots({ExactRational(-1), ExactRational(1, 2)});
  const auto c = sturm_count(p, ExactRational(-1), ExactRational(1));
  EXPECT_TRUE(c.lower_shifted);
  ASSERT_TRUE(c.lower.has_value());
  EXPECT_EQ(*c.lower, ExactRational(-1001, 1000));
  EXPECT_EQ(c.count, 2);
}

TEST(Sturm, RepeatedRootsAreNotSimple) {
  const ExactPoly p = from_roots({ExactRational(2), ExactRational(2), ExactRational(-3)});
  const auto c = sturm_count(p, std::nullopt, ExactRational(10));
  EXPECT_EQ(c.count, 2);
  EXPECT_FALSE(c.simple);
}

TEST(Sturm, RejectsBadInput) {
  EXPECT_THROW(sturm_count(ExactPoly(), ExactRational(0), ExactRational(1)), std::invalid_argument);
  EXPECT_THROW(sturm_count(poly({1, 1}), ExactRational(1), ExactRational(1)), std::invalid_argument);
}

TEST(Sturm, RootCertificatesForQLAndP) {
  for (unsigned long n = 1; n <= 20; ++n) {
    const auto q = sturm_count(q_poly(n), ExactRational(-1), ExactRational(0));
    EXPECT_EQ(q.count, static_cast<long>(n));
    EXPECT_TRUE(q.simple);
    const auto l = sturm_count(l_poly(n), ExactRational(-1, 4), ExactRational(0));
    EXPECT_EQ(l.count, static_cast<long>(n));
    EXPECT_TRUE(l.simple);
    const auto p = sturm_count(euler_frobenius(n), std::nullopt, ExactRational(0));
    EXPECT_EQ(p.count, static_cast<long>(n));
    EXPECT_TRUE(p.simple);
    EXPECT_EQ(sturm_count(euler_frobenius(n), ExactRational(1, 1000000), ExactRational(1000)).count, 0);
  }
}

TEST(Property, SturmCountsKnownRoots) {
  std::mt19937 rng(12345);
  std::uniform_int_distribution<long> num(-40, 40), den(1, 9), size(1, 7), mult(1, 3);
  for (int trial = 0; trial < 60; ++trial) {
    std::set<ExactRational> distinct;
    const long k = size(rng);
    while (static_cast<long>(distinct.size()) < k) distinct.insert(make_rational(num(rng), den(rng)));
    std::vector<ExactRational> roots;
    bool repeated = false;
    for (const auto& r : distinct) {
      const long m = trial % 2 == 0 ? 1 : mult(rng);
      repeated = repeated || m > 1;
      for (long i = 0; i < m; ++i) roots.push_back(r);
    }
    std::shuffle(roots.begin(), roots.end(), rng);
    const ExactPoly p = from_roots(roots) * make_rational(2 * num(rng) + 1, den(rng));

    ExactRational a = make_rational(num(rng), den(rng) + 10), b = make_rational(num(rng), den(rng) + 10);
    if (a == b) b += 1;
    if (b < a) std::swap(a, b);
    if (distinct.count(a)) a -= ExactRational(1, 7919);
    long expected = 0;
    for (const auto& r : distinct) expected += (a < r && r <= b) ? 1 : 0;

    const auto c = sturm_count(p, a, b);
    EXPECT_EQ(c.count, expected) << "trial " << trial;
    EXPECT_EQ(c.simple, !repeated) << "trial " << trial;
    EXPECT_EQ(sturm_count(p, std::nullopt, b).count,
              static_cast<long>(std::count_if(distinct.begin(), distinct.end(), [&](const auto& r) { return r <= b; })));
  }
}

TEST(Identities, SpecExamples) {
  EXPECT_TRUE(check_identity_314(2, ExactRational(1, 2)));
  EXPECT_TRUE(check_identity_314(0, ExactRational(5, 7)));
  EXPECT_TRUE(check_identity_314(5, -2));
  EXPECT_TRUE(check_identity_310(1, ExactRational(1, 2)));
  EXPECT_TRUE(check_identity_310(0, ExactRational(1, 3)));
  EXPECT_TRUE(check_identity_310(4, ExactRational(-1, 3)));
  EXPECT_THROW(check_identity_314(3, 1), std::invalid_argument);
  EXPECT_THROW(check_identity_310(3, -1), std::invalid_argument);
  EXPECT_THROW(check_identity_310(3, 1), std::invalid_argument);
}

// At n = 0 the right side is 2/(1+z), so the L/P identity only speaks about n >= 1.
TEST(Identities, LIdentityRightSideAtZeroIsNotOne) {
  const ExactRational z(1, 3);
  EXPECT_EQ(eval_exact(l_poly(0), z), 1);
  EXPECT_EQ(ExactRational(2) / (1 + z) * eval_exact(euler_frobenius(0), z), ExactRational(3, 2));
}

TEST(Identities, DeskRange) {
  const std::vector<ExactRational> pts{ExactRational(1, 3), ExactRational(1, 2), ExactRational(-1, 2), ExactRational(-2),
                                       ExactRational(3)};
  for (unsigned long n = 0; n <= 25; ++n)
    for (const auto& z : pts) {
      EXPECT_TRUE(check_identity_314(n, z)) << n << " " << z;
      EXPECT_TRUE(check_identity_310(n, z)) << n << " " << z;
    }
}

TEST(Property, IdentitiesAtRandomRationals) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> num(-30, 30), den(1, 17);
  std::uniform_int_distribution<unsigned long> rows(1, 30);
  for (int trial = 0; trial < 80; ++trial) {
    ExactRational z = make_rational(num(rng), den(rng));
    if (z == 1 || z == -1) continue;
    const unsigned long n = rows(rng);
    EXPECT_TRUE(check_identity_314(n, z)) << n << " " << z;
    EXPECT_TRUE(check_identity_310(n, z)) << n << " " << z;
  }
}

TEST(Series, ArithmeticSanity) {
  const auto e = TruncatedSeries::exp(12);
  const auto e2 = TruncatedSeries::exp(12, 2);
  const auto sq = e * e;
  for (std::size_t k = 0; k <= 12; ++k) EXPECT_EQ(sq[k], e2[k]);
  const auto one = e * e.inverse();
  EXPECT_EQ(one[0], 1);
  for (std::size_t k = 1; k <= 12; ++k) EXPECT_EQ(one[k], 0);
  // sinh t = (e^t - e^-t)/2
  const auto sh = TruncatedSeries::sinh(12);
  const auto diff = (e - TruncatedSeries::exp(12, -1)) * ExactRational(1, 2);
  for (std::size_t k = 0; k <= 12; ++k) EXPECT_EQ(sh[k], diff[k]);
  EXPECT_THROW(TruncatedSeries(3).inverse(), std::domain_error);
  EXPECT_THROW(TruncatedSeries(3) + TruncatedSeries(4), std::invalid_argument);
}

TEST(Egf, SpecExamples) {
  const auto col = egf_closed_form(EgfIdentity::chebyshev_column, 10, 1);
  for (std::size_t n = 1; 2 * n <= 10; ++n) EXPECT_EQ(col[2 * n], 1 / ExactRational(factorial(2 * n))) << n;
  EXPECT_TRUE(verify_egf(EgfIdentity::chebyshev_column, 10, 1));

  const auto fubini = egf_closed_form(EgfIdentity::q_family, 8, 1);
  for (unsigned long n = 0; n <= 8; ++n)
    EXPECT_EQ(fubini[n], ExactRational(row_sum(RowSumKind::stirling_modified, n)) / ExactRational(factorial(n)));
  EXPECT_TRUE(verify_egf(EgfIdentity::q_family, 8, 1));

  for (EgfIdentity which : {EgfIdentity::l_family, EgfIdentity::q_family}) {
    const auto z = egf_closed_form(which, 9, 0);
    EXPECT_EQ(z[0], 1);
    for (std::size_t k = 1; k <= 9; ++k) EXPECT_EQ(z[k], 0);
    EXPECT_TRUE(verify_egf(which, 9, 0));
  }
  EXPECT_THROW(verify_egf(EgfIdentity::q_family, 0, 1), std::invalid_argument);
}

TEST(Egf, ParseNames) {
  EXPECT_EQ(parse_egf_identity("3.7"), EgfIdentity::chebyshev_column);
  EXPECT_EQ(parse_egf_identity("l_family"), EgfIdentity::l_family);
  EXPECT_EQ(parse_egf_identity("3.12"), EgfIdentity::q_family);
  EXPECT_THROW(parse_egf_identity("3.9"), std::invalid_argument);
}

TEST(Property, EgfAtRandomParameters) {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  for (int trial = 0; trial < 20; ++trial) {
    const ExactRational s = make_rational(num(rng), den(rng));
    EXPECT_TRUE(verify_egf(EgfIdentity::l_family, 14, s)) << s;
    EXPECT_TRUE(verify_egf(EgfIdentity::q_family, 14, s)) << s;
  }
  for (unsigned long j = 0; j <= 8; ++j) EXPECT_TRUE(verify_egf(EgfIdentity::chebyshev_column, 16, j)) << j;
}

TEST(Unimodality, SpecExamples) {
  const auto c = unimodality_check(Kind::chebyshev, 3);
  EXPECT_EQ(c.shape, UnimodalShape::peak);
  EXPECT_EQ(c.peak, 3u);
  EXPECT_TRUE(c.in_theorem_regime);

  const auto s = unimodality_check(Kind::stirling, 3);
  EXPECT_EQ(s.shape, UnimodalShape::plateau);
  EXPECT_EQ(s.peak, 2u);
  EXPECT_FALSE(unimodality_check(Kind::stirling, 2).in_theorem_regime);
}

TEST(Unimodality, DetectsViolations) {
  const std::vector<ExactInteger> dip{0, 3, 1, 4, 2};
  const auto r = classify_unimodal(dip);
  EXPECT_EQ(r.shape, UnimodalShape::violation);
  ASSERT_TRUE(r.counterexample.has_value());
  const std::vector<ExactInteger> flat3{1, 5, 5, 5, 1};
  EXPECT_EQ(classify_unimodal(flat3).shape, UnimodalShape::violation);
  const std::vector<ExactInteger> peak{1, 2, 7, 3};
  EXPECT_EQ(classify_unimodal(peak).shape, UnimodalShape::peak);
}

TEST(Unimodality, FirstHundredRows) {
  for (unsigned long n = 3; n <= 100; ++n) {
    EXPECT_NE(unimodality_check(Kind::stirling, n).shape, UnimodalShape::violation) << n;
    EXPECT_NE(unimodality_check(Kind::chebyshev, n).shape, UnimodalShape::violation) << n;
  }
}

TEST(Property, ClassifierMatchesDefinition) {
  std::mt19937 rng(31337);
  std::uniform_int_distribution<int> len(1, 8), val(1, 6);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<ExactInteger> seq(static_cast<std::size_t>(len(rng)));
    for (auto& v : seq) v = val(rng);
    // Reference: exists p such that strictly rising up to p, then either strictly
    // falling from p, or seq[p] == seq[p+1] and strictly falling from p+1.
    bool ok = false;
    const std::size_t m = seq.size();
    for (std::size_t p = 0; p < m && !ok; ++p) {
      bool rise = true;
      for (std::size_t i = 0; i < p; ++i) rise = rise && seq[i] < seq[i + 1];
      if (!rise) continue;
      auto falls_from = [&](std::size_t q) {
        for (std::size_t i = q; i + 1 < m; ++i)
          if (!(seq[i] > seq[i + 1])) return false;
        return true;
      };
      ok = falls_from(p) || (p + 1 < m && seq[p] == seq[p + 1] && falls_from(p + 1));
    }
    EXPECT_EQ(classify_unimodal(seq).shape != UnimodalShape::violation, ok) << "trial " << trial;
  }
}

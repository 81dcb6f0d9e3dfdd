#ifndef STIRLING_ANALYTIC_HPP
#define STIRLING_ANALYTIC_HPP

#include <map>
#include <mutex>
#include <stdexcept>
#include <vector>

#include "stirling/big_real.hpp"
#include "stirling/exact.hpp"

namespace stirling {

// ---------------------------------------------------------------------------
// Bernoulli numbers

/// B_0..B_m exactly (B_1 = -1/2), from sum_{k<=m} C(m+1,k) B_k = 0. Cached.
inline std::vector<ExactRational> bernoulli_numbers(std::size_t m) {
  static std::mutex mu;
  static std::vector<ExactRational> cache{ExactRational(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (cache.size() <= m) {
    const unsigned long k = cache.size();
    ExactRational acc = 0;
    for (unsigned long i = 0; i < k; ++i) acc += ExactRational(binomial(k + 1, i)) * cache[i];
    cache.push_back(-acc / static_cast<unsigned long>(k + 1));
  }
  return {cache.begin(), cache.begin() + static_cast<long>(m + 1)};
}

// ---------------------------------------------------------------------------
// Eisenstein series  sum_{m in Z} (w + 2 pi i m)^(-k)  at real w > 0

struct EisensteinResult {
  BigReal value;
  /// Terms summed directly: |m| <= terms_used.
  long terms_used = 0;
  /// Euler-Maclaurin correction terms applied to the |m| > terms_used tail.
  long correction_terms = 0;
  /// Rigorous bound on the error left after the tail correction.
  BigReal tail_bound;
};

namespace detail {

/// Modulus and argument of w + 2 pi i m.
struct Polar {
  BigReal r;
  BigReal theta;
};

inline Polar polar_of(const BigReal& w, const BigReal& two_pi, long m) {
  const BigReal im = two_pi * m;
  return {sqrt(w * w + im * im), atan2(im, w)};
}

/// Re and Im of (r e^{i theta})^(-s).
inline BigReal re_inv_pow(const Polar& z, long s) { return pow(z.r, -s) * cos(z.theta * s); }
inline BigReal im_inv_pow(const Polar& z, long s) { return -(pow(z.r, -s) * sin(z.theta * s)); }

/// Upper bound for the Euler-Maclaurin remainder of both tails |m| > M with P
/// correction terms: 2 * 2 zeta(2P) (k)_{2P} (2 pi)^(-k-2P) M^(1-k-2P) / (k+2P-1),
/// with zeta(2P) <= 2.
inline BigReal em_remainder_bound(long k, long p_terms, long m_cut, const BigReal& two_pi) {
  const Precision prec = two_pi.precision();
  BigReal rising(1L, prec);
  for (long i = 0; i < 2 * p_terms; ++i) rising *= (k + i);
  const long e = k + 2 * p_terms;
  BigReal b = rising * 8L;
  b /= pow(two_pi, e);
  b /= pow(BigReal(m_cut, prec), e - 1);
  b /= (e - 1);
  return b;
}

}  // namespace detail

/// Real value of sum_{m in Z} 1/(w + 2 pi i m)^k for real w > 0 and k >= 3.
///
/// Terms with |m| <= M are summed directly (conjugate pairs combined so the
/// imaginary part cancels identically). The tail m > M is evaluated in closed form
/// by Euler-Maclaurin, using f^(r)(x) = (-1)^r (k)_r (2 pi i)^r (w + 2 pi i x)^(-k-r)
/// and int_M^inf f = (w + 2 pi i M)^(1-k) / ((k-1) 2 pi i). The number of
/// correction terms grows until the remainder bound drops below eps; M doubles
/// if that bound stops improving.
inline EisensteinResult eisenstein(const BigReal& w, long k, const BigReal& eps) {
  if (!(w > 0L)) throw std::invalid_argument("eisenstein needs w > 0");
  if (k < 3) throw std::invalid_argument("eisenstein needs k >= 3");
  const Precision out_prec = w.precision();
  const Precision prec = out_prec + 32;
  const BigReal wp(w, prec);
  const BigReal two_pi = const_pi(prec) * 2L;

  long m_cut = 64;
  long p_terms = 1;
  for (;;) {
    BigReal best = detail::em_remainder_bound(k, 1, m_cut, two_pi);
    p_terms = 1;
    bool reached = best < eps;
    for (long p = 2; !reached && p < 4000; ++p) {
      BigReal b = detail::em_remainder_bound(k, p, m_cut, two_pi);
      if (!(b < best)) break;
      best = b;
      p_terms = p;
      reached = best < eps;
    }
    if (reached) break;
    m_cut *= 2;
    if (m_cut > (1L << 24)) throw std::runtime_error("eisenstein: tolerance not reachable");
  }

  // Direct part.
  BigReal sum = pow(wp, -k);
  for (long m = 1; m <= m_cut; ++m) sum += detail::re_inv_pow(detail::polar_of(wp, two_pi, m), k) * 2L;

  // Tail m > M, real part; the m < -M tail is its conjugate, so the total is 2 Re.
  const auto z = detail::polar_of(wp, two_pi, m_cut);
  BigReal tail = detail::im_inv_pow(z, k - 1) / (two_pi * (k - 1));
  tail -= detail::re_inv_pow(z, k) / 2L;
  const auto bern = bernoulli_numbers(static_cast<std::size_t>(2 * p_terms));
  BigReal rising(1L, prec);           // (k)_{2p-1}
  BigReal two_pi_pow(1L, prec);       // (2 pi)^(2p-1)
  BigReal fact(1L, prec);             // (2p)!
  for (long p = 1; p <= p_terms; ++p) {
    if (p == 1) {
      rising *= k;
      two_pi_pow = two_pi;
      fact = BigReal(2L, prec);
    } else {
      rising *= (k + 2 * p - 3);
      rising *= (k + 2 * p - 2);
      two_pi_pow *= two_pi * two_pi;
      fact *= (2 * p - 1);
      fact *= (2 * p);
    }
    // Re f^(2p-1)(M) = (-1)^(p+1) (k)_{2p-1} (2 pi)^(2p-1) Im z^(-(k+2p-1))
    BigReal deriv = rising * two_pi_pow * detail::im_inv_pow(z, k + 2 * p - 1);
    if (p % 2 == 0) deriv = -deriv;
    tail -= BigReal(bern[static_cast<std::size_t>(2 * p)], prec) / fact * deriv;
  }
  sum += tail * 2L;

  EisensteinResult out{BigReal(sum, out_prec), m_cut, p_terms,
                       BigReal(detail::em_remainder_bound(k, p_terms, m_cut, two_pi), out_prec)};
  return out;
}

// ---------------------------------------------------------------------------
// Remainder bound for the Eisenstein series against its m = 0 term

/// Upper bound for zeta(s), s > 1: sum_{m<=N} m^-s plus the integral tail
/// N^(1-s)/(s-1), every step rounded upward. Computed at 64 bits and cached.
inline BigReal zeta_upper_bound(const BigReal& s, long terms = 10000) {
  if (!(s > 1L)) throw std::invalid_argument("zeta_upper_bound needs s > 1");
  static std::mutex mu;
  static std::map<std::pair<double, long>, double> cache;
  const double key = s.to_double();
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({key, terms});
    if (it != cache.end() && BigReal(key, s.precision()) == s) return BigReal(it->second, s.precision());
  }
  mpfr_t acc, t, sd;
  mpfr_inits2(64, acc, t, sd, static_cast<mpfr_ptr>(nullptr));
  mpfr_set(sd, s.get(), MPFR_RNDD);  // lower s gives larger terms
  mpfr_set_zero(acc, 1);
  for (long m = 1; m <= terms; ++m) {
    mpfr_ui_pow(t, static_cast<unsigned long>(m), sd, MPFR_RNDD);
    mpfr_ui_div(t, 1, t, MPFR_RNDU);
    mpfr_add(acc, acc, t, MPFR_RNDU);
  }
  // tail: N^(1-s)/(s-1)
  mpfr_t sm1;
  mpfr_init2(sm1, 64);
  mpfr_sub_ui(sm1, sd, 1, MPFR_RNDD);
  mpfr_ui_pow(t, static_cast<unsigned long>(terms), sm1, MPFR_RNDD);
  mpfr_mul(t, t, sm1, MPFR_RNDD);
  mpfr_ui_div(t, 1, t, MPFR_RNDU);
  mpfr_add(acc, acc, t, MPFR_RNDU);
  const double bound = mpfr_get_d(acc, MPFR_RNDU);
  mpfr_clears(acc, t, sd, sm1, static_cast<mpfr_ptr>(nullptr));
  {
    std::lock_guard<std::mutex> lock(mu);
    cache[{key, terms}] = bound;
  }
  return BigReal(bound, s.precision());
}

/// 2 zeta((n+1)/2) (|w| / 4 pi)^((n+1)/2): bounds |R_n(w)| in
/// sum_m (w + 2 pi i m)^-(n+1) = w^-(n+1) (1 + R_n(w)).
inline BigReal lemma51_bound(long n, const BigReal& w) {
  if (n < 2) throw std::invalid_argument("lemma51_bound needs n >= 2");
  if (w.is_zero()) throw std::invalid_argument("lemma51_bound needs w != 0");
  const Precision prec = w.precision();
  const BigReal s = BigReal(n + 1, prec) / 2L;
  const BigReal ratio = abs(w) / (const_pi(prec) * 4L);
  return zeta_upper_bound(s) * pow(ratio, s) * 2L;
}

/// Relative remainder R_n(w) = w^(n+1) * series - 1.
inline BigReal eisenstein_remainder(long n, const BigReal& w, const BigReal& series_value) {
  return pow(w, n + 1) * series_value - 1L;
}

// ---------------------------------------------------------------------------

/// 2 log((sqrt 5 + 1)/2), the positive root of 2(cosh w - 1) = 1.
inline BigReal omega(Precision prec) {
  const BigReal s5 = sqrt(BigReal(5L, prec));
  return log((s5 + 1L) / 2L) * 2L;
}

/// Probabilists' Hermite polynomial He_m(x) = (-1)^m e^{x^2/2} d^m/dx^m e^{-x^2/2}.
inline BigReal hermite(unsigned m, const BigReal& x) {
  BigReal prev(1L, x.precision());
  if (m == 0) return prev;
  BigReal cur = x;
  for (unsigned k = 1; k < m; ++k) {
    BigReal next = x * cur - prev * static_cast<long>(k);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

inline BigReal gaussian_pdf(const BigReal& x) {
  const Precision prec = x.precision();
  return exp(-(x * x) / 2L) / sqrt(const_pi(prec) * 2L);
}

namespace detail {

/// Mills-ratio continued fraction 1/(x + 1/(x + 2/(x + 3/(x + ...)))) for x > 0,
/// evaluated backward with a doubling number of levels until it settles.
inline BigReal mills_ratio(const BigReal& x) {
  const Precision prec = x.precision() + 32;
  const BigReal xp(x, prec);
  auto eval = [&](long levels) {
    BigReal t = xp;
    for (long k = levels; k >= 1; --k) t = xp + BigReal(k, prec) / t;
    return 1L / t;
  };
  const BigReal tol = pow(BigReal(2L, prec), -static_cast<long>(x.precision()) - 4);
  long levels = 64;
  BigReal prev = eval(levels);
  for (;;) {
    levels *= 2;
    BigReal cur = eval(levels);
    if (relative_error(cur, prev) < tol || levels > (1L << 22)) return BigReal(cur, x.precision());
    prev = std::move(cur);
  }
}

}  // namespace detail

/// Standard normal distribution function. For |x| <= 3 it sums
/// 1/2 + phi(x) sum_k x^(2k+1)/(2k+1)!! (all terms share the sign of x); beyond
/// that it uses the upper tail phi(|x|) * Mills ratio.
inline BigReal gaussian_cdf(const BigReal& x) {
  const Precision prec = x.precision();
  if (abs(x) <= 3L) {
    const Precision wp = prec + 32;
    const BigReal xp(x, wp);
    const BigReal x2 = xp * xp;
    BigReal term = xp;
    BigReal sum = xp;
    const BigReal tol = pow(BigReal(2L, wp), -static_cast<long>(wp));
    for (long k = 1; k < 100000; ++k) {
      term = term * x2 / (2 * k + 1);
      sum += term;
      if (abs(term) <= abs(sum) * tol) break;
    }
    return BigReal(BigReal(1L, wp) / 2L + gaussian_pdf(xp) * sum, prec);
  }
  const BigReal ax = abs(x);
  const BigReal upper_tail = gaussian_pdf(ax) * detail::mills_ratio(ax);
  return x.sign() > 0 ? 1L - upper_tail : upper_tail;
}

/// First and second Edgeworth terms:
///   q1 = phi(x) He3(x) l3/3!
///   q2 = phi(x) [He4(x) l4/4! + He6(x) l3^2/(2! (3!)^2)]
inline BigReal edgeworth_q(int nu, const BigReal& x, const BigReal& lambda3, const BigReal& lambda4) {
  const BigReal phi = gaussian_pdf(x);
  switch (nu) {
    case 1: return phi * hermite(3, x) * lambda3 / 6L;
    case 2: return phi * (hermite(4, x) * lambda4 / 24L + hermite(6, x) * lambda3 * lambda3 / 72L);
    default: throw std::invalid_argument("edgeworth_q supports nu in {1, 2}");
  }
}

}  // namespace stirling

#endif  // STIRLING_ANALYTIC_HPP

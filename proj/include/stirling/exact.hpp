#ifndef STIRLING_EXACT_HPP
#define STIRLING_EXACT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace stirling {

/// Unbounded signed integer. Zero is canonical (sign 0) and nothing overflows.
using ExactInteger = mpz_class;

/// Reduced fraction with a positive denominator.
using ExactRational = mpq_class;

inline ExactInteger factorial(unsigned long n) {
  ExactInteger r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline ExactInteger binomial(unsigned long n, unsigned long k) {
  ExactInteger r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// base^exp with 0^0 = 1.
inline ExactInteger ipow(const ExactInteger& base, unsigned long exp) {
  ExactInteger r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

inline ExactInteger ipow(long base, unsigned long exp) { return ipow(ExactInteger(base), exp); }

inline ExactRational make_rational(const ExactInteger& num, const ExactInteger& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  ExactRational q(num, den);
  q.canonicalize();
  return q;
}

inline ExactRational rpow(const ExactRational& base, unsigned long exp) {
  return make_rational(ipow(base.get_num(), exp), ipow(base.get_den(), exp));
}

inline bool is_integral(const ExactRational& q) { return q.get_den() == 1; }

/// "p" or "p/q", as GMP prints it.
inline std::string to_string(const ExactRational& q) { return q.get_str(); }
inline std::string to_string(const ExactInteger& z) { return z.get_str(); }

/// Parses "p", "-p", "p/q". Decimal only; rejects anything else.
inline ExactRational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  const auto slash = text.find('/');
  auto parse_int = [](std::string_view s) {
    if (s.empty()) throw std::invalid_argument("malformed rational");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) throw std::invalid_argument("malformed rational");
    for (std::size_t k = i; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') throw std::invalid_argument("malformed rational: " + std::string(s));
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return ExactInteger(digits, 10);
  };
  if (slash == std::string_view::npos) return ExactRational(parse_int(text));
  return make_rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

}  // namespace stirling

#endif  // STIRLING_EXACT_HPP

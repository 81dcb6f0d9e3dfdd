#ifndef STIRLING_UNIMODALITY_HPP
#define STIRLING_UNIMODALITY_HPP

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "stirling/exact.hpp"
#include "stirling/exact_numbers.hpp"

namespace stirling {

enum class UnimodalShape { peak, plateau, violation };

struct UnimodalityResult {
  UnimodalShape shape = UnimodalShape::violation;
  /// Peak index, or the left index of a two-point plateau.
  std::size_t peak = 0;
  /// Three consecutive indices witnessing a violation, when shape == violation.
  std::optional<std::array<std::size_t, 3>> counterexample;
  /// n >= 3, the range in which a peak or two-point plateau is guaranteed.
  bool in_theorem_regime = false;
};

/// Classifies a sequence over its positive support: strictly rising to a single
/// maximum or to two equal adjacent maxima, then strictly falling. Leading zeros
/// (the j = 0 entry of rows n >= 1) are skipped.
inline UnimodalityResult classify_unimodal(std::span<const ExactInteger> row) {
  UnimodalityResult out;
  std::size_t lo = 0;
  while (lo < row.size() && row[lo] == 0) ++lo;
  if (lo == row.size()) {
    out.counterexample = std::array<std::size_t, 3>{0, 0, 0};
    return out;
  }
  std::size_t hi = row.size() - 1;
  while (row[hi] == 0) --hi;

  std::size_t i = lo;
  while (i < hi && row[i] < row[i + 1]) ++i;
  out.peak = i;
  if (i < hi && row[i] == row[i + 1]) {
    out.shape = UnimodalShape::plateau;
    ++i;
  } else {
    out.shape = UnimodalShape::peak;
  }
  for (; i < hi; ++i) {
    if (!(row[i] > row[i + 1])) {
      out.shape = UnimodalShape::violation;
      const std::size_t left = i == 0 ? 0 : i - 1;
      out.counterexample = std::array<std::size_t, 3>{left, i, i + 1};
      return out;
    }
  }
  // Interior zeros would break the positive-support assumption.
  for (std::size_t k = lo; k <= hi; ++k)
    if (row[k] <= 0) {
      out.shape = UnimodalShape::violation;
      out.counterexample = std::array<std::size_t, 3>{k == 0 ? 0 : k - 1, k, k + 1};
      return out;
    }
  return out;
}

/// Unimodality of the modified row j! S(n,j) (stirling) or (2j)! C(n,j) (chebyshev).
inline UnimodalityResult unimodality_check(Kind kind, unsigned long n) {
  const auto row = modified_row(kind, n);
  auto r = classify_unimodal(row);
  r.in_theorem_regime = n >= 3;
  return r;
}

}  // namespace stirling

#endif  // STIRLING_UNIMODALITY_HPP

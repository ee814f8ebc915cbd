#pragma once

#include <cstdint>
#include <vector>

#include "germlab/monomial.hpp"

namespace oracle {

/// Counts exponent vectors in the box [0, bound)^n not divisible by any
/// generator. Independent of the staircase walk used by the library.
inline std::uint64_t staircase_count(const std::vector<germlab::Monomial>& gens, std::size_t n, int bound) {
  std::uint64_t count = 0;
  std::vector<int> e(n, 0);
  for (;;) {
    bool divisible = false;
    for (const auto& g : gens) {
      bool d = true;
      for (std::size_t i = 0; i < n; ++i)
        if (g.e[i] > e[i]) d = false;
      if (d) {
        divisible = true;
        break;
      }
    }
    if (!divisible) ++count;
    std::size_t i = 0;
    while (i < n && ++e[i] == bound) e[i++] = 0;
    if (i == n) break;
  }
  return count;
}

}  // namespace oracle

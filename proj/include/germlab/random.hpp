#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "germlab/polynomial.hpp"

namespace germlab {

/// Deterministic sampler. Bounded draws are done by rejection on the raw
/// 64-bit stream so results do not depend on the standard library's
/// distribution implementations.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : gen_(seed) {}

  std::uint64_t raw() { return gen_(); }

  /// Uniform in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t(0) - (~std::uint64_t(0) % n);
    std::uint64_t r;
    do r = gen_();
    while (r >= limit);
    return r % n;
  }

  /// Uniform in [lo, hi].
  long range(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

  /// Nonzero rational a/b with 1 <= |a| <= height, 1 <= b <= height.
  Rational nonzero_rational(long height) {
    long a = range(1, height);
    if (below(2)) a = -a;
    long b = range(1, height);
    Rational q(a, b);
    q.canonicalize();
    return q;
  }

  /// Nonzero integer in [-height, height].
  long nonzero_int(long height) {
    long a = range(1, height);
    return below(2) ? -a : a;
  }

 private:
  std::mt19937_64 gen_;
};

/// Derives an independent child seed (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Linear form with nonzero coefficients of bounded height, one per variable
/// of `vars` (all ring variables when empty).
template <class K>
Polynomial<K> random_linear_form(const RingPtr<K>& ring, Sampler& rng, long height,
                                 const std::vector<std::size_t>& vars = {}) {
  if (height < 1) throw std::invalid_argument("random_linear_form: height_bound must be >= 1");
  std::vector<Term<K>> terms;
  auto use = [&](std::size_t i) {
    terms.push_back({Monomial::var(i), ring->field().from_rational(rng.nonzero_rational(height))});
  };
  if (vars.empty())
    for (std::size_t i = 0; i < ring->nvars(); ++i) use(i);
  else
    for (auto i : vars) use(i);
  return Polynomial<K>::from_terms(ring, std::move(terms));
}

template <class K>
Polynomial<K> random_linear_form(const RingPtr<K>& ring, std::uint64_t seed, long height) {
  Sampler rng(seed);
  return random_linear_form(ring, rng, height);
}

}  // namespace germlab

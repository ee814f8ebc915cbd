#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>

namespace germlab {

inline constexpr std::size_t kMaxVars = 16;

/// Exponent vector with inline storage. Entries past the ring's variable
/// count are always zero, so comparisons may scan the whole array.
struct Monomial {
  std::array<std::uint16_t, kMaxVars> e{};
  std::uint32_t deg = 0;

  static Monomial var(std::size_t i, std::uint16_t power = 1) {
    Monomial m;
    m.e[i] = power;
    m.deg = power;
    return m;
  }

  bool is_one() const { return deg == 0; }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.deg == b.deg && a.e == b.e; }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      std::uint32_t s = std::uint32_t(a.e[i]) + b.e[i];
      if (s > 0xFFFF) throw std::overflow_error("monomial exponent overflow");
      r.e[i] = static_cast<std::uint16_t>(s);
    }
    r.deg = a.deg + b.deg;
    return r;
  }

  /// a | b
  friend bool divides(const Monomial& a, const Monomial& b) {
    if (a.deg > b.deg) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.e[i] > b.e[i]) return false;
    return true;
  }

  /// b / a, assuming a | b.
  friend Monomial quotient(const Monomial& b, const Monomial& a) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) r.e[i] = static_cast<std::uint16_t>(b.e[i] - a.e[i]);
    r.deg = b.deg - a.deg;
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      r.e[i] = std::max(a.e[i], b.e[i]);
      r.deg += r.e[i];
    }
    return r;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (a.e[i] && b.e[i]) return false;
    return true;
  }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : m.e) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

/// Monomial orders. Global: degrevlex and block elimination (first `block`
/// variables eliminated, degrevlex inside each block). Local: negative
/// degree reverse lexicographic (ds), where 1 > x_i.
struct MonomialOrder {
  enum class Kind { DegRevLex, NegDegRevLex, Block };
  Kind kind = Kind::DegRevLex;
  std::size_t block = 0;

  static MonomialOrder degrevlex() { return {Kind::DegRevLex, 0}; }
  static MonomialOrder local() { return {Kind::NegDegRevLex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {Kind::Block, k}; }

  bool is_global() const { return kind != Kind::NegDegRevLex; }
  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;

  /// Returns >0 if a > b, <0 if a < b, 0 if equal.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind) {
      case Kind::DegRevLex:
        if (a.deg != b.deg) return a.deg > b.deg ? 1 : -1;
        return revlex(a, b, 0, kMaxVars);
      case Kind::NegDegRevLex:
        if (a.deg != b.deg) return a.deg < b.deg ? 1 : -1;
        return revlex(a, b, 0, kMaxVars);
      case Kind::Block: {
        std::uint32_t da = 0, db = 0;
        for (std::size_t i = 0; i < block; ++i) {
          da += a.e[i];
          db += b.e[i];
        }
        if (da != db) return da > db ? 1 : -1;
        if (int c = revlex(a, b, 0, block)) return c;
        std::uint32_t ra = a.deg - da, rb = b.deg - db;
        if (ra != rb) return ra > rb ? 1 : -1;
        return revlex(a, b, block, kMaxVars);
      }
    }
    return 0;
  }

  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

 private:
  // Among equal degrees: the monomial with the smaller exponent in the last
  // differing variable is larger.
  static int revlex(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
    for (std::size_t i = hi; i-- > lo;) {
      if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
    }
    return 0;
  }
};

}  // namespace germlab

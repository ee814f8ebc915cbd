#pragma once

#include <cstdint>
#include <gmpxx.h>
#include <stdexcept>
#include <string>

namespace germlab {

using Rational = mpq_class;

/// Thrown when a rational cannot be mapped into GF(p) (denominator divisible by p).
struct BadPrime : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Element of GF(p), p < 2^32. The modulus travels with the value so that
/// arithmetic needs no shared context.
struct ModP {
  std::uint64_t v = 0;
  std::uint64_t p = 0;

  friend bool operator==(const ModP& a, const ModP& b) { return a.v == b.v; }
  friend ModP operator+(ModP a, const ModP& b) {
    a.v += b.v;
    if (a.v >= a.p) a.v -= a.p;
    return a;
  }
  friend ModP operator-(ModP a, const ModP& b) {
    a.v = a.v >= b.v ? a.v - b.v : a.v + a.p - b.v;
    return a;
  }
  friend ModP operator*(ModP a, const ModP& b) {
    a.v = (a.v * b.v) % a.p;
    return a;
  }
  ModP operator-() const { return ModP{v == 0 ? 0 : p - v, p}; }
  ModP& operator+=(const ModP& b) { return *this = *this + b; }
  ModP& operator-=(const ModP& b) { return *this = *this - b; }
  ModP& operator*=(const ModP& b) { return *this = *this * b; }
  friend ModP operator/(const ModP& a, const ModP& b) { return a * inverse(b); }

  friend ModP inverse(const ModP& a) {
    if (a.v == 0) throw std::domain_error("division by zero in GF(p)");
    // Fermat: a^(p-2)
    std::uint64_t r = 1, base = a.v, e = a.p - 2;
    while (e) {
      if (e & 1) r = (r * base) % a.p;
      base = (base * base) % a.p;
      e >>= 1;
    }
    return ModP{r, a.p};
  }
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const ModP& a) { return a.v == 0; }
inline bool is_one(const Rational& q) { return q == 1; }
inline bool is_one(const ModP& a) { return a.v == 1; }
inline Rational inverse(const Rational& q) {
  if (sgn(q) == 0) throw std::domain_error("division by zero in Q");
  return Rational(1) / q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }
inline std::string to_string(const ModP& a) { return std::to_string(a.v); }

/// Field context: knows how to build constants. Specialized per coefficient type.
template <class K>
struct Field;

template <>
struct Field<Rational> {
  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(long v) const { return Rational(v); }
  Rational from_rational(const Rational& q) const { return q; }
  std::string name() const { return "q"; }
  bool operator==(const Field&) const { return true; }
};

template <>
struct Field<ModP> {
  std::uint64_t p = 2147483647;

  ModP zero() const { return ModP{0, p}; }
  ModP one() const { return ModP{1, p}; }
  ModP from_int(long v) const {
    long r = v % static_cast<long>(p);
    if (r < 0) r += static_cast<long>(p);
    return ModP{static_cast<std::uint64_t>(r), p};
  }
  ModP from_rational(const Rational& q) const {
    mpz_class pm(static_cast<unsigned long>(p));
    mpz_class num = q.get_num() % pm;
    mpz_class den = q.get_den() % pm;
    if (num < 0) num += pm;
    if (den == 0) throw BadPrime("denominator " + q.get_den().get_str() + " vanishes mod " + std::to_string(p));
    ModP n{num.get_ui(), p}, d{den.get_ui(), p};
    return n / d;
  }
  std::string name() const { return "fp:" + std::to_string(p); }
  bool operator==(const Field& o) const { return p == o.p; }
};

bool is_prime_u32(std::uint64_t n);
/// Smallest prime >= n (n < 2^32).
std::uint64_t next_prime(std::uint64_t n);

}  // namespace germlab

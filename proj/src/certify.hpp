#pragma once

#include <string>
#include <type_traits>

#include "germlab/germkit.hpp"
#include "germlab/invariants.hpp"

namespace germlab::detail {

// Any generating set of an ideal through the origin vanishes there.
template <class K>
bool avoids_origin(const Ideal<K>& I) {
  for (const auto& g : I.gens())
    if (!::germlab::is_zero(g.constant_term())) return true;
  return false;
}

/// Restriction of an ideal of k[l, x] to l = 0, as an ideal of k[x].
template <class K>
Ideal<K> at_lambda_zero(const Ideal<K>& I, const RingPtr<K>& base) {
  std::vector<std::size_t> map(I.ring()->nvars(), 0);
  for (std::size_t i = 1; i < map.size(); ++i) map[i] = i - 1;
  PolyList<K> out;
  for (const auto& g : I.gens()) {
    std::vector<Term<K>> ts;
    for (const auto& t : g.terms())
      if (!t.m.e[0]) ts.push_back(t);
    out.push_back(Polynomial<K>::from_terms(I.ring(), std::move(ts)).embed(base, map));
  }
  return Ideal<K>(base, std::move(out));
}

template <class K>
bool unit_after_first_var_saturation(const Ideal<K>& I, const Budget& b) {
  if (avoids_origin(I)) return true;
  // m^k inside I near 0 puts a power of the first variable there too
  if (local_colength_by_powers(I, b, 8)) return true;
  return avoids_origin(saturate(I, Polynomial<K>::variable(I.ring(), 0), b));
}

/// Runs `check(ring, to)` over the field certificates are decided in: K
/// itself, or GF(p) for a large prime drawn from `seed` when K = Q. `to`
/// carries polynomial lists into `ring`; `field` records the choice.
template <class K, class Check>
bool decide(const RingPtr<K>& ring, std::uint64_t seed, std::string& field, Check check) {
  if constexpr (std::is_same_v<K, Rational>) {
    for (std::uint64_t p = next_prime((1ull << 30) + seed % (1ull << 30));; p = next_prime(p + 1)) {
      try {
        Field<ModP> F{p};
        auto rp = make_ring<ModP>(ring->names(), F, ring->order());
        auto to = [&](const PolyList<Rational>& ps) {
          PolyList<ModP> out;
          for (const auto& g : ps) {
            std::vector<Term<ModP>> ts;
            for (const auto& t : g.terms()) ts.push_back({t.m, F.from_rational(t.c)});
            out.push_back(Polynomial<ModP>::from_terms(rp, std::move(ts)));
          }
          return out;
        };
        field = F.name();
        return check(rp, to);
      } catch (const BadPrime&) {
      }
    }
  } else {
    field = ring->field().name();
    return check(ring, [&](const PolyList<K>& ps) {
      PolyList<K> out;
      for (const auto& g : ps) out.push_back(g.in_ring(ring));
      return out;
    });
  }
}

/// Smoothness of the deformation near 0 off l = 0: W + I_c(J_x(W)) saturated by l.
template <class K>
bool smooth_unit(const Ideal<K>& W, std::size_t c, const std::vector<std::size_t>& xvars, std::uint64_t seed,
                 const Budget& b, std::string& field) {
  return decide(W.ring(), seed, field, [&](const auto& r, auto to) {
    return unit_after_first_var_saturation(jacobian_locus(Ideal(r, to(W.gens())), c, xvars), b);
  });
}

inline constexpr std::size_t kExactMinorLimit = 400;

template <class K>
bool morse_unit_in(const Ideal<K>& base, const PolyList<K>& rows, const std::vector<std::size_t>& xvars, Sampler& rng,
                   const Budget& b, std::string& method) {
  const std::size_t N = xvars.size();
  const auto& ring = base.ring();
  method = "exact";
  if (rows.size() < N) return unit_after_first_var_saturation(base, b);
  auto J = jacobian(rows, ring, xvars);
  std::size_t count = 1;
  for (std::size_t k = 0; k < N; ++k) count = count * (rows.size() - k) / (k + 1);
  if (count <= kExactMinorLimit) return unit_after_first_var_saturation(base.plus(minors_parallel(J, N)), b);
  // minors of row combinations lie in I_N(J)
  method = "row-combinations";
  PolyMatrix<K> R(ring, N + 1, N);
  for (std::size_t i = 0; i <= N; ++i)
    for (std::size_t r = 0; r < rows.size(); ++r) {
      auto c = ring->field().from_int(rng.range(-4, 4));
      for (std::size_t j = 0; j < N; ++j) R.at(i, j) += J.at(r, j).scaled(c);
    }
  return unit_after_first_var_saturation(base.plus(minors_parallel(R, N)), b);
}

/// Whether <base> + I_N(J_x(rows)) saturated by the first variable is a unit
/// near 0. Falls back to N+1 random row combinations (Cauchy-Binet) when the
/// full minor count exceeds kExactMinorLimit.
template <class K>
bool morse_unit(const Ideal<K>& base, const PolyList<K>& rows, const std::vector<std::size_t>& xvars, Sampler& rng,
                std::uint64_t seed, const Budget& b, std::string& field, std::string& method) {
  return decide(base.ring(), seed, field, [&](const auto& r, auto to) {
    return morse_unit_in(Ideal(r, to(base.gens())), to(rows), xvars, rng, b, method);
  });
}

}  // namespace germlab::detail

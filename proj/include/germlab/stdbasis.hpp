#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "germlab/polynomial.hpp"
#include "germlab/random.hpp"

namespace germlab {

/// Hard resource limits for basis computations. Exceeding one throws
/// BudgetExceeded; results are never truncated silently.
struct Budget {
  std::size_t max_spairs = 200000;
  std::uint32_t max_degree = 96;
};

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Raised when random choices fail their certificates after all retries.
struct GenericityFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <class K>
using PolyList = std::vector<Polynomial<K>>;

/// Standard basis of the ideal generated by `gens` in `ring` (whose order
/// decides global Buchberger vs. local Mora). Global results are reduced;
/// local results are minimal with monic leading coefficients and no leading
/// term divisible by another.
template <class K>
PolyList<K> standard_basis(const PolyList<K>& gens, const RingPtr<K>& ring, const Budget& budget = {});

/// Global: fully reduced remainder. Local: Mora weak normal form (zero iff
/// f lies in the ideal generated in the localization at 0). Both are
/// determined up to a nonzero scalar.
template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const PolyList<K>& basis);

/// Serial and OpenMP batch versions of normal_form over a fixed basis.
template <class K>
PolyList<K> normal_forms_serial(const PolyList<K>& fs, const PolyList<K>& basis);
template <class K>
PolyList<K> normal_forms_parallel(const PolyList<K>& fs, const PolyList<K>& basis);

/// Finite-dimensional quotient data read off a leading ideal.
struct QuotientInfo {
  std::optional<std::uint64_t> colength;  // nullopt means infinite
  std::vector<Monomial> staircase;         // filled when finite and small
  int dimension = 0;                       // -1 for the unit ideal
};

/// Minimal generators of the monomial ideal spanned by the given monomials.
std::vector<Monomial> minimalize(std::vector<Monomial> ms);
/// Standard monomials of a monomial ideal in n variables (nullopt if infinite).
QuotientInfo monomial_quotient(const std::vector<Monomial>& lead, std::size_t n, std::size_t keep = 4096);
/// Krull dimension of k[x_1..x_n]/<lead>; -1 when lead contains 1.
int monomial_dimension(const std::vector<Monomial>& lead, std::size_t n);
/// Degree (multiplicity) of k[x]/<lead> from the Hilbert series numerator.
std::uint64_t monomial_degree(const std::vector<Monomial>& lead, std::size_t n);

/// Ideal with a per-order cache of standard bases. Copies share the cache.
template <class K>
class Ideal {
 public:
  Ideal() = default;
  Ideal(RingPtr<K> ring, PolyList<K> gens);

  const RingPtr<K>& ring() const { return ring_; }
  const PolyList<K>& gens() const { return gens_; }
  bool is_zero() const { return gens_.empty(); }

  /// Cached standard basis for `order`, elements live in with_order(ring, order).
  const PolyList<K>& basis(MonomialOrder order, const Budget& budget = {}) const;
  const PolyList<K>& global_basis(const Budget& b = {}) const { return basis(MonomialOrder::degrevlex(), b); }
  const PolyList<K>& local_basis(const Budget& b = {}) const { return basis(MonomialOrder::local(), b); }

  std::vector<Monomial> leading_monomials(MonomialOrder order, const Budget& b = {}) const;
  bool is_unit(MonomialOrder order, const Budget& b = {}) const;
  bool contains(const Polynomial<K>& f, MonomialOrder order, const Budget& b = {}) const;

  Ideal operator+(const Ideal& o) const;
  Ideal plus(const PolyList<K>& more) const;
  /// Ideal generated by the reduced (global) or minimal (local) basis for `order`.
  Ideal from_basis(MonomialOrder order, const Budget& b = {}) const;

 private:
  struct Cache {
    std::mutex mu;
    std::map<std::pair<int, std::size_t>, std::shared_ptr<const PolyList<K>>> bases;
  };
  RingPtr<K> ring_;
  PolyList<K> gens_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

template <class K>
QuotientInfo colength(const Ideal<K>& I, MonomialOrder order, const Budget& b = {});
/// Local colength at 0 read off dim k[x]/(I + m^k) once two consecutive k
/// agree (then m^k lies in I near 0). Empty when no k <= max_k stabilizes.
template <class K>
std::optional<QuotientInfo> local_colength_by_powers(const Ideal<K>& I, const Budget& b = {}, std::uint32_t max_k = 32);
template <class K>
int krull_dimension(const Ideal<K>& I, MonomialOrder order, const Budget& b = {});

/// Elimination ideal I ∩ k[remaining vars], generators kept in I's ring.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<std::string>& vars, const Budget& b = {});
/// I : g^∞ via an extra variable u and elimination of u from I + <1 - u g>.
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Polynomial<K>& g, const Budget& b = {});
/// I : J^∞ as the intersection of the saturations by each generator of J.
template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Ideal<K>& J, const Budget& b = {});
template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J, const Budget& b = {});

/// Hilbert–Samuel multiplicity at 0 as the degree of the tangent cone.
template <class K>
std::uint64_t tangent_cone_degree(const Ideal<K>& I, const Budget& b = {});

struct MultiplicityResult {
  std::uint64_t value = 0;
  int dimension = 0;
  std::vector<std::uint64_t> slice_values;  // local colengths of the random slices
  std::vector<std::uint64_t> seeds;
  bool slices_agree = false;
  bool matches_tangent_cone = false;
};

/// m_0 of the germ V(I) at 0: slices by dim-many random linear forms,
/// two independent seeds, cross-checked against the tangent-cone degree.
template <class K>
MultiplicityResult multiplicity_m0(const Ideal<K>& I, std::uint64_t seed, const Budget& b = {}, int retries = 5);

}  // namespace germlab

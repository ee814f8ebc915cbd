#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germlab/germkit.hpp"

namespace germlab {

struct InvariantOptions {
  std::uint64_t seed = 1;
  Budget budget{};
  int retries = 5;
  long height = 100;
  /// Certify Morse-ness of sampled perturbations via J_{d,1}.
  bool morse_certificate = true;
};

/// Checks performed for one random sample; unset flags were not applicable.
struct Certificate {
  std::optional<bool> smooth;       // smoothing is smooth near 0 for small parameter
  std::optional<bool> morse;        // no degenerate critical points near 0
  std::optional<bool> finite;       // critical / sliced ideal is zero-dimensional at 0
  std::optional<bool> dimension;    // polar variety has the expected dimension
  std::optional<bool> tangent_cone; // slice colength equals tangent-cone degree
  std::string morse_method;         // "exact" or "row-combinations"
  std::string field;                // field the smooth/morse certificates were decided over

  bool ok() const {
    return smooth.value_or(true) && morse.value_or(true) && finite.value_or(true) && dimension.value_or(true);
  }
};

/// Random data behind one computed integer.
struct GenericitySample {
  std::string quantity;
  std::uint64_t seed = 0;
  std::vector<std::vector<Rational>> A;  // matrix deformation
  std::vector<Rational> b;               // linear perturbation of f
  Rational e;                            // fiber level
  std::vector<std::vector<Rational>> p;  // rows: generic linear forms
  std::uint64_t value = 0;
  Certificate certificate;
};

/// An integer together with the two agreeing samples that produced it.
struct Invariant {
  long value = 0;
  std::vector<GenericitySample> samples;
};

/// mu(f): critical points near 0 of f + b.x on the smoothing I_s(psi + A).
template <class K>
Invariant milnor_number(const FunctionGerm<K>& fg, const InvariantOptions& o);
/// m_d(X) for s = 1 by the local colength of <phi> + I_{c+1}(J(phi, p)).
template <class K>
Invariant gaffney_md_icis(const DeterminantalPresentation<K>& P, const InvariantOptions& o);
/// m_d(X): critical points near 0 of a generic linear form on the smoothing.
template <class K>
Invariant top_polar_X(const DeterminantalPresentation<K>& P, const InvariantOptions& o);
/// m_{d-1}(Y): critical points near 0 of a generic linear form on X_A ∩ f_b^{-1}(e).
template <class K>
Invariant top_polar_fiber(const FunctionGerm<K>& fg, const InvariantOptions& o);
/// m_k(X) for 0 <= k <= d-1.
template <class K>
Invariant polar_multiplicity_X(const DeterminantalPresentation<K>& P, std::size_t k, const InvariantOptions& o);
/// m_k(Y) for 0 <= k <= d-2.
template <class K>
Invariant polar_multiplicity_fiber(const FunctionGerm<K>& fg, std::size_t k, const InvariantOptions& o);

/// Milnor number of an ICIS (s = 1) from colengths of generic Jacobian extensions.
template <class K>
Invariant icis_milnor_number(const DeterminantalPresentation<K>& P, const InvariantOptions& o);

/// Polar sums. `m` holds m_0..m_dim.
long nu_from_polars(const std::vector<long>& m);
long eu_from_polars(const std::vector<long>& m);
/// Eu from Eu + (-1)^dim m_dim = 1 + (-1)^dim nu.
long eu_from_nu(long nu, long m_top, long dim);

template <class K>
std::vector<long> polar_multiplicities_X(const DeterminantalPresentation<K>& P, const InvariantOptions& o,
                                         std::vector<GenericitySample>* samples = nullptr);
template <class K>
std::vector<long> polar_multiplicities_fiber(const FunctionGerm<K>& fg, const InvariantOptions& o,
                                             std::vector<GenericitySample>* samples = nullptr);

template <class K>
long vanishing_euler_X(const DeterminantalPresentation<K>& P, const InvariantOptions& o);
template <class K>
long vanishing_euler_fiber(const FunctionGerm<K>& fg, const InvariantOptions& o);

struct EulerObstruction {
  long polar_sum = 0;
  long from_nu = 0;
  bool agree() const { return polar_sum == from_nu; }
};

template <class K>
EulerObstruction euler_obstruction_X(const DeterminantalPresentation<K>& P, const InvariantOptions& o);
template <class K>
EulerObstruction euler_obstruction_fiber(const FunctionGerm<K>& fg, const InvariantOptions& o);

/// Presentation of X ∩ {x_N = a_1 x_1 + ... + a_{N-1} x_{N-1}} in the first N-1 variables.
template <class K>
DeterminantalPresentation<K> slice_presentation(const DeterminantalPresentation<K>& P, const std::vector<Rational>& a);

struct NuStar {
  std::vector<long> nu;        // nu_0..nu_d
  std::vector<long> m;         // m_0..m_d of X used in the check
  bool bookkeeping_ok = false; // nu_0 = m_0 - 1 and m_i = nu_i + nu_{i-1}
};

template <class K>
NuStar nu_star_sequence(const DeterminantalPresentation<K>& P, const InvariantOptions& o,
                        const std::vector<long>* known_m = nullptr);

struct InvariantReport {
  long d = 0;
  bool has_function = false;
  long mu_f = 0;
  long nu_X = 0;
  long nu_Y = 0;
  std::vector<long> m_X;
  std::vector<long> m_Y;
  long eu_X = 0;
  long eu_Y = 0;
  EulerObstruction eu_X_check;
  EulerObstruction eu_Y_check;
  NuStar nu_star_X;
  bool le_greuel_ok = false;
  std::optional<long> mu_X_icis;     // s = 1 route to nu(X)
  std::optional<long> gaffney_md;    // s = 1 route to m_d(X)
  std::optional<long> mu_f_icis;     // s = 1 colength route to mu(f)
  bool cross_checks_ok = true;
  std::vector<std::string> warnings;
  std::vector<GenericitySample> samples;
};

template <class K>
InvariantReport invariant_report(const DeterminantalPresentation<K>& P, const Polynomial<K>* f, const InvariantOptions& o);

}  // namespace germlab

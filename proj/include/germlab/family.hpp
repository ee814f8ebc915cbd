#pragma once

#include <string>
#include <vector>

#include "germlab/invariants.hpp"

namespace germlab {

struct InvalidFamily : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// One-parameter family (X_t, f_t). Psi and f live in a ring whose first
/// variable is the parameter t; the remaining variables are x_1..x_N.
template <class K>
struct FamilySpec {
  PolyMatrix<K> Psi;  // empty means X_t = C^N
  std::size_t s = 1;
  Polynomial<K> f;

  const RingPtr<K>& ring() const { return f.ring(); }
  std::size_t N() const { return ring()->nvars() - 1; }
  /// k[x_1..x_N] with the family ring's field and order.
  RingPtr<K> base_ring() const;
};

/// Checks shape, s, and f(t, 0) = 0; transposes Psi when rows > cols.
template <class K>
FamilySpec<K> make_family_spec(PolyMatrix<K> Psi, std::size_t s, Polynomial<K> f);

/// The constant family (psi, f) in a ring with a parameter named `t`.
template <class K>
FamilySpec<K> trivial_family(const FunctionGerm<K>& fg, const std::string& t = "t");

template <class K>
struct FamilyInstance {
  Rational t;
  FunctionGerm<K> germ;
  PresentationCheck presentation;
  GermCheck function;
  bool ok() const { return presentation.ok() && function.ok(); }
};

/// (X_{t0}, f_{t0}) in k[x]. Throws InvalidFamily when |t0| exceeds `radius`.
template <class K>
FamilyInstance<K> instantiate_at(const FamilySpec<K>& F, const Rational& t0, const Budget& b = {},
                                 const Rational& radius = Rational(50));

/// {0} followed by `count` nonzero rationals of height <= `height`; every
/// second one is scaled down by 1000.
std::vector<Rational> default_t_samples(std::uint64_t seed, std::size_t count = 3, long height = 50);

struct GoodnessResult {
  /// Critical and singular points of the family off {x = 0} do not
  /// accumulate at (t, x) = (0, 0).
  bool good = false;
  std::vector<Rational> t;
  std::vector<long> mu_t;  // mu(f_t, 0) per sample
  bool mu_route_agrees = false;
};

template <class K>
GoodnessResult goodness_check(const FamilySpec<K>& F, const std::vector<Rational>& ts, const InvariantOptions& o);

struct ConservationResult {
  Rational t;
  long mu_f = 0;          // mu(f_0, 0)
  long mu_at_origin = 0;  // mu(f_t, 0)
  long escaped = 0;       // total multiplicity of critical points leaving 0 as t moves
  bool escaped_morse = false;
  std::vector<long> contributions;  // mu_at_origin, then one entry per escaped point when all are Morse
  bool ok() const { return mu_at_origin + escaped == mu_f; }
};

template <class K>
ConservationResult conservation_check(const FamilySpec<K>& F, const Rational& t0, const InvariantOptions& o);

enum class Quantity { m_X, m_Y, mu, nu_star };
std::string to_string(Quantity q);

/// Values of `q` per report and whether they all agree.
struct ConstancyResult {
  Quantity quantity = Quantity::mu;
  std::vector<std::vector<long>> values;
  bool constant = false;
};

ConstancyResult constancy_check(const std::vector<InvariantReport>& reports, Quantity q);

template <class K>
ConstancyResult constancy_check(const FamilySpec<K>& F, const std::vector<Rational>& ts, Quantity q,
                                const InvariantOptions& o);

struct FamilyOptions {
  InvariantOptions invariants;
  std::vector<Rational> t_samples;  // nonzero samples; empty draws default_t_samples
  std::size_t sample_count = 3;
  long height = 50;
};

struct FamilyVerdict {
  std::vector<Rational> t_samples;  // t = 0 first
  std::vector<InvariantReport> per_t_reports;
  GoodnessResult goodness;
  std::vector<ConservationResult> conservation;
  bool good = false;
  bool mu_constant = false;
  bool m_X_constant = false;
  bool m_Y_constant = false;
  bool nu_star_constant = false;
  bool whitney = false;
  std::vector<std::string> failing;  // subset of {"good", "m_X", "m_Y"}
  std::vector<std::string> warnings;
  std::string scope = "verified at samples";
};

template <class K>
FamilyVerdict whitney_verdict(const FamilySpec<K>& F, const FamilyOptions& o);

}  // namespace germlab

#include "germlab/invariants.hpp"

#include <numeric>

#include "certify.hpp"

namespace germlab {

namespace {

using namespace detail;

const MonomialOrder kLocal = MonomialOrder::local();

long sign(long k) { return k % 2 == 0 ? 1 : -1; }

template <class K>
Polynomial<K> lift(const Polynomial<K>& f, const RingPtr<K>& target) {
  std::vector<std::size_t> map(f.ring()->nvars());
  std::iota(map.begin(), map.end(), 1);
  return f.embed(target, map);
}

template <class K>
Polynomial<K> linear_from(const RingPtr<K>& ring, const std::vector<Rational>& coeffs, std::size_t offset = 0) {
  std::vector<Term<K>> ts;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    ts.push_back({Monomial::var(i + offset), ring->field().from_rational(coeffs[i])});
  return Polynomial<K>::from_terms(ring, std::move(ts));
}

std::vector<Rational> random_vector(Sampler& rng, std::size_t n, long height) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < n; ++i) v.push_back(rng.nonzero_rational(height));
  return v;
}

std::vector<std::vector<Rational>> random_matrix(Sampler& rng, std::size_t m, std::size_t n, long height) {
  std::vector<std::vector<Rational>> A;
  for (std::size_t i = 0; i < m; ++i) A.push_back(random_vector(rng, n, height));
  return A;
}

/// Local data of the one-parameter smoothing (psi + l A, extra + l extra_dir)
/// in k[l, x] and the function g + l g_dir on it.
template <class K>
struct LambdaFamily {
  RingPtr<K> base;  // x_1..x_N
  RingPtr<K> ring;  // variables: _l, x_1..x_N
  PolyList<K> eqs;
  std::size_t codim = 0;
  Polynomial<K> g;
  std::vector<std::size_t> xvars;

  Polynomial<K> lambda() const { return Polynomial<K>::variable(ring, 0); }
};

template <class K>
LambdaFamily<K> make_family(const DeterminantalPresentation<K>& P, const std::vector<std::vector<Rational>>& A,
                            const std::vector<std::pair<Polynomial<K>, Polynomial<K>>>& extra, const Polynomial<K>& g,
                            const Polynomial<K>& g_dir) {
  LambdaFamily<K> F;
  const auto& base = P.ring();
  F.base = base;
  F.ring = prepend_vars(base, {"_l"});
  F.xvars.resize(base->nvars());
  std::iota(F.xvars.begin(), F.xvars.end(), 1);
  auto l = F.lambda();
  if (!P.psi.empty()) {
    PolyMatrix<K> M(F.ring, P.psi.rows(), P.psi.cols());
    for (std::size_t i = 0; i < M.rows(); ++i)
      for (std::size_t j = 0; j < M.cols(); ++j) {
        M.at(i, j) = lift(P.psi.at(i, j), F.ring);
        if (!A.empty()) M.at(i, j) += l.scaled(F.ring->field().from_rational(A[i][j]));
      }
    for (auto& q : minors_parallel(M, P.s))
      if (!q.is_zero()) F.eqs.push_back(std::move(q));
  }
  for (const auto& [e, dir] : extra) F.eqs.push_back(lift(e, F.ring) + l * lift(dir, F.ring));
  F.codim = P.codim() + extra.size();
  F.g = lift(g, F.ring) + l * lift(g_dir, F.ring);
  return F;
}

/// Number of critical points of g near 0 on the family fiber for small l != 0.
template <class K>
void count_critical(const LambdaFamily<K>& F, bool morse, const Budget& b, Sampler& rng, GenericitySample& s) {
  Ideal<K> W(F.ring, F.eqs);
  auto l = F.lambda();
  auto C = critical_ideal_on_deformation(W, F.g, F.codim, F.xvars);
  auto sat = saturate(C, l, b);
  auto q = colength(at_lambda_zero(sat, F.base), kLocal, b);
  s.certificate.finite = q.colength.has_value();
  s.value = q.colength.value_or(0);

  const std::uint64_t cert_seed = rng.below(1ull << 30);
  if (F.codim == 0) {
    s.certificate.smooth = true;
  } else {
    s.certificate.smooth = smooth_unit(W, F.codim, F.xvars, cert_seed, b, s.certificate.field);
  }
  if (!morse) return;
  // J_{d,1}: C is the first extension; the second adds the N x N minors.
  PolyList<K> rows = {F.g};
  for (const auto& g : C.global_basis(b)) rows.push_back(g.in_ring(F.ring));
  Ideal<K> base(F.ring, C.global_basis(b));
  s.certificate.morse =
      morse_unit(base, rows, F.xvars, rng, cert_seed, b, s.certificate.field, s.certificate.morse_method);
}

/// Runs `sample(seed)` twice per attempt until both certified values agree.
template <class Fn>
Invariant two_seed(const InvariantOptions& o, std::uint64_t salt, const std::string& what, Fn sample) {
  std::string last;
  for (int attempt = 0; attempt < o.retries; ++attempt) {
    std::vector<GenericitySample> got;
    for (int k = 0; k < 2; ++k) {
      std::uint64_t seed = derive_seed(derive_seed(o.seed, salt), static_cast<std::uint64_t>(2 * attempt + k));
      GenericitySample s = sample(seed);
      s.quantity = what;
      s.seed = seed;
      got.push_back(std::move(s));
    }
    bool ok = got[0].certificate.ok() && got[1].certificate.ok() && got[0].value == got[1].value;
    if (ok) return Invariant{static_cast<long>(got[0].value), std::move(got)};
    last = "values " + std::to_string(got[0].value) + "/" + std::to_string(got[1].value);
  }
  throw GenericityFailure(what + ": no two certified agreeing samples after " + std::to_string(o.retries) +
                          " attempts (" + last + ")");
}

std::uint64_t salt_of(const std::string& s, std::size_t k = 0) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : s) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  return h + k;
}

/// Polar variety of index k of V(eqs) (dimension dim, codimension c):
/// eqs + I_{c+dim-k+1}(J(eqs, p_1..p_{dim-k+1})), saturated by a generic linear form.
template <class K>
Ideal<K> polar_ideal(const RingPtr<K>& ring, const PolyList<K>& eqs, std::size_t c, std::size_t dim, std::size_t k,
                     Sampler& rng, long height, const Budget& b, GenericitySample& s) {
  const std::size_t N = ring->nvars();
  PolyList<K> rows = eqs;
  for (std::size_t j = 0; j < dim - k + 1; ++j) {
    s.p.push_back(random_vector(rng, N, height));
    rows.push_back(linear_from(ring, s.p.back()));
  }
  auto J = jacobian(rows, ring, {});
  Ideal<K> I(ring, eqs);
  auto polar = I.plus(minors_parallel(J, c + dim - k + 1));
  auto ell = linear_from(ring, random_vector(rng, N, height));
  return saturate(polar, ell, b);
}

template <class K>
Invariant polar_k(const RingPtr<K>& ring, const PolyList<K>& eqs, std::size_t c, std::size_t dim, std::size_t k,
                  const InvariantOptions& o, const std::string& what) {
  return two_seed(o, salt_of(what, k), what, [&](std::uint64_t seed) {
    GenericitySample s;
    Sampler rng(seed);
    Ideal<K> Z(ring, eqs);
    if (k > 0) Z = polar_ideal(ring, eqs, c, dim, k, rng, o.height, o.budget, s);
    auto m = multiplicity_m0(Z, rng.raw(), o.budget, o.retries);
    long expected = static_cast<long>(dim) - static_cast<long>(k);
    // an empty polar germ has multiplicity 0
    s.certificate.dimension = m.dimension == expected || m.dimension < 0;
    s.certificate.tangent_cone = m.matches_tangent_cone;
    s.value = m.value;
    return s;
  });
}

}  // namespace

long nu_from_polars(const std::vector<long>& m) {
  long dim = static_cast<long>(m.size()) - 1;
  long acc = 0;
  for (long i = 0; i <= dim; ++i) acc += sign(i) * m[static_cast<std::size_t>(i)];
  return sign(dim) * (acc - 1);
}

long eu_from_polars(const std::vector<long>& m) {
  long dim = static_cast<long>(m.size()) - 1;
  long acc = 0;
  for (long i = 0; i < dim; ++i) acc += sign(i) * m[static_cast<std::size_t>(i)];
  return acc;
}

long eu_from_nu(long nu, long m_top, long dim) { return 1 + sign(dim) * nu - sign(dim) * m_top; }

template <class K>
Invariant milnor_number(const FunctionGerm<K>& fg, const InvariantOptions& o) {
  const auto& P = fg.host;
  return two_seed(o, salt_of("mu"), "mu", [&](std::uint64_t seed) {
    GenericitySample s;
    Sampler rng(seed);
    if (!P.psi.empty()) s.A = random_matrix(rng, P.psi.rows(), P.psi.cols(), o.height);
    s.b = random_vector(rng, P.N(), o.height);
    auto F = make_family<K>(P, s.A, {}, fg.f, linear_from(P.ring(), s.b));
    count_critical(F, o.morse_certificate, o.budget, rng, s);
    return s;
  });
}

template <class K>
Invariant top_polar_X(const DeterminantalPresentation<K>& P, const InvariantOptions& o) {
  return two_seed(o, salt_of("m_top_X"), "m_top_X", [&](std::uint64_t seed) {
    GenericitySample s;
    Sampler rng(seed);
    if (!P.psi.empty()) s.A = random_matrix(rng, P.psi.rows(), P.psi.cols(), o.height);
    s.p.push_back(random_vector(rng, P.N(), o.height));
    auto p = linear_from(P.ring(), s.p.back());
    auto F = make_family<K>(P, s.A, {}, p, Polynomial<K>(P.ring()));
    count_critical(F, o.morse_certificate, o.budget, rng, s);
    return s;
  });
}

template <class K>
Invariant gaffney_md_icis(const DeterminantalPresentation<K>& P, const InvariantOptions& o) {
  if (P.s != 1) throw std::invalid_argument("gaffney_md_icis needs s = 1");
  return two_seed(o, salt_of("gaffney"), "gaffney_md", [&](std::uint64_t seed) {
    GenericitySample s;
    Sampler rng(seed);
    s.p.push_back(random_vector(rng, P.N(), o.height));
    auto C = critical_ideal_on_deformation(P.ideal(), linear_from(P.ring(), s.p.back()), P.codim());
    auto q = colength(C, kLocal, o.budget);
    s.certificate.finite = q.colength.has_value();
    s.value = q.colength.value_or(0);
    return s;
  });
}

template <class K>
Invariant top_polar_fiber(const FunctionGerm<K>& fg, const InvariantOptions& o) {
  const auto& P = fg.host;
  if (P.d() < 1) throw std::invalid_argument("top_polar_fiber needs d >= 1");
  if (P.d() == 1) {
    // Y is zero-dimensional: m_0(Y) is its colength
    return two_seed(o, salt_of("m_top_Y"), "m_top_Y", [&](std::uint64_t) {
      GenericitySample s;
      auto q = colength(Ideal<K>(P.ring(), fg.fiber_equations()), kLocal, o.budget);
      s.certificate.finite = q.colength.has_value();
      s.value = q.colength.value_or(0);
      return s;
    });
  }
  return two_seed(o, salt_of("m_top_Y"), "m_top_Y", [&](std::uint64_t seed) {
    GenericitySample s;
    Sampler rng(seed);
    if (!P.psi.empty()) s.A = random_matrix(rng, P.psi.rows(), P.psi.cols(), o.height);
    s.b = random_vector(rng, P.N(), o.height);
    s.e = rng.nonzero_rational(o.height);
    s.p.push_back(random_vector(rng, P.N(), o.height));
    auto dir = linear_from(P.ring(), s.b) - Polynomial<K>::constant(P.ring(), P.ring()->field().from_rational(s.e));
    auto p = linear_from(P.ring(), s.p.back());
    auto F = make_family<K>(P, s.A, {{fg.f, dir}}, p, Polynomial<K>(P.ring()));
    count_critical(F, o.morse_certificate, o.budget, rng, s);
    return s;
  });
}

template <class K>
Invariant polar_multiplicity_X(const DeterminantalPresentation<K>& P, std::size_t k, const InvariantOptions& o) {
  if (static_cast<long>(k) >= P.d()) throw std::invalid_argument("polar index must be below d");
  return polar_k(P.ring(), P.equations(), P.codim(), static_cast<std::size_t>(P.d()), k, o, "m_X");
}

template <class K>
Invariant polar_multiplicity_fiber(const FunctionGerm<K>& fg, std::size_t k, const InvariantOptions& o) {
  const auto& P = fg.host;
  if (static_cast<long>(k) + 1 >= P.d()) throw std::invalid_argument("fiber polar index must be below d-1");
  return polar_k(P.ring(), fg.fiber_equations(), P.codim() + 1, static_cast<std::size_t>(P.d() - 1), k, o, "m_Y");
}

template <class K>
Invariant icis_milnor_number(const DeterminantalPresentation<K>& P, const InvariantOptions& o) {
  if (P.s != 1) throw std::invalid_argument("icis_milnor_number needs s = 1");
  auto phi = P.equations();
  if (phi.empty()) return Invariant{0, {}};
  return two_seed(o, salt_of("mu_X_icis"), "mu_X_icis", [&](std::uint64_t seed) {
    GenericitySample s;
    Sampler rng(seed);
    const std::size_t k = phi.size();
    // triangular mixing: every leading subsystem is a generic combination
    PolyList<K> mixed;
    for (std::size_t i = 0; i < k; ++i) {
      Polynomial<K> acc = phi[i];
      for (std::size_t j = i + 1; j < k; ++j) acc += phi[j].scaled(P.ring()->field().from_rational(rng.nonzero_rational(o.height)));
      mixed.push_back(acc);
    }
    long mu = 0;
    bool finite = true;
    for (std::size_t j = 1; j <= k; ++j) {
      PolyList<K> first(mixed.begin(), mixed.begin() + static_cast<long>(j));
      PolyList<K> lower(mixed.begin(), mixed.begin() + static_cast<long>(j - 1));
      auto J = jacobian(first, P.ring(), {});
      Ideal<K> I(P.ring(), lower);
      auto q = colength(I.plus(minors_parallel(J, j)), kLocal, o.budget);
      if (!q.colength) finite = false;
      mu = static_cast<long>(q.colength.value_or(0)) - mu;
    }
    s.certificate.finite = finite;
    s.value = static_cast<std::uint64_t>(mu);
    return s;
  });
}

template <class K>
std::vector<long> polar_multiplicities_X(const DeterminantalPresentation<K>& P, const InvariantOptions& o,
                                         std::vector<GenericitySample>* samples) {
  std::vector<long> m;
  auto keep = [&](Invariant inv) {
    m.push_back(inv.value);
    if (samples) samples->insert(samples->end(), inv.samples.begin(), inv.samples.end());
  };
  for (long k = 0; k < P.d(); ++k) keep(polar_multiplicity_X(P, static_cast<std::size_t>(k), o));
  keep(top_polar_X(P, o));
  return m;
}

template <class K>
std::vector<long> polar_multiplicities_fiber(const FunctionGerm<K>& fg, const InvariantOptions& o,
                                             std::vector<GenericitySample>* samples) {
  std::vector<long> m;
  auto keep = [&](Invariant inv) {
    m.push_back(inv.value);
    if (samples) samples->insert(samples->end(), inv.samples.begin(), inv.samples.end());
  };
  for (long k = 0; k + 1 < fg.host.d(); ++k) keep(polar_multiplicity_fiber(fg, static_cast<std::size_t>(k), o));
  keep(top_polar_fiber(fg, o));
  return m;
}

template <class K>
long vanishing_euler_X(const DeterminantalPresentation<K>& P, const InvariantOptions& o) {
  return nu_from_polars(polar_multiplicities_X(P, o));
}

template <class K>
long vanishing_euler_fiber(const FunctionGerm<K>& fg, const InvariantOptions& o) {
  return nu_from_polars(polar_multiplicities_fiber(fg, o));
}

template <class K>
EulerObstruction euler_obstruction_X(const DeterminantalPresentation<K>& P, const InvariantOptions& o) {
  auto m = polar_multiplicities_X(P, o);
  long nu = nu_from_polars(m);
  if (P.s == 1 && !P.psi.empty()) nu = icis_milnor_number(P, o).value;
  return {eu_from_polars(m), eu_from_nu(nu, m.back(), P.d())};
}

template <class K>
EulerObstruction euler_obstruction_fiber(const FunctionGerm<K>& fg, const InvariantOptions& o) {
  auto m = polar_multiplicities_fiber(fg, o);
  long nu_Y = milnor_number(fg, o).value - vanishing_euler_X(fg.host, o);
  return {eu_from_polars(m), eu_from_nu(nu_Y, m.back(), fg.host.d() - 1)};
}

template <class K>
DeterminantalPresentation<K> slice_presentation(const DeterminantalPresentation<K>& P, const std::vector<Rational>& a) {
  const auto& ring = P.ring();
  const std::size_t N = ring->nvars();
  if (N == 0 || a.size() + 1 != N) throw std::invalid_argument("slice: need N-1 coefficients");
  std::vector<std::string> names(ring->names().begin(), ring->names().end() - 1);
  auto target = make_ring<K>(names, ring->field(), ring->order());
  std::vector<std::optional<Polynomial<K>>> images(N);
  images[N - 1] = linear_from(target, a);
  if (P.psi.empty()) return ambient_presentation(target);
  auto M = P.psi.map(target, [&](const Polynomial<K>& q) { return q.substitute(images, target); });
  return DeterminantalPresentation<K>{std::move(M), P.s};
}

template <class K>
NuStar nu_star_sequence(const DeterminantalPresentation<K>& P, const InvariantOptions& o, const std::vector<long>* known_m) {
  NuStar r;
  const long d = P.d();
  r.m = known_m ? *known_m : polar_multiplicities_X(P, o);
  r.nu.assign(static_cast<std::size_t>(d + 1), 0);
  r.nu[0] = r.m[0] - 1;
  if (d >= 1) r.nu[static_cast<std::size_t>(d)] = nu_from_polars(r.m);
  // intermediate slices: X ∩ H^{d-j} for 1 <= j < d
  Sampler rng(derive_seed(o.seed, salt_of("nu_star")));
  for (long j = d - 1; j >= 1; --j) {
    std::optional<long> nu_j;
    for (int attempt = 0; attempt < o.retries && !nu_j; ++attempt) {
      auto S = P;
      for (long cut = 0; cut < d - j; ++cut) S = slice_presentation(S, random_vector(rng, S.N() - 1, o.height));
      if (!S.psi.empty() && krull_dimension(S.ideal(), kLocal, o.budget) != j) continue;
      InvariantOptions so = o;
      so.seed = derive_seed(o.seed, static_cast<std::uint64_t>(100 * j + attempt));
      nu_j = vanishing_euler_X(S, so);
    }
    if (!nu_j) throw GenericityFailure("nu_star: slice of dimension " + std::to_string(j) + " lost expected dimension");
    r.nu[static_cast<std::size_t>(j)] = *nu_j;
  }
  r.bookkeeping_ok = r.nu[0] == r.m[0] - 1;
  for (long i = 1; i <= d; ++i)
    r.bookkeeping_ok = r.bookkeeping_ok && r.m[static_cast<std::size_t>(i)] ==
                                               r.nu[static_cast<std::size_t>(i)] + r.nu[static_cast<std::size_t>(i - 1)];
  return r;
}

template <class K>
InvariantReport invariant_report(const DeterminantalPresentation<K>& P, const Polynomial<K>* f, const InvariantOptions& o) {
  InvariantReport R;
  R.d = P.d();
  R.m_X = polar_multiplicities_X(P, o, &R.samples);
  R.nu_X = nu_from_polars(R.m_X);
  R.eu_X = eu_from_polars(R.m_X);
  long nu_X_alt = R.nu_X;
  if (P.s == 1 && !P.psi.empty()) {
    auto mu = icis_milnor_number(P, o);
    R.mu_X_icis = mu.value;
    R.samples.insert(R.samples.end(), mu.samples.begin(), mu.samples.end());
    nu_X_alt = mu.value;
    auto g = gaffney_md_icis(P, o);
    R.gaffney_md = g.value;
    R.samples.insert(R.samples.end(), g.samples.begin(), g.samples.end());
    if (g.value != R.m_X.back()) {
      R.cross_checks_ok = false;
      R.warnings.push_back("m_d(X) disagrees with the ICIS colength");
    }
    if (mu.value != R.nu_X) {
      R.cross_checks_ok = false;
      R.warnings.push_back("nu(X) disagrees with the ICIS Milnor number");
    }
  }
  R.eu_X_check = {R.eu_X, eu_from_nu(nu_X_alt, R.m_X.back(), R.d)};
  R.nu_star_X = nu_star_sequence(P, o, &R.m_X);
  if (!R.nu_star_X.bookkeeping_ok) R.warnings.push_back("nu* bookkeeping failed");
  if (!f) {
    R.le_greuel_ok = true;
    return R;
  }
  R.has_function = true;
  FunctionGerm<K> fg{P, *f};
  auto mu = milnor_number(fg, o);
  R.mu_f = mu.value;
  R.samples.insert(R.samples.end(), mu.samples.begin(), mu.samples.end());
  if (R.d >= 1) {
    R.m_Y = polar_multiplicities_fiber(fg, o, &R.samples);
    R.nu_Y = nu_from_polars(R.m_Y);
    R.eu_Y = R.d == 1 ? 0 : eu_from_polars(R.m_Y);
    R.eu_Y_check = {R.eu_Y, eu_from_nu(R.mu_f - R.nu_X, R.m_Y.back(), R.d - 1)};
  }
  R.le_greuel_ok = R.mu_f == R.nu_X + R.nu_Y;
  if (!R.le_greuel_ok) R.warnings.push_back("Le-Greuel identity failed");
  if (P.s == 1) {
    auto C = critical_ideal_on_deformation(P.ideal(), *f, P.codim());
    auto q = colength(C, kLocal, o.budget);
    if (q.colength) {
      R.mu_f_icis = static_cast<long>(*q.colength);
      if (*R.mu_f_icis != R.mu_f) {
        R.cross_checks_ok = false;
        R.warnings.push_back("mu(f) disagrees with the ICIS colength");
      }
    }
  }
  return R;
}

#define GERMLAB_INSTANTIATE(K)                                                                                  \
  template Invariant milnor_number(const FunctionGerm<K>&, const InvariantOptions&);                           \
  template Invariant gaffney_md_icis(const DeterminantalPresentation<K>&, const InvariantOptions&);            \
  template Invariant top_polar_X(const DeterminantalPresentation<K>&, const InvariantOptions&);                \
  template Invariant top_polar_fiber(const FunctionGerm<K>&, const InvariantOptions&);                         \
  template Invariant polar_multiplicity_X(const DeterminantalPresentation<K>&, std::size_t,                    \
                                          const InvariantOptions&);                                            \
  template Invariant polar_multiplicity_fiber(const FunctionGerm<K>&, std::size_t, const InvariantOptions&);   \
  template Invariant icis_milnor_number(const DeterminantalPresentation<K>&, const InvariantOptions&);          \
  template std::vector<long> polar_multiplicities_X(const DeterminantalPresentation<K>&,                       \
                                                    const InvariantOptions&, std::vector<GenericitySample>*);  \
  template std::vector<long> polar_multiplicities_fiber(const FunctionGerm<K>&, const InvariantOptions&,       \
                                                        std::vector<GenericitySample>*);                       \
  template long vanishing_euler_X(const DeterminantalPresentation<K>&, const InvariantOptions&);               \
  template long vanishing_euler_fiber(const FunctionGerm<K>&, const InvariantOptions&);                        \
  template EulerObstruction euler_obstruction_X(const DeterminantalPresentation<K>&, const InvariantOptions&);  \
  template EulerObstruction euler_obstruction_fiber(const FunctionGerm<K>&, const InvariantOptions&);          \
  template DeterminantalPresentation<K> slice_presentation(const DeterminantalPresentation<K>&,                \
                                                           const std::vector<Rational>&);                      \
  template NuStar nu_star_sequence(const DeterminantalPresentation<K>&, const InvariantOptions&,               \
                                   const std::vector<long>*);                                                  \
  template InvariantReport invariant_report(const DeterminantalPresentation<K>&, const Polynomial<K>*,         \
                                            const InvariantOptions&);

GERMLAB_INSTANTIATE(Rational)
GERMLAB_INSTANTIATE(ModP)

}  // namespace germlab

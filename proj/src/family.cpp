#include "germlab/family.hpp"

#include <algorithm>
#include <exception>
#include <numeric>

#include "certify.hpp"

namespace germlab {

namespace {

using namespace detail;

const MonomialOrder kLocal = MonomialOrder::local();

template <class K>
std::vector<std::size_t> x_vars(const FamilySpec<K>& F) {
  std::vector<std::size_t> v(F.N());
  std::iota(v.begin(), v.end(), 1);
  return v;
}

template <class K>
PolyList<K> family_equations(const FamilySpec<K>& F) {
  if (F.Psi.empty()) return {};
  return make_presentation(F.Psi, F.s).equations();
}

template <class K>
std::size_t family_codim(const FamilySpec<K>& F) {
  if (F.Psi.empty()) return 0;
  return (F.Psi.rows() - F.s + 1) * (F.Psi.cols() - F.s + 1);
}

/// Critical points of f_t on X_t together with the singular points of X_t, in k[t, x].
template <class K>
Ideal<K> family_critical_ideal(const FamilySpec<K>& F) {
  return critical_ideal_on_deformation(Ideal<K>(F.ring(), family_equations(F)), F.f, family_codim(F), x_vars(F));
}

template <class K>
Ideal<K> off_origin(const FamilySpec<K>& F, const Ideal<K>& I, const Budget& b) {
  PolyList<K> xs;
  for (auto i : x_vars(F)) xs.push_back(Polynomial<K>::variable(F.ring(), i));
  return saturate(I, Ideal<K>(F.ring(), xs), b);
}

struct Escape {
  long count = 0;
  bool morse = true;
};

/// Critical points leaving the origin as t moves away from 0.
template <class K>
Escape escaped_points(const FamilySpec<K>& F, const InvariantOptions& o) {
  const Budget& b = o.budget;
  auto E = saturate(off_origin(F, family_critical_ideal(F), b), Polynomial<K>::variable(F.ring(), 0), b);
  Escape out;
  if (avoids_origin(E)) {
    out.morse = true;
    return out;
  }
  auto q = colength(at_lambda_zero(E, F.base_ring()), kLocal, b);
  if (!q.colength) throw GenericityFailure("critical points of the family do not form a curve over t");
  out.count = static_cast<long>(*q.colength);
  Sampler rng(derive_seed(o.seed, 0xe5ca9e));
  std::string field, method;
  out.morse = morse_unit(E, E.gens(), x_vars(F), rng, rng.below(1ull << 30), b, field, method);
  return out;
}

std::vector<long> values_of(const InvariantReport& R, Quantity q) {
  switch (q) {
    case Quantity::m_X: return R.m_X;
    case Quantity::m_Y: return R.m_Y;
    case Quantity::mu: return {R.mu_f};
    case Quantity::nu_star: return R.nu_star_X.nu;
  }
  return {};
}

std::string show(const Rational& q) { return q.get_str(); }

template <class K>
InvariantReport report_at(const FamilySpec<K>& F, const Rational& t0, const InvariantOptions& o) {
  auto inst = instantiate_at(F, t0, o.budget);
  if (!inst.ok()) throw InvalidFamily("family degenerates at t = " + show(t0));
  return invariant_report(inst.germ.host, &inst.germ.f, o);
}

template <class K>
std::vector<InvariantReport> reports_at(const FamilySpec<K>& F, const std::vector<Rational>& ts,
                                        const InvariantOptions& o) {
  std::vector<InvariantReport> out(ts.size());
  std::vector<std::exception_ptr> err(ts.size());
  const long n = static_cast<long>(ts.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      out[i] = report_at(F, ts[i], o);
    } catch (...) {
      err[i] = std::current_exception();
    }
  }
  for (auto& e : err)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<Rational> with_zero(const std::vector<Rational>& ts) {
  std::vector<Rational> out = {Rational(0)};
  for (const auto& t : ts)
    if (t != 0) out.push_back(t);
  return out;
}

}  // namespace

std::string to_string(Quantity q) {
  switch (q) {
    case Quantity::m_X: return "m_X";
    case Quantity::m_Y: return "m_Y";
    case Quantity::mu: return "mu";
    case Quantity::nu_star: return "nu_star";
  }
  return "?";
}

template <class K>
RingPtr<K> FamilySpec<K>::base_ring() const {
  const auto& names = ring()->names();
  return make_ring<K>(std::vector<std::string>(names.begin() + 1, names.end()), ring()->field(), ring()->order());
}

template <class K>
FamilySpec<K> make_family_spec(PolyMatrix<K> Psi, std::size_t s, Polynomial<K> f) {
  if (!f.ring()) throw InvalidFamily("family function has no ring");
  if (f.ring()->nvars() < 2) throw InvalidFamily("family ring needs the parameter and at least one variable");
  FamilySpec<K> F;
  if (!Psi.empty()) {
    if (!Psi.ring()->same_as(*f.ring())) throw InvalidFamily("family matrix and function live in different rings");
    if (Psi.rows() > Psi.cols()) Psi = Psi.transposed();
    if (s < 1 || s > Psi.rows()) throw InvalidFamily("s out of range for the family matrix");
  } else if (s != 1) {
    throw InvalidFamily("s must be 1 without a family matrix");
  }
  for (const auto& t : f.terms()) {
    bool in_x = false;
    for (std::size_t i = 1; i < f.ring()->nvars(); ++i) in_x = in_x || t.m.e[i];
    if (!in_x) throw InvalidFamily("f_t(0) must vanish identically in t");
  }
  F.Psi = std::move(Psi);
  F.s = s;
  F.f = std::move(f);
  return F;
}

template <class K>
FamilySpec<K> trivial_family(const FunctionGerm<K>& fg, const std::string& t) {
  const auto& base = fg.host.ring();
  for (const auto& n : base->names())
    if (n == t) throw InvalidFamily("parameter name clashes with a variable: " + t);
  auto ring = prepend_vars(base, {t}, base->order());
  std::vector<std::size_t> map(base->nvars());
  std::iota(map.begin(), map.end(), 1);
  PolyMatrix<K> Psi;
  if (!fg.host.psi.empty())
    Psi = fg.host.psi.map(ring, [&](const Polynomial<K>& q) { return q.embed(ring, map); });
  return make_family_spec(std::move(Psi), fg.host.s, fg.f.embed(ring, map));
}

template <class K>
FamilyInstance<K> instantiate_at(const FamilySpec<K>& F, const Rational& t0, const Budget& b, const Rational& radius) {
  if (abs(t0) > radius) throw InvalidFamily("t = " + show(t0) + " lies outside the sampling disc");
  auto base = F.base_ring();
  std::vector<std::optional<Polynomial<K>>> images(F.ring()->nvars());
  images[0] = Polynomial<K>::constant(base, base->field().from_rational(t0));
  auto at = [&](const Polynomial<K>& q) { return q.substitute(images, base); };
  FamilyInstance<K> out;
  out.t = t0;
  auto host = F.Psi.empty() ? ambient_presentation(base) : make_presentation(F.Psi.map(base, at), F.s);
  out.germ = FunctionGerm<K>{host, at(F.f)};
  out.presentation = validate_presentation(host, b);
  out.function = validate_germ(out.germ, b);
  return out;
}

std::vector<Rational> default_t_samples(std::uint64_t seed, std::size_t count, long height) {
  Sampler rng(derive_seed(seed, 0x7a));
  std::vector<Rational> ts = {Rational(0)};
  for (std::size_t i = 0; i < count; ++i) {
    auto q = rng.nonzero_rational(height);
    if (i % 2 == 1) q /= 1000;
    ts.push_back(q);
  }
  return ts;
}

template <class K>
GoodnessResult goodness_check(const FamilySpec<K>& F, const std::vector<Rational>& ts, const InvariantOptions& o) {
  GoodnessResult g;
  g.good = avoids_origin(off_origin(F, family_critical_ideal(F), o.budget));
  g.t = with_zero(ts);
  g.mu_t.resize(g.t.size());
  std::vector<std::exception_ptr> err(g.t.size());
  const long n = static_cast<long>(g.t.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) {
    try {
      g.mu_t[i] = milnor_number(instantiate_at(F, g.t[i], o.budget).germ, o).value;
    } catch (...) {
      err[i] = std::current_exception();
    }
  }
  for (auto& e : err)
    if (e) std::rethrow_exception(e);
  bool mu_constant = std::all_of(g.mu_t.begin(), g.mu_t.end(), [&](long m) { return m == g.mu_t.front(); });
  g.mu_route_agrees = mu_constant == g.good;
  return g;
}

template <class K>
ConservationResult conservation_check(const FamilySpec<K>& F, const Rational& t0, const InvariantOptions& o) {
  ConservationResult c;
  c.t = t0;
  c.mu_f = milnor_number(instantiate_at(F, Rational(0), o.budget).germ, o).value;
  c.mu_at_origin = milnor_number(instantiate_at(F, t0, o.budget).germ, o).value;
  auto e = escaped_points(F, o);
  c.escaped = e.count;
  c.escaped_morse = e.morse;
  c.contributions = {c.mu_at_origin};
  if (e.morse)
    c.contributions.insert(c.contributions.end(), static_cast<std::size_t>(e.count), 1);
  else if (e.count)
    c.contributions.push_back(e.count);
  return c;
}

ConstancyResult constancy_check(const std::vector<InvariantReport>& reports, Quantity q) {
  ConstancyResult r;
  r.quantity = q;
  for (const auto& R : reports) r.values.push_back(values_of(R, q));
  r.constant = std::all_of(r.values.begin(), r.values.end(), [&](const auto& v) { return v == r.values.front(); });
  return r;
}

template <class K>
ConstancyResult constancy_check(const FamilySpec<K>& F, const std::vector<Rational>& ts, Quantity q,
                                const InvariantOptions& o) {
  return constancy_check(reports_at(F, with_zero(ts), o), q);
}

template <class K>
FamilyVerdict whitney_verdict(const FamilySpec<K>& F, const FamilyOptions& o) {
  const auto& io = o.invariants;
  FamilyVerdict V;
  V.t_samples = with_zero(o.t_samples.empty() ? default_t_samples(io.seed, o.sample_count, o.height) : o.t_samples);
  V.per_t_reports = reports_at(F, V.t_samples, io);

  auto& g = V.goodness;
  g.good = avoids_origin(off_origin(F, family_critical_ideal(F), io.budget));
  g.t = V.t_samples;
  for (const auto& R : V.per_t_reports) g.mu_t.push_back(R.mu_f);
  V.good = g.good;

  V.mu_constant = constancy_check(V.per_t_reports, Quantity::mu).constant;
  V.m_X_constant = constancy_check(V.per_t_reports, Quantity::m_X).constant;
  V.m_Y_constant = constancy_check(V.per_t_reports, Quantity::m_Y).constant;
  V.nu_star_constant = constancy_check(V.per_t_reports, Quantity::nu_star).constant;
  g.mu_route_agrees = V.mu_constant == V.good;

  Escape e;
  if (!V.good) e = escaped_points(F, io);
  const long mu_f = V.per_t_reports.front().mu_f;
  for (std::size_t i = 1; i < V.t_samples.size(); ++i) {
    ConservationResult c;
    c.t = V.t_samples[i];
    c.mu_f = mu_f;
    c.mu_at_origin = V.per_t_reports[i].mu_f;
    c.escaped = e.count;
    c.escaped_morse = e.morse;
    c.contributions = {c.mu_at_origin};
    if (e.morse)
      c.contributions.insert(c.contributions.end(), static_cast<std::size_t>(e.count), 1);
    else if (e.count)
      c.contributions.push_back(e.count);
    V.conservation.push_back(std::move(c));
  }

  V.whitney = V.good && V.m_X_constant && V.m_Y_constant;
  if (!V.good) V.failing.push_back("good");
  if (!V.m_X_constant) V.failing.push_back("m_X");
  if (!V.m_Y_constant) V.failing.push_back("m_Y");

  auto& w = V.warnings;
  if (!V.good) w.push_back("constancy evaluated on a family that is not good");
  if (!g.mu_route_agrees) w.push_back("internal consistency: goodness and mu-constancy disagree");
  if (V.m_X_constant && V.m_Y_constant && !V.mu_constant)
    w.push_back("internal consistency: constant polar multiplicities without constant mu");
  if (V.m_X_constant != V.nu_star_constant) w.push_back("internal consistency: m_X and nu* constancy disagree");
  for (const auto& c : V.conservation) {
    if (!c.ok()) w.push_back("mu is not conserved at t = " + show(c.t));
    for (long m : c.contributions)
      if (m > mu_f) w.push_back("upper semicontinuity fails at t = " + show(c.t));
  }
  for (std::size_t i = 0; i < V.per_t_reports.size(); ++i)
    for (const auto& s : V.per_t_reports[i].warnings) w.push_back("t = " + show(V.t_samples[i]) + ": " + s);
  return V;
}

#define GERMLAB_INSTANTIATE(K)                                                                                 \
  template struct FamilySpec<K>;                                                                              \
  template FamilySpec<K> make_family_spec(PolyMatrix<K>, std::size_t, Polynomial<K>);                         \
  template FamilySpec<K> trivial_family(const FunctionGerm<K>&, const std::string&);                          \
  template FamilyInstance<K> instantiate_at(const FamilySpec<K>&, const Rational&, const Budget&,             \
                                            const Rational&);                                                 \
  template GoodnessResult goodness_check(const FamilySpec<K>&, const std::vector<Rational>&,                  \
                                         const InvariantOptions&);                                            \
  template ConservationResult conservation_check(const FamilySpec<K>&, const Rational&,                       \
                                                 const InvariantOptions&);                                    \
  template ConstancyResult constancy_check(const FamilySpec<K>&, const std::vector<Rational>&, Quantity,       \
                                           const InvariantOptions&);                                          \
  template FamilyVerdict whitney_verdict(const FamilySpec<K>&, const FamilyOptions&);

GERMLAB_INSTANTIATE(Rational)
GERMLAB_INSTANTIATE(ModP)

}  // namespace germlab

#include "germlab/stdbasis.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace germlab {

namespace {

template <class K>
K ratio(const K& a, const K& b) {
  return K(a * inverse(b));
}

template <class K>
Polynomial<K> reduce_step(const Polynomial<K>& h, const Polynomial<K>& g) {
  return h.minus_multiple(ratio(h.lc(), g.lc()), quotient(h.lm(), g.lm()), g);
}

// Over Q: fraction-free step lc(g) h - lc(h) m g on integer polynomials.
template <>
Polynomial<Rational> reduce_step(const Polynomial<Rational>& h, const Polynomial<Rational>& g) {
  return h.scaled(g.lc()).minus_multiple(h.lc(), quotient(h.lm(), g.lm()), g);
}

/// Scale to a canonical representative: monic over GF(p), primitive integer
/// polynomial with positive leading coefficient over Q.
template <class K>
Polynomial<K> normalized(const Polynomial<K>& h) {
  return h.monic();
}

template <>
Polynomial<Rational> normalized(const Polynomial<Rational>& h) {
  if (h.is_zero()) return h;
  mpz_class den = 1, num = 0;
  for (const auto& t : h.terms()) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), t.c.get_num_mpz_t());
  }
  Rational f(den, num);
  f.canonicalize();
  if (sgn(h.lc()) < 0) f = -f;
  if (f == 1) return h;
  return h.scaled(f);
}

// Cancels term `t` of p using g (lm(g) | t.m); terms of p above t are kept
// (over Q they are scaled by lc(g)).
template <class K>
Polynomial<K> cancel_term(const Polynomial<K>& p, const Term<K>& t, const Polynomial<K>& g) {
  return p.minus_multiple(ratio(t.c, g.lc()), quotient(t.m, g.lm()), g);
}

template <>
Polynomial<Rational> cancel_term(const Polynomial<Rational>& p, const Term<Rational>& t, const Polynomial<Rational>& g) {
  return p.scaled(g.lc()).minus_multiple(t.c, quotient(t.m, g.lm()), g);
}

/// Full reduction with respect to a global order.
template <class K>
Polynomial<K> nf_global(Polynomial<K> p, const std::vector<const Polynomial<K>*>& reducers) {
  std::size_t pos = 0;
  while (pos < p.size()) {
    const Term<K> t = p.terms()[pos];
    const Polynomial<K>* best = nullptr;
    for (auto* g : reducers)
      if (divides(g->lm(), t.m) && (!best || g->size() < best->size())) best = g;
    if (best)
      p = normalized(cancel_term(p, t, *best));
    else
      ++pos;
  }
  return p;
}

constexpr std::uint32_t kNoCorner = ~std::uint32_t(0);

/// Drops non-leading terms of degree >= corner.
template <class K>
Polynomial<K> truncated(const Polynomial<K>& h, std::uint32_t corner) {
  if (corner == kNoCorner || h.size() < 2 || h.terms().back().m.deg < corner) return h;
  std::vector<Term<K>> ts;
  ts.push_back(h.terms().front());
  for (std::size_t i = 1; i < h.size(); ++i)
    if (h.terms()[i].m.deg < corner) ts.push_back(h.terms()[i]);
  return Polynomial<K>::from_sorted(h.ring(), std::move(ts));
}

/// Mora's normal form: leading-term reduction choosing the reducer of least
/// ecart, with intermediate results joining the reducer set. Once the
/// reducers' leading ideal contains every monomial of degree >= corner, such
/// monomials lie in the local ideal and are discarded.
template <class K>
Polynomial<K> nf_mora(Polynomial<K> h, const std::vector<const Polynomial<K>*>& reducers,
                      std::uint32_t corner = kNoCorner) {
  std::vector<Polynomial<K>> extra;
  std::vector<std::uint32_t> ecarts;
  ecarts.reserve(reducers.size());
  for (auto* g : reducers) ecarts.push_back(g->ecart());
  std::vector<std::uint32_t> extra_ecarts;
  h = truncated(h, corner);
  while (!h.is_zero()) {
    if (h.lm().deg >= corner) return Polynomial<K>(h.ring());
    const Polynomial<K>* best = nullptr;
    std::uint32_t best_e = 0;
    for (std::size_t i = 0; i < reducers.size(); ++i)
      if (divides(reducers[i]->lm(), h.lm()) && (!best || ecarts[i] < best_e)) {
        best = reducers[i];
        best_e = ecarts[i];
      }
    for (std::size_t i = 0; i < extra.size(); ++i)
      if (divides(extra[i].lm(), h.lm()) && (!best || extra_ecarts[i] < best_e)) {
        best = &extra[i];
        best_e = extra_ecarts[i];
      }
    if (!best) break;
    auto eh = h.ecart();
    if (best_e > eh) {
      // copy before `extra` may reallocate under `best`
      Polynomial<K> g = *best;
      extra.push_back(h);
      extra_ecarts.push_back(eh);
      h = truncated(normalized(reduce_step(h, g)), corner);
    } else {
      h = truncated(normalized(reduce_step(h, *best)), corner);
    }
  }
  return h;
}

template <class K>
Polynomial<K> nf_dispatch(const Polynomial<K>& f, const std::vector<const Polynomial<K>*>& reducers,
                          std::uint32_t corner = kNoCorner) {
  if (f.ring()->order().is_global()) return nf_global(f, reducers);
  return nf_mora(f, reducers, corner);
}

template <class K>
class Engine {
 public:
  Engine(RingPtr<K> ring, const Budget& budget) : ring_(std::move(ring)), budget_(budget) {}

  void insert(Polynomial<K> h, std::uint32_t sugar) {
    h = normalized(h);
    if (h.total_degree() > budget_.max_degree)
      throw BudgetExceeded("standard basis element of degree " + std::to_string(h.total_degree()) +
                           " exceeds max_degree " + std::to_string(budget_.max_degree));
    const std::size_t idx = polys_.size();
    polys_.push_back(std::move(h));
    sugar_.push_back(sugar);
    active_.push_back(true);
    const Monomial& lh = polys_[idx].lm();

    // Gebauer–Möller update
    std::vector<Pair> C;
    for (std::size_t g = 0; g < idx; ++g)
      if (active_[g]) C.push_back(make_pair(g, idx));
    std::vector<Pair> D;
    for (std::size_t a = 0; a < C.size(); ++a) {
      const Pair& p = C[a];
      bool keep = coprime(lh, polys_[p.i].lm());
      if (!keep) {
        keep = true;
        for (std::size_t b = a + 1; b < C.size() && keep; ++b)
          if (divides(C[b].lcm, p.lcm)) keep = false;
        for (const auto& q : D)
          if (keep && divides(q.lcm, p.lcm)) keep = false;
      }
      if (keep) D.push_back(p);
    }
    std::vector<Pair> B;
    B.reserve(pairs_.size() + D.size());
    for (auto& p : pairs_) {
      bool drop = divides(lh, p.lcm) && !(lcm(polys_[p.i].lm(), lh) == p.lcm) && !(lcm(polys_[p.j].lm(), lh) == p.lcm);
      if (!drop) B.push_back(std::move(p));
    }
    for (auto& p : D)
      if (!coprime(lh, polys_[p.i].lm())) B.push_back(std::move(p));
    pairs_ = std::move(B);
    for (std::size_t g = 0; g < idx; ++g)
      if (active_[g] && divides(lh, polys_[g].lm())) active_[g] = false;
    if (!ring_->order().is_global()) update_corner();
  }

  void run() {
    std::size_t processed = 0;
    while (!pairs_.empty()) {
      if (++processed > budget_.max_spairs)
        throw BudgetExceeded("S-pair budget of " + std::to_string(budget_.max_spairs) + " exhausted");
      auto it = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
        return std::tie(a.sugar, a.lcm.deg, a.i, a.j) < std::tie(b.sugar, b.lcm.deg, b.i, b.j);
      });
      Pair p = *it;
      pairs_.erase(it);
      const auto& f = polys_[p.i];
      const auto& g = polys_[p.j];
      auto s = normalized(f.shifted(quotient(p.lcm, f.lm())).scaled(g.lc()).minus_multiple(f.lc(), quotient(p.lcm, g.lm()), g));
      auto h = nf_dispatch(s, reducers(), corner_);
      if (!h.is_zero()) {
        if (h.lm().is_one()) {
          pairs_.clear();
          insert(h, p.sugar);
          return;
        }
        insert(h, p.sugar);
      }
    }
  }

  PolyList<K> result() const {
    PolyList<K> out;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) out.push_back(polys_[i].monic());
    // minimal: drop elements whose leading monomial another one divides
    std::sort(out.begin(), out.end(), [&](const auto& a, const auto& b) { return ring_->order().compare(a.lm(), b.lm()) < 0; });
    PolyList<K> minimal;
    for (auto& f : out) {
      bool redundant = false;
      for (const auto& g : minimal)
        if (divides(g.lm(), f.lm())) redundant = true;
      if (!redundant) minimal.push_back(std::move(f));
    }
    if (ring_->order().is_global()) {
      // tail reduction
      for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<const Polynomial<K>*> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
          if (j != i) others.push_back(&minimal[j]);
        minimal[i] = nf_global(minimal[i], others).monic();
      }
    }
    return minimal;
  }

 private:
  struct Pair {
    std::size_t i, j;
    Monomial lcm;
    std::uint32_t sugar;
  };

  Pair make_pair(std::size_t i, std::size_t j) const {
    Monomial l = lcm(polys_[i].lm(), polys_[j].lm());
    std::uint32_t s = std::max(sugar_[i] + (l.deg - polys_[i].lm().deg), sugar_[j] + (l.deg - polys_[j].lm().deg));
    return {i, j, l, s};
  }

  // Local orders: with pure powers x_i^a_i among the leading monomials, every
  // monomial of degree >= sum(a_i - 1) + 1 is a leading monomial.
  void update_corner() {
    const std::size_t n = ring_->nvars();
    std::vector<std::uint32_t> power(n, 0);
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (!active_[g]) continue;
      const Monomial& m = polys_[g].lm();
      for (std::size_t i = 0; i < n; ++i)
        if (m.e[i] && m.e[i] == m.deg && (!power[i] || m.e[i] < power[i])) power[i] = m.e[i];
    }
    std::uint32_t c = 1;
    for (auto a : power) {
      if (!a) return;
      c += a - 1;
    }
    if (c >= corner_) return;
    corner_ = c;
    for (std::size_t g = 0; g < polys_.size(); ++g)
      if (active_[g]) polys_[g] = truncated(polys_[g], corner_);
  }

  std::vector<const Polynomial<K>*> reducers() const {
    std::vector<const Polynomial<K>*> r;
    for (std::size_t i = 0; i < polys_.size(); ++i)
      if (active_[i]) r.push_back(&polys_[i]);
    return r;
  }

  RingPtr<K> ring_;
  Budget budget_;
  std::vector<Polynomial<K>> polys_;
  std::vector<std::uint32_t> sugar_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  std::uint32_t corner_ = kNoCorner;
};

std::uint32_t support_mask(const Monomial& m, std::size_t n) {
  std::uint32_t s = 0;
  for (std::size_t i = 0; i < n; ++i)
    if (m.e[i]) s |= 1u << i;
  return s;
}

using HPoly = std::vector<long long>;  // coefficients of t^0, t^1, ...

HPoly hsub(HPoly a, const HPoly& b, std::uint32_t shift) {
  if (a.size() < b.size() + shift) a.resize(b.size() + shift, 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= b[i];
  return a;
}

HPoly hilbert_numerator(std::vector<Monomial> gens) {
  gens = minimalize(std::move(gens));
  if (gens.empty()) return {1};
  bool pairwise_coprime = true;
  for (std::size_t i = 0; i < gens.size() && pairwise_coprime; ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!coprime(gens[i], gens[j])) {
        pairwise_coprime = false;
        break;
      }
  if (pairwise_coprime) {
    HPoly r{1};
    for (const auto& g : gens) r = hsub(r, r, g.deg);
    return r;
  }
  Monomial m = gens.back();
  gens.pop_back();
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  for (const auto& g : gens) {
    Monomial q;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      q.e[i] = g.e[i] > m.e[i] ? static_cast<std::uint16_t>(g.e[i] - m.e[i]) : 0;
      q.deg += q.e[i];
    }
    colon.push_back(q);
  }
  return hsub(hilbert_numerator(gens), hilbert_numerator(std::move(colon)), m.deg);
}

}  // namespace

std::vector<Monomial> minimalize(std::vector<Monomial> ms) {
  std::sort(ms.begin(), ms.end(), [](const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg;
    return a.e < b.e;
  });
  std::vector<Monomial> out;
  for (const auto& m : ms) {
    bool redundant = false;
    for (const auto& g : out)
      if (divides(g, m)) {
        redundant = true;
        break;
      }
    if (!redundant) out.push_back(m);
  }
  return out;
}

int monomial_dimension(const std::vector<Monomial>& lead, std::size_t n) {
  for (const auto& m : lead)
    if (m.is_one()) return -1;
  std::vector<std::uint32_t> supports;
  for (const auto& m : lead) supports.push_back(support_mask(m, n));
  int best = 0;
  for (std::uint32_t S = 0; S < (1u << n); ++S) {
    int size = std::popcount(S);
    if (size <= best) continue;
    bool independent = true;
    for (auto s : supports)
      if ((s & ~S) == 0) {
        independent = false;
        break;
      }
    if (independent) best = size;
  }
  return best;
}

QuotientInfo monomial_quotient(const std::vector<Monomial>& lead_in, std::size_t n, std::size_t keep) {
  QuotientInfo q;
  auto lead = minimalize(lead_in);
  q.dimension = monomial_dimension(lead, n);
  if (q.dimension == -1) {
    q.colength = 0;
    return q;
  }
  if (q.dimension > 0) return q;
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& m : lead)
    for (std::size_t i = 0; i < n; ++i)
      if (m.e[i] && m.e[i] == m.deg) bound[i] = bound[i] ? std::min<std::uint32_t>(bound[i], m.e[i]) : m.e[i];
  std::uint64_t count = 0;
  Monomial cur;
  std::function<void(std::size_t)> walk = [&](std::size_t i) {
    if (i == n) {
      ++count;
      if (q.staircase.size() < keep) q.staircase.push_back(cur);
      return;
    }
    for (std::uint32_t e = 0; e < bound[i]; ++e) {
      cur.e[i] = static_cast<std::uint16_t>(e);
      cur.deg += e;
      bool inside = false;
      for (const auto& m : lead)
        if (divides(m, cur)) {
          inside = true;
          break;
        }
      if (!inside) walk(i + 1);
      cur.deg -= e;
      cur.e[i] = 0;
      if (inside) break;  // larger exponents stay inside
    }
  };
  walk(0);
  q.colength = count;
  if (q.staircase.size() < count) q.staircase.clear();
  return q;
}

std::uint64_t monomial_degree(const std::vector<Monomial>& lead, std::size_t n) {
  int d = monomial_dimension(lead, n);
  if (d < 0) return 0;
  HPoly N = hilbert_numerator(lead);
  for (std::size_t k = 0; k < n - static_cast<std::size_t>(d); ++k) {
    // N(t) = (1 - t) Q(t): q_i = sum_{j<=i} n_j
    HPoly Q(N.size() > 1 ? N.size() - 1 : 1, 0);
    long long acc = 0;
    for (std::size_t i = 0; i + 1 < N.size(); ++i) {
      acc += N[i];
      Q[i] = acc;
    }
    N = std::move(Q);
  }
  long long s = std::accumulate(N.begin(), N.end(), 0LL);
  return static_cast<std::uint64_t>(s);
}

template <class K>
PolyList<K> standard_basis(const PolyList<K>& gens, const RingPtr<K>& ring, const Budget& budget) {
  Engine<K> eng(ring, budget);
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    auto h = g.in_ring(ring);
    eng.insert(h, h.total_degree());
  }
  eng.run();
  return eng.result();
}

template <class K>
Polynomial<K> normal_form(const Polynomial<K>& f, const PolyList<K>& basis) {
  if (basis.empty()) return f;
  auto h = f.in_ring(basis.front().ring());
  std::vector<const Polynomial<K>*> r;
  for (const auto& g : basis) r.push_back(&g);
  return nf_dispatch(h, r);
}

template <class K>
PolyList<K> normal_forms_serial(const PolyList<K>& fs, const PolyList<K>& basis) {
  PolyList<K> out;
  out.reserve(fs.size());
  for (const auto& f : fs) out.push_back(normal_form(f, basis));
  return out;
}

template <class K>
PolyList<K> normal_forms_parallel(const PolyList<K>& fs, const PolyList<K>& basis) {
  PolyList<K> out(fs.size());
  const long n = static_cast<long>(fs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < n; ++i) out[i] = normal_form(fs[i], basis);
  return out;
}

template <class K>
Ideal<K>::Ideal(RingPtr<K> ring, PolyList<K> gens) : ring_(std::move(ring)) {
  for (auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.ring()->compatible(*ring_)) throw RingMismatch("ideal generator from another ring");
    gens_.push_back(g.in_ring(ring_));
  }
}

template <class K>
const PolyList<K>& Ideal<K>::basis(MonomialOrder order, const Budget& budget) const {
  std::lock_guard<std::mutex> lock(cache_->mu);
  auto key = std::make_pair(static_cast<int>(order.kind), order.block);
  auto it = cache_->bases.find(key);
  if (it == cache_->bases.end()) {
    auto r = with_order(ring_, order);
    auto b = std::make_shared<const PolyList<K>>(standard_basis(gens_, r, budget));
    it = cache_->bases.emplace(key, std::move(b)).first;
  }
  return *it->second;
}

template <class K>
std::vector<Monomial> Ideal<K>::leading_monomials(MonomialOrder order, const Budget& b) const {
  std::vector<Monomial> out;
  for (const auto& g : basis(order, b)) out.push_back(g.lm());
  return out;
}

template <class K>
bool Ideal<K>::is_unit(MonomialOrder order, const Budget& b) const {
  for (const auto& g : basis(order, b))
    if (g.lm().is_one()) return true;
  return false;
}

template <class K>
bool Ideal<K>::contains(const Polynomial<K>& f, MonomialOrder order, const Budget& b) const {
  const auto& B = basis(order, b);
  if (B.empty()) return f.is_zero();
  return normal_form(f, B).is_zero();
}

template <class K>
Ideal<K> Ideal<K>::operator+(const Ideal& o) const {
  return plus(o.gens_);
}

template <class K>
Ideal<K> Ideal<K>::plus(const PolyList<K>& more) const {
  PolyList<K> g = gens_;
  g.insert(g.end(), more.begin(), more.end());
  return Ideal(ring_, std::move(g));
}

template <class K>
Ideal<K> Ideal<K>::from_basis(MonomialOrder order, const Budget& b) const {
  return Ideal(ring_, basis(order, b));
}

namespace {

std::vector<Monomial> monomials_of_degree(std::size_t n, std::uint32_t k) {
  std::vector<Monomial> out;
  Monomial cur;
  std::function<void(std::size_t, std::uint32_t)> fill = [&](std::size_t i, std::uint32_t left) {
    if (i + 1 == n) {
      cur.e[i] = static_cast<std::uint16_t>(left);
      cur.deg = k;
      out.push_back(cur);
      cur.e[i] = 0;
      return;
    }
    for (std::uint32_t e = 0; e <= left; ++e) {
      cur.e[i] = static_cast<std::uint16_t>(e);
      fill(i + 1, left - e);
    }
    cur.e[i] = 0;
  };
  fill(0, k);
  return out;
}

constexpr std::size_t kMaxPowerGens = 1500;

}  // namespace

template <class K>
std::optional<QuotientInfo> local_colength_by_powers(const Ideal<K>& I, const Budget& b, std::uint32_t max_k) {
  const std::size_t n = I.ring()->nvars();
  auto ring = with_order(I.ring(), MonomialOrder::degrevlex());
  for (const auto& g : I.gens())
    if (!is_zero(g.constant_term())) return monomial_quotient({Monomial{}}, n);
  auto at = [&](std::uint32_t k) {
    PolyList<K> gens;
    for (const auto& g : I.gens()) {
      std::vector<Term<K>> ts;
      for (const auto& t : g.terms())
        if (t.m.deg < k) ts.push_back(t);
      gens.push_back(Polynomial<K>::from_terms(ring, std::move(ts)));
    }
    for (const auto& m : monomials_of_degree(n, k)) gens.push_back(Polynomial<K>::term(ring, m, ring->field().one()));
    std::vector<Monomial> lead;
    for (const auto& g : standard_basis(gens, ring, b)) lead.push_back(g.lm());
    return monomial_quotient(lead, n);
  };
  for (std::uint32_t k : {2u, 3u, 4u, 6u, 8u, 12u, 16u, 24u, 32u}) {
    if (k > max_k || k + 1 > b.max_degree || monomials_of_degree(n, k + 1).size() > kMaxPowerGens) break;
    auto lo = at(k), hi = at(k + 1);
    if (lo.colength == hi.colength) return hi;
  }
  return std::nullopt;
}

template <class K>
QuotientInfo colength(const Ideal<K>& I, MonomialOrder order, const Budget& b) {
  if (!order.is_global() && I.ring()->nvars() > 0)
    if (auto q = local_colength_by_powers(I, b)) return *q;
  return monomial_quotient(I.leading_monomials(order, b), I.ring()->nvars());
}

template <class K>
int krull_dimension(const Ideal<K>& I, MonomialOrder order, const Budget& b) {
  return monomial_dimension(I.leading_monomials(order, b), I.ring()->nvars());
}

template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<std::string>& vars, const Budget& b) {
  const auto& base = I.ring();
  std::vector<std::string> names = vars;
  for (const auto& v : vars) base->require_index(v);
  for (const auto& nm : base->names())
    if (std::find(vars.begin(), vars.end(), nm) == vars.end()) names.push_back(nm);
  auto er = make_ring<K>(names, base->field(), MonomialOrder::elimination(vars.size()));
  PolyList<K> gens;
  for (const auto& g : I.gens()) gens.push_back(g.embed(er));
  auto G = standard_basis(gens, er, b);
  PolyList<K> kept;
  for (const auto& g : G) {
    bool free = true;
    for (std::size_t i = 0; i < vars.size() && free; ++i) free = !g.uses_var(i);
    if (free) kept.push_back(g.embed(base));
  }
  return Ideal<K>(base, std::move(kept));
}

namespace {

// Embeds `g` into `target` whose names are `prefix` followed by g's ring names.
template <class K>
Polynomial<K> shift_into(const Polynomial<K>& g, const RingPtr<K>& target, std::size_t prefix) {
  std::vector<std::size_t> map(g.ring()->nvars());
  std::iota(map.begin(), map.end(), prefix);
  return g.embed(target, map);
}

template <class K>
Ideal<K> pull_back(const PolyList<K>& G, const RingPtr<K>& base, std::size_t prefix) {
  PolyList<K> kept;
  std::vector<std::size_t> map(prefix + base->nvars(), 0);
  for (std::size_t i = 0; i < base->nvars(); ++i) map[prefix + i] = i;
  for (const auto& g : G) {
    bool free = true;
    for (std::size_t i = 0; i < prefix && free; ++i) free = !g.uses_var(i);
    if (free) kept.push_back(g.embed(base, map));
  }
  return Ideal<K>(base, std::move(kept));
}

}  // namespace

template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Polynomial<K>& g, const Budget& b) {
  const auto& base = I.ring();
  if (g.is_zero()) return Ideal<K>(base, {Polynomial<K>::constant(base, 1)});
  if (g.is_constant()) return I;
  auto er = prepend_vars(base, {"_sat"}, MonomialOrder::elimination(1));
  PolyList<K> gens;
  for (const auto& f : I.gens()) gens.push_back(shift_into(f, er, 1));
  auto u = Polynomial<K>::variable(er, 0);
  gens.push_back(Polynomial<K>::constant(er, 1) - u * shift_into(g, er, 1));
  return pull_back(standard_basis(gens, er, b), base, 1);
}

template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J, const Budget& b) {
  const auto& base = I.ring();
  auto er = prepend_vars(base, {"_int"}, MonomialOrder::elimination(1));
  auto t = Polynomial<K>::variable(er, 0);
  auto one = Polynomial<K>::constant(er, 1);
  PolyList<K> gens;
  for (const auto& f : I.gens()) gens.push_back(t * shift_into(f, er, 1));
  for (const auto& f : J.gens()) gens.push_back((one - t) * shift_into(f, er, 1));
  return pull_back(standard_basis(gens, er, b), base, 1);
}

template <class K>
Ideal<K> saturate(const Ideal<K>& I, const Ideal<K>& J, const Budget& b) {
  if (J.gens().empty()) return Ideal<K>(I.ring(), {Polynomial<K>::constant(I.ring(), 1)});
  std::optional<Ideal<K>> acc;
  for (const auto& g : J.gens()) {
    auto s = saturate(I, g, b);
    acc = acc ? intersect(*acc, s, b) : s;
  }
  return *acc;
}

template <class K>
std::uint64_t tangent_cone_degree(const Ideal<K>& I, const Budget& b) {
  return monomial_degree(I.leading_monomials(MonomialOrder::local(), b), I.ring()->nvars());
}

template <class K>
MultiplicityResult multiplicity_m0(const Ideal<K>& I, std::uint64_t seed, const Budget& b, int retries) {
  MultiplicityResult r;
  r.dimension = krull_dimension(I, MonomialOrder::local(), b);
  if (r.dimension < 0) {
    r.slices_agree = r.matches_tangent_cone = true;
    return r;
  }
  const std::uint64_t tc = tangent_cone_degree(I, b);
  for (int attempt = 0; attempt < retries; ++attempt) {
    r.slice_values.clear();
    r.seeds.clear();
    for (int k = 0; k < 2; ++k) {
      std::uint64_t s = derive_seed(seed, 2 * attempt + k);
      Sampler rng(s);
      PolyList<K> forms;
      for (int j = 0; j < r.dimension; ++j) forms.push_back(random_linear_form(I.ring(), rng, 100));
      auto q = colength(I.plus(forms), MonomialOrder::local(), b);
      r.seeds.push_back(s);
      r.slice_values.push_back(q.colength ? *q.colength : ~std::uint64_t(0));
    }
    if (r.slice_values[0] == r.slice_values[1] && r.slice_values[0] != ~std::uint64_t(0)) {
      r.slices_agree = true;
      r.matches_tangent_cone = r.slice_values[0] == tc;
      r.value = tc;
      return r;
    }
  }
  throw GenericityFailure("multiplicity_m0: slices disagree after " + std::to_string(retries) + " attempts");
}

#define GERMLAB_INSTANTIATE(K)                                                                         \
  template PolyList<K> standard_basis(const PolyList<K>&, const RingPtr<K>&, const Budget&);          \
  template Polynomial<K> normal_form(const Polynomial<K>&, const PolyList<K>&);                        \
  template PolyList<K> normal_forms_serial(const PolyList<K>&, const PolyList<K>&);                    \
  template PolyList<K> normal_forms_parallel(const PolyList<K>&, const PolyList<K>&);                  \
  template class Ideal<K>;                                                                             \
  template QuotientInfo colength(const Ideal<K>&, MonomialOrder, const Budget&);                       \
  template std::optional<QuotientInfo> local_colength_by_powers(const Ideal<K>&, const Budget&,        \
                                                                std::uint32_t);                        \
  template int krull_dimension(const Ideal<K>&, MonomialOrder, const Budget&);                         \
  template Ideal<K> eliminate(const Ideal<K>&, const std::vector<std::string>&, const Budget&);        \
  template Ideal<K> saturate(const Ideal<K>&, const Polynomial<K>&, const Budget&);                    \
  template Ideal<K> saturate(const Ideal<K>&, const Ideal<K>&, const Budget&);                         \
  template Ideal<K> intersect(const Ideal<K>&, const Ideal<K>&, const Budget&);                        \
  template std::uint64_t tangent_cone_degree(const Ideal<K>&, const Budget&);                          \
  template MultiplicityResult multiplicity_m0(const Ideal<K>&, std::uint64_t, const Budget&, int);

GERMLAB_INSTANTIATE(Rational)
GERMLAB_INSTANTIATE(ModP)

}  // namespace germlab

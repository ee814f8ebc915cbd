#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "germlab/ring.hpp"

namespace germlab {

template <class K>
struct Term {
  Monomial m;
  K c;
};

/// Sparse polynomial. Terms are kept sorted descending in the ring's order,
/// so the leading term is terms().front(). No stored coefficient is zero.
template <class K>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(RingPtr<K> ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr<K> ring, const K& c) {
    Polynomial p(std::move(ring));
    if (!::germlab::is_zero(c)) p.terms_.push_back({Monomial{}, c});
    return p;
  }
  static Polynomial constant(RingPtr<K> ring, long c) {
    auto k = ring->field().from_int(c);
    return constant(std::move(ring), k);
  }
  static Polynomial variable(RingPtr<K> ring, std::size_t i) {
    Polynomial p(ring);
    p.terms_.push_back({Monomial::var(i), ring->field().one()});
    return p;
  }
  static Polynomial variable(RingPtr<K> ring, const std::string& name) {
    auto i = ring->require_index(name);
    return variable(std::move(ring), i);
  }
  static Polynomial term(RingPtr<K> ring, const Monomial& m, const K& c) {
    Polynomial p(std::move(ring));
    if (!::germlab::is_zero(c)) p.terms_.push_back({m, c});
    return p;
  }
  /// Builds from arbitrary (monomial, coefficient) pairs: sums duplicates, drops zeros, sorts.
  static Polynomial from_terms(RingPtr<K> ring, std::vector<Term<K>> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  /// Terms already sorted descending in ring's order, no zeros, no duplicates.
  static Polynomial from_sorted(RingPtr<K> ring, std::vector<Term<K>> terms) {
    Polynomial p(std::move(ring));
    p.terms_ = std::move(terms);
    return p;
  }

  Polynomial drop_lead() const {
    Polynomial p(ring_);
    p.terms_.assign(terms_.begin() + 1, terms_.end());
    return p;
  }

  const RingPtr<K>& ring() const { return ring_; }
  const std::vector<Term<K>>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].m.is_one()); }

  const Term<K>& lead() const { return terms_.front(); }
  const Monomial& lm() const { return terms_.front().m; }
  const K& lc() const { return terms_.front().c; }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (const auto& t : terms_) d = std::max(d, t.m.deg);
    return d;
  }
  std::uint32_t low_degree() const {
    std::uint32_t d = ~0u;
    for (const auto& t : terms_) d = std::min(d, t.m.deg);
    return terms_.empty() ? 0 : d;
  }
  /// deg(f) - deg(LM(f)); nonnegative for local degree orders.
  std::uint32_t ecart() const { return terms_.empty() ? 0 : total_degree() - lm().deg; }

  K constant_term() const {
    for (const auto& t : terms_)
      if (t.m.is_one()) return t.c;
    return ring_->field().zero();
  }

  bool uses_var(std::size_t i) const {
    for (const auto& t : terms_)
      if (t.m.e[i]) return true;
    return false;
  }

  /// Re-sorts the terms under another ring with the same variables and field.
  Polynomial in_ring(const RingPtr<K>& other) const {
    if (!ring_->compatible(*other)) throw RingMismatch("in_ring: incompatible rings");
    Polynomial p(other);
    p.terms_ = terms_;
    p.sort_terms();
    return p;
  }

  Polynomial monic() const {
    if (is_zero() || is_one(lc())) return *this;
    return scaled(inverse(lc()));
  }

  Polynomial scaled(const K& c) const {
    Polynomial p(ring_);
    if (::germlab::is_zero(c)) return p;
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.m, t.c * c});
    return p;
  }

  Polynomial shifted(const Monomial& m) const {
    Polynomial p(ring_);
    p.terms_.reserve(terms_.size());
    for (const auto& t : terms_) p.terms_.push_back({t.m * m, t.c});
    return p;
  }

  Polynomial operator-() const { return scaled(-ring_->field().one()); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }
  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    check_same(a, b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.ring_);
    if (b.size() == 1) return a.scaled(b.lc()).shifted(b.lm());
    if (a.size() == 1) return b.scaled(a.lc()).shifted(a.lm());
    std::unordered_map<Monomial, K, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : a.terms_)
      for (const auto& t : b.terms_) {
        auto m = s.m * t.m;
        auto it = acc.find(m);
        if (it == acc.end())
          acc.emplace(m, s.c * t.c);
        else
          it->second += s.c * t.c;
      }
    Polynomial p(a.ring_);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc)
      if (!::germlab::is_zero(c)) p.terms_.push_back({m, std::move(c)});
    p.sort_terms();
    return p;
  }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  Polynomial pow(unsigned e) const {
    Polynomial r = constant(ring_, ring_->field().one());
    Polynomial base = *this;
    while (e) {
      if (e & 1) r = r * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return r;
  }

  /// this - c * m * g, the basic reduction step.
  Polynomial minus_multiple(const K& c, const Monomial& m, const Polynomial& g) const {
    check_same(*this, g);
    Polynomial r(ring_);
    r.terms_.reserve(terms_.size() + g.size());
    const auto& ord = ring_->order();
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < g.terms_.size()) {
      if (j == g.terms_.size()) {
        r.terms_.push_back(terms_[i++]);
        continue;
      }
      Monomial gm = g.terms_[j].m * m;
      int cmp = i == terms_.size() ? -1 : ord.compare(terms_[i].m, gm);
      if (cmp > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back({gm, -(c * g.terms_[j].c)});
        ++j;
      } else {
        K v = terms_[i].c - c * g.terms_[j].c;
        if (!::germlab::is_zero(v)) r.terms_.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].m == b.terms_[i].m) || !(a.terms_[i].c == b.terms_[i].c)) return false;
    return true;
  }

  /// Formal partial derivative with respect to variable i.
  Polynomial derivative(std::size_t i) const {
    std::vector<Term<K>> out;
    for (const auto& t : terms_) {
      if (!t.m.e[i]) continue;
      Monomial m = t.m;
      auto k = ring_->field().from_int(m.e[i]);
      --m.e[i];
      --m.deg;
      out.push_back({m, t.c * k});
    }
    return from_terms(ring_, std::move(out));
  }
  Polynomial derivative(const std::string& var) const { return derivative(ring_->require_index(var)); }

  /// Simultaneous substitution x_i -> images[i] (nullopt keeps x_i), result in `target`.
  /// Variables kept unchanged are mapped by name into the target ring.
  Polynomial substitute(const std::vector<std::optional<Polynomial>>& images, const RingPtr<K>& target) const;

  /// Maps this polynomial into `target` renaming variable i to target variable map[i].
  Polynomial embed(const RingPtr<K>& target, const std::vector<std::size_t>& map) const {
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
      Monomial m;
      for (std::size_t i = 0; i < ring_->nvars(); ++i)
        if (t.m.e[i]) {
          m.e[map[i]] = static_cast<std::uint16_t>(m.e[map[i]] + t.m.e[i]);
        }
      m.deg = t.m.deg;
      out.push_back({m, t.c});
    }
    return from_terms(target, std::move(out));
  }
  /// Embeds by variable name; every variable of this ring must exist in target.
  Polynomial embed(const RingPtr<K>& target) const {
    std::vector<std::size_t> map(ring_->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i) map[i] = target->require_index(ring_->names()[i]);
    return embed(target, map);
  }

  std::string to_string() const;

 private:
  static void check_same(const Polynomial& a, const Polynomial& b) {
    if (a.ring_ != b.ring_ && !a.ring_->same_as(*b.ring_)) throw RingMismatch("polynomials live in different rings");
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    check_same(a, b);
    Polynomial r(a.ring_);
    r.terms_.reserve(a.size() + b.size());
    const auto& ord = a.ring_->order();
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int cmp = i == a.terms_.size() ? -1 : j == b.terms_.size() ? 1 : ord.compare(a.terms_[i].m, b.terms_[j].m);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.push_back(subtract ? Term<K>{b.terms_[j].m, -b.terms_[j].c} : b.terms_[j]);
        ++j;
      } else {
        K v = subtract ? K(a.terms_[i].c - b.terms_[j].c) : K(a.terms_[i].c + b.terms_[j].c);
        if (!::germlab::is_zero(v)) r.terms_.push_back({a.terms_[i].m, std::move(v)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  void sort_terms() {
    const auto& ord = ring_->order();
    std::sort(terms_.begin(), terms_.end(), [&](const Term<K>& x, const Term<K>& y) { return ord.greater(x.m, y.m); });
  }

  void normalize() {
    sort_terms();
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().m == t.m)
        out.back().c += t.c;
      else
        out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term<K>& t) { return ::germlab::is_zero(t.c); });
    terms_ = std::move(out);
  }

  RingPtr<K> ring_;
  std::vector<Term<K>> terms_;
};

template <class K>
Polynomial<K> Polynomial<K>::substitute(const std::vector<std::optional<Polynomial>>& images,
                                        const RingPtr<K>& target) const {
  const std::size_t n = ring_->nvars();
  if (images.size() != n) throw std::invalid_argument("substitute: image count mismatch");
  std::vector<Polynomial> img(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (images[i]) {
      if (!images[i]->ring()->same_as(*target)) throw RingMismatch("substitute: image outside target ring");
      img[i] = *images[i];
    } else {
      img[i] = Polynomial::variable(target, ring_->names()[i]);
    }
  }
  // cache powers per variable
  std::vector<std::vector<Polynomial>> powers(n);
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& pw = powers[i];
    if (pw.empty()) pw.push_back(Polynomial::constant(target, target->field().one()));
    while (pw.size() <= e) pw.push_back(pw.back() * img[i]);
    return pw[e];
  };
  Polynomial acc(target);
  for (const auto& t : terms_) {
    Polynomial prod = Polynomial::constant(target, t.c);
    for (std::size_t i = 0; i < n && !prod.is_zero(); ++i)
      if (t.m.e[i]) prod = prod * power(i, t.m.e[i]);
    acc += prod;
  }
  return acc;
}

template <class K>
std::string monomial_to_string(const Monomial& m, const Ring<K>& ring) {
  std::string s;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (!m.e[i]) continue;
    if (!s.empty()) s += "*";
    s += ring.names()[i];
    if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
  }
  return s;
}

template <class K>
std::string Polynomial<K>::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = ::germlab::to_string(t.c);
    bool neg = !c.empty() && c[0] == '-';
    if (neg) c = c.substr(1);
    if (first)
      s += neg ? "-" : "";
    else
      s += neg ? " - " : " + ";
    first = false;
    std::string mono = monomial_to_string(t.m, *ring_);
    if (mono.empty())
      s += c;
    else if (c == "1")
      s += mono;
    else
      s += c + "*" + mono;
  }
  return s;
}

}  // namespace germlab

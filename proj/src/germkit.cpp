#include "germlab/germkit.hpp"

#include <map>
#include <numeric>

namespace germlab {

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > n) return out;
  std::vector<std::size_t> cur(r);
  std::iota(cur.begin(), cur.end(), 0);
  for (;;) {
    out.push_back(cur);
    std::size_t i = r;
    while (i > 0 && cur[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < r; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

template <class K>
Polynomial<K> det_naive(const PolyMatrix<K>& M, const std::vector<std::size_t>& rows, std::vector<std::size_t> cols) {
  if (rows.empty()) return Polynomial<K>::constant(M.ring(), 1);
  if (rows.size() == 1) return M.at(rows[0], cols[0]);
  std::vector<std::size_t> rest(rows.begin() + 1, rows.end());
  Polynomial<K> acc(M.ring());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    const auto& a = M.at(rows[0], cols[k]);
    if (a.is_zero()) continue;
    std::vector<std::size_t> sub = cols;
    sub.erase(sub.begin() + static_cast<long>(k));
    auto term = a * det_naive(M, rest, sub);
    if (k % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

// Laplace expansion along the rows of `rows`, memoized on column masks.
template <class K>
class MinorTable {
 public:
  MinorTable(const PolyMatrix<K>& M, const std::vector<std::size_t>& rows) : M_(M), rows_(rows), memo_(rows.size()) {}

  const Polynomial<K>& det(std::size_t level, std::uint32_t colmask) {
    auto& table = memo_[level];
    auto it = table.find(colmask);
    if (it != table.end()) return it->second;
    Polynomial<K> acc(M_.ring());
    if (level + 1 == rows_.size()) {
      acc = M_.at(rows_[level], static_cast<std::size_t>(std::countr_zero(colmask)));
    } else {
      int sign = 1;
      for (std::uint32_t m = colmask; m; m &= m - 1) {
        std::size_t c = static_cast<std::size_t>(std::countr_zero(m));
        const auto& a = M_.at(rows_[level], c);
        if (!a.is_zero()) {
          const auto& sub = det(level + 1, colmask & ~(1u << c));
          if (!sub.is_zero()) {
            auto term = a * sub;
            if (sign > 0)
              acc += term;
            else
              acc -= term;
          }
        }
        sign = -sign;
      }
    }
    return table.emplace(colmask, std::move(acc)).first->second;
  }

 private:
  const PolyMatrix<K>& M_;
  std::vector<std::size_t> rows_;
  std::vector<std::map<std::uint32_t, Polynomial<K>>> memo_;
};

std::vector<std::size_t> all_vars(std::size_t n, const std::vector<std::size_t>& vars) {
  if (!vars.empty()) return vars;
  std::vector<std::size_t> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

template <class K>
PolyList<K> minors_serial(const PolyMatrix<K>& M, std::size_t r) {
  PolyList<K> out;
  if (r == 0) return {Polynomial<K>::constant(M.ring(), 1)};
  auto rs = subsets(M.rows(), r);
  auto cs = subsets(M.cols(), r);
  for (const auto& R : rs)
    for (const auto& C : cs) out.push_back(det_naive(M, R, C));
  return out;
}

template <class K>
PolyList<K> minors_parallel(const PolyMatrix<K>& M, std::size_t r) {
  if (r == 0) return {Polynomial<K>::constant(M.ring(), 1)};
  if (M.cols() > 31) throw std::invalid_argument("minors: too many columns");
  auto rs = subsets(M.rows(), r);
  auto cs = subsets(M.cols(), r);
  PolyList<K> out(rs.size() * cs.size());
  const long nr = static_cast<long>(rs.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < nr; ++i) {
    MinorTable<K> table(M, rs[static_cast<std::size_t>(i)]);
    for (std::size_t j = 0; j < cs.size(); ++j) {
      std::uint32_t mask = 0;
      for (auto c : cs[j]) mask |= 1u << c;
      out[static_cast<std::size_t>(i) * cs.size() + j] = table.det(0, mask);
    }
  }
  return out;
}

template <class K>
Ideal<K> minors_ideal(const PolyMatrix<K>& M, std::size_t r) {
  return Ideal<K>(M.ring(), minors_parallel(M, r));
}

template <class K>
PolyMatrix<K> jacobian(const PolyList<K>& fs, const RingPtr<K>& ring, const std::vector<std::size_t>& vars_in) {
  auto vars = all_vars(ring->nvars(), vars_in);
  PolyMatrix<K> J(ring, fs.size(), vars.size());
  for (std::size_t i = 0; i < fs.size(); ++i)
    for (std::size_t j = 0; j < vars.size(); ++j) J.at(i, j) = fs[i].in_ring(ring).derivative(vars[j]);
  return J;
}

template <class K>
PolyList<K> DeterminantalPresentation<K>::equations() const {
  PolyList<K> out;
  if (psi.empty()) return out;
  for (auto& p : minors_parallel(psi, s))
    if (!p.is_zero()) out.push_back(std::move(p));
  return out;
}

template <class K>
DeterminantalPresentation<K> make_presentation(PolyMatrix<K> psi, std::size_t s) {
  if (psi.rows() > psi.cols()) psi = psi.transposed();
  if (psi.empty()) throw InvalidPresentation("empty matrix; use the ambient presentation");
  if (s < 1 || s > psi.rows()) throw InvalidPresentation("s must satisfy 1 <= s <= " + std::to_string(psi.rows()));
  DeterminantalPresentation<K> P{std::move(psi), s};
  if (P.d() < 0) throw InvalidPresentation("negative expected dimension");
  return P;
}

template <class K>
DeterminantalPresentation<K> ambient_presentation(const RingPtr<K>& ring) {
  return DeterminantalPresentation<K>{PolyMatrix<K>(ring, 0, 0), 1};
}

template <class K>
Ideal<K> jacobian_locus(const Ideal<K>& I, std::size_t c, const std::vector<std::size_t>& vars) {
  if (c == 0) return Ideal<K>(I.ring(), {Polynomial<K>::constant(I.ring(), 1)});
  auto J = jacobian(I.gens(), I.ring(), vars);
  return I.plus(minors_parallel(J, c));
}

template <class K>
Ideal<K> singular_locus_ideal(const DeterminantalPresentation<K>& P) {
  return jacobian_locus(P.ideal(), P.codim());
}

template <class K>
PresentationCheck validate_presentation(const DeterminantalPresentation<K>& P, const Budget& b) {
  PresentationCheck c;
  if (P.psi.empty()) {
    c.krull_dimension = static_cast<int>(P.N());
    c.dimension_ok = c.ids_bound_ok = c.isolated_ok = true;
    return c;
  }
  auto I = P.ideal();
  c.krull_dimension = krull_dimension(I, MonomialOrder::local(), b);
  c.dimension_ok = c.krull_dimension == P.d();
  const std::size_t m = P.psi.rows(), n = P.psi.cols(), s = P.s;
  c.ids_bound_ok = s == 1 || P.N() < (m - s + 2) * (n - s + 2);
  auto S = singular_locus_ideal(P);
  c.isolated_ok = krull_dimension(S, MonomialOrder::local(), b) <= 0;
  return c;
}

template <class K>
Ideal<K> deformed_presentation(const DeterminantalPresentation<K>& P, const std::vector<std::vector<Rational>>& A) {
  if (P.psi.empty()) return Ideal<K>(P.ring(), {});
  if (A.size() != P.psi.rows()) throw std::invalid_argument("deformation shape mismatch");
  auto M = P.psi;
  for (std::size_t i = 0; i < M.rows(); ++i) {
    if (A[i].size() != M.cols()) throw std::invalid_argument("deformation shape mismatch");
    for (std::size_t j = 0; j < M.cols(); ++j)
      M.at(i, j) += Polynomial<K>::constant(M.ring(), M.ring()->field().from_rational(A[i][j]));
  }
  return minors_ideal(M, P.s);
}

template <class K>
Ideal<K> critical_ideal_on_deformation(const Ideal<K>& eqns, const Polynomial<K>& g, std::size_t c,
                                       const std::vector<std::size_t>& vars) {
  PolyList<K> rows = eqns.gens();
  rows.push_back(g.in_ring(eqns.ring()));
  auto J = jacobian(rows, eqns.ring(), vars);
  return eqns.plus(minors_parallel(J, c + 1));
}

template <class K>
Ideal<K> delta_jacobian_extension(const PolyList<K>& h, const Ideal<K>& W, std::size_t m,
                                  const std::vector<std::size_t>& vars_in, const Budget& b) {
  const auto& ring = W.ring();
  auto vars = all_vars(ring->nvars(), vars_in);
  PolyList<K> Wg;
  for (const auto& g : W.global_basis(b)) Wg.push_back(g.in_ring(ring));
  const std::size_t rows = h.size() + Wg.size();
  if (m < 1 || m > std::min(rows, vars.size()))
    throw std::invalid_argument("delta_jacobian_extension: m=" + std::to_string(m) + " outside [1, " +
                                std::to_string(std::min(rows, vars.size())) + "]");
  PolyList<K> all = h;
  all.insert(all.end(), Wg.begin(), Wg.end());
  auto J = jacobian(all, ring, vars);
  Ideal<K> base(ring, Wg);
  return base.plus(minors_parallel(J, m));
}

template <class K>
Ideal<K> iterated_jacobian_extension(const PolyList<K>& h, const Ideal<K>& W, const std::vector<std::size_t>& boardman,
                                     const std::vector<std::size_t>& vars_in, const Budget& b) {
  auto vars = all_vars(W.ring()->nvars(), vars_in);
  const std::size_t N = vars.size();
  for (std::size_t k = 0; k < boardman.size(); ++k) {
    if (boardman[k] > N) throw std::invalid_argument("Boardman symbol entry exceeds N");
    if (k && boardman[k] > boardman[k - 1]) throw std::invalid_argument("Boardman symbol must be weakly decreasing");
  }
  Ideal<K> cur = W;
  for (auto i : boardman) {
    if (cur.is_unit(MonomialOrder::degrevlex(), b)) return Ideal<K>(W.ring(), {Polynomial<K>::constant(W.ring(), 1)});
    cur = delta_jacobian_extension(h, cur, N - i + 1, vars, b);
  }
  return cur;
}

template <class K>
std::pair<Ideal<K>, Ideal<K>> degenerate_critical_set_ideal(const Polynomial<K>& g, const PolyList<K>& phi, std::size_t d,
                                                             const std::vector<std::size_t>& vars_in, const Budget& b) {
  const auto& ring = g.ring();
  auto vars = all_vars(ring->nvars(), vars_in);
  Ideal<K> W(ring, phi);
  auto J = iterated_jacobian_extension({g}, W, {d, 1}, vars, b);
  auto S = jacobian_locus(W, vars.size() - d, vars);
  return {J, S};
}

template <class K>
GermCheck validate_germ(const FunctionGerm<K>& fg, const Budget& b) {
  GermCheck c;
  c.vanishes_at_origin = ::germlab::is_zero(fg.f.constant_term());
  auto C = critical_ideal_on_deformation(fg.host.ideal(), fg.f, fg.host.codim());
  c.isolated_critical_point = krull_dimension(C, MonomialOrder::local(), b) <= 0;
  return c;
}

#define GERMLAB_INSTANTIATE(K)                                                                                 \
  template PolyList<K> minors_serial(const PolyMatrix<K>&, std::size_t);                                      \
  template PolyList<K> minors_parallel(const PolyMatrix<K>&, std::size_t);                                    \
  template Ideal<K> minors_ideal(const PolyMatrix<K>&, std::size_t);                                          \
  template PolyMatrix<K> jacobian(const PolyList<K>&, const RingPtr<K>&, const std::vector<std::size_t>&);    \
  template struct DeterminantalPresentation<K>;                                                               \
  template DeterminantalPresentation<K> make_presentation(PolyMatrix<K>, std::size_t);                        \
  template DeterminantalPresentation<K> ambient_presentation(const RingPtr<K>&);                              \
  template PresentationCheck validate_presentation(const DeterminantalPresentation<K>&, const Budget&);       \
  template Ideal<K> jacobian_locus(const Ideal<K>&, std::size_t, const std::vector<std::size_t>&);            \
  template Ideal<K> singular_locus_ideal(const DeterminantalPresentation<K>&);                                \
  template Ideal<K> deformed_presentation(const DeterminantalPresentation<K>&,                                \
                                          const std::vector<std::vector<Rational>>&);                         \
  template Ideal<K> critical_ideal_on_deformation(const Ideal<K>&, const Polynomial<K>&, std::size_t,         \
                                                  const std::vector<std::size_t>&);                           \
  template Ideal<K> delta_jacobian_extension(const PolyList<K>&, const Ideal<K>&, std::size_t,                \
                                             const std::vector<std::size_t>&, const Budget&);                 \
  template Ideal<K> iterated_jacobian_extension(const PolyList<K>&, const Ideal<K>&,                          \
                                                const std::vector<std::size_t>&,                              \
                                                const std::vector<std::size_t>&, const Budget&);              \
  template std::pair<Ideal<K>, Ideal<K>> degenerate_critical_set_ideal(                                       \
      const Polynomial<K>&, const PolyList<K>&, std::size_t, const std::vector<std::size_t>&, const Budget&); \
  template GermCheck validate_germ(const FunctionGerm<K>&, const Budget&);

GERMLAB_INSTANTIATE(Rational)
GERMLAB_INSTANTIATE(ModP)

}  // namespace germlab

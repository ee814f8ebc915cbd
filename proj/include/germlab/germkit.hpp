#pragma once

#include <string>
#include <utility>
#include <vector>

#include "germlab/stdbasis.hpp"

namespace germlab {

struct InvalidPresentation : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// m x n matrix of polynomials over one ring, stored row-major.
template <class K>
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(RingPtr<K> ring, std::size_t rows, std::size_t cols)
      : ring_(std::move(ring)), rows_(rows), cols_(cols), a_(rows * cols, Polynomial<K>(ring_)) {}

  static PolyMatrix from_rows(const RingPtr<K>& ring, const std::vector<PolyList<K>>& rows) {
    std::size_t m = rows.size(), n = m ? rows[0].size() : 0;
    PolyMatrix M(ring, m, n);
    for (std::size_t i = 0; i < m; ++i) {
      if (rows[i].size() != n) throw InvalidPresentation("ragged matrix");
      for (std::size_t j = 0; j < n; ++j) M.at(i, j) = rows[i][j].in_ring(ring);
    }
    return M;
  }

  const RingPtr<K>& ring() const { return ring_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  Polynomial<K>& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Polynomial<K>& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  PolyMatrix transposed() const {
    PolyMatrix T(ring_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) T.at(j, i) = at(i, j);
    return T;
  }

  /// Applies `fn` entrywise; the result lives in `target`.
  template <class Fn>
  PolyMatrix map(const RingPtr<K>& target, Fn fn) const {
    PolyMatrix M(target, rows_, cols_);
    for (std::size_t k = 0; k < a_.size(); ++k) M.a_[k] = fn(a_[k]);
    return M;
  }

 private:
  RingPtr<K> ring_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial<K>> a_;
};

/// All r x r minors, row subsets outer and column subsets inner, both in
/// lexicographic order. The parallel version memoizes Laplace expansions
/// per row subset and splits row subsets across threads.
template <class K>
PolyList<K> minors_serial(const PolyMatrix<K>& M, std::size_t r);
template <class K>
PolyList<K> minors_parallel(const PolyMatrix<K>& M, std::size_t r);
template <class K>
Ideal<K> minors_ideal(const PolyMatrix<K>& M, std::size_t r);

/// Rows: fs; columns: partial derivatives in `vars` (all ring variables if empty).
template <class K>
PolyMatrix<K> jacobian(const PolyList<K>& fs, const RingPtr<K>& ring, const std::vector<std::size_t>& vars = {});

/// X = psi^{-1}(rank < s). psi is stored with rows <= cols.
template <class K>
struct DeterminantalPresentation {
  PolyMatrix<K> psi;  // empty means X = C^N
  std::size_t s = 1;

  const RingPtr<K>& ring() const { return psi.ring(); }
  std::size_t N() const { return psi.ring()->nvars(); }
  std::size_t codim() const { return psi.empty() ? 0 : (psi.rows() - s + 1) * (psi.cols() - s + 1); }
  long d() const { return static_cast<long>(N()) - static_cast<long>(codim()); }
  /// Nonzero s x s minors of psi.
  PolyList<K> equations() const;
  Ideal<K> ideal() const { return Ideal<K>(ring(), equations()); }
};

/// Builds a presentation, transposing when rows > cols. Throws on bad shape or s.
template <class K>
DeterminantalPresentation<K> make_presentation(PolyMatrix<K> psi, std::size_t s);
/// Presentation of the ambient space C^N itself.
template <class K>
DeterminantalPresentation<K> ambient_presentation(const RingPtr<K>& ring);

struct PresentationCheck {
  bool dimension_ok = false;  // local Krull dimension equals d
  bool ids_bound_ok = false;  // s = 1 or N < (m-s+2)(n-s+2)
  bool isolated_ok = false;   // singular locus is {0} near the origin
  int krull_dimension = 0;
  bool ok() const { return dimension_ok && ids_bound_ok && isolated_ok; }
};

template <class K>
PresentationCheck validate_presentation(const DeterminantalPresentation<K>& P, const Budget& b = {});

/// I + I_c(J(equations)) for an ideal of codimension c; `vars` as in jacobian.
template <class K>
Ideal<K> jacobian_locus(const Ideal<K>& I, std::size_t c, const std::vector<std::size_t>& vars = {});
template <class K>
Ideal<K> singular_locus_ideal(const DeterminantalPresentation<K>& P);

/// I_s(psi + A) as an affine ideal. A is a rational matrix of psi's shape.
template <class K>
Ideal<K> deformed_presentation(const DeterminantalPresentation<K>& P, const std::vector<std::vector<Rational>>& A);

/// eqns + I_{c+1}(J(eqns, g)).
template <class K>
Ideal<K> critical_ideal_on_deformation(const Ideal<K>& eqns, const Polynomial<K>& g, std::size_t c,
                                       const std::vector<std::size_t>& vars = {});

/// W + I_m(J(h, generators of W)), generators taken from W's reduced basis.
template <class K>
Ideal<K> delta_jacobian_extension(const PolyList<K>& h, const Ideal<K>& W, std::size_t m,
                                  const std::vector<std::size_t>& vars = {}, const Budget& b = {});
/// J_{i_1..i_k}(h, W): Delta_{N-i_j+1} applied left to right.
template <class K>
Ideal<K> iterated_jacobian_extension(const PolyList<K>& h, const Ideal<K>& W, const std::vector<std::size_t>& boardman,
                                     const std::vector<std::size_t>& vars = {}, const Budget& b = {});
/// (J_{d,1}(g, <phi>), singular-locus ideal of V(phi)).
template <class K>
std::pair<Ideal<K>, Ideal<K>> degenerate_critical_set_ideal(const Polynomial<K>& g, const PolyList<K>& phi, std::size_t d,
                                                             const std::vector<std::size_t>& vars = {},
                                                             const Budget& b = {});

/// f restricted to X, with f(0) = 0.
template <class K>
struct FunctionGerm {
  DeterminantalPresentation<K> host;
  Polynomial<K> f;

  /// Equations of the fiber Y = X ∩ f^{-1}(0).
  PolyList<K> fiber_equations() const {
    auto e = host.equations();
    e.push_back(f);
    return e;
  }
};

struct GermCheck {
  bool vanishes_at_origin = false;
  bool isolated_critical_point = false;
  bool ok() const { return vanishes_at_origin && isolated_critical_point; }
};

template <class K>
GermCheck validate_germ(const FunctionGerm<K>& fg, const Budget& b = {});

}  // namespace germlab

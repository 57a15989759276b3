#ifndef WITTZETA_ENDO_HPP
#define WITTZETA_ENDO_HPP

// Endomorphisms as Witt elements: a square matrix M over R maps to
// det(1 - tM)^{-1} in W(R). Under this map
//
//   ghost components  <->  trace(M^n)
//   Witt product      <->  Kronecker (tensor) product
//   Frobenius F_n     <->  M^n
//   Verschiebung V_n  <->  block companion embedding
//   series coeffs     <->  traces on symmetric powers Sym^n
//
// det(1 - tM) is computed exactly with Bareiss fraction-free elimination
// over R[t]; no pivoting is needed because every leading principal minor of
// 1 - tM has constant term 1 and is therefore a nonzero polynomial.

#include <vector>

#include "wittzeta/witt.hpp"

namespace wittzeta {

template <class R>
class SquareMatrix {
 public:
  explicit SquareMatrix(int n)
      : n_(n), a_(static_cast<size_t>(n) * n, ring_traits<R>::zero()) {
    if (n < 1) throw PreconditionError("matrix dimension must be >= 1");
  }
  SquareMatrix(int n, std::vector<R> entries) : n_(n), a_(std::move(entries)) {
    if (n < 1 || a_.size() != static_cast<size_t>(n) * n)
      throw PreconditionError("matrix needs exactly n*n entries");
  }

  static SquareMatrix identity(int n) {
    SquareMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = ring_traits<R>::one();
    return m;
  }

  int dim() const { return n_; }
  const R& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
  R& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.n_ == b.n_ && a.a_ == b.a_;
  }

  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
    if (a.n_ != b.n_) throw PreconditionError("matrix dimension mismatch");
    SquareMatrix r(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        if (ring_traits<R>::is_zero(a.at(i, k))) continue;
        for (int j = 0; j < a.n_; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
      }
    return r;
  }

  R trace() const {
    R s = ring_traits<R>::zero();
    for (int i = 0; i < n_; ++i) s += at(i, i);
    return s;
  }

 private:
  int n_;
  std::vector<R> a_;
};

// det(1 - tM) as a polynomial in R[t] (degree <= dim).
template <class R>
Poly<R, 't'> reversed_charpoly(const SquareMatrix<R>& m) {
  using PT = Poly<R, 't'>;
  const int n = m.dim();
  std::vector<PT> b(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PT e = PT::var(1, -m.at(i, j));
      if (i == j) e += PT(ring_traits<R>::one());
      b[static_cast<size_t>(i) * n + j] = e;
    }
  auto at = [&](int i, int j) -> PT& {
    return b[static_cast<size_t>(i) * n + j];
  };
  PT prev = ring_traits<PT>::one();
  for (int k = 0; k + 1 < n; ++k) {
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        auto q = ring_traits<PT>::divide_exact(
            at(i, j) * at(k, k) - at(i, k) * at(k, j), prev);
        if (!q)
          throw InconsistencyError("Bareiss elimination division failed");
        at(i, j) = std::move(*q);
      }
    prev = at(k, k);
  }
  return at(n - 1, n - 1);
}

// Characteristic-polynomial element det(1 - tM)^{-1} in W(R).
template <class R>
WittElement<R> charpoly_witt(const SquareMatrix<R>& m, int prec) {
  if (prec < 1) throw PreconditionError("precision must be >= 1");
  Poly<R, 't'> d = reversed_charpoly(m);
  std::vector<R> c(prec + 1, ring_traits<R>::zero());
  for (int i = 0; i <= prec && i <= d.degree(); ++i) c[i] = d.coeff(i);
  return WittElement<R>(TruncatedSeries<R>(prec, std::move(c)).reciprocal());
}

// (trace M, trace M^2, ..., trace M^N) — the ghost components of
// charpoly_witt(M), computed by a path that never touches determinants.
template <class R>
GhostVector<R> trace_powers(const SquareMatrix<R>& m, int prec) {
  if (prec < 1) throw PreconditionError("precision must be >= 1");
  std::vector<R> g(prec);
  SquareMatrix<R> pw = m;
  g[0] = pw.trace();
  for (int r = 2; r <= prec; ++r) {
    pw = pw * m;
    g[r - 1] = pw.trace();
  }
  return GhostVector<R>(prec, std::move(g));
}

template <class R>
SquareMatrix<R> matrix_power(const SquareMatrix<R>& m, int e) {
  if (e < 1) throw PreconditionError("matrix power must be >= 1");
  SquareMatrix<R> acc = m;
  for (int i = 1; i < e; ++i) acc = acc * m;
  return acc;
}

template <class R>
SquareMatrix<R> kronecker(const SquareMatrix<R>& a, const SquareMatrix<R>& b) {
  const int m = a.dim(), n = b.dim();
  SquareMatrix<R> r(m * n);
  for (int i1 = 0; i1 < m; ++i1)
    for (int j1 = 0; j1 < m; ++j1) {
      if (ring_traits<R>::is_zero(a.at(i1, j1))) continue;
      for (int i2 = 0; i2 < n; ++i2)
        for (int j2 = 0; j2 < n; ++j2)
          r.at(i1 * n + i2, j1 * n + j2) = a.at(i1, j1) * b.at(i2, j2);
    }
  return r;
}

// Block companion matrix realizing Verschiebung: identity blocks on the
// subdiagonal, M in the top-right corner. Its reversed characteristic
// polynomial is det(1 - t^n M).
template <class R>
SquareMatrix<R> companion_verschiebung(const SquareMatrix<R>& m, int n) {
  if (n < 1) throw PreconditionError("verschiebung index must be >= 1");
  const int d = m.dim();
  SquareMatrix<R> r(n * d);
  for (int blk = 1; blk < n; ++blk)
    for (int i = 0; i < d; ++i)
      r.at(blk * d + i, (blk - 1) * d + i) = ring_traits<R>::one();
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) r.at(i, (n - 1) * d + j) = m.at(i, j);
  return r;
}

// Traces of M on Sym^n via the Newton-type recursion
//   n h_n = sum_{k=1..n} p_k h_{n-k},   p_k = trace(M^k),
// run in the rational lift and retracted. Returns h_0..h_N; these are the
// series coefficients of charpoly_witt(M).
template <class R>
std::vector<R> sym_power_traces(const SquareMatrix<R>& m, int prec) {
  using L = rational_lift_t<R>;
  GhostVector<R> p = trace_powers(m, prec);
  std::vector<L> h(prec + 1, ring_traits<L>::zero());
  h[0] = ring_traits<L>::one();
  std::vector<R> out(prec + 1, ring_traits<R>::zero());
  out[0] = ring_traits<R>::one();
  for (int n = 1; n <= prec; ++n) {
    L acc = ring_traits<L>::zero();
    for (int k = 1; k <= n; ++k)
      acc += ring_traits<R>::lift(p.g(k)) * h[n - k];
    h[n] = acc * L(make_rat(1, n));
    if constexpr (ring_contains_rationals<R>) {
      out[n] = h[n];
    } else {
      auto r = ring_traits<R>::retract(h[n]);
      if (!r) throw IntegralityError(n, "sym_power_traces");
      out[n] = *r;
    }
  }
  return out;
}

}  // namespace wittzeta

#endif

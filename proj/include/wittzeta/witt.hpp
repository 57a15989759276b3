#ifndef WITTZETA_WITT_HPP
#define WITTZETA_WITT_HPP

// The truncated big Witt ring W(R) modeled on unit power series:
//
//   element   P = 1 + c_1 t + ... + c_N t^N      (series with c_0 = 1)
//   addition  P +_W Q   = P * Q                  (series product)
//   negation  -_W P     = 1/P
//   zero      1,   one  [1] = (1-t)^{-1}
//
// Multiplication is the unique functorial extension of
// (1-at)^{-1} *_W (1-bt)^{-1} = (1-abt)^{-1}; computationally it is the
// componentwise product of ghost vectors pulled back through the
// ghost recursion (with a rational lift and an exact retraction).
//
// The ghost map sends P to (g_1, ..., g_N) where t P'/P = sum g_r t^r;
// it is an injective ring homomorphism onto componentwise operations.
// Witt coordinates are the a_n in P = prod_n (1 - a_n t^n)^{-1}.

#include <string>
#include <utility>
#include <vector>

#include "wittzeta/series.hpp"

namespace wittzeta {

template <class R>
class WittElement {
 public:
  WittElement() : s_(TruncatedSeries<R>::one(1)) {}
  explicit WittElement(TruncatedSeries<R> s) : s_(std::move(s)) {
    if (s_.precision() < 1)
      throw PreconditionError("Witt element needs precision >= 1");
    if (!ring_traits<R>::is_one(s_[0]))
      throw PreconditionError("Witt element needs constant term 1");
  }

  static WittElement zero(int prec) {
    return WittElement(TruncatedSeries<R>::one(prec));
  }

  int precision() const { return s_.precision(); }
  const TruncatedSeries<R>& series() const { return s_; }
  const R& coeff(int i) const { return s_[i]; }

  friend bool operator==(const WittElement& a, const WittElement& b) {
    return a.s_ == b.s_;
  }
  friend bool operator!=(const WittElement& a, const WittElement& b) {
    return !(a == b);
  }

 private:
  TruncatedSeries<R> s_;
};

// Ghost components g_1..g_N (index 1-based via g(r)).
template <class R>
class GhostVector {
 public:
  GhostVector(int prec, std::vector<R> g) : prec_(prec), g_(std::move(g)) {
    if (prec_ < 1 || g_.size() != static_cast<size_t>(prec_))
      throw PreconditionError("ghost vector needs exactly prec components");
  }
  static GhostVector zero(int prec) {
    return GhostVector(prec, std::vector<R>(prec, ring_traits<R>::zero()));
  }
  static GhostVector one(int prec) {
    return GhostVector(prec, std::vector<R>(prec, ring_traits<R>::one()));
  }

  int precision() const { return prec_; }
  const R& g(int r) const { return g_.at(r - 1); }
  R& g(int r) { return g_.at(r - 1); }
  const std::vector<R>& components() const { return g_; }

  friend bool operator==(const GhostVector& a, const GhostVector& b) {
    return a.prec_ == b.prec_ && a.g_ == b.g_;
  }
  friend bool operator!=(const GhostVector& a, const GhostVector& b) {
    return !(a == b);
  }
  // Ghost targets carry the componentwise ring structure.
  friend GhostVector operator+(const GhostVector& a, const GhostVector& b) {
    a.require_same_precision(b);
    auto g = a.g_;
    for (int i = 0; i < a.prec_; ++i) g[i] += b.g_[i];
    return GhostVector(a.prec_, std::move(g));
  }
  friend GhostVector operator*(const GhostVector& a, const GhostVector& b) {
    a.require_same_precision(b);
    auto g = a.g_;
    for (int i = 0; i < a.prec_; ++i) g[i] = g[i] * b.g_[i];
    return GhostVector(a.prec_, std::move(g));
  }
  GhostVector operator-() const {
    auto g = g_;
    for (auto& x : g) x = -x;
    return GhostVector(prec_, std::move(g));
  }

 private:
  void require_same_precision(const GhostVector& b) const {
    if (prec_ != b.prec_)
      throw PreconditionError("ghost precision mismatch");
  }
  int prec_;
  std::vector<R> g_;
};

// Coordinates a_1..a_N with P = prod (1 - a_n t^n)^{-1}.
template <class R>
class WittCoordinates {
 public:
  WittCoordinates(int prec, std::vector<R> a) : prec_(prec), a_(std::move(a)) {
    if (prec_ < 1 || a_.size() != static_cast<size_t>(prec_))
      throw PreconditionError("Witt coordinates need exactly prec entries");
  }
  int precision() const { return prec_; }
  const R& a(int n) const { return a_.at(n - 1); }
  const std::vector<R>& entries() const { return a_; }
  friend bool operator==(const WittCoordinates& a, const WittCoordinates& b) {
    return a.prec_ == b.prec_ && a.a_ == b.a_;
  }

 private:
  int prec_;
  std::vector<R> a_;
};

template <class R>
WittElement<R> witt_add(const WittElement<R>& p, const WittElement<R>& q) {
  return WittElement<R>(p.series() * q.series());
}

template <class R>
WittElement<R> witt_neg(const WittElement<R>& p) {
  return WittElement<R>(p.series().reciprocal());
}

template <class R>
WittElement<R> witt_sub(const WittElement<R>& p, const WittElement<R>& q) {
  return witt_add(p, witt_neg(q));
}

// Teichmueller representative [a] = (1 - a t)^{-1} = 1 + a t + a^2 t^2 + ...
template <class R>
WittElement<R> teichmuller(const R& a, int prec) {
  std::vector<R> c(prec + 1, ring_traits<R>::zero());
  c[0] = ring_traits<R>::one();
  for (int i = 1; i <= prec; ++i) c[i] = c[i - 1] * a;
  return WittElement<R>(TruncatedSeries<R>(prec, std::move(c)));
}

// Ghost components from t P'/P. Needs no division: multiply
// sum n c_n t^n by the series inverse of P.
template <class R>
GhostVector<R> ghost_of(const WittElement<R>& p) {
  const int N = p.precision();
  std::vector<R> d(N + 1, ring_traits<R>::zero());
  for (int n = 1; n <= N; ++n) d[n] = p.coeff(n) * R(n);
  TruncatedSeries<R> num(N, std::move(d));
  TruncatedSeries<R> g = num * p.series().reciprocal();
  std::vector<R> comps(g.coeffs().begin() + 1, g.coeffs().end());
  return GhostVector<R>(N, std::move(comps));
}

namespace detail {

// Shared core of series_from_ghost: run the recursion
//   n c_n = sum_{r=1..n} g_r c_{n-r}
// in the rational lift of R and retract each coefficient. `what` names the
// operation for IntegralityError messages.
template <class R>
WittElement<R> series_from_ghost_impl(const GhostVector<R>& g,
                                      const char* what) {
  using L = rational_lift_t<R>;
  const int N = g.precision();
  std::vector<L> c(N + 1, ring_traits<L>::zero());
  std::vector<L> gl(N + 1, ring_traits<L>::zero());
  for (int r = 1; r <= N; ++r) gl[r] = ring_traits<R>::lift(g.g(r));
  c[0] = ring_traits<L>::one();
  std::vector<R> out(N + 1, ring_traits<R>::zero());
  out[0] = ring_traits<R>::one();
  for (int n = 1; n <= N; ++n) {
    L acc = ring_traits<L>::zero();
    for (int r = 1; r <= n; ++r) acc += gl[r] * c[n - r];
    c[n] = acc * make_rat(1, n);  // scalar 1/n lives in every lift ring
    if constexpr (ring_contains_rationals<R>) {
      out[n] = c[n];
    } else {
      auto retr = ring_traits<R>::retract(c[n]);
      if (!retr) throw IntegralityError(n, what);
      out[n] = *retr;
    }
  }
  return WittElement<R>(TruncatedSeries<R>(N, std::move(out)));
}

}  // namespace detail

template <class R>
WittElement<R> series_from_ghost(const GhostVector<R>& g) {
  return detail::series_from_ghost_impl(g, "series_from_ghost");
}

// Ghost-pointwise product; lands back in W(R) because the universal Witt
// multiplication polynomials have integer coefficients (the retraction is a
// consistency check, not a restriction).
template <class R>
WittElement<R> witt_mul(const WittElement<R>& p, const WittElement<R>& q) {
  if (p.precision() != q.precision())
    throw PreconditionError("witt_mul precision mismatch");
  return detail::series_from_ghost_impl(ghost_of(p) * ghost_of(q),
                                        "witt_mul");
}

// n-fold Witt sum of P (series power P^n; negative n through witt_neg).
template <class R>
WittElement<R> scale_int(const Int& n, const WittElement<R>& p) {
  TruncatedSeries<R> base =
      sgn(n) < 0 ? p.series().reciprocal() : p.series();
  Int e = abs(n);
  TruncatedSeries<R> acc = TruncatedSeries<R>::one(p.precision());
  while (sgn(e) > 0) {
    if (mpz_odd_p(e.get_mpz_t())) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return WittElement<R>(std::move(acc));
}

template <class R>
WittElement<R> scale_int(long n, const WittElement<R>& p) {
  return scale_int(Int(n), p);
}

// Frobenius F_m: ghost reindexing g_r -> g_{mr}. Output precision floor(N/m).
template <class R>
WittElement<R> frobenius(int m, const WittElement<R>& p) {
  if (m < 1) throw PreconditionError("frobenius index must be >= 1");
  const int K = p.precision() / m;
  if (K < 1)
    throw PreconditionError("frobenius(" + std::to_string(m) +
                            ") needs input precision >= " + std::to_string(m));
  GhostVector<R> g = ghost_of(p);
  std::vector<R> h(K);
  for (int r = 1; r <= K; ++r) h[r - 1] = g.g(m * r);
  return detail::series_from_ghost_impl(GhostVector<R>(K, std::move(h)),
                                        "frobenius");
}

// Verschiebung V_m: t -> t^m, same precision.
template <class R>
WittElement<R> verschiebung(int m, const WittElement<R>& p) {
  if (m < 1) throw PreconditionError("verschiebung index must be >= 1");
  return WittElement<R>(
      p.series().substitute_scaled_power(ring_traits<R>::one(), m));
}

// Peel off coordinates: a_n is the t^n coefficient of
// P * prod_{m<n} (1 - a_m t^m).
template <class R>
WittCoordinates<R> witt_coords_of(const WittElement<R>& p) {
  const int N = p.precision();
  TruncatedSeries<R> q = p.series();
  std::vector<R> a(N);
  for (int n = 1; n <= N; ++n) {
    a[n - 1] = q[n];
    if (ring_traits<R>::is_zero(a[n - 1])) continue;
    // q *= (1 - a_n t^n), updating in place from the top down
    std::vector<R> c = q.coeffs();
    for (int j = N; j >= n; --j) c[j] -= a[n - 1] * c[j - n];
    q = TruncatedSeries<R>(N, std::move(c));
  }
  return WittCoordinates<R>(N, std::move(a));
}

template <class R>
WittElement<R> from_witt_coords(const WittCoordinates<R>& a) {
  const int N = a.precision();
  TruncatedSeries<R> acc = TruncatedSeries<R>::one(N);
  for (int n = 1; n <= N; ++n) {
    if (ring_traits<R>::is_zero(a.a(n))) continue;
    // multiply by (1 - a_n t^n)^{-1} = sum_k a_n^k t^{nk}
    std::vector<R> f(N + 1, ring_traits<R>::zero());
    R pw = ring_traits<R>::one();
    for (int k = 0; n * k <= N; ++k) {
      f[n * k] = pw;
      pw = pw * a.a(n);
    }
    acc = acc * TruncatedSeries<R>(N, std::move(f));
  }
  return WittElement<R>(std::move(acc));
}

template <class R>
WittElement<R> truncated(const WittElement<R>& p, int prec) {
  return WittElement<R>(p.series().truncated(prec));
}

}  // namespace wittzeta

#endif

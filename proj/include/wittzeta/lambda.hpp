#ifndef WITTZETA_LAMBDA_HPP
#define WITTZETA_LAMBDA_HPP

// Pre-lambda structure on unit series. With P = lambda_t(x):
//
//   adams_of(P)     Adams operations Psi_n, read off t d/dt log P —
//                   numerically the ghost components.
//   sigma_of(P)     the opposite structure sigma_t(x) = 1/lambda_{-t}(x).
//   power_int       P^r for r in Z (the power structure on integer
//                   exponents; same series power as Witt scaling).
//   power_rational  P^r = exp(r log P) for rational r, over a coefficient
//                   ring containing Q.
//
// The formal log/exp pair is computed with integrated-series recursions,
// all divisions exact by construction.

#include "wittzeta/witt.hpp"

namespace wittzeta {

template <class R>
GhostVector<R> adams_of(const WittElement<R>& p) {
  return ghost_of(p);
}

template <class R>
WittElement<R> sigma_of(const WittElement<R>& p) {
  const int N = p.precision();
  std::vector<R> c = p.series().coeffs();
  for (int n = 1; n <= N; n += 2) c[n] = -c[n];  // t -> -t
  return WittElement<R>(TruncatedSeries<R>(N, std::move(c)).reciprocal());
}

template <class R>
WittElement<R> power_int(const WittElement<R>& p, const Int& r) {
  return scale_int(r, p);
}

template <class R>
WittElement<R> power_int(const WittElement<R>& p, long r) {
  return scale_int(Int(r), p);
}

namespace detail {

// log P for P = 1 + ...: coefficients l_n = g_n / n off the ghost series.
template <class R>
TruncatedSeries<R> formal_log(const WittElement<R>& p) {
  static_assert(ring_contains_rationals<R>,
                "formal log needs a coefficient ring containing Q");
  const int N = p.precision();
  GhostVector<R> g = ghost_of(p);
  std::vector<R> l(N + 1, ring_traits<R>::zero());
  for (int n = 1; n <= N; ++n) l[n] = g.g(n) * R(make_rat(1, n));
  return TruncatedSeries<R>(N, std::move(l));
}

// exp S for S with S(0) = 0, via E' = S'E: n e_n = sum k s_k e_{n-k}.
template <class R>
TruncatedSeries<R> formal_exp(const TruncatedSeries<R>& s) {
  static_assert(ring_contains_rationals<R>,
                "formal exp needs a coefficient ring containing Q");
  if (!ring_traits<R>::is_zero(s[0]))
    throw PreconditionError("formal exp needs vanishing constant term");
  const int N = s.precision();
  std::vector<R> e(N + 1, ring_traits<R>::zero());
  e[0] = ring_traits<R>::one();
  for (int n = 1; n <= N; ++n) {
    R acc = ring_traits<R>::zero();
    for (int k = 1; k <= n; ++k) acc += R(k) * s[k] * e[n - k];
    e[n] = acc * R(make_rat(1, n));
  }
  return TruncatedSeries<R>(N, std::move(e));
}

}  // namespace detail

// P^r = exp(r log P), exact over Q-containing rings. Satisfies the power
// structure laws: P^0 = 1, P^1 = P, (PQ)^r = P^r Q^r, P^{r+s} = P^r P^s,
// P^{rs} = (P^s)^r.
template <class R>
WittElement<R> power_rational(const WittElement<R>& p, const Rat& r) {
  static_assert(ring_contains_rationals<R>,
                "power_rational needs a coefficient ring containing Q");
  return WittElement<R>(
      detail::formal_exp(detail::formal_log(p).scaled(R(r))));
}

}  // namespace wittzeta

#endif

#ifndef WITTZETA_RINGS_HPP
#define WITTZETA_RINGS_HPP

// Exact coefficient rings for the truncated Witt machinery:
//   Int            = Z            (GMP mpz_class)
//   Rat            = Q            (GMP mpq_class)
//   Poly<Int, V>   = Z[V]         dense univariate, variable tag V
//   Poly<Rat, V>   = Q[V]
//
// Every ring here is an integral domain of characteristic 0; rings with
// torsion are deliberately not representable. ring_traits<R> supplies the
// handful of generic hooks the series/Witt layer needs, in particular the
// rational lift (Z -> Q, Z[V] -> Q[V]) and its partial inverse.

#include <gmpxx.h>

#include <optional>
#include <string>

#include "wittzeta/errors.hpp"

namespace wittzeta {

using Int = mpz_class;
using Rat = mpq_class;

inline Rat make_rat(const Int& num, const Int& den) {
  if (sgn(den) == 0) throw PreconditionError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline Int int_pow(const Int& a, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
  return r;
}

// Binomial coefficient C(n, k) for possibly huge n.
inline Int binomial(const Int& n, unsigned long k) {
  Int r;
  mpz_bin_ui(r.get_mpz_t(), n.get_mpz_t(), k);
  return r;
}

template <class R>
struct ring_traits;  // specialized below and in polynomial.hpp

template <>
struct ring_traits<Int> {
  using rational_lift = Rat;
  static Int zero() { return Int(0); }
  static Int one() { return Int(1); }
  static bool is_zero(const Int& a) { return sgn(a) == 0; }
  static bool is_one(const Int& a) { return a == 1; }
  static Rat lift(const Int& a) { return Rat(a); }
  static std::optional<Int> retract(const Rat& q) {
    if (q.get_den() != 1) return std::nullopt;
    return Int(q.get_num());
  }
  // q = a / b when the division is exact in Z.
  static std::optional<Int> divide_exact(const Int& a, const Int& b) {
    if (sgn(b) == 0) return std::nullopt;
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return std::nullopt;
    Int q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
  }
};

template <>
struct ring_traits<Rat> {
  using rational_lift = Rat;
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static bool is_zero(const Rat& a) { return sgn(a) == 0; }
  static bool is_one(const Rat& a) { return a == 1; }
  static const Rat& lift(const Rat& a) { return a; }
  static std::optional<Rat> retract(const Rat& q) { return q; }
  static std::optional<Rat> divide_exact(const Rat& a, const Rat& b) {
    if (sgn(b) == 0) return std::nullopt;
    return Rat(a / b);
  }
};

template <class R>
using rational_lift_t = typename ring_traits<R>::rational_lift;

// True when R already contains Q, i.e. lifting is the identity.
template <class R>
inline constexpr bool ring_contains_rationals =
    std::is_same_v<R, rational_lift_t<R>>;

}  // namespace wittzeta

#endif

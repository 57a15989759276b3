#ifndef WITTZETA_POLYNOMIAL_HPP
#define WITTZETA_POLYNOMIAL_HPP

// Dense univariate polynomials over an exact coefficient ring. The variable
// is a compile-time tag so that Z[L], Z[z] and the internal Z[t] used by
// characteristic polynomials are distinct rings at the type level.

#include <algorithm>
#include <optional>
#include <vector>

#include "wittzeta/rings.hpp"

namespace wittzeta {

template <class C, char V>
class Poly {
 public:
  static constexpr char variable = V;
  using coeff_type = C;

  Poly() = default;
  Poly(const C& c) {  // NOLINT(google-explicit-constructor): constants embed
    if (!ring_traits<C>::is_zero(c)) c_.push_back(c);
  }
  Poly(long n) : Poly(C(n)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly var(unsigned deg = 1, const C& coeff = ring_traits<C>::one()) {
    Poly p;
    if (!ring_traits<C>::is_zero(coeff)) {
      p.c_.assign(deg + 1, ring_traits<C>::zero());
      p.c_[deg] = coeff;
    }
    return p;
  }

  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  // degree of 0 is -1 by convention
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(unsigned i) const {
    return i < c_.size() ? c_[i] : ring_traits<C>::zero();
  }
  C constant_term() const { return coeff(0); }
  const C& leading() const { return c_.back(); }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), ring_traits<C>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) r.c_[i] += b.c_[i];
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  Poly operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, ring_traits<C>::zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    r.trim();
    return r;
  }
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  // Evaluation by Horner's rule (exact).
  C operator()(const C& x) const {
    if (c_.empty()) return ring_traits<C>::zero();
    C acc = c_.back();
    for (size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

 private:
  void trim() {
    while (!c_.empty() && ring_traits<C>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<C> c_;
};

template <class C, char V>
struct ring_traits<Poly<C, V>> {
  using P = Poly<C, V>;
  using rational_lift = Poly<rational_lift_t<C>, V>;
  static P zero() { return P(); }
  static P one() { return P(ring_traits<C>::one()); }
  static bool is_zero(const P& a) { return a.is_zero(); }
  static bool is_one(const P& a) {
    return a.is_constant() && ring_traits<C>::is_one(a.constant_term());
  }
  static rational_lift lift(const P& a) {
    std::vector<rational_lift_t<C>> c;
    c.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) c.push_back(ring_traits<C>::lift(x));
    return rational_lift(std::move(c));
  }
  static std::optional<P> retract(const rational_lift& a) {
    std::vector<C> c;
    c.reserve(a.coeffs().size());
    for (const auto& x : a.coeffs()) {
      auto r = ring_traits<C>::retract(x);
      if (!r) return std::nullopt;
      c.push_back(*r);
    }
    return P(std::move(c));
  }
  // Exact polynomial long division: returns a/b iff b*q == a exactly.
  static std::optional<P> divide_exact(const P& a, const P& b) {
    if (b.is_zero()) return std::nullopt;
    if (a.is_zero()) return P();
    if (a.degree() < b.degree()) return std::nullopt;
    std::vector<C> rem(a.coeffs());
    std::vector<C> quo(a.degree() - b.degree() + 1, ring_traits<C>::zero());
    const auto& bl = b.leading();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
      auto q = ring_traits<C>::divide_exact(rem[k + b.degree()], bl);
      if (!q) return std::nullopt;
      quo[k] = *q;
      if (!ring_traits<C>::is_zero(quo[k]))
        for (int j = 0; j <= b.degree(); ++j)
          rem[k + j] -= quo[k] * b.coeff(j);
    }
    for (const auto& x : rem)
      if (!ring_traits<C>::is_zero(x)) return std::nullopt;
    return P(std::move(quo));
  }
};

using PolyL = Poly<Int, 'L'>;      // mixed-Tate classes live in Z[L]
using PolyZ = Poly<Int, 'z'>;      // Poincare-refined elements live in Z[z]
using PolyT = Poly<Int, 't'>;      // rational-function numerators/denominators
using RatPolyZ = Poly<Rat, 'z'>;
using RatPolyT = Poly<Rat, 't'>;

}  // namespace wittzeta

#endif

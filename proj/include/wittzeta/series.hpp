#ifndef WITTZETA_SERIES_HPP
#define WITTZETA_SERIES_HPP

// Truncated power series in t over an exact ring R: coefficients c_0..c_N,
// arithmetic mod t^{N+1}. Precision N is part of the value; binary
// operations insist on equal precision rather than silently truncating.

#include <utility>
#include <vector>

#include "wittzeta/polynomial.hpp"
#include "wittzeta/rings.hpp"

namespace wittzeta {

template <class R>
class TruncatedSeries {
 public:
  TruncatedSeries() : prec_(0), c_(1, ring_traits<R>::zero()) {}
  explicit TruncatedSeries(int prec, std::vector<R> coeffs)
      : prec_(prec), c_(std::move(coeffs)) {
    if (prec_ < 0 || c_.size() != static_cast<size_t>(prec_) + 1)
      throw PreconditionError("series needs exactly prec+1 coefficients");
  }

  static TruncatedSeries zero(int prec) {
    return constant(prec, ring_traits<R>::zero());
  }
  static TruncatedSeries one(int prec) {
    return constant(prec, ring_traits<R>::one());
  }
  static TruncatedSeries constant(int prec, const R& c0) {
    check_prec(prec);
    std::vector<R> c(prec + 1, ring_traits<R>::zero());
    c[0] = c0;
    return TruncatedSeries(prec, std::move(c));
  }

  int precision() const { return prec_; }
  const std::vector<R>& coeffs() const { return c_; }
  const R& operator[](int i) const { return c_.at(i); }
  R& operator[](int i) { return c_.at(i); }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.prec_ == b.prec_ && a.c_ == b.c_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !(a == b);
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    a.require_same_precision(b);
    TruncatedSeries r = a;
    for (int i = 0; i <= a.prec_; ++i) r.c_[i] += b.c_[i];
    return r;
  }
  friend TruncatedSeries operator-(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    a.require_same_precision(b);
    TruncatedSeries r = a;
    for (int i = 0; i <= a.prec_; ++i) r.c_[i] -= b.c_[i];
    return r;
  }
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    a.require_same_precision(b);
    std::vector<R> c(a.prec_ + 1, ring_traits<R>::zero());
    for (int i = 0; i <= a.prec_; ++i) {
      if (ring_traits<R>::is_zero(a.c_[i])) continue;
      for (int j = 0; i + j <= a.prec_; ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return TruncatedSeries(a.prec_, std::move(c));
  }

  TruncatedSeries scaled(const R& s) const {
    TruncatedSeries r = *this;
    for (auto& x : r.c_) x = x * s;
    return r;
  }

  // Multiplicative inverse mod t^{N+1}; requires c_0 = 1. (All Witt-side
  // callers are unit series normalized this way, so no ring division is
  // ever needed: b_n = -sum_{k=1..n} a_k b_{n-k}.)
  TruncatedSeries reciprocal() const {
    if (!ring_traits<R>::is_one(c_[0]))
      throw PreconditionError("series reciprocal needs constant term 1");
    std::vector<R> b(prec_ + 1, ring_traits<R>::zero());
    b[0] = ring_traits<R>::one();
    for (int n = 1; n <= prec_; ++n) {
      R acc = ring_traits<R>::zero();
      for (int k = 1; k <= n; ++k) acc += c_[k] * b[n - k];
      b[n] = -acc;
    }
    return TruncatedSeries(prec_, std::move(b));
  }

  // t -> s * t^a (a >= 1): coefficient c_j lands at j*a scaled by s^j.
  // Precision is unchanged; sources beyond N/a fall off the end.
  TruncatedSeries substitute_scaled_power(const R& s, int a) const {
    if (a < 1) throw PreconditionError("substitution exponent must be >= 1");
    std::vector<R> c(prec_ + 1, ring_traits<R>::zero());
    R sj = ring_traits<R>::one();
    for (int j = 0; j * a <= prec_; ++j) {
      c[j * a] = c_[j] * sj;
      sj = sj * s;
    }
    return TruncatedSeries(prec_, std::move(c));
  }

  TruncatedSeries truncated(int new_prec) const {
    if (new_prec < 0 || new_prec > prec_)
      throw PreconditionError("cannot extend series precision");
    return TruncatedSeries(
        new_prec, std::vector<R>(c_.begin(), c_.begin() + new_prec + 1));
  }

 private:
  static void check_prec(int prec) {
    if (prec < 0) throw PreconditionError("negative series precision");
  }
  void require_same_precision(const TruncatedSeries& b) const {
    if (prec_ != b.prec_)
      throw PreconditionError("series precision mismatch: " +
                              std::to_string(prec_) + " vs " +
                              std::to_string(b.prec_));
  }
  int prec_;
  std::vector<R> c_;
};

}  // namespace wittzeta

#endif

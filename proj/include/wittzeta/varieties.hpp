#ifndef WITTZETA_VARIETIES_HPP
#define WITTZETA_VARIETIES_HPP

// Variety descriptions over finite fields and exact point counting over the
// tower F_{q^r}, r = 1..N, by direct enumeration.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "wittzeta/finite_field.hpp"
#include "wittzeta/rings.hpp"

namespace wittzeta {

// Multivariate polynomial over the prime field F_p in variables x0..x_{k-1}.
// Terms are kept sorted by exponent vector with nonzero coefficients only.
struct MultiPoly {
  struct Term {
    unsigned coeff;              // in [1, p)
    std::vector<unsigned> exps;  // one entry per variable
  };
  unsigned p = 2;
  unsigned nvars = 0;
  std::vector<Term> terms;  // empty means the zero polynomial

  bool is_zero() const { return terms.empty(); }
  bool is_homogeneous() const;
  unsigned total_degree() const;  // 0 for the zero polynomial
};

MultiPoly mp_constant(unsigned p, unsigned nvars, long c);
MultiPoly mp_variable(unsigned p, unsigned nvars, unsigned index);
MultiPoly mp_add(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_sub(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b);
MultiPoly mp_pow(const MultiPoly& a, unsigned long e);

enum class Ambient { affine, projective };

// A closed subvariety of A^n or P^n over F_q, cut out by the given
// equations (all of them simultaneously). For projective ambients every
// equation is homogeneous and points are counted in the usual quotient
// sense: (q^{..}-style cone count) / (q^r - 1) over each extension F_{q^r}.
struct VarietySpec {
  FqDescriptor field;
  Ambient ambient = Ambient::affine;
  unsigned dim = 1;  // the n of A^n or P^n
  std::vector<MultiPoly> equations;
  std::string label;

  unsigned coordinate_count() const {
    return ambient == Ambient::affine ? dim : dim + 1;
  }
};

// Text format, one declaration per line ('#' starts a comment):
//   field p=<prime> f=<degree>
//   ambient affine <n>   |   ambient projective <n>
//   poly <expression in x0..x_{k-1}>         (zero or more lines)
VarietySpec parse_variety_text(const std::string& text,
                               const std::string& label);
VarietySpec parse_variety_file(const std::string& path);

// c_r = #X(F_{q^r}) for r = 1..prec over the ground field of X.
struct CountSequence {
  FqDescriptor field;
  std::vector<Int> counts;  // counts[r-1] = c_r

  int prec() const { return static_cast<int>(counts.size()); }
  const Int& c(int r) const;  // 1-based
};

// Number of closed points of each degree d = 1..prec.
struct ClosedPointTally {
  FqDescriptor field;
  std::vector<Int> points;  // points[d-1] = M_d

  int prec() const { return static_cast<int>(points.size()); }
  const Int& m(int d) const;  // 1-based
};

inline constexpr std::uint64_t kDefaultBudget = 20'000'000;

// Point counts by enumeration; throws BudgetExceededError before starting
// a pass whose raw tuple count exceeds `budget`.
Int count_points(const VarietySpec& v, int r,
                 std::uint64_t budget = kDefaultBudget);
CountSequence count_sequence(const VarietySpec& v, int prec,
                             std::uint64_t budget = kDefaultBudget);

// Nonzero solutions of a projective variety's cone in A^{n+1}, undivided.
Int count_cone_points(const VarietySpec& v, int r,
                      std::uint64_t budget = kDefaultBudget);

// Points of X_1 x ... x X_k (same ground field), counted in one joint
// enumeration rather than by multiplying per-factor counts.
Int count_product_points(const std::vector<VarietySpec>& factors, int r,
                         std::uint64_t budget = kDefaultBudget);
CountSequence count_product_sequence(const std::vector<VarietySpec>& factors,
                                     int prec,
                                     std::uint64_t budget = kDefaultBudget);

// Componentwise product c_r(X) * c_r(Y) — the count sequence of X x Y.
CountSequence product_counts(const CountSequence& a, const CountSequence& b);

// Moebius inversion M_d = (1/d) sum_{e | d} mu(d/e) c_e. Throws TallyError
// if any M_d comes out non-integral or negative.
ClosedPointTally closed_point_tally(const CountSequence& c);

// Counts of the Weil restriction along F_{q^m} / F_q:
// c_r(Res X') = c_{r/gcd(m,r)}(X')^{gcd(m,r)}. Input counts live over
// F_{q^m} (descriptor degree divisible by m); output lives over F_q.
CountSequence weil_restriction_counts(const CountSequence& a, int m);

// Number of effective zero-cycles of degree n, assembled from the tally by
// distributing degree over closed points with multiplicity
// (stars-and-bars per degree). Needs tally precision >= n.
Int effective_zero_cycle_count(const ClosedPointTally& t, int n);

}  // namespace wittzeta

#endif

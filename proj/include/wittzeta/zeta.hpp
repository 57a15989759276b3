#ifndef WITTZETA_ZETA_HPP
#define WITTZETA_ZETA_HPP

// Zeta functions of varieties over F_q as elements of the truncated big
// Witt ring W(Z), plus the classical product/structure formulas around
// them, each computable by at least two independent routes so the CLI can
// machine-check the identities.

#include <cstdint>
#include <string>
#include <vector>

#include "wittzeta/lambda.hpp"
#include "wittzeta/varieties.hpp"
#include "wittzeta/witt.hpp"

namespace wittzeta {

// Z(X, t) truncated mod t^{prec+1}, remembering the ground field.
struct ZetaElement {
  FqDescriptor field;
  WittElement<Int> witt;

  int precision() const { return witt.precision(); }
};

// exp(sum_r c_r t^r / r) via the ghost components g_r = c_r.
ZetaElement zeta_from_counts(const CountSequence& c);
ZetaElement zeta_of(const VarietySpec& v, int prec,
                    std::uint64_t budget = kDefaultBudget);

// prod_{d=1..prec} (1 - t^d)^{-M_d}; independent of the ghost recursion.
WittElement<Int> closed_point_form(const ClosedPointTally& t, int prec);

// Z(c t): coefficient c_j picks up a factor c^j. Equals the Witt product
// with the Teichmuller lift [c].
WittElement<Int> coefficient_twist(const WittElement<Int>& z, const Int& c);

// X over F_{q^m} for the same equations.
VarietySpec base_change(const VarietySpec& v, int m);

// --- rational form -------------------------------------------------------

struct RationalForm {
  Poly<Int, 't'> num, den;  // den(0) = 1, coprime integer polynomials
};

// Minimal-denominator rational function matching the series to its full
// precision, denominator degree <= dmax. Needs 2*dmax + 1 <= precision;
// throws NoRationalFormError if nothing fits.
RationalForm rational_reconstruct(const TruncatedSeries<Int>& s, int dmax);

// "(1-t)^2*(1-2*t)"-style display; factors the numerator and denominator
// greedily into (1 - a*t^m) pieces and leaves anything else verbatim.
std::string format_rational_form(const RationalForm& f);

// --- mixed Tate / point-count polynomials --------------------------------

// The zeta element sum_W h_i [L^i] over Z[L] of a class whose point counts
// are h(q): specializing L to q recovers the variety's zeta element.
WittElement<Poly<Int, 'L'>> mixed_tate_zeta(const Poly<Int, 'L'>& h,
                                            int prec);
WittElement<Int> specialize_L(const WittElement<Poly<Int, 'L'>>& z,
                              const Int& q);

// --- symmetric powers from Betti numbers (Macdonald) ----------------------

// Generating series of Euler characteristics of symmetric powers, weighted
// by the grading variable z, for a space with Betti numbers b_0..b_m:
// prod_j (1 - z^j t)^{(-1)^{j+1} b_j}. Three routes to the same element of
// W(Z[z]): plain series powers, a Witt-linear combination of Teichmuller
// lifts, and the ghost side sum_i (-1)^i b_i z^{ir}.
WittElement<Poly<Int, 'z'>> macdonald_product_form(
    const std::vector<Int>& betti, int prec);
WittElement<Poly<Int, 'z'>> macdonald_witt_sum(const std::vector<Int>& betti,
                                               int prec);
GhostVector<Poly<Int, 'z'>> macdonald_ghost(const std::vector<Int>& betti,
                                            int prec);
std::vector<Int> kunneth_betti(const std::vector<Int>& a,
                               const std::vector<Int>& b);

// --- Hilbert scheme / higher-rank series ----------------------------------

// prod_{n>=1} (1 - t^n)^{-e}: Euler characteristics of Hilbert schemes of
// points on a surface with Euler characteristic e (Goettsche).
WittElement<Int> goettsche_euler_series(const Int& e, int prec);

// Yoshioka-style product for a base Y with zeta element Z:
//   prod_{a>=1} Z(q^{2a-1} t^a) / Z(q^{2a-2} t^a)
// and its Witt form sum_W V_a( Z(q^{2a-1} t) -_W Z(q^{2a-2} t) ).
WittElement<Int> yoshioka_product_form(const ZetaElement& z, int prec);
WittElement<Int> yoshioka_witt_form(const ZetaElement& z, int prec);
// product form, with the Witt form checked against it internally
WittElement<Int> yoshioka_series(const ZetaElement& z, int prec);

// --- verification ----------------------------------------------------------

struct VerificationReport {
  std::string slug;      // e.g. "product"
  std::string identity;  // the equation being checked, human-readable
  std::string detail;    // instance: labels, field, precision
  std::string lhs_text, rhs_text;
  std::string lhs_digest, rhs_digest;
  int prec = 0;
  bool verified = false;

  std::string to_text() const;    // multi-line, last line VERIFIED or FAIL
  std::string to_record() const;  // one line, digests instead of series
};

VerificationReport verify_product_theorem(const VarietySpec& x,
                                          const VarietySpec& y, int prec,
                                          std::uint64_t budget = kDefaultBudget);
VerificationReport verify_base_change(const VarietySpec& x, int m, int prec,
                                      std::uint64_t budget = kDefaultBudget);
VerificationReport verify_affine_fibration(const VarietySpec& x, int n,
                                           int prec,
                                           std::uint64_t budget = kDefaultBudget);
VerificationReport verify_macdonald(const std::vector<Int>& betti, int prec);
VerificationReport verify_goettsche(const Int& e, int prec);
VerificationReport verify_yoshioka(const VarietySpec& y, int prec,
                                   std::uint64_t budget = kDefaultBudget);

}  // namespace wittzeta

#endif

#ifndef WITTZETA_FORMAT_HPP
#define WITTZETA_FORMAT_HPP

// Text round-trip layer: rendering series/polynomials for humans and for
// records, and parsing the literals the command-line tools accept.

#include <cstdint>
#include <string>

#include "wittzeta/endo.hpp"
#include "wittzeta/polynomial.hpp"
#include "wittzeta/series.hpp"
#include "wittzeta/witt.hpp"

namespace wittzeta {

// Human form: "1 + 3*t + 7*t^2 + O(t^3)". Zero coefficients are skipped,
// unit coefficients elided, signs folded into the separators; the trailing
// O(t^{N+1}) always names the first unknown power.
std::string format_series(const TruncatedSeries<Int>& s);
std::string format_series(const TruncatedSeries<Rat>& s);
std::string format_series(const TruncatedSeries<Poly<Int, 'L'>>& s);
std::string format_series(const TruncatedSeries<Poly<Int, 'z'>>& s);

// Machine form: "coeffs=1,3,7 prec=2" — parseable back via
// parse_series_literal, and the input to digests.
std::string record_series(const TruncatedSeries<Int>& s);
std::string record_series(const TruncatedSeries<Rat>& s);

template <char V>
std::string format_poly(const Poly<Int, V>& p);
extern template std::string format_poly<'L'>(const Poly<Int, 'L'>&);
extern template std::string format_poly<'z'>(const Poly<Int, 'z'>&);
extern template std::string format_poly<'t'>(const Poly<Int, 't'>&);

// FNV-1a 64-bit digest as 16 hex characters; used to keep verification
// records one line long no matter how large the coefficients get.
std::string digest(const std::string& text);

// Series literal in the variable t, e.g. "1/(1-2t)", "(1-t)^2 (1+t)",
// "1 + 3t + 7t^2 + O(t^3)", or a record "coeffs=1,3,7 prec=2".
// Arithmetic runs over Q; the result must have integer coefficients and
// constant term 1. An explicit O(t^k) pins the precision to k-1, otherwise
// `default_prec` is used.
WittElement<Int> parse_series_literal(const std::string& text,
                                      int default_prec);

// "0,1;1,1" — rows separated by ';', integer entries by ','.
SquareMatrix<Int> parse_matrix_literal(const std::string& text);

// Polynomial literal in the single variable L, e.g. "1 + 2*L + L^2".
Poly<Int, 'L'> parse_poly_L(const std::string& text);

}  // namespace wittzeta

#endif

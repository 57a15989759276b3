#ifndef WITTZETA_CLI_HPP
#define WITTZETA_CLI_HPP

// Command-line front end. All commands write their result to `out` and
// diagnostics to `err`, and report through the exit code:
//
//   0  success; for `verify`, the identity held at the requested precision
//   1  a `verify` run completed and the two sides disagree
//   2  usage errors and input syntax errors (bad literals, bad .var files)
//   3  computational limits: enumeration budget exceeded, integrality or
//      consistency failures, no rational form where one was required
//
// Commands:
//   zeta FILE             counts, series and rational form of a variety
//   count FILE            point counts over the extension tower
//   witt add|mul A B      ring operations on series literals
//   witt frob|ver M A     Frobenius / Verschiebung operators
//   endo charpoly MAT     det(1 - tM)^{-1} of an integer matrix
//   kapranov POLY         zeta of a point-count polynomial in L
//   verify ...            machine-check one of the product/structure laws
//
// Series literals accept arithmetic ("1/((1-t)(1-2t))"), an O(t^k) marker
// to pin the precision, or the record form "coeffs=1,3,7 prec=2".

#include <iosfwd>
#include <string>
#include <vector>

#include "wittzeta/zeta.hpp"

namespace wittzeta {

// 0 when the report says VERIFIED, 1 otherwise.
int verdict_exit_code(const VerificationReport& r);

// Run one command; `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace wittzeta

#endif

#ifndef WITTZETA_ERRORS_HPP
#define WITTZETA_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wittzeta {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// A coefficient produced by a rational-lift recursion failed to retract
// into the base ring. `index` is the first failing series index.
struct IntegralityError : Error {
  int index;
  IntegralityError(int n, const std::string& what_failed)
      : Error("non-integral coefficient at index " + std::to_string(n) +
              ": " + what_failed),
        index(n) {}
};

// Tuple enumeration would exceed the configured budget.
struct BudgetExceededError : Error {
  std::string needed;  // decimal tuple count (can exceed uint64)
  std::uint64_t budget;
  BudgetExceededError(std::string needed_tuples, std::uint64_t b)
      : Error("enumeration of " + needed_tuples +
              " tuples exceeds budget " + std::to_string(b)),
        needed(std::move(needed_tuples)),
        budget(b) {}
};

// Bad arguments at an API boundary: mismatched precision, mismatched field,
// out-of-range index, non-unit series, and so on.
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& msg) : Error(msg) {}
};

// Syntax or semantic error in user-supplied text (variety files, series
// literals, matrix literals). Line/column are 1-based; line 0 means the
// input is a one-line literal.
struct ParseError : Error {
  int line, col;
  ParseError(const std::string& msg, int line_, int col_)
      : Error((line_ > 0 ? "line " + std::to_string(line_) + ":" +
                               std::to_string(col_) + ": "
                         : "col " + std::to_string(col_) + ": ") +
              msg),
        line(line_),
        col(col_) {}
};

struct NotPrimeError : ParseError {
  NotPrimeError(unsigned long p, int line_, int col_)
      : ParseError("p=" + std::to_string(p) + " is not prime", line_, col_) {}
};

// Moebius inversion of a count sequence produced a non-integral or negative
// closed-point tally (the input was not a variety count sequence).
struct TallyError : Error {
  int index;
  TallyError(int d, const std::string& msg)
      : Error("closed-point tally at degree " + std::to_string(d) + ": " +
              msg),
        index(d) {}
};

// No rational function with denominator degree <= dmax matches the series.
struct NoRationalFormError : Error {
  explicit NoRationalFormError(int dmax)
      : Error("no rational form with denominator degree <= " +
              std::to_string(dmax)) {}
};

// Two internally computed forms of the same identity disagree. Reaching this
// means a bug, not bad input.
struct InconsistencyError : Error {
  explicit InconsistencyError(const std::string& msg) : Error(msg) {}
};

}  // namespace wittzeta

#endif

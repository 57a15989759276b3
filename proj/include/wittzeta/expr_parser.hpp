#ifndef WITTZETA_EXPR_PARSER_HPP
#define WITTZETA_EXPR_PARSER_HPP

// One recursive-descent core for every textual expression this project
// accepts (variety equations, series literals, L-polynomials):
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/')? factor)*     -- '/' only where enabled;
//                                                  juxtaposition multiplies
//   factor := atom ('^' uint)?
//   atom   := uint | identifier | '(' expr ')' | 'O' '(' ident '^' uint ')'
//
// The Domain parameter supplies the value type and the semantics:
//   using value_type = ...;
//   static constexpr bool allow_division;   // '/' operator
//   static constexpr bool allow_big_o;      // trailing O(t^k) markers
//   value_type from_uint(const std::string& digits, int line, int col);
//   value_type variable(const std::string& name, int line, int col);
//   value_type add/sub/mul(value_type, value_type);
//   value_type div(value_type, value_type, int line, int col);   // optional
//   value_type pow(value_type, unsigned long, int line, int col);
//   value_type big_o(unsigned long k, int line, int col);        // optional
//
// Errors are ParseError with 1-based columns into the given text.

#include <cctype>
#include <string>
#include <string_view>

#include "wittzeta/errors.hpp"

namespace wittzeta::detail {

template <class Domain>
class ExprParser {
 public:
  using value_type = typename Domain::value_type;

  // `col_offset` shifts reported columns when `text` is a slice of a longer
  // line (columns stay 1-based within the original line).
  ExprParser(Domain& dom, std::string_view text, int line, int col_offset = 0)
      : dom_(dom), text_(text), line_(line), offset_(col_offset) {
    advance();
  }

  value_type parse() {
    value_type v = expr();
    if (kind_ != Kind::End)
      throw ParseError("unexpected '" + tok_ + "'", line_, col_);
    return v;
  }

 private:
  enum class Kind { Num, Ident, Op, End };

  void advance() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    col_ = static_cast<int>(pos_) + 1 + offset_;
    if (pos_ >= text_.size()) {
      kind_ = Kind::End;
      tok_.clear();
      return;
    }
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_])))
        ++pos_;
      kind_ = Kind::Num;
      tok_.assign(text_.substr(start, pos_ - start));
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_'))
        ++pos_;
      kind_ = Kind::Ident;
      tok_.assign(text_.substr(start, pos_ - start));
      return;
    }
    if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^' ||
        c == '(' || c == ')') {
      kind_ = Kind::Op;
      tok_.assign(1, c);
      ++pos_;
      return;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", line_,
                     col_);
  }

  bool at_op(char c) const { return kind_ == Kind::Op && tok_[0] == c; }

  void expect_op(char c, const char* what) {
    if (!at_op(c))
      throw ParseError(std::string("expected ") + what, line_, col_);
    advance();
  }

  unsigned long take_uint(const char* what) {
    if (kind_ != Kind::Num)
      throw ParseError(std::string("expected ") + what, line_, col_);
    if (tok_.size() > 9)
      throw ParseError("exponent too large", line_, col_);
    unsigned long v = std::stoul(tok_);
    advance();
    return v;
  }

  value_type expr() {
    value_type v = term();
    while (at_op('+') || at_op('-')) {
      bool plus = tok_[0] == '+';
      advance();
      value_type rhs = term();
      v = plus ? dom_.add(std::move(v), std::move(rhs))
               : dom_.sub(std::move(v), std::move(rhs));
    }
    return v;
  }

  bool factor_ahead() const {
    return kind_ == Kind::Num || kind_ == Kind::Ident || at_op('(');
  }

  value_type term() {
    value_type v = factor();
    for (;;) {
      if (at_op('*')) {
        advance();
        v = dom_.mul(std::move(v), factor());
      } else if (at_op('/')) {
        if constexpr (Domain::allow_division) {
          int line = line_, col = col_;
          advance();
          v = dom_.div(std::move(v), factor(), line, col);
        } else {
          return v;  // '/' is not part of this grammar; caller reports it
        }
      } else if (factor_ahead()) {  // juxtaposition: "2t", "(1-t)(1+t)"
        v = dom_.mul(std::move(v), factor());
      } else {
        return v;
      }
    }
  }

  value_type factor() {
    value_type v = atom();
    if (at_op('^')) {
      int line = line_, col = col_;
      advance();
      unsigned long e = take_uint("a non-negative integer exponent");
      v = dom_.pow(std::move(v), e, line, col);
    }
    return v;
  }

  value_type atom() {
    if (kind_ == Kind::Num) {
      value_type v = dom_.from_uint(tok_, line_, col_);
      advance();
      return v;
    }
    if (kind_ == Kind::Ident) {
      if constexpr (Domain::allow_big_o) {
        if (tok_ == "O") return big_o_atom();
      }
      value_type v = dom_.variable(tok_, line_, col_);
      advance();
      return v;
    }
    if (at_op('(')) {
      advance();
      value_type v = expr();
      expect_op(')', "')'");
      return v;
    }
    throw ParseError("expected a number, variable, or '('", line_, col_);
  }

  value_type big_o_atom() {
    int line = line_, col = col_;
    advance();  // past 'O'
    expect_op('(', "'(' after O");
    if (kind_ != Kind::Ident)
      throw ParseError("expected the series variable inside O(...)", line_,
                       col_);
    advance();
    expect_op('^', "'^' inside O(...)");
    unsigned long k = take_uint("an exponent inside O(...)");
    expect_op(')', "')'");
    return dom_.big_o(k, line, col);
  }

  Domain& dom_;
  std::string_view text_;
  int line_;
  int offset_ = 0;
  size_t pos_ = 0;
  Kind kind_ = Kind::End;
  std::string tok_;
  int col_ = 1;
};

}  // namespace wittzeta::detail

#endif

#include "wittzeta/format.hpp"

#include <cctype>
#include <cstdio>
#include <optional>
#include <vector>

#include "wittzeta/expr_parser.hpp"

namespace wittzeta {

namespace {

std::string tpow(int j) {
  return j == 1 ? "t" : "t^" + std::to_string(j);
}

struct RenderedCoeff {
  std::string abs_text;  // magnitude, no sign
  bool negative = false;
  bool unit = false;  // exactly +-1: elide in front of t^j
};

RenderedCoeff render(const Int& c) {
  RenderedCoeff r;
  r.negative = sgn(c) < 0;
  Int a = abs(c);
  r.abs_text = a.get_str();
  r.unit = a == 1;
  return r;
}

RenderedCoeff render(const Rat& c) {
  RenderedCoeff r;
  r.negative = sgn(c) < 0;
  Rat a = abs(c);
  r.abs_text = a.get_str();
  r.unit = a == 1;
  return r;
}

template <char V>
std::string monomial(const Int& abs_coeff, unsigned deg) {
  std::string var(1, V);
  std::string vp = deg == 1 ? var : var + "^" + std::to_string(deg);
  if (deg == 0) return abs_coeff.get_str();
  if (abs_coeff == 1) return vp;
  return abs_coeff.get_str() + "*" + vp;
}

template <char V>
RenderedCoeff render(const Poly<Int, V>& p) {
  if (p.is_constant()) return render(p.constant_term());
  int nonzero = 0, only = -1;
  for (int i = 0; i <= p.degree(); ++i)
    if (sgn(p.coeff(i)) != 0) {
      ++nonzero;
      only = i;
    }
  RenderedCoeff r;
  if (nonzero == 1) {
    const Int& c = p.coeff(only);
    r.negative = sgn(c) < 0;
    r.abs_text = monomial<V>(abs(c), static_cast<unsigned>(only));
  } else {
    r.abs_text = "(" + format_poly(p) + ")";
  }
  return r;
}

template <class R>
std::string series_text(const TruncatedSeries<R>& s) {
  std::string out;
  bool first = true;
  for (int j = 0; j <= s.precision(); ++j) {
    if (ring_traits<R>::is_zero(s[j])) continue;
    RenderedCoeff rc = render(s[j]);
    if (first)
      out += rc.negative ? "-" : "";
    else
      out += rc.negative ? " - " : " + ";
    if (j == 0)
      out += rc.abs_text;
    else if (rc.unit)
      out += tpow(j);
    else
      out += rc.abs_text + "*" + tpow(j);
    first = false;
  }
  if (first) out += "0";
  out += " + O(" + tpow(s.precision() + 1) + ")";
  return out;
}

template <class R>
std::string record_text(const TruncatedSeries<R>& s) {
  std::string out = "coeffs=";
  for (int j = 0; j <= s.precision(); ++j) {
    if (j) out += ",";
    out += R(s[j]).get_str();
  }
  out += " prec=" + std::to_string(s.precision());
  return out;
}

}  // namespace

std::string format_series(const TruncatedSeries<Int>& s) {
  return series_text(s);
}
std::string format_series(const TruncatedSeries<Rat>& s) {
  return series_text(s);
}
std::string format_series(const TruncatedSeries<Poly<Int, 'L'>>& s) {
  return series_text(s);
}
std::string format_series(const TruncatedSeries<Poly<Int, 'z'>>& s) {
  return series_text(s);
}

std::string record_series(const TruncatedSeries<Int>& s) {
  return record_text(s);
}
std::string record_series(const TruncatedSeries<Rat>& s) {
  return record_text(s);
}

template <char V>
std::string format_poly(const Poly<Int, V>& p) {
  if (p.degree() < 0) return "0";
  std::string out;
  bool first = true;
  for (int i = 0; i <= p.degree(); ++i) {
    const Int& c = p.coeff(i);
    if (sgn(c) == 0) continue;
    if (first)
      out += sgn(c) < 0 ? "-" : "";
    else
      out += sgn(c) < 0 ? " - " : " + ";
    out += monomial<V>(abs(c), static_cast<unsigned>(i));
    first = false;
  }
  return out;
}

template std::string format_poly<'L'>(const Poly<Int, 'L'>&);
template std::string format_poly<'z'>(const Poly<Int, 'z'>&);
template std::string format_poly<'t'>(const Poly<Int, 't'>&);

std::string digest(const std::string& text) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(h));
  return std::string(buf);
}

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

bool valid_int_literal(const std::string& s) {
  size_t i = (!s.empty() && s[0] == '-') ? 1 : 0;
  if (i >= s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

bool valid_rat_literal(const std::string& s) {
  size_t slash = s.find('/');
  if (slash == std::string::npos) return valid_int_literal(s);
  return valid_int_literal(s.substr(0, slash)) &&
         valid_int_literal(s.substr(slash + 1)) &&
         s.find('/', slash + 1) == std::string::npos;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

// evaluation domain for series literals: truncated series over Q
struct SeriesDomain {
  using value_type = TruncatedSeries<Rat>;
  static constexpr bool allow_division = true;
  static constexpr bool allow_big_o = true;

  int prec;
  std::optional<unsigned long> omin;

  value_type from_uint(const std::string& digits, int, int) {
    return value_type::constant(prec, Rat(Int(digits)));
  }
  value_type variable(const std::string& name, int line, int col) {
    if (name != "t")
      throw ParseError("unknown variable '" + name + "' (series use t)",
                       line, col);
    value_type v = value_type::zero(prec);
    if (prec >= 1) v[1] = Rat(1);
    return v;
  }
  value_type add(value_type a, value_type b) { return a + b; }
  value_type sub(value_type a, value_type b) { return a - b; }
  value_type mul(value_type a, value_type b) { return a * b; }
  value_type div(value_type a, value_type b, int line, int col) {
    const Rat& b0 = b[0];
    if (sgn(b0) == 0)
      throw ParseError("division by a series with zero constant term", line,
                       col);
    Rat inv = make_rat(b0.get_den(), b0.get_num());
    value_type recip = b.scaled(inv).reciprocal().scaled(inv);
    return a * recip;
  }
  value_type pow(value_type a, unsigned long e, int line, int col) {
    if (e > 4096) throw ParseError("exponent too large", line, col);
    value_type r = value_type::constant(prec, Rat(1));
    value_type base = std::move(a);
    while (e > 0) {
      if (e & 1ul) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }
  value_type big_o(unsigned long k, int line, int col) {
    if (k < 1) throw ParseError("O(t^0) leaves nothing known", line, col);
    if (!omin || k < *omin) omin = k;
    return value_type::zero(prec);
  }
};

TruncatedSeries<Rat> parse_record_form(const std::string& text) {
  auto fields = split_on(trim(text), ' ');
  std::vector<std::string> parts;
  for (auto& f : fields)
    if (!f.empty()) parts.push_back(f);
  if (parts.size() != 2 || parts[0].rfind("coeffs=", 0) != 0 ||
      parts[1].rfind("prec=", 0) != 0)
    throw ParseError("record form is: coeffs=<c0,c1,...> prec=<N>", 0, 1);
  auto cs = split_on(parts[0].substr(7), ',');
  const std::string& ps = parts[1].substr(5);
  if (ps.empty() || ps.find_first_not_of("0123456789") != std::string::npos ||
      ps.size() > 6)
    throw ParseError("bad prec field", 0, 1);
  int prec = std::stoi(ps);
  if (static_cast<size_t>(prec) + 1 != cs.size())
    throw ParseError("prec does not match the coefficient count", 0, 1);
  std::vector<Rat> coeffs;
  for (const std::string& c : cs) {
    if (!valid_rat_literal(c))
      throw ParseError("bad coefficient '" + c + "'", 0, 1);
    Rat q(c, 10);
    if (sgn(Int(q.get_den())) == 0)
      throw ParseError("coefficient with zero denominator", 0, 1);
    q.canonicalize();
    coeffs.push_back(std::move(q));
  }
  return TruncatedSeries<Rat>(prec, std::move(coeffs));
}

}  // namespace

WittElement<Int> parse_series_literal(const std::string& text,
                                      int default_prec) {
  if (default_prec < 1)
    throw PreconditionError("series precision must be >= 1");
  TruncatedSeries<Rat> rs = TruncatedSeries<Rat>::zero(0);
  if (trim(text).rfind("coeffs=", 0) == 0) {
    rs = parse_record_form(text);
  } else {
    SeriesDomain dom{default_prec, std::nullopt};
    detail::ExprParser<SeriesDomain> p1(dom, text, 0);
    rs = p1.parse();
    if (dom.omin) {
      int pinned = static_cast<int>(*dom.omin) - 1;
      if (pinned != default_prec) {
        SeriesDomain dom2{pinned, std::nullopt};
        detail::ExprParser<SeriesDomain> p2(dom2, text, 0);
        rs = p2.parse();
      }
    }
  }
  if (rs.precision() < 1)
    throw ParseError("series must be known at least to O(t^2)", 0, 1);
  std::vector<Int> coeffs;
  for (int j = 0; j <= rs.precision(); ++j) {
    auto v = ring_traits<Int>::retract(rs[j]);
    if (!v)
      throw ParseError("coefficient of " + tpow(j) + " is not an integer", 0,
                       1);
    coeffs.push_back(std::move(*v));
  }
  if (coeffs[0] != 1)
    throw ParseError("series must have constant term 1", 0, 1);
  return WittElement<Int>(
      TruncatedSeries<Int>(rs.precision(), std::move(coeffs)));
}

SquareMatrix<Int> parse_matrix_literal(const std::string& text) {
  auto rows = split_on(text, ';');
  size_t n = rows.size();
  if (n == 0 || trim(text).empty())
    throw ParseError("empty matrix literal", 0, 1);
  SquareMatrix<Int> m(static_cast<int>(n));
  size_t offset = 0;
  for (size_t i = 0; i < n; ++i) {
    auto entries = split_on(rows[i], ',');
    if (entries.size() != n)
      throw ParseError("matrix is not square: row " + std::to_string(i + 1) +
                           " has " + std::to_string(entries.size()) +
                           " of " + std::to_string(n) + " entries",
                       0, static_cast<int>(offset) + 1);
    size_t entry_at = offset;
    for (size_t j = 0; j < n; ++j) {
      std::string e = trim(entries[j]);
      if (!valid_int_literal(e))
        throw ParseError("bad matrix entry '" + entries[j] + "'", 0,
                         static_cast<int>(entry_at) + 1);
      m.at(static_cast<int>(i), static_cast<int>(j)) = Int(e);
      entry_at += entries[j].size() + 1;
    }
    offset += rows[i].size() + 1;
  }
  return m;
}

namespace {

struct PolyLDomain {
  using value_type = Poly<Int, 'L'>;
  static constexpr bool allow_division = false;
  static constexpr bool allow_big_o = false;

  value_type from_uint(const std::string& digits, int, int) {
    return value_type(Int(digits));
  }
  value_type variable(const std::string& name, int line, int col) {
    if (name != "L")
      throw ParseError("unknown variable '" + name + "' (expected L)", line,
                       col);
    return value_type::var(1, Int(1));
  }
  value_type add(value_type a, value_type b) { return a + b; }
  value_type sub(value_type a, value_type b) { return a - b; }
  value_type mul(value_type a, value_type b) { return a * b; }
  value_type pow(value_type a, unsigned long e, int line, int col) {
    if (e > 1024 || (a.degree() > 0 && e * a.degree() > 4096))
      throw ParseError("exponent too large", line, col);
    value_type r(Int(1));
    value_type base = std::move(a);
    while (e > 0) {
      if (e & 1ul) r = r * base;
      base = base * base;
      e >>= 1;
    }
    return r;
  }
};

}  // namespace

Poly<Int, 'L'> parse_poly_L(const std::string& text) {
  PolyLDomain dom;
  detail::ExprParser<PolyLDomain> p(dom, text, 0);
  return p.parse();
}

}  // namespace wittzeta

#include "wittzeta/varieties.hpp"

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>

#include "wittzeta/expr_parser.hpp"

namespace wittzeta {

bool MultiPoly::is_homogeneous() const {
  if (terms.empty()) return true;
  unsigned d = 0;
  for (unsigned e : terms.front().exps) d += e;
  for (const Term& t : terms) {
    unsigned s = 0;
    for (unsigned e : t.exps) s += e;
    if (s != d) return false;
  }
  return true;
}

unsigned MultiPoly::total_degree() const {
  unsigned d = 0;
  for (const Term& t : terms) {
    unsigned s = 0;
    for (unsigned e : t.exps) s += e;
    if (s > d) d = s;
  }
  return d;
}

namespace {

MultiPoly from_map(unsigned p, unsigned nvars,
                   const std::map<std::vector<unsigned>, unsigned>& m) {
  MultiPoly r;
  r.p = p;
  r.nvars = nvars;
  for (const auto& [exps, c] : m)
    if (c % p != 0) r.terms.push_back({c % p, exps});
  return r;
}

void check_compatible(const MultiPoly& a, const MultiPoly& b) {
  if (a.p != b.p || a.nvars != b.nvars)
    throw PreconditionError("polynomials over different rings");
}

}  // namespace

MultiPoly mp_constant(unsigned p, unsigned nvars, long c) {
  MultiPoly r;
  r.p = p;
  r.nvars = nvars;
  long v = c % static_cast<long>(p);
  if (v < 0) v += p;
  if (v != 0) r.terms.push_back({static_cast<unsigned>(v),
                                 std::vector<unsigned>(nvars, 0)});
  return r;
}

MultiPoly mp_variable(unsigned p, unsigned nvars, unsigned index) {
  if (index >= nvars) throw PreconditionError("variable index out of range");
  MultiPoly r;
  r.p = p;
  r.nvars = nvars;
  std::vector<unsigned> e(nvars, 0);
  e[index] = 1;
  r.terms.push_back({1, std::move(e)});
  return r;
}

MultiPoly mp_add(const MultiPoly& a, const MultiPoly& b) {
  check_compatible(a, b);
  std::map<std::vector<unsigned>, unsigned> m;
  for (const auto& t : a.terms) m[t.exps] = (m[t.exps] + t.coeff) % a.p;
  for (const auto& t : b.terms) m[t.exps] = (m[t.exps] + t.coeff) % a.p;
  return from_map(a.p, a.nvars, m);
}

MultiPoly mp_sub(const MultiPoly& a, const MultiPoly& b) {
  check_compatible(a, b);
  std::map<std::vector<unsigned>, unsigned> m;
  for (const auto& t : a.terms) m[t.exps] = (m[t.exps] + t.coeff) % a.p;
  for (const auto& t : b.terms)
    m[t.exps] = (m[t.exps] + a.p - t.coeff) % a.p;
  return from_map(a.p, a.nvars, m);
}

MultiPoly mp_mul(const MultiPoly& a, const MultiPoly& b) {
  check_compatible(a, b);
  std::map<std::vector<unsigned>, unsigned> m;
  for (const auto& s : a.terms)
    for (const auto& t : b.terms) {
      std::vector<unsigned> e(a.nvars);
      for (unsigned i = 0; i < a.nvars; ++i) e[i] = s.exps[i] + t.exps[i];
      m[e] = (m[e] + s.coeff * t.coeff) % a.p;
    }
  return from_map(a.p, a.nvars, m);
}

MultiPoly mp_pow(const MultiPoly& a, unsigned long e) {
  MultiPoly r = mp_constant(a.p, a.nvars, 1);
  MultiPoly base = a;
  while (e > 0) {
    if (e & 1ul) r = mp_mul(r, base);
    base = mp_mul(base, base);
    e >>= 1;
  }
  return r;
}

namespace {

// Domain plugged into ExprParser for `poly` lines: arithmetic over
// F_p[x0..x_{k-1}].
struct VarietyPolyDomain {
  using value_type = MultiPoly;
  static constexpr bool allow_division = false;
  static constexpr bool allow_big_o = false;

  unsigned p, nvars;

  value_type from_uint(const std::string& digits, int line, int col) {
    if (digits.size() > 9)
      throw ParseError("integer literal too large", line, col);
    return mp_constant(p, nvars, static_cast<long>(std::stoul(digits)));
  }
  value_type variable(const std::string& name, int line, int col) {
    if (name.size() < 2 || name[0] != 'x' ||
        name.find_first_not_of("0123456789", 1) != std::string::npos)
      throw ParseError("unknown variable '" + name + "'", line, col);
    unsigned long idx = std::stoul(name.substr(1));
    if (idx >= nvars)
      throw ParseError("variable " + name + " out of range (coordinates are "
                       "x0..x" + std::to_string(nvars - 1) + ")",
                       line, col);
    return mp_variable(p, nvars, static_cast<unsigned>(idx));
  }
  value_type add(value_type a, value_type b) { return mp_add(a, b); }
  value_type sub(value_type a, value_type b) { return mp_sub(a, b); }
  value_type mul(value_type a, value_type b) { return mp_mul(a, b); }
  value_type pow(value_type a, unsigned long e, int line, int col) {
    if (e > 4096) throw ParseError("exponent too large", line, col);
    return mp_pow(a, e);
  }
};

struct LineTok {
  std::string text;
  int col;  // 1-based
};

std::vector<LineTok> split_ws(const std::string& line) {
  std::vector<LineTok> out;
  size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() &&
           std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i >= line.size()) break;
    size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    out.push_back({line.substr(start, i - start),
                   static_cast<int>(start) + 1});
  }
  return out;
}

// parse "key=<uint>" returning the value
unsigned long keyed_uint(const LineTok& t, const std::string& key, int line) {
  const std::string prefix = key + "=";
  if (t.text.rfind(prefix, 0) != 0)
    throw ParseError("expected " + key + "=<number>", line, t.col);
  const std::string digits = t.text.substr(prefix.size());
  if (digits.empty() ||
      digits.find_first_not_of("0123456789") != std::string::npos ||
      digits.size() > 9)
    throw ParseError("expected " + key + "=<number>", line, t.col);
  return std::stoul(digits);
}

}  // namespace

VarietySpec parse_variety_text(const std::string& text,
                               const std::string& label) {
  VarietySpec spec;
  spec.label = label;
  bool have_field = false, have_ambient = false;

  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = raw;
    if (size_t h = line.find('#'); h != std::string::npos) line.resize(h);
    auto toks = split_ws(line);
    if (toks.empty()) continue;
    const std::string& head = toks[0].text;

    if (head == "field") {
      if (have_field)
        throw ParseError("duplicate field declaration", lineno, toks[0].col);
      if (toks.size() != 3)
        throw ParseError("expected: field p=<prime> f=<degree>", lineno,
                         toks[0].col);
      unsigned long p = keyed_uint(toks[1], "p", lineno);
      unsigned long f = keyed_uint(toks[2], "f", lineno);
      if (!is_prime(p)) throw NotPrimeError(p, lineno, toks[1].col);
      if (f < 1) throw ParseError("f must be >= 1", lineno, toks[2].col);
      spec.field = make_extension_field(static_cast<unsigned>(p),
                                        static_cast<unsigned>(f));
      have_field = true;
    } else if (head == "ambient") {
      if (have_ambient)
        throw ParseError("duplicate ambient declaration", lineno,
                         toks[0].col);
      if (toks.size() != 3)
        throw ParseError("expected: ambient affine|projective <dim>", lineno,
                         toks[0].col);
      if (toks[1].text == "affine")
        spec.ambient = Ambient::affine;
      else if (toks[1].text == "projective")
        spec.ambient = Ambient::projective;
      else
        throw ParseError("ambient must be affine or projective", lineno,
                         toks[1].col);
      const std::string& d = toks[2].text;
      if (d.empty() || d.find_first_not_of("0123456789") != std::string::npos ||
          d.size() > 4)
        throw ParseError("expected ambient dimension", lineno, toks[2].col);
      spec.dim = static_cast<unsigned>(std::stoul(d));
      if (spec.dim < 1 || spec.dim > 16)
        throw ParseError("ambient dimension out of range", lineno,
                         toks[2].col);
      have_ambient = true;
    } else if (head == "poly") {
      if (!have_field || !have_ambient)
        throw ParseError("poly must come after field and ambient", lineno,
                         toks[0].col);
      size_t expr_at = line.find("poly") + 4;
      VarietyPolyDomain dom{spec.field.p, spec.coordinate_count()};
      detail::ExprParser<VarietyPolyDomain> parser(
          dom, std::string_view(line).substr(expr_at), lineno,
          static_cast<int>(expr_at));
      MultiPoly eq = parser.parse();
      if (spec.ambient == Ambient::projective && !eq.is_homogeneous())
        throw ParseError("projective equation must be homogeneous", lineno,
                         toks[0].col);
      if (!eq.is_zero()) spec.equations.push_back(std::move(eq));
    } else {
      throw ParseError("unknown declaration '" + head + "'", lineno,
                       toks[0].col);
    }
  }
  if (!have_field) throw ParseError("missing field declaration", lineno, 1);
  if (!have_ambient)
    throw ParseError("missing ambient declaration", lineno, 1);
  return spec;
}

VarietySpec parse_variety_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open variety file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string label = path;
  if (size_t slash = label.find_last_of('/'); slash != std::string::npos)
    label = label.substr(slash + 1);
  if (size_t dot = label.rfind(".var"); dot != std::string::npos &&
      dot == label.size() - 4)
    label = label.substr(0, dot);
  return parse_variety_text(buf.str(), label);
}

const Int& CountSequence::c(int r) const {
  if (r < 1 || r > prec())
    throw PreconditionError("count index out of range");
  return counts[static_cast<size_t>(r) - 1];
}

const Int& ClosedPointTally::m(int d) const {
  if (d < 1 || d > prec())
    throw PreconditionError("tally index out of range");
  return points[static_cast<size_t>(d) - 1];
}

}  // namespace wittzeta

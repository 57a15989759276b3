#include "wittzeta/zeta.hpp"

#include <algorithm>

#include "wittzeta/format.hpp"

namespace wittzeta {

namespace {

WittElement<Rat> lift_witt(const WittElement<Int>& p) {
  std::vector<Rat> c;
  for (const Int& x : p.series().coeffs()) c.push_back(Rat(x));
  return WittElement<Rat>(
      TruncatedSeries<Rat>(p.precision(), std::move(c)));
}

WittElement<Int> retract_witt(const WittElement<Rat>& p, const char* what) {
  std::vector<Int> c;
  for (int j = 0; j <= p.precision(); ++j) {
    auto v = ring_traits<Int>::retract(p.series()[j]);
    if (!v) throw IntegralityError(j, what);
    c.push_back(std::move(*v));
  }
  return WittElement<Int>(
      TruncatedSeries<Int>(p.precision(), std::move(c)));
}

std::string field_name(const FqDescriptor& F) {
  return "F_" + std::to_string(F.q());
}

}  // namespace

ZetaElement zeta_from_counts(const CountSequence& c) {
  if (c.prec() < 1) throw PreconditionError("need at least one count");
  GhostVector<Int> g(c.prec(), c.counts);
  return ZetaElement{c.field, series_from_ghost(g)};
}

ZetaElement zeta_of(const VarietySpec& v, int prec, std::uint64_t budget) {
  return zeta_from_counts(count_sequence(v, prec, budget));
}

WittElement<Int> closed_point_form(const ClosedPointTally& t, int prec) {
  if (prec < 1) throw PreconditionError("precision must be >= 1");
  if (t.prec() < prec)
    throw PreconditionError("tally is shorter than the requested precision");
  WittElement<Int> one = teichmuller(Int(1), prec);
  WittElement<Int> acc = WittElement<Int>::zero(prec);
  for (int d = 1; d <= prec; ++d)
    acc = witt_add(acc, scale_int(t.m(d), verschiebung(d, one)));
  return acc;
}

WittElement<Int> coefficient_twist(const WittElement<Int>& z, const Int& c) {
  return WittElement<Int>(z.series().substitute_scaled_power(c, 1));
}

VarietySpec base_change(const VarietySpec& v, int m) {
  if (m < 1) throw PreconditionError("base change degree must be >= 1");
  VarietySpec out = v;
  out.field = make_extension_field(v.field.p,
                                   v.field.f * static_cast<unsigned>(m));
  if (m > 1) out.label = v.label + "/F_" + std::to_string(out.field.q());
  return out;
}

// --- rational form ---------------------------------------------------------

namespace {

// Exact solve of A x = b over Q (A given row-major, rows x cols). Returns
// false when inconsistent; free variables are set to zero.
bool solve_rational(std::vector<std::vector<Rat>>& A, std::vector<Rat>& b,
                    std::vector<Rat>& x) {
  const size_t rows = A.size(), cols = x.size();
  size_t rank = 0;
  std::vector<size_t> pivot_col;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t piv = rank;
    while (piv < rows && sgn(A[piv][col]) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(A[piv], A[rank]);
    std::swap(b[piv], b[rank]);
    Rat inv = make_rat(Int(A[rank][col].get_den()),
                       Int(A[rank][col].get_num()));
    for (size_t j = col; j < cols; ++j) A[rank][j] *= inv;
    b[rank] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || sgn(A[i][col]) == 0) continue;
      Rat f = A[i][col];
      for (size_t j = col; j < cols; ++j) A[i][j] -= f * A[rank][j];
      b[i] -= f * b[rank];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  for (size_t i = rank; i < rows; ++i)
    if (sgn(b[i]) != 0) return false;
  for (auto& xi : x) xi = Rat(0);
  for (size_t i = 0; i < rank; ++i) x[pivot_col[i]] = b[i];
  return true;
}

}  // namespace

RationalForm rational_reconstruct(const TruncatedSeries<Int>& s, int dmax) {
  const int N = s.precision();
  if (dmax < 0) throw PreconditionError("denominator degree must be >= 0");
  if (2 * dmax + 1 > N)
    throw PreconditionError(
        "series precision must be at least 2*dmax+1 for reconstruction");

  for (int k = 0; k <= dmax; ++k) {
    // denominator 1 + d_1 t + ... + d_k t^k must kill coefficients
    // dmax+1..N of the product with the series
    const int rows = N - dmax;
    std::vector<std::vector<Rat>> A(rows, std::vector<Rat>(k));
    std::vector<Rat> b(rows), d(static_cast<size_t>(k));
    for (int r = 0; r < rows; ++r) {
      int j = dmax + 1 + r;
      for (int i = 1; i <= k; ++i) A[r][i - 1] = Rat(s[j - i]);
      b[r] = -Rat(s[j]);
    }
    if (!solve_rational(A, b, d)) continue;

    std::vector<Rat> den(static_cast<size_t>(k) + 1);
    den[0] = Rat(1);
    for (int i = 1; i <= k; ++i) den[i] = d[i - 1];
    // numerator = series * denominator, degrees 0..dmax
    std::vector<Rat> num(static_cast<size_t>(dmax) + 1, Rat(0));
    for (int j = 0; j <= dmax; ++j)
      for (int i = 0; i <= std::min(j, k); ++i) num[j] += den[i] * Rat(s[j - i]);

    // clear denominators and strip content (Fatou: the reduced pair is
    // integral with den(0) = 1)
    Int lcm = 1;
    for (const Rat& v : den) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                     Int(v.get_den()).get_mpz_t());
    for (const Rat& v : num) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                     Int(v.get_den()).get_mpz_t());
    std::vector<Int> ni, di;
    Int content = 0;
    for (const Rat& v : num) {
      Rat w = v * lcm;
      ni.push_back(Int(w.get_num()));
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
              ni.back().get_mpz_t());
    }
    for (const Rat& v : den) {
      Rat w = v * lcm;
      di.push_back(Int(w.get_num()));
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(),
              di.back().get_mpz_t());
    }
    if (sgn(content) == 0) content = 1;
    if (sgn(di[0]) < 0) content = -content;
    for (Int& v : ni) {
      Int q;
      mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
      v = q;
    }
    for (Int& v : di) {
      Int q;
      mpz_divexact(q.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
      v = q;
    }
    if (di[0] != 1)
      throw InconsistencyError("reconstruction produced a non-monic unit");
    return RationalForm{Poly<Int, 't'>(std::move(ni)),
                        Poly<Int, 't'>(std::move(di))};
  }
  throw NoRationalFormError(dmax);
}

namespace {

struct GeomFactor {
  Poly<Int, 't'> factor;
  int mult;
};

// divisors of |n| in ascending order; empty when n has a prime factor
// beyond the trial bound or too many divisors (caller falls back to raw)
std::vector<Int> small_divisors(Int n) {
  n = abs(n);
  if (sgn(n) == 0) return {};
  std::vector<std::pair<Int, int>> fac;
  for (Int p = 2; p * p <= n && p < 70000; ++p) {
    if (!mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) continue;
    int e = 0;
    while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
      mpz_divexact(n.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
      ++e;
    }
    fac.emplace_back(p, e);
  }
  if (n > 1) {
    if (n > 70000 * 70000l) return {};
    fac.emplace_back(n, 1);
  }
  std::vector<Int> divs{Int(1)};
  for (auto& [p, e] : fac) {
    size_t base = divs.size();
    Int pe = 1;
    for (int i = 1; i <= e; ++i) {
      pe *= p;
      for (size_t j = 0; j < base; ++j) {
        divs.push_back(divs[j] * pe);
        if (divs.size() > 4096) return {};
      }
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

// peel off (1 - a t^m) factors, smallest m first, then smallest |a|
// (positive before negative); whatever is left stays as one raw factor
std::pair<std::vector<GeomFactor>, Poly<Int, 't'>> factor_geometric(
    Poly<Int, 't'> p) {
  std::vector<GeomFactor> out;
  for (int m = 1; m <= p.degree(); ++m) {
    auto divs = small_divisors(p.leading());
    for (size_t di = 0; di < divs.size() && m <= p.degree();) {
      bool advanced = false;
      for (Int a : {divs[di], Int(-divs[di])}) {
        std::vector<Int> fc(static_cast<size_t>(m) + 1, Int(0));
        fc[0] = 1;
        fc[static_cast<size_t>(m)] = -a;
        Poly<Int, 't'> f(std::move(fc));
        int mult = 0;
        while (true) {
          auto q = ring_traits<Poly<Int, 't'>>::divide_exact(p, f);
          if (!q) break;
          p = std::move(*q);
          ++mult;
        }
        if (mult > 0) {
          out.push_back({f, mult});
          divs = small_divisors(p.leading());
          di = 0;
          advanced = true;
          break;
        }
      }
      if (!advanced) ++di;
    }
  }
  return {std::move(out), std::move(p)};
}

// factor display is compact: "1 - 2*t" becomes "1-2*t"
std::string compact(std::string s) {
  std::erase(s, ' ');
  return s;
}

std::vector<std::string> factored_parts(const Poly<Int, 't'>& p) {
  if (p.degree() <= 0) return {compact(format_poly(p))};
  auto [factors, rest] = factor_geometric(p);
  std::vector<std::string> parts;
  for (const GeomFactor& g : factors) {
    std::string s = "(" + compact(format_poly(g.factor)) + ")";
    if (g.mult > 1) s += "^" + std::to_string(g.mult);
    parts.push_back(std::move(s));
  }
  if (rest.degree() > 0)
    parts.push_back("(" + compact(format_poly(rest)) + ")");
  else if (!ring_traits<Poly<Int, 't'>>::is_one(rest) || parts.empty())
    parts.insert(parts.begin(), compact(format_poly(rest)));
  return parts;
}

std::string join_parts(const std::vector<std::string>& parts) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += "*";
    out += parts[i];
  }
  return out;
}

}  // namespace

std::string format_rational_form(const RationalForm& f) {
  std::string num = join_parts(factored_parts(f.num));
  if (f.den.degree() <= 0) return num;
  std::vector<std::string> dp = factored_parts(f.den);
  std::string den = join_parts(dp);
  // a lone parenthesized factor needs no second wrapping after the slash
  bool simple = dp.size() == 1 && den.front() == '(' && den.back() == ')';
  if (!simple) den = "(" + den + ")";
  return num + "/" + den;
}

// --- mixed Tate ------------------------------------------------------------

WittElement<Poly<Int, 'L'>> mixed_tate_zeta(const Poly<Int, 'L'>& h,
                                            int prec) {
  using PL = Poly<Int, 'L'>;
  WittElement<PL> acc = WittElement<PL>::zero(prec);
  for (int i = 0; i <= h.degree(); ++i) {
    if (ring_traits<Int>::is_zero(h.coeff(i))) continue;
    acc = witt_add(acc,
                   scale_int(h.coeff(i),
                             teichmuller(PL::var(i, Int(1)), prec)));
  }
  return acc;
}

WittElement<Int> specialize_L(const WittElement<Poly<Int, 'L'>>& z,
                              const Int& q) {
  std::vector<Int> c;
  for (int j = 0; j <= z.precision(); ++j) c.push_back(z.series()[j](q));
  return WittElement<Int>(TruncatedSeries<Int>(z.precision(), std::move(c)));
}

// --- Macdonald -------------------------------------------------------------

namespace {

template <class R>
TruncatedSeries<R> series_int_power(TruncatedSeries<R> base, Int e) {
  if (sgn(e) < 0) {
    base = base.reciprocal();
    e = -e;
  }
  TruncatedSeries<R> r = TruncatedSeries<R>::one(base.precision());
  size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (sgn(e) == 0) return r;
  for (size_t i = bits; i-- > 0;) {
    r = r * r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = r * base;
  }
  return r;
}

}  // namespace

WittElement<Poly<Int, 'z'>> macdonald_product_form(
    const std::vector<Int>& betti, int prec) {
  using PZ = Poly<Int, 'z'>;
  TruncatedSeries<PZ> acc = TruncatedSeries<PZ>::one(prec);
  for (size_t j = 0; j < betti.size(); ++j) {
    if (ring_traits<Int>::is_zero(betti[j])) continue;
    // (1 - z^j t)^{(-1)^{j+1} b_j}
    TruncatedSeries<PZ> f = TruncatedSeries<PZ>::one(prec);
    if (prec >= 1) f[1] = PZ::var(static_cast<int>(j), Int(-1));
    Int e = (j % 2 == 0) ? -betti[j] : betti[j];
    acc = acc * series_int_power(f, e);
  }
  return WittElement<PZ>(std::move(acc));
}

WittElement<Poly<Int, 'z'>> macdonald_witt_sum(const std::vector<Int>& betti,
                                               int prec) {
  using PZ = Poly<Int, 'z'>;
  WittElement<PZ> acc = WittElement<PZ>::zero(prec);
  for (size_t j = 0; j < betti.size(); ++j) {
    if (ring_traits<Int>::is_zero(betti[j])) continue;
    Int e = (j % 2 == 0) ? betti[j] : -betti[j];
    acc = witt_add(
        acc, scale_int(e, teichmuller(PZ::var(static_cast<int>(j), Int(1)),
                                      prec)));
  }
  return acc;
}

GhostVector<Poly<Int, 'z'>> macdonald_ghost(const std::vector<Int>& betti,
                                            int prec) {
  using PZ = Poly<Int, 'z'>;
  std::vector<PZ> comps;
  for (int r = 1; r <= prec; ++r) {
    PZ g;
    for (size_t j = 0; j < betti.size(); ++j) {
      Int e = (j % 2 == 0) ? betti[j] : -betti[j];
      g = g + PZ::var(static_cast<int>(j) * r, e);
    }
    comps.push_back(std::move(g));
  }
  return GhostVector<PZ>(prec, std::move(comps));
}

std::vector<Int> kunneth_betti(const std::vector<Int>& a,
                               const std::vector<Int>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<Int> out(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// --- Hilbert scheme series --------------------------------------------------

namespace {

TruncatedSeries<Int> partition_series(int prec) {
  TruncatedSeries<Int> acc = TruncatedSeries<Int>::one(prec);
  for (int n = 1; n <= prec; ++n) {
    std::vector<Int> f(static_cast<size_t>(prec) + 1, Int(0));
    f[0] = 1;
    f[static_cast<size_t>(n)] = -1;
    acc = acc * TruncatedSeries<Int>(prec, std::move(f)).reciprocal();
  }
  return acc;
}

}  // namespace

WittElement<Int> goettsche_euler_series(const Int& e, int prec) {
  if (prec < 1) throw PreconditionError("precision must be >= 1");
  // product of the per-n powers (1 - t^n)^{-e}
  TruncatedSeries<Int> acc = TruncatedSeries<Int>::one(prec);
  for (int n = 1; n <= prec; ++n) {
    std::vector<Int> f(static_cast<size_t>(prec) + 1, Int(0));
    f[0] = 1;
    f[static_cast<size_t>(n)] = -1;
    acc = acc * series_int_power(TruncatedSeries<Int>(prec, std::move(f)), -e);
  }
  return WittElement<Int>(std::move(acc));
}

// --- Yoshioka ----------------------------------------------------------------

WittElement<Int> yoshioka_product_form(const ZetaElement& z, int prec) {
  if (prec < 1) throw PreconditionError("precision must be >= 1");
  if (z.precision() < prec)
    throw PreconditionError("zeta element precision too small");
  const TruncatedSeries<Int> S = truncated(z.witt, prec).series();
  const Int q = Int(z.field.q());
  TruncatedSeries<Int> acc = TruncatedSeries<Int>::one(prec);
  for (int a = 1; a <= prec; ++a) {
    TruncatedSeries<Int> num =
        S.substitute_scaled_power(int_pow(q, 2 * a - 1), a);
    TruncatedSeries<Int> den =
        S.substitute_scaled_power(int_pow(q, 2 * a - 2), a);
    acc = acc * num * den.reciprocal();
  }
  return WittElement<Int>(std::move(acc));
}

WittElement<Int> yoshioka_witt_form(const ZetaElement& z, int prec) {
  if (prec < 1) throw PreconditionError("precision must be >= 1");
  if (z.precision() < prec)
    throw PreconditionError("zeta element precision too small");
  WittElement<Int> Z = truncated(z.witt, prec);
  const Int q = Int(z.field.q());
  WittElement<Int> acc = WittElement<Int>::zero(prec);
  for (int n = 1; n <= prec; ++n) {
    WittElement<Int> hi = coefficient_twist(Z, int_pow(q, 2 * n - 1));
    WittElement<Int> lo = coefficient_twist(Z, int_pow(q, 2 * n - 2));
    acc = witt_add(acc, verschiebung(n, witt_sub(hi, lo)));
  }
  return acc;
}

WittElement<Int> yoshioka_series(const ZetaElement& z, int prec) {
  WittElement<Int> prod = yoshioka_product_form(z, prec);
  if (prod != yoshioka_witt_form(z, prec))
    throw InconsistencyError(
        "product and Witt forms of the rank series disagree");
  return prod;
}

// --- verification ------------------------------------------------------------

std::string VerificationReport::to_text() const {
  std::string out;
  out += "check: " + identity + "\n";
  out += "case: " + detail + "\n";
  out += "lhs: " + lhs_text + "\n";
  out += "rhs: " + rhs_text + "\n";
  out += verified ? "VERIFIED" : "FAIL";
  return out;
}

std::string VerificationReport::to_record() const {
  return "identity=" + slug + " verdict=" + (verified ? "VERIFIED" : "FAIL") +
         " prec=" + std::to_string(prec) + " lhs=" + lhs_digest +
         " rhs=" + rhs_digest;
}

namespace {

VerificationReport make_report(std::string slug, std::string identity,
                               std::string detail,
                               const WittElement<Int>& lhs,
                               const WittElement<Int>& rhs) {
  VerificationReport r;
  r.slug = std::move(slug);
  r.identity = std::move(identity);
  r.detail = std::move(detail);
  r.prec = lhs.precision();
  r.lhs_text = format_series(lhs.series());
  r.rhs_text = format_series(rhs.series());
  r.lhs_digest = digest(record_series(lhs.series()));
  r.rhs_digest = digest(record_series(rhs.series()));
  r.verified = lhs == rhs;
  return r;
}

VerificationReport make_report_z(std::string slug, std::string identity,
                                 std::string detail,
                                 const WittElement<Poly<Int, 'z'>>& lhs,
                                 const WittElement<Poly<Int, 'z'>>& rhs,
                                 bool extra_ok) {
  VerificationReport r;
  r.slug = std::move(slug);
  r.identity = std::move(identity);
  r.detail = std::move(detail);
  r.prec = lhs.precision();
  r.lhs_text = format_series(lhs.series());
  r.rhs_text = format_series(rhs.series());
  r.lhs_digest = digest(r.lhs_text);
  r.rhs_digest = digest(r.rhs_text);
  r.verified = (lhs == rhs) && extra_ok;
  return r;
}

}  // namespace

VerificationReport verify_product_theorem(const VarietySpec& x,
                                          const VarietySpec& y, int prec,
                                          std::uint64_t budget) {
  WittElement<Int> lhs =
      zeta_from_counts(count_product_sequence({x, y}, prec, budget)).witt;
  WittElement<Int> rhs =
      witt_mul(zeta_of(x, prec, budget).witt, zeta_of(y, prec, budget).witt);
  return make_report(
      "product", "zeta(X x Y) = zeta(X) *_W zeta(Y)",
      "X=" + x.label + " Y=" + y.label + " field=" + field_name(x.field) +
          " prec=" + std::to_string(prec),
      lhs, rhs);
}

VerificationReport verify_base_change(const VarietySpec& x, int m, int prec,
                                      std::uint64_t budget) {
  if (m < 1) throw PreconditionError("base change degree must be >= 1");
  WittElement<Int> lhs = zeta_of(base_change(x, m), prec, budget).witt;
  WittElement<Int> rhs =
      frobenius(m, zeta_of(x, m * prec, budget).witt);
  return make_report(
      "basechange", "zeta(X x_{F_q} F_{q^m}) = F_m(zeta(X))",
      "X=" + x.label + " m=" + std::to_string(m) + " field=" +
          field_name(x.field) + " prec=" + std::to_string(prec),
      lhs, rhs);
}

VerificationReport verify_affine_fibration(const VarietySpec& x, int n,
                                           int prec, std::uint64_t budget) {
  if (n < 1) throw PreconditionError("fiber dimension must be >= 1");
  VarietySpec fiber;
  fiber.field = x.field;
  fiber.ambient = Ambient::affine;
  fiber.dim = static_cast<unsigned>(n);
  fiber.label = "A^" + std::to_string(n);
  WittElement<Int> lhs =
      zeta_from_counts(count_product_sequence({x, fiber}, prec, budget)).witt;
  WittElement<Int> rhs = coefficient_twist(
      zeta_of(x, prec, budget).witt,
      int_pow(Int(x.field.q()), static_cast<unsigned>(n)));
  return make_report(
      "fibration", "zeta(X x A^n)(t) = zeta(X)(q^n t)",
      "X=" + x.label + " n=" + std::to_string(n) + " field=" +
          field_name(x.field) + " prec=" + std::to_string(prec),
      lhs, rhs);
}

VerificationReport verify_macdonald(const std::vector<Int>& betti, int prec) {
  WittElement<Poly<Int, 'z'>> lhs = macdonald_product_form(betti, prec);
  WittElement<Poly<Int, 'z'>> rhs = macdonald_witt_sum(betti, prec);
  bool ghost_ok = ghost_of(lhs) == macdonald_ghost(betti, prec);
  std::string bs;
  for (size_t i = 0; i < betti.size(); ++i)
    bs += (i ? "," : "") + betti[i].get_str();
  return make_report_z(
      "macdonald",
      "prod_j (1 - z^j t)^{(-1)^{j+1} b_j} = sum_W (-1)^i b_i [z^i]"
      " (ghost side cross-checked)",
      "betti=" + bs + " prec=" + std::to_string(prec), lhs, rhs, ghost_ok);
}

VerificationReport verify_goettsche(const Int& e, int prec) {
  WittElement<Int> lhs = goettsche_euler_series(e, prec);
  // second route: rational power of the partition series via exp/log over Q
  WittElement<Rat> base = lift_witt(
      WittElement<Int>(partition_series(prec)));
  WittElement<Int> rhs =
      retract_witt(power_rational(base, Rat(e)), "rational power route");
  return make_report("gottsche",
                     "prod_n (1 - t^n)^{-e}: factorwise powers = e-th power"
                     " of the partition series",
                     "e=" + e.get_str() + " prec=" + std::to_string(prec),
                     lhs, rhs);
}

VerificationReport verify_yoshioka(const VarietySpec& y, int prec,
                                   std::uint64_t budget) {
  ZetaElement z = zeta_of(y, prec, budget);
  WittElement<Int> lhs = yoshioka_product_form(z, prec);
  WittElement<Int> rhs = yoshioka_witt_form(z, prec);
  return make_report(
      "yoshioka",
      "prod_a Z(q^{2a-1} t^a)/Z(q^{2a-2} t^a) = sum_W V_a(Z(q^{2a-1} t) -_W "
      "Z(q^{2a-2} t))",
      "Y=" + y.label + " field=" + field_name(y.field) + " prec=" +
          std::to_string(prec),
      lhs, rhs);
}

}  // namespace wittzeta

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "wittzeta/varieties.hpp"

namespace wittzeta {

namespace {

// Equations during enumeration: sparse terms over the *joint* variable list
// x0..x_{nvars-1}; exponent vectors always cover exactly the variables not
// yet assigned (variables are assigned from the highest index down, so a
// specialization pops the last exponent).
struct STerm {
  std::uint32_t c;
  std::vector<std::uint16_t> e;
};
struct SPoly {
  std::vector<STerm> t;
};

// One factor of the product occupies variables [lo, hi).
struct Block {
  unsigned lo, hi;
  bool projective;
};

class Enumerator {
 public:
  Enumerator(const FieldOps& K, std::vector<Block> blocks,
             std::vector<SPoly> eqs, unsigned nvars)
      : K_(K),
        q_(K.q()),
        blocks_(std::move(blocks)),
        eqs_(std::move(eqs)),
        nvars_(nvars),
        seen_(blocks_.size(), 0) {
    unsigned maxdeg = 1;
    for (const SPoly& f : eqs_)
      for (const STerm& t : f.t)
        for (std::uint16_t e : t.e) maxdeg = std::max<unsigned>(maxdeg, e);
    if (maxdeg <= 256) ptab_ = K_.power_table(maxdeg);
  }

  Int run() {
    count_ = 0;
    rec(eqs_, nvars_);
    return count_;
  }

 private:
  // assigned variables of partially-covered projective blocks so far zero?
  // seen_[b] flips to 1 once some variable in block b got a nonzero value.

  Int free_combinations(unsigned k) const {
    Int total = 1;
    for (size_t b = 0; b < blocks_.size(); ++b) {
      if (blocks_[b].lo >= k) continue;  // fully assigned already
      unsigned rem = std::min(blocks_[b].hi, k) - blocks_[b].lo;
      Int ways = int_pow(Int(q_), rem);
      if (blocks_[b].projective && !seen_[b]) ways -= 1;
      total *= ways;
    }
    return total;
  }

  size_t block_of(unsigned var) const {
    for (size_t b = 0; b < blocks_.size(); ++b)
      if (blocks_[b].lo <= var && var < blocks_[b].hi) return b;
    throw InconsistencyError("variable outside every block");
  }

  static bool is_const(const SPoly& f) {
    if (f.t.size() != 1) return false;
    for (std::uint16_t e : f.t[0].e)
      if (e != 0) return false;
    return true;
  }

  // substitute x_{k-1} := v (vpow holds v^0..v^maxe); exponents shrink by one
  SPoly specialize(const SPoly& f,
                   const std::vector<std::uint32_t>& vpow) const {
    SPoly out;
    out.t.reserve(f.t.size());
    for (const STerm& t : f.t) {
      std::uint16_t e = t.e.back();
      std::uint32_t c =
          e == 0 ? t.c : (vpow[e] == 1 ? t.c : K_.mul(t.c, vpow[e]));
      if (c == 0) continue;
      bool merged = false;
      for (STerm& o : out.t) {
        if (std::equal(o.e.begin(), o.e.end(), t.e.begin())) {
          o.c = K_.add(o.c, c);
          merged = true;
          break;
        }
      }
      if (!merged) {
        STerm nt;
        nt.c = c;
        nt.e.assign(t.e.begin(), t.e.end() - 1);
        out.t.push_back(std::move(nt));
      }
    }
    // drop terms cancelled to zero by the merge
    out.t.erase(std::remove_if(out.t.begin(), out.t.end(),
                               [](const STerm& t) { return t.c == 0; }),
                out.t.end());
    return out;
  }

  void rec(const std::vector<SPoly>& eqs, unsigned k) {
    std::vector<SPoly> live;
    live.reserve(eqs.size());
    for (const SPoly& f : eqs) {
      if (f.t.empty()) continue;        // 0 = 0
      if (is_const(f)) return;          // nonzero constant = 0: dead branch
      live.push_back(f);
    }
    if (live.empty()) {
      count_ += free_combinations(k);
      return;
    }
    if (k == 1) {
      leaf(live);
      return;
    }

    const unsigned var = k - 1;
    const size_t b = block_of(var);
    const bool track = blocks_[b].projective;
    const bool forbid_zero = track && var == blocks_[b].lo && !seen_[b];
    const std::uint8_t saved = seen_[b];

    unsigned maxe = 0;
    for (const SPoly& f : live)
      for (const STerm& t : f.t) maxe = std::max<unsigned>(maxe, t.e.back());
    std::vector<std::uint32_t> vpow(maxe + 1);

    std::vector<SPoly> next(live.size());
    for (std::uint32_t v = forbid_zero ? 1 : 0; v < q_; ++v) {
      vpow[0] = 1;
      for (unsigned e = 1; e <= maxe; ++e)
        vpow[e] = e == 1 ? v : K_.mul(vpow[e - 1], v);
      for (size_t i = 0; i < live.size(); ++i)
        next[i] = specialize(live[i], vpow);
      if (track) seen_[b] = saved || v != 0;
      rec(next, k - 1);
    }
    if (track) seen_[b] = saved;
  }

  void leaf(const std::vector<SPoly>& live) {
    const bool forbid_zero =
        blocks_[0].projective && blocks_[0].lo == 0 && !seen_[0];
    // dense univariate coefficient rows
    dense_.clear();
    for (const SPoly& f : live) {
      unsigned deg = 0;
      for (const STerm& t : f.t) deg = std::max<unsigned>(deg, t.e[0]);
      std::vector<std::uint32_t> c(deg + 1, 0);
      for (const STerm& t : f.t) c[t.e[0]] = K_.add(c[t.e[0]], t.c);
      dense_.push_back(std::move(c));
    }
    const std::uint32_t one = K_.from_residue(1);
    std::uint64_t hits = 0;
    for (std::uint32_t v = forbid_zero ? 1 : 0; v < q_; ++v) {
      bool ok = true;
      for (const auto& c : dense_) {
        std::uint32_t acc = c[0];
        for (unsigned e = 1; e < c.size(); ++e) {
          if (c[e] == 0) continue;
          std::uint32_t ve = ptab_ ? ptab_[static_cast<size_t>(e) * q_ + v]
                                   : K_.pow(v, e);
          acc = K_.add(acc, c[e] == one ? ve : K_.mul(c[e], ve));
        }
        if (acc != 0) {
          ok = false;
          break;
        }
      }
      if (ok) ++hits;
    }
    count_ += hits;
  }

  const FieldOps& K_;
  std::uint32_t q_;
  std::vector<Block> blocks_;
  std::vector<SPoly> eqs_;
  unsigned nvars_;
  std::vector<std::uint8_t> seen_;
  std::vector<std::vector<std::uint32_t>> dense_;
  const std::uint32_t* ptab_ = nullptr;
  Int count_ = 0;
};

// raw tuple count of the joint (cone-level) enumeration for the budget check
Int raw_tuple_count(std::uint32_t q, unsigned nvars) {
  return int_pow(Int(q), nvars);
}

Int cone_count_impl(const std::vector<const VarietySpec*>& factors, int r,
                    std::uint64_t budget, unsigned* projective_factors) {
  if (factors.empty()) throw PreconditionError("empty product");
  if (r < 1) throw PreconditionError("extension degree must be >= 1");
  const FqDescriptor& base = factors[0]->field;
  for (const VarietySpec* v : factors)
    if (!(v->field == base))
      throw PreconditionError("product factors over different ground fields");

  unsigned nvars = 0, nproj = 0;
  bool have_equations = false;
  std::vector<Block> blocks;
  for (const VarietySpec* v : factors) {
    unsigned k = v->coordinate_count();
    bool proj = v->ambient == Ambient::projective;
    blocks.push_back({nvars, nvars + k, proj});
    nvars += k;
    if (proj) ++nproj;
    if (!v->equations.empty()) have_equations = true;
  }
  if (projective_factors) *projective_factors = nproj;

  FqDescriptor ext =
      make_extension_field(base.p, base.f * static_cast<unsigned>(r));
  if (have_equations) {
    // without equations the count is closed-form, so no budget applies
    Int tuples = raw_tuple_count(ext.q(), nvars);
    if (tuples > Int(static_cast<unsigned long>(budget)))
      throw BudgetExceededError(tuples.get_str(), budget);
  }
  const FieldOps& K = field_ops(ext);

  std::vector<SPoly> eqs;
  for (size_t i = 0; i < factors.size(); ++i) {
    for (const MultiPoly& mp : factors[i]->equations) {
      SPoly f;
      for (const MultiPoly::Term& t : mp.terms) {
        STerm st;
        st.c = K.from_residue(static_cast<long>(t.coeff));
        st.e.assign(nvars, 0);
        for (unsigned j = 0; j < mp.nvars; ++j)
          st.e[blocks[i].lo + j] = static_cast<std::uint16_t>(t.exps[j]);
        f.t.push_back(std::move(st));
      }
      eqs.push_back(std::move(f));
    }
  }

  Enumerator en(K, std::move(blocks), std::move(eqs), nvars);
  return en.run();
}

Int points_impl(const std::vector<const VarietySpec*>& factors, int r,
                std::uint64_t budget) {
  unsigned nproj = 0;
  Int cone = cone_count_impl(factors, r, budget, &nproj);
  if (nproj == 0) return cone;
  const FqDescriptor& base = factors[0]->field;
  Int unit = int_pow(Int(base.q()), static_cast<unsigned>(r)) - 1;
  Int divisor = 1;
  for (unsigned i = 0; i < nproj; ++i) divisor *= unit;
  Int out;
  if (!mpz_divisible_p(cone.get_mpz_t(), divisor.get_mpz_t()))
    throw InconsistencyError(
        "projective cone count not divisible by q^r - 1");
  mpz_divexact(out.get_mpz_t(), cone.get_mpz_t(), divisor.get_mpz_t());
  return out;
}

int mobius(int n) {
  int mu = 1;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0) return 0;
      mu = -mu;
    }
  }
  if (n > 1) mu = -mu;
  return mu;
}

}  // namespace

Int count_points(const VarietySpec& v, int r, std::uint64_t budget) {
  return points_impl({&v}, r, budget);
}

Int count_cone_points(const VarietySpec& v, int r, std::uint64_t budget) {
  if (v.ambient != Ambient::projective)
    throw PreconditionError("cone counting needs a projective variety");
  return cone_count_impl({&v}, r, budget, nullptr);
}

CountSequence count_sequence(const VarietySpec& v, int prec,
                             std::uint64_t budget) {
  if (prec < 1) throw PreconditionError("count precision must be >= 1");
  CountSequence s;
  s.field = v.field;
  for (int r = 1; r <= prec; ++r) s.counts.push_back(count_points(v, r, budget));
  return s;
}

Int count_product_points(const std::vector<VarietySpec>& factors, int r,
                         std::uint64_t budget) {
  std::vector<const VarietySpec*> ptrs;
  for (const VarietySpec& v : factors) ptrs.push_back(&v);
  return points_impl(ptrs, r, budget);
}

CountSequence count_product_sequence(const std::vector<VarietySpec>& factors,
                                     int prec, std::uint64_t budget) {
  if (prec < 1) throw PreconditionError("count precision must be >= 1");
  if (factors.empty()) throw PreconditionError("empty product");
  CountSequence s;
  s.field = factors[0].field;
  for (int r = 1; r <= prec; ++r)
    s.counts.push_back(count_product_points(factors, r, budget));
  return s;
}

CountSequence product_counts(const CountSequence& a, const CountSequence& b) {
  if (!(a.field == b.field))
    throw PreconditionError("count sequences over different ground fields");
  CountSequence s;
  s.field = a.field;
  int n = std::min(a.prec(), b.prec());
  for (int r = 1; r <= n; ++r) s.counts.push_back(a.c(r) * b.c(r));
  return s;
}

ClosedPointTally closed_point_tally(const CountSequence& c) {
  ClosedPointTally t;
  t.field = c.field;
  for (int d = 1; d <= c.prec(); ++d) {
    Int acc = 0;
    for (int e = 1; e <= d; ++e) {
      if (d % e != 0) continue;
      int mu = mobius(d / e);
      if (mu == 1)
        acc += c.c(e);
      else if (mu == -1)
        acc -= c.c(e);
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(d)))
      throw TallyError(d, "not divisible by the degree");
    Int m;
    mpz_divexact_ui(m.get_mpz_t(), acc.get_mpz_t(),
                    static_cast<unsigned long>(d));
    if (m < 0) throw TallyError(d, "negative");
    t.points.push_back(std::move(m));
  }
  return t;
}

CountSequence weil_restriction_counts(const CountSequence& a, int m) {
  if (m < 1) throw PreconditionError("restriction degree must be >= 1");
  if (a.field.f % static_cast<unsigned>(m) != 0)
    throw PreconditionError(
        "count sequence field is not an extension of the requested degree");
  CountSequence s;
  s.field = make_extension_field(a.field.p,
                                 a.field.f / static_cast<unsigned>(m));
  for (int r = 1; r <= a.prec(); ++r) {
    int g = std::gcd(m, r);
    s.counts.push_back(int_pow(a.c(r / g), static_cast<unsigned>(g)));
  }
  return s;
}

Int effective_zero_cycle_count(const ClosedPointTally& t, int n) {
  if (n < 0) throw PreconditionError("cycle degree must be >= 0");
  if (n > t.prec())
    throw PreconditionError("tally precision too small for cycle degree");
  std::vector<Int> ways(static_cast<size_t>(n) + 1);
  ways[0] = 1;
  for (int d = 1; d <= n; ++d) {
    const Int& m = t.m(d);
    std::vector<Int> next(ways.size());
    for (int j = 0; j <= n; ++j) {
      Int acc = 0;
      for (int k = 0; d * k <= j; ++k)
        acc += binomial(m + k - 1, static_cast<unsigned long>(k)) *
               ways[static_cast<size_t>(j - d * k)];
      next[static_cast<size_t>(j)] = std::move(acc);
    }
    ways = std::move(next);
  }
  return ways[static_cast<size_t>(n)];
}

}  // namespace wittzeta

#include "wittzeta/finite_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

namespace wittzeta {

namespace {

// Largest field that gets full q*q add/mul tables (~2 * q^2 uint16).
constexpr std::uint32_t kTableLimit = 2200;
// Hard cap on enumerable field size; counting budgets rule out anything
// close to this long before the cap matters.
constexpr std::uint64_t kFieldSizeLimit = 1u << 18;

// little-endian coefficient vectors over F_p, degree = size-1, no trimming
using Fp = std::vector<unsigned>;

// remainder of monic `a` under division by monic `g`, in place
void mod_monic(Fp& a, const Fp& g, unsigned p) {
  const size_t dg = g.size() - 1;
  while (a.size() > dg) {
    unsigned lead = a.back();
    if (lead != 0) {
      size_t shift = a.size() - 1 - dg;
      for (size_t i = 0; i < dg; ++i) {
        unsigned sub = (lead * g[i]) % p;
        a[shift + i] = (a[shift + i] + p - sub) % p;
      }
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
}

bool divisible(const Fp& a, const Fp& g, unsigned p) {
  Fp r = a;
  mod_monic(r, g, p);
  return r.empty();
}

// decode k = sum c_i p^i into d low coefficients (no leading coefficient)
Fp decode(std::uint64_t k, unsigned d, unsigned p) {
  Fp c(d);
  for (unsigned i = 0; i < d; ++i) {
    c[i] = static_cast<unsigned>(k % p);
    k /= p;
  }
  return c;
}

bool is_irreducible(const Fp& cand, unsigned p) {
  const unsigned d = static_cast<unsigned>(cand.size()) - 1;
  if (cand[0] == 0 && d > 1) return false;  // divisible by x
  std::uint64_t count = 1;
  for (unsigned e = 1; 2 * e <= d; ++e) {
    count *= p;
    for (std::uint64_t k = 0; k < count; ++k) {
      Fp g = decode(k, e, p);
      g.push_back(1);
      if (divisible(cand, g, p)) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint32_t FqDescriptor::q() const {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < f; ++i) v *= p;
  return static_cast<std::uint32_t>(v);
}

FqDescriptor make_extension_field(unsigned p, unsigned f) {
  if (!is_prime(p)) throw NotPrimeError(p, 0, 1);
  if (f < 1) throw PreconditionError("field degree must be >= 1");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < f; ++i) {
    q *= p;
    if (q > kFieldSizeLimit)
      throw PreconditionError("field F_{" + std::to_string(p) + "^" +
                              std::to_string(f) + "} is too large");
  }

  FqDescriptor F;
  F.p = p;
  F.f = f;
  // Scan monic candidates x^f + c_{f-1} x^{f-1} + ... + c_0 in ascending
  // integer encoding sum c_i p^i, i.e. lexicographically by
  // (c_{f-1}, ..., c_0). The first irreducible wins; one always exists.
  for (std::uint64_t k = 0;; ++k) {
    Fp cand = decode(k, f, p);
    cand.push_back(1);
    if (is_irreducible(cand, p)) {
      F.modulus.assign(cand.begin(), cand.end());
      return F;
    }
  }
}

FieldOps::FieldOps(FqDescriptor F) : F_(std::move(F)) {
  p_ = F_.p;
  d_ = F_.f;
  if (F_.modulus.size() != d_ + 1 || F_.modulus.back() != 1)
    throw PreconditionError("field modulus must be monic of degree f");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < d_; ++i) q *= p_;
  if (q > kFieldSizeLimit) throw PreconditionError("field too large");
  q_ = static_cast<std::uint32_t>(q);

  pow_p_.resize(d_);
  pow_p_[0] = 1;
  for (unsigned i = 1; i < d_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;

  if (d_ > 1) {
    dig_.resize(static_cast<size_t>(q_) * d_);
    for (std::uint32_t v = 0; v < q_; ++v) {
      std::uint32_t k = v;
      for (unsigned i = 0; i < d_; ++i) {
        dig_[static_cast<size_t>(v) * d_ + i] =
            static_cast<std::uint16_t>(k % p_);
        k /= p_;
      }
    }

    // reduction rows: x^{d+j} = red_[j] as a degree < d vector, j = 0..d-2
    red_.resize(static_cast<size_t>(d_ - 1) * d_);
    std::vector<unsigned> cur(d_);  // x^{d} reduced: -modulus tail
    for (unsigned i = 0; i < d_; ++i)
      cur[i] = (p_ - F_.modulus[i] % p_) % p_;
    for (unsigned j = 0; j + 1 < d_; ++j) {
      for (unsigned i = 0; i < d_; ++i)
        red_[static_cast<size_t>(j) * d_ + i] =
            static_cast<std::uint16_t>(cur[i]);
      // multiply cur by x and reduce once
      unsigned top = cur[d_ - 1];
      for (unsigned i = d_ - 1; i > 0; --i) cur[i] = cur[i - 1];
      cur[0] = 0;
      if (top != 0)
        for (unsigned i = 0; i < d_; ++i)
          cur[i] = (cur[i] + top * (p_ - F_.modulus[i] % p_)) % p_;
    }
  }

  if (q_ <= kTableLimit) {
    tables_ = true;
    add_tab_.resize(static_cast<size_t>(q_) * q_);
    mul_tab_.resize(static_cast<size_t>(q_) * q_);
    for (std::uint32_t a = 0; a < q_; ++a)
      for (std::uint32_t b = a; b < q_; ++b) {
        std::uint16_t s = static_cast<std::uint16_t>(add_slow(a, b));
        std::uint16_t m = static_cast<std::uint16_t>(mul_slow(a, b));
        add_tab_[static_cast<size_t>(a) * q_ + b] = s;
        add_tab_[static_cast<size_t>(b) * q_ + a] = s;
        mul_tab_[static_cast<size_t>(a) * q_ + b] = m;
        mul_tab_[static_cast<size_t>(b) * q_ + a] = m;
      }
  }
}

std::uint32_t FieldOps::add_slow(std::uint32_t a, std::uint32_t b) const {
  if (d_ == 1) {
    std::uint32_t s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  const std::uint16_t* da = &dig_[static_cast<size_t>(a) * d_];
  const std::uint16_t* db = &dig_[static_cast<size_t>(b) * d_];
  std::uint32_t out = 0;
  for (unsigned i = 0; i < d_; ++i) {
    unsigned s = static_cast<unsigned>(da[i]) + db[i];
    if (s >= p_) s -= p_;
    out += s * pow_p_[i];
  }
  return out;
}

std::uint32_t FieldOps::mul_slow(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  if (d_ == 1)
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % q_);
  const std::uint16_t* da = &dig_[static_cast<size_t>(a) * d_];
  const std::uint16_t* db = &dig_[static_cast<size_t>(b) * d_];
  std::uint64_t buf[64] = {0};  // 2d-1 slots used, d_ <= 20 in practice
  for (unsigned i = 0; i < d_; ++i) {
    if (da[i] == 0) continue;
    std::uint64_t ai = da[i];
    for (unsigned j = 0; j < d_; ++j) buf[i + j] += ai * db[j];
  }
  // fold x^k terms with k >= d back down using the reduction rows
  for (unsigned k = 2 * d_ - 2; k + 1 > d_; --k) {
    std::uint64_t c = buf[k] % p_;
    if (c != 0) {
      const std::uint16_t* row = &red_[static_cast<size_t>(k - d_) * d_];
      for (unsigned i = 0; i < d_; ++i) buf[i] += c * row[i];
    }
  }
  std::uint32_t out = 0;
  for (unsigned i = 0; i < d_; ++i)
    out += static_cast<std::uint32_t>(buf[i] % p_) * pow_p_[i];
  return out;
}

std::uint32_t FieldOps::neg(std::uint32_t a) const {
  if (d_ == 1) return a == 0 ? 0 : q_ - a;
  const std::uint16_t* da = &dig_[static_cast<size_t>(a) * d_];
  std::uint32_t out = 0;
  for (unsigned i = 0; i < d_; ++i)
    out += ((p_ - da[i]) % p_) * pow_p_[i];
  return out;
}

std::uint32_t FieldOps::pow(std::uint32_t a, unsigned e) const {
  std::uint32_t r = from_residue(1);
  std::uint32_t base = a;
  while (e > 0) {
    if (e & 1u) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

unsigned FieldOps::order(std::uint32_t a) const {
  if (a == 0) throw PreconditionError("order of zero");
  unsigned n = 1;
  std::uint32_t x = a;
  while (x != 1) {
    x = mul(x, a);
    ++n;
    if (n > q_) throw InconsistencyError("element order exceeds field size");
  }
  return n;
}

const std::uint32_t* FieldOps::power_table(unsigned max_e) const {
  if (pow_tab_.empty()) {
    pow_tab_.resize(static_cast<size_t>(q_) * 2);
    for (std::uint32_t v = 0; v < q_; ++v) {
      pow_tab_[v] = 1;
      pow_tab_[q_ + v] = v;
    }
    pow_tab_max_ = 1;
  }
  while (pow_tab_max_ < max_e) {
    const size_t base = static_cast<size_t>(q_) * pow_tab_max_;
    pow_tab_.resize(pow_tab_.size() + q_);
    for (std::uint32_t v = 0; v < q_; ++v)
      pow_tab_[base + q_ + v] = mul(pow_tab_[base + v], v);
    ++pow_tab_max_;
  }
  return pow_tab_.data();
}

const FieldOps& field_ops(const FqDescriptor& F) {
  static std::mutex m;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<FieldOps>>
      cache;
  std::lock_guard<std::mutex> lock(m);
  auto key = std::make_pair(F.p, F.f);
  auto it = cache.find(key);
  if (it == cache.end())
    it = cache.emplace(key, std::make_unique<FieldOps>(F)).first;
  else if (it->second->descriptor() != F)
    throw PreconditionError("conflicting moduli for the same field");
  return *it->second;
}

}  // namespace wittzeta

#ifndef WITTZETA_FINITE_FIELD_HPP
#define WITTZETA_FINITE_FIELD_HPP

// Explicit finite fields F_{p^d} = F_p[x]/(modulus) for brute-force point
// counting. Elements are indices in [0, p^d): the element with base-p digits
// (a_0, ..., a_{d-1}) represents a_0 + a_1 x + ... + a_{d-1} x^{d-1}.
// The prime subfield therefore occupies indices 0..p-1.
//
// The modulus is the lexicographically smallest monic irreducible of degree
// d (coefficients compared from x^{d-1} down to the constant), found by
// exhaustive trial division — small fields only, by design.

#include <cstdint>
#include <vector>

#include "wittzeta/errors.hpp"

namespace wittzeta {

struct FqDescriptor {
  unsigned p = 2;                  // characteristic (prime)
  unsigned f = 1;                  // degree over F_p
  std::vector<unsigned> modulus;   // monic, length f+1, coeffs in [0,p)

  std::uint32_t q() const;  // p^f
  friend bool operator==(const FqDescriptor& a, const FqDescriptor& b) {
    return a.p == b.p && a.f == b.f && a.modulus == b.modulus;
  }
  friend bool operator!=(const FqDescriptor& a, const FqDescriptor& b) {
    return !(a == b);
  }
};

bool is_prime(unsigned long n);

// Errors: NotPrimeError (p composite), PreconditionError (f < 1 or p^f too
// large to enumerate).
FqDescriptor make_extension_field(unsigned p, unsigned f);

// Arithmetic engine for one field. Small fields get full multiplication and
// addition tables; larger ones fall back to digit-vector arithmetic with
// precomputed reduction rows for x^f..x^{2f-2}.
class FieldOps {
 public:
  explicit FieldOps(FqDescriptor F);

  const FqDescriptor& descriptor() const { return F_; }
  std::uint32_t q() const { return q_; }
  unsigned p() const { return p_; }
  unsigned degree() const { return d_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    return tables_ ? add_tab_[static_cast<size_t>(a) * q_ + b]
                   : add_slow(a, b);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return tables_ ? mul_tab_[static_cast<size_t>(a) * q_ + b]
                   : mul_slow(a, b);
  }
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return add(a, neg(b));
  }
  std::uint32_t pow(std::uint32_t a, unsigned e) const;
  // multiplicative order of a nonzero element (divides q-1)
  unsigned order(std::uint32_t a) const;
  // embed an integer residue: index of (c mod p) in the prime subfield
  std::uint32_t from_residue(long c) const {
    long r = c % static_cast<long>(p_);
    return static_cast<std::uint32_t>(r < 0 ? r + p_ : r);
  }

  // Dense table of v^e for all v and e = 0..max_e, row-major by exponent:
  // entry [e * q + v]. Grown on demand and cached.
  const std::uint32_t* power_table(unsigned max_e) const;

 private:
  std::uint32_t add_slow(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul_slow(std::uint32_t a, std::uint32_t b) const;

  FqDescriptor F_;
  unsigned p_ = 2, d_ = 1;
  std::uint32_t q_ = 2;
  bool tables_ = false;
  std::vector<std::uint16_t> add_tab_, mul_tab_;
  // digit machinery, only populated for d_ >= 2 (d_ == 1 reduces mod p
  // directly); p <= sqrt(field size cap) there, so digits fit comfortably
  std::vector<std::uint16_t> dig_;       // q_*d_ base-p digits per element
  std::vector<std::uint16_t> red_;       // (d_-1) rows of d_ digits
  std::vector<std::uint32_t> pow_p_;     // p^0..p^{d_-1}
  mutable std::vector<std::uint32_t> pow_tab_;
  mutable unsigned pow_tab_max_ = 0;
};

// Shared per-(p, f) engine cache; engines are immutable once built.
const FieldOps& field_ops(const FqDescriptor& F);

}  // namespace wittzeta

#endif

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "wittzeta/witt.hpp"

using namespace wittzeta;

namespace {

WittElement<Int> series_of(std::vector<long> coeffs) {
  std::vector<Int> c(coeffs.begin(), coeffs.end());
  const int prec = static_cast<int>(c.size()) - 1;
  return WittElement<Int>(TruncatedSeries<Int>(prec, std::move(c)));
}

GhostVector<Int> ghost_from(std::vector<long> g) {
  std::vector<Int> v(g.begin(), g.end());
  const int prec = static_cast<int>(v.size());
  return GhostVector<Int>(prec, std::move(v));
}

WittElement<Int> random_witt(std::mt19937_64& rng, int prec, int span = 9) {
  std::uniform_int_distribution<int> d(-span, span);
  std::vector<Int> c(prec + 1);
  c[0] = 1;
  for (int i = 1; i <= prec; ++i) c[i] = d(rng);
  return WittElement<Int>(TruncatedSeries<Int>(prec, std::move(c)));
}

}  // namespace

TEST_CASE("witt_add is series multiplication") {
  auto p = teichmuller(Int(2), 3);
  auto q = teichmuller(Int(3), 3);
  CHECK(witt_add(p, q) == series_of({1, 5, 19, 65}));
  // additive identity is the constant series 1
  CHECK(witt_add(p, WittElement<Int>::zero(3)) == p);
}

TEST_CASE("witt_neg inverts the series") {
  auto p = series_of({1, 1, 1});
  CHECK(witt_neg(p) == series_of({1, -1, 0}));
  CHECK(witt_add(p, witt_neg(p)) == WittElement<Int>::zero(2));
}

TEST_CASE("teichmuller elements multiply by [a][b] = [ab]") {
  auto lhs = witt_mul(witt_add(teichmuller(Int(2), 4), teichmuller(Int(3), 4)),
                      teichmuller(Int(5), 4));
  auto rhs = witt_add(teichmuller(Int(10), 4), teichmuller(Int(15), 4));
  CHECK(lhs == rhs);

  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> d(-6, 6);
  for (int i = 0; i < 20; ++i) {
    Int a = d(rng), b = d(rng);
    CHECK(witt_mul(teichmuller(a, 6), teichmuller(b, 6)) ==
          teichmuller(Int(a * b), 6));
  }
}

TEST_CASE("ghost components") {
  auto p = witt_add(teichmuller(Int(1), 5), teichmuller(Int(1), 5));
  CHECK(ghost_of(p) == ghost_from({2, 2, 2, 2, 2}));
  CHECK(ghost_of(teichmuller(Int(3), 4)) == ghost_from({3, 9, 27, 81}));
  CHECK(ghost_of(WittElement<Int>::zero(4)) == GhostVector<Int>::zero(4));
  CHECK(ghost_of(teichmuller(Int(1), 4)) == GhostVector<Int>::one(4));
}

TEST_CASE("ghost is a ring homomorphism onto componentwise operations") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    auto p = random_witt(rng, 8);
    auto q = random_witt(rng, 8);
    CHECK(ghost_of(witt_add(p, q)) == ghost_of(p) + ghost_of(q));
    CHECK(ghost_of(witt_mul(p, q)) == ghost_of(p) * ghost_of(q));
    CHECK(ghost_of(witt_neg(p)) == -ghost_of(p));
  }
}

TEST_CASE("series_from_ghost recursion and integrality") {
  CHECK(series_from_ghost(ghost_from({3, 5, 9, 17})) ==
        series_of({1, 3, 7, 15, 31}));
  CHECK_THROWS_AS(series_from_ghost(ghost_from({1, 0, 0, 0})),
                  IntegralityError);
  try {
    series_from_ghost(ghost_from({1, 0, 0, 0}));
  } catch (const IntegralityError& e) {
    CHECK(e.index == 2);
  }
}

TEST_CASE("ghost round trip on random integer elements") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 50; ++i) {
    auto p = random_witt(rng, 10);
    CHECK(series_from_ghost(ghost_of(p)) == p);
  }
}

TEST_CASE("witt coordinates") {
  auto p = witt_add(teichmuller(Int(1), 3), teichmuller(Int(1), 3));
  auto coords = witt_coords_of(p);
  CHECK(coords == WittCoordinates<Int>(3, {Int(2), Int(-1), Int(-2)}));
  CHECK(from_witt_coords(coords) == p);
}

TEST_CASE("witt coordinates round trip and divisor-sum ghost identity") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 30; ++i) {
    auto p = random_witt(rng, 9);
    auto a = witt_coords_of(p);
    CHECK(from_witt_coords(a) == p);
    auto g = ghost_of(p);
    for (int n = 1; n <= 9; ++n) {
      Int acc = 0;
      for (int d = 1; d <= n; ++d)
        if (n % d == 0) acc += Int(d) * int_pow(a.a(d), n / d);
      CHECK(g.g(n) == acc);
    }
  }
}

TEST_CASE("coordinate expansion equals a Verschiebung sum of Teichmuellers") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 10; ++i) {
    auto p = random_witt(rng, 8);
    auto a = witt_coords_of(p);
    auto acc = WittElement<Int>::zero(8);
    for (int n = 1; n <= 8; ++n)
      acc = witt_add(acc, verschiebung(n, teichmuller(a.a(n), 8)));
    CHECK(acc == p);
  }
}

TEST_CASE("frobenius reindexes ghosts") {
  // F_2 (1-t^2)^{-1} = (1-t)^{-2} = 2*[1]
  auto v = verschiebung(2, teichmuller(Int(1), 4));
  CHECK(frobenius(2, v) ==
        witt_add(teichmuller(Int(1), 2), teichmuller(Int(1), 2)));
  // F_m [b] = [b^m]
  CHECK(frobenius(3, teichmuller(Int(2), 9)) == teichmuller(Int(8), 3));
  // output precision floor(N/m)
  CHECK(frobenius(3, teichmuller(Int(2), 11)).precision() == 3);
  CHECK_THROWS_AS(frobenius(5, teichmuller(Int(2), 4)), PreconditionError);
}

TEST_CASE("verschiebung substitutes t -> t^m") {
  auto p = teichmuller(Int(1), 5);
  auto v2 = verschiebung(2, p);
  CHECK(v2 == series_of({1, 0, 1, 0, 1, 0}));
  CHECK(v2.precision() == 5);
}

TEST_CASE("frobenius/verschiebung operator identities") {
  std::mt19937_64 rng(47);
  for (int i = 0; i < 20; ++i) {
    auto p = random_witt(rng, 12, 5);
    // F_n F_m = F_{nm}
    CHECK(frobenius(2, frobenius(3, p)) == frobenius(6, p));
    CHECK(frobenius(3, frobenius(2, p)) == frobenius(6, p));
    // V_n V_m = V_{nm}
    CHECK(verschiebung(2, verschiebung(3, p)) == verschiebung(6, p));
    // F_n V_n = multiplication by n
    CHECK(frobenius(3, verschiebung(3, p)) == scale_int(3, truncated(p, 4)));
    // coprime indices commute
    CHECK(frobenius(2, verschiebung(3, p)) ==
          verschiebung(3, frobenius(2, p)));
  }
}

TEST_CASE("scale_int") {
  CHECK(scale_int(3, teichmuller(Int(1), 3)) == series_of({1, 3, 6, 10}));
  std::mt19937_64 rng(53);
  for (int i = 0; i < 10; ++i) {
    auto p = random_witt(rng, 7);
    CHECK(scale_int(0, p) == WittElement<Int>::zero(7));
    CHECK(scale_int(1, p) == p);
    CHECK(scale_int(-1, p) == witt_neg(p));
    CHECK(scale_int(5, p) ==
          witt_add(witt_add(witt_add(p, p), witt_add(p, p)), p));
    CHECK(scale_int(-3, p) == witt_neg(scale_int(3, p)));
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937_64 rng(59);
  auto one = [&](int n) { return teichmuller(Int(1), n); };
  for (int i = 0; i < 25; ++i) {
    auto p = random_witt(rng, 8);
    auto q = random_witt(rng, 8);
    auto r = random_witt(rng, 8);
    CHECK(witt_add(p, q) == witt_add(q, p));
    CHECK(witt_mul(p, q) == witt_mul(q, p));
    CHECK(witt_mul(p, witt_mul(q, r)) == witt_mul(witt_mul(p, q), r));
    CHECK(witt_mul(p, witt_add(q, r)) ==
          witt_add(witt_mul(p, q), witt_mul(p, r)));
    CHECK(witt_mul(p, one(8)) == p);
    CHECK(witt_mul(p, WittElement<Int>::zero(8)) ==
          WittElement<Int>::zero(8));
  }
}

TEST_CASE("precision and unit-series preconditions") {
  auto p = teichmuller(Int(2), 3);
  auto q = teichmuller(Int(2), 4);
  CHECK_THROWS_AS(witt_add(p, q), PreconditionError);
  CHECK_THROWS_AS(witt_mul(p, q), PreconditionError);
  CHECK_THROWS_AS(
      WittElement<Int>(TruncatedSeries<Int>(2, {Int(2), Int(0), Int(0)})),
      PreconditionError);
  CHECK(truncated(q, 3) == p);
  CHECK_THROWS_AS(truncated(p, 5), PreconditionError);
}

TEST_CASE("witt ring over polynomial coefficients") {
  // [z] *_W [z^2] = [z^3] in W(Z[z])
  auto z1 = teichmuller(PolyZ::var(1), 4);
  auto z2 = teichmuller(PolyZ::var(2), 4);
  CHECK(witt_mul(z1, z2) == teichmuller(PolyZ::var(3), 4));
  auto g = ghost_of(z1);
  CHECK(g.g(3) == PolyZ::var(3));
}

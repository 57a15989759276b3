#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "wittzeta/varieties.hpp"

using namespace wittzeta;

namespace {

VarietySpec var(const std::string& text, const std::string& label) {
  return parse_variety_text(text, label);
}

const char* kP1F2 = "field p=2 f=1\nambient projective 1\n";
const char* kA1F2 = "field p=2 f=1\nambient affine 1\n";
const char* kGmF2 = "field p=2 f=1\nambient affine 2\npoly x0*x1 - 1\n";
const char* kPointF2 = "field p=2 f=1\nambient affine 1\npoly x0\n";
const char* kConicF3 =
    "field p=3 f=1\nambient affine 2\npoly x0^2 + x1^2 - 1\n";
const char* kCubicF2 =
    "field p=2 f=1\nambient affine 2\npoly x1^2 + x1 - x0^3\n";

std::vector<Int> counts_of(const VarietySpec& v, int prec) {
  return count_sequence(v, prec).counts;
}

}  // namespace

TEST_CASE("smallest-modulus extension fields") {
  FqDescriptor f2 = make_extension_field(2, 1);
  CHECK(f2.modulus == std::vector<unsigned>{0, 1});  // x
  CHECK(f2.q() == 2);

  FqDescriptor f4 = make_extension_field(2, 2);
  CHECK(f4.modulus == std::vector<unsigned>{1, 1, 1});  // x^2 + x + 1
  CHECK(f4.q() == 4);

  FqDescriptor f9 = make_extension_field(3, 2);
  CHECK(f9.modulus == std::vector<unsigned>{1, 0, 1});  // x^2 + 1
  CHECK(f9.q() == 9);

  FqDescriptor f256 = make_extension_field(2, 8);
  CHECK(f256.modulus.size() == 9);
  CHECK(f256.modulus.back() == 1);
  CHECK(f256.q() == 256);

  CHECK_THROWS_AS(make_extension_field(4, 2), NotPrimeError);
  CHECK_THROWS_AS(make_extension_field(2, 0), PreconditionError);
}

TEST_CASE("field arithmetic in F4 and F9") {
  const FieldOps& F4 = field_ops(make_extension_field(2, 2));
  // index 2 is the residue of x; x^2 = x + 1 = index 3
  CHECK(F4.mul(2, 2) == 3);
  CHECK(F4.pow(2, 3) == 1);  // x generates the 3 units
  CHECK(F4.order(2) == 3);
  CHECK(F4.add(2, 3) == 1);

  const FieldOps& F9 = field_ops(make_extension_field(3, 2));
  // index 3 is x; modulus x^2 + 1 makes x^2 = -1 = 2
  CHECK(F9.mul(3, 3) == 2);
  for (std::uint32_t v = 0; v < 9; ++v) CHECK(F9.pow(v, 9) == v);
  for (std::uint32_t a = 0; a < 9; ++a)
    for (std::uint32_t b = 0; b < 9; ++b) {
      // Frobenius v -> v^3 is additive
      CHECK(F9.pow(F9.add(a, b), 3) == F9.add(F9.pow(a, 3), F9.pow(b, 3)));
    }
}

TEST_CASE("field arithmetic beyond the table threshold") {
  // both of these are too big for lookup tables, so they run the
  // digit-vector path: check the ring identities hold there too
  for (auto desc : {make_extension_field(2203, 1), make_extension_field(2, 12),
                    make_extension_field(3, 8)}) {
    const FieldOps& K = field_ops(desc);
    std::uint32_t xs[] = {1, 2, 3, K.q() - 1, K.q() / 2, 17 % K.q()};
    for (std::uint32_t a : xs)
      for (std::uint32_t b : xs) {
        CHECK(K.mul(a, b) == K.mul(b, a));
        CHECK(K.add(a, b) == K.add(b, a));
        CHECK(K.add(a, K.neg(a)) == 0);
        for (std::uint32_t c : xs) {
          CHECK(K.mul(a, K.add(b, c)) == K.add(K.mul(a, b), K.mul(a, c)));
          CHECK(K.mul(a, K.mul(b, c)) == K.mul(K.mul(a, b), c));
        }
      }
    CHECK(K.pow(K.from_residue(-1), 2) == 1);
    // Frobenius v -> v^p fixes exactly the prime subfield
    for (std::uint32_t v : xs)
      CHECK((K.pow(v, K.p()) == v) == (v < K.p()));
  }
}

TEST_CASE("variety parser essentials") {
  VarietySpec gm = var(kGmF2, "gm");
  CHECK(gm.field.p == 2);
  CHECK(gm.ambient == Ambient::affine);
  CHECK(gm.dim == 2);
  CHECK(gm.equations.size() == 1);
  CHECK(gm.equations[0].terms.size() == 2);

  // comments, blank lines, and mod-p collapse to zero
  VarietySpec a1 = var(
      "# a line of nothing\n\nfield p=2 f=1   # trailing\nambient affine 1\n"
      "poly 2*x0\n",
      "a1");
  CHECK(a1.equations.empty());

  // homogeneous check applies to projective ambients only
  CHECK_THROWS_AS(var("field p=2 f=1\nambient projective 1\npoly x0^2 + x1\n",
                      "bad"),
                  ParseError);
  CHECK_NOTHROW(var("field p=2 f=1\nambient projective 1\npoly x0^2 + x1^2\n",
                    "ok"));

  CHECK_THROWS_AS(var("field p=4 f=1\nambient affine 1\n", "np"),
                  NotPrimeError);
  CHECK_THROWS_AS(var("field p=2 f=1\nfield p=3 f=1\nambient affine 1\n",
                      "dup"),
                  ParseError);
  CHECK_THROWS_AS(var("poly x0\n", "early"), ParseError);
  CHECK_THROWS_AS(var("field p=2 f=1\nambient affine 1\npoly y\n", "unk"),
                  ParseError);
  CHECK_THROWS_AS(var("field p=2 f=1\nambient affine 1\npoly x1\n", "oob"),
                  ParseError);
  CHECK_THROWS_AS(var("field p=2 f=1\nambient affine 1\npoly x0 +\n", "trunc"),
                  ParseError);
  CHECK_THROWS_AS(var("field p=2 f=1\nwibble affine 1\n", "decl"),
                  ParseError);

  try {
    var("field p=2 f=1\nambient affine 1\npoly x0 + )\n", "pos");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.line == 3);
    CHECK(e.col == 11);
  }
}

TEST_CASE("point counts of the standard small varieties") {
  CHECK(counts_of(var(kPointF2, "pt"), 4) ==
        std::vector<Int>{1, 1, 1, 1});
  CHECK(counts_of(var(kA1F2, "a1"), 4) == std::vector<Int>{2, 4, 8, 16});
  CHECK(counts_of(var(kGmF2, "gm"), 4) == std::vector<Int>{1, 3, 7, 15});
  CHECK(counts_of(var(kP1F2, "p1"), 5) == std::vector<Int>{3, 5, 9, 17, 33});
  CHECK(count_points(var(kConicF3, "conic"), 1) == 4);
  // affine y^2 + y = x^3 over F_2 (supersingular curve minus the point at
  // infinity)
  CHECK(counts_of(var(kCubicF2, "cubic"), 2) == std::vector<Int>{2, 8});
}

TEST_CASE("projective counting via the cone") {
  VarietySpec p1 = var(kP1F2, "p1");
  CHECK(count_cone_points(p1, 1) == 3);   // 2^2 - 1
  CHECK(count_cone_points(p1, 2) == 15);  // 4^2 - 1
  VarietySpec p2 = var("field p=3 f=1\nambient projective 2\n", "p2");
  CHECK(count_points(p2, 1) == 13);  // 9 + 3 + 1
  // plane conic x0*x2 = x1^2 is isomorphic to P^1
  VarietySpec pc = var(
      "field p=3 f=1\nambient projective 2\npoly x0*x2 - x1^2\n", "pc");
  CHECK(counts_of(pc, 3) == std::vector<Int>{4, 10, 28});
}

TEST_CASE("joint product enumeration") {
  VarietySpec a1 = var(kA1F2, "a1");
  VarietySpec gm = var(kGmF2, "gm");
  VarietySpec p1 = var(kP1F2, "p1");
  VarietySpec cubic = var(kCubicF2, "cubic");

  CHECK(count_product_points({a1, a1}, 3) == 64);  // = A^2 over F_8
  CHECK(count_product_points({p1, p1}, 1) == 9);   // (2+1)^2
  CHECK(count_product_points({p1, p1}, 2) == 25);
  CHECK(count_product_points({p1, gm}, 2) == 15);  // 5 * 3

  // the joint count must equal the product of the separate counts
  CountSequence joint = count_product_sequence({gm, cubic}, 3);
  CountSequence split =
      product_counts(count_sequence(gm, 3), count_sequence(cubic, 3));
  CHECK(joint.counts == split.counts);

  CountSequence joint2 = count_product_sequence({p1, cubic}, 3);
  CountSequence split2 =
      product_counts(count_sequence(p1, 3), count_sequence(cubic, 3));
  CHECK(joint2.counts == split2.counts);
}

TEST_CASE("closed points and zero-cycles of P^1 over F_2") {
  ClosedPointTally t = closed_point_tally(count_sequence(var(kP1F2, "p1"), 3));
  CHECK(t.points == std::vector<Int>{3, 1, 2});
  CHECK(effective_zero_cycle_count(t, 0) == 1);
  CHECK(effective_zero_cycle_count(t, 1) == 3);
  // Sym^2 P^1 = P^2: 7 points over F_2
  CHECK(effective_zero_cycle_count(t, 2) == 7);
  ClosedPointTally t3 = closed_point_tally(count_sequence(var(kP1F2, "p1"), 4));
  // Sym^3 P^1 = P^3: 15 points; Sym^4 P^1 = P^4: 31
  CHECK(effective_zero_cycle_count(t3, 3) == 15);
  CHECK(effective_zero_cycle_count(t3, 4) == 31);

  // a sequence that is not a point count gets rejected
  CountSequence bogus;
  bogus.field = make_extension_field(2, 1);
  bogus.counts = {Int(1), Int(2)};  // M_2 = (2 - 1)/2 not integral
  CHECK_THROWS_AS(closed_point_tally(bogus), TallyError);
  CountSequence neg;
  neg.field = make_extension_field(2, 1);
  neg.counts = {Int(3), Int(1)};  // M_2 = (1 - 3)/2 = -1
  CHECK_THROWS_AS(closed_point_tally(neg), TallyError);
}

TEST_CASE("Weil restriction of scalars on counts") {
  // Res_{F_4/F_2} A^1 = A^2 over F_2
  VarietySpec a1f4 = var("field p=2 f=2\nambient affine 1\n", "a1f4");
  CountSequence res = weil_restriction_counts(count_sequence(a1f4, 4), 2);
  VarietySpec a2f2 = var("field p=2 f=1\nambient affine 2\n", "a2f2");
  CHECK(res.counts == count_sequence(a2f2, 4).counts);
  CHECK(res.field == make_extension_field(2, 1));

  // Res_{F_8/F_2} A^2 = A^6 over F_2
  VarietySpec a2f8 = var("field p=2 f=3\nambient affine 2\n", "a2f8");
  CountSequence res6 = weil_restriction_counts(count_sequence(a2f8, 3), 3);
  VarietySpec a6 = var("field p=2 f=1\nambient affine 6\n", "a6");
  CHECK(res6.counts == count_sequence(a6, 3).counts);

  // m = 1 is the identity
  VarietySpec gm = var(kGmF2, "gm");
  CountSequence c = count_sequence(gm, 4);
  CHECK(weil_restriction_counts(c, 1).counts == c.counts);

  CHECK_THROWS_AS(weil_restriction_counts(c, 2), PreconditionError);
}

TEST_CASE("enumeration budget") {
  VarietySpec gm = var(kGmF2, "gm");
  try {
    count_points(gm, 12, 1000);  // 4096^2 tuples needed
    CHECK(false);
  } catch (const BudgetExceededError& e) {
    CHECK(e.budget == 1000);
    CHECK(e.needed == "16777216");
  }
  // equation-free counting is closed-form and never budgeted
  VarietySpec a3 = var("field p=2 f=1\nambient affine 3\n", "a3");
  CHECK(count_points(a3, 12, 10) == int_pow(Int(2), 36));
}

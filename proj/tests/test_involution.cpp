#include <doctest.h>

#include "desargues/generate.hpp"
#include "desargues/involution.hpp"

using namespace desargues;

namespace {

Scalar q(int n, int d = 1) { return Scalar(Rat(n, d)); }
HomParam H(int n, int d = 1) { return HomParam::from_affine(q(n, d)); }

}  // namespace

TEST_CASE("involution relations canonicalize and reject degenerate forms") {
  CHECK(InvolutionRel(q(2), q(0), q(2)) == InvolutionRel(q(1), q(0), q(1)));
  CHECK(InvolutionRel(q(-1), q(0), q(1)) == InvolutionRel(q(1), q(0), q(-1)));

  // B^2 = AC means the "relation" degenerates to a projection.
  try {
    InvolutionRel(q(1), q(1), q(1));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_relation);
  }
  try {
    InvolutionRel(q(0), q(0), q(1));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::degenerate_relation);
  }
}

TEST_CASE("solving an involution from two conjugate pairs") {
  BinaryQuadratic p0inf(q(0), q(1), q(0));  // pair {0, inf}
  BinaryQuadratic p11(q(1), q(0), q(-1));   // pair {-1, 1}

  InvolutionRel inv = involution_from_pairs(p0inf, p11);
  CHECK(inv == InvolutionRel(q(1), q(0), q(1)));  // x -> -1/x

  CHECK(apply(inv, H(2)) == H(-1, 2));
  CHECK(apply(inv, H(-1)) == H(1));
  CHECK(apply(inv, H(0)) == HomParam::infinity());
  CHECK(apply(inv, HomParam::infinity()) == H(0));

  // Both given pairs are conjugate under the solution.
  CHECK(apolar(p0inf, inv.fixed_form()).is_zero());
  CHECK(apolar(p11, inv.fixed_form()).is_zero());

  // A consistent third pair is accepted, an inconsistent one rejected.
  BinaryQuadratic p22 = BinaryQuadratic::from_root_pair(H(2), H(-1, 2));
  CHECK(involution_from_pairs(p0inf, p11, p22) == inv);
  try {
    involution_from_pairs(p0inf, p11, BinaryQuadratic(q(1), q(0), q(-4)));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::inconsistent);
  }

  // Proportional pairs do not determine the relation.
  try {
    involution_from_pairs(p11, BinaryQuadratic(q(2), q(0), q(-2)));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::rank_deficient);
  }
}

TEST_CASE("fixed points") {
  // Elliptic involution x -> -1/x: conjugate fixed points over Q(sqrt(-1)).
  RootPair fx = fixed_points(InvolutionRel(q(1), q(0), q(1)));
  CHECK(fx.d == -1);
  CHECK_FALSE(fx.double_root);

  // Hyperbolic involution with fixed points {0, inf}.
  fx = fixed_points(InvolutionRel(q(0), q(1), q(0)));
  CHECK(fx.d == 0);
  CHECK(fx.first == H(0));
  CHECK(fx.second == HomParam::infinity());

  // x -> 1/x fixes -1 and 1 and swaps 0 with infinity.
  InvolutionRel rec = involution_with_fixed_points(H(-1), H(1));
  CHECK(rec == InvolutionRel(q(1), q(0), q(-1)));
  CHECK(apply(rec, H(0)) == HomParam::infinity());
  CHECK(apply(rec, H(3)) == H(1, 3));
  fx = fixed_points(rec);
  CHECK(fx.first == H(-1));
  CHECK(fx.second == H(1));

  CHECK(involution_with_fixed_points(H(0), HomParam::infinity()) ==
        InvolutionRel(q(0), q(1), q(0)));

  try {
    involution_with_fixed_points(H(2), H(2));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::coincident_fixed_points);
  }
}

TEST_CASE("an involution applied twice is the identity") {
  ConfigGen gen(20260815);
  int tested = 0;
  while (tested < 60) {
    Rat A = gen.rational(-9, 9, 4);
    Rat B = gen.rational(-9, 9, 4);
    Rat C = gen.rational(-9, 9, 4);
    if (B * B == A * C) continue;
    InvolutionRel inv{Scalar(A), Scalar(B), Scalar(C)};
    HomParam p = tested % 5 == 0 ? HomParam::infinity()
                                 : HomParam(Scalar(gen.rational(-9, 9, 3)),
                                            Scalar(gen.rational(-9, 9, 3)));
    if (p.s().is_zero() && p.t().is_zero()) continue;
    HomParam image = apply(inv, p);
    CHECK(apply(inv, image) == p);

    // p and its image are conjugate: their pair form is apolar to the fixed
    // form (when p is not fixed, the pair form is the genuine chord).
    if (image != p) {
      BinaryQuadratic pair = BinaryQuadratic::from_root_pair(p, image);
      CHECK(apolar(pair, inv.fixed_form()).is_zero());
    }
    ++tested;
  }
}

TEST_CASE("fixed points really are fixed") {
  ConfigGen gen(99);
  int tested = 0;
  while (tested < 40) {
    Rat A = gen.rational(-9, 9, 2);
    Rat B = gen.rational(-9, 9, 2);
    Rat C = gen.rational(-9, 9, 2);
    if (B * B == A * C) continue;
    InvolutionRel inv{Scalar(A), Scalar(B), Scalar(C)};
    RootPair fx = fixed_points(inv);
    if (fx.d < 0) {
      // Conjugate fixed points still satisfy the fixed form exactly.
      CHECK(inv.fixed_form().eval(fx.first).is_zero());
      CHECK(inv.fixed_form().eval(fx.second).is_zero());
    } else {
      // Canonical forms only strip rational content, so an irrational fixed
      // point and its image may differ by a sqrt(d) factor; test projective
      // equality by cross-multiplication, which is exact in Q(sqrt(d)).
      HomParam i1 = apply(inv, fx.first);
      HomParam i2 = apply(inv, fx.second);
      CHECK((i1.s() * fx.first.t() - i1.t() * fx.first.s()).is_zero());
      CHECK((i2.s() * fx.second.t() - i2.t() * fx.second.s()).is_zero());
      if (fx.d == 0) {
        CHECK(i1 == fx.first);
        CHECK(i2 == fx.second);
      }
    }
    ++tested;
  }
}

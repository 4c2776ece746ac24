#include <doctest.h>

#include "desargues/conic.hpp"
#include "desargues/linalg.hpp"

using namespace desargues;

namespace {

Scalar q(int n, int d = 1) { return Scalar(Rat(n, d)); }
Point pt(int x, int y) { return Point::affine(q(x), q(y)); }
HomParam H(int n, int d = 1) { return HomParam::from_affine(q(n, d)); }

Conic circle25() { return Conic::from_coeffs({q(1), q(0), q(1), q(0), q(0), q(-25)}); }

}  // namespace

TEST_CASE("binary quadratic canonical form and evaluation") {
  BinaryQuadratic f(q(2), q(0), q(-2));
  CHECK(f == BinaryQuadratic(q(1), q(0), q(-1)));
  CHECK(BinaryQuadratic(q(-1), q(0), q(1)) == f);  // leading sign normalized

  CHECK(f.eval(H(1)) == q(0));
  CHECK(f.eval(H(-1)) == q(0));
  CHECK(f.eval(H(2)) == q(-3));
  CHECK(f.eval(HomParam::infinity()) == q(-1));
  CHECK(f.discriminant() == q(1));

  CHECK(BinaryQuadratic(q(0), q(0), q(0)).is_zero());
}

TEST_CASE("form with a prescribed root pair") {
  CHECK(BinaryQuadratic::from_root_pair(H(0), HomParam::infinity()) ==
        BinaryQuadratic(q(0), q(1), q(0)));
  CHECK(BinaryQuadratic::from_root_pair(H(-1), H(1)) == BinaryQuadratic(q(1), q(0), q(-1)));
  CHECK(BinaryQuadratic::from_root_pair(H(2), H(2)).discriminant() == q(0));

  BinaryQuadratic g = BinaryQuadratic::from_root_pair(H(1, 2), H(-3));
  CHECK(g.eval(H(1, 2)) == q(0));
  CHECK(g.eval(H(-3)) == q(0));
  CHECK(g.discriminant() != q(0));
}

TEST_CASE("root extraction is deterministic") {
  // Rational roots come in ascending affine order.
  RootPair r = quad_roots(BinaryQuadratic(q(1), q(0), q(-1)));
  CHECK(r.d == 0);
  CHECK_FALSE(r.double_root);
  CHECK(r.first == H(-1));
  CHECK(r.second == H(1));

  r = quad_roots(BinaryQuadratic(q(3), q(2), q(1)));
  CHECK(r.first == H(-3));
  CHECK(r.second == H(-1));

  // A root at infinity sorts last.
  r = quad_roots(BinaryQuadratic(q(2), q(1), q(0)));
  CHECK(r.first == H(-1));
  CHECK(r.second == HomParam::infinity());

  r = quad_roots(BinaryQuadratic(q(0), q(1), q(0)));
  CHECK(r.first == H(0));
  CHECK(r.second == HomParam::infinity());

  // Double roots.
  r = quad_roots(BinaryQuadratic(q(1), q(-1), q(1)));
  CHECK(r.double_root);
  CHECK(r.first == H(1));
  CHECK(r.second == H(1));
  r = quad_roots(BinaryQuadratic(q(1), q(0), q(0)));
  CHECK(r.double_root);
  CHECK(r.first == HomParam::infinity());

  // Quadratic-extension roots keep the +sqrt branch first.
  r = quad_roots(BinaryQuadratic(q(2), q(0), q(-1)));
  CHECK(r.d == 2);
  CHECK(r.first.s() == q(1));
  CHECK(r.first.t() == Scalar(Rat(0), Rat(-1), Int(2)));   // -sqrt(2)
  CHECK(r.second.t() == Scalar(Rat(0), Rat(1), Int(2)));   // +sqrt(2)

  r = quad_roots(BinaryQuadratic(q(1), q(0), q(-2)));
  CHECK(r.d == 2);
  CHECK(r.first.t() / r.first.s() == Scalar(Rat(0), Rat(-1, 2), Int(2)));
  CHECK(r.second.t() / r.second.s() == Scalar(Rat(0), Rat(1, 2), Int(2)));

  // Conjugate imaginary roots are materialized over Q(sqrt(d)), d < 0.
  r = quad_roots(BinaryQuadratic(q(1), q(0), q(1)));
  CHECK(r.d == -1);
  CHECK(r.first.t() == Scalar(Rat(0), Rat(1), Int(-1)));
  CHECK(r.second.t() == Scalar(Rat(0), Rat(-1), Int(-1)));

  // Each reported root really is a root.
  for (auto f : {BinaryQuadratic(q(6), q(-1), q(-1)), BinaryQuadratic(q(5), q(3), q(1)),
                 BinaryQuadratic(q(1), q(7, 2), q(3))}) {
    RootPair rr = quad_roots(f);
    CHECK(f.eval(rr.first).is_zero());
    CHECK(f.eval(rr.second).is_zero());
  }

  try {
    quad_roots(BinaryQuadratic(q(0), q(0), q(0)));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::zero_form);
  }
  try {
    quad_roots(BinaryQuadratic(squarefree_sqrt(Rat(2)), q(0), q(-1)));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::not_rational);
  }
}

TEST_CASE("apolarity pairing detects harmonic pairs") {
  BinaryQuadratic p01(q(0), q(1), q(0));    // roots {0, inf}
  BinaryQuadratic p11(q(1), q(0), q(-1));   // roots {-1, 1}
  BinaryQuadratic p24(q(1), q(0), q(-4));   // roots {-2, 2}

  CHECK(apolar(p01, p11) == q(0));
  CHECK(apolar(p11, p01) == q(0));  // symmetric
  CHECK(apolar(p11, p24) == q(-5));

  // {0, inf} and {a, -a} are harmonic for every a.
  CHECK(apolar(p01, BinaryQuadratic::from_root_pair(H(7), H(-7))) == q(0));
  // {1, -1} and {3, 1/3}: cross ratio (1,-1;3,1/3) = -1.
  CHECK(apolar(p11, BinaryQuadratic::from_root_pair(H(3), H(1, 3))) == q(0));
}

TEST_CASE("exact linear algebra") {
  Matrix m{{q(1), q(2), q(3)}, {q(2), q(4), q(6)}, {q(0), q(1), q(1)}};
  CHECK(rank(m) == 2);
  auto ns = null_space(m);
  REQUIRE(ns.size() == 1);
  // The kernel vector annihilates every row.
  for (const auto& row : m) {
    Scalar acc = q(0);
    for (size_t i = 0; i < 3; ++i) acc += row[i] * ns[0][i];
    CHECK(acc.is_zero());
  }

  CHECK(rank(Matrix{{q(1), q(0)}, {q(0), q(1)}}) == 2);
  CHECK(null_space(Matrix{{q(0), q(0), q(0)}}).size() == 3);
}

TEST_CASE("conic construction and evaluation") {
  Conic c = circle25();
  CHECK(c.rank() == 3);
  CHECK(c.coeffs() == std::array<Scalar, 6>{q(1), q(0), q(1), q(0), q(0), q(-25)});
  CHECK(c.eval(pt(3, 4)) == q(0));
  CHECK(c.eval(pt(5, 0)) == q(0));
  CHECK(c.eval(pt(0, 0)) == q(-25));
  CHECK(c.mval(0, 0) == q(1));
  CHECK(c.mval(0, 2) == q(0));
  CHECK(c.mval(2, 2) == q(-25));

  // Scaled coefficient lists give the same canonical conic.
  CHECK(Conic::from_coeffs({q(2), q(0), q(2), q(0), q(0), q(-50)}) == c);

  // Canonicalization makes the symmetric matrix primitive, so the coefficient
  // list carries doubled cross terms rather than being primitive itself.
  Conic lp = Conic::from_line_pair(Line(q(1), q(0), q(0)), Line(q(0), q(1), q(0)));
  CHECK(lp.rank() == 2);
  CHECK(lp.coeffs() == std::array<Scalar, 6>{q(0), q(2), q(0), q(0), q(0), q(0)});
  CHECK(lp == Conic::from_coeffs({q(0), q(1), q(0), q(0), q(0), q(0)}));

  Line l(q(1), q(-1), q(2));
  CHECK(Conic::from_line_pair(l, l).rank() == 1);
}

TEST_CASE("polarity on a circle") {
  Conic c = circle25();

  // At a point of the conic the polar is the tangent.
  CHECK(polar(c, pt(3, 4)) == Line(q(3), q(4), q(-25)));
  CHECK(polar(c, pt(5, 0)) == Line(q(1), q(0), q(-5)));

  // Pole and polar invert each other.
  CHECK(pole(c, Line(q(3), q(4), q(-25))) == pt(3, 4));
  CHECK(pole(c, Line(q(1), q(2), q(-100))) == Point(q(1), q(2), q(4)));
  CHECK(polar(c, Point(q(1), q(2), q(4))) == Line(q(1), q(2), q(-100)));
  CHECK(polar(c, pt(4, 8)) == Line(q(4), q(8), q(-25)));

  // The polar of the center is the line at infinity.
  CHECK(polar(c, pt(0, 0)) == line_at_infinity());

  // Singular point of a line pair has no polar.
  Conic lp = Conic::from_line_pair(Line(q(1), q(0), q(0)), Line(q(0), q(1), q(0)));
  try {
    polar(lp, pt(0, 0));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::kernel_point);
  }
  // The adjugate of a rank-2 matrix is the outer square of its kernel vector,
  // so a generic line maps to the singular point; a line through the singular
  // point annihilates it and has no pole at all.
  CHECK(pole(lp, Line(q(1), q(1), q(-1))) == Point(q(0), q(0), q(1)));
  try {
    pole(lp, Line(q(1), q(1), q(0)));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_unique_pole);
  }
}

TEST_CASE("centers") {
  Center c = center(circle25());
  CHECK(c.is_proper);
  CHECK(c.point == pt(0, 0));

  Center e = center(Conic::from_coeffs({q(1), q(0), q(4), q(-2), q(-24), q(33)}));
  CHECK(e.is_proper);
  CHECK(e.point == pt(1, 3));

  // A parabola's "center" is its infinite point.
  Center par = center(Conic::from_coeffs({q(0), q(0), q(1), q(-1), q(0), q(0)}));
  CHECK_FALSE(par.is_proper);
  CHECK(par.point == Point(q(1), q(0), q(0)));

  try {
    center(Conic::from_line_pair(Line(q(1), q(0), q(0)), Line(q(0), q(1), q(0))));
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_unique_pole);
  }
}

TEST_CASE("restriction of a conic to a line chart") {
  LineChart ch = LineChart::default_for(Line(q(0), q(1), q(0)));
  BinaryQuadratic r = restrict_to_line(circle25(), ch);
  CHECK(r == BinaryQuadratic(q(25), q(0), q(-1)));
  RootPair roots = quad_roots(r);
  CHECK(ch.point_at(roots.first) == pt(-5, 0));
  CHECK(ch.point_at(roots.second) == pt(5, 0));

  // A component line restricts to the zero form.
  Conic lp = Conic::from_line_pair(Line(q(0), q(1), q(0)), Line(q(1), q(0), q(-1)));
  CHECK(restrict_to_line(lp, ch).is_zero());
}

TEST_CASE("line-conic intersections") {
  Conic c = circle25();

  IntersectionResult two = intersect_line(c, Line(q(0), q(1), q(0)));
  CHECK(two.kind == IntersectKind::two_points);
  CHECK(two.d == 0);
  REQUIRE(two.points.size() == 2);
  CHECK(two.points[0] == pt(-5, 0));
  CHECK(two.points[1] == pt(5, 0));

  IntersectionResult tang = intersect_line(c, Line(q(1), q(0), q(-5)));
  CHECK(tang.kind == IntersectKind::double_point);
  REQUIRE(tang.points.size() == 1);
  CHECK(tang.points[0] == pt(5, 0));

  // A chord-free line yields a conjugate pair over Q(sqrt(d)), d < 0.
  IntersectionResult none = intersect_line(c, Line(q(0), q(1), q(-6)));
  CHECK(none.kind == IntersectKind::two_points);
  CHECK(none.d == -11);
  REQUIRE(none.points.size() == 2);
  for (const Point& p : none.points) {
    CHECK(c.eval(p).is_zero());
    CHECK(Line(q(0), q(1), q(-6)).incident(p));
  }

  Conic lp = Conic::from_line_pair(Line(q(1), q(0), q(0)), Line(q(0), q(1), q(0)));
  CHECK(intersect_line(lp, Line(q(1), q(0), q(0))).kind == IntersectKind::component_contained);
}

TEST_CASE("asymptotes touch at infinity") {
  Conic hyp = Conic::from_coeffs({q(0), q(1), q(0), q(0), q(0), q(-1)});  // xy = 1
  CHECK(is_asymptote(hyp, Line(q(1), q(0), q(0))));
  CHECK(is_asymptote(hyp, Line(q(0), q(1), q(0))));
  CHECK_FALSE(is_asymptote(hyp, Line(q(1), q(0), q(-1))));
  CHECK_FALSE(is_asymptote(circle25(), Line(q(1), q(0), q(-5))));
}

TEST_CASE("affine classification") {
  ConicClass cls = classify_affine(circle25());
  CHECK(cls.kind == ConicKind::ellipse);
  CHECK(cls.rank == 3);
  CHECK(cls.is_real);
  CHECK_FALSE(cls.rectangular);
  CHECK(std::string(conic_kind_name(cls.kind)) == "ellipse");

  cls = classify_affine(Conic::from_coeffs({q(1), q(0), q(1), q(0), q(0), q(1)}));
  CHECK(cls.kind == ConicKind::ellipse);
  CHECK_FALSE(cls.is_real);

  cls = classify_affine(Conic::from_coeffs({q(0), q(0), q(1), q(-1), q(0), q(0)}));
  CHECK(cls.kind == ConicKind::parabola);

  cls = classify_affine(Conic::from_coeffs({q(0), q(1), q(0), q(0), q(0), q(-1)}));
  CHECK(cls.kind == ConicKind::hyperbola);
  CHECK(cls.rectangular);

  cls = classify_affine(Conic::from_coeffs({q(1), q(0), q(-2), q(0), q(0), q(-1)}));
  CHECK(cls.kind == ConicKind::hyperbola);
  CHECK_FALSE(cls.rectangular);

  cls = classify_affine(Conic::from_line_pair(Line(q(1), q(0), q(0)), Line(q(0), q(1), q(0))));
  CHECK(cls.kind == ConicKind::line_pair);
  CHECK(cls.rank == 2);

  Line l(q(1), q(-2), q(1));
  cls = classify_affine(Conic::from_line_pair(l, l));
  CHECK(cls.kind == ConicKind::double_line);
  CHECK(cls.rank == 1);
}

TEST_CASE("principal axes") {
  // Axis-aligned ellipse: horizontal axis first.
  Conic e = Conic::from_coeffs({q(1), q(0), q(4), q(0), q(0), q(-4)});
  auto ax = axes(e);
  CHECK(ax[0] == Line(q(0), q(1), q(0)));
  CHECK(ax[1] == Line(q(1), q(0), q(0)));

  // Rectangular hyperbola xy = 1: the +sqrt branch direction first.
  Conic hyp = Conic::from_coeffs({q(0), q(1), q(0), q(0), q(0), q(-1)});
  ax = axes(hyp);
  CHECK(ax[0] == Line(q(1), q(-1), q(0)));
  CHECK(ax[1] == Line(q(1), q(1), q(0)));

  // Axes pass through the center and are mutually perpendicular.
  Conic g = Conic::from_coeffs({q(2), q(1), q(1), q(-3), q(0), q(-5)});
  ax = axes(g);
  Point ctr = center(g).point;
  CHECK(ax[0].incident(ctr));
  CHECK(ax[1].incident(ctr));
  Point d0 = ax[0].infinite_point();
  Point d1 = ax[1].infinite_point();
  CHECK((d0.x() * d1.x() + d0.y() * d1.y()).is_zero());

  try {
    axes(circle25());
    FAIL("expected throw");
  } catch (const Error& e2) {
    CHECK(e2.code() == Errc::circle_has_no_unique_axes);
  }
  try {
    axes(Conic::from_coeffs({q(0), q(0), q(1), q(-1), q(0), q(0)}));
    FAIL("expected throw");
  } catch (const Error& e2) {
    CHECK(e2.code() == Errc::no_center);
  }
}

TEST_CASE("five points determine a conic") {
  Conic c = conic_through_five({pt(5, 0), pt(-5, 0), pt(0, 5), pt(3, 4), pt(4, -3)});
  CHECK(c == circle25());

  try {
    conic_through_five({pt(0, 0), pt(1, 0), pt(2, 0), pt(3, 0), pt(0, 1)});
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_unique_conic);
  }
}

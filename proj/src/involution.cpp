#include "desargues/involution.hpp"

namespace desargues {

InvolutionRel::InvolutionRel(const Scalar& A, const Scalar& B, const Scalar& C)
    : a_(A), b_(B), c_(C) {
  std::array<Scalar, 3> v{a_, b_, c_};
  canonicalize(v);
  a_ = v[0];
  b_ = v[1];
  c_ = v[2];
  if ((b_ * b_ - a_ * c_).is_zero())
    fail(Errc::degenerate_relation, "relation with vanishing B^2 - AC is not an involution");
}

InvolutionRel involution_from_pairs(const BinaryQuadratic& q1, const BinaryQuadratic& q2,
                                    const std::optional<BinaryQuadratic>& q3) {
  // Row for pair (a, b, c) against unknowns (A, B, C): (c, -2b, a).
  auto row = [](const BinaryQuadratic& q) {
    return std::array<Scalar, 3>{q.c(), Scalar(-2) * q.b(), q.a()};
  };
  std::array<Scalar, 3> r1 = row(q1), r2 = row(q2);
  std::array<Scalar, 3> n = cross3(r1, r2);
  bool primary = !(n[0].is_zero() && n[1].is_zero() && n[2].is_zero());
  if (!primary) {
    if (!q3) fail(Errc::rank_deficient, "the two pairs impose only one condition");
    std::array<Scalar, 3> r3 = row(*q3);
    n = cross3(r1, r3);
    if (n[0].is_zero() && n[1].is_zero() && n[2].is_zero()) n = cross3(r2, r3);
    if (n[0].is_zero() && n[1].is_zero() && n[2].is_zero())
      fail(Errc::rank_deficient, "the pairs impose only one condition");
  } else if (q3 && !dot3(row(*q3), n).is_zero()) {
    fail(Errc::inconsistent, "third pair is not conjugate under the involution of the first two");
  }
  return InvolutionRel(n[0], n[1], n[2]);
}

HomParam apply(const InvolutionRel& inv, const HomParam& p) {
  Scalar u = inv.B() * p.s() + inv.C() * p.t();
  Scalar v = inv.A() * p.s() + inv.B() * p.t();
  return HomParam(u, -v);
}

RootPair fixed_points(const InvolutionRel& inv) { return quad_roots(inv.fixed_form()); }

InvolutionRel involution_with_fixed_points(const HomParam& m, const HomParam& n) {
  if (m == n) fail(Errc::coincident_fixed_points, "fixed points must be distinct");
  BinaryQuadratic f = BinaryQuadratic::from_root_pair(m, n);
  return InvolutionRel(f.a(), f.b(), f.c());
}

}  // namespace desargues

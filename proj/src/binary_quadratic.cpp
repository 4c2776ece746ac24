#include "desargues/binary_quadratic.hpp"

#include <array>

namespace desargues {

BinaryQuadratic::BinaryQuadratic(const Scalar& a, const Scalar& b, const Scalar& c)
    : a_(a), b_(b), c_(c) {
  std::array<Scalar, 3> v{a_, b_, c_};
  canonicalize(v, /*allow_zero=*/true);
  a_ = v[0];
  b_ = v[1];
  c_ = v[2];
}

BinaryQuadratic BinaryQuadratic::from_root_pair(const HomParam& p, const HomParam& q) {
  // (t_p s - s_p t)(t_q s - s_q t)
  Scalar a = p.t() * q.t();
  Scalar twob = -(p.t() * q.s() + p.s() * q.t());
  Scalar c = p.s() * q.s();
  return BinaryQuadratic(a, twob / Scalar(2), c);
}

Scalar apolar(const BinaryQuadratic& q1, const BinaryQuadratic& q2) {
  return q1.a() * q2.c() + q1.c() * q2.a() - Scalar(2) * q1.b() * q2.b();
}

RootPair quad_roots(const BinaryQuadratic& q, const Int& trial_bound) {
  if (q.is_zero()) fail(Errc::zero_form, "roots of the zero form");
  const Rat a = q.a().as_rat();
  const Rat b = q.b().as_rat();
  const Rat c = q.c().as_rat();

  if (c == 0) {
    HomParam inf = HomParam::infinity();
    if (b == 0) return {inf, inf, true, 0};  // a*s^2
    HomParam other(Scalar(Rat(2) * b), Scalar(-a));
    return {other, inf, false, 0};  // finite root first
  }

  Rat disc = b * b - a * c;
  if (disc == 0) {
    HomParam r(Scalar(c), Scalar(-b));
    return {r, r, true, 0};
  }
  Scalar root = squarefree_sqrt(disc, trial_bound);
  if (root.is_rational()) {
    const Rat& e = root.as_rat();  // e > 0
    HomParam r1(Scalar(c), Scalar(-b + e));
    HomParam r2(Scalar(c), Scalar(-b - e));
    // ascending affine value: t/s = (-b +- e)/c
    if (c > 0) std::swap(r1, r2);
    return {r1, r2, false, 0};
  }
  HomParam r1(Scalar(c), Scalar(-b) + root);
  HomParam r2(Scalar(c), Scalar(-b) - root);
  return {r1, r2, false, root.disc()};
}

}  // namespace desargues

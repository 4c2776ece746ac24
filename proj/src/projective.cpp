#include "desargues/projective.hpp"

#include <boost/multiprecision/cpp_int.hpp>

namespace desargues {

namespace {

using boost::multiprecision::gcd;
using boost::multiprecision::lcm;

}  // namespace

void canonicalize(std::span<Scalar> v, bool allow_zero) {
  Int d = 0;
  bool any = false;
  for (const Scalar& s : v) {
    if (s.is_zero()) continue;
    any = true;
    if (!s.is_rational()) {
      if (d != 0 && d != s.disc())
        fail(Errc::mixed_radicals, "coordinates from different extensions");
      d = s.disc();
    }
  }
  if (!any) {
    if (allow_zero) return;
    fail(Errc::zero_vector, "zero coordinate vector");
  }

  Int den = 1;
  for (const Scalar& s : v) {
    den = lcm(den, rat_den(s.rat_part()));
    den = lcm(den, rat_den(s.rad_part()));
  }
  Int content = 0;
  auto fold = [&content](const Rat& r, const Int& den) {
    Int x = rat_num(r) * (den / rat_den(r));
    content = gcd(content, x);
    return x;
  };
  std::vector<std::array<Int, 2>> ints(v.size());
  for (size_t i = 0; i < v.size(); ++i)
    ints[i] = {fold(v[i].rat_part(), den), fold(v[i].rad_part(), den)};

  int flip = 1;
  for (const Scalar& s : v) {
    if (s.is_zero()) continue;
    flip = s.canon_sign();
    break;
  }
  for (size_t i = 0; i < v.size(); ++i)
    v[i] = Scalar(Rat(flip * ints[i][0], content), Rat(flip * ints[i][1], content), d);
}

std::array<Scalar, 3> cross3(const std::array<Scalar, 3>& u, const std::array<Scalar, 3>& v) {
  return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Scalar dot3(const std::array<Scalar, 3>& u, const std::array<Scalar, 3>& v) {
  return u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

Point::Point(const Scalar& x, const Scalar& y, const Scalar& z) : v_{x, y, z} {
  canonicalize(v_);
}

std::array<Scalar, 2> Point::affine_xy() const {
  if (is_at_infinity()) fail(Errc::internal, "affine coordinates of an infinite point");
  return {v_[0] / v_[2], v_[1] / v_[2]};
}

std::string Point::str() const {
  return "(" + v_[0].str() + " : " + v_[1].str() + " : " + v_[2].str() + ")";
}

Line::Line(const Scalar& u, const Scalar& v, const Scalar& w) : v_{u, v, w} {
  canonicalize(v_);
}

Point Line::infinite_point() const {
  if (is_line_at_infinity()) fail(Errc::line_at_infinity, "the line at infinity has no direction");
  return Point(v_[1], -v_[0], Scalar(0));
}

std::string Line::str() const {
  return "[" + v_[0].str() + " : " + v_[1].str() + " : " + v_[2].str() + "]";
}

Line join(const Point& p, const Point& q) {
  std::array<Scalar, 3> c = cross3(p.coords(), q.coords());
  if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero())
    fail(Errc::coincident_points, "join of coincident points");
  return Line(c[0], c[1], c[2]);
}

Point meet(const Line& a, const Line& b) {
  std::array<Scalar, 3> c = cross3(a.coords(), b.coords());
  if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero())
    fail(Errc::coincident_lines, "meet of coincident lines");
  return Point(c[0], c[1], c[2]);
}

Line line_at_infinity() { return Line(Scalar(0), Scalar(0), Scalar(1)); }

bool general_position(const Point& a, const Point& b, const Point& c, const Point& d) {
  auto det = [](const Point& p, const Point& q, const Point& r) {
    return dot3(p.coords(), cross3(q.coords(), r.coords()));
  };
  return !det(a, b, c).is_zero() && !det(a, b, d).is_zero() && !det(a, c, d).is_zero() &&
         !det(b, c, d).is_zero();
}

HomParam::HomParam(const Scalar& s, const Scalar& t) : s_(s), t_(t) {
  std::array<Scalar, 2> v{s_, t_};
  canonicalize(v);
  s_ = v[0];
  t_ = v[1];
}

Scalar HomParam::affine_value() const {
  if (is_infinity()) fail(Errc::division_by_zero, "affine value of the parameter at infinity");
  return t_ / s_;
}

std::string HomParam::str() const { return is_infinity() ? "inf" : affine_value().str(); }

LineChart::LineChart(const Line& line, const Point& r0, const Point& r1)
    : line_(line), r0_(r0), r1_(r1) {
  if (!line.incident(r0) || !line.incident(r1))
    fail(Errc::point_off_line, "chart frame must lie on the line");
  if (r0 == r1) fail(Errc::coincident_points, "chart frame points coincide");
}

LineChart LineChart::default_for(const Line& line) {
  std::array<Scalar, 3> e{Scalar(0), Scalar(0), Scalar(0)};
  std::array<Point, 2> frame{Point(Scalar(1), Scalar(0), Scalar(0)),
                             Point(Scalar(1), Scalar(0), Scalar(0))};
  int found = 0;
  for (int i = 0; i < 3 && found < 2; ++i) {
    e = {Scalar(0), Scalar(0), Scalar(0)};
    e[i] = Scalar(1);
    std::array<Scalar, 3> c = cross3(line.coords(), e);
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero()) continue;
    Point p(c[0], c[1], c[2]);
    if (found == 1 && p == frame[0]) continue;
    frame[found++] = p;
  }
  if (found < 2) fail(Errc::internal, "no default chart frame");
  return LineChart(line, frame[0], frame[1]);
}

HomParam LineChart::param_of(const Point& p) const {
  if (!line_.incident(p)) fail(Errc::point_off_line, "point not on the chart's line");
  std::array<Scalar, 3> base = cross3(r0_.coords(), r1_.coords());
  int k = 0;
  while (k < 3 && base[k].is_zero()) ++k;
  std::array<Scalar, 3> ps = cross3(p.coords(), r1_.coords());
  std::array<Scalar, 3> pt = cross3(p.coords(), r0_.coords());
  return HomParam(ps[k], -pt[k]);
}

Point LineChart::point_at(const HomParam& param) const {
  const std::array<Scalar, 3>& a = r0_.coords();
  const std::array<Scalar, 3>& b = r1_.coords();
  return Point(param.s() * a[0] + param.t() * b[0], param.s() * a[1] + param.t() * b[1],
               param.s() * a[2] + param.t() * b[2]);
}

namespace {

Scalar pdet(const HomParam& p, const HomParam& q) { return p.s() * q.t() - q.s() * p.t(); }

}  // namespace

CrossRatio cross_ratio(const HomParam& p1, const HomParam& p2, const HomParam& p3,
                       const HomParam& p4) {
  if (p1 == p2 || p3 == p4)
    fail(Errc::degenerate_range, "cross ratio needs p1 != p2 and p3 != p4");
  Scalar num = pdet(p1, p3) * pdet(p2, p4);
  Scalar den = pdet(p1, p4) * pdet(p2, p3);
  if (den.is_zero()) {
    if (num.is_zero()) fail(Errc::indeterminate_cross_ratio, "0/0 cross ratio");
    return CrossRatio::infinity();
  }
  return CrossRatio::finite(num / den);
}

HomParam harmonic_conjugate(const HomParam& m, const HomParam& p, const HomParam& q) {
  if (p == q || m == p || m == q)
    fail(Errc::degenerate_range, "harmonic conjugate needs three distinct parameters");
  Scalar mp = pdet(m, p), mq = pdet(m, q);
  return HomParam(mp * q.s() + mq * p.s(), mp * q.t() + mq * p.t());
}

}  // namespace desargues

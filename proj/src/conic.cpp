#include "desargues/conic.hpp"

#include "desargues/linalg.hpp"

namespace desargues {

namespace {

// Index into the packed symmetric storage (m00, m01, m02, m11, m12, m22).
constexpr int kIdx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};

int sym3_rank(const Sym3& m) {
  if (!sym3_det(m).is_zero()) return 3;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int k = 0; k < 3; ++k)
        for (int l = k; l < 3; ++l) {
          Scalar minor = m[kIdx[i][k]] * m[kIdx[j][l]] - m[kIdx[i][l]] * m[kIdx[j][k]];
          if (!minor.is_zero()) return 2;
        }
  return sym3_is_zero(m) ? 0 : 1;
}

}  // namespace

Sym3 sym3_add(const Sym3& x, const Sym3& y) {
  Sym3 r;
  for (int i = 0; i < 6; ++i) r[i] = x[i] + y[i];
  return r;
}

Sym3 sym3_sub(const Sym3& x, const Sym3& y) {
  Sym3 r;
  for (int i = 0; i < 6; ++i) r[i] = x[i] - y[i];
  return r;
}

Sym3 sym3_scale(const Scalar& k, const Sym3& x) {
  Sym3 r;
  for (int i = 0; i < 6; ++i) r[i] = k * x[i];
  return r;
}

std::array<Scalar, 3> sym3_apply(const Sym3& m, const std::array<Scalar, 3>& v) {
  return {m[0] * v[0] + m[1] * v[1] + m[2] * v[2], m[1] * v[0] + m[3] * v[1] + m[4] * v[2],
          m[2] * v[0] + m[4] * v[1] + m[5] * v[2]};
}

Sym3 sym3_adjugate(const Sym3& m) {
  return {m[3] * m[5] - m[4] * m[4], m[2] * m[4] - m[1] * m[5], m[1] * m[4] - m[2] * m[3],
          m[0] * m[5] - m[2] * m[2], m[1] * m[2] - m[0] * m[4], m[0] * m[3] - m[1] * m[1]};
}

Scalar sym3_det(const Sym3& m) {
  Sym3 adj = sym3_adjugate(m);
  return m[0] * adj[0] + m[1] * adj[1] + m[2] * adj[2];
}

bool sym3_is_zero(const Sym3& m) {
  for (const Scalar& s : m)
    if (!s.is_zero()) return false;
  return true;
}

Conic::Conic(const Sym3& m) : m_(m) {
  canonicalize(std::span<Scalar>(m_));
  rank_ = sym3_rank(m_);
}

Conic Conic::from_coeffs(const std::array<Scalar, 6>& v) {
  Scalar half = Scalar(1) / Scalar(2);
  return Conic(Sym3{v[0], v[1] * half, v[3] * half, v[2], v[4] * half, v[5]});
}

Conic Conic::from_line_pair(const Line& l, const Line& m) {
  const std::array<Scalar, 3>& a = l.coords();
  const std::array<Scalar, 3>& b = m.coords();
  Sym3 s;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) s[kIdx[i][j]] = a[i] * b[j] + a[j] * b[i];
  return Conic(s);
}

std::array<Scalar, 6> Conic::coeffs() const {
  Scalar two(2);
  return {m_[0], two * m_[1], m_[3], two * m_[2], two * m_[4], m_[5]};
}

Scalar Conic::eval(const Point& p) const {
  return dot3(p.coords(), sym3_apply(m_, p.coords()));
}

Scalar Conic::mval(int i, int j) const { return m_[kIdx[i][j]]; }

std::string Conic::str() const {
  std::array<Scalar, 6> c = coeffs();
  return "[" + c[0].str() + ", " + c[1].str() + ", " + c[2].str() + ", " + c[3].str() + ", " +
         c[4].str() + ", " + c[5].str() + "]";
}

Line polar(const Conic& c, const Point& p) {
  std::array<Scalar, 3> v = sym3_apply(c.matrix(), p.coords());
  if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero())
    fail(Errc::kernel_point, "polar of a singular point");
  return Line(v[0], v[1], v[2]);
}

Point pole(const Conic& c, const Line& l) {
  std::array<Scalar, 3> v = sym3_apply(sym3_adjugate(c.matrix()), l.coords());
  if (v[0].is_zero() && v[1].is_zero() && v[2].is_zero())
    fail(Errc::no_unique_pole, "line has no unique pole");
  return Point(v[0], v[1], v[2]);
}

Center center(const Conic& c) {
  if (c.rank() < 3) fail(Errc::no_unique_pole, "degenerate conic has no unique center");
  Point p = pole(c, line_at_infinity());
  return {p, !p.is_at_infinity()};
}

BinaryQuadratic restrict_to_line(const Conic& c, const LineChart& chart) {
  const std::array<Scalar, 3>& r0 = chart.r0().coords();
  const std::array<Scalar, 3>& r1 = chart.r1().coords();
  std::array<Scalar, 3> m0 = sym3_apply(c.matrix(), r0);
  return BinaryQuadratic(dot3(r0, m0), dot3(r1, m0), dot3(r1, sym3_apply(c.matrix(), r1)));
}

IntersectionResult intersect_line(const Conic& c, const Line& l) {
  LineChart chart = LineChart::default_for(l);
  BinaryQuadratic q = restrict_to_line(c, chart);
  if (q.is_zero()) return {IntersectKind::component_contained, chart, q, {}, 0};
  RootPair roots = quad_roots(q);
  if (roots.double_root)
    return {IntersectKind::double_point, chart, q, {chart.point_at(roots.first)}, roots.d};
  return {IntersectKind::two_points,
          chart,
          q,
          {chart.point_at(roots.first), chart.point_at(roots.second)},
          roots.d};
}

bool is_asymptote(const Conic& c, const Line& l) {
  IntersectionResult r = intersect_line(c, l);
  return r.kind == IntersectKind::double_point && r.points[0].is_at_infinity();
}

const char* conic_kind_name(ConicKind kind) {
  switch (kind) {
    case ConicKind::ellipse: return "ellipse";
    case ConicKind::parabola: return "parabola";
    case ConicKind::hyperbola: return "hyperbola";
    case ConicKind::line_pair: return "line_pair";
    case ConicKind::double_line: return "double_line";
  }
  return "line_pair";
}

ConicClass classify_affine(const Conic& c) {
  int rk = c.rank();
  if (rk <= 2) return {rk == 2 ? ConicKind::line_pair : ConicKind::double_line, rk, true, false};
  Scalar qdet = c.mval(0, 0) * c.mval(1, 1) - c.mval(0, 1) * c.mval(0, 1);
  int s = qdet.canon_sign();
  if (s < 0) {
    bool rect = (c.mval(0, 0) + c.mval(1, 1)).is_zero();
    return {ConicKind::hyperbola, rk, true, rect};
  }
  if (s == 0) return {ConicKind::parabola, rk, true, false};
  // Real ellipse exactly when m00 * det(M) < 0 (scale-invariant).
  bool real = (c.mval(0, 0) * sym3_det(c.matrix())).canon_sign() < 0;
  return {ConicKind::ellipse, rk, real, false};
}

std::array<Line, 2> axes(const Conic& c) {
  Center ctr = center(c);
  if (!ctr.is_proper) fail(Errc::no_center, "parabola has no proper center");
  Rat A = c.mval(0, 0).as_rat();
  Rat B = c.mval(0, 1).as_rat();
  Rat C = c.mval(1, 1).as_rat();
  if (B == 0) {
    if (A == C) fail(Errc::circle_has_no_unique_axes, "every diameter of a circle is an axis");
    Point dx(Scalar(1), Scalar(0), Scalar(0));
    Point dy(Scalar(0), Scalar(1), Scalar(0));
    return {join(ctr.point, dx), join(ctr.point, dy)};
  }
  // Eigen-directions (2B, (C - A) +- sqrt((A - C)^2 + 4B^2)).
  Scalar root = squarefree_sqrt((A - C) * (A - C) + Rat(4) * B * B);
  Scalar base = Scalar(C - A);
  Point dplus(Scalar(Rat(2) * B), base + root, Scalar(0));
  Point dminus(Scalar(Rat(2) * B), base - root, Scalar(0));
  return {join(ctr.point, dplus), join(ctr.point, dminus)};
}

Conic conic_through_five(const std::array<Point, 5>& pts) {
  Matrix m;
  for (const Point& p : pts) {
    const Scalar& x = p.coords()[0];
    const Scalar& y = p.coords()[1];
    const Scalar& z = p.coords()[2];
    m.push_back({x * x, x * y, y * y, x * z, y * z, z * z});
  }
  std::vector<std::vector<Scalar>> ns = null_space(std::move(m));
  if (ns.size() != 1)
    fail(Errc::no_unique_conic,
         "five points determine a " + std::to_string(ns.size()) + "-dimensional family");
  return Conic::from_coeffs({ns[0][0], ns[0][1], ns[0][2], ns[0][3], ns[0][4], ns[0][5]});
}

}  // namespace desargues

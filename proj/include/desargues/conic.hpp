#pragma once

#include <array>
#include <optional>
#include <vector>

#include "desargues/binary_quadratic.hpp"
#include "desargues/projective.hpp"

namespace desargues {

// Symmetric 3x3 matrix stored as (m00, m01, m02, m11, m12, m22).
using Sym3 = std::array<Scalar, 6>;

Sym3 sym3_add(const Sym3& x, const Sym3& y);
Sym3 sym3_sub(const Sym3& x, const Sym3& y);
Sym3 sym3_scale(const Scalar& k, const Sym3& x);
std::array<Scalar, 3> sym3_apply(const Sym3& m, const std::array<Scalar, 3>& v);
Sym3 sym3_adjugate(const Sym3& m);
Scalar sym3_det(const Sym3& m);
bool sym3_is_zero(const Sym3& m);

// Conic as a nonzero symmetric matrix up to scale, canonical primitive
// entries. Coefficient order for the quadratic form is
// a*x^2 + b*xy + c*y^2 + d*xz + e*yz + f*z^2.
class Conic {
 public:
  explicit Conic(const Sym3& m);
  static Conic from_coeffs(const std::array<Scalar, 6>& abcdef);
  static Conic from_line_pair(const Line& l, const Line& m);

  const Sym3& matrix() const { return m_; }
  std::array<Scalar, 6> coeffs() const;
  int rank() const { return rank_; }

  Scalar eval(const Point& p) const;
  Scalar mval(int i, int j) const;

  std::string str() const;

  friend bool operator==(const Conic& x, const Conic& y) { return x.m_ == y.m_; }
  friend bool operator!=(const Conic& x, const Conic& y) { return !(x == y); }

 private:
  Sym3 m_;
  int rank_;
};

Line polar(const Conic& c, const Point& p);  // kernel_point
Point pole(const Conic& c, const Line& l);   // no_unique_pole

struct Center {
  Point point;     // pole of the line at infinity
  bool is_proper;  // false for the infinite "center" of a parabola
};
Center center(const Conic& c);  // no_unique_pole when rank < 3

// Restriction to a line chart: (R0^T M R0, R0^T M R1, R1^T M R1).
// Identically zero exactly when the line is a component.
BinaryQuadratic restrict_to_line(const Conic& c, const LineChart& chart);

enum class IntersectKind { two_points, double_point, component_contained };

struct IntersectionResult {
  IntersectKind kind;
  LineChart chart;
  BinaryQuadratic restriction;
  std::vector<Point> points;  // 2, 1 or 0 points; conjugate pair when d < 0
  Int d;                      // extension discriminant, 0 if rational
};

IntersectionResult intersect_line(const Conic& c, const Line& l);

// True when l touches c at a single point lying on the line at infinity.
bool is_asymptote(const Conic& c, const Line& l);

enum class ConicKind { ellipse, parabola, hyperbola, line_pair, double_line };

struct ConicClass {
  ConicKind kind;
  int rank;
  bool is_real;      // for ellipses: false when the real locus is empty
  bool rectangular;  // hyperbola with perpendicular asymptotes
};

const char* conic_kind_name(ConicKind kind);

ConicClass classify_affine(const Conic& c);

// Principal axes of a central conic, each through the center, mutually
// perpendicular, ordered with the +sqrt branch direction first.
std::array<Line, 2> axes(const Conic& c);  // circle_has_no_unique_axes, no_center

// Unique conic through five points; no_unique_conic when the five do not
// determine one.
Conic conic_through_five(const std::array<Point, 5>& pts);

}  // namespace desargues

#pragma once

#include <array>
#include <span>
#include <string>

#include "desargues/scalar.hpp"

namespace desargues {

// Scales a nonzero coordinate vector to canonical primitive form: one shared
// radical, denominators cleared, integer content removed, first nonzero entry
// positive under Scalar::canon_sign. Throws zero_vector when all entries are
// zero unless allow_zero is set (then leaves the zeros alone).
void canonicalize(std::span<Scalar> v, bool allow_zero = false);

std::array<Scalar, 3> cross3(const std::array<Scalar, 3>& u, const std::array<Scalar, 3>& v);
Scalar dot3(const std::array<Scalar, 3>& u, const std::array<Scalar, 3>& v);

// Point of the projective plane, canonical homogeneous triple.
class Point {
 public:
  Point(const Scalar& x, const Scalar& y, const Scalar& z);
  static Point affine(const Scalar& x, const Scalar& y) { return Point(x, y, Scalar(1)); }

  const Scalar& x() const { return v_[0]; }
  const Scalar& y() const { return v_[1]; }
  const Scalar& z() const { return v_[2]; }
  const std::array<Scalar, 3>& coords() const { return v_; }

  bool is_at_infinity() const { return v_[2].is_zero(); }
  // Affine coordinates; throws line_at_infinity style misuse as internal.
  std::array<Scalar, 2> affine_xy() const;

  std::string str() const;

  friend bool operator==(const Point& p, const Point& q) { return p.v_ == q.v_; }
  friend bool operator!=(const Point& p, const Point& q) { return !(p == q); }

 private:
  std::array<Scalar, 3> v_;
};

// Line of the projective plane, canonical coefficient triple (u:v:w) of
// u*x + v*y + w*z = 0.
class Line {
 public:
  Line(const Scalar& u, const Scalar& v, const Scalar& w);

  const std::array<Scalar, 3>& coords() const { return v_; }
  Scalar eval(const Point& p) const { return dot3(v_, p.coords()); }
  bool incident(const Point& p) const { return eval(p).is_zero(); }
  bool is_line_at_infinity() const { return v_[0].is_zero() && v_[1].is_zero(); }

  // The line's point at infinity (its direction); throws line_at_infinity
  // for the line at infinity itself.
  Point infinite_point() const;

  std::string str() const;

  friend bool operator==(const Line& a, const Line& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Line& a, const Line& b) { return !(a == b); }

 private:
  std::array<Scalar, 3> v_;
};

Line join(const Point& p, const Point& q);   // coincident_points
Point meet(const Line& a, const Line& b);    // coincident_lines

Line line_at_infinity();

// No three of the four points collinear (and hence all distinct).
bool general_position(const Point& a, const Point& b, const Point& c, const Point& d);

// Homogeneous parameter (s:t) on a line chart; canonical primitive pair.
// The affine value of (s:t) is t/s, with (0:1) the chart's infinity.
class HomParam {
 public:
  HomParam(const Scalar& s, const Scalar& t);
  static HomParam from_affine(const Scalar& x) { return HomParam(Scalar(1), x); }
  static HomParam infinity() { return HomParam(Scalar(0), Scalar(1)); }

  const Scalar& s() const { return s_; }
  const Scalar& t() const { return t_; }
  bool is_infinity() const { return s_.is_zero(); }
  Scalar affine_value() const;  // throws division_by_zero at infinity

  std::string str() const;

  friend bool operator==(const HomParam& p, const HomParam& q) {
    return p.s_ == q.s_ && p.t_ == q.t_;
  }
  friend bool operator!=(const HomParam& p, const HomParam& q) { return !(p == q); }

 private:
  Scalar s_, t_;
};

// Chart (s:t) -> s*r0 + t*r1 identifying a line with P^1.
class LineChart {
 public:
  LineChart(const Line& line, const Point& r0, const Point& r1);

  // Deterministic default frame: candidates line x e_i in index order, taking
  // the first two that are nonzero and projectively distinct.
  static LineChart default_for(const Line& line);

  const Line& line() const { return line_; }
  const Point& r0() const { return r0_; }
  const Point& r1() const { return r1_; }

  HomParam param_of(const Point& p) const;  // point_off_line
  Point point_at(const HomParam& param) const;

 private:
  Line line_;
  Point r0_, r1_;
};

// Cross ratio value: a scalar or the point at infinity of the value line.
class CrossRatio {
 public:
  static CrossRatio finite(const Scalar& v) { return CrossRatio(false, v); }
  static CrossRatio infinity() { return CrossRatio(true, Scalar(0)); }

  bool is_infinity() const { return inf_; }
  const Scalar& value() const { return v_; }
  std::string str() const { return inf_ ? "inf" : v_.str(); }

  friend bool operator==(const CrossRatio& a, const CrossRatio& b) {
    return a.inf_ == b.inf_ && (a.inf_ || a.v_ == b.v_);
  }
  friend bool operator!=(const CrossRatio& a, const CrossRatio& b) { return !(a == b); }

 private:
  CrossRatio(bool inf, const Scalar& v) : inf_(inf), v_(v) {}
  bool inf_;
  Scalar v_;
};

// (p1, p2; p3, p4) = (|p1 p3| * |p2 p4|) / (|p1 p4| * |p2 p3|) with
// |p q| = s_p t_q - s_q t_p. Requires p1 != p2 and p3 != p4.
CrossRatio cross_ratio(const HomParam& p1, const HomParam& p2, const HomParam& p3,
                       const HomParam& p4);

// The unique n with (m, n; p, q) = -1. Requires p != q and m not in {p, q}.
HomParam harmonic_conjugate(const HomParam& m, const HomParam& p, const HomParam& q);

}  // namespace desargues

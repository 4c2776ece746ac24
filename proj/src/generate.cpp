#include "desargues/generate.hpp"

#include <algorithm>

namespace desargues {

int ConfigGen::integer(int lo, int hi) {
  std::uniform_int_distribution<int> dist(lo, hi);
  return dist(rng_);
}

Rat ConfigGen::rational(int lo, int hi, int den_max) {
  int num = integer(lo, hi);
  int den = den_max > 1 ? integer(1, den_max) : 1;
  return Rat(num) / den;
}

Point ConfigGen::affine_point(int lo, int hi, int den_max) {
  return Point::affine(Scalar(rational(lo, hi, den_max)), Scalar(rational(lo, hi, den_max)));
}

std::array<Point, 4> ConfigGen::quadrangle(int lo, int hi, int den_max) {
  for (int attempt = 0; attempt < 4096; ++attempt) {
    Point a = affine_point(lo, hi, den_max);
    Point b = affine_point(lo, hi, den_max);
    Point c = affine_point(lo, hi, den_max);
    Point d = affine_point(lo, hi, den_max);
    if (general_position(a, b, c, d)) return {a, b, c, d};
  }
  fail(Errc::internal, "failed to draw a quadrangle in general position");
}

std::array<Point, 4> ConfigGen::concyclic_quadrangle(int r, int cx, int cy) {
  for (int attempt = 0; attempt < 4096; ++attempt) {
    std::array<Rat, 4> ts;
    bool distinct = true;
    for (int i = 0; i < 4 && distinct; ++i) {
      ts[i] = rational(-12, 12, 5);
      for (int j = 0; j < i; ++j) {
        if (ts[i] == ts[j]) distinct = false;
      }
    }
    if (!distinct) continue;
    std::array<Point, 4> out = {Point::affine(Scalar(0), Scalar(0)), Point::affine(Scalar(0), Scalar(0)),
                                Point::affine(Scalar(0), Scalar(0)), Point::affine(Scalar(0), Scalar(0))};
    for (int i = 0; i < 4; ++i) {
      Rat t = ts[i];
      Rat den = 1 + t * t;
      Rat x = Rat(r) * (1 - t * t) / den + cx;
      Rat y = Rat(2 * r) * t / den + cy;
      out[i] = Point::affine(Scalar(x), Scalar(y));
    }
    // Distinct points of a circle are automatically in general position.
    return out;
  }
  fail(Errc::internal, "failed to draw four distinct circle parameters");
}

Pencil ConfigGen::pencil(int lo, int hi, int den_max) {
  std::array<Point, 4> q = quadrangle(lo, hi, den_max);
  return Pencil(q[0], q[1], q[2], q[3]);
}

Line ConfigGen::admissible_line(const Pencil& p, int lo, int hi) {
  for (int attempt = 0; attempt < 4096; ++attempt) {
    Point a = affine_point(lo, hi);
    Point b = affine_point(lo, hi);
    if (a == b) continue;
    Line l = join(a, b);
    if (p.admissible(l)) return l;
  }
  fail(Errc::internal, "failed to draw an admissible line");
}

PencilParam ConfigGen::param(int lo, int hi) {
  for (int attempt = 0; attempt < 4096; ++attempt) {
    int a = integer(lo, hi);
    int b = integer(lo, hi);
    if (a == 0 && b == 0) continue;
    return PencilParam{Scalar(a), Scalar(b)};
  }
  fail(Errc::internal, "failed to draw a parameter");
}

}  // namespace desargues

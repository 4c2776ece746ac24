#pragma once

#include <array>
#include <cstdint>
#include <random>

#include "desargues/pencil.hpp"

namespace desargues {

// Deterministic pseudo-random source of rational test configurations. All
// draws are reproducible from the seed.
class ConfigGen {
 public:
  explicit ConfigGen(std::uint64_t seed) : rng_(seed) {}

  int integer(int lo, int hi);
  Rat rational(int lo, int hi, int den_max = 1);

  Point affine_point(int lo = -9, int hi = 9, int den_max = 1);

  // Four affine points, no three collinear.
  std::array<Point, 4> quadrangle(int lo = -9, int hi = 9, int den_max = 1);

  // Four distinct points on the circle x^2 + y^2 = r^2 centered at (cx, cy),
  // via the rational parametrization (r(1-t^2), 2rt)/(1+t^2).
  std::array<Point, 4> concyclic_quadrangle(int r = 5, int cx = 0, int cy = 0);

  Pencil pencil(int lo = -9, int hi = 9, int den_max = 1);

  // An affine line missing all four base points.
  Line admissible_line(const Pencil& p, int lo = -9, int hi = 9);

  PencilParam param(int lo = -9, int hi = 9);

 private:
  std::mt19937_64 rng_;
};

}  // namespace desargues

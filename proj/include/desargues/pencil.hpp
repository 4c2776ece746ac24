#pragma once

#include <array>
#include <utility>
#include <vector>

#include "desargues/conic.hpp"
#include "desargues/involution.hpp"

namespace desargues {

// Pencil member parameter (lambda : mu) for lambda*G1 + mu*G2.
using PencilParam = HomParam;

// Deterministic parameter sweep (1:0), (0:1), (1:1), (1:-1), (2:1), (1:2),
// (2:-1), (1:-2), (3:1), ... enumerating primitive pairs by height.
std::vector<PencilParam> sweep_params(size_t n);

// Pencil of conics through four base points in general position, spanned by
// its three degenerate members: G1 = (AB, CD), G2 = (AC, BD), G3 = (AD, BC),
// with the exact relation G3 = alpha*G1 + beta*G2 for the stored
// representatives.
class Pencil {
 public:
  Pencil(const Point& a, const Point& b, const Point& c, const Point& d);

  const std::array<Point, 4>& base() const { return base_; }
  // Side lines in the fixed order AB, CD, AC, BD, AD, BC.
  const std::array<Line, 6>& sides() const { return sides_; }
  const Conic& g1() const { return g1_; }
  const Conic& g2() const { return g2_; }
  const Conic& g3() const { return g3_; }
  const Scalar& alpha() const { return alpha_; }
  const Scalar& beta() const { return beta_; }

  bool is_base_point(const Point& p) const;
  bool admissible(const Line& l) const;  // misses all four base points

  Conic member(const PencilParam& param) const;

  // The unique member through a non-base point.
  std::pair<PencilParam, Conic> member_through(const Point& p) const;  // base_point

  // G1, G2 and G3 with their parameters; singular points are the diagonal
  // points of the quadrangle.
  std::array<std::pair<PencilParam, Conic>, 3> degenerate_members() const;

  std::array<Point, 3> diagonal_points() const;

  // The involution cut on an admissible line, solved from the restrictions
  // of the three degenerate members (two independent conditions plus a
  // consistency check).
  std::pair<InvolutionRel, LineChart> desargues_involution(const Line& l) const;
  InvolutionRel desargues_involution(const LineChart& chart) const;

 private:
  std::array<Point, 4> base_;
  std::array<Line, 6> sides_;
  Conic g1_, g2_, g3_;
  Scalar alpha_, beta_;
};

}  // namespace desargues

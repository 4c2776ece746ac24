#pragma once

#include <optional>

#include "desargues/binary_quadratic.hpp"

namespace desargues {

// Involution of a projective line as the symmetric bilinear relation
// A*s1*s2 + B*(s1*t2 + s2*t1) + C*t1*t2 = 0 between parameter pairs,
// canonical primitive triple with B^2 - AC != 0. The fixed points are the
// roots of the form (A, B, C).
class InvolutionRel {
 public:
  InvolutionRel(const Scalar& A, const Scalar& B, const Scalar& C);

  const Scalar& A() const { return a_; }
  const Scalar& B() const { return b_; }
  const Scalar& C() const { return c_; }

  BinaryQuadratic fixed_form() const { return BinaryQuadratic(a_, b_, c_); }

  friend bool operator==(const InvolutionRel& x, const InvolutionRel& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }
  friend bool operator!=(const InvolutionRel& x, const InvolutionRel& y) { return !(x == y); }

 private:
  Scalar a_, b_, c_;
};

// The unique involution with the given conjugate pairs. A pair with
// quadratic (a, b, c) is conjugate under (A, B, C) exactly when
// a*C - 2b*B + c*A = 0, i.e. when apolar(pair, fixed form) vanishes; the
// relation is solved as the null space of those equations with a
// deterministic pivot choice. rank_deficient when q1, q2 do not give two
// independent conditions; inconsistent when q3 is incompatible.
InvolutionRel involution_from_pairs(const BinaryQuadratic& q1, const BinaryQuadratic& q2,
                                    const std::optional<BinaryQuadratic>& q3 = std::nullopt);

// Image of a parameter; an involution, so apply(apply(p)) == p.
HomParam apply(const InvolutionRel& inv, const HomParam& p);

// Roots of the fixed form, over Q or Q(sqrt(d)).
RootPair fixed_points(const InvolutionRel& inv);

// The involution fixing two given distinct parameters.
InvolutionRel involution_with_fixed_points(const HomParam& m, const HomParam& n);

}  // namespace desargues

#pragma once

#include <string>

#include "desargues/projective.hpp"

namespace desargues {

// Binary quadratic form a*s^2 + 2b*st + c*t^2 on a line chart, canonical
// primitive triple. The identically zero form is representable (it encodes a
// line contained in a conic); operations that need a genuine form reject it.
class BinaryQuadratic {
 public:
  BinaryQuadratic(const Scalar& a, const Scalar& b, const Scalar& c);

  // The form with the given parameter pair as root set.
  static BinaryQuadratic from_root_pair(const HomParam& p, const HomParam& q);

  const Scalar& a() const { return a_; }
  const Scalar& b() const { return b_; }
  const Scalar& c() const { return c_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero(); }
  Scalar discriminant() const { return b_ * b_ - a_ * c_; }
  Scalar eval(const HomParam& p) const {
    return a_ * p.s() * p.s() + Scalar(2) * b_ * p.s() * p.t() + c_ * p.t() * p.t();
  }

  std::string str() const { return "(" + a_.str() + ", " + b_.str() + ", " + c_.str() + ")"; }

  friend bool operator==(const BinaryQuadratic& x, const BinaryQuadratic& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }
  friend bool operator!=(const BinaryQuadratic& x, const BinaryQuadratic& y) {
    return !(x == y);
  }

 private:
  Scalar a_, b_, c_;
};

// Apolarity pairing a1*c2 + c1*a2 - 2*b1*b2. Zero exactly when the root
// pairs of the two forms are harmonic (or one form's double root lies on the
// other form).
Scalar apolar(const BinaryQuadratic& q1, const BinaryQuadratic& q2);

// Root pair of a form, ordered deterministically: rational roots by
// ascending affine value with infinity last; conjugate extension roots with
// the +sqrt(d) branch first. d = 0 marks rational roots.
struct RootPair {
  HomParam first;
  HomParam second;
  bool double_root;
  Int d;
};

// Projective roots over Q or Q(sqrt(d)); requires rational coefficients and
// a nonzero form.
RootPair quad_roots(const BinaryQuadratic& q, const Int& trial_bound = kDefaultTrialBound);

}  // namespace desargues

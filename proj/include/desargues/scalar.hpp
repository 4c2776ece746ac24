#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

#include "desargues/errors.hpp"

namespace desargues {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

int sign_of(const Int& v);
int sign_of(const Rat& v);

// "p/q" with q > 0 and gcd(p, q) = 1, or just "p" when q = 1.
std::string rat_str(const Rat& r);

// Inverse of rat_str. Accepts optional sign, digits, optional "/digits".
// Throws parse_error on malformed text or zero denominator.
Rat parse_rat(std::string_view text);

// Exact integer square root test for n >= 0.
bool perfect_square_root(const Int& n, Int& root);

struct SquarefreeDecomp {
  Int root;  // s in n = s^2 * core
  Int core;  // square-free part
};

// Factors n > 0 as s^2 * core with core square-free: trial division up to
// trial_bound, then a perfect-square test on the remaining cofactor. A
// cofactor above trial_bound^2 that is not a perfect square cannot be
// certified square-free and raises unreduced_radical.
SquarefreeDecomp squarefree_decompose(const Int& n, const Int& trial_bound);

extern const Int kDefaultTrialBound;  // 10^6

// Element of Q or of one quadratic extension Q(sqrt(d)).
//
// A value is a + b*sqrt(d) with a, b rational and d a square-free integer,
// d not in {0, 1}. Rational values are canonicalized to b = 0, d = 0.
// All arithmetic is exact. A computation may use at most one radical:
// combining values with different d raises mixed_radicals instead of
// coercing to a larger field.
class Scalar {
 public:
  Scalar() : a_(0), b_(0), d_(0) {}
  Scalar(int v) : a_(v), b_(0), d_(0) {}
  Scalar(const Int& v) : a_(v), b_(0), d_(0) {}
  Scalar(const Rat& v) : a_(v), b_(0), d_(0) {}
  Scalar(Rat a, Rat b, Int d);

  bool is_rational() const { return b_ == 0; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }

  const Rat& rat_part() const { return a_; }
  const Rat& rad_part() const { return b_; }
  const Int& disc() const { return d_; }

  // The rational value; throws not_rational if a radical part is present.
  const Rat& as_rat() const;

  Scalar conj() const { return Scalar(a_, -b_, d_); }
  Rat norm() const { return a_ * a_ - b_ * b_ * Rat(d_); }

  // Deterministic sign used for canonical forms: the exact real sign when the
  // value is orderable (rational or d > 0), otherwise the sign of the leading
  // component. Returns 0 only for zero.
  int canon_sign() const;

  double to_double() const;  // NaN when d < 0

  std::string str() const;

  Scalar operator-() const { return Scalar(-a_, -b_, d_); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar& operator/=(const Scalar& o) { return *this = *this / o; }

  friend Scalar operator+(const Scalar& x, const Scalar& y);
  friend Scalar operator-(const Scalar& x, const Scalar& y) { return x + (-y); }
  friend Scalar operator*(const Scalar& x, const Scalar& y);
  friend Scalar operator/(const Scalar& x, const Scalar& y);

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

 private:
  Rat a_;  // rational part
  Rat b_;  // coefficient of sqrt(d_)
  Int d_;  // square-free, 0 for rational values

  // d of the combined expression, or throws mixed_radicals.
  static const Int& merged_disc(const Scalar& x, const Scalar& y);
};

// Exact square root of a rational: sqrt(p/q) = (s/q) * sqrt(d) with d the
// signed square-free part of p*q. Returns a rational Scalar when d = 1.
Scalar squarefree_sqrt(const Rat& r, const Int& trial_bound = kDefaultTrialBound);

}  // namespace desargues

#include "desargues/scalar.hpp"

#include <cmath>
#include <limits>

namespace desargues {

const Int kDefaultTrialBound = 1000000;

int sign_of(const Int& v) { return v.sign(); }
int sign_of(const Rat& v) { return v.sign(); }

std::string rat_str(const Rat& r) { return r.str(); }

Rat parse_rat(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  auto parse_int = [&](std::string_view s) -> Int {
    bool neg = false;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
      neg = s[0] == '-';
      s.remove_prefix(1);
    }
    if (!digits(s)) fail(Errc::parse_error, "malformed rational: not an integer");
    Int v{std::string(s)};
    return neg ? Int(-v) : v;
  };

  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!digits(den_text)) {
    fail(Errc::parse_error, "malformed rational: denominator must be unsigned digits");
  }
  Int den{std::string(den_text)};
  if (den == 0) fail(Errc::parse_error, "malformed rational: zero denominator");
  return Rat(num, den);
}

bool perfect_square_root(const Int& n, Int& root) {
  if (n < 0) return false;
  root = boost::multiprecision::sqrt(n);
  return root * root == n;
}

namespace {

// Machine-word trial division; factors <= bound are moved into root/core.
void trial_divide_u64(std::uint64_t n, std::uint64_t bound, Int& root, Int& core,
                      std::uint64_t& cofactor) {
  for (std::uint64_t f = 2; f <= bound && f * f <= n; f += (f == 2 ? 1 : 2)) {
    if (n % f) continue;
    unsigned e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= f;
    if (e & 1) core *= f;
  }
  cofactor = n;
}

void trial_divide_big(Int n, const Int& bound, Int& root, Int& core, Int& cofactor) {
  for (Int f = 2; f <= bound && f * f <= n; f += (f == 2 ? 1 : 2)) {
    if (n % f != 0) continue;
    unsigned e = 0;
    while (n % f == 0) {
      n /= f;
      ++e;
    }
    for (unsigned i = 0; i < e / 2; ++i) root *= f;
    if (e & 1) core *= f;
  }
  cofactor = n;
}

}  // namespace

SquarefreeDecomp squarefree_decompose(const Int& n, const Int& trial_bound) {
  if (n <= 0) fail(Errc::internal, "squarefree_decompose needs n > 0");
  Int root = 1, core = 1;
  if (Int r; perfect_square_root(n, r)) return {r, 1};

  Int cofactor;
  if (n <= std::numeric_limits<std::uint64_t>::max() &&
      trial_bound <= std::numeric_limits<std::uint64_t>::max()) {
    std::uint64_t cof = 0;
    trial_divide_u64(n.convert_to<std::uint64_t>(), trial_bound.convert_to<std::uint64_t>(),
                     root, core, cof);
    cofactor = cof;
  } else {
    trial_divide_big(n, trial_bound, root, core, cofactor);
  }

  if (cofactor > 1) {
    // No prime factor <= trial_bound remains, so a cofactor within
    // trial_bound^2 is prime; larger ones must be exact squares.
    if (Int r; perfect_square_root(cofactor, r)) {
      root *= r;
    } else if (cofactor <= trial_bound * trial_bound) {
      core *= cofactor;
    } else {
      fail(Errc::unreduced_radical,
           "cannot certify square-free part: cofactor " + cofactor.str() +
               " exceeds trial bound squared");
    }
  }
  return {root, core};
}

Scalar::Scalar(Rat a, Rat b, Int d) : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (b_ == 0) {
    d_ = 0;
  } else if (d_ == 0) {
    b_ = 0;  // sqrt(0) contributes nothing
  } else if (d_ == 1) {
    a_ += b_;
    b_ = 0;
    d_ = 0;
  }
}

const Rat& Scalar::as_rat() const {
  if (!is_rational()) fail(Errc::not_rational, "value lies in Q(sqrt(" + d_.str() + "))");
  return a_;
}

const Int& Scalar::merged_disc(const Scalar& x, const Scalar& y) {
  if (x.b_ == 0) return y.d_;
  if (y.b_ == 0) return x.d_;
  if (x.d_ != y.d_)
    fail(Errc::mixed_radicals,
         "cannot combine sqrt(" + x.d_.str() + ") with sqrt(" + y.d_.str() + ")");
  return x.d_;
}

int Scalar::canon_sign() const {
  if (b_ == 0) return sign_of(a_);
  if (d_ > 0) {
    if (a_ == 0) return sign_of(b_);
    int sa = sign_of(a_), sb = sign_of(b_);
    if (sa == sb) return sa;
    Rat lhs = a_ * a_, rhs = b_ * b_ * Rat(d_);
    return lhs > rhs ? sa : sb;  // equality impossible: d square-free, b != 0
  }
  return a_ != 0 ? sign_of(a_) : sign_of(b_);
}

double Scalar::to_double() const {
  double av = a_.convert_to<double>();
  if (b_ == 0) return av;
  if (d_ < 0) return std::numeric_limits<double>::quiet_NaN();
  return av + b_.convert_to<double>() * std::sqrt(d_.convert_to<double>());
}

std::string Scalar::str() const {
  if (b_ == 0) return rat_str(a_);
  std::string s = rat_str(a_) + (sign_of(b_) < 0 ? " - " : " + ");
  Rat ab = boost::multiprecision::abs(b_);
  if (ab != 1) s += rat_str(ab) + "*";
  return s + "sqrt(" + d_.str() + ")";
}

Scalar operator+(const Scalar& x, const Scalar& y) {
  const Int& d = Scalar::merged_disc(x, y);
  return Scalar(x.a_ + y.a_, x.b_ + y.b_, d);
}

Scalar operator*(const Scalar& x, const Scalar& y) {
  const Int& d = Scalar::merged_disc(x, y);
  return Scalar(x.a_ * y.a_ + x.b_ * y.b_ * Rat(d), x.a_ * y.b_ + x.b_ * y.a_, d);
}

Scalar operator/(const Scalar& x, const Scalar& y) {
  if (y.is_zero()) fail(Errc::division_by_zero, "scalar division by zero");
  if (y.b_ == 0) return Scalar(x.a_ / y.a_, x.b_ / y.a_, x.d_);
  Rat n = y.norm();  // nonzero: d square-free rules out a^2 = b^2 d
  Scalar t = x * y.conj();
  return Scalar(t.a_ / n, t.b_ / n, t.d_);
}

Scalar squarefree_sqrt(const Rat& r, const Int& trial_bound) {
  if (r == 0) return Scalar(0);
  Int p = rat_num(r), q = rat_den(r);
  SquarefreeDecomp dec = squarefree_decompose(boost::multiprecision::abs(p) * q, trial_bound);
  Rat coeff(dec.root, q);
  if (r > 0 && dec.core == 1) return Scalar(coeff);
  Int d = r > 0 ? dec.core : Int(-dec.core);
  return Scalar(Rat(0), coeff, d);
}

}  // namespace desargues

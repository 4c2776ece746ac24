#include "desargues/pencil.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include "desargues/linalg.hpp"

namespace desargues {

std::vector<PencilParam> sweep_params(size_t n) {
  std::vector<PencilParam> out;
  out.reserve(n);
  auto push = [&out, n](long p, long q) {
    if (out.size() < n) out.emplace_back(Scalar(Int(p)), Scalar(Int(q)));
  };
  push(1, 0);
  push(0, 1);
  for (long h = 1; out.size() < n; ++h) {
    for (long k = 1; k <= h && out.size() < n; ++k) {
      if (boost::multiprecision::gcd(Int(h), Int(k)) != 1) continue;
      push(h, k);
      if (k != h) push(k, h);
      push(h, -k);
      if (k != h) push(k, -h);
    }
  }
  return out;
}

namespace {

const Point& first_of_general_position(const Point& a, const Point& b, const Point& c,
                                       const Point& d) {
  if (!general_position(a, b, c, d))
    fail(Errc::not_general_position, "base points must be four points, no three collinear");
  return a;
}

}  // namespace

Pencil::Pencil(const Point& a, const Point& b, const Point& c, const Point& d)
    : base_{first_of_general_position(a, b, c, d), b, c, d},
      sides_{join(a, b), join(c, d), join(a, c), join(b, d), join(a, d), join(b, c)},
      g1_(Conic::from_line_pair(sides_[0], sides_[1])),
      g2_(Conic::from_line_pair(sides_[2], sides_[3])),
      g3_(Conic::from_line_pair(sides_[4], sides_[5])) {
  // G3 lies in the span of G1, G2; solve the exact coefficients.
  Matrix m(6, std::vector<Scalar>(3));
  for (int i = 0; i < 6; ++i)
    m[i] = {g1_.matrix()[i], g2_.matrix()[i], g3_.matrix()[i]};
  std::vector<std::vector<Scalar>> ns = null_space(std::move(m));
  if (ns.size() != 1 || ns[0][2].is_zero())
    fail(Errc::internal, "degenerate members do not span a pencil");
  alpha_ = -ns[0][0] / ns[0][2];
  beta_ = -ns[0][1] / ns[0][2];
}

bool Pencil::is_base_point(const Point& p) const {
  for (const Point& b : base_)
    if (b == p) return true;
  return false;
}

bool Pencil::admissible(const Line& l) const {
  for (const Point& b : base_)
    if (l.incident(b)) return false;
  return true;
}

Conic Pencil::member(const PencilParam& param) const {
  return Conic(sym3_add(sym3_scale(param.s(), g1_.matrix()), sym3_scale(param.t(), g2_.matrix())));
}

std::pair<PencilParam, Conic> Pencil::member_through(const Point& p) const {
  Scalar e1 = g1_.eval(p);
  Scalar e2 = g2_.eval(p);
  if (e1.is_zero() && e2.is_zero())
    fail(Errc::base_point, "every member passes through a base point");
  PencilParam param(e2, -e1);
  return {param, member(param)};
}

std::array<std::pair<PencilParam, Conic>, 3> Pencil::degenerate_members() const {
  return {std::pair{PencilParam(Scalar(1), Scalar(0)), g1_},
          std::pair{PencilParam(Scalar(0), Scalar(1)), g2_},
          std::pair{PencilParam(alpha_, beta_), g3_}};
}

std::array<Point, 3> Pencil::diagonal_points() const {
  return {meet(sides_[0], sides_[1]), meet(sides_[2], sides_[3]), meet(sides_[4], sides_[5])};
}

std::pair<InvolutionRel, LineChart> Pencil::desargues_involution(const Line& l) const {
  for (const Point& b : base_)
    if (l.incident(b))
      fail(Errc::line_through_base_point, "induced involution degenerates through a base point");
  LineChart chart = LineChart::default_for(l);
  return {desargues_involution(chart), chart};
}

InvolutionRel Pencil::desargues_involution(const LineChart& chart) const {
  BinaryQuadratic q1 = restrict_to_line(g1_, chart);
  BinaryQuadratic q2 = restrict_to_line(g2_, chart);
  BinaryQuadratic q3 = restrict_to_line(g3_, chart);
  try {
    return involution_from_pairs(q1, q2, q3);
  } catch (const Error& e) {
    if (e.code() == Errc::rank_deficient || e.code() == Errc::inconsistent)
      fail(Errc::internal, std::string("admissible line yielded no involution: ") + e.what());
    throw;
  }
}

}  // namespace desargues

#include "desargues/butterfly.hpp"

#include <algorithm>
#include <random>

#include "desargues/linalg.hpp"

namespace desargues {

const char* pair_case_name(PairCase kind) {
  switch (kind) {
    case PairCase::real_pair:
      return "real-pair";
    case PairCase::tangent:
      return "tangent";
    case PairCase::imaginary_pair:
      return "imaginary-pair";
  }
  return "?";
}

namespace {

std::vector<PencilParam> sample_params(const VerifyOptions& opt) {
  if (!opt.seed) {
    return sweep_params(opt.samples);
  }
  std::mt19937_64 rng(*opt.seed);
  int range = 9;
  std::vector<PencilParam> out;
  int misses = 0;
  while (out.size() < opt.samples) {
    std::uniform_int_distribution<int> dist(-range, range);
    int a = dist(rng);
    int b = dist(rng);
    if (a == 0 && b == 0) continue;
    PencilParam cand{Scalar(a), Scalar(b)};
    if (std::find(out.begin(), out.end(), cand) != out.end()) {
      if (++misses > 64) {
        range *= 10;
        misses = 0;
      }
      continue;
    }
    out.push_back(cand);
  }
  return out;
}

MemberCheck check_one(const Pencil& p, const LineChart& chart, const InvolutionRel& inv,
                      const PencilParam& t, bool materialize) {
  Conic mem = p.member(t);
  BinaryQuadratic q = restrict_to_line(mem, chart);
  if (q.is_zero()) fail(Errc::internal, "member restriction vanished on an admissible line");
  Scalar ap = apolar(q, inv.fixed_form());
  bool pass = ap.is_zero();
  Scalar disc = q.discriminant();
  int ds;
  if (disc.is_rational()) {
    ds = sign_of(disc.as_rat());
  } else if (sign_of(disc.disc()) > 0) {
    ds = disc.canon_sign();
  } else {
    fail(Errc::internal, "member restriction has a non-real discriminant");
  }
  PairCase kind =
      ds > 0 ? PairCase::real_pair : (ds == 0 ? PairCase::tangent : PairCase::imaginary_pair);
  MemberCheck mc{t, q, kind, ap, pass, std::nullopt, std::nullopt};
  if (materialize && q.a().is_rational() && q.b().is_rational() && q.c().is_rational()) {
    mc.points = quad_roots(q);
  }
  return mc;
}

TangentWitness tangent_witness(const Pencil& p, const LineChart& chart, const HomParam& at) {
  Point pt = chart.point_at(at);
  auto mem = p.member_through(pt);
  BinaryQuadratic q = restrict_to_line(mem.second, chart);
  bool ok = !q.is_zero() && q.discriminant().is_zero() && q.eval(at).is_zero();
  return TangentWitness{at, mem.first, ok};
}

ButterflyReport base_report(const char* scenario, const Pencil& p, const Line& l,
                            const VerifyOptions& opt) {
  auto ic = p.desargues_involution(l);
  RootPair fx = fixed_points(ic.first);
  ButterflyReport rep{.scenario = scenario,
                      .involution = std::move(ic.first),
                      .chart = std::move(ic.second),
                      .fixed = std::move(fx)};
  std::vector<PencilParam> params = sample_params(opt);
  rep.members.reserve(params.size());
  for (const PencilParam& t : params) {
    rep.members.push_back(check_one(p, rep.chart, rep.involution, t, opt.materialize_roots));
  }
  if (!rep.fixed.double_root) {
    rep.tangent_at_first = tangent_witness(p, rep.chart, rep.fixed.first);
    rep.tangent_at_second = tangent_witness(p, rep.chart, rep.fixed.second);
  }
  bool ok = true;
  for (const MemberCheck& mc : rep.members) ok = ok && mc.pass;
  if (rep.tangent_at_first) ok = ok && rep.tangent_at_first->tangent;
  if (rep.tangent_at_second) ok = ok && rep.tangent_at_second->tangent;
  rep.pass = ok;
  return rep;
}

// Affine midpoint of the root pair of q, as the conjugate of the parameter of
// the line's infinite point under the involution fixing the pair. Undefined
// when the pair contains that parameter.
std::optional<HomParam> pair_midpoint(const BinaryQuadratic& q, const HomParam& inf_param) {
  if (q.is_zero()) return std::nullopt;
  if (q.eval(inf_param).is_zero()) return std::nullopt;
  if (q.discriminant().is_zero()) {
    // Double root: the midpoint is the root itself.
    if (!q.c().is_zero()) return HomParam(q.c(), -q.b());
    return HomParam(-q.b(), q.a());
  }
  InvolutionRel rel(q.a(), q.b(), q.c());
  return apply(rel, inf_param);
}

Scalar sqdist_affine(const Point& a, const Point& b) {
  std::array<Scalar, 2> pa = a.affine_xy();
  std::array<Scalar, 2> pb = b.affine_xy();
  Scalar dx = pa[0] - pb[0];
  Scalar dy = pa[1] - pb[1];
  return dx * dx + dy * dy;
}

struct CenterMap {
  std::array<Scalar, 3> u, v, w;  // center of member = lam^2 u + lam*mu v + mu^2 w
};

CenterMap center_map(const Pencil& p) {
  const std::array<Scalar, 3> e3{Scalar(0), Scalar(0), Scalar(1)};
  Sym3 a1 = sym3_adjugate(p.g1().matrix());
  Sym3 a2 = sym3_adjugate(p.g2().matrix());
  Sym3 a12 = sym3_adjugate(sym3_add(p.g1().matrix(), p.g2().matrix()));
  CenterMap cm{sym3_apply(a1, e3), sym3_apply(a12, e3), sym3_apply(a2, e3)};
  for (int i = 0; i < 3; ++i) cm.v[i] = cm.v[i] - cm.u[i] - cm.w[i];
  return cm;
}

std::array<Scalar, 3> pole_vec(const CenterMap& cm, const PencilParam& t) {
  Scalar ll = t.s() * t.s();
  Scalar lm = t.s() * t.t();
  Scalar mm = t.t() * t.t();
  std::array<Scalar, 3> out{Scalar(0), Scalar(0), Scalar(0)};
  for (int i = 0; i < 3; ++i) out[i] = ll * cm.u[i] + lm * cm.v[i] + mm * cm.w[i];
  return out;
}

bool all_zero3(const std::array<Scalar, 3>& v) {
  return v[0].is_zero() && v[1].is_zero() && v[2].is_zero();
}

bool all_midpoints_match(std::vector<MemberCheck>& members, const HomParam& inf_param,
                         const HomParam& m) {
  bool ok = true;
  for (MemberCheck& mc : members) {
    mc.midpoint = pair_midpoint(mc.restriction, inf_param);
    if (mc.midpoint && *mc.midpoint != m) ok = false;
  }
  return ok;
}

}  // namespace

ButterflyReport verify_prop1(const Pencil& p, const Line& l, const VerifyOptions& opt) {
  return base_report("prop1", p, l, opt);
}

ButterflyReport verify_prop2(const Pencil& p, const Line& l, const PencilParam& qa,
                             const PencilParam& qb, const VerifyOptions& opt) {
  ButterflyReport rep = base_report("prop2", p, l, opt);
  BinaryQuadratic ra = restrict_to_line(p.member(qa), rep.chart);
  BinaryQuadratic rb = restrict_to_line(p.member(qb), rep.chart);
  InvolutionRel from_pairs = involution_from_pairs(ra, rb);
  if (from_pairs != rep.involution) {
    fail(Errc::mismatch_against_desargues,
         "involution from the two supplied pairs differs from the induced one");
  }
  rep.given_members = std::array<PencilParam, 2>{qa, qb};
  rep.given_pairs = std::array<BinaryQuadratic, 2>{ra, rb};
  return rep;
}

ButterflyReport scenario_klamkin(const Pencil& p, const Line& l, const VerifyOptions& opt) {
  if (l.is_line_at_infinity()) {
    fail(Errc::line_at_infinity, "affine midpoints need an affine line");
  }
  ButterflyReport rep = base_report("klamkin", p, l, opt);
  HomParam inf_param = rep.chart.param_of(l.infinite_point());

  for (MemberCheck& mc : rep.members) {
    mc.midpoint = pair_midpoint(mc.restriction, inf_param);
  }
  std::optional<HomParam> shared;
  for (size_t i = 0; i < rep.members.size() && !shared; ++i) {
    const MemberCheck& a = rep.members[i];
    if (!a.midpoint || a.restriction.discriminant().is_zero()) continue;
    for (size_t j = i + 1; j < rep.members.size(); ++j) {
      const MemberCheck& b = rep.members[j];
      if (!b.midpoint || b.restriction.discriminant().is_zero()) continue;
      if (a.restriction == b.restriction) continue;
      if (*a.midpoint == *b.midpoint) {
        shared = *a.midpoint;
        rep.midpoint_members = std::array<PencilParam, 2>{a.param, b.param};
        break;
      }
    }
  }
  if (!shared) {
    fail(Errc::no_such_configuration,
         "no two sampled members cut chords with a common affine midpoint");
  }
  rep.shared_midpoint = *shared;
  rep.fixed_match = (rep.involution == involution_with_fixed_points(*shared, inf_param));
  bool mid_ok = true;
  for (const MemberCheck& mc : rep.members) {
    if (mc.midpoint && *mc.midpoint != *shared) mid_ok = false;
  }
  rep.pass = rep.pass && rep.fixed_match && mid_ok;
  return rep;
}

ButterflyReport scenario_circle(const Pencil& p, const Line& l, const VerifyOptions& opt) {
  if (l.is_line_at_infinity()) {
    fail(Errc::line_at_infinity, "the circle scenario needs an affine line");
  }
  ButterflyReport rep = base_report("circle", p, l, opt);

  // Member with b = 0 and a = c in affine coefficients, i.e. circle form.
  Matrix sys{{p.g1().mval(0, 1), p.g2().mval(0, 1)},
             {p.g1().mval(0, 0) - p.g1().mval(1, 1), p.g2().mval(0, 0) - p.g2().mval(1, 1)}};
  std::vector<std::vector<Scalar>> ns = null_space(sys);
  if (ns.size() != 1) {
    fail(Errc::not_concyclic, "the pencil has no unique member of circle form");
  }
  PencilParam cp(ns[0][0], ns[0][1]);
  Conic circ = p.member(cp);
  if (circ.rank() < 3) {
    fail(Errc::not_concyclic, "the circle-form member is degenerate");
  }
  ConicClass cls = classify_affine(circ);
  if (cls.kind != ConicKind::ellipse || !cls.is_real) {
    fail(Errc::not_concyclic, "the circle-form member has no real points");
  }
  rep.circle_param = cp;
  Center ctr = center(circ);
  rep.circle_center = ctr.point;

  MemberCheck cc = check_one(p, rep.chart, rep.involution, cp, true);
  HomParam inf_param = rep.chart.param_of(l.infinite_point());
  std::optional<HomParam> mid = pair_midpoint(cc.restriction, inf_param);
  if (!mid) fail(Errc::internal, "a circle cannot pass through the line's infinite point");
  HomParam m = *mid;
  cc.midpoint = m;
  rep.circle_check = cc;

  if (cc.points) {
    Point cp1 = rep.chart.point_at(cc.points->first);
    Point cp2 = rep.chart.point_at(cc.points->second);
    Scalar d1 = sqdist_affine(ctr.point, cp1);
    Scalar d2 = sqdist_affine(ctr.point, cp2);
    if (d1 != d2) fail(Errc::internal, "circle chord endpoints not equidistant from the center");
    rep.chord_sq_dist = d1;
  }

  // Foot of the perpendicular: (m - center) is orthogonal to l's direction.
  Point m_pt = rep.chart.point_at(m);
  if (m_pt == ctr.point) {
    rep.foot_perpendicular = true;
  } else {
    Scalar dx = m_pt.x() * ctr.point.z() - ctr.point.x() * m_pt.z();
    Scalar dy = m_pt.y() * ctr.point.z() - ctr.point.y() * m_pt.z();
    const std::array<Scalar, 3>& lv = l.coords();
    rep.foot_perpendicular = (lv[1] * dx - lv[0] * dy).is_zero();
  }

  bool mid_ok = all_midpoints_match(rep.members, inf_param, m);
  for (const MemberCheck& mc : rep.members) {
    if (mc.param == cp || mc.restriction == cc.restriction) continue;
    if (mc.restriction.discriminant().is_zero()) continue;
    if (mc.midpoint && *mc.midpoint == m) {
      rep.equidistant_witness = mc.param;
      break;
    }
  }
  if (!rep.equidistant_witness) {
    fail(Errc::equidistance_fails,
         "no second member chord is bisected at the foot of the perpendicular");
  }

  rep.fixed_match = (rep.involution == involution_with_fixed_points(m, inf_param));

  Point inf_pt = l.infinite_point();
  auto amem = p.member_through(inf_pt);
  rep.asymptote_param = amem.first;
  rep.asymptote_degenerate = (amem.second.rank() < 3);
  rep.asymptote_ok = is_asymptote(amem.second, l);

  rep.pass = rep.pass && rep.fixed_match && rep.foot_perpendicular && mid_ok &&
             rep.asymptote_ok && cc.pass;
  return rep;
}

ButterflyReport scenario_diameter(const Pencil& p, const PencilParam& h, const Line& l,
                                  const VerifyOptions& opt) {
  if (l.is_line_at_infinity()) {
    fail(Errc::line_at_infinity, "the diameter scenario needs an affine line");
  }
  Conic hmem = p.member(h);
  if (hmem.rank() < 3) fail(Errc::no_proper_center, "the chosen member is degenerate");
  Center ctr = center(hmem);
  if (!ctr.is_proper) fail(Errc::no_proper_center, "the chosen member has no proper center");

  ButterflyReport rep = base_report("diameter", p, l, opt);
  rep.h_param = h;
  Point n_pt = l.infinite_point();
  Line k = polar(hmem, n_pt);
  if (k == l) fail(Errc::no_such_configuration, "the line coincides with the conjugate diameter");
  if (!k.incident(ctr.point)) fail(Errc::internal, "conjugate diameter misses the center");
  rep.diameter = k;
  Point m_pt = meet(l, k);
  rep.m_point = m_pt;
  rep.n_point = n_pt;
  if (m_pt == n_pt) {
    rep.fixed_point_mismatch = true;
  } else {
    HomParam mp = rep.chart.param_of(m_pt);
    HomParam np = rep.chart.param_of(n_pt);
    rep.fixed_point_mismatch = (rep.involution != involution_with_fixed_points(mp, np));
  }
  rep.pass = rep.pass && !rep.fixed_point_mismatch;
  return rep;
}

ButterflyReport scenario_axis(const Pencil& p, const PencilParam& h, const Line& l,
                              const VerifyOptions& opt) {
  Conic hmem = p.member(h);
  if (hmem.rank() < 3) fail(Errc::no_proper_center, "the chosen member is degenerate");
  std::array<Line, 2> ax = axes(hmem);
  if (l.is_line_at_infinity()) {
    fail(Errc::line_at_infinity, "the axis scenario needs an affine line");
  }
  Point dl = l.infinite_point();
  std::optional<Line> perp_axis;
  for (const Line& axis : ax) {
    Point da = axis.infinite_point();
    Scalar dot = dl.x() * da.x() + dl.y() * da.y();
    if (dot.is_zero()) {
      perp_axis = axis;
      break;
    }
  }
  if (!perp_axis) {
    fail(Errc::not_perpendicular, "the line is perpendicular to neither principal axis");
  }
  ButterflyReport rep = scenario_diameter(p, h, l, opt);
  rep.scenario = "axis";
  rep.axis_used = *perp_axis;
  return rep;
}

EllipseOfCenters eleven_point_conic(const Pencil& p) {
  for (const Point& b : p.base()) {
    if (b.is_at_infinity()) {
      fail(Errc::base_point_at_infinity, "side midpoints need affine base points");
    }
  }
  CenterMap cm = center_map(p);

  std::vector<PencilParam> sweep = sweep_params(24);
  std::vector<std::pair<PencilParam, Point>> collected;
  for (const PencilParam& t : sweep) {
    if (collected.size() >= 8) break;
    std::array<Scalar, 3> pv = pole_vec(cm, t);
    if (all_zero3(pv)) continue;
    Point pt(pv[0], pv[1], pv[2]);
    bool dup = false;
    for (const auto& kv : collected) {
      if (kv.second == pt) {
        dup = true;
        break;
      }
    }
    if (!dup) collected.emplace_back(t, pt);
  }
  if (collected.size() < 8) {
    fail(Errc::degenerate_locus, "too few distinct member centers");
  }
  std::array<Point, 5> five{collected[0].second, collected[1].second, collected[2].second,
                            collected[3].second, collected[4].second};
  Conic fit = [&]() {
    try {
      return conic_through_five(five);
    } catch (const Error& e) {
      if (e.code() == Errc::no_unique_conic) {
        fail(Errc::degenerate_locus, "the member centers do not determine a conic");
      }
      throw;
    }
  }();
  for (size_t i = 5; i < collected.size(); ++i) {
    if (!fit.eval(collected[i].second).is_zero()) {
      fail(Errc::internal, "fitted center locus misses a member center");
    }
  }

  EllipseOfCenters out{fit, classify_affine(fit), std::move(collected), {}, false};

  static const char* diag_names[3] = {"diagonal:AB.CD", "diagonal:AC.BD", "diagonal:AD.BC"};
  std::array<Point, 3> diag = p.diagonal_points();
  for (int i = 0; i < 3; ++i) {
    Scalar v = fit.eval(diag[i]);
    out.witnesses.push_back(WitnessCheck{diag_names[i], diag[i], v, false});
  }

  static const char* side_names[6] = {"AB", "CD", "AC", "BD", "AD", "BC"};
  static const int side_pairs[6][2] = {{0, 1}, {2, 3}, {0, 2}, {1, 3}, {0, 3}, {1, 2}};
  const Scalar half(Rat(1) / 2);
  for (int i = 0; i < 6; ++i) {
    std::array<Scalar, 2> a = p.base()[side_pairs[i][0]].affine_xy();
    std::array<Scalar, 2> b = p.base()[side_pairs[i][1]].affine_xy();
    Point mid = Point::affine((a[0] + b[0]) * half, (a[1] + b[1]) * half);
    Scalar v = fit.eval(mid);
    out.witnesses.push_back(WitnessCheck{std::string("midpoint:") + side_names[i], mid, v, false});
  }

  auto inf = p.desargues_involution(line_at_infinity());
  RootPair fr = fixed_points(inf.first);
  Point f1 = inf.second.point_at(fr.first);
  Point f2 = inf.second.point_at(fr.second);
  out.witnesses.push_back(WitnessCheck{"infinite_fixed:first", f1, fit.eval(f1), false});
  out.witnesses.push_back(WitnessCheck{"infinite_fixed:second", f2, fit.eval(f2), fr.d != 0});

  out.all_zero = true;
  for (const WitnessCheck& wc : out.witnesses) {
    if (!wc.value.is_zero()) out.all_zero = false;
  }
  return out;
}

ButterflyPointResult butterfly_point(const Pencil& p, const Point& m) {
  if (p.is_base_point(m)) {
    fail(Errc::base_point, "base points are vertices of the quadrangle, not member centers");
  }
  CenterMap cm = center_map(p);
  std::array<Scalar, 3> cu = cross3(cm.u, m.coords());
  std::array<Scalar, 3> cv = cross3(cm.v, m.coords());
  std::array<Scalar, 3> cw = cross3(cm.w, m.coords());
  Matrix rows{{cu[0], cv[0], cw[0]}, {cu[1], cv[1], cw[1]}, {cu[2], cv[2], cw[2]}};
  std::vector<std::vector<Scalar>> ns = null_space(rows);

  ButterflyPointResult res{.m = m};
  std::vector<PencilParam> cands;
  if (ns.size() == 1) {
    const Scalar& x = ns[0][0];
    const Scalar& y = ns[0][1];
    const Scalar& z = ns[0][2];
    if (y * y == x * z) {
      if (!x.is_zero()) {
        cands.emplace_back(x, y);
      } else {
        cands.emplace_back(Scalar(0), Scalar(1));
      }
    }
  } else if (ns.size() == 2) {
    // Rank-one system: the candidates are the roots of any nonzero row, read
    // as a quadratic in the parameter.
    for (const std::vector<Scalar>& r : rows) {
      if (r[0].is_zero() && r[1].is_zero() && r[2].is_zero()) continue;
      BinaryQuadratic q(r[0], r[1] * Scalar(Rat(1) / 2), r[2]);
      RootPair rts = quad_roots(q);
      if (sign_of(rts.d) >= 0) {
        cands.push_back(rts.first);
        if (!rts.double_root) cands.push_back(rts.second);
      }
      break;
    }
  } else if (ns.size() == 3) {
    for (const PencilParam& t : sweep_params(16)) {
      if (!all_zero3(pole_vec(cm, t))) {
        cands.push_back(t);
        break;
      }
    }
  }

  for (const PencilParam& t : cands) {
    std::array<Scalar, 3> pv = pole_vec(cm, t);
    if (all_zero3(pv)) continue;
    if (!all_zero3(cross3(pv, m.coords()))) continue;
    res.is_butterfly = true;
    res.member = t;
    break;
  }
  if (!res.is_butterfly) return res;

  // Common point of the polars of m: take the first two distinct polars among
  // small member parameters.
  std::optional<Line> first_polar;
  for (const PencilParam& t : sweep_params(8)) {
    Conic mem = p.member(t);
    std::array<Scalar, 3> pv = sym3_apply(mem.matrix(), m.coords());
    if (all_zero3(pv)) continue;  // m is the singular point of this member
    Line pol(pv[0], pv[1], pv[2]);
    if (!first_polar) {
      first_polar = pol;
      continue;
    }
    if (pol == *first_polar) continue;
    Point n = meet(*first_polar, pol);
    if (!n.is_at_infinity()) fail(Errc::internal, "polars of a member center must meet at infinity");
    res.n = n;
    if (n != m) {
      res.axis = join(m, n);
    } else {
      res.axis_undefined = true;
    }
    return res;
  }
  res.axis_undefined = true;
  res.coincident_polar = first_polar;
  return res;
}

Point conjugate_point(const Pencil& p, const Point& x) {
  std::optional<Line> first_polar;
  for (const PencilParam& t : sweep_params(8)) {
    Conic mem = p.member(t);
    std::array<Scalar, 3> pv = sym3_apply(mem.matrix(), x.coords());
    if (all_zero3(pv)) continue;  // x is the singular point of this member
    Line pol(pv[0], pv[1], pv[2]);
    if (!first_polar) {
      first_polar = pol;
      continue;
    }
    if (pol == *first_polar) continue;
    return meet(*first_polar, pol);
  }
  fail(Errc::no_such_configuration, "the polars of the point coincide; no unique common point");
}

std::optional<PencilParam> axis_aligned_member(const Pencil& p) {
  Matrix sys{{p.g1().mval(0, 1), p.g2().mval(0, 1)}};
  std::vector<std::vector<Scalar>> ns = null_space(sys);
  if (ns.size() != 1) return std::nullopt;
  return PencilParam(ns[0][0], ns[0][1]);
}

}  // namespace desargues

#include "desargues/json_io.hpp"

namespace desargues {

Json scalar_json(const Scalar& s) {
  if (s.is_rational()) return rat_str(s.as_rat());
  Json j;
  j["a"] = rat_str(s.rat_part());
  j["b"] = rat_str(s.rad_part());
  j["d"] = s.disc().str();
  return j;
}

namespace {

Json triple_json(const std::array<Scalar, 3>& v) {
  Json j = Json::array();
  for (const Scalar& s : v) j.push_back(scalar_json(s));
  return j;
}

}  // namespace

Json point_json(const Point& p) { return triple_json(p.coords()); }

Json line_json(const Line& l) { return triple_json(l.coords()); }

Json hom_json(const HomParam& h) {
  Json j = Json::array();
  j.push_back(scalar_json(h.s()));
  j.push_back(scalar_json(h.t()));
  return j;
}

Json value_json(const HomParam& h) {
  if (h.is_infinity()) return "inf";
  return scalar_json(h.affine_value());
}

Json quadratic_json(const BinaryQuadratic& q) {
  Json j = Json::array();
  j.push_back(scalar_json(q.a()));
  j.push_back(scalar_json(q.b()));
  j.push_back(scalar_json(q.c()));
  return j;
}

Json rootpair_json(const RootPair& r) {
  Json j;
  j["values"] = Json::array({value_json(r.first), value_json(r.second)});
  j["double_root"] = r.double_root;
  j["d"] = r.d.str();
  return j;
}

Json involution_json(const InvolutionRel& inv) {
  Json j = Json::array();
  j.push_back(scalar_json(inv.A()));
  j.push_back(scalar_json(inv.B()));
  j.push_back(scalar_json(inv.C()));
  return j;
}

Json conic_json(const Conic& c) {
  Json j;
  Json coeffs = Json::array();
  for (const Scalar& s : c.coeffs()) coeffs.push_back(scalar_json(s));
  j["coeffs"] = coeffs;
  j["rank"] = c.rank();
  return j;
}

Json conic_class_json(const ConicClass& cls) {
  Json j;
  j["kind"] = conic_kind_name(cls.kind);
  j["rank"] = cls.rank;
  j["real"] = cls.is_real;
  j["rectangular"] = cls.rectangular;
  return j;
}

Json member_check_json(const MemberCheck& mc) {
  Json j;
  j["param"] = hom_json(mc.param);
  j["restriction"] = quadratic_json(mc.restriction);
  j["case"] = pair_case_name(mc.kind);
  j["apolar"] = scalar_json(mc.apolarity);
  j["pass"] = mc.pass;
  if (mc.points) j["points"] = rootpair_json(*mc.points);
  if (mc.midpoint) j["midpoint"] = value_json(*mc.midpoint);
  return j;
}

Json tangent_witness_json(const TangentWitness& tw) {
  Json j;
  j["at"] = value_json(tw.at);
  j["member"] = hom_json(tw.param);
  j["tangent"] = tw.tangent;
  return j;
}

Json report_json(const ButterflyReport& rep) {
  Json j;
  j["scenario"] = rep.scenario;
  j["line"] = line_json(rep.chart.line());
  j["frame"] = Json{{"r0", point_json(rep.chart.r0())}, {"r1", point_json(rep.chart.r1())}};
  j["involution"] = involution_json(rep.involution);
  j["fixed"] = rootpair_json(rep.fixed);
  Json members = Json::array();
  for (const MemberCheck& mc : rep.members) members.push_back(member_check_json(mc));
  j["members"] = members;
  if (rep.tangent_at_first && rep.tangent_at_second) {
    j["tangency"] = Json{{"first", tangent_witness_json(*rep.tangent_at_first)},
                         {"second", tangent_witness_json(*rep.tangent_at_second)}};
  }
  if (rep.given_members && rep.given_pairs) {
    j["given"] = Json{
        {"members",
         Json::array({hom_json((*rep.given_members)[0]), hom_json((*rep.given_members)[1])})},
        {"restrictions", Json::array({quadratic_json((*rep.given_pairs)[0]),
                                      quadratic_json((*rep.given_pairs)[1])})}};
  }
  if (rep.shared_midpoint) {
    Json m;
    m["value"] = value_json(*rep.shared_midpoint);
    if (rep.midpoint_members) {
      m["members"] = Json::array(
          {hom_json((*rep.midpoint_members)[0]), hom_json((*rep.midpoint_members)[1])});
    }
    m["fixed_match"] = rep.fixed_match;
    j["shared_midpoint"] = m;
  }
  if (rep.circle_param) {
    Json c;
    c["param"] = hom_json(*rep.circle_param);
    if (rep.circle_center) c["center"] = point_json(*rep.circle_center);
    if (rep.circle_check) c["check"] = member_check_json(*rep.circle_check);
    if (rep.chord_sq_dist) c["chord_sq_dist"] = scalar_json(*rep.chord_sq_dist);
    c["foot_perpendicular"] = rep.foot_perpendicular;
    if (rep.equidistant_witness) c["equidistant_witness"] = hom_json(*rep.equidistant_witness);
    if (rep.asymptote_param) {
      c["asymptote"] = Json{{"param", hom_json(*rep.asymptote_param)},
                            {"ok", rep.asymptote_ok},
                            {"degenerate", rep.asymptote_degenerate}};
    }
    c["fixed_match"] = rep.fixed_match;
    j["circle"] = c;
  }
  if (rep.h_param) {
    Json d;
    d["h"] = hom_json(*rep.h_param);
    if (rep.diameter) d["diameter"] = line_json(*rep.diameter);
    if (rep.axis_used) d["axis"] = line_json(*rep.axis_used);
    if (rep.m_point) d["m"] = point_json(*rep.m_point);
    if (rep.n_point) d["n"] = point_json(*rep.n_point);
    d["fixed_point_mismatch"] = rep.fixed_point_mismatch;
    j["conjugate_diameter"] = d;
  }
  j["pass"] = rep.pass;
  return j;
}

Json report_json(const EllipseOfCenters& e) {
  Json j;
  j["locus"] = conic_json(e.locus);
  j["class"] = conic_class_json(e.cls);
  Json samples = Json::array();
  for (const auto& kv : e.samples) {
    samples.push_back(Json{{"param", hom_json(kv.first)}, {"center", point_json(kv.second)}});
  }
  j["samples"] = samples;
  Json wit = Json::array();
  for (const WitnessCheck& w : e.witnesses) {
    Json wj;
    wj["name"] = w.name;
    wj["point"] = point_json(w.point);
    wj["value"] = scalar_json(w.value);
    if (w.derived_by_conjugation) wj["conjugate"] = true;
    wit.push_back(wj);
  }
  j["witnesses"] = wit;
  j["all_zero"] = e.all_zero;
  return j;
}

Json report_json(const ButterflyPointResult& r) {
  Json j;
  j["point"] = point_json(r.m);
  j["is_butterfly"] = r.is_butterfly;
  if (r.member) j["member"] = hom_json(*r.member);
  if (r.n) j["n"] = point_json(*r.n);
  if (r.axis) j["axis"] = line_json(*r.axis);
  j["axis_undefined"] = r.axis_undefined;
  if (r.coincident_polar) j["coincident_polar"] = line_json(*r.coincident_polar);
  return j;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace desargues

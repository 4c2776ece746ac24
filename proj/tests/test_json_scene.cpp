#include <doctest.h>

#include "desargues/json_io.hpp"
#include "desargues/scene.hpp"
#include "desargues/svg.hpp"

using namespace desargues;

namespace {

Scalar q(int n, int d = 1) { return Scalar(Rat(n, d)); }
Point pt(int x, int y) { return Point::affine(q(x), q(y)); }

const char* kMinimalScene = R"({
  "points": {
    "A": {"x": "1", "y": "1"},
    "B": {"x": "-1", "y": "1"},
    "C": {"x": "-1", "y": "-1"},
    "D": {"x": "1", "y": "-1"},
    "U": ["1", "2", "0"],
    "E": {"x": 2, "y": "1/2"}
  },
  "lines": {
    "l": {"coeffs": ["0", "1", "0"]},
    "m": {"through": ["A", "C"]}
  },
  "conics": {
    "c": {"coeffs": ["1", "0", "1", "0", "0", "-25"]},
    "k": {"circle_through": ["A", "B", "C"]}
  },
  "pencils": {
    "p": {"base": ["A", "B", "C", "D"]}
  }
})";

}  // namespace

TEST_CASE("exact values serialize losslessly") {
  CHECK(scalar_json(q(-3, 2)) == Json("-3/2"));
  CHECK(scalar_json(q(7)) == Json("7"));

  Json ext = scalar_json(Scalar(Rat(1, 2), Rat(-3), Int(5)));
  CHECK(ext["a"] == "1/2");
  CHECK(ext["b"] == "-3");
  CHECK(ext["d"] == "5");

  CHECK(point_json(pt(2, -3)) == Json::array({"2", "-3", "1"}));
  CHECK(line_json(Line(q(0), q(2), q(-4))) == Json::array({"0", "1", "-2"}));
  CHECK(hom_json(HomParam(q(2), q(-4))) == Json::array({"1", "-2"}));
  CHECK(value_json(HomParam::from_affine(q(5, 3))) == Json("5/3"));
  CHECK(value_json(HomParam::infinity()) == Json("inf"));
  CHECK(quadratic_json(BinaryQuadratic(q(1), q(0), q(-1))) == Json::array({"1", "0", "-1"}));
  CHECK(involution_json(InvolutionRel(q(0), q(1), q(0))) == Json::array({"0", "1", "0"}));

  Json rp = rootpair_json(quad_roots(BinaryQuadratic(q(1), q(0), q(-1))));
  CHECK(rp["values"] == Json::array({"-1", "1"}));
  CHECK(rp["double_root"] == false);
  CHECK(rp["d"] == "0");

  Json cj = conic_json(Conic::from_coeffs({q(1), q(0), q(1), q(0), q(0), q(-25)}));
  CHECK(cj["coeffs"] == Json::array({"1", "0", "1", "0", "0", "-25"}));
  CHECK(cj["rank"] == 3);

  std::string dumped = dump_json(Json{{"a", 1}});
  CHECK(dumped.back() == '\n');
  CHECK(dumped.find("  \"a\"") != std::string::npos);  // two-space indent
}

TEST_CASE("verification reports carry the full structure") {
  Pencil p(pt(1, 1), pt(-1, 1), pt(-1, -1), pt(1, -1));
  ButterflyReport rep = verify_prop1(p, Line(q(0), q(1), q(0)));
  Json j = report_json(rep);

  CHECK(j["scenario"] == "prop1");
  CHECK(j["line"] == Json::array({"0", "1", "0"}));
  CHECK(j["frame"]["r0"] == Json::array({"0", "0", "1"}));
  CHECK(j["frame"]["r1"] == Json::array({"1", "0", "0"}));
  CHECK(j["involution"] == Json::array({"0", "1", "0"}));
  CHECK(j["fixed"]["values"] == Json::array({"0", "inf"}));
  CHECK(j["fixed"]["double_root"] == false);
  CHECK(j["members"].size() == 12);
  CHECK(j["members"][0]["case"] == "tangent");
  CHECK(j["members"][0]["apolar"] == "0");
  CHECK(j["members"][0]["pass"] == true);
  CHECK(j["tangency"]["first"]["at"] == "0");
  CHECK(j["tangency"]["first"]["tangent"] == true);
  CHECK(j["pass"] == true);

  // Member parameters and restrictions serialize as canonical pairs/triples.
  CHECK(j["members"][2]["param"] == Json::array({"1", "1"}));
  CHECK(j["members"][2]["restriction"] == Json::array({"1", "0", "-1"}));
  CHECK(j["members"][2]["points"]["values"] == Json::array({"-1", "1"}));

  // Quadratic-extension chord endpoints serialize as {a, b, d} objects.
  CHECK(j["members"][4]["points"]["d"] == "2");
  CHECK(j["members"][4]["points"]["values"][0]["d"] == "2");
}

TEST_CASE("locus and membership reports") {
  Pencil p(pt(0, 0), pt(4, 0), pt(1, 3), pt(5, 2));
  Json e = report_json(eleven_point_conic(p));
  CHECK(e["locus"]["coeffs"] == Json::array({"8", "64", "-28", "-120", "-90", "208"}));
  CHECK(e["class"]["kind"] == "hyperbola");
  CHECK(e["class"]["rectangular"] == false);
  CHECK(e["witnesses"].size() == 11);
  CHECK(e["witnesses"][0]["name"] == "diagonal:AB.CD");
  CHECK(e["witnesses"][0]["value"] == "0");
  CHECK(e["all_zero"] == true);

  Json b = report_json(butterfly_point(p, Point(q(28), q(19), q(14))));
  CHECK(b["point"] == Json::array({"28", "19", "14"}));
  CHECK(b["is_butterfly"] == true);
  CHECK(b["member"] == Json::array({"5", "1"}));
  CHECK(b["axis"] == Json::array({"133", "-14", "-247"}));
  CHECK(b["axis_undefined"] == false);
}

TEST_CASE("scenes parse named exact geometry") {
  Scene sc = Scene::parse(kMinimalScene);

  CHECK(sc.point("A") == pt(1, 1));
  CHECK(sc.point("U") == Point(q(1), q(2), q(0)));
  CHECK(sc.point("E") == Point::affine(q(2), q(1, 2)));
  CHECK(sc.line("l") == Line(q(0), q(1), q(0)));
  CHECK(sc.line("m") == join(pt(1, 1), pt(-1, -1)));
  CHECK(sc.conic("c") == Conic::from_coeffs({q(1), q(0), q(1), q(0), q(0), q(-25)}));

  // circle_through produces the genuine circumscribed circle.
  const Conic& k = sc.conic("k");
  for (const char* n : {"A", "B", "C"}) CHECK(k.eval(sc.point(n)).is_zero());
  CHECK(k == circle_through(pt(1, 1), pt(-1, 1), pt(-1, -1)));
  CHECK(classify_affine(k).kind == ConicKind::ellipse);

  CHECK(sc.pencil("p").base()[0] == pt(1, 1));
  CHECK(sc.points().size() == 6);

  try {
    sc.point("nope");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_reference);
  }
}

TEST_CASE("scene validation") {
  // Unbalanced JSON text.
  try {
    Scene::parse("{");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
  // Unknown section.
  try {
    Scene::parse(R"({"squares": {}})");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
  // Names are globally unique.
  try {
    Scene::parse(R"({"points": {"A": {"x": "0", "y": "0"}},
                     "lines": {"A": {"coeffs": ["1", "0", "0"]}}})");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
  // A line reference must exist.
  try {
    Scene::parse(R"({"lines": {"l": {"through": ["A", "B"]}}})");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unknown_reference);
  }
  // Collinear points have no circle.
  try {
    Scene::parse(R"({"points": {"A": {"x": "0", "y": "0"}, "B": {"x": "1", "y": "0"},
                                "C": {"x": "2", "y": "0"}},
                     "conics": {"k": {"circle_through": ["A", "B", "C"]}}})");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::no_such_configuration);
  }
  // Missing file.
  try {
    Scene::load("/nonexistent/scene.json");
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::parse_error);
  }
}

TEST_CASE("scene drawings are well-formed SVG") {
  Scene sc = Scene::parse(kMinimalScene);
  RenderOptions opt;
  opt.pencil_members = sweep_params(5);
  opt.mark_intersections = true;
  std::string svg = render_svg(sc, opt);

  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
  CHECK(svg.find("data-method=\"marching-squares\"") != std::string::npos);
  CHECK(svg.find(">A</text>") != std::string::npos);  // point label

  // Degenerate viewports are rejected.
  RenderOptions bad;
  bad.xmin = 3;
  bad.xmax = 3;
  try {
    render_svg(sc, bad);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::empty_viewport);
  }
}

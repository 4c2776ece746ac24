#include "desargues/scene.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "desargues/json_io.hpp"
#include "desargues/linalg.hpp"

namespace desargues {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(Errc::parse_error, what); }

Rat json_rat(const Json& j, const std::string& where) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long long>());
  bad(where + ": expected an exact value as a string like \"3/4\" or an integer");
}

Scalar json_scalar(const Json& j, const std::string& where) { return Scalar(json_rat(j, where)); }

std::array<Scalar, 3> json_triple(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 3) bad(where + ": expected an array of three values");
  return {json_scalar(j[0], where), json_scalar(j[1], where), json_scalar(j[2], where)};
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) bad(where + ": missing \"" + key + "\"");
  return *it;
}

}  // namespace

const Point& Scene::point(const std::string& name) const {
  auto it = points_.find(name);
  if (it == points_.end()) fail(Errc::unknown_reference, "unknown point \"" + name + "\"");
  return it->second;
}

const Line& Scene::line(const std::string& name) const {
  auto it = lines_.find(name);
  if (it == lines_.end()) fail(Errc::unknown_reference, "unknown line \"" + name + "\"");
  return it->second;
}

const Conic& Scene::conic(const std::string& name) const {
  auto it = conics_.find(name);
  if (it == conics_.end()) fail(Errc::unknown_reference, "unknown conic \"" + name + "\"");
  return it->second;
}

const Pencil& Scene::pencil(const std::string& name) const {
  auto it = pencils_.find(name);
  if (it == pencils_.end()) fail(Errc::unknown_reference, "unknown pencil \"" + name + "\"");
  return it->second;
}

Scene Scene::parse(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    bad(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) bad("scene root must be an object");
  for (const auto& kv : doc.items()) {
    const std::string& section = kv.key();
    if (section != "points" && section != "lines" && section != "conics" &&
        section != "pencils") {
      bad("unknown scene section \"" + section + "\"");
    }
    if (!kv.value().is_object()) bad("section \"" + section + "\" must be an object");
  }

  Scene sc;
  std::set<std::string> names;
  auto claim = [&](const std::string& name) {
    if (!names.insert(name).second) bad("duplicate name \"" + name + "\"");
  };

  if (doc.contains("points")) {
    for (const auto& kv : doc["points"].items()) {
      const std::string where = "point \"" + kv.key() + "\"";
      claim(kv.key());
      const Json& spec = kv.value();
      if (spec.is_array()) {
        std::array<Scalar, 3> v = json_triple(spec, where);
        sc.points_.emplace(kv.key(), Point(v[0], v[1], v[2]));
      } else if (spec.is_object()) {
        Scalar x = json_scalar(field(spec, "x", where), where);
        Scalar y = json_scalar(field(spec, "y", where), where);
        sc.points_.emplace(kv.key(), Point::affine(x, y));
      } else {
        bad(where + ": expected {\"x\", \"y\"} or a homogeneous triple");
      }
    }
  }

  if (doc.contains("lines")) {
    for (const auto& kv : doc["lines"].items()) {
      const std::string where = "line \"" + kv.key() + "\"";
      claim(kv.key());
      const Json& spec = kv.value();
      if (!spec.is_object()) bad(where + ": expected an object");
      if (spec.contains("coeffs")) {
        std::array<Scalar, 3> v = json_triple(spec["coeffs"], where);
        sc.lines_.emplace(kv.key(), Line(v[0], v[1], v[2]));
      } else if (spec.contains("through")) {
        const Json& th = spec["through"];
        if (!th.is_array() || th.size() != 2 || !th[0].is_string() || !th[1].is_string()) {
          bad(where + ": \"through\" needs two point names");
        }
        sc.lines_.emplace(kv.key(),
                          join(sc.point(th[0].get<std::string>()),
                               sc.point(th[1].get<std::string>())));
      } else {
        bad(where + ": expected \"coeffs\" or \"through\"");
      }
    }
  }

  if (doc.contains("conics")) {
    for (const auto& kv : doc["conics"].items()) {
      const std::string where = "conic \"" + kv.key() + "\"";
      claim(kv.key());
      const Json& spec = kv.value();
      if (!spec.is_object()) bad(where + ": expected an object");
      if (spec.contains("coeffs")) {
        const Json& cj = spec["coeffs"];
        if (!cj.is_array() || cj.size() != 6) {
          bad(where + ": \"coeffs\" needs six values (x^2, xy, y^2, xz, yz, z^2)");
        }
        std::array<Scalar, 6> v{json_scalar(cj[0], where), json_scalar(cj[1], where),
                                json_scalar(cj[2], where), json_scalar(cj[3], where),
                                json_scalar(cj[4], where), json_scalar(cj[5], where)};
        sc.conics_.emplace(kv.key(), Conic::from_coeffs(v));
      } else if (spec.contains("circle_through")) {
        const Json& th = spec["circle_through"];
        if (!th.is_array() || th.size() != 3 || !th[0].is_string() || !th[1].is_string() ||
            !th[2].is_string()) {
          bad(where + ": \"circle_through\" needs three point names");
        }
        sc.conics_.emplace(kv.key(), circle_through(sc.point(th[0].get<std::string>()),
                                                    sc.point(th[1].get<std::string>()),
                                                    sc.point(th[2].get<std::string>())));
      } else {
        bad(where + ": expected \"coeffs\" or \"circle_through\"");
      }
    }
  }

  if (doc.contains("pencils")) {
    for (const auto& kv : doc["pencils"].items()) {
      const std::string where = "pencil \"" + kv.key() + "\"";
      claim(kv.key());
      const Json& spec = kv.value();
      if (!spec.is_object() || !spec.contains("base")) bad(where + ": expected {\"base\": [...]}");
      const Json& bj = spec["base"];
      if (!bj.is_array() || bj.size() != 4) bad(where + ": \"base\" needs four point names");
      std::array<Point, 4> base = {
          sc.point(bj[0].get<std::string>()), sc.point(bj[1].get<std::string>()),
          sc.point(bj[2].get<std::string>()), sc.point(bj[3].get<std::string>())};
      for (const Json& b : bj) {
        if (!b.is_string()) bad(where + ": \"base\" needs four point names");
      }
      sc.pencils_.emplace(kv.key(), Pencil(base[0], base[1], base[2], base[3]));
    }
  }
  return sc;
}

Scene Scene::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::parse_error, "cannot open scene file \"" + path + "\"");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

Conic circle_through(const Point& a, const Point& b, const Point& c) {
  for (const Point* p : {&a, &b, &c}) {
    if (p->is_at_infinity()) {
      fail(Errc::no_such_configuration, "a circle through an infinite point does not exist");
    }
  }
  if (a == b || a == c || b == c) fail(Errc::coincident_points, "circle needs distinct points");
  // x^2 + y^2 + D x + E y + F = 0 scaled by s: rows (x^2 + y^2, x, y, 1).
  Matrix m;
  for (const Point* p : {&a, &b, &c}) {
    std::array<Scalar, 2> xy = p->affine_xy();
    m.push_back({xy[0] * xy[0] + xy[1] * xy[1], xy[0], xy[1], Scalar(1)});
  }
  std::vector<std::vector<Scalar>> ns = null_space(m);
  if (ns.size() != 1) fail(Errc::internal, "circle system rank unexpected");
  const std::vector<Scalar>& v = ns[0];
  if (v[0].is_zero()) {
    fail(Errc::no_such_configuration, "three collinear points lie on no circle");
  }
  return Conic::from_coeffs({v[0], Scalar(0), v[0], v[1], v[2], v[3]});
}

}  // namespace desargues

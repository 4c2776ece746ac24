#include "desargues/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

#include "desargues/json_io.hpp"
#include "desargues/scene.hpp"
#include "desargues/svg.hpp"

namespace desargues {

namespace {

HomParam parse_param(const std::string& text) {
  size_t pos = text.find_first_of(",:");
  if (pos == std::string::npos) {
    fail(Errc::parse_error, "parameter \"" + text + "\" needs two values like \"2,1\"");
  }
  Rat a = parse_rat(text.substr(0, pos));
  Rat b = parse_rat(text.substr(pos + 1));
  return HomParam(Scalar(a), Scalar(b));
}

HomParam parse_value(const std::string& text) {
  if (text == "inf") return HomParam::infinity();
  return HomParam::from_affine(Scalar(parse_rat(text)));
}

void pretty_walk(const Json& j, const std::string& path, std::ostream& os) {
  if (j.is_object()) {
    for (const auto& kv : j.items()) {
      pretty_walk(kv.value(), path.empty() ? kv.key() : path + "." + kv.key(), os);
    }
  } else if (j.is_array()) {
    size_t i = 0;
    for (const auto& el : j) {
      pretty_walk(el, path + "[" + std::to_string(i) + "]", os);
      ++i;
    }
  } else if (j.is_string()) {
    os << path << ": " << j.get<std::string>() << "\n";
  } else {
    os << path << ": " << j.dump() << "\n";
  }
}

std::string pretty_text(const Json& j) {
  std::ostringstream os;
  pretty_walk(j, "", os);
  return os.str();
}

}  // namespace

RunResult run_cli(const std::vector<std::string>& args) {
  CLI::App app{"exact pencil-of-conics toolkit: involutions on lines, member checks,"
               " center loci and SVG renderings"};
  app.name("desargues");
  app.require_subcommand(1);

  std::string scene_path, out_path, format = "json";
  std::size_t samples = 12;
  std::uint64_t seed_value = 0;
  bool no_roots = false;

  auto add_common = [&](CLI::App* sub, bool needs_scene) {
    if (needs_scene) {
      sub->add_option("--scene", scene_path, "scene JSON file")->required();
    }
    sub->add_option("--out", out_path, "write the result to a file instead of stdout");
    sub->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "pretty"}));
    sub->add_option("--samples", samples, "number of member parameters to check");
    sub->add_option("--seed", seed_value, "randomize member parameters");
    sub->add_flag("--no-roots", no_roots, "skip materializing chord endpoints");
  };

  std::string pencil_name, line_name, point_name, through_name;
  std::string param_text, qa_text, qb_text, h_text;
  std::string m_text, p_text, q_text, members_text;

  CLI::App* c_inv = app.add_subcommand("involution", "involution induced on a line");
  add_common(c_inv, true);
  c_inv->add_option("--pencil", pencil_name)->required();
  c_inv->add_option("--line", line_name)->required();

  CLI::App* c_fix = app.add_subcommand("fixed-points", "fixed points of the induced involution");
  add_common(c_fix, true);
  c_fix->add_option("--pencil", pencil_name)->required();
  c_fix->add_option("--line", line_name)->required();

  CLI::App* c_har = app.add_subcommand("harmonic", "harmonic conjugate of m with respect to p, q");
  add_common(c_har, false);
  c_har->add_option("--m", m_text)->required();
  c_har->add_option("--p", p_text)->required();
  c_har->add_option("--q", q_text)->required();

  CLI::App* c_mem = app.add_subcommand("member", "pencil member by parameter or through a point");
  add_common(c_mem, true);
  c_mem->add_option("--pencil", pencil_name)->required();
  c_mem->add_option("--param", param_text, "member parameter \"lambda,mu\"");
  c_mem->add_option("--through", through_name, "named point the member passes through");

  CLI::App* c_elv = app.add_subcommand("eleven-point", "conic locus of member centers");
  add_common(c_elv, true);
  c_elv->add_option("--pencil", pencil_name)->required();

  CLI::App* c_ver = app.add_subcommand("verify", "verify a chord/involution scenario");
  c_ver->require_subcommand(1);
  CLI::App* v_p1 = c_ver->add_subcommand("prop1", "chords pair under the induced involution");
  CLI::App* v_p2 = c_ver->add_subcommand("prop2", "two chords determine the same involution");
  CLI::App* v_kl = c_ver->add_subcommand("klamkin", "all chords share one affine midpoint");
  CLI::App* v_ci = c_ver->add_subcommand("circle", "concyclic base: midpoint at the foot of the perpendicular");
  CLI::App* v_di = c_ver->add_subcommand("diameter", "line conjugate to a diameter of a member");
  CLI::App* v_ax = c_ver->add_subcommand("axis", "line perpendicular to a principal axis of a member");
  CLI::App* v_bp = c_ver->add_subcommand("butterfly-point", "point is the center of some member");
  for (CLI::App* sub : {v_p1, v_p2, v_kl, v_ci, v_di, v_ax}) {
    add_common(sub, true);
    sub->add_option("--pencil", pencil_name)->required();
    sub->add_option("--line", line_name)->required();
  }
  v_p2->add_option("--qa", qa_text, "first member parameter")->required();
  v_p2->add_option("--qb", qb_text, "second member parameter")->required();
  v_di->add_option("--member", h_text, "parameter of the member supplying the diameter")->required();
  v_ax->add_option("--member", h_text, "parameter of the member supplying the axis")->required();
  add_common(v_bp, true);
  v_bp->add_option("--pencil", pencil_name)->required();
  v_bp->add_option("--point", point_name)->required();

  CLI::App* c_ren = app.add_subcommand("render", "render the scene as SVG");
  RenderOptions ro;
  bool mark = false;
  add_common(c_ren, true);
  c_ren->add_option("--xmin", ro.xmin);
  c_ren->add_option("--xmax", ro.xmax);
  c_ren->add_option("--ymin", ro.ymin);
  c_ren->add_option("--ymax", ro.ymax);
  c_ren->add_option("--width", ro.width);
  c_ren->add_option("--height", ro.height);
  c_ren->add_option("--grid", ro.grid);
  c_ren->add_option("--members", members_text, "pencil parameters to draw, e.g. \"1,0;0,1;1,1\"");
  c_ren->add_flag("--mark-intersections", mark);

  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back("desargues");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const std::string& s : full) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    return RunResult{0, app.help()};
  } catch (const CLI::ParseError& e) {
    Json err;
    err["status"] = "error";
    err["error"] = Json{{"code", "Usage"}, {"message", e.what()}};
    return RunResult{1, dump_json(err)};
  }

  std::string command;
  CLI::App* active = app.get_subcommands().front();
  command = active->get_name();
  if (active == c_ver) {
    active = c_ver->get_subcommands().front();
    command += " " + active->get_name();
  }

  VerifyOptions vopt;
  vopt.samples = samples;
  vopt.materialize_roots = !no_roots;
  if (active->count("--seed") > 0) vopt.seed = seed_value;

  auto deliver = [&](const std::string& text, int exit_code) -> RunResult {
    if (!out_path.empty()) {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        Json err;
        err["command"] = command;
        err["status"] = "error";
        err["error"] = Json{{"code", "Io"}, {"message", "cannot write \"" + out_path + "\""}};
        return RunResult{1, dump_json(err)};
      }
      out << text;
      return RunResult{exit_code, ""};
    }
    return RunResult{exit_code, text};
  };

  try {
    if (active == c_ren) {
      Scene sc = Scene::load(scene_path);
      if (!members_text.empty()) {
        std::stringstream ss(members_text);
        std::string piece;
        while (std::getline(ss, piece, ';')) {
          if (!piece.empty()) ro.pencil_members.push_back(parse_param(piece));
        }
      }
      ro.mark_intersections = mark;
      return deliver(render_svg(sc, ro), 0);
    }

    Json report;
    bool pass = true;

    if (active == c_har) {
      HomParam m = parse_value(m_text);
      HomParam p = parse_value(p_text);
      HomParam q = parse_value(q_text);
      HomParam n = harmonic_conjugate(m, p, q);
      report["m"] = value_json(m);
      report["p"] = value_json(p);
      report["q"] = value_json(q);
      report["conjugate"] = value_json(n);
    } else {
      Scene sc = Scene::load(scene_path);
      const Pencil& pen = sc.pencil(pencil_name);

      if (active == c_inv || active == c_fix) {
        auto ic = pen.desargues_involution(sc.line(line_name));
        report["line"] = line_json(ic.second.line());
        report["frame"] =
            Json{{"r0", point_json(ic.second.r0())}, {"r1", point_json(ic.second.r1())}};
        report["involution"] = involution_json(ic.first);
        if (active == c_fix) report["fixed"] = rootpair_json(fixed_points(ic.first));
      } else if (active == c_mem) {
        if (param_text.empty() == through_name.empty()) {
          fail(Errc::parse_error, "member needs exactly one of --param or --through");
        }
        PencilParam t = param_text.empty()
                            ? pen.member_through(sc.point(through_name)).first
                            : parse_param(param_text);
        Conic mem = pen.member(t);
        report["param"] = hom_json(t);
        report["conic"] = conic_json(mem);
        report["class"] = conic_class_json(classify_affine(mem));
      } else if (active == c_elv) {
        EllipseOfCenters e = eleven_point_conic(pen);
        report = report_json(e);
        pass = e.all_zero;
      } else if (active == v_bp) {
        ButterflyPointResult r = butterfly_point(pen, sc.point(point_name));
        report = report_json(r);
        pass = r.is_butterfly;
      } else {
        const Line& l = sc.line(line_name);
        ButterflyReport rep = [&]() {
          if (active == v_p1) return verify_prop1(pen, l, vopt);
          if (active == v_p2) return verify_prop2(pen, l, parse_param(qa_text),
                                                  parse_param(qb_text), vopt);
          if (active == v_kl) return scenario_klamkin(pen, l, vopt);
          if (active == v_ci) return scenario_circle(pen, l, vopt);
          if (active == v_di) return scenario_diameter(pen, parse_param(h_text), l, vopt);
          return scenario_axis(pen, parse_param(h_text), l, vopt);
        }();
        report = report_json(rep);
        pass = rep.pass;
      }
    }

    Json doc;
    doc["command"] = command;
    doc["status"] = "ok";
    doc["report"] = report;
    std::string text = format == "json" ? dump_json(doc) : pretty_text(doc);
    return deliver(text, pass ? 0 : 2);
  } catch (const Error& e) {
    Json doc;
    doc["command"] = command;
    doc["status"] = "error";
    doc["error"] = Json{{"code", e.code_name()}, {"message", e.what()}};
    std::string text = format == "json" ? dump_json(doc) : pretty_text(doc);
    int exit_code = e.code() == Errc::mismatch_against_desargues ? 2 : 1;
    return deliver(text, exit_code);
  } catch (const std::exception& e) {
    Json doc;
    doc["command"] = command;
    doc["status"] = "error";
    doc["error"] = Json{{"code", "Internal"}, {"message", e.what()}};
    return RunResult{1, dump_json(doc)};
  }
}

}  // namespace desargues

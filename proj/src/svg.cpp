#include "desargues/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace desargues {

namespace {

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.3f", v);
  return buf;
}

struct Mapper {
  const RenderOptions& opt;
  double sx(double x) const { return (x - opt.xmin) / (opt.xmax - opt.xmin) * opt.width; }
  double sy(double y) const { return opt.height - (y - opt.ymin) / (opt.ymax - opt.ymin) * opt.height; }
};

// Clip the line u*x + v*y + w = 0 to the viewport rectangle; returns the
// endpoints of the visible segment, or false when it misses the viewport.
bool clip_line(double u, double v, double w, const RenderOptions& o, double out[4]) {
  std::vector<std::pair<double, double>> hits;
  auto push = [&](double x, double y) {
    for (const auto& h : hits) {
      if (std::abs(h.first - x) < 1e-9 && std::abs(h.second - y) < 1e-9) return;
    }
    hits.emplace_back(x, y);
  };
  if (std::abs(v) > 1e-12) {
    for (double x : {o.xmin, o.xmax}) {
      double y = -(u * x + w) / v;
      if (y >= o.ymin - 1e-9 && y <= o.ymax + 1e-9) push(x, y);
    }
  }
  if (std::abs(u) > 1e-12) {
    for (double y : {o.ymin, o.ymax}) {
      double x = -(v * y + w) / u;
      if (x >= o.xmin - 1e-9 && x <= o.xmax + 1e-9) push(x, y);
    }
  }
  if (hits.size() < 2) return false;
  out[0] = hits[0].first;
  out[1] = hits[0].second;
  out[2] = hits[1].first;
  out[3] = hits[1].second;
  return true;
}

// Marching squares over the affine quadratic c0 x^2 + c1 xy + c2 y^2 + c3 x
// + c4 y + c5; emits one SVG path of short segments.
std::string trace_conic(const std::array<double, 6>& c, const RenderOptions& o,
                        const Mapper& map, const std::string& stroke) {
  auto f = [&](double x, double y) {
    return c[0] * x * x + c[1] * x * y + c[2] * y * y + c[3] * x + c[4] * y + c[5];
  };
  int n = o.grid;
  double dx = (o.xmax - o.xmin) / n;
  double dy = (o.ymax - o.ymin) / n;
  std::vector<double> vals(static_cast<size_t>(n + 1) * (n + 1));
  for (int i = 0; i <= n; ++i) {
    for (int j = 0; j <= n; ++j) {
      vals[static_cast<size_t>(i) * (n + 1) + j] = f(o.xmin + j * dx, o.ymin + i * dy);
    }
  }
  std::ostringstream d;
  auto lerp = [](double a, double b, double fa, double fb) {
    double t = fa / (fa - fb);
    return a + t * (b - a);
  };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double x0 = o.xmin + j * dx, x1 = x0 + dx;
      double y0 = o.ymin + i * dy, y1 = y0 + dy;
      double f00 = vals[static_cast<size_t>(i) * (n + 1) + j];
      double f01 = vals[static_cast<size_t>(i) * (n + 1) + j + 1];
      double f10 = vals[static_cast<size_t>(i + 1) * (n + 1) + j];
      double f11 = vals[static_cast<size_t>(i + 1) * (n + 1) + j + 1];
      if (std::isnan(f00) || std::isnan(f01) || std::isnan(f10) || std::isnan(f11)) continue;
      std::vector<std::pair<double, double>> pts;
      if ((f00 < 0) != (f01 < 0)) pts.emplace_back(lerp(x0, x1, f00, f01), y0);
      if ((f10 < 0) != (f11 < 0)) pts.emplace_back(lerp(x0, x1, f10, f11), y1);
      if ((f00 < 0) != (f10 < 0)) pts.emplace_back(x0, lerp(y0, y1, f00, f10));
      if ((f01 < 0) != (f11 < 0)) pts.emplace_back(x1, lerp(y0, y1, f01, f11));
      if (pts.size() >= 2) {
        d << "M" << fmt(map.sx(pts[0].first)) << " " << fmt(map.sy(pts[0].second)) << "L"
          << fmt(map.sx(pts[1].first)) << " " << fmt(map.sy(pts[1].second));
        if (pts.size() == 4) {
          d << "M" << fmt(map.sx(pts[2].first)) << " " << fmt(map.sy(pts[2].second)) << "L"
            << fmt(map.sx(pts[3].first)) << " " << fmt(map.sy(pts[3].second));
        }
      }
    }
  }
  std::string path = d.str();
  if (path.empty()) return "";
  return "  <path data-method=\"marching-squares\" fill=\"none\" stroke=\"" + stroke +
         "\" stroke-width=\"1.2\" d=\"" + path + "\"/>\n";
}

std::array<double, 6> affine_coeffs(const Conic& c) {
  std::array<Scalar, 6> s = c.coeffs();
  return {s[0].to_double(), s[1].to_double(), s[2].to_double(),
          s[3].to_double(), s[4].to_double(), s[5].to_double()};
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string render_svg(const Scene& scene, const RenderOptions& opt) {
  if (!(opt.xmin < opt.xmax) || !(opt.ymin < opt.ymax) || opt.width <= 0 || opt.height <= 0 ||
      opt.grid < 2) {
    fail(Errc::empty_viewport, "viewport and canvas must have positive extent");
  }
  Mapper map{opt};
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << opt.width
      << "\" height=\"" << opt.height << "\" viewBox=\"0 0 " << opt.width << " " << opt.height
      << "\">\n"
      << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  for (const auto& kv : scene.conics()) {
    out << trace_conic(affine_coeffs(kv.second), opt, map, "#1f77b4");
  }

  for (const auto& kv : scene.pencils()) {
    std::vector<PencilParam> params =
        opt.pencil_members.empty() ? sweep_params(5) : opt.pencil_members;
    for (const PencilParam& t : params) {
      out << trace_conic(affine_coeffs(kv.second.member(t)), opt, map, "#9ecae1");
    }
  }

  for (const auto& kv : scene.lines()) {
    const std::array<Scalar, 3>& v = kv.second.coords();
    if (kv.second.is_line_at_infinity()) {
      out << "  <desc>line " << xml_escape(kv.first) << " is the line at infinity</desc>\n";
      continue;
    }
    double seg[4];
    if (clip_line(v[0].to_double(), v[1].to_double(), v[2].to_double(), opt, seg)) {
      out << "  <line stroke=\"#d62728\" stroke-width=\"1\" x1=\"" << fmt(map.sx(seg[0]))
          << "\" y1=\"" << fmt(map.sy(seg[1])) << "\" x2=\"" << fmt(map.sx(seg[2])) << "\" y2=\""
          << fmt(map.sy(seg[3])) << "\"/>\n";
    }
  }

  auto draw_point = [&](const std::string& name, const Point& p, const char* fill) {
    if (p.is_at_infinity()) {
      out << "  <desc>point " << xml_escape(name) << " lies at infinity</desc>\n";
      return;
    }
    std::array<Scalar, 2> xy = p.affine_xy();
    double x = xy[0].to_double(), y = xy[1].to_double();
    if (std::isnan(x) || std::isnan(y)) return;
    out << "  <circle fill=\"" << fill << "\" cx=\"" << fmt(map.sx(x)) << "\" cy=\""
        << fmt(map.sy(y)) << "\" r=\"3\"/>\n";
    if (!name.empty()) {
      out << "  <text font-size=\"10\" x=\"" << fmt(map.sx(x) + 5) << "\" y=\""
          << fmt(map.sy(y) - 5) << "\">" << xml_escape(name) << "</text>\n";
    }
  };

  for (const auto& kv : scene.points()) draw_point(kv.first, kv.second, "#000000");
  for (const auto& kv : scene.pencils()) {
    int i = 0;
    for (const Point& b : kv.second.base()) {
      draw_point(kv.first + "." + char('A' + i), b, "#2ca02c");
      ++i;
    }
  }

  if (opt.mark_intersections) {
    for (const auto& ckv : scene.conics()) {
      for (const auto& lkv : scene.lines()) {
        if (lkv.second.is_line_at_infinity()) continue;
        IntersectionResult ir = intersect_line(ckv.second, lkv.second);
        if (ir.kind == IntersectKind::component_contained) continue;
        if (ir.points.empty() || sign_of(ir.d) < 0) {
          out << "  <desc>" << xml_escape(ckv.first) << " and " << xml_escape(lkv.first)
              << " meet in a conjugate imaginary pair; omitted</desc>\n";
          continue;
        }
        for (const Point& p : ir.points) {
          draw_point("", p, "#ff7f0e");
        }
      }
    }
  }

  out << "</svg>\n";
  return out.str();
}

}  // namespace desargues

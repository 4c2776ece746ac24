#pragma once

#include <map>
#include <string>

#include "desargues/pencil.hpp"

namespace desargues {

// Named geometric inputs loaded from a JSON description. Names are unique
// across all sections. Exact rational values only: coordinates are strings
// like "3/4" (or plain JSON integers).
//
//   {
//     "points":  {"A": {"x": "1", "y": "1"}, "U": ["1", "2", "0"]},
//     "lines":   {"l": {"coeffs": ["0", "1", "0"]}, "m": {"through": ["A", "B"]}},
//     "conics":  {"c": {"coeffs": ["1","0","1","0","0","-25"]},
//                 "k": {"circle_through": ["A", "B", "C"]}},
//     "pencils": {"p": {"base": ["A", "B", "C", "D"]}}
//   }
class Scene {
 public:
  const Point& point(const std::string& name) const;    // unknown_reference
  const Line& line(const std::string& name) const;      // unknown_reference
  const Conic& conic(const std::string& name) const;    // unknown_reference
  const Pencil& pencil(const std::string& name) const;  // unknown_reference

  const std::map<std::string, Point>& points() const { return points_; }
  const std::map<std::string, Line>& lines() const { return lines_; }
  const std::map<std::string, Conic>& conics() const { return conics_; }
  const std::map<std::string, Pencil>& pencils() const { return pencils_; }

  static Scene parse(const std::string& text);      // parse_error
  static Scene load(const std::string& path);       // parse_error

 private:
  std::map<std::string, Point> points_;
  std::map<std::string, Line> lines_;
  std::map<std::string, Conic> conics_;
  std::map<std::string, Pencil> pencils_;
};

// The circle through three affine points, none collinear.
Conic circle_through(const Point& a, const Point& b, const Point& c);

}  // namespace desargues

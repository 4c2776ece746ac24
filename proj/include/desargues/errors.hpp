#pragma once

#include <stdexcept>
#include <string>

namespace desargues {

// Machine-readable failure codes. Every throwing operation in the library
// uses one of these; the CLI maps them verbatim into error reports.
enum class Errc {
  zero_form,
  unreduced_radical,
  mixed_radicals,
  division_by_zero,
  not_rational,
  zero_vector,
  coincident_points,
  coincident_lines,
  indeterminate_cross_ratio,
  degenerate_range,
  point_off_line,
  kernel_point,
  no_unique_pole,
  circle_has_no_unique_axes,
  no_center,
  no_unique_conic,
  rank_deficient,
  inconsistent,
  degenerate_relation,
  coincident_fixed_points,
  not_general_position,
  base_point,
  base_point_at_infinity,
  line_through_base_point,
  no_such_configuration,
  not_concyclic,
  equidistance_fails,
  no_proper_center,
  not_perpendicular,
  mismatch_against_desargues,
  degenerate_locus,
  line_at_infinity,
  parse_error,
  unknown_reference,
  empty_viewport,
  internal,
};

// Stable identifier, e.g. "LineThroughBasePoint".
const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) { throw Error(code, what); }

}  // namespace desargues

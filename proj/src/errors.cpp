#include "desargues/errors.hpp"

namespace desargues {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::zero_form: return "ZeroForm";
    case Errc::unreduced_radical: return "UnreducedRadical";
    case Errc::mixed_radicals: return "MixedRadicals";
    case Errc::division_by_zero: return "DivisionByZero";
    case Errc::not_rational: return "NotRational";
    case Errc::zero_vector: return "ZeroVector";
    case Errc::coincident_points: return "CoincidentPoints";
    case Errc::coincident_lines: return "CoincidentLines";
    case Errc::indeterminate_cross_ratio: return "IndeterminateCrossRatio";
    case Errc::degenerate_range: return "DegenerateRange";
    case Errc::point_off_line: return "PointOffLine";
    case Errc::kernel_point: return "KernelPoint";
    case Errc::no_unique_pole: return "NoUniquePole";
    case Errc::circle_has_no_unique_axes: return "CircleHasNoUniqueAxes";
    case Errc::no_center: return "NoCenter";
    case Errc::no_unique_conic: return "NoUniqueConic";
    case Errc::rank_deficient: return "RankDeficient";
    case Errc::inconsistent: return "Inconsistent";
    case Errc::degenerate_relation: return "DegenerateRelation";
    case Errc::coincident_fixed_points: return "CoincidentFixedPoints";
    case Errc::not_general_position: return "NotGeneralPosition";
    case Errc::base_point: return "BasePoint";
    case Errc::base_point_at_infinity: return "BasePointAtInfinity";
    case Errc::line_through_base_point: return "LineThroughBasePoint";
    case Errc::no_such_configuration: return "NoSuchConfiguration";
    case Errc::not_concyclic: return "NotConcyclic";
    case Errc::equidistance_fails: return "EquidistanceFails";
    case Errc::no_proper_center: return "NoProperCenter";
    case Errc::not_perpendicular: return "NotPerpendicular";
    case Errc::mismatch_against_desargues: return "MismatchAgainstDesargues";
    case Errc::degenerate_locus: return "DegenerateLocus";
    case Errc::line_at_infinity: return "LineAtInfinity";
    case Errc::parse_error: return "ParseError";
    case Errc::unknown_reference: return "UnknownReference";
    case Errc::empty_viewport: return "EmptyViewport";
    case Errc::internal: return "Internal";
  }
  return "Internal";
}

}  // namespace desargues

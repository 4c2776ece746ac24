#pragma once

#include <json.hpp>

#include <string>

#include "desargues/butterfly.hpp"

namespace desargues {

using Json = nlohmann::ordered_json;

// All exact values are serialized as strings (or {"a","b","d"} objects for
// quadratic-extension values) so that reports are lossless and byte-stable.
Json scalar_json(const Scalar& s);
Json point_json(const Point& p);
Json line_json(const Line& l);
Json hom_json(const HomParam& h);    // homogeneous pair ["s", "t"]
Json value_json(const HomParam& h);  // affine value, "inf" at the chart infinity
Json quadratic_json(const BinaryQuadratic& q);
Json rootpair_json(const RootPair& r);
Json involution_json(const InvolutionRel& inv);
Json conic_json(const Conic& c);
Json conic_class_json(const ConicClass& cls);
Json member_check_json(const MemberCheck& mc);
Json tangent_witness_json(const TangentWitness& tw);

Json report_json(const ButterflyReport& rep);
Json report_json(const EllipseOfCenters& e);
Json report_json(const ButterflyPointResult& r);

// dump with two-space indent and trailing newline; the single canonical
// serialization used everywhere.
std::string dump_json(const Json& j);

}  // namespace desargues

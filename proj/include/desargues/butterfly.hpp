#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "desargues/pencil.hpp"

namespace desargues {

enum class PairCase { real_pair, tangent, imaginary_pair };
const char* pair_case_name(PairCase kind);

// One sampled member of the pencil, its chord on the verification line, and
// the harmonicity check against the involution's fixed form.
struct MemberCheck {
  PencilParam param;
  BinaryQuadratic restriction;
  PairCase kind;
  Scalar apolarity;  // zero exactly when the chord is conjugate-paired
  bool pass;
  std::optional<RootPair> points;
  std::optional<HomParam> midpoint;  // affine midpoint of the chord, when defined
};

// A fixed point together with the member tangent to the line there.
struct TangentWitness {
  HomParam at;
  PencilParam param;
  bool tangent;
};

struct VerifyOptions {
  size_t samples = 12;
  bool materialize_roots = true;
  std::optional<std::uint64_t> seed;  // random member parameters instead of the sweep
};

// Result of the line-involution verifiers. Sections beyond the involution,
// fixed points and member table are filled per scenario.
struct ButterflyReport {
  std::string scenario;
  InvolutionRel involution;
  LineChart chart;
  RootPair fixed;
  bool pass = false;

  std::vector<MemberCheck> members;
  std::optional<TangentWitness> tangent_at_first;
  std::optional<TangentWitness> tangent_at_second;

  // Supplied pairs (two-pair scenario).
  std::optional<std::array<PencilParam, 2>> given_members;
  std::optional<std::array<BinaryQuadratic, 2>> given_pairs;

  // Shared-midpoint scenarios.
  std::optional<HomParam> shared_midpoint;
  std::optional<std::array<PencilParam, 2>> midpoint_members;
  bool fixed_match = true;  // fixed points equal the predicted pair

  // Concyclic scenario.
  std::optional<PencilParam> circle_param;
  std::optional<MemberCheck> circle_check;
  std::optional<Point> circle_center;
  std::optional<Scalar> chord_sq_dist;
  std::optional<PencilParam> equidistant_witness;
  bool foot_perpendicular = false;
  std::optional<PencilParam> asymptote_param;
  bool asymptote_ok = false;
  bool asymptote_degenerate = false;

  // Conjugate-diameter scenarios.
  std::optional<PencilParam> h_param;
  std::optional<Line> diameter;
  std::optional<Line> axis_used;
  std::optional<Point> m_point;
  std::optional<Point> n_point;
  bool fixed_point_mismatch = false;
};

// Every member chord forms a harmonic range with the involution's fixed
// points; tangency happens exactly at the fixed points.
ButterflyReport verify_prop1(const Pencil& p, const Line& l, const VerifyOptions& opt = {});

// Same, with the fixed form recovered from two supplied member chords first;
// mismatch_against_desargues when that form differs from the induced one.
ButterflyReport verify_prop2(const Pencil& p, const Line& l, const PencilParam& qa,
                             const PencilParam& qb, const VerifyOptions& opt = {});

// Two sampled chords share an affine midpoint M: the fixed points must be
// {M, infinity of l} and every chord is bisected at M.
ButterflyReport scenario_klamkin(const Pencil& p, const Line& l, const VerifyOptions& opt = {});

// Concyclic base points: the circle chord's midpoint M is the foot of the
// perpendicular from the circle center; a second member with an equidistant
// chord certifies the hypothesis; fixed points {M, infinity of l}; the
// members through M and through the infinite point are tangent and asymptotic
// respectively.
ButterflyReport scenario_circle(const Pencil& p, const Line& l, const VerifyOptions& opt = {});

// The line is conjugate to a diameter k of member H (it passes through the
// pole N of k at infinity); M = l meet k. Reports, rather than asserts,
// whether {M, N} are the fixed points.
ButterflyReport scenario_diameter(const Pencil& p, const PencilParam& h, const Line& l,
                                  const VerifyOptions& opt = {});

// Same with k a principal axis of H and l perpendicular to it.
ButterflyReport scenario_axis(const Pencil& p, const PencilParam& h, const Line& l,
                              const VerifyOptions& opt = {});

struct WitnessCheck {
  std::string name;
  Point point;
  Scalar value;  // evaluation of the locus, expected zero
  bool derived_by_conjugation;
};

// Locus of member centers: a conic through the three diagonal points, the
// six side midpoints and the two fixed points of the involution cut on the
// line at infinity.
struct EllipseOfCenters {
  Conic locus;
  ConicClass cls;
  std::vector<std::pair<PencilParam, Point>> samples;  // poles used for the fit
  std::vector<WitnessCheck> witnesses;
  bool all_zero = false;
};

EllipseOfCenters eleven_point_conic(const Pencil& p);  // degenerate_locus

struct ButterflyPointResult {
  Point m;
  bool is_butterfly = false;
  std::optional<PencilParam> member;  // a member centered at m
  std::optional<Point> n;             // common point of the polars of m, at infinity
  std::optional<Line> axis;           // join(m, n)
  bool axis_undefined = false;        // the polars of m all coincide
  std::optional<Line> coincident_polar;
};

// Whether m is the center of some member, i.e. lies on the locus of centers.
ButterflyPointResult butterfly_point(const Pencil& p, const Point& m);  // base_point

// Common point of the polars of x with respect to all members (they form a
// pencil of lines). no_such_configuration when the polars coincide (x is a
// diagonal point) or degenerate.
Point conjugate_point(const Pencil& p, const Point& x);

// Parameter of the member whose matrix has no xy term (principal axes
// parallel to the coordinate axes), when that member is unique.
std::optional<PencilParam> axis_aligned_member(const Pencil& p);

}  // namespace desargues

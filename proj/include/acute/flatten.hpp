#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "acute/complex.hpp"
#include "acute/geometry.hpp"
#include "acute/polytope600.hpp"

namespace acute {

enum class FlattenErrorKind { NotX543, Stalled, NoAcuteScale, InvalidConfig };

class FlattenError : public std::runtime_error {
 public:
  FlattenError(FlattenErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  FlattenErrorKind kind() const noexcept { return kind_; }

 private:
  FlattenErrorKind kind_;
};

// ---------------------------------------------------------------------------
// Step 1: the regular tetrahedron.

/// Stereographic image of X543 (canonical labels) from the centre of the removed cell.
std::vector<Vec3> step1_projection();

/// Step-1 realisation on the regular tetrahedron `scale` times the projected corners.
std::vector<Vec3> step1_embedding(double scale);

struct ScaleInterval {
  double lo = 0.0;
  double hi = 0.0;
  double best = 0.0;             ///< scale with the smallest maximal angle among samples
  double best_max_angle_deg = 0.0;
};

/// Samples [lo, hi] and bisects both ends of the acute run containing the best
/// sample. Acuteness is verify_acute in float mode with `margin_deg`.
/// Throws NoAcuteScale when no sample is acute.
ScaleInterval step1_scale_interval(double lo = 1.0, double hi = 3.0, int samples = 81,
                                   double margin_deg = kDefaultFloatMarginDeg);

// ---------------------------------------------------------------------------
// Roles.

enum class VertexRole { A, B, C, D, E, F, InteriorOuter12, InteriorOuter16, InteriorCore };

std::string to_string(VertexRole role);

struct RoleMap {
  std::vector<VertexRole> role;      ///< by vertex
  std::vector<int> carrier;          ///< C: base index i of edge A B_i; D: i of face A B_i B_(i+1); E: i of edge B_i B_(i+1); else -1
  VertexId apex = 0;
  std::array<VertexId, 3> base{};
  std::vector<VertexId> template_label;  ///< X543 canonical label of each vertex

  std::size_t count(VertexRole r) const;
};

/// Roles of a complex isomorphic to X543 with the given corners (A first, then
/// B_1, B_2, B_3). The two outer interior layers are the first two shells of
/// interior vertices around the boundary cell of the 600-cell. Throws NotX543.
RoleMap classify_roles(const SimplicialComplex& k, const std::array<VertexId, 4>& corners);

// ---------------------------------------------------------------------------
// Steps 2 and 3.

enum class InteriorTransform { Similarity, Affine };

struct FlattenConfig {
  int n_steps = 40;
  int correction_max_iters = 400;
  double correction_step = 0.05;  ///< largest vertex move, as a fraction of the mean edge length
  double acute_margin_deg = 0.05;  ///< correction runs until every angle is below 90 - margin
  double penalty_margin_deg = 0.5; ///< angles above 90 - this are penalised
  double step1_scale = 0.0;        ///< 0 selects the best sampled Step-1 scale
  InteriorTransform interior = InteriorTransform::Similarity;
  std::uint64_t seed = 1;

  void validate() const;
};

/// Geometry of the deformation in the unit cube frame: B_1 = (1,0,0),
/// B_2 = (0,0,1), B_3 = (0,1,0); A moves from (1,1,1) at t = 0 to (2/3,2/3,2/3)
/// at t = 1 along the axis through the base centroid.
struct FlattenFrame {
  static Vec3 base(int i);
  static Vec3 apex(double t);
  /// Incircle touch point on A B_i of triangle A B_i B_j.
  static Vec3 touch_point(double t, int i);
  /// Reflection in the base plane; maps the t = 1 tetrahedron onto the
  /// corner tetrahedron with A at the origin.
  static Vec3 to_corner_frame(const Vec3& p);
};

struct FlattenState {
  double t = 0.0;
  std::vector<Vec3> points;
  RoleMap roles;
  double worst_cosine = 0.0;  ///< negated smallest dihedral cosine
};

struct TraceRow {
  double t = 0.0;
  double worst_cosine = 0.0;
  int iterations = 0;
};

struct CorrectionResult {
  int iterations = 0;
  bool converged = false;
  std::vector<double> accepted_worst;  ///< worst cosine after each accepted iteration
};

/// Positions of A, B, C, E and the barycentric transport of D for parameter t,
/// applied to `state` (interior and F untouched).
void prescribe_positions(FlattenState& state, double t);

/// Projected descent on the worst dihedral cosine. Each iteration tries the
/// steepest descent direction of the maximum over near-worst terms, then the
/// gradient of the penalty sum of (c_thr - cos)^2 over cosines below c_thr,
/// then a seeded random direction, halving the step up to 20 times. A step is
/// accepted only when the worst cosine does not increase (and either it or
/// the penalty decreases) and no tetrahedron flips. The core layer moves as
/// one block (translation and scaling about its centroid).
CorrectionResult correct_angles(const SimplicialComplex& k, FlattenState& state, const FlattenConfig& config);

/// Initial Step-2 state at t = 0, in the cube frame.
FlattenState initial_state(const FlattenConfig& config);

struct FlattenResult {
  bool success = false;
  FlattenState state;  ///< final, or best reached when stalled
  std::vector<TraceRow> trace;
  std::vector<CorrectionResult> corrections;  ///< one per trace row
  /// Result mapped to the corner frame with A at the origin (only on success).
  std::vector<Vec3> corner_frame_points;
};

/// Deforms the Step-1 realisation to the corner tetrahedron. Never throws on
/// stall; `success` is false and the trace ends at the stall parameter.
FlattenResult run_flatten(const FlattenConfig& config);

/// Replaces the twelve face vertices of a regular-tetrahedron realisation by
/// the images of the base-face vertices `base_face_points` (template roles
/// 6, 7, 8 on B_1 B_2 B_3) and scales the 94 interior vertices about the
/// centroid by the sampled factor in [lo, hi] with the largest smallest
/// dihedral cosine. `t0` must be in the unit cube frame. Throws NoAcuteScale
/// when no sample is acute.
struct Step3Result {
  std::vector<Vec3> points;
  double scale = 1.0;
};
Step3Result step3_adjust(const std::vector<Vec3>& t0, const std::array<Vec3, 3>& base_face_points, double lo = 0.7,
                         double hi = 1.3, int samples = 121);

/// Similarity of the Step-1 output onto the unit-cube regular tetrahedron
/// with X543 corner 3 at A = (1,1,1) and corners 0, 1, 2 at B_1, B_2, B_3.
std::vector<Vec3> to_cube_frame(const std::vector<Vec3>& step1);

}  // namespace acute

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "acute/complex.hpp"
#include "acute/vec.hpp"

namespace acute {

enum class ScalarKind { Integer, Rational, Float };

std::string to_string(ScalarKind kind);

/// Vertex positions in R^3. `points` is always populated; exact kinds also
/// carry integer numerators over a common positive denominator.
struct Embedding {
  ScalarKind kind = ScalarKind::Float;
  std::vector<Vec3> points;
  std::vector<IVec3> exact;
  std::int64_t denominator = 1;

  bool is_exact() const { return kind != ScalarKind::Float; }
  std::size_t size() const { return points.size(); }

  static Embedding from_integers(std::vector<IVec3> pts);
  static Embedding from_floats(std::vector<Vec3> pts);
};

enum class GeometryErrorKind { DegenerateTetrahedron, ProjectionPole, RayMiss, InvalidArgument };

class GeometryError : public std::runtime_error {
 public:
  GeometryError(GeometryErrorKind kind, const std::string& what, std::optional<std::size_t> tet = {})
      : std::runtime_error(what), kind_(kind), tet_(tet) {}
  GeometryErrorKind kind() const noexcept { return kind_; }
  /// Offending tetrahedron index, when there is one.
  std::optional<std::size_t> tetrahedron() const noexcept { return tet_; }

 private:
  GeometryErrorKind kind_;
  std::optional<std::size_t> tet_;
};

/// Local vertex pairs of the six tetrahedron edges, in the order used by every
/// per-edge array in this module.
inline constexpr std::array<std::array<int, 2>, 6> kTetEdges{
    {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

/// Cosine of the interior dihedral angle along each edge.
/// Throws DegenerateTetrahedron for (numerically) flat input.
std::array<double, 6> dihedral_cosines(const std::array<Vec3, 4>& p);

using Rational = boost::multiprecision::cpp_rational;

struct ExactDihedral {
  int sign = 0;           ///< sign of the cosine
  Rational cos_squared;   ///< exact square of the cosine
};

/// Exact dihedral data for integer vertices. Throws DegenerateTetrahedron.
std::array<ExactDihedral, 6> dihedral_cosines_exact(const std::array<IVec3, 4>& p);

/// Signs of the six dihedral cosines for integer vertices (no cos^2).
std::array<int, 6> dihedral_signs_exact(const std::array<IVec3, 4>& p);

/// Sign of det(b-a, c-a, d-a).
int orientation_exact(const IVec3& a, const IVec3& b, const IVec3& c, const IVec3& d);

struct DihedralEntry {
  std::uint32_t tet = 0;
  std::uint8_t edge = 0;  ///< index into kTetEdges
  double cos = 0.0;
  int exact_sign = 0;     ///< 0 when evaluated in float mode
  bool acute = false;
};

struct AngleReport {
  bool exact = false;
  double margin_deg = 0.0;
  std::vector<DihedralEntry> entries;  ///< six per tetrahedron, tetrahedra in complex order
  double min_angle_deg = 0.0;
  double max_angle_deg = 0.0;
  std::vector<std::size_t> failures;   ///< indices into entries

  bool acute() const { return failures.empty(); }
  std::size_t tetrahedra() const { return entries.size() / 6; }
};

enum class AngleMode { Auto, Exact, Float };

inline constexpr double kDefaultFloatMarginDeg = 1e-6;

/// Dihedral angles of every tetrahedron of a pure 3-complex.
/// Exact mode requires an exact embedding and margin 0; a dihedral is then acute
/// iff its cosine is positive. Float mode calls an angle acute iff it is below
/// 90 - margin_deg. Throws DegenerateTetrahedron with the tetrahedron index.
AngleReport verify_acute(const SimplicialComplex& k, const Embedding& emb, double margin_deg = 0.0,
                         AngleMode mode = AngleMode::Auto);

/// Negated smallest dihedral cosine over all tetrahedra; negative iff every
/// dihedral angle is acute.
double worst_cosine(const SimplicialComplex& k, std::span<const Vec3> points);

struct GeometricCheck {
  bool ok = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  ///< tetrahedron indices
  std::string reason;
  std::size_t pairs_tested = 0;
};

/// Checks that every pair of tetrahedra meets exactly in the convex hull of
/// their shared vertices. Exact for integer/rational embeddings; float
/// embeddings are checked with a relative tolerance.
GeometricCheck verify_geometric_complex(const SimplicialComplex& k, const Embedding& emb);

/// Stereographic projection of the unit 3-sphere in R^4 from the pole `center`
/// onto the equatorial hyperplane orthogonal to it, expressed in a fixed
/// orthonormal basis of that hyperplane. The antipode of the pole maps to the
/// origin and the equator is fixed.
class StereographicProjection {
 public:
  explicit StereographicProjection(const Vec4& center);
  /// Throws ProjectionPole when p is the pole.
  Vec3 operator()(const Vec4& p) const;
  const Vec4& pole() const { return pole_; }

 private:
  Vec4 pole_;
  std::array<Vec4, 3> basis_;
};

Vec3 stereographic_project(const Vec4& p, const Vec4& center);

/// Moves each listed vertex along its ray from the origin onto the boundary of
/// the tetrahedron `scale * target`. `target` must contain the origin in its
/// interior. Throws RayMiss.
std::vector<Vec3> radial_to_tetra_boundary(std::span<const Vec3> points,
                                           std::span<const VertexId> boundary_vertices,
                                           const std::array<Vec3, 4>& target, double scale);

/// Point where the ray from the origin through `direction` leaves the tetrahedron.
Vec3 ray_exit_point(const Vec3& direction, const std::array<Vec3, 4>& tet);

/// Signed volume times six.
double orientation(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d);

}  // namespace acute

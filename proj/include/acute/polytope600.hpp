#pragma once

#include <array>
#include <string>
#include <vector>

#include "acute/complex.hpp"
#include "acute/geometry.hpp"
#include "acute/vec.hpp"

namespace acute {

/// Boundary complex of the 600-cell with its vertices on the unit 3-sphere.
struct Cell600 {
  SimplicialComplex complex;
  std::vector<Vec4> points;
};

/// The 120 unit icosians; edges join vertices at minimal distance (decided
/// exactly in Q(sqrt 5)); triangles and tetrahedra are the 3- and 4-cliques.
Cell600 generate_600_cell();

/// The 600-cell with the open star of one cell's vertex set removed.
///
/// Vertices are relabelled canonically: corners 0..3, then the six edge
/// vertices in kTetEdges order (4..9), then three interior vertices for each
/// face opposite corner 0, 1, 2, 3 (10..21), then the 94 interior vertices.
struct X543 {
  SimplicialComplex complex;
  std::vector<VertexId> original;  ///< 600-cell id of each vertex
  Simplex removed;                 ///< the fixed cell, 600-cell ids

  static constexpr int kCorners = 4;
  static constexpr int kBoundary = 22;
  static constexpr int kVertices = 116;

  /// Corner i sits opposite removed[i].
  static constexpr VertexId corner(int i) { return i; }
  /// Edge vertex between corners i and j.
  static VertexId edge_vertex(int i, int j);
  /// The three interior vertices of the face opposite corner i.
  static std::array<VertexId, 3> face_vertices(int i);
  /// All nine vertices of the face opposite corner i, corners first.
  static std::vector<VertexId> face_all_vertices(int i);
};

/// Removes the open star of `fixed_tet`'s vertices. Throws ComplexError
/// (SimplexNotFound) when fixed_tet is not a cell; throws std::logic_error when
/// the result fails its structural checks.
X543 extract_x543(const Cell600& cell, const Simplex& fixed_tet);
/// Uses the lexicographically first cell.
X543 extract_x543(const Cell600& cell);

/// Memoised default extraction.
const X543& x543_template();
const Cell600& cell600_instance();

/// Subdivided triangle that each face of X543's boundary carries.
/// Corners 0, 1, 2; edge vertices 3 (01), 4 (02), 5 (12); interior 6, 7, 8.
struct FaceTemplate {
  SimplicialComplex complex;
};
const FaceTemplate& face_template();

/// For the face of X543 opposite corner `opposite`, with its corners listed in
/// `corner_order` (X543 corner indices), the X543 vertex playing each
/// template role 0..8.
std::array<VertexId, 9> face_template_embedding(int opposite, const std::array<int, 3>& corner_order);

struct VertexOrigin {
  Simplex parent;  ///< parent simplex whose relative interior holds the vertex
  int label = 0;   ///< role label within that parent's subdivision
};

struct SubdivisionMap {
  SimplicialComplex parent;
  SimplicialComplex child;
  std::vector<VertexOrigin> vertex_origin;  ///< indexed by child vertex

  /// Smallest parent simplex containing the child simplex.
  Simplex carrier(const Simplex& child_simplex) const;
  /// Child vertices whose carrier lies in the given parent simplex.
  std::vector<VertexId> restricted_vertices(const Simplex& parent_simplex) const;
};

enum class SubdivisionError { DimensionTooHigh };

/// Edges split in two, triangles as the face template, tetrahedra as X543,
/// with a canonical corner order (ascending parent ids) so shared faces agree.
/// Parent vertex ids are kept. Throws std::invalid_argument for dim > 3.
SubdivisionMap special_subdivision(const SimplicialComplex& k);

/// A complex together with its realisation.
struct Mesh {
  SimplicialComplex complex;
  Embedding embedding;
};

/// Cube [-1,1]^3 cut into the regular tetrahedron on the even corners and
/// four corner tetrahedra. Integer coordinates.
Mesh build_W();
/// Octahedron with vertices +-e_i coned from the origin. Integer coordinates.
Mesh build_Y();

enum class PlatonicSolid { Icosahedron, Dodecahedron };
/// Cone decompositions from the centre (the dodecahedron uses its
/// barycentric subdivision into 120 congruent tetrahedra).
Mesh build_platonic_cones(PlatonicSolid solid);

}  // namespace acute

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "acute/complex.hpp"
#include "acute/geometry.hpp"
#include "acute/polytope600.hpp"

namespace acute {

enum class ReferenceKind { T0Regular, T1Standard };

std::string to_string(ReferenceKind which);

/// One of the two published 116-vertex meshes on the cube [0, 60000]^3.
/// Vertices 0..3 are the corners, 4..9 the edge vertices, 10..21 the face
/// vertices; both meshes share one edge list.
struct ReferenceMesh {
  ReferenceKind which = ReferenceKind::T0Regular;
  std::vector<IVec3> points;
  std::vector<std::pair<VertexId, VertexId>> edges;
};

const ReferenceMesh& load_reference(ReferenceKind which);

enum class AssemblyErrorKind { ReconstructionMismatch, BoundaryMismatch };

class AssemblyError : public std::runtime_error {
 public:
  AssemblyError(AssemblyErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  AssemblyErrorKind kind() const noexcept { return kind_; }

 private:
  AssemblyErrorKind kind_;
};

/// Clique complex of the edge list with the integer embedding.
/// Throws ReconstructionMismatch unless it has 116 vertices and 543 tetrahedra.
Mesh reconstruct(const ReferenceMesh& mesh);

/// Exact acuteness report of a reconstructed reference mesh.
AngleReport verify_reference(ReferenceKind which);

/// A cube-frame isometry p -> M p + offset with M a signed permutation matrix.
struct Isometry {
  std::array<std::array<int, 3>, 3> m{};
  IVec3 offset{};

  IVec3 operator()(const IVec3& p) const;
  int determinant() const;
  static Isometry identity();
};

struct Assembly {
  Mesh mesh;
  /// For each placed copy, the assembled id of each of its 116 vertices.
  std::vector<std::vector<VertexId>> copies;
  /// The isometry used for each copy.
  std::vector<Isometry> placements;
};

/// The regular-tetrahedron mesh plus four placed copies of the standard one,
/// merged on identical integer coordinates. Copy 0 is T0. Throws BoundaryMismatch.
Assembly assemble_cube();

/// Eight copies of the standard mesh, one per octant, reflected by sign
/// changes. Throws BoundaryMismatch.
Assembly assemble_octahedron();

/// Cube symmetries (as isometries of [0, 60000]^3) that preserve the assembled
/// mesh: they map vertex coordinates onto vertex coordinates and tetrahedra
/// onto tetrahedra. Candidates are all 48 symmetries of the cube.
std::vector<Isometry> mesh_symmetries(const Mesh& mesh);

}  // namespace acute

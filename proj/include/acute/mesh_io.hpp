#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "acute/complex.hpp"
#include "acute/geometry.hpp"

namespace acute {

enum class MeshIoErrorKind { Malformed, MissingEmbedding, Io };

class MeshIoError : public std::runtime_error {
 public:
  MeshIoError(MeshIoErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  MeshIoErrorKind kind() const noexcept { return kind_; }

 private:
  MeshIoErrorKind kind_;
};

/// Interchange unit of the command line tool.
///
/// JSON layout (keys sorted):
///   { "dim", "n_vertices", "maximal_simplices": [[ids]...],
///     "embedding": { "scalar": "int" | "rational" | "float", "points": [...] },
///     "metadata": { "name", "provenance" } }
/// Rational coordinates are strings "p/q"; they are brought to a common
/// denominator on load.
struct MeshDocument {
  SimplicialComplex complex;
  std::optional<Embedding> embedding;
  std::string name;
  std::string provenance;
};

/// {"summary": {min_deg, max_deg, n_failures}} plus, when `per_tetrahedron`,
/// "tetrahedra": [{"vertices", "dihedrals": [{"edge": [i, j], "cos", "acute"}]}]
/// with global vertex ids.
nlohmann::json angle_report_json(const SimplicialComplex& k, const AngleReport& rep, bool per_tetrahedron);

nlohmann::json complex_to_json(const SimplicialComplex& k);
/// Throws MeshIoError(Malformed), including for complexes build_complex rejects.
SimplicialComplex complex_from_json(const nlohmann::json& j);

nlohmann::json to_json(const MeshDocument& doc);
MeshDocument document_from_json(const nlohmann::json& j);

MeshDocument read_document(const std::filesystem::path& path);
/// Pretty-printed with two-space indentation and a trailing newline.
void write_document(const std::filesystem::path& path, const MeshDocument& doc);

/// OFF surface: for a 3-complex its boundary triangles oriented outwards, for
/// a 2-complex its triangles. Throws MissingEmbedding.
void write_off(std::ostream& out, const MeshDocument& doc);
/// TetGen-style element list ("<n> 4 0" then "<i> a b c d", zero based).
void write_ele(std::ostream& out, const MeshDocument& doc);
/// Legacy ASCII VTK unstructured grid (cell type 10 for tetrahedra, 5 for
/// triangles of a 2-complex). Throws MissingEmbedding.
void write_vtk(std::ostream& out, const MeshDocument& doc);

}  // namespace acute

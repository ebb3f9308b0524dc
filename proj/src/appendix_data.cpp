#include "acute/appendix_data.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace acute {

namespace detail {
extern const std::array<std::array<std::int64_t, 3>, 116> kT0Points;
extern const std::array<std::array<std::int64_t, 3>, 116> kT1Points;
extern const std::array<std::array<VertexId, 2>, 678> kEdges;
}  // namespace detail

std::string to_string(ReferenceKind which) {
  return which == ReferenceKind::T0Regular ? "t0" : "t1";
}

namespace {

ReferenceMesh make_reference(ReferenceKind which) {
  ReferenceMesh r;
  r.which = which;
  const auto& table = which == ReferenceKind::T0Regular ? detail::kT0Points : detail::kT1Points;
  for (const auto& p : table) r.points.push_back({{p[0], p[1], p[2]}});
  for (const auto& e : detail::kEdges) r.edges.emplace_back(e[0], e[1]);
  return r;
}

}  // namespace

const ReferenceMesh& load_reference(ReferenceKind which) {
  static const ReferenceMesh t0 = make_reference(ReferenceKind::T0Regular);
  static const ReferenceMesh t1 = make_reference(ReferenceKind::T1Standard);
  return which == ReferenceKind::T0Regular ? t0 : t1;
}

Mesh reconstruct(const ReferenceMesh& ref) {
  Mesh m;
  try {
    m.complex = complex_from_edges(ref.points.size(), ref.edges);
  } catch (const ComplexError& e) {
    throw AssemblyError(AssemblyErrorKind::ReconstructionMismatch, e.what());
  }
  if (m.complex.n_vertices() != 116 || m.complex.count(3) != 543)
    throw AssemblyError(AssemblyErrorKind::ReconstructionMismatch,
                        "reference mesh has " + std::to_string(m.complex.count(3)) + " tetrahedra");
  m.embedding = Embedding::from_integers(ref.points);
  return m;
}

AngleReport verify_reference(ReferenceKind which) {
  const Mesh m = reconstruct(load_reference(which));
  return verify_acute(m.complex, m.embedding, 0.0, AngleMode::Exact);
}

IVec3 Isometry::operator()(const IVec3& p) const {
  IVec3 out = offset;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) out[r] += m[r][c] * p[c];
  return out;
}

int Isometry::determinant() const {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Isometry Isometry::identity() {
  Isometry g;
  for (int i = 0; i < 3; ++i) g.m[i][i] = 1;
  return g;
}

namespace {

constexpr std::int64_t kSide = 60000;

// Merges copies of reference meshes by exact coordinates.
class Assembler {
 public:
  void add(const Mesh& piece, const Isometry& g) {
    std::vector<VertexId> ids;
    for (const auto& p : piece.embedding.exact) {
      const IVec3 q = g(p);
      auto [it, inserted] = index_.try_emplace(q, static_cast<VertexId>(points_.size()));
      if (inserted) points_.push_back(q);
      ids.push_back(it->second);
    }
    for (auto s : piece.complex.simplices(3)) {
      for (auto& v : s) v = ids[v];
      tets_.push_back(std::move(s));
    }
    copies_.push_back(std::move(ids));
    placements_.push_back(g);
  }

  // Every pair of copies whose corner tetrahedra share a face must put the
  // same nine vertices on it.
  void check_faces() const {
    for (std::size_t a = 0; a < copies_.size(); ++a)
      for (std::size_t b = a + 1; b < copies_.size(); ++b) {
        std::vector<VertexId> shared;
        for (int i = 0; i < 4; ++i)
          for (int j = 0; j < 4; ++j)
            if (copies_[a][i] == copies_[b][j]) shared.push_back(copies_[a][i]);
        if (shared.size() < 3) continue;
        const auto fa = on_face(a, shared), fb = on_face(b, shared);
        if (fa.size() != 9 || fa != fb)
          throw AssemblyError(AssemblyErrorKind::BoundaryMismatch,
                              "copies " + std::to_string(a) + " and " + std::to_string(b) +
                                  " disagree on their shared face");
      }
  }

  Assembly finish() {
    check_faces();
    Assembly out;
    out.mesh.complex = build_complex(std::move(tets_));
    out.mesh.embedding = Embedding::from_integers(std::move(points_));
    out.copies = std::move(copies_);
    out.placements = std::move(placements_);
    return out;
  }

 private:
  // Coordinates of copy c's vertices lying in the plane of the three corners.
  std::set<IVec3> on_face(std::size_t c, const std::vector<VertexId>& corners) const {
    std::set<IVec3> out;
    for (auto v : copies_[c])
      if (orientation_exact(points_[corners[0]], points_[corners[1]], points_[corners[2]], points_[v]) == 0)
        out.insert(points_[v]);
    return out;
  }

  std::map<IVec3, VertexId> index_;
  std::vector<IVec3> points_;
  std::vector<Simplex> tets_;
  std::vector<std::vector<VertexId>> copies_;
  std::vector<Isometry> placements_;
};

// Half-turn about the axis through the cube centre parallel to `axis`.
Isometry half_turn(int axis) {
  Isometry g;
  for (int i = 0; i < 3; ++i) {
    g.m[i][i] = i == axis ? 1 : -1;
    g.offset[i] = i == axis ? 0 : kSide;
  }
  return g;
}

}  // namespace

Assembly assemble_cube() {
  Assembler a;
  a.add(reconstruct(load_reference(ReferenceKind::T0Regular)), Isometry::identity());
  const Mesh t1 = reconstruct(load_reference(ReferenceKind::T1Standard));
  a.add(t1, Isometry::identity());
  for (int axis = 0; axis < 3; ++axis) a.add(t1, half_turn(axis));
  return a.finish();
}

Assembly assemble_octahedron() {
  Assembler a;
  const Mesh t1 = reconstruct(load_reference(ReferenceKind::T1Standard));
  for (int mask = 0; mask < 8; ++mask) {
    Isometry g;
    for (int i = 0; i < 3; ++i) g.m[i][i] = (mask >> i) & 1 ? -1 : 1;
    a.add(t1, g);
  }
  return a.finish();
}

std::vector<Isometry> mesh_symmetries(const Mesh& mesh) {
  const auto& pts = mesh.embedding.exact;
  if (pts.empty()) return {};
  IVec3 lo = pts[0], hi = pts[0];
  for (const auto& p : pts)
    for (int i = 0; i < 3; ++i) {
      lo[i] = std::min(lo[i], p[i]);
      hi[i] = std::max(hi[i], p[i]);
    }
  // Twice the centre keeps everything integral.
  const IVec3 c2 = lo + hi;
  std::map<IVec3, VertexId> index;
  for (std::size_t v = 0; v < pts.size(); ++v) index.emplace(pts[v], static_cast<VertexId>(v));

  std::vector<Isometry> out;
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (int mask = 0; mask < 8; ++mask) {
      Isometry g;
      bool integral = true;
      for (int r = 0; r < 3; ++r) {
        g.m[r][perm[r]] = (mask >> r) & 1 ? -1 : 1;
      }
      // p -> M (p - c) + c
      for (int r = 0; r < 3; ++r) {
        std::int64_t mc2 = 0;
        for (int k = 0; k < 3; ++k) mc2 += g.m[r][k] * c2[k];
        const std::int64_t off2 = c2[r] - mc2;
        if (off2 % 2 != 0) integral = false;
        g.offset[r] = off2 / 2;
      }
      if (!integral) continue;
      std::vector<VertexId> image(pts.size());
      bool ok = true;
      for (std::size_t v = 0; v < pts.size() && ok; ++v) {
        auto it = index.find(g(pts[v]));
        if (it == index.end()) ok = false;
        else image[v] = it->second;
      }
      if (!ok) continue;
      for (const auto& s : mesh.complex.simplices(3)) {
        Simplex t{image[s[0]], image[s[1]], image[s[2]], image[s[3]]};
        std::sort(t.begin(), t.end());
        if (!mesh.complex.contains(t)) {
          ok = false;
          break;
        }
      }
      if (ok) out.push_back(g);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace acute

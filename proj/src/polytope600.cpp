#include "acute/polytope600.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "acute/isomorphism.hpp"

namespace acute {

namespace {

// Element (p + q sqrt5) / 4 of Q(sqrt 5).
struct Quad {
  int p = 0;
  int q = 0;
};

double to_double(Quad x) { return (x.p + x.q * std::sqrt(5.0)) / 4.0; }

bool even_permutation(const std::array<int, 4>& perm) {
  int inversions = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (perm[i] > perm[j]) ++inversions;
  return inversions % 2 == 0;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::logic_error(what);
}

}  // namespace

Cell600 generate_600_cell() {
  std::vector<std::array<Quad, 4>> verts;
  for (int axis = 0; axis < 4; ++axis)
    for (int sign : {1, -1}) {
      std::array<Quad, 4> v{};
      v[axis] = {4 * sign, 0};
      verts.push_back(v);
    }
  for (int mask = 0; mask < 16; ++mask) {
    std::array<Quad, 4> v{};
    for (int i = 0; i < 4; ++i) v[i] = {(mask >> i) & 1 ? -2 : 2, 0};
    verts.push_back(v);
  }
  // Halves of phi, 1, 1/phi, 0 in units of 1/4.
  const std::array<Quad, 4> base{{{1, 1}, {2, 0}, {-1, 1}, {0, 0}}};
  std::array<int, 4> perm{0, 1, 2, 3};
  do {
    if (!even_permutation(perm)) continue;
    for (int mask = 0; mask < 8; ++mask) {
      std::array<Quad, 4> v{};
      for (int i = 0; i < 3; ++i) {
        Quad x = base[i];
        if ((mask >> i) & 1) x = {-x.p, -x.q};
        v[perm[i]] = x;
      }
      v[perm[3]] = base[3];
      verts.push_back(v);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  require(verts.size() == 120, "600-cell vertex count");

  // Neighbours have inner product phi/2 = (4 + 4 sqrt5)/16.
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (std::size_t a = 0; a < verts.size(); ++a)
    for (std::size_t b = a + 1; b < verts.size(); ++b) {
      int rational = 0, irrational = 0;
      for (int i = 0; i < 4; ++i) {
        rational += verts[a][i].p * verts[b][i].p + 5 * verts[a][i].q * verts[b][i].q;
        irrational += verts[a][i].p * verts[b][i].q + verts[a][i].q * verts[b][i].p;
      }
      if (rational == 4 && irrational == 4)
        edges.emplace_back(static_cast<VertexId>(a), static_cast<VertexId>(b));
    }

  Cell600 cell;
  cell.complex = complex_from_edges(verts.size(), edges);
  for (const auto& v : verts) cell.points.push_back({{to_double(v[0]), to_double(v[1]), to_double(v[2]), to_double(v[3])}});
  require(f_vector(cell.complex) == FVector{120, 720, 1200, 600}, "600-cell f-vector");
  return cell;
}

VertexId X543::edge_vertex(int i, int j) {
  if (i > j) std::swap(i, j);
  for (int e = 0; e < 6; ++e)
    if (kTetEdges[e][0] == i && kTetEdges[e][1] == j) return 4 + e;
  throw std::invalid_argument("edge_vertex needs two distinct corners");
}

std::array<VertexId, 3> X543::face_vertices(int i) {
  return {10 + 3 * i, 11 + 3 * i, 12 + 3 * i};
}

std::vector<VertexId> X543::face_all_vertices(int i) {
  std::vector<VertexId> out;
  for (int c = 0; c < 4; ++c)
    if (c != i) out.push_back(c);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (a != i && b != i) out.push_back(edge_vertex(a, b));
  for (auto v : face_vertices(i)) out.push_back(v);
  return out;
}

X543 extract_x543(const Cell600& cell, const Simplex& fixed_tet_in) {
  Simplex fixed = fixed_tet_in;
  normalize_simplex(fixed);
  if (fixed.size() != 4 || !cell.complex.contains(fixed))
    throw ComplexError(ComplexErrorKind::SimplexNotFound, to_string(fixed) + " is not a cell of the 600-cell");
  const auto& k = cell.complex;
  const auto n = static_cast<VertexId>(k.n_vertices());

  // Classify kept vertices by which removed vertices they touch.
  std::vector<VertexId> corners(4, -1), faces[4], interior;
  std::map<std::pair<int, int>, VertexId> edge_of;  // pair of corners -> vertex
  for (VertexId v = 0; v < n; ++v) {
    if (std::binary_search(fixed.begin(), fixed.end(), v)) continue;
    std::vector<int> touched;
    for (int r = 0; r < 4; ++r)
      if (k.adjacent(v, fixed[r])) touched.push_back(r);
    switch (touched.size()) {
      case 0: interior.push_back(v); break;
      case 1: faces[touched[0]].push_back(v); break;
      case 2: {
        // On the parent edge whose two end corners are opposite the untouched removed vertices.
        std::vector<int> ends;
        for (int r = 0; r < 4; ++r)
          if (std::find(touched.begin(), touched.end(), r) == touched.end()) ends.push_back(r);
        require(!edge_of.count({ends[0], ends[1]}), "X543 edge vertex classification");
        edge_of[{ends[0], ends[1]}] = v;
        break;
      }
      case 3: {
        int missing = 6 - touched[0] - touched[1] - touched[2];
        require(corners[missing] < 0, "X543 corner classification");
        corners[missing] = v;
        break;
      }
      default: require(false, "vertex adjacent to a whole removed cell");
    }
  }
  require(edge_of.size() == 6 && interior.size() == 94, "X543 boundary classification");
  for (int i = 0; i < 4; ++i) require(corners[i] >= 0 && faces[i].size() == 3, "X543 face classification");

  std::vector<VertexId> order;  // canonical label -> 600-cell id
  for (int i = 0; i < 4; ++i) order.push_back(corners[i]);
  for (auto [i, j] : kTetEdges) order.push_back(edge_of.at({i, j}));
  for (int i = 0; i < 4; ++i) order.insert(order.end(), faces[i].begin(), faces[i].end());
  order.insert(order.end(), interior.begin(), interior.end());

  std::vector<VertexId> label_of(n, -1);
  for (std::size_t i = 0; i < order.size(); ++i) label_of[order[i]] = static_cast<VertexId>(i);
  std::vector<Simplex> tets;
  for (const auto& s : k.simplices(3)) {
    Simplex t;
    for (auto v : s) {
      if (label_of[v] < 0) break;
      t.push_back(label_of[v]);
    }
    if (t.size() == 4) tets.push_back(std::move(t));
  }

  X543 x;
  x.complex = build_complex(std::move(tets));
  x.original = order;
  x.removed = fixed;

  require(f_vector(x.complex) == FVector{116, 678, 1106, 543}, "X543 f-vector");
  const Boundary b = boundary_complex(x.complex);
  require(b.f_vector() == FVector{22, 60, 40}, "X543 boundary f-vector");
  for (VertexId v = 0; v < X543::kBoundary; ++v) require(b.contains({v}), "X543 boundary labelling");
  require(!is_flag(x.complex) && !find_empty_square(x.complex), "X543 is not flag-no-square");
  return x;
}

X543 extract_x543(const Cell600& cell) { return extract_x543(cell, cell.complex.simplices(3).front()); }

const Cell600& cell600_instance() {
  static const Cell600 cell = generate_600_cell();
  return cell;
}

const X543& x543_template() {
  static const X543 x = extract_x543(cell600_instance());
  return x;
}

namespace {

// The boundary triangles of X543 on the face opposite corner i, relabelled to
// the positions of `face_all_vertices(i)`.
SimplicialComplex face_patch(int i) {
  const auto& x = x543_template();
  const auto verts = X543::face_all_vertices(i);
  const Boundary b = boundary_complex(x.complex);
  std::vector<Simplex> tris;
  for (const auto& t : b.simplices[2]) {
    Simplex r;
    for (auto v : t) {
      auto it = std::find(verts.begin(), verts.end(), v);
      if (it == verts.end()) break;
      r.push_back(static_cast<VertexId>(it - verts.begin()));
    }
    if (r.size() == 3) tris.push_back(std::move(r));
  }
  return build_complex(std::move(tris));
}

}  // namespace

const FaceTemplate& face_template() {
  static const FaceTemplate t = [] {
    FaceTemplate ft;
    // face_all_vertices(3) = corners 0,1,2, edges 01,02,12, interior: the template order.
    ft.complex = face_patch(3);
    require(f_vector(ft.complex) == FVector{9, 18, 10}, "face template f-vector");
    return ft;
  }();
  return t;
}

std::array<VertexId, 9> face_template_embedding(int opposite, const std::array<int, 3>& corner_order) {
  static std::mutex mu;
  static std::map<std::pair<int, std::array<int, 3>>, std::array<VertexId, 9>> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(opposite, corner_order);
  if (auto it = cache.find(key); it != cache.end()) return it->second;

  const auto verts = X543::face_all_vertices(opposite);
  const SimplicialComplex patch = face_patch(opposite);
  std::vector<int> template_colors(9, 0), patch_colors(9, 0);
  for (int c = 0; c < 3; ++c) {
    template_colors[c] = c + 1;
    const auto pos = std::find(verts.begin(), verts.end(), X543::corner(corner_order[c])) - verts.begin();
    require(pos < 3, "corner_order must list corners of the face");
    patch_colors[pos] = c + 1;
  }
  auto iso = find_isomorphism(face_template().complex, patch, template_colors, patch_colors);
  require(iso.has_value(), "face template does not match the X543 face");
  std::array<VertexId, 9> out{};
  for (int r = 0; r < 9; ++r) out[r] = verts[(*iso)[r]];
  cache.emplace(key, out);
  return out;
}

Simplex SubdivisionMap::carrier(const Simplex& child_simplex) const {
  Simplex out;
  for (auto v : child_simplex) out.insert(out.end(), vertex_origin[v].parent.begin(), vertex_origin[v].parent.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<VertexId> SubdivisionMap::restricted_vertices(const Simplex& parent_simplex) const {
  Simplex p = parent_simplex;
  normalize_simplex(p);
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < vertex_origin.size(); ++v)
    if (std::includes(p.begin(), p.end(), vertex_origin[v].parent.begin(), vertex_origin[v].parent.end()))
      out.push_back(static_cast<VertexId>(v));
  return out;
}

SubdivisionMap special_subdivision(const SimplicialComplex& k) {
  if (k.dim() > 3) throw std::invalid_argument("special subdivision is defined up to dimension 3");
  SubdivisionMap m;
  m.parent = k;

  // Child vertex numbering: parent vertices, edge midpoints, 3 per triangle, 94 per tetrahedron.
  const auto nv = static_cast<VertexId>(k.count(0));
  const auto ne = static_cast<VertexId>(k.count(1));
  const auto nt = static_cast<VertexId>(k.count(2));
  const VertexId edge_base = nv, tri_base = nv + ne, tet_base = tri_base + 3 * nt;
  const VertexId total = tet_base + 94 * static_cast<VertexId>(k.count(3));
  m.vertex_origin.resize(static_cast<std::size_t>(total));
  for (VertexId v = 0; v < nv; ++v) m.vertex_origin[v] = {{v}, 0};
  for (VertexId e = 0; e < ne; ++e) m.vertex_origin[edge_base + e] = {k.simplices(1)[e], 0};
  for (VertexId t = 0; t < nt; ++t)
    for (int r = 0; r < 3; ++r) m.vertex_origin[tri_base + 3 * t + r] = {k.simplices(2)[t], r};
  for (std::size_t c = 0; c < k.count(3); ++c)
    for (int r = 0; r < 94; ++r) m.vertex_origin[tet_base + 94 * static_cast<VertexId>(c) + r] = {k.simplices(3)[c], r};

  auto midpoint = [&](VertexId a, VertexId b) {
    return edge_base + static_cast<VertexId>(*k.index_of({std::min(a, b), std::max(a, b)}));
  };
  auto tri_interior = [&](const Simplex& tri, int r) {
    return tri_base + 3 * static_cast<VertexId>(*k.index_of(tri)) + r;
  };

  std::vector<Simplex> out;
  const auto& ft = face_template().complex;
  for (const auto& s : k.maximal_simplices()) {
    switch (s.size()) {
      case 1: out.push_back(s); break;
      case 2: {
        const VertexId mid = midpoint(s[0], s[1]);
        out.push_back({s[0], mid});
        out.push_back({s[1], mid});
        break;
      }
      case 3: {
        const std::array<VertexId, 9> global{s[0], s[1], s[2], midpoint(s[0], s[1]), midpoint(s[0], s[2]),
                                            midpoint(s[1], s[2]), tri_interior(s, 0), tri_interior(s, 1),
                                            tri_interior(s, 2)};
        for (auto t : ft.simplices(2)) {
          for (auto& v : t) v = global[v];
          out.push_back(std::move(t));
        }
        break;
      }
      case 4: {
        const auto& x = x543_template();
        std::vector<VertexId> global(X543::kVertices, -1);
        for (int i = 0; i < 4; ++i) global[X543::corner(i)] = s[i];
        for (auto [i, j] : kTetEdges) global[X543::edge_vertex(i, j)] = midpoint(s[i], s[j]);
        for (int i = 0; i < 4; ++i) {
          std::array<int, 3> corners{};
          Simplex tri;
          for (int c = 0, w = 0; c < 4; ++c)
            if (c != i) {
              corners[w++] = c;
              tri.push_back(s[c]);
            }
          const auto emb = face_template_embedding(i, corners);
          for (int r = 0; r < 3; ++r) global[emb[6 + r]] = tri_interior(tri, r);
        }
        const VertexId base = tet_base + 94 * static_cast<VertexId>(*k.index_of(s));
        for (int r = 0; r < 94; ++r) global[X543::kBoundary + r] = base + r;
        for (auto t : x.complex.simplices(3)) {
          for (auto& v : t) v = global[v];
          out.push_back(std::move(t));
        }
        break;
      }
      default: throw std::invalid_argument("special subdivision is defined up to dimension 3");
    }
  }
  m.child = build_complex(std::move(out));
  return m;
}

Mesh build_W() {
  std::vector<IVec3> pts;
  for (int x : {-1, 1})
    for (int y : {-1, 1})
      for (int z : {-1, 1}) pts.push_back({{x, y, z}});
  // Even corners 1, 2, 4, 7 span the regular tetrahedron; each odd corner
  // cones off its three even neighbours.
  Mesh m;
  m.complex = build_complex({{1, 2, 4, 7}, {0, 1, 2, 4}, {1, 2, 3, 7}, {1, 4, 5, 7}, {2, 4, 6, 7}});
  m.embedding = Embedding::from_integers(std::move(pts));
  return m;
}

Mesh build_Y() {
  std::vector<IVec3> pts{{{0, 0, 0}}};
  for (int axis = 0; axis < 3; ++axis)
    for (int sign : {1, -1}) {
      IVec3 p{};
      p[axis] = sign;
      pts.push_back(p);
    }
  std::vector<Simplex> tets;
  for (int a : {1, 2})
    for (int b : {3, 4})
      for (int c : {5, 6}) tets.push_back({0, a, b, c});
  Mesh m;
  m.complex = build_complex(std::move(tets));
  m.embedding = Embedding::from_integers(std::move(pts));
  return m;
}

namespace {

std::vector<Vec3> icosahedron_vertices() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> v;
  for (double s1 : {-1.0, 1.0})
    for (double s2 : {-phi, phi}) {
      v.push_back({{0.0, s1, s2}});
      v.push_back({{s1, s2, 0.0}});
      v.push_back({{s2, 0.0, s1}});
    }
  return v;
}

// Pairs of points at the minimal pairwise distance.
std::vector<std::pair<int, int>> shortest_pairs(const std::vector<Vec3>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b) best = std::min(best, norm(pts[a] - pts[b]));
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < pts.size(); ++a)
    for (std::size_t b = a + 1; b < pts.size(); ++b)
      if (norm(pts[a] - pts[b]) < best * (1 + 1e-9)) out.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return out;
}

}  // namespace

Mesh build_platonic_cones(PlatonicSolid solid) {
  Mesh m;
  if (solid == PlatonicSolid::Icosahedron) {
    auto pts = icosahedron_vertices();
    const auto edges = shortest_pairs(pts);
    std::vector<std::pair<VertexId, VertexId>> e;
    for (auto [a, b] : edges) e.emplace_back(a, b);
    const auto surface = complex_from_edges(pts.size(), e);
    require(surface.count(2) == 20, "icosahedron faces");
    const auto center = static_cast<VertexId>(pts.size());
    std::vector<Simplex> tets;
    for (auto t : surface.simplices(2)) {
      t.push_back(center);
      tets.push_back(std::move(t));
    }
    pts.push_back({{0.0, 0.0, 0.0}});
    m.complex = build_complex(std::move(tets));
    m.embedding = Embedding::from_floats(std::move(pts));
    return m;
  }

  // Dodecahedron: vertices, face centres (along the icosahedron directions),
  // edge midpoints and the centre.
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> verts;
  for (double x : {-1.0, 1.0})
    for (double y : {-1.0, 1.0})
      for (double z : {-1.0, 1.0}) verts.push_back({{x, y, z}});
  for (double s1 : {-1.0 / phi, 1.0 / phi})
    for (double s2 : {-phi, phi}) {
      verts.push_back({{0.0, s1, s2}});
      verts.push_back({{s1, s2, 0.0}});
      verts.push_back({{s2, 0.0, s1}});
    }
  const auto edges = shortest_pairs(verts);
  require(verts.size() == 20 && edges.size() == 30, "dodecahedron skeleton");

  std::vector<Vec3> pts = verts;
  const auto center = static_cast<VertexId>(pts.size());
  pts.push_back({{0.0, 0.0, 0.0}});
  std::vector<VertexId> edge_mid;
  for (auto [a, b] : edges) {
    edge_mid.push_back(static_cast<VertexId>(pts.size()));
    pts.push_back(0.5 * (verts[a] + verts[b]));
  }
  // Face normals: the icosahedron dual to this dodecahedron.
  std::vector<Vec3> normals;
  for (double s1 : {-1.0, 1.0})
    for (double s2 : {-phi, phi}) {
      normals.push_back({{0.0, s2, s1}});
      normals.push_back({{s2, s1, 0.0}});
      normals.push_back({{s1, 0.0, s2}});
    }
  std::vector<Simplex> tets;
  for (const auto& dir : normals) {
    double best = -1e300;
    for (const auto& v : verts) best = std::max(best, dot(v, dir));
    std::vector<int> face;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (dot(verts[i], dir) > best - 1e-9) face.push_back(static_cast<int>(i));
    require(face.size() == 5, "dodecahedron face");
    Vec3 c{};
    for (int i : face) c += verts[i];
    const auto fc = static_cast<VertexId>(pts.size());
    pts.push_back(0.2 * c);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      auto [a, b] = edges[e];
      if (std::count(face.begin(), face.end(), a) && std::count(face.begin(), face.end(), b)) {
        tets.push_back({center, fc, edge_mid[e], a});
        tets.push_back({center, fc, edge_mid[e], b});
      }
    }
  }
  require(tets.size() == 120, "dodecahedron barycentric cells");
  m.complex = build_complex(std::move(tets));
  m.embedding = Embedding::from_floats(std::move(pts));
  return m;
}

}  // namespace acute

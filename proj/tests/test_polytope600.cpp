#include <doctest.h>

#include <set>

#include "acute/complex.hpp"
#include "acute/geometry.hpp"
#include "acute/isomorphism.hpp"
#include "acute/polytope600.hpp"
#include "oracles.hpp"

using namespace acute;

namespace {

const double kPhi = (1 + std::sqrt(5.0)) / 2;

SimplicialComplex restrict_to(const SubdivisionMap& m, const Simplex& parent) {
  return induced_subcomplex(m.child, m.restricted_vertices(parent)).complex;
}

std::vector<double> sorted_cosines(const Mesh& m, const Simplex& tet) {
  std::array<Vec3, 4> p;
  for (int i = 0; i < 4; ++i) p[i] = m.embedding.points[tet[i]];
  auto c = dihedral_cosines(p);
  std::sort(c.begin(), c.end());
  return {c.begin(), c.end()};
}

}  // namespace

TEST_CASE("600-cell counts and geometry") {
  const Cell600& c = cell600_instance();
  CHECK(f_vector(c.complex) == FVector{120, 720, 1200, 600});
  CHECK(oracle::f_vector(c.complex.maximal_simplices()) == std::vector<std::int64_t>{120, 720, 1200, 600});
  for (const auto& p : c.points) CHECK(norm(p) == doctest::Approx(1.0).epsilon(1e-14));
  for (const auto& e : c.complex.simplices(1))
    CHECK(norm(c.points[e[0]] - c.points[e[1]]) == doctest::Approx(1 / kPhi).epsilon(1e-12));
  std::vector<int> degree(120, 0);
  for (const auto& e : c.complex.simplices(1)) ++degree[e[0]], ++degree[e[1]];
  for (int d : degree) CHECK(d == 12);
  // Every edge link is a pentagon.
  for (std::size_t e = 0; e < c.complex.count(1); e += 37)
    CHECK(oracle::link_cycle_length(c.complex.simplices(3), c.complex.simplices(1)[e]) == 5);
}

TEST_CASE("X543 extraction") {
  const X543& x = x543_template();
  CHECK(f_vector(x.complex) == FVector{116, 678, 1106, 543});
  CHECK(boundary_complex(x.complex).f_vector() == FVector{22, 60, 40});
  CHECK(euler_characteristic(boundary_complex(x.complex).f_vector()) == 2);
  CHECK(euler_characteristic(x.complex) == 1);
  CHECK_FALSE(is_flag(x.complex).has_value());
  CHECK_FALSE(find_empty_square(x.complex).has_value());
  CHECK_FALSE(is_rich(x.complex).has_value());

  const Cell600& c = cell600_instance();
  CHECK(x.removed == c.complex.simplices(3).front());
  for (auto v : x.original) CHECK(std::find(x.removed.begin(), x.removed.end(), v) == x.removed.end());
  // The kept vertices are exactly those outside the removed cell.
  CHECK(std::set<VertexId>(x.original.begin(), x.original.end()).size() == 116);

  // Canonical labels: boundary vertices are 0..21 and sit where the labels say.
  const auto bv = boundary_complex(x.complex).vertices();
  CHECK(bv == std::vector<VertexId>{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16, 17, 18, 19, 20, 21});
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const VertexId m = X543::edge_vertex(i, j);
      CHECK(x.complex.contains({VertexId(i), m}));
      CHECK(x.complex.contains({VertexId(j), m}));
      CHECK_FALSE(x.complex.contains({VertexId(i), VertexId(j)}));
    }
  for (int i = 0; i < 4; ++i)
    for (auto f : X543::face_vertices(i)) CHECK_FALSE(x.complex.contains({std::min<VertexId>(i, f), std::max<VertexId>(i, f)}));
}

TEST_CASE("X543 does not depend on the removed cell") {
  const Cell600& c = cell600_instance();
  const X543 other = extract_x543(c, c.complex.simplices(3)[417]);
  CHECK(f_vector(other.complex) == FVector{116, 678, 1106, 543});
  const auto iso = are_isomorphic(other.complex, x543_template().complex);
  REQUIRE(iso.has_value());
  CHECK(is_isomorphism(other.complex, x543_template().complex, *iso));
  CHECK_THROWS_AS(extract_x543(c, Simplex{0, 1, 2, 119}), ComplexError);
}

TEST_CASE("face template") {
  const auto& t = face_template().complex;
  CHECK(f_vector(t) == FVector{9, 18, 10});
  CHECK(euler_characteristic(t) == 1);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) CHECK_FALSE(t.contains({VertexId(i), VertexId(j)}));
  const std::array<std::array<VertexId, 3>, 3> sides{{{0, 1, 3}, {0, 2, 4}, {1, 2, 5}}};
  for (const auto& [a, b, mid] : sides) {
    CHECK(t.contains({a, mid}));
    CHECK(t.contains({b, mid}));
  }
  // Rotating the corners is a symmetry.
  const std::vector<int> c1{1, 2, 3, 0, 0, 0, 0, 0, 0};
  const std::vector<int> c2{2, 3, 1, 0, 0, 0, 0, 0, 0};
  CHECK(find_isomorphism(t, t, c1, c2).has_value());

  // Every boundary face of X543 carries the template.
  const auto& x = x543_template().complex;
  for (int i = 0; i < 4; ++i) {
    std::array<int, 3> corners{};
    for (int j = 0, n = 0; j < 4; ++j)
      if (j != i) corners[n++] = j;
    const auto map = face_template_embedding(i, corners);
    for (const auto& tri : t.simplices(2)) {
      Simplex image{map[tri[0]], map[tri[1]], map[tri[2]]};
      std::sort(image.begin(), image.end());
      CHECK(x.contains(image));
    }
  }
}

TEST_CASE("special subdivision of a single tetrahedron is X543") {
  const auto m = special_subdivision(simplex_complex(3));
  CHECK(f_vector(m.child) == FVector{116, 678, 1106, 543});
  CHECK(are_isomorphic(m.child, x543_template().complex).has_value());
  CHECK_THROWS_AS(special_subdivision(simplex_complex(4)), std::invalid_argument);
}

TEST_CASE("special subdivision of lower-dimensional complexes") {
  const auto tri = special_subdivision(simplex_complex(2));
  CHECK(are_isomorphic(tri.child, face_template().complex).has_value());
  const auto sphere = special_subdivision(simplex_boundary_complex(3));
  CHECK(f_vector(sphere.child) == FVector{22, 60, 40});
  CHECK(are_isomorphic(sphere.child, boundary_complex(x543_template().complex).as_complex().complex).has_value());
}

TEST_CASE("W* and Y*") {
  const Mesh w = build_W();
  CHECK(f_vector(w.complex) == FVector{8, 18, 16, 5});
  CHECK(verify_geometric_complex(w.complex, w.embedding).ok);
  const auto ws = special_subdivision(w.complex);
  CHECK(ws.child.count(3) == 2715);
  CHECK_FALSE(is_flag(ws.child).has_value());
  CHECK_FALSE(find_empty_square(ws.child).has_value());
  CHECK_FALSE(is_rich(ws.child).has_value());

  const Mesh y = build_Y();
  CHECK(f_vector(y.complex) == FVector{7, 18, 20, 8});
  CHECK(verify_geometric_complex(y.complex, y.embedding).ok);
  const auto ys = special_subdivision(y.complex);
  CHECK(ys.child.count(3) == 4344);
  CHECK_FALSE(is_flag(ys.child).has_value());
  CHECK_FALSE(find_empty_square(ys.child).has_value());
  CHECK_FALSE(is_rich(ys.child).has_value());
}

TEST_CASE("W corner tetrahedra are congruent and Y cells are cube corners") {
  const Mesh w = build_W();
  std::vector<std::vector<double>> shapes;
  for (const auto& t : w.complex.simplices(3)) shapes.push_back(sorted_cosines(w, t));
  std::sort(shapes.begin(), shapes.end());
  // One regular tetrahedron and four congruent corners.
  for (int i = 0; i < 6; ++i) CHECK(shapes.back()[i] == doctest::Approx(1.0 / 3));
  for (int s = 1; s < 4; ++s)
    for (int i = 0; i < 6; ++i) CHECK(shapes[s][i] == doctest::Approx(shapes[0][i]));

  const Mesh y = build_Y();
  for (const auto& t : y.complex.simplices(3)) {
    const auto c = sorted_cosines(y, t);
    for (int i = 0; i < 3; ++i) CHECK(c[i] == doctest::Approx(0.0).scale(1.0));
    for (int i = 3; i < 6; ++i) CHECK(c[i] == doctest::Approx(1 / std::sqrt(3.0)));
  }
}

TEST_CASE("platonic cones") {
  const Mesh ico = build_platonic_cones(PlatonicSolid::Icosahedron);
  CHECK(ico.complex.count(3) == 20);
  CHECK(verify_geometric_complex(ico.complex, ico.embedding).ok);
  CHECK(verify_acute(ico.complex, ico.embedding, kDefaultFloatMarginDeg).acute());

  const Mesh dod = build_platonic_cones(PlatonicSolid::Dodecahedron);
  CHECK(dod.complex.count(3) == 120);
  CHECK(verify_geometric_complex(dod.complex, dod.embedding).ok);
  const auto ref = sorted_cosines(dod, dod.complex.simplices(3).front());
  for (const auto& t : dod.complex.simplices(3)) {
    const auto c = sorted_cosines(dod, t);
    for (int i = 0; i < 6; ++i) CHECK(c[i] == doctest::Approx(ref[i]).epsilon(1e-9));
  }
}

TEST_CASE("property: subdivision restricts to templates with consistent carriers") {
  const Mesh w = build_W();
  const auto m = special_subdivision(w.complex);
  for (const auto& e : w.complex.simplices(1)) {
    const auto r = restrict_to(m, e);
    CHECK(r.count(1) == 2);
    CHECK(r.count(0) == 3);
  }
  for (const auto& t : w.complex.simplices(2))
    CHECK(are_isomorphic(restrict_to(m, t), face_template().complex).has_value());
  for (const auto& t : w.complex.simplices(3))
    CHECK(are_isomorphic(restrict_to(m, t), x543_template().complex).has_value());

  for (int d = 0; d <= 3; ++d)
    for (const auto& s : m.child.simplices(d)) {
      const Simplex c = m.carrier(s);
      CHECK(w.complex.contains(c));
      CHECK(c.size() >= s.size());
      for (auto v : s) CHECK(std::includes(c.begin(), c.end(), m.vertex_origin[v].parent.begin(),
                                           m.vertex_origin[v].parent.end()));
    }
  // Top-dimensional child simplices are carried by top-dimensional parents.
  for (const auto& s : m.child.simplices(3)) CHECK(m.carrier(s).size() == 4);
}

#include <doctest.h>

#include <random>

#include "acute/complex.hpp"
#include "acute/isomorphism.hpp"
#include "acute/polytope600.hpp"
#include "oracles.hpp"

using namespace acute;

namespace {

std::vector<Simplex> all_simplices(const SimplicialComplex& k) {
  std::vector<Simplex> out;
  for (int d = 0; d <= k.dim(); ++d)
    for (const auto& s : k.simplices(d)) out.push_back(s);
  std::sort(out.begin(), out.end());
  return out;
}

SimplicialComplex octahedron_boundary() {
  return build_complex({{0, 2, 4}, {0, 2, 5}, {0, 3, 4}, {0, 3, 5}, {1, 2, 4}, {1, 2, 5}, {1, 3, 4}, {1, 3, 5}});
}

// Two discs glued at their centre vertex 0.
SimplicialComplex pinched_discs() {
  std::vector<Simplex> t;
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < 5; ++i) t.push_back({0, 1 + 5 * c + i, 1 + 5 * c + (i + 1) % 5});
  for (auto& s : t) std::sort(s.begin(), s.end());
  return build_complex(t);
}

}  // namespace

TEST_CASE("build_complex closes a single tetrahedron under faces") {
  const auto k = build_complex({{0, 1, 2, 3}});
  CHECK(f_vector(k) == FVector{4, 6, 4, 1});
}

TEST_CASE("build_complex on the five tetrahedra of the cube dissection") {
  const auto w = build_W().complex;
  const auto expected = oracle::f_vector(w.maximal_simplices());
  CHECK(f_vector(w) == FVector(expected.begin(), expected.end()));
  CHECK(f_vector(w) == FVector{8, 18, 16, 5});
}

TEST_CASE("build_complex does not fill an empty triangle") {
  const auto k = build_complex({{0, 1}, {1, 2}, {0, 2}});
  CHECK(f_vector(k) == FVector{3, 3});
}

TEST_CASE("build_complex rejects duplicates and repeated vertices") {
  auto kind = [](std::vector<Simplex> s) {
    try {
      build_complex(std::move(s));
    } catch (const ComplexError& e) {
      return e.kind();
    }
    FAIL("no error");
    return ComplexErrorKind::EmptyInput;
  };
  CHECK(kind({{0, 1, 2}, {2, 1, 0}}) == ComplexErrorKind::DuplicateSimplex);
  CHECK(kind({{0, 1, 1}}) == ComplexErrorKind::DegenerateSimplex);
  CHECK(kind({}) == ComplexErrorKind::EmptyInput);
}

TEST_CASE("f-vectors of simplices and simplex boundaries") {
  CHECK(f_vector(simplex_complex(4)) == FVector{5, 10, 10, 5, 1});
  CHECK(f_vector(simplex_boundary_complex(5)) == FVector{6, 15, 20, 15, 6});
}

TEST_CASE("X543 f-vector matches a count over the 600-cell") {
  const auto& x = x543_template();
  CHECK(f_vector(x.complex) == FVector{116, 678, 1106, 543});
  // Inclusion-exclusion oracle: 600-cell simplices avoiding the removed vertices.
  const auto& cell = cell600_instance();
  std::vector<std::int64_t> f(4, 0);
  for (const auto& s : oracle::closure(cell.complex.maximal_simplices())) {
    bool hits = false;
    for (auto v : s) hits |= std::find(x.removed.begin(), x.removed.end(), v) != x.removed.end();
    if (!hits) ++f[s.size() - 1];
  }
  CHECK(f_vector(x.complex) == FVector(f.begin(), f.end()));
}

TEST_CASE("Euler characteristics") {
  CHECK(euler_characteristic(x543_template().complex) == 1);
  CHECK(euler_characteristic(simplex_boundary_complex(5)) == 2);
  CHECK(euler_characteristic(build_complex(oracle::torus(4, 3))) == 0);
  CHECK(euler_characteristic(cell600_instance().complex) == 0);
}

TEST_CASE("600-cell links: icosahedra at vertices, pentagons at edges") {
  const auto& k = cell600_instance().complex;
  REQUIRE(f_vector(k) == FVector{120, 720, 1200, 600});
  for (VertexId v = 0; v < 120; ++v) CHECK(f_vector(link(k, {v}).complex) == FVector{12, 30, 20});
  for (const auto& e : k.simplices(1)) {
    const auto l = link(k, e).complex;
    CHECK(f_vector(l) == FVector{5, 5});
    CHECK(oracle::link_cycle_length(k.maximal_simplices(), e) == 5);
  }
}

TEST_CASE("link of a triangle in the boundary of the 5-simplex is a triangle") {
  const auto k = simplex_boundary_complex(5);
  const auto l = link(k, {0, 1, 2});
  CHECK(f_vector(l.complex) == FVector{3, 3});
  std::vector<VertexId> orig = l.original;
  std::sort(orig.begin(), orig.end());
  CHECK(orig == std::vector<VertexId>{3, 4, 5});
  CHECK(oracle::link_cycle_length(k.maximal_simplices(), {0, 1, 2}) == 3);
  CHECK_THROWS_AS(link(k, {0, 1, 2, 3, 4, 5}), ComplexError);
}

TEST_CASE("boundary complexes") {
  CHECK(boundary_complex(simplex_complex(4)).f_vector() == FVector{5, 10, 10, 5});
  CHECK(boundary_complex(simplex_boundary_complex(5)).f_vector() == FVector{});
  const auto bx = boundary_complex(x543_template().complex);
  CHECK(bx.f_vector() == FVector{22, 60, 40});
  CHECK(euler_characteristic(bx.f_vector()) == 2);
  // Oracle: faces in exactly one tetrahedron.
  const auto ob = oracle::boundary(x543_template().complex.maximal_simplices());
  std::size_t total = 0;
  for (const auto& level : bx.simplices) total += level.size();
  CHECK(total == ob.size());
  for (const auto& s : ob) CHECK(bx.contains(s));
}

TEST_CASE("boundary_complex errors") {
  CHECK_THROWS_AS(boundary_complex(build_complex({{0, 1, 2}, {2, 3}})), ComplexError);
  // Three triangles on one edge.
  try {
    boundary_complex(build_complex({{0, 1, 2}, {0, 1, 3}, {0, 1, 4}}));
    FAIL("expected NonPseudomanifold");
  } catch (const ComplexError& e) {
    CHECK(e.kind() == ComplexErrorKind::NonPseudomanifold);
  }
}

TEST_CASE("interior simplices") {
  CHECK(interior_simplices(simplex_complex(3), 1).empty());
  CHECK(interior_simplices(x543_template().complex, 1).size() == 618);
  const auto w = build_W().complex;
  CHECK(interior_simplices(w, 1).empty());
  CHECK(interior_simplices(w, 2).size() == 4);
}

TEST_CASE("flagness") {
  const auto w = is_flag(build_complex({{0, 1}, {1, 2}, {0, 2}}));
  REQUIRE(w.has_value());
  CHECK(*w == Simplex{0, 1, 2});
  CHECK_FALSE(is_flag(x543_template().complex).has_value());
  CHECK_FALSE(is_flag(simplex_complex(3)).has_value());
  CHECK(is_flag(simplex_boundary_complex(3)).has_value());
}

TEST_CASE("empty squares") {
  CHECK_FALSE(find_empty_square(x543_template().complex).has_value());
  const auto sq = find_empty_square(build_complex({{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
  REQUIRE(sq.has_value());
  CHECK(sq->size() == 4);
  const auto oct = octahedron_boundary();
  const auto w = find_empty_square(oct);
  REQUIRE(w.has_value());
  const auto& c = *w;
  for (int i = 0; i < 4; ++i) CHECK(oct.adjacent(c[i], c[(i + 1) % 4]));
  CHECK_FALSE(oct.adjacent(c[0], c[2]));
  CHECK_FALSE(oct.adjacent(c[1], c[3]));
}

TEST_CASE("richness") {
  CHECK_FALSE(is_rich(x543_template().complex).has_value());
  const auto w = is_rich(simplex_boundary_complex(5));
  REQUIRE(w.has_value());
  CHECK(w->simplex.size() == 3);
  CHECK(w->link_length == 3);
  CHECK_FALSE(is_rich(simplex_complex(4)).has_value());
  CHECK(oracle::min_interior_link(x543_template().complex.maximal_simplices()) >= 5);
}

TEST_CASE("richness rejects an interior link that is not a cycle") {
  try {
    is_rich(pinched_discs());
    FAIL("expected BadLink");
  } catch (const ComplexError& e) {
    CHECK(e.kind() == ComplexErrorKind::BadLink);
  }
}

TEST_CASE("isomorphism under random relabelling") {
  std::mt19937_64 rng(7);
  const auto& x = x543_template().complex;
  for (int trial = 0; trial < 3; ++trial) {
    const auto perm = oracle::random_permutation(x.n_vertices(), rng);
    const auto y = build_complex(oracle::relabel(x.maximal_simplices(), perm));
    const auto map = are_isomorphic(x, y);
    REQUIRE(map.has_value());
    CHECK(is_isomorphism(x, y, *map));
    auto mapped = oracle::relabel(x.maximal_simplices(), *map);
    auto target = y.maximal_simplices();
    std::sort(mapped.begin(), mapped.end());
    std::sort(target.begin(), target.end());
    CHECK(mapped == target);
  }
  auto tets = x.maximal_simplices();
  tets.pop_back();
  CHECK_FALSE(are_isomorphic(x, build_complex(tets)).has_value());
}

TEST_CASE("isomorphism is reflexive on the corpus") {
  for (const auto& k : {x543_template().complex, simplex_boundary_complex(5), octahedron_boundary(),
                        build_W().complex, build_Y().complex}) {
    const auto map = are_isomorphic(k, k);
    REQUIRE(map.has_value());
    CHECK(is_isomorphism(k, k, *map));
  }
}

TEST_CASE("complex_from_edges") {
  const std::vector<std::pair<VertexId, VertexId>> k4{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  CHECK(f_vector(complex_from_edges(4, k4)) == FVector{4, 6, 4, 1});
  const std::vector<std::pair<VertexId, VertexId>> c5{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
  CHECK(f_vector(complex_from_edges(5, c5)) == FVector{5, 5});
  std::vector<std::pair<VertexId, VertexId>> k5;
  for (VertexId a = 0; a < 5; ++a)
    for (VertexId b = a + 1; b < 5; ++b) k5.emplace_back(a, b);
  try {
    complex_from_edges(5, k5);
    FAIL("expected CliqueTooLarge");
  } catch (const ComplexError& e) {
    CHECK(e.kind() == ComplexErrorKind::CliqueTooLarge);
  }
}

TEST_CASE("property: face closure agrees with the oracle") {
  for (const auto& k : {x543_template().complex, build_W().complex, build_Y().complex,
                        simplex_boundary_complex(5), build_complex(oracle::torus(3, 3))}) {
    const auto expected = oracle::closure(k.maximal_simplices());
    CHECK(all_simplices(k) == std::vector<Simplex>(expected.begin(), expected.end()));
    for (int d = 1; d <= k.dim(); ++d)
      for (std::size_t i = 0; i < k.count(d); ++i)
        for (std::size_t j = 0; j < k.simplices(d)[i].size(); ++j) {
          Simplex f = k.simplices(d)[i];
          f.erase(f.begin() + static_cast<long>(j));
          CHECK(k.contains(f));
        }
  }
}

TEST_CASE("property: flag-no-square implies rich") {
  const std::vector<SimplicialComplex> corpus{x543_template().complex, build_W().complex, build_Y().complex,
                                              simplex_complex(3), simplex_complex(4),
                                              special_subdivision(build_W().complex).child,
                                              build_complex(oracle::torus(3, 3))};
  int applied = 0;
  for (const auto& k : corpus) {
    if (is_flag(k) || find_empty_square(k)) continue;
    ++applied;
    CHECK_FALSE(is_rich(k).has_value());
  }
  CHECK(applied >= 3);
}

TEST_CASE("property: the boundary of a boundary is empty") {
  for (const auto& k : {x543_template().complex, simplex_complex(4), build_W().complex, build_Y().complex}) {
    const auto b = boundary_complex(k).as_complex().complex;
    CHECK(boundary_complex(b).f_vector() == FVector{});
  }
}

TEST_CASE("manifold link conditions") {
  CHECK(satisfies_manifold_link_conditions(x543_template().complex));
  CHECK(satisfies_manifold_link_conditions(simplex_boundary_complex(5)));
  CHECK(satisfies_manifold_link_conditions(build_complex(oracle::torus(4, 3))));
  CHECK_FALSE(satisfies_manifold_link_conditions(pinched_discs()));
  CHECK(is_connected(x543_template().complex));
  CHECK_FALSE(is_connected(build_complex({{0, 1}, {2, 3}})));
}

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "acute/appendix_data.hpp"
#include "acute/isomorphism.hpp"
#include "acute/mesh_io.hpp"
#include "acute/polytope600.hpp"

using namespace acute;
using nlohmann::json;

namespace {

MeshDocument reload(const MeshDocument& doc) { return document_from_json(json::parse(to_json(doc).dump())); }

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

MeshDocument t0_document() {
  const Mesh m = reconstruct(load_reference(ReferenceKind::T0Regular));
  return {m.complex, m.embedding, "t0", "reference"};
}

}  // namespace

TEST_CASE("integer documents round-trip") {
  const MeshDocument doc = t0_document();
  const MeshDocument back = reload(doc);
  CHECK(back.name == "t0");
  CHECK(back.provenance == "reference");
  CHECK(back.embedding->kind == ScalarKind::Integer);
  CHECK(back.embedding->exact == doc.embedding->exact);
  CHECK(back.complex.maximal_simplices() == doc.complex.maximal_simplices());
  CHECK(to_json(back).dump() == to_json(doc).dump());
}

TEST_CASE("float documents round-trip bit for bit") {
  const Mesh ico = build_platonic_cones(PlatonicSolid::Icosahedron);
  const MeshDocument doc{ico.complex, Embedding::from_floats(ico.embedding.points), "ico", ""};
  const MeshDocument back = reload(doc);
  CHECK(back.embedding->kind == ScalarKind::Float);
  CHECK(back.embedding->points == doc.embedding->points);
}

TEST_CASE("rational coordinates") {
  const json j = json::parse(R"({
    "maximal_simplices": [[0, 1, 2, 3]],
    "embedding": {"scalar": "rational", "points": [["0", "0", "0"], ["1/2", 0, 0], [0, "2/3", 0], [0, 0, "-3/-4"]]}
  })");
  const MeshDocument doc = document_from_json(j);
  const Embedding& e = *doc.embedding;
  CHECK(e.kind == ScalarKind::Rational);
  CHECK(e.denominator == 12);
  CHECK(e.exact[1] == IVec3{{6, 0, 0}});
  CHECK(e.exact[2] == IVec3{{0, 8, 0}});
  CHECK(e.exact[3] == IVec3{{0, 0, 9}});
  CHECK(e.points[3][2] == doctest::Approx(0.75));
  CHECK(verify_acute(doc.complex, e).exact);

  const json out = to_json(doc);
  CHECK(out["embedding"]["points"][1][0] == "1/2");
  CHECK(out["embedding"]["points"][2][1] == "2/3");
  CHECK(out["embedding"]["points"][3][2] == "3/4");
  CHECK(out["embedding"]["points"][0][0] == "0");
  CHECK(reload(doc).embedding->exact == e.exact);
}

TEST_CASE("malformed documents are rejected") {
  auto bad = [](const char* text) {
    try {
      document_from_json(json::parse(text));
    } catch (const MeshIoError& e) {
      return e.kind() == MeshIoErrorKind::Malformed;
    }
    return false;
  };
  CHECK(bad(R"({})"));
  CHECK(bad(R"({"maximal_simplices": [[0, 1], [0, 1]]})"));
  CHECK(bad(R"({"maximal_simplices": [[0, 2]]})"));
  CHECK(bad(R"({"maximal_simplices": "x"})"));
  CHECK(bad(R"({"maximal_simplices": [[0, 1]], "dim": 2})"));
  CHECK(bad(R"({"maximal_simplices": [[0, 1]], "n_vertices": 3})"));
  CHECK(bad(R"({"maximal_simplices": [[0, 1]], "embedding": {"scalar": "int", "points": [[0, 0, 0]]}})"));
  CHECK(bad(R"({"maximal_simplices": [[0, 1]], "embedding": {"scalar": "quad", "points": [[0,0,0],[1,1,1]]}})"));
  CHECK(bad(R"({"maximal_simplices": [[0, 1]], "embedding": {"scalar": "int", "points": [[0,0,0],[1.5,1,1]]}})"));
  CHECK(bad(R"({"maximal_simplices": [[0, 1]], "embedding": {"scalar": "rational", "points": [[0,0,0],["1/0",1,1]]}})"));
  CHECK(bad(R"({"maximal_simplices": [[0, 1]], "embedding": {"scalar": "rational", "points": [[0,0,0],["a",1,1]]}})"));
  CHECK(bad(R"({"maximal_simplices": [[0, 1]], "embedding": {"scalar": "float", "points": [[0,0],[1,1]]}})"));
  // Common denominators beyond 64 bits.
  CHECK(bad(R"({"maximal_simplices": [[0, 1]], "embedding": {"scalar": "rational",
              "points": [["1/4294967291",0,0],["1/4294967279",0,"1/4294967231"]]}})"));
}

TEST_CASE("files") {
  const auto dir = std::filesystem::temp_directory_path() / "acute_mesh_io_test";
  std::filesystem::create_directories(dir);
  const MeshDocument doc = t0_document();
  write_document(dir / "t0.json", doc);
  const MeshDocument back = read_document(dir / "t0.json");
  CHECK(back.embedding->exact == doc.embedding->exact);
  try {
    read_document(dir / "missing.json");
    FAIL("expected an I/O error");
  } catch (const MeshIoError& e) {
    CHECK(e.kind() == MeshIoErrorKind::Io);
  }
  std::ofstream(dir / "junk.json") << "{ not json";
  CHECK_THROWS_AS(read_document(dir / "junk.json"), MeshIoError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("output is deterministic and sorted") {
  const Mesh w = build_W();
  const MeshDocument doc{w.complex, w.embedding, "W", ""};
  const json j = to_json(doc);
  CHECK(j.dump() == to_json(doc).dump());
  const auto tops = j["maximal_simplices"].get<std::vector<Simplex>>();
  CHECK(std::is_sorted(tops.begin(), tops.end()));
  CHECK(j["dim"] == 3);
  CHECK(j["n_vertices"] == 8);
  CHECK(j["embedding"]["scalar"] == "int");
}

TEST_CASE("OFF export of a tetrahedral mesh") {
  const MeshDocument doc = t0_document();
  std::ostringstream off;
  write_off(off, doc);
  const auto l = lines(off.str());
  REQUIRE(l.size() == 2 + 116 + 40);
  CHECK(l[0] == "OFF");
  CHECK(l[1] == "116 40 0");
  // Faces point away from the centroid of the convex hull.
  Vec3 c{};
  for (const auto& p : doc.embedding->points) c += p;
  c = (1.0 / 116) * c;
  for (std::size_t i = 118; i < l.size(); ++i) {
    std::istringstream in(l[i]);
    int n, a, b, d;
    in >> n >> a >> b >> d;
    CHECK(n == 3);
    const auto& p = doc.embedding->points;
    const Vec3 normal = cross(p[b] - p[a], p[d] - p[a]);
    CHECK(dot(normal, (1.0 / 3) * (p[a] + p[b] + p[d]) - c) > 0);
  }

  std::ostringstream ele;
  write_ele(ele, doc);
  const auto e = lines(ele.str());
  REQUIRE(e.size() == 544);
  CHECK(e[0] == "543 4 0");
  CHECK(e[1].rfind("0 ", 0) == 0);
}

TEST_CASE("OFF and VTK export of a triangle mesh") {
  const auto& t = face_template().complex;
  std::vector<Vec3> pts(9);
  for (std::size_t i = 0; i < 9; ++i) pts[i] = {{double(i), double(i * i % 5), 0.0}};
  const MeshDocument doc{t, Embedding::from_floats(pts), "template", ""};
  std::ostringstream off;
  write_off(off, doc);
  CHECK(lines(off.str())[1] == "9 10 0");
  std::ostringstream vtk;
  write_vtk(vtk, doc);
  const auto l = lines(vtk.str());
  CHECK(std::count(l.begin(), l.end(), "5") == 10);
  CHECK(std::find(l.begin(), l.end(), "CELLS 10 40") != l.end());
}

TEST_CASE("VTK export of the cube mesh") {
  const Assembly a = assemble_cube();
  const MeshDocument doc{a.mesh.complex, a.mesh.embedding, "cube", ""};
  std::ostringstream vtk;
  write_vtk(vtk, doc);
  const auto l = lines(vtk.str());
  CHECK(l[0] == "# vtk DataFile Version 3.0");
  CHECK(l[2] == "ASCII");
  CHECK(l[3] == "DATASET UNSTRUCTURED_GRID");
  CHECK(std::find(l.begin(), l.end(), "CELLS 2715 13575") != l.end());
  CHECK(std::find(l.begin(), l.end(), "CELL_TYPES 2715") != l.end());
  CHECK(std::count(l.begin(), l.end(), "10") == 2715);
}

TEST_CASE("exports need an embedding") {
  const MeshDocument bare{simplex_complex(3), std::nullopt, "bare", ""};
  std::ostringstream out;
  try {
    write_off(out, bare);
    FAIL("expected MissingEmbedding");
  } catch (const MeshIoError& e) {
    CHECK(e.kind() == MeshIoErrorKind::MissingEmbedding);
  }
  CHECK_THROWS_AS(write_vtk(out, bare), MeshIoError);
  CHECK_NOTHROW(write_ele(out, bare));
  const MeshDocument back = reload(bare);
  CHECK_FALSE(back.embedding.has_value());
}

TEST_CASE("angle report serialisation") {
  const Mesh w = build_W();
  const auto rep = verify_acute(w.complex, w.embedding);
  const json brief = angle_report_json(w.complex, rep, false);
  CHECK(brief["summary"]["n_failures"] == 12);
  CHECK(brief["summary"]["max_deg"].get<double>() == doctest::Approx(90.0));
  CHECK_FALSE(brief.contains("tetrahedra"));
  const json full = angle_report_json(w.complex, rep, true);
  REQUIRE(full["tetrahedra"].size() == 5);
  for (std::size_t t = 0; t < 5; ++t) {
    const auto verts = full["tetrahedra"][t]["vertices"].get<Simplex>();
    CHECK(verts == w.complex.simplices(3)[t]);
    for (const auto& d : full["tetrahedra"][t]["dihedrals"]) {
      const auto e = d["edge"].get<Simplex>();
      CHECK(std::find(verts.begin(), verts.end(), e[0]) != verts.end());
      CHECK(std::find(verts.begin(), verts.end(), e[1]) != verts.end());
      CHECK(d["acute"].get<bool>() == (d["cos"].get<double>() > 0));
    }
  }
}

TEST_CASE("property: documents reload isomorphic") {
  for (const Mesh& m : {build_W(), build_Y(), build_platonic_cones(PlatonicSolid::Dodecahedron)}) {
    const MeshDocument doc{m.complex, m.embedding, "", ""};
    const MeshDocument back = reload(doc);
    const auto iso = are_isomorphic(back.complex, m.complex);
    REQUIRE(iso.has_value());
    CHECK(is_isomorphism(back.complex, m.complex, *iso));
  }
}

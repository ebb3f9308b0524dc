#include "acute/mesh_io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iomanip>
#include <numeric>

namespace acute {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) { throw MeshIoError(MeshIoErrorKind::Malformed, what); }

struct Fraction {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

Fraction parse_fraction(const std::string& s) {
  Fraction f;
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [p, ec] = std::from_chars(first, last, f.num);
  if (ec != std::errc{}) malformed("bad rational '" + s + "'");
  if (p != last) {
    if (*p != '/') malformed("bad rational '" + s + "'");
    auto [q, ec2] = std::from_chars(p + 1, last, f.den);
    if (ec2 != std::errc{} || q != last || f.den == 0) malformed("bad rational '" + s + "'");
  }
  if (f.den < 0) {
    f.num = -f.num;
    f.den = -f.den;
  }
  const std::int64_t g = std::gcd(f.num, f.den);
  if (g > 1) {
    f.num /= g;
    f.den /= g;
  }
  return f;
}

std::int64_t checked(__int128 x) {
  if (x > INT64_MAX || x < INT64_MIN) malformed("rational coordinates overflow 64 bits");
  return static_cast<std::int64_t>(x);
}

json embedding_to_json(const Embedding& e) {
  json points = json::array();
  for (std::size_t v = 0; v < e.size(); ++v) {
    json p = json::array();
    for (int c = 0; c < 3; ++c) {
      switch (e.kind) {
        case ScalarKind::Integer: p.push_back(e.exact[v][c]); break;
        case ScalarKind::Rational: {
          const std::int64_t g = std::gcd(e.exact[v][c], e.denominator);
          const std::int64_t num = e.exact[v][c] / g, den = e.denominator / g;
          p.push_back(den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den));
          break;
        }
        case ScalarKind::Float: p.push_back(e.points[v][c]); break;
      }
    }
    points.push_back(std::move(p));
  }
  return {{"scalar", to_string(e.kind)}, {"points", std::move(points)}};
}

Embedding embedding_from_json(const json& j) {
  if (!j.is_object() || !j.contains("scalar") || !j.contains("points") || !j["points"].is_array())
    malformed("embedding needs 'scalar' and 'points'");
  const std::string scalar = j["scalar"].get<std::string>();
  const auto& pts = j["points"];
  for (const auto& p : pts)
    if (!p.is_array() || p.size() != 3) malformed("embedding points must have three coordinates");
  if (scalar == "float") {
    std::vector<Vec3> out;
    for (const auto& p : pts) {
      Vec3 q;
      for (int c = 0; c < 3; ++c) {
        if (!p[c].is_number()) malformed("float coordinate expected");
        q[c] = p[c].get<double>();
      }
      out.push_back(q);
    }
    return Embedding::from_floats(std::move(out));
  }
  if (scalar == "int") {
    std::vector<IVec3> out;
    for (const auto& p : pts) {
      IVec3 q;
      for (int c = 0; c < 3; ++c) {
        if (!p[c].is_number_integer()) malformed("integer coordinate expected");
        q[c] = p[c].get<std::int64_t>();
      }
      out.push_back(q);
    }
    return Embedding::from_integers(std::move(out));
  }
  if (scalar == "rational") {
    std::vector<std::array<Fraction, 3>> fr;
    std::int64_t den = 1;
    for (const auto& p : pts) {
      std::array<Fraction, 3> q;
      for (int c = 0; c < 3; ++c) {
        if (p[c].is_number_integer()) q[c] = {p[c].get<std::int64_t>(), 1};
        else if (p[c].is_string()) q[c] = parse_fraction(p[c].get<std::string>());
        else malformed("rational coordinate expected");
        den = checked(static_cast<__int128>(den) / std::gcd(den, q[c].den) * q[c].den);
      }
      fr.push_back(q);
    }
    std::vector<IVec3> ints;
    for (const auto& q : fr) {
      IVec3 v;
      for (int c = 0; c < 3; ++c) v[c] = checked(static_cast<__int128>(q[c].num) * (den / q[c].den));
      ints.push_back(v);
    }
    Embedding e = Embedding::from_integers(std::move(ints));
    e.kind = ScalarKind::Rational;
    e.denominator = den;
    for (auto& p : e.points) p = (1.0 / static_cast<double>(den)) * p;
    return e;
  }
  malformed("unknown scalar kind '" + scalar + "'");
}

const Embedding& require_embedding(const MeshDocument& doc) {
  if (!doc.embedding)
    throw MeshIoError(MeshIoErrorKind::MissingEmbedding, "document '" + doc.name + "' has no embedding");
  return *doc.embedding;
}

}  // namespace

json angle_report_json(const SimplicialComplex& k, const AngleReport& rep, bool per_tetrahedron) {
  json j = {{"summary",
             {{"min_deg", rep.min_angle_deg}, {"max_deg", rep.max_angle_deg}, {"n_failures", rep.failures.size()}}}};
  if (!per_tetrahedron) return j;
  const auto& tets = k.simplices(3);
  json list = json::array();
  for (std::size_t t = 0; t < rep.tetrahedra(); ++t) {
    json dihedrals = json::array();
    for (std::size_t e = 0; e < 6; ++e) {
      const auto& entry = rep.entries[6 * t + e];
      const auto [a, b] = kTetEdges[entry.edge];
      dihedrals.push_back({{"edge", {tets[t][a], tets[t][b]}}, {"cos", entry.cos}, {"acute", entry.acute}});
    }
    list.push_back({{"vertices", tets[t]}, {"dihedrals", std::move(dihedrals)}});
  }
  j["tetrahedra"] = std::move(list);
  return j;
}

json complex_to_json(const SimplicialComplex& k) {
  auto maximal = k.maximal_simplices();
  std::sort(maximal.begin(), maximal.end());
  return {{"dim", k.dim()}, {"n_vertices", k.n_vertices()}, {"maximal_simplices", maximal}};
}

SimplicialComplex complex_from_json(const json& j) {
  if (!j.is_object() || !j.contains("maximal_simplices")) malformed("complex needs 'maximal_simplices'");
  std::vector<Simplex> simplices;
  try {
    simplices = j["maximal_simplices"].get<std::vector<Simplex>>();
  } catch (const json::exception& e) {
    malformed(std::string("maximal_simplices: ") + e.what());
  }
  SimplicialComplex k;
  try {
    k = build_complex(std::move(simplices));
  } catch (const ComplexError& e) {
    malformed(e.what());
  }
  if (j.contains("dim") && j["dim"] != k.dim()) malformed("declared dim does not match the simplices");
  if (j.contains("n_vertices") && j["n_vertices"] != k.n_vertices())
    malformed("declared n_vertices does not match the simplices");
  return k;
}

json to_json(const MeshDocument& doc) {
  json j = complex_to_json(doc.complex);
  if (doc.embedding) j["embedding"] = embedding_to_json(*doc.embedding);
  j["metadata"] = {{"name", doc.name}, {"provenance", doc.provenance}};
  return j;
}

MeshDocument document_from_json(const json& j) {
  MeshDocument doc;
  doc.complex = complex_from_json(j);
  if (j.contains("embedding")) {
    doc.embedding = embedding_from_json(j["embedding"]);
    if (doc.embedding->size() != doc.complex.n_vertices())
      malformed("embedding has " + std::to_string(doc.embedding->size()) + " points for " +
                std::to_string(doc.complex.n_vertices()) + " vertices");
  }
  if (j.contains("metadata")) {
    const auto& m = j["metadata"];
    doc.name = m.value("name", "");
    doc.provenance = m.value("provenance", "");
  }
  return doc;
}

MeshDocument read_document(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MeshIoError(MeshIoErrorKind::Io, "cannot open " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    malformed(path.string() + ": " + e.what());
  }
  return document_from_json(j);
}

void write_document(const std::filesystem::path& path, const MeshDocument& doc) {
  std::ofstream out(path);
  if (!out) throw MeshIoError(MeshIoErrorKind::Io, "cannot write " + path.string());
  out << to_json(doc).dump(2) << '\n';
}

void write_off(std::ostream& out, const MeshDocument& doc) {
  const Embedding& e = require_embedding(doc);
  const auto& k = doc.complex;
  std::vector<Simplex> faces;
  if (k.dim() == 3) {
    const Boundary boundary = boundary_complex(k);
    for (auto tri : boundary.simplices.at(2)) {
      const auto tet = k.simplices(3)[k.cofacets(2, *k.index_of(tri)).front()];
      VertexId apex = 0;
      for (auto v : tet)
        if (std::find(tri.begin(), tri.end(), v) == tri.end()) apex = v;
      if (orientation(e.points[tri[0]], e.points[tri[1]], e.points[tri[2]], e.points[apex]) > 0)
        std::swap(tri[1], tri[2]);
      faces.push_back(std::move(tri));
    }
  } else if (k.dim() == 2) {
    faces = k.simplices(2);
  } else {
    malformed("OFF export needs a 2- or 3-complex");
  }
  out << "OFF\n" << e.size() << ' ' << faces.size() << " 0\n" << std::setprecision(17);
  for (const auto& p : e.points) out << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
  for (const auto& f : faces) out << "3 " << f[0] << ' ' << f[1] << ' ' << f[2] << '\n';
}

void write_ele(std::ostream& out, const MeshDocument& doc) {
  const auto& k = doc.complex;
  if (k.dim() != 3) malformed("element list needs a 3-complex");
  const auto& tets = k.simplices(3);
  out << tets.size() << " 4 0\n";
  for (std::size_t i = 0; i < tets.size(); ++i)
    out << i << ' ' << tets[i][0] << ' ' << tets[i][1] << ' ' << tets[i][2] << ' ' << tets[i][3] << '\n';
}

void write_vtk(std::ostream& out, const MeshDocument& doc) {
  const Embedding& e = require_embedding(doc);
  const auto& k = doc.complex;
  if (k.dim() != 2 && k.dim() != 3) malformed("VTK export needs a 2- or 3-complex");
  const auto& cells = k.simplices(k.dim());
  const std::size_t n = cells.size(), width = static_cast<std::size_t>(k.dim()) + 1;
  out << "# vtk DataFile Version 3.0\n" << (doc.name.empty() ? "mesh" : doc.name) << "\nASCII\n";
  out << "DATASET UNSTRUCTURED_GRID\nPOINTS " << e.size() << " double\n" << std::setprecision(17);
  for (const auto& p : e.points) out << p[0] << ' ' << p[1] << ' ' << p[2] << '\n';
  out << "CELLS " << n << ' ' << n * (width + 1) << '\n';
  for (const auto& c : cells) {
    out << width;
    for (auto v : c) out << ' ' << v;
    out << '\n';
  }
  out << "CELL_TYPES " << n << '\n';
  for (std::size_t i = 0; i < n; ++i) out << (k.dim() == 3 ? 10 : 5) << '\n';
}

}  // namespace acute

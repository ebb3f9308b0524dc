// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any FAIL.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "acute/appendix_data.hpp"
#include "acute/complex.hpp"
#include "acute/flatten.hpp"
#include "acute/fvector.hpp"
#include "acute/geometry.hpp"
#include "acute/isomorphism.hpp"
#include "acute/polytope600.hpp"
#include "oracles.hpp"

using namespace acute;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

std::string fv(const FVector& f) {
  std::string s = "(";
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "," : "") + std::to_string(f[i]);
  return s + ")";
}

// 1. 600-cell generation.
void c1(Outcome& o) {
  const Cell600 c = generate_600_cell();
  const auto f = f_vector(c.complex);
  o.require(f == FVector{120, 720, 1200, 600}, "f-vector");
  int bad_vertex = 0, bad_edge = 0;
  for (VertexId v = 0; v < 120; ++v)
    if (f_vector(link(c.complex, {v}).complex) != FVector{12, 30, 20}) ++bad_vertex;
  for (const auto& e : c.complex.simplices(1)) {
    const Link l = link(c.complex, e);
    const bool cycle = l.complex.dim() == 1 && l.complex.count(0) == 5 && l.complex.count(1) == 5 &&
                       is_connected(l.complex);
    if (!cycle) ++bad_edge;
  }
  o.require(bad_vertex == 0, "vertex links");
  o.require(bad_edge == 0, "edge links");
  o.detail << "f=" << fv(f) << ", vertex links (12,30,20): " << 120 - bad_vertex << "/120, edge links 5-cycles: "
           << 720 - bad_edge << "/720";
}

// 2. X543 extraction.
void c2(Outcome& o) {
  const X543 x = extract_x543(cell600_instance());
  const auto f = f_vector(x.complex);
  const auto fb = boundary_complex(x.complex).f_vector();
  o.require(f == FVector{116, 678, 1106, 543}, "f-vector");
  o.require(fb == FVector{22, 60, 40}, "boundary f-vector");
  o.require(euler_characteristic(fb) == 2, "boundary Euler characteristic");
  const bool flag = !is_flag(x.complex), square = !find_empty_square(x.complex), rich = !is_rich(x.complex);
  o.require(flag && square && rich, "flag-no-square and rich");
  o.detail << "f=" << fv(f) << ", boundary " << fv(fb) << " chi=" << euler_characteristic(fb) << ", flag=" << flag
           << " no-square=" << square << " rich=" << rich;
}

// 3. Appendix verification.
void c3(Outcome& o) {
  for (auto which : {ReferenceKind::T0Regular, ReferenceKind::T1Standard}) {
    const Mesh m = reconstruct(load_reference(which));
    const bool iso = are_isomorphic(m.complex, x543_template().complex).has_value();
    const AngleReport rep = verify_acute(m.complex, m.embedding, 0.0, AngleMode::Exact);
    o.require(m.complex.count(3) == 543 && iso, to_string(which) + " combinatorics");
    o.require(rep.entries.size() == 3258 && rep.acute(), to_string(which) + " acuteness");
    o.detail << to_string(which) << ": " << m.complex.count(3) << " tets, isomorphic=" << iso << ", "
             << rep.entries.size() - rep.failures.size() << "/" << rep.entries.size() << " positive; ";
  }
}

// 4. Cube assembly.
void c4(Outcome& o) {
  const Assembly a = assemble_cube();
  const auto& m = a.mesh;
  const bool geo = verify_geometric_complex(m.complex, m.embedding).ok;
  const bool rich = !is_rich(m.complex);
  const AngleReport ex = verify_acute(m.complex, m.embedding, 0.0, AngleMode::Exact);
  const AngleReport fl =
      verify_acute(m.complex, Embedding::from_floats(m.embedding.points), kDefaultFloatMarginDeg, AngleMode::Float);
  o.require(m.complex.count(3) == 2715, "tetrahedron count");
  o.require(geo, "geometric complex");
  o.require(rich, "richness");
  o.require(ex.acute(), "exact acuteness");
  o.require(std::abs(fl.min_angle_deg - 26.425) <= 0.01 && std::abs(fl.max_angle_deg - 89.992) <= 0.01,
            "angle extremes");
  char buf[128];
  std::snprintf(buf, sizeof buf, "angles [%.4f, %.4f] deg", fl.min_angle_deg, fl.max_angle_deg);
  o.detail << m.complex.count(3) << " tets, geometric=" << geo << ", rich=" << rich << ", exact acute=" << ex.acute()
           << ", " << buf;
}

// 5. Octahedron assembly.
void c5(Outcome& o) {
  const Assembly a = assemble_octahedron();
  const auto& m = a.mesh;
  const bool geo = verify_geometric_complex(m.complex, m.embedding).ok;
  const bool rich = !is_rich(m.complex);
  const bool acute = verify_acute(m.complex, m.embedding, 0.0, AngleMode::Exact).acute();
  o.require(m.complex.count(3) == 4344, "tetrahedron count");
  o.require(geo && rich && acute, "geometric, rich and acute");
  o.detail << m.complex.count(3) << " tets, geometric=" << geo << ", rich=" << rich << ", exact acute=" << acute;
}

// 6. Dehn-Sommerville suite.
void c6(Outcome& o) {
  struct Case {
    std::string name;
    SimplicialComplex k;
    int m;
  };
  const std::vector<Case> corpus{{"simplex3", simplex_complex(3), 3},
                                 {"simplex4", simplex_complex(4), 4},
                                 {"bd simplex4", simplex_boundary_complex(4), 3},
                                 {"bd simplex5", simplex_boundary_complex(5), 4},
                                 {"X543", x543_template().complex, 3},
                                 {"cone bd simplex4", cone(simplex_boundary_complex(4)), 4},
                                 {"cone 600-cell", cone(cell600_instance().complex), 4},
                                 {"cone X543", cone(x543_template().complex), 4}};
  int ok = 0, cor = 0, four = 0;
  for (const auto& c : corpus) {
    const bool zero = dehn_sommerville(c.k, c.m).ok();
    o.require(zero, c.name + " residuals");
    ok += zero;
    if (c.m == 4) {
      ++four;
      const bool z = corollary_ds_4d(c.k) == std::pair<std::int64_t, std::int64_t>{0, 0};
      o.require(z, c.name + " corollary");
      cor += z;
    }
  }
  o.detail << "residuals zero on " << ok << "/" << corpus.size() << ", corollary (0,0) on " << cor << "/" << four;
}

// 7. Obstruction suite.
void c7(Outcome& o) {
  const ObstructionReport bd5 = richness_obstruction(simplex_boundary_complex(5));
  o.require(bd5.f0 == 6 && bd5.chi == 2, "boundary of the 5-simplex counts");
  o.require(bd5.rich_witness && bd5.rich_witness->link_length == 3, "link-3 witness");

  std::mt19937_64 rng(2024);
  const std::vector<std::vector<Simplex>> seeds{
      simplex_complex(4).maximal_simplices(), simplex_boundary_complex(5).maximal_simplices(),
      cone(simplex_boundary_complex(4)).maximal_simplices(), cone(simplex_boundary_complex(4)).maximal_simplices()};
  int tested = 0, rich = 0, violations = 0;
  for (int sample = 0; sample < 200; ++sample) {
    auto tops = seeds[sample % seeds.size()];
    VertexId next = static_cast<VertexId>(oracle::f_vector(tops)[0]);
    const int steps = 1 + static_cast<int>(rng() % 8);
    for (int s = 0; s < steps; ++s) {
      const auto top = tops[rng() % tops.size()];
      Simplex sigma;
      for (auto v : top)
        if (rng() % 2) sigma.push_back(v);
      while (sigma.size() < 2) {
        const VertexId v = top[rng() % top.size()];
        if (std::find(sigma.begin(), sigma.end(), v) == sigma.end()) sigma.push_back(v);
      }
      std::sort(sigma.begin(), sigma.end());
      tops = oracle::stellar(tops, sigma, next++);
    }
    SimplicialComplex k = build_complex(tops);
    // Puncture closed samples half of the time.
    if (boundary_complex(k).f_vector().empty() && rng() % 2) {
      tops.erase(tops.begin() + static_cast<long>(rng() % tops.size()));
      k = build_complex(tops);
    }
    const ObstructionReport r = richness_obstruction(k);
    ++tested;
    rich += r.rich();
    violations += r.violates();
  }
  o.require(tested == 200 && violations == 0, "random corpus");
  o.detail << "bd simplex5: f0=" << bd5.f0 << " chi=" << bd5.chi << " witness link " << bd5.rich_witness->link_length
           << "; random corpus: " << tested << " complexes, " << rich << " rich, " << violations << " violations";
}

// 8. Special subdivision.
void c8(Outcome& o) {
  const SubdivisionMap d3 = special_subdivision(simplex_complex(3));
  const bool iso = are_isomorphic(d3.child, x543_template().complex).has_value();
  const Mesh w = build_W();
  const SubdivisionMap ws = special_subdivision(w.complex);
  const bool fns = !is_flag(ws.child) && !find_empty_square(ws.child);
  const bool rich = !is_rich(ws.child);
  int two = 0;
  for (const auto& e : w.complex.simplices(1))
    two += induced_subcomplex(ws.child, ws.restricted_vertices(e)).complex.count(1) == 2;
  o.require(iso, "subdivided simplex is X543");
  o.require(ws.child.count(3) == 2715 && fns && rich, "W*");
  o.require(two == static_cast<int>(w.complex.count(1)), "edges split in two");
  o.detail << "sd(simplex3) ~ X543: " << iso << "; W*: " << ws.child.count(3) << " tets, flag-no-square=" << fns
           << ", rich=" << rich << "; parent edges with 2 child edges: " << two << "/" << w.complex.count(1);
}

// 9. Step-1 pipeline.
void c9(Outcome& o) {
  const ScaleInterval iv = step1_scale_interval();
  const auto& k = x543_template().complex;
  const bool acute =
      verify_acute(k, Embedding::from_floats(step1_embedding(iv.best)), kDefaultFloatMarginDeg, AngleMode::Float)
          .acute();
  o.require(iv.hi > iv.lo && acute, "acute scale interval");
  char buf[160];
  std::snprintf(buf, sizeof buf, "acute scales [%.6f, %.6f], best %.4f with max angle %.4f deg", iv.lo, iv.hi, iv.best,
                iv.best_max_angle_deg);
  o.detail << buf;
}

double constraint_error(const FlattenState& s) {
  auto plane = [](const Vec3& p, const Vec3& a, const Vec3& b, const Vec3& c) {
    return std::abs(dot(p - a, normalized(cross(b - a, c - a))));
  };
  const FlattenState init = initial_state({});
  double err = 0.0;
  for (std::size_t v = 0; v < s.points.size(); ++v) {
    const int c = s.roles.carrier[v];
    const Vec3& p = s.points[v];
    switch (s.roles.role[v]) {
      case VertexRole::A: err = std::max(err, norm(p - FlattenFrame::apex(s.t))); break;
      case VertexRole::B:
      case VertexRole::E: err = std::max(err, norm(p - init.points[v])); break;
      case VertexRole::C: err = std::max(err, norm(p - FlattenFrame::touch_point(s.t, c))); break;
      case VertexRole::D:
        err = std::max(err, plane(p, FlattenFrame::apex(s.t), FlattenFrame::base(c), FlattenFrame::base((c + 1) % 3)));
        break;
      case VertexRole::F:
        err = std::max(err, plane(p, FlattenFrame::base(0), FlattenFrame::base(1), FlattenFrame::base(2)));
        break;
      default: break;
    }
  }
  return err;
}

// 10. Optimizer properties.
void c10(Outcome& o) {
  const auto& k = x543_template().complex;
  const FVector f_before = f_vector(k);
  const FlattenResult a = run_flatten({});
  const FlattenResult b = run_flatten({});
  std::size_t accepted = 0;
  bool monotone = true;
  for (const auto& c : a.corrections) {
    accepted += c.accepted_worst.size();
    for (std::size_t i = 1; i < c.accepted_worst.size(); ++i) monotone &= c.accepted_worst[i] <= c.accepted_worst[i - 1];
  }
  const double err = constraint_error(a.state);
  bool same = a.trace.size() == b.trace.size() && a.state.points == b.state.points;
  for (std::size_t i = 0; same && i < a.trace.size(); ++i)
    same = a.trace[i].t == b.trace[i].t && a.trace[i].worst_cosine == b.trace[i].worst_cosine &&
           a.trace[i].iterations == b.trace[i].iterations;
  o.require(monotone, "monotone accepted steps");
  o.require(err <= 1e-10, "constraints");
  o.require(f_vector(k) == f_before, "combinatorics");
  o.require(same, "determinism");
  o.detail << accepted << " accepted steps monotone=" << monotone << ", constraint error " << err
           << ", deterministic=" << same << "; ";
  if (a.success) {
    const auto rep = verify_acute(k, Embedding::from_floats(a.corner_frame_points), kDefaultFloatMarginDeg,
                                  AngleMode::Float);
    const bool rich = !is_rich(k);
    const bool iso = are_isomorphic(k, reconstruct(load_reference(ReferenceKind::T1Standard)).complex).has_value();
    o.require(rep.acute() && rich && iso, "flattened result");
    char buf[128];
    std::snprintf(buf, sizeof buf, "reached t=1: acute=%d [%.3f, %.3f] deg", rep.acute(), rep.min_angle_deg,
                  rep.max_angle_deg);
    o.detail << buf << ", rich=" << rich << ", isomorphic=" << iso;
  } else {
    const bool ref = verify_reference(ReferenceKind::T1Standard).acute();
    o.require(ref, "reference standard mesh");
    o.detail << "stalled at t=" << a.state.t << "; reference standard mesh acute=" << ref;
  }
}

// 11. Simplicial neighbourhoods.
void c11(Outcome& o) {
  struct Case {
    std::string name;
    SimplicialComplex x;
    std::vector<Simplex> y;
  };
  const SimplicialComplex c600 = cell600_instance().complex;
  const SimplicialComplex cone600 = cone(c600);
  const SimplicialComplex t4 = build_complex(oracle::torus(4, 3));
  const auto& tri = c600.simplices(2).front();
  const std::vector<Case> cases{
      {"bd simplex5 / vertex", simplex_boundary_complex(5), {{0}}},
      {"bd simplex5 / edge", simplex_boundary_complex(5), {{0, 1}}},
      {"600-cell / vertex", c600, {{7}}},
      {"600-cell / triangle", c600, {tri}},
      {"torus4 / vertex", t4, {{0}}},
      {"cone 600-cell / apex", cone600, {{120}}},
      {"cone 600-cell / apex tetrahedron", cone600, {{tri[0], tri[1], tri[2], 120}}},
      {"X543 / interior vertex", x543_template().complex, {{60}}},
  };
  int interior_ok = 0, rich_cases = 0, rich_ok = 0, core_ok = 0, comb_cases = 0, comb_ok = 0;
  std::string witness;
  for (const auto& c : cases) {
    const Neighborhood n = simplicial_neighborhood(c.x, c.y);
    // Interior vertices of N are the vertices of Y that are interior in X.
    const auto x_interior = interior_vertices(c.x);
    std::vector<VertexId> expected;
    for (std::size_t v = 0; v < n.n_core; ++v)
      if (std::binary_search(x_interior.begin(), x_interior.end(), n.source[v][0]))
        expected.push_back(static_cast<VertexId>(v));
    const bool interior = interior_vertices(n.complex) == expected;
    o.require(interior, c.name + " interior vertices");
    interior_ok += interior;

    if (!is_rich(c.x)) {
      ++rich_cases;
      const auto w = is_rich(n.complex);
      rich_ok += !w;
      core_ok += !core_richness(n);
      if (w && witness.empty()) {
        std::ostringstream s;
        s << c.name << " has " << to_string(w->simplex) << " (N ids) with link length " << w->link_length;
        witness = s.str();
      }
    }
    if (n.complex.dim() == 4 && is_connected(n.complex)) {
      ++comb_cases;
      const CombCheck cc = comb_corollary_check(n.complex);
      comb_ok += cc.holds();
      o.require(cc.holds(), c.name + " comb corollary");
    }
  }
  o.require(rich_ok == rich_cases, "N preserves richness");
  o.detail << "interior vertices match on " << interior_ok << "/" << cases.size() << "; rich X: N rich on " << rich_ok
           << "/" << rich_cases << " (interior ridges inside Y long on " << core_ok << "/" << rich_cases
           << "); comb corollary holds on " << comb_ok << "/" << comb_cases;
  if (!witness.empty()) o.detail << "; first short link: " << witness;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria{
      {1, "600-cell generation", 10, c1},    {2, "X543 extraction", 10, c2},
      {3, "appendix verification", 30, c3},  {4, "cube assembly", 120, c4},
      {5, "octahedron assembly", 120, c5},   {6, "Dehn-Sommerville suite", 5, c6},
      {7, "obstruction suite", 60, c7},      {8, "special subdivision", 60, c8},
      {9, "Step-1 pipeline", 60, c9},        {10, "optimizer properties", 600, c10},
      {11, "simplicial neighbourhoods", 60, c11}};
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_s) o.require(false, "time limit " + std::to_string(c.limit_s) + " s");
    failed += !o.pass;
    std::printf("%s %2d %s (%.2f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}

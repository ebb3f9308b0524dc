#include "acute/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "acute/appendix_data.hpp"
#include "acute/flatten.hpp"
#include "acute/fvector.hpp"
#include "acute/polytope600.hpp"

namespace acute::cli {

using nlohmann::json;

namespace {

MeshDocument document(std::string name, std::string provenance, const SimplicialComplex& k,
                      std::optional<Embedding> emb = std::nullopt) {
  MeshDocument d;
  d.complex = k;
  d.embedding = std::move(emb);
  d.name = std::move(name);
  d.provenance = std::move(provenance);
  return d;
}

MeshDocument document(std::string name, std::string provenance, const Mesh& m) {
  return document(std::move(name), std::move(provenance), m.complex, m.embedding);
}

json witness_json(const RichnessWitness& w) { return {{"simplex", w.simplex}, {"link_length", w.link_length}}; }

json fvector_json(const FVector& f) { return json(std::vector<std::int64_t>(f.begin(), f.end())); }

json check_acute(const MeshDocument& doc, const VerifyOptions& opts) {
  const Embedding& e = *doc.embedding;
  const bool exact = opts.mode == AngleMode::Exact || (opts.mode == AngleMode::Auto && e.is_exact());
  json r;
  try {
    const AngleReport rep = verify_acute(doc.complex, e, exact ? 0.0 : opts.margin_deg,
                                         exact ? AngleMode::Exact : AngleMode::Float);
    r = angle_report_json(doc.complex, rep, opts.per_tetrahedron);
    r["pass"] = rep.acute();
    r["mode"] = exact ? "exact" : "float";
    r["tests"] = rep.entries.size();
    if (!rep.acute()) {
      const auto& entry = rep.entries[rep.failures.front()];
      r["witness"] = {{"tetrahedron", doc.complex.simplices(3)[entry.tet]},
                      {"edge", kTetEdges[entry.edge]},
                      {"cos", entry.cos}};
    }
  } catch (const GeometryError& err) {
    if (err.kind() != GeometryErrorKind::DegenerateTetrahedron) throw;
    r["pass"] = false;
    r["mode"] = exact ? "exact" : "float";
    r["witness"] = {{"degenerate", err.what()}};
    if (auto t = err.tetrahedron()) r["witness"]["tetrahedron"] = doc.complex.simplices(3)[*t];
  }
  return r;
}

json check_rich(const SimplicialComplex& k) {
  try {
    const auto w = is_rich(k);
    json r{{"pass", !w.has_value()}};
    if (w) r["witness"] = witness_json(*w);
    return r;
  } catch (const ComplexError& err) {
    return {{"pass", false}, {"error", err.what()}};
  }
}

json check_geometric(const MeshDocument& doc) {
  const GeometricCheck g = verify_geometric_complex(doc.complex, *doc.embedding);
  json r{{"pass", g.ok}, {"pairs_tested", g.pairs_tested}};
  if (!g.ok) {
    r["reason"] = g.reason;
    if (g.witness)
      r["witness"] = {doc.complex.simplices(3)[g.witness->first], doc.complex.simplices(3)[g.witness->second]};
  }
  return r;
}

json check_ds(const SimplicialComplex& k) {
  try {
    const DSReport d = dehn_sommerville(k, k.dim());
    return {{"pass", d.ok()}, {"residuals", d.residuals}, {"f", fvector_json(d.f)},
            {"f_boundary", fvector_json(d.f_boundary)}};
  } catch (const ComplexError& err) {
    return {{"pass", false}, {"error", err.what()}};
  }
}

bool needs_embedding(const std::string& check) { return check == "acute" || check == "geometric"; }

std::string trace_csv(const std::vector<TraceRow>& trace) {
  std::ostringstream out;
  out << "t,worst_cosine,iterations\n" << std::setprecision(17);
  for (const auto& row : trace) out << row.t << ',' << row.worst_cosine << ',' << row.iterations << '\n';
  return out.str();
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw MeshIoError(MeshIoErrorKind::Io, "cannot write " + path);
  out << text;
}

void write_json(const std::string& path, const json& j) { write_text(path, j.dump(2) + "\n"); }

json reference_json(ReferenceKind which) {
  const ReferenceMesh& r = load_reference(which);
  json pts = json::array(), edges = json::array();
  for (const auto& p : r.points) pts.push_back({p[0], p[1], p[2]});
  for (const auto& [a, b] : r.edges) edges.push_back({a, b});
  return {{"points", pts}, {"edges", edges}};
}

}  // namespace

MeshDocument generate(const std::string& target, const GenerateOptions& opts) {
  if (target == "600cell")
    return document("600cell", "generated from the unit icosians", cell600_instance().complex);
  if (target == "x543" || target == "face-template") {
    const ScaleInterval iv = step1_scale_interval(opts.scale_min, opts.scale_max);
    const auto pts = step1_embedding(iv.best);
    if (target == "x543")
      return document("x543", "600-cell minus a cell star; Step-1 realisation at scale " + std::to_string(iv.best),
                      x543_template().complex, Embedding::from_floats(pts));
    const auto ids = face_template_embedding(3, {0, 1, 2});
    std::vector<Vec3> face;
    for (auto v : ids) face.push_back(pts[v]);
    return document("face-template", "boundary face of the Step-1 realisation", face_template().complex,
                    Embedding::from_floats(std::move(face)));
  }
  if (target == "W") return document("W", "cube cut into five tetrahedra", build_W());
  if (target == "Y") return document("Y", "octahedron coned from its centre", build_Y());
  if (target == "Wstar")
    return document("Wstar", "special subdivision of W", special_subdivision(build_W().complex).child);
  if (target == "Ystar")
    return document("Ystar", "special subdivision of Y", special_subdivision(build_Y().complex).child);
  if (target == "cube-acute") return document("cube-acute", "assembled reference meshes", assemble_cube().mesh);
  if (target == "octa-acute")
    return document("octa-acute", "assembled reference meshes", assemble_octahedron().mesh);
  if (target == "ref-t0")
    return document("ref-t0", "reference table, regular tetrahedron", reconstruct(load_reference(ReferenceKind::T0Regular)));
  if (target == "ref-t1")
    return document("ref-t1", "reference table, corner tetrahedron", reconstruct(load_reference(ReferenceKind::T1Standard)));
  if (target == "icosa-cones")
    return document("icosa-cones", "icosahedron coned from its centre", build_platonic_cones(PlatonicSolid::Icosahedron));
  if (target == "dodeca-cones")
    return document("dodeca-cones", "barycentric subdivision of the dodecahedron",
                    build_platonic_cones(PlatonicSolid::Dodecahedron));
  throw std::invalid_argument("unknown target '" + target + "'");
}

std::vector<std::string> advertised_checks(const std::string& target) {
  if (target == "600cell" || target == "Wstar" || target == "Ystar") return {"rich", "flag", "no-square", "ds"};
  if (target == "x543" || target == "cube-acute" || target == "octa-acute" || target == "ref-t0" ||
      target == "ref-t1")
    return kChecks;
  if (target == "face-template") return {"flag", "ds"};
  if (target == "W" || target == "Y" || target == "icosa-cones" || target == "dodeca-cones")
    return {"geometric", "ds"};
  throw std::invalid_argument("unknown target '" + target + "'");
}

json verify(const MeshDocument& doc, const VerifyOptions& opts) {
  json report = json::object();
  for (const auto& c : opts.checks) {
    if (std::find(kChecks.begin(), kChecks.end(), c) == kChecks.end())
      throw std::invalid_argument("unknown check '" + c + "'");
    if (needs_embedding(c) && !doc.embedding)
      throw MeshIoError(MeshIoErrorKind::MissingEmbedding, "check '" + c + "' needs an embedding");
    if ((c == "acute" || c == "geometric") && (doc.complex.dim() != 3 || !doc.complex.is_pure()))
      throw MeshIoError(MeshIoErrorKind::Malformed, "check '" + c + "' needs a pure 3-complex");
  }
  for (const auto& c : opts.checks) {
    if (c == "acute") report[c] = check_acute(doc, opts);
    else if (c == "rich") report[c] = check_rich(doc.complex);
    else if (c == "flag") {
      const auto w = is_flag(doc.complex);
      report[c] = {{"pass", !w.has_value()}};
      if (w) report[c]["witness"] = *w;
    } else if (c == "no-square") {
      const auto w = find_empty_square(doc.complex);
      report[c] = {{"pass", !w.has_value()}};
      if (w) report[c]["witness"] = *w;
    } else if (c == "geometric") report[c] = check_geometric(doc);
    else if (c == "ds") report[c] = check_ds(doc.complex);
  }
  return report;
}

json stats(const MeshDocument& doc) {
  const auto& k = doc.complex;
  json s;
  s["f_vector"] = fvector_json(f_vector(k));
  s["euler"] = euler_characteristic(k);
  try {
    s["boundary_f_vector"] = fvector_json(boundary_complex(k).f_vector());
  } catch (const ComplexError&) {
    s["boundary_f_vector"] = nullptr;
  }
  if (doc.embedding && k.dim() == 3 && k.is_pure()) {
    std::vector<std::int64_t> bins(18, 0);
    double lo = 180.0, hi = 0.0;
    for (const auto& t : k.simplices(3)) {
      const auto& p = doc.embedding->points;
      for (double c : dihedral_cosines({p[t[0]], p[t[1]], p[t[2]], p[t[3]]})) {
        const double deg = std::acos(c) * 180.0 / M_PI;
        lo = std::min(lo, deg);
        hi = std::max(hi, deg);
        ++bins[std::min<std::size_t>(17, static_cast<std::size_t>(deg / 10.0))];
      }
    }
    s["angle_histogram"] = {{"bin_deg", 10}, {"counts", bins}};
    s["min_deg"] = lo;
    s["max_deg"] = hi;
  }
  return s;
}

namespace {

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_generate(const std::string& target, const std::string& ref, const std::string& out,
                 const GenerateOptions& opts) {
  if (!ref.empty()) {
    write_json(out, reference_json(ref == "t0" ? ReferenceKind::T0Regular : ReferenceKind::T1Standard));
    return kOk;
  }
  if (target.empty()) throw std::invalid_argument("generate needs a target or --ref");
  write_json(out, to_json(generate(target, opts)));
  return kOk;
}

int cmd_verify(const std::string& in, const std::string& out, const VerifyOptions& opts) {
  const json report = verify(read_document(in), opts);
  write_json(out, report);
  for (const auto& [name, r] : report.items())
    if (!r["pass"].get<bool>()) return kCheckFailed;
  return kOk;
}

int cmd_export(const std::string& in, const std::string& format, const std::string& out) {
  const MeshDocument doc = read_document(in);
  if (format == "json") {
    write_json(out, to_json(doc));
    return kOk;
  }
  std::ostringstream text;
  if (format == "vtk") {
    write_vtk(text, doc);
  } else {
    write_off(text, doc);
    if (doc.complex.dim() == 3 && !out.empty() && out != "-") {
      std::ostringstream ele;
      write_ele(ele, doc);
      write_text(std::filesystem::path(out).replace_extension(".ele").string(), ele.str());
    }
  }
  write_text(out, text.str());
  return kOk;
}

int cmd_optimize(FlattenConfig config, const GenerateOptions& scale, const std::string& out,
                 const std::string& trace_path) {
  if (config.step1_scale <= 0.0) config.step1_scale = step1_scale_interval(scale.scale_min, scale.scale_max).best;
  const FlattenResult res = run_flatten(config);
  write_text(trace_path, trace_csv(res.trace));
  if (!out.empty()) {
    MeshDocument doc;
    doc.complex = x543_template().complex;
    if (res.success) {
      doc.name = "flatten-t1";
      doc.provenance = "flattened Step-1 realisation, corner frame";
      doc.embedding = Embedding::from_floats(res.corner_frame_points);
    } else {
      std::ostringstream name;
      name << "flatten-stalled-t" << res.state.t;
      doc.name = name.str();
      doc.provenance = "best state before the stall, cube frame";
      doc.embedding = Embedding::from_floats(res.state.points);
    }
    write_document(out, doc);
  }
  if (!res.success) {
    std::cerr << "stalled at t = " << res.state.t << " (worst cosine " << res.state.worst_cosine << ")\n";
    return kStalled;
  }
  return kOk;
}

int cmd_check_fvector(const std::string& in, int dim, const std::string& out) {
  const MeshDocument doc = read_document(in);
  const DSReport d = dehn_sommerville(doc.complex, dim);
  json r{{"dehn_sommerville", {{"m", d.m}, {"f", fvector_json(d.f)}, {"f_boundary", fvector_json(d.f_boundary)},
                               {"residuals", d.residuals}, {"ok", d.ok()}}}};
  if (dim == 4) {
    const auto [c1, c2] = corollary_ds_4d(doc.complex);
    r["corollary_residuals"] = {c1, c2};
    const ObstructionReport o = richness_obstruction(doc.complex);
    r["obstruction"] = {{"f0", o.f0},         {"chi", o.chi},     {"lhs", o.lhs},
                        {"rhs", o.rhs},       {"slack", o.slack}, {"closed", o.closed},
                        {"closed_slack", o.closed_slack}, {"rich", o.rich()}, {"violates", o.violates()}};
    if (o.rich_witness) r["obstruction"]["rich_witness"] = witness_json(*o.rich_witness);
  }
  write_json(out, r);
  return d.ok() ? kOk : kCheckFailed;
}

}  // namespace

int run(int argc, const char* const* argv) {
  CLI::App app{"Acute triangulations of 3-polytopes and f-vector checks"};
  app.require_subcommand(1);

  std::string input, output, target, ref, checks = "acute,rich,flag,no-square,geometric,ds", format = "json",
                                          trace;
  double margin = kDefaultFloatMarginDeg;
  bool exact = false, use_float = false, angles = false;
  GenerateOptions gen;
  FlattenConfig config;
  int dim = 4;

  auto* g = app.add_subcommand("generate", "Write a mesh document");
  g->add_option("target", target, "Target")->check(CLI::IsMember(kTargets));
  g->add_option("--ref", ref, "Emit a reference table as {points, edges}")->check(CLI::IsMember({"t0", "t1"}));
  g->add_option("-o,--output", output, "Output path (stdout when omitted)");
  g->add_option("--scale-min", gen.scale_min, "Step-1 scale search, lower end");
  g->add_option("--scale-max", gen.scale_max, "Step-1 scale search, upper end");

  auto* v = app.add_subcommand("verify", "Run checks on a mesh document");
  v->add_option("-i,--input,input", input, "Mesh document")->required();
  v->add_option("--checks", checks, "Comma separated subset of " + [] {
    std::string s;
    for (const auto& c : kChecks) s += (s.empty() ? "" : ",") + c;
    return s;
  }());
  v->add_option("--margin-deg", margin, "Float-mode acuteness margin in degrees");
  auto* ex = v->add_flag("--exact", exact, "Exact predicates (integer or rational embeddings)");
  v->add_flag("--float", use_float, "Floating point predicates")->excludes(ex);
  v->add_flag("--angles", angles, "List every dihedral angle in the acute report");
  v->add_option("-o,--output", output, "Report path (stdout when omitted)");

  auto* st = app.add_subcommand("stats", "Counts and angle statistics");
  st->add_option("-i,--input,input", input, "Mesh document")->required();
  st->add_option("-o,--output", output, "Output path (stdout when omitted)");

  auto* e = app.add_subcommand("export", "Convert a mesh document");
  e->add_option("-i,--input,input", input, "Mesh document")->required();
  e->add_option("--format", format, "off, vtk or json")->check(CLI::IsMember({"off", "vtk", "json"}));
  e->add_option("-o,--output", output, "Output path (stdout when omitted); OFF also writes <stem>.ele");

  auto* o = app.add_subcommand("optimize", "Flatten the Step-1 realisation onto the corner tetrahedron");
  o->add_option("--n-steps", config.n_steps, "Interpolation substeps");
  o->add_option("--max-iters", config.correction_max_iters, "Correction iterations per substep");
  o->add_option("--margin-deg", config.acute_margin_deg, "Correction runs until angles are below 90 - margin");
  o->add_option("--step", config.correction_step, "Largest move as a fraction of the mean edge");
  o->add_option("--seed", config.seed, "Seed for tie-breaking moves");
  o->add_option("--scale-min", gen.scale_min, "Step-1 scale search, lower end");
  o->add_option("--scale-max", gen.scale_max, "Step-1 scale search, upper end");
  o->add_option("-o,--output", output, "Final mesh document");
  o->add_option("--trace", trace, "Trace CSV path (stdout when omitted)");

  auto* f = app.add_subcommand("check-fvector", "Dehn-Sommerville and richness inequality report");
  f->add_option("-i,--input,input", input, "Mesh document")->required();
  f->add_option("--dim", dim, "Dimension m of the manifold")->required();
  f->add_option("-o,--output", output, "Output path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& s) {
    return app.exit(s);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kBadInput;
  }

  try {
    if (g->parsed()) return cmd_generate(target, ref, output, gen);
    if (v->parsed()) {
      VerifyOptions opts;
      opts.checks = split(checks);
      opts.margin_deg = margin;
      opts.mode = exact ? AngleMode::Exact : (use_float ? AngleMode::Float : AngleMode::Auto);
      opts.per_tetrahedron = angles;
      return cmd_verify(input, output, opts);
    }
    if (st->parsed()) {
      write_json(output, stats(read_document(input)));
      return kOk;
    }
    if (e->parsed()) return cmd_export(input, format, output);
    if (o->parsed()) return cmd_optimize(config, gen, output, trace);
    if (f->parsed()) return cmd_check_fvector(input, dim, output);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kBadInput;
  }
  return kBadInput;
}

}  // namespace acute::cli

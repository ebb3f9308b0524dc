#include "acute/flatten.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "acute/isomorphism.hpp"

namespace acute {

namespace {

constexpr double kDeg = std::numbers::pi / 180.0;

std::vector<VertexId> boundary_ids() {
  std::vector<VertexId> out(X543::kBoundary);
  for (VertexId v = 0; v < X543::kBoundary; ++v) out[v] = v;
  return out;
}

double min_cosine(const SimplicialComplex& k, const std::vector<Vec3>& p) { return -worst_cosine(k, p); }

bool acute_float(const SimplicialComplex& k, const std::vector<Vec3>& p, double margin_deg) {
  try {
    return min_cosine(k, p) > std::sin(margin_deg * kDeg);
  } catch (const GeometryError&) {
    return false;
  }
}

// Solves the 3x3 system with columns c0, c1, c2 for rhs by Cramer's rule.
Vec3 solve3(const Vec3& c0, const Vec3& c1, const Vec3& c2, const Vec3& rhs) {
  const double det = dot(c0, cross(c1, c2));
  return {{dot(rhs, cross(c1, c2)) / det, dot(c0, cross(rhs, c2)) / det, dot(c0, cross(c1, rhs)) / det}};
}

// Affine map carrying the tetrahedron src onto dst.
struct Affine {
  std::array<Vec3, 4> src, dst;
  Vec3 operator()(const Vec3& x) const {
    const Vec3 w = solve3(src[1] - src[0], src[2] - src[0], src[3] - src[0], x - src[0]);
    return dst[0] + w[0] * (dst[1] - dst[0]) + w[1] * (dst[2] - dst[0]) + w[2] * (dst[3] - dst[0]);
  }
};

// Barycentric coordinates of x in the plane of triangle (a, b, c).
Vec3 barycentric(const Vec3& x, const Vec3& a, const Vec3& b, const Vec3& c) {
  const Vec3 n = cross(b - a, c - a);
  const double area = dot(n, n);
  const double wb = dot(cross(x - a, c - a), n) / area;
  const double wc = dot(cross(b - a, x - a), n) / area;
  return {{1.0 - wb - wc, wb, wc}};
}

Vec3 from_barycentric(const Vec3& w, const Vec3& a, const Vec3& b, const Vec3& c) {
  return w[0] * a + w[1] * b + w[2] * c;
}

double mean_edge(const SimplicialComplex& k, const std::vector<Vec3>& p) {
  double s = 0.0;
  for (const auto& e : k.simplices(1)) s += norm(p[e[1]] - p[e[0]]);
  return s / static_cast<double>(k.count(1));
}

std::vector<int> orientations(const SimplicialComplex& k, const std::vector<Vec3>& p) {
  std::vector<int> out;
  for (const auto& s : k.simplices(3)) {
    const double o = orientation(p[s[0]], p[s[1]], p[s[2]], p[s[3]]);
    out.push_back(o > 0 ? 1 : (o < 0 ? -1 : 0));
  }
  return out;
}

// Shell index (0 = nearest the removed cell) of each X543 interior vertex.
const std::vector<int>& interior_shells() {
  static const std::vector<int> shells = [] {
    const auto& cell = cell600_instance();
    const auto& x = x543_template();
    Vec4 c{};
    for (auto v : x.removed) c += cell.points[v];
    c = normalized(c);
    std::vector<double> height;
    for (VertexId t = X543::kBoundary; t < X543::kVertices; ++t) height.push_back(dot(cell.points[x.original[t]], c));
    std::vector<double> levels = height;
    std::sort(levels.begin(), levels.end(), std::greater<>());
    levels.erase(std::unique(levels.begin(), levels.end(), [](double a, double b) { return std::abs(a - b) < 1e-9; }),
                 levels.end());
    std::vector<int> out;
    for (double h : height)
      out.push_back(static_cast<int>(std::find_if(levels.begin(), levels.end(),
                                                  [&](double l) { return std::abs(l - h) < 1e-9; }) -
                                     levels.begin()));
    return out;
  }();
  return shells;
}

}  // namespace

// ---------------------------------------------------------------------------
// Step 1.

std::vector<Vec3> step1_projection() {
  const auto& cell = cell600_instance();
  const auto& x = x543_template();
  Vec4 c{};
  for (auto v : x.removed) c += cell.points[v];
  const StereographicProjection proj(c);
  std::vector<Vec3> out;
  for (auto o : x.original) out.push_back(proj(cell.points[o]));
  return out;
}

std::vector<Vec3> step1_embedding(double scale) {
  static const std::vector<Vec3> projected = step1_projection();
  const std::array<Vec3, 4> target{projected[0], projected[1], projected[2], projected[3]};
  const auto bd = boundary_ids();
  return radial_to_tetra_boundary(projected, bd, target, scale);
}

ScaleInterval step1_scale_interval(double lo, double hi, int samples, double margin_deg) {
  if (!(lo > 0.0 && hi > lo && samples >= 2))
    throw FlattenError(FlattenErrorKind::InvalidConfig, "bad scale search range");
  const auto& k = x543_template().complex;
  auto acute_at = [&](double s) { return acute_float(k, step1_embedding(s), margin_deg); };

  ScaleInterval r;
  int best = -1;
  double best_cos = -2.0;
  std::vector<double> grid(static_cast<std::size_t>(samples));
  for (int i = 0; i < samples; ++i) {
    grid[i] = lo + (hi - lo) * i / (samples - 1);
    try {
      const double c = min_cosine(k, step1_embedding(grid[i]));
      if (c > std::sin(margin_deg * kDeg) && c > best_cos) {
        best_cos = c;
        best = i;
      }
    } catch (const GeometryError&) {
    }
  }
  if (best < 0) throw FlattenError(FlattenErrorKind::NoAcuteScale, "no sampled Step-1 scale is acute");
  r.best = grid[best];
  r.best_max_angle_deg = 90.0 - std::asin(best_cos) / kDeg;

  auto bisect = [&](double inside, double outside) {
    for (int it = 0; it < 50; ++it) {
      const double mid = 0.5 * (inside + outside);
      (acute_at(mid) ? inside : outside) = mid;
    }
    return inside;
  };
  int i = best;
  while (i > 0 && acute_at(grid[i - 1])) --i;
  r.lo = i > 0 ? bisect(grid[i], grid[i - 1]) : grid[0];
  int j = best;
  while (j + 1 < samples && acute_at(grid[j + 1])) ++j;
  r.hi = j + 1 < samples ? bisect(grid[j], grid[j + 1]) : grid[samples - 1];
  return r;
}

// ---------------------------------------------------------------------------
// Roles.

std::string to_string(VertexRole role) {
  switch (role) {
    case VertexRole::A: return "A";
    case VertexRole::B: return "B";
    case VertexRole::C: return "C";
    case VertexRole::D: return "D";
    case VertexRole::E: return "E";
    case VertexRole::F: return "F";
    case VertexRole::InteriorOuter12: return "InteriorOuter12";
    case VertexRole::InteriorOuter16: return "InteriorOuter16";
    case VertexRole::InteriorCore: return "InteriorCore";
  }
  return "?";
}

std::size_t RoleMap::count(VertexRole r) const { return static_cast<std::size_t>(std::count(role.begin(), role.end(), r)); }

RoleMap classify_roles(const SimplicialComplex& k, const std::array<VertexId, 4>& corners) {
  const auto& x = x543_template();
  if (k.n_vertices() != X543::kVertices || f_vector(k) != f_vector(x.complex))
    throw FlattenError(FlattenErrorKind::NotX543, "f-vector differs from X543");
  std::vector<int> ck(k.n_vertices(), 0), cx(X543::kVertices, 0);
  for (int i = 0; i < 4; ++i) {
    if (corners[i] < 0 || corners[i] >= static_cast<VertexId>(k.n_vertices()) || ck[corners[i]] != 0)
      throw FlattenError(FlattenErrorKind::NotX543, "corners must be four distinct vertices");
    ck[corners[i]] = i + 1;
    cx[X543::corner(i)] = i + 1;
  }
  const auto iso = find_isomorphism(k, x.complex, ck, cx);
  if (!iso) throw FlattenError(FlattenErrorKind::NotX543, "no isomorphism to X543 with these corners");

  RoleMap r;
  r.apex = corners[0];
  r.base = {corners[1], corners[2], corners[3]};
  r.template_label = *iso;
  r.role.assign(k.n_vertices(), VertexRole::InteriorCore);
  r.carrier.assign(k.n_vertices(), -1);
  // Template corner 0 is A, template corner i + 1 is B_i.
  std::vector<VertexId> inverse(X543::kVertices);
  for (std::size_t v = 0; v < iso->size(); ++v) inverse[(*iso)[v]] = static_cast<VertexId>(v);
  r.role[corners[0]] = VertexRole::A;
  for (int i = 0; i < 3; ++i) {
    r.role[corners[i + 1]] = VertexRole::B;
    const VertexId c = inverse[X543::edge_vertex(0, i + 1)];
    r.role[c] = VertexRole::C;
    r.carrier[c] = i;
    const int j = (i + 1) % 3;
    const VertexId e = inverse[X543::edge_vertex(i + 1, j + 1)];
    r.role[e] = VertexRole::E;
    r.carrier[e] = i;
    // The face A B_i B_j is opposite the remaining base corner.
    const int opposite = 1 + (3 - i - j);
    for (auto f : X543::face_vertices(opposite)) {
      r.role[inverse[f]] = VertexRole::D;
      r.carrier[inverse[f]] = i;
    }
  }
  for (auto f : X543::face_vertices(0)) r.role[inverse[f]] = VertexRole::F;

  // Interior layers are the 600-cell shells around the removed cell: the
  // nearest interior shell (12 vertices) and the next two (12 + 4).
  const auto& layers = interior_shells();
  for (VertexId t = X543::kBoundary; t < X543::kVertices; ++t) {
    const int shell = layers[t - X543::kBoundary];
    r.role[inverse[t]] = shell == 0 ? VertexRole::InteriorOuter12
                         : shell <= 2 ? VertexRole::InteriorOuter16
                                      : VertexRole::InteriorCore;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Frame.

Vec3 FlattenFrame::base(int i) {
  static const std::array<Vec3, 3> b{{{{1.0, 0.0, 0.0}}, {{0.0, 0.0, 1.0}}, {{0.0, 1.0, 0.0}}}};
  return b[i];
}

Vec3 FlattenFrame::apex(double t) {
  const Vec3 g{{1.0 / 3, 1.0 / 3, 1.0 / 3}};
  const Vec3 a0{{1.0, 1.0, 1.0}};
  return g + (1.0 - 0.5 * t) * (a0 - g);
}

Vec3 FlattenFrame::touch_point(double t, int i) {
  const Vec3 a = apex(t), bi = base(i), bj = base((i + 1) % 3);
  const double d = 0.5 * (norm(bi - a) + norm(bj - a) - norm(bj - bi));
  return a + (d / norm(bi - a)) * (bi - a);
}

Vec3 FlattenFrame::to_corner_frame(const Vec3& p) {
  const double s = (p[0] + p[1] + p[2] - 1.0) / 3.0;
  return p - Vec3{{2 * s, 2 * s, 2 * s}};
}

std::vector<Vec3> to_cube_frame(const std::vector<Vec3>& step1) {
  Affine m;
  m.src = {step1[3], step1[0], step1[1], step1[2]};
  m.dst = {FlattenFrame::apex(0.0), FlattenFrame::base(0), FlattenFrame::base(1), FlattenFrame::base(2)};
  std::vector<Vec3> out;
  for (const auto& p : step1) out.push_back(m(p));
  return out;
}

// ---------------------------------------------------------------------------
// Steps 2 and 3.

void FlattenConfig::validate() const {
  if (n_steps < 1) throw FlattenError(FlattenErrorKind::InvalidConfig, "n_steps must be at least 1");
  if (!(correction_step > 0.0 && correction_step < 0.5))
    throw FlattenError(FlattenErrorKind::InvalidConfig, "correction_step must lie in (0, 0.5)");
  if (correction_max_iters < 0 || acute_margin_deg < 0.0 || penalty_margin_deg < acute_margin_deg)
    throw FlattenError(FlattenErrorKind::InvalidConfig, "bad correction limits");
}

void prescribe_positions(FlattenState& s, double t) {
  const auto& r = s.roles;
  const Vec3 a_old = FlattenFrame::apex(s.t), a_new = FlattenFrame::apex(t);
  for (std::size_t v = 0; v < s.points.size(); ++v) {
    const int c = r.carrier[v];
    switch (r.role[v]) {
      case VertexRole::A: s.points[v] = a_new; break;
      case VertexRole::C: s.points[v] = FlattenFrame::touch_point(t, c); break;
      case VertexRole::D: {
        const Vec3 bi = FlattenFrame::base(c), bj = FlattenFrame::base((c + 1) % 3);
        s.points[v] = from_barycentric(barycentric(s.points[v], a_old, bi, bj), a_new, bi, bj);
        break;
      }
      default: break;
    }
  }
  for (int i = 0; i < 3; ++i) s.points[r.base[i]] = FlattenFrame::base(i);
  s.t = t;
}

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

double penalty(const SimplicialComplex& k, const std::vector<Vec3>& p, double c_thr) {
  double sum = 0.0;
  for (const auto& s : k.simplices(3)) {
    const auto c = dihedral_cosines({p[s[0]], p[s[1]], p[s[2]], p[s[3]]});
    for (double x : c)
      if (x < c_thr) sum += (c_thr - x) * (c_thr - x);
  }
  return sum;
}

double tet_penalty(const std::array<Vec3, 4>& q, double c_thr) {
  double sum = 0.0;
  for (double x : dihedral_cosines(q))
    if (x < c_thr) sum += (c_thr - x) * (c_thr - x);
  return sum;
}

// Gradient of the penalty by central differences over penalised tetrahedra.
std::vector<Vec3> penalty_gradient(const SimplicialComplex& k, const std::vector<Vec3>& p, double c_thr, double h) {
  std::vector<Vec3> g(p.size());
  for (const auto& s : k.simplices(3)) {
    std::array<Vec3, 4> q{p[s[0]], p[s[1]], p[s[2]], p[s[3]]};
    if (tet_penalty(q, c_thr) == 0.0) continue;
    for (int i = 0; i < 4; ++i)
      for (int d = 0; d < 3; ++d) {
        const double x = q[i][d];
        q[i][d] = x + h;
        const double up = tet_penalty(q, c_thr);
        q[i][d] = x - h;
        const double down = tet_penalty(q, c_thr);
        q[i][d] = x;
        g[s[i]][d] += (up - down) / (2 * h);
      }
  }
  return g;
}

// Restricts a raw move to each vertex's constraint set.
std::vector<Vec3> project_move(const FlattenState& s, const std::vector<Vec3>& raw) {
  const auto& r = s.roles;
  std::vector<Vec3> out(raw.size());
  Vec3 core{};
  std::size_t n_core = 0;
  for (std::size_t v = 0; v < raw.size(); ++v) {
    switch (r.role[v]) {
      case VertexRole::D: {
        const int c = r.carrier[v];
        const Vec3 a = FlattenFrame::apex(s.t), bi = FlattenFrame::base(c), bj = FlattenFrame::base((c + 1) % 3);
        const Vec3 n = normalized(cross(bi - a, bj - a));
        out[v] = raw[v] - dot(raw[v], n) * n;
        break;
      }
      case VertexRole::F: {
        const Vec3 n{{1 / kSqrt3, 1 / kSqrt3, 1 / kSqrt3}};
        out[v] = raw[v] - dot(raw[v], n) * n;
        break;
      }
      case VertexRole::InteriorOuter12:
      case VertexRole::InteriorOuter16: out[v] = raw[v]; break;
      case VertexRole::InteriorCore:
        core += raw[v];
        ++n_core;
        break;
      default: break;
    }
  }
  Vec3 centre{};
  for (std::size_t v = 0; v < raw.size(); ++v)
    if (r.role[v] == VertexRole::InteriorCore) centre += s.points[v];
  if (n_core > 0) centre = (1.0 / n_core) * centre;
  // The core block may translate and scale about its centroid.
  double sigma = 0.0;
  for (std::size_t v = 0; v < raw.size(); ++v)
      if (r.role[v] == VertexRole::InteriorCore) sigma += dot(raw[v], s.points[v] - centre);
  for (std::size_t v = 0; v < raw.size(); ++v)
    if (r.role[v] == VertexRole::InteriorCore) out[v] = core + sigma * (s.points[v] - centre);
  return out;
}

// Steepest descent direction of the worst cosine: minus the smallest element
// (in the metric of the constraint projection) of the convex hull of the
// gradients of the dihedral terms within `eps` of the worst.
std::vector<Vec3> minimax_direction(const SimplicialComplex& k, const FlattenState& s, double eps, double h) {
  const auto& p = s.points;
  const auto& tets = k.simplices(3);
  double lowest = 1.0;
  std::vector<std::array<double, 6>> cosines(tets.size());
  for (std::size_t t = 0; t < tets.size(); ++t) {
    const auto& q = tets[t];
    cosines[t] = dihedral_cosines({p[q[0]], p[q[1]], p[q[2]], p[q[3]]});
    for (double c : cosines[t]) lowest = std::min(lowest, c);
  }
  std::vector<std::vector<Vec3>> grads, projected;
  for (std::size_t t = 0; t < tets.size(); ++t)
    for (int e = 0; e < 6; ++e) {
      if (cosines[t][e] > lowest + eps) continue;
      const auto& q = tets[t];
      std::array<Vec3, 4> x{p[q[0]], p[q[1]], p[q[2]], p[q[3]]};
      std::vector<Vec3> g(p.size());
      for (int i = 0; i < 4; ++i)
        for (int d = 0; d < 3; ++d) {
          const double x0 = x[i][d];
          x[i][d] = x0 + h;
          const double up = dihedral_cosines(x)[e];
          x[i][d] = x0 - h;
          const double down = dihedral_cosines(x)[e];
          x[i][d] = x0;
          g[q[i]][d] -= (up - down) / (2 * h);
        }
      projected.push_back(project_move(s, g));
      grads.push_back(std::move(g));
    }
  const std::size_t m = grads.size();
  std::vector<std::vector<double>> gram(m, std::vector<double>(m, 0.0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) {
      double sum = 0.0;
      for (std::size_t v = 0; v < p.size(); ++v) sum += dot(grads[i][v], projected[j][v]);
      gram[i][j] = gram[j][i] = sum;
    }
  // Frank-Wolfe with exact line search on the simplex.
  std::vector<double> lambda(m, 1.0 / static_cast<double>(m));
  for (int it = 0; it < 200; ++it) {
    std::vector<double> gl(m, 0.0);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) gl[i] += gram[i][j] * lambda[j];
    const std::size_t best = static_cast<std::size_t>(std::min_element(gl.begin(), gl.end()) - gl.begin());
    double ll = 0.0;
    for (std::size_t i = 0; i < m; ++i) ll += lambda[i] * gl[i];
    // Along lambda + gamma (e_best - lambda).
    const double slope = gl[best] - ll;
    const double curv = gram[best][best] - 2 * gl[best] + ll;
    if (slope >= -1e-15 * std::max(ll, 1e-300) || curv <= 0.0) break;
    const double gamma = std::min(1.0, -slope / curv);
    for (auto& l : lambda) l *= 1.0 - gamma;
    lambda[best] += gamma;
  }
  std::vector<Vec3> dir(p.size());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t v = 0; v < p.size(); ++v) dir[v] -= lambda[i] * projected[i][v];
  return dir;
}

struct Evaluation {
  bool valid = false;
  double penalty = 0.0;
  double worst = 0.0;
};

Evaluation evaluate(const SimplicialComplex& k, const std::vector<Vec3>& p, const std::vector<int>& orient,
                    double c_thr) {
  Evaluation e;
  if (orientations(k, p) != orient) return e;
  try {
    e.penalty = penalty(k, p, c_thr);
    e.worst = worst_cosine(k, p);
  } catch (const GeometryError&) {
    return e;
  }
  e.valid = true;
  return e;
}

}  // namespace

CorrectionResult correct_angles(const SimplicialComplex& k, FlattenState& state, const FlattenConfig& config) {
  config.validate();
  CorrectionResult res;
  const double c_stop = std::sin(config.acute_margin_deg * kDeg);
  const double c_thr = std::sin(config.penalty_margin_deg * kDeg);
  const std::vector<int> orient = orientations(k, state.points);
  Evaluation cur = evaluate(k, state.points, orient, c_thr);
  if (!cur.valid) return res;
  state.worst_cosine = cur.worst;
  std::mt19937_64 rng(config.seed);
  std::normal_distribution<double> gauss;
  const double edge = mean_edge(k, state.points);

  while (-cur.worst <= c_stop && res.iterations < config.correction_max_iters) {
    ++res.iterations;
    bool accepted = false;
    std::vector<Vec3> dir;
    for (int attempt = 0; attempt < 4 && !accepted; ++attempt) {
      if (attempt < 2) {
        // Worst-angle descent over a band of near-worst terms, then a narrower one.
        const double eps = attempt == 0 ? 3e-3 : 1e-4;
        dir = minimax_direction(k, state, eps, 1e-7 * edge);
      } else if (attempt == 2) {
        dir = project_move(state, penalty_gradient(k, state.points, c_thr, 1e-7 * edge));
        for (auto& d : dir) d = -d;
      } else {
        // Seeded random direction as a tie-breaker when descent fails.
        std::vector<Vec3> raw(state.points.size());
        for (auto& d : raw) d = {{gauss(rng), gauss(rng), gauss(rng)}};
        dir = project_move(state, raw);
      }
      double longest = 0.0;
      for (const auto& d : dir) longest = std::max(longest, norm(d));
      if (longest == 0.0) continue;
      double alpha = config.correction_step * edge / longest;
      for (int halving = 0; halving <= 20; ++halving, alpha *= 0.5) {
        std::vector<Vec3> trial = state.points;
        for (std::size_t v = 0; v < trial.size(); ++v) trial[v] += alpha * dir[v];
        const Evaluation e = evaluate(k, trial, orient, c_thr);
        if (e.valid && e.worst <= cur.worst && (e.worst < cur.worst || e.penalty < cur.penalty)) {
          state.points = std::move(trial);
          cur = e;
          accepted = true;
          break;
        }
      }
    }
    if (!accepted) break;
    res.accepted_worst.push_back(cur.worst);
  }
  state.worst_cosine = cur.worst;
  res.converged = -cur.worst > c_stop;
  return res;
}

FlattenState initial_state(const FlattenConfig& config) {
  double scale = config.step1_scale;
  if (scale <= 0.0) scale = step1_scale_interval().best;
  FlattenState s;
  s.t = 0.0;
  s.points = to_cube_frame(step1_embedding(scale));
  s.roles = classify_roles(x543_template().complex, {X543::corner(3), X543::corner(0), X543::corner(1), X543::corner(2)});
  s.worst_cosine = worst_cosine(x543_template().complex, s.points);
  return s;
}

FlattenResult run_flatten(const FlattenConfig& config) {
  config.validate();
  const auto& k = x543_template().complex;
  FlattenResult out;
  FlattenState s = initial_state(config);
  auto correction = correct_angles(k, s, config);
  out.trace.push_back({0.0, s.worst_cosine, correction.iterations});
  out.corrections.push_back(correction);
  if (!correction.converged) {
    out.state = std::move(s);
    return out;
  }
  const auto& roles = s.roles;
  for (int step = 1; step <= config.n_steps; ++step) {
    const double t = static_cast<double>(step) / config.n_steps;
    std::array<Vec3, 4> old_frame{FlattenFrame::apex(s.t), FlattenFrame::base(0), FlattenFrame::base(1),
                                  FlattenFrame::base(2)};
    const std::vector<Vec3> before = s.points;
    prescribe_positions(s, t);

    // Interior vertices follow the boundary as one block.
    std::vector<VertexId> bd, in;
    for (VertexId v = 0; v < static_cast<VertexId>(k.n_vertices()); ++v)
      (roles.role[v] <= VertexRole::F ? bd : in).push_back(v);
    if (config.interior == InteriorTransform::Affine) {
      Affine m{old_frame, {FlattenFrame::apex(t), FlattenFrame::base(0), FlattenFrame::base(1), FlattenFrame::base(2)}};
      for (auto v : in) s.points[v] = m(before[v]);
    } else {
      Vec3 pbar{}, qbar{};
      for (auto v : bd) {
        pbar += before[v];
        qbar += s.points[v];
      }
      pbar = (1.0 / bd.size()) * pbar;
      qbar = (1.0 / bd.size()) * qbar;
      double num = 0.0, den = 0.0;
      for (auto v : bd) {
        num += dot(before[v] - pbar, s.points[v] - qbar);
        den += dot(before[v] - pbar, before[v] - pbar);
      }
      const double scale = num / den;
      for (auto v : in) s.points[v] = qbar + scale * (before[v] - pbar);
    }

    correction = correct_angles(k, s, config);
    out.trace.push_back({t, s.worst_cosine, correction.iterations});
    out.corrections.push_back(correction);
    if (!correction.converged) {
      out.state = std::move(s);
      return out;
    }
  }
  out.success = true;
  for (const auto& p : s.points) out.corner_frame_points.push_back(FlattenFrame::to_corner_frame(p));
  out.state = std::move(s);
  return out;
}

Step3Result step3_adjust(const std::vector<Vec3>& t0, const std::array<Vec3, 3>& base_face_points, double lo,
                         double hi, int samples) {
  if (t0.size() != static_cast<std::size_t>(X543::kVertices) || samples < 1 || !(hi >= lo) || !(lo > 0.0))
    throw FlattenError(FlattenErrorKind::InvalidConfig, "bad Step-3 input");
  const auto& k = x543_template().complex;
  std::vector<Vec3> p = t0;
  // Barycentric coordinates of the base-face vertices on B_1 B_2 B_3 (X543 corners 0, 1, 2).
  std::array<Vec3, 3> w;
  for (int m = 0; m < 3; ++m)
    w[m] = barycentric(base_face_points[m], FlattenFrame::base(0), FlattenFrame::base(1), FlattenFrame::base(2));
  for (int c = 0; c < 4; ++c) {
    std::array<int, 3> order{};
    for (int i = 0, n = 0; i < 4; ++i)
      if (i != c) order[n++] = i;
    const auto roles = face_template_embedding(c, order);
    for (int m = 0; m < 3; ++m)
      p[roles[6 + m]] = from_barycentric(w[m], t0[order[0]], t0[order[1]], t0[order[2]]);
  }
  Vec3 g{};
  for (int i = 0; i < 4; ++i) g += t0[i];
  g = 0.25 * g;

  Step3Result best;
  double best_cos = -2.0;
  for (int i = 0; i < samples; ++i) {
    const double s = samples == 1 ? lo : lo + (hi - lo) * i / (samples - 1);
    std::vector<Vec3> q = p;
    for (VertexId v = X543::kBoundary; v < X543::kVertices; ++v) q[v] = g + s * (p[v] - g);
    if (orientations(k, q) != orientations(k, t0)) continue;
    double c;
    try {
      c = min_cosine(k, q);
    } catch (const GeometryError&) {
      continue;
    }
    if (c > best_cos) {
      best_cos = c;
      best = {std::move(q), s};
    }
  }
  if (best_cos <= std::sin(kDefaultFloatMarginDeg * kDeg))
    throw FlattenError(FlattenErrorKind::NoAcuteScale, "no interior scale in the search range is acute");
  return best;
}

}  // namespace acute

#include "acute/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

namespace acute {

using boost::multiprecision::cpp_int;
using Int128 = __int128;

std::string to_string(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::Integer: return "int";
    case ScalarKind::Rational: return "rational";
    case ScalarKind::Float: return "float";
  }
  return "float";
}

Embedding Embedding::from_integers(std::vector<IVec3> pts) {
  Embedding e;
  e.kind = ScalarKind::Integer;
  e.points.reserve(pts.size());
  for (const auto& p : pts) e.points.push_back(to_float(p));
  e.exact = std::move(pts);
  return e;
}

Embedding Embedding::from_floats(std::vector<Vec3> pts) {
  Embedding e;
  e.kind = ScalarKind::Float;
  e.points = std::move(pts);
  return e;
}

double orientation(const Vec3& a, const Vec3& b, const Vec3& c, const Vec3& d) {
  return dot(b - a, cross(c - a, d - a));
}

namespace {

double max_edge(const std::array<Vec3, 4>& p) {
  double m = 0.0;
  for (auto [i, j] : kTetEdges) m = std::max(m, norm(p[j] - p[i]));
  return m;
}

template <typename T>
using V3 = VecN<T, 3>;

template <typename T>
V3<T> lift(const IVec3& p, const IVec3& origin) {
  return {{T(p[0] - origin[0]), T(p[1] - origin[1]), T(p[2] - origin[2])}};
}

template <typename T>
int sgn(const T& x) {
  return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

std::int64_t max_abs_diff(std::span<const IVec3> pts) {
  std::int64_t m = 0;
  for (int c = 0; c < 3; ++c) {
    auto [lo, hi] = std::minmax_element(pts.begin(), pts.end(),
                                        [c](const IVec3& a, const IVec3& b) { return a[c] < b[c]; });
    m = std::max(m, (*hi)[c] - (*lo)[c]);
  }
  return m;
}

// Numerator S and the two Gram terms of the dihedral cosine along edge (i, j).
template <typename T>
void dihedral_terms(const std::array<V3<T>, 4>& p, int edge, T& s, T& gu, T& gw) {
  const auto [i, j] = kTetEdges[edge];
  int k = -1, l = -1;
  for (int m = 0; m < 4; ++m)
    if (m != i && m != j) (k < 0 ? k : l) = m;
  const V3<T> e = p[j] - p[i], a = p[k] - p[i], b = p[l] - p[i];
  const T ee = dot(e, e), ae = dot(a, e), be = dot(b, e);
  s = ee * dot(a, b) - ae * be;
  gu = ee * dot(a, a) - ae * ae;
  gw = ee * dot(b, b) - be * be;
}

template <typename T>
std::array<V3<T>, 4> lift_tet(const std::array<IVec3, 4>& p) {
  return {lift<T>(p[0], p[0]), lift<T>(p[1], p[0]), lift<T>(p[2], p[0]), lift<T>(p[3], p[0])};
}

template <typename T>
int orient_t(const V3<T>& a, const V3<T>& b, const V3<T>& c, const V3<T>& d) {
  return sgn(T(dot(b - a, cross(c - a, d - a))));
}

template <typename T>
std::array<int, 6> signs_t(const std::array<IVec3, 4>& pts) {
  auto p = lift_tet<T>(pts);
  if (orient_t(p[0], p[1], p[2], p[3]) == 0)
    throw GeometryError(GeometryErrorKind::DegenerateTetrahedron, "flat tetrahedron");
  std::array<int, 6> out{};
  for (int e = 0; e < 6; ++e) {
    T s, gu, gw;
    dihedral_terms(p, e, s, gu, gw);
    out[e] = sgn(s);
  }
  return out;
}

// Dihedral products have degree four in coordinate differences.
constexpr std::int64_t kInt128DihedralBound = std::int64_t{1} << 28;

}  // namespace

std::array<double, 6> dihedral_cosines(const std::array<Vec3, 4>& p) {
  const double scale = max_edge(p);
  const double vol = orientation(p[0], p[1], p[2], p[3]);
  if (!(scale > 0.0) || std::abs(vol) <= 1e-12 * scale * scale * scale)
    throw GeometryError(GeometryErrorKind::DegenerateTetrahedron, "flat tetrahedron");
  std::array<double, 6> out{};
  for (int edge = 0; edge < 6; ++edge) {
    const auto [i, j] = kTetEdges[edge];
    int k = -1, l = -1;
    for (int m = 0; m < 4; ++m)
      if (m != i && m != j) (k < 0 ? k : l) = m;
    const Vec3 e = p[j] - p[i];
    const double ee = dot(e, e);
    const Vec3 u = (p[k] - p[i]) - (dot(p[k] - p[i], e) / ee) * e;
    const Vec3 w = (p[l] - p[i]) - (dot(p[l] - p[i], e) / ee) * e;
    out[edge] = std::clamp(dot(u, w) / (norm(u) * norm(w)), -1.0, 1.0);
  }
  return out;
}

std::array<int, 6> dihedral_signs_exact(const std::array<IVec3, 4>& p) {
  if (max_abs_diff(p) <= kInt128DihedralBound) return signs_t<Int128>(p);
  return signs_t<cpp_int>(p);
}

std::array<ExactDihedral, 6> dihedral_cosines_exact(const std::array<IVec3, 4>& pts) {
  auto p = lift_tet<cpp_int>(pts);
  if (orient_t(p[0], p[1], p[2], p[3]) == 0)
    throw GeometryError(GeometryErrorKind::DegenerateTetrahedron, "flat tetrahedron");
  std::array<ExactDihedral, 6> out;
  for (int e = 0; e < 6; ++e) {
    cpp_int s, gu, gw;
    dihedral_terms(p, e, s, gu, gw);
    out[e].sign = sgn(s);
    out[e].cos_squared = Rational(s * s, gu * gw);
  }
  return out;
}

int orientation_exact(const IVec3& a, const IVec3& b, const IVec3& c, const IVec3& d) {
  const std::array<IVec3, 4> pts{a, b, c, d};
  auto p = lift_tet<Int128>(pts);
  if (max_abs_diff(pts) > (std::int64_t{1} << 40)) {
    auto q = lift_tet<cpp_int>(pts);
    return orient_t(q[0], q[1], q[2], q[3]);
  }
  return orient_t(p[0], p[1], p[2], p[3]);
}

AngleReport verify_acute(const SimplicialComplex& k, const Embedding& emb, double margin_deg,
                         AngleMode mode) {
  if (k.dim() != 3 || !k.is_pure())
    throw GeometryError(GeometryErrorKind::InvalidArgument, "verify_acute needs a pure 3-complex");
  if (emb.size() != k.n_vertices())
    throw GeometryError(GeometryErrorKind::InvalidArgument, "embedding does not cover the complex");
  bool exact = mode == AngleMode::Exact || (mode == AngleMode::Auto && emb.is_exact());
  if (exact && !emb.is_exact())
    throw GeometryError(GeometryErrorKind::InvalidArgument, "exact mode needs an exact embedding");
  if (exact && margin_deg != 0.0)
    throw GeometryError(GeometryErrorKind::InvalidArgument, "exact mode takes no margin");
  if (margin_deg < 0.0) throw GeometryError(GeometryErrorKind::InvalidArgument, "negative margin");

  AngleReport report;
  report.exact = exact;
  report.margin_deg = margin_deg;
  const double cos_limit = std::sin(margin_deg * std::numbers::pi / 180.0);
  double min_cos = 1.0, max_cos = -1.0;
  const auto& tets = k.simplices(3);
  report.entries.reserve(tets.size() * 6);
  for (std::size_t t = 0; t < tets.size(); ++t) {
    const auto& s = tets[t];
    std::array<Vec3, 4> p{emb.points[s[0]], emb.points[s[1]], emb.points[s[2]], emb.points[s[3]]};
    std::array<int, 6> signs{};
    std::array<double, 6> cosines{};
    try {
      if (exact) {
        signs = dihedral_signs_exact({emb.exact[s[0]], emb.exact[s[1]], emb.exact[s[2]], emb.exact[s[3]]});
        // Float values from the exact numerators are accurate far beyond the
        // reporting precision.
        std::array<Vec3, 4> q;
        for (int i = 0; i < 4; ++i) q[i] = to_float(emb.exact[s[i]] - emb.exact[s[0]]);
        cosines = dihedral_cosines(q);
      } else {
        cosines = dihedral_cosines(p);
      }
    } catch (const GeometryError&) {
      throw GeometryError(GeometryErrorKind::DegenerateTetrahedron,
                          "degenerate tetrahedron " + std::to_string(t) + " " + to_string(s), t);
    }
    for (std::uint8_t e = 0; e < 6; ++e) {
      DihedralEntry entry;
      entry.tet = static_cast<std::uint32_t>(t);
      entry.edge = e;
      entry.cos = cosines[e];
      entry.exact_sign = exact ? signs[e] : 0;
      entry.acute = exact ? signs[e] > 0 : cosines[e] > cos_limit;
      if (!entry.acute) report.failures.push_back(report.entries.size());
      min_cos = std::min(min_cos, cosines[e]);
      max_cos = std::max(max_cos, cosines[e]);
      report.entries.push_back(entry);
    }
  }
  report.min_angle_deg = std::acos(max_cos) * 180.0 / std::numbers::pi;
  report.max_angle_deg = std::acos(min_cos) * 180.0 / std::numbers::pi;
  return report;
}

double worst_cosine(const SimplicialComplex& k, std::span<const Vec3> points) {
  double worst = -1.0;
  for (const auto& s : k.simplices(3)) {
    auto c = dihedral_cosines({points[s[0]], points[s[1]], points[s[2]], points[s[3]]});
    for (double x : c) worst = std::max(worst, -x);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Pairwise tetrahedron intersection.

namespace {

// Sign with an absolute tolerance; zero tolerance for exact types.
template <typename T>
struct Signer {
  T tol{};
  int operator()(const T& x) const { return x > tol ? 1 : (x < -tol ? -1 : 0); }
};

struct PairResult {
  bool ok;
  const char* reason;
};

// Closed-cone membership: is r in cone(g0, g1, g2)?
template <typename T>
bool in_cone3(const V3<T>& r, const std::array<V3<T>, 3>& g, const Signer<T>& sg) {
  const int s = sg(T(dot(g[0], cross(g[1], g[2]))));
  const int l0 = sg(T(dot(r, cross(g[1], g[2])))) * s;
  const int l1 = sg(T(dot(g[0], cross(r, g[2])))) * s;
  const int l2 = sg(T(dot(g[0], cross(g[1], r)))) * s;
  return l0 >= 0 && l1 >= 0 && l2 >= 0;
}

// Closed planar cone membership for r lying in the plane of g0, g1.
template <typename T>
bool in_cone2(const V3<T>& r, const V3<T>& g0, const V3<T>& g1, const V3<T>& normal, const Signer<T>& sg) {
  return sg(T(dot(cross(g0, r), normal))) >= 0 && sg(T(dot(cross(r, g1), normal))) >= 0;
}

// a: vertices of tetrahedron A, b: of B; shared[i] = index in b of a[i] or -1.
template <typename T>
PairResult test_pair(const std::array<V3<T>, 4>& a, const std::array<V3<T>, 4>& b,
                     const std::array<int, 4>& shared_in_b, const Signer<T>& sg) {
  std::vector<int> sa, sb, oa, ob;
  std::array<bool, 4> b_shared{};
  for (int i = 0; i < 4; ++i) {
    if (shared_in_b[i] >= 0) {
      sa.push_back(i);
      sb.push_back(shared_in_b[i]);
      b_shared[shared_in_b[i]] = true;
    } else {
      oa.push_back(i);
    }
  }
  for (int j = 0; j < 4; ++j)
    if (!b_shared[j]) ob.push_back(j);

  if (sa.size() == 3) {
    const int s1 = sg(T(dot(a[sa[1]] - a[sa[0]], cross(a[sa[2]] - a[sa[0]], a[oa[0]] - a[sa[0]]))));
    const int s2 = sg(T(dot(a[sa[1]] - a[sa[0]], cross(a[sa[2]] - a[sa[0]], b[ob[0]] - a[sa[0]]))));
    if (s1 * s2 < 0) return {true, ""};
    return {false, "tetrahedra sharing a face lie on the same side of it"};
  }
  if (sa.size() == 2) {
    const V3<T> p = a[sa[0]];
    const V3<T> d = a[sa[1]] - p;
    auto cr = [&](const V3<T>& x, const V3<T>& y) { return sg(T(dot(d, cross(x - p, y - p)))); };
    auto in_wedge = [&](const V3<T>& x, const V3<T>& g0, const V3<T>& g1) {
      const int s = cr(g0, g1);
      return cr(g0, x) * s >= 0 && cr(x, g1) * s >= 0;
    };
    for (int j : ob)
      if (in_wedge(b[j], a[oa[0]], a[oa[1]])) return {false, "tetrahedra sharing an edge overlap"};
    for (int i : oa)
      if (in_wedge(a[i], b[ob[0]], b[ob[1]])) return {false, "tetrahedra sharing an edge overlap"};
    return {true, ""};
  }
  if (sa.size() == 1) {
    const V3<T> p = a[sa[0]];
    std::array<V3<T>, 3> ga{a[oa[0]] - p, a[oa[1]] - p, a[oa[2]] - p};
    std::array<V3<T>, 3> gb{b[ob[0]] - p, b[ob[1]] - p, b[ob[2]] - p};
    for (const auto& g : gb)
      if (in_cone3(g, ga, sg)) return {false, "tetrahedra sharing a vertex overlap"};
    for (const auto& g : ga)
      if (in_cone3(g, gb, sg)) return {false, "tetrahedra sharing a vertex overlap"};
    for (int i = 0; i < 3; ++i)
      for (int i2 = i + 1; i2 < 3; ++i2) {
        const V3<T> na = cross(ga[i], ga[i2]);
        for (int j = 0; j < 3; ++j)
          for (int j2 = j + 1; j2 < 3; ++j2) {
            const V3<T> nb = cross(gb[j], gb[j2]);
            const V3<T> r = cross(na, nb);
            if (sg(r[0]) == 0 && sg(r[1]) == 0 && sg(r[2]) == 0) continue;
            for (int flip = 0; flip < 2; ++flip) {
              const V3<T> rr = flip ? V3<T>{} - r : r;
              if (in_cone2(rr, ga[i], ga[i2], na, sg) && in_cone2(rr, gb[j], gb[j2], nb, sg))
                return {false, "tetrahedra sharing a vertex overlap"};
            }
          }
      }
    return {true, ""};
  }
  // Disjoint vertex sets: look for a strictly separating axis.
  std::vector<V3<T>> axes;
  for (const auto* t : {&a, &b})
    for (int f = 0; f < 4; ++f) {
      std::array<int, 3> idx{};
      for (int m = 0, w = 0; m < 4; ++m)
        if (m != f) idx[w++] = m;
      axes.push_back(cross((*t)[idx[1]] - (*t)[idx[0]], (*t)[idx[2]] - (*t)[idx[0]]));
    }
  for (auto [i, j] : kTetEdges)
    for (auto [k, l] : kTetEdges) axes.push_back(cross(a[j] - a[i], b[l] - b[k]));
  for (const auto& n : axes) {
    if (sg(n[0]) == 0 && sg(n[1]) == 0 && sg(n[2]) == 0) continue;
    T amin = dot(n, a[0]), amax = amin, bmin = dot(n, b[0]), bmax = bmin;
    for (int m = 1; m < 4; ++m) {
      const T x = dot(n, a[m]), y = dot(n, b[m]);
      if (x < amin) amin = x;
      if (x > amax) amax = x;
      if (y < bmin) bmin = y;
      if (y > bmax) bmax = y;
    }
    if (sg(T(bmin - amax)) > 0 || sg(T(amin - bmax)) > 0) return {true, ""};
  }
  return {false, "disjoint tetrahedra intersect"};
}

template <typename T>
std::array<V3<T>, 4> lift_points(const std::array<IVec3, 4>& p, const IVec3& origin) {
  return {lift<T>(p[0], origin), lift<T>(p[1], origin), lift<T>(p[2], origin), lift<T>(p[3], origin)};
}

// Degree of the vertex-sharing tests is seven in coordinate differences.
constexpr std::int64_t kInt128PairBound = std::int64_t{1} << 16;

}  // namespace

GeometricCheck verify_geometric_complex(const SimplicialComplex& k, const Embedding& emb) {
  if (k.dim() != 3 || !k.is_pure())
    throw GeometryError(GeometryErrorKind::InvalidArgument, "geometric check needs a pure 3-complex");
  if (emb.size() != k.n_vertices())
    throw GeometryError(GeometryErrorKind::InvalidArgument, "embedding does not cover the complex");
  GeometricCheck result;
  const auto& tets = k.simplices(3);
  const std::size_t n = tets.size();

  // Orientation sanity first: a flat tetrahedron is its own witness.
  for (std::size_t t = 0; t < n; ++t) {
    const auto& s = tets[t];
    const bool flat = emb.is_exact()
        ? orientation_exact(emb.exact[s[0]], emb.exact[s[1]], emb.exact[s[2]], emb.exact[s[3]]) == 0
        : std::abs(orientation(emb.points[s[0]], emb.points[s[1]], emb.points[s[2]], emb.points[s[3]])) <=
              1e-12 * std::pow(max_edge({emb.points[s[0]], emb.points[s[1]], emb.points[s[2]], emb.points[s[3]]}), 3);
    if (flat) {
      result.ok = false;
      result.witness = std::make_pair(t, t);
      result.reason = "degenerate tetrahedron";
      return result;
    }
  }

  // Bounding boxes (float view is exact enough for pruning when widened).
  struct Box {
    Vec3 lo, hi;
  };
  std::vector<Box> boxes(n);
  double extent = 0.0;
  for (std::size_t t = 0; t < n; ++t) {
    Box b{emb.points[tets[t][0]], emb.points[tets[t][0]]};
    for (auto v : tets[t])
      for (int c = 0; c < 3; ++c) {
        b.lo[c] = std::min(b.lo[c], emb.points[v][c]);
        b.hi[c] = std::max(b.hi[c], emb.points[v][c]);
      }
    boxes[t] = b;
    for (int c = 0; c < 3; ++c) extent = std::max(extent, b.hi[c] - b.lo[c]);
  }
  const double pad = 1e-9 * std::max(extent, std::numeric_limits<double>::min());
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto x, auto y) {
    return std::tie(boxes[x].lo[0], x) < std::tie(boxes[y].lo[0], y);
  });

  for (std::size_t oi = 0; oi < n; ++oi) {
    const std::size_t ta = order[oi];
    for (std::size_t oj = oi + 1; oj < n; ++oj) {
      const std::size_t tb = order[oj];
      if (boxes[tb].lo[0] > boxes[ta].hi[0] + pad) break;
      bool overlap = true;
      for (int c = 1; c < 3 && overlap; ++c)
        overlap = boxes[tb].lo[c] <= boxes[ta].hi[c] + pad && boxes[ta].lo[c] <= boxes[tb].hi[c] + pad;
      if (!overlap) continue;
      const auto& sa = tets[ta];
      const auto& sb = tets[tb];
      std::array<int, 4> shared{-1, -1, -1, -1};
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
          if (sa[i] == sb[j]) shared[i] = j;
      ++result.pairs_tested;
      PairResult r{true, ""};
      if (emb.is_exact()) {
        std::array<IVec3, 4> pa, pb;
        for (int i = 0; i < 4; ++i) {
          pa[i] = emb.exact[sa[i]];
          pb[i] = emb.exact[sb[i]];
        }
        std::array<IVec3, 8> all{pa[0], pa[1], pa[2], pa[3], pb[0], pb[1], pb[2], pb[3]};
        IVec3 origin = all[0];
        for (const auto& p : all)
          for (int c = 0; c < 3; ++c) origin[c] = std::min(origin[c], p[c]);
        if (max_abs_diff(all) <= kInt128PairBound) {
          r = test_pair<Int128>(lift_points<Int128>(pa, origin), lift_points<Int128>(pb, origin), shared,
                                Signer<Int128>{0});
        } else {
          r = test_pair<cpp_int>(lift_points<cpp_int>(pa, origin), lift_points<cpp_int>(pb, origin), shared,
                                 Signer<cpp_int>{0});
        }
      } else {
        // Normalise the pair to a unit box so one absolute tolerance fits every degree.
        Vec3 lo = emb.points[sa[0]];
        double span = 0.0;
        for (const auto* s : {&sa, &sb})
          for (auto v : *s)
            for (int c = 0; c < 3; ++c) lo[c] = std::min(lo[c], emb.points[v][c]);
        for (const auto* s : {&sa, &sb})
          for (auto v : *s)
            for (int c = 0; c < 3; ++c) span = std::max(span, emb.points[v][c] - lo[c]);
        std::array<Vec3, 4> pa, pb;
        for (int i = 0; i < 4; ++i) {
          pa[i] = (1.0 / span) * (emb.points[sa[i]] - lo);
          pb[i] = (1.0 / span) * (emb.points[sb[i]] - lo);
        }
        r = test_pair<double>(pa, pb, shared, Signer<double>{1e-10});
      }
      if (!r.ok) {
        result.ok = false;
        result.witness = std::make_pair(std::min(ta, tb), std::max(ta, tb));
        result.reason = r.reason;
        return result;
      }
    }
  }
  return result;
}

// ---------------------------------------------------------------------------

StereographicProjection::StereographicProjection(const Vec4& center) : pole_(normalized(center)) {
  // Gram-Schmidt of the standard basis against the pole; keep the three
  // longest residuals in index order.
  std::array<Vec4, 4> residual;
  std::array<double, 4> len{};
  for (int i = 0; i < 4; ++i) {
    Vec4 e{};
    e[i] = 1.0;
    residual[i] = e - dot(e, pole_) * pole_;
    len[i] = norm(residual[i]);
  }
  int skip = static_cast<int>(std::min_element(len.begin(), len.end()) - len.begin());
  int w = 0;
  for (int i = 0; i < 4; ++i) {
    if (i == skip) continue;
    Vec4 b = residual[i];
    for (int j = 0; j < w; ++j) b = b - dot(b, basis_[j]) * basis_[j];
    basis_[w++] = normalized(b);
  }
}

Vec3 StereographicProjection::operator()(const Vec4& p) const {
  const double pc = dot(p, pole_);
  if (norm(p - pole_) < 1e-12)
    throw GeometryError(GeometryErrorKind::ProjectionPole, "point coincides with the projection pole");
  // Line from the pole through p meets the hyperplane x.pole = 0 at pole + s (p - pole).
  const double s = 1.0 / (1.0 - pc);
  const Vec4 x = pole_ + s * (p - pole_);
  return {{dot(x, basis_[0]), dot(x, basis_[1]), dot(x, basis_[2])}};
}

Vec3 stereographic_project(const Vec4& p, const Vec4& center) {
  return StereographicProjection(center)(p);
}

Vec3 ray_exit_point(const Vec3& direction, const std::array<Vec3, 4>& tet) {
  if (norm(direction) == 0.0) throw GeometryError(GeometryErrorKind::RayMiss, "ray from the origin has no direction");
  double best = std::numeric_limits<double>::infinity();
  for (int f = 0; f < 4; ++f) {
    std::array<Vec3, 3> tri;
    for (int m = 0, w = 0; m < 4; ++m)
      if (m != f) tri[w++] = tet[m];
    Vec3 nrm = cross(tri[1] - tri[0], tri[2] - tri[0]);
    if (dot(nrm, tet[f] - tri[0]) > 0) nrm = -nrm;  // outward
    const double h = dot(nrm, tri[0]);
    const double du = dot(nrm, direction);
    if (h <= 0.0)
      throw GeometryError(GeometryErrorKind::InvalidArgument, "target tetrahedron does not contain the origin");
    if (du > 0.0) best = std::min(best, h / du);
  }
  if (!std::isfinite(best)) throw GeometryError(GeometryErrorKind::RayMiss, "ray misses the tetrahedron boundary");
  return best * direction;
}

std::vector<Vec3> radial_to_tetra_boundary(std::span<const Vec3> points,
                                           std::span<const VertexId> boundary_vertices,
                                           const std::array<Vec3, 4>& target, double scale) {
  if (!(scale > 0.0)) throw GeometryError(GeometryErrorKind::InvalidArgument, "scale must be positive");
  std::array<Vec3, 4> scaled;
  for (int i = 0; i < 4; ++i) scaled[i] = scale * target[i];
  std::vector<Vec3> out(points.begin(), points.end());
  for (auto v : boundary_vertices) out[v] = ray_exit_point(points[v], scaled);
  return out;
}

}  // namespace acute

#include "acute/fvector.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace acute {

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_pure(const SimplicialComplex& k, int m) {
  if (k.empty() || k.dim() != m || !k.is_pure())
    throw ComplexError(ComplexErrorKind::NotPure, "expected a pure " + std::to_string(m) + "-dimensional complex");
}

FVector padded(FVector f, int m) {
  f.resize(static_cast<std::size_t>(m) + 1, 0);
  return f;
}

}  // namespace

bool DSReport::ok() const {
  return std::all_of(residuals.begin(), residuals.end(), [](std::int64_t r) { return r == 0; });
}

DSReport dehn_sommerville(const SimplicialComplex& k, int m) {
  require_pure(k, m);
  DSReport r;
  r.m = m;
  r.f = f_vector(k);
  r.f_boundary = padded(boundary_complex(k).f_vector(), m);
  for (int kk = 0; kk <= m; ++kk) {
    std::int64_t sum = 0;
    for (int i = kk; i <= m; ++i) sum += ((i + m) % 2 == 0 ? 1 : -1) * binomial(i + 1, kk + 1) * r.f[i];
    r.residuals.push_back(r.f[kk] - r.f_boundary[kk] - sum);
  }
  return r;
}

std::pair<std::int64_t, std::int64_t> corollary_ds_4d(const SimplicialComplex& k) {
  require_pure(k, 4);
  const FVector f = f_vector(k);
  const FVector fb = padded(boundary_complex(k).f_vector(), 4);
  return {(2 * f[1] - fb[1]) - (3 * f[2] - 6 * f[3] + 10 * f[4]), -fb[2] - (-4 * f[3] + 10 * f[4])};
}

ObstructionReport richness_obstruction(const SimplicialComplex& k) {
  require_pure(k, 4);
  ObstructionReport r;
  const FVector fb = padded(boundary_complex(k).f_vector(), 4);
  r.f0 = static_cast<std::int64_t>(k.n_vertices());
  r.chi = euler_characteristic(k);
  r.lhs = 2 * r.f0;
  r.rhs = 2 * r.chi + fb[1];
  r.slack = r.rhs - r.lhs;
  r.closed = fb[0] == 0;
  r.closed_slack = r.chi - r.f0;
  r.rich_witness = is_rich(k);
  return r;
}

FlagCount flag_count_inequality(const SimplicialComplex& k) {
  require_pure(k, 4);
  if (auto w = is_rich(k))
    throw FVectorError(FVectorErrorKind::NotRich, to_string(w->simplex) + " has a link of length " +
                                                      std::to_string(w->link_length));
  const FVector f = f_vector(k);
  const FVector fb = padded(boundary_complex(k).f_vector(), 4);
  FlagCount c;
  c.flags = 10 * f[4];
  c.bound = 5 * (f[2] - fb[2]);
  for (std::size_t t = 0; t < k.count(2); ++t)
    for (auto tet : k.cofacets(2, t)) c.enumerated += static_cast<std::int64_t>(k.cofacets(3, tet).size());
  // Each 4-simplex is reached once through each (triangle, tetrahedron) pair: two tetrahedra per triangle.
  c.enumerated /= 2;
  return c;
}

std::optional<Simplex> is_full_subcomplex(const SimplicialComplex& x, std::span<const Simplex> y) {
  std::set<Simplex> faces;
  std::vector<bool> in(x.n_vertices(), false);
  for (auto s : y) {
    normalize_simplex(s);
    if (!x.contains(s)) throw ComplexError(ComplexErrorKind::SimplexNotFound, to_string(s) + " is not in X");
    for (auto v : s) in[v] = true;
    const std::size_t n = s.size();
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
      Simplex f;
      for (std::size_t i = 0; i < n; ++i)
        if (mask >> i & 1) f.push_back(s[i]);
      faces.insert(std::move(f));
    }
  }
  for (int d = 0; d <= x.dim(); ++d)
    for (const auto& s : x.simplices(d))
      if (std::all_of(s.begin(), s.end(), [&](VertexId v) { return in[v]; }) && !faces.count(s)) return s;
  return std::nullopt;
}

Neighborhood simplicial_neighborhood(const SimplicialComplex& x, std::span<const Simplex> y,
                                     std::span<const Vec3> points) {
  if (auto w = is_full_subcomplex(x, y))
    throw FVectorError(FVectorErrorKind::NotFull, to_string(*w) + " spans Y-vertices but is not in Y");
  std::vector<bool> in(x.n_vertices(), false);
  for (const auto& s : y)
    for (auto v : s) in[v] = true;
  auto in_y = [&](const Simplex& s) { return std::all_of(s.begin(), s.end(), [&](VertexId v) { return in[v]; }); };
  auto meets_y = [&](const Simplex& s) { return std::any_of(s.begin(), s.end(), [&](VertexId v) { return in[v]; }); };

  Neighborhood n;
  std::map<std::pair<int, std::size_t>, VertexId> id_of;  // (dim, index in X) -> N vertex
  for (VertexId v = 0; v < static_cast<VertexId>(x.n_vertices()); ++v)
    if (in[v]) {
      id_of[{0, static_cast<std::size_t>(v)}] = static_cast<VertexId>(n.source.size());
      n.source.push_back({v});
    }
  n.n_core = n.source.size();
  for (int d = 0; d <= x.dim(); ++d)
    for (std::size_t i = 0; i < x.count(d); ++i) {
      const auto& s = x.simplices(d)[i];
      if (!in_y(s) && meets_y(s)) {
        id_of[{d, i}] = static_cast<VertexId>(n.source.size());
        n.source.push_back(s);
      }
    }

  // Every simplex of N is a face of one whose chain climbs one dimension at a
  // time up to a maximal simplex of X.
  std::set<Simplex> out;
  std::vector<VertexId> chain;
  std::function<void(const Simplex&, int, std::size_t)> climb = [&](const Simplex& core, int d, std::size_t idx) {
    chain.push_back(id_of.at({d, idx}));
    const auto& up = d < x.dim() ? x.cofacets(d, idx) : std::vector<std::uint32_t>{};
    if (up.empty()) {
      Simplex s = core;
      s.insert(s.end(), chain.begin(), chain.end());
      std::sort(s.begin(), s.end());
      out.insert(std::move(s));
    }
    for (auto j : up) climb(core, d + 1, j);
    chain.pop_back();
  };
  for (int d = 0; d <= x.dim(); ++d)
    for (std::size_t i = 0; i < x.count(d); ++i) {
      const auto& tau = x.simplices(d)[i];
      if (in_y(tau) || !meets_y(tau)) continue;
      // sigma ranges over the faces of tau lying in Y (including the empty one);
      // Y is full, so these are the subsets of tau's Y-vertices.
      std::vector<VertexId> yv;
      for (auto v : tau)
        if (in[v]) yv.push_back(v);
      for (std::uint32_t mask = 0; mask < (1u << yv.size()); ++mask) {
        Simplex core;
        for (std::size_t b = 0; b < yv.size(); ++b)
          if (mask >> b & 1) core.push_back(id_of.at({0, static_cast<std::size_t>(yv[b])}));
        climb(core, d, i);
      }
    }
  // Y itself (it is a subcomplex of N even where no chain reaches it).
  for (auto s : y) {
    normalize_simplex(s);
    for (auto& v : s) v = id_of.at({0, static_cast<std::size_t>(v)});
    out.insert(std::move(s));
  }
  n.complex = SimplicialComplex::from_maximal({out.begin(), out.end()});

  if (!points.empty()) {
    for (const auto& s : n.source) {
      Vec3 c{};
      for (auto v : s) c += points[v];
      n.realization.push_back((1.0 / static_cast<double>(s.size())) * c);
    }
  }
  return n;
}

std::optional<RichnessWitness> core_richness(const Neighborhood& n) {
  const auto& k = n.complex;
  const int d = k.dim() - 2;
  if (d < 0) return std::nullopt;
  const auto core = static_cast<VertexId>(n.n_core);
  for (const auto& s : interior_simplices(k, d)) {
    if (s.back() >= core) continue;
    const Link l = link(k, s);
    if (l.complex.n_vertices() < 5) return RichnessWitness{s, l.complex.n_vertices()};
  }
  return std::nullopt;
}

std::vector<VertexId> interior_vertices(const SimplicialComplex& k) {
  const Boundary b = boundary_complex(k);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < static_cast<VertexId>(k.n_vertices()); ++v)
    if (!b.contains({v})) out.push_back(v);
  return out;
}

CombCheck comb_corollary_check(const SimplicialComplex& m) {
  require_pure(m, 4);
  const FVector fb = padded(boundary_complex(m).f_vector(), 4);
  CombCheck c;
  c.lhs = 2 * static_cast<std::int64_t>(m.n_vertices());
  c.rhs = 2 * (1 + fb[2]) + fb[1];
  c.applicable = fb[0] > 0;
  return c;
}

IsoperimetricSample isoperimetric_sample(const SimplicialComplex& x, std::span<const VertexId> omega) {
  IsoperimetricSample s;
  std::vector<bool> in(x.n_vertices(), false);
  for (auto v : omega) in[v] = true;
  s.omega = static_cast<std::size_t>(std::count(in.begin(), in.end(), true));
  std::set<VertexId> outer;
  for (auto v : omega)
    for (auto w : x.neighbors(v))
      if (!in[w]) outer.insert(w);
  s.vertex_boundary = outer.size();
  const Link y = induced_subcomplex(x, omega);
  std::vector<Simplex> gens;
  for (auto t : y.complex.maximal_simplices()) {
    for (auto& v : t) v = y.original[v];
    gens.push_back(std::move(t));
  }
  const Neighborhood n = simplicial_neighborhood(x, gens);
  s.neighborhood_f = f_vector(n.complex);
  s.neighborhood_boundary_f = boundary_complex(n.complex).f_vector();
  return s;
}

}  // namespace acute

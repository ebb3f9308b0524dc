#include "acute/complex.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace acute {

std::string to_string(const Simplex& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
  os << '}';
  return os.str();
}

bool normalize_simplex(Simplex& s) {
  std::sort(s.begin(), s.end());
  return std::adjacent_find(s.begin(), s.end()) != s.end();
}

namespace {

// All non-empty subsets of s, appended per dimension.
void append_faces(const Simplex& s, std::vector<std::vector<Simplex>>& out) {
  const std::size_t n = s.size();
  const std::uint32_t full = (1u << n);
  for (std::uint32_t mask = 1; mask < full; ++mask) {
    Simplex face;
    face.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) face.push_back(s[i]);
    out[face.size() - 1].push_back(std::move(face));
  }
}

}  // namespace

SimplicialComplex SimplicialComplex::from_maximal(std::vector<Simplex> simplices) {
  if (simplices.empty()) throw ComplexError(ComplexErrorKind::EmptyInput, "no simplices given");
  std::size_t top = 0;
  VertexId max_id = -1;
  for (auto& s : simplices) {
    if (s.empty()) throw ComplexError(ComplexErrorKind::EmptyInput, "empty simplex in input");
    if (normalize_simplex(s))
      throw ComplexError(ComplexErrorKind::DegenerateSimplex, "repeated vertex in " + to_string(s));
    if (s.front() < 0)
      throw ComplexError(ComplexErrorKind::NonDenseVertices, "negative vertex id");
    if (s.size() > 20)
      throw ComplexError(ComplexErrorKind::DegenerateSimplex, "simplex dimension too large");
    top = std::max(top, s.size());
    max_id = std::max(max_id, s.back());
  }
  {
    std::vector<const Simplex*> order(simplices.size());
    for (std::size_t i = 0; i < simplices.size(); ++i) order[i] = &simplices[i];
    std::sort(order.begin(), order.end(), [](auto* a, auto* b) { return *a < *b; });
    for (std::size_t i = 1; i < order.size(); ++i)
      if (*order[i] == *order[i - 1])
        throw ComplexError(ComplexErrorKind::DuplicateSimplex,
                           "simplex " + to_string(*order[i]) + " given twice");
  }

  SimplicialComplex k;
  k.simplices_.assign(top, {});
  for (const auto& s : simplices) append_faces(s, k.simplices_);
  for (auto& level : k.simplices_) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  if (k.simplices_[0].size() != static_cast<std::size_t>(max_id) + 1)
    throw ComplexError(ComplexErrorKind::NonDenseVertices,
                       "vertex ids do not cover 0.." + std::to_string(max_id));
  k.build_indices();
  return k;
}

void SimplicialComplex::build_indices() {
  cofacets_.assign(simplices_.size(), {});
  for (std::size_t d = 0; d < simplices_.size(); ++d) cofacets_[d].assign(simplices_[d].size(), {});
  for (std::size_t d = 1; d < simplices_.size(); ++d) {
    const auto& lower = simplices_[d - 1];
    for (std::size_t j = 0; j < simplices_[d].size(); ++j) {
      const Simplex& s = simplices_[d][j];
      Simplex facet(s.size() - 1);
      for (std::size_t drop = 0; drop < s.size(); ++drop) {
        std::size_t w = 0;
        for (std::size_t i = 0; i < s.size(); ++i)
          if (i != drop) facet[w++] = s[i];
        auto it = std::lower_bound(lower.begin(), lower.end(), facet);
        cofacets_[d - 1][static_cast<std::size_t>(it - lower.begin())].push_back(
            static_cast<std::uint32_t>(j));
      }
    }
  }
  adjacency_.assign(n_vertices(), {});
  if (simplices_.size() > 1) {
    for (const auto& e : simplices_[1]) {
      adjacency_[e[0]].push_back(e[1]);
      adjacency_[e[1]].push_back(e[0]);
    }
    for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  }
}

const std::vector<Simplex>& SimplicialComplex::simplices(int d) const {
  static const std::vector<Simplex> none;
  if (d < 0 || d > dim()) return none;
  return simplices_[d];
}

std::optional<std::size_t> SimplicialComplex::index_of(const Simplex& s) const {
  const int d = static_cast<int>(s.size()) - 1;
  if (d < 0 || d > dim()) return std::nullopt;
  const auto& level = simplices_[d];
  auto it = std::lower_bound(level.begin(), level.end(), s);
  if (it == level.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - level.begin());
}

bool SimplicialComplex::adjacent(VertexId a, VertexId b) const {
  const auto& nb = adjacency_[a];
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Simplex> SimplicialComplex::maximal_simplices() const {
  std::vector<Simplex> out;
  for (int d = 0; d <= dim(); ++d)
    for (std::size_t i = 0; i < simplices_[d].size(); ++i)
      if (d == dim() || cofacets_[d][i].empty()) out.push_back(simplices_[d][i]);
  std::sort(out.begin(), out.end());
  return out;
}

bool SimplicialComplex::is_pure() const {
  for (int d = 0; d < dim(); ++d)
    for (const auto& cf : cofacets_[d])
      if (cf.empty()) return false;
  return true;
}

SimplicialComplex build_complex(std::vector<Simplex> maximal_simplices) {
  return SimplicialComplex::from_maximal(std::move(maximal_simplices));
}

std::vector<VertexId> compact_vertices(std::vector<Simplex>& simplices) {
  std::vector<VertexId> used;
  for (const auto& s : simplices) used.insert(used.end(), s.begin(), s.end());
  std::sort(used.begin(), used.end());
  used.erase(std::unique(used.begin(), used.end()), used.end());
  for (auto& s : simplices) {
    for (auto& v : s)
      v = static_cast<VertexId>(std::lower_bound(used.begin(), used.end(), v) - used.begin());
    std::sort(s.begin(), s.end());
  }
  return used;
}

FVector f_vector(const SimplicialComplex& k) {
  FVector f;
  for (int d = 0; d <= k.dim(); ++d) f.push_back(static_cast<std::int64_t>(k.count(d)));
  return f;
}

std::int64_t euler_characteristic(const FVector& f) {
  std::int64_t chi = 0;
  for (std::size_t i = 0; i < f.size(); ++i) chi += (i % 2 == 0 ? 1 : -1) * f[i];
  return chi;
}

std::int64_t euler_characteristic(const SimplicialComplex& k) {
  return euler_characteristic(f_vector(k));
}

namespace {

// Every simplex containing sigma (sigma itself included), as (dim, index).
std::vector<std::pair<int, std::size_t>> cofaces(const SimplicialComplex& k, int d, std::size_t idx) {
  std::vector<std::pair<int, std::size_t>> out{{d, idx}};
  std::vector<std::size_t> frontier{idx};
  for (int level = d; level < k.dim() && !frontier.empty(); ++level) {
    std::vector<std::size_t> next;
    for (auto i : frontier)
      for (auto j : k.cofacets(level, i)) next.push_back(j);
    std::sort(next.begin(), next.end());
    next.erase(std::unique(next.begin(), next.end()), next.end());
    for (auto j : next) out.emplace_back(level + 1, j);
    frontier = std::move(next);
  }
  return out;
}

Simplex set_difference(const Simplex& a, const Simplex& b) {
  Simplex out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

Link dense_complex(std::vector<Simplex> simplices) {
  Link result;
  if (simplices.empty()) return result;
  result.original = compact_vertices(simplices);
  std::sort(simplices.begin(), simplices.end());
  simplices.erase(std::unique(simplices.begin(), simplices.end()), simplices.end());
  result.complex = SimplicialComplex::from_maximal(std::move(simplices));
  return result;
}

}  // namespace

Link link(const SimplicialComplex& k, const Simplex& sigma_in) {
  Simplex sigma = sigma_in;
  normalize_simplex(sigma);
  auto idx = k.index_of(sigma);
  if (!idx) throw ComplexError(ComplexErrorKind::SimplexNotFound, to_string(sigma) + " not in complex");
  const int d = static_cast<int>(sigma.size()) - 1;
  std::vector<Simplex> parts;
  for (auto [cd, ci] : cofaces(k, d, *idx)) {
    if (cd == d) continue;
    parts.push_back(set_difference(k.simplices(cd)[ci], sigma));
  }
  return dense_complex(std::move(parts));
}

FVector Boundary::f_vector() const {
  FVector f;
  for (const auto& level : simplices) f.push_back(static_cast<std::int64_t>(level.size()));
  while (!f.empty() && f.back() == 0) f.pop_back();
  return f;
}

std::vector<VertexId> Boundary::vertices() const {
  std::vector<VertexId> out;
  if (simplices.empty()) return out;
  for (const auto& s : simplices[0]) out.push_back(s[0]);
  return out;
}

bool Boundary::contains(const Simplex& s) const {
  const std::size_t d = s.size() - 1;
  if (s.empty() || d >= simplices.size()) return false;
  return std::binary_search(simplices[d].begin(), simplices[d].end(), s);
}

Link Boundary::as_complex() const {
  if (simplices.empty()) return {};
  return dense_complex(simplices.back());
}

Boundary boundary_complex(const SimplicialComplex& k) {
  Boundary b;
  const int n = k.dim();
  if (n <= 0) return b;
  if (!k.is_pure()) throw ComplexError(ComplexErrorKind::NotPure, "complex is not pure");
  std::vector<Simplex> facets;
  const auto& codim1 = k.simplices(n - 1);
  for (std::size_t i = 0; i < codim1.size(); ++i) {
    const auto c = k.cofacets(n - 1, i).size();
    if (c >= 3)
      throw ComplexError(ComplexErrorKind::NonPseudomanifold,
                         to_string(codim1[i]) + " lies in " + std::to_string(c) + " top simplices");
    if (c == 1) facets.push_back(codim1[i]);
  }
  if (facets.empty()) return b;
  b.simplices.assign(static_cast<std::size_t>(n), {});
  for (const auto& f : facets) append_faces(f, b.simplices);
  for (auto& level : b.simplices) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  return b;
}

std::vector<Simplex> interior_simplices(const SimplicialComplex& k, int d) {
  const Boundary b = boundary_complex(k);
  std::vector<Simplex> out;
  for (const auto& s : k.simplices(d))
    if (!b.contains(s)) out.push_back(s);
  return out;
}

std::optional<Simplex> is_flag(const SimplicialComplex& k) {
  // A clique that is not a simplex contains a minimal one: a non-simplex all of
  // whose facets are simplices. Grow candidates from simplices one vertex at a time.
  for (int d = 1; d <= k.dim(); ++d) {
    for (const auto& s : k.simplices(d)) {
      // common neighbours of all vertices of s, greater than s.back()
      std::vector<VertexId> common;
      const auto& first = k.neighbors(s[0]);
      for (auto w : first) {
        if (w <= s.back()) continue;
        bool all = true;
        for (std::size_t i = 1; i < s.size() && all; ++i) all = k.adjacent(s[i], w);
        if (all) common.push_back(w);
      }
      for (auto w : common) {
        Simplex cand = s;
        cand.push_back(w);
        if (k.contains(cand)) continue;
        bool facets_present = true;
        for (std::size_t drop = 0; drop + 1 < cand.size() && facets_present; ++drop) {
          Simplex f;
          for (std::size_t i = 0; i < cand.size(); ++i)
            if (i != drop) f.push_back(cand[i]);
          facets_present = k.contains(f);
        }
        if (facets_present) return cand;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::vector<VertexId>> find_empty_square(const SimplicialComplex& k) {
  const auto n = static_cast<VertexId>(k.n_vertices());
  for (VertexId a = 0; a < n; ++a) {
    const auto& na = k.neighbors(a);
    for (std::size_t i = 0; i < na.size(); ++i) {
      for (std::size_t j = i + 1; j < na.size(); ++j) {
        const VertexId b = na[i], d = na[j];
        if (k.adjacent(b, d)) continue;
        const auto& nb = k.neighbors(b);
        const auto& nd = k.neighbors(d);
        std::vector<VertexId> common;
        std::set_intersection(nb.begin(), nb.end(), nd.begin(), nd.end(), std::back_inserter(common));
        for (auto c : common)
          if (c != a && !k.adjacent(a, c)) return std::vector<VertexId>{a, b, c, d};
      }
    }
  }
  return std::nullopt;
}

namespace {

// Length of the link cycle of a codimension-two simplex, or nullopt if the
// link graph is not a single cycle.
std::optional<std::size_t> codim2_link_cycle(const SimplicialComplex& k, std::size_t idx) {
  const int n = k.dim();
  const Simplex& sigma = k.simplices(n - 2)[idx];
  std::vector<VertexId> verts;
  for (auto c : k.cofacets(n - 2, idx)) {
    auto rest = set_difference(k.simplices(n - 1)[c], sigma);
    verts.push_back(rest[0]);
  }
  std::sort(verts.begin(), verts.end());
  std::vector<std::vector<std::size_t>> adj(verts.size());
  std::set<std::uint32_t> tops;
  for (auto c : k.cofacets(n - 2, idx))
    for (auto t : k.cofacets(n - 1, c)) tops.insert(t);
  for (auto t : tops) {
    auto rest = set_difference(k.simplices(n)[t], sigma);
    auto a = static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), rest[0]) - verts.begin());
    auto b = static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), rest[1]) - verts.begin());
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  if (verts.size() < 3) return std::nullopt;
  for (const auto& a : adj)
    if (a.size() != 2) return std::nullopt;
  std::vector<bool> seen(verts.size(), false);
  std::size_t prev = verts.size(), cur = 0, steps = 0;
  while (!seen[cur]) {
    seen[cur] = true;
    ++steps;
    std::size_t next = adj[cur][0] != prev ? adj[cur][0] : adj[cur][1];
    prev = cur;
    cur = next;
  }
  if (steps != verts.size()) return std::nullopt;
  return steps;
}

}  // namespace

std::optional<RichnessWitness> is_rich(const SimplicialComplex& k) {
  const int n = k.dim();
  if (n < 2) throw ComplexError(ComplexErrorKind::NotPure, "richness needs dimension >= 2");
  const Boundary b = boundary_complex(k);
  std::optional<RichnessWitness> witness;
  const auto& codim2 = k.simplices(n - 2);
  for (std::size_t i = 0; i < codim2.size(); ++i) {
    if (b.contains(codim2[i])) continue;
    auto len = codim2_link_cycle(k, i);
    if (!len)
      throw ComplexError(ComplexErrorKind::BadLink,
                         "link of interior simplex " + to_string(codim2[i]) + " is not a cycle");
    if (*len < 5 && !witness) witness = RichnessWitness{codim2[i], *len};
  }
  return witness;
}

SimplicialComplex complex_from_edges(std::size_t n_vertices,
                                     std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<std::vector<VertexId>> adj(n_vertices);
  std::vector<Simplex> out;
  for (VertexId v = 0; v < static_cast<VertexId>(n_vertices); ++v) out.push_back({v});
  for (auto [a, b] : edges) {
    if (a == b) throw ComplexError(ComplexErrorKind::DegenerateSimplex, "loop edge");
    if (a < 0 || b < 0 || static_cast<std::size_t>(std::max(a, b)) >= n_vertices)
      throw ComplexError(ComplexErrorKind::NonDenseVertices, "edge endpoint out of range");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw ComplexError(ComplexErrorKind::DuplicateSimplex, "edge listed twice");
  }
  auto is_adj = [&](VertexId a, VertexId b) { return std::binary_search(adj[a].begin(), adj[a].end(), b); };
  auto higher_common = [&](const Simplex& s) {
    std::vector<VertexId> r;
    for (auto w : adj[s[0]]) {
      if (w <= s.back()) continue;
      bool all = true;
      for (std::size_t i = 1; i < s.size() && all; ++i) all = is_adj(s[i], w);
      if (all) r.push_back(w);
    }
    return r;
  };
  std::vector<Simplex> level;
  for (VertexId a = 0; a < static_cast<VertexId>(n_vertices); ++a)
    for (auto b : adj[a])
      if (b > a) level.push_back({a, b});
  for (int size = 2; !level.empty(); ++size) {
    out.insert(out.end(), level.begin(), level.end());
    std::vector<Simplex> next;
    for (const auto& s : level)
      for (auto w : higher_common(s)) {
        Simplex c = s;
        c.push_back(w);
        next.push_back(std::move(c));
      }
    if (size == 4 && !next.empty())
      throw ComplexError(ComplexErrorKind::CliqueTooLarge, "5-clique " + to_string(next.front()));
    level = std::move(next);
  }
  return SimplicialComplex::from_maximal(std::move(out));
}

SimplicialComplex relabel(const SimplicialComplex& k, std::span<const VertexId> new_id_of) {
  std::vector<Simplex> out;
  for (auto s : k.maximal_simplices()) {
    for (auto& v : s) v = new_id_of[v];
    out.push_back(std::move(s));
  }
  return SimplicialComplex::from_maximal(std::move(out));
}

Link induced_subcomplex(const SimplicialComplex& k, std::span<const VertexId> keep) {
  std::vector<bool> in(k.n_vertices(), false);
  for (auto v : keep) in[v] = true;
  std::vector<Simplex> parts;
  for (int d = k.dim(); d >= 0; --d)
    for (const auto& s : k.simplices(d))
      if (std::all_of(s.begin(), s.end(), [&](VertexId v) { return in[v]; })) parts.push_back(s);
  return dense_complex(std::move(parts));
}

SimplicialComplex cone(const SimplicialComplex& k) {
  const auto apex = static_cast<VertexId>(k.n_vertices());
  std::vector<Simplex> out;
  for (auto s : k.maximal_simplices()) {
    s.push_back(apex);
    out.push_back(std::move(s));
  }
  return SimplicialComplex::from_maximal(std::move(out));
}

SimplicialComplex simplex_complex(int n) {
  Simplex s(static_cast<std::size_t>(n) + 1);
  std::iota(s.begin(), s.end(), 0);
  return SimplicialComplex::from_maximal({s});
}

SimplicialComplex simplex_boundary_complex(int n) {
  std::vector<Simplex> out;
  for (int drop = 0; drop <= n; ++drop) {
    Simplex s;
    for (int v = 0; v <= n; ++v)
      if (v != drop) s.push_back(v);
    out.push_back(std::move(s));
  }
  return SimplicialComplex::from_maximal(std::move(out));
}

bool is_connected(const SimplicialComplex& k) {
  const std::size_t n = k.n_vertices();
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::queue<VertexId> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto w : k.neighbors(v))
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        q.push(w);
      }
  }
  return count == n;
}

bool satisfies_manifold_link_conditions(const SimplicialComplex& k) {
  const int n = k.dim();
  if (n < 1 || !k.is_pure()) return false;
  Boundary b;
  try {
    b = boundary_complex(k);
  } catch (const ComplexError&) {
    return false;
  }
  if (n >= 2) {
    for (std::size_t i = 0; i < k.count(n - 2); ++i) {
      const auto& s = k.simplices(n - 2)[i];
      auto lk = link(k, s).complex;
      if (lk.dim() != 1 || !is_connected(lk)) return false;
      for (VertexId v = 0; v < static_cast<VertexId>(lk.n_vertices()); ++v)
        if (lk.neighbors(v).size() > 2) return false;
      const bool cycle = euler_characteristic(lk) == 0;
      if (cycle == b.contains(s)) return false;
    }
  }
  for (VertexId v = 0; v < static_cast<VertexId>(k.n_vertices()); ++v) {
    auto lk = link(k, {v}).complex;
    if (!is_connected(lk) || lk.dim() != n - 1) return false;
    const std::int64_t chi = euler_characteristic(lk);
    const std::int64_t sphere = (n - 1) % 2 == 0 ? 2 : 0;
    const bool on_boundary = b.contains({v});
    if (n == 1) {
      if (lk.n_vertices() != (on_boundary ? 1u : 2u)) return false;
      continue;
    }
    if (chi != (on_boundary ? 1 : sphere)) return false;
  }
  return true;
}

}  // namespace acute

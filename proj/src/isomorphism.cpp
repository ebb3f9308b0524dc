#include "acute/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace acute {

namespace {

using Signature = std::vector<std::int64_t>;

// Joint colour refinement of both vertex sets; colours are comparable across
// the two complexes. Returns false if the colour histograms diverge.
bool refine_colors(const SimplicialComplex& k1, const SimplicialComplex& k2,
                   std::span<const int> in1, std::span<const int> in2,
                   std::vector<int>& out1, std::vector<int>& out2) {
  const SimplicialComplex* ks[2] = {&k1, &k2};
  std::vector<Signature> sig[2];
  for (int side = 0; side < 2; ++side) {
    const auto& k = *ks[side];
    const auto& in = side == 0 ? in1 : in2;
    sig[side].assign(k.n_vertices(), Signature(static_cast<std::size_t>(k.dim()) + 2, 0));
    for (std::size_t v = 0; v < k.n_vertices(); ++v) sig[side][v][0] = in.empty() ? 0 : in[v];
    for (int d = 1; d <= k.dim(); ++d)
      for (const auto& s : k.simplices(d))
        for (auto v : s) ++sig[side][v][d + 1];
  }
  std::vector<int> color[2];
  std::size_t classes = 0;
  for (;;) {
    std::map<Signature, int> ids;
    for (int side = 0; side < 2; ++side)
      for (const auto& s : sig[side]) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    for (int side = 0; side < 2; ++side) {
      color[side].resize(sig[side].size());
      for (std::size_t v = 0; v < sig[side].size(); ++v) color[side][v] = ids.at(sig[side][v]);
    }
    std::vector<int> h1(ids.size(), 0), h2(ids.size(), 0);
    for (int c : color[0]) ++h1[c];
    for (int c : color[1]) ++h2[c];
    if (h1 != h2) return false;
    if (ids.size() == classes) break;
    classes = ids.size();
    for (int side = 0; side < 2; ++side) {
      const auto& k = *ks[side];
      for (std::size_t v = 0; v < k.n_vertices(); ++v) {
        Signature s{color[side][v]};
        std::vector<std::int64_t> nb;
        for (auto w : k.neighbors(static_cast<VertexId>(v))) nb.push_back(color[side][w]);
        std::sort(nb.begin(), nb.end());
        s.push_back(-1);
        s.insert(s.end(), nb.begin(), nb.end());
        sig[side][v] = std::move(s);
      }
    }
  }
  out1 = std::move(color[0]);
  out2 = std::move(color[1]);
  return true;
}

// Simplices of dimension >= 1 containing each vertex.
std::vector<std::vector<const Simplex*>> stars(const SimplicialComplex& k) {
  std::vector<std::vector<const Simplex*>> st(k.n_vertices());
  for (int d = 1; d <= k.dim(); ++d)
    for (const auto& s : k.simplices(d))
      for (auto v : s) st[v].push_back(&s);
  return st;
}

}  // namespace

bool is_isomorphism(const SimplicialComplex& k1, const SimplicialComplex& k2,
                    std::span<const VertexId> map) {
  if (f_vector(k1) != f_vector(k2) || map.size() != k1.n_vertices()) return false;
  std::vector<bool> hit(k2.n_vertices(), false);
  for (auto w : map) {
    if (w < 0 || static_cast<std::size_t>(w) >= k2.n_vertices() || hit[w]) return false;
    hit[w] = true;
  }
  for (int d = 1; d <= k1.dim(); ++d)
    for (auto s : k1.simplices(d)) {
      for (auto& v : s) v = map[v];
      std::sort(s.begin(), s.end());
      if (!k2.contains(s)) return false;
    }
  return true;
}

std::optional<std::vector<VertexId>> find_isomorphism(const SimplicialComplex& k1,
                                                      const SimplicialComplex& k2,
                                                      std::span<const int> colors1,
                                                      std::span<const int> colors2) {
  if (f_vector(k1) != f_vector(k2)) return std::nullopt;
  const std::size_t n = k1.n_vertices();
  if (n == 0) return std::vector<VertexId>{};
  std::vector<int> c1, c2;
  if (!refine_colors(k1, k2, colors1, colors2, c1, c2)) return std::nullopt;

  std::vector<std::size_t> class_size(n + 1, 0);
  for (int c : c1) ++class_size[static_cast<std::size_t>(c)];

  // Static search order: grow from the rarest colour, always taking the vertex
  // with the most already-ordered neighbours.
  std::vector<VertexId> order;
  std::vector<int> pos(n, -1);
  std::vector<int> ordered_nbrs(n, 0);
  order.reserve(n);
  while (order.size() < n) {
    VertexId best = -1;
    for (VertexId v = 0; v < static_cast<VertexId>(n); ++v) {
      if (pos[v] >= 0) continue;
      if (best < 0) {
        best = v;
        continue;
      }
      auto key = [&](VertexId x) {
        return std::make_tuple(-ordered_nbrs[x], class_size[static_cast<std::size_t>(c1[x])], x);
      };
      if (key(v) < key(best)) best = v;
    }
    pos[best] = static_cast<int>(order.size());
    order.push_back(best);
    for (auto w : k1.neighbors(best)) ++ordered_nbrs[w];
  }

  const auto star1 = stars(k1);
  const auto star2 = stars(k2);
  // For each vertex, the simplices through it whose other vertices come earlier.
  std::vector<std::vector<const Simplex*>> back(n);
  for (VertexId v = 0; v < static_cast<VertexId>(n); ++v)
    for (const Simplex* s : star1[v])
      if (std::all_of(s->begin(), s->end(), [&](VertexId u) { return pos[u] <= pos[v]; }))
        back[v].push_back(s);

  std::vector<VertexId> map(n, -1), inverse(k2.n_vertices(), -1);

  auto consistent = [&](VertexId v, VertexId w) {
    Simplex img;
    for (const Simplex* s : back[v]) {
      img.clear();
      for (auto u : *s) img.push_back(u == v ? w : map[u]);
      std::sort(img.begin(), img.end());
      if (!k2.contains(img)) return false;
    }
    std::size_t count = 0;
    for (const Simplex* s : star2[w])
      if (std::all_of(s->begin(), s->end(), [&](VertexId u) { return u == w || inverse[u] >= 0; }))
        ++count;
    return count == back[v].size();
  };

  auto candidates = [&](VertexId v) {
    std::vector<VertexId> out;
    VertexId anchor = -1;
    for (auto u : k1.neighbors(v))
      if (pos[u] < pos[v] && (anchor < 0 || k2.neighbors(map[u]).size() < k2.neighbors(map[anchor]).size()))
        anchor = u;
    if (anchor >= 0) {
      for (auto w : k2.neighbors(map[anchor]))
        if (inverse[w] < 0 && c2[w] == c1[v]) out.push_back(w);
    } else {
      for (VertexId w = 0; w < static_cast<VertexId>(k2.n_vertices()); ++w)
        if (inverse[w] < 0 && c2[w] == c1[v]) out.push_back(w);
    }
    return out;
  };

  std::vector<std::vector<VertexId>> cands(n);
  std::vector<std::size_t> next(n, 0);
  std::size_t depth = 0;
  cands[0] = candidates(order[0]);
  for (;;) {
    const VertexId v = order[depth];
    if (map[v] >= 0) {
      inverse[map[v]] = -1;
      map[v] = -1;
    }
    bool placed = false;
    while (next[depth] < cands[depth].size()) {
      const VertexId w = cands[depth][next[depth]++];
      if (consistent(v, w)) {
        map[v] = w;
        inverse[w] = v;
        placed = true;
        break;
      }
    }
    if (placed) {
      if (depth + 1 == n) return map;
      ++depth;
      cands[depth] = candidates(order[depth]);
      next[depth] = 0;
    } else {
      if (depth == 0) return std::nullopt;
      --depth;
    }
  }
}

std::optional<std::vector<VertexId>> are_isomorphic(const SimplicialComplex& k1,
                                                    const SimplicialComplex& k2) {
  return find_isomorphism(k1, k2, {}, {});
}

}  // namespace acute

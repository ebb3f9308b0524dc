#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace acute {

using VertexId = std::int32_t;

/// Strictly increasing list of vertex ids; dimension is size() - 1.
using Simplex = std::vector<VertexId>;

/// f_0 .. f_dim.
using FVector = std::vector<std::int64_t>;

enum class ComplexErrorKind {
  DuplicateSimplex,
  DegenerateSimplex,
  EmptyInput,
  NonDenseVertices,
  SimplexNotFound,
  NotPure,
  NonPseudomanifold,
  BadLink,
  CliqueTooLarge,
};

class ComplexError : public std::runtime_error {
 public:
  ComplexError(ComplexErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ComplexErrorKind kind() const noexcept { return kind_; }

 private:
  ComplexErrorKind kind_;
};

std::string to_string(const Simplex& s);

/// Sorts a vertex list in place and reports whether it had repeats.
bool normalize_simplex(Simplex& s);

/// Immutable finite abstract simplicial complex.
///
/// Vertices are dense ids 0..f0-1. Every face of a stored simplex is stored.
/// Simplices of each dimension are kept sorted lexicographically, so the
/// index of a simplex within its dimension is stable and can be used as a
/// handle by the query functions.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Face closure of the given simplices. Vertex ids must cover [0, n) for
  /// n = 1 + max id. Inputs may be nested (a face of another input), but the
  /// same vertex set may not appear twice.
  static SimplicialComplex from_maximal(std::vector<Simplex> simplices);

  int dim() const noexcept { return static_cast<int>(simplices_.size()) - 1; }
  bool empty() const noexcept { return simplices_.empty(); }
  std::size_t n_vertices() const noexcept { return empty() ? 0 : simplices_[0].size(); }

  const std::vector<Simplex>& simplices(int d) const;
  std::size_t count(int d) const noexcept {
    return d >= 0 && d <= dim() ? simplices_[d].size() : 0;
  }

  std::optional<std::size_t> index_of(const Simplex& s) const;
  bool contains(const Simplex& s) const { return index_of(s).has_value(); }

  /// Indices (into dimension d+1) of simplices having simplex (d, idx) as a facet.
  const std::vector<std::uint32_t>& cofacets(int d, std::size_t idx) const {
    return cofacets_[d][idx];
  }

  /// Sorted neighbours of v in the 1-skeleton.
  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_[v]; }
  bool adjacent(VertexId a, VertexId b) const;

  /// Simplices not properly contained in another simplex, sorted.
  std::vector<Simplex> maximal_simplices() const;

  bool is_pure() const;

  bool operator==(const SimplicialComplex& other) const { return simplices_ == other.simplices_; }

 private:
  void build_indices();

  std::vector<std::vector<Simplex>> simplices_;
  std::vector<std::vector<std::vector<std::uint32_t>>> cofacets_;
  std::vector<std::vector<VertexId>> adjacency_;
};

/// Builds the closure of `maximal_simplices`.
/// Throws DuplicateSimplex, DegenerateSimplex, EmptyInput, NonDenseVertices.
SimplicialComplex build_complex(std::vector<Simplex> maximal_simplices);

/// Relabels the vertices used by `simplices` densely (in increasing order of
/// old id) and returns the old id of every new vertex.
std::vector<VertexId> compact_vertices(std::vector<Simplex>& simplices);

FVector f_vector(const SimplicialComplex& k);

std::int64_t euler_characteristic(const SimplicialComplex& k);
std::int64_t euler_characteristic(const FVector& f);

/// Result of `link`: the link with dense ids, plus the original id of each vertex.
struct Link {
  SimplicialComplex complex;
  std::vector<VertexId> original;
};

/// Link of sigma in k. Throws SimplexNotFound.
Link link(const SimplicialComplex& k, const Simplex& sigma);

/// Subcomplex generated by the codimension-one simplices lying in exactly one
/// top simplex, with the ids of k preserved (vertices not on the boundary are
/// absent, so the result is described as a list of simplices rather than a
/// dense complex). Throws NotPure, NonPseudomanifold.
struct Boundary {
  std::vector<std::vector<Simplex>> simplices;  ///< by dimension, sorted, ids of k
  FVector f_vector() const;
  std::vector<VertexId> vertices() const;
  bool contains(const Simplex& s) const;
  /// The boundary as a dense complex plus the original ids.
  Link as_complex() const;
};

Boundary boundary_complex(const SimplicialComplex& k);

/// d-simplices of k that are not on its boundary.
std::vector<Simplex> interior_simplices(const SimplicialComplex& k, int d);

/// nullopt when flag; otherwise a minimal clique that does not span a simplex.
std::optional<Simplex> is_flag(const SimplicialComplex& k);

/// A 4-cycle (a, b, c, d) of edges with neither ac nor bd an edge.
std::optional<std::vector<VertexId>> find_empty_square(const SimplicialComplex& k);

/// Richness witness: an interior codimension-two simplex whose link cycle is too short.
struct RichnessWitness {
  Simplex simplex;
  std::size_t link_length;
};

/// nullopt when every interior (n-2)-simplex has a link cycle of length >= 5.
/// Throws NotPure, NonPseudomanifold, BadLink (interior link that is not a single cycle).
std::optional<RichnessWitness> is_rich(const SimplicialComplex& k);

/// Flag completion of a graph up to 4-cliques. Throws CliqueTooLarge on a 5-clique.
SimplicialComplex complex_from_edges(std::size_t n_vertices,
                                     std::span<const std::pair<VertexId, VertexId>> edges);

/// Vertex map old -> new applied to every simplex.
SimplicialComplex relabel(const SimplicialComplex& k, std::span<const VertexId> new_id_of);

/// Subcomplex of all simplices whose vertices all lie in `keep`, relabeled densely.
Link induced_subcomplex(const SimplicialComplex& k, std::span<const VertexId> keep);

/// Cone over k with apex id n_vertices().
SimplicialComplex cone(const SimplicialComplex& k);

/// Standard small complexes.
SimplicialComplex simplex_complex(int n);          ///< the full n-simplex
SimplicialComplex simplex_boundary_complex(int n); ///< boundary of the n-simplex (dimension n-1)

/// Checkable link conditions approximating a homology manifold (with boundary):
/// pure, pseudomanifold, codimension-two links are cycles or paths, vertex links
/// connected with Euler characteristic of a sphere or a disc.
bool satisfies_manifold_link_conditions(const SimplicialComplex& k);

bool is_connected(const SimplicialComplex& k);

}  // namespace acute

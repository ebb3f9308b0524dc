#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "acute/complex.hpp"
#include "acute/vec.hpp"

namespace acute {

enum class FVectorErrorKind { NotRich, NotFull };

class FVectorError : public std::runtime_error {
 public:
  FVectorError(FVectorErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  FVectorErrorKind kind() const noexcept { return kind_; }

 private:
  FVectorErrorKind kind_;
};

/// Residuals f_k(M) - f_k(dM) - sum_{i=k}^{m} (-1)^{i+m} C(i+1, k+1) f_i(M), k = 0..m.
struct DSReport {
  int m = 0;
  FVector f;
  FVector f_boundary;  ///< padded with zeros to length m + 1
  std::vector<std::int64_t> residuals;

  bool ok() const;
};

/// Throws ComplexError (NotPure) unless k is pure of dimension m.
DSReport dehn_sommerville(const SimplicialComplex& k, int m);

/// The two four-dimensional specialisations:
/// (2 f1 - fd1) - (3 f2 - 6 f3 + 10 f4) and (-fd2) - (-4 f3 + 10 f4).
std::pair<std::int64_t, std::int64_t> corollary_ds_4d(const SimplicialComplex& k);

/// Sides of 2 f0 <= 2 chi + fd1 for a pure 4-complex, with the richness verdict.
struct ObstructionReport {
  std::int64_t f0 = 0;
  std::int64_t chi = 0;
  std::int64_t lhs = 0;    ///< 2 f0
  std::int64_t rhs = 0;    ///< 2 chi + fd1
  std::int64_t slack = 0;  ///< rhs - lhs
  bool closed = false;     ///< empty boundary; then the bound reads f0 <= chi
  std::int64_t closed_slack = 0;  ///< chi - f0
  std::optional<RichnessWitness> rich_witness;

  bool rich() const { return !rich_witness.has_value(); }
  /// True would contradict the inequality for rich complexes.
  bool violates() const { return rich() && slack < 0; }
};

/// Throws ComplexError (NotPure, NonPseudomanifold, BadLink).
ObstructionReport richness_obstruction(const SimplicialComplex& k);

struct FlagCount {
  std::int64_t flags = 0;  ///< 10 f4
  std::int64_t bound = 0;  ///< 5 (f2 - fd2)
  std::int64_t enumerated = 0;  ///< (2-simplex, 4-simplex) incidences counted directly
};

/// Throws FVectorError(NotRich) when k is not rich.
FlagCount flag_count_inequality(const SimplicialComplex& k);

/// A simplex of x whose vertices all lie in the subcomplex generated by `y`
/// but which is not itself in it; nullopt when the subcomplex is full.
/// Throws ComplexError (SimplexNotFound) if some generator of y is not in x.
std::optional<Simplex> is_full_subcomplex(const SimplicialComplex& x, std::span<const Simplex> y);

/// Simplicial neighbourhood of a full subcomplex Y of X.
///
/// Vertex ids: the vertices of Y first (ascending X id), then one vertex for
/// each simplex of X meeting Y but not in Y, ordered by dimension and then
/// lexicographically.
struct Neighborhood {
  SimplicialComplex complex;
  std::vector<Simplex> source;       ///< X-simplex behind each vertex ({v} for Y vertices)
  std::size_t n_core = 0;            ///< number of Y vertices
  std::vector<Vec3> realization;     ///< barycentres, when points were given
};

/// Throws FVectorError(NotFull) and ComplexError(SimplexNotFound).
Neighborhood simplicial_neighborhood(const SimplicialComplex& x, std::span<const Simplex> y,
                                     std::span<const Vec3> points = {});

/// Richness restricted to interior codimension-2 simplices of N spanned by
/// vertices of Y: nullopt when all of their links have length >= 5.
std::optional<RichnessWitness> core_richness(const Neighborhood& n);

/// Vertices of a pure complex not on its boundary.
std::vector<VertexId> interior_vertices(const SimplicialComplex& k);

struct CombCheck {
  std::int64_t lhs = 0;  ///< 2 f0
  std::int64_t rhs = 0;  ///< 2 (1 + fd2) + fd1
  bool applicable = true;  ///< false for closed complexes

  bool holds() const { return lhs <= rhs; }
};

/// Throws ComplexError (NotPure) unless m is pure 4-dimensional.
CombCheck comb_corollary_check(const SimplicialComplex& m);

/// Raw quantities for a finite vertex set Omega of X: |Omega|, its outer vertex
/// boundary, and the boundary f-vector of N_X(Y) for Y spanned by Omega.
struct IsoperimetricSample {
  std::size_t omega = 0;
  std::size_t vertex_boundary = 0;
  FVector neighborhood_f;
  FVector neighborhood_boundary_f;
};

IsoperimetricSample isoperimetric_sample(const SimplicialComplex& x, std::span<const VertexId> omega);

}  // namespace acute

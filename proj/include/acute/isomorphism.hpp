#pragma once

#include <optional>
#include <span>
#include <vector>

#include "acute/complex.hpp"

namespace acute {

/// Vertex map of k1 onto k2 (indexed by k1 vertex) carrying simplices onto
/// simplices, or nullopt. Deterministic for given inputs.
std::optional<std::vector<VertexId>> are_isomorphic(const SimplicialComplex& k1,
                                                    const SimplicialComplex& k2);

/// Same, restricted to bijections that preserve the given vertex colours.
std::optional<std::vector<VertexId>> find_isomorphism(const SimplicialComplex& k1,
                                                      const SimplicialComplex& k2,
                                                      std::span<const int> colors1,
                                                      std::span<const int> colors2);

/// True if `map` is a bijection carrying the simplex set of k1 onto that of k2.
bool is_isomorphism(const SimplicialComplex& k1, const SimplicialComplex& k2,
                    std::span<const VertexId> map);

}  // namespace acute

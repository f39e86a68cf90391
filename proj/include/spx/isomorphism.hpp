#pragma once

#include <optional>
#include <vector>

#include "spx/graph.hpp"

namespace spx {

inline constexpr int kMaxIsomorphismOrder = 16;

/// Stable color refinement (1-dimensional Weisfeiler-Leman) starting from `initial`.
///
/// Color ids are assigned by sorting signatures, so the result does not depend on
/// vertex labels beyond what `initial` encodes. The returned partition is the
/// coarsest equitable refinement of `initial`.
std::vector<int> refine_colors(const Graph& g, std::vector<int> initial);

/// Returns perm with perm[v] = image of v in h, or nullopt when g and h are not isomorphic.
/// Throws ParamError above kMaxIsomorphismOrder.
std::optional<std::vector<int>> find_isomorphism(const Graph& g, const Graph& h);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace spx

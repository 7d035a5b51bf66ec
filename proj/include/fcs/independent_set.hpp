#pragma once

#include <cstddef>
#include <optional>

#include "fcs/graph.hpp"

namespace fcs {

struct IndependentSetResult {
  std::optional<VertexSet> set;
  /// True when |V(H)| >= (k-1)(Δ(H)+1)+1 and the answer came from greedy extraction.
  bool kernel_path = false;
};

/// Size-k independent set of `h` if one exists.
///
/// Large inputs (|V| >= (k-1)(Δ+1)+1) always contain one; it is extracted greedily by
/// repeatedly taking a minimum-degree vertex and deleting its closed neighbourhood.
/// Otherwise a bounded search tree branches on the closed neighbourhood of a
/// minimum-degree vertex, re-applying the size test at every node.
IndependentSetResult find_independent_set(const Graph& h, std::size_t k);

}  // namespace fcs

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fcs {

using VertexId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

using Edge = std::pair<VertexId, VertexId>;

/// Undirected simple graph on the vertex ids 0..n-1.
///
/// Neighbor lists keep insertion order. add_edge rejects self-loops,
/// duplicate edges and out-of-range endpoints with std::invalid_argument,
/// so a Graph is simple by construction.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t vertex_count);

  /// Builds a graph from an edge list; throws on the first invalid edge.
  static Graph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  VertexId add_vertex();
  void add_edge(VertexId u, VertexId v);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  std::size_t max_degree() const;

  bool has_edge(VertexId u, VertexId v) const;

  /// Edges as (min, max) pairs in lexicographic order.
  std::vector<Edge> edges() const;

  bool is_connected() const;

  /// True iff the subgraph induced by `vertices` is connected (an empty set counts as connected).
  bool induces_connected(std::span<const VertexId> vertices) const;

  /// Two-colouring (0/1 per vertex) if the graph is bipartite.
  std::optional<std::vector<std::uint8_t>> bipartition() const;

  bool operator==(const Graph& other) const;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Sorts and deduplicates in place; returns the argument for chaining.
VertexSet& normalize(VertexSet& set);

/// Indicator vector of `set` over n vertices.
std::vector<std::uint8_t> indicator(std::size_t n, std::span<const VertexId> set);

}  // namespace fcs

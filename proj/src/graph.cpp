#include "fcs/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace fcs {

Graph::Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

Graph Graph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  Graph g(vertex_count);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

VertexId Graph::add_vertex() {
  adjacency_.emplace_back();
  return static_cast<VertexId>(adjacency_.size() - 1);
}

void Graph::add_edge(VertexId u, VertexId v) {
  if (u >= vertex_count() || v >= vertex_count()) {
    throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                std::to_string(v));
  }
  if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v)) {
    throw std::invalid_argument("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
  }
  adjacency_[u].push_back(v);
  adjacency_[v].push_back(u);
  ++edge_count_;
}

std::size_t Graph::max_degree() const {
  std::size_t best = 0;
  for (const auto& nbrs : adjacency_) best = std::max(best, nbrs.size());
  return best;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  // scan the shorter list
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const VertexId other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
  return std::find(a.begin(), a.end(), other) != a.end();
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return true;
  std::vector<VertexId> all(vertex_count());
  for (VertexId v = 0; v < vertex_count(); ++v) all[v] = v;
  return induces_connected(all);
}

bool Graph::induces_connected(std::span<const VertexId> vertices) const {
  if (vertices.empty()) return true;
  std::vector<std::uint8_t> state(vertex_count(), 0);  // 0 outside, 1 inside, 2 reached
  for (VertexId v : vertices) state[v] = 1;
  std::vector<VertexId> stack{vertices.front()};
  state[vertices.front()] = 2;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : adjacency_[v]) {
      if (state[u] == 1) {
        state[u] = 2;
        ++reached;
        stack.push_back(u);
      }
    }
  }
  // `vertices` may contain repeats; count distinct members
  std::size_t distinct = 0;
  for (auto s : state) distinct += (s != 0);
  return reached == distinct;
}

std::optional<std::vector<std::uint8_t>> Graph::bipartition() const {
  constexpr std::uint8_t unset = 2;
  std::vector<std::uint8_t> side(vertex_count(), unset);
  for (VertexId root = 0; root < vertex_count(); ++root) {
    if (side[root] != unset) continue;
    side[root] = 0;
    std::vector<VertexId> stack{root};
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      for (VertexId u : adjacency_[v]) {
        if (side[u] == unset) {
          side[u] = static_cast<std::uint8_t>(1 - side[v]);
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

bool Graph::operator==(const Graph& other) const {
  return vertex_count() == other.vertex_count() && edges() == other.edges();
}

VertexSet& normalize(VertexSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

std::vector<std::uint8_t> indicator(std::size_t n, std::span<const VertexId> set) {
  std::vector<std::uint8_t> out(n, 0);
  for (VertexId v : set) out.at(v) = 1;
  return out;
}

}  // namespace fcs

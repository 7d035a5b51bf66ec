#pragma once

// Generators for three instance transformations into f-Critical Set, their
// structural validators, and witness maps.
//
//   vc_to_critical      Vertex Cover -> planar subcubic bipartite, m(f) <= 2
//   clique_to_critical  Clique -> f-Critical Set (treewidth-bounded product)
//   uniformize          arbitrary f -> constant threshold m(f)
//
// Every layout keeps a registry of its named vertex groups so validators and
// witness maps never re-derive structure from adjacency.

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fcs/graph.hpp"
#include "fcs/instance.hpp"

namespace fcs {

struct Group {
  std::string name;  // single token
  std::vector<VertexId> members;
};

using GroupRegistry = std::vector<Group>;

/// Members of the group called `name`; throws std::out_of_range if absent.
const std::vector<VertexId>& find_group(const GroupRegistry& registry, const std::string& name);

// ---------------------------------------------------------------------------
// Vertex Cover

struct VcLayout {
  Graph source;
  std::size_t k = 0;
  std::size_t delta = 0;               // Δ(source)
  std::size_t path_length = 0;         // 2Δ - 1
  std::vector<Edge> source_edges;      // fixed global edge order
  std::vector<VertexId> edge_vertex;   // F: one product vertex per source edge
  std::vector<std::vector<VertexId>> paths;  // P_v in path order v_1 .. v_{2Δ-1}
  VertexSet p_even, p_odd;             // by 1-based path index
  VertexSet q, q_even, q_odd;          // pendants, by the parity of their path vertex
  std::size_t k_prime = 0;             // |F| + |Q| + k(2Δ-1)
  Instance product;

  GroupRegistry registry() const;
};

/// Precondition violations throw std::invalid_argument (disconnected source, no edge, k = 0).
VcLayout vc_to_critical(const Graph& source, std::size_t k);

/// Violated invariants, one line each; empty when the layout is sound.
std::vector<std::string> validate_layout(const VcLayout& layout);

/// F ∪ Q ∪ ⋃_{v in cover} P_v. Throws std::invalid_argument naming an uncovered edge,
/// or if the cover is larger than k.
VertexSet vc_witness_forward(const VcLayout& layout, const VertexSet& cover);

/// {v : P_v ⊆ S'}. Throws std::invalid_argument if S' is not critical or exceeds k',
/// and std::logic_error if the extracted set is not a cover of size <= k.
VertexSet vc_witness_backward(const VcLayout& layout, const VertexSet& critical);

bool is_vertex_cover(const Graph& graph, const VertexSet& cover);

// ---------------------------------------------------------------------------
// Clique

struct YCycle {
  std::size_t r = 0, s = 0;  // slots, r < s (0-based)
  VertexId x = 0, y = 0;     // source vertices (0-based) of the oriented edge
  std::vector<VertexId> cycle;  // 2q vertices in cycle order
};

struct CliqueLayout {
  Graph source;
  std::size_t k = 0;
  std::size_t q = 0;                      // 2n
  std::vector<std::size_t> m_len, n_len;  // M_i = n+i-1, N_i = n-i+1 (1-based i)
  std::vector<std::vector<std::vector<VertexId>>> u_cycles;  // [r][i]: cycle order, first M_i a-side
  std::vector<VertexId> u_hubs;                              // u^r
  std::vector<std::vector<VertexId>> a, b;                   // [r][s], r != s
  std::vector<YCycle> y_cycles;
  std::vector<std::vector<VertexId>> y_hubs;                 // [r][s], r < s
  VertexSet c, w, z;
  std::size_t k_prime = 0;  // k²q + k + 1
  Instance product;

  GroupRegistry registry() const;
  /// C ∪ {u^r} ∪ {y^{r,s}}.
  VertexSet x_vertices() const;
};

/// Throws std::invalid_argument unless the source has n >= 2 vertices and k >= 2.
CliqueLayout clique_to_critical(const Graph& source, std::size_t k);

std::vector<std::string> validate_layout(const CliqueLayout& layout);

/// Violations of f(v) <= d(v) - k' over X, one line each.
std::vector<std::string> check_x_inequality(const CliqueLayout& layout);

/// Z ∪ ⋃_r U^r_{d_r} ∪ ⋃_{r<s} Y^{r,s}_{d_r,d_s}. `clique` lists d_1..d_k (0-based source
/// ids); throws std::invalid_argument naming a non-adjacent or repeated pair.
VertexSet clique_witness_forward(const CliqueLayout& layout, const std::vector<VertexId>& clique);

struct StructuredDecision {
  bool yes = false;
  std::optional<VertexSet> witness;
  std::size_t candidates = 0;
};

/// Tries every choice of d_r per slot and one Y-cycle per slot pair, stopping at the
/// first critical candidate.
StructuredDecision clique_structured_decide(const CliqueLayout& layout);

bool has_clique(const Graph& graph, std::size_t k);

// ---------------------------------------------------------------------------
// Threshold uniformization

struct UniformGadget {
  VertexId hub = 0;
  std::vector<VertexId> hub_leaves;                // m(f) leaves
  std::vector<VertexId> inner;                     // m(f)+k-1 vertices
  std::vector<std::vector<VertexId>> inner_leaves;  // m(f) leaves per inner vertex
};

struct UniformLayout {
  Instance source;
  Threshold c = 0;  // m(f)
  std::vector<std::vector<VertexId>> pendants;       // per source vertex, m(f)-f(v) leaves
  std::vector<std::vector<UniformGadget>> gadgets;   // per source vertex, m(f)-f(v) copies
  VertexSet q;                                       // every degree-1 product vertex
  std::size_t k_prime = 0;                           // k + |Q|
  Instance product;

  GroupRegistry registry() const;
};

/// With m(f) = 1 every vertex needs to start at 1: V is the only critical set.
struct UniformShortCircuit {
  VertexSet critical_set;
  bool yes = false;  // n <= k
};

using UniformResult = std::variant<UniformLayout, UniformShortCircuit>;

/// Source vertices keep their ids; additions follow. Product leaves carry threshold
/// m(f), which may exceed their degree + 1, so the product is built with
/// allow_saturated_thresholds.
UniformResult uniformize(const Instance& source);

std::vector<std::string> validate_layout(const UniformLayout& layout);

/// S ∪ Q.
VertexSet uniform_witness_forward(const UniformLayout& layout, const VertexSet& source_witness);

}  // namespace fcs

#pragma once

// Decision procedure for f-Critical Set parameterized by the budget k.
//
// Every vertex is classified relative to k: A must be in any critical set of size
// at most k (its state can never change), C can never be in one, and B is
// undecided. The primed subsets A', B', C' are the vertices whose state at time 1
// is not already settled by A alone. For each R ⊆ B' the search looks for k
// pairwise non-adjacent connected sets drawn from D(R) (connected subsets of
// B \ B' whose members keep their state) whose neighbour counts on A' ∪ B' ∪ C'
// cover the remaining demands. The sets are grouped into classes by
// (size, neighbour-count profile); picking one set per slot without conflicts is
// an independent-set question on the conflict graph H.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "fcs/graph.hpp"
#include "fcs/instance.hpp"
#include "fcs/oracle.hpp"

namespace fcs::fpt {

enum class Role : std::uint8_t { a, b, c };

struct Partition {
  std::size_t budget = 0;
  VertexSet a, b, c;
  VertexSet a_prime, b_prime, c_prime;
  std::vector<Role> role;            // per vertex
  std::vector<std::int32_t> primed;  // per vertex: index into primed_vertices, or -1
  VertexSet primed_vertices;         // A' ∪ B' ∪ C', sorted

  bool is_primed(VertexId v) const { return primed[v] >= 0; }
};

/// The six sets for budget instance.budget().
Partition partition(const Instance& instance);

struct GateResult {
  bool pass = true;
  std::string reason;
};

/// NO iff |A| > k, |A'|+|B'|+|C'| > 2k², or some v has f(v) > k and d(v)-k >= f(v).
GateResult feasibility_gate(const Partition& partition, const Instance& instance);

/// All nonempty vertex sets of size <= bound inside `ground` that induce a connected
/// subgraph, each exactly once, ordered by size then lexicographically.
std::vector<VertexSet> enum_connected_sets(const Graph& graph, std::span<const VertexId> ground,
                                           std::size_t bound);

/// D(R): the empty set first, then every connected S ⊆ B \ B' with
/// |S| <= k - |R| - |A| whose members keep their state next to R ∪ S ∪ A.
struct ConnectedFamily {
  VertexSet r;
  std::vector<VertexSet> members;
};

/// Throws std::invalid_argument unless R ⊆ B' and |R| <= k - |A|.
ConnectedFamily compute_family(const Instance& instance, const Partition& partition,
                               const VertexSet& r);

/// True iff every v in S has fewer than f(v) neighbours outside R ∪ S ∪ A.
bool keeps_state(const Instance& instance, const Partition& partition, const VertexSet& r,
                 const VertexSet& s);

struct ClassKey {
  std::size_t size = 0;
  /// |N(v) ∩ S| for v in partition.primed_vertices order.
  std::vector<std::uint8_t> profile;

  auto operator<=>(const ClassKey&) const = default;
};

/// Class key -> indices into ConnectedFamily::members.
using ClassMap = std::map<ClassKey, std::vector<std::size_t>>;

ClassKey class_key(const Graph& graph, const Partition& partition, const VertexSet& s);

ClassMap classify(const Graph& graph, const ConnectedFamily& family, const Partition& partition);

/// Per primed vertex: how many more neighbours in S are required.
///   v in A' ∪ R:          d(v) - f(v) + 1 - |N(v) ∩ A| - |N(v) ∩ R|
///   v in (B' \ R) ∪ C':   f(v) - |N(v) ∩ A| - |N(v) ∩ R|
std::vector<std::int64_t> demands(const Instance& instance, const Partition& partition,
                                  const VertexSet& r);

/// True iff the summed slot profiles meet every demand. Throws std::invalid_argument if
/// the slot sizes exceed k - |A| - |R|.
bool check_demands(const Instance& instance, const Partition& partition, const VertexSet& r,
                   std::span<const ClassKey> slots);

/// Nonempty connected sets whose union is connected (equivalently: they intersect
/// or an edge joins them). The empty set is adjacent to nothing.
bool sets_adjacent(const Graph& graph, const VertexSet& s1, const VertexSet& s2);

struct ConflictNode {
  std::size_t slot = 0;
  std::size_t member = 0;  // index into ConnectedFamily::members
};

struct ConflictGraph {
  std::vector<ConflictNode> nodes;
  Graph graph;
};

/// One node per (slot, member of the slot's class). Nodes of the same slot form a
/// clique; nodes of different slots conflict iff their sets are adjacent. Slots
/// sharing a key are still distinct slots. Unrealized keys contribute no nodes.
ConflictGraph build_conflict_graph(const Graph& graph, const ConnectedFamily& family,
                                   const ClassMap& classes, std::span<const ClassKey> slots);

struct FptOptions {
  /// Sweep every (l_1..l_k, h_1..h_k) literally instead of multisets of realized classes.
  bool faithful = false;
  std::uint64_t work_limit = std::numeric_limits<std::uint64_t>::max();
  /// OpenMP threads for the loop over R (0: runtime default, 1: serial).
  int workers = 1;
  bool collect_family_stats = false;
};

struct FamilyStats {
  VertexSet r;
  std::size_t ground_size = 0;
  /// count_by_size[i] = members of size i (index 0 counts the empty set).
  std::vector<std::size_t> count_by_size;
};

struct FptReport {
  SolveResult result;
  Partition partition;
  GateResult gate;
  /// All connected subsets of B \ B' up to size k - |A|, by size.
  std::vector<std::size_t> ground_count_by_size;
  /// One entry per R examined, in R order (only with collect_family_stats).
  std::vector<FamilyStats> families;
};

/// Decides whether a critical set of size <= k exists. On YES the witness is
/// A ∪ R ∪ (selected sets) for the first R (by size, then lexicographically) that
/// succeeds. Exhausted when the work limit runs out.
FptReport decide(const Instance& instance, const FptOptions& options = {});

}  // namespace fcs::fpt

#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>

#include "fcs/instance.hpp"

namespace fcs {

enum class Decision { yes, no, exhausted };

const char* to_string(Decision d);

struct SolveResult {
  Decision decision = Decision::no;
  std::optional<VertexSet> witness;
  /// Minimum critical-set size when the search ran to the optimum.
  std::optional<std::size_t> optimum;
  /// Candidate sets or search nodes examined.
  std::uint64_t work = 0;
  /// Short note on why the answer was reached without search (gates), else empty.
  std::string reason;
};

/// ceil(n / m(f)): no critical set is smaller.
std::size_t lower_bound(const Instance& instance);

struct ForcedSets {
  VertexSet forced_in;   // f(v) > k: the state can never change, so v must start at 1
  VertexSet forced_out;  // d(v) - k >= f(v): v would flip to 0 whatever else is chosen
  bool infeasible = false;
};

/// Budget-relative forcing for budget `k`.
ForcedSets forced_sets(const Instance& instance, std::size_t k);
inline ForcedSets forced_sets(const Instance& instance) {
  return forced_sets(instance, instance.budget());
}

enum class SearchStrategy {
  /// Lexicographic subset enumeration by nondecreasing size; the reference.
  enumerate,
  /// Depth-first search over in/out decisions with local-constraint propagation.
  propagate,
};

struct SearchOptions {
  std::size_t size_cap = 0;
  std::uint64_t work_limit = std::numeric_limits<std::uint64_t>::max();
  SearchStrategy strategy = SearchStrategy::enumerate;
  /// OpenMP threads for the enumeration strategy (0: runtime default, 1: serial).
  int workers = 1;
};

/// Smallest critical set of size <= size_cap, lexicographically first among the
/// smallest. Decision no if none exists, exhausted if the work limit ran out first.
SolveResult min_critical_set(const Instance& instance, const SearchOptions& options);

/// Decision for budget k: immediate NO when k * m(f) < n, otherwise search with cap k.
SolveResult decide_kmf(const Instance& instance, SearchOptions options = {});

}  // namespace fcs

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fcs/instance.hpp"

namespace fcs {

/// c_t: one 0/1 state per vertex, tagged with its time index.
struct Configuration {
  std::vector<std::uint8_t> states;
  std::size_t time = 0;

  static Configuration all_ones(std::size_t n) { return {std::vector<std::uint8_t>(n, 1), 0}; }
  static Configuration from_set(std::size_t n, std::span<const VertexId> ones);

  bool is_all_ones() const;
  bool same_states(const Configuration& other) const { return states == other.states; }
};

/// One synchronous application of the reversible rule: v flips iff at least f(v)
/// neighbours hold the opposite state. Counts ones per neighbourhood; the vertex
/// loop is OpenMP-parallel for large graphs.
Configuration step(const Instance& instance, const Configuration& current);

/// Serial evaluation straight from the rule's wording: collect the opposite-state
/// neighbours of each vertex and compare the count with f(v). Kept for testing.
Configuration step_reference(const Instance& instance, const Configuration& current);

enum class Termination { fixed_point, cycle_detected, step_limit };

const char* to_string(Termination t);

struct Trace {
  /// c_0, c_1, ... up to the last distinct configuration computed.
  std::vector<Configuration> configurations;
  Termination termination = Termination::step_limit;
  /// fixed_point: time of the fixed configuration; cycle_detected: time at which a
  /// configuration repeated; step_limit: time of the last configuration.
  std::size_t termination_time = 0;
  std::size_t cycle_start = 0;   // first time of the repeating block
  std::size_t cycle_length = 0;  // 1 for a fixed point, 0 when the limit was hit

  const Configuration& final() const { return configurations.back(); }
};

/// Iterates step until a configuration repeats or step_limit steps have been applied.
/// Throws std::invalid_argument if step_limit is zero or c0 has the wrong size.
Trace simulate(const Instance& instance, const Configuration& initial, std::size_t step_limit);

/// True iff the process started by `set` is all ones at time 1 (and hence forever).
bool is_critical_set(const Instance& instance, std::span<const VertexId> set);

struct CriticalViolation {
  VertexId vertex;
  bool in_set;  // true: a member flips to 0; false: a non-member stays 0
};

/// Every vertex that is not in state 1 at time 1 when the process is started by `set`:
/// non-members that stay 0 first, then members that flip, each by ascending id.
std::vector<CriticalViolation> critical_violations(const Instance& instance,
                                                   std::span<const VertexId> set);

/// "state of vertex 2 remains 0 at time 1" style text, 1-based ids.
std::string describe(const CriticalViolation& violation);

}  // namespace fcs

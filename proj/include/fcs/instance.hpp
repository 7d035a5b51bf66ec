#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fcs/graph.hpp"

namespace fcs {

using Threshold = std::uint32_t;

/// Per-vertex flip thresholds f(v).
class ThresholdFunction {
 public:
  ThresholdFunction() = default;
  explicit ThresholdFunction(std::vector<Threshold> values) : values_(std::move(values)) {}

  Threshold operator[](VertexId v) const { return values_[v]; }
  std::size_t size() const { return values_.size(); }
  std::span<const Threshold> values() const { return values_; }

  /// m(f); zero for an empty function.
  Threshold max_threshold() const;
  Threshold min_threshold() const;

  bool operator==(const ThresholdFunction&) const = default;

 private:
  std::vector<Threshold> values_;
};

/// Unvalidated input as read from a file or produced by a generator.
struct RawInstance {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;
  std::vector<Threshold> thresholds;
  std::int64_t budget = 1;
};

enum class IssueKind {
  empty_graph,
  vertex_out_of_range,
  self_loop,
  duplicate_edge,
  threshold_count_mismatch,
  zero_threshold,
  threshold_above_degree,
  disconnected,
  budget_below_one,
};

const char* to_string(IssueKind kind);

struct ValidationIssue {
  IssueKind kind;
  std::optional<VertexId> vertex;  // offending vertex (0-based) when there is one
  std::string message;
};

struct ValidationOptions {
  /// Accept f(v) > d(v)+1. Such a vertex can never flip, exactly like f(v) = d(v)+1,
  /// so the dynamics are unchanged; constant-threshold products need it.
  bool allow_saturated_thresholds = false;
};

struct ValidationResult;

/// Checks every instance invariant and reports all violations, each with its vertex.
ValidationResult validate_instance(const RawInstance& raw, const ValidationOptions& options = {});

/// A validated (G, f, k): G connected and simple, 1 <= f(v) <= d(v)+1, k >= 1.
class Instance {
 public:
  const Graph& graph() const { return graph_; }
  const ThresholdFunction& thresholds() const { return thresholds_; }
  Threshold threshold(VertexId v) const { return thresholds_[v]; }
  std::size_t budget() const { return budget_; }

  std::size_t vertex_count() const { return graph_.vertex_count(); }
  std::size_t edge_count() const { return graph_.edge_count(); }
  std::size_t max_degree() const { return graph_.max_degree(); }
  Threshold max_threshold() const { return thresholds_.max_threshold(); }

  /// Same graph and thresholds with another budget.
  Instance with_budget(std::size_t k) const;

  RawInstance to_raw() const;

  bool operator==(const Instance&) const = default;

 private:
  friend ValidationResult validate_instance(const RawInstance&, const ValidationOptions&);
  Instance(Graph graph, ThresholdFunction thresholds, std::size_t budget)
      : graph_(std::move(graph)), thresholds_(std::move(thresholds)), budget_(budget) {}

  Graph graph_;
  ThresholdFunction thresholds_;
  std::size_t budget_ = 1;
};

struct ValidationResult {
  std::optional<Instance> instance;  // engaged iff issues is empty
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
};


/// validate_instance that throws std::invalid_argument listing the issues.
Instance make_instance(const RawInstance& raw, const ValidationOptions& options = {});

/// Convenience for tests and generators.
Instance make_instance(std::size_t n, std::span<const Edge> edges,
                       std::span<const Threshold> thresholds, std::size_t k,
                       const ValidationOptions& options = {});

}  // namespace fcs

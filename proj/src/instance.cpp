#include "fcs/instance.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace fcs {

Threshold ThresholdFunction::max_threshold() const {
  return values_.empty() ? 0 : *std::max_element(values_.begin(), values_.end());
}

Threshold ThresholdFunction::min_threshold() const {
  return values_.empty() ? 0 : *std::min_element(values_.begin(), values_.end());
}

const char* to_string(IssueKind kind) {
  switch (kind) {
    case IssueKind::empty_graph: return "empty graph";
    case IssueKind::vertex_out_of_range: return "vertex out of range";
    case IssueKind::self_loop: return "self-loop";
    case IssueKind::duplicate_edge: return "duplicate edge";
    case IssueKind::threshold_count_mismatch: return "threshold count mismatch";
    case IssueKind::zero_threshold: return "zero threshold";
    case IssueKind::threshold_above_degree: return "threshold above degree+1";
    case IssueKind::disconnected: return "disconnected";
    case IssueKind::budget_below_one: return "budget below one";
  }
  return "unknown";
}

Instance Instance::with_budget(std::size_t k) const {
  Instance copy = *this;
  copy.budget_ = k;
  return copy;
}

RawInstance Instance::to_raw() const {
  RawInstance raw;
  raw.vertex_count = vertex_count();
  raw.edges = graph_.edges();
  raw.thresholds.assign(thresholds_.values().begin(), thresholds_.values().end());
  raw.budget = static_cast<std::int64_t>(budget_);
  return raw;
}

ValidationResult validate_instance(const RawInstance& raw, const ValidationOptions& options) {
  ValidationResult result;
  auto report = [&](IssueKind kind, std::optional<VertexId> v, std::string msg) {
    result.issues.push_back({kind, v, std::move(msg)});
  };

  const std::size_t n = raw.vertex_count;
  if (n == 0) report(IssueKind::empty_graph, std::nullopt, "graph has no vertices");
  if (raw.budget < 1) {
    report(IssueKind::budget_below_one, std::nullopt,
           "budget k = " + std::to_string(raw.budget) + " is below 1");
  }

  Graph graph(n);
  std::set<Edge> seen;
  for (const auto& [u, v] : raw.edges) {
    if (u >= n || v >= n) {
      report(IssueKind::vertex_out_of_range, u >= n ? u : v,
             "edge " + std::to_string(u + 1) + " " + std::to_string(v + 1) + " out of range");
      continue;
    }
    if (u == v) {
      report(IssueKind::self_loop, u, "self-loop at vertex " + std::to_string(u + 1));
      continue;
    }
    if (!seen.insert({std::min(u, v), std::max(u, v)}).second) {
      report(IssueKind::duplicate_edge, u,
             "duplicate edge " + std::to_string(u + 1) + " " + std::to_string(v + 1));
      continue;
    }
    graph.add_edge(u, v);
  }

  if (raw.thresholds.size() != n) {
    report(IssueKind::threshold_count_mismatch, std::nullopt,
           std::to_string(raw.thresholds.size()) + " thresholds for " + std::to_string(n) +
               " vertices");
  } else {
    for (VertexId v = 0; v < n; ++v) {
      const Threshold f = raw.thresholds[v];
      if (f == 0) {
        report(IssueKind::zero_threshold, v,
               "zero threshold at vertex " + std::to_string(v + 1) + " (no critical set exists)");
      } else if (f > graph.degree(v) + 1 && !options.allow_saturated_thresholds) {
        report(IssueKind::threshold_above_degree, v,
               "threshold " + std::to_string(f) + " exceeds degree+1 = " +
                   std::to_string(graph.degree(v) + 1) + " at vertex " + std::to_string(v + 1));
      }
    }
  }

  if (n > 0 && !graph.is_connected()) {
    // name one vertex outside the component of vertex 0
    std::vector<VertexId> comp{0};
    std::vector<std::uint8_t> seen_v(n, 0);
    seen_v[0] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (VertexId u : graph.neighbors(comp[i])) {
        if (!seen_v[u]) {
          seen_v[u] = 1;
          comp.push_back(u);
        }
      }
    }
    const auto it = std::find(seen_v.begin(), seen_v.end(), 0);
    const auto stray = static_cast<VertexId>(it - seen_v.begin());
    report(IssueKind::disconnected, stray,
           "graph is disconnected: vertex " + std::to_string(stray + 1) +
               " is unreachable from vertex 1");
  }

  if (result.issues.empty()) {
    result.instance = Instance(std::move(graph), ThresholdFunction(raw.thresholds),
                               static_cast<std::size_t>(raw.budget));
  }
  return result;
}

Instance make_instance(const RawInstance& raw, const ValidationOptions& options) {
  auto result = validate_instance(raw, options);
  if (!result.ok()) {
    std::string msg = "invalid instance:";
    for (const auto& issue : result.issues) msg += " [" + issue.message + "]";
    throw std::invalid_argument(msg);
  }
  return std::move(*result.instance);
}

Instance make_instance(std::size_t n, std::span<const Edge> edges,
                       std::span<const Threshold> thresholds, std::size_t k,
                       const ValidationOptions& options) {
  RawInstance raw;
  raw.vertex_count = n;
  raw.edges.assign(edges.begin(), edges.end());
  raw.thresholds.assign(thresholds.begin(), thresholds.end());
  raw.budget = static_cast<std::int64_t>(k);
  return make_instance(raw, options);
}

}  // namespace fcs

#include "fcs/dynamics.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace fcs {

namespace {

constexpr std::size_t parallel_step_cutoff = 4096;

struct StateHash {
  std::size_t operator()(const std::vector<std::uint8_t>& s) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto b : s) {
      h ^= b;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

void check_size(const Instance& instance, const Configuration& c) {
  if (c.states.size() != instance.vertex_count()) {
    throw std::invalid_argument("configuration covers " + std::to_string(c.states.size()) +
                                " vertices, instance has " +
                                std::to_string(instance.vertex_count()));
  }
}

}  // namespace

Configuration Configuration::from_set(std::size_t n, std::span<const VertexId> ones) {
  return {indicator(n, ones), 0};
}

bool Configuration::is_all_ones() const {
  return std::all_of(states.begin(), states.end(), [](std::uint8_t s) { return s == 1; });
}

Configuration step(const Instance& instance, const Configuration& current) {
  check_size(instance, current);
  const Graph& g = instance.graph();
  const auto n = static_cast<std::int64_t>(g.vertex_count());
  Configuration next{std::vector<std::uint8_t>(current.states.size()), current.time + 1};
  const std::uint8_t* in = current.states.data();
  std::uint8_t* out = next.states.data();

#pragma omp parallel for schedule(static) if (n > static_cast<std::int64_t>(parallel_step_cutoff))
  for (std::int64_t i = 0; i < n; ++i) {
    const auto v = static_cast<VertexId>(i);
    std::size_t ones = 0;
    for (VertexId u : g.neighbors(v)) ones += in[u];
    const std::size_t opposite = in[v] ? g.degree(v) - ones : ones;
    out[v] = opposite >= instance.threshold(v) ? static_cast<std::uint8_t>(1 - in[v]) : in[v];
  }
  return next;
}

Configuration step_reference(const Instance& instance, const Configuration& current) {
  check_size(instance, current);
  const Graph& g = instance.graph();
  Configuration next{current.states, current.time + 1};
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    std::vector<VertexId> opposite;
    for (VertexId u : g.neighbors(v)) {
      if (current.states[u] != current.states[v]) opposite.push_back(u);
    }
    if (opposite.size() >= instance.threshold(v)) next.states[v] = 1 - current.states[v];
  }
  return next;
}

const char* to_string(Termination t) {
  switch (t) {
    case Termination::fixed_point: return "fixed-point";
    case Termination::cycle_detected: return "cycle-detected";
    case Termination::step_limit: return "step-limit";
  }
  return "unknown";
}

Trace simulate(const Instance& instance, const Configuration& initial, std::size_t step_limit) {
  if (step_limit == 0) throw std::invalid_argument("step_limit must be at least 1");
  check_size(instance, initial);

  Trace trace;
  Configuration c0 = initial;
  c0.time = 0;
  std::unordered_map<std::vector<std::uint8_t>, std::size_t, StateHash> seen;
  seen.emplace(c0.states, 0);
  trace.configurations.push_back(std::move(c0));

  for (std::size_t s = 0; s < step_limit; ++s) {
    Configuration next = step(instance, trace.configurations.back());
    const auto it = seen.find(next.states);
    if (it != seen.end()) {
      const std::size_t first = it->second;
      trace.cycle_start = first;
      trace.cycle_length = next.time - first;
      if (trace.cycle_length == 1) {
        trace.termination = Termination::fixed_point;
        trace.termination_time = first;
      } else {
        trace.termination = Termination::cycle_detected;
        trace.termination_time = next.time;
      }
      return trace;
    }
    seen.emplace(next.states, next.time);
    trace.configurations.push_back(std::move(next));
  }
  trace.termination = Termination::step_limit;
  trace.termination_time = trace.configurations.back().time;
  return trace;
}

std::vector<CriticalViolation> critical_violations(const Instance& instance,
                                                   std::span<const VertexId> set) {
  const Configuration c0 = Configuration::from_set(instance.vertex_count(), set);
  const Configuration c1 = step(instance, c0);
  std::vector<CriticalViolation> out;
  for (const bool member : {false, true}) {
    for (VertexId v = 0; v < c1.states.size(); ++v) {
      if (c1.states[v] == 0 && (c0.states[v] == 1) == member) out.push_back({v, member});
    }
  }
  return out;
}

bool is_critical_set(const Instance& instance, std::span<const VertexId> set) {
  const Configuration c0 = Configuration::from_set(instance.vertex_count(), set);
  return step(instance, c0).is_all_ones();
}

std::string describe(const CriticalViolation& violation) {
  const std::string id = std::to_string(violation.vertex + 1);
  return violation.in_set ? "state of vertex " + id + " changes to 0 at time 1"
                          : "state of vertex " + id + " remains 0 at time 1";
}

}  // namespace fcs

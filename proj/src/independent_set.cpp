#include "fcs/independent_set.hpp"

#include <algorithm>
#include <cstdint>

namespace fcs {

namespace {

class Solver {
 public:
  explicit Solver(const Graph& h) : h_(h), alive_(h.vertex_count(), 1), deg_(h.vertex_count()) {
    for (VertexId v = 0; v < h.vertex_count(); ++v) deg_[v] = h.degree(v);
    alive_count_ = h.vertex_count();
  }

  bool kernel_applies(std::size_t k) const {
    if (k == 0) return true;
    std::size_t max_deg = 0;
    for (VertexId v = 0; v < h_.vertex_count(); ++v) {
      if (alive_[v]) max_deg = std::max(max_deg, deg_[v]);
    }
    return alive_count_ >= (k - 1) * (max_deg + 1) + 1;
  }

  VertexSet greedy(std::size_t k) {
    VertexSet picked;
    while (picked.size() < k) {
      const VertexId v = min_degree_vertex();
      picked.push_back(v);
      remove_closed_neighborhood(v);
    }
    return picked;
  }

  bool branch(std::size_t k, VertexSet& picked) {
    if (k == 0) return true;
    if (alive_count_ < k) return false;
    if (kernel_applies(k)) {
      const auto mark = trail_.size();
      VertexSet more = greedy(k);
      restore(mark);
      picked.insert(picked.end(), more.begin(), more.end());
      return true;
    }
    const VertexId v = min_degree_vertex();
    VertexSet options{v};
    for (VertexId u : h_.neighbors(v)) {
      if (alive_[u]) options.push_back(u);
    }
    std::sort(options.begin() + 1, options.end());
    for (VertexId u : options) {
      const auto mark = trail_.size();
      remove_closed_neighborhood(u);
      picked.push_back(u);
      if (branch(k - 1, picked)) {
        restore(mark);
        return true;
      }
      picked.pop_back();
      restore(mark);
    }
    return false;
  }

 private:
  VertexId min_degree_vertex() const {
    VertexId best = 0;
    std::size_t best_deg = SIZE_MAX;
    for (VertexId v = 0; v < h_.vertex_count(); ++v) {
      if (alive_[v] && deg_[v] < best_deg) {
        best = v;
        best_deg = deg_[v];
      }
    }
    return best;
  }

  void kill(VertexId v) {
    alive_[v] = 0;
    --alive_count_;
    trail_.push_back(v);
    for (VertexId u : h_.neighbors(v)) {
      if (alive_[u]) --deg_[u];
    }
  }

  void remove_closed_neighborhood(VertexId v) {
    kill(v);
    for (VertexId u : h_.neighbors(v)) {
      if (alive_[u]) kill(u);
    }
  }

  void restore(std::size_t mark) {
    while (trail_.size() > mark) {
      const VertexId v = trail_.back();
      trail_.pop_back();
      alive_[v] = 1;
      ++alive_count_;
      for (VertexId u : h_.neighbors(v)) {
        if (alive_[u]) ++deg_[u];
      }
    }
  }

  const Graph& h_;
  std::vector<std::uint8_t> alive_;
  std::vector<std::size_t> deg_;
  std::size_t alive_count_ = 0;
  std::vector<VertexId> trail_;
};

}  // namespace

IndependentSetResult find_independent_set(const Graph& h, std::size_t k) {
  IndependentSetResult result;
  if (k == 0) {
    result.set = VertexSet{};
    return result;
  }
  if (h.vertex_count() < k) return result;
  Solver solver(h);
  if (solver.kernel_applies(k)) {
    result.kernel_path = true;
    VertexSet s = solver.greedy(k);
    result.set = std::move(normalize(s));
    return result;
  }
  VertexSet picked;
  if (solver.branch(k, picked)) result.set = std::move(normalize(picked));
  return result;
}

}  // namespace fcs

#include "fcs/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>

#include "fcs/dynamics.hpp"
#include "fcs/parallel.hpp"

namespace fcs {

const char* to_string(Decision d) {
  switch (d) {
    case Decision::yes: return "YES";
    case Decision::no: return "NO";
    case Decision::exhausted: return "UNKNOWN";
  }
  return "UNKNOWN";
}

std::size_t lower_bound(const Instance& instance) {
  const std::size_t n = instance.vertex_count();
  const std::size_t mf = instance.max_threshold();
  return (n + mf - 1) / mf;
}

ForcedSets forced_sets(const Instance& instance, std::size_t k) {
  ForcedSets fs;
  const Graph& g = instance.graph();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::size_t f = instance.threshold(v);
    const std::size_t d = g.degree(v);
    const bool in = f > k;
    const bool out = d >= k + f;  // d(v) - k >= f(v) without underflow
    if (in) fs.forced_in.push_back(v);
    if (out) fs.forced_out.push_back(v);
    if (in && out) fs.infeasible = true;
  }
  return fs;
}

namespace {

/// Reusable one-step criticality test over an indicator vector.
class CriticalChecker {
 public:
  explicit CriticalChecker(const Instance& instance) : instance_(instance) {}

  bool operator()(const std::vector<std::uint8_t>& in_set) const {
    const Graph& g = instance_.graph();
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      std::size_t ones = 0;
      for (VertexId u : g.neighbors(v)) ones += in_set[u];
      const std::size_t f = instance_.threshold(v);
      if (in_set[v]) {
        if (g.degree(v) - ones >= f) return false;
      } else if (ones < f) {
        return false;
      }
    }
    return true;
  }

 private:
  const Instance& instance_;
};

/// Lexicographically first r-combination of `pool` (indices >= first fixed to
/// start with pool[first]) whose union with `base` is critical.
struct PartitionOutcome {
  std::optional<VertexSet> hit;
  bool exhausted = false;
};

PartitionOutcome scan_partition(const Instance& instance, const VertexSet& base,
                                const VertexSet& pool, std::size_t r, std::size_t first,
                                std::atomic<std::uint64_t>& work, std::uint64_t limit) {
  PartitionOutcome out;
  const std::size_t n = instance.vertex_count();
  CriticalChecker critical(instance);
  std::vector<std::uint8_t> mark = indicator(n, base);

  std::vector<std::size_t> idx(r);
  if (r > 0) {
    idx[0] = first;
    for (std::size_t i = 1; i < r; ++i) idx[i] = first + i;
    if (idx[r - 1] >= pool.size()) return out;
  }
  while (true) {
    if (work.fetch_add(1, std::memory_order_relaxed) >= limit) {
      out.exhausted = true;
      return out;
    }
    for (std::size_t i = 0; i < r; ++i) mark[pool[idx[i]]] = 1;
    const bool ok = critical(mark);
    for (std::size_t i = 0; i < r; ++i) mark[pool[idx[i]]] = 0;
    if (ok) {
      VertexSet s = base;
      for (std::size_t i = 0; i < r; ++i) s.push_back(pool[idx[i]]);
      out.hit = std::move(normalize(s));
      return out;
    }
    // advance positions 1..r-1; position 0 is pinned to this partition
    if (r <= 1) return out;
    std::size_t i = r - 1;
    while (i >= 1 && idx[i] == pool.size() - r + i) --i;
    if (i == 0) return out;
    ++idx[i];
    for (std::size_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

SolveResult enumerate_search(const Instance& instance, const ForcedSets& fs,
                             const SearchOptions& options, std::size_t cap) {
  SolveResult result;
  const std::size_t n = instance.vertex_count();
  std::vector<std::uint8_t> fixed(n, 0);
  for (VertexId v : fs.forced_in) fixed[v] = 1;
  for (VertexId v : fs.forced_out) fixed[v] = 1;
  VertexSet pool;
  for (VertexId v = 0; v < n; ++v) {
    if (!fixed[v]) pool.push_back(v);
  }

  std::atomic<std::uint64_t> work{0};
  const std::size_t start = std::max(lower_bound(instance), fs.forced_in.size());
  for (std::size_t s = start; s <= cap; ++s) {
    const std::size_t r = s - fs.forced_in.size();
    if (r > pool.size()) break;
    if (r == 0) {
      auto part = scan_partition(instance, fs.forced_in, pool, 0, 0, work, options.work_limit);
      if (part.exhausted) {
        result.decision = Decision::exhausted;
        result.work = work.load();
        return result;
      }
      if (part.hit) {
        result.decision = Decision::yes;
        result.witness = std::move(part.hit);
        result.optimum = s;
        result.work = work.load();
        return result;
      }
      continue;
    }

    const auto partitions = static_cast<std::int64_t>(pool.size() - r + 1);
    std::atomic<std::int64_t> best{partitions};
    std::atomic<bool> exhausted{false};
    std::vector<std::optional<VertexSet>> hits(static_cast<std::size_t>(partitions));
    const int threads = resolve_workers(options.workers);
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads != 1)
    for (std::int64_t p = 0; p < partitions; ++p) {
      if (p > best.load() || exhausted.load()) continue;
      auto part = scan_partition(instance, fs.forced_in, pool, r, static_cast<std::size_t>(p),
                                 work, options.work_limit);
      if (part.exhausted) exhausted = true;
      if (part.hit) {
        hits[static_cast<std::size_t>(p)] = std::move(part.hit);
        std::int64_t cur = best.load();
        while (p < cur && !best.compare_exchange_weak(cur, p)) {
        }
      }
    }
    const std::int64_t b = best.load();
    if (b < partitions) {
      result.decision = Decision::yes;
      result.witness = std::move(hits[static_cast<std::size_t>(b)]);
      result.optimum = s;
      result.work = work.load();
      return result;
    }
    if (exhausted) {
      result.decision = Decision::exhausted;
      result.work = work.load();
      return result;
    }
  }
  result.decision = Decision::no;
  result.work = work.load();
  return result;
}

/// Exhaustive DFS over in/out decisions, vertices branched in id order with the
/// "in" branch first, so the first set found at a given size is the
/// lexicographically first critical set of that size.
class PropagatingSearch {
 public:
  PropagatingSearch(const Instance& instance, std::uint64_t work_limit)
      : inst_(instance),
        g_(instance.graph()),
        n_(instance.vertex_count()),
        limit_(work_limit),
        assign_(n_, undecided),
        in_cnt_(n_, 0),
        out_cnt_(n_, 0) {}

  /// Critical set of exactly `size` vertices, lexicographically first.
  std::optional<VertexSet> find_exact(std::size_t size) {
    target_ = size;
    std::fill(assign_.begin(), assign_.end(), undecided);
    std::fill(in_cnt_.begin(), in_cnt_.end(), 0);
    std::fill(out_cnt_.begin(), out_cnt_.end(), 0);
    n_in_ = 0;
    n_und_ = n_;
    trail_.clear();
    if (!dfs()) return std::nullopt;
    VertexSet s;
    for (VertexId v = 0; v < n_; ++v) {
      if (assign_[v] == in) s.push_back(v);
    }
    return s;
  }

  bool exhausted() const { return exhausted_; }
  std::uint64_t work() const { return work_; }

 private:
  static constexpr std::int8_t undecided = -1;
  static constexpr std::int8_t out = 0;
  static constexpr std::int8_t in = 1;

  void set(VertexId v, std::int8_t value) {
    assign_[v] = value;
    auto& cnt = value == in ? in_cnt_ : out_cnt_;
    for (VertexId u : g_.neighbors(v)) ++cnt[u];
    n_in_ += (value == in);
    --n_und_;
    trail_.push_back(v);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const VertexId v = trail_.back();
      trail_.pop_back();
      auto& cnt = assign_[v] == in ? in_cnt_ : out_cnt_;
      for (VertexId u : g_.neighbors(v)) --cnt[u];
      n_in_ -= (assign_[v] == in);
      ++n_und_;
      assign_[v] = undecided;
    }
  }

  void force_neighbors_in(VertexId v) {
    for (VertexId u : g_.neighbors(v)) {
      if (assign_[u] == undecided) set(u, in);
    }
  }

  /// Applies forced decisions to a fixpoint; false on conflict.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      if (n_in_ > target_ || n_in_ + n_und_ < target_) return false;
      for (VertexId v = 0; v < n_; ++v) {
        if (n_in_ > target_ || n_in_ + n_und_ < target_) return false;
        const std::size_t rem = target_ - n_in_;
        const std::size_t d = g_.degree(v);
        const std::size_t f = inst_.threshold(v);
        const std::size_t ic = in_cnt_[v];
        const std::size_t oc = out_cnt_[v];
        const std::size_t und = d - ic - oc;
        // members need more than d - f neighbours inside; non-members need f
        const std::size_t need_in = d + 1 > f + ic ? d + 1 - f - ic : 0;
        const std::size_t need_out = f > ic ? f - ic : 0;
        if (assign_[v] == in) {
          if (oc >= f || need_in > std::min(und, rem)) return false;
          if (need_in > 0 && need_in == und) {
            force_neighbors_in(v);
            changed = true;
          }
        } else if (assign_[v] == out) {
          if (need_out > std::min(und, rem)) return false;
          if (need_out > 0 && need_out == und) {
            force_neighbors_in(v);
            changed = true;
          }
        } else {
          const bool can_in = rem >= 1 && oc < f && need_in <= std::min(und, rem - 1);
          const bool can_out = n_in_ + n_und_ - 1 >= target_ && need_out <= std::min(und, rem);
          if (!can_in && !can_out) return false;
          if (can_in != can_out) {
            set(v, can_in ? in : out);
            changed = true;
          }
        }
      }
    }
    return true;
  }

  bool dfs() {
    if (++work_ > limit_) {
      exhausted_ = true;
      return false;
    }
    const std::size_t mark = trail_.size();
    if (!propagate()) {
      undo(mark);
      return false;
    }
    VertexId branch = 0;
    while (branch < n_ && assign_[branch] != undecided) ++branch;
    if (branch == n_) return true;
    for (std::int8_t value : {in, out}) {
      const std::size_t inner = trail_.size();
      set(branch, value);
      if (dfs()) return true;
      undo(inner);
      if (exhausted_) break;
    }
    undo(mark);
    return false;
  }

  const Instance& inst_;
  const Graph& g_;
  const std::size_t n_;
  const std::uint64_t limit_;
  std::vector<std::int8_t> assign_;
  std::vector<std::uint32_t> in_cnt_;
  std::vector<std::uint32_t> out_cnt_;
  std::size_t n_in_ = 0;
  std::size_t n_und_ = 0;
  std::size_t target_ = 0;
  std::vector<VertexId> trail_;
  std::uint64_t work_ = 0;
  bool exhausted_ = false;
};

SolveResult propagate_search(const Instance& instance, const ForcedSets& fs,
                             const SearchOptions& options, std::size_t cap) {
  SolveResult result;
  PropagatingSearch search(instance, options.work_limit);
  const std::size_t start = std::max(lower_bound(instance), fs.forced_in.size());
  for (std::size_t s = start; s <= cap; ++s) {
    auto hit = search.find_exact(s);
    if (search.exhausted()) {
      result.decision = Decision::exhausted;
      result.work = search.work();
      return result;
    }
    if (hit) {
      assert(is_critical_set(instance, *hit));
      result.decision = Decision::yes;
      result.witness = std::move(hit);
      result.optimum = s;
      result.work = search.work();
      return result;
    }
  }
  result.decision = Decision::no;
  result.work = search.work();
  return result;
}

}  // namespace

SolveResult min_critical_set(const Instance& instance, const SearchOptions& options) {
  const std::size_t cap = std::min(options.size_cap, instance.vertex_count());
  const ForcedSets fs = forced_sets(instance, cap);
  if (fs.infeasible) {
    SolveResult r;
    r.reason = "a vertex is both forced in and forced out";
    return r;
  }
  if (fs.forced_in.size() > cap) {
    SolveResult r;
    r.reason = "more forced-in vertices than the size cap";
    return r;
  }
  return options.strategy == SearchStrategy::enumerate
             ? enumerate_search(instance, fs, options, cap)
             : propagate_search(instance, fs, options, cap);
}

SolveResult decide_kmf(const Instance& instance, SearchOptions options) {
  const std::size_t k = instance.budget();
  if (k * instance.max_threshold() < instance.vertex_count()) {
    SolveResult r;
    r.reason = "k * m(f) < n";
    return r;
  }
  options.size_cap = k;
  return min_critical_set(instance, options);
}

}  // namespace fcs

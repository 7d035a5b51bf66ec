#include "fcs/fpt.hpp"

#include <algorithm>
#include <atomic>
#include <optional>
#include <stdexcept>

#include "fcs/independent_set.hpp"
#include "fcs/parallel.hpp"

namespace fcs::fpt {

Partition partition(const Instance& instance) {
  const Graph& g = instance.graph();
  const std::size_t n = g.vertex_count();
  const std::size_t k = instance.budget();
  Partition p;
  p.budget = k;
  p.role.resize(n);
  p.primed.assign(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t f = instance.threshold(v);
    const bool stays_if_in = g.degree(v) < k + f;  // d(v) - k < f(v)
    if (f > k && stays_if_in) {
      p.role[v] = Role::a;
      p.a.push_back(v);
    } else if (f <= k && stays_if_in) {
      p.role[v] = Role::b;
      p.b.push_back(v);
    } else {
      p.role[v] = Role::c;
      p.c.push_back(v);
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    std::size_t in_a = 0;
    for (VertexId u : g.neighbors(v)) in_a += (p.role[u] == Role::a);
    const std::size_t f = instance.threshold(v);
    switch (p.role[v]) {
      case Role::a:
        if (g.degree(v) - in_a >= f) p.a_prime.push_back(v);
        break;
      case Role::b:
        if (in_a < f) p.b_prime.push_back(v);
        break;
      case Role::c:
        if (in_a < f) p.c_prime.push_back(v);
        break;
    }
  }
  p.primed_vertices = p.a_prime;
  p.primed_vertices.insert(p.primed_vertices.end(), p.b_prime.begin(), p.b_prime.end());
  p.primed_vertices.insert(p.primed_vertices.end(), p.c_prime.begin(), p.c_prime.end());
  std::sort(p.primed_vertices.begin(), p.primed_vertices.end());
  for (std::size_t i = 0; i < p.primed_vertices.size(); ++i) {
    p.primed[p.primed_vertices[i]] = static_cast<std::int32_t>(i);
  }
  return p;
}

GateResult feasibility_gate(const Partition& partition, const Instance& instance) {
  const std::size_t k = partition.budget;
  const Graph& g = instance.graph();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::size_t f = instance.threshold(v);
    if (f > k && g.degree(v) >= k + f) {
      return {false, "vertex " + std::to_string(v + 1) + " must be in and out of the set"};
    }
  }
  if (partition.a.size() > k) {
    return {false, "|A| = " + std::to_string(partition.a.size()) + " > k"};
  }
  const std::size_t primed = partition.primed_vertices.size();
  if (primed > 2 * k * k) {
    return {false, "|A'|+|B'|+|C'| = " + std::to_string(primed) + " > 2k^2"};
  }
  return {};
}

namespace {

class ConnectedSetEnumerator {
 public:
  ConnectedSetEnumerator(const Graph& g, std::span<const VertexId> ground, std::size_t bound)
      : g_(g), bound_(bound), in_ground_(g.vertex_count(), 0), closed_(g.vertex_count(), 0) {
    for (VertexId v : ground) in_ground_[v] = 1;
  }

  std::vector<VertexSet> run(std::span<const VertexId> ground) {
    VertexSet roots(ground.begin(), ground.end());
    normalize(roots);
    for (VertexId root : roots) {
      root_ = root;
      VertexSet ext;
      for (VertexId u : g_.neighbors(root)) {
        if (in_ground_[u] && u > root) ext.push_back(u);
      }
      sub_.assign(1, root);
      cover(root, +1);
      extend(ext);
      cover(root, -1);
    }
    std::sort(out_.begin(), out_.end(), [](const VertexSet& x, const VertexSet& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    return std::move(out_);
  }

 private:
  // closed_[u] counts members of sub_ in N[u]
  void cover(VertexId v, int delta) {
    closed_[v] += delta;
    for (VertexId u : g_.neighbors(v)) closed_[u] += delta;
  }

  void extend(VertexSet ext) {
    VertexSet sorted = sub_;
    out_.push_back(std::move(normalize(sorted)));
    if (sub_.size() == bound_) return;
    while (!ext.empty()) {
      const VertexId w = ext.back();
      ext.pop_back();
      VertexSet next = ext;
      for (VertexId u : g_.neighbors(w)) {
        if (!in_ground_[u] || u <= root_ || closed_[u] > 0) continue;
        if (std::find(next.begin(), next.end(), u) == next.end()) next.push_back(u);
      }
      sub_.push_back(w);
      cover(w, +1);
      extend(std::move(next));
      cover(w, -1);
      sub_.pop_back();
    }
  }

  const Graph& g_;
  const std::size_t bound_;
  std::vector<std::uint8_t> in_ground_;
  std::vector<int> closed_;
  VertexId root_ = 0;
  VertexSet sub_;
  std::vector<VertexSet> out_;
};

VertexSet ground_set(const Partition& p) {
  VertexSet ground;
  std::set_difference(p.b.begin(), p.b.end(), p.b_prime.begin(), p.b_prime.end(),
                      std::back_inserter(ground));
  return ground;
}

std::size_t slot_budget(const Partition& p, const VertexSet& r) {
  const std::size_t used = p.a.size() + r.size();
  return p.budget > used ? p.budget - used : 0;
}

void require_valid_r(const Partition& p, const VertexSet& r) {
  if (!std::includes(p.b_prime.begin(), p.b_prime.end(), r.begin(), r.end())) {
    throw std::invalid_argument("R must be a sorted subset of B'");
  }
  if (p.a.size() + r.size() > p.budget) throw std::invalid_argument("|R| exceeds k - |A|");
}

ConnectedFamily filter_family(const Instance& instance, const Partition& p, const VertexSet& r,
                              const std::vector<VertexSet>& candidates) {
  ConnectedFamily family;
  family.r = r;
  family.members.emplace_back();
  const std::size_t budget = slot_budget(p, r);
  for (const auto& s : candidates) {
    if (s.size() > budget) break;  // candidates are ordered by size
    if (keeps_state(instance, p, r, s)) family.members.push_back(s);
  }
  return family;
}

}  // namespace

std::vector<VertexSet> enum_connected_sets(const Graph& graph, std::span<const VertexId> ground,
                                           std::size_t bound) {
  if (bound == 0 || ground.empty()) return {};
  return ConnectedSetEnumerator(graph, ground, bound).run(ground);
}

bool keeps_state(const Instance& instance, const Partition& partition, const VertexSet& r,
                 const VertexSet& s) {
  const Graph& g = instance.graph();
  auto chosen = [&](VertexId u) {
    return partition.role[u] == Role::a || std::binary_search(r.begin(), r.end(), u) ||
           std::binary_search(s.begin(), s.end(), u);
  };
  for (VertexId v : s) {
    std::size_t outside = 0;
    for (VertexId u : g.neighbors(v)) outside += !chosen(u);
    if (outside >= instance.threshold(v)) return false;
  }
  return true;
}

ConnectedFamily compute_family(const Instance& instance, const Partition& partition,
                               const VertexSet& r) {
  require_valid_r(partition, r);
  const VertexSet ground = ground_set(partition);
  const auto candidates =
      enum_connected_sets(instance.graph(), ground, slot_budget(partition, r));
  return filter_family(instance, partition, r, candidates);
}

ClassKey class_key(const Graph& graph, const Partition& partition, const VertexSet& s) {
  ClassKey key;
  key.size = s.size();
  key.profile.assign(partition.primed_vertices.size(), 0);
  for (VertexId v : s) {
    for (VertexId u : graph.neighbors(v)) {
      if (partition.primed[u] >= 0) ++key.profile[static_cast<std::size_t>(partition.primed[u])];
    }
  }
  return key;
}

ClassMap classify(const Graph& graph, const ConnectedFamily& family, const Partition& partition) {
  ClassMap classes;
  for (std::size_t i = 0; i < family.members.size(); ++i) {
    classes[class_key(graph, partition, family.members[i])].push_back(i);
  }
  return classes;
}

std::vector<std::int64_t> demands(const Instance& instance, const Partition& partition,
                                  const VertexSet& r) {
  const Graph& g = instance.graph();
  std::vector<std::int64_t> need(partition.primed_vertices.size());
  for (std::size_t i = 0; i < need.size(); ++i) {
    const VertexId v = partition.primed_vertices[i];
    std::int64_t in_a = 0;
    std::int64_t in_r = 0;
    for (VertexId u : g.neighbors(v)) {
      in_a += partition.role[u] == Role::a;
      in_r += std::binary_search(r.begin(), r.end(), u);
    }
    const auto d = static_cast<std::int64_t>(g.degree(v));
    const auto f = static_cast<std::int64_t>(instance.threshold(v));
    const bool keeps = partition.role[v] == Role::a || std::binary_search(r.begin(), r.end(), v);
    need[i] = keeps ? d - f + 1 - in_a - in_r : f - in_a - in_r;
  }
  return need;
}

bool check_demands(const Instance& instance, const Partition& partition, const VertexSet& r,
                   std::span<const ClassKey> slots) {
  std::size_t total = 0;
  for (const auto& key : slots) total += key.size;
  if (total > slot_budget(partition, r) ||
      partition.a.size() + r.size() > partition.budget) {
    throw std::invalid_argument("slot sizes exceed k - |A| - |R|");
  }
  const auto need = demands(instance, partition, r);
  for (std::size_t i = 0; i < need.size(); ++i) {
    std::int64_t got = 0;
    for (const auto& key : slots) got += key.profile.at(i);
    if (got < need[i]) return false;
  }
  return true;
}

bool sets_adjacent(const Graph& graph, const VertexSet& s1, const VertexSet& s2) {
  if (s1.empty() || s2.empty()) return false;
  for (VertexId v : s1) {
    if (std::binary_search(s2.begin(), s2.end(), v)) return true;
    for (VertexId u : graph.neighbors(v)) {
      if (std::binary_search(s2.begin(), s2.end(), u)) return true;
    }
  }
  return false;
}

ConflictGraph build_conflict_graph(const Graph& graph, const ConnectedFamily& family,
                                   const ClassMap& classes, std::span<const ClassKey> slots) {
  ConflictGraph h;
  std::vector<std::size_t> slot_begin;
  for (std::size_t slot = 0; slot < slots.size(); ++slot) {
    slot_begin.push_back(h.nodes.size());
    const auto it = classes.find(slots[slot]);
    if (it == classes.end()) continue;
    for (std::size_t member : it->second) h.nodes.push_back({slot, member});
  }
  h.graph = Graph(h.nodes.size());
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    for (std::size_t j = i + 1; j < h.nodes.size(); ++j) {
      const auto& x = h.nodes[i];
      const auto& y = h.nodes[j];
      if (x.slot == y.slot ||
          sets_adjacent(graph, family.members[x.member], family.members[y.member])) {
        h.graph.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
      }
    }
  }
  return h;
}

namespace {

/// Everything the per-R search needs that does not depend on R.
struct SearchContext {
  const Instance& instance;
  const Partition& partition;
  const FptOptions& options;
  std::vector<VertexSet> candidates;  // connected subsets of B \ B', by size
  std::atomic<std::uint64_t>& work;
  std::atomic<bool>& exhausted;

  bool tick() const {
    if (work.fetch_add(1, std::memory_order_relaxed) >= options.work_limit) {
      exhausted = true;
      return false;
    }
    return !exhausted.load(std::memory_order_relaxed);
  }
};

struct RunResult {
  std::optional<VertexSet> witness;
  FamilyStats stats;
};

/// Independent set of size k in H over the given slots; the union of the chosen
/// sets when it exists.
std::optional<VertexSet> select_sets(const SearchContext& ctx, const ConnectedFamily& family,
                                     const ClassMap& classes, std::span<const ClassKey> slots) {
  const ConflictGraph h = build_conflict_graph(ctx.instance.graph(), family, classes, slots);
  const auto is = find_independent_set(h.graph, slots.size());
  if (!is.set) return std::nullopt;
  VertexSet chosen;
  for (VertexId node : *is.set) {
    const auto& s = family.members[h.nodes[node].member];
    chosen.insert(chosen.end(), s.begin(), s.end());
  }
  return chosen;
}

class RealizedClassSearch {
 public:
  RealizedClassSearch(const SearchContext& ctx, const ConnectedFamily& family,
                      const ClassMap& classes, std::vector<std::int64_t> need, std::size_t budget)
      : ctx_(ctx), family_(family), classes_(classes), need_(std::move(need)), budget_(budget) {
    for (const auto& [key, members] : classes) {
      if (key.size > 0) keys_.push_back(&key);
    }
    got_.assign(need_.size(), 0);
  }

  std::optional<VertexSet> run() {
    found_.reset();
    recurse(0, 0);
    return found_;
  }

 private:
  bool recurse(std::size_t from, std::size_t used) {
    if (!ctx_.tick()) return false;
    const std::size_t remaining = budget_ - used;
    for (std::size_t i = 0; i < need_.size(); ++i) {
      if (need_[i] - got_[i] > static_cast<std::int64_t>(remaining)) return false;
    }
    const bool satisfied = std::all_of(need_.begin(), need_.end(), [&, i = std::size_t{0}](
                                                                       std::int64_t x) mutable {
      return got_[i++] >= x;
    });
    if (satisfied && try_select()) return true;
    if (chosen_.size() == ctx_.partition.budget) return false;
    for (std::size_t c = from; c < keys_.size(); ++c) {
      const ClassKey& key = *keys_[c];
      if (used + key.size > budget_) break;  // keys_ ascend by size
      chosen_.push_back(&key);
      for (std::size_t i = 0; i < got_.size(); ++i) got_[i] += key.profile[i];
      const bool hit = recurse(c, used + key.size);
      for (std::size_t i = 0; i < got_.size(); ++i) got_[i] -= key.profile[i];
      chosen_.pop_back();
      if (hit) return true;
      if (ctx_.exhausted.load(std::memory_order_relaxed)) return false;
    }
    return false;
  }

  bool try_select() {
    std::vector<ClassKey> slots;
    for (const ClassKey* key : chosen_) slots.push_back(*key);
    ClassKey empty;
    empty.profile.assign(need_.size(), 0);
    slots.resize(ctx_.partition.budget, empty);
    found_ = select_sets(ctx_, family_, classes_, slots);
    return found_.has_value();
  }

  const SearchContext& ctx_;
  const ConnectedFamily& family_;
  const ClassMap& classes_;
  const std::vector<std::int64_t> need_;
  const std::size_t budget_;
  std::vector<const ClassKey*> keys_;
  std::vector<const ClassKey*> chosen_;
  std::vector<std::int64_t> got_;
  std::optional<VertexSet> found_;
};

/// The literal sweep: every size vector (l_1..l_k) with sum <= budget and every
/// h_i : primed -> {0..l_i}.
class FaithfulSearch {
 public:
  FaithfulSearch(const SearchContext& ctx, const ConnectedFamily& family, const ClassMap& classes,
                 std::vector<std::int64_t> need, std::size_t budget)
      : ctx_(ctx),
        family_(family),
        classes_(classes),
        need_(std::move(need)),
        budget_(budget),
        k_(ctx.partition.budget),
        p_(need_.size()) {}

  std::optional<VertexSet> run() {
    std::vector<std::size_t> sizes(k_, 0);
    std::optional<VertexSet> hit;
    sweep_sizes(sizes, 0, 0, hit);
    return hit;
  }

 private:
  bool sweep_sizes(std::vector<std::size_t>& sizes, std::size_t slot, std::size_t used,
                   std::optional<VertexSet>& hit) {
    if (slot == k_) return sweep_profiles(sizes, hit);
    for (std::size_t l = 0; used + l <= budget_; ++l) {
      sizes[slot] = l;
      if (sweep_sizes(sizes, slot + 1, used + l, hit)) return true;
      if (ctx_.exhausted.load(std::memory_order_relaxed)) return false;
    }
    return false;
  }

  bool sweep_profiles(const std::vector<std::size_t>& sizes, std::optional<VertexSet>& hit) {
    std::vector<ClassKey> slots(k_);
    for (std::size_t i = 0; i < k_; ++i) {
      slots[i].size = sizes[i];
      slots[i].profile.assign(p_, 0);
    }
    // odometer over k_ * p_ digits, digit (i, v) ranging over 0..sizes[i]
    while (true) {
      if (!ctx_.tick()) return false;
      bool ok = true;
      for (std::size_t v = 0; v < p_ && ok; ++v) {
        std::int64_t got = 0;
        for (std::size_t i = 0; i < k_; ++i) got += slots[i].profile[v];
        ok = got >= need_[v];
      }
      if (ok) {
        hit = select_sets(ctx_, family_, classes_, slots);
        if (hit) return true;
      }
      std::size_t i = 0;
      std::size_t v = 0;
      bool carried = true;
      for (i = 0; i < k_ && carried; ++i) {
        for (v = 0; v < p_ && carried; ++v) {
          if (slots[i].profile[v] < sizes[i]) {
            ++slots[i].profile[v];
            carried = false;
          } else {
            slots[i].profile[v] = 0;
          }
        }
      }
      if (carried) return false;
    }
  }

  const SearchContext& ctx_;
  const ConnectedFamily& family_;
  const ClassMap& classes_;
  const std::vector<std::int64_t> need_;
  const std::size_t budget_;
  const std::size_t k_;
  const std::size_t p_;
};

RunResult solve_for_r(const SearchContext& ctx, const VertexSet& r) {
  RunResult out;
  const Partition& p = ctx.partition;
  const std::size_t budget = slot_budget(p, r);
  const ConnectedFamily family = filter_family(ctx.instance, p, r, ctx.candidates);
  if (ctx.options.collect_family_stats) {
    out.stats.r = r;
    out.stats.ground_size = p.b.size() - p.b_prime.size();
    out.stats.count_by_size.assign(budget + 1, 0);
    for (const auto& s : family.members) ++out.stats.count_by_size[s.size()];
  }
  const ClassMap classes = classify(ctx.instance.graph(), family, p);
  auto need = demands(ctx.instance, p, r);

  std::optional<VertexSet> chosen;
  if (ctx.options.faithful) {
    chosen = FaithfulSearch(ctx, family, classes, std::move(need), budget).run();
  } else {
    chosen = RealizedClassSearch(ctx, family, classes, std::move(need), budget).run();
  }
  if (chosen) {
    VertexSet witness = p.a;
    witness.insert(witness.end(), r.begin(), r.end());
    witness.insert(witness.end(), chosen->begin(), chosen->end());
    out.witness = std::move(normalize(witness));
  }
  return out;
}

/// Subsets of `pool` with size <= max_size, by size then lexicographically.
std::vector<VertexSet> subsets_up_to(const VertexSet& pool, std::size_t max_size) {
  std::vector<VertexSet> out;
  max_size = std::min(max_size, pool.size());
  for (std::size_t size = 0; size <= max_size; ++size) {
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    while (true) {
      VertexSet s;
      for (std::size_t i : idx) s.push_back(pool[i]);
      out.push_back(std::move(s));
      if (size == 0) break;
      std::size_t i = size;
      while (i > 0 && idx[i - 1] == pool.size() - size + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return out;
}

}  // namespace

FptReport decide(const Instance& instance, const FptOptions& options) {
  FptReport report;
  report.partition = partition(instance);
  const Partition& p = report.partition;
  report.gate = feasibility_gate(p, instance);
  if (!report.gate.pass) {
    report.result.decision = Decision::no;
    report.result.reason = report.gate.reason;
    return report;
  }

  std::atomic<std::uint64_t> work{0};
  std::atomic<bool> exhausted{false};
  const std::size_t base_budget = p.budget - p.a.size();
  SearchContext ctx{instance, p, options, {}, work, exhausted};
  const VertexSet ground = ground_set(p);
  ctx.candidates = enum_connected_sets(instance.graph(), ground, base_budget);
  report.ground_count_by_size.assign(base_budget + 1, 0);
  report.ground_count_by_size[0] = 1;
  for (const auto& s : ctx.candidates) ++report.ground_count_by_size[s.size()];

  const std::vector<VertexSet> rs = subsets_up_to(p.b_prime, base_budget);
  const auto total = static_cast<std::int64_t>(rs.size());
  std::vector<RunResult> runs(rs.size());
  std::atomic<std::int64_t> best{total};
  const int threads = resolve_workers(options.workers);

#pragma omp parallel for schedule(dynamic, 1) num_threads(threads) if (threads != 1)
  for (std::int64_t i = 0; i < total; ++i) {
    if (i > best.load() || exhausted.load()) continue;
    auto run = solve_for_r(ctx, rs[static_cast<std::size_t>(i)]);
    const bool hit = run.witness.has_value();
    runs[static_cast<std::size_t>(i)] = std::move(run);
    if (hit) {
      std::int64_t cur = best.load();
      while (i < cur && !best.compare_exchange_weak(cur, i)) {
      }
    }
  }

  const std::int64_t b = best.load();
  if (options.collect_family_stats) {
    const std::int64_t last = std::min(b, total - 1);
    for (std::int64_t i = 0; i <= last; ++i) {
      auto& stats = runs[static_cast<std::size_t>(i)].stats;
      if (!stats.count_by_size.empty()) report.families.push_back(std::move(stats));
    }
  }
  report.result.work = work.load();
  if (b < total) {
    report.result.decision = Decision::yes;
    report.result.witness = std::move(runs[static_cast<std::size_t>(b)].witness);
  } else if (exhausted.load()) {
    report.result.decision = Decision::exhausted;
  } else {
    report.result.decision = Decision::no;
  }
  return report;
}

}  // namespace fcs::fpt

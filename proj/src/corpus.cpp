#include "fcs/corpus.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>

namespace fcs::corpus {

namespace {

constexpr std::size_t kMaxN = 8;

/// Adjacency as a bitmask over vertex pairs.
struct Code {
  std::size_t n = 0;
  std::uint64_t bits = 0;
};

std::size_t pair_index(std::size_t u, std::size_t v) {
  if (u > v) std::swap(u, v);
  return v * (v - 1) / 2 + u;
}

bool adjacent(const Code& c, std::size_t u, std::size_t v) {
  return (c.bits >> pair_index(u, v)) & 1U;
}

/// Smallest relabelled code over all permutations that list vertices by
/// nondecreasing degree.
std::uint64_t canonical(const Code& c) {
  const std::size_t n = c.n;
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (adjacent(c, u, v)) {
        ++deg[u];
        ++deg[v];
      }
    }
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return deg[a] != deg[b] ? deg[a] < deg[b] : a < b; });
  // blocks of equal degree
  std::vector<std::pair<std::size_t, std::size_t>> blocks;
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && deg[order[j]] == deg[order[i]]) ++j;
    blocks.emplace_back(i, j);
    i = j;
  }
  std::uint64_t best = ~std::uint64_t{0};
  auto evaluate = [&]() {
    std::uint64_t bits = 0;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a + 1; b < n; ++b) {
        if (adjacent(c, order[a], order[b])) bits |= std::uint64_t{1} << pair_index(a, b);
      }
    }
    best = std::min(best, bits);
  };
  auto recurse = [&](auto&& self, std::size_t block) -> void {
    if (block == blocks.size()) {
      evaluate();
      return;
    }
    auto first = order.begin() + static_cast<std::ptrdiff_t>(blocks[block].first);
    auto last = order.begin() + static_cast<std::ptrdiff_t>(blocks[block].second);
    std::sort(first, last);
    do {
      self(self, block + 1);
    } while (std::next_permutation(first, last));
  };
  recurse(recurse, 0);
  return best;
}

Graph to_graph(const Code& c) {
  Graph g(c.n);
  for (std::size_t v = 1; v < c.n; ++v) {
    for (std::size_t u = 0; u < v; ++u) {
      if (adjacent(c, u, v)) g.add_edge(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
  }
  return g;
}

/// Classes on n vertices obtained by adding a vertex to each class on n-1 vertices.
std::vector<Code> grow(const std::vector<Code>& smaller, std::size_t n, bool connected) {
  std::set<std::uint64_t> seen;
  std::vector<Code> out;
  const std::size_t old_n = n - 1;
  for (const Code& c : smaller) {
    const std::uint64_t subsets = std::uint64_t{1} << old_n;
    for (std::uint64_t mask = connected ? 1 : 0; mask < subsets; ++mask) {
      Code next{n, c.bits};
      for (std::size_t u = 0; u < old_n; ++u) {
        if ((mask >> u) & 1U) next.bits |= std::uint64_t{1} << pair_index(u, old_n);
      }
      const std::uint64_t key = canonical(next);
      if (seen.insert(key).second) out.push_back({n, key});
    }
  }
  std::sort(out.begin(), out.end(), [](const Code& a, const Code& b) { return a.bits < b.bits; });
  return out;
}

std::vector<Graph> generate(std::size_t n, bool connected) {
  if (n == 0 || n > kMaxN) throw std::invalid_argument("graph corpus supports 1 <= n <= 8");
  std::vector<Code> level{{1, 0}};
  for (std::size_t size = 2; size <= n; ++size) level = grow(level, size, connected);
  std::vector<Graph> out;
  for (const Code& c : level) out.push_back(to_graph(c));
  return out;
}

}  // namespace

std::vector<Graph> all_graphs(std::size_t n) { return generate(n, false); }

// Every connected graph has a vertex whose removal leaves it connected, so growing
// connected classes by one attached vertex reaches them all.
std::vector<Graph> connected_graphs(std::size_t n) { return generate(n, true); }

Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  if (n == 0) throw std::invalid_argument("n must be positive");
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  Graph g(n);
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    g.add_edge(order[i], order[pick(rng)]);
  }
  std::bernoulli_distribution coin(p);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v) && coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
  Graph g(n);
  std::bernoulli_distribution coin(p);
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (coin(rng)) g.add_edge(u, v);
    }
  }
  return g;
}

std::vector<Threshold> random_thresholds(const Graph& g, Threshold cap, Rng& rng) {
  std::vector<Threshold> f(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const auto hi = std::min<Threshold>(static_cast<Threshold>(g.degree(v) + 1), cap);
    f[v] = std::uniform_int_distribution<Threshold>(1, hi)(rng);
  }
  return f;
}

std::vector<Threshold> random_thresholds(const Graph& g, Rng& rng) {
  return random_thresholds(g, std::numeric_limits<Threshold>::max(), rng);
}

Instance random_instance(std::size_t n, double p, std::size_t k, Rng& rng) {
  Graph g = random_connected_graph(n, p, rng);
  auto f = random_thresholds(g, rng);
  auto edges = g.edges();
  return make_instance(n, edges, f, k);
}

void for_each_threshold_vector(const Graph& g, Threshold cap,
                               const std::function<bool(const std::vector<Threshold>&)>& visit) {
  const std::size_t n = g.vertex_count();
  std::vector<Threshold> hi(n);
  for (VertexId v = 0; v < n; ++v) {
    hi[v] = std::min<Threshold>(static_cast<Threshold>(g.degree(v) + 1), cap);
  }
  std::vector<Threshold> f(n, 1);
  while (true) {
    if (!visit(f)) return;
    std::size_t i = n;
    while (i > 0 && f[i - 1] == hi[i - 1]) f[--i] = 1;
    if (i == 0) return;
    ++f[i - 1];
  }
}

}  // namespace fcs::corpus

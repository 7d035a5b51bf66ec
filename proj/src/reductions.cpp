#include "fcs/reductions.hpp"

#include <algorithm>
#include <stdexcept>

#include "fcs/dynamics.hpp"

namespace fcs {

namespace {

std::string id1(std::size_t v) { return std::to_string(v + 1); }

/// Incremental product builder: vertices are numbered in creation order.
class Builder {
 public:
  VertexId add(Threshold f) {
    thresholds_.push_back(f);
    return static_cast<VertexId>(thresholds_.size() - 1);
  }
  void link(VertexId u, VertexId v) { edges_.emplace_back(u, v); }
  void cycle(const std::vector<VertexId>& c) {
    for (std::size_t i = 0; i < c.size(); ++i) link(c[i], c[(i + 1) % c.size()]);
  }
  void set_threshold(VertexId v, Threshold f) { thresholds_[v] = f; }
  std::size_t size() const { return thresholds_.size(); }

  Instance finish(std::size_t budget, const ValidationOptions& options = {}) const {
    RawInstance raw{thresholds_.size(), edges_, thresholds_, static_cast<std::int64_t>(budget)};
    return make_instance(raw, options);
  }

 private:
  std::vector<Edge> edges_;
  std::vector<Threshold> thresholds_;
};

VertexSet sorted(std::vector<VertexId> v) { return std::move(normalize(v)); }

bool contains(const VertexSet& s, VertexId v) { return std::binary_search(s.begin(), s.end(), v); }

}  // namespace

const std::vector<VertexId>& find_group(const GroupRegistry& registry, const std::string& name) {
  for (const auto& g : registry) {
    if (g.name == name) return g.members;
  }
  throw std::out_of_range("no group named " + name);
}

bool is_vertex_cover(const Graph& graph, const VertexSet& cover) {
  for (const auto& [u, v] : graph.edges()) {
    if (!contains(cover, u) && !contains(cover, v)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Vertex Cover

VcLayout vc_to_critical(const Graph& source, std::size_t k) {
  if (k == 0) throw std::invalid_argument("k must be at least 1");
  if (source.edge_count() == 0) throw std::invalid_argument("source graph has no edge");
  if (!source.is_connected()) throw std::invalid_argument("source graph is not connected");

  const std::size_t n = source.vertex_count();
  const std::size_t delta = source.max_degree();
  const std::size_t len = 2 * delta - 1;
  Builder b;

  std::vector<std::vector<VertexId>> paths(n);
  VertexSet p_even, p_odd;
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < len; ++j) {
      const VertexId p = b.add(1);
      paths[v].push_back(p);
      (j % 2 == 0 ? p_odd : p_even).push_back(p);  // j is 0-based: v_{j+1}
      if (j > 0) b.link(paths[v][j - 1], p);
    }
  }

  const std::vector<Edge> edges = source.edges();
  std::vector<VertexId> edge_vertex;
  std::vector<std::size_t> next_slot(n, 0);
  std::vector<std::uint8_t> attached(n * len, 0);
  for (const auto& [u, v] : edges) {
    const VertexId e = b.add(2);
    edge_vertex.push_back(e);
    for (VertexId end : {u, v}) {
      const VertexId p = paths[end][next_slot[end]];
      next_slot[end] += 2;
      attached[p] = 1;
      b.link(e, p);
    }
  }

  VertexSet q, q_even, q_odd;
  for (VertexId v = 0; v < n; ++v) {
    for (std::size_t j = 0; j < len; ++j) {
      const VertexId p = paths[v][j];
      if (attached[p]) continue;
      const VertexId leaf = b.add(2);
      b.link(p, leaf);
      q.push_back(leaf);
      (j % 2 == 0 ? q_odd : q_even).push_back(leaf);
    }
  }

  const std::size_t k_prime = edges.size() + q.size() + k * len;
  return VcLayout{
      .source = source,
      .k = k,
      .delta = delta,
      .path_length = len,
      .source_edges = edges,
      .edge_vertex = std::move(edge_vertex),
      .paths = std::move(paths),
      .p_even = std::move(p_even),
      .p_odd = std::move(p_odd),
      .q = std::move(q),
      .q_even = std::move(q_even),
      .q_odd = std::move(q_odd),
      .k_prime = k_prime,
      .product = b.finish(k_prime),
  };
}

GroupRegistry VcLayout::registry() const {
  GroupRegistry r;
  r.push_back({"F", edge_vertex});
  for (std::size_t v = 0; v < paths.size(); ++v) r.push_back({"P_" + id1(v), paths[v]});
  r.push_back({"P^e", p_even});
  r.push_back({"P^o", p_odd});
  r.push_back({"Q", q});
  r.push_back({"Q^e", q_even});
  r.push_back({"Q^o", q_odd});
  return r;
}

std::vector<std::string> validate_layout(const VcLayout& layout) {
  std::vector<std::string> bad;
  const Instance& p = layout.product;
  const Graph& g = p.graph();
  const std::size_t n = layout.source.vertex_count();
  const std::size_t m = layout.source.edge_count();

  if (p.max_threshold() > 2) bad.push_back("m(f) > 2");
  if (g.max_degree() > 3) bad.push_back("max degree > 3");
  if (g.vertex_count() != 2 * n * layout.path_length - m) bad.push_back("|V'| != 2|V|(2Δ-1)-|E|");
  if (layout.k_prime != m + layout.q.size() + layout.k * layout.path_length) {
    bad.push_back("k' != |F|+|Q|+k(2Δ-1)");
  }
  if (p.budget() != layout.k_prime) bad.push_back("product budget != k'");
  if (g.vertex_count() >= 3 && g.edge_count() + 4 > 2 * g.vertex_count()) {
    bad.push_back("more than 2n'-4 edges");
  }

  // side 0: P^e ∪ F ∪ Q^o, side 1: P^o ∪ Q^e
  std::vector<int> side(g.vertex_count(), -1);
  auto assign = [&](const std::vector<VertexId>& group, int s) {
    for (VertexId v : group) {
      if (side[v] != -1) bad.push_back("vertex " + id1(v) + " lies in two parts");
      side[v] = s;
    }
  };
  assign(layout.p_even, 0);
  assign(layout.edge_vertex, 0);
  assign(layout.q_odd, 0);
  assign(layout.p_odd, 1);
  assign(layout.q_even, 1);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    if (side[v] == -1) bad.push_back("vertex " + id1(v) + " lies in no part");
  }
  for (const auto& [u, v] : g.edges()) {
    if (side[u] == side[v]) bad.push_back("edge " + id1(u) + "-" + id1(v) + " inside a part");
  }

  VertexSet f_set = sorted(layout.edge_vertex);
  for (VertexId e : layout.edge_vertex) {
    if (g.degree(e) != 2 || p.threshold(e) != 2) bad.push_back("F vertex " + id1(e) + " malformed");
  }
  for (VertexId leaf : layout.q) {
    if (g.degree(leaf) != 1 || p.threshold(leaf) != 2) {
      bad.push_back("Q vertex " + id1(leaf) + " malformed");
    }
  }
  const std::size_t len = layout.path_length;
  for (const auto& path : layout.paths) {
    for (std::size_t j = 0; j < len; ++j) {
      const VertexId v = path[j];
      const std::size_t expect = len == 1 ? 1 : (j == 0 || j + 1 == len ? 2 : 3);
      if (g.degree(v) != expect || p.threshold(v) != 1) {
        bad.push_back("path vertex " + id1(v) + " malformed");
      }
      if (j % 2 == 1) {
        for (VertexId u : g.neighbors(v)) {
          if (contains(f_set, u)) bad.push_back("even path vertex " + id1(v) + " touches F");
        }
      }
    }
  }
  return bad;
}

VertexSet vc_witness_forward(const VcLayout& layout, const VertexSet& cover) {
  if (cover.size() > layout.k) throw std::invalid_argument("cover larger than k");
  for (const auto& [u, v] : layout.source_edges) {
    if (!contains(cover, u) && !contains(cover, v)) {
      throw std::invalid_argument("edge " + id1(u) + "-" + id1(v) + " is not covered");
    }
  }
  VertexSet out = layout.edge_vertex;
  out.insert(out.end(), layout.q.begin(), layout.q.end());
  for (VertexId v : cover) out.insert(out.end(), layout.paths[v].begin(), layout.paths[v].end());
  return sorted(std::move(out));
}

VertexSet vc_witness_backward(const VcLayout& layout, const VertexSet& critical) {
  if (critical.size() > layout.k_prime) throw std::invalid_argument("critical set larger than k'");
  if (!is_critical_set(layout.product, critical)) {
    throw std::invalid_argument("set is not critical in the product");
  }
  VertexSet cover;
  for (VertexId v = 0; v < layout.paths.size(); ++v) {
    const auto& path = layout.paths[v];
    if (std::all_of(path.begin(), path.end(), [&](VertexId p) { return contains(critical, p); })) {
      cover.push_back(v);
    }
  }
  if (cover.size() > layout.k || !is_vertex_cover(layout.source, cover)) {
    throw std::logic_error("extracted set is not a vertex cover of size <= k");
  }
  return cover;
}

// ---------------------------------------------------------------------------
// Clique

CliqueLayout clique_to_critical(const Graph& source, std::size_t k) {
  const std::size_t n = source.vertex_count();
  if (n < 2) throw std::invalid_argument("source graph needs at least 2 vertices");
  if (k < 2) throw std::invalid_argument("k must be at least 2");

  const std::size_t q = 2 * n;
  const std::size_t k_prime = k * k * q + k + 1;
  std::vector<std::size_t> m_len(n), n_len(n);
  for (std::size_t i = 0; i < n; ++i) {
    m_len[i] = n + i;
    n_len[i] = n - i;
  }
  Builder b;
  const auto kt = static_cast<Threshold>(k);
  const auto qt = static_cast<Threshold>(q);

  std::vector<std::vector<std::vector<VertexId>>> u_cycles(k, std::vector<std::vector<VertexId>>(n));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < q; ++j) u_cycles[r][i].push_back(b.add(kt + 1));
      b.cycle(u_cycles[r][i]);
    }
  }
  std::vector<VertexId> u_hubs(k);
  for (std::size_t r = 0; r < k; ++r) {
    u_hubs[r] = b.add(qt);
    for (const auto& cyc : u_cycles[r]) {
      for (VertexId v : cyc) b.link(u_hubs[r], v);
    }
  }

  std::vector<std::vector<VertexId>> a(k, std::vector<VertexId>(k)), bb = a;
  VertexSet c;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = 0; s < k; ++s) {
      if (r == s) continue;
      a[r][s] = b.add(qt);
      bb[r][s] = b.add(qt);
      c.push_back(a[r][s]);
      c.push_back(bb[r][s]);
      for (std::size_t i = 0; i < n; ++i) {
        const auto& cyc = u_cycles[r][i];
        for (std::size_t j = 0; j < q; ++j) b.link(j < m_len[i] ? a[r][s] : bb[r][s], cyc[j]);
      }
    }
  }

  const std::vector<Edge> edges = source.edges();
  std::vector<YCycle> y_cycles;
  std::vector<std::vector<VertexId>> y_hubs(k, std::vector<VertexId>(k));
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r + 1; s < k; ++s) {
      std::vector<VertexId> pair_members;
      for (const auto& [i, j] : edges) {
        for (const auto& [x, y] : {Edge{i, j}, Edge{j, i}}) {
          YCycle yc{r, s, x, y, {}};
          for (std::size_t t = 0; t < 2 * q; ++t) yc.cycle.push_back(b.add(3));
          b.cycle(yc.cycle);
          // contiguous arcs N_x, M_x, N_y, M_y
          const std::size_t arcs[4] = {n_len[x], m_len[x], n_len[y], m_len[y]};
          const VertexId ends[4] = {a[r][s], bb[r][s], a[s][r], bb[s][r]};
          std::size_t t = 0;
          for (int arc = 0; arc < 4; ++arc) {
            for (std::size_t l = 0; l < arcs[arc]; ++l) b.link(ends[arc], yc.cycle[t++]);
          }
          pair_members.insert(pair_members.end(), yc.cycle.begin(), yc.cycle.end());
          y_cycles.push_back(std::move(yc));
        }
      }
      y_hubs[r][s] = b.add(2 * qt);
      for (VertexId v : pair_members) b.link(y_hubs[r][s], v);
    }
  }

  VertexSet w;
  for (std::size_t t = 0; t < k_prime; ++t) {
    const VertexId v = b.add(1);
    w.push_back(v);
    for (VertexId x : c) b.link(v, x);
    for (VertexId x : u_hubs) b.link(v, x);
    for (std::size_t r = 0; r < k; ++r) {
      for (std::size_t s = r + 1; s < k; ++s) b.link(v, y_hubs[r][s]);
    }
  }

  std::vector<VertexId> uyw;
  for (const auto& per_r : u_cycles) {
    for (const auto& cyc : per_r) uyw.insert(uyw.end(), cyc.begin(), cyc.end());
  }
  for (const auto& yc : y_cycles) uyw.insert(uyw.end(), yc.cycle.begin(), yc.cycle.end());
  uyw.insert(uyw.end(), w.begin(), w.end());
  VertexSet z;
  for (std::size_t t = 0; t <= k; ++t) {
    const VertexId v = b.add(static_cast<Threshold>(uyw.size() + 1));
    z.push_back(v);
    for (VertexId x : uyw) b.link(v, x);
  }

  return CliqueLayout{
      .source = source,
      .k = k,
      .q = q,
      .m_len = std::move(m_len),
      .n_len = std::move(n_len),
      .u_cycles = std::move(u_cycles),
      .u_hubs = std::move(u_hubs),
      .a = std::move(a),
      .b = std::move(bb),
      .y_cycles = std::move(y_cycles),
      .y_hubs = std::move(y_hubs),
      .c = sorted(std::move(c)),
      .w = std::move(w),
      .z = std::move(z),
      .k_prime = k_prime,
      .product = b.finish(k_prime),
  };
}

GroupRegistry CliqueLayout::registry() const {
  GroupRegistry reg;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t i = 0; i < u_cycles[r].size(); ++i) {
      reg.push_back({"U^" + id1(r) + "_" + id1(i), u_cycles[r][i]});
    }
  }
  for (std::size_t r = 0; r < k; ++r) reg.push_back({"u^" + id1(r), {u_hubs[r]}});
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = 0; s < k; ++s) {
      if (r != s) reg.push_back({"C^" + id1(r) + "," + id1(s), {a[r][s], b[r][s]}});
    }
  }
  for (const auto& yc : y_cycles) {
    reg.push_back({"Y^" + id1(yc.r) + "," + id1(yc.s) + "_" + id1(yc.x) + "," + id1(yc.y),
                   yc.cycle});
  }
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r + 1; s < k; ++s) {
      reg.push_back({"y^" + id1(r) + "," + id1(s), {y_hubs[r][s]}});
    }
  }
  reg.push_back({"W", w});
  reg.push_back({"Z", z});
  return reg;
}

VertexSet CliqueLayout::x_vertices() const {
  VertexSet x = c;
  x.insert(x.end(), u_hubs.begin(), u_hubs.end());
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r + 1; s < k; ++s) x.push_back(y_hubs[r][s]);
  }
  return sorted(std::move(x));
}

std::vector<std::string> validate_layout(const CliqueLayout& layout) {
  std::vector<std::string> bad;
  const Instance& p = layout.product;
  const Graph& g = p.graph();
  const std::size_t n = layout.source.vertex_count();
  const std::size_t k = layout.k;
  const std::size_t q = layout.q;

  if (q != 2 * n) bad.push_back("q != 2n");
  for (std::size_t i = 0; i < n; ++i) {
    if (layout.m_len[i] + layout.n_len[i] != q) bad.push_back("M_i + N_i != q for i = " + id1(i));
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && layout.m_len[i] + layout.n_len[j] >= q &&
          layout.m_len[j] + layout.n_len[i] >= q) {
        bad.push_back("M/N separation fails for " + id1(i) + "," + id1(j));
      }
    }
  }
  if (layout.k_prime != k * k * q + k + 1) bad.push_back("k' != k²q+k+1");
  if (p.budget() != layout.k_prime) bad.push_back("product budget != k'");
  if (layout.w.size() != layout.k_prime) bad.push_back("|W| != k'");

  const VertexSet& c = layout.c;
  std::size_t u_total = 0;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& cyc = layout.u_cycles[r][i];
      u_total += cyc.size();
      std::size_t a_side = 0;
      for (std::size_t j = 0; j < cyc.size(); ++j) {
        const VertexId v = cyc[j];
        if (p.threshold(v) != k + 1) bad.push_back("U vertex " + id1(v) + " threshold");
        std::size_t in_uc = 0, to_a = 0, to_b = 0;
        for (VertexId u : g.neighbors(v)) {
          if (contains(c, u)) {
            ++in_uc;
            for (std::size_t s = 0; s < k; ++s) {
              if (s == r) continue;
              to_a += u == layout.a[r][s];
              to_b += u == layout.b[r][s];
            }
          }
        }
        in_uc += 2;  // cycle neighbours
        if (in_uc != k + 1) bad.push_back("U vertex " + id1(v) + " has degree != k+1 in U ∪ C");
        if (!((to_a == k - 1 && to_b == 0) || (to_b == k - 1 && to_a == 0))) {
          bad.push_back("U vertex " + id1(v) + " mixes a-side and b-side");
        }
        a_side += to_a == k - 1;
        if ((j < layout.m_len[i]) != (to_a == k - 1)) {
          bad.push_back("U vertex " + id1(v) + " on the wrong side");
        }
      }
      if (a_side != layout.m_len[i]) bad.push_back("U^r_i a-side count != M_i");
    }
  }

  std::size_t y_total = 0;
  for (const auto& yc : layout.y_cycles) {
    y_total += yc.cycle.size();
    const VertexId four[4] = {layout.a[yc.r][yc.s], layout.b[yc.r][yc.s], layout.a[yc.s][yc.r],
                              layout.b[yc.s][yc.r]};
    std::size_t count[4] = {0, 0, 0, 0};
    for (VertexId v : yc.cycle) {
      if (p.threshold(v) != 3) bad.push_back("Y vertex " + id1(v) + " threshold");
      std::size_t hits = 0;
      for (int t = 0; t < 4; ++t) {
        if (g.has_edge(v, four[t])) {
          ++hits;
          ++count[t];
        }
      }
      if (hits != 1) bad.push_back("Y vertex " + id1(v) + " has " + std::to_string(hits) +
                                   " neighbours in its C pair");
    }
    if (count[0] != layout.n_len[yc.x] || count[1] != layout.m_len[yc.x] ||
        count[2] != layout.n_len[yc.y] || count[3] != layout.m_len[yc.y]) {
      bad.push_back("Y cycle arc counts differ from N_x, M_x, N_y, M_y");
    }
  }

  for (VertexId v : layout.u_hubs) {
    if (p.threshold(v) != q) bad.push_back("u^r threshold != q");
  }
  for (VertexId v : c) {
    if (p.threshold(v) != q) bad.push_back("C threshold != q");
  }
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r + 1; s < k; ++s) {
      if (p.threshold(layout.y_hubs[r][s]) != 2 * q) bad.push_back("y^{r,s} threshold != 2q");
    }
  }
  for (VertexId v : layout.w) {
    if (p.threshold(v) != 1) bad.push_back("W threshold != 1");
  }
  if (layout.z.size() != k + 1) bad.push_back("|Z| != k+1");
  for (VertexId v : layout.z) {
    if (p.threshold(v) != u_total + y_total + layout.w.size() + 1) {
      bad.push_back("Z threshold != |U|+|Y|+|W|+1");
    }
  }
  if (g.vertex_count() != u_total + k + c.size() + y_total + k * (k - 1) / 2 + layout.w.size() +
                              layout.z.size()) {
    bad.push_back("vertex count does not match the groups");
  }
  return bad;
}

std::vector<std::string> check_x_inequality(const CliqueLayout& layout) {
  std::vector<std::string> bad;
  const Instance& p = layout.product;
  for (VertexId v : layout.x_vertices()) {
    const auto slack = static_cast<std::int64_t>(p.graph().degree(v)) -
                       static_cast<std::int64_t>(layout.k_prime);
    if (static_cast<std::int64_t>(p.threshold(v)) > slack) {
      bad.push_back("vertex " + id1(v) + ": f = " + std::to_string(p.threshold(v)) +
                    " > d - k' = " + std::to_string(slack));
    }
  }
  return bad;
}

namespace {

const YCycle* find_y(const CliqueLayout& layout, std::size_t r, std::size_t s, VertexId x,
                     VertexId y) {
  for (const auto& yc : layout.y_cycles) {
    if (yc.r == r && yc.s == s && yc.x == x && yc.y == y) return &yc;
  }
  return nullptr;
}

}  // namespace

VertexSet clique_witness_forward(const CliqueLayout& layout, const std::vector<VertexId>& clique) {
  const std::size_t k = layout.k;
  if (clique.size() != k) throw std::invalid_argument("clique must list exactly k vertices");
  for (VertexId v : clique) {
    if (v >= layout.source.vertex_count()) throw std::invalid_argument("clique vertex out of range");
  }
  VertexSet out = layout.z;
  for (std::size_t r = 0; r < k; ++r) {
    const auto& cyc = layout.u_cycles[r][clique[r]];
    out.insert(out.end(), cyc.begin(), cyc.end());
  }
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r + 1; s < k; ++s) {
      const VertexId x = clique[r];
      const VertexId y = clique[s];
      const YCycle* yc = x == y ? nullptr : find_y(layout, r, s, x, y);
      if (yc == nullptr) {
        throw std::invalid_argument("vertices " + id1(x) + " and " + id1(y) +
                                    " are not adjacent");
      }
      out.insert(out.end(), yc->cycle.begin(), yc->cycle.end());
    }
  }
  return sorted(std::move(out));
}

StructuredDecision clique_structured_decide(const CliqueLayout& layout) {
  const std::size_t k = layout.k;
  const std::size_t n = layout.source.vertex_count();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<std::vector<const YCycle*>> per_pair;
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r + 1; s < k; ++s) {
      pairs.emplace_back(r, s);
      per_pair.emplace_back();
      for (const auto& yc : layout.y_cycles) {
        if (yc.r == r && yc.s == s) per_pair.back().push_back(&yc);
      }
    }
  }
  StructuredDecision out;
  if (std::any_of(per_pair.begin(), per_pair.end(), [](const auto& v) { return v.empty(); })) {
    return out;
  }

  // odometer: k digits over n, then one digit per pair over its Y-cycles
  std::vector<std::size_t> radix(k, n);
  for (const auto& v : per_pair) radix.push_back(v.size());
  std::vector<std::size_t> digit(radix.size(), 0);
  while (true) {
    VertexSet cand = layout.z;
    for (std::size_t r = 0; r < k; ++r) {
      const auto& cyc = layout.u_cycles[r][digit[r]];
      cand.insert(cand.end(), cyc.begin(), cyc.end());
    }
    for (std::size_t t = 0; t < pairs.size(); ++t) {
      const auto& cyc = per_pair[t][digit[k + t]]->cycle;
      cand.insert(cand.end(), cyc.begin(), cyc.end());
    }
    normalize(cand);
    ++out.candidates;
    if (is_critical_set(layout.product, cand)) {
      out.yes = true;
      out.witness = std::move(cand);
      return out;
    }
    std::size_t i = 0;
    while (i < digit.size() && ++digit[i] == radix[i]) digit[i++] = 0;
    if (i == digit.size()) return out;
  }
}

bool has_clique(const Graph& graph, std::size_t k) {
  const std::size_t n = graph.vertex_count();
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<VertexId> pick;
  auto extend = [&](auto&& self, VertexId from) -> bool {
    if (pick.size() == k) return true;
    for (VertexId v = from; v < n; ++v) {
      if (std::all_of(pick.begin(), pick.end(), [&](VertexId u) { return graph.has_edge(u, v); })) {
        pick.push_back(v);
        if (self(self, v + 1)) return true;
        pick.pop_back();
      }
    }
    return false;
  };
  return extend(extend, 0);
}

// ---------------------------------------------------------------------------
// Uniformization

UniformResult uniformize(const Instance& source) {
  const std::size_t n = source.vertex_count();
  const Threshold m = source.max_threshold();
  if (m == 1) {
    VertexSet all(n);
    for (VertexId v = 0; v < n; ++v) all[v] = v;
    return UniformShortCircuit{std::move(all), n <= source.budget()};
  }

  const std::size_t k = source.budget();
  Builder b;
  for (VertexId v = 0; v < n; ++v) b.add(m);
  for (const auto& [u, v] : source.graph().edges()) b.link(u, v);

  std::vector<std::vector<VertexId>> pendants(n);
  std::vector<std::vector<UniformGadget>> gadgets(n);
  VertexSet q;
  auto leaf_of = [&](VertexId parent) {
    const VertexId leaf = b.add(m);
    b.link(parent, leaf);
    q.push_back(leaf);
    return leaf;
  };
  for (VertexId v = 0; v < n; ++v) {
    const Threshold deficit = m - source.threshold(v);
    for (Threshold t = 0; t < deficit; ++t) pendants[v].push_back(leaf_of(v));
    for (Threshold t = 0; t < deficit; ++t) {
      UniformGadget gadget;
      gadget.hub = b.add(m);
      b.link(v, gadget.hub);
      for (Threshold l = 0; l < m; ++l) gadget.hub_leaves.push_back(leaf_of(gadget.hub));
      for (std::size_t i = 0; i < m + k - 1; ++i) {
        const VertexId inner = b.add(m);
        b.link(gadget.hub, inner);
        gadget.inner.push_back(inner);
        gadget.inner_leaves.emplace_back();
        for (Threshold l = 0; l < m; ++l) gadget.inner_leaves.back().push_back(leaf_of(inner));
      }
      gadgets[v].push_back(std::move(gadget));
    }
  }

  const std::size_t k_prime = k + q.size();
  ValidationOptions saturated;
  saturated.allow_saturated_thresholds = true;
  return UniformLayout{
      .source = source,
      .c = m,
      .pendants = std::move(pendants),
      .gadgets = std::move(gadgets),
      .q = sorted(std::move(q)),
      .k_prime = k_prime,
      .product = b.finish(k_prime, saturated),
  };
}

GroupRegistry UniformLayout::registry() const {
  GroupRegistry reg;
  for (std::size_t v = 0; v < pendants.size(); ++v) {
    if (pendants[v].empty()) continue;
    reg.push_back({"P_" + id1(v), pendants[v]});
    std::vector<VertexId> hubs;
    for (std::size_t t = 0; t < gadgets[v].size(); ++t) {
      const auto& gd = gadgets[v][t];
      hubs.push_back(gd.hub);
      std::vector<VertexId> all{gd.hub};
      all.insert(all.end(), gd.hub_leaves.begin(), gd.hub_leaves.end());
      for (std::size_t i = 0; i < gd.inner.size(); ++i) {
        all.push_back(gd.inner[i]);
        all.insert(all.end(), gd.inner_leaves[i].begin(), gd.inner_leaves[i].end());
      }
      reg.push_back({"gadget_" + id1(v) + "_" + id1(t), std::move(all)});
    }
    reg.push_back({"W_" + id1(v), std::move(hubs)});
  }
  reg.push_back({"Q", q});
  return reg;
}

std::vector<std::string> validate_layout(const UniformLayout& layout) {
  std::vector<std::string> bad;
  const Instance& p = layout.product;
  const Graph& g = p.graph();
  const Threshold m = layout.c;
  const std::size_t k = layout.source.budget();
  const std::size_t n = layout.source.vertex_count();

  if (p.thresholds().min_threshold() != m || p.max_threshold() != m) {
    bad.push_back("thresholds are not constant m(f)");
  }
  if (layout.k_prime != k + layout.q.size() || p.budget() != layout.k_prime) {
    bad.push_back("k' != k + |Q|");
  }
  VertexSet degree_one;
  for (VertexId v = n; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 1) degree_one.push_back(v);
  }
  if (degree_one != layout.q) bad.push_back("Q differs from the added degree-1 vertices");
  for (VertexId v = 0; v < n; ++v) {
    const std::size_t deficit = m - layout.source.threshold(v);
    if (layout.pendants[v].size() != deficit || layout.gadgets[v].size() != deficit) {
      bad.push_back("vertex " + id1(v) + ": |P_v| or |W_v| != m(f) - f(v)");
    }
    for (VertexId leaf : layout.pendants[v]) {
      if (g.degree(leaf) != 1 || !g.has_edge(v, leaf)) bad.push_back("pendant malformed");
    }
    for (const auto& gd : layout.gadgets[v]) {
      if (!g.has_edge(v, gd.hub) || g.degree(gd.hub) != 1 + m + (m + k - 1)) {
        bad.push_back("gadget hub " + id1(gd.hub) + " malformed");
      }
      if (gd.hub_leaves.size() != m || gd.inner.size() != m + k - 1) {
        bad.push_back("gadget " + id1(gd.hub) + " has wrong part sizes");
      }
      for (VertexId leaf : gd.hub_leaves) {
        if (g.degree(leaf) != 1 || !g.has_edge(gd.hub, leaf)) bad.push_back("hub leaf malformed");
      }
      for (std::size_t i = 0; i < gd.inner.size(); ++i) {
        const VertexId inner = gd.inner[i];
        if (g.degree(inner) != m + 1 || gd.inner_leaves[i].size() != m) {
          bad.push_back("inner gadget vertex " + id1(inner) + " malformed");
        }
        for (VertexId leaf : gd.inner_leaves[i]) {
          if (g.degree(leaf) != 1 || !g.has_edge(inner, leaf)) bad.push_back("inner leaf malformed");
        }
      }
    }
  }
  for (const auto& [u, v] : layout.source.graph().edges()) {
    if (!g.has_edge(u, v)) bad.push_back("source edge missing");
  }
  return bad;
}

VertexSet uniform_witness_forward(const UniformLayout& layout, const VertexSet& source_witness) {
  VertexSet out = source_witness;
  out.insert(out.end(), layout.q.begin(), layout.q.end());
  return sorted(std::move(out));
}

}  // namespace fcs

// Acceptance run: one PASS/FAIL line per criterion. Every limit below is pinned;
// a criterion that exceeds its wall-time limit fails even if all checks agree.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "fcs/cli.hpp"
#include "fcs/corpus.hpp"
#include "fcs/dynamics.hpp"
#include "fcs/fpt.hpp"
#include "fcs/independent_set.hpp"
#include "fcs/io.hpp"
#include "fcs/oracle.hpp"
#include "fcs/reductions.hpp"
#include "test_support.hpp"

using namespace fcs;
using namespace fcs::testing;

namespace {

// criterion 1
constexpr std::size_t kStepInstances = 1000;
constexpr std::size_t kStepMaxN = 20;
constexpr std::size_t kStepCount = 10;
constexpr double kStepSeconds = 10;

// criteria 2, 4, 5, 9
constexpr std::size_t kCorpusMaxN = 7;
constexpr std::size_t kCorpusAssignments = 3;
constexpr std::size_t kCorpusMaxK = 3;
constexpr std::size_t kRandomInstances = 500;
constexpr std::size_t kRandomMaxN = 12;
constexpr std::size_t kRandomMaxK = 4;
constexpr double kCorpusSeconds = 600;

// criterion 3
constexpr std::size_t kFaithfulMaxN = 6;
constexpr std::size_t kFaithfulMaxK = 2;
constexpr double kFaithfulSeconds = 300;

// criterion 6
constexpr std::size_t kVcMaxN = 5;
constexpr double kVcSeconds = 600;

// criterion 7
constexpr std::size_t kCliqueMaxN = 4;
constexpr double kCliqueSeconds = 300;

// criterion 8
constexpr std::size_t kUniformMaxN = 5;
constexpr Threshold kUniformMaxM = 3;
constexpr std::size_t kUniformMaxK = 3;
constexpr double kUniformSeconds = 600;

// criterion 10
constexpr std::size_t kIsSamples = 500;
constexpr std::size_t kIsMaxN = 16;
constexpr std::size_t kIsMaxK = 5;
constexpr double kIsSeconds = 60;

// criterion 11
constexpr std::size_t kDeterminismInstances = 50;
constexpr std::size_t kDeterminismRuns = 3;
constexpr double kDeterminismSeconds = 300;

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::size_t checks = 0;
  std::string first_failure;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      first_failure = what();
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

bool all_ok = true;

void report(int id, const char* title, const Outcome& o, double elapsed, double limit,
            const std::string& extra = {}) {
  const bool in_time = limit <= 0 || elapsed < limit;
  const bool pass = o.pass && in_time;
  all_ok = all_ok && pass;
  std::printf("criterion %2d %s: %s (%zu checks, %.1f s", id, title, pass ? "PASS" : "FAIL",
              o.checks, elapsed);
  if (limit > 0) std::printf(" / limit %.0f s", limit);
  std::printf(")%s%s\n", extra.empty() ? "" : " ", extra.c_str());
  if (!o.pass) std::printf("    first failure: %s\n", o.first_failure.c_str());
  if (!in_time) std::printf("    over the time limit\n");
  std::fflush(stdout);
}

std::string describe_instance(const Instance& inst) {
  std::string t = io::emit_instance(inst);
  std::replace(t.begin(), t.end(), '\n', ';');
  return t;
}

// ---------------------------------------------------------------------------

void criterion_1() {
  const auto start = Clock::now();
  corpus::Rng rng(kSeed + 1);
  Outcome o;
  std::uniform_int_distribution<std::size_t> pick_n(1, kStepMaxN);
  std::uniform_real_distribution<double> pick_p(0.0, 0.5);
  for (std::size_t i = 0; i < kStepInstances; ++i) {
    const std::size_t n = pick_n(rng);
    const Instance inst = corpus::random_instance(n, pick_p(rng), 1, rng);
    const auto nb = masks(inst.graph());
    std::uint64_t ones = rng() & ((std::uint64_t{1} << n) - 1);
    Configuration fast = Configuration::from_set(n, from_mask(ones));
    Configuration ref = fast;
    for (std::size_t t = 1; t <= kStepCount; ++t) {
      fast = step(inst, fast);
      ref = step_reference(inst, ref);
      ones = naive_step(inst, nb, ones);
      const auto expected = Configuration::from_set(n, from_mask(ones)).states;
      o.expect(fast.states == ref.states && fast.states == expected, [&] {
        return "step " + std::to_string(t) + " on " + describe_instance(inst);
      });
    }
  }
  report(1, "step evaluators agree", o, seconds_since(start), kStepSeconds);
}

// ---------------------------------------------------------------------------

struct CorpusResults {
  Outcome agreement;   // 2
  Outcome bound;       // 4
  Outcome gate_sizes;  // 5
  Outcome counting;    // 9
  std::size_t instances = 0;
  std::size_t yes = 0;
  std::size_t families = 0;
  double elapsed = 0;
};

/// max(1, g/i) · (e(2k-2))^(i-1)
double counting_bound(std::size_t ground, std::size_t i, std::size_t k) {
  const double base = std::numbers::e * (2.0 * static_cast<double>(k) - 2.0);
  return std::max(1.0, static_cast<double>(ground) / static_cast<double>(i)) *
         std::pow(base, static_cast<double>(i - 1));
}

void check_counts(Outcome& o, const Instance& inst, std::size_t ground,
                  const std::vector<std::size_t>& by_size) {
  const std::size_t k = inst.budget();
  for (std::size_t i = 1; i < by_size.size(); ++i) {
    const double bound = counting_bound(ground, i, k);
    o.expect(static_cast<double>(by_size[i]) <= bound, [&] {
      return std::to_string(by_size[i]) + " connected sets of size " + std::to_string(i) +
             " exceed " + std::to_string(bound) + " on " + describe_instance(inst);
    });
  }
}

void examine(CorpusResults& r, const Instance& inst) {
  ++r.instances;
  const auto naive = naive_optimum(inst);
  const bool expected = naive && *naive <= inst.budget();

  fpt::FptOptions fo;
  fo.collect_family_stats = true;
  const fpt::FptReport rep = fpt::decide(inst, fo);
  const bool fpt_yes = rep.result.decision == Decision::yes;
  bool witness_ok = true;
  if (fpt_yes) {
    witness_ok = rep.result.witness && rep.result.witness->size() <= inst.budget() &&
                 is_critical_set(inst, *rep.result.witness);
  }
  r.agreement.expect(rep.result.decision != Decision::exhausted && fpt_yes == expected && witness_ok,
                     [&] { return "fpt disagrees on " + describe_instance(inst); });

  // 4: the oracle's optimum and the gated decision
  SearchOptions all;
  all.size_cap = inst.vertex_count();
  const SolveResult opt = min_critical_set(inst, all);
  r.bound.expect(opt.optimum == naive, [&] { return "oracle optimum differs on " + describe_instance(inst); });
  if (opt.optimum) {
    r.bound.expect(*opt.optimum * inst.max_threshold() >= inst.vertex_count(),
                   [&] { return "optimum * m(f) < n on " + describe_instance(inst); });
  }
  const SolveResult kmf = decide_kmf(inst);
  r.bound.expect((kmf.decision == Decision::yes) == expected,
                 [&] { return "decide_kmf contradicts brute force on " + describe_instance(inst); });

  // 5
  if (expected) {
    ++r.yes;
    const auto& p = rep.partition;
    const std::size_t k = inst.budget();
    r.gate_sizes.expect(p.a.size() <= k && p.primed_vertices.size() <= 2 * k * k, [&] {
      return "|A| = " + std::to_string(p.a.size()) + ", primed = " +
             std::to_string(p.primed_vertices.size()) + " on " + describe_instance(inst);
    });
  }

  // 9
  if (rep.gate.pass) {
    const std::size_t ground = rep.partition.b.size() - rep.partition.b_prime.size();
    check_counts(r.counting, inst, ground, rep.ground_count_by_size);
    for (const auto& f : rep.families) {
      ++r.families;
      check_counts(r.counting, inst, f.ground_size, f.count_by_size);
    }
  }
}

CorpusResults run_corpus() {
  const auto start = Clock::now();
  CorpusResults r;
  corpus::Rng rng(kSeed + 2);
  for (std::size_t n = 1; n <= kCorpusMaxN; ++n) {
    for (const Graph& g : corpus::connected_graphs(n)) {
      const auto edges = g.edges();
      for (std::size_t a = 0; a < kCorpusAssignments; ++a) {
        const auto f = corpus::random_thresholds(g, rng);
        for (std::size_t k = 1; k <= kCorpusMaxK; ++k) examine(r, make_instance(n, edges, f, k));
      }
    }
  }
  std::uniform_int_distribution<std::size_t> pick_n(1, kRandomMaxN);
  std::uniform_int_distribution<std::size_t> pick_k(1, kRandomMaxK);
  std::uniform_real_distribution<double> pick_p(0.0, 0.6);
  for (std::size_t i = 0; i < kRandomInstances; ++i) {
    const std::size_t n = pick_n(rng);
    const double p = pick_p(rng);
    examine(r, corpus::random_instance(n, p, pick_k(rng), rng));
  }
  r.elapsed = seconds_since(start);
  return r;
}

// ---------------------------------------------------------------------------

void criterion_3() {
  const auto start = Clock::now();
  Outcome o;
  std::size_t yes = 0;
  for (std::size_t n = 1; n <= kFaithfulMaxN; ++n) {
    for (const Graph& g : corpus::connected_graphs(n)) {
      const auto edges = g.edges();
      corpus::for_each_threshold_vector(g, static_cast<Threshold>(n), [&](const std::vector<Threshold>& f) {
        for (std::size_t k = 1; k <= kFaithfulMaxK; ++k) {
          const Instance inst = make_instance(n, edges, f, k);
          fpt::FptOptions fast, literal;
          literal.faithful = true;
          const auto a = fpt::decide(inst, fast).result.decision;
          const auto b = fpt::decide(inst, literal).result.decision;
          if (a == Decision::yes) ++yes;
          o.expect(a == b && a != Decision::exhausted,
                   [&] { return "sweeps disagree on " + describe_instance(inst); });
        }
        return o.pass;
      });
    }
  }
  report(3, "faithful and optimized sweeps agree", o, seconds_since(start), kFaithfulSeconds,
         "[" + std::to_string(yes) + " YES]");
}

// ---------------------------------------------------------------------------

void criterion_6() {
  const auto start = Clock::now();
  Outcome o;
  for (std::size_t n = 2; n <= kVcMaxN; ++n) {
    for (const Graph& g : corpus::connected_graphs(n)) {
      const std::size_t vc = naive_min_vertex_cover(g);
      for (std::size_t k = 1; k <= n; ++k) {
        const VcLayout l = vc_to_critical(g, k);
        const std::string where = "n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                                  ", edges = " + std::to_string(g.edge_count());
        const auto issues = validate_layout(l);
        o.expect(issues.empty(), [&] { return issues.front() + " (" + where + ")"; });
        // structural properties checked directly on the product
        const Instance& p = l.product;
        o.expect(p.graph().bipartition().has_value() && p.max_degree() <= 3 && p.max_threshold() <= 2 &&
                     p.vertex_count() == 2 * n * (2 * l.delta - 1) - g.edge_count() &&
                     l.k_prime == l.edge_vertex.size() + l.q.size() + k * (2 * l.delta - 1),
                 [&] { return "product shape (" + where + ")"; });

        SearchOptions opts;
        opts.strategy = SearchStrategy::propagate;
        const SolveResult r = decide_kmf(p, opts);
        o.expect(r.decision != Decision::exhausted && (r.decision == Decision::yes) == (vc <= k),
                 [&] { return "equivalence fails (" + where + ")"; });
        if (r.decision == Decision::yes && r.witness) {
          bool ok = false;
          try {
            ok = is_vertex_cover(g, vc_witness_backward(l, *r.witness));
          } catch (const std::exception&) {
          }
          o.expect(ok, [&] { return "backward witness (" + where + ")"; });
        }
      }
    }
  }
  report(6, "vertex cover reduction equivalence", o, seconds_since(start), kVcSeconds);
}

// ---------------------------------------------------------------------------

/// All k-subsets of 0..n-1 that are cliques, as sorted id lists.
std::vector<std::vector<VertexId>> cliques_of(const Graph& g, std::size_t k) {
  std::vector<std::vector<VertexId>> out;
  const std::size_t n = g.vertex_count();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
    if (static_cast<std::size_t>(std::popcount(s)) != k) continue;
    const VertexSet c = from_mask(s);
    bool ok = true;
    for (std::size_t i = 0; i < c.size() && ok; ++i) {
      for (std::size_t j = i + 1; j < c.size() && ok; ++j) ok = g.has_edge(c[i], c[j]);
    }
    if (ok) out.push_back(c);
  }
  return out;
}

void criterion_7() {
  const auto start = Clock::now();
  Outcome o;
  std::size_t witnesses = 0, edgeless = 0;
  for (std::size_t n = 2; n <= kCliqueMaxN; ++n) {
    for (const Graph& g : corpus::all_graphs(n)) {
      for (std::size_t k = 2; k <= 3; ++k) {
        const CliqueLayout l = clique_to_critical(g, k);
        const std::string where = "n = " + std::to_string(n) + ", k = " + std::to_string(k) +
                                  ", edges = " + std::to_string(g.edge_count());
        const auto issues = validate_layout(l);
        o.expect(issues.empty(), [&] { return issues.front() + " (" + where + ")"; });
        bool lengths = l.k_prime == k * k * l.q + k + 1;
        for (std::size_t i = 0; i < l.m_len.size(); ++i) lengths = lengths && l.m_len[i] + l.n_len[i] == l.q;
        o.expect(lengths, [&] { return "M_i + N_i or k' (" + where + ")"; });
        // the degree bound on X relies on the Y-cycles, so it presumes at least one edge
        if (g.edge_count() > 0) {
          const auto x = check_x_inequality(l);
          o.expect(x.empty(), [&] { return x.front() + " (" + where + ")"; });
        } else {
          ++edgeless;
        }

        for (const auto& c : cliques_of(g, k)) {
          ++witnesses;
          const VertexSet w = clique_witness_forward(l, c);
          o.expect(w.size() == l.k_prime && is_critical_set(l.product, w),
                   [&] { return "forward witness (" + where + ")"; });
        }
        const auto d = clique_structured_decide(l);
        o.expect(d.yes == naive_has_clique(g, k), [&] { return "structured decision (" + where + ")"; });
        if (d.yes) {
          o.expect(d.witness && d.witness->size() == l.k_prime && is_critical_set(l.product, *d.witness),
                   [&] { return "structured witness (" + where + ")"; });
        }
      }
    }
  }
  report(7, "clique reduction checks", o, seconds_since(start), kCliqueSeconds,
         "[" + std::to_string(witnesses) + " forward witnesses, degree bound not applied to " +
             std::to_string(edgeless) + " edgeless sources]");
}

// ---------------------------------------------------------------------------

void criterion_8() {
  const auto start = Clock::now();
  Outcome o;
  std::size_t products = 0, largest = 0;
  for (std::size_t n = 1; n <= kUniformMaxN; ++n) {
    for (const Graph& g : corpus::connected_graphs(n)) {
      const auto edges = g.edges();
      corpus::for_each_threshold_vector(g, kUniformMaxM, [&](const std::vector<Threshold>& f) {
        const Threshold m = *std::max_element(f.begin(), f.end());
        if (m < 2) return true;
        for (std::size_t k = 1; k <= kUniformMaxK; ++k) {
          const Instance src = make_instance(n, edges, f, k);
          const UniformLayout l = std::get<UniformLayout>(uniformize(src));
          ++products;
          largest = std::max(largest, l.product.vertex_count());
          const auto issues = validate_layout(l);
          o.expect(issues.empty(), [&] { return issues.front() + " on " + describe_instance(src); });
          o.expect(l.k_prime == k + l.q.size() && l.product.budget() == l.k_prime,
                   [&] { return "k' on " + describe_instance(src); });
          SearchOptions opts;
          opts.strategy = SearchStrategy::propagate;
          const auto r = decide_kmf(l.product, opts);
          o.expect(r.decision != Decision::exhausted &&
                       (r.decision == Decision::yes) == naive_decide(src),
                   [&] { return "equivalence fails on " + describe_instance(src); });
        }
        return o.pass;
      });
    }
  }
  report(8, "uniformization equivalence", o, seconds_since(start), kUniformSeconds,
         "[" + std::to_string(products) + " products, largest " + std::to_string(largest) + " vertices]");
}

// ---------------------------------------------------------------------------

void criterion_10() {
  const auto start = Clock::now();
  corpus::Rng rng(kSeed + 10);
  Outcome o;
  std::size_t kernel_hits = 0, kernel_eligible = 0;
  std::uniform_int_distribution<std::size_t> pick_n(1, kIsMaxN);
  std::uniform_real_distribution<double> pick_p(0.0, 0.8);
  auto run = [&](const Graph& g, std::size_t k, std::size_t alpha) {
    const auto r = find_independent_set(g, k);
    o.expect(r.set.has_value() == (alpha >= k), [&] {
      return "k = " + std::to_string(k) + " on a graph with " + std::to_string(g.vertex_count()) +
             " vertices and " + std::to_string(g.edge_count()) + " edges";
    });
    if (r.set) {
      o.expect(r.set->size() == k && is_independent(g, *r.set), [] { return std::string("invalid set"); });
    }
    const std::size_t delta = g.max_degree();
    if (k >= 1 && g.vertex_count() >= (k - 1) * (delta + 1) + 1) {
      ++kernel_eligible;
      if (r.kernel_path) ++kernel_hits;
      o.expect(r.kernel_path && r.set.has_value(), [&] { return "kernel path not taken"; });
    }
  };
  for (std::size_t i = 0; i < kIsSamples; ++i) {
    const Graph g = corpus::random_graph(pick_n(rng), pick_p(rng), rng);
    const std::size_t alpha = naive_independence_number(g);
    for (std::size_t k = 1; k <= kIsMaxK; ++k) run(g, k, alpha);
  }
  report(10, "independent set subroutine", o, seconds_since(start), kIsSeconds,
         "[kernel path " + std::to_string(kernel_hits) + "/" + std::to_string(kernel_eligible) + "]");
}

// ---------------------------------------------------------------------------

void criterion_11() {
  const auto start = Clock::now();
  corpus::Rng rng(kSeed + 11);
  Outcome o;
  std::uniform_int_distribution<std::size_t> pick_n(2, 14);
  std::uniform_int_distribution<std::size_t> pick_k(1, 4);
  for (std::size_t i = 0; i < kDeterminismInstances; ++i) {
    const std::size_t n = pick_n(rng);
    const std::string text = io::emit_instance(corpus::random_instance(n, 0.3, pick_k(rng), rng));
    for (auto algo : {cli::Algorithm::brute, cli::Algorithm::kmf, cli::Algorithm::fpt_k}) {
      cli::RunConfig base;
      base.algorithm = algo;
      base.minimize = algo == cli::Algorithm::brute;
      const auto reference = cli::solve_command(text, base);
      for (int workers : {1, 4}) {
        for (std::size_t run = 0; run < kDeterminismRuns; ++run) {
          cli::RunConfig c = base;
          c.workers = workers;
          const auto out = cli::solve_command(text, c);
          o.expect(out.out == reference.out && out.err == reference.err &&
                       out.exit_code == reference.exit_code,
                   [&] { return "output differs with " + std::to_string(workers) + " workers"; });
        }
      }
    }
  }
  report(11, "solve output is deterministic", o, seconds_since(start), kDeterminismSeconds);
}

}  // namespace

int main() {
  criterion_1();

  const CorpusResults corpus = run_corpus();
  const std::string size = "[" + std::to_string(corpus.instances) + " instances, " +
                           std::to_string(corpus.yes) + " YES]";
  report(2, "fpt agrees with brute force", corpus.agreement, corpus.elapsed, kCorpusSeconds, size);

  criterion_3();

  report(4, "optimum lower bound and kmf gate", corpus.bound, corpus.elapsed, 0);
  report(5, "partition sizes on YES instances", corpus.gate_sizes, corpus.elapsed, 0);

  criterion_6();
  criterion_7();
  criterion_8();

  report(9, "connected-set counting bound", corpus.counting, corpus.elapsed, 0,
         "[" + std::to_string(corpus.families) + " families]");

  criterion_10();
  criterion_11();

  std::printf("acceptance: %s\n", all_ok ? "PASS" : "FAIL");
  return all_ok ? 0 : 1;
}

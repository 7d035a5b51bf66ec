#include "fcs/cli.hpp"

#include <chrono>
#include <sstream>
#include <stdexcept>

#include "fcs/corpus.hpp"
#include "fcs/dynamics.hpp"
#include "fcs/fpt.hpp"
#include "fcs/io.hpp"
#include "fcs/oracle.hpp"
#include "fcs/reductions.hpp"

namespace fcs::cli {

namespace {

ValidationOptions validation(const RunConfig& config) {
  ValidationOptions v;
  v.allow_saturated_thresholds = config.allow_saturated;
  return v;
}

/// Parsed and validated instance with the budget taken from the config or the file.
Instance load(std::string_view text, const RunConfig& config) {
  const io::ParsedFile parsed = io::parse_raw(text);
  RawInstance raw = parsed.raw;
  if (config.k) {
    raw.budget = static_cast<std::int64_t>(*config.k);
  } else if (!parsed.has_budget) {
    throw io::ParseError(0, "no budget: pass --k or add a 'k <budget>' line");
  }
  auto result = validate_instance(raw, validation(config));
  if (!result.ok()) {
    std::string msg = "invalid instance:";
    for (const auto& issue : result.issues) msg += " " + issue.message + ";";
    msg.pop_back();
    throw io::ParseError(0, msg);
  }
  return std::move(*result.instance);
}

struct Outcome {
  Decision decision = Decision::no;
  std::optional<VertexSet> witness;
  std::optional<std::size_t> optimum;
  std::string reason;
};

Outcome run_oracle(const Instance& inst, const RunConfig& config, SearchStrategy strategy) {
  SearchOptions opts;
  opts.work_limit = config.work_limit;
  opts.workers = config.workers;
  opts.strategy = strategy;
  Outcome o;
  if (config.minimize) {
    opts.size_cap = inst.vertex_count();
    const SolveResult r = min_critical_set(inst, opts);
    if (r.decision == Decision::exhausted) {
      o.decision = Decision::exhausted;
      return o;
    }
    o.optimum = r.optimum;
    const bool within = r.witness && r.witness->size() <= inst.budget();
    o.decision = within ? Decision::yes : Decision::no;
    if (within) o.witness = r.witness;
    return o;
  }
  SolveResult r;
  if (config.algorithm == Algorithm::kmf) {
    r = decide_kmf(inst, opts);
  } else {
    opts.size_cap = inst.budget();
    r = min_critical_set(inst, opts);
  }
  o.decision = r.decision;
  o.witness = r.witness;
  o.reason = r.reason;
  return o;
}

Outcome run_fpt(const Instance& inst, const RunConfig& config) {
  fpt::FptOptions opts;
  opts.faithful = config.faithful;
  opts.work_limit = config.work_limit;
  opts.workers = config.workers;
  Outcome o;
  if (!config.minimize) {
    const auto report = fpt::decide(inst, opts);
    o.decision = report.result.decision;
    o.witness = report.result.witness;
    o.reason = report.result.reason;
    return o;
  }
  for (std::size_t b = 1; b <= inst.vertex_count(); ++b) {
    const auto report = fpt::decide(inst.with_budget(b), opts);
    if (report.result.decision == Decision::exhausted) {
      o.decision = Decision::exhausted;
      return o;
    }
    if (report.result.decision == Decision::yes) {
      o.optimum = b;
      if (b <= inst.budget()) {
        o.decision = Decision::yes;
        o.witness = report.result.witness;
      }
      return o;
    }
  }
  return o;
}

std::string timing_line(std::chrono::steady_clock::time_point start) {
  const auto us = std::chrono::duration_cast<std::chrono::microseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  std::ostringstream s;
  s << "time_ms " << static_cast<double>(us) / 1000.0 << "\n";
  return s.str();
}

}  // namespace

CommandOutput solve_command(std::string_view instance_text, const RunConfig& config) {
  CommandOutput out;
  const auto start = std::chrono::steady_clock::now();
  std::optional<Instance> inst;
  try {
    inst = load(instance_text, config);
  } catch (const std::exception& e) {
    out.exit_code = exit_code::invalid;
    out.err = std::string("error: ") + e.what() + "\n";
    return out;
  }

  Outcome o;
  switch (config.algorithm) {
    case Algorithm::brute:
      o = run_oracle(*inst, config, SearchStrategy::enumerate);
      break;
    case Algorithm::kmf:
      o = run_oracle(*inst, config, SearchStrategy::propagate);
      break;
    case Algorithm::fpt_k:
      o = run_fpt(*inst, config);
      break;
  }

  out.out = std::string("decision ") + to_string(o.decision) + "\n";
  if (!o.reason.empty()) out.out += "reason " + o.reason + "\n";
  if (o.optimum) out.out += "optimum " + std::to_string(*o.optimum) + "\n";
  if (o.decision == Decision::yes && o.witness) out.out += io::emit_witness(*o.witness);
  switch (o.decision) {
    case Decision::yes:
      out.exit_code = exit_code::yes;
      break;
    case Decision::no:
      out.exit_code = exit_code::no;
      break;
    case Decision::exhausted:
      out.exit_code = exit_code::exhausted;
      break;
  }
  if (config.timing) out.err += timing_line(start);
  return out;
}

CommandOutput check_command(std::string_view instance_text, std::string_view witness_text,
                            const RunConfig& config) {
  CommandOutput out;
  std::optional<Instance> inst;
  VertexSet witness;
  try {
    inst = load(instance_text, config);
    witness = io::parse_witness(witness_text);
    for (VertexId v : witness) {
      if (v >= inst->vertex_count()) {
        throw io::ParseError(0, "witness vertex " + std::to_string(v + 1) + " out of range 1.." +
                                    std::to_string(inst->vertex_count()));
      }
    }
  } catch (const std::exception& e) {
    out.exit_code = exit_code::invalid;
    out.err = std::string("error: ") + e.what() + "\n";
    return out;
  }
  if (witness.size() > inst->budget()) {
    out.exit_code = exit_code::over_budget;
    out.out = "reject: budget exceeded (size " + std::to_string(witness.size()) + " > k " +
              std::to_string(inst->budget()) + ")\n";
    return out;
  }
  const auto violations = critical_violations(*inst, witness);
  if (!violations.empty()) {
    out.exit_code = exit_code::not_critical;
    out.out = "reject: " + describe(violations.front()) + "\n";
    return out;
  }
  out.out = "accept\n";
  return out;
}

ReduceOutput reduce_command(ReductionKind kind, std::string_view source_text, std::size_t k,
                            const RunConfig& config) {
  ReduceOutput r;
  try {
    if (kind == ReductionKind::uniform) {
      RunConfig c = config;
      c.k = k;
      const Instance source = load(source_text, c);
      const UniformResult result = uniformize(source);
      if (const auto* sc = std::get_if<UniformShortCircuit>(&result)) {
        r.command.out = std::string("m(f) = 1: the whole vertex set is the only critical set\n") +
                        "decision " + (sc->yes ? "YES" : "NO") + "\n";
        return r;
      }
      const auto& layout = std::get<UniformLayout>(result);
      r.product = io::emit_instance(layout.product);
      r.registry = io::emit_registry(layout.registry());
      r.command.out = "k' " + std::to_string(layout.k_prime) + "\n";
      return r;
    }
    const io::ParsedFile parsed = io::parse_raw(source_text);
    const Graph g = Graph::from_edges(parsed.raw.vertex_count, parsed.raw.edges);
    if (kind == ReductionKind::vc) {
      const VcLayout layout = vc_to_critical(g, k);
      r.product = io::emit_instance(layout.product);
      r.registry = io::emit_registry(layout.registry());
      r.command.out = "k' " + std::to_string(layout.k_prime) + "\n";
    } else {
      const CliqueLayout layout = clique_to_critical(g, k);
      r.product = io::emit_instance(layout.product);
      r.registry = io::emit_registry(layout.registry());
      r.command.out = "k' " + std::to_string(layout.k_prime) + "\n";
    }
  } catch (const std::exception& e) {
    r.command.exit_code = exit_code::invalid;
    r.command.err = std::string("error: ") + e.what() + "\n";
  }
  return r;
}

namespace {

std::size_t min_vertex_cover(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = n;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (const auto& [u, v] : g.edges()) {
      if (!((mask >> u) & 1U) && !((mask >> v) & 1U)) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::min<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

struct Tally {
  std::size_t pass = 0;
  std::size_t total = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what) {
    ++total;
    if (ok) {
      ++pass;
    } else if (first_failure.empty()) {
      first_failure = what;
    }
  }
};

bool oracle_yes(const Instance& inst, SearchStrategy strategy) {
  SearchOptions opts;
  opts.strategy = strategy;
  return decide_kmf(inst, opts).decision == Decision::yes;
}

}  // namespace

CommandOutput crosscheck_command(const CrosscheckConfig& config) {
  CommandOutput out;
  corpus::Rng rng(config.seed);
  std::ostringstream report;
  bool all_ok = true;
  auto emit = [&](const char* name, const Tally& t) {
    report << "suite " << name << " " << t.pass << "/" << t.total << "\n";
    if (t.pass != t.total) {
      all_ok = false;
      report << "  first failure: " << t.first_failure << "\n";
    }
  };

  {
    Tally t;
    auto compare = [&](const Instance& inst) {
      fpt::FptOptions fo;
      fo.workers = config.workers;
      const auto report_fpt = fpt::decide(inst, fo);
      const bool brute = oracle_yes(inst, SearchStrategy::enumerate);
      bool ok = (report_fpt.result.decision == Decision::yes) == brute;
      if (ok && report_fpt.result.witness) {
        ok = report_fpt.result.witness->size() <= inst.budget() &&
             is_critical_set(inst, *report_fpt.result.witness);
      }
      t.record(ok, io::emit_instance(inst));
    };
    for (std::size_t n = 1; n <= 5; ++n) {
      for (const Graph& g : corpus::connected_graphs(n)) {
        const auto f = corpus::random_thresholds(g, rng);
        const auto edges = g.edges();
        for (std::size_t k = 1; k <= config.max_k; ++k) compare(make_instance(n, edges, f, k));
      }
    }
    std::uniform_int_distribution<std::size_t> pick_n(2, std::max<std::size_t>(2, config.max_random_n));
    std::uniform_int_distribution<std::size_t> pick_k(1, config.max_k);
    std::uniform_real_distribution<double> pick_p(0.0, 0.6);
    for (std::size_t i = 0; i < config.random_instances; ++i) {
      const std::size_t n = pick_n(rng);
      const double p = pick_p(rng);
      const std::size_t k = pick_k(rng);
      compare(corpus::random_instance(n, p, k, rng));
    }
    emit("oracle-fpt", t);
  }

  {
    Tally t;
    for (std::size_t n = 2; n <= 4; ++n) {
      for (const Graph& g : corpus::connected_graphs(n)) {
        const std::size_t vc = min_vertex_cover(g);
        for (std::size_t k = 1; k <= n; ++k) {
          const VcLayout layout = vc_to_critical(g, k);
          const bool ok = validate_layout(layout).empty() &&
                          (vc <= k) == oracle_yes(layout.product, SearchStrategy::propagate);
          t.record(ok, "vc source with n = " + std::to_string(n) + ", k = " + std::to_string(k));
        }
      }
    }
    emit("vc-equivalence", t);
  }

  {
    Tally t;
    std::uniform_int_distribution<std::size_t> pick_n(2, 5);
    std::uniform_int_distribution<std::size_t> pick_k(1, 3);
    while (t.total < 40) {
      const std::size_t n = pick_n(rng);
      const Graph g = corpus::random_connected_graph(n, 0.4, rng);
      const auto f = corpus::random_thresholds(g, 3, rng);
      const auto edges = g.edges();
      const Instance src = make_instance(n, edges, f, pick_k(rng));
      if (src.max_threshold() < 2) continue;
      const UniformLayout layout = std::get<UniformLayout>(uniformize(src));
      const bool ok = validate_layout(layout).empty() &&
                      oracle_yes(src, SearchStrategy::enumerate) ==
                          oracle_yes(layout.product, SearchStrategy::propagate);
      t.record(ok, io::emit_instance(src));
    }
    emit("uniform-equivalence", t);
  }

  {
    Tally t;
    for (std::size_t n = 2; n <= 4; ++n) {
      for (const Graph& g : corpus::all_graphs(n)) {
        for (std::size_t k = 2; k <= 3; ++k) {
          const CliqueLayout layout = clique_to_critical(g, k);
          const bool ok = validate_layout(layout).empty() &&
                          clique_structured_decide(layout).yes == has_clique(g, k);
          t.record(ok, "clique source with n = " + std::to_string(n) + ", k = " + std::to_string(k));
        }
      }
    }
    emit("clique-structured", t);
  }

  out.out = report.str();
  out.exit_code = all_ok ? 0 : 1;
  return out;
}

std::string generate_command(std::size_t n, double p, std::size_t k, std::uint64_t seed) {
  corpus::Rng rng(seed);
  return io::emit_instance(corpus::random_instance(n, p, k, rng));
}

}  // namespace fcs::cli

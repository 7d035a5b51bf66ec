#include <gtest/gtest.h>

#include "fcs/cli.hpp"
#include "fcs/corpus.hpp"
#include "fcs/dynamics.hpp"
#include "fcs/io.hpp"
#include "fcs/reductions.hpp"
#include "test_support.hpp"

using namespace fcs;
using namespace fcs::testing;
namespace ec = fcs::cli::exit_code;

namespace {

std::string text(const Instance& inst) { return io::emit_instance(inst); }

cli::RunConfig algo(cli::Algorithm a) {
  cli::RunConfig c;
  c.algorithm = a;
  return c;
}

/// The witness printed after the decision line(s).
VertexSet witness_of(const std::string& out) {
  const auto pos = out.find("s ");
  if (pos == std::string::npos) return {};
  return io::parse_witness(out.substr(pos));
}

}  // namespace

TEST(Solve, PathFptYes) {
  const Instance p3 = make(3, path_edges(3), {1, 2, 1}, 2);
  const auto r = cli::solve_command(text(p3), algo(cli::Algorithm::fpt_k));
  EXPECT_EQ(r.exit_code, ec::yes);
  EXPECT_EQ(r.out.rfind("decision YES\n", 0), 0U);
  const VertexSet w = witness_of(r.out);
  EXPECT_EQ(w.size(), 2U);
  EXPECT_TRUE(is_critical_set(p3, w));
  EXPECT_TRUE(r.err.empty());
}

TEST(Solve, LongPathKmfNo) {
  const auto r = cli::solve_command(text(make(10, path_edges(10), constant(10, 2), 4)),
                                    algo(cli::Algorithm::kmf));
  EXPECT_EQ(r.exit_code, ec::no);
  EXPECT_EQ(r.out.rfind("decision NO\n", 0), 0U);
  EXPECT_EQ(r.out.find("s "), std::string::npos);
}

TEST(Solve, TriangleMinimize) {
  cli::RunConfig c = algo(cli::Algorithm::brute);
  c.minimize = true;
  const auto r = cli::solve_command(text(make(3, complete_edges(3), constant(3, 2), 3)), c);
  EXPECT_EQ(r.exit_code, ec::yes);
  EXPECT_NE(r.out.find("optimum 2\n"), std::string::npos);
  EXPECT_EQ(witness_of(r.out).size(), 2U);
}

TEST(Solve, BudgetOverrideAndMissingBudget) {
  const std::string no_k = "p fcs 3 3\nt 1 2\nt 2 2\nt 3 2\ne 1 2\ne 1 3\ne 2 3\n";
  const auto missing = cli::solve_command(no_k, {});
  EXPECT_EQ(missing.exit_code, ec::invalid);
  EXPECT_NE(missing.err.find("budget"), std::string::npos);
  cli::RunConfig c;
  c.k = 1;
  EXPECT_EQ(cli::solve_command(no_k, c).exit_code, ec::no);
  c.k = 2;
  EXPECT_EQ(cli::solve_command(no_k, c).exit_code, ec::yes);
}

TEST(Solve, InvalidInputExitCode) {
  EXPECT_EQ(cli::solve_command("p fcs 2 1\nt 1 1\nt 2 1\ne 1 1\nk 1\n", {}).exit_code, ec::invalid);
  EXPECT_EQ(cli::solve_command("garbage", {}).exit_code, ec::invalid);
}

TEST(Solve, WorkLimitGivesUnknown) {
  corpus::Rng rng(6);
  cli::RunConfig c = algo(cli::Algorithm::brute);
  c.work_limit = 1;
  c.minimize = true;
  const auto r = cli::solve_command(text(corpus::random_instance(14, 0.3, 14, rng)), c);
  EXPECT_EQ(r.exit_code, ec::exhausted);
  EXPECT_EQ(r.out.rfind("decision UNKNOWN\n", 0), 0U);
}

TEST(Solve, TimingGoesToStderrOnly) {
  cli::RunConfig c;
  const std::string t = text(make(3, complete_edges(3), constant(3, 2), 2));
  const auto plain = cli::solve_command(t, c);
  c.timing = true;
  const auto timed = cli::solve_command(t, c);
  EXPECT_EQ(plain.out, timed.out);
  EXPECT_FALSE(timed.err.empty());
}

TEST(Solve, AlgorithmsAgreeOnDecision) {
  corpus::Rng rng(44);
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng() % 9);
    const Instance inst = corpus::random_instance(n, 0.35, 1 + rng() % 3, rng);
    const bool expected = naive_decide(inst);
    for (auto a : {cli::Algorithm::brute, cli::Algorithm::kmf, cli::Algorithm::fpt_k}) {
      const auto r = cli::solve_command(text(inst), algo(a));
      ASSERT_EQ(r.exit_code, expected ? ec::yes : ec::no);
      if (expected) EXPECT_TRUE(is_critical_set(inst, witness_of(r.out)));
    }
  }
}

TEST(Solve, OutputIndependentOfWorkers) {
  corpus::Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    const std::string t = text(corpus::random_instance(10, 0.3, 1 + rng() % 3, rng));
    for (auto a : {cli::Algorithm::brute, cli::Algorithm::kmf, cli::Algorithm::fpt_k}) {
      cli::RunConfig one = algo(a), four = algo(a);
      four.workers = 4;
      const auto r1 = cli::solve_command(t, one);
      const auto r4 = cli::solve_command(t, four);
      EXPECT_EQ(r1.out, r4.out);
      EXPECT_EQ(r1.exit_code, r4.exit_code);
    }
  }
}

TEST(Check, Examples) {
  const std::string k3 = text(make(3, complete_edges(3), constant(3, 2), 2));
  const auto ok = cli::check_command(k3, "s 2\nv 1 2\n", {});
  EXPECT_EQ(ok.exit_code, ec::accepted);
  EXPECT_EQ(ok.out, "accept\n");

  const auto bad = cli::check_command(k3, "s 1\nv 1\n", {});
  EXPECT_EQ(bad.exit_code, ec::not_critical);
  EXPECT_EQ(bad.out, "reject: state of vertex 2 remains 0 at time 1\n");

  const auto over = cli::check_command(k3, "s 3\nv 1 2 3\n", {});
  EXPECT_EQ(over.exit_code, ec::over_budget);
  EXPECT_EQ(over.out, "reject: budget exceeded (size 3 > k 2)\n");

  EXPECT_EQ(cli::check_command(k3, "s 1\nv 4\n", {}).exit_code, ec::invalid);
  EXPECT_EQ(cli::check_command(k3, "s 2\nv 1\n", {}).exit_code, ec::invalid);
}

TEST(Reduce, VertexCoverProduct) {
  const std::string src = text(make(3, path_edges(3), constant(3, 1), 1));
  const auto r = cli::reduce_command(cli::ReductionKind::vc, src, 1, {});
  ASSERT_EQ(r.command.exit_code, 0) << r.command.err;
  const VcLayout layout = vc_to_critical(Graph::from_edges(3, path_edges(3)), 1);
  EXPECT_EQ(r.command.out, "k' " + std::to_string(layout.k_prime) + "\n");
  EXPECT_EQ(io::parse_instance(r.product), layout.product);
  EXPECT_EQ(r.registry, io::emit_registry(layout.registry()));
}

TEST(Reduce, CliqueProduct) {
  const std::string src = text(make(3, path_edges(3), constant(3, 1), 1));
  const auto r = cli::reduce_command(cli::ReductionKind::clique, src, 2, {});
  ASSERT_EQ(r.command.exit_code, 0) << r.command.err;
  const CliqueLayout layout = clique_to_critical(Graph::from_edges(3, path_edges(3)), 2);
  EXPECT_EQ(r.command.out, "k' " + std::to_string(layout.k_prime) + "\n");
  EXPECT_EQ(io::parse_instance(r.product), layout.product);
}

TEST(Reduce, UniformProductAndShortCircuit) {
  const Instance p3 = make(3, path_edges(3), {1, 2, 1}, 2);
  const auto r = cli::reduce_command(cli::ReductionKind::uniform, text(p3), 2, {});
  ASSERT_EQ(r.command.exit_code, 0) << r.command.err;
  ValidationOptions saturated;
  saturated.allow_saturated_thresholds = true;
  const Instance product = io::parse_instance(r.product, saturated);
  EXPECT_EQ(product.thresholds().min_threshold(), product.max_threshold());
  EXPECT_EQ(r.command.out, "k' " + std::to_string(product.budget()) + "\n");

  const auto sc = cli::reduce_command(cli::ReductionKind::uniform,
                                      text(make(3, path_edges(3), constant(3, 1), 3)), 3, {});
  EXPECT_EQ(sc.command.exit_code, 0);
  EXPECT_TRUE(sc.product.empty());
  EXPECT_NE(sc.command.out.find("decision YES"), std::string::npos);
}

TEST(Reduce, RejectsBadSources) {
  const std::string two = "p fcs 2 0\nt 1 1\nt 2 1\n";
  EXPECT_EQ(cli::reduce_command(cli::ReductionKind::vc, two, 1, {}).command.exit_code, ec::invalid);
  EXPECT_EQ(cli::reduce_command(cli::ReductionKind::vc, "nonsense", 1, {}).command.exit_code,
            ec::invalid);
}

TEST(Crosscheck, SmallRunPasses) {
  cli::CrosscheckConfig c;
  c.random_instances = 30;
  c.max_random_n = 7;
  c.max_k = 2;
  const auto r = cli::crosscheck_command(c);
  EXPECT_EQ(r.exit_code, 0) << r.out;
  EXPECT_NE(r.out.find("suite oracle-fpt"), std::string::npos);
}

TEST(Generate, SeededAndValid) {
  const std::string a = cli::generate_command(8, 0.3, 2, 5);
  EXPECT_EQ(a, cli::generate_command(8, 0.3, 2, 5));
  const Instance inst = io::parse_instance(a);
  EXPECT_EQ(inst.vertex_count(), 8U);
  EXPECT_EQ(inst.budget(), 2U);
}

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "fcs/cli.hpp"

namespace {

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  text = buf.str();
  return true;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  return static_cast<bool>(out);
}

int emit(const fcs::cli::CommandOutput& o) {
  std::cout << o.out << std::flush;
  std::cerr << o.err << std::flush;
  return o.exit_code;
}

int unreadable(const std::string& path) {
  std::cerr << "error: cannot read " << path << "\n";
  return fcs::cli::exit_code::invalid;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace fcs::cli;
  CLI::App app{"f-critical set solver, checker and reduction generator"};
  app.require_subcommand(1);

  RunConfig config;
  std::size_t k = 0;
  const std::map<std::string, Algorithm> algorithms{
      {"brute", Algorithm::brute}, {"kmf", Algorithm::kmf}, {"fpt-k", Algorithm::fpt_k}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--k", k, "budget (overrides the file's k line)")->check(CLI::PositiveNumber);
    sub->add_option("--workers", config.workers, "OpenMP threads (0: runtime default)")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--work-limit", config.work_limit, "search nodes before giving up");
    sub->add_option("--seed", config.seed, "random seed");
    sub->add_flag("--allow-saturated", config.allow_saturated, "accept f(v) > d(v)+1");
  };

  std::string instance_path, witness_path, output_path;

  auto* solve = app.add_subcommand("solve", "decide or minimize");
  solve->add_option("instance", instance_path)->required();
  solve->add_option("--algo", config.algorithm, "brute | kmf | fpt-k")
      ->transform(CLI::CheckedTransformer(algorithms, CLI::ignore_case));
  solve->add_flag("--minimize", config.minimize, "also report the optimum");
  solve->add_flag("--faithful", config.faithful, "fpt-k: literal profile sweep");
  solve->add_flag("--timing", config.timing, "print wall time to stderr");
  add_common(solve);

  auto* check = app.add_subcommand("check", "verify a witness");
  check->add_option("instance", instance_path)->required();
  check->add_option("witness", witness_path)->required();
  add_common(check);

  const std::map<std::string, ReductionKind> kinds{
      {"vc", ReductionKind::vc}, {"clique", ReductionKind::clique}, {"uniform", ReductionKind::uniform}};
  ReductionKind kind = ReductionKind::vc;
  auto* reduce = app.add_subcommand("reduce", "build a reduction product");
  reduce->add_option("kind", kind, "vc | clique | uniform")
      ->required()
      ->transform(CLI::CheckedTransformer(kinds, CLI::ignore_case));
  reduce->add_option("source", instance_path)->required();
  reduce->add_option("-o,--output", output_path,
                     "product file; the registry goes to <output>.groups (default: stdout)");
  add_common(reduce);

  CrosscheckConfig cross;
  auto* crosscheck = app.add_subcommand("crosscheck", "run the agreement suites");
  crosscheck->add_option("--seed", cross.seed);
  crosscheck->add_option("--workers", cross.workers)->check(CLI::NonNegativeNumber);
  crosscheck->add_option("--random", cross.random_instances, "random oracle/fpt instances");
  crosscheck->add_option("--max-n", cross.max_random_n, "largest random instance");
  crosscheck->add_option("--max-k", cross.max_k)->check(CLI::PositiveNumber);

  std::size_t gen_n = 8;
  double gen_p = 0.3;
  std::size_t gen_k = 2;
  std::uint64_t gen_seed = 1;
  auto* generate = app.add_subcommand("generate", "print a seeded random instance");
  generate->add_option("--n", gen_n)->check(CLI::PositiveNumber);
  generate->add_option("--p", gen_p, "extra-edge probability")->check(CLI::Range(0.0, 1.0));
  generate->add_option("--k", gen_k)->check(CLI::PositiveNumber);
  generate->add_option("--seed", gen_seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : exit_code::invalid;
  }
  if (k > 0) config.k = k;

  if (*solve) {
    std::string text;
    if (!read_file(instance_path, text)) return unreadable(instance_path);
    return emit(solve_command(text, config));
  }
  if (*check) {
    std::string text, witness;
    if (!read_file(instance_path, text)) return unreadable(instance_path);
    if (!read_file(witness_path, witness)) return unreadable(witness_path);
    return emit(check_command(text, witness, config));
  }
  if (*reduce) {
    if (k == 0) {
      std::cerr << "error: reduce needs --k\n";
      return exit_code::invalid;
    }
    std::string text;
    if (!read_file(instance_path, text)) return unreadable(instance_path);
    const ReduceOutput r = reduce_command(kind, text, k, config);
    if (r.command.exit_code == 0 && !r.product.empty()) {
      if (output_path.empty()) {
        std::cout << r.product << "c groups\n";
        std::istringstream groups(r.registry);
        for (std::string line; std::getline(groups, line);) std::cout << "c " << line << "\n";
        std::cout << "c " << r.command.out << std::flush;
        return r.command.exit_code;
      } else if (!write_file(output_path, r.product) ||
                 !write_file(output_path + ".groups", r.registry)) {
        std::cerr << "error: cannot write " << output_path << "\n";
        return exit_code::invalid;
      }
    }
    return emit(r.command);
  }
  if (*crosscheck) return emit(crosscheck_command(cross));
  if (*generate) {
    std::cout << generate_command(gen_n, gen_p, gen_k, gen_seed);
    return 0;
  }
  return 0;
}

#pragma once

// Command implementations behind the fcs tool. Each returns its exit code and the
// exact bytes for stdout and stderr so tests can compare runs.

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <string_view>

namespace fcs::cli {

namespace exit_code {
inline constexpr int yes = 0;
inline constexpr int no = 1;
inline constexpr int exhausted = 2;
inline constexpr int invalid = 3;

// check
inline constexpr int accepted = 0;
inline constexpr int not_critical = 1;
inline constexpr int over_budget = 2;
}  // namespace exit_code

enum class Algorithm { brute, kmf, fpt_k };

struct RunConfig {
  Algorithm algorithm = Algorithm::kmf;
  std::optional<std::size_t> k;  // overrides the file's budget line
  std::uint64_t work_limit = std::numeric_limits<std::uint64_t>::max();
  int workers = 1;
  std::uint64_t seed = 1;
  bool faithful = false;
  bool minimize = false;
  bool allow_saturated = false;
  bool timing = false;
};

struct CommandOutput {
  int exit_code = 0;
  std::string out;
  std::string err;
};

/// Report lines: "decision YES|NO|UNKNOWN", optional "optimum <r>", then the witness.
CommandOutput solve_command(std::string_view instance_text, const RunConfig& config);

CommandOutput check_command(std::string_view instance_text, std::string_view witness_text,
                            const RunConfig& config);

enum class ReductionKind { vc, clique, uniform };

struct ReduceOutput {
  CommandOutput command;   // out carries the "k' <value>" summary
  std::string product;     // instance file, empty on error or short-circuit
  std::string registry;    // group sidecar
};

/// Vertex Cover and Clique read only the graph of the source file.
ReduceOutput reduce_command(ReductionKind kind, std::string_view source_text, std::size_t k,
                            const RunConfig& config);

struct CrosscheckConfig {
  std::uint64_t seed = 1;
  int workers = 1;
  std::size_t random_instances = 200;
  std::size_t max_random_n = 10;
  std::size_t max_k = 3;
};

/// Seeded and exhaustive small corpora: oracle vs fpt_k, Vertex Cover equivalence,
/// uniformization equivalence, Clique structured decision. One line per suite.
CommandOutput crosscheck_command(const CrosscheckConfig& config);

/// A seeded random instance in the file format.
std::string generate_command(std::size_t n, double p, std::size_t k, std::uint64_t seed);

}  // namespace fcs::cli

#pragma once

// Text formats.
//
// Instance file (ids are 1-based, one directive per line):
//   c <comment>
//   p fcs <n> <m>
//   t <id> <threshold>      exactly one per vertex
//   e <u> <v>               exactly m lines
//   k <budget>              optional
//
// Witness file:
//   s <size>
//   v <id> <id> ...         ascending
//
// Group registry sidecar:
//   <group-name> <id> <id> ...

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fcs/instance.hpp"
#include "fcs/reductions.hpp"

namespace fcs::io {

class ParseError : public std::runtime_error {
 public:
  /// line is 1-based; 0 means the whole file (e.g. a graph-level invariant).
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

struct ParsedFile {
  RawInstance raw;
  bool has_budget = false;
};

/// Grammar and per-line checks only (ids in range, no self-loops, no duplicates,
/// counts as declared). Graph-level invariants are left to validate_instance.
ParsedFile parse_raw(std::string_view text);

/// parse_raw followed by validation; a failed validation is reported as line 0.
Instance parse_instance(std::string_view text, const ValidationOptions& options = {});

/// Canonical text: header, thresholds by id, edges sorted, then the budget line.
std::string emit_instance(const Instance& instance, bool with_budget = true);

VertexSet parse_witness(std::string_view text);
std::string emit_witness(const VertexSet& witness);

std::string emit_registry(const GroupRegistry& registry);

}  // namespace fcs::io

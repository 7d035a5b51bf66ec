#include "fcs/io.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <optional>
#include <set>
#include <vector>

namespace fcs::io {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error(line == 0 ? message : "line " + std::to_string(line) + ": " + message),
      line_(line) {}

namespace {

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::optional<std::uint64_t> to_uint(std::string_view s) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

/// Calls fn(line_number, tokens) for every non-blank, non-comment line; returns the
/// number of the line after the last one.
template <typename Fn>
std::size_t for_each_line(std::string_view text, Fn fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    const auto tokens = split(text.substr(pos, end - pos));
    if (!tokens.empty() && tokens[0] != "c") fn(line_no, tokens);
    pos = end + 1;
  }
  return line_no + 1;
}

}  // namespace

ParsedFile parse_raw(std::string_view text) {
  ParsedFile out;
  RawInstance& raw = out.raw;
  bool header = false;
  std::size_t declared_edges = 0;
  std::vector<std::uint8_t> has_threshold;
  std::set<Edge> seen_edges;

  auto number = [](std::size_t line, std::string_view tok, const char* what) {
    const auto v = to_uint(tok);
    if (!v) throw ParseError(line, std::string("malformed ") + what + " '" + std::string(tok) + "'");
    return *v;
  };
  auto vertex = [&](std::size_t line, std::string_view tok) {
    const auto v = number(line, tok, "vertex id");
    if (v < 1 || v > raw.vertex_count) {
      throw ParseError(line, "vertex id " + std::string(tok) + " out of range 1.." +
                                 std::to_string(raw.vertex_count));
    }
    return static_cast<VertexId>(v - 1);
  };

  const std::size_t eof_line = for_each_line(text, [&](std::size_t line, const auto& tok) {
    if (tok[0] == "p") {
      if (header) throw ParseError(line, "duplicate problem line");
      if (tok.size() != 4 || tok[1] != "fcs") throw ParseError(line, "expected 'p fcs <n> <m>'");
      raw.vertex_count = number(line, tok[2], "vertex count");
      declared_edges = number(line, tok[3], "edge count");
      raw.thresholds.assign(raw.vertex_count, 0);
      has_threshold.assign(raw.vertex_count, 0);
      header = true;
      return;
    }
    if (!header) throw ParseError(line, "'" + std::string(tok[0]) + "' line before the problem line");
    if (tok[0] == "t") {
      if (tok.size() != 3) throw ParseError(line, "expected 't <id> <threshold>'");
      const VertexId v = vertex(line, tok[1]);
      if (has_threshold[v]) throw ParseError(line, "duplicate threshold for vertex " + std::string(tok[1]));
      const auto f = number(line, tok[2], "threshold");
      if (f == 0) throw ParseError(line, "zero threshold for vertex " + std::string(tok[1]));
      if (f > std::numeric_limits<Threshold>::max()) throw ParseError(line, "threshold too large");
      raw.thresholds[v] = static_cast<Threshold>(f);
      has_threshold[v] = 1;
    } else if (tok[0] == "e") {
      if (tok.size() != 3) throw ParseError(line, "expected 'e <u> <v>'");
      const VertexId u = vertex(line, tok[1]);
      const VertexId v = vertex(line, tok[2]);
      if (u == v) throw ParseError(line, "self-loop at vertex " + std::string(tok[1]));
      if (!seen_edges.insert(std::minmax(u, v)).second) {
        throw ParseError(line, "duplicate edge " + std::string(tok[1]) + " " + std::string(tok[2]));
      }
      if (raw.edges.size() == declared_edges) {
        throw ParseError(line, "more edges than the declared " + std::to_string(declared_edges));
      }
      raw.edges.emplace_back(u, v);
    } else if (tok[0] == "k") {
      if (tok.size() != 2) throw ParseError(line, "expected 'k <budget>'");
      if (out.has_budget) throw ParseError(line, "duplicate budget line");
      const auto k = number(line, tok[1], "budget");
      if (k == 0) throw ParseError(line, "budget must be at least 1");
      raw.budget = static_cast<std::int64_t>(k);
      out.has_budget = true;
    } else {
      throw ParseError(line, "unknown line type '" + std::string(tok[0]) + "'");
    }
  });

  if (!header) throw ParseError(eof_line, "missing problem line");
  for (std::size_t v = 0; v < raw.vertex_count; ++v) {
    if (!has_threshold[v]) {
      throw ParseError(eof_line, "end of file: no threshold for vertex " + std::to_string(v + 1));
    }
  }
  if (raw.edges.size() != declared_edges) {
    throw ParseError(eof_line, "end of file: " + std::to_string(raw.edges.size()) +
                                   " edges, header declares " + std::to_string(declared_edges));
  }
  return out;
}

Instance parse_instance(std::string_view text, const ValidationOptions& options) {
  const ParsedFile parsed = parse_raw(text);
  auto result = validate_instance(parsed.raw, options);
  if (!result.ok()) {
    std::string msg = "invalid instance:";
    for (const auto& issue : result.issues) msg += " " + issue.message + ";";
    msg.pop_back();
    throw ParseError(0, msg);
  }
  return std::move(*result.instance);
}

std::string emit_instance(const Instance& instance, bool with_budget) {
  std::string out = "p fcs " + std::to_string(instance.vertex_count()) + " " +
                    std::to_string(instance.edge_count()) + "\n";
  for (VertexId v = 0; v < instance.vertex_count(); ++v) {
    out += "t " + std::to_string(v + 1) + " " + std::to_string(instance.threshold(v)) + "\n";
  }
  for (const auto& [u, v] : instance.graph().edges()) {
    out += "e " + std::to_string(u + 1) + " " + std::to_string(v + 1) + "\n";
  }
  if (with_budget) out += "k " + std::to_string(instance.budget()) + "\n";
  return out;
}

VertexSet parse_witness(std::string_view text) {
  std::optional<std::size_t> declared;
  VertexSet ids;
  const std::size_t eof_line = for_each_line(text, [&](std::size_t line, const auto& tok) {
    if (tok[0] == "s") {
      if (declared) throw ParseError(line, "duplicate size line");
      if (tok.size() != 2) throw ParseError(line, "expected 's <size>'");
      const auto s = to_uint(tok[1]);
      if (!s) throw ParseError(line, "malformed size '" + std::string(tok[1]) + "'");
      declared = *s;
    } else if (tok[0] == "v") {
      for (std::size_t i = 1; i < tok.size(); ++i) {
        const auto v = to_uint(tok[i]);
        if (!v || *v == 0 || *v > std::numeric_limits<VertexId>::max()) {
          throw ParseError(line, "malformed vertex id '" + std::string(tok[i]) + "'");
        }
        ids.push_back(static_cast<VertexId>(*v - 1));
      }
    } else {
      throw ParseError(line, "unknown line type '" + std::string(tok[0]) + "'");
    }
  });
  if (!declared) throw ParseError(eof_line, "missing size line");
  const std::size_t listed = ids.size();
  normalize(ids);
  if (ids.size() != listed) throw ParseError(0, "witness lists a vertex twice");
  if (ids.size() != *declared) {
    throw ParseError(0, "size line says " + std::to_string(*declared) + " but " +
                            std::to_string(ids.size()) + " vertices are listed");
  }
  return ids;
}

std::string emit_witness(const VertexSet& witness) {
  std::string out = "s " + std::to_string(witness.size()) + "\nv";
  for (VertexId v : witness) out += " " + std::to_string(v + 1);
  return out + "\n";
}

std::string emit_registry(const GroupRegistry& registry) {
  std::string out;
  for (const auto& g : registry) {
    out += g.name;
    for (VertexId v : g.members) out += " " + std::to_string(v + 1);
    out += "\n";
  }
  return out;
}

}  // namespace fcs::io

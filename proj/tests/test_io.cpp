#include <gtest/gtest.h>

#include "fcs/corpus.hpp"
#include "fcs/io.hpp"
#include "test_support.hpp"

using namespace fcs;
using namespace fcs::testing;

namespace {

constexpr const char* kP3 =
    "c path on three vertices\n"
    "p fcs 3 2\n"
    "t 1 1\n"
    "t 2 2\n"
    "t 3 1\n"
    "e 1 2\n"
    "e 2 3\n"
    "k 2\n";

/// Line number of the ParseError thrown by parse_raw, or 0 if it parses.
std::size_t error_line(const std::string& text) {
  try {
    io::parse_raw(text);
  } catch (const io::ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string error_message(const std::string& text) {
  try {
    io::parse_instance(text);
  } catch (const io::ParseError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST(Parse, PathExample) {
  const auto parsed = io::parse_raw(kP3);
  EXPECT_TRUE(parsed.has_budget);
  EXPECT_EQ(parsed.raw.vertex_count, 3U);
  EXPECT_EQ(parsed.raw.thresholds, (std::vector<Threshold>{1, 2, 1}));
  EXPECT_EQ(parsed.raw.budget, 2);
  const Instance inst = io::parse_instance(kP3);
  EXPECT_EQ(inst, make(3, path_edges(3), {1, 2, 1}, 2));
}

TEST(Parse, BudgetLineIsOptional) {
  const auto parsed = io::parse_raw("p fcs 1 0\nt 1 1\n");
  EXPECT_FALSE(parsed.has_budget);
}

TEST(Parse, MissingThresholdReportedAtEndOfFile) {
  const std::string text = "p fcs 3 2\nt 1 1\nt 2 2\ne 1 2\ne 2 3\n";
  EXPECT_EQ(error_line(text), 6U);
  EXPECT_NE(error_message(text).find("no threshold for vertex 3"), std::string::npos);
}

TEST(Parse, LineLevelErrors) {
  EXPECT_EQ(error_line("p fcs 2 1\nt 1 1\nt 2 1\ne 1 1\n"), 4U);
  EXPECT_NE(error_message("p fcs 2 1\nt 1 1\nt 2 1\ne 1 1\n").find("self-loop"), std::string::npos);
  EXPECT_EQ(error_line("p fcs 2 2\nt 1 1\nt 2 1\ne 1 2\ne 2 1\n"), 5U);
  EXPECT_EQ(error_line("p fcs 2 1\nt 1 1\nt 1 1\n"), 3U);
  EXPECT_EQ(error_line("p fcs 2 1\nt 1 1\nt 3 1\n"), 3U);
  EXPECT_EQ(error_line("p fcs 2 1\nt 1 0\n"), 2U);
  EXPECT_EQ(error_line("t 1 1\np fcs 1 0\n"), 1U);
  EXPECT_EQ(error_line("p fcs 1 0\np fcs 1 0\n"), 2U);
  EXPECT_EQ(error_line("p fcs 1 0\nt 1 x\n"), 2U);
  EXPECT_EQ(error_line("p fcs 1 0\nt 1 1\nk 0\n"), 3U);
  EXPECT_EQ(error_line("p fcs 1 0\nt 1 1\nq 1\n"), 3U);
  EXPECT_EQ(error_line("p fcs 2 0\nt 1 1\nt 2 1\ne 1 2\n"), 4U);
}

TEST(Parse, EdgeCountMismatch) {
  const std::string text = "p fcs 3 3\nt 1 1\nt 2 1\nt 3 1\ne 1 2\ne 2 3\n";
  EXPECT_EQ(error_line(text), 7U);
}

TEST(Parse, GraphInvariantsReportedAsFileLevel) {
  const std::string disconnected = "p fcs 3 1\nt 1 1\nt 2 1\nt 3 1\ne 1 2\nk 1\n";
  EXPECT_EQ(error_line(disconnected), 0U);  // grammar is fine
  try {
    io::parse_instance(disconnected);
    FAIL();
  } catch (const io::ParseError& e) {
    EXPECT_EQ(e.line(), 0U);
    EXPECT_NE(std::string(e.what()).find("invalid instance"), std::string::npos);
  }
  EXPECT_THROW(io::parse_instance("p fcs 2 1\nt 1 3\nt 2 1\ne 1 2\n"), io::ParseError);
  ValidationOptions saturated;
  saturated.allow_saturated_thresholds = true;
  EXPECT_NO_THROW(io::parse_instance("p fcs 2 1\nt 1 3\nt 2 1\ne 1 2\n", saturated));
}

TEST(Emit, RoundTripOnRandomInstances) {
  corpus::Rng rng(31);
  for (int i = 0; i < 200; ++i) {
    const std::size_t n = 1 + static_cast<std::size_t>(rng() % 25);
    const std::size_t k = 1 + static_cast<std::size_t>(rng() % 5);
    const Instance inst = corpus::random_instance(n, 0.2, k, rng);
    const std::string text = io::emit_instance(inst);
    EXPECT_EQ(io::parse_instance(text), inst);
    EXPECT_EQ(io::emit_instance(io::parse_instance(text)), text);
  }
}

TEST(Emit, CanonicalText) {
  const Instance inst = make(3, {{2, 1}, {1, 0}}, {1, 2, 1}, 2);
  EXPECT_EQ(io::emit_instance(inst), "p fcs 3 2\nt 1 1\nt 2 2\nt 3 1\ne 1 2\ne 2 3\nk 2\n");
  EXPECT_EQ(io::emit_instance(inst, false), "p fcs 3 2\nt 1 1\nt 2 2\nt 3 1\ne 1 2\ne 2 3\n");
}

TEST(Witness, ParseAndEmit) {
  EXPECT_EQ(io::emit_witness({0, 2}), "s 2\nv 1 3\n");
  EXPECT_EQ(io::parse_witness("s 2\nv 3 1\n"), (VertexSet{0, 2}));
  EXPECT_EQ(io::parse_witness("s 3\nv 1\nv 2 4\n"), (VertexSet{0, 1, 3}));
  EXPECT_TRUE(io::parse_witness("s 0\nv\n").empty());
  EXPECT_THROW(io::parse_witness("s 2\nv 1 1\n"), io::ParseError);
  EXPECT_THROW(io::parse_witness("s 3\nv 1 2\n"), io::ParseError);
  EXPECT_THROW(io::parse_witness("v 1 2\n"), io::ParseError);
  EXPECT_THROW(io::parse_witness("s 1\nv 0\n"), io::ParseError);
  corpus::Rng rng(2);
  for (int i = 0; i < 100; ++i) {
    const VertexSet w = from_mask(rng() & 0xFFFFF);
    EXPECT_EQ(io::parse_witness(io::emit_witness(w)), w);
  }
}

TEST(Registry, Emit) {
  const GroupRegistry r{{"F", {0, 1}}, {"Q", {}}};
  EXPECT_EQ(io::emit_registry(r), "F 1 2\nQ\n");
}

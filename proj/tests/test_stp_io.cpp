#include <string>

#include "doctest.h"
#include "steinred/stp_io.hpp"
#include "support.hpp"

using namespace steinred;
using namespace steinred::testing;

namespace {

const char* kMinimal =
    "33D32945 STP File, STP Format Version 1.0\n"
    "SECTION Graph\nNodes 2\nEdges 1\nE 1 2 5\nEND\n"
    "SECTION Terminals\nTerminals 1\nTP 1 3\nEND\nEOF\n";

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("parse_stp: minimal file") {
  const auto inst = parse_stp(kMinimal);
  CHECK(inst.alive_vertex_count() == 2);
  CHECK(inst.alive_edge_count() == 1);
  CHECK(inst.edge(0).cost == 5);
  CHECK(inst.prize(0) == 3);
  CHECK(inst.prize(1) == 0);
}

TEST_CASE("parse_stp: zero edge cost names its line") {
  std::string text = kMinimal;
  text.replace(text.find("E 1 2 5"), 7, "E 1 2 0");
  try {
    parse_stp(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
    CHECK(contains(e.what(), "non-positive edge cost at line 5"));
  }
}

TEST_CASE("parse_stp: malformed inputs") {
  CHECK_THROWS_AS(parse_stp("SECTION Graph\nNodes 1\nEND\nEOF\n"), ParseError);
  CHECK_THROWS_AS(parse_stp("33D32945 STP File\nSECTION Graph\nNodes 2\nE 1 2 1\n"), ParseError);
  CHECK_THROWS_AS(parse_stp("33D32945 STP File\nSECTION Graph\nNodes 2\nE 1 3 1\nEND\nEOF\n"), ParseError);
  CHECK_THROWS_AS(parse_stp("33D32945 STP File\nSECTION Graph\nNodes 2\nE 1 2 x\nEND\nEOF\n"), ParseError);
  CHECK_THROWS_AS(parse_stp("33D32945 STP File\nSECTION Graph\nNodes 2\nEND\nEOF\n"), ParseError);
  CHECK_THROWS_AS(parse_stp("33D32945 STP File\nSECTION Graph\nNodes 2\nEdges 2\nE 1 2 1\nEND\nEOF\n"),
                  ParseError);
}

TEST_CASE("parse_stp: parallel edges collapse to the cheapest") {
  const auto inst = parse_stp(
      "33D32945 STP File\nSECTION Graph\nNodes 2\nEdges 3\nE 1 2 5\nE 2 1 2\nE 1 1 3\nEND\nEOF\n");
  CHECK(inst.alive_edge_count() == 1);
  CHECK(inst.edge(*inst.find_edge(0, 1)).cost == 2);
}

TEST_CASE("write_stp: path3 and fixed terminals") {
  const auto out = write_stp(path3());
  CHECK(contains(out, "Nodes 3"));
  CHECK(contains(out, "Edges 2"));
  CHECK(contains(out, "TP 2 4"));
  auto rooted = path3();
  rooted.set_fixed(1);
  const auto r = write_stp(rooted);
  CHECK(contains(r, "\nT 2\n"));
  CHECK_FALSE(contains(r, "\nTP "));
}

TEST_CASE("write_stp: star7 file shape") {
  const auto out = write_stp(star7());
  CHECK(contains(out, "Nodes 7"));
  CHECK(contains(out, "Edges 9"));
  std::size_t tp = 0;
  for (std::size_t pos = 0; (pos = out.find("\nTP ", pos)) != std::string::npos; ++pos) {
    ++tp;
    const auto eol = out.find('\n', pos + 1);
    CHECK(out.substr(eol - 2, 2) == " 5");
  }
  CHECK(tp == 5);
}

TEST_CASE("vendored data files match the builders") {
  CHECK(read_stp_file(data_dir() / "star7.stp") == star7());
  CHECK(read_stp_file(data_dir() / "heavy4.stp") == heavy4());
  CHECK(read_stp_file(data_dir() / "wheel.stp") == wheel());
}

TEST_CASE("write then parse is the identity") {
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    CAPTURE(seed);
    auto inst = random_instance(seed, 2, 14);
    if (seed % 3 == 0) inst = with_fixed(std::move(inst), seed % 4);
    if (seed % 5 == 0) inst.add_offset(0.5 * static_cast<double>(seed % 7));
    CHECK(parse_stp(write_stp(inst)) == inst);
  }
}

TEST_CASE("solution files roundtrip") {
  using namespace star7_ids;
  const auto inst = star7();
  SteinerTree t{{t1, t2, t3}, {*inst.find_edge(t1, t2), *inst.find_edge(t1, t3)}};
  t.normalize();
  const auto sol = parse_solution(write_solution(inst, t), inst);
  CHECK(sol.tree == t);
  CHECK(sol.claimed_value == evaluate_cost(inst, t));
  CHECK_THROWS_AS(parse_solution("V 99\n", inst), ParseError);
  CHECK_THROWS_AS(parse_solution("E 1 5\n", inst), ParseError);
}

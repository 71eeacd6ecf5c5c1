#include <algorithm>

#include "doctest.h"
#include "support.hpp"
#include "turnpda/error.hpp"
#include "turnpda/languages.hpp"
#include "turnpda/serialize.hpp"
#include "turnpda/turn_search.hpp"

using namespace turnpda;
using turnpda::testing::word;

namespace {

/// Turns counted from the definition: maximal runs that strictly rise and
/// later strictly fall, ignoring plateaus.
std::size_t turns_by_definition(const std::vector<std::size_t>& h) {
  std::vector<int> dirs;
  for (std::size_t i = 1; i < h.size(); ++i)
    if (h[i] != h[i - 1]) dirs.push_back(h[i] > h[i - 1] ? 1 : -1);
  std::size_t turns = 0;
  for (std::size_t i = 1; i < dirs.size(); ++i) turns += dirs[i - 1] == 1 && dirs[i] == -1;
  return turns;
}

const char* kEqJson = R"({
  "states": ["q0", "q1"],
  "input_alphabet": ["a", "b"],
  "stack_alphabet": ["A", "Z0"],
  "initial_state": "q0",
  "bottom_symbol": "Z0",
  "transitions": [
    {"from": "q0", "read": "a", "top": "Z0", "to": "q0", "push": ["A", "Z0"]},
    {"from": "q0", "read": "a", "top": "A", "to": "q0", "push": ["A", "A"]},
    {"from": "q0", "read": "b", "top": "A", "to": "q1", "push": []},
    {"from": "q1", "read": "b", "top": "A", "to": "q1", "push": []},
    {"from": "q1", "read": "", "top": "Z0", "to": "q1", "push": []}
  ]
})";

}  // namespace

TEST_CASE("profile_turns matches the definition") {
  const std::vector<std::vector<std::size_t>> profiles{
      {1}, {1, 2, 3, 2, 1}, {1, 2, 1, 2, 1, 0}, {1, 1, 2, 2, 1, 2}, {1, 0}, {1, 2, 2, 2, 1, 1, 0}, {3, 2, 1, 2, 3}};
  for (const auto& p : profiles) CHECK(profile_turns(p) == turns_by_definition(p));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    std::vector<std::size_t> p{1};
    for (int j = 0; j < 12; ++j) {
      const int d = static_cast<int>(rng() % 3) - 1;
      p.push_back(p.back() == 0 && d < 0 ? 0 : p.back() + d);
    }
    REQUIRE(profile_turns(p) == turns_by_definition(p));
  }
}

TEST_CASE("step and trace_turns on A_eq") {
  const Pda pda = build_eq_oca();
  const Word w = word(pda, "aabb");
  Configuration c = initial_configuration(pda);
  Trace trace{w, {}, c};
  for (;;) {
    const auto next = step(pda, w, c);
    if (next.empty()) break;
    REQUIRE(next.size() == 1);  // A_eq is deterministic
    trace.steps.push_back({c, next[0].transition});
    c = next[0].config;
  }
  trace.final_config = c;
  CHECK(trace.accepting());
  CHECK(height_profile(trace) == std::vector<std::size_t>{1, 2, 3, 2, 1, 0});
  CHECK(trace_turns(pda, trace) == 1);

  Trace broken = trace;
  broken.steps[1].transition = broken.steps[2].transition;
  CHECK_THROWS_AS(trace_turns(pda, broken), InconsistentTrace);
}

TEST_CASE("builder drops duplicate transitions") {
  PdaBuilder b;
  b.set_initial("q");
  b.set_bottom("Z0");
  b.add("q", "a", "Z0", "q", {"Z0"});
  b.add("q", "a", "Z0", "q", {"Z0"});
  CHECK(b.build().transitions().size() == 1);
}

TEST_CASE("is_oca") {
  CHECK(is_oca(build_eq_oca()));
  CHECK(is_oca(build_Lk_oca(2)));
  PdaBuilder b;
  b.set_initial("q");
  b.set_bottom("Z0");
  b.stack("A");
  b.add("q", "a", "A", "q", {"Z0", "A"});
  CHECK_FALSE(is_oca(b.build()));
  PdaBuilder three;
  three.set_initial("q");
  three.set_bottom("Z0");
  three.stack("A");
  three.stack("B");
  CHECK_FALSE(is_oca(three.build()));
}

TEST_CASE("tokenize") {
  PdaBuilder b;
  b.set_initial("q");
  b.set_bottom("Z0");
  for (const char* a : {"a", "ab", "b"}) b.input(a);
  const Pda pda = b.build();
  CHECK(tokenize(pda, "aba") == Word{1, 0});
  CHECK(tokenize(pda, "a b ab") == Word{0, 2, 1});
  CHECK(word_to_string(pda, Word{0, 2}) == "a b");
  CHECK_THROWS_AS(tokenize(pda, "c"), Error);
}

TEST_CASE("interchange format round trip") {
  const Pda parsed = parse_automaton(kEqJson);
  CHECK(parsed == build_eq_oca());
  CHECK(parse_automaton(serialize_automaton(parsed)) == parsed);
  for (const Pda& p : {build_lsq_oca(), build_Ustar_oca(), testing::random_pda(3)})
    CHECK(parse_automaton(serialize_automaton(p)) == p);
}

TEST_CASE("interchange format errors") {
  auto kind = [](const std::string& text) {
    try {
      parse_automaton(text);
    } catch (const ParseError& e) {
      return static_cast<int>(e.kind());
    }
    return -1;
  };
  using K = ParseError::Kind;
  CHECK(kind("{") == static_cast<int>(K::MalformedDocument));
  CHECK(kind("[]") == static_cast<int>(K::MalformedDocument));
  std::string undeclared = kEqJson;
  undeclared.replace(undeclared.find("\"to\": \"q1\""), 10, "\"to\": \"q9\"");
  CHECK(kind(undeclared) == static_cast<int>(K::UndeclaredSymbol));
  std::string dup = kEqJson;
  dup.replace(dup.find("\"q1\"]"), 4, "\"q0\"");
  CHECK(kind(dup) == static_cast<int>(K::DuplicateState));
}

TEST_CASE("format_trace") {
  const Pda pda = build_eq_oca();
  const auto r = min_turns(pda, word(pda, "ab"));
  REQUIRE(r.accepted());
  CHECK(format_trace(pda, *r.witness, r.min_turns) ==
        "q0 | ε | Z0\n"
        "q0 | a | A Z0\n"
        "q1 | ab | Z0\n"
        "q1 | ab | ε\n"
        "turns=1\n");
}

#include <optional>

#include "doctest.h"
#include "support.hpp"
#include "turnpda/decision.hpp"
#include "turnpda/languages.hpp"
#include "turnpda/turn_search.hpp"

using namespace turnpda;
using turnpda::testing::for_each_word;
using turnpda::testing::random_pda;
using turnpda::testing::word;

namespace {

Dfa random_dfa(std::uint64_t seed, std::vector<std::string> alphabet, int states = 3) {
  std::mt19937_64 rng(seed);
  Dfa d;
  d.num_states = static_cast<std::size_t>(states);
  d.alphabet = std::move(alphabet);
  for (std::size_t i = 0; i < d.num_states * d.alphabet.size(); ++i) d.next.push_back(static_cast<int>(rng() % d.num_states));
  for (std::size_t i = 0; i < d.num_states; ++i) d.accepting.push_back(rng() % 2);
  return d;
}

/// A shortest terminal word derivable from each nonterminal, by fixpoint.
std::optional<Word> shortest_derivation(const Grammar& g) {
  std::vector<std::optional<Word>> best(g.nonterminals.size());
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& p : g.productions) {
      Word w;
      bool ok = true;
      for (const auto& s : p.body) {
        if (s.terminal) {
          w.push_back(s.id);
        } else if (best[s.id]) {
          w.insert(w.end(), best[s.id]->begin(), best[s.id]->end());
        } else {
          ok = false;
          break;
        }
      }
      if (ok && (!best[p.head] || w.size() < best[p.head]->size())) {
        best[p.head] = w;
        changed = true;
      }
    }
  }
  return best[g.start];
}

}  // namespace

TEST_CASE("zero_turn_nfa accepts exactly the turn-free words") {
  for (std::uint64_t seed = 200; seed < 230; ++seed) {
    const Pda pda = random_pda(seed);
    const Nfa nfa = zero_turn_nfa(pda);
    for_each_word(pda, 6, [&](const Word& w) {
      const auto r = min_turns(pda, w);
      REQUIRE(nfa.accepts(w) == (r.accepted() && r.min_turns == 0));
    });
  }
  const Pda eq = build_eqstar_oca();
  const Nfa nfa = zero_turn_nfa(eq);
  CHECK(nfa.accepts({}));
  CHECK_FALSE(nfa.accepts(word(eq, "ab")));
}

TEST_CASE("subset construction and complement") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Pda pda = random_pda(seed);
    const Nfa nfa = zero_turn_nfa(pda);
    const Dfa dfa = nfa_determinize(nfa);
    const Dfa co = dfa_complement(dfa);
    CHECK(dfa.next.size() == dfa.num_states * dfa.alphabet.size());
    for_each_word(pda, 7, [&](const Word& w) {
      REQUIRE(dfa.accepts(w) == nfa.accepts(w));
      REQUIRE(co.accepts(w) != nfa.accepts(w));
    });
  }
  Nfa two;
  two.num_states = 3;
  two.alphabet = {"a"};
  two.edges = {{0, 0, 1}, {0, 0, 2}, {1, 0, 2}};
  two.accepting = {false, false, true};
  CHECK_THROWS_AS(nfa_determinize(two, 1), BudgetExceeded);
  CHECK(nfa_determinize(two).num_states == 4);
}

TEST_CASE("product with a regular language") {
  std::vector<Pda> machines{build_eq_oca(), build_eqstar_oca()};
  for (std::uint64_t seed = 300; seed < 315; ++seed) machines.push_back(random_pda(seed));
  std::uint64_t dseed = 0;
  for (const Pda& pda : machines) {
    const Dfa dfa = random_dfa(++dseed, pda.input_alphabet());
    const Pda product = pda_regular_product(pda, dfa);
    for_each_word(pda, 6, [&](const Word& w) {
      const auto a = min_turns(pda, w);
      const auto b = min_turns(product, w);
      REQUIRE(b.accepted() == (a.accepted() && dfa.accepts(w)));
      if (b.accepted()) REQUIRE(b.min_turns == a.min_turns);
    });
  }
  CHECK(is_oca(pda_regular_product(build_eqstar_oca(), random_dfa(9, {"a", "b"}))));
}

TEST_CASE("grammar emptiness matches acceptance") {
  std::size_t nonempty = 0;
  std::vector<Pda> machines{build_eq_oca(), build_lsq_oca()};
  for (std::uint64_t seed = 400; seed < 440; ++seed) machines.push_back(random_pda(seed, 3, 8));
  PdaBuilder wide;  // pushes of length 3 are unrolled
  wide.set_initial("q");
  wide.set_bottom("Z0");
  wide.add("q", "a", "Z0", "p", {"A", "A", "Z0"});
  wide.add("p", "b", "A", "p", {});
  wide.add("p", "", "Z0", "p", {});
  machines.push_back(wide.build());
  for (const Pda& pda : machines) {
    const Grammar g = pda_to_grammar(pda);
    const bool ne = grammar_nonempty(g);
    const auto shortest = shortest_derivation(g);
    CHECK(ne == shortest.has_value());
    if (shortest) CHECK(accepts(pda, *shortest, {64, 10'000'000, std::nullopt}) == Membership::Accepted);
    bool some = false;
    for_each_word(pda, 6, [&](const Word& w) { some |= accepts(pda, w) == Membership::Accepted; });
    if (some) CHECK(ne);
    nonempty += ne;
  }
  CHECK(nonempty > 5);
  CHECK(shortest_derivation(pda_to_grammar(machines.back()))->size() == 3);
}

TEST_CASE("decide_zero_turn") {
  CHECK_FALSE(decide_zero_turn(build_eq_oca()));
  CHECK_FALSE(decide_zero_turn(build_eqstar_oca()));
  PdaBuilder flat;
  flat.set_initial("q");
  flat.set_bottom("Z0");
  flat.add("q", "a", "Z0", "q", {"Z0"});
  flat.add("q", "b", "Z0", "q", {});
  CHECK(decide_zero_turn(flat.build()));
  CHECK_THROWS_AS(decide_zero_turn(build_eqstar_oca(), 1), BudgetExceeded);
}

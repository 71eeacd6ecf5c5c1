#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "turnpda/automaton.hpp"
#include "turnpda/error.hpp"

namespace turnpda {

/// Nondeterministic finite automaton with epsilon moves (symbol kEpsilon).
struct Nfa {
  struct Edge {
    int from;
    Symbol symbol;
    int to;
  };
  std::size_t num_states = 0;
  std::vector<std::string> alphabet;
  std::vector<Edge> edges;
  int initial = 0;
  std::vector<bool> accepting;

  bool accepts(const Word& w) const;
};

/// Complete deterministic automaton; next[s * alphabet.size() + a].
struct Dfa {
  std::size_t num_states = 0;
  std::vector<std::string> alphabet;
  std::vector<int> next;
  int initial = 0;
  std::vector<bool> accepting;

  int step(int s, Symbol a) const { return next[s * alphabet.size() + a]; }
  bool accepts(const Word& w) const;
};

/// One state per normalized state plus an accepting sink; keeps the moves that
/// run with only the bottom marker on the stack and routes its pops to the sink.
Nfa zero_turn_nfa(const Pda& pda);

inline constexpr std::size_t kDefaultSubsetCap = std::size_t{1} << 20;

/// Subset construction. Throws BudgetExceeded past `max_states` subsets.
Dfa nfa_determinize(const Nfa& nfa, std::size_t max_states = kDefaultSubsetCap);
Dfa dfa_complement(Dfa dfa);

/// Machine accepting L(pda) ∩ L(dfa) with the same turn structure. Stack
/// symbols carry a bottom flag so that the pop emptying the stack is only
/// allowed into an accepting state of the DFA.
Pda pda_regular_product(const Pda& pda, const Dfa& dfa);

struct Grammar {
  struct Sym {
    bool terminal;
    int id;
  };
  struct Production {
    int head;
    std::vector<Sym> body;
  };
  std::vector<std::string> nonterminals;
  std::vector<std::string> terminals;
  std::vector<Production> productions;
  int start = 0;
};

/// Triple construction, restricted to nonterminals reachable from the start.
Grammar pda_to_grammar(const Pda& pda);
bool grammar_nonempty(const Grammar& g);

/// True iff every word accepted by `pda` has an accepting computation without turns.
bool decide_zero_turn(const Pda& pda, std::size_t max_subsets = kDefaultSubsetCap);

}  // namespace turnpda

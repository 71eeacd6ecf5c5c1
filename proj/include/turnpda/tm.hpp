#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "turnpda/automaton.hpp"
#include "turnpda/error.hpp"

namespace turnpda {

/// Deterministic single-tape Turing machine. A configuration with no
/// applicable rule is halting.
struct TuringMachine {
  struct Rule {
    std::string to;
    std::string write;
    char move;  // 'L' or 'R'
  };

  std::vector<std::string> states;
  std::vector<std::string> tape_alphabet;  // includes the blank
  std::string blank;
  std::string initial;
  std::map<std::pair<std::string, std::string>, Rule> rules;

  const Rule* rule(const std::string& state, const std::string& read) const;
};

/// Reads {states, tape_alphabet, blank, initial_state,
///        transitions: [{state, read, to, write, move}]}.
TuringMachine parse_tm(std::string_view text);
std::string serialize_tm(const TuringMachine& tm);

/// Symbol sequence; multi-character names allowed.
using Tokens = std::vector<std::string>;

/// Collision-free names for tape symbols and states in encodings: "$", "a"
/// and "b" are reserved, and clashing names get primes appended.
class TmCodec {
 public:
  explicit TmCodec(const TuringMachine& tm);

  const std::string& tape(const std::string& name) const { return tape_.at(name); }
  const std::string& state(const std::string& name) const { return state_.at(name); }
  bool is_state(const std::string& symbol) const { return state_of_.contains(symbol); }
  bool is_tape(const std::string& symbol) const { return tape_of_.contains(symbol); }
  const std::string& state_name(const std::string& symbol) const { return state_of_.at(symbol); }
  const std::string& tape_name(const std::string& symbol) const { return tape_of_.at(symbol); }

  /// Tape symbols first, then states.
  const Tokens& symbols() const { return symbols_; }

 private:
  std::map<std::string, std::string> tape_, state_, tape_of_, state_of_;
  Tokens symbols_;
};

class NonHaltingWithinCap : public Error {
 public:
  using Error::Error;
};

/// One configuration (state symbol left of the scanned cell) as codec symbols.
using ConfigTokens = Tokens;

/// Configuration reached in one step, or nullopt when `config` is halting or
/// does not contain exactly one state.
std::optional<ConfigTokens> tm_successor(const TuringMachine& tm, const TmCodec& codec,
                                         const ConfigTokens& config);
bool tm_halting(const TuringMachine& tm, const TmCodec& codec, const ConfigTokens& config);

/// The configurations of the run on `input` (tape symbol names).
std::vector<ConfigTokens> tm_configurations(const TuringMachine& tm, const Tokens& input,
                                            std::size_t step_cap);
/// Valid computation alpha_1$...$alpha_m$. Throws NonHaltingWithinCap.
Tokens tm_run(const TuringMachine& tm, const Tokens& input, std::size_t step_cap);

bool decide_valid(const TuringMachine& tm, const Tokens& input, const Tokens& y);
/// alpha_1 z_1 ... alpha_m z_m with (a) the alpha list invalid on the empty input or (b) every z_i in Eq.
bool decide_pnotvalid(const TuringMachine& tm, const Tokens& s);

/// alpha_1 z alpha_2 z ... alpha_m z for the run on the empty input.
Tokens pnotvalid_witness(const TuringMachine& tm, const Tokens& z, std::size_t step_cap);

/// One-turn OCA for the complement of the valid computations on `input`.
Pda build_invalid_oca(const TuringMachine& tm, const Tokens& input);
/// OCA for {x$y | x in Eq* or y not a valid computation on the empty input}.
Pda build_halting_reduction_oca(const TuringMachine& tm);
/// OCA for the interleaved language with {a,b}+ blocks in place of $.
Pda build_pnotvalid_oca(const TuringMachine& tm);

/// Converts symbol names to a word of `pda`; throws Error on unknown names.
Word to_word(const Pda& pda, const Tokens& tokens);
Tokens chars(std::string_view s);

}  // namespace turnpda

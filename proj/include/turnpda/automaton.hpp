#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace turnpda {

/// Interned identifier of an input or stack symbol.
using Symbol = int;
using StateId = int;
/// Read label of an epsilon move.
inline constexpr Symbol kEpsilon = -1;

using Word = std::vector<Symbol>;
/// Stack contents, top first.
using Stack = std::vector<Symbol>;

struct Transition {
  StateId from = 0;
  Symbol read = kEpsilon;
  Symbol top = 0;
  StateId to = 0;
  Stack push;  // new top first; empty = pop

  int height_delta() const { return static_cast<int>(push.size()) - 1; }
  bool operator==(const Transition&) const = default;
};

/// Pushdown automaton accepting by empty stack. Immutable once built.
class Pda {
 public:
  Pda(std::vector<std::string> states, std::vector<std::string> input_alphabet,
      std::vector<std::string> stack_alphabet, StateId initial, Symbol bottom,
      std::vector<Transition> transitions);

  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& input_alphabet() const { return input_; }
  const std::vector<std::string>& stack_alphabet() const { return stack_; }
  StateId initial() const { return initial_; }
  Symbol bottom() const { return bottom_; }
  const std::vector<Transition>& transitions() const { return transitions_; }

  std::size_t num_states() const { return states_.size(); }
  std::size_t num_stack_symbols() const { return stack_.size(); }

  /// Indices of the transitions leaving `q` with `top` on the stack.
  std::span<const int> moves(StateId q, Symbol top) const;

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<Symbol> find_input(std::string_view name) const;
  std::optional<Symbol> find_stack(std::string_view name) const;

  const std::string& state_name(StateId q) const { return states_[q]; }
  const std::string& input_name(Symbol a) const { return input_[a]; }
  const std::string& stack_name(Symbol s) const { return stack_[s]; }

  /// Structural equality: same names, same initial/bottom, same transition list.
  bool operator==(const Pda& other) const;

 private:
  std::vector<std::string> states_;
  std::vector<std::string> input_;
  std::vector<std::string> stack_;
  StateId initial_;
  Symbol bottom_;
  std::vector<Transition> transitions_;

  std::vector<std::vector<int>> by_state_top_;
};

/// Incremental construction of a Pda from symbol names. Names are interned on
/// first use; duplicate transitions are dropped.
class PdaBuilder {
 public:
  StateId state(const std::string& name);
  Symbol input(const std::string& name);
  Symbol stack(const std::string& name);

  bool has_state(const std::string& name) const { return state_ids_.contains(name); }

  void set_initial(const std::string& name) { initial_ = state(name); }
  void set_bottom(const std::string& name) { bottom_ = stack(name); }

  /// `read` empty means epsilon; `push` is listed new top first.
  void add(const std::string& from, const std::string& read, const std::string& top,
           const std::string& to, const std::vector<std::string>& push);
  void add(Transition t);

  Pda build() const;

 private:
  std::vector<std::string> states_, input_, stack_;
  std::unordered_map<std::string, int> state_ids_, input_ids_, stack_ids_;
  std::optional<StateId> initial_;
  std::optional<Symbol> bottom_;
  std::vector<Transition> transitions_;
  std::unordered_map<std::string, bool> seen_;
};

struct Configuration {
  StateId state = 0;
  std::size_t pos = 0;
  Stack stack;  // top first

  bool operator==(const Configuration&) const = default;
};

struct Successor {
  Configuration config;
  int transition;  // index into pda.transitions()
};

Configuration initial_configuration(const Pda& pda);

/// All one-move successors of `cfg` on `input`.
std::vector<Successor> step(const Pda& pda, const Word& input, const Configuration& cfg);

struct TraceStep {
  Configuration before;
  int transition;
};

struct Trace {
  Word input;
  std::vector<TraceStep> steps;
  Configuration final_config;

  bool accepting() const {
    return final_config.stack.empty() && final_config.pos == input.size();
  }
};

enum class Phase { Flat, Up, Down };

/// Phase after a move of the given height change, and whether that move
/// completes a turn (a decrease while the phase is Up).
struct PhaseUpdate {
  Phase next;
  bool turn;
};
inline PhaseUpdate advance_phase(Phase phase, int height_delta) {
  if (height_delta > 0) return {Phase::Up, false};
  if (height_delta < 0) return {Phase::Down, phase == Phase::Up};
  return {phase, false};
}

/// Number of turns in a height profile.
std::size_t profile_turns(std::span<const std::size_t> heights);

/// Heights of every configuration along the trace (initial through final).
std::vector<std::size_t> height_profile(const Trace& trace);

/// Turns made by a trace. Throws InconsistentTrace when a recorded move does
/// not lead from one configuration to the next.
std::size_t trace_turns(const Pda& pda, const Trace& trace);

/// True iff the stack alphabet is {A, Z0} with Z0 only ever at the bottom.
bool is_oca(const Pda& pda);

/// Splits `text` into input symbols: whitespace separated tokens when the text
/// contains whitespace, otherwise greedy longest match against the alphabet.
Word tokenize(const Pda& pda, std::string_view text);
std::string word_to_string(const Pda& pda, const Word& w);

}  // namespace turnpda

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "turnpda/automaton.hpp"
#include "turnpda/error.hpp"

namespace turnpda {

struct SearchCaps {
  /// 0 means |w| + 2.
  std::size_t max_stack_height = 0;
  std::size_t max_visited = 10'000'000;
  std::optional<std::size_t> max_turns;

  std::size_t height_limit(std::size_t input_length) const {
    return max_stack_height ? max_stack_height : input_length + 2;
  }
};

enum class Outcome { Accepted, RejectedWithinBounds, BoundsExceeded };

struct TurnSearchResult {
  Outcome outcome = Outcome::RejectedWithinBounds;
  std::size_t min_turns = 0;    // meaningful when Accepted
  std::optional<Trace> witness;  // present when Accepted

  bool accepted() const { return outcome == Outcome::Accepted; }
};

std::string to_string(Outcome o);

/// Minimum number of turns over accepting computations on `w` (weak measure),
/// found by a 0/1-weighted breadth-first search over configurations tagged with
/// the current phase. A move costs 1 exactly when it completes a turn.
TurnSearchResult min_turns(const Pda& pda, const Word& w, const SearchCaps& caps = {});

/// Thrown by enumerate_accepting when more than max_visited nodes are expanded.
class ExplosionCapped : public BudgetExceeded {
 public:
  using BudgetExceeded::BudgetExceeded;
};

struct Enumeration {
  std::vector<std::pair<std::size_t, Trace>> accepting;  // (turns, trace)
  bool pruned = false;  // some path was cut at the stack-height cap

  std::optional<std::size_t> min_turns() const;
};

/// Exhaustive depth-first enumeration of accepting computations. A path never
/// revisits a configuration (state, position, stack, phase) already on it.
/// With caps.max_turns set, paths exceeding that many turns are dropped.
Enumeration enumerate_accepting(const Pda& pda, const Word& w, const SearchCaps& caps = {});

enum class Membership { Accepted, Rejected, Unknown };

/// Plain bounded membership: breadth-first reachability of an accepting
/// configuration, ignoring turns. Unknown when the caps pruned the search.
Membership accepts(const Pda& pda, const Word& w, const SearchCaps& caps = {});

/// Machine whose control counts turns (0..k) and the current phase; it accepts
/// exactly the inputs that the original accepts within k turns.
Pda k_turn_restrict(const Pda& pda, std::size_t k);

/// States become (q, up/down), starting up. A pop while up switches to down,
/// a push while down switches to up.
Pda phase_tag(const Pda& pda);

/// Phase-tagged machine relabelled over {a}: moves switching up -> down read
/// `a`, every other move reads nothing.
Pda turn_counter_unary(const Pda& pda);

struct CurveRow {
  std::size_t n = 0;
  std::size_t samples = 0;
  std::size_t max_min_turns = 0;
  std::size_t bounds_exceeded = 0;  // samples whose search hit a cap
  std::size_t rejected = 0;         // samples the machine rejected

  bool flagged() const { return bounds_exceeded > 0 || rejected > 0; }
};

struct CurveTable {
  std::vector<CurveRow> rows;  // sorted by n
};

/// Produces sample inputs of length n (possibly none).
using Sampler = std::function<std::vector<Word>(std::size_t n)>;

/// Empirical weak-measure curve: per length, the largest min_turns over samples.
/// Independent samples are evaluated on `threads` workers (0 = hardware).
CurveTable turn_curve(const Pda& pda, const Sampler& sampler, std::size_t n_max,
                      const SearchCaps& caps = {}, unsigned threads = 0);

}  // namespace turnpda

#pragma once

#include <utility>
#include <vector>

#include "turnpda/automaton.hpp"

namespace turnpda {

/// Machine whose control remembers the top of the original stack. States are
/// pairs [q,A]; original stack symbols keep their ids and `fresh_bottom` is
/// the new bottom marker.
struct NormalizedPda {
  Pda pda;
  Symbol fresh_bottom;
  /// origin[s] = (original state, remembered top) of normalized state s.
  std::vector<std::pair<StateId, Symbol>> origin;
};

/// Only pairs reachable from [q0,Z0] are materialized.
NormalizedPda normalize(const Pda& pda);

/// True iff every transition with a nonempty push keeps its top symbol as the
/// deepest pushed element.
bool check_normal(const Pda& pda);

}  // namespace turnpda

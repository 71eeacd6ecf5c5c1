#pragma once

#include <string>
#include <string_view>

#include "turnpda/automaton.hpp"

namespace turnpda {

/// Reads the JSON interchange format:
///   {states, input_alphabet, stack_alphabet, initial_state, bottom_symbol,
///    transitions: [{from, read, top, to, push}]}
/// `read` is "" for epsilon, `push` lists the new top first.
Pda parse_automaton(std::string_view text);
std::string serialize_automaton(const Pda& pda);

/// Witness trace text: one `state | consumed | stack` line per configuration
/// followed by `turns=<k>`.
std::string format_trace(const Pda& pda, const Trace& trace, std::size_t turns);

}  // namespace turnpda

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "turnpda/automaton.hpp"
#include "turnpda/turn_search.hpp"

namespace turnpda {

/// Up to `count` distinct members of length n of a named language
/// ("Eq", "EqStar", "Lsq", "ListBinC", "Lk:<k>", "Ustar"), drawn from
/// parameterized constructions and filtered by the language's decider.
/// Deterministic in (seed, n).
std::vector<std::string> sample_language(std::string_view lang, std::size_t n, std::size_t count,
                                         std::uint64_t seed);

/// Sampler over the input alphabet of `pda`, keeping only lengths divisible by `step`.
Sampler language_sampler(std::string lang, const Pda& pda, std::size_t count, std::uint64_t seed,
                         std::size_t step = 1);

/// Decider for a language name accepted by sample_language.
bool decide_language(std::string_view lang, std::string_view w);

/// Builder for a language name; "Ext" is not covered (it needs a base machine).
Pda build_language(std::string_view lang);

}  // namespace turnpda

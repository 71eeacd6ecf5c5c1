#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "turnpda/automaton.hpp"
#include "turnpda/turn_search.hpp"

namespace turnpda::testing {

/// Random PDA with 3 states over {a,b} and stack {Z0,A,B}. Epsilon moves only
/// keep or pop; reading moves pop, replace the top, or push one symbol.
inline Pda random_pda(std::uint64_t seed, int states = 3, int moves = 10) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int n) { return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng)); };
  const std::vector<std::string> stack{"Z0", "A", "B"};
  PdaBuilder b;
  for (int q = 0; q < states; ++q) b.state("p" + std::to_string(q));
  b.input("a");
  b.input("b");
  for (const auto& s : stack) b.stack(s);
  b.set_initial("p0");
  b.set_bottom("Z0");
  for (int i = 0; i < moves; ++i) {
    const auto from = "p" + std::to_string(pick(states));
    const auto to = "p" + std::to_string(pick(states));
    const auto top = stack[pick(3)];
    const int kind = pick(5);
    if (kind == 0) {
      b.add(from, "", top, to, pick(2) ? std::vector<std::string>{} : std::vector<std::string>{top});
      continue;
    }
    const std::string read = pick(2) ? "a" : "b";
    std::vector<std::string> push;
    if (kind == 2) push = {stack[1 + pick(2)]};
    if (kind >= 3) push = {stack[1 + pick(2)], top};
    b.add(from, read, top, to, push);
  }
  return b.build();
}

/// Calls f on every word over the input alphabet of length at most n.
inline void for_each_word(const Pda& pda, std::size_t n, const std::function<void(const Word&)>& f) {
  Word w;
  const int sigma = static_cast<int>(pda.input_alphabet().size());
  std::function<void()> rec = [&] {
    f(w);
    if (w.size() == n) return;
    for (Symbol a = 0; a < sigma; ++a) {
      w.push_back(a);
      rec();
      w.pop_back();
    }
  };
  rec();
}

inline Word word(const Pda& pda, const std::string& s) { return tokenize(pda, s); }

}  // namespace turnpda::testing

#include "turnpda/normal_form.hpp"

#include <algorithm>
#include <map>

namespace turnpda {

namespace {

std::string fresh_name(const std::vector<std::string>& taken, std::string base) {
  while (std::find(taken.begin(), taken.end(), base) != taken.end()) base += "'";
  return base;
}

}  // namespace

NormalizedPda normalize(const Pda& pda) {
  const auto& gamma = pda.stack_alphabet();
  const Symbol bottom = static_cast<Symbol>(gamma.size());
  const std::string bottom_name = fresh_name(gamma, "⊥");
  auto symbol_name = [&](Symbol s) { return s == bottom ? bottom_name : gamma[s]; };

  PdaBuilder b;
  for (const auto& s : gamma) b.stack(s);
  b.stack(bottom_name);
  for (const auto& a : pda.input_alphabet()) b.input(a);
  b.set_bottom(bottom_name);

  std::map<std::pair<StateId, Symbol>, std::string> names;
  std::vector<std::pair<StateId, Symbol>> origin;
  std::vector<std::pair<StateId, Symbol>> work;
  auto visit = [&](StateId q, Symbol a) -> const std::string& {
    const auto [it, inserted] = names.try_emplace({q, a});
    if (inserted) {
      it->second = "[" + pda.state_name(q) + "," + symbol_name(a) + "]";
      b.state(it->second);
      origin.emplace_back(q, a);
      work.emplace_back(q, a);
    }
    return it->second;
  };

  b.set_initial(visit(pda.initial(), pda.bottom()));
  while (!work.empty()) {
    const auto [q, a] = work.back();
    work.pop_back();
    if (a == bottom) continue;
    const std::string from = names.at({q, a});
    for (int idx : pda.moves(q, a)) {
      const Transition& t = pda.transitions()[idx];
      const std::string read = t.read == kEpsilon ? "" : pda.input_name(t.read);
      for (Symbol c = 0; c <= bottom; ++c) {
        if (t.push.empty()) {
          const std::string to = visit(t.to, c);
          b.add(from, read, symbol_name(c), to, {});
        } else {
          std::vector<std::string> push;
          for (std::size_t i = 1; i < t.push.size(); ++i) push.push_back(gamma[t.push[i]]);
          push.push_back(symbol_name(c));
          const std::string to = visit(t.to, t.push.front());
          b.add(from, read, symbol_name(c), to, push);
        }
      }
    }
  }
  return NormalizedPda{b.build(), bottom, std::move(origin)};
}

bool check_normal(const Pda& pda) {
  return std::all_of(pda.transitions().begin(), pda.transitions().end(), [](const Transition& t) {
    return t.push.empty() || t.push.back() == t.top;
  });
}

}  // namespace turnpda

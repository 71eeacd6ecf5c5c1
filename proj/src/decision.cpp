#include "turnpda/decision.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <unordered_map>

#include "turnpda/normal_form.hpp"

namespace turnpda {

namespace {

std::vector<int> closure(const std::vector<std::vector<std::pair<Symbol, int>>>& out,
                         std::vector<int> set) {
  std::vector<int> work = set;
  while (!work.empty()) {
    const int s = work.back();
    work.pop_back();
    for (const auto& [a, t] : out[s])
      if (a == kEpsilon && std::find(set.begin(), set.end(), t) == set.end()) {
        set.push_back(t);
        work.push_back(t);
      }
  }
  std::sort(set.begin(), set.end());
  return set;
}

std::vector<std::vector<std::pair<Symbol, int>>> adjacency(const Nfa& nfa) {
  std::vector<std::vector<std::pair<Symbol, int>>> out(nfa.num_states);
  for (const auto& e : nfa.edges) out[e.from].emplace_back(e.symbol, e.to);
  return out;
}

}  // namespace

bool Nfa::accepts(const Word& w) const {
  const auto out = adjacency(*this);
  auto cur = closure(out, {initial});
  for (Symbol a : w) {
    std::vector<int> next;
    for (int s : cur)
      for (const auto& [b, t] : out[s])
        if (b == a && std::find(next.begin(), next.end(), t) == next.end()) next.push_back(t);
    cur = closure(out, std::move(next));
  }
  return std::any_of(cur.begin(), cur.end(), [&](int s) { return accepting[s]; });
}

bool Dfa::accepts(const Word& w) const {
  int s = initial;
  for (Symbol a : w) s = step(s, a);
  return accepting[s];
}

Nfa zero_turn_nfa(const Pda& pda) {
  const NormalizedPda n = normalize(pda);
  Nfa nfa;
  nfa.num_states = n.pda.num_states() + 1;
  nfa.alphabet = n.pda.input_alphabet();
  nfa.initial = n.pda.initial();
  const int sink = static_cast<int>(n.pda.num_states());
  nfa.accepting.assign(nfa.num_states, false);
  nfa.accepting[sink] = true;
  for (const auto& t : n.pda.transitions()) {
    if (t.top != n.fresh_bottom) continue;
    if (t.push.empty())
      nfa.edges.push_back({t.from, t.read, sink});
    else if (t.push.size() == 1)
      nfa.edges.push_back({t.from, t.read, t.to});
  }
  return nfa;
}

Dfa nfa_determinize(const Nfa& nfa, std::size_t max_states) {
  const auto out = adjacency(nfa);
  const std::size_t sigma = nfa.alphabet.size();
  Dfa dfa;
  dfa.alphabet = nfa.alphabet;
  std::map<std::vector<int>, int> ids;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> s) {
    const auto [it, inserted] = ids.try_emplace(s, static_cast<int>(subsets.size()));
    if (inserted) {
      if (subsets.size() >= max_states)
        throw BudgetExceeded("subset construction exceeded " + std::to_string(max_states) + " states");
      subsets.push_back(std::move(s));
    }
    return it->second;
  };
  dfa.initial = intern(closure(out, {nfa.initial}));
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t a = 0; a < sigma; ++a) {
      std::vector<int> next;
      for (int s : subsets[i])
        for (const auto& [b, t] : out[s])
          if (b == static_cast<Symbol>(a) && std::find(next.begin(), next.end(), t) == next.end())
            next.push_back(t);
      const int id = intern(closure(out, std::move(next)));
      dfa.next.push_back(id);
    }
  }
  dfa.num_states = subsets.size();
  for (const auto& s : subsets)
    dfa.accepting.push_back(std::any_of(s.begin(), s.end(), [&](int q) { return nfa.accepting[q]; }));
  return dfa;
}

Dfa dfa_complement(Dfa dfa) {
  dfa.accepting.flip();
  return dfa;
}

Pda pda_regular_product(const Pda& pda, const Dfa& dfa) {
  std::vector<int> to_dfa(pda.input_alphabet().size(), -1);
  for (std::size_t a = 0; a < to_dfa.size(); ++a) {
    const auto it = std::find(dfa.alphabet.begin(), dfa.alphabet.end(), pda.input_alphabet()[a]);
    if (it != dfa.alphabet.end()) to_dfa[a] = static_cast<int>(it - dfa.alphabet.begin());
  }

  // Tagged stack symbol: 2 * X + (1 if X sits at the bottom).
  using StateKey = std::pair<StateId, int>;
  std::set<StateKey> states{{pda.initial(), dfa.initial}};
  std::set<int> symbols{2 * pda.bottom() + 1};

  struct Emitted {
    StateKey from;
    Symbol read;
    int top;
    StateKey to;
    std::vector<int> push;
  };
  std::vector<Emitted> emitted;
  bool changed = true;
  while (changed) {
    changed = false;
    emitted.clear();
    for (const auto& [q, d] : std::vector<StateKey>(states.begin(), states.end())) {
      for (int tagged : std::vector<int>(symbols.begin(), symbols.end())) {
        const Symbol x = tagged / 2;
        const bool at_bottom = tagged % 2;
        for (int idx : pda.moves(q, x)) {
          const Transition& t = pda.transitions()[idx];
          int d2 = d;
          if (t.read != kEpsilon) {
            if (to_dfa[t.read] < 0) continue;
            d2 = dfa.step(d, to_dfa[t.read]);
          }
          if (t.push.empty() && at_bottom && !dfa.accepting[d2]) continue;
          std::vector<int> push;
          for (std::size_t i = 0; i < t.push.size(); ++i)
            push.push_back(2 * t.push[i] + (at_bottom && i + 1 == t.push.size() ? 1 : 0));
          for (int s : push) changed |= symbols.insert(s).second;
          changed |= states.insert({t.to, d2}).second;
          emitted.push_back({{q, d}, t.read, tagged, {t.to, d2}, std::move(push)});
        }
      }
    }
  }

  auto state_name = [&](const StateKey& k) {
    return pda.state_name(k.first) + "|" + std::to_string(k.second);
  };
  auto symbol_name = [&](int tagged) {
    const Symbol x = tagged / 2;
    const bool at_bottom = tagged % 2;
    const std::string& name = pda.stack_name(x);
    if (x == pda.bottom()) return at_bottom ? name : name + "@mid";
    return at_bottom ? name + "@bot" : name;
  };

  PdaBuilder b;
  b.set_initial(state_name({pda.initial(), dfa.initial}));
  b.set_bottom(symbol_name(2 * pda.bottom() + 1));
  for (int s : symbols) b.stack(symbol_name(s));
  for (const auto& a : pda.input_alphabet()) b.input(a);
  for (const auto& k : states) b.state(state_name(k));
  for (const auto& e : emitted) {
    std::vector<std::string> push;
    for (int s : e.push) push.push_back(symbol_name(s));
    b.add(state_name(e.from), e.read == kEpsilon ? "" : pda.input_name(e.read), symbol_name(e.top),
          state_name(e.to), push);
  }
  return b.build();
}

namespace {

/// Transitions with pushes of length <= 2, obtained by unrolling longer pushes
/// through fresh intermediate states.
struct ShortPushes {
  std::size_t num_states;
  std::vector<Transition> transitions;
};

ShortPushes shorten(const Pda& pda) {
  ShortPushes r{pda.num_states(), {}};
  for (const auto& t : pda.transitions()) {
    if (t.push.size() <= 2) {
      r.transitions.push_back(t);
      continue;
    }
    const std::size_t k = t.push.size();
    StateId cur = static_cast<StateId>(r.num_states++);
    r.transitions.push_back({t.from, t.read, t.top, cur, {t.push[k - 2], t.push[k - 1]}});
    for (std::size_t i = k - 2; i >= 1; --i) {
      const StateId next = i == 1 ? t.to : static_cast<StateId>(r.num_states++);
      r.transitions.push_back({cur, kEpsilon, t.push[i], next, {t.push[i - 1], t.push[i]}});
      cur = next;
    }
  }
  return r;
}

}  // namespace

Grammar pda_to_grammar(const Pda& pda) {
  const ShortPushes sp = shorten(pda);
  const std::size_t nq = sp.num_states;
  const std::size_t ng = pda.num_stack_symbols();

  std::vector<std::vector<int>> by_state_top(nq * ng);
  std::vector<std::vector<StateId>> succ(nq);
  std::vector<bool> pop_target(nq, false);
  for (std::size_t i = 0; i < sp.transitions.size(); ++i) {
    const auto& t = sp.transitions[i];
    by_state_top[t.from * ng + t.top].push_back(static_cast<int>(i));
    succ[t.from].push_back(t.to);
    if (t.push.empty()) pop_target[t.to] = true;
  }
  // reach[p] = states reachable from p in the control graph (including p) that end a pop.
  std::vector<std::vector<StateId>> reach(nq);
  for (std::size_t p = 0; p < nq; ++p) {
    std::vector<bool> seen(nq, false);
    std::vector<StateId> work{static_cast<StateId>(p)};
    seen[p] = true;
    while (!work.empty()) {
      const StateId s = work.back();
      work.pop_back();
      if (pop_target[s]) reach[p].push_back(s);
      for (StateId t : succ[s])
        if (!seen[t]) {
          seen[t] = true;
          work.push_back(t);
        }
    }
  }

  auto state_name = [&](StateId q) {
    return q < static_cast<StateId>(pda.num_states()) ? pda.state_name(q) : "~" + std::to_string(q);
  };

  Grammar g;
  g.terminals = pda.input_alphabet();
  g.nonterminals.push_back("S");
  g.start = 0;
  std::unordered_map<std::uint64_t, int> ids;
  std::vector<std::array<int, 3>> pending;
  auto nonterminal = [&](StateId q, Symbol a, StateId p) {
    const std::uint64_t key = (static_cast<std::uint64_t>(q) * ng + a) * nq + p;
    const auto [it, inserted] = ids.try_emplace(key, static_cast<int>(g.nonterminals.size()));
    if (inserted) {
      g.nonterminals.push_back("[" + state_name(q) + "," + pda.stack_name(a) + "," + state_name(p) + "]");
      pending.push_back({q, a, p});
    }
    return Grammar::Sym{false, it->second};
  };

  for (StateId r : reach[pda.initial()])
    g.productions.push_back({0, {nonterminal(pda.initial(), pda.bottom(), r)}});

  while (!pending.empty()) {
    const auto [q, a, r] = pending.back();
    pending.pop_back();
    const int head = ids.at((static_cast<std::uint64_t>(q) * ng + a) * nq + r);
    for (int idx : by_state_top[q * ng + a]) {
      const auto& t = sp.transitions[idx];
      std::vector<Grammar::Sym> prefix;
      if (t.read != kEpsilon) prefix.push_back({true, t.read});
      if (t.push.empty()) {
        if (t.to == r) g.productions.push_back({head, prefix});
      } else if (t.push.size() == 1) {
        auto body = prefix;
        body.push_back(nonterminal(t.to, t.push[0], r));
        g.productions.push_back({head, std::move(body)});
      } else {
        for (StateId mid : reach[t.to]) {
          auto body = prefix;
          body.push_back(nonterminal(t.to, t.push[0], mid));
          body.push_back(nonterminal(mid, t.push[1], r));
          g.productions.push_back({head, std::move(body)});
        }
      }
    }
  }
  return g;
}

bool grammar_nonempty(const Grammar& g) {
  std::vector<bool> generating(g.nonterminals.size(), false);
  std::vector<std::size_t> missing(g.productions.size(), 0);
  std::vector<std::vector<std::size_t>> uses(g.nonterminals.size());
  std::vector<int> work;
  for (std::size_t i = 0; i < g.productions.size(); ++i) {
    for (const auto& s : g.productions[i].body)
      if (!s.terminal) {
        ++missing[i];
        uses[s.id].push_back(i);
      }
    if (missing[i] == 0 && !generating[g.productions[i].head]) {
      generating[g.productions[i].head] = true;
      work.push_back(g.productions[i].head);
    }
  }
  while (!work.empty()) {
    const int n = work.back();
    work.pop_back();
    for (std::size_t i : uses[n])
      if (--missing[i] == 0 && !generating[g.productions[i].head]) {
        generating[g.productions[i].head] = true;
        work.push_back(g.productions[i].head);
      }
  }
  return generating[g.start];
}

bool decide_zero_turn(const Pda& pda, std::size_t max_subsets) {
  const Dfa rest = dfa_complement(nfa_determinize(zero_turn_nfa(pda), max_subsets));
  return !grammar_nonempty(pda_to_grammar(pda_regular_product(pda, rest)));
}

}  // namespace turnpda

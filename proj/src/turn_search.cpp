#include "turnpda/turn_search.hpp"

#include <algorithm>
#include <atomic>
#include <deque>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace turnpda {

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Accepted: return "Accepted";
    case Outcome::RejectedWithinBounds: return "RejectedWithinBounds";
    case Outcome::BoundsExceeded: return "BoundsExceeded";
  }
  return "?";
}

namespace {

/// Hash-consed stacks: every stack is a node id, 0 being the empty stack.
class StackPool {
 public:
  StackPool() { nodes_.push_back({-1, -1, 0}); }

  int push(int below, Symbol s) {
    const std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(below)) << 32) |
                              static_cast<std::uint32_t>(s);
    const auto [it, inserted] = index_.try_emplace(key, static_cast<int>(nodes_.size()));
    if (inserted) nodes_.push_back({s, below, nodes_[below].height + 1});
    return it->second;
  }
  int push_all(int below, const Stack& top_first) {
    for (auto it = top_first.rbegin(); it != top_first.rend(); ++it) below = push(below, *it);
    return below;
  }
  Symbol top(int id) const { return nodes_[id].symbol; }
  int pop(int id) const { return nodes_[id].below; }
  std::size_t height(int id) const { return nodes_[id].height; }
  Stack contents(int id) const {
    Stack s;
    for (; id != 0; id = nodes_[id].below) s.push_back(nodes_[id].symbol);
    return s;
  }

 private:
  struct Node {
    Symbol symbol;
    int below;
    std::size_t height;
  };
  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, int> index_;
};

struct Key {
  StateId state;
  std::uint32_t pos;
  int stack;
  Phase phase;
  bool operator==(const Key&) const = default;
};

struct KeyHash {
  std::size_t operator()(const Key& k) const {
    std::uint64_t h = static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.state)) * 0x9E3779B97F4A7C15ULL;
    h ^= (static_cast<std::uint64_t>(k.pos) << 2 | static_cast<std::uint64_t>(k.phase)) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.stack)) * 0xC2B2AE3D27D4EB4FULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h ^ (h >> 31));
  }
};

struct Move {
  Key next;
  int transition;
  bool turn;
  bool too_high;
};

/// Expands the moves of one configuration; shared by all searches.
template <class Fn>
void for_each_move(const Pda& pda, const Word& w, StackPool& pool, const Key& k,
                   std::size_t height_limit, Fn&& fn) {
  if (k.stack == 0) return;
  const Symbol top = pool.top(k.stack);
  const int below = pool.pop(k.stack);
  for (int idx : pda.moves(k.state, top)) {
    const Transition& t = pda.transitions()[idx];
    std::uint32_t pos = k.pos;
    if (t.read != kEpsilon) {
      if (pos >= w.size() || w[pos] != t.read) continue;
      ++pos;
    }
    const std::size_t new_height = pool.height(below) + t.push.size();
    if (new_height > height_limit) {
      fn(Move{k, idx, false, true});
      continue;
    }
    const auto upd = advance_phase(k.phase, t.height_delta());
    fn(Move{Key{t.to, pos, pool.push_all(below, t.push), upd.next}, idx, upd.turn, false});
  }
}

Configuration to_config(const StackPool& pool, const Key& k) {
  return Configuration{k.state, k.pos, pool.contents(k.stack)};
}

}  // namespace

TurnSearchResult min_turns(const Pda& pda, const Word& w, const SearchCaps& caps) {
  const std::size_t limit = caps.height_limit(w.size());
  StackPool pool;

  struct Node {
    Key key;
    std::size_t cost;
    int parent;
    int transition;
  };
  std::vector<Node> nodes;
  std::unordered_map<Key, int, KeyHash> index;
  std::deque<std::pair<int, std::size_t>> frontier;

  const Key start{pda.initial(), 0, pool.push(0, pda.bottom()), Phase::Flat};
  nodes.push_back({start, 0, -1, -1});
  index.emplace(start, 0);
  frontier.emplace_back(0, 0);
  bool pruned = false;

  while (!frontier.empty()) {
    const auto [id, cost] = frontier.front();
    frontier.pop_front();
    if (cost > nodes[id].cost) continue;
    const Key key = nodes[id].key;
    if (key.stack == 0) {
      if (key.pos != w.size()) continue;
      TurnSearchResult r;
      r.outcome = Outcome::Accepted;
      r.min_turns = cost;
      Trace trace;
      trace.input = w;
      trace.final_config = to_config(pool, key);
      for (int cur = id; nodes[cur].parent >= 0; cur = nodes[cur].parent)
        trace.steps.push_back({to_config(pool, nodes[nodes[cur].parent].key), nodes[cur].transition});
      std::reverse(trace.steps.begin(), trace.steps.end());
      r.witness = std::move(trace);
      return r;
    }
    for_each_move(pda, w, pool, key, limit, [&](const Move& m) {
      if (m.too_high) {
        pruned = true;
        return;
      }
      const std::size_t c = cost + (m.turn ? 1 : 0);
      if (caps.max_turns && c > *caps.max_turns) {
        pruned = true;
        return;
      }
      const auto [it, inserted] = index.try_emplace(m.next, static_cast<int>(nodes.size()));
      if (inserted) {
        nodes.push_back({m.next, c, id, m.transition});
      } else if (c < nodes[it->second].cost) {
        nodes[it->second].cost = c;
        nodes[it->second].parent = id;
        nodes[it->second].transition = m.transition;
      } else {
        return;
      }
      if (m.turn)
        frontier.emplace_back(it->second, c);
      else
        frontier.emplace_front(it->second, c);
    });
    if (nodes.size() > caps.max_visited) return {Outcome::BoundsExceeded, 0, std::nullopt};
  }
  return {pruned ? Outcome::BoundsExceeded : Outcome::RejectedWithinBounds, 0, std::nullopt};
}

std::optional<std::size_t> Enumeration::min_turns() const {
  std::optional<std::size_t> best;
  for (const auto& [turns, trace] : accepting)
    if (!best || turns < *best) best = turns;
  return best;
}

Enumeration enumerate_accepting(const Pda& pda, const Word& w, const SearchCaps& caps) {
  const std::size_t limit = caps.height_limit(w.size());
  StackPool pool;
  Enumeration result;

  struct Frame {
    Key key;
    std::size_t turns;
    std::vector<Move> moves;
    std::size_t next = 0;
  };
  std::vector<Frame> path;
  std::vector<int> via;  // transition taken out of path[i] (i < path.size() - 1)
  std::unordered_set<Key, KeyHash> on_path;
  std::size_t expanded = 0;

  auto open = [&](const Key& k, std::size_t turns) {
    if (++expanded > caps.max_visited)
      throw ExplosionCapped("enumerate_accepting: more than " + std::to_string(caps.max_visited) +
                            " nodes expanded");
    Frame f{k, turns, {}, 0};
    for_each_move(pda, w, pool, k, limit, [&](const Move& m) {
      if (m.too_high)
        result.pruned = true;
      else
        f.moves.push_back(m);
    });
    on_path.insert(k);
    path.push_back(std::move(f));
  };

  auto record = [&] {
    Trace trace;
    trace.input = w;
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
      trace.steps.push_back({to_config(pool, path[i].key), via[i]});
    trace.final_config = to_config(pool, path.back().key);
    result.accepting.emplace_back(path.back().turns, std::move(trace));
  };

  open(Key{pda.initial(), 0, pool.push(0, pda.bottom()), Phase::Flat}, 0);
  while (!path.empty()) {
    Frame& top = path.back();
    if (top.next == 0 && top.key.stack == 0 && top.key.pos == w.size() && top.moves.empty()) {
      record();
      top.next = 1;  // leaf: nothing else to try
    }
    if (top.next >= top.moves.size()) {
      on_path.erase(top.key);
      path.pop_back();
      if (!via.empty()) via.pop_back();
      continue;
    }
    const Move m = top.moves[top.next++];
    const std::size_t turns = top.turns + (m.turn ? 1 : 0);
    if (caps.max_turns && turns > *caps.max_turns) continue;
    if (on_path.contains(m.next)) continue;
    via.push_back(m.transition);
    open(m.next, turns);
  }
  return result;
}

Membership accepts(const Pda& pda, const Word& w, const SearchCaps& caps) {
  const std::size_t limit = caps.height_limit(w.size());
  StackPool pool;
  std::unordered_set<Key, KeyHash> seen;
  std::vector<Key> work;
  const Key start{pda.initial(), 0, pool.push(0, pda.bottom()), Phase::Flat};
  seen.insert(start);
  work.push_back(start);
  bool pruned = false;
  while (!work.empty()) {
    const Key k = work.back();
    work.pop_back();
    if (k.stack == 0) {
      if (k.pos == w.size()) return Membership::Accepted;
      continue;
    }
    for_each_move(pda, w, pool, k, limit, [&](const Move& m) {
      if (m.too_high) {
        pruned = true;
        return;
      }
      Key next = m.next;
      next.phase = Phase::Flat;  // turns are irrelevant for membership
      if (seen.insert(next).second) work.push_back(next);
    });
    if (seen.size() > caps.max_visited) return Membership::Unknown;
  }
  return pruned ? Membership::Unknown : Membership::Rejected;
}

namespace {

/// Lazily explores the product of a machine's states with a finite tag,
/// materializing only tags reachable from the initial pair.
template <class Tag, class TagHash, class Name, class Rewrite>
Pda tagged_product(const Pda& pda, Tag initial, Name&& name, Rewrite&& rewrite,
                   std::vector<std::string> input_alphabet = {}) {
  PdaBuilder b;
  for (const auto& s : pda.stack_alphabet()) b.stack(s);
  if (input_alphabet.empty()) input_alphabet = pda.input_alphabet();
  for (const auto& a : input_alphabet) b.input(a);
  b.set_bottom(pda.stack_name(pda.bottom()));

  using Pair = std::pair<StateId, Tag>;
  struct PairHash {
    std::size_t operator()(const Pair& p) const {
      return std::hash<int>()(p.first) * 31 + TagHash()(p.second);
    }
  };
  std::unordered_set<Pair, PairHash> seen;
  std::vector<Pair> work{{pda.initial(), initial}};
  seen.insert(work.front());
  b.set_initial(name(pda.initial(), initial));

  std::vector<std::vector<int>> out(pda.num_states());
  for (std::size_t i = 0; i < pda.transitions().size(); ++i)
    out[pda.transitions()[i].from].push_back(static_cast<int>(i));

  while (!work.empty()) {
    const auto [q, tag] = work.back();
    work.pop_back();
    const std::string from = name(q, tag);
    for (int idx : out[q]) {
      const Transition& t = pda.transitions()[idx];
      // rewrite returns the successor tag and the read label (as a name), or nullopt to drop.
      const auto r = rewrite(tag, t);
      if (!r) continue;
      const auto& [next_tag, read] = *r;
      std::vector<std::string> push;
      for (Symbol s : t.push) push.push_back(pda.stack_name(s));
      b.add(from, read, pda.stack_name(t.top), name(t.to, next_tag), push);
      if (seen.insert({t.to, next_tag}).second) work.push_back({t.to, next_tag});
    }
  }
  return b.build();
}

const char* phase_letter(Phase p) {
  switch (p) {
    case Phase::Flat: return "F";
    case Phase::Up: return "U";
    case Phase::Down: return "D";
  }
  return "?";
}

struct TurnTag {
  std::size_t turns;
  Phase phase;
  bool operator==(const TurnTag&) const = default;
};
struct TurnTagHash {
  std::size_t operator()(const TurnTag& t) const { return t.turns * 3 + static_cast<std::size_t>(t.phase); }
};

}  // namespace

Pda k_turn_restrict(const Pda& pda, std::size_t k) {
  auto name = [&](StateId q, const TurnTag& t) {
    return pda.state_name(q) + "#" + std::to_string(t.turns) + phase_letter(t.phase);
  };
  auto rewrite = [&](const TurnTag& tag, const Transition& t)
      -> std::optional<std::pair<TurnTag, std::string>> {
    const auto upd = advance_phase(tag.phase, t.height_delta());
    const std::size_t turns = tag.turns + (upd.turn ? 1 : 0);
    if (turns > k) return std::nullopt;
    return std::pair{TurnTag{turns, upd.next}, t.read == kEpsilon ? std::string() : pda.input_name(t.read)};
  };
  return tagged_product<TurnTag, TurnTagHash>(pda, TurnTag{0, Phase::Flat}, name, rewrite);
}

namespace {

/// true = up, false = down
std::pair<bool, bool> tag_step(bool up, int delta) {
  if (delta < 0 && up) return {false, true};  // switches up -> down
  if (delta > 0 && !up) return {true, false};
  return {up, false};
}

Pda tag_machine(const Pda& pda, bool unary) {
  auto name = [&](StateId q, bool up) { return pda.state_name(q) + (up ? "^up" : "^dn"); };
  auto rewrite = [&](bool up, const Transition& t) -> std::optional<std::pair<bool, std::string>> {
    const auto [next, turned] = tag_step(up, t.height_delta());
    std::string read;
    if (unary)
      read = turned ? "a" : "";
    else if (t.read != kEpsilon)
      read = pda.input_name(t.read);
    return std::pair{next, read};
  };
  return tagged_product<bool, std::hash<bool>>(pda, true, name, rewrite,
                                               unary ? std::vector<std::string>{"a"}
                                                     : std::vector<std::string>{});
}

}  // namespace

Pda phase_tag(const Pda& pda) { return tag_machine(pda, false); }

Pda turn_counter_unary(const Pda& pda) { return tag_machine(pda, true); }

CurveTable turn_curve(const Pda& pda, const Sampler& sampler, std::size_t n_max,
                      const SearchCaps& caps, unsigned threads) {
  struct Task {
    std::size_t row;
    Word w;
    TurnSearchResult result;
  };
  CurveTable table;
  std::vector<Task> tasks;
  for (std::size_t n = 0; n <= n_max; ++n) {
    auto samples = sampler(n);
    if (samples.empty()) continue;
    table.rows.push_back(CurveRow{n, samples.size(), 0, 0, 0});
    for (auto& w : samples) tasks.push_back({table.rows.size() - 1, std::move(w), {}});
  }

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++)
      tasks[i].result = min_turns(pda, tasks[i].w, caps);
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }

  for (const auto& t : tasks) {
    CurveRow& row = table.rows[t.row];
    switch (t.result.outcome) {
      case Outcome::Accepted: row.max_min_turns = std::max(row.max_min_turns, t.result.min_turns); break;
      case Outcome::RejectedWithinBounds: ++row.rejected; break;
      case Outcome::BoundsExceeded: ++row.bounds_exceeded; break;
    }
  }
  return table;
}

}  // namespace turnpda

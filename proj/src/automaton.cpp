#include "turnpda/automaton.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "turnpda/error.hpp"

namespace turnpda {

Pda::Pda(std::vector<std::string> states, std::vector<std::string> input_alphabet,
         std::vector<std::string> stack_alphabet, StateId initial, Symbol bottom,
         std::vector<Transition> transitions)
    : states_(std::move(states)),
      input_(std::move(input_alphabet)),
      stack_(std::move(stack_alphabet)),
      initial_(initial),
      bottom_(bottom),
      transitions_(std::move(transitions)) {
  const auto nq = static_cast<int>(states_.size());
  const auto ns = static_cast<int>(stack_.size());
  const auto ni = static_cast<int>(input_.size());
  if (initial_ < 0 || initial_ >= nq) throw Error("initial state out of range");
  if (bottom_ < 0 || bottom_ >= ns) throw Error("bottom symbol out of range");
  by_state_top_.assign(static_cast<std::size_t>(nq) * ns, {});
  for (std::size_t i = 0; i < transitions_.size(); ++i) {
    const Transition& t = transitions_[i];
    if (t.from < 0 || t.from >= nq || t.to < 0 || t.to >= nq)
      throw Error("transition references an undeclared state");
    if (t.top < 0 || t.top >= ns) throw Error("transition references an undeclared stack symbol");
    if (t.read != kEpsilon && (t.read < 0 || t.read >= ni))
      throw Error("transition references an undeclared input symbol");
    for (Symbol s : t.push)
      if (s < 0 || s >= ns) throw Error("transition pushes an undeclared stack symbol");
    by_state_top_[static_cast<std::size_t>(t.from) * ns + t.top].push_back(static_cast<int>(i));
  }
}

std::span<const int> Pda::moves(StateId q, Symbol top) const {
  return by_state_top_[static_cast<std::size_t>(q) * stack_.size() + top];
}

namespace {
std::optional<int> index_of(const std::vector<std::string>& names, std::string_view name) {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) return std::nullopt;
  return static_cast<int>(it - names.begin());
}
}  // namespace

std::optional<StateId> Pda::find_state(std::string_view name) const { return index_of(states_, name); }
std::optional<Symbol> Pda::find_input(std::string_view name) const { return index_of(input_, name); }
std::optional<Symbol> Pda::find_stack(std::string_view name) const { return index_of(stack_, name); }

bool Pda::operator==(const Pda& other) const {
  return states_ == other.states_ && input_ == other.input_ && stack_ == other.stack_ &&
         initial_ == other.initial_ && bottom_ == other.bottom_ &&
         transitions_ == other.transitions_;
}

namespace {
int intern(std::vector<std::string>& names, std::unordered_map<std::string, int>& ids,
           const std::string& name) {
  const auto [it, inserted] = ids.try_emplace(name, static_cast<int>(names.size()));
  if (inserted) names.push_back(name);
  return it->second;
}
}  // namespace

StateId PdaBuilder::state(const std::string& name) { return intern(states_, state_ids_, name); }
Symbol PdaBuilder::input(const std::string& name) { return intern(input_, input_ids_, name); }
Symbol PdaBuilder::stack(const std::string& name) { return intern(stack_, stack_ids_, name); }

void PdaBuilder::add(const std::string& from, const std::string& read, const std::string& top,
                     const std::string& to, const std::vector<std::string>& push) {
  Transition t;
  t.from = state(from);
  t.read = read.empty() ? kEpsilon : input(read);
  t.top = stack(top);
  t.to = state(to);
  for (const auto& s : push) t.push.push_back(stack(s));
  add(std::move(t));
}

void PdaBuilder::add(Transition t) {
  std::ostringstream key;
  key << t.from << ',' << t.read << ',' << t.top << ',' << t.to;
  for (Symbol s : t.push) key << ',' << s;
  if (!seen_.emplace(key.str(), true).second) return;
  transitions_.push_back(std::move(t));
}

Pda PdaBuilder::build() const {
  if (!initial_) throw Error("PdaBuilder: initial state not set");
  if (!bottom_) throw Error("PdaBuilder: bottom symbol not set");
  return Pda(states_, input_, stack_, *initial_, *bottom_, transitions_);
}

Configuration initial_configuration(const Pda& pda) {
  return Configuration{pda.initial(), 0, Stack{pda.bottom()}};
}

std::vector<Successor> step(const Pda& pda, const Word& input, const Configuration& cfg) {
  std::vector<Successor> out;
  if (cfg.stack.empty()) return out;
  for (int idx : pda.moves(cfg.state, cfg.stack.front())) {
    const Transition& t = pda.transitions()[idx];
    std::size_t pos = cfg.pos;
    if (t.read != kEpsilon) {
      if (pos >= input.size() || input[pos] != t.read) continue;
      ++pos;
    }
    Stack next;
    next.reserve(cfg.stack.size() + t.push.size());
    next.insert(next.end(), t.push.begin(), t.push.end());
    next.insert(next.end(), cfg.stack.begin() + 1, cfg.stack.end());
    out.push_back({Configuration{t.to, pos, std::move(next)}, idx});
  }
  return out;
}

std::size_t profile_turns(std::span<const std::size_t> heights) {
  std::size_t turns = 0;
  Phase phase = Phase::Flat;
  for (std::size_t i = 1; i < heights.size(); ++i) {
    const int delta = heights[i] > heights[i - 1] ? 1 : (heights[i] < heights[i - 1] ? -1 : 0);
    const auto upd = advance_phase(phase, delta);
    turns += upd.turn;
    phase = upd.next;
  }
  return turns;
}

std::vector<std::size_t> height_profile(const Trace& trace) {
  std::vector<std::size_t> h;
  h.reserve(trace.steps.size() + 1);
  for (const auto& s : trace.steps) h.push_back(s.before.stack.size());
  h.push_back(trace.final_config.stack.size());
  return h;
}

std::size_t trace_turns(const Pda& pda, const Trace& trace) {
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const auto& cur = trace.steps[i];
    const Configuration& next =
        i + 1 < trace.steps.size() ? trace.steps[i + 1].before : trace.final_config;
    if (cur.transition < 0 || static_cast<std::size_t>(cur.transition) >= pda.transitions().size())
      throw InconsistentTrace("trace step references an unknown transition");
    bool ok = false;
    for (const auto& succ : step(pda, trace.input, cur.before)) {
      if (succ.transition == cur.transition && succ.config == next) {
        ok = true;
        break;
      }
    }
    if (!ok) throw InconsistentTrace("trace step " + std::to_string(i) + " is not a legal move");
  }
  const auto heights = height_profile(trace);
  return profile_turns(heights);
}

bool is_oca(const Pda& pda) {
  const auto n = pda.num_stack_symbols();
  if (n == 0 || n > 2) return false;
  const Symbol bottom = pda.bottom();
  const Symbol counter = n == 2 ? 1 - bottom : -2;
  for (const auto& t : pda.transitions()) {
    if (t.top == bottom) {
      if (t.push.empty()) continue;
      if (t.push.back() != bottom) return false;
      for (std::size_t i = 0; i + 1 < t.push.size(); ++i)
        if (t.push[i] != counter) return false;
    } else {
      for (Symbol s : t.push)
        if (s != counter) return false;
    }
  }
  return true;
}

Word tokenize(const Pda& pda, std::string_view text) {
  Word w;
  const bool spaced = std::any_of(text.begin(), text.end(),
                                  [](unsigned char c) { return std::isspace(c) != 0; });
  if (spaced) {
    std::istringstream in{std::string(text)};
    std::string tok;
    while (in >> tok) {
      const auto s = pda.find_input(tok);
      if (!s) throw Error("unknown input symbol '" + tok + "'");
      w.push_back(*s);
    }
    return w;
  }
  std::size_t i = 0;
  while (i < text.size()) {
    int best = -1;
    std::size_t best_len = 0;
    for (std::size_t a = 0; a < pda.input_alphabet().size(); ++a) {
      const auto& name = pda.input_alphabet()[a];
      if (name.size() > best_len && text.substr(i, name.size()) == name) {
        best = static_cast<int>(a);
        best_len = name.size();
      }
    }
    if (best < 0) throw Error("cannot tokenize input at offset " + std::to_string(i));
    w.push_back(best);
    i += best_len;
  }
  return w;
}

std::string word_to_string(const Pda& pda, const Word& w) {
  const bool single = std::all_of(pda.input_alphabet().begin(), pda.input_alphabet().end(),
                                  [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!single && i) out += ' ';
    out += pda.input_name(w[i]);
  }
  return out;
}

}  // namespace turnpda

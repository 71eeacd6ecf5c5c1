#include "turnpda/tm.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"
#include "turnpda/languages.hpp"
#include "turnpda/oca_builder.hpp"

namespace turnpda {

using json = nlohmann::json;

const TuringMachine::Rule* TuringMachine::rule(const std::string& state, const std::string& read) const {
  const auto it = rules.find({state, read});
  return it == rules.end() ? nullptr : &it->second;
}

TuringMachine parse_tm(std::string_view text) {
  using K = ParseError::Kind;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(K::MalformedDocument, std::string("invalid JSON: ") + e.what());
  }
  try {
    TuringMachine tm;
    tm.states = doc.at("states").get<std::vector<std::string>>();
    tm.tape_alphabet = doc.at("tape_alphabet").get<std::vector<std::string>>();
    tm.blank = doc.at("blank").get<std::string>();
    tm.initial = doc.at("initial_state").get<std::string>();
    std::set<std::string> states(tm.states.begin(), tm.states.end());
    std::set<std::string> tape(tm.tape_alphabet.begin(), tm.tape_alphabet.end());
    if (states.size() != tm.states.size()) throw ParseError(K::DuplicateState, "duplicate state");
    if (!tape.contains(tm.blank)) throw ParseError(K::UndeclaredSymbol, "blank not in tape alphabet");
    if (!states.contains(tm.initial)) throw ParseError(K::UndeclaredSymbol, "unknown initial state");
    for (const auto& t : doc.at("transitions")) {
      TuringMachine::Rule r;
      const auto from = t.at("state").get<std::string>();
      const auto read = t.at("read").get<std::string>();
      r.to = t.at("to").get<std::string>();
      r.write = t.at("write").get<std::string>();
      const auto move = t.at("move").get<std::string>();
      if (move != "L" && move != "R") throw ParseError(K::MalformedDocument, "move must be L or R");
      r.move = move[0];
      if (!states.contains(from) || !states.contains(r.to))
        throw ParseError(K::UndeclaredSymbol, "transition references an unknown state");
      if (!tape.contains(read) || !tape.contains(r.write))
        throw ParseError(K::UndeclaredSymbol, "transition references an unknown tape symbol");
      if (!tm.rules.emplace(std::pair{from, read}, r).second)
        throw ParseError(K::MalformedDocument, "machine is not deterministic");
    }
    return tm;
  } catch (const json::exception& e) {
    throw ParseError(K::MalformedDocument, std::string("bad machine document: ") + e.what());
  }
}

std::string serialize_tm(const TuringMachine& tm) {
  json doc;
  doc["states"] = tm.states;
  doc["tape_alphabet"] = tm.tape_alphabet;
  doc["blank"] = tm.blank;
  doc["initial_state"] = tm.initial;
  doc["transitions"] = json::array();
  for (const auto& [key, r] : tm.rules)
    doc["transitions"].push_back({{"state", key.first},
                                  {"read", key.second},
                                  {"to", r.to},
                                  {"write", r.write},
                                  {"move", std::string(1, r.move)}});
  return doc.dump(2) + "\n";
}

TmCodec::TmCodec(const TuringMachine& tm) {
  std::set<std::string> used{"$", "a", "b"};
  auto assign = [&](const std::string& name) {
    std::string s = name;
    while (used.contains(s)) s += "'";
    used.insert(s);
    symbols_.push_back(s);
    return s;
  };
  for (const auto& t : tm.tape_alphabet) {
    const auto s = assign(t);
    tape_[t] = s;
    tape_of_[s] = t;
  }
  for (const auto& q : tm.states) {
    const auto s = assign(q);
    state_[q] = s;
    state_of_[s] = q;
  }
}

namespace {

/// Rule applying to state symbol `q` scanning tape symbol `c` ("" = blank).
const TuringMachine::Rule* rule_at(const TuringMachine& tm, const TmCodec& codec, const std::string& q,
                                   const std::string& c) {
  if (!codec.is_state(q)) return nullptr;
  if (c.empty()) return tm.rule(codec.state_name(q), tm.blank);
  if (!codec.is_tape(c)) return nullptr;
  return tm.rule(codec.state_name(q), codec.tape_name(c));
}

std::vector<Tokens> split_blocks(const Tokens& y) {
  std::vector<Tokens> blocks;
  Tokens cur;
  for (const auto& s : y) {
    if (s == "$") {
      blocks.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(s);
    }
  }
  return blocks;
}

}  // namespace

std::optional<ConfigTokens> tm_successor(const TuringMachine& tm, const TmCodec& codec,
                                         const ConfigTokens& config) {
  std::size_t i = config.size();
  for (std::size_t j = 0; j < config.size(); ++j) {
    if (codec.is_state(config[j])) {
      if (i != config.size()) return std::nullopt;
      i = j;
    } else if (!codec.is_tape(config[j])) {
      return std::nullopt;
    }
  }
  if (i == config.size()) return std::nullopt;
  const auto* r = rule_at(tm, codec, config[i], i + 1 < config.size() ? config[i + 1] : "");
  if (!r) return std::nullopt;
  const auto rest = config.begin() + static_cast<std::ptrdiff_t>(std::min(i + 2, config.size()));
  ConfigTokens next;
  if (r->move == 'R') {
    next.assign(config.begin(), config.begin() + static_cast<std::ptrdiff_t>(i));
    next.push_back(codec.tape(r->write));
    next.push_back(codec.state(r->to));
  } else if (i > 0) {
    next.assign(config.begin(), config.begin() + static_cast<std::ptrdiff_t>(i - 1));
    next.push_back(codec.state(r->to));
    next.push_back(config[i - 1]);
    next.push_back(codec.tape(r->write));
  } else {
    next.push_back(codec.state(r->to));
    next.push_back(codec.tape(r->write));
  }
  next.insert(next.end(), rest, config.end());
  return next;
}

bool tm_halting(const TuringMachine& tm, const TmCodec& codec, const ConfigTokens& config) {
  const auto states = std::count_if(config.begin(), config.end(),
                                    [&](const std::string& s) { return codec.is_state(s); });
  if (states != 1 || !std::all_of(config.begin(), config.end(), [&](const std::string& s) {
        return codec.is_state(s) || codec.is_tape(s);
      }))
    return false;
  return !tm_successor(tm, codec, config);
}

std::vector<ConfigTokens> tm_configurations(const TuringMachine& tm, const Tokens& input,
                                            std::size_t step_cap) {
  const TmCodec codec(tm);
  ConfigTokens cur{codec.state(tm.initial)};
  for (const auto& s : input) cur.push_back(codec.tape(s));
  std::vector<ConfigTokens> run;
  for (;;) {
    run.push_back(cur);
    auto next = tm_successor(tm, codec, cur);
    if (!next) return run;
    if (run.size() > step_cap)
      throw NonHaltingWithinCap("machine did not halt within " + std::to_string(step_cap) + " steps");
    cur = std::move(*next);
  }
}

Tokens tm_run(const TuringMachine& tm, const Tokens& input, std::size_t step_cap) {
  Tokens y;
  for (const auto& c : tm_configurations(tm, input, step_cap)) {
    y.insert(y.end(), c.begin(), c.end());
    y.push_back("$");
  }
  return y;
}

bool decide_valid(const TuringMachine& tm, const Tokens& input, const Tokens& y) {
  if (y.empty() || y.back() != "$") return false;
  const TmCodec codec(tm);
  const auto blocks = split_blocks(y);
  ConfigTokens initial{codec.state(tm.initial)};
  for (const auto& s : input) initial.push_back(codec.tape(s));
  if (blocks.front() != initial) return false;
  for (std::size_t j = 0; j + 1 < blocks.size(); ++j) {
    const auto next = tm_successor(tm, codec, blocks[j]);
    if (!next || *next != blocks[j + 1]) return false;
  }
  return tm_halting(tm, codec, blocks.back());
}

bool decide_pnotvalid(const TuringMachine& tm, const Tokens& s) {
  auto letter = [](const std::string& t) { return t == "a" || t == "b"; };
  Tokens alphas;
  bool all_eq = true;
  std::size_t i = 0;
  if (s.empty()) return false;
  while (i < s.size()) {
    const std::size_t a = i;
    while (i < s.size() && !letter(s[i])) ++i;
    const std::size_t z = i;
    while (i < s.size() && letter(s[i])) ++i;
    if (z == a || i == z) return false;
    alphas.insert(alphas.end(), s.begin() + static_cast<std::ptrdiff_t>(a),
                  s.begin() + static_cast<std::ptrdiff_t>(z));
    alphas.push_back("$");
    std::string block;
    for (std::size_t j = z; j < i; ++j) block += s[j];
    all_eq &= decide_eq(block);
  }
  const TmCodec codec(tm);
  for (const auto& t : alphas)
    if (t != "$" && !codec.is_state(t) && !codec.is_tape(t)) return false;
  return all_eq || !decide_valid(tm, {}, alphas);
}

Tokens pnotvalid_witness(const TuringMachine& tm, const Tokens& z, std::size_t step_cap) {
  Tokens s;
  for (const auto& c : tm_configurations(tm, {}, step_cap)) {
    s.insert(s.end(), c.begin(), c.end());
    s.insert(s.end(), z.begin(), z.end());
  }
  return s;
}

namespace {

using Op = void (OcaBuilder::*)(const std::string&, const std::string&, const std::string&);

/// One-turn check that a list of configuration blocks is not a valid
/// computation. Blocks end with $, or, in z mode, with a nonempty {a,b} block.
class InvalidCheck {
 public:
  InvalidCheck(OcaBuilder& o, const TuringMachine& tm, const Tokens& input, bool z_mode, std::string prefix)
      : o_(o), tm_(tm), codec_(tm), input_(input), z_(z_mode), p_(std::move(prefix)) {
    for (const auto& s : codec_.symbols()) (codec_.is_state(s) ? states_ : tape_).push_back(s);
  }

  void build(const std::string& start) {
    tails();
    if (!z_) shape(start);
    first_block(start);
    o_.keep(start, "", p_ + "pre_b");
    keep_all(o_, p_ + "pre_b", codec_.symbols(), p_ + "pre_in");
    keep_all(o_, p_ + "pre_in", codec_.symbols(), p_ + "pre_in");
    sep(p_ + "pre_in", p_ + "pre_b");
    if (!z_) o_.keep(p_ + "pre_b", "$", p_ + "pre_b");
    state_count();
    halting();
    length();
    symbol();
  }

 private:
  void sep(const std::string& from, const std::string& to, Op op = &OcaBuilder::keep) {
    if (!z_) {
      (o_.*op)(from, "$", to);
      return;
    }
    const std::string z = to + "~z";
    for (const char* l : {"a", "b"}) {
      (o_.*op)(from, l, z);
      o_.keep(z, l, z);
    }
    o_.keep(z, "", to);
  }
  void empty_block(const std::string& from, const std::string& to, Op op = &OcaBuilder::keep) {
    if (!z_) (o_.*op)(from, "$", to);
  }

  std::string done_in() const { return p_ + "done_in"; }
  std::string done_b() const { return p_ + "done_b"; }

  void tails() {
    keep_all(o_, done_in(), codec_.symbols(), done_in());
    sep(done_in(), done_b());
    keep_all(o_, done_b(), codec_.symbols(), done_in());
    empty_block(done_b(), done_b());
    o_.accept(done_b());
    if (!z_) o_.accept(done_in());
    keep_all(o_, p_ + "more", codec_.symbols(), done_in());
    empty_block(p_ + "more", done_b());
    o_.accept(p_ + "end");
  }

  /// Literal mode only: empty input or a last symbol other than $.
  void shape(const std::string& start) {
    o_.accept(start);
    keep_all(o_, start, codec_.symbols(), p_ + "shape_in");
    o_.keep(start, "$", p_ + "shape_sep");
    keep_all(o_, p_ + "shape_in", codec_.symbols(), p_ + "shape_in");
    o_.keep(p_ + "shape_in", "$", p_ + "shape_sep");
    keep_all(o_, p_ + "shape_sep", codec_.symbols(), p_ + "shape_in");
    o_.keep(p_ + "shape_sep", "$", p_ + "shape_sep");
    o_.accept(p_ + "shape_in");
  }

  /// The first block differs from q_I w.
  void first_block(const std::string& start) {
    Tokens target{codec_.state(tm_.initial)};
    for (const auto& s : input_) target.push_back(codec_.tape(s));
    auto st = [&](std::size_t k) { return p_ + "init" + std::to_string(k); };
    const std::string bad = p_ + "init_bad";
    o_.keep(start, "", st(0));
    for (std::size_t k = 0; k <= target.size(); ++k) {
      for (const auto& s : codec_.symbols()) o_.keep(st(k), s, k < target.size() && s == target[k] ? st(k + 1) : bad);
      if (k > 0 && k < target.size()) sep(st(k), done_b());
    }
    empty_block(st(0), done_b());
    keep_all(o_, bad, codec_.symbols(), bad);
    sep(bad, done_b());
  }

  /// Some block does not contain exactly one state.
  void state_count() {
    const std::string e = p_ + "cnt_e", c0 = p_ + "cnt0", c1 = p_ + "cnt1", c2 = p_ + "cnt2";
    o_.keep(p_ + "pre_b", "", e);
    keep_all(o_, e, tape_, c0);
    keep_all(o_, e, states_, c1);
    empty_block(e, done_b());
    keep_all(o_, c0, tape_, c0);
    keep_all(o_, c0, states_, c1);
    sep(c0, done_b());
    keep_all(o_, c1, tape_, c1);
    keep_all(o_, c1, states_, c2);
    keep_all(o_, c2, codec_.symbols(), c2);
    sep(c2, done_b());
  }

  /// The last block is not halting, or a block before the last one is.
  void halting() {
    const std::string start = p_ + "halt", pre = p_ + "halt_pre", two = p_ + "cnt2";
    o_.keep(p_ + "pre_b", "", start);
    keep_all(o_, start, tape_, pre);
    keep_all(o_, pre, tape_, pre);
    for (const auto& q : states_) {
      const std::string hq = p_ + "halt[" + q + "]";
      o_.keep(start, q, hq);
      o_.keep(pre, q, hq);
      keep_all(o_, hq, states_, two);
      sep(hq, rule_at(tm_, codec_, q, "") ? p_ + "end" : p_ + "more");
      for (const auto& c : tape_) {
        const std::string hqc = p_ + "halt[" + q + "," + c + "]";
        o_.keep(hq, c, hqc);
        keep_all(o_, hqc, tape_, hqc);
        keep_all(o_, hqc, states_, two);
        sep(hqc, rule_at(tm_, codec_, q, c) ? p_ + "end" : p_ + "more");
      }
    }
  }

  /// The next block's length differs from that of the successor configuration.
  void length() {
    const std::string start = p_ + "len", t = p_ + "len_t", s = p_ + "len_s";
    const std::string cmp0 = p_ + "len_cmp0", cmp = p_ + "len_cmp", over = p_ + "len_over";
    o_.keep(p_ + "pre_b", "", start);
    for (const auto& from : {start, t, s}) {
      for (const auto& c : tape_) o_.inc(from, c, t);
      for (const auto& q : states_) o_.inc(from, q, s);
    }
    empty_block(start, cmp0);
    sep(t, cmp0);
    sep(s, cmp0, &OcaBuilder::inc);
    for (const auto& from : {cmp0, cmp})
      for (const auto& c : codec_.symbols()) {
        o_.dec(from, c, cmp);
        o_.if_zero(from, c, over);
      }
    empty_block(cmp0, done_b(), &OcaBuilder::if_pos);
    sep(cmp, done_b(), &OcaBuilder::if_pos);
    keep_all(o_, over, codec_.symbols(), over);
    sep(over, done_b());
  }

  /// Symbol of the successor at position x, from the window x-1 .. x+2 of the
  /// current block ("" = outside the block). "" means no symbol is expected.
  std::string expected(const std::string& m1, const std::string& s0, const std::string& s1,
                       const std::string& s2) const {
    auto state = [&](const std::string& s) { return !s.empty() && codec_.is_state(s); };
    if (s0.empty()) {
      if (!state(m1)) return "";
      const auto* r = rule_at(tm_, codec_, m1, "");
      if (!r) return "";
      return r->move == 'R' ? codec_.state(r->to) : codec_.tape(r->write);
    }
    if (state(s1)) {
      const auto* r = rule_at(tm_, codec_, s1, s2);
      if (!r) return "";
      return r->move == 'L' ? codec_.state(r->to) : s0;
    }
    if (state(s0)) {
      const auto* r = rule_at(tm_, codec_, s0, s1);
      if (!r) return "";
      if (r->move == 'R') return codec_.tape(r->write);
      return m1.empty() ? codec_.state(r->to) : m1;
    }
    if (state(m1)) {
      const auto* r = rule_at(tm_, codec_, m1, s0);
      if (!r) return "";
      return r->move == 'R' ? codec_.state(r->to) : codec_.tape(r->write);
    }
    return s0;
  }

  /// The next block differs from the successor at a guessed position x: the
  /// counter holds x, the expected symbol is kept in the finite control.
  void symbol() {
    const auto& all = codec_.symbols();
    auto pre = [&](const std::string& prev) { return p_ + "sym_pre[" + prev + "]"; };
    auto w1 = [&](const std::string& a, const std::string& b) { return p_ + "sym[" + a + "," + b + "]"; };
    auto w2 = [&](const std::string& a, const std::string& b, const std::string& c) {
      return p_ + "sym[" + a + "," + b + "," + c + "]";
    };
    auto exp = [&](const std::string& e) { return p_ + "sym_exp[" + e + "]"; };
    auto cmp = [&](const std::string& e) { return p_ + "sym_cmp[" + e + "]"; };
    std::set<std::string> expectations;
    auto expect = [&](const std::string& e) {
      expectations.insert(e);
      return e;
    };

    o_.keep(p_ + "pre_b", "", pre(""));
    Tokens prevs{""};
    prevs.insert(prevs.end(), all.begin(), all.end());
    for (const auto& m1 : prevs) {
      for (const auto& s0 : all) {
        o_.inc(pre(m1), s0, pre(s0));
        o_.keep(pre(m1), s0, w1(m1, s0));
        for (const auto& s1 : all) {
          o_.keep(w1(m1, s0), s1, w2(m1, s0, s1));
          for (const auto& s2 : all) o_.keep(w2(m1, s0, s1), s2, exp(expect(expected(m1, s0, s1, s2))));
          sep(w2(m1, s0, s1), cmp(expect(expected(m1, s0, s1, ""))));
        }
        sep(w1(m1, s0), cmp(expect(expected(m1, s0, "", ""))));
      }
      if (m1.empty())
        empty_block(pre(m1), cmp(expect(expected(m1, "", "", ""))));
      else
        sep(pre(m1), cmp(expect(expected(m1, "", "", ""))));
    }
    for (const auto& e : expectations) {
      keep_all(o_, exp(e), all, exp(e));
      sep(exp(e), cmp(e));
      for (const auto& s : all) {
        o_.dec(cmp(e), s, cmp(e));
        if (s != e) o_.if_zero(cmp(e), s, done_in());
      }
    }
  }

  OcaBuilder& o_;
  const TuringMachine& tm_;
  TmCodec codec_;
  Tokens input_;
  bool z_;
  std::string p_;
  Tokens tape_, states_;
};

}  // namespace

Pda build_invalid_oca(const TuringMachine& tm, const Tokens& input) {
  Tokens inputs = TmCodec(tm).symbols();
  inputs.push_back("$");
  OcaBuilder o(inputs);
  o.set_initial("start");
  InvalidCheck(o, tm, input, false, "").build("start");
  return o.build();
}

Pda build_halting_reduction_oca(const TuringMachine& tm) {
  const TmCodec codec(tm);
  Tokens inputs{"a", "b", "$"};
  inputs.insert(inputs.end(), codec.symbols().begin(), codec.symbols().end());
  OcaBuilder o(inputs);
  o.set_initial("start");

  // x in Eq*, then any y.
  o.inc("start", "a", "x_a");
  o.keep("start", "$", "y_any");
  o.inc("x_a", "a", "x_a");
  o.dec("x_a", "b", "x_b");
  o.dec("x_b", "b", "x_b");
  o.raw().add("x_b", "a", o.bottom(), "x_a", {o.counter(), o.bottom()});
  o.if_zero("x_b", "$", "y_any");
  keep_all(o, "y_any", codec.symbols(), "y_any");
  o.keep("y_any", "$", "y_any");
  o.accept("y_any");

  // Any x, then y not a valid computation.
  o.keep("start", "", "x_any");
  keep_all(o, "x_any", {"a", "b"}, "x_any");
  o.keep("x_any", "$", "y:start");
  InvalidCheck(o, tm, {}, false, "y:").build("y:start");
  return o.build();
}

Pda build_pnotvalid_oca(const TuringMachine& tm) {
  const TmCodec codec(tm);
  Tokens inputs = codec.symbols();
  inputs.push_back("a");
  inputs.push_back("b");
  OcaBuilder o(inputs);
  o.set_initial("start");

  // (a)
  o.keep("start", "", "v:start");
  InvalidCheck(o, tm, {}, true, "v:").build("v:start");

  // (b)
  keep_all(o, "start", codec.symbols(), "eq_in");
  keep_all(o, "eq_in", codec.symbols(), "eq_in");
  o.inc("eq_in", "a", "eq_a");
  o.inc("eq_a", "a", "eq_a");
  o.dec("eq_a", "b", "eq_b");
  o.dec("eq_b", "b", "eq_b");
  for (const auto& s : codec.symbols()) o.if_zero("eq_b", s, "eq_in");
  o.accept_if_zero("eq_b");
  return o.build();
}

Word to_word(const Pda& pda, const Tokens& tokens) {
  Word w;
  for (const auto& t : tokens) {
    const auto s = pda.find_input(t);
    if (!s) throw Error("unknown input symbol '" + t + "'");
    w.push_back(*s);
  }
  return w;
}

Tokens chars(std::string_view s) {
  Tokens t;
  for (char c : s) t.emplace_back(1, c);
  return t;
}

}  // namespace turnpda

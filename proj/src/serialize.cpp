#include "turnpda/serialize.hpp"

#include <unordered_set>

#include <json.hpp>

#include "turnpda/error.hpp"

namespace turnpda {

using nlohmann::json;

namespace {

[[noreturn]] void malformed(const std::string& what) {
  throw ParseError(ParseError::Kind::MalformedDocument, what);
}
[[noreturn]] void undeclared(const std::string& what) {
  throw ParseError(ParseError::Kind::UndeclaredSymbol, what);
}

std::vector<std::string> string_array(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) malformed(std::string("missing array '") + key + "'");
  std::vector<std::string> out;
  for (const auto& v : doc[key]) {
    if (!v.is_string()) malformed(std::string("non-string entry in '") + key + "'");
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::string string_field(const json& obj, const char* key) {
  if (!obj.contains(key) || !obj[key].is_string()) malformed(std::string("missing string '") + key + "'");
  return obj[key].get<std::string>();
}

int lookup(const std::vector<std::string>& names, const std::string& name, const char* what) {
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  undeclared(std::string(what) + " '" + name + "' is not declared");
}

}  // namespace

Pda parse_automaton(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    malformed(e.what());
  }
  if (!doc.is_object()) malformed("automaton document must be an object");

  auto states = string_array(doc, "states");
  auto input = string_array(doc, "input_alphabet");
  auto stack = string_array(doc, "stack_alphabet");
  {
    std::unordered_set<std::string> seen;
    for (const auto& s : states)
      if (!seen.insert(s).second)
        throw ParseError(ParseError::Kind::DuplicateState, "duplicate state '" + s + "'");
  }
  for (const auto* names : {&input, &stack}) {
    std::unordered_set<std::string> seen;
    for (const auto& s : *names)
      if (s.empty() || !seen.insert(s).second) malformed("duplicate or empty symbol '" + s + "'");
  }

  const StateId initial = lookup(states, string_field(doc, "initial_state"), "state");
  const Symbol bottom = lookup(stack, string_field(doc, "bottom_symbol"), "stack symbol");

  if (!doc.contains("transitions") || !doc["transitions"].is_array()) malformed("missing array 'transitions'");
  std::vector<Transition> transitions;
  for (const auto& t : doc["transitions"]) {
    if (!t.is_object()) malformed("transition must be an object");
    Transition tr;
    tr.from = lookup(states, string_field(t, "from"), "state");
    tr.to = lookup(states, string_field(t, "to"), "state");
    const std::string read = string_field(t, "read");
    tr.read = read.empty() ? kEpsilon : lookup(input, read, "input symbol");
    tr.top = lookup(stack, string_field(t, "top"), "stack symbol");
    if (!t.contains("push") || !t["push"].is_array()) malformed("transition without 'push' array");
    for (const auto& s : t["push"]) {
      if (!s.is_string()) malformed("non-string push symbol");
      tr.push.push_back(lookup(stack, s.get<std::string>(), "stack symbol"));
    }
    transitions.push_back(std::move(tr));
  }
  return Pda(std::move(states), std::move(input), std::move(stack), initial, bottom,
             std::move(transitions));
}

std::string serialize_automaton(const Pda& pda) {
  json doc;
  doc["states"] = pda.states();
  doc["input_alphabet"] = pda.input_alphabet();
  doc["stack_alphabet"] = pda.stack_alphabet();
  doc["initial_state"] = pda.state_name(pda.initial());
  doc["bottom_symbol"] = pda.stack_name(pda.bottom());
  json ts = json::array();
  for (const auto& t : pda.transitions()) {
    json push = json::array();
    for (Symbol s : t.push) push.push_back(pda.stack_name(s));
    ts.push_back({{"from", pda.state_name(t.from)},
                  {"read", t.read == kEpsilon ? std::string() : pda.input_name(t.read)},
                  {"top", pda.stack_name(t.top)},
                  {"to", pda.state_name(t.to)},
                  {"push", push}});
  }
  doc["transitions"] = ts;
  return doc.dump(2) + "\n";
}

std::string format_trace(const Pda& pda, const Trace& trace, std::size_t turns) {
  std::string out;
  auto line = [&](const Configuration& c) {
    out += pda.state_name(c.state);
    out += " | ";
    const Word consumed(trace.input.begin(), trace.input.begin() + static_cast<long>(c.pos));
    out += consumed.empty() ? "ε" : word_to_string(pda, consumed);
    out += " | ";
    if (c.stack.empty()) out += "ε";
    for (std::size_t i = 0; i < c.stack.size(); ++i) {
      if (i) out += ' ';
      out += pda.stack_name(c.stack[i]);
    }
    out += '\n';
  };
  for (const auto& s : trace.steps) line(s.before);
  line(trace.final_config);
  out += "turns=" + std::to_string(turns) + "\n";
  return out;
}

}  // namespace turnpda

#include "turnpda/cli.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "turnpda/decision.hpp"
#include "turnpda/languages.hpp"
#include "turnpda/normal_form.hpp"
#include "turnpda/samplers.hpp"
#include "turnpda/serialize.hpp"
#include "turnpda/tm.hpp"

namespace turnpda {

namespace {

/// Bad input data (unreadable file, malformed document, unknown symbol).
class DataError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Pda load_automaton(const std::string& path) { return parse_automaton(read_file(path)); }

void write_output(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw DataError("cannot write " + path);
  f << text;
}

std::vector<std::uint64_t> parse_params(std::string_view text) {
  std::vector<std::uint64_t> v;
  while (!text.empty()) {
    const auto colon = text.find(':');
    const auto part = text.substr(0, colon);
    std::uint64_t x = 0;
    const auto [p, ec] = std::from_chars(part.data(), part.data() + part.size(), x);
    if (ec != std::errc() || p != part.data() + part.size()) throw CLI::ValidationError("bad parameter '" + std::string(part) + "'");
    v.push_back(x);
    text = colon == std::string_view::npos ? std::string_view() : text.substr(colon + 1);
  }
  return v;
}

std::string witness(const std::string& spec, std::size_t budget) {
  const auto colon = spec.find(':');
  const std::string family = spec.substr(0, colon);
  const auto p = parse_params(colon == std::string::npos ? "" : std::string_view(spec).substr(colon + 1));
  auto need = [&](std::size_t n) {
    if (p.size() != n) throw CLI::ValidationError(family + " takes " + std::to_string(n) + " parameter(s)");
  };
  auto u = [&](std::size_t i) { return static_cast<unsigned>(p[i]); };
  if (family == "listbin") {
    need(1);
    return gen_listbin(p[0]);
  }
  if (family == "ytk") {
    need(2);
    return gen_ytk(u(0), u(1), budget);
  }
  if (family == "wtk") {
    need(2);
    return gen_wtk(u(0), u(1), budget);
  }
  if (family == "lb-lk") {
    need(3);
    return gen_lb_witness_Lk(u(0), u(1), p[2], budget);
  }
  if (family == "ublock") {
    need(1);
    return gen_u_block(u(0), budget);
  }
  if (family == "uk") {
    need(2);
    return gen_uk(u(0), p[1], budget);
  }
  if (family == "eqk") {
    need(2);
    return gen_eqk(u(0), p[1]);
  }
  if (family == "lsq") {
    need(2);
    return gen_lsq_witness(u(0), p[1]);
  }
  throw CLI::ValidationError("unknown witness family '" + family + "'");
}

}  // namespace

std::string emit_curve_csv(const CurveTable& table, const BoundFn& bound, double tolerance) {
  std::string csv = "n,samples,max_min_turns,bound_value,within_bound\n";
  char value[64];
  for (const auto& row : table.rows) {
    const double b = bound.envelope(row.n);
    std::snprintf(value, sizeof value, "%.6f", b);
    const char* verdict = row.bounds_exceeded ? "capped"
                          : row.rejected      ? "rejected"
                          : static_cast<double>(row.max_min_turns) <= b + tolerance ? "true"
                                                                                    : "false";
    csv += std::to_string(row.n) + "," + std::to_string(row.samples) + "," +
           std::to_string(row.max_min_turns) + "," + value + "," + verdict + "\n";
  }
  return csv;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Turn complexity toolkit for pushdown and one-counter automata", "turnpda-cli"};
  app.require_subcommand(1);

  std::string automaton, input, output, lang, base, bound_name = "linear", tm_path, target = "invalid", spec;
  std::size_t max_stack = 0, max_steps = SearchCaps{}.max_visited, nmax = 100, samples = 4, step = 1;
  std::size_t max_subsets = kDefaultSubsetCap, budget = kDefaultLengthBudget;
  std::uint64_t seed = 0;
  unsigned threads = 0;

  auto add_caps = [&](CLI::App* c) {
    c->add_option("--max-stack", max_stack, "Stack height cap (0 = input length + 2)");
    c->add_option("--max-steps", max_steps, "Configuration budget of one search");
  };

  auto* simulate = app.add_subcommand("simulate", "Bounded membership of one input");
  simulate->add_option("--automaton", automaton)->required();
  simulate->add_option("--input", input)->required();
  add_caps(simulate);

  auto* minturns = app.add_subcommand("minturns", "Minimum turns over accepting computations");
  minturns->add_option("--automaton", automaton)->required();
  minturns->add_option("--input", input)->required();
  add_caps(minturns);

  auto* normalform = app.add_subcommand("normalform", "Machine that remembers the stack top in its control");
  normalform->add_option("--automaton", automaton)->required();
  normalform->add_option("-o,--output", output);

  auto* decide0 = app.add_subcommand("decide0", "Does every accepted word have a turn-free computation");
  decide0->add_option("--automaton", automaton)->required();
  decide0->add_option("--max-subsets", max_subsets);

  auto* build = app.add_subcommand("build-lang", "Emit a language's one-counter automaton");
  build->add_option("--lang", lang, "Eq, EqStar, Lsq, ListBinC, Lk:<k>, Ustar or Ext")->required();
  build->add_option("--base", base, "Base automaton for Ext");
  build->add_option("-o,--output", output);

  auto* wit = app.add_subcommand("witness", "Print a witness string");
  wit->add_option("spec", spec, "listbin:m, ytk:t:k, wtk:t:k, lb-lk:t:k:N, ublock:i, uk:k:N, eqk:k:n, lsq:m:n")
      ->required();
  wit->add_option("--budget", budget, "Length budget");

  auto* curve = app.add_subcommand("curve", "Empirical turn curve as CSV");
  curve->add_option("--lang", lang)->required();
  curve->add_option("--bound", bound_name, "linear[:slope], sqrt, cuberoot, logk:<k>, logstar, identity");
  curve->add_option("--nmax", nmax);
  curve->add_option("--samples", samples);
  curve->add_option("--seed", seed);
  curve->add_option("--step", step)->check(CLI::PositiveNumber);
  curve->add_option("--threads", threads);
  curve->add_option("-o,--output", output);
  add_caps(curve);

  auto* tmc = app.add_subcommand("tm-compile", "Compile a Turing machine reduction to an automaton");
  tmc->add_option("--tm", tm_path)->required();
  tmc->add_option("--target", target)->check(CLI::IsMember({"invalid", "halting", "pnotvalid"}));
  tmc->add_option("--input", input, "Tape symbols, whitespace separated (invalid only)");
  tmc->add_option("-o,--output", output);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << e.what() << "\n";
    return kExitUsage;
  }

  const SearchCaps caps{max_stack, max_steps, std::nullopt};
  try {
    if (simulate->parsed()) {
      const Pda pda = load_automaton(automaton);
      switch (accepts(pda, tokenize(pda, input), caps)) {
        case Membership::Accepted: out << "Accepted\n"; return 0;
        case Membership::Rejected: out << "Rejected\n"; return 1;
        case Membership::Unknown: out << "BoundsExceeded\n"; return 2;
      }
    }
    if (minturns->parsed()) {
      const Pda pda = load_automaton(automaton);
      const auto r = min_turns(pda, tokenize(pda, input), caps);
      if (!r.accepted()) {
        out << to_string(r.outcome) << "\n";
        return r.outcome == Outcome::BoundsExceeded ? 2 : 1;
      }
      out << "Accepted turns=" << r.min_turns << "\n" << format_trace(pda, *r.witness, r.min_turns);
      return 0;
    }
    if (normalform->parsed()) {
      write_output(output, serialize_automaton(normalize(load_automaton(automaton)).pda), out);
      return 0;
    }
    if (decide0->parsed()) {
      const Pda pda = load_automaton(automaton);
      try {
        const bool holds = decide_zero_turn(pda, max_subsets);
        out << (holds ? "holds" : "fails") << "\n";
        return holds ? 0 : 1;
      } catch (const BudgetExceeded& e) {
        out << "BoundsExceeded: " << e.what() << "\n";
        return 2;
      }
    }
    if (build->parsed()) {
      if (lang == "Ext") {
        if (base.empty()) throw CLI::ValidationError("Ext needs --base");
        write_output(output, serialize_automaton(build_ext_oca(load_automaton(base))), out);
      } else {
        write_output(output, serialize_automaton(build_language(lang)), out);
      }
      return 0;
    }
    if (wit->parsed()) {
      out << witness(spec, budget) << "\n";
      return 0;
    }
    if (curve->parsed()) {
      const BoundFn bound = BoundFn::parse(bound_name);
      const Pda pda = build_language(lang);
      const auto table = turn_curve(pda, language_sampler(lang, pda, samples, seed, step), nmax, caps, threads);
      write_output(output, emit_curve_csv(table, bound), out);
      bool capped = false;
      for (const auto& row : table.rows) capped |= row.flagged();
      return capped ? 2 : 0;
    }
    if (tmc->parsed()) {
      const TuringMachine tm = parse_tm(read_file(tm_path));
      Tokens tape;
      std::istringstream words(input);
      for (std::string t; words >> t;) {
        if (std::find(tm.tape_alphabet.begin(), tm.tape_alphabet.end(), t) == tm.tape_alphabet.end())
          throw DataError("unknown tape symbol '" + t + "'");
        tape.push_back(t);
      }
      const Pda pda = target == "invalid" ? build_invalid_oca(tm, tape)
                      : target == "halting" ? build_halting_reduction_oca(tm)
                                            : build_pnotvalid_oca(tm);
      write_output(output, serialize_automaton(pda), out);
      return 0;
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kExitDataErr;
  }
  return kExitUsage;
}

}  // namespace turnpda

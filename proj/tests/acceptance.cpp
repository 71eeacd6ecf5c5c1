// Acceptance gate: one PASS/FAIL line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "support.hpp"
#include "turnpda/decision.hpp"
#include "turnpda/languages.hpp"
#include "turnpda/mathkit.hpp"
#include "turnpda/normal_form.hpp"
#include "turnpda/samplers.hpp"
#include "turnpda/tm.hpp"
#include "turnpda/turn_search.hpp"

using namespace turnpda;
using turnpda::testing::for_each_word;
using turnpda::testing::random_pda;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Word word(const Pda& pda, const std::string& s) { return to_word(pda, chars(s)); }

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// 1. min_turns(A_eq*, (a^j b^j)^k) = k, cross-checked by enumeration.
Verdict eqstar_ground_truth() {
  Verdict v;
  const Pda pda = build_eqstar_oca();
  for (unsigned j = 1; j <= 4; ++j)
    for (unsigned k = 0; k <= 5; ++k) {
      const Word w = word(pda, gen_eqk(k, j));
      const auto r = min_turns(pda, w);
      const auto e = enumerate_accepting(pda, w);
      if (!r.accepted() || r.min_turns != k || e.min_turns() != k)
        v.fail("j=" + std::to_string(j) + " k=" + std::to_string(k));
    }
  v.detail = v.pass ? "j<=4, k<=5" : v.detail;
  return v;
}

// 2. Normal form preserves the language and the minimum turn count.
Verdict normal_form_agreement() {
  Verdict v;
  std::vector<std::pair<std::string, Pda>> suite{{"Eq", build_eq_oca()},
                                                 {"EqStar", build_eqstar_oca()},
                                                 {"Lsq", build_lsq_oca()},
                                                 {"Lk:1", build_Lk_oca(1)},
                                                 {"Lk:2", build_Lk_oca(2)}};
  for (std::uint64_t seed = 0; seed < 20; ++seed) suite.emplace_back("random" + std::to_string(seed), random_pda(seed));

  std::size_t words = 0, accepted = 0;
  for (const auto& [name, pda] : suite) {
    const NormalizedPda n = normalize(pda);
    auto compare = [&](const Word& w) {
      ++words;
      const auto a = min_turns(pda, w);
      const auto b = min_turns(n.pda, w);
      if (a.outcome == Outcome::BoundsExceeded || b.outcome == Outcome::BoundsExceeded) {
        v.fail(name + ": search capped");
        return;
      }
      if (a.accepted() != b.accepted() || (a.accepted() && a.min_turns != b.min_turns))
        v.fail(name + ": disagreement on " + word_to_string(pda, w));
      accepted += a.accepted();
    };
    for_each_word(pda, 8, compare);
    if (!check_normal(n.pda)) v.fail(name + ": not in normal form");
  }
  if (v.pass)
    v.detail = std::to_string(suite.size()) + " machines, " + std::to_string(words) + " words, " +
               std::to_string(accepted) + " accepted";
  return v;
}

// 3. The zero-turn decision agrees with bounded brute force.
Verdict zero_turn_decision() {
  Verdict v;
  PdaBuilder stackless;
  stackless.set_initial("s");
  stackless.set_bottom("Z0");
  stackless.stack("A");
  for (const char* a : {"a", "b"}) stackless.input(a);
  stackless.add("s", "a", "Z0", "up", {"A", "Z0"});
  stackless.add("up", "a", "A", "up", {"A", "A"});
  stackless.add("up", "b", "A", "down", {});
  stackless.add("down", "b", "A", "down", {});
  stackless.add("down", "", "Z0", "down", {});
  stackless.add("s", "", "Z0", "flat_a", {"Z0"});
  stackless.add("flat_a", "a", "Z0", "flat_a", {"Z0"});
  stackless.add("flat_a", "b", "Z0", "flat_b", {"Z0"});
  stackless.add("flat_b", "b", "Z0", "flat_b", {"Z0"});
  stackless.add("flat_b", "", "Z0", "flat_b", {});

  auto push_free = [](std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    PdaBuilder b;
    b.set_initial("p0");
    b.set_bottom("Z0");
    b.stack("A");
    b.input("a");
    b.input("b");
    for (int i = 0; i < 8; ++i) {
      const auto from = "p" + std::to_string(rng() % 3), to = "p" + std::to_string(rng() % 3);
      const std::string read = rng() % 3 == 0 ? "" : (rng() % 2 ? "a" : "b");
      b.add(from, read, "Z0", to, rng() % 3 == 0 ? std::vector<std::string>{} : std::vector<std::string>{"Z0"});
    }
    return b.build();
  };

  struct Case {
    std::string name;
    Pda pda;
    int expected;  // 1 holds, 0 fails, -1 not pinned
  };
  std::vector<Case> suite{{"Eq", build_eq_oca(), 0},
                          {"EqStar", build_eqstar_oca(), 0},
                          {"stackless-branch", stackless.build(), 1},
                          {"Lsq", build_lsq_oca(), 0}};
  for (std::uint64_t s = 0; s < 5; ++s) suite.push_back({"push-free" + std::to_string(s), push_free(s), 1});
  for (std::uint64_t s = 0; s < 20; ++s) suite.push_back({"random" + std::to_string(s), random_pda(s), -1});

  std::size_t holds = 0;
  for (const auto& c : suite) {
    const bool verdict = decide_zero_turn(c.pda);
    bool brute = true;
    for_each_word(c.pda, 6, [&](const Word& w) {
      const auto r = min_turns(c.pda, w);
      if (r.outcome == Outcome::BoundsExceeded) v.fail(c.name + ": search capped");
      if (r.accepted() && r.min_turns > 0) brute = false;
    });
    if (verdict != brute) v.fail(c.name + ": decision " + std::to_string(verdict) + " vs brute force");
    if (c.expected >= 0 && verdict != (c.expected == 1)) v.fail(c.name + ": unexpected verdict");
    holds += verdict;
  }
  if (v.pass) v.detail = std::to_string(suite.size()) + " machines, " + std::to_string(holds) + " hold";
  return v;
}

// 4. Lsq witnesses with z = ab need m turns, and m <= ceil(sqrt(2n)) + 1.
Verdict lsq_upper_bound() {
  Verdict v;
  const Pda pda = build_lsq_oca();
  std::map<std::size_t, unsigned> m_of_n;
  for (unsigned m = 1; m <= 8; ++m) m_of_n[gen_lsq_witness(m, 1).size()] = m;
  const Sampler sampler = [&](std::size_t n) {
    std::vector<Word> out;
    if (auto it = m_of_n.find(n); it != m_of_n.end()) out.push_back(word(pda, gen_lsq_witness(it->second, 1)));
    return out;
  };
  const auto table = turn_curve(pda, sampler, m_of_n.rbegin()->first);
  if (table.rows.size() != 8) v.fail("expected 8 rows");
  const BoundFn sqrt_bound = BoundFn::parse("sqrt");
  for (const auto& row : table.rows) {
    const unsigned m = m_of_n.at(row.n);
    if (row.flagged() || row.max_min_turns != m) v.fail("n=" + std::to_string(row.n) + ": turns " + std::to_string(row.max_min_turns));
    const double bound = std::ceil(std::sqrt(2.0 * static_cast<double>(row.n))) + 1;
    if (m > bound || sqrt_bound.envelope(row.n) != bound) v.fail("n=" + std::to_string(row.n) + ": bound");
  }
  if (v.pass) v.detail = "m=1..8 at n=" + std::to_string(table.rows.front().n) + ".." + std::to_string(table.rows.back().n);
  return v;
}

// 5. Curves of the L^(k) machines stay under max(1, log^(k) n).
Verdict lk_upper_bound() {
  Verdict v;
  std::size_t samples = 0, top = 0;
  for (unsigned k = 1; k <= 2; ++k) {
    const std::string lang = "Lk:" + std::to_string(k);
    const Pda pda = build_Lk_oca(k);
    const BoundFn bound = BoundFn::logk_of(k);
    const auto table = turn_curve(pda, language_sampler(lang, pda, 4, 0, 10), 500);
    for (const auto& row : table.rows) {
      samples += row.samples;
      top = std::max(top, row.max_min_turns);
      if (row.flagged()) v.fail(lang + " n=" + std::to_string(row.n) + ": flagged row");
      if (static_cast<double>(row.max_min_turns) > bound.envelope(row.n) + 1e-9)
        v.fail(lang + " n=" + std::to_string(row.n) + ": " + std::to_string(row.max_min_turns) + " turns");
    }
  }
  if (samples == 0) v.fail("no samples");
  if (v.pass) v.detail = std::to_string(samples) + " samples up to n=500, max turns " + std::to_string(top);
  return v;
}

// 6. Lower-bound witnesses admit no accepting computation with fewer than t turns.
Verdict lk_lower_bound() {
  Verdict v;
  for (const auto [t, k] : {std::pair{2u, 1u}, std::pair{3u, 1u}}) {
    const Pda pda = build_Lk_oca(k);
    const std::string s = gen_lb_witness_Lk(t, k, 1);
    const Word w = word(pda, s);
    const std::string tag = "t=" + std::to_string(t) + " |w|=" + std::to_string(s.size());
    if (!decide_Lk(s, k)) v.fail(tag + ": not in the language");
    SearchCaps caps;
    caps.max_turns = t - 1;
    try {
      const auto e = enumerate_accepting(pda, w, caps);
      if (e.pruned) v.fail(tag + ": height cap pruned the enumeration");
      if (!e.accepting.empty()) v.fail(tag + ": accepted with fewer turns");
      caps.max_turns = t;
      if (enumerate_accepting(pda, w, caps).min_turns() != t) v.fail(tag + ": no computation with t turns");
    } catch (const ExplosionCapped&) {
      v.fail(tag + ": enumeration capped");
    }
    const auto r = min_turns(pda, w);
    if (!r.accepted() || r.min_turns != t) v.fail(tag + ": min_turns " + std::to_string(r.min_turns));
  }
  if (v.pass) v.detail = "(t,k) = (2,1), (3,1)";
  return v;
}

// 7. U* witnesses need k turns; curve under log* n; Example 2 verdicts.
Verdict ustar_bounds() {
  Verdict v;
  const Pda pda = build_Ustar_oca();
  for (unsigned k = 1; k <= 3; ++k) {
    const auto r = min_turns(pda, word(pda, gen_uk(k, 1)));
    if (!r.accepted() || r.min_turns != k) v.fail("gen_uk(" + std::to_string(k) + ",1): " + std::to_string(r.min_turns));
  }
  const std::string u = gen_u_with(4, "ab");
  const auto r = min_turns(pda, word(pda, u));
  if (!r.accepted() || r.min_turns != 4) v.fail("Example 2 u: " + std::to_string(r.min_turns) + " turns");

  // Example 2: no (a), no (b), member iff every z_i in Eq.
  const auto c = u_conditions(u);
  if (!c || c->k != 4 || c->conditions != Conditions{false, false, true}) v.fail("Example 2 profile");
  for (unsigned i = 1; i <= 4; ++i) {
    const std::string y = gen_u_block(i);
    const auto expected = static_cast<std::size_t>(tetration(2, i - 1));
    if (!decide_listbin(y) || count_dollars(y) != expected) v.fail("Example 2 y_" + std::to_string(i));
  }
  for (const auto& [z, member] : std::vector<std::pair<std::string, bool>>{{"ab", true}, {"aabb", true}, {"ba", false}, {"abb", false}}) {
    const std::string w = gen_u_block(4) + z + gen_u_block(3) + "ab" + gen_u_block(2) + "ab" + gen_u_block(1) + "ab";
    if (decide_Ustar(w) != member || decide_Uk(w, 4) != member) v.fail("Example 2 with z_4=" + z);
    if ((accepts(pda, word(pda, w)) == Membership::Accepted) != member) v.fail("machine on z_4=" + z);
  }
  // Minimality: any shorter y_i makes condition (b) hold.
  for (unsigned i = 2; i <= 4; ++i)
    for (std::uint64_t m = 1; m < static_cast<std::uint64_t>(tetration(2, i - 1)); ++m) {
      std::string w;
      for (unsigned j = 4; j >= 1; --j) w += (j == i ? gen_listbin(m) : gen_u_block(j)) + "ab";
      const auto p = u_conditions(w);
      if (!p || !p->conditions.b) v.fail("Example 2 minimality at y_" + std::to_string(i));
    }

  const BoundFn bound = BoundFn::logstar_fn();
  const auto table = turn_curve(pda, language_sampler("Ustar", pda, 4, 0, 5), 300);
  std::size_t samples = 0;
  for (const auto& row : table.rows) {
    samples += row.samples;
    if (row.flagged()) v.fail("Ustar n=" + std::to_string(row.n) + ": flagged row");
    if (static_cast<double>(row.max_min_turns) > bound.envelope(row.n))
      v.fail("Ustar n=" + std::to_string(row.n) + ": " + std::to_string(row.max_min_turns) + " turns");
  }
  if (v.pass) v.detail = "k=1..3, Example 2 (|u|=" + std::to_string(u.size()) + "), " + std::to_string(samples) + " curve samples";
  return v;
}

// 8. Example 1 condition profiles for L^(2).
Verdict example1() {
  Verdict v;
  const std::vector<std::pair<std::string, Conditions>> cases{
      {"1$10$11$100$$1$10$$ab$ab$aabb$", {false, true, true}},
      {"1$10$11$100$101$110$111$1000$$1$10$11$$ab$ba$", {false, true, false}},
      {"1$10$11$100$101$110$111$1000$$1$10$11$$aabb$", {false, false, true}}};
  const Pda pda = build_Lk_oca(2);
  for (std::size_t i = 0; i < cases.size(); ++i) {
    const auto& [w, expected] = cases[i];
    const auto c = lk_conditions(w, 2);
    if (!decide_Lk(w, 2) || !c || *c != expected) v.fail("w" + std::to_string(i + 1));
    if (accepts(pda, word(pda, w)) != Membership::Accepted) v.fail("machine rejects w" + std::to_string(i + 1));
  }
  if (v.pass) v.detail = "w1 (b)(c), w2 (b), w3 (c)";
  return v;
}

// 9. ListBin length facts and |w_{t,k}| < n_{t,k}^2.
Verdict listbin_lemmas() {
  Verdict v;
  for (std::uint64_t m = 1; m <= 1000; ++m) {
    const std::string y = gen_listbin(m);
    const std::string last = last_block(y);
    std::uint64_t value = 0;
    for (char c : last) value = 2 * value + static_cast<std::uint64_t>(c - '0');
    const double len = static_cast<double>(y.size());
    const bool ok = decide_listbin(y) && count_dollars(y) == m && value == m &&
                    static_cast<double>(last.size()) <= std::log2(len) &&
                    static_cast<double>(m) >= std::ldexp(1.0, static_cast<int>(last.size()) - 1) &&
                    len <= 2.0 * static_cast<double>(m) + static_cast<double>(m) * std::log2(static_cast<double>(m));
    if (!ok) v.fail("m=" + std::to_string(m));
  }
  for (const auto [t, k] : {std::pair{3u, 1u}, std::pair{4u, 1u}, std::pair{3u, 2u}}) {
    const BigInt n = gen_ntk(t, k);
    if (BigInt(gen_wtk(t, k).size()) >= n * n) v.fail("w_{" + std::to_string(t) + "," + std::to_string(k) + "}");
  }
  if (v.pass) v.detail = "m<=1000; (3,1) (4,1) (3,2)";
  return v;
}

// 10. lg(ab) < 2 lg a and log^(k)(ab) < 1 + log^(k) a for a > b > 1.
Verdict logk_product() {
  Verdict v;
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> exponent(0.0, 6.0);
  std::size_t checked = 0;
  for (int i = 0; i < 20000; ++i) {
    double a = std::pow(10.0, exponent(rng)), b = std::pow(10.0, exponent(rng));
    if (a < b) std::swap(a, b);
    if (!(a > b && b > 1)) continue;
    ++checked;
    if (!(lg(a * b) < 2 * lg(a) + 1e-9)) v.fail("lg at a=" + std::to_string(a));
    for (unsigned k = 2; k <= 4; ++k)
      if (!(logk(k, a * b) < 1 + logk(k, a) + 1e-9)) v.fail("k=" + std::to_string(k) + " at a=" + std::to_string(a));
  }
  if (v.pass) v.detail = std::to_string(checked) + " pairs, k<=4";
  return v;
}

// 11. pNotValid witnesses need m turns for machines halting in m configurations.
Verdict pnotvalid_turns() {
  Verdict v;
  for (int m = 1; m <= 3; ++m) {
    const TuringMachine tm = parse_tm(read_file(std::string(TURNPDA_TEST_DATA) + "/tm" + std::to_string(m) + ".json"));
    if (tm_configurations(tm, {}, 100).size() != static_cast<std::size_t>(m)) v.fail("tm" + std::to_string(m) + " run length");
    const Pda pda = build_pnotvalid_oca(tm);
    if (!is_oca(pda)) v.fail("tm" + std::to_string(m) + ": not an OCA");
    for (unsigned j = 1; j <= 4; ++j) {
      const Tokens s = pnotvalid_witness(tm, chars(std::string(j, 'a') + std::string(j, 'b')), 100);
      const auto r = min_turns(pda, to_word(pda, s));
      if (!decide_pnotvalid(tm, s) || !r.accepted() || r.min_turns != static_cast<std::size_t>(m))
        v.fail("tm" + std::to_string(m) + " z=a^" + std::to_string(j) + "b^" + std::to_string(j) + ": " +
               std::to_string(r.min_turns) + " turns");
    }
  }
  if (v.pass) v.detail = "m=1,2,3, z up to a^4b^4";
  return v;
}

// 12. log* landmarks.
Verdict logstar_landmarks() {
  Verdict v;
  if (logstar(65536) != 4 || logstar(65537) != 5 || logstar(16) != 3) v.fail("landmarks");
  for (std::uint64_t n = 17; n <= 65536; ++n)
    if (logstar(n) != 4) v.fail("n=" + std::to_string(n));
  if (v.pass) v.detail = "log*(16)=3, log*(n)=4 on 17..65536, log*(65537)=5";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
      {"turn-count ground truth", eqstar_ground_truth},
      {"normal form agreement", normal_form_agreement},
      {"zero-turn decision", zero_turn_decision},
      {"Lsq sqrt upper bound", lsq_upper_bound},
      {"L^(k) upper bound", lk_upper_bound},
      {"L^(k) lower bound", lk_lower_bound},
      {"U* turns and log* curve", ustar_bounds},
      {"Example 1 profiles", example1},
      {"ListBin and w_{t,k} lengths", listbin_lemmas},
      {"log^(k) product inequality", logk_product},
      {"pNotValid turns", pnotvalid_turns},
      {"log* landmarks", logstar_landmarks},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2zu: %s  %s: %s (%.2fs)\n", i + 1, v.pass ? "PASS" : "FAIL", criteria[i].first,
                v.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !v.pass;
  }
  return failures == 0 ? 0 : 1;
}

#include "turnpda/languages.hpp"

#include <algorithm>

#include "turnpda/error.hpp"
#include "turnpda/oca_builder.hpp"

namespace turnpda {

namespace {

bool is_bit(char c) { return c == '0' || c == '1'; }
bool is_letter(char c) { return c == 'a' || c == 'b'; }

/// Splits a string of the shape ({0,1}+$)+ into its blocks; nullopt otherwise.
std::optional<std::vector<std::string_view>> binary_blocks(std::string_view s) {
  std::vector<std::string_view> blocks;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '$') {
      if (i == start) return std::nullopt;
      blocks.push_back(s.substr(start, i - start));
      start = i + 1;
    } else if (!is_bit(s[i])) {
      return std::nullopt;
    }
  }
  if (blocks.empty() || start != s.size()) return std::nullopt;
  return blocks;
}

std::string bin(std::uint64_t x) {
  std::string s;
  for (; x; x >>= 1) s.push_back(static_cast<char>('0' + (x & 1)));
  std::reverse(s.begin(), s.end());
  return s;
}

void check_budget(std::size_t length, std::size_t budget) {
  if (length > budget)
    throw BudgetExceeded("witness of length " + std::to_string(length) + " exceeds budget " +
                         std::to_string(budget));
}

std::uint64_t listbin_length(std::uint64_t m) {
  std::uint64_t total = 0;
  for (unsigned len = 1; len <= 64; ++len) {
    const std::uint64_t lo = std::uint64_t{1} << (len - 1);
    if (lo > m) break;
    const std::uint64_t hi = len == 64 ? m : std::min(m, (std::uint64_t{1} << len) - 1);
    total += (hi - lo + 1) * (len + 1);
  }
  return total;
}

std::uint64_t to_u64(const BigInt& n, std::size_t budget) {
  if (n > BigInt(budget)) throw BudgetExceeded("parameter " + n.str() + " exceeds budget");
  return n.convert_to<std::uint64_t>();
}

const std::vector<std::string> kBits{"0", "1"};
const std::vector<std::string> kLetters{"a", "b"};

/// Where a ListBin violation check continues once the violation is established:
/// inside a block, or right after a block's $.
struct Found {
  std::string in_block;
  std::string after_block;
};

/// One-turn check that the block list starting at `entry` is not a prefix of a
/// list in ListBin: the first block differs from 1, some block has a leading
/// zero, or some block differs from the successor of its predecessor in length
/// or in a bit at equal distance from the right end.
void add_listbin_violation(OcaBuilder& o, const std::string& p, const std::string& entry,
                           const Found& found) {
  const std::string pre_b = p + "pre_b", pre_i = p + "pre_i", e1 = p + "e1";
  const std::string l1 = p + "len1", l0 = p + "len0", n1 = p + "next1", n0 = p + "next0";
  const std::string np = p + "pop", over = p + "over", pick = p + "pick";
  auto sel = [&](int b, int c) { return p + "sel" + std::to_string(b) + std::to_string(c); };
  auto cmp = [&](int e) { return p + "cmp" + std::to_string(e); };

  auto boundary = [&](const std::string& from) {
    o.keep(from, "0", found.in_block);
    o.keep(from, "1", pre_i);
    o.inc(from, "1", l1);
    o.keep(from, "0", sel(0, 1));
    o.keep(from, "1", sel(1, 1));
  };
  boundary(entry);
  boundary(pre_b);
  o.keep(entry, "1", e1);
  keep_all(o, e1, kBits, found.in_block);

  keep_all(o, pre_i, kBits, pre_i);
  o.keep(pre_i, "$", pre_b);
  o.keep(pre_i, "0", sel(0, 1));
  o.keep(pre_i, "1", sel(1, 1));

  o.inc(l1, "1", l1);
  o.inc(l1, "0", l0);
  o.keep(l1, "$", n1);
  o.inc(l0, "0", l0);
  o.inc(l0, "1", l0);
  o.keep(l0, "$", n0);
  o.keep(n1, "1", np);
  o.keep(n1, "0", found.in_block);
  o.dec(n0, "1", np);
  o.keep(n0, "0", found.in_block);
  for (const auto& bit : kBits) {
    o.dec(np, bit, np);
    o.if_zero(np, bit, over);
  }
  o.if_pos(np, "$", found.after_block);
  keep_all(o, over, kBits, over);
  o.keep(over, "$", found.after_block);

  for (int b = 0; b < 2; ++b)
    for (int c = 0; c < 2; ++c) {
      o.inc(sel(b, c), "1", sel(b, c));
      o.inc(sel(b, c), "0", sel(b, 0));
      o.keep(sel(b, c), "$", cmp(b ^ c));
    }
  for (int e = 0; e < 2; ++e) {
    keep_all(o, cmp(e), kBits, cmp(e));
    o.keep(cmp(e), std::to_string(1 - e), pick);
  }
  for (const auto& bit : kBits) o.dec(pick, bit, pick);
  o.if_zero(pick, "$", found.after_block);
}

/// A_eq on one block: from `start` reading a^n b^n lands in `end` with the counter back at zero.
void add_eq_block(OcaBuilder& o, const std::string& start, const std::string& up,
                  const std::string& down) {
  o.inc(start, "a", up);
  o.inc(up, "a", up);
  o.dec(up, "b", down);
  o.dec(down, "b", down);
}

}  // namespace

// ---------------------------------------------------------------- deciders

bool decide_eq(std::string_view w) {
  const std::size_t n = w.size() / 2;
  if (n == 0 || w.size() % 2) return false;
  return std::all_of(w.begin(), w.begin() + n, [](char c) { return c == 'a'; }) &&
         std::all_of(w.begin() + n, w.end(), [](char c) { return c == 'b'; });
}

bool decide_eq_star(std::string_view w) {
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == 'a') ++j;
    std::size_t k = j;
    while (k < w.size() && w[k] == 'b') ++k;
    if (!decide_eq(w.substr(i, k - i))) return false;
    i = k;
  }
  return true;
}

bool decide_eq_dollar_plus(std::string_view w) {
  if (w.empty() || w.back() != '$') return false;
  std::size_t start = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] == '$') {
      if (!decide_eq(w.substr(start, i - start))) return false;
      start = i + 1;
    }
  return true;
}

bool decide_lsq(std::string_view w) {
  std::vector<std::size_t> zeros;
  std::vector<std::string_view> letters;
  std::size_t i = 0;
  while (i < w.size()) {
    std::size_t j = i;
    while (j < w.size() && w[j] == '0') ++j;
    std::size_t k = j;
    while (k < w.size() && is_letter(w[k])) ++k;
    if (j == i || k == j) return false;
    zeros.push_back(j - i);
    letters.push_back(w.substr(j, k - j));
    i = k;
  }
  if (zeros.empty()) return false;
  for (std::size_t b = 0; b < zeros.size(); ++b)
    if (zeros[b] != b + 1) return true;
  return std::all_of(letters.begin(), letters.end(), [](std::string_view z) { return decide_eq(z); });
}

std::string gen_listbin(std::uint64_t m) {
  std::string s;
  s.reserve(listbin_length(m));
  for (std::uint64_t i = 1; i <= m; ++i) {
    s += bin(i);
    s += '$';
  }
  return s;
}

bool decide_listbin(std::string_view y) {
  const auto blocks = binary_blocks(y);
  if (!blocks) return false;
  for (std::size_t i = 0; i < blocks->size(); ++i)
    if ((*blocks)[i] != bin(i + 1)) return false;
  return true;
}

std::string last_block(std::string_view y) {
  if (y.empty() || y.back() != '$') return {};
  const auto prev = y.substr(0, y.size() - 1).rfind('$');
  const std::size_t start = prev == std::string_view::npos ? 0 : prev + 1;
  return std::string(y.substr(start, y.size() - 1 - start));
}

std::size_t count_dollars(std::string_view s) {
  return static_cast<std::size_t>(std::count(s.begin(), s.end(), '$'));
}

bool decide_ext(std::string_view w, const Decider& base) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    if (w[i] != '$' || w[i + 1] != '$') continue;
    const auto prefix = w.substr(0, i + 1);
    if (!binary_blocks(prefix)) continue;
    const auto x = w.substr(i + 2);
    if (!decide_listbin(prefix) || last_block(prefix).size() < x.size() || base(x)) return true;
  }
  return false;
}

std::optional<Conditions> lk_conditions(std::string_view w, unsigned k) {
  std::vector<std::string_view> ys;  // y_k, ..., y_1
  std::size_t pos = 0;
  for (unsigned j = 0; j < k; ++j) {
    const std::size_t start = pos;
    for (;;) {
      const std::size_t block = pos;
      while (pos < w.size() && is_bit(w[pos])) ++pos;
      if (pos == block || pos >= w.size() || w[pos] != '$') return std::nullopt;
      ++pos;
      if (pos < w.size() && w[pos] == '$') break;
    }
    ys.push_back(w.substr(start, pos - start));
    ++pos;
  }
  const auto y0 = w.substr(pos);
  if (!std::all_of(y0.begin(), y0.end(), [](char c) { return is_letter(c) || c == '$'; }))
    return std::nullopt;

  Conditions c;
  for (unsigned i = 1; i <= k; ++i) {
    const auto yi = ys[k - i];
    const auto below = i == 1 ? y0 : ys[k - i + 1];
    c.a |= !decide_listbin(yi);
    c.b |= last_block(yi).size() <= count_dollars(below);
  }
  c.c = decide_eq_dollar_plus(y0);
  return c;
}

bool decide_Lk(std::string_view w, unsigned k) {
  const auto c = lk_conditions(w, k);
  return c && c->any();
}

std::optional<UParse> u_conditions(std::string_view w) {
  std::vector<std::string_view> ys, zs;
  std::size_t pos = 0;
  while (pos < w.size()) {
    const std::size_t y = pos;
    while (pos < w.size() && (is_bit(w[pos]) || w[pos] == '$')) ++pos;
    const std::size_t z = pos;
    while (pos < w.size() && is_letter(w[pos])) ++pos;
    if (z == y || pos == z || !binary_blocks(w.substr(y, z - y))) return std::nullopt;
    ys.push_back(w.substr(y, z - y));
    zs.push_back(w.substr(z, pos - z));
  }
  UParse r{static_cast<unsigned>(ys.size()), {}};
  // ys[0] = y_k, ys[k-1] = y_1.
  for (std::size_t j = 0; j < ys.size(); ++j) {
    r.conditions.a |= !decide_listbin(ys[j]);
    if (j + 1 < ys.size()) r.conditions.b |= last_block(ys[j]).size() <= count_dollars(ys[j + 1]);
  }
  r.conditions.c = std::all_of(zs.begin(), zs.end(), [](std::string_view z) { return decide_eq(z); });
  return r;
}

bool decide_Uk(std::string_view w, unsigned k) {
  const auto r = u_conditions(w);
  return r && r->k == k && r->conditions.any();
}

bool decide_Ustar(std::string_view w) {
  const auto r = u_conditions(w);
  return r && r->conditions.any();
}

// ---------------------------------------------------------------- builders

Pda build_eq_oca() {
  PdaBuilder b;
  b.input("a");
  b.input("b");
  b.stack("A");
  b.set_bottom("Z0");
  b.set_initial("q0");
  b.add("q0", "a", "Z0", "q0", {"A", "Z0"});
  b.add("q0", "a", "A", "q0", {"A", "A"});
  b.add("q0", "b", "A", "q1", {});
  b.add("q1", "b", "A", "q1", {});
  b.add("q1", "", "Z0", "q1", {});
  return b.build();
}

Pda build_eqstar_oca() {
  PdaBuilder b;
  b.input("a");
  b.input("b");
  b.stack("A");
  b.set_bottom("Z0");
  b.set_initial("q0");
  b.add("q0", "", "Z0", "q0", {});
  b.add("q0", "a", "Z0", "q1", {"A", "Z0"});
  b.add("q1", "a", "A", "q1", {"A", "A"});
  b.add("q1", "b", "A", "q2", {});
  b.add("q2", "b", "A", "q2", {});
  b.add("q2", "a", "Z0", "q1", {"A", "Z0"});
  b.add("q2", "", "Z0", "q2", {});
  return b.build();
}

Pda build_lsq_oca() {
  OcaBuilder o({"0", "a", "b"});
  o.set_initial("start");
  // Done: a condition holds, only the block format is left to check.
  o.keep("done_x", "0", "done_x");
  keep_all(o, "done_x", kLetters, "done_z");
  keep_all(o, "done_z", kLetters, "done_z");
  o.keep("done_z", "0", "done_x");
  o.accept("done_z");

  // |x_1| >= 2.
  o.keep("start", "0", "first1");
  o.keep("first1", "0", "done_x");

  // |x_{i+1}| != |x_i| + 1 for a guessed i.
  o.keep("start", "0", "skip_x");
  o.keep("skip_x", "0", "skip_x");
  keep_all(o, "skip_x", kLetters, "skip_z");
  keep_all(o, "skip_z", kLetters, "skip_z");
  o.keep("skip_z", "0", "skip_x");
  o.inc("start", "0", "count");
  o.inc("skip_z", "0", "count");
  o.inc("count", "0", "count");
  keep_all(o, "count", kLetters, "gap");
  keep_all(o, "gap", kLetters, "gap");
  o.keep("gap", "0", "compare");
  o.dec("compare", "0", "compare");
  o.if_zero("compare", "0", "longer");
  o.keep("longer", "0", "longer");
  for (const auto& l : kLetters) {
    o.if_pos("compare", l, "done_z");
    o.keep("longer", l, "done_z");
  }

  // Every z_i in Eq.
  o.keep("start", "0", "eq_x");
  o.keep("eq_x", "0", "eq_x");
  add_eq_block(o, "eq_x", "eq_a", "eq_b");
  o.if_zero("eq_b", "0", "eq_x");
  o.accept_if_zero("eq_b");
  return o.build();
}

Pda build_listbinc_oca() {
  OcaBuilder o({"0", "1", "$"});
  o.set_initial("start");
  // Strings outside (1{0,1}*$)+.
  o.keep("start", "1", "shape_in");
  o.keep("start", "0", "shape_bad");
  o.keep("start", "$", "shape_bad");
  keep_all(o, "shape_in", kBits, "shape_in");
  o.keep("shape_in", "$", "shape_sep");
  o.keep("shape_sep", "1", "shape_in");
  o.keep("shape_sep", "0", "shape_bad");
  o.keep("shape_sep", "$", "shape_bad");
  keep_all(o, "shape_bad", {"0", "1", "$"}, "shape_bad");
  o.accept("start");
  o.accept("shape_in");
  o.accept("shape_bad");

  add_listbin_violation(o, "v:", "start", {"tail", "tail"});
  keep_all(o, "tail", {"0", "1", "$"}, "tail");
  o.accept("tail");
  return o.build();
}

Pda build_ext_oca(const Pda& m) {
  std::vector<std::string> inputs = m.input_alphabet();
  for (const char* s : {"0", "1", "$"})
    if (std::find(inputs.begin(), inputs.end(), s) == inputs.end()) inputs.emplace_back(s);
  const std::string bottom = m.stack_name(m.bottom());
  const std::string counter = m.num_stack_symbols() == 2 ? m.stack_name(1 - m.bottom()) : "A";

  OcaBuilder o(inputs, counter, bottom);
  for (const auto& s : m.stack_alphabet()) o.raw().stack(s);
  o.set_initial("start");

  for (const auto& s : inputs) o.keep("any", s, "any");
  o.accept("any");

  // Plain scan of x_1$...$x_m$.
  keep_all(o, "start", kBits, "list_in");
  keep_all(o, "list_in", kBits, "list_in");
  o.keep("list_in", "$", "list_sep");
  keep_all(o, "list_sep", kBits, "list_in");

  // (a)
  add_listbin_violation(o, "a:", "start", {"a_in", "a_sep"});
  keep_all(o, "a_in", kBits, "a_in");
  o.keep("a_in", "$", "a_sep");
  keep_all(o, "a_sep", kBits, "a_in");
  o.keep("a_sep", "$", "any");

  // (b)
  for (const auto& bit : kBits) {
    o.inc("start", bit, "b_last");
    o.inc("list_sep", bit, "b_last");
    o.inc("b_last", bit, "b_last");
  }
  o.keep("b_last", "$", "b_end");
  o.keep("b_end", "$", "b_suffix");
  for (const auto& s : inputs) {
    o.dec("b_suffix", s, "b_suffix");
    o.if_zero("b_suffix", s, "any");
  }

  // (c)
  const std::string mp = "m:";
  o.keep("list_sep", "$", mp + m.state_name(m.initial()));
  for (const auto& t : m.transitions()) {
    std::vector<std::string> push;
    for (Symbol s : t.push) push.push_back(m.stack_name(s));
    o.raw().add(mp + m.state_name(t.from), t.read == kEpsilon ? "" : m.input_name(t.read),
                m.stack_name(t.top), mp + m.state_name(t.to), push);
  }
  return o.build();
}

Pda build_Lk_oca(unsigned k) {
  OcaBuilder o({"a", "b", "0", "1", "$"});
  const std::vector<std::string> y0_symbols{"a", "b", "$"};

  // (c): y_0 in (Eq$)+.
  add_eq_block(o, "eq_start", "eq_a", "eq_b");
  o.if_zero("eq_b", "$", "eq_sep");
  o.inc("eq_sep", "a", "eq_a");
  o.accept_if_zero("eq_sep");
  if (k == 0) {
    o.set_initial("eq_start");
    return o.build();
  }

  auto seg = [](const std::string& chain, const char* part, unsigned j) {
    return chain + "_" + part + std::to_string(j);
  };
  // Segment scanners: `plain` before any choice, `done` after a condition holds.
  for (const std::string chain : {"plain", "done"}) {
    for (unsigned j = k; j >= 1; --j) {
      keep_all(o, seg(chain, "start", j), kBits, seg(chain, "in", j));
      keep_all(o, seg(chain, "in", j), kBits, seg(chain, "in", j));
      o.keep(seg(chain, "in", j), "$", seg(chain, "sep", j));
      keep_all(o, seg(chain, "sep", j), kBits, seg(chain, "in", j));
    }
    for (unsigned j = k; j >= 2; --j) o.keep(seg(chain, "sep", j), "$", seg(chain, "start", j - 1));
  }
  o.set_initial(seg("plain", "start", k));
  o.keep(seg("plain", "sep", 1), "$", "eq_start");
  o.keep(seg("done", "sep", 1), "$", "done_y0");
  keep_all(o, "done_y0", y0_symbols, "done_y0");
  o.accept("done_y0");

  for (unsigned i = k; i >= 1; --i) {
    const std::string tag = std::to_string(i);
    // (a) y_i is not in ListBin.
    o.keep(seg("plain", "start", i), "", "a" + tag + ":entry");
    add_listbin_violation(o, "a" + tag + ":", "a" + tag + ":entry",
                          {seg("done", "in", i), seg("done", "sep", i)});

    // (b) |last(y_i)| <= occ_$(y_{i-1}).
    const std::string count = "b" + tag + ":last", end = "b" + tag + ":end";
    for (const auto& bit : kBits) {
      o.inc(seg("plain", "start", i), bit, count);
      o.inc(seg("plain", "sep", i), bit, count);
      o.inc(count, bit, count);
    }
    o.keep(count, "$", end);
    if (i == 1) {
      const std::string y0 = "b1:y0";
      o.keep(end, "$", y0);
      keep_all(o, y0, kLetters, y0);
      o.dec_or_stay(y0, "$", y0);
      o.accept_if_zero(y0);
    } else {
      const std::string in = "b" + tag + ":in", sep = "b" + tag + ":sep";
      o.keep(end, "$", "b" + tag + ":start");
      keep_all(o, "b" + tag + ":start", kBits, in);
      keep_all(o, in, kBits, in);
      o.dec_or_stay(in, "$", sep);
      keep_all(o, sep, kBits, in);
      o.if_zero(sep, "$", i == 2 ? "done_y0" : seg("done", "start", i - 2));
    }
  }
  return o.build();
}

Pda build_Ustar_oca() {
  OcaBuilder o({"a", "b", "0", "1", "$"});
  o.set_initial("start");
  o.accept_if_zero("start");

  // Scanners: `plain` before a choice, `done` once a condition holds.
  for (const std::string chain : {"plain", "done"}) {
    keep_all(o, chain + "_in", kBits, chain + "_in");
    o.keep(chain + "_in", "$", chain + "_sep");
    keep_all(o, chain + "_sep", kBits, chain + "_in");
    keep_all(o, chain + "_sep", kLetters, chain + "_z");
    keep_all(o, chain + "_z", kLetters, chain + "_z");
    keep_all(o, chain + "_z", kBits, chain + "_in");
  }
  keep_all(o, "start", kBits, "plain_in");
  o.accept("done_z");

  // (a) some y_i is not in ListBin.
  o.keep("start", "", "a:entry");
  o.keep("plain_z", "", "a:entry");
  add_listbin_violation(o, "a:", "a:entry", {"done_in", "done_sep"});

  // (b) |last(y_i)| <= occ_$(y_{i-1}) for a y_i followed by another segment.
  for (const auto& bit : kBits) {
    for (const char* from : {"start", "plain_sep", "plain_z"}) o.inc(from, bit, "b:last");
    o.inc("b:last", bit, "b:last");
  }
  o.keep("b:last", "$", "b:end");
  keep_all(o, "b:end", kLetters, "b:z");
  keep_all(o, "b:z", kLetters, "b:z");
  keep_all(o, "b:z", kBits, "b:in");
  keep_all(o, "b:in", kBits, "b:in");
  o.dec_or_stay("b:in", "$", "b:sep");
  keep_all(o, "b:sep", kBits, "b:in");
  for (const auto& l : kLetters) o.if_zero("b:sep", l, "done_z");

  // (c) every z_i in Eq.
  keep_all(o, "start", kBits, "c:in");
  keep_all(o, "c:in", kBits, "c:in");
  o.keep("c:in", "$", "c:sep");
  keep_all(o, "c:sep", kBits, "c:in");
  add_eq_block(o, "c:sep", "c:a", "c:b");
  for (const auto& bit : kBits) o.if_zero("c:b", bit, "c:in");
  o.accept_if_zero("c:b");
  return o.build();
}

// ---------------------------------------------------------------- witnesses

BigInt gen_ntk(unsigned t, unsigned k, std::size_t bit_budget) {
  BigInt n = t;
  for (unsigned i = 0; i < k; ++i) {
    if (n >= BigInt(bit_budget)) throw BudgetExceeded("n_{t,k} exceeds the bit budget");
    n = BigInt(1) << n.convert_to<unsigned>();
  }
  return n;
}

std::string gen_ytk(unsigned t, unsigned k, std::size_t budget) {
  const std::uint64_t n = to_u64(gen_ntk(t, k), budget);
  check_budget(listbin_length(n), budget);
  return gen_listbin(n);
}

std::string gen_wtk(unsigned t, unsigned k, std::size_t budget) {
  std::string w;
  for (unsigned j = k; j >= 1; --j) {
    w += gen_ytk(t, j, budget);
    w += '$';
    check_budget(w.size(), budget);
  }
  return w;
}

std::string gen_lb_witness_Lk(unsigned t, unsigned k, std::uint64_t N, std::size_t budget) {
  std::string w = gen_wtk(t, k, budget);
  const std::uint64_t np = N * (w.size() + t + 1);
  check_budget(w.size() + t * (2 * np + 1), budget);
  for (unsigned i = 0; i < t; ++i) {
    w.append(np, 'a');
    w.append(np, 'b');
    w += '$';
  }
  return w;
}

std::string gen_u_block(unsigned i, std::size_t budget) {
  if (i == 0) throw Error("gen_u_block: i must be positive");
  const std::uint64_t m = to_u64(tetration(2, i - 1), budget);
  check_budget(listbin_length(m), budget);
  return gen_listbin(m);
}

std::string gen_u_with(unsigned k, std::string_view z, std::size_t budget) {
  std::string u;
  for (unsigned i = k; i >= 1; --i) {
    u += gen_u_block(i, budget);
    u += z;
    check_budget(u.size(), budget);
  }
  return u;
}

std::string gen_uk(unsigned k, std::uint64_t N, std::size_t budget) {
  if (k == 0) return {};
  const std::uint64_t nk = N * k * gen_u_block(k, budget).size();
  check_budget(2 * nk, budget);
  return gen_u_with(k, std::string(nk, 'a') + std::string(nk, 'b'), budget);
}

std::string gen_eqk(unsigned k, std::uint64_t n) {
  std::string block = std::string(n, 'a') + std::string(n, 'b');
  std::string w;
  for (unsigned i = 0; i < k; ++i) w += block;
  return w;
}

std::string gen_lsq_witness(unsigned m, std::uint64_t n) {
  std::string w;
  for (unsigned i = 1; i <= m; ++i) {
    w.append(i, '0');
    w.append(n, 'a');
    w.append(n, 'b');
  }
  return w;
}

}  // namespace turnpda

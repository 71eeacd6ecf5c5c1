#include "turnpda/samplers.hpp"

#include <algorithm>
#include <charconv>
#include <random>
#include <set>

#include "turnpda/error.hpp"
#include "turnpda/languages.hpp"
#include "turnpda/tm.hpp"

namespace turnpda {

namespace {

using Rng = std::mt19937_64;

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Random composition of `total` into `parts` positive summands.
std::vector<std::size_t> composition(Rng& rng, std::size_t total, std::size_t parts) {
  std::vector<std::size_t> cuts;
  std::set<std::size_t> chosen;
  while (chosen.size() + 1 < parts) chosen.insert(uniform(rng, 1, total - 1));
  std::size_t prev = 0;
  for (auto c : chosen) {
    cuts.push_back(c - prev);
    prev = c;
  }
  cuts.push_back(total - prev);
  return cuts;
}

std::string eq(std::size_t j) { return std::string(j, 'a') + std::string(j, 'b'); }

/// Member of (Eq$)+ of length r, or of Eq+ when `dollar` is false; empty if impossible.
std::string eq_blocks(Rng& rng, std::size_t r, bool dollar) {
  const std::size_t unit = dollar ? 3 : 2;
  if (r < unit) return {};
  std::vector<std::size_t> fits;
  for (std::size_t t = 1; t * unit <= r; ++t)
    if ((r - t * (dollar ? 1 : 0)) % 2 == 0) fits.push_back(t);
  if (fits.empty()) return {};
  const std::size_t t = fits[uniform(rng, 0, fits.size() - 1)];
  std::string s;
  for (auto j : composition(rng, (r - t * (dollar ? 1 : 0)) / 2, t)) {
    s += eq(j);
    if (dollar) s += '$';
  }
  return s;
}

std::string random_over(Rng& rng, std::string_view alphabet, std::size_t n) {
  std::string s(n, ' ');
  for (auto& c : s) c = alphabet[uniform(rng, 0, alphabet.size() - 1)];
  return s;
}

void flip_bit(Rng& rng, std::string& s) {
  std::vector<std::size_t> bits;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] == '0' || s[i] == '1') bits.push_back(i);
  if (bits.empty()) return;
  auto& c = s[bits[uniform(rng, 0, bits.size() - 1)]];
  c = c == '0' ? '1' : '0';
}

unsigned parse_level(std::string_view lang) {
  unsigned k = 0;
  const auto digits = lang.substr(3);
  const auto [p, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
  if (ec != std::errc() || p != digits.data() + digits.size() || k == 0)
    throw Error("bad language level in '" + std::string(lang) + "'");
  return k;
}

std::string candidate(std::string_view lang, std::size_t n, Rng& rng) {
  if (lang == "Eq") return n % 2 == 0 && n > 0 ? eq(n / 2) : std::string();
  if (lang == "EqStar") {
    if (n % 2) return {};
    std::string s;
    if (n == 0) return s;
    for (auto j : composition(rng, n / 2, uniform(rng, 1, n / 2))) s += eq(j);
    return s;
  }
  if (lang == "Lsq") {
    std::vector<std::size_t> ms;
    for (std::size_t m = 1; m * (m + 1) / 2 + 2 * m <= n; ++m)
      if ((n - m * (m + 1) / 2) % 2 == 0) ms.push_back(m);
    if (ms.empty() || uniform(rng, 0, 4) == 0) return random_over(rng, "0ab", n);
    const std::size_t m = ms[uniform(rng, 0, ms.size() - 1)];
    std::string s;
    const auto js = composition(rng, (n - m * (m + 1) / 2) / 2, m);
    for (std::size_t i = 1; i <= m; ++i) s += std::string(i, '0') + eq(js[i - 1]);
    return s;
  }
  if (lang == "ListBinC") {
    if (uniform(rng, 0, 1) == 0) return random_over(rng, "01$", n);
    std::string s = gen_listbin(uniform(rng, 1, std::max<std::size_t>(1, n)));
    s.resize(n, '$');
    flip_bit(rng, s);
    return s;
  }
  if (lang.starts_with("Lk:")) {
    const unsigned k = parse_level(lang);
    std::string prefix;
    for (unsigned i = 0; i < k; ++i) prefix += gen_listbin(uniform(rng, 1, std::max<std::size_t>(1, n / (3 * k)))) + "$";
    if (uniform(rng, 0, 4) == 0) flip_bit(rng, prefix);
    if (prefix.size() > n) return {};
    const std::size_t r = n - prefix.size();
    std::string y0 = uniform(rng, 0, 3) ? eq_blocks(rng, r, true) : std::string();
    if (y0.size() != r) y0 = random_over(rng, "ab$", r);
    return prefix + y0;
  }
  if (lang == "Ustar") {
    const std::size_t k = uniform(rng, 1, 4);
    std::vector<std::string> ys;
    std::size_t used = 0;
    for (std::size_t i = 0; i < k; ++i) {
      ys.push_back(gen_listbin(uniform(rng, 1, std::max<std::size_t>(1, n / (4 * k)))));
      if (uniform(rng, 0, 5) == 0) flip_bit(rng, ys.back());
      used += ys.back().size();
    }
    if (used + 2 * k > n) return {};
    const std::size_t r = n - used;
    std::vector<std::string> zs;
    if (r % 2 == 0 && uniform(rng, 0, 3)) {
      for (auto j : composition(rng, r / 2, k)) zs.push_back(eq(j));
    } else {
      for (auto len : composition(rng, r, k)) zs.push_back(random_over(rng, "ab", len));
    }
    std::string s;
    for (std::size_t i = 0; i < k; ++i) s += ys[i] + zs[i];
    return s;
  }
  throw Error("unknown language '" + std::string(lang) + "'");
}

}  // namespace

bool decide_language(std::string_view lang, std::string_view w) {
  if (lang == "Eq") return decide_eq(w);
  if (lang == "EqStar") return decide_eq_star(w);
  if (lang == "Lsq") return decide_lsq(w);
  if (lang == "ListBinC") return !decide_listbin(w);
  if (lang.starts_with("Lk:")) return decide_Lk(w, parse_level(lang));
  if (lang == "Ustar") return decide_Ustar(w);
  throw Error("unknown language '" + std::string(lang) + "'");
}

Pda build_language(std::string_view lang) {
  if (lang == "Eq") return build_eq_oca();
  if (lang == "EqStar") return build_eqstar_oca();
  if (lang == "Lsq") return build_lsq_oca();
  if (lang == "ListBinC") return build_listbinc_oca();
  if (lang.starts_with("Lk:")) return build_Lk_oca(parse_level(lang));
  if (lang == "Ustar") return build_Ustar_oca();
  throw Error("unknown language '" + std::string(lang) + "'");
}

std::vector<std::string> sample_language(std::string_view lang, std::size_t n, std::size_t count,
                                         std::uint64_t seed) {
  Rng rng(seed * 0x9E3779B97F4A7C15ULL + n);
  std::vector<std::string> out;
  std::set<std::string> seen;
  for (std::size_t attempt = 0; attempt < 64 * count && out.size() < count; ++attempt) {
    auto s = candidate(lang, n, rng);
    if (s.size() != n || seen.contains(s) || !decide_language(lang, s)) continue;
    seen.insert(s);
    out.push_back(std::move(s));
  }
  return out;
}

Sampler language_sampler(std::string lang, const Pda& pda, std::size_t count, std::uint64_t seed,
                         std::size_t step) {
  decide_language(lang, "");
  return [lang = std::move(lang), &pda, count, seed, step](std::size_t n) {
    std::vector<Word> words;
    if (step > 1 && n % step) return words;
    for (const auto& s : sample_language(lang, n, count, seed)) words.push_back(to_word(pda, chars(s)));
    return words;
  };
}

}  // namespace turnpda

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "turnpda/automaton.hpp"
#include "turnpda/mathkit.hpp"

namespace turnpda {

// Deciders. Inputs are plain strings with one character per symbol.

bool decide_eq(std::string_view w);
bool decide_eq_star(std::string_view w);
/// Membership in (Eq$)+.
bool decide_eq_dollar_plus(std::string_view w);
bool decide_lsq(std::string_view w);

bool decide_listbin(std::string_view y);
std::string gen_listbin(std::uint64_t m);
/// Rightmost binary block of a list x_1$...$x_m$ (empty if there is none).
std::string last_block(std::string_view y);
std::size_t count_dollars(std::string_view s);

/// Which of the conditions (a), (b), (c) a string satisfies.
struct Conditions {
  bool a = false;
  bool b = false;
  bool c = false;

  bool any() const { return a || b || c; }
  bool operator==(const Conditions&) const = default;
};

using Decider = std::function<bool(std::string_view)>;

/// True iff some split x_1$...$x_m$$x satisfies (a), (b) or (c) with base language `base`.
bool decide_ext(std::string_view w, const Decider& base);

/// Condition profile of w = y_k$...$y_1$y_0; nullopt when w does not have that shape.
std::optional<Conditions> lk_conditions(std::string_view w, unsigned k);
bool decide_Lk(std::string_view w, unsigned k);

/// Condition profile of w = y_k z_k ... y_1 z_1, where k is the number of
/// binary segments; nullopt when w does not have that shape.
struct UParse {
  unsigned k;
  Conditions conditions;
};
std::optional<UParse> u_conditions(std::string_view w);
bool decide_Uk(std::string_view w, unsigned k);
bool decide_Ustar(std::string_view w);

// Builders. All of them emit one-counter automata.

Pda build_eq_oca();
Pda build_eqstar_oca();
Pda build_lsq_oca();
Pda build_listbinc_oca();
/// Extension of the language of `m` (whose input alphabet is merged with {0,1,$}).
Pda build_ext_oca(const Pda& m);
Pda build_Lk_oca(unsigned k);
Pda build_Ustar_oca();

// Witness strings.

inline constexpr std::size_t kDefaultLengthBudget = 50'000'000;

/// n_{t,0} = t, n_{t,k} = 2^(n_{t,k-1}).
BigInt gen_ntk(unsigned t, unsigned k, std::size_t bit_budget = kDefaultBitBudget);
std::string gen_ytk(unsigned t, unsigned k, std::size_t budget = kDefaultLengthBudget);
std::string gen_wtk(unsigned t, unsigned k, std::size_t budget = kDefaultLengthBudget);
/// w_{t,k} (a^N' b^N' $)^t with N' = N (|w_{t,k}| + t + 1).
std::string gen_lb_witness_Lk(unsigned t, unsigned k, std::uint64_t N,
                              std::size_t budget = kDefaultLengthBudget);
/// y_i = bin(1)$...$bin(2^^(i-1))$.
std::string gen_u_block(unsigned i, std::size_t budget = kDefaultLengthBudget);
/// y_k z ... y_1 z with every z = a^{N_k} b^{N_k}, N_k = N k |y_k|.
std::string gen_uk(unsigned k, std::uint64_t N, std::size_t budget = kDefaultLengthBudget);
/// y_k z_k ... y_1 z_1 with all z_i = z.
std::string gen_u_with(unsigned k, std::string_view z, std::size_t budget = kDefaultLengthBudget);
/// (a^n b^n)^k
std::string gen_eqk(unsigned k, std::uint64_t n);
/// 0^1 z 0^2 z ... 0^m z with z = a^n b^n.
std::string gen_lsq_witness(unsigned m, std::uint64_t n);

}  // namespace turnpda

#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace turnpda {

using BigInt = boost::multiprecision::cpp_int;

/// Base-2 logarithm clipped to a nonnegative range: lg(n) = log2(n) for n >= 1, else 0.
double lg(double x);
double lg(const BigInt& n);

/// k-fold composition of lg; logk(0, n) = n.
double logk(unsigned k, double n);
double logk(unsigned k, const BigInt& n);

/// Iterated logarithm: the least k with logk(k, n) <= 1.
unsigned logstar(const BigInt& n);
inline unsigned logstar(std::uint64_t n) { return logstar(BigInt(n)); }

inline constexpr std::size_t kDefaultBitBudget = 1'000'000;

/// x^^k (x raised to itself k times). Throws BudgetExceeded when the result
/// would need more than `bit_budget` bits.
BigInt tetration(unsigned x, unsigned k, std::size_t bit_budget = kDefaultBitBudget);

/// Number of bits of bin(n), i.e. floor(lg n) + 1 for n > 0.
std::size_t bit_length(const BigInt& n);

/// Bound functions used when comparing empirical turn curves.
struct BoundFn {
  enum class Kind { Identity, Sqrt, CubeRoot, LogK, LogStar, Linear };

  Kind kind = Kind::Identity;
  unsigned k = 0;       // LogK only
  double slope = 1.0;   // Linear only

  /// Plain value of the function at n.
  double evaluate(std::uint64_t n) const;
  /// Envelope used for curve comparison. LogK is floored at 1 (max(1, logk)),
  /// Sqrt is the square-root envelope ceil(sqrt(2n)) + 1.
  double envelope(std::uint64_t n) const;

  std::string name() const;
  /// Parses "identity", "linear[:slope]", "sqrt", "cuberoot", "logk:<k>", "logstar".
  static BoundFn parse(std::string_view text);

  static BoundFn logk_of(unsigned k) { return {Kind::LogK, k, 1.0}; }
  static BoundFn logstar_fn() { return {Kind::LogStar, 0, 1.0}; }
};

}  // namespace turnpda

#include "turnpda/mathkit.hpp"

#include <cmath>
#include <sstream>

#include "turnpda/error.hpp"

namespace turnpda {

double lg(double x) { return x >= 1.0 ? std::log2(x) : 0.0; }

double lg(const BigInt& n) {
  if (n < 1) return 0.0;
  const std::size_t msb = boost::multiprecision::msb(n);
  if (msb < 53) return std::log2(n.convert_to<double>());
  // Keep the top 53 bits as mantissa: lg(n) = shift + log2(n >> shift).
  const std::size_t shift = msb - 52;
  const BigInt top = n >> shift;
  return static_cast<double>(shift) + std::log2(top.convert_to<double>());
}

double logk(unsigned k, double n) {
  for (unsigned i = 0; i < k; ++i) n = lg(n);
  return n;
}

double logk(unsigned k, const BigInt& n) {
  if (k == 0) return n.convert_to<double>();
  return logk(k - 1, lg(n));
}

unsigned logstar(const BigInt& n) {
  // n <= 2^^k  iff  bit_length(n - 1) <= 2^^(k-1), exact on integers.
  if (n <= 1) return 0;
  return 1 + logstar(BigInt(bit_length(n - 1)));
}

std::size_t bit_length(const BigInt& n) {
  if (n <= 0) return 0;
  return boost::multiprecision::msb(n) + 1;
}

BigInt tetration(unsigned x, unsigned k, std::size_t bit_budget) {
  if (x == 0) throw Error("tetration: base must be positive");
  BigInt value = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (x == 1) return 1;
    // bits(x^v) ~ v * log2(x)
    const double bits = value.convert_to<double>() * std::log2(static_cast<double>(x));
    if (bits > static_cast<double>(bit_budget))
      throw BudgetExceeded("tetration: result exceeds bit budget");
    const unsigned exponent = value.convert_to<unsigned>();
    value = boost::multiprecision::pow(BigInt(x), exponent);
  }
  return value;
}

double BoundFn::evaluate(std::uint64_t n) const {
  const double x = static_cast<double>(n);
  switch (kind) {
    case Kind::Identity: return x;
    case Kind::Linear: return slope * x;
    case Kind::Sqrt: return std::sqrt(x);
    case Kind::CubeRoot: return std::cbrt(x);
    case Kind::LogK: return logk(k, x);
    case Kind::LogStar: return static_cast<double>(logstar(n));
  }
  return x;
}

double BoundFn::envelope(std::uint64_t n) const {
  switch (kind) {
    case Kind::LogK: return std::max(1.0, evaluate(n));
    case Kind::Sqrt: return std::ceil(std::sqrt(2.0 * static_cast<double>(n))) + 1.0;
    default: return evaluate(n);
  }
}

std::string BoundFn::name() const {
  switch (kind) {
    case Kind::Identity: return "identity";
    case Kind::Linear: {
      std::ostringstream os;
      os << "linear";
      if (slope != 1.0) os << ':' << slope;
      return os.str();
    }
    case Kind::Sqrt: return "sqrt";
    case Kind::CubeRoot: return "cuberoot";
    case Kind::LogK: return "logk:" + std::to_string(k);
    case Kind::LogStar: return "logstar";
  }
  return "?";
}

BoundFn BoundFn::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string head(text.substr(0, colon));
  const std::string arg = colon == std::string_view::npos ? "" : std::string(text.substr(colon + 1));
  auto bad = [&] { return Error("unknown bound function '" + std::string(text) + "'"); };
  try {
    if (head == "identity" && arg.empty()) return {Kind::Identity, 0, 1.0};
    if (head == "sqrt" && arg.empty()) return {Kind::Sqrt, 0, 1.0};
    if (head == "cuberoot" && arg.empty()) return {Kind::CubeRoot, 0, 1.0};
    if (head == "logstar" && arg.empty()) return {Kind::LogStar, 0, 1.0};
    if (head == "linear") return {Kind::Linear, 0, arg.empty() ? 1.0 : std::stod(arg)};
    if (head == "logk" && !arg.empty()) {
      const int k = std::stoi(arg);
      if (k < 0) throw bad();
      return {Kind::LogK, static_cast<unsigned>(k), 1.0};
    }
  } catch (const std::logic_error&) {
    throw bad();
  }
  throw bad();
}

}  // namespace turnpda

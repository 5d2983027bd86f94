#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>

namespace tint {

/// Hard cap on the number of ring variables, including auxiliary
/// elimination variables.
inline constexpr std::size_t kMaxVars = 8;

/// Exponent vector. Slots beyond the ring's variable count are always zero,
/// so comparisons and hashing can run over the full array.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::span<const std::uint32_t> exponents);

  std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
  std::uint64_t degree() const { return degree_; }
  void set(std::size_t i, std::uint32_t value);

  bool is_one() const { return degree_ == 0; }
  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  /// Exact quotient; the divisor must divide this monomial.
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  /// Raises every exponent to k times itself; throws on overflow.
  Monomial scaled(std::uint64_t k) const;

  bool operator==(const Monomial& other) const { return exps_ == other.exps_; }

  const std::array<std::uint32_t, kMaxVars>& exponents() const { return exps_; }

 private:
  std::array<std::uint32_t, kMaxVars> exps_{};
  std::uint64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (std::uint32_t e : m.exponents()) {
      h ^= e;
      h *= 1099511628211ull;
    }
    return h;
  }
};

enum class OrderKind { Lex, GRevLex, Block };

/// Total monomial order. Block(k) compares the first k variables by grevlex
/// and breaks ties with grevlex on the rest, so it eliminates the first block.
struct MonomialOrder {
  OrderKind kind = OrderKind::GRevLex;
  std::size_t block = 0;

  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder grevlex() { return {OrderKind::GRevLex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {OrderKind::Block, k}; }

  /// Negative, zero or positive as a < b, a == b, a > b.
  int compare(const Monomial& a, const Monomial& b, std::size_t nvars) const;

  bool operator==(const MonomialOrder&) const = default;
};

}  // namespace tint

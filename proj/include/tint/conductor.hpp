#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tint/ideal.hpp"
#include "tint/ring.hpp"

namespace tint {

enum class ConductorMethod { StanleyReisner, Semigroup, Supplied };

/// "stanley_reisner", "semigroup" or "supplied"; throws PreconditionError
/// otherwise.
ConductorMethod parse_conductor_method(const std::string& name);
std::string to_string(ConductorMethod m);

/// Numerical semigroup data for generators with gcd 1.
struct SemigroupData {
  std::vector<std::uint32_t> generators;
  std::vector<std::uint32_t> gaps;
  /// Largest gap, -1 when there are none.
  std::int64_t frobenius_number = -1;
  /// frobenius_number + 1.
  std::uint32_t conductor_exponent = 0;

  bool contains(std::uint64_t m) const;
};

SemigroupData analyze_semigroup(const std::vector<std::uint32_t>& generators);

/// A monomial x^k with sum k_i a_i = m, or nullopt when m is not in the
/// semigroup.
std::optional<Monomial> semigroup_monomial(std::uint64_t m, const std::vector<std::uint32_t>& a);

/// Throws UnsupportedInputError unless R declares semigroup exponents, one
/// per variable, and I is the kernel of x_i -> t^{a_i}.
SemigroupData validate_semigroup_ring(const RingPresentation& ring);

/// The R-ideal of all t^m with m >= m0 in the semigroup.
Ideal semigroup_tail_ideal(const RingPresentation& ring, const SemigroupData& sg,
                           std::uint64_t m0);

/// sum_i ann(p_i) + I.
Ideal sum_of_annihilators(const RingPresentation& ring);

/// The method a ring supports without extra input, if any.
std::optional<ConductorMethod> default_conductor_method(const RingPresentation& ring);

Ideal conductor(const RingPresentation& ring, ConductorMethod method,
                const std::optional<Ideal>& supplied = std::nullopt);

}  // namespace tint

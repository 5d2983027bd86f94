#pragma once

#include <optional>
#include <vector>

#include "tint/conductor.hpp"
#include "tint/interior.hpp"
#include "tint/report.hpp"
#include "tint/ring.hpp"

namespace tint {

/// tau_b(R); throws NotStabilizedError when the window is not reached.
Ideal stable_big_test_ideal(const RingPresentation& ring, unsigned e_max = kDefaultEMax,
                            const std::optional<Polynomial>& c = std::nullopt);

struct ChainTrace {
  std::vector<Ideal> steps;
  Ideal fixed_point;
  bool stabilized = false;
  /// Every step contains the next.
  bool descending = true;
};

/// N, C+N, C+(C+N), ... with C+ N = sum_{e=1}^{e_cap} C_e(N).
ChainTrace blickle_chain_down(const Ideal& n, const RingPresentation& ring, unsigned e_cap,
                              unsigned max_iterations = 16);

struct Compatibility {
  bool compatible = false;
  bool fixed = false;
};

Compatibility compatibility_check(const Ideal& n, const RingPresentation& ring, unsigned e_cap);

/// sum_i lift((a_i + p_i)/p_i)_* = tau_b(R).
CheckRecord minimal_primes_decomposition_check(const RingPresentation& ring,
                                               unsigned e_max = kDefaultEMax,
                                               const std::optional<Polynomial>& c = std::nullopt);

/// tau_b ⊆ c, c ⊆ sum ann p_i, and tau_b = c.
std::vector<CheckRecord> conductor_identities_check(
    const RingPresentation& ring, const std::optional<Ideal>& supplied = std::nullopt,
    unsigned e_max = kDefaultEMax);

/// sum_e Phi_e^S(c_S^[q]) ∩ R = tau_b(R) for a semigroup ring with S = F_p[t].
CheckRecord finite_transform_check(const RingPresentation& ring, unsigned e_max = kDefaultEMax);

/// Interior of R over R against the interior of (I : √I)/I over R_red.
CheckRecord nilradical_reduction_check(const RingPresentation& ring,
                                       unsigned e_max = kDefaultEMax,
                                       unsigned window = kDefaultWindow);

/// R_f = R[T]/(Tf - 1) and the variable map S -> S[T].
struct Localization {
  RingPresentation ring;
  std::vector<std::size_t> var_map;
};

Localization localize(const RingPresentation& ring, const Polynomial& f);

/// tau_b(R) R_f = tau_b(R_f).
CheckRecord localization_commutes_check(const RingPresentation& ring, const Polynomial& f,
                                        unsigned e_max = kDefaultEMax);

}  // namespace tint

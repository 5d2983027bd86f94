#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "tint/ideal.hpp"
#include "tint/ring.hpp"

namespace tint {

inline constexpr unsigned kDefaultEMax = 4;
inline constexpr unsigned kDefaultWindow = 2;

struct InteriorQuery {
  RingPresentation ring;
  /// K ⊆ R by generators; nullopt means K = R.
  std::optional<Ideal> module_ideal;
  Polynomial test_element;
  unsigned e_start = 0;
  unsigned e_max = kDefaultEMax;
  unsigned window = kDefaultWindow;
};

struct TauResult {
  Ideal ideal;
  /// (e, P_e) with P_e = sum of the terms e_start..e, plus I.
  std::vector<std::pair<unsigned, Ideal>> partial_sums;
  /// The last index of the first run of `window` equal partial sums.
  std::optional<unsigned> stabilized_at;
  Polynomial certificate;

  bool stabilized() const { return stabilized_at.has_value(); }
};

/// Partial sums base + term(e_start) + ... with the window rule, stopping
/// early once the window is met.
TauResult accumulate_terms(const RingPtr& ring, const Ideal& base,
                           const std::function<Ideal(unsigned)>& term, unsigned e_start,
                           unsigned e_max, unsigned window, const Polynomial& certificate);

/// The degree-e summand: c K' for e = 0, Phi_e(c * multipliers(K, e))
/// otherwise. Does not include I.
Ideal interior_term(const InteriorQuery& q, unsigned e);

/// sum_{e=e0}^{e1} of the terms, plus I.
Ideal interior_chunk(const InteriorQuery& q, unsigned e0, unsigned e1);

/// M_*[c, p^e_start] with stabilization detection.
TauResult tight_interior(const InteriorQuery& q);

/// tau_b(R) = R_*. c defaults to the declared test element, then to
/// find_test_element.
TauResult big_test_ideal(const RingPresentation& ring,
                         const std::optional<Polynomial>& c = std::nullopt,
                         unsigned e_max = kDefaultEMax, unsigned window = kDefaultWindow);

/// An element of R° at which R becomes regular, from the Jacobian minors.
Polynomial find_test_element(const RingPresentation& ring);

bool is_test_element(const Polynomial& c, const RingPresentation& ring,
                     unsigned e_max = kDefaultEMax);
bool is_strongly_f_regular(const RingPresentation& ring, unsigned e_max = kDefaultEMax);

/// tight_interior(...).ideal; throws NotStabilizedError when no window of
/// equal sums occurs by e_max.
Ideal stable_interior(const InteriorQuery& q);

}  // namespace tint

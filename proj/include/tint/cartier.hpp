#pragma once

#include <map>
#include <optional>
#include <vector>

#include "tint/ideal.hpp"
#include "tint/ring.hpp"

namespace tint {

/// f = sum_a components[a]^(p^e) * x^a with a in [0, p^e - 1]^n.
struct PeDecomposition {
  unsigned e = 0;
  std::map<std::vector<std::uint32_t>, Polynomial> components;
};

PeDecomposition pe_components(const Polynomial& f, unsigned e);
Polynomial reassemble(const PeDecomposition& d, const RingPtr& ring);

/// The trace generator of Hom_S(^eS, S): the component at a = (q-1, ..., q-1).
Polynomial cartier_trace(const Polynomial& f, unsigned e);

/// Phi_e(K), the ideal spanned by Phi_e of all elements of K; generated by
/// every p^e-component of every generator.
Ideal cartier_root(const Ideal& k, unsigned e);

/// The map ^eS -> S, s -> Phi_e(u s).
struct CartierMapSpec {
  unsigned e = 1;
  Polynomial premultiplier;

  Polynomial apply(const Polynomial& s) const { return cartier_trace(premultiplier * s, e); }
};

/// (I^[q] : I) in the ambient ring, q = p^e.
Ideal fedder_colon(const RingPresentation& ring, unsigned e);

/// C_e(J) = Phi_e((I^[q] : I) J') + I, J' = J + I.
Ideal cartier_image(const Ideal& j, unsigned e, const RingPresentation& ring);

/// (I^[q] : I) ∩ K'^[q], the premultipliers of maps ^eR -> K.
Ideal hom_into_ideal_multipliers(const Ideal& k, unsigned e, const RingPresentation& ring);

/// Fedder's criterion at a monomial maximal ideal m (default: all variables).
bool is_f_pure_fedder(const RingPresentation& ring, const std::optional<Ideal>& m = std::nullopt);

}  // namespace tint

#pragma once

#include <span>
#include <vector>

#include "tint/polynomial.hpp"

namespace tint {

/// Reduced Gröbner basis, monic, sorted descending by leading monomial.
/// When cofactors were requested, basis[i] = sum_j cofactors[i][j] * gens[j]
/// exactly, indexed against the generator list passed in.
struct TrackedBasis {
  std::vector<Polynomial> basis;
  std::vector<std::vector<Polynomial>> cofactors;
};

TrackedBasis groebner_basis(const RingPtr& ring, std::span<const Polynomial> gens,
                            bool track_cofactors);

std::vector<Polynomial> reduced_groebner_basis(const RingPtr& ring,
                                               std::span<const Polynomial> gens);

struct Division {
  Polynomial remainder;
  std::vector<Polynomial> quotients;  // one per divisor
};

/// Multivariate division: f = sum quotients[i] * divisors[i] + remainder,
/// no term of the remainder divisible by a leading monomial of a divisor.
Division divide(const Polynomial& f, std::span<const Polynomial> divisors);

/// Remainder of full reduction; for a Gröbner basis this is the normal form.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors);

}  // namespace tint

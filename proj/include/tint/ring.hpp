#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tint/ideal.hpp"

namespace tint {

/// R = F_p[vars]/I. Minimal primes and semigroup exponents are optional
/// extra data supplied by the ring spec.
class RingPresentation {
 public:
  RingPresentation(RingPtr ambient, std::vector<Polynomial> defining,
                   std::optional<std::vector<Ideal>> minimal_primes = std::nullopt,
                   std::vector<std::uint32_t> semigroup = {},
                   std::optional<bool> reduced = std::nullopt,
                   std::optional<Polynomial> test_element = std::nullopt, std::string name = "");

  const RingPtr& ambient() const { return ambient_; }
  const Ideal& defining_ideal() const { return defining_; }
  std::uint32_t characteristic() const { return ambient_->characteristic(); }
  std::size_t nvars() const { return ambient_->nvars(); }
  const std::string& name() const { return name_; }

  bool reduced() const { return reduced_; }
  bool is_polynomial_ring() const { return defining_.is_zero(); }
  const std::vector<std::uint32_t>& semigroup() const { return semigroup_; }
  const std::optional<Polynomial>& declared_test_element() const { return test_element_; }
  const std::optional<std::vector<Ideal>>& declared_minimal_primes() const {
    return declared_primes_;
  }

  /// Declared minimal primes, or the monomial ones. Throws
  /// UnsupportedInputError when neither is available.
  const std::vector<Ideal>& minimal_primes() const;
  bool has_minimal_primes() const;

  /// (gens) + I.
  Ideal ideal_of(const std::vector<Polynomial>& gens) const;
  Ideal ideal_of(const Ideal& j) const { return ideal_of(j.generators()); }
  Ideal unit_ideal() const { return Ideal::unit(ambient_); }

  /// Krull dimension of R.
  std::size_t dimension() const;

  Polynomial parse(const std::string& text) const;

 private:
  RingPtr ambient_;
  Ideal defining_;
  std::optional<std::vector<Ideal>> declared_primes_;
  std::vector<std::uint32_t> semigroup_;
  bool reduced_ = true;
  std::optional<Polynomial> test_element_;
  std::string name_;
  struct PrimesCache {
    std::once_flag once;
    std::optional<std::vector<Ideal>> primes;
    std::string error;
  };
  std::shared_ptr<PrimesCache> primes_cache_;
};

/// (∩_{j≠i} p_j) + I, the annihilator of the i-th minimal prime.
Ideal annihilator_of_minimal_prime(const RingPresentation& ring, const std::vector<Ideal>& primes,
                                   std::size_t i);

struct NonzerodivisorVerdict {
  bool value;
  std::string diagnostic;
};

/// (I : c) = I. For radical I this is membership in R°.
NonzerodivisorVerdict check_nonzerodivisor(const Polynomial& c, const RingPresentation& ring);
bool is_nonzerodivisor(const Polynomial& c, const RingPresentation& ring);

/// c avoids every minimal prime: the colon test for reduced R, the
/// declared or monomial primes otherwise.
NonzerodivisorVerdict check_in_r_circ(const Polynomial& c, const RingPresentation& ring);

}  // namespace tint

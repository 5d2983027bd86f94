#include "tint/ring.hpp"

#include "tint/errors.hpp"
#include "tint/parse.hpp"

namespace tint {

RingPresentation::RingPresentation(RingPtr ambient, std::vector<Polynomial> defining,
                                   std::optional<std::vector<Ideal>> minimal_primes,
                                   std::vector<std::uint32_t> semigroup,
                                   std::optional<bool> reduced,
                                   std::optional<Polynomial> test_element, std::string name)
    : ambient_(ambient),
      defining_(Ideal(ambient, std::move(defining))),
      declared_primes_(std::move(minimal_primes)),
      semigroup_(std::move(semigroup)),
      test_element_(std::move(test_element)),
      name_(std::move(name)),
      primes_cache_(std::make_shared<PrimesCache>()) {
  if (defining_.is_unit()) throw PreconditionError("the defining ideal is the unit ideal");
  if (defining_.is_monomial()) {
    bool square_free = is_square_free_monomial(defining_);
    if (reduced.value_or(square_free) && !square_free) {
      throw PreconditionError("reduced = true but the monomial ideal I is not square-free");
    }
    reduced_ = reduced.value_or(square_free);
  } else {
    reduced_ = reduced.value_or(true);
  }
  if (declared_primes_) {
    if (declared_primes_->empty()) throw PreconditionError("minimal_primes is empty");
    for (const Ideal& q : *declared_primes_) {
      if (!same_ring(q.ring(), ambient_)) throw PreconditionError("prime from a different ring");
      if (q.is_unit()) throw PreconditionError("a declared minimal prime is the unit ideal");
      if (!q.contains(defining_)) {
        throw PreconditionError("declared minimal prime " + q.to_string() + " does not contain I");
      }
    }
    if (reduced_) {
      Ideal prod = Ideal::unit(ambient_);
      for (const Ideal& q : *declared_primes_) prod = prod * q;
      if (!defining_.contains(prod)) {
        throw PreconditionError("the product of the declared minimal primes is not in I");
      }
    }
  }
  if (test_element_ && !same_ring(test_element_->ring(), ambient_)) {
    throw PreconditionError("test element from a different ring");
  }
}

const std::vector<Ideal>& RingPresentation::minimal_primes() const {
  std::call_once(primes_cache_->once, [this] {
    if (declared_primes_) {
      primes_cache_->primes = *declared_primes_;
    } else if (defining_.is_zero()) {
      primes_cache_->primes = std::vector<Ideal>{Ideal::zero(ambient_)};
    } else if (defining_.is_monomial()) {
      primes_cache_->primes = minimal_primes_monomial(defining_);
    } else {
      primes_cache_->error =
          "minimal primes of a non-monomial ideal are not computed; declare minimal_primes in "
          "the ring spec";
    }
  });
  if (!primes_cache_->primes) throw UnsupportedInputError(primes_cache_->error);
  return *primes_cache_->primes;
}

bool RingPresentation::has_minimal_primes() const {
  return declared_primes_.has_value() || defining_.is_zero() || defining_.is_monomial();
}

Ideal RingPresentation::ideal_of(const std::vector<Polynomial>& gens) const {
  std::vector<Polynomial> all = gens;
  all.insert(all.end(), defining_.groebner_basis().begin(), defining_.groebner_basis().end());
  return Ideal(ambient_, std::move(all));
}

std::size_t RingPresentation::dimension() const { return krull_dimension(defining_); }

Polynomial RingPresentation::parse(const std::string& text) const {
  return parse_polynomial(text, ambient_);
}

Ideal annihilator_of_minimal_prime(const RingPresentation& ring, const std::vector<Ideal>& primes,
                                   std::size_t i) {
  if (i >= primes.size()) throw PreconditionError("minimal prime index out of range");
  std::vector<Ideal> others;
  for (std::size_t j = 0; j < primes.size(); ++j) {
    if (j != i) others.push_back(primes[j]);
  }
  return ring.ideal_of(intersect(others, ring.ambient())).canonical();
}

NonzerodivisorVerdict check_nonzerodivisor(const Polynomial& c, const RingPresentation& ring) {
  const Ideal& i = ring.defining_ideal();
  if (i.contains(c)) return {false, c.to_string() + " is zero in R"};
  if (i.is_zero() || c.is_constant()) return {true, ""};
  if (colon(i, c) == i) return {true, ""};
  return {false, c.to_string() + " is a zerodivisor"};
}

bool is_nonzerodivisor(const Polynomial& c, const RingPresentation& ring) {
  return check_nonzerodivisor(c, ring).value;
}

NonzerodivisorVerdict check_in_r_circ(const Polynomial& c, const RingPresentation& ring) {
  if (ring.reduced()) return check_nonzerodivisor(c, ring);
  for (const Ideal& q : ring.minimal_primes()) {
    if (q.contains(c)) {
      return {false, c.to_string() + " lies in the minimal prime " + q.to_string()};
    }
  }
  return {true, ""};
}

}  // namespace tint

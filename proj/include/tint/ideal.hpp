#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "tint/polynomial.hpp"

namespace tint {

namespace detail {
struct GbCache {
  std::once_flag once;
  std::vector<Polynomial> basis;
};
}  // namespace detail

/// Ideal of a polynomial ring, given by generators. The reduced Gröbner basis
/// is computed on first use and then shared by all copies.
class Ideal {
 public:
  explicit Ideal(RingPtr ring);
  Ideal(RingPtr ring, std::vector<Polynomial> generators);

  static Ideal zero(RingPtr ring) { return Ideal(std::move(ring)); }
  static Ideal unit(RingPtr ring);
  /// Adopts `reduced_gb` as the canonical basis without recomputation.
  static Ideal from_groebner(RingPtr ring, std::vector<Polynomial> reduced_gb);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return gens_; }
  const std::vector<Polynomial>& groebner_basis() const;

  bool is_zero() const { return groebner_basis().empty(); }
  bool is_unit() const;
  /// True when the ideal is generated by monomials.
  bool is_monomial() const;

  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;

  bool operator==(const Ideal& other) const;

  /// The ideal with its reduced Gröbner basis as generators.
  Ideal canonical() const;
  /// Rendered reduced Gröbner basis, sorted lexicographically as strings.
  std::vector<std::string> canonical_strings() const;
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Polynomial> gens_;
  std::shared_ptr<detail::GbCache> cache_;
};

Ideal operator+(const Ideal& a, const Ideal& b);
Ideal operator*(const Ideal& a, const Ideal& b);
Ideal operator*(const Polynomial& f, const Ideal& a);

/// I ∩ J by eliminating t from t*I + (1-t)*J.
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal intersect(const std::vector<Ideal>& ideals, const RingPtr& ring);

/// (I : f). Throws PreconditionError for f = 0.
Ideal colon(const Ideal& a, const Polynomial& f);
/// (I : J) = ∩_j (I : g_j). Throws PreconditionError for J = 0.
Ideal colon(const Ideal& a, const Ideal& b);

/// I^[p^e], generated by the p^e-th powers of the generators.
Ideal frobenius_bracket(const Ideal& a, unsigned e);

/// Minimal primes of a monomial ideal, each generated by variables, sorted.
/// Throws UnsupportedInputError for non-monomial input.
std::vector<Ideal> minimal_primes_monomial(const Ideal& a);

/// Radical of a monomial ideal (square-free parts of the generators).
Ideal monomial_radical(const Ideal& a);
bool is_square_free_monomial(const Ideal& a);

/// Krull dimension of S/I from the initial ideal.
std::size_t krull_dimension(const Ideal& a);

struct CofactorCertificate {
  Polynomial target;
  /// (coefficient, generator index) with target = sum coefficient * gens[index].
  std::vector<std::pair<Polynomial, std::size_t>> combination;
};

struct CertifiedReduction {
  Polynomial normal_form;
  CofactorCertificate cert;
};

/// f = normal_form + sum over cert; the combination is expressed in the
/// generators of `ideal` as given. normal_form is zero iff f is in the ideal.
CertifiedReduction reduce_with_cofactors(const Polynomial& f, const Ideal& ideal);

}  // namespace tint

#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tint/field.hpp"
#include "tint/monomial.hpp"

namespace tint {

class PolyRing;
using RingPtr = std::shared_ptr<const PolyRing>;

/// F_p[vars] with a fixed monomial order. Immutable; shared by pointer.
class PolyRing {
 public:
  PolyRing(std::uint32_t p, std::vector<std::string> vars,
           MonomialOrder order = MonomialOrder::grevlex());

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  const MonomialOrder& order() const { return order_; }

  int compare(const Monomial& a, const Monomial& b) const {
    return order_.compare(a, b, vars_.size());
  }

  /// The ring with one auxiliary variable prepended and a block order
  /// eliminating it. Created once and shared.
  const RingPtr& elimination_extension() const;

  bool operator==(const PolyRing& other) const {
    return field_ == other.field_ && vars_ == other.vars_ && order_ == other.order_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> vars_;
  MonomialOrder order_;
  mutable std::once_flag extension_once_;
  mutable RingPtr extension_;
};

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars,
                  MonomialOrder order = MonomialOrder::grevlex());

bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
  Monomial mono;
  Coeff coeff;
};

/// Sparse polynomial in canonical form: terms sorted strictly descending in
/// the ring's order, no zero coefficients.
class Polynomial {
 public:
  explicit Polynomial(RingPtr ring) : ring_(std::move(ring)) {}

  static Polynomial constant(RingPtr ring, std::int64_t c);
  static Polynomial monomial(RingPtr ring, const Monomial& m, Coeff c = 1);
  static Polynomial variable(RingPtr ring, std::size_t i);
  /// Sorts and combines arbitrary terms; coefficients are reduced mod p.
  static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);
  /// Terms already canonical (sorted descending, nonzero, distinct).
  static Polynomial from_sorted_terms(RingPtr ring, std::vector<Term> terms);

  const RingPtr& ring() const { return ring_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  const Term& leading_term() const { return terms_.front(); }
  const Monomial& leading_monomial() const { return terms_.front().mono; }
  Coeff leading_coeff() const { return terms_.front().coeff; }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  std::uint64_t total_degree() const;
  /// Coefficient of m, or 0.
  Coeff coefficient(const Monomial& m) const;
  bool is_homogeneous(std::span<const std::uint32_t> weights) const;
  std::uint64_t weighted_degree(std::span<const std::uint32_t> weights) const;

  Polynomial operator+(const Polynomial& other) const;
  Polynomial operator-(const Polynomial& other) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator+=(const Polynomial& other) { return *this = *this + other; }
  Polynomial& operator-=(const Polynomial& other) { return *this = *this - other; }
  Polynomial& operator*=(const Polynomial& other) { return *this = *this * other; }

  Polynomial scaled(Coeff c) const;
  Polynomial mul_term(const Monomial& m, Coeff c) const;
  /// this - c * m * other, the reduction step.
  Polynomial sub_mul_term(const Monomial& m, Coeff c, const Polynomial& other) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& other) const;

  /// Canonical text: descending terms, `*` between factors, `^` exponents.
  std::string to_string() const;

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

/// f^(p^e) by raising each term (the Frobenius is additive in characteristic p).
Polynomial frobenius_power(const Polynomial& f, unsigned e);

/// f^k by repeated squaring.
Polynomial pow(const Polynomial& f, std::uint64_t k);

Polynomial derivative(const Polynomial& f, std::size_t var);

/// Exact division; throws InternalError if b does not divide a.
Polynomial exact_divide(const Polynomial& a, const Polynomial& b);

/// Moves f into `target` sending source variable i to target variable
/// var_map[i].
Polynomial change_ring(const Polynomial& f, const RingPtr& target,
                       std::span<const std::size_t> var_map);

/// Substitutes a polynomial of `target` for every variable of f's ring.
Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      std::span<const Polynomial> images);

/// p^e with overflow checking.
std::uint64_t prime_power(std::uint32_t p, unsigned e);

std::string render_monomial(const Monomial& m, const PolyRing& ring);

}  // namespace tint

#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tint/ideal.hpp"
#include "tint/linalg.hpp"
#include "tint/report.hpp"
#include "tint/ring.hpp"

namespace tint {

/// Positive weights making I homogeneous: all ones, the semigroup
/// exponents, or a small search. Throws UnsupportedInputError otherwise.
std::vector<std::uint32_t> find_grading(const RingPresentation& ring);

std::int64_t weighted_degree(const Monomial& m, const std::vector<std::uint32_t>& weights,
                             std::size_t nvars);

/// Standard monomials of R in each weighted degree, and coordinates of
/// polynomials in those bases.
class GradedRing {
 public:
  GradedRing(RingPresentation ring, std::vector<std::uint32_t> weights);

  const RingPresentation& ring() const { return ring_; }
  const std::vector<std::uint32_t>& weights() const { return weights_; }
  std::uint32_t max_weight() const;

  const std::vector<Monomial>& basis(std::int64_t k) const;
  std::size_t index(std::int64_t k, const Monomial& m) const;
  std::int64_t degree(const Monomial& m) const;
  Polynomial normal_form(const Polynomial& f) const;
  /// Coordinates of NF(f), which must be homogeneous of degree k.
  std::vector<Coeff> coordinates(const Polynomial& f, std::int64_t k) const;
  Polynomial from_coordinates(const std::vector<Coeff>& v, std::int64_t k) const;

 private:
  struct Slice {
    std::vector<Monomial> basis;
    std::unordered_map<Monomial, std::size_t, MonomialHash> index;
  };
  const Slice& slice(std::int64_t k) const;

  RingPresentation ring_;
  std::vector<std::uint32_t> weights_;
  mutable std::map<std::int64_t, std::unique_ptr<Slice>> slices_;
};

/// Degree <= d part of sum_phi phi(^eJ) over all phi in Hom_R(^eR, R), by
/// linear algebra on graded pieces. Throws PreconditionError ("raise d")
/// when degree d + 1 adds new generators.
Ideal brute_hom_image(const Ideal& j, unsigned e, const RingPresentation& ring, unsigned d);

/// Finite-length graded module coker(R^b -> R^a). Column k of `relations`
/// has one homogeneous entry per generator.
struct GradedModulePresentation {
  RingPresentation ring;
  std::vector<std::uint32_t> weights;
  std::vector<std::int64_t> generator_degrees;
  std::vector<std::vector<Polynomial>> relations;
  /// M_k = 0 for every k >= witness.
  std::int64_t witness = 0;

  /// R/J for a homogeneous J with R/J of finite length.
  static GradedModulePresentation cyclic(const RingPresentation& ring, const Ideal& j);
};

/// One degree of a presented module: the free basis (generator, standard
/// monomial), the echelon form of the relations, and the quotient basis.
struct ModuleSlice {
  std::int64_t degree = 0;
  std::vector<std::pair<std::size_t, Monomial>> free_basis;
  /// Start of each generator's block in the free basis.
  std::vector<std::size_t> gen_offset;
  Matrix reducer;
  std::vector<std::size_t> pivots;
  std::vector<std::size_t> quotient;

  std::size_t dim() const { return quotient.size(); }
  /// Quotient coordinates of a vector in the free basis.
  std::vector<Coeff> reduce(std::vector<Coeff> v, const PrimeField& field) const;
};

ModuleSlice module_slice(const GradedModulePresentation& m, const GradedRing& gr, std::int64_t k);

/// Degree-wise vector spaces with the variable actions.
struct MaterializedModule {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<std::size_t> dims;
  /// action[v][k - lo]: M_k -> M_{k + w_v}.
  std::vector<std::vector<Matrix>> action;
  std::vector<std::uint32_t> weights;

  std::size_t dim(std::int64_t k) const;
  std::size_t total_dim() const;
  /// f * v for v in M_k.
  std::vector<Coeff> apply(const Polynomial& f, std::int64_t k, const std::vector<Coeff>& v,
                           const PrimeField& field) const;
};

/// Throws PreconditionError if M does not vanish at the witness.
MaterializedModule materialize(const GradedModulePresentation& m);

/// A presentation with the given action data.
GradedModulePresentation present(const RingPresentation& ring, const MaterializedModule& data);

/// Entrywise q-th powers of the relations; generator degrees times q.
GradedModulePresentation frobenius_functor(const GradedModulePresentation& m, unsigned e);

/// Graded dual: (M^v)_k = (M_{-k})^*, x acting by the transpose.
GradedModulePresentation matlis_dual_finite_length(const GradedModulePresentation& m);

/// 0^*_M per degree: z with c z^[q] = 0 in F^e(M) for 1 <= e <= e_max.
std::map<std::int64_t, std::vector<std::vector<Coeff>>> tight_closure_zero(
    const GradedModulePresentation& m, const Polynomial& c, unsigned e_max);

/// dim of sum_{e=1}^{e_max} of the images of ^ec under Hom_R(^eR, L).
std::size_t module_interior_dimension(const GradedModulePresentation& l, const Polynomial& c,
                                      unsigned e_max);

/// dim L_* = dim L - dim 0^*_{L^v}; a graded-case check.
CheckRecord duality_check(const GradedModulePresentation& l, const Polynomial& c, unsigned e_max);

}  // namespace tint

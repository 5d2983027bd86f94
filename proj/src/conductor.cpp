#include "tint/conductor.hpp"

#include <algorithm>
#include <numeric>

#include "tint/errors.hpp"
#include "tint/groebner.hpp"

namespace tint {

ConductorMethod parse_conductor_method(const std::string& name) {
  if (name == "stanley_reisner") return ConductorMethod::StanleyReisner;
  if (name == "semigroup") return ConductorMethod::Semigroup;
  if (name == "supplied") return ConductorMethod::Supplied;
  throw PreconditionError("unknown conductor method '" + name +
                          "' (expected stanley_reisner, semigroup or supplied)");
}

std::string to_string(ConductorMethod m) {
  switch (m) {
    case ConductorMethod::StanleyReisner:
      return "stanley_reisner";
    case ConductorMethod::Semigroup:
      return "semigroup";
    case ConductorMethod::Supplied:
      return "supplied";
  }
  return "supplied";
}

bool SemigroupData::contains(std::uint64_t m) const {
  if (static_cast<std::int64_t>(m) > frobenius_number) return true;
  return !std::binary_search(gaps.begin(), gaps.end(), static_cast<std::uint32_t>(m));
}

SemigroupData analyze_semigroup(const std::vector<std::uint32_t>& generators) {
  if (generators.empty()) throw PreconditionError("empty semigroup");
  std::uint32_t g = 0;
  for (std::uint32_t a : generators) {
    if (a == 0) throw PreconditionError("semigroup generators must be positive");
    g = std::gcd(g, a);
  }
  if (g != 1) throw PreconditionError("semigroup generators must have gcd 1");
  std::uint32_t lo = *std::min_element(generators.begin(), generators.end());
  std::uint32_t hi = *std::max_element(generators.begin(), generators.end());
  std::uint64_t bound = static_cast<std::uint64_t>(lo) * hi + 1;
  std::vector<bool> reach(bound + 1, false);
  reach[0] = true;
  for (std::uint64_t m = 1; m <= bound; ++m) {
    for (std::uint32_t a : generators) {
      if (a <= m && reach[m - a]) {
        reach[m] = true;
        break;
      }
    }
  }
  SemigroupData out;
  out.generators = generators;
  for (std::uint64_t m = 1; m <= bound; ++m) {
    if (!reach[m]) out.gaps.push_back(static_cast<std::uint32_t>(m));
  }
  out.frobenius_number = out.gaps.empty() ? -1 : static_cast<std::int64_t>(out.gaps.back());
  out.conductor_exponent = static_cast<std::uint32_t>(out.frobenius_number + 1);
  return out;
}

std::optional<Monomial> semigroup_monomial(std::uint64_t m, const std::vector<std::uint32_t>& a) {
  std::vector<int> choice(m + 1, -1);
  std::vector<bool> reach(m + 1, false);
  reach[0] = true;
  for (std::uint64_t v = 1; v <= m; ++v) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] <= v && reach[v - a[i]]) {
        reach[v] = true;
        choice[v] = static_cast<int>(i);
        break;
      }
    }
  }
  if (!reach[m]) return std::nullopt;
  Monomial out;
  for (std::uint64_t v = m; v > 0; v -= a[static_cast<std::size_t>(choice[v])]) {
    std::size_t i = static_cast<std::size_t>(choice[v]);
    out.set(i, out[i] + 1);
  }
  return out;
}

SemigroupData validate_semigroup_ring(const RingPresentation& ring) {
  const auto& a = ring.semigroup();
  if (a.empty()) throw UnsupportedInputError("the ring does not declare semigroup exponents");
  if (a.size() != ring.nvars()) {
    throw UnsupportedInputError("semigroup needs one exponent per variable");
  }
  SemigroupData sg = analyze_semigroup(a);
  const RingPtr& s = ring.ambient();
  const RingPtr& ext = s->elimination_extension();
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < a.size(); ++i) {
    Monomial tpow;
    tpow.set(0, a[i]);
    gens.push_back(Polynomial::variable(ext, i + 1) - Polynomial::monomial(ext, tpow, 1));
  }
  std::vector<std::size_t> back(ext->nvars());
  for (std::size_t i = 1; i < ext->nvars(); ++i) back[i] = i - 1;
  std::vector<Polynomial> kernel;
  for (const Polynomial& g : reduced_groebner_basis(ext, gens)) {
    if (g.leading_monomial()[0] == 0) kernel.push_back(change_ring(g, s, back));
  }
  if (!(Ideal(s, kernel) == ring.defining_ideal())) {
    throw UnsupportedInputError("I is not the kernel of x_i -> t^a_i for the declared semigroup");
  }
  return sg;
}

Ideal semigroup_tail_ideal(const RingPresentation& ring, const SemigroupData& sg,
                           std::uint64_t m0) {
  std::uint32_t hi = *std::max_element(sg.generators.begin(), sg.generators.end());
  std::uint64_t top = std::max<std::uint64_t>(m0, sg.conductor_exponent) + hi;
  std::vector<Polynomial> gens;
  for (std::uint64_t m = m0; m < top; ++m) {
    if (!sg.contains(m)) continue;
    auto mono = semigroup_monomial(m, sg.generators);
    if (!mono) throw InternalError("semigroup element without a representation");
    gens.push_back(Polynomial::monomial(ring.ambient(), *mono, 1));
  }
  return ring.ideal_of(gens).canonical();
}

Ideal sum_of_annihilators(const RingPresentation& ring) {
  const std::vector<Ideal>& primes = ring.minimal_primes();
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    Ideal a = annihilator_of_minimal_prime(ring, primes, i);
    gens.insert(gens.end(), a.generators().begin(), a.generators().end());
  }
  return ring.ideal_of(gens).canonical();
}

std::optional<ConductorMethod> default_conductor_method(const RingPresentation& ring) {
  if (!ring.semigroup().empty()) return ConductorMethod::Semigroup;
  if (ring.defining_ideal().is_monomial() && is_square_free_monomial(ring.defining_ideal())) {
    return ConductorMethod::StanleyReisner;
  }
  return std::nullopt;
}

Ideal conductor(const RingPresentation& ring, ConductorMethod method,
                const std::optional<Ideal>& supplied) {
  switch (method) {
    case ConductorMethod::StanleyReisner: {
      const Ideal& i = ring.defining_ideal();
      if (!i.is_monomial() || !is_square_free_monomial(i)) {
        throw UnsupportedInputError("stanley_reisner needs a square-free monomial ideal I");
      }
      return sum_of_annihilators(ring);
    }
    case ConductorMethod::Semigroup: {
      SemigroupData sg = validate_semigroup_ring(ring);
      return semigroup_tail_ideal(ring, sg, sg.conductor_exponent);
    }
    case ConductorMethod::Supplied: {
      if (!supplied) throw PreconditionError("method supplied needs a conductor ideal");
      if (!same_ring(supplied->ring(), ring.ambient())) {
        throw PreconditionError("supplied conductor from a different ring");
      }
      return ring.ideal_of(*supplied).canonical();
    }
  }
  throw InternalError("unhandled conductor method");
}

}  // namespace tint

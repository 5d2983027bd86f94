#include "tint/checks.hpp"

#include <algorithm>

#include "tint/cartier.hpp"
#include "tint/errors.hpp"

namespace tint {

Ideal stable_big_test_ideal(const RingPresentation& ring, unsigned e_max,
                            const std::optional<Polynomial>& c) {
  TauResult tau = big_test_ideal(ring, c, e_max);
  if (!tau.stabilized()) {
    throw NotStabilizedError("big test ideal of " + ring.name() + " did not stabilize by e_max = " +
                             std::to_string(e_max));
  }
  return tau.ideal;
}

ChainTrace blickle_chain_down(const Ideal& n, const RingPresentation& ring, unsigned e_cap,
                              unsigned max_iterations) {
  if (e_cap == 0) throw PreconditionError("the chain needs e_cap >= 1");
  Ideal current = ring.ideal_of(n).canonical();
  ChainTrace out{{current}, current, false, true};
  for (unsigned it = 0; it < max_iterations; ++it) {
    std::vector<Polynomial> gens;
    for (unsigned e = 1; e <= e_cap; ++e) {
      Ideal c = cartier_image(current, e, ring);
      gens.insert(gens.end(), c.generators().begin(), c.generators().end());
    }
    Ideal next = ring.ideal_of(gens).canonical();
    if (!current.contains(next)) out.descending = false;
    out.steps.push_back(next);
    if (next == current) {
      out.stabilized = true;
      break;
    }
    current = next;
  }
  out.fixed_point = out.steps.back();
  return out;
}

Compatibility compatibility_check(const Ideal& n, const RingPresentation& ring, unsigned e_cap) {
  Ideal np = ring.ideal_of(n).canonical();
  Compatibility out{true, false};
  std::vector<Polynomial> gens;
  for (unsigned e = 1; e <= e_cap; ++e) {
    Ideal c = cartier_image(np, e, ring);
    if (!np.contains(c)) out.compatible = false;
    gens.insert(gens.end(), c.generators().begin(), c.generators().end());
  }
  out.fixed = out.compatible && ring.ideal_of(gens) == np;
  return out;
}

namespace {

Polynomial choose_test_element(const RingPresentation& ring, const std::optional<Polynomial>& c) {
  if (c) return *c;
  if (ring.declared_test_element()) return *ring.declared_test_element();
  return find_test_element(ring);
}

}  // namespace

CheckRecord minimal_primes_decomposition_check(const RingPresentation& ring, unsigned e_max,
                                               const std::optional<Polynomial>& c) {
  Polynomial element = choose_test_element(ring, c);
  Ideal tau = stable_big_test_ideal(ring, e_max, element);
  const std::vector<Ideal>& primes = ring.minimal_primes();
  const RingPtr& s = ring.ambient();
  std::vector<Polynomial> lifted;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    Ideal a = annihilator_of_minimal_prime(ring, primes, i);
    RingPresentation quotient(s, primes[i].groebner_basis(), std::vector<Ideal>{primes[i]}, {},
                              true, std::nullopt, ring.name() + "/p" + std::to_string(i));
    InteriorQuery q{quotient, a, element, 0, e_max, kDefaultWindow};
    Ideal interior = stable_interior(q);
    std::vector<Polynomial> basis = a.groebner_basis();
    std::size_t na = basis.size();
    basis.insert(basis.end(), primes[i].groebner_basis().begin(), primes[i].groebner_basis().end());
    Ideal both(s, basis);
    for (const Polynomial& g : interior.groebner_basis()) {
      CertifiedReduction red = reduce_with_cofactors(g, both);
      if (!red.normal_form.is_zero()) {
        throw InternalError("interior generator " + g.to_string() + " has no lift into ann p_" +
                            std::to_string(i));
      }
      Polynomial part(s);
      for (const auto& [coef, idx] : red.cert.combination) {
        if (idx < na) part += coef * basis[idx];
      }
      lifted.push_back(part);
    }
  }
  CheckRecord r = compare_ideals("minimal_primes_decomposition", ring.ideal_of(lifted), tau);
  r.note = "sum of lifted interiors over R/p_i against tau_b(R)";
  return r;
}

std::vector<CheckRecord> conductor_identities_check(const RingPresentation& ring,
                                                    const std::optional<Ideal>& supplied,
                                                    unsigned e_max) {
  std::vector<CheckRecord> out;
  Ideal tau = stable_big_test_ideal(ring, e_max);
  std::optional<ConductorMethod> method =
      supplied ? std::optional<ConductorMethod>(ConductorMethod::Supplied)
               : default_conductor_method(ring);
  if (!method) {
    for (const char* name : {"tau_in_conductor", "conductor_in_sum_of_annihilators",
                             "tau_equals_conductor"}) {
      out.push_back({name, Verdict::Uncheckable, tau.canonical_strings(), {},
                     "no conductor method for this presentation"});
    }
    return out;
  }
  Ideal cond = conductor(ring, *method, supplied);
  out.push_back(compare_containment("tau_in_conductor", tau, cond));
  if (ring.has_minimal_primes()) {
    out.push_back(compare_containment("conductor_in_sum_of_annihilators", cond,
                                      sum_of_annihilators(ring)));
  } else {
    out.push_back({"conductor_in_sum_of_annihilators", Verdict::Uncheckable,
                   cond.canonical_strings(), {}, "minimal primes unknown"});
  }
  CheckRecord eq = compare_ideals("tau_equals_conductor", tau, cond);
  if (*method == ConductorMethod::Supplied) {
    if (eq.verdict == Verdict::Fail) eq.verdict = Verdict::Uncheckable;
    eq.note = "normalization not known to be strongly F-regular";
  } else {
    eq.note = "EXPECTED: the normalization is regular";
  }
  out.push_back(eq);
  return out;
}

CheckRecord finite_transform_check(const RingPresentation& ring, unsigned e_max) {
  SemigroupData sg = validate_semigroup_ring(ring);
  RingPtr t_ring = make_ring(ring.characteristic(), {"t"});
  Monomial tc;
  tc.set(0, sg.conductor_exponent);
  std::uint64_t m0 = sg.conductor_exponent;
  for (unsigned e = 1; e <= e_max; ++e) {
    Ideal bracket = frobenius_bracket(Ideal(t_ring, {Polynomial::monomial(t_ring, tc, 1)}), e);
    for (const Polynomial& g : cartier_root(bracket, e).generators()) {
      m0 = std::min<std::uint64_t>(m0, g.leading_monomial()[0]);
    }
  }
  Ideal lhs = semigroup_tail_ideal(ring, sg, m0);
  Ideal tau = stable_big_test_ideal(ring, e_max);
  CheckRecord r = compare_ideals("finite_transform", lhs, tau);
  r.note = "sum of Phi_e((t^" + std::to_string(sg.conductor_exponent) +
           ")^[q]) over F_p[t], restricted to the semigroup";
  return r;
}

CheckRecord nilradical_reduction_check(const RingPresentation& ring, unsigned e_max,
                                       unsigned window) {
  const Ideal& i = ring.defining_ideal();
  const RingPtr& s = ring.ambient();
  if (!i.is_monomial()) throw UnsupportedInputError("the nilradical check needs a monomial ideal I");
  if (is_square_free_monomial(i)) {
    return {"nilradical_reduction", Verdict::Pass, {}, {}, "trivially equal: R is reduced"};
  }
  Ideal rad = monomial_radical(i);
  RingPresentation red(s, rad.groebner_basis(), std::nullopt, {}, true, std::nullopt,
                       ring.name() + "_red");
  Polynomial c = find_test_element(red);
  unsigned e0 = 1;
  while (!i.contains(frobenius_bracket(rad, e0))) ++e0;
  if (e0 > e_max) throw PreconditionError("e_max is below the nilpotency exponent");
  Polynomial c_q0 = frobenius_power(c, e0);
  TauResult lhs = accumulate_terms(
      s, i,
      [&](unsigned e) { return cartier_root(c_q0 * fedder_colon(ring, e), e); }, e0, e_max, window,
      c);
  Ideal annihilator = colon(i, rad);
  TauResult rhs = accumulate_terms(
      s, i,
      [&](unsigned d) {
        if (d == 0) return c * annihilator;
        return cartier_root(c * colon(frobenius_bracket(i, d), rad), d);
      },
      0, e_max, window, c);
  if (!lhs.stabilized() || !rhs.stabilized()) {
    return {"nilradical_reduction", Verdict::NotStabilized, lhs.ideal.canonical_strings(),
            rhs.ideal.canonical_strings(), "raise e_max"};
  }
  CheckRecord r = compare_ideals("nilradical_reduction", lhs.ideal, rhs.ideal);
  r.note = "e0 = " + std::to_string(e0) + ", c = " + c.to_string();
  return r;
}

Localization localize(const RingPresentation& ring, const Polynomial& f) {
  const RingPtr& s = ring.ambient();
  std::vector<std::string> vars = s->vars();
  std::string t = "T";
  for (int k = 0; std::find(vars.begin(), vars.end(), t) != vars.end(); ++k) {
    t = "T" + std::to_string(k);
  }
  vars.push_back(t);
  RingPtr ext = make_ring(ring.characteristic(), vars);
  std::vector<std::size_t> map(s->nvars());
  for (std::size_t k = 0; k < map.size(); ++k) map[k] = k;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : ring.defining_ideal().generators()) gens.push_back(change_ring(g, ext, map));
  Polynomial tv = Polynomial::variable(ext, s->nvars());
  gens.push_back(tv * change_ring(f, ext, map) - Polynomial::constant(ext, 1));
  std::optional<Polynomial> c;
  if (ring.declared_test_element()) c = change_ring(*ring.declared_test_element(), ext, map);
  RingPresentation local(ext, gens, std::nullopt, {}, ring.reduced(), c,
                         ring.name() + "[1/(" + f.to_string() + ")]");
  return {local, map};
}

CheckRecord localization_commutes_check(const RingPresentation& ring, const Polynomial& f,
                                        unsigned e_max) {
  if (!ring.reduced()) throw PreconditionError("the localization check needs a reduced ring");
  NonzerodivisorVerdict v = check_in_r_circ(f, ring);
  if (!v.value) throw PreconditionError(v.diagnostic);
  Polynomial c = choose_test_element(ring, std::nullopt);
  Ideal tau = stable_big_test_ideal(ring, e_max, c);
  Localization loc = localize(ring, f);
  const RingPtr& ext = loc.ring.ambient();
  std::vector<Polynomial> extended;
  for (const Polynomial& g : tau.groebner_basis()) extended.push_back(change_ring(g, ext, loc.var_map));
  Ideal lhs = loc.ring.ideal_of(extended).canonical();
  Ideal rhs = stable_big_test_ideal(loc.ring, e_max, change_ring(c, ext, loc.var_map));
  CheckRecord r = compare_ideals("localization", lhs, rhs);
  r.note = "f = " + f.to_string();
  return r;
}

}  // namespace tint

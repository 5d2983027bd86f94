#pragma once

// Shared helpers for the test binaries: ring construction, brute-force
// oracles that avoid the Gröbner machinery, and the randomized property run.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tint/cartier.hpp"
#include "tint/checks.hpp"
#include "tint/conductor.hpp"
#include "tint/corpus.hpp"
#include "tint/errors.hpp"
#include "tint/interior.hpp"
#include "tint/parse.hpp"

namespace tint::testing {

inline RingPresentation bundled(const std::string& name) { return corpus_entry(name).ring(); }

inline RingPresentation make_presentation(std::uint32_t p, std::vector<std::string> vars,
                                          const std::vector<std::string>& gens) {
  RingPtr s = make_ring(p, std::move(vars));
  std::vector<Polynomial> polys;
  for (const std::string& g : gens) polys.push_back(parse_polynomial(g, s));
  return RingPresentation(s, polys);
}

inline Polynomial poly(const RingPtr& s, const std::string& text) { return parse_polynomial(text, s); }

inline Ideal ideal(const RingPtr& s, const std::vector<std::string>& gens) {
  std::vector<Polynomial> polys;
  for (const std::string& g : gens) polys.push_back(parse_polynomial(g, s));
  return Ideal(s, polys);
}

inline Ideal ideal(const RingPresentation& r, const std::vector<std::string>& gens) {
  return ideal(r.ambient(), gens);
}

/// Ring-side equality: both ideals plus I.
inline bool same_in_ring(const Ideal& a, const Ideal& b, const RingPresentation& r) {
  return r.ideal_of(a) == r.ideal_of(b);
}

// ---------------------------------------------------------------------------
// Oracles.

/// All monomials in n variables of total degree at most d.
inline std::vector<Monomial> monomials_up_to(std::size_t n, std::uint32_t d) {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> exps(n, 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i == n) {
      out.push_back(Monomial(std::span<const std::uint32_t>(exps)));
      return;
    }
    for (std::uint32_t k = 0; k <= left; ++k) {
      exps[i] = k;
      self(self, i + 1, left - k);
    }
    exps[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

/// Membership of f in the F_p-span of {m g : deg(m g) <= d}, by Gaussian
/// elimination on coefficient vectors. For homogeneous data with d >= deg f
/// this decides ideal membership exactly.
inline bool truncated_member(const Polynomial& f, const std::vector<Polynomial>& gens, std::uint32_t d) {
  const RingPtr& s = f.ring();
  const PrimeField& k = s->field();
  std::vector<Monomial> basis = monomials_up_to(s->nvars(), d);
  std::map<std::vector<std::uint32_t>, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto& e = basis[i].exponents();
    index[std::vector<std::uint32_t>(e.begin(), e.end())] = i;
  }
  auto vec = [&](const Polynomial& g) -> std::optional<std::vector<Coeff>> {
    std::vector<Coeff> v(basis.size(), 0);
    for (const Term& t : g.terms()) {
      const auto& e = t.mono.exponents();
      auto it = index.find(std::vector<std::uint32_t>(e.begin(), e.end()));
      if (it == index.end()) return std::nullopt;
      v[it->second] = t.coeff;
    }
    return v;
  };
  std::vector<std::vector<Coeff>> rows;
  std::vector<std::size_t> lead;
  auto reduce = [&](std::vector<Coeff>& v) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Coeff a = v[lead[r]];
      if (a == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = k.sub(v[j], k.mul(a, rows[r][j]));
    }
  };
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    for (const Monomial& m : basis) {
      auto v = vec(g.mul_term(m, 1));
      if (!v) continue;
      reduce(*v);
      auto nz = std::find_if(v->begin(), v->end(), [](Coeff c) { return c != 0; });
      if (nz == v->end()) continue;
      std::size_t piv = static_cast<std::size_t>(nz - v->begin());
      Coeff inv = k.inv((*v)[piv]);
      for (Coeff& c : *v) c = k.mul(c, inv);
      for (auto& row : rows) {
        Coeff a = row[piv];
        if (a == 0) continue;
        for (std::size_t j = 0; j < row.size(); ++j) row[j] = k.sub(row[j], k.mul(a, (*v)[j]));
      }
      rows.push_back(*v);
      lead.push_back(piv);
    }
  }
  auto target = vec(f);
  if (!target) return false;
  reduce(*target);
  return std::all_of(target->begin(), target->end(), [](Coeff c) { return c == 0; });
}

/// Phi_e on a monomial by the exponent rule: x^b -> x^((b - (q-1)) / q) when
/// every b_i is congruent to q-1 mod q, else 0.
inline Polynomial trace_by_exponents(const Polynomial& f, unsigned e) {
  const RingPtr& s = f.ring();
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) q *= s->characteristic();
  std::vector<Term> out;
  for (const Term& t : f.terms()) {
    std::vector<std::uint32_t> exps(s->nvars());
    bool keep = true;
    for (std::size_t i = 0; i < s->nvars() && keep; ++i) {
      std::uint64_t b = t.mono[i];
      if (b % q != q - 1) {
        keep = false;
      } else {
        exps[i] = static_cast<std::uint32_t>(b / q);
      }
    }
    if (keep) out.push_back({Monomial(std::span<const std::uint32_t>(exps)), t.coeff});
  }
  return Polynomial::from_terms(s, out);
}

/// Gaps of the numerical semigroup by direct enumeration of sums.
inline std::vector<std::uint32_t> semigroup_gaps_by_enumeration(const std::vector<std::uint32_t>& a,
                                                                std::uint32_t bound) {
  std::vector<bool> reach(bound + 1, false);
  reach[0] = true;
  for (std::uint32_t m = 1; m <= bound; ++m) {
    for (std::uint32_t g : a) {
      if (g <= m && reach[m - g]) reach[m] = true;
    }
  }
  std::vector<std::uint32_t> gaps;
  for (std::uint32_t m = 1; m <= bound; ++m) {
    if (!reach[m]) gaps.push_back(m);
  }
  return gaps;
}

// ---------------------------------------------------------------------------
// Randomized properties.

inline Polynomial random_polynomial(const RingPtr& s, std::mt19937& rng, std::uint32_t max_degree,
                                    std::size_t max_terms, bool allow_constant) {
  std::vector<Monomial> monos = monomials_up_to(s->nvars(), max_degree);
  if (!allow_constant) monos.erase(monos.begin());
  std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
  std::uniform_int_distribution<std::uint32_t> coeff(1, s->characteristic() - 1);
  std::uniform_int_distribution<std::size_t> count(1, max_terms);
  std::vector<Term> terms;
  std::size_t n = count(rng);
  for (std::size_t i = 0; i < n; ++i) terms.push_back({monos[pick(rng)], coeff(rng)});
  return Polynomial::from_terms(s, terms);
}

struct PropertyReport {
  std::string ring;
  std::size_t cases = 0;
  std::size_t assertions = 0;
  std::vector<std::string> failures;
};

inline constexpr unsigned kPropertyEMax = 6;

/// Each case draws J ⊆ K, an element d of R°, and exponent caps, then checks
/// monotonicity, idempotence, test-element independence, compatibility and
/// fixedness of tau_b, and chain containment. The sandwich
/// tau_b ⊆ conductor ⊆ sum of annihilators is checked once per ring.
inline PropertyReport run_property_cases(const RingPresentation& r, std::size_t cases,
                                         std::uint32_t seed,
                                         const std::optional<Ideal>& supplied_conductor = std::nullopt) {
  PropertyReport rep;
  rep.ring = r.name();
  const RingPtr& s = r.ambient();
  std::mt19937 rng(seed);
  auto fail = [&](std::size_t i, const std::string& what) {
    rep.failures.push_back(r.name() + " case " + std::to_string(i) + ": " + what);
  };

  Polynomial c = r.declared_test_element() ? *r.declared_test_element() : find_test_element(r);
  Ideal tau = stable_big_test_ideal(r, kPropertyEMax, c);
  auto interior = [&](const Ideal& k, const Polynomial& t) {
    return stable_interior({r, k, t, 0, kPropertyEMax, kDefaultWindow});
  };

  std::optional<ConductorMethod> method = default_conductor_method(r);
  if (supplied_conductor || method) {
    Ideal cond = supplied_conductor ? r.ideal_of(*supplied_conductor) : conductor(r, *method);
    Ideal ann = sum_of_annihilators(r);
    ++rep.assertions;
    if (!cond.contains(tau)) fail(0, "tau_b not inside the conductor");
    ++rep.assertions;
    if (!ann.contains(cond)) fail(0, "conductor not inside the sum of annihilators");
  }

  for (std::size_t i = 0; i < cases; ++i) {
    try {
      Ideal j(s, {random_polynomial(s, rng, 2, 3, false)});
      if (rng() % 2) j = j + Ideal(s, {random_polynomial(s, rng, 2, 2, false)});
      Ideal k = j + Ideal(s, {random_polynomial(s, rng, 2, 2, true)});

      Ideal jj = interior(j, c);
      Ideal kk = interior(k, c);
      ++rep.assertions;
      if (!r.ideal_of(kk).contains(jj)) fail(i, "monotonicity: " + jj.to_string() + " vs " + kk.to_string());
      ++rep.assertions;
      if (!same_in_ring(interior(jj, c), jj, r)) fail(i, "idempotence on " + j.to_string());

      Polynomial d = random_polynomial(s, rng, 1, 3, true);
      while (!check_in_r_circ(d, r).value) d = random_polynomial(s, rng, 1, 3, true);
      Ideal tau_d = stable_big_test_ideal(r, kPropertyEMax, c * d);
      ++rep.assertions;
      if (!same_in_ring(tau_d, tau, r)) fail(i, "independence with d = " + d.to_string());

      unsigned cap = 1 + static_cast<unsigned>(rng() % 3);
      Compatibility comp = compatibility_check(tau, r, cap);
      ++rep.assertions;
      if (!comp.compatible) fail(i, "tau_b not compatible, e_cap " + std::to_string(cap));
      ++rep.assertions;
      if (!comp.fixed) fail(i, "tau_b not fixed, e_cap " + std::to_string(cap));

      ChainTrace chain = blickle_chain_down(r.unit_ideal(), r, cap);
      ++rep.assertions;
      if (!chain.stabilized || !chain.descending || !r.ideal_of(chain.fixed_point).contains(tau)) {
        fail(i, "chain containment, e_cap " + std::to_string(cap));
      }
    } catch (const Error& e) {
      fail(i, std::string("error: ") + e.what());
    }
    ++rep.cases;
  }
  return rep;
}

/// The reduced bundled rings the property run covers.
inline std::vector<std::string> property_rings() {
  return {"node_p2",     "node_p3",       "node_p5",          "cusp_p2",
          "cusp_p3",     "cusp_p5",       "quadric_p3",       "quadric_p5",
          "semigroup345_p2", "stanley_reisner_xy_xz_p3", "regular_x_p3", "regular_xy_p2"};
}

inline std::optional<Ideal> property_conductor(const CorpusEntry& entry, const RingPresentation& r) {
  if (!entry.conductor) return std::nullopt;
  return ideal(r, *entry.conductor);
}

}  // namespace tint::testing

#include "tint/verify.hpp"

#include <algorithm>
#include <functional>
#include <future>

#include "tint/cartier.hpp"
#include "tint/checks.hpp"
#include "tint/conductor.hpp"
#include "tint/errors.hpp"
#include "tint/interior.hpp"
#include "tint/oracle.hpp"

namespace tint {

VerifyCell VerifyCell::from_entry(const CorpusEntry& entry) {
  return {entry.ring(), entry.conductor, entry.localize_at, entry.finite_length_quotients};
}

namespace {

Ideal ideal_from(const RingPresentation& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> polys;
  for (const std::string& g : gens) polys.push_back(ring.parse(g));
  return Ideal(ring.ambient(), polys);
}

std::string braces(const std::vector<std::string>& gens) {
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i ? "," : "") + gens[i];
  return out + ")";
}

/// Runs one identity; exceptions become records.
void run(std::vector<CheckRecord>& out, const std::string& name,
         const std::function<std::vector<CheckRecord>()>& body) {
  try {
    std::vector<CheckRecord> recs = body();
    for (CheckRecord& r : recs) {
      r.name = recs.size() == 1 ? name : name + "." + r.name;
      out.push_back(std::move(r));
    }
  } catch (const NotStabilizedError& e) {
    out.push_back({name, Verdict::NotStabilized, {}, {}, e.what()});
  } catch (const Error& e) {
    out.push_back({name, Verdict::Fail, {}, {}, std::string("error: ") + e.what()});
  }
}

Polynomial default_test_element(const RingPresentation& ring) {
  if (ring.declared_test_element()) return *ring.declared_test_element();
  return find_test_element(ring);
}

/// A second element of R° for the independence identity.
Polynomial alternate_test_element(const RingPresentation& ring, const Polynomial& c) {
  const RingPtr& s = ring.ambient();
  Polynomial shifted = c * (Polynomial::variable(s, 0) + Polynomial::constant(s, 1));
  if (check_in_r_circ(shifted, ring).value) return shifted;
  return c * c;
}

}  // namespace

std::vector<CheckRecord> verify_ring(const VerifyCell& cell, unsigned e_max,
                                     std::optional<unsigned> degree_cap) {
  const RingPresentation& ring = cell.ring;
  const std::string tag = ":" + ring.name();
  std::vector<CheckRecord> out;
  if (degree_cap) {
    std::vector<std::string> maximal(ring.ambient()->vars());
    for (const auto& j : {std::vector<std::string>{"1"}, maximal}) {
      run(out, "oracle_agreement" + tag + "[" + braces(j) + "]", [&] {
        Ideal ideal = ideal_from(ring, j);
        return std::vector<CheckRecord>{compare_ideals(
            "", brute_hom_image(ideal, 1, ring, *degree_cap), cartier_image(ideal, 1, ring))};
      });
    }
  }
  if (!ring.reduced()) {
    run(out, "nilradical_reduction" + tag, [&] {
      return std::vector<CheckRecord>{nilradical_reduction_check(ring, e_max)};
    });
    return out;
  }
  if (ring.is_polynomial_ring()) {
    run(out, "regular_tau_is_unit" + tag, [&] {
      return std::vector<CheckRecord>{
          compare_ideals("", stable_big_test_ideal(ring, e_max), ring.unit_ideal())};
    });
  }
  run(out, "idempotence" + tag, [&] {
    Polynomial c = default_test_element(ring);
    Ideal tau = stable_big_test_ideal(ring, e_max, c);
    Ideal again = stable_interior({ring, tau, c, 0, e_max, kDefaultWindow});
    return std::vector<CheckRecord>{compare_ideals("", again, tau)};
  });
  run(out, "test_element_independence" + tag, [&] {
    Polynomial c = default_test_element(ring);
    Polynomial d = alternate_test_element(ring, c);
    CheckRecord r = compare_ideals("", stable_big_test_ideal(ring, e_max, c),
                                   stable_big_test_ideal(ring, e_max, d));
    r.note = "c = " + c.to_string() + " against c' = " + d.to_string();
    return std::vector<CheckRecord>{r};
  });
  run(out, "fixedness" + tag, [&] {
    Ideal tau = stable_big_test_ideal(ring, e_max);
    Compatibility c = compatibility_check(tau, ring, e_max);
    CheckRecord r = boolean_check("", c.compatible && c.fixed,
                                  std::string("compatible = ") + (c.compatible ? "true" : "false") +
                                      ", fixed = " + (c.fixed ? "true" : "false"));
    r.lhs = tau.canonical_strings();
    return std::vector<CheckRecord>{r};
  });
  run(out, "chain_containment" + tag, [&] {
    Ideal tau = stable_big_test_ideal(ring, e_max);
    ChainTrace chain = blickle_chain_down(ring.unit_ideal(), ring, e_max);
    if (!chain.stabilized) {
      return std::vector<CheckRecord>{{"", Verdict::NotStabilized, tau.canonical_strings(),
                                       chain.fixed_point.canonical_strings(), "chain did not stop"}};
    }
    return std::vector<CheckRecord>{compare_containment("", tau, chain.fixed_point)};
  });
  if (ring.has_minimal_primes()) {
    run(out, "minimal_primes_decomposition" + tag, [&] {
      return std::vector<CheckRecord>{minimal_primes_decomposition_check(ring, e_max)};
    });
  }
  std::optional<Ideal> supplied;
  if (cell.conductor) supplied = ideal_from(ring, *cell.conductor);
  if (supplied || default_conductor_method(ring)) {
    run(out, "conductor" + tag, [&] { return conductor_identities_check(ring, supplied, e_max); });
  }
  if (ring.defining_ideal().is_monomial() && !ring.is_polynomial_ring() && ring.has_minimal_primes()) {
    run(out, "stanley_reisner_equality" + tag, [&] {
      return std::vector<CheckRecord>{
          compare_ideals("", stable_big_test_ideal(ring, e_max), sum_of_annihilators(ring))};
    });
  }
  if (!ring.semigroup().empty()) {
    run(out, "finite_transform" + tag, [&] {
      return std::vector<CheckRecord>{finite_transform_check(ring, e_max)};
    });
  }
  for (const std::string& f : cell.localize_at) {
    run(out, "localization" + tag + "[" + f + "]", [&] {
      return std::vector<CheckRecord>{localization_commutes_check(ring, ring.parse(f), e_max)};
    });
  }
  for (const auto& j : cell.finite_length_quotients) {
    run(out, "duality" + tag + "[R/" + braces(j) + "]", [&] {
      auto l = GradedModulePresentation::cyclic(ring, ideal_from(ring, j));
      return std::vector<CheckRecord>{duality_check(l, default_test_element(ring), e_max)};
    });
  }
  return out;
}

bool is_known_suite(const std::string& name) { return name == "paper"; }

SuiteResult run_verify_suite(const std::vector<VerifyCell>& cells, unsigned e_max,
                             std::optional<unsigned> degree_cap) {
  std::vector<std::future<std::vector<CheckRecord>>> jobs;
  for (const VerifyCell& cell : cells) {
    jobs.push_back(std::async(std::launch::async, [&cell, e_max, degree_cap] {
      return verify_ring(cell, e_max, degree_cap);
    }));
  }
  SuiteResult result;
  for (auto& job : jobs) {
    std::vector<CheckRecord> recs = job.get();
    result.checks.insert(result.checks.end(), recs.begin(), recs.end());
  }
  std::sort(result.checks.begin(), result.checks.end(),
            [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
  bool fail = false;
  bool unstable = false;
  for (const CheckRecord& r : result.checks) {
    fail |= r.verdict == Verdict::Fail;
    unstable |= r.verdict == Verdict::NotStabilized;
  }
  result.exit_code = fail ? 4 : unstable ? 3 : 0;
  return result;
}

SuiteResult run_identity_suite(unsigned e_max, std::optional<unsigned> degree_cap) {
  std::vector<VerifyCell> cells;
  for (const CorpusEntry& entry : bundled_corpus()) cells.push_back(VerifyCell::from_entry(entry));
  return run_verify_suite(cells, e_max, degree_cap);
}

}  // namespace tint

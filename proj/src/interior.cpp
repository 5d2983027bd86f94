#include "tint/interior.hpp"

#include <algorithm>
#include <set>

#include "tint/cartier.hpp"
#include "tint/errors.hpp"

namespace tint {

namespace {

void validate(const InteriorQuery& q) {
  if (q.e_start > q.e_max) throw PreconditionError("e_start exceeds e_max");
  if (q.window == 0) throw PreconditionError("the stabilization window must be at least 1");
  if (!same_ring(q.test_element.ring(), q.ring.ambient())) {
    throw PreconditionError("test element from a different ring");
  }
  if (q.module_ideal && !same_ring(q.module_ideal->ring(), q.ring.ambient())) {
    throw PreconditionError("module ideal from a different ring");
  }
  NonzerodivisorVerdict v = check_in_r_circ(q.test_element, q.ring);
  if (!v.value) throw PreconditionError(v.diagnostic);
}

Polynomial det(std::vector<std::vector<Polynomial>> m, const RingPtr& ring) {
  std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(ring, 1);
  if (n == 1) return m[0][0];
  Polynomial out(ring);
  for (std::size_t col = 0; col < n; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      for (std::size_t c = 0; c < n; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][col] * det(std::move(minor), ring);
    out = col % 2 == 0 ? out + term : out - term;
  }
  return out;
}

void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
             std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == k) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = from; i < n; ++i) {
    cur.push_back(i);
    subsets(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

constexpr std::size_t kMaxCandidates = 10;

}  // namespace

Ideal interior_term(const InteriorQuery& q, unsigned e) {
  const RingPtr& s = q.ring.ambient();
  const Polynomial& c = q.test_element;
  if (e == 0) {
    if (!q.module_ideal) return Ideal(s, {c});
    return c * q.module_ideal->canonical();
  }
  Ideal mult = q.module_ideal ? hom_into_ideal_multipliers(*q.module_ideal, e, q.ring)
                              : fedder_colon(q.ring, e);
  return cartier_root(c * mult, e);
}

Ideal interior_chunk(const InteriorQuery& q, unsigned e0, unsigned e1) {
  validate(q);
  if (e0 > e1) throw PreconditionError("e0 exceeds e1");
  std::vector<Polynomial> gens;
  for (unsigned e = e0; e <= e1; ++e) {
    Ideal t = interior_term(q, e);
    gens.insert(gens.end(), t.generators().begin(), t.generators().end());
  }
  return q.ring.ideal_of(gens).canonical();
}

TauResult accumulate_terms(const RingPtr& ring, const Ideal& base,
                           const std::function<Ideal(unsigned)>& term, unsigned e_start,
                           unsigned e_max, unsigned window, const Polynomial& certificate) {
  if (window == 0) throw PreconditionError("the stabilization window must be at least 1");
  TauResult out{Ideal::zero(ring), {}, std::nullopt, certificate};
  Ideal current = base.canonical();
  for (unsigned e = e_start; e <= e_max; ++e) {
    if (!current.is_unit()) {
      Ideal t = term(e);
      std::vector<Polynomial> gens = current.groebner_basis();
      gens.insert(gens.end(), t.generators().begin(), t.generators().end());
      current = Ideal(ring, std::move(gens)).canonical();
    }
    out.partial_sums.emplace_back(e, current);
    std::size_t n = out.partial_sums.size();
    if (n >= window) {
      bool flat = true;
      for (std::size_t k = n - window; k + 1 < n && flat; ++k) {
        flat = out.partial_sums[k].second == out.partial_sums[k + 1].second;
      }
      if (flat) {
        out.stabilized_at = e;
        break;
      }
    }
  }
  out.ideal = current;
  return out;
}

TauResult tight_interior(const InteriorQuery& q) {
  validate(q);
  return accumulate_terms(
      q.ring.ambient(), q.ring.defining_ideal(), [&q](unsigned e) { return interior_term(q, e); },
      q.e_start, q.e_max, q.window, q.test_element);
}

Ideal stable_interior(const InteriorQuery& q) {
  TauResult r = tight_interior(q);
  if (!r.stabilized()) {
    throw NotStabilizedError("interior did not stabilize by e_max = " + std::to_string(q.e_max) +
                             " for ring " + q.ring.name());
  }
  return r.ideal;
}

Polynomial find_test_element(const RingPresentation& ring) {
  const RingPtr& s = ring.ambient();
  if (ring.is_polynomial_ring()) return Polynomial::constant(s, 1);
  if (!ring.reduced()) {
    throw UnsupportedInputError("R is not reduced; supply a test element explicitly");
  }
  const Ideal& i = ring.defining_ideal();
  std::size_t n = s->nvars();
  std::size_t h = n - ring.dimension();
  const std::vector<Polynomial>& gens = i.generators();
  std::vector<std::vector<Polynomial>> jac;
  for (const Polynomial& g : gens) {
    std::vector<Polynomial> row;
    for (std::size_t v = 0; v < n; ++v) row.push_back(derivative(g, v));
    jac.push_back(std::move(row));
  }
  std::vector<std::vector<std::size_t>> row_sets;
  std::vector<std::vector<std::size_t>> col_sets;
  std::vector<std::size_t> cur;
  subsets(gens.size(), h, 0, cur, row_sets);
  subsets(n, h, 0, cur, col_sets);
  std::vector<Polynomial> candidates;
  std::set<std::string> seen;
  for (const auto& rows : row_sets) {
    for (const auto& cols : col_sets) {
      std::vector<std::vector<Polynomial>> m;
      for (std::size_t r : rows) {
        std::vector<Polynomial> row;
        for (std::size_t c : cols) row.push_back(jac[r][c]);
        m.push_back(std::move(row));
      }
      Polynomial d = i.normal_form(det(std::move(m), s));
      if (d.is_zero() || !seen.insert(d.to_string()).second) continue;
      candidates.push_back(d);
    }
  }
  std::sort(candidates.begin(), candidates.end(), [&s](const Polynomial& a, const Polynomial& b) {
    int c = s->compare(a.leading_monomial(), b.leading_monomial());
    return c != 0 ? c < 0 : a.to_string() < b.to_string();
  });
  for (const Polynomial& c : candidates) {
    if (check_in_r_circ(c, ring).value) return c;
  }
  if (candidates.size() > kMaxCandidates) {
    candidates.erase(candidates.begin() + kMaxCandidates, candidates.end());
  }
  for (std::size_t k = candidates.size(); k >= 2; --k) {
    std::vector<std::vector<std::size_t>> picks;
    subsets(candidates.size(), k, 0, cur, picks);
    for (const auto& pick : picks) {
      Polynomial sum(s);
      for (std::size_t idx : pick) sum += candidates[idx];
      sum = i.normal_form(sum);
      if (!sum.is_zero() && check_in_r_circ(sum, ring).value) return sum;
    }
  }
  throw UnsupportedInputError("no test element found among Jacobian minors; supply one explicitly");
}

TauResult big_test_ideal(const RingPresentation& ring, const std::optional<Polynomial>& c,
                         unsigned e_max, unsigned window) {
  if (!ring.reduced()) throw PreconditionError("big_test_ideal needs a reduced ring");
  Polynomial element = c                                ? *c
                       : ring.declared_test_element() ? *ring.declared_test_element()
                                                      : find_test_element(ring);
  InteriorQuery q{ring, std::nullopt, element, 0, e_max, window};
  return tight_interior(q);
}

bool is_test_element(const Polynomial& c, const RingPresentation& ring, unsigned e_max) {
  if (!check_in_r_circ(c, ring).value) return false;
  TauResult tau = big_test_ideal(ring, std::nullopt, e_max);
  if (!tau.stabilized()) throw NotStabilizedError("big test ideal did not stabilize");
  return tau.ideal.contains(c);
}

bool is_strongly_f_regular(const RingPresentation& ring, unsigned e_max) {
  TauResult tau = big_test_ideal(ring, std::nullopt, e_max);
  if (tau.ideal.is_unit()) return true;
  if (!tau.stabilized()) throw NotStabilizedError("big test ideal did not stabilize");
  return false;
}

}  // namespace tint

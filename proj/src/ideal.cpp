#include "tint/ideal.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "tint/errors.hpp"
#include "tint/groebner.hpp"

namespace tint {

namespace {

bool all_monomial(const std::vector<Polynomial>& gens) {
  return std::all_of(gens.begin(), gens.end(),
                     [](const Polynomial& g) { return g.is_monomial(); });
}

// Minimal generators of a monomial ideal, sorted descending.
std::vector<Polynomial> minimalize_monomials(const RingPtr& ring, std::vector<Monomial> monos) {
  std::sort(monos.begin(), monos.end(), [&ring](const Monomial& a, const Monomial& b) {
    return ring->compare(a, b) < 0;
  });
  std::vector<Monomial> kept;
  for (const Monomial& m : monos) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&m](const Monomial& k) { return k.divides(m); });
    if (!redundant) kept.push_back(m);
  }
  std::sort(kept.begin(), kept.end(), [&ring](const Monomial& a, const Monomial& b) {
    return ring->compare(a, b) > 0;
  });
  std::vector<Polynomial> out;
  for (const Monomial& m : kept) out.push_back(Polynomial::monomial(ring, m, 1));
  return out;
}

std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& polys) {
  std::vector<Monomial> out;
  for (const Polynomial& p : polys) out.push_back(p.leading_monomial());
  return out;
}

void require_same(const Ideal& a, const Ideal& b) {
  if (!same_ring(a.ring(), b.ring())) throw PreconditionError("ideals belong to different rings");
}

std::vector<std::size_t> shift_map(std::size_t n) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i + 1;
  return m;
}

}  // namespace

Ideal::Ideal(RingPtr ring) : ring_(std::move(ring)), cache_(std::make_shared<detail::GbCache>()) {}

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), cache_(std::make_shared<detail::GbCache>()) {
  for (Polynomial& g : generators) {
    if (!same_ring(g.ring(), ring_)) throw PreconditionError("generator from a different ring");
    if (!g.is_zero()) gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Polynomial one = Polynomial::constant(ring, 1);
  return from_groebner(std::move(ring), {one});
}

Ideal Ideal::from_groebner(RingPtr ring, std::vector<Polynomial> reduced_gb) {
  Ideal out(ring, reduced_gb);
  std::call_once(out.cache_->once, [&] { out.cache_->basis = std::move(reduced_gb); });
  return out;
}

const std::vector<Polynomial>& Ideal::groebner_basis() const {
  std::call_once(cache_->once, [this] {
    if (all_monomial(gens_)) {
      cache_->basis = minimalize_monomials(ring_, leading_monomials(gens_));
    } else {
      cache_->basis = reduced_groebner_basis(ring_, gens_);
    }
  });
  return cache_->basis;
}

bool Ideal::is_unit() const {
  const auto& gb = groebner_basis();
  return gb.size() == 1 && gb[0].is_constant();
}

bool Ideal::is_monomial() const {
  if (all_monomial(gens_)) return true;
  return all_monomial(groebner_basis());
}

Polynomial Ideal::normal_form(const Polynomial& f) const {
  if (!same_ring(f.ring(), ring_)) throw PreconditionError("polynomial from a different ring");
  return tint::normal_form(f, groebner_basis());
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  require_same(*this, other);
  if (is_unit()) return true;
  const auto& gens = other.generators();
  return std::all_of(gens.begin(), gens.end(), [this](const Polynomial& g) { return contains(g); });
}

bool Ideal::operator==(const Ideal& other) const {
  if (!same_ring(ring_, other.ring_)) return false;
  const auto& a = groebner_basis();
  const auto& b = other.groebner_basis();
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

Ideal Ideal::canonical() const { return from_groebner(ring_, groebner_basis()); }

std::vector<std::string> Ideal::canonical_strings() const {
  std::vector<std::string> out;
  for (const Polynomial& g : groebner_basis()) out.push_back(g.to_string());
  std::sort(out.begin(), out.end());
  return out;
}

std::string Ideal::to_string() const {
  std::string out = "(";
  auto strs = canonical_strings();
  for (std::size_t i = 0; i < strs.size(); ++i) {
    if (i > 0) out += ", ";
    out += strs[i];
  }
  return out + ")";
}

Ideal operator+(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  std::vector<Polynomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), std::move(gens));
}

Ideal operator*(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.generators()) {
    for (const Polynomial& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), std::move(gens));
}

Ideal operator*(const Polynomial& f, const Ideal& a) {
  std::vector<Polynomial> gens;
  for (const Polynomial& g : a.generators()) gens.push_back(f * g);
  return Ideal(a.ring(), std::move(gens));
}

Ideal intersect(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  const RingPtr& ring = a.ring();
  if (a.is_zero() || b.is_zero()) return Ideal::zero(ring);
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  if (a.is_monomial() && b.is_monomial()) {
    std::vector<Monomial> lcms;
    for (const Polynomial& f : a.groebner_basis()) {
      for (const Polynomial& g : b.groebner_basis()) {
        lcms.push_back(f.leading_monomial().lcm(g.leading_monomial()));
      }
    }
    return Ideal::from_groebner(ring, minimalize_monomials(ring, lcms));
  }
  const RingPtr& ext = ring->elimination_extension();
  auto map = shift_map(ring->nvars());
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const Polynomial& f : a.groebner_basis()) gens.push_back(t * change_ring(f, ext, map));
  for (const Polynomial& g : b.groebner_basis()) {
    gens.push_back(one_minus_t * change_ring(g, ext, map));
  }
  std::vector<Polynomial> gb = reduced_groebner_basis(ext, gens);
  std::vector<std::size_t> back(ext->nvars());
  for (std::size_t i = 1; i < ext->nvars(); ++i) back[i] = i - 1;
  std::vector<Polynomial> kept;
  for (const Polynomial& g : gb) {
    if (g.leading_monomial()[0] != 0) continue;
    kept.push_back(change_ring(g, ring, back));
  }
  if (!(ring->order() == MonomialOrder::grevlex())) return Ideal(ring, std::move(kept));
  std::sort(kept.begin(), kept.end(), [&ring](const Polynomial& x, const Polynomial& y) {
    return ring->compare(x.leading_monomial(), y.leading_monomial()) > 0;
  });
  return Ideal::from_groebner(ring, std::move(kept));
}

Ideal intersect(const std::vector<Ideal>& ideals, const RingPtr& ring) {
  if (ideals.empty()) return Ideal::unit(ring);
  Ideal acc = ideals.front();
  for (std::size_t i = 1; i < ideals.size(); ++i) acc = intersect(acc, ideals[i]);
  return acc;
}

Ideal colon(const Ideal& a, const Polynomial& f) {
  if (!same_ring(a.ring(), f.ring())) throw PreconditionError("polynomial from a different ring");
  if (f.is_zero()) throw PreconditionError("colon by the zero ideal");
  const RingPtr& ring = a.ring();
  if (a.contains(f)) return Ideal::unit(ring);
  if (f.is_constant()) return a;
  if (a.is_monomial() && f.is_monomial()) {
    std::vector<Monomial> monos;
    const Monomial& m = f.leading_monomial();
    for (const Polynomial& g : a.groebner_basis()) {
      monos.push_back(g.leading_monomial() / g.leading_monomial().gcd(m));
    }
    return Ideal::from_groebner(ring, minimalize_monomials(ring, monos));
  }
  Ideal meet = intersect(a, Ideal(ring, {f}));
  std::vector<Polynomial> gens;
  for (const Polynomial& g : meet.groebner_basis()) gens.push_back(exact_divide(g, f));
  return Ideal(ring, std::move(gens));
}

Ideal colon(const Ideal& a, const Ideal& b) {
  require_same(a, b);
  if (b.is_zero()) throw PreconditionError("colon by the zero ideal");
  if (b.is_unit()) return a;
  if (a.contains(b)) return Ideal::unit(a.ring());
  std::vector<Ideal> parts;
  for (const Polynomial& g : b.groebner_basis()) parts.push_back(colon(a, g));
  return intersect(parts, a.ring());
}

Ideal frobenius_bracket(const Ideal& a, unsigned e) {
  if (e == 0) return a;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : a.generators()) gens.push_back(frobenius_power(g, e));
  return Ideal(a.ring(), std::move(gens));
}

namespace {

using VarSet = std::set<std::size_t>;

// Minimal vertex covers of the supports, found by splitting on a variable of
// the first uncovered generator.
void covers(const std::vector<VarSet>& supports, std::size_t from, VarSet chosen,
            std::set<VarSet>& out) {
  for (std::size_t k = from; k < supports.size(); ++k) {
    bool hit = std::any_of(supports[k].begin(), supports[k].end(),
                           [&chosen](std::size_t v) { return chosen.count(v) > 0; });
    if (hit) continue;
    for (std::size_t v : supports[k]) {
      VarSet next = chosen;
      next.insert(v);
      covers(supports, k + 1, next, out);
    }
    return;
  }
  out.insert(chosen);
}

}  // namespace

std::vector<Ideal> minimal_primes_monomial(const Ideal& a) {
  const RingPtr& ring = a.ring();
  if (!a.is_monomial()) {
    throw UnsupportedInputError(
        "minimal primes are only computed for monomial ideals; declare minimal_primes "
        "in the ring spec");
  }
  if (a.is_unit()) return {};
  std::vector<VarSet> supports;
  for (const Polynomial& g : a.groebner_basis()) {
    VarSet s;
    for (std::size_t i = 0; i < ring->nvars(); ++i) {
      if (g.leading_monomial()[i] > 0) s.insert(i);
    }
    supports.push_back(s);
  }
  std::set<VarSet> found;
  covers(supports, 0, {}, found);
  std::vector<VarSet> minimal;
  for (const VarSet& s : found) {
    bool dominated = std::any_of(found.begin(), found.end(), [&s](const VarSet& o) {
      return o != s && std::includes(s.begin(), s.end(), o.begin(), o.end());
    });
    if (!dominated) minimal.push_back(s);
  }
  std::vector<Ideal> out;
  for (const VarSet& s : minimal) {
    std::vector<Polynomial> gens;
    for (std::size_t v : s) gens.push_back(Polynomial::variable(ring, v));
    out.push_back(Ideal(ring, std::move(gens)).canonical());
  }
  std::sort(out.begin(), out.end(), [](const Ideal& x, const Ideal& y) {
    return x.canonical_strings() < y.canonical_strings();
  });
  return out;
}

Ideal monomial_radical(const Ideal& a) {
  if (!a.is_monomial()) throw UnsupportedInputError("radical is only computed for monomial ideals");
  std::vector<Monomial> monos;
  for (const Polynomial& g : a.groebner_basis()) {
    Monomial m;
    for (std::size_t i = 0; i < a.ring()->nvars(); ++i) {
      if (g.leading_monomial()[i] > 0) m.set(i, 1);
    }
    monos.push_back(m);
  }
  return Ideal::from_groebner(a.ring(), minimalize_monomials(a.ring(), monos));
}

bool is_square_free_monomial(const Ideal& a) {
  if (!a.is_monomial()) return false;
  for (const Polynomial& g : a.groebner_basis()) {
    for (std::size_t i = 0; i < a.ring()->nvars(); ++i) {
      if (g.leading_monomial()[i] > 1) return false;
    }
  }
  return true;
}

std::size_t krull_dimension(const Ideal& a) {
  const RingPtr& ring = a.ring();
  if (a.is_unit()) throw PreconditionError("dimension of the unit ideal");
  std::size_t n = ring->nvars();
  std::vector<Monomial> lms = leading_monomials(a.groebner_basis());
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::size_t size = static_cast<std::size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    bool independent = std::none_of(lms.begin(), lms.end(), [&](const Monomial& m) {
      for (std::size_t i = 0; i < n; ++i) {
        if (m[i] > 0 && !(mask & (1u << i))) return false;
      }
      return true;
    });
    if (independent) best = size;
  }
  return best;
}

CertifiedReduction reduce_with_cofactors(const Polynomial& f, const Ideal& ideal) {
  const RingPtr& ring = ideal.ring();
  const auto& gens = ideal.generators();
  TrackedBasis tb = groebner_basis(ring, gens, true);
  Division d = divide(f, tb.basis);
  std::vector<Polynomial> coeffs(gens.size(), Polynomial(ring));
  for (std::size_t i = 0; i < tb.basis.size(); ++i) {
    if (d.quotients[i].is_zero()) continue;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (!tb.cofactors[i][j].is_zero()) coeffs[j] += d.quotients[i] * tb.cofactors[i][j];
    }
  }
  CertifiedReduction out{d.remainder, {f - d.remainder, {}}};
  for (std::size_t j = 0; j < gens.size(); ++j) {
    if (!coeffs[j].is_zero()) out.cert.combination.emplace_back(coeffs[j], j);
  }
  return out;
}

}  // namespace tint

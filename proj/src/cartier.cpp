#include "tint/cartier.hpp"

#include <mutex>
#include <unordered_map>

#include "tint/errors.hpp"

namespace tint {

PeDecomposition pe_components(const Polynomial& f, unsigned e) {
  if (e == 0) throw PreconditionError("pe_components needs e >= 1");
  const RingPtr& ring = f.ring();
  std::uint64_t q = prime_power(ring->characteristic(), e);
  std::size_t n = ring->nvars();
  std::map<std::vector<std::uint32_t>, std::vector<Term>> buckets;
  for (const Term& t : f.terms()) {
    std::vector<std::uint32_t> key(n);
    Monomial root;
    for (std::size_t i = 0; i < n; ++i) {
      key[i] = static_cast<std::uint32_t>(t.mono[i] % q);
      root.set(i, static_cast<std::uint32_t>(t.mono[i] / q));
    }
    buckets[key].push_back({root, t.coeff});
  }
  PeDecomposition out;
  out.e = e;
  for (auto& [key, terms] : buckets) {
    out.components.emplace(key, Polynomial::from_terms(ring, std::move(terms)));
  }
  return out;
}

Polynomial reassemble(const PeDecomposition& d, const RingPtr& ring) {
  Polynomial out(ring);
  for (const auto& [key, comp] : d.components) {
    Monomial shift(key);
    out += frobenius_power(comp, d.e).mul_term(shift, 1);
  }
  return out;
}

Polynomial cartier_trace(const Polynomial& f, unsigned e) {
  if (e == 0) return f;
  const RingPtr& ring = f.ring();
  std::uint64_t q = prime_power(ring->characteristic(), e);
  std::size_t n = ring->nvars();
  std::vector<Term> terms;
  for (const Term& t : f.terms()) {
    Monomial root;
    bool hit = true;
    for (std::size_t i = 0; i < n && hit; ++i) {
      hit = t.mono[i] % q == q - 1;
      root.set(i, static_cast<std::uint32_t>(t.mono[i] / q));
    }
    if (hit) terms.push_back({root, t.coeff});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

Ideal cartier_root(const Ideal& k, unsigned e) {
  if (e == 0) return k;
  std::vector<Polynomial> gens;
  for (const Polynomial& g : k.generators()) {
    for (auto& [key, comp] : pe_components(g, e).components) gens.push_back(comp);
  }
  return Ideal(k.ring(), std::move(gens));
}

namespace {

bool is_regular_sequence(const std::vector<Polynomial>& gens, const RingPtr& ring) {
  Ideal acc = Ideal::zero(ring);
  for (const Polynomial& g : gens) {
    if (!acc.is_zero() && !(colon(acc, g) == acc)) return false;
    acc = acc + Ideal(ring, {g});
  }
  return !acc.is_unit();
}

Ideal compute_fedder_colon(const RingPresentation& ring, unsigned e) {
  const Ideal& i = ring.defining_ideal();
  const RingPtr& s = ring.ambient();
  if (i.is_zero()) return Ideal::unit(s);
  Ideal bracket = frobenius_bracket(i, e);
  if (i.is_monomial()) return colon(bracket, i);
  const std::vector<Polynomial>& gens = i.generators();
  std::uint64_t q = prime_power(ring.characteristic(), e);
  if (gens.size() == 1) return Ideal(s, {pow(gens[0], q - 1)});
  if (is_regular_sequence(gens, s)) {
    Polynomial prod = Polynomial::constant(s, 1);
    for (const Polynomial& g : gens) prod *= g;
    std::vector<Polynomial> out = bracket.generators();
    out.push_back(pow(prod, q - 1));
    return Ideal(s, std::move(out));
  }
  return colon(bracket, i);
}

std::string fedder_key(const RingPresentation& ring, unsigned e) {
  std::string key = std::to_string(ring.characteristic()) + "|" + std::to_string(e) + "|";
  for (const std::string& v : ring.ambient()->vars()) key += v + ",";
  key += "|" + std::to_string(static_cast<int>(ring.ambient()->order().kind)) + ":" +
         std::to_string(ring.ambient()->order().block) + "|";
  for (const Polynomial& g : ring.defining_ideal().generators()) key += g.to_string() + ";";
  return key;
}

}  // namespace

Ideal fedder_colon(const RingPresentation& ring, unsigned e) {
  if (e == 0) throw PreconditionError("fedder_colon needs e >= 1");
  static std::mutex mutex;
  static std::unordered_map<std::string, Ideal> cache;
  std::string key = fedder_key(ring, e);
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  Ideal result = compute_fedder_colon(ring, e);
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(key, result).first->second;
}

Ideal cartier_image(const Ideal& j, unsigned e, const RingPresentation& ring) {
  if (e == 0) throw PreconditionError("cartier_image needs e >= 1");
  if (!same_ring(j.ring(), ring.ambient())) throw PreconditionError("ideal from a different ring");
  Ideal premult = fedder_colon(ring, e);
  Ideal root = cartier_root(premult * j, e);
  return ring.ideal_of(root).canonical();
}

Ideal hom_into_ideal_multipliers(const Ideal& k, unsigned e, const RingPresentation& ring) {
  if (e == 0) throw PreconditionError("hom_into_ideal_multipliers needs e >= 1");
  Ideal kp = ring.ideal_of(k);
  Ideal premult = fedder_colon(ring, e);
  if (kp.is_unit()) return premult;
  return intersect(premult, frobenius_bracket(kp.canonical(), e));
}

bool is_f_pure_fedder(const RingPresentation& ring, const std::optional<Ideal>& m) {
  const RingPtr& s = ring.ambient();
  Ideal max_ideal = Ideal::zero(s);
  if (m) {
    if (!m->is_monomial()) throw PreconditionError("the maximal ideal must be monomial");
    max_ideal = *m;
  } else {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < s->nvars(); ++i) vars.push_back(Polynomial::variable(s, i));
    max_ideal = Ideal(s, std::move(vars));
  }
  Ideal bracket = frobenius_bracket(max_ideal, 1);
  return !bracket.contains(fedder_colon(ring, 1));
}

}  // namespace tint

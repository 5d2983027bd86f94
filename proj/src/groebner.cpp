#include "tint/groebner.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>

#include "tint/errors.hpp"

namespace tint {

namespace {

struct Entry {
  Polynomial poly;
  std::vector<Polynomial> cof;
};

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

class Buchberger {
 public:
  Buchberger(const RingPtr& ring, std::size_t ngens, bool track)
      : ring_(ring), ngens_(ngens), track_(track) {}

  void add_generator(const Polynomial& g, std::size_t index) {
    Entry e{g, {}};
    if (track_) {
      e.cof.assign(ngens_, Polynomial(ring_));
      e.cof[index] = Polynomial::constant(ring_, 1);
    }
    top_reduce(e);
    if (!e.poly.is_zero()) insert(std::move(e));
  }

  void run() {
    while (!pairs_.empty()) {
      std::size_t best = 0;
      for (std::size_t k = 1; k < pairs_.size(); ++k) {
        if (ring_->compare(pairs_[k].lcm, pairs_[best].lcm) < 0) best = k;
      }
      Pair pr = pairs_[best];
      pairs_[best] = pairs_.back();
      pairs_.pop_back();
      Entry s = spoly(pr);
      top_reduce(s);
      if (!s.poly.is_zero()) insert(std::move(s));
    }
  }

  TrackedBasis finish() {
    // Active leading monomials are already pairwise non-divisible.
    std::vector<Entry> reduced;
    for (std::size_t idx : active_) reduced.push_back(pool_[idx]);
    std::sort(reduced.begin(), reduced.end(), [this](const Entry& a, const Entry& b) {
      return ring_->compare(a.poly.leading_monomial(), b.poly.leading_monomial()) > 0;
    });
    for (std::size_t k = 0; k < reduced.size(); ++k) tail_reduce(reduced, k);
    TrackedBasis out;
    for (Entry& e : reduced) {
      out.basis.push_back(std::move(e.poly));
      if (track_) out.cofactors.push_back(std::move(e.cof));
    }
    return out;
  }

 private:
  void make_monic(Entry& e) {
    Coeff lc = e.poly.leading_coeff();
    if (lc == 1) return;
    Coeff inv = ring_->field().inv(lc);
    e.poly = e.poly.scaled(inv);
    if (track_) {
      for (Polynomial& c : e.cof) c = c.scaled(inv);
    }
  }

  std::optional<std::size_t> find_divisor(const Monomial& m) const {
    for (std::size_t idx : active_) {
      if (pool_[idx].poly.leading_monomial().divides(m)) return idx;
    }
    return std::nullopt;
  }

  void subtract(Entry& e, const Monomial& m, Coeff c, std::size_t idx) {
    const Entry& g = pool_[idx];
    e.poly = e.poly.sub_mul_term(m, c, g.poly);
    if (track_) {
      for (std::size_t k = 0; k < ngens_; ++k) {
        if (!g.cof[k].is_zero()) e.cof[k] = e.cof[k].sub_mul_term(m, c, g.cof[k]);
      }
    }
  }

  void top_reduce(Entry& e) {
    while (!e.poly.is_zero()) {
      auto idx = find_divisor(e.poly.leading_monomial());
      if (!idx) break;
      const Polynomial& g = pool_[*idx].poly;  // monic
      subtract(e, e.poly.leading_monomial() / g.leading_monomial(), e.poly.leading_coeff(), *idx);
    }
    if (!e.poly.is_zero()) make_monic(e);
  }

  void tail_reduce(std::vector<Entry>& basis, std::size_t k) {
    Entry& e = basis[k];
    std::vector<Term> kept;
    kept.push_back(e.poly.leading_term());
    Polynomial rest = Polynomial::from_sorted_terms(
        ring_, std::vector<Term>(e.poly.terms().begin() + 1, e.poly.terms().end()));
    Entry work{rest, e.cof};
    // Drop the leading term's contribution from the tracked representation
    // lazily: cofactors describe poly = kept + rest, which stays correct as
    // rest is reduced by other basis elements.
    while (!work.poly.is_zero()) {
      const Term lt = work.poly.leading_term();
      std::optional<std::size_t> div;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        if (j != k && basis[j].poly.leading_monomial().divides(lt.mono)) {
          div = j;
          break;
        }
      }
      if (!div) {
        kept.push_back(lt);
        work.poly = Polynomial::from_sorted_terms(
            ring_, std::vector<Term>(work.poly.terms().begin() + 1, work.poly.terms().end()));
        continue;
      }
      const Entry& g = basis[*div];
      Monomial m = lt.mono / g.poly.leading_monomial();
      work.poly = work.poly.sub_mul_term(m, lt.coeff, g.poly);
      if (track_) {
        for (std::size_t c = 0; c < ngens_; ++c) {
          if (!g.cof[c].is_zero()) work.cof[c] = work.cof[c].sub_mul_term(m, lt.coeff, g.cof[c]);
        }
      }
    }
    e.poly = Polynomial::from_sorted_terms(ring_, std::move(kept));
    if (track_) e.cof = std::move(work.cof);
  }

  Entry spoly(const Pair& pr) {
    const Entry& a = pool_[pr.i];
    const Entry& b = pool_[pr.j];
    Monomial ma = pr.lcm / a.poly.leading_monomial();
    Monomial mb = pr.lcm / b.poly.leading_monomial();
    Entry s{a.poly.mul_term(ma, 1), {}};
    s.poly = s.poly.sub_mul_term(mb, 1, b.poly);
    if (track_) {
      s.cof.resize(ngens_, Polynomial(ring_));
      for (std::size_t k = 0; k < ngens_; ++k) {
        s.cof[k] = a.cof[k].mul_term(ma, 1).sub_mul_term(mb, 1, b.cof[k]);
      }
    }
    return s;
  }

  // Gebauer–Möller update.
  void insert(Entry h) {
    std::size_t hi = pool_.size();
    pool_.push_back(std::move(h));
    const Monomial lh = pool_[hi].poly.leading_monomial();

    std::vector<Pair> c;
    for (std::size_t g : active_) c.push_back({hi, g, lh.lcm(pool_[g].poly.leading_monomial())});
    std::vector<Pair> d;
    while (!c.empty()) {
      Pair p1 = c.front();
      c.erase(c.begin());
      bool disjoint = lh.coprime(pool_[p1.j].poly.leading_monomial());
      bool keep = disjoint;
      if (!keep) {
        keep = true;
        for (const Pair& p2 : c) {
          if (p2.lcm.divides(p1.lcm)) {
            keep = false;
            break;
          }
        }
        if (keep) {
          for (const Pair& p2 : d) {
            if (p2.lcm.divides(p1.lcm)) {
              keep = false;
              break;
            }
          }
        }
      }
      if (keep) d.push_back(p1);
    }
    std::vector<Pair> next;
    for (const Pair& p : pairs_) {
      const Monomial li = pool_[p.i].poly.leading_monomial();
      const Monomial lj = pool_[p.j].poly.leading_monomial();
      bool drop = lh.divides(p.lcm) && !(li.lcm(lh) == p.lcm) && !(lh.lcm(lj) == p.lcm);
      if (!drop) next.push_back(p);
    }
    for (const Pair& p : d) {
      if (!lh.coprime(pool_[p.j].poly.leading_monomial())) next.push_back(p);
    }
    pairs_ = std::move(next);

    std::vector<std::size_t> act;
    for (std::size_t g : active_) {
      if (!lh.divides(pool_[g].poly.leading_monomial())) act.push_back(g);
    }
    act.push_back(hi);
    active_ = std::move(act);
  }

  RingPtr ring_;
  std::size_t ngens_;
  bool track_;
  std::vector<Entry> pool_;
  std::vector<std::size_t> active_;
  std::vector<Pair> pairs_;
};

}  // namespace

TrackedBasis groebner_basis(const RingPtr& ring, std::span<const Polynomial> gens,
                            bool track_cofactors) {
  Buchberger bb(ring, gens.size(), track_cofactors);
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (!same_ring(gens[k].ring(), ring)) {
      throw PreconditionError("generator belongs to a different ring");
    }
    if (!gens[k].is_zero()) bb.add_generator(gens[k], k);
  }
  bb.run();
  return bb.finish();
}

std::vector<Polynomial> reduced_groebner_basis(const RingPtr& ring,
                                               std::span<const Polynomial> gens) {
  return groebner_basis(ring, gens, false).basis;
}

Division divide(const Polynomial& f, std::span<const Polynomial> divisors) {
  const RingPtr& ring = f.ring();
  const PrimeField& F = ring->field();
  Division out{Polynomial(ring), std::vector<Polynomial>(divisors.size(), Polynomial(ring))};
  std::vector<std::vector<Term>> quot(divisors.size());
  std::vector<Coeff> inv(divisors.size(), 0);
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    if (!divisors[i].is_zero()) inv[i] = F.inv(divisors[i].leading_coeff());
  }
  std::vector<Term> rem;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    bool reduced = false;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
      if (divisors[i].is_zero()) continue;
      if (divisors[i].leading_monomial().divides(lt.mono)) {
        Monomial m = lt.mono / divisors[i].leading_monomial();
        Coeff c = F.mul(lt.coeff, inv[i]);
        quot[i].push_back({m, c});
        p = p.sub_mul_term(m, c, divisors[i]);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(lt);
      p = Polynomial::from_sorted_terms(ring,
                                        std::vector<Term>(p.terms().begin() + 1, p.terms().end()));
    }
  }
  out.remainder = Polynomial::from_sorted_terms(ring, std::move(rem));
  for (std::size_t i = 0; i < divisors.size(); ++i) {
    out.quotients[i] = Polynomial::from_terms(ring, std::move(quot[i]));
  }
  return out;
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors) {
  const RingPtr& ring = f.ring();
  const PrimeField& F = ring->field();
  std::vector<Term> rem;
  Polynomial p = f;
  while (!p.is_zero()) {
    const Term lt = p.leading_term();
    bool reduced = false;
    for (const Polynomial& g : divisors) {
      if (!g.is_zero() && g.leading_monomial().divides(lt.mono)) {
        Coeff c = F.mul(lt.coeff, F.inv(g.leading_coeff()));
        p = p.sub_mul_term(lt.mono / g.leading_monomial(), c, g);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(lt);
      p = Polynomial::from_sorted_terms(ring,
                                        std::vector<Term>(p.terms().begin() + 1, p.terms().end()));
    }
  }
  return Polynomial::from_sorted_terms(ring, std::move(rem));
}

}  // namespace tint

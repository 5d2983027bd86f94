#include "tint/polynomial.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <utility>

#include "tint/errors.hpp"

namespace tint {

// ---------------------------------------------------------------- Monomial

Monomial::Monomial(std::span<const std::uint32_t> exponents) {
  if (exponents.size() > kMaxVars) {
    throw UnsupportedInputError("at most " + std::to_string(kMaxVars) +
                                " variables are supported");
  }
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    exps_[i] = exponents[i];
    degree_ += exponents[i];
  }
}

void Monomial::set(std::size_t i, std::uint32_t value) {
  degree_ = degree_ - exps_[i] + value;
  exps_[i] = value;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint64_t s = std::uint64_t(exps_[i]) + other.exps_[i];
    if (s > std::numeric_limits<std::uint32_t>::max()) {
      throw UnsupportedInputError("exponent overflow");
    }
    r.exps_[i] = static_cast<std::uint32_t>(s);
  }
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = exps_[i] - divisor.exps_[i];
  r.degree_ = degree_ - divisor.degree_;
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::max(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    r.exps_[i] = std::min(exps_[i], other.exps_[i]);
    r.degree_ += r.exps_[i];
  }
  return r;
}

Monomial Monomial::scaled(std::uint64_t k) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint64_t s = std::uint64_t(exps_[i]) * k;
    if (s > std::numeric_limits<std::uint32_t>::max()) {
      throw UnsupportedInputError("exponent overflow in Frobenius power; lower e");
    }
    r.exps_[i] = static_cast<std::uint32_t>(s);
    r.degree_ += s;
  }
  return r;
}

namespace {

int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::uint64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace

int MonomialOrder::compare(const Monomial& a, const Monomial& b, std::size_t nvars) const {
  switch (kind) {
    case OrderKind::Lex:
      for (std::size_t i = 0; i < nvars; ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
      }
      return 0;
    case OrderKind::GRevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = nvars; i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
      }
      return 0;
    case OrderKind::Block: {
      int c = grevlex_range(a, b, 0, block);
      if (c != 0) return c;
      return grevlex_range(a, b, block, nvars);
    }
  }
  return 0;
}

// ---------------------------------------------------------------- PolyRing

PolyRing::PolyRing(std::uint32_t p, std::vector<std::string> vars, MonomialOrder order)
    : field_(p), vars_(std::move(vars)), order_(order) {
  if (vars_.size() > kMaxVars) {
    throw UnsupportedInputError("at most " + std::to_string(kMaxVars) +
                                " variables are supported");
  }
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (vars_[i] == vars_[j]) throw PreconditionError("duplicate variable " + vars_[i]);
    }
  }
}

std::optional<std::size_t> PolyRing::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == name) return i;
  }
  return std::nullopt;
}

const RingPtr& PolyRing::elimination_extension() const {
  std::call_once(extension_once_, [this] {
    std::vector<std::string> v;
    v.reserve(vars_.size() + 1);
    v.push_back("_t");
    v.insert(v.end(), vars_.begin(), vars_.end());
    extension_ = make_ring(characteristic(), std::move(v), MonomialOrder::elimination(1));
  });
  return extension_;
}

RingPtr make_ring(std::uint32_t p, std::vector<std::string> vars, MonomialOrder order) {
  return std::make_shared<const PolyRing>(p, std::move(vars), order);
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------- Polynomial

namespace {

void require_same(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) {
    throw PreconditionError("polynomials belong to different rings");
  }
}

// Merges two descending term lists, combining a + sign*b.
std::vector<Term> merge_terms(const PolyRing& ring, const std::vector<Term>& a,
                              const std::vector<Term>& b, bool subtract) {
  const PrimeField& F = ring.field();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int c = ring.compare(a[i].mono, b[j].mono);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back({b[j].mono, subtract ? F.neg(b[j].coeff) : b[j].coeff});
      ++j;
    } else {
      Coeff s = subtract ? F.sub(a[i].coeff, b[j].coeff) : F.add(a[i].coeff, b[j].coeff);
      if (s != 0) out.push_back({a[i].mono, s});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back({b[j].mono, subtract ? F.neg(b[j].coeff) : b[j].coeff});
  }
  return out;
}

std::vector<Term> shifted(const PolyRing& ring, const std::vector<Term>& b, const Term& t) {
  const PrimeField& F = ring.field();
  std::vector<Term> out;
  out.reserve(b.size());
  for (const Term& s : b) out.push_back({s.mono * t.mono, F.mul(s.coeff, t.coeff)});
  return out;
}

std::vector<Term> product_range(const PolyRing& ring, const std::vector<Term>& a,
                                std::size_t lo, std::size_t hi, const std::vector<Term>& b) {
  if (hi - lo == 1) return shifted(ring, b, a[lo]);
  std::size_t mid = lo + (hi - lo) / 2;
  return merge_terms(ring, product_range(ring, a, lo, mid, b),
                     product_range(ring, a, mid, hi, b), false);
}

}  // namespace

Polynomial Polynomial::constant(RingPtr ring, std::int64_t c) {
  Polynomial r(ring);
  Coeff v = ring->field().reduce(c);
  if (v != 0) r.terms_.push_back({Monomial{}, v});
  return r;
}

Polynomial Polynomial::monomial(RingPtr ring, const Monomial& m, Coeff c) {
  Polynomial r(ring);
  c %= ring->characteristic();
  if (c != 0) r.terms_.push_back({m, c});
  return r;
}

Polynomial Polynomial::variable(RingPtr ring, std::size_t i) {
  if (i >= ring->nvars()) throw PreconditionError("variable index out of range");
  Monomial m;
  m.set(i, 1);
  return monomial(std::move(ring), m, 1);
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
  const PolyRing& R = *ring;
  for (Term& t : terms) t.coeff %= R.characteristic();
  std::sort(terms.begin(), terms.end(), [&R](const Term& a, const Term& b) {
    return R.compare(a.mono, b.mono) > 0;
  });
  Polynomial r(std::move(ring));
  for (const Term& t : terms) {
    if (!r.terms_.empty() && r.terms_.back().mono == t.mono) {
      r.terms_.back().coeff = R.field().add(r.terms_.back().coeff, t.coeff);
      if (r.terms_.back().coeff == 0) r.terms_.pop_back();
    } else if (t.coeff != 0) {
      r.terms_.push_back(t);
    }
  }
  return r;
}

Polynomial Polynomial::from_sorted_terms(RingPtr ring, std::vector<Term> terms) {
  Polynomial r(std::move(ring));
  r.terms_ = std::move(terms);
  return r;
}

std::uint64_t Polynomial::total_degree() const {
  std::uint64_t d = 0;
  for (const Term& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Coeff Polynomial::coefficient(const Monomial& m) const {
  for (const Term& t : terms_) {
    if (t.mono == m) return t.coeff;
  }
  return 0;
}

std::uint64_t Polynomial::weighted_degree(std::span<const std::uint32_t> weights) const {
  std::uint64_t best = 0;
  for (const Term& t : terms_) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) d += std::uint64_t(weights[i]) * t.mono[i];
    best = std::max(best, d);
  }
  return best;
}

bool Polynomial::is_homogeneous(std::span<const std::uint32_t> weights) const {
  std::optional<std::uint64_t> deg;
  for (const Term& t : terms_) {
    std::uint64_t d = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) d += std::uint64_t(weights[i]) * t.mono[i];
    if (deg && *deg != d) return false;
    deg = d;
  }
  return true;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  require_same(*this, other);
  return from_sorted_terms(ring_, merge_terms(*ring_, terms_, other.terms_, false));
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
  require_same(*this, other);
  return from_sorted_terms(ring_, merge_terms(*ring_, terms_, other.terms_, true));
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1)); }

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same(*this, other);
  if (is_zero() || other.is_zero()) return Polynomial(ring_);
  const auto& small = terms_.size() <= other.terms_.size() ? terms_ : other.terms_;
  const auto& big = terms_.size() <= other.terms_.size() ? other.terms_ : terms_;
  return from_sorted_terms(ring_, product_range(*ring_, small, 0, small.size(), big));
}

Polynomial Polynomial::scaled(Coeff c) const {
  c %= ring_->characteristic();
  if (c == 0) return Polynomial(ring_);
  Polynomial r(ring_);
  r.terms_.reserve(terms_.size());
  for (const Term& t : terms_) r.terms_.push_back({t.mono, ring_->field().mul(t.coeff, c)});
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, Coeff c) const {
  c %= ring_->characteristic();
  if (c == 0) return Polynomial(ring_);
  return from_sorted_terms(ring_, shifted(*ring_, terms_, Term{m, c}));
}

Polynomial Polynomial::sub_mul_term(const Monomial& m, Coeff c, const Polynomial& other) const {
  return from_sorted_terms(
      ring_, merge_terms(*ring_, terms_, shifted(*ring_, other.terms_, Term{m, c}), true));
}

Polynomial Polynomial::monic() const {
  if (is_zero() || leading_coeff() == 1) return *this;
  return scaled(ring_->field().inv(leading_coeff()));
}

bool Polynomial::operator==(const Polynomial& other) const {
  if (!same_ring(ring_, other.ring_) || terms_.size() != other.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].coeff != other.terms_[i].coeff || !(terms_[i].mono == other.terms_[i].mono)) {
      return false;
    }
  }
  return true;
}

std::string render_monomial(const Monomial& m, const PolyRing& ring) {
  std::string out;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.vars()[i];
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const Term& t = terms_[k];
    if (k > 0) out += '+';
    if (t.mono.is_one()) {
      out += std::to_string(t.coeff);
    } else if (t.coeff == 1) {
      out += render_monomial(t.mono, *ring_);
    } else {
      out += std::to_string(t.coeff) + "*" + render_monomial(t.mono, *ring_);
    }
  }
  return out;
}

// ---------------------------------------------------------------- free functions

std::uint64_t prime_power(std::uint32_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > std::numeric_limits<std::uint32_t>::max() / p) {
      throw UnsupportedInputError("p^e overflows; lower e");
    }
    q *= p;
  }
  return q;
}

Polynomial frobenius_power(const Polynomial& f, unsigned e) {
  if (e == 0) return f;
  std::uint64_t q = prime_power(f.ring()->characteristic(), e);
  std::vector<Term> terms;
  terms.reserve(f.size());
  // Coefficients live in the prime field, where c^q = c. Scaling exponents
  // by q preserves the descending order.
  for (const Term& t : f.terms()) terms.push_back({t.mono.scaled(q), t.coeff});
  return Polynomial::from_sorted_terms(f.ring(), std::move(terms));
}

Polynomial pow(const Polynomial& f, std::uint64_t k) {
  Polynomial result = Polynomial::constant(f.ring(), 1);
  Polynomial base = f;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial derivative(const Polynomial& f, std::size_t var) {
  const PrimeField& F = f.ring()->field();
  std::vector<Term> terms;
  for (const Term& t : f.terms()) {
    std::uint32_t k = t.mono[var];
    Coeff c = F.mul(t.coeff, k % F.characteristic());
    if (c == 0) continue;
    Monomial m = t.mono;
    m.set(var, k - 1);
    terms.push_back({m, c});
  }
  return Polynomial::from_terms(f.ring(), std::move(terms));
}

Polynomial exact_divide(const Polynomial& a, const Polynomial& b) {
  require_same(a, b);
  if (b.is_zero()) throw PreconditionError("division by zero polynomial");
  const PrimeField& F = a.ring()->field();
  Coeff inv = F.inv(b.leading_coeff());
  Polynomial rest = a;
  std::vector<Term> quotient;
  while (!rest.is_zero()) {
    const Term& lt = rest.leading_term();
    if (!b.leading_monomial().divides(lt.mono)) {
      throw InternalError("exact_divide: " + b.to_string() + " does not divide " + a.to_string());
    }
    Monomial m = lt.mono / b.leading_monomial();
    Coeff c = F.mul(lt.coeff, inv);
    quotient.push_back({m, c});
    rest = rest.sub_mul_term(m, c, b);
  }
  return Polynomial::from_sorted_terms(a.ring(), std::move(quotient));
}

Polynomial change_ring(const Polynomial& f, const RingPtr& target,
                       std::span<const std::size_t> var_map) {
  if (f.ring()->characteristic() != target->characteristic()) {
    throw PreconditionError("change_ring across characteristics");
  }
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const Term& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
      if (t.mono[i] == 0) continue;
      m.set(var_map[i], m[var_map[i]] + t.mono[i]);
    }
    terms.push_back({m, t.coeff});
  }
  return Polynomial::from_terms(target, std::move(terms));
}

Polynomial substitute(const Polynomial& f, const RingPtr& target,
                      std::span<const Polynomial> images) {
  Polynomial result(target);
  for (const Term& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
      if (t.mono[i] > 0) term = term * pow(images[i], t.mono[i]);
    }
    result += term;
  }
  return result;
}

}  // namespace tint

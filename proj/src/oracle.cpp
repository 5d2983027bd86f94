#include "tint/oracle.hpp"

#include <algorithm>
#include <numeric>

#include "tint/cartier.hpp"
#include "tint/errors.hpp"

namespace tint {

std::int64_t weighted_degree(const Monomial& m, const std::vector<std::uint32_t>& weights,
                             std::size_t nvars) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < nvars; ++i) d += static_cast<std::int64_t>(m[i]) * weights[i];
  return d;
}

namespace {

bool homogeneous_for(const std::vector<Polynomial>& gens, const std::vector<std::uint32_t>& w) {
  return std::all_of(gens.begin(), gens.end(),
                     [&w](const Polynomial& g) { return g.is_homogeneous(w); });
}

}  // namespace

std::vector<std::uint32_t> find_grading(const RingPresentation& ring) {
  std::size_t n = ring.nvars();
  const std::vector<Polynomial>& gb = ring.defining_ideal().groebner_basis();
  std::vector<std::uint32_t> w(n, 1);
  if (homogeneous_for(gb, w)) return w;
  if (ring.semigroup().size() == n && homogeneous_for(gb, ring.semigroup())) {
    return ring.semigroup();
  }
  constexpr std::uint32_t kMaxWeight = 4;
  std::fill(w.begin(), w.end(), 1);
  while (true) {
    std::size_t i = 0;
    while (i < n && w[i] == kMaxWeight) w[i++] = 1;
    if (i == n) break;
    ++w[i];
    if (homogeneous_for(gb, w)) return w;
  }
  throw UnsupportedInputError("no positive grading with weights <= 4 makes I homogeneous");
}

GradedRing::GradedRing(RingPresentation ring, std::vector<std::uint32_t> weights)
    : ring_(std::move(ring)), weights_(std::move(weights)) {
  if (weights_.size() != ring_.nvars()) throw PreconditionError("one weight per variable");
  for (std::uint32_t w : weights_) {
    if (w == 0) throw PreconditionError("weights must be positive");
  }
  if (!homogeneous_for(ring_.defining_ideal().groebner_basis(), weights_)) {
    throw PreconditionError("I is not homogeneous for the weights");
  }
}

std::uint32_t GradedRing::max_weight() const {
  return *std::max_element(weights_.begin(), weights_.end());
}

std::int64_t GradedRing::degree(const Monomial& m) const {
  return weighted_degree(m, weights_, ring_.nvars());
}

const GradedRing::Slice& GradedRing::slice(std::int64_t k) const {
  auto it = slices_.find(k);
  if (it != slices_.end()) return *it->second;
  auto s = std::make_unique<Slice>();
  if (k >= 0) {
    std::size_t n = ring_.nvars();
    const auto& gb = ring_.defining_ideal().groebner_basis();
    Monomial cur;
    // Exponents of variable i range over what the remaining degree allows.
    auto rec = [&](auto&& self, std::size_t i, std::int64_t left) -> void {
      if (i == n) {
        if (left != 0) return;
        bool standard = std::none_of(gb.begin(), gb.end(), [&cur](const Polynomial& g) {
          return g.leading_monomial().divides(cur);
        });
        if (standard) s->basis.push_back(cur);
        return;
      }
      for (std::int64_t x = left / weights_[i]; x >= 0; --x) {
        cur.set(i, static_cast<std::uint32_t>(x));
        self(self, i + 1, left - x * weights_[i]);
      }
      cur.set(i, 0);
    };
    rec(rec, 0, k);
    const RingPtr& r = ring_.ambient();
    std::sort(s->basis.begin(), s->basis.end(),
              [&r](const Monomial& a, const Monomial& b) { return r->compare(a, b) > 0; });
    for (std::size_t i = 0; i < s->basis.size(); ++i) s->index.emplace(s->basis[i], i);
  }
  return *slices_.emplace(k, std::move(s)).first->second;
}

const std::vector<Monomial>& GradedRing::basis(std::int64_t k) const { return slice(k).basis; }

std::size_t GradedRing::index(std::int64_t k, const Monomial& m) const {
  const Slice& s = slice(k);
  auto it = s.index.find(m);
  if (it == s.index.end()) throw InternalError("monomial is not standard in this degree");
  return it->second;
}

Polynomial GradedRing::normal_form(const Polynomial& f) const {
  return ring_.defining_ideal().normal_form(f);
}

std::vector<Coeff> GradedRing::coordinates(const Polynomial& f, std::int64_t k) const {
  Polynomial nf = normal_form(f);
  std::vector<Coeff> v(basis(k).size(), 0);
  for (const Term& t : nf.terms()) {
    if (degree(t.mono) != k) throw InternalError("polynomial is not homogeneous of degree k");
    v[index(k, t.mono)] = t.coeff;
  }
  return v;
}

Polynomial GradedRing::from_coordinates(const std::vector<Coeff>& v, std::int64_t k) const {
  const auto& b = basis(k);
  std::vector<Term> terms;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] != 0) terms.push_back({b[i], v[i]});
  }
  return Polynomial::from_terms(ring_.ambient(), std::move(terms));
}

namespace {

std::vector<Monomial> exponent_box(std::size_t n, std::uint64_t q) {
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (std::uint64_t a = 0; a < q; ++a) {
      cur.set(i, static_cast<std::uint32_t>(a));
      self(self, i + 1);
    }
    cur.set(i, 0);
  };
  rec(rec, 0);
  return out;
}

/// f x^b = sum_a h_a^q x^a, with a as an index into the box.
struct Decomposed {
  std::int64_t degree;
  std::vector<std::pair<std::size_t, Polynomial>> parts;
};

Decomposed decompose(const Polynomial& f, unsigned e, std::int64_t degree, std::uint64_t q,
                     std::size_t n) {
  Decomposed d{degree, {}};
  for (auto& [key, comp] : pe_components(f, e).components) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < n; ++i) idx = idx * q + key[i];
    d.parts.emplace_back(idx, comp);
  }
  return d;
}

std::size_t box_index(const Monomial& a, std::uint64_t q, std::size_t n) {
  std::size_t idx = 0;
  for (std::size_t i = 0; i < n; ++i) idx = idx * q + a[i];
  return idx;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t r = a / b;
  return (a % b != 0 && (a < 0) != (b < 0)) ? r - 1 : r;
}

}  // namespace

Ideal brute_hom_image(const Ideal& j, unsigned e, const RingPresentation& ring, unsigned d) {
  if (e == 0) throw PreconditionError("brute_hom_image needs e >= 1");
  std::vector<std::uint32_t> w = find_grading(ring);
  GradedRing gr(ring, w);
  const RingPtr& s = ring.ambient();
  const PrimeField& field = s->field();
  std::size_t n = s->nvars();
  for (const Polynomial& g : j.generators()) {
    if (!g.is_homogeneous(w)) throw PreconditionError("brute_hom_image needs a homogeneous J");
  }
  std::uint64_t q = prime_power(ring.characteristic(), e);
  std::vector<Monomial> box = exponent_box(n, q);
  std::vector<std::int64_t> wa(box.size());
  for (const Monomial& a : box) wa[box_index(a, q, n)] = gr.degree(a);

  std::vector<Decomposed> relations;
  for (const Polynomial& g : ring.defining_ideal().groebner_basis()) {
    std::int64_t dg = g.weighted_degree(w);
    for (const Monomial& b : box) {
      relations.push_back(decompose(g.mul_term(b, 1), e, dg + gr.degree(b), q, n));
    }
  }
  std::vector<Decomposed> sources;
  for (const Polynomial& g : j.generators()) {
    std::int64_t dg = g.weighted_degree(w);
    for (const Monomial& b : box) {
      sources.push_back(decompose(g.mul_term(b, 1), e, dg + gr.degree(b), q, n));
    }
  }

  std::int64_t top = static_cast<std::int64_t>(d) + 1;
  std::map<std::int64_t, EchelonSpan> images;
  std::int64_t s_min = -*std::max_element(wa.begin(), wa.end());
  std::int64_t s_max = static_cast<std::int64_t>(q) * top;
  for (std::int64_t shift = s_min; shift <= s_max; ++shift) {
    // Unknown block per box index: the coordinates of phi(x^a) in R_t.
    std::vector<std::int64_t> t_of(box.size(), -1);
    std::vector<std::size_t> offset(box.size(), 0);
    std::size_t cols = 0;
    for (std::size_t a = 0; a < box.size(); ++a) {
      std::int64_t num = wa[a] + shift;
      if (num < 0 || num % static_cast<std::int64_t>(q) != 0) continue;
      t_of[a] = num / static_cast<std::int64_t>(q);
      offset[a] = cols;
      cols += gr.basis(t_of[a]).size();
    }
    if (cols == 0) continue;
    auto contribution = [&](const Decomposed& dec, std::int64_t target) {
      std::size_t rows = gr.basis(target).size();
      Matrix m(rows, cols);
      for (const auto& [a, h] : dec.parts) {
        if (t_of[a] < 0) continue;
        const auto& mons = gr.basis(t_of[a]);
        for (std::size_t k = 0; k < mons.size(); ++k) {
          std::vector<Coeff> v = gr.coordinates(h.mul_term(mons[k], 1), target);
          for (std::size_t r = 0; r < rows; ++r) m.at(r, offset[a] + k) = v[r];
        }
      }
      return m;
    };
    Matrix system(0, cols);
    for (const Decomposed& rel : relations) {
      std::int64_t num = rel.degree + shift;
      if (num < 0 || num % static_cast<std::int64_t>(q) != 0) continue;
      Matrix block = contribution(rel, num / static_cast<std::int64_t>(q));
      for (std::size_t r = 0; r < block.rows(); ++r) system.append_row(block.row(r));
    }
    std::vector<std::vector<Coeff>> maps = nullspace(system, field);
    if (maps.empty()) continue;
    for (const Decomposed& src : sources) {
      std::int64_t num = src.degree + shift;
      if (num < 0 || num % static_cast<std::int64_t>(q) != 0) continue;
      std::int64_t target = num / static_cast<std::int64_t>(q);
      if (target > top) continue;
      Matrix block = contribution(src, target);
      auto it = images.try_emplace(target, block.rows()).first;
      for (const auto& phi : maps) it->second.add(block.apply(phi, field), field);
    }
  }
  std::vector<Polynomial> low;
  std::vector<Polynomial> high;
  for (const auto& [deg, span] : images) {
    for (const auto& v : span.rows()) {
      Polynomial g = gr.from_coordinates(v, deg);
      if (deg <= static_cast<std::int64_t>(d)) low.push_back(g);
      high.push_back(g);
    }
  }
  Ideal a = ring.ideal_of(low);
  if (!(a == ring.ideal_of(high))) {
    throw PreconditionError("degree cap " + std::to_string(d) +
                            " misses generators of the Hom-image; raise d");
  }
  return a.canonical();
}

namespace {

/// Weighted degree of a column, or nullopt for the zero column.
std::optional<std::int64_t> column_degree(const std::vector<Polynomial>& col,
                                          const std::vector<std::int64_t>& gen_degrees,
                                          const std::vector<std::uint32_t>& w) {
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (!col[i].is_zero()) {
      return static_cast<std::int64_t>(col[i].weighted_degree(w)) + gen_degrees[i];
    }
  }
  return std::nullopt;
}

std::size_t max_weight_of(const std::vector<std::uint32_t>& w) {
  return w.empty() ? 1 : *std::max_element(w.begin(), w.end());
}

/// First K past every generator degree with M_K, ..., M_{K+maxw-1} all zero.
std::int64_t scan_witness(const GradedModulePresentation& m, const GradedRing& gr,
                          std::int64_t cap) {
  if (m.generator_degrees.empty()) return 0;
  std::int64_t lo = *std::min_element(m.generator_degrees.begin(), m.generator_degrees.end());
  std::int64_t top = *std::max_element(m.generator_degrees.begin(), m.generator_degrees.end());
  auto maxw = static_cast<std::int64_t>(max_weight_of(m.weights));
  std::int64_t run = 0;
  for (std::int64_t k = lo; k <= cap; ++k) {
    if (k > top && module_slice(m, gr, k).dim() == 0) {
      if (++run == maxw) return k - maxw + 1;
    } else {
      run = 0;
    }
  }
  throw PreconditionError("module is not of finite length below degree " + std::to_string(cap));
}

void validate(const GradedModulePresentation& m) {
  for (const auto& col : m.relations) {
    if (col.size() != m.generator_degrees.size()) {
      throw PreconditionError("relation column length differs from the number of generators");
    }
    auto deg = column_degree(col, m.generator_degrees, m.weights);
    if (!deg) continue;
    for (std::size_t i = 0; i < col.size(); ++i) {
      if (col[i].is_zero()) continue;
      if (!col[i].is_homogeneous(m.weights) ||
          static_cast<std::int64_t>(col[i].weighted_degree(m.weights)) + m.generator_degrees[i] !=
              *deg) {
        throw PreconditionError("relation column is not homogeneous");
      }
    }
  }
}

}  // namespace

GradedModulePresentation GradedModulePresentation::cyclic(const RingPresentation& ring,
                                                          const Ideal& j) {
  GradedModulePresentation m{ring, find_grading(ring), {0}, {}, 0};
  for (const Polynomial& g : j.generators()) {
    if (!g.is_zero()) m.relations.push_back({g});
  }
  validate(m);
  GradedRing gr(ring, m.weights);
  constexpr std::int64_t kWitnessCap = 1000;
  m.witness = scan_witness(m, gr, kWitnessCap);
  return m;
}

std::vector<Coeff> ModuleSlice::reduce(std::vector<Coeff> v, const PrimeField& field) const {
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Coeff f = v[pivots[r]];
    if (f == 0) continue;
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (reducer.at(r, k) != 0) v[k] = field.sub(v[k], field.mul(f, reducer.at(r, k)));
    }
  }
  std::vector<Coeff> out(quotient.size());
  for (std::size_t i = 0; i < quotient.size(); ++i) out[i] = v[quotient[i]];
  return out;
}

namespace {

/// Free-basis coordinates in degree k of the column vector `col` times m.
std::vector<Coeff> free_vector(const std::vector<Polynomial>& col, const Monomial& m,
                               const ModuleSlice& s, const GradedModulePresentation& mod,
                               const GradedRing& gr) {
  std::vector<Coeff> v(s.free_basis.size(), 0);
  for (std::size_t i = 0; i < col.size(); ++i) {
    if (col[i].is_zero()) continue;
    std::int64_t deg = s.degree - mod.generator_degrees[i];
    std::vector<Coeff> c = gr.coordinates(col[i].mul_term(m, 1), deg);
    std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(s.gen_offset[i]));
  }
  return v;
}

}  // namespace

ModuleSlice module_slice(const GradedModulePresentation& m, const GradedRing& gr, std::int64_t k) {
  ModuleSlice s;
  s.degree = k;
  for (std::size_t i = 0; i < m.generator_degrees.size(); ++i) {
    s.gen_offset.push_back(s.free_basis.size());
    for (const Monomial& mon : gr.basis(k - m.generator_degrees[i])) {
      s.free_basis.emplace_back(i, mon);
    }
  }
  const PrimeField& field = m.ring.ambient()->field();
  Matrix rel(0, s.free_basis.size());
  for (const auto& col : m.relations) {
    auto deg = column_degree(col, m.generator_degrees, m.weights);
    if (!deg) continue;
    for (const Monomial& mon : gr.basis(k - *deg)) rel.append_row(free_vector(col, mon, s, m, gr));
  }
  s.pivots = rref(rel, field);
  s.reducer = Matrix(0, s.free_basis.size());
  for (std::size_t r = 0; r < s.pivots.size(); ++r) s.reducer.append_row(rel.row(r));
  std::vector<bool> is_pivot(s.free_basis.size(), false);
  for (std::size_t p : s.pivots) is_pivot[p] = true;
  for (std::size_t c = 0; c < s.free_basis.size(); ++c) {
    if (!is_pivot[c]) s.quotient.push_back(c);
  }
  return s;
}

std::size_t MaterializedModule::dim(std::int64_t k) const {
  if (k < lo || k >= hi) return 0;
  return dims[static_cast<std::size_t>(k - lo)];
}

std::size_t MaterializedModule::total_dim() const {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{0});
}

std::vector<Coeff> MaterializedModule::apply(const Polynomial& f, std::int64_t k,
                                             const std::vector<Coeff>& v,
                                             const PrimeField& field) const {
  std::optional<std::vector<Coeff>> out;
  std::int64_t target = 0;
  for (const Term& t : f.terms()) {
    std::int64_t deg = k;
    std::vector<Coeff> cur = v;
    for (std::size_t var = 0; var < weights.size(); ++var) {
      for (std::uint32_t x = 0; x < t.mono[var]; ++x) {
        if (deg >= lo && deg < hi) cur = action[var][static_cast<std::size_t>(deg - lo)].apply(cur, field);
        deg += weights[var];
      }
    }
    if (deg < lo || deg >= hi) cur.assign(0, 0);
    if (!out) {
      target = deg;
      out = std::vector<Coeff>(dim(deg), 0);
    } else if (deg != target) {
      throw InternalError("module action needs a homogeneous polynomial");
    }
    for (std::size_t i = 0; i < cur.size(); ++i) (*out)[i] = field.add((*out)[i], field.mul(t.coeff, cur[i]));
  }
  if (!out) return {};
  return *out;
}

MaterializedModule materialize(const GradedModulePresentation& m) {
  MaterializedModule out;
  out.weights = m.weights;
  out.action.assign(m.weights.size(), {});
  if (m.generator_degrees.empty()) return out;
  GradedRing gr(m.ring, m.weights);
  const PrimeField& field = m.ring.ambient()->field();
  out.lo = *std::min_element(m.generator_degrees.begin(), m.generator_degrees.end());
  out.hi = std::max(out.lo, m.witness);
  auto maxw = static_cast<std::int64_t>(max_weight_of(m.weights));
  for (std::int64_t k = m.witness; k < m.witness + maxw; ++k) {
    if (module_slice(m, gr, k).dim() != 0) {
      throw PreconditionError("module does not vanish at the finite-length witness " +
                              std::to_string(m.witness));
    }
  }
  std::vector<ModuleSlice> slices;
  for (std::int64_t k = out.lo; k < out.hi; ++k) {
    slices.push_back(module_slice(m, gr, k));
    out.dims.push_back(slices.back().dim());
  }
  for (std::size_t var = 0; var < m.weights.size(); ++var) {
    Monomial xv;
    xv.set(var, 1);
    for (std::int64_t k = out.lo; k < out.hi; ++k) {
      const ModuleSlice& src = slices[static_cast<std::size_t>(k - out.lo)];
      std::int64_t t = k + m.weights[var];
      if (t >= out.hi) {
        out.action[var].push_back(Matrix(0, src.dim()));
        continue;
      }
      const ModuleSlice& dst = slices[static_cast<std::size_t>(t - out.lo)];
      Matrix a(dst.dim(), src.dim());
      for (std::size_t j = 0; j < src.dim(); ++j) {
        const auto& [gen, mon] = src.free_basis[src.quotient[j]];
        std::vector<Coeff> v(dst.free_basis.size(), 0);
        std::int64_t deg = t - m.generator_degrees[gen];
        std::vector<Coeff> c = gr.coordinates(Polynomial::monomial(m.ring.ambient(), mon * xv), deg);
        std::copy(c.begin(), c.end(), v.begin() + static_cast<std::ptrdiff_t>(dst.gen_offset[gen]));
        std::vector<Coeff> r = dst.reduce(std::move(v), field);
        for (std::size_t i = 0; i < r.size(); ++i) a.at(i, j) = r[i];
      }
      out.action[var].push_back(std::move(a));
    }
  }
  return out;
}

GradedModulePresentation present(const RingPresentation& ring, const MaterializedModule& data) {
  GradedModulePresentation out{ring, data.weights, {}, {}, data.hi};
  GradedRing gr(ring, data.weights);
  const PrimeField& field = ring.ambient()->field();
  std::vector<std::vector<Coeff>> gen_vectors;
  for (std::int64_t k = data.lo; k < data.hi; ++k) {
    EchelonSpan span(data.dim(k));
    for (std::size_t var = 0; var < data.weights.size(); ++var) {
      std::int64_t src = k - data.weights[var];
      if (src < data.lo) continue;
      const Matrix& a = data.action[var][static_cast<std::size_t>(src - data.lo)];
      for (std::size_t j = 0; j < a.cols(); ++j) {
        std::vector<Coeff> col(a.rows());
        for (std::size_t r = 0; r < a.rows(); ++r) col[r] = a.at(r, j);
        span.add(std::move(col), field);
      }
    }
    for (std::size_t j = 0; j < data.dim(k); ++j) {
      std::vector<Coeff> e(data.dim(k), 0);
      e[j] = 1;
      if (span.add(e, field)) {
        out.generator_degrees.push_back(k);
        gen_vectors.push_back(std::move(e));
      }
    }
  }
  if (out.generator_degrees.empty()) {
    out.witness = 0;
    return out;
  }
  std::size_t ngens = out.generator_degrees.size();
  auto maxw = static_cast<std::int64_t>(max_weight_of(data.weights));
  for (std::int64_t k = data.lo; k < data.hi + maxw; ++k) {
    ModuleSlice free;
    free.degree = k;
    for (std::size_t g = 0; g < ngens; ++g) {
      free.gen_offset.push_back(free.free_basis.size());
      for (const Monomial& mon : gr.basis(k - out.generator_degrees[g])) free.free_basis.emplace_back(g, mon);
    }
    std::size_t n = free.free_basis.size();
    if (n == 0) continue;
    Matrix to_m(data.dim(k), n);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& [g, mon] = free.free_basis[j];
      std::vector<Coeff> img = data.apply(Polynomial::monomial(ring.ambient(), mon), out.generator_degrees[g],
                                          gen_vectors[g], field);
      for (std::size_t r = 0; r < img.size(); ++r) to_m.at(r, j) = img[r];
    }
    EchelonSpan known(n);
    for (const auto& col : out.relations) {
      auto deg = column_degree(col, out.generator_degrees, out.weights);
      if (!deg) continue;
      for (const Monomial& mon : gr.basis(k - *deg)) known.add(free_vector(col, mon, free, out, gr), field);
    }
    for (const auto& v : nullspace(to_m, field)) {
      if (!known.add(v, field)) continue;
      std::vector<Polynomial> col;
      for (std::size_t g = 0; g < ngens; ++g) {
        std::int64_t deg = k - out.generator_degrees[g];
        std::size_t len = gr.basis(deg).size();
        auto begin = v.begin() + static_cast<std::ptrdiff_t>(free.gen_offset[g]);
        col.push_back(gr.from_coordinates(std::vector<Coeff>(begin, begin + static_cast<std::ptrdiff_t>(len)), deg));
      }
      out.relations.push_back(std::move(col));
    }
  }
  return out;
}

GradedModulePresentation frobenius_functor(const GradedModulePresentation& m, unsigned e) {
  std::uint64_t q = prime_power(m.ring.characteristic(), e);
  GradedModulePresentation out{m.ring, m.weights, {}, {}, 0};
  for (std::int64_t d : m.generator_degrees) out.generator_degrees.push_back(d * static_cast<std::int64_t>(q));
  for (const auto& col : m.relations) {
    std::vector<Polynomial> c;
    for (const Polynomial& f : col) c.push_back(frobenius_power(f, e));
    out.relations.push_back(std::move(c));
  }
  if (m.generator_degrees.empty()) return out;
  std::int64_t lo = *std::min_element(m.generator_degrees.begin(), m.generator_degrees.end());
  std::int64_t top = *std::max_element(m.generator_degrees.begin(), m.generator_degrees.end());
  std::int64_t wsum = 0;
  for (std::uint32_t w : m.weights) wsum += w;
  auto qi = static_cast<std::int64_t>(q);
  std::int64_t bound = qi * top + qi * (m.witness - lo) + wsum * (qi - 1);
  GradedRing gr(m.ring, m.weights);
  out.witness = scan_witness(out, gr, bound + static_cast<std::int64_t>(max_weight_of(m.weights)));
  return out;
}

GradedModulePresentation matlis_dual_finite_length(const GradedModulePresentation& m) {
  MaterializedModule data = materialize(m);
  MaterializedModule dual;
  dual.weights = data.weights;
  dual.action.assign(data.weights.size(), {});
  if (data.dims.empty()) return present(m.ring, dual);
  dual.lo = 1 - data.hi;
  dual.hi = 1 - data.lo;
  for (std::int64_t k = dual.lo; k < dual.hi; ++k) dual.dims.push_back(data.dim(-k));
  for (std::size_t var = 0; var < data.weights.size(); ++var) {
    for (std::int64_t k = dual.lo; k < dual.hi; ++k) {
      std::int64_t src = -k - data.weights[var];
      if (src < data.lo) {
        dual.action[var].push_back(Matrix(dual.dim(k + data.weights[var]), dual.dim(k)));
        continue;
      }
      dual.action[var].push_back(data.action[var][static_cast<std::size_t>(src - data.lo)].transposed());
    }
  }
  return present(m.ring, dual);
}

namespace {

std::vector<std::vector<Coeff>> identity_basis(std::size_t n) {
  std::vector<std::vector<Coeff>> out;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Coeff> v(n, 0);
    v[i] = 1;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::map<std::int64_t, std::vector<std::vector<Coeff>>> tight_closure_zero(
    const GradedModulePresentation& m, const Polynomial& c, unsigned e_max) {
  if (!c.is_homogeneous(m.weights)) throw PreconditionError("c must be homogeneous");
  if (m.ring.defining_ideal().contains(c)) throw PreconditionError("c is zero in R");
  GradedRing gr(m.ring, m.weights);
  const PrimeField& field = m.ring.ambient()->field();
  auto dc = static_cast<std::int64_t>(c.weighted_degree(m.weights));
  std::map<std::int64_t, std::vector<std::vector<Coeff>>> out;
  std::vector<ModuleSlice> slices;
  std::int64_t lo = 0;
  if (!m.generator_degrees.empty()) {
    lo = *std::min_element(m.generator_degrees.begin(), m.generator_degrees.end());
  }
  for (std::int64_t k = lo; k < m.witness; ++k) {
    slices.push_back(module_slice(m, gr, k));
    out[k] = identity_basis(slices.back().dim());
  }
  for (unsigned e = 1; e <= e_max; ++e) {
    GradedModulePresentation f = frobenius_functor(m, e);
    auto q = static_cast<std::int64_t>(prime_power(m.ring.characteristic(), e));
    for (const ModuleSlice& s : slices) {
      if (s.dim() == 0 || out[s.degree].empty()) continue;
      std::int64_t t = q * s.degree + dc;
      if (t >= f.witness) continue;
      ModuleSlice target = module_slice(f, gr, t);
      Matrix a(target.dim(), s.dim());
      for (std::size_t j = 0; j < s.dim(); ++j) {
        const auto& [gen, mon] = s.free_basis[s.quotient[j]];
        std::vector<Coeff> v(target.free_basis.size(), 0);
        std::int64_t deg = t - f.generator_degrees[gen];
        std::vector<Coeff> coords = gr.coordinates(c.mul_term(mon.scaled(static_cast<std::uint64_t>(q)), 1), deg);
        std::copy(coords.begin(), coords.end(),
                  v.begin() + static_cast<std::ptrdiff_t>(target.gen_offset[gen]));
        std::vector<Coeff> r = target.reduce(std::move(v), field);
        for (std::size_t i = 0; i < r.size(); ++i) a.at(i, j) = r[i];
      }
      out[s.degree] = intersect_spaces(out[s.degree], nullspace(a, field), s.dim(), field);
    }
  }
  return out;
}

std::size_t module_interior_dimension(const GradedModulePresentation& l, const Polynomial& c,
                                      unsigned e_max) {
  if (!c.is_homogeneous(l.weights)) throw PreconditionError("c must be homogeneous");
  MaterializedModule data = materialize(l);
  if (data.dims.empty()) return 0;
  const RingPtr& s = l.ring.ambient();
  const PrimeField& field = s->field();
  std::size_t n = s->nvars();
  GradedRing gr(l.ring, l.weights);
  std::map<std::int64_t, EchelonSpan> images;
  for (std::int64_t k = data.lo; k < data.hi; ++k) images.emplace(k, EchelonSpan(data.dim(k)));
  for (unsigned e = 1; e <= e_max; ++e) {
    std::uint64_t q = prime_power(l.ring.characteristic(), e);
    auto qi = static_cast<std::int64_t>(q);
    std::vector<Monomial> box = exponent_box(n, q);
    std::vector<std::int64_t> wa(box.size());
    for (const Monomial& a : box) wa[box_index(a, q, n)] = gr.degree(a);
    std::vector<Decomposed> relations;
    for (const Polynomial& g : l.ring.defining_ideal().groebner_basis()) {
      auto dg = static_cast<std::int64_t>(g.weighted_degree(l.weights));
      for (const Monomial& b : box) {
        relations.push_back(decompose(g.mul_term(b, 1), e, dg + gr.degree(b), q, n));
      }
    }
    Decomposed cd = decompose(c, e, static_cast<std::int64_t>(c.weighted_degree(l.weights)), q, n);
    std::int64_t max_wa = *std::max_element(wa.begin(), wa.end());
    for (std::int64_t shift = qi * data.lo - max_wa; shift < qi * data.hi; ++shift) {
      std::int64_t tc_num = cd.degree + shift;
      if (tc_num % qi != 0) continue;
      std::int64_t tc = floor_div(tc_num, qi);
      if (data.dim(tc) == 0) continue;
      std::vector<std::int64_t> t_of(box.size(), 0);
      std::vector<std::size_t> offset(box.size(), 0);
      std::vector<std::size_t> width(box.size(), 0);
      std::size_t cols = 0;
      for (std::size_t a = 0; a < box.size(); ++a) {
        std::int64_t num = wa[a] + shift;
        if (num % qi != 0) continue;
        t_of[a] = floor_div(num, qi);
        offset[a] = cols;
        width[a] = data.dim(t_of[a]);
        cols += width[a];
      }
      if (cols == 0) continue;
      auto contribution = [&](const Decomposed& dec, std::int64_t target) {
        Matrix mat(data.dim(target), cols);
        for (const auto& [a, h] : dec.parts) {
          std::vector<Coeff> unit(width[a], 0);
          for (std::size_t j = 0; j < width[a]; ++j) {
            unit.assign(width[a], 0);
            unit[j] = 1;
            std::vector<Coeff> img = data.apply(h, t_of[a], unit, field);
            for (std::size_t r = 0; r < img.size(); ++r) {
              mat.at(r, offset[a] + j) = field.add(mat.at(r, offset[a] + j), img[r]);
            }
          }
        }
        return mat;
      };
      Matrix system(0, cols);
      for (const Decomposed& rel : relations) {
        std::int64_t num = rel.degree + shift;
        if (num % qi != 0) continue;
        std::int64_t t = floor_div(num, qi);
        if (data.dim(t) == 0) continue;
        Matrix block = contribution(rel, t);
        for (std::size_t r = 0; r < block.rows(); ++r) system.append_row(block.row(r));
      }
      Matrix evaluate = contribution(cd, tc);
      EchelonSpan& span = images.at(tc);
      for (const auto& phi : nullspace(system, field)) span.add(evaluate.apply(phi, field), field);
    }
  }
  std::size_t total = 0;
  for (const auto& [k, span] : images) total += span.rank();
  return total;
}

CheckRecord duality_check(const GradedModulePresentation& l, const Polynomial& c, unsigned e_max) {
  std::size_t dim_l = materialize(l).total_dim();
  std::size_t dim_star = module_interior_dimension(l, c, e_max);
  std::size_t dim_zero = 0;
  for (const auto& [k, basis] : tight_closure_zero(matlis_dual_finite_length(l), c, e_max)) {
    dim_zero += basis.size();
  }
  CheckRecord r;
  r.name = "duality";
  r.verdict = dim_star + dim_zero == dim_l ? Verdict::Pass : Verdict::Fail;
  r.lhs = {"dim L_* = " + std::to_string(dim_star)};
  r.rhs = {"dim L - dim 0^*(L^v) = " + std::to_string(dim_l) + " - " + std::to_string(dim_zero)};
  r.note = "graded-case check, c = " + c.to_string();
  return r;
}

}  // namespace tint

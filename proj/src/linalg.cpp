#include "tint/linalg.hpp"

#include "tint/errors.hpp"

namespace tint {

std::vector<Coeff> Matrix::row(std::size_t r) const {
  return std::vector<Coeff>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::append_row(const std::vector<Coeff>& row) {
  if (rows_ == 0 && cols_ == 0) cols_ = row.size();
  if (row.size() != cols_) throw InternalError("row length mismatch");
  data_.insert(data_.end(), row.begin(), row.end());
  ++rows_;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

Matrix Matrix::multiply(const Matrix& other, const PrimeField& field) const {
  if (cols_ != other.rows_) throw InternalError("matrix shape mismatch");
  Matrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      Coeff a = at(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) {
        out.at(r, c) = field.add(out.at(r, c), field.mul(a, other.at(k, c)));
      }
    }
  }
  return out;
}

std::vector<Coeff> Matrix::apply(const std::vector<Coeff>& v, const PrimeField& field) const {
  if (v.size() != cols_) throw InternalError("vector length mismatch");
  std::vector<Coeff> out(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    Coeff s = 0;
    for (std::size_t c = 0; c < cols_; ++c) s = field.add(s, field.mul(at(r, c), v[c]));
    out[r] = s;
  }
  return out;
}

void EchelonSpan::reduce(std::vector<Coeff>& v, const PrimeField& field) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    Coeff f = v[pivots_[r]];
    if (f == 0) continue;
    for (std::size_t k = pivots_[r]; k < n_; ++k) {
      v[k] = field.sub(v[k], field.mul(f, rows_[r][k]));
    }
  }
}

bool EchelonSpan::add(std::vector<Coeff> v, const PrimeField& field) {
  if (v.size() != n_) throw InternalError("vector length mismatch");
  reduce(v, field);
  std::size_t p = 0;
  while (p < n_ && v[p] == 0) ++p;
  if (p == n_) return false;
  Coeff inv = field.inv(v[p]);
  for (std::size_t k = p; k < n_; ++k) v[k] = field.mul(v[k], inv);
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool EchelonSpan::contains(std::vector<Coeff> v, const PrimeField& field) const {
  reduce(v, field);
  for (Coeff c : v) {
    if (c != 0) return false;
  }
  return true;
}

std::vector<std::size_t> rref(Matrix& m, const PrimeField& field) {
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t c = 0; c < m.cols() && lead < m.rows(); ++c) {
    std::size_t pr = lead;
    while (pr < m.rows() && m.at(pr, c) == 0) ++pr;
    if (pr == m.rows()) continue;
    if (pr != lead) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m.at(pr, k), m.at(lead, k));
    }
    Coeff inv = field.inv(m.at(lead, c));
    for (std::size_t k = c; k < m.cols(); ++k) m.at(lead, k) = field.mul(m.at(lead, k), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || m.at(r, c) == 0) continue;
      Coeff f = m.at(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) {
        m.at(r, k) = field.sub(m.at(r, k), field.mul(f, m.at(lead, k)));
      }
    }
    pivots.push_back(c);
    ++lead;
  }
  return pivots;
}

std::size_t rank(Matrix m, const PrimeField& field) { return rref(m, field).size(); }

std::vector<std::vector<Coeff>> nullspace(Matrix m, const PrimeField& field) {
  std::vector<std::size_t> pivots = rref(m, field);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Coeff>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Coeff> v(m.cols(), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field.neg(m.at(r, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<Coeff>> row_basis(const std::vector<std::vector<Coeff>>& vectors,
                                          std::size_t n, const PrimeField& field) {
  Matrix m(0, n);
  for (const auto& v : vectors) m.append_row(v);
  std::size_t r = rref(m, field).size();
  std::vector<std::vector<Coeff>> out;
  for (std::size_t i = 0; i < r; ++i) out.push_back(m.row(i));
  return out;
}

std::vector<std::vector<Coeff>> intersect_spaces(const std::vector<std::vector<Coeff>>& a,
                                                 const std::vector<std::vector<Coeff>>& b,
                                                 std::size_t n, const PrimeField& field) {
  if (a.empty() || b.empty()) return {};
  // Solve sum x_i a_i = sum y_j b_j; the a-part of each solution spans the meet.
  Matrix m(n, a.size() + b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < n; ++k) m.at(k, i) = a[i][k];
  }
  for (std::size_t j = 0; j < b.size(); ++j) {
    for (std::size_t k = 0; k < n; ++k) m.at(k, a.size() + j) = field.neg(b[j][k]);
  }
  std::vector<std::vector<Coeff>> vecs;
  for (const auto& sol : nullspace(m, field)) {
    std::vector<Coeff> v(n, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (sol[i] == 0) continue;
      for (std::size_t k = 0; k < n; ++k) v[k] = field.add(v[k], field.mul(sol[i], a[i][k]));
    }
    vecs.push_back(std::move(v));
  }
  return row_basis(vecs, n, field);
}

}  // namespace tint

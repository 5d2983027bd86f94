#pragma once

#include <cstddef>
#include <vector>

#include "tint/field.hpp"

namespace tint {

/// Dense matrix over F_p, row major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Coeff& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Coeff at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Coeff> row(std::size_t r) const;
  void append_row(const std::vector<Coeff>& row);
  Matrix transposed() const;
  Matrix multiply(const Matrix& other, const PrimeField& field) const;
  std::vector<Coeff> apply(const std::vector<Coeff>& v, const PrimeField& field) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Coeff> data_;
};

/// Span grown one vector at a time.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t n) : n_(n) {}

  /// Adds v; returns false when v was already in the span.
  bool add(std::vector<Coeff> v, const PrimeField& field);
  bool contains(std::vector<Coeff> v, const PrimeField& field) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t length() const { return n_; }
  const std::vector<std::vector<Coeff>>& rows() const { return rows_; }

 private:
  void reduce(std::vector<Coeff>& v, const PrimeField& field) const;

  std::size_t n_;
  std::vector<std::vector<Coeff>> rows_;
  std::vector<std::size_t> pivots_;
};

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<std::size_t> rref(Matrix& m, const PrimeField& field);

std::size_t rank(Matrix m, const PrimeField& field);

/// Basis of {v : m v = 0}.
std::vector<std::vector<Coeff>> nullspace(Matrix m, const PrimeField& field);

/// Basis, in reduced echelon form, of the span of `vectors` (all of length n).
std::vector<std::vector<Coeff>> row_basis(const std::vector<std::vector<Coeff>>& vectors,
                                          std::size_t n, const PrimeField& field);

/// Basis of the intersection of two subspaces of F_p^n.
std::vector<std::vector<Coeff>> intersect_spaces(const std::vector<std::vector<Coeff>>& a,
                                                 const std::vector<std::vector<Coeff>>& b,
                                                 std::size_t n, const PrimeField& field);

}  // namespace tint

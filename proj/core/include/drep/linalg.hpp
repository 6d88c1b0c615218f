// Copyright 2026 The drep Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "drep/rational.hpp"

namespace drep::linalg {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Rational& s, const Matrix& a);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

std::size_t rank(Matrix m);

/// Basis of {v : m v = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(const Matrix& m);

/// Some solution x of m x = b, or an empty vector if the system is inconsistent.
/// (For a zero-column matrix the only candidate is the empty vector; check `solvable`.)
struct Solution {
  bool solvable = false;
  std::vector<Rational> x;
};
Solution solve(const Matrix& m, const std::vector<Rational>& b);

/// Inverse of a square matrix; throws Error if singular.
Matrix inverse(const Matrix& m);

}  // namespace drep::linalg

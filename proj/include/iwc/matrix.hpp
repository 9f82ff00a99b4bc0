#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "iwc/scalar.hpp"

namespace iwc {

/// Dense matrix over Q or Q(i), row-major. Sizes here never exceed a few
/// hundred rows (the n^3 x n^2 derivation system for n <= 8 is the largest).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f = Field::Rational);

  static Matrix identity(std::size_t n, Field f = Field::Rational);
  static Matrix diagonal(const std::vector<Scalar>& d);
  /// Builds from integer rows; convenient for literals in tests and catalogs.
  static Matrix from_rows(const std::vector<std::vector<long>>& rows, Field f = Field::Rational);
  static Matrix from_scalar_rows(const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix in(Field f) const;
  Matrix transpose() const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }
  Matrix scaled(const Scalar& s) const;

  /// Reduced row echelon form in place; returns pivot columns.
  std::vector<std::size_t> rref();
  std::size_t rank() const;
  Scalar determinant() const;
  /// Throws Singular.
  Matrix inverse() const;
  /// Basis of {x : M x = 0}, one vector per free column, in RREF-parametrized form.
  std::vector<std::vector<Scalar>> nullspace() const;

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_ = Field::Rational;
  std::vector<Scalar> data_;
};

/// Row space of a set of vectors as a canonical RREF matrix (zero rows dropped).
Matrix row_space(const std::vector<std::vector<Scalar>>& vectors, std::size_t dim, Field f);

}  // namespace iwc

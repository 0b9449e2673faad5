#pragma once

#include "algint/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace algint {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const Scalar> d);
  static Matrix fromRows(const std::vector<Vector>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool isSquare() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::span<const Scalar> entries() const { return data_; }

  Matrix transpose() const;
  bool isZero() const;
  bool isIdentity() const;
  /// k if this equals k * identity, otherwise nothing.
  std::optional<Scalar> scalarMultipleOfIdentity() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, std::span<const Scalar> v);

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix commutator(const Matrix& a, const Matrix& b);

/// Determinant by fraction-free (Bareiss) elimination on the row-scaled
/// integer matrix. Throws NonSquare.
Scalar det(const Matrix& m);

/// Exact inverse. Throws NonSquare, Singular.
Matrix inverse(const Matrix& m);

/// Reduced row echelon form; `pivots` receives the pivot column of each
/// nonzero row when given.
Matrix rref(const Matrix& m, std::vector<std::size_t>* pivots = nullptr);

std::size_t rank(const Matrix& m);

/// Basis of the right kernel, one vector per free column in ascending column
/// order, each scaled so its first nonzero entry is 1. Empty when the kernel
/// is {0}.
std::vector<Vector> nullspace(const Matrix& m);

/// A solution of m x = b with every free variable set to zero, or nothing
/// when the system is inconsistent.
std::optional<Vector> solveParticular(const Matrix& m, std::span<const Scalar> b);

/// Scales v so its first nonzero entry is 1 (zero vectors are unchanged).
void normalizeLeading(Vector& v);

bool isZeroVector(std::span<const Scalar> v);

}  // namespace algint

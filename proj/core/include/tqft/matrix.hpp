#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tqft/scalar.hpp"

namespace tqft {

using Vec = std::vector<Scalar>;

Vec vec_add(const Vec& a, const Vec& b);
Vec vec_sub(const Vec& a, const Vec& b);
Vec vec_scale(const Scalar& c, const Vec& v);
Vec vec_zero(const Field& f, std::size_t n);
bool vec_is_zero(const Vec& v);
/// Lexicographic order, used for deterministic output.
bool vec_less(const Vec& a, const Vec& b);
std::string vec_to_string(const Vec& v);

/// Dense exact matrix over one field, row-major.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;

  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix operator*(const Matrix& rhs) const;
  Matrix scaled(const Scalar& c) const;
  bool operator==(const Matrix& rhs) const;
  bool operator!=(const Matrix& rhs) const { return !(*this == rhs); }

  Vec apply(const Vec& v) const;
  Matrix transpose() const;
  Scalar trace() const;
  bool is_zero() const;
  bool is_identity() const;

  /// Kronecker product; this matrix supplies the slow (leftmost) index.
  Matrix kron(const Matrix& rhs) const;
  /// Square matrix power, e >= 0.
  Matrix pow(std::size_t e) const;

  /// Reduced row echelon form. Pivot column indices go to *pivots if given.
  Matrix rref(std::vector<std::size_t>* pivots = nullptr) const;
  std::size_t rank() const;
  std::optional<Matrix> inverse() const;
  /// Rows form an RREF-canonical basis of the null space {x : Ax = 0}.
  Matrix kernel() const;
  /// One solution of Ax = b, or nullopt if inconsistent.
  std::optional<Vec> solve(const Vec& b) const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

}  // namespace tqft

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "cubisym/scalar.hpp"

namespace cubisym {

/// Coordinate vector in R^3 (indices 0..2 stand for x^1..x^3).
struct Vec3 {
  std::array<Scalar, 3> x{};

  Scalar& operator[](std::size_t i) { return x[i]; }
  const Scalar& operator[](std::size_t i) const { return x[i]; }

  bool is_zero() const;
  friend bool operator==(const Vec3&, const Vec3&) = default;
};

Vec3 operator+(const Vec3& a, const Vec3& b);
Vec3 operator-(const Vec3& a, const Vec3& b);
Vec3 operator*(const Scalar& s, const Vec3& v);
Scalar dot(const Vec3& a, const Vec3& b);

/// 3x3 matrix, entry (row, col). For a linear vector field the convention is
/// X^row = a[row][col] x^col.
class Mat3 {
public:
  Mat3() = default;
  Mat3(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Mat3 identity();
  static Mat3 diagonal(const Scalar& a, const Scalar& b, const Scalar& c);
  /// Matrix with a single unit entry at (row, col).
  static Mat3 unit(std::size_t row, std::size_t col);
  /// Matrix with columns c0, c1, c2.
  static Mat3 from_columns(const Vec3& c0, const Vec3& c1, const Vec3& c2);

  Scalar& operator()(std::size_t r, std::size_t c) { return a_[r][c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return a_[r][c]; }

  Vec3 column(std::size_t c) const;
  Mat3 transpose() const;
  Scalar trace() const;
  Scalar determinant() const;
  bool is_zero() const;
  /// Throws std::domain_error when singular.
  Mat3 inverse() const;

  /// Row-major flattening, index 3*row + col.
  std::array<Scalar, 9> flatten() const;
  static Mat3 unflatten(std::span<const Scalar> v);

  Mat3& operator+=(const Mat3& o);
  Mat3& operator-=(const Mat3& o);
  Mat3& operator*=(const Scalar& s);

  friend bool operator==(const Mat3&, const Mat3&) = default;

private:
  std::array<std::array<Scalar, 3>, 3> a_{};
};

Mat3 operator+(Mat3 a, const Mat3& b);
Mat3 operator-(Mat3 a, const Mat3& b);
Mat3 operator*(const Mat3& a, const Mat3& b);
Mat3 operator*(const Scalar& s, Mat3 a);
Vec3 operator*(const Mat3& a, const Vec3& v);

/// Dense rational matrix used for exact elimination.
class RationalMatrix {
public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<Scalar> apply(std::span<const Scalar> v) const;

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Result of reducing a matrix to reduced row echelon form.
struct EchelonForm {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const { return pivot_columns.size(); }
};

/// Fraction-free (Bareiss) forward elimination on the row-wise integer
/// scaling of `m`, followed by back-substitution to the unique reduced row
/// echelon form. Pivots are the first nonzero entry of each column, scanning
/// rows top-down.
EchelonForm reduced_echelon(const RationalMatrix& m);

std::size_t rank(const RationalMatrix& m);

/// Canonical nullspace basis: one vector per free column, with 1 at the free
/// column, 0 at the other free columns, read off the reduced echelon form.
std::vector<std::vector<Scalar>> nullspace(const RationalMatrix& m);

/// Rows given as vectors; all must share the same length.
RationalMatrix matrix_from_rows(std::span<const std::vector<Scalar>> rows, std::size_t cols);

/// Canonical basis (nonzero rows of the reduced echelon form) of the span.
std::vector<std::vector<Scalar>> span_basis(std::span<const std::vector<Scalar>> vectors, std::size_t length);

/// Coordinates of `v` in the (independent) family `basis`, if `v` is in the span.
bool coordinates_in(std::span<const std::vector<Scalar>> basis, std::span<const Scalar> v,
                    std::vector<Scalar>& coords);

/// Whether two families span the same subspace.
bool same_span(std::span<const std::vector<Scalar>> a, std::span<const std::vector<Scalar>> b, std::size_t length);

std::vector<Scalar> to_vector(const Mat3& m);
std::vector<Scalar> to_vector(const Vec3& v);
std::vector<std::vector<Scalar>> to_vectors(std::span<const Mat3> ms);
std::vector<std::vector<Scalar>> to_vectors(std::span<const Vec3> vs);

std::string to_string(const Mat3& m);
std::string to_string(const Vec3& v);

}  // namespace cubisym

#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "entwine/field.hpp"

namespace entwine {

using Vector = std::vector<Scalar>;

/// Dense matrix over a Field. A linear map V -> W is stored as a
/// dim(W) x dim(V) matrix acting on column vectors. Entries are kept
/// normalized in the field, so equality is entrywise equality.
class Matrix {
 public:
  Matrix() = default;
  /// Zero matrix.
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Integer literal rows; handy in tests and catalogue builders.
  static Matrix from_rows(Field field,
                          std::initializer_list<std::initializer_list<long>> rows);
  static Matrix from_rows(Field field, const std::vector<Vector>& rows);
  /// n x 1 matrix, i.e. the map k -> V picking out v.
  static Matrix column_of(Field field, const Vector& v);
  /// 1 x n matrix, i.e. the functional V -> k with coefficients v.
  static Matrix row_of(Field field, const Vector& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, const Scalar& v) { data_[r * cols_ + c] = field_.normalize(v); }
  /// Adds v (already normalized) into entry (r, c).
  void accumulate(std::size_t r, std::size_t c, const Scalar& v);

  std::span<const Scalar> row(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector row_vector(std::size_t r) const;
  Vector column_vector(std::size_t c) const;

  Matrix transpose() const;
  Matrix select_rows(const std::vector<std::size_t>& rows) const;
  Matrix select_cols(const std::vector<std::size_t>& cols) const;
  Matrix scaled(const Scalar& s) const;

  bool is_zero() const;
  bool is_identity() const;
  std::size_t nonzero_count() const;

  Vector apply(const Vector& v) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// [a | b]
Matrix hstack(const Matrix& a, const Matrix& b);
/// [a ; b]
Matrix vstack(const Matrix& a, const Matrix& b);

/// Kronecker product with the left factor major: e_i (x) e_j sits at index
/// i * dim2 + j, so kron(f, g) is the matrix of f (x) g.
Matrix kron(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix form;                      // reduced row-echelon form, same shape
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Gauss-Jordan elimination with leftmost pivots. The result is the unique
/// reduced row-echelon form of m.
Echelon echelon(const Matrix& m);
Matrix rref(const Matrix& m);
std::size_t rank(const Matrix& m);

struct NotInvertible {
  std::size_t rank = 0;
  Vector witness;  // nonzero kernel vector
};

/// Throws NotSquare.
std::variant<Matrix, NotInvertible> try_invert(const Matrix& m);

}  // namespace entwine

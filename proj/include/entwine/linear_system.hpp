#pragma once

#include <map>

#include "entwine/subspace.hpp"

namespace entwine {

/// Linear equations in an unknown linear map X (x_rows x x_cols), each a sum
/// of terms  P o (id_left (x) X (x) id_right) o Q  equated to a fixed map.
/// Used to decide whether an unknown entwining or (co)action is forced.
class MapEquationSystem {
 public:
  MapEquationSystem(Field field, std::size_t x_rows, std::size_t x_cols);

  /// Starts a new block of equations whose value is an out_rows x out_cols
  /// map. Subsequent terms and the constant refer to this block.
  void begin_block(std::size_t out_rows, std::size_t out_cols);
  /// Adds coefficient * P o (id_left (x) X (x) id_right) o Q to the block.
  void add_term(const Matrix& p, std::size_t left, std::size_t right, const Matrix& q,
                const Scalar& coefficient = 1);
  /// The block's terms must sum to this map.
  void set_constant(const Matrix& value);

  std::size_t unknowns() const { return x_rows_ * x_cols_; }
  std::size_t equations() const { return rows_.size(); }

  /// Solutions, as vectorised X (row-major).
  AffineSolution solve() const;
  bool satisfied_by(const Matrix& x) const;

  static Vector vectorise(const Matrix& x);
  static Matrix unvectorise(const Field& f, const Vector& v, std::size_t rows, std::size_t cols);

 private:
  Matrix coefficient_matrix() const;

  Field field_;
  std::size_t x_rows_, x_cols_;
  std::size_t block_start_ = 0, block_rows_ = 0, block_cols_ = 0;
  // Sparse rows keyed by unknown index, plus right-hand side.
  std::vector<std::map<std::size_t, Scalar>> rows_;
  std::vector<Scalar> rhs_;
};

}  // namespace entwine

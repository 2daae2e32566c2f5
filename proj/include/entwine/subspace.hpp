#pragma once

#include <optional>
#include <vector>

#include "entwine/matrix.hpp"

namespace entwine {

/// A linear subspace of k^n held by its reduced row-echelon basis. Because
/// the basis is canonical, two subspaces are equal iff their bases are.
class Subspace {
 public:
  Subspace() = default;

  static Subspace zero(Field field, std::size_t ambient_dim);
  static Subspace full(Field field, std::size_t ambient_dim);
  /// Row space of m.
  static Subspace row_space(const Matrix& m);
  static Subspace span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors);

  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Field& field() const { return basis_.field(); }

  /// dim x ambient_dim, rows in reduced row-echelon form.
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector vector(std::size_t i) const { return basis_.row_vector(i); }

  /// ambient_dim x dim; column i is basis vector i.
  Matrix embedding() const { return basis_.transpose(); }
  /// dim x ambient_dim; reads off the pivot coordinates. Left inverse of
  /// embedding(), and the coordinate map on vectors lying in the subspace.
  Matrix coordinate_map() const;

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Every column of m lies in the subspace.
  bool contains_image_of(const Matrix& m) const;

  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_dim(); }

  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis_ == b.basis_; }

 private:
  Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// {v : m v = 0}.
Subspace kernel(const Matrix& m);
/// Column space of m.
Subspace image(const Matrix& m);
/// Throws DimensionMismatch / FieldMismatch.
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);
bool contains(const Subspace& s, const Vector& v);

/// k^n / relations, with the non-pivot coordinates of the relations' echelon
/// basis as the quotient basis.
struct QuotientPresentation {
  std::size_t ambient_dim = 0;
  Subspace relations;
  std::size_t quotient_dim = 0;
  Matrix projection;  // quotient_dim x ambient_dim
  Matrix section;     // ambient_dim x quotient_dim
  std::vector<std::size_t> basis_coordinates;
};

QuotientPresentation quotient(std::size_t ambient_dim, const Subspace& relations);

/// Solution set of m x = b.
struct AffineSolution {
  std::optional<Vector> particular;  // absent iff inconsistent
  Subspace homogeneous;              // kernel(m)
  bool consistent() const { return particular.has_value(); }
};

AffineSolution solve(const Matrix& m, const Vector& b);

}  // namespace entwine

#include "entwine/subspace.hpp"

#include "entwine/error.hpp"

namespace entwine {

namespace {

void require_compatible(const Subspace& a, const Subspace& b, const char* op) {
  if (!(a.field() == b.field())) throw FieldMismatch(std::string(op) + ": subspaces over different fields");
  if (a.ambient_dim() != b.ambient_dim())
    throw DimensionMismatch(std::string(op) + ": ambient dimensions " + std::to_string(a.ambient_dim()) +
                            " and " + std::to_string(b.ambient_dim()));
}

// Reduces v against an echelon basis; the result vanishes at every pivot.
Vector reduce(const Matrix& basis, const std::vector<std::size_t>& pivots, Vector v) {
  const Field& f = basis.field();
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Scalar factor = v[pivots[i]];
    if (factor == 0) continue;
    for (std::size_t c = 0; c < v.size(); ++c)
      if (basis(i, c) != 0) v[c] = f.sub(v[c], f.mul(factor, basis(i, c)));
  }
  return v;
}

bool all_zero(const Vector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

}  // namespace

Subspace Subspace::zero(Field field, std::size_t ambient_dim) {
  return Subspace(Matrix(field, 0, ambient_dim), {});
}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
  std::vector<std::size_t> pivots(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) pivots[i] = i;
  return Subspace(Matrix::identity(field, ambient_dim), std::move(pivots));
}

Subspace Subspace::row_space(const Matrix& m) {
  Echelon e = echelon(m);
  std::vector<std::size_t> keep(e.pivots.size());
  for (std::size_t i = 0; i < keep.size(); ++i) keep[i] = i;
  return Subspace(e.form.select_rows(keep), std::move(e.pivots));
}

Subspace Subspace::span(Field field, std::size_t ambient_dim, const std::vector<Vector>& vectors) {
  Matrix m(field, vectors.size(), ambient_dim);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient_dim) throw DimensionMismatch("span: vector length differs from ambient dimension");
    for (std::size_t j = 0; j < ambient_dim; ++j) m.set(i, j, vectors[i][j]);
  }
  return row_space(m);
}

Matrix Subspace::coordinate_map() const {
  Matrix m(field(), dim(), ambient_dim());
  for (std::size_t i = 0; i < pivots_.size(); ++i) m.set(i, pivots_[i], 1);
  return m;
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != ambient_dim()) throw DimensionMismatch("contains: vector length differs from ambient dimension");
  return all_zero(reduce(basis_, pivots_, v));
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim() != ambient_dim()) throw DimensionMismatch("contains: ambient dimensions differ");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.vector(i))) return false;
  return true;
}

bool Subspace::contains_image_of(const Matrix& m) const {
  if (m.rows() != ambient_dim()) throw DimensionMismatch("contains_image_of: row count differs from ambient dimension");
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!contains(m.column_vector(c))) return false;
  return true;
}

namespace {

// Kernel of the first n columns, read off an echelon form of [M | ...].
Subspace kernel_from_echelon(const Field& f, const Echelon& e, std::size_t n) {
  std::vector<bool> is_pivot(n, false);
  std::size_t rank = 0;
  for (std::size_t p : e.pivots)
    if (p < n) {
      is_pivot[p] = true;
      ++rank;
    }
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v(n);
    v[free] = 1;
    for (std::size_t i = 0; i < rank; ++i) v[e.pivots[i]] = f.neg(e.form(i, free));
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, n, basis);
}

}  // namespace

Subspace kernel(const Matrix& m) { return kernel_from_echelon(m.field(), echelon(m), m.cols()); }

Subspace image(const Matrix& m) { return Subspace::row_space(m.transpose()); }

Subspace sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b, "sum");
  return Subspace::row_space(vstack(a.basis(), b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b, "intersect");
  // x in a with x in b: kernel of [Ea | -Eb] gives pairs (s, t) with Ea s = Eb t.
  Matrix ea = a.embedding();
  Matrix eb = b.embedding();
  Subspace pairs = kernel(hstack(ea, eb.scaled(-1)));
  std::vector<Vector> vectors;
  for (std::size_t i = 0; i < pairs.dim(); ++i) {
    Vector st = pairs.vector(i);
    Vector s(st.begin(), st.begin() + static_cast<std::ptrdiff_t>(a.dim()));
    vectors.push_back(ea.apply(s));
  }
  return Subspace::span(a.field(), a.ambient_dim(), vectors);
}

bool contains(const Subspace& s, const Vector& v) { return s.contains(v); }

QuotientPresentation quotient(std::size_t ambient_dim, const Subspace& relations) {
  if (relations.ambient_dim() != ambient_dim)
    throw DimensionMismatch("quotient: relations live in dimension " + std::to_string(relations.ambient_dim()) +
                            ", expected " + std::to_string(ambient_dim));
  const Field& f = relations.field();
  std::vector<bool> is_pivot(ambient_dim, false);
  for (std::size_t p : relations.pivots()) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < ambient_dim; ++i)
    if (!is_pivot[i]) free.push_back(i);

  QuotientPresentation q;
  q.ambient_dim = ambient_dim;
  q.relations = relations;
  q.quotient_dim = free.size();
  q.basis_coordinates = free;
  q.projection = Matrix(f, free.size(), ambient_dim);
  q.section = Matrix(f, ambient_dim, free.size());
  for (std::size_t j = 0; j < ambient_dim; ++j) {
    Vector e(ambient_dim);
    e[j] = 1;
    Vector r = reduce(relations.basis(), relations.pivots(), e);
    for (std::size_t t = 0; t < free.size(); ++t) q.projection.set(t, j, r[free[t]]);
  }
  for (std::size_t t = 0; t < free.size(); ++t) q.section.set(free[t], t, 1);
  return q;
}

AffineSolution solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) throw DimensionMismatch("solve: right-hand side length differs from row count");
  const Field& f = m.field();
  Echelon e = echelon(hstack(m, Matrix::column_of(f, b)));
  AffineSolution out;
  out.homogeneous = kernel_from_echelon(f, e, m.cols());
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return out;
  Vector x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.form(i, m.cols());
  out.particular = std::move(x);
  return out;
}

}  // namespace entwine

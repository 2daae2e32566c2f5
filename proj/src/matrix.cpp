#include "entwine/matrix.hpp"

#include <sstream>

#include "entwine/error.hpp"
#include "entwine/subspace.hpp"

namespace entwine {

namespace {

void require_same_field(const Matrix& a, const Matrix& b, const char* op) {
  if (!(a.field() == b.field()))
    throw FieldMismatch(std::string(op) + ": " + a.field().name() + " vs " + b.field().name());
}

}  // namespace

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

Matrix Matrix::from_rows(Field field, std::initializer_list<std::initializer_list<long>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.begin()->size();
  Matrix m(field, r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionMismatch("ragged matrix literal");
    std::size_t j = 0;
    for (long v : row) m.set(i, j++, Scalar(v));
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(Field field, const std::vector<Vector>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r == 0 ? 0 : rows.front().size();
  Matrix m(field, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionMismatch("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::column_of(Field field, const Vector& v) {
  Matrix m(field, v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) m.set(i, 0, v[i]);
  return m;
}

Matrix Matrix::row_of(Field field, const Vector& v) {
  Matrix m(field, 1, v.size());
  for (std::size_t i = 0; i < v.size(); ++i) m.set(0, i, v[i]);
  return m;
}

void Matrix::accumulate(std::size_t r, std::size_t c, const Scalar& v) {
  Scalar& slot = data_[r * cols_ + c];
  slot = field_.add(slot, v);
}

Vector Matrix::row_vector(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column_vector(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = (*this)(r, c);
  return t;
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& rows) const {
  Matrix out(field_, rows.size(), cols_);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t c = 0; c < cols_; ++c) out.data_[i * cols_ + c] = (*this)(rows[i], c);
  return out;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& cols) const {
  Matrix out(field_, rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t j = 0; j < cols.size(); ++j) out.data_[r * cols.size() + j] = (*this)(r, cols[j]);
  return out;
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out(*this);
  Scalar k = field_.normalize(s);
  for (auto& x : out.data_) x = field_.mul(x, k);
  return out;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if ((*this)(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

std::size_t Matrix::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& x : data_)
    if (x != 0) ++n;
  return n;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_)
    throw DimensionMismatch("apply: vector of length " + std::to_string(v.size()) +
                            " to " + std::to_string(rows_) + "x" + std::to_string(cols_));
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    Scalar acc = 0;
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (a != 0 && v[c] != 0) acc = field_.add(acc, field_.mul(a, v[c]));
    }
    out[r] = acc;
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "product");
  if (a.cols_ != b.rows_)
    throw DimensionMismatch("product of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                            " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  const Field& f = a.field_;
  Matrix out(f, a.rows_, b.cols_);
  // Structure tensors are sparse; skipping zeros of the left factor is the
  // whole optimisation.
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& y = b(k, j);
        if (y == 0) continue;
        Scalar& slot = out.data_[i * b.cols_ + j];
        slot = f.add(slot, f.mul(x, y));
      }
    }
  }
  return out;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "sum");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("sum of differently shaped matrices");
  Matrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.add(a.data_[i], b.data_[i]);
  return out;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "difference");
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw DimensionMismatch("difference of " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                            " and " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  Matrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return out;
}

std::string Matrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << field_.format((*this)(r, c));
  }
  os << "]";
  return os.str();
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "hstack");
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row counts differ");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.set(r, c, a(r, c));
    for (std::size_t c = 0; c < b.cols(); ++c) out.set(r, a.cols() + c, b(r, c));
  }
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "vstack");
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) out.set(r, c, a(r, c));
    for (std::size_t r = 0; r < b.rows(); ++r) out.set(a.rows() + r, c, b(r, c));
  }
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  require_same_field(a, b, "kron");
  const Field& f = a.field();
  Matrix out(f, a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& x = a(i, j);
      if (x == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          const Scalar& y = b(k, l);
          if (y == 0) continue;
          out.set(i * b.rows() + k, j * b.cols() + l, f.mul(x, y));
        }
    }
  return out;
}

Echelon echelon(const Matrix& m) {
  const Field& f = m.field();
  std::vector<Vector> rows(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows[r] = m.row_vector(r);
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < rows.size(); ++col) {
    std::size_t pivot_row = lead;
    while (pivot_row < rows.size() && rows[pivot_row][col] == 0) ++pivot_row;
    if (pivot_row == rows.size()) continue;
    std::swap(rows[lead], rows[pivot_row]);
    Scalar scale = f.inv(rows[lead][col]);
    std::vector<std::size_t> support;
    for (std::size_t c = col; c < m.cols(); ++c)
      if (rows[lead][c] != 0) {
        rows[lead][c] = f.mul(rows[lead][c], scale);
        support.push_back(c);
      }
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == lead || rows[r][col] == 0) continue;
      Scalar factor = rows[r][col];
      for (std::size_t c : support) rows[r][c] = f.sub(rows[r][c], f.mul(factor, rows[lead][c]));
    }
    pivots.push_back(col);
    ++lead;
  }
  Matrix form(f, m.rows(), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (rows[r][c] != 0) form.set(r, c, rows[r][c]);
  return {std::move(form), std::move(pivots)};
}

Matrix rref(const Matrix& m) { return echelon(m).form; }

std::size_t rank(const Matrix& m) { return echelon(m).pivots.size(); }

std::variant<Matrix, NotInvertible> try_invert(const Matrix& m) {
  if (m.rows() != m.cols())
    throw NotSquare("cannot invert a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix");
  std::size_t n = m.rows();
  Echelon e = echelon(hstack(m, Matrix::identity(m.field(), n)));
  // Full rank iff the left block reduced to the identity, i.e. all n pivots
  // landed in the first n columns.
  std::size_t left_rank = 0;
  for (std::size_t p : e.pivots)
    if (p < n) ++left_rank;
  if (left_rank < n) {
    Subspace k = kernel(m);
    return NotInvertible{left_rank, k.vector(0)};
  }
  Matrix inv(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv.set(r, c, e.form(r, n + c));
  return inv;
}

}  // namespace entwine

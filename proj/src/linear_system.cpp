#include "entwine/linear_system.hpp"

#include <map>

#include "entwine/error.hpp"

namespace entwine {

MapEquationSystem::MapEquationSystem(Field field, std::size_t x_rows, std::size_t x_cols)
    : field_(field), x_rows_(x_rows), x_cols_(x_cols) {}

void MapEquationSystem::begin_block(std::size_t out_rows, std::size_t out_cols) {
  block_start_ = rows_.size();
  block_rows_ = out_rows;
  block_cols_ = out_cols;
  rows_.resize(rows_.size() + out_rows * out_cols);
  rhs_.resize(rhs_.size() + out_rows * out_cols);
}

void MapEquationSystem::add_term(const Matrix& p, std::size_t left, std::size_t right, const Matrix& q,
                                 const Scalar& coefficient) {
  // (P (I_l (x) X (x) I_r) Q)[r][s] = sum_{i,u,j,v} P[r,(i,u,j)] X[u,v] Q[(i,v,j),s]
  if (p.rows() != block_rows_ || q.cols() != block_cols_ || p.cols() != left * x_rows_ * right ||
      q.rows() != left * x_cols_ * right)
    throw DimensionMismatch("MapEquationSystem::add_term: term shape does not match the block");
  const Field& f = field_;
  Scalar k = f.normalize(coefficient);
  std::vector<std::map<std::size_t, Scalar>> acc(block_rows_ * block_cols_);
  for (std::size_t r = 0; r < p.rows(); ++r)
    for (std::size_t i = 0; i < left; ++i)
      for (std::size_t u = 0; u < x_rows_; ++u)
        for (std::size_t j = 0; j < right; ++j) {
          const Scalar& pv = p(r, (i * x_rows_ + u) * right + j);
          if (pv == 0) continue;
          for (std::size_t v = 0; v < x_cols_; ++v) {
            std::size_t qrow = (i * x_cols_ + v) * right + j;
            for (std::size_t s = 0; s < q.cols(); ++s) {
              const Scalar& qv = q(qrow, s);
              if (qv == 0) continue;
              Scalar& slot = acc[r * block_cols_ + s][u * x_cols_ + v];
              slot = f.add(slot, f.mul(k, f.mul(pv, qv)));
            }
          }
        }
  for (std::size_t e = 0; e < acc.size(); ++e) {
    auto& row = rows_[block_start_ + e];
    for (auto& [col, value] : acc[e]) {
      Scalar& slot = row[col];
      slot = f.add(slot, value);
    }
  }
}

void MapEquationSystem::set_constant(const Matrix& value) {
  if (value.rows() != block_rows_ || value.cols() != block_cols_)
    throw DimensionMismatch("MapEquationSystem::set_constant: shape does not match the block");
  for (std::size_t r = 0; r < block_rows_; ++r)
    for (std::size_t s = 0; s < block_cols_; ++s) rhs_[block_start_ + r * block_cols_ + s] = value(r, s);
}

Matrix MapEquationSystem::coefficient_matrix() const {
  Matrix m(field_, rows_.size(), unknowns());
  for (std::size_t e = 0; e < rows_.size(); ++e)
    for (const auto& [c, v] : rows_[e]) m.set(e, c, v);
  return m;
}

AffineSolution MapEquationSystem::solve() const { return entwine::solve(coefficient_matrix(), rhs_); }

bool MapEquationSystem::satisfied_by(const Matrix& x) const {
  if (x.rows() != x_rows_ || x.cols() != x_cols_) throw DimensionMismatch("satisfied_by: unknown has wrong shape");
  Vector v = vectorise(x);
  for (std::size_t e = 0; e < rows_.size(); ++e) {
    Scalar acc = 0;
    for (const auto& [c, coeff] : rows_[e]) acc = field_.add(acc, field_.mul(coeff, v[c]));
    if (acc != rhs_[e]) return false;
  }
  return true;
}

Vector MapEquationSystem::vectorise(const Matrix& x) {
  Vector v;
  v.reserve(x.rows() * x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) v.push_back(x(r, c));
  return v;
}

Matrix MapEquationSystem::unvectorise(const Field& f, const Vector& v, std::size_t rows, std::size_t cols) {
  Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, v[r * cols + c]);
  return m;
}

}  // namespace entwine

#include "entwine/tensor.hpp"

#include "entwine/error.hpp"

namespace entwine {

Matrix flip(const Field& f, std::size_t d1, std::size_t d2) {
  Matrix m(f, d1 * d2, d1 * d2);
  for (std::size_t i = 0; i < d1; ++i)
    for (std::size_t j = 0; j < d2; ++j) m.set(j * d1 + i, i * d2 + j, 1);
  return m;
}

std::size_t tensor_index(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& idx) {
  std::size_t flat = 0;
  for (std::size_t t = 0; t < dims.size(); ++t) flat = flat * dims[t] + idx[t];
  return flat;
}

Matrix permute_factors(const Field& f, const std::vector<std::size_t>& dims,
                       const std::vector<std::size_t>& perm) {
  if (perm.size() != dims.size()) throw DimensionMismatch("permute_factors: permutation length");
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  std::vector<std::size_t> out_dims(dims.size());
  for (std::size_t t = 0; t < perm.size(); ++t) out_dims[t] = dims.at(perm[t]);

  Matrix m(f, total, total);
  std::vector<std::size_t> idx(dims.size(), 0), out_idx(dims.size());
  for (std::size_t flat = 0; flat < total; ++flat) {
    for (std::size_t t = 0; t < perm.size(); ++t) out_idx[t] = idx[perm[t]];
    m.set(tensor_index(out_dims, out_idx), flat, 1);
    for (std::size_t t = dims.size(); t-- > 0;) {
      if (++idx[t] < dims[t]) break;
      idx[t] = 0;
    }
  }
  return m;
}

}  // namespace entwine

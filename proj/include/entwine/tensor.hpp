#pragma once

#include <vector>

#include "entwine/matrix.hpp"

namespace entwine {

// Index conventions for tensor bases live here and in kron(); every module
// builds its composites from these pieces.

inline Matrix id(const Field& f, std::size_t n) { return Matrix::identity(f, n); }

/// kron over any number of factors, left factor major.
template <typename... Rest>
Matrix tensor(const Matrix& first, const Rest&... rest) {
  if constexpr (sizeof...(rest) == 0) {
    return first;
  } else {
    return kron(first, tensor(rest...));
  }
}

/// V1 (x) V2 -> V2 (x) V1.
Matrix flip(const Field& f, std::size_t d1, std::size_t d2);

/// V_0 (x) ... (x) V_{n-1} -> V_{perm[0]} (x) ... (x) V_{perm[n-1]}.
Matrix permute_factors(const Field& f, const std::vector<std::size_t>& dims,
                       const std::vector<std::size_t>& perm);

/// Flattened index of a multi-index in the left-major tensor basis.
std::size_t tensor_index(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& idx);

}  // namespace entwine

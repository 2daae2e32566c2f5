#pragma once

// Hand-written structures for tests. Built term by term from multiplication
// rules, never through the catalogue, so they can check it.

#include <algorithm>
#include <array>
#include <functional>
#include <random>
#include <tuple>

#include "entwine/structures.hpp"
#include "entwine/subspace.hpp"
#include "entwine/tensor.hpp"

namespace oracle {

using namespace entwine;

using Term = std::tuple<std::size_t, long>;                 // (basis index, coefficient)
using Term2 = std::tuple<std::size_t, std::size_t, long>;  // (i, j, coefficient) of e_i (x) e_j

inline Vector basis_vector(std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v[i] = 1;
  return v;
}

inline FiniteAlgebra algebra(const Field& f, std::vector<std::string> names,
                             const std::function<std::vector<Term>(std::size_t, std::size_t)>& product,
                             std::size_t unit_index = 0) {
  std::size_t n = names.size();
  Matrix m(f, n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (auto [k, c] : product(i, j)) m.set(k, i * n + j, m(k, i * n + j) + f.from_int(c));
  return {f, std::move(names), m, Matrix::column_of(f, basis_vector(n, unit_index))};
}

inline FiniteCoalgebra coalgebra(const Field& f, std::vector<std::string> names,
                                 const std::function<std::vector<Term2>(std::size_t)>& delta,
                                 const std::vector<long>& eps) {
  std::size_t n = names.size();
  Matrix d(f, n * n, n), e(f, 1, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (auto [j, k, c] : delta(i)) d.set(j * n + k, i, d(j * n + k, i) + f.from_int(c));
    e.set(0, i, f.from_int(eps[i]));
  }
  return {f, std::move(names), d, e};
}

/// k[Z_n], basis g^0..g^{n-1}.
inline HopfAlgebra cyclic_group_algebra(const Field& f, std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  auto a = algebra(f, names, [n](std::size_t i, std::size_t j) { return std::vector<Term>{{(i + j) % n, 1}}; });
  auto c = coalgebra(f, names, [](std::size_t i) { return std::vector<Term2>{{i, i, 1}}; },
                     std::vector<long>(n, 1));
  Matrix s(f, n, n);
  for (std::size_t i = 0; i < n; ++i) s.set((n - i) % n, i, 1);
  return {a, c, s};
}

/// Sweedler's algebra, basis 1, g, x, gx.
inline HopfAlgebra sweedler(const Field& f, long antipode_x_sign = -1) {
  // products of basis words, by hand: g^2 = 1, x^2 = 0, xg = -gx
  static const std::vector<Term> table[4][4] = {
      {{{0, 1}}, {{1, 1}}, {{2, 1}}, {{3, 1}}},
      {{{1, 1}}, {{0, 1}}, {{3, 1}}, {{2, 1}}},
      {{{2, 1}}, {{3, -1}}, {}, {}},
      {{{3, 1}}, {{2, -1}}, {}, {}},
  };
  auto a = algebra(f, {"1", "g", "x", "gx"}, [](std::size_t i, std::size_t j) { return table[i][j]; });
  auto c = coalgebra(
      f, {"1", "g", "x", "gx"},
      [](std::size_t i) -> std::vector<Term2> {
        switch (i) {
          case 0: return {{0, 0, 1}};
          case 1: return {{1, 1, 1}};
          case 2: return {{2, 0, 1}, {1, 2, 1}};
          default: return {{3, 1, 1}, {0, 3, 1}};
        }
      },
      {1, 1, 0, 0});
  Matrix s(f, 4, 4);
  s.set(0, 0, 1);
  s.set(1, 1, 1);
  s.set(3, 2, f.from_int(antipode_x_sign));
  s.set(2, 3, f.from_int(-antipode_x_sign));
  return {a, c, s};
}

/// Q(sqrt d) with basis 1, r where r^2 = d.
inline FiniteAlgebra quadratic_field(const Field& f, long d) {
  return algebra(f, {"1", "r"}, [d](std::size_t i, std::size_t j) -> std::vector<Term> {
    if (i == 1 && j == 1) return {{0, d}};
    return {{i + j, 1}};
  });
}

/// k^{Z_2}: basis p_e, p_s of orthogonal idempotents, Delta(p_x) = sum_{yz=x} p_y (x) p_z.
inline FiniteCoalgebra dual_group_coalgebra_z2(const Field& f) {
  return coalgebra(
      f, {"p_e", "p_s"},
      [](std::size_t i) -> std::vector<Term2> {
        if (i == 0) return {{0, 0, 1}, {1, 1, 1}};
        return {{0, 1, 1}, {1, 0, 1}};
      },
      {1, 0});
}

/// a -> a (x) e for a fixed basis vector e of c.
inline Matrix trivial_coaction(const Field& f, std::size_t dim_a, const FiniteCoalgebra& c, const Vector& e) {
  return kron(id(f, dim_a), Matrix::column_of(f, e));
}

/// Random invertible matrix over f (a prime field).
inline Matrix random_invertible(std::mt19937& rng, const Field& f, std::size_t n) {
  std::uniform_int_distribution<long> d(0, static_cast<long>(f.modulus()) - 1);
  while (true) {
    Matrix t(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t.set(i, j, d(rng));
    if (rank(t) == n) return t;
  }
}

inline Matrix random_matrix(std::mt19937& rng, const Field& f, std::size_t r, std::size_t c) {
  std::uniform_int_distribution<long> d(0, static_cast<long>(f.modulus()) - 1);
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, d(rng));
  return m;
}

/// Small algebras over f, all hand-built: k, k x k, k[x]/x^2, k[x]/x^3, k[Z3],
/// upper-triangular 2x2, M_2(k).
inline std::vector<FiniteAlgebra> small_algebras(const Field& f) {
  std::vector<FiniteAlgebra> out;
  out.push_back(algebra(f, {"1"}, [](std::size_t, std::size_t) { return std::vector<Term>{{0, 1}}; }));
  out.push_back(algebra(f, {"u", "v"}, [](std::size_t i, std::size_t j) {
    return i == j ? std::vector<Term>{{i, 1}} : std::vector<Term>{};
  }));
  // unit is u + v; rebuild unit column by hand
  out.back().unit = Matrix::column_of(f, Vector{1, 1});
  out.push_back(algebra(f, {"1", "x"}, [](std::size_t i, std::size_t j) {
    return i + j < 2 ? std::vector<Term>{{i + j, 1}} : std::vector<Term>{};
  }));
  out.push_back(algebra(f, {"1", "x", "x2"}, [](std::size_t i, std::size_t j) {
    return i + j < 3 ? std::vector<Term>{{i + j, 1}} : std::vector<Term>{};
  }));
  out.push_back(cyclic_group_algebra(f, 3).algebra);
  // upper triangular: e11, e12, e22
  out.push_back(algebra(f, {"e11", "e12", "e22"}, [](std::size_t i, std::size_t j) -> std::vector<Term> {
    if (i == 0 && j == 0) return {{0, 1}};
    if (i == 0 && j == 1) return {{1, 1}};
    if (i == 1 && j == 2) return {{1, 1}};
    if (i == 2 && j == 2) return {{2, 1}};
    return {};
  }));
  out.back().unit = Matrix::column_of(f, Vector{1, 0, 1});
  // M_2: E_ab at index 2a+b, E_ab E_cd = [b=c] E_ad
  out.push_back(algebra(f, {"E11", "E12", "E21", "E22"}, [](std::size_t i, std::size_t j) -> std::vector<Term> {
    if (i % 2 != j / 2) return {};
    return {{(i / 2) * 2 + j % 2, 1}};
  }));
  out.back().unit = Matrix::column_of(f, Vector{1, 0, 0, 1});
  return out;
}

/// psi(h_i (x) a_j) = a_(0) (x) h_i a_(1), summed coefficient by coefficient.
inline Matrix hopf_psi(const HopfAlgebra& h, std::size_t da, const Matrix& coaction) {
  const Field& f = h.field();
  const std::size_t dh = h.dim();
  Matrix psi(f, da * dh, dh * da);
  for (std::size_t i = 0; i < dh; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < dh; ++l) {
          Scalar c = coaction(k * dh + l, j);
          if (c == 0) continue;
          Vector hl = h.algebra.product(basis_vector(dh, i), basis_vector(dh, l));
          for (std::size_t t = 0; t < dh; ++t) psi.set(k * dh + t, i * da + j, psi(k * dh + t, i * da + j) + f.mul(c, hl[t]));
        }
  return psi;
}

/// psi^-1(a_j (x) h_i) = h_i S^-1(a_(1)) (x) a_(0).
inline Matrix hopf_psi_inverse(const HopfAlgebra& h, std::size_t da, const Matrix& coaction, const Matrix& s_inv) {
  const Field& f = h.field();
  const std::size_t dh = h.dim();
  Matrix out(f, dh * da, da * dh);
  for (std::size_t j = 0; j < da; ++j)
    for (std::size_t i = 0; i < dh; ++i)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < dh; ++l) {
          Scalar c = coaction(k * dh + l, j);
          if (c == 0) continue;
          Vector v = h.algebra.product(basis_vector(dh, i), s_inv.column_vector(l));
          for (std::size_t t = 0; t < dh; ++t) out.set(t * da + k, j * dh + i, out(t * da + k, j * dh + i) + f.mul(c, v[t]));
        }
  return out;
}

/// k x k with u -> u (x) g, v -> v (x) 1 over k[Z2]: a comodule, not an algebra map.
inline ComoduleAlgebra split_coaction(const Field& f) {
  HopfAlgebra h = cyclic_group_algebra(f, 2);
  FiniteAlgebra a = small_algebras(f)[1];
  Matrix d(f, 4, 2);
  d.set(0 * 2 + 1, 0, 1);
  d.set(1 * 2 + 0, 1, 1);
  return {a, h.coalgebra, d};
}

using Table = std::vector<std::vector<std::size_t>>;

/// Cayley table of S3 from composing permutations of {0,1,2}: (st)(x) = s(t(x)).
/// Order: e, (01), (02), (12), (012), (021).
inline Table s3_table() {
  const std::vector<std::array<std::size_t, 3>> perms{{0, 1, 2}, {1, 0, 2}, {2, 1, 0}, {0, 2, 1}, {1, 2, 0}, {2, 0, 1}};
  Table t(6, std::vector<std::size_t>(6));
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) {
      std::array<std::size_t, 3> c{perms[i][perms[j][0]], perms[i][perms[j][1]], perms[i][perms[j][2]]};
      t[i][j] = static_cast<std::size_t>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return t;
}

inline Table cyclic_table(std::size_t n) {
  Table t(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return t;
}

/// k[G] from a Cayley table with identity 0.
inline HopfAlgebra group_algebra(const Field& f, const Table& t) {
  const std::size_t n = t.size();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("g" + std::to_string(i));
  auto a = algebra(f, names, [&t](std::size_t i, std::size_t j) { return std::vector<Term>{{t[i][j], 1}}; });
  auto c = coalgebra(f, names, [](std::size_t i) { return std::vector<Term2>{{i, i, 1}}; }, std::vector<long>(n, 1));
  Matrix s(f, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (t[i][j] == 0) s.set(j, i, 1);
  return {a, c, s};
}

/// span{g - gh : g in G, h in H}.
inline Subspace coset_coideal(const Field& f, const Table& t, const std::vector<std::size_t>& h) {
  const std::size_t n = t.size();
  std::vector<Vector> vs;
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t x : h) {
      Vector v = basis_vector(n, g);
      v[t[g][x]] = v[t[g][x]] - 1;
      vs.push_back(v);
    }
  return Subspace::span(f, n, vs);
}

}  // namespace oracle

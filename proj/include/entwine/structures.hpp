#pragma once

#include <string>
#include <vector>

#include "entwine/matrix.hpp"
#include "entwine/report.hpp"

namespace entwine {

/// Associative unital algebra by structure constants:
/// e_i e_j = sum_k mult(k, i*dim + j) e_k.
struct FiniteAlgebra {
  Field field;
  std::vector<std::string> basis;
  Matrix mult;  // dim x dim^2
  Matrix unit;  // dim x 1

  std::size_t dim() const { return basis.size(); }
  Vector unit_vector() const { return unit.column_vector(0); }
  Vector product(const Vector& a, const Vector& b) const;
  /// x -> a x
  Matrix left_multiplication(const Vector& a) const;
  /// x -> x a
  Matrix right_multiplication(const Vector& a) const;
};

/// Coassociative counital coalgebra: Delta(e_i) = sum comult((j,k), i) e_j (x) e_k.
struct FiniteCoalgebra {
  Field field;
  std::vector<std::string> basis;
  Matrix comult;  // dim^2 x dim
  Matrix counit;  // 1 x dim

  std::size_t dim() const { return basis.size(); }
};

struct HopfAlgebra {
  FiniteAlgebra algebra;
  FiniteCoalgebra coalgebra;
  Matrix antipode;

  std::size_t dim() const { return algebra.dim(); }
  const Field& field() const { return algebra.field; }
};

/// V -> V (x) C.
struct RightComodule {
  std::size_t dim = 0;
  FiniteCoalgebra over;
  Matrix coaction;
};

/// V -> C (x) V.
struct LeftComodule {
  std::size_t dim = 0;
  FiniteCoalgebra over;
  Matrix coaction;
};

/// V (x) A -> V.
struct RightModule {
  std::size_t dim = 0;
  FiniteAlgebra over;
  Matrix action;
};

/// An algebra that is also a right C-comodule. The coaction need not be an
/// algebra map.
struct ComoduleAlgebra {
  FiniteAlgebra algebra;
  FiniteCoalgebra coalgebra;
  Matrix coaction;  // dimA*dimC x dimA

  RightComodule as_comodule() const { return {algebra.dim(), coalgebra, coaction}; }
  const Field& field() const { return algebra.field; }
};

/// A coalgebra that is also a right A-module. The action need not be a
/// coalgebra map.
struct ModuleCoalgebra {
  FiniteCoalgebra coalgebra;
  FiniteAlgebra algebra;
  Matrix action;  // dimC x dimC*dimA

  RightModule as_module() const { return {coalgebra.dim(), algebra, action}; }
  const Field& field() const { return coalgebra.field; }
};

/// Verified group-like element: Delta(e) = e (x) e, eps(e) = 1.
class GroupLike {
 public:
  /// Throws NotGroupLike.
  GroupLike(const FiniteCoalgebra& c, Vector element);
  const Vector& element() const { return element_; }

 private:
  Vector element_;
};

/// Verified character: kappa(ab) = kappa(a) kappa(b), kappa(1) = 1.
class Character {
 public:
  /// Throws NotCharacter.
  Character(const FiniteAlgebra& a, Vector values);
  const Vector& values() const { return values_; }
  Matrix as_map(const Field& f) const { return Matrix::row_of(f, values_); }

 private:
  Vector values_;
};

/// The one-dimensional algebra / coalgebra k.
FiniteAlgebra ground_algebra(const Field& f);
FiniteCoalgebra ground_coalgebra(const Field& f);

Report validate_algebra(const FiniteAlgebra& a);
Report validate_coalgebra(const FiniteCoalgebra& c);
Report validate_comodule(const RightComodule& v);
Report validate_left_comodule(const LeftComodule& v);
Report validate_module(const RightModule& v);
/// Bialgebra compatibility, both antipode laws, and invertibility of S.
/// Throws DimensionMismatch if the algebra and coalgebra sizes differ.
Report validate_hopf(const HopfAlgebra& h);

/// Transposes of the structure tensors. Basis labels gain/lose a trailing '*'.
FiniteAlgebra dualize(const FiniteCoalgebra& c);
FiniteCoalgebra dualize(const FiniteAlgebra& a);

bool verify_grouplike(const FiniteCoalgebra& c, const Vector& e);
bool verify_character(const FiniteAlgebra& a, const Vector& kappa);

/// Exhaustive search, offered only over GF(p) with p <= 7 and dim <= 4.
/// Throws PreconditionViolation outside that range.
std::vector<Vector> find_grouplikes(const FiniteCoalgebra& c);
std::vector<Vector> find_characters(const FiniteAlgebra& a);

/// f * g = m o (f (x) g) o Delta for linear maps C -> A (dimA x dimC).
Matrix convolution(const FiniteCoalgebra& c, const FiniteAlgebra& a, const Matrix& f, const Matrix& g);

/// Structure transported along the basis change v -> t v (t invertible).
FiniteAlgebra change_basis(const FiniteAlgebra& a, const Matrix& t);
FiniteCoalgebra change_basis(const FiniteCoalgebra& c, const Matrix& t);
HopfAlgebra change_basis(const HopfAlgebra& h, const Matrix& t);

/// (m (x) m_C) o (A (x) flip (x) C): the product of the tensor algebra A (x) C.
Matrix tensor_product_multiplication(const FiniteAlgebra& a, const FiniteAlgebra& c);

/// Throws NotInvertibleError.
Matrix inverse_or_throw(const Matrix& m, const std::string& what);

}  // namespace entwine

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entwine/cogalois.hpp"

namespace entwine {

/// Everything a structure file can hold. Spaces are named "A" (the algebra
/// side) and "C" (the coalgebra side); a Hopf algebra uses both with equal
/// dimension.
struct Document {
  std::string name;
  Field field;
  std::optional<std::vector<std::string>> space_a, space_c;
  std::optional<FiniteAlgebra> algebra;
  std::optional<FiniteCoalgebra> coalgebra;
  std::optional<Matrix> antipode;  // C -> C
  std::optional<Matrix> coaction;  // A -> A (x) C
  std::optional<Matrix> action;    // C (x) A -> C
  std::optional<Matrix> psi;       // C (x) A -> A (x) C
  std::vector<Vector> grouplikes;  // in C
  std::vector<Vector> characters;  // on A
  std::vector<Subspace> coideals;  // of C

  // Accessors for suites; each throws MissingSection naming what is absent.
  const FiniteAlgebra& need_algebra() const;
  const FiniteCoalgebra& need_coalgebra() const;
  HopfAlgebra hopf() const;
  ComoduleAlgebra comodule_algebra() const;
  ModuleCoalgebra module_coalgebra() const;
};

/// "Q" or "GF(p)". Throws std::invalid_argument.
Field field_from_name(std::string_view name);

/// Throws SchemaError (with a JSON pointer) or FieldParseError.
Document parse_document(std::string_view text);

/// Canonical text: sorted keys, sparse entries in index order, coefficients
/// in lowest terms. emit(parse(emit(d))) == emit(d).
std::string emit_document(const Document& d);

}  // namespace entwine

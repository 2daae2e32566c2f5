#pragma once

#include "entwine/structures.hpp"

namespace entwine {

/// psi: C (x) A -> A (x) C, a (dimA*dimC) x (dimC*dimA) matrix.
struct EntwiningStructure {
  FiniteAlgebra algebra;
  FiniteCoalgebra coalgebra;
  Matrix psi;

  const Field& field() const { return algebra.field; }
};

/// mu_AC: A(x)C(x)A -> A(x)C and delta_CA: C(x)A -> C(x)A(x)C.
struct StructureMapPair {
  FiniteAlgebra algebra;
  FiniteCoalgebra coalgebra;
  Matrix mu_ac;
  Matrix delta_ca;
};

/// The four entwining identities. Throws DimensionMismatch if psi is misshaped.
Report validate_entwining(const EntwiningStructure& e);

/// psi(c (x) a) = a (x) c.
EntwiningStructure flip_entwining(const FiniteAlgebra& a, const FiniteCoalgebra& c);

/// Delta_A o m = m_{A(x)H} o (Delta_A (x) Delta_A) and Delta_A(1) = 1 (x) 1.
Report validate_coaction_algebra_map(const ComoduleAlgebra& x, const FiniteAlgebra& c_algebra);

/// psi(h (x) a) = a_(0) (x) h a_(1). x.coalgebra must be h's coalgebra.
/// Throws AxiomViolation unless Delta_A is a coaction and an algebra map.
EntwiningStructure hopf_entwining(const HopfAlgebra& h, const ComoduleAlgebra& x);

/// psi^-1(a (x) h) = h S^-1(a_(1)) (x) a_(0). Throws NotInvertibleError if S is singular.
Matrix invert_hopf_entwining(const HopfAlgebra& h, const ComoduleAlgebra& x);

/// Delta_{C(x)A} = (C(x)psi)(Delta(x)A), mu_{A(x)C} = (m(x)C)(A(x)psi).
/// Throws AxiomViolation if e is not a valid entwining.
StructureMapPair psi_to_structure_maps(const EntwiningStructure& e);

/// Right action and left linearity of mu_AC, right coaction and left
/// colinearity of delta_CA, and (eps(x)A(x)C) delta_CA = mu_AC (eta(x)C(x)A).
Report validate_structure_maps(const StructureMapPair& p);

/// psi = (eps(x)A(x)C) delta_CA = mu_AC (eta(x)C(x)A). Throws AxiomViolation,
/// carrying the difference of the two candidates, when they disagree or the
/// pair is otherwise invalid.
EntwiningStructure structure_maps_to_psi(const StructureMapPair& p);

/// Delta_V o mu_V = (mu_V (x) C)(V (x) psi)(Delta_V (x) A).
/// Throws DimensionMismatch when V's structures do not fit e.
Report validate_entwined_module(const RightModule& action, const RightComodule& coaction,
                                const EntwiningStructure& e);

}  // namespace entwine

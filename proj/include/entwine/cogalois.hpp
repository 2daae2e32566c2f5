#pragma once

#include <optional>

#include "entwine/entwining.hpp"
#include "entwine/subspace.hpp"

namespace entwine {

/// Delta(I) in C (x) I + I (x) C and eps(I) = 0.
bool is_coideal(const FiniteCoalgebra& c, const Subspace& i);

/// span{ mu(c,a)_(1) alpha(mu(c,a)_(2)) - c_(1) alpha(mu(c_(2),a)) } with alpha
/// over the dual basis. Throws AxiomViolation if the action is not a module
/// structure or the result is not a coideal.
Subspace canonical_coideal(const ModuleCoalgebra& x);

/// span{ mu(c,h) - eps(h)c } for an action of a Hopf algebra h by coalgebra
/// maps. Throws AxiomViolation if mu is not a coalgebra map.
Subspace hopf_coideal(const ModuleCoalgebra& x, const HopfAlgebra& h);

struct QuotientCoalgebra {
  FiniteCoalgebra coalgebra;  // B = C/I
  QuotientPresentation presentation;
  const Matrix& projection() const { return presentation.projection; }

  /// C as a right / left B-comodule through the projection.
  RightComodule right_of(const FiniteCoalgebra& c) const;
  LeftComodule left_of(const FiniteCoalgebra& c) const;
};

/// Throws NotCoideal.
QuotientCoalgebra quotient_coalgebra(const FiniteCoalgebra& c, const Subspace& i);

/// Kernel of Delta_M (x) N - M (x) Delta_N inside M (x) N. Throws
/// DimensionMismatch if the comodules are over different coalgebras and
/// AxiomViolation if either fails the comodule axioms.
Subspace cotensor(const RightComodule& m, const LeftComodule& n);

struct CoextensionCertificate {
  ModuleCoalgebra coextension;
  Subspace coideal;  // I
  QuotientCoalgebra quotient;
  Subspace cotensor;  // C []_B C inside C (x) C
  Matrix cocan_full;  // (C (x) mu)(Delta (x) A): C (x) A -> C (x) C
  Matrix cocan;       // C (x) A -> C []_B C, in cotensor coordinates
  std::size_t cocan_rank = 0;
  bool bijective = false;
  std::optional<Matrix> cocan_inverse;
  std::optional<Matrix> cotau;  // C []_B C -> A, cotensor coordinates
  std::optional<Vector> kernel_witness;
  std::optional<Vector> cokernel_witness;  // in C (x) C
  Report report;

  /// cotau read on C (x) C through the cotensor coordinates; meaningful on
  /// C []_B C only.
  Matrix cotau_ambient() const;
  /// Throws NotGaloisCoextension with the rank and witness.
  void require_coextension(const std::string& operation) const;
};

/// Builds I, B = C/I, C []_B C and cocan, decides bijectivity onto the
/// cotensor product and, when bijective, checks the cotranslation map. Never
/// throws NotGaloisCoextension. Throws AxiomViolation for a bad action and
/// ImageEscape if cocan leaves the cotensor product.
CoextensionCertificate coextension_check(const ModuleCoalgebra& x);

/// psi = (cotau (x) C)(C (x) Delta) cocan. Throws NotGaloisCoextension.
EntwiningStructure canonical_entwining_dual(const CoextensionCertificate& cert);

/// Solves Delta o mu = (mu (x) C)(C (x) psi')(Delta (x) A) for psi'. Skipped
/// when the certificate is not a Galois coextension.
Report dual_uniqueness(const CoextensionCertificate& cert);

struct DualBundleResult {
  Matrix action;   // (kappa (x) C) psi
  Subspace coideal;  // I_kappa
  QuotientCoalgebra quotient;
  Subspace cotensor;
  Matrix cocan_psi;  // C (x) A -> C (x) C
  bool bijective = false;
  Report report;
};

/// Throws NotCharacter, or AxiomViolation if e is not an entwining.
DualBundleResult dual_bundle_check(const EntwiningStructure& e, const Vector& character);

/// Starting from (psi, kappa): dual bundle <=> mu = (kappa (x) C) psi makes a
/// Galois coextension with canonical entwining psi and eps o mu = eps (x)
/// kappa; mu is the only such action; the round trip reproduces psi, mu and
/// I_kappa exactly.
Report dual_bundle_equivalence(const EntwiningStructure& e, const Vector& character);

/// Starting from a module coalgebra with eps o mu = eps (x) kappa for a
/// character kappa: the dual canonical entwining makes a dual bundle with the
/// same coideal and cocan. Skipped when no such kappa exists.
Report dual_bundle_from_coextension(const ModuleCoalgebra& x);

}  // namespace entwine

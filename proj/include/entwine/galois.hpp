#pragma once

#include <optional>

#include "entwine/entwining.hpp"
#include "entwine/subspace.hpp"

namespace entwine {

/// {b | Delta_A(ba) = b Delta_A(a) for all a}. Throws AxiomViolation if the
/// result is not a unital subalgebra.
Subspace coinvariants(const ComoduleAlgebra& x);

/// Whether {b | Delta_A(b) = b (x) e} equals coinvariants(x), where
/// Delta_A(1) = 1 (x) e. Throws PreconditionViolation unless Delta_A is an
/// algebra map for c_algebra and Delta_A(1) has that form.
bool classical_coinvariants_agree(const ComoduleAlgebra& x, const FiniteAlgebra& c_algebra);

/// A (x)_B A as A (x) A modulo span{ab (x) a' - a (x) ba'}. Throws NotSubalgebra.
QuotientPresentation balanced_tensor(const FiniteAlgebra& a, const Subspace& b);

struct GaloisCertificate {
  ComoduleAlgebra extension;
  Subspace coinvariants;
  QuotientPresentation balanced;  // A (x)_B A
  Matrix can_unbalanced;          // (m (x) C)(A (x) Delta_A) on A (x) A
  Matrix can;                     // A (x)_B A -> A (x) C
  std::size_t can_rank = 0;
  bool bijective = false;
  std::optional<Matrix> can_inverse;
  std::optional<Matrix> tau;  // C -> A (x)_B A
  /// When can is not bijective: a nonzero kernel vector (quotient
  /// coordinates) if can is not injective, else a vector of A (x) C outside
  /// the image.
  std::optional<Vector> kernel_witness;
  std::optional<Vector> cokernel_witness;
  Report report;

  /// Throws NotGalois with the rank and witness.
  void require_galois(const std::string& operation) const;
  /// A (x) (A (x)_B A) -> A (x)_B A, induced by m (x) A.
  Matrix left_action() const;
  /// A (x)_B A -> (A (x)_B A) (x) C, induced by A (x) Delta_A.
  Matrix right_coaction() const;
};

/// Builds B, A (x)_B A and can, decides bijectivity and, when bijective,
/// the translation map and its three properties. Never throws NotGalois:
/// the verdict is carried by the certificate. Throws AxiomViolation if the
/// coaction is not a comodule structure and IllDefined if can does not
/// vanish on the balancing relations.
GaloisCertificate galois_check(const ComoduleAlgebra& x);

/// psi = can o (A (x)_B m) o (tau (x) A). Throws NotGalois.
EntwiningStructure canonical_entwining(const GaloisCertificate& cert);

/// Solves Delta_A o m = (m (x) C)(A (x) psi')(Delta_A (x) A) for psi' and
/// checks the solution set is exactly the canonical psi. Skipped (not failed)
/// when the certificate is not Galois.
Report entwining_uniqueness(const GaloisCertificate& cert);

/// 0 -> A(Omega^1 B)A -> Omega^1 A -> A (x) C^+ -> 0 with Omega^1 A = ker m.
/// Reports both exactness conditions and whether exactness agrees with the
/// Galois verdict.
Report differential_sequence(const ComoduleAlgebra& x);

/// a -> psi(e (x) a).
Matrix coaction_from_entwining(const EntwiningStructure& e, const Vector& grouplike);

struct BundleResult {
  Subspace coinvariants;  // {b | psi(e (x) b) = b (x) e}
  QuotientPresentation balanced;
  Matrix can_psi;  // A (x)_B A -> A (x) C
  bool bijective = false;
  Report report;
};

/// Throws NotGroupLike, or AxiomViolation if e is not an entwining.
BundleResult bundle_check(const EntwiningStructure& e, const Vector& grouplike);

/// Starting from (psi, e): bundle <=> the coaction a -> psi(e (x) a) makes a
/// Galois extension with canonical entwining psi and Delta_A(1) = 1 (x) e,
/// that coaction is the only one, and the round trip reproduces psi, the
/// coaction and B exactly.
Report bundle_equivalence(const EntwiningStructure& e, const Vector& grouplike);

/// Starting from a comodule algebra with Delta_A(1) = 1 (x) e, e group-like:
/// the canonical entwining makes a bundle with the same B and can_psi = can.
/// Skipped when Delta_A(1) has no such form.
Report bundle_from_extension(const ComoduleAlgebra& x);

/// can_L(a (x)_B a') = S^-1(a_(1)) (x) a_(0) a' and psi o can_L = can for the
/// Hopf entwining psi. Throws NotInvertibleError if S is singular.
Report left_canonical_check(const HopfAlgebra& h, const ComoduleAlgebra& x);

}  // namespace entwine

#pragma once

#include <optional>
#include <vector>

#include "entwine/cogalois.hpp"

namespace entwine {

/// A projection chain (i_1, ..., i_m), entries 1 or 2. A chain of m factors
/// pairs with the iterated coproduct Delta_{m-1}: C -> C^{(x) m}.
using Chain = std::vector<int>;

/// (pi_{i_1} (x) ... (x) pi_{i_m}) o Delta_{m-1}, against the quotient bases
/// of C/I_1 and C/I_2. Throws NotCoideal, or PreconditionViolation for an
/// empty chain or an entry other than 1 or 2.
Matrix wp_matrix(const FiniteCoalgebra& c, const Subspace& i1, const Subspace& i2, const Chain& chain);

enum class Verdict { cogenerates, does_not_cogenerate, inconclusive_at_cutoff };

std::string_view to_string(Verdict v);

struct CogenerationReport {
  /// kernels[n-1] = intersection of ker wp over all chains with at most n factors.
  std::vector<Subspace> kernels;
  Verdict verdict = Verdict::inconclusive_at_cutoff;
  std::optional<std::size_t> zero_at;    // first n with K_n = 0
  std::optional<std::size_t> stable_at;  // first n with K_n = K_{n-1} != 0
  std::size_t cutoff = 0;
  Report report;

  std::vector<std::size_t> dims() const;
};

/// Default cutoff: dim C + 1.
std::size_t default_cutoff(const FiniteCoalgebra& c);

/// K_n for n = 1..cutoff. K_{n+1} depends on K_n alone, so K_{n+1} = K_n
/// certifies that the kernel never shrinks again; a nonzero fixed point gives
/// does_not_cogenerate. Throws NotCoideal, or PreconditionViolation if
/// cutoff is 0.
CogenerationReport cogeneration_check(const FiniteCoalgebra& c, const Subspace& i1, const Subspace& i2,
                                      std::size_t cutoff);

/// A^{co C} inside A^{co C/I_1} and A^{co C/I_2} always; equality asserted
/// when C/I_1 and C/I_2 cogenerate C, otherwise reported as not applicable.
/// Throws AxiomViolation if a projected coaction is not a comodule.
Report coinvariant_intersection_check(const ComoduleAlgebra& x, const Subspace& i1, const Subspace& i2, std::size_t cutoff);

}  // namespace entwine

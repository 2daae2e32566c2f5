#include "entwine/cogenerate.hpp"

#include "entwine/error.hpp"
#include "entwine/galois.hpp"
#include "entwine/tensor.hpp"

namespace entwine {

namespace {

std::string profile_text(const std::vector<std::size_t>& dims) {
  std::string s;
  for (std::size_t i = 0; i < dims.size(); ++i) s += (i ? "," : "") + std::to_string(dims[i]);
  return s;
}

}  // namespace

Matrix wp_matrix(const FiniteCoalgebra& c, const Subspace& i1, const Subspace& i2, const Chain& chain) {
  if (chain.empty()) throw PreconditionViolation("wp_matrix: empty chain");
  for (int i : chain)
    if (i != 1 && i != 2) throw PreconditionViolation("wp_matrix: chain entries must be 1 or 2");
  const Matrix p1 = quotient_coalgebra(c, i1).projection();
  const Matrix p2 = quotient_coalgebra(c, i2).projection();
  // built from the right: pi_{i_k} (x) rest, composed with Delta
  Matrix w = chain.back() == 1 ? p1 : p2;
  for (std::size_t k = chain.size() - 1; k-- > 0;) w = kron(chain[k] == 1 ? p1 : p2, w) * c.comult;
  return w;
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::cogenerates: return "cogenerates";
    case Verdict::does_not_cogenerate: return "does-not-cogenerate";
    case Verdict::inconclusive_at_cutoff: return "inconclusive-at-cutoff";
  }
  return "?";
}

std::vector<std::size_t> CogenerationReport::dims() const {
  std::vector<std::size_t> out;
  for (const auto& k : kernels) out.push_back(k.dim());
  return out;
}

std::size_t default_cutoff(const FiniteCoalgebra& c) { return c.dim() + 1; }

CogenerationReport cogeneration_check(const FiniteCoalgebra& c, const Subspace& i1, const Subspace& i2,
                                      std::size_t cutoff) {
  if (cutoff == 0) throw PreconditionViolation("cogeneration_check: cutoff must be at least 1");
  const Field& f = c.field;
  const std::size_t dc = c.dim();
  const QuotientCoalgebra b1 = quotient_coalgebra(c, i1), b2 = quotient_coalgebra(c, i2);
  CogenerationReport out;
  out.cutoff = cutoff;
  // chains of one factor: ker pi_1 (x) ker pi_2
  const Subspace k1 = intersect(i1, i2);
  out.kernels.push_back(k1);
  // (pi_i (x) C) o Delta
  const Matrix s1 = kron(b1.projection(), id(f, dc)) * c.comult;
  const Matrix s2 = kron(b2.projection(), id(f, dc)) * c.comult;
  bool decreasing = true;
  while (out.kernels.size() < cutoff) {
    const Subspace& prev = out.kernels.back();
    // c survives one more factor iff (pi_i (x) C)Delta(c) lies in B_i (x) K_n
    const Matrix qn = quotient(dc, prev).projection;
    Subspace next = intersect(k1, intersect(kernel(kron(id(f, b1.coalgebra.dim()), qn) * s1),
                                            kernel(kron(id(f, b2.coalgebra.dim()), qn) * s2)));
    decreasing = decreasing && prev.contains(next);
    out.kernels.push_back(next);
  }
  for (std::size_t n = 1; n <= out.kernels.size(); ++n) {
    const Subspace& k = out.kernels[n - 1];
    if (k.is_zero()) {
      out.zero_at = n;
      break;
    }
    if (n > 1 && k == out.kernels[n - 2]) {
      out.stable_at = n;
      break;
    }
  }
  out.verdict = out.zero_at ? Verdict::cogenerates : out.stable_at ? Verdict::does_not_cogenerate
                                                                  : Verdict::inconclusive_at_cutoff;
  Report& r = out.report;
  r = Report("cogeneration");
  const std::string profile = profile_text(out.dims());
  r.set_fact("kernel_dims", profile);
  r.set_fact("cutoff", static_cast<std::int64_t>(cutoff));
  r.set_fact("verdict", std::string(to_string(out.verdict)));
  if (out.zero_at) r.set_fact("zero_at", static_cast<std::int64_t>(*out.zero_at));
  if (out.stable_at) r.set_fact("stable_at", static_cast<std::int64_t>(*out.stable_at));
  r.flag("coideals", "I₁, I₂ coideals", true);
  r.flag("K_n weakly decreasing", "K_{n+1} ⊆ K_n", decreasing, "dims " + profile);
  r.flag("cogenerates", "⋂ Ker ℘_(i) = 0, i.e. (C/I₁)·(C/I₂) = C", out.verdict == Verdict::cogenerates,
         std::string(to_string(out.verdict)) + "; kernel dims by chain length " + profile);
  return out;
}

Report coinvariant_intersection_check(const ComoduleAlgebra& x, const Subspace& i1, const Subspace& i2, std::size_t cutoff) {
  const Field& f = x.field();
  const std::size_t da = x.algebra.dim();
  Report r("coinvariant intersection");
  auto projected = [&](const Subspace& i, const char* name) {
    QuotientCoalgebra b = quotient_coalgebra(x.coalgebra, i);
    ComoduleAlgebra y{x.algebra, b.coalgebra, kron(id(f, da), b.projection()) * x.coaction};
    if (!validate_comodule(y.as_comodule()).passed())
      throw AxiomViolation(std::string("coinvariant_intersection_check: (A⊗π) ∘ Δ_A is not a comodule for ") + name);
    return coinvariants(y);
  };
  const Subspace b = coinvariants(x);
  const Subspace b1 = projected(i1, "I₁"), b2 = projected(i2, "I₂");
  const Subspace meet = intersect(b1, b2);
  r.set_fact("coinvariants_dim", static_cast<std::int64_t>(b.dim()));
  r.set_fact("coinvariants_1_dim", static_cast<std::int64_t>(b1.dim()));
  r.set_fact("coinvariants_2_dim", static_cast<std::int64_t>(b2.dim()));
  r.set_fact("intersection_dim", static_cast<std::int64_t>(meet.dim()));
  r.set_fact("equal", meet == b);
  r.flag("inclusion", "A^{co C} ⊆ A^{co C/I₁} ∩ A^{co C/I₂}", meet.contains(b));
  CogenerationReport cg = cogeneration_check(x.coalgebra, i1, i2, cutoff);
  r.set_fact("verdict", std::string(to_string(cg.verdict)));
  const std::string anchor = "(C/I₁)·(C/I₂) = C ⇒ A^{co C} = A^{co C/I₁} ∩ A^{co C/I₂}";
  if (cg.verdict == Verdict::cogenerates)
    r.flag("equality", anchor, meet == b, "dims " + std::to_string(b.dim()) + " vs " + std::to_string(meet.dim()));
  else
    r.skip("equality", anchor, "hypothesis absent: " + std::string(to_string(cg.verdict)));
  return r;
}

}  // namespace entwine

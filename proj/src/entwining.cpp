#include "entwine/entwining.hpp"

#include "entwine/error.hpp"
#include "entwine/tensor.hpp"

namespace entwine {

namespace {

void require_shape(const Matrix& m, std::size_t rows, std::size_t cols, const std::string& what) {
  if (m.rows() != rows || m.cols() != cols)
    throw DimensionMismatch(what + ": expected " + std::to_string(rows) + "x" + std::to_string(cols) + ", got " +
                            std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

std::string first_failure(const Report& r) {
  for (const auto& c : r.checks())
    if (!c.passed()) return c.id + " (" + c.anchor + ")";
  return {};
}

std::optional<Matrix> first_residual(const Report& r) {
  for (const auto& c : r.checks())
    if (!c.passed()) return c.residual;
  return std::nullopt;
}

}  // namespace

Report validate_entwining(const EntwiningStructure& e) {
  const Field& f = e.field();
  const FiniteAlgebra& a = e.algebra;
  const FiniteCoalgebra& c = e.coalgebra;
  const std::size_t da = a.dim(), dc = c.dim();
  require_shape(e.psi, da * dc, dc * da, "entwining map");
  const Matrix ia = id(f, da), ic = id(f, dc);
  const Matrix& psi = e.psi;
  Report r("entwining");
  r.identity("psi multiplicative", "ψ∘(C⊗m) = (m⊗C)∘(A⊗ψ)∘(ψ⊗A)", psi * kron(ic, a.mult),
             kron(a.mult, ic) * kron(ia, psi) * kron(psi, ia));
  r.identity("psi unital", "ψ∘(C⊗η) = η⊗C", psi * kron(ic, a.unit), kron(a.unit, ic));
  r.identity("psi comultiplicative", "(A⊗Δ)∘ψ = (ψ⊗C)∘(C⊗ψ)∘(Δ⊗A)", kron(ia, c.comult) * psi,
             kron(psi, ic) * kron(ic, psi) * kron(c.comult, ia));
  r.identity("psi counital", "(A⊗ε)∘ψ = ε⊗A", kron(ia, c.counit) * psi, kron(c.counit, ia));
  return r;
}

EntwiningStructure flip_entwining(const FiniteAlgebra& a, const FiniteCoalgebra& c) {
  return {a, c, flip(a.field, c.dim(), a.dim())};
}

Report validate_coaction_algebra_map(const ComoduleAlgebra& x, const FiniteAlgebra& c_algebra) {
  require_shape(x.coaction, x.algebra.dim() * x.coalgebra.dim(), x.algebra.dim(), "coaction");
  if (c_algebra.dim() != x.coalgebra.dim()) throw DimensionMismatch("coalgebra and its algebra differ in dimension");
  Report r("coaction algebra map");
  const Matrix& d = x.coaction;
  r.identity("coaction multiplicative", "Δ_A∘m = m_{A⊗C}∘(Δ_A⊗Δ_A)", d * x.algebra.mult,
             tensor_product_multiplication(x.algebra, c_algebra) * kron(d, d));
  r.identity("coaction unital", "Δ_A∘η = η⊗η", d * x.algebra.unit, kron(x.algebra.unit, c_algebra.unit));
  return r;
}

EntwiningStructure hopf_entwining(const HopfAlgebra& h, const ComoduleAlgebra& x) {
  const Field& f = h.field();
  const std::size_t da = x.algebra.dim(), dh = h.dim();
  if (x.coalgebra.dim() != dh) throw DimensionMismatch("hopf_entwining: comodule algebra is over a different coalgebra");
  Report checks = validate_comodule(x.as_comodule());
  if (checks.passed()) checks.absorb(validate_coaction_algebra_map(x, h.algebra));
  if (!checks.passed())
    throw AxiomViolation("hopf_entwining: coaction fails " + first_failure(checks), first_residual(checks));
  // H (x) A -> H (x) A (x) H -> A (x) H (x) H -> A (x) H
  Matrix psi = kron(id(f, da), h.algebra.mult) * kron(flip(f, dh, da), id(f, dh)) * kron(id(f, dh), x.coaction);
  return {x.algebra, h.coalgebra, psi};
}

Matrix invert_hopf_entwining(const HopfAlgebra& h, const ComoduleAlgebra& x) {
  const Field& f = h.field();
  const std::size_t da = x.algebra.dim(), dh = h.dim();
  if (x.coalgebra.dim() != dh) throw DimensionMismatch("invert_hopf_entwining: comodule algebra is over a different coalgebra");
  const Matrix s_inv = inverse_or_throw(h.antipode, "antipode");
  // A (x) H -> A (x) H (x) H -> A (x) H (x) H (S^-1 on the middle) -> H (x) H (x) A -> H (x) A
  Matrix split = kron(x.coaction, id(f, dh));
  Matrix twist = tensor(id(f, da), s_inv, id(f, dh));
  Matrix reorder = permute_factors(f, {da, dh, dh}, {2, 1, 0});
  return kron(h.algebra.mult, id(f, da)) * reorder * twist * split;
}

StructureMapPair psi_to_structure_maps(const EntwiningStructure& e) {
  Report r = validate_entwining(e);
  if (!r.passed()) throw AxiomViolation("psi_to_structure_maps: not an entwining, fails " + first_failure(r), first_residual(r));
  const Field& f = e.field();
  const Matrix ia = id(f, e.algebra.dim()), ic = id(f, e.coalgebra.dim());
  Matrix delta_ca = kron(ic, e.psi) * kron(e.coalgebra.comult, ia);
  Matrix mu_ac = kron(e.algebra.mult, ic) * kron(ia, e.psi);
  return {e.algebra, e.coalgebra, mu_ac, delta_ca};
}

Report validate_structure_maps(const StructureMapPair& p) {
  const Field& f = p.algebra.field;
  const FiniteAlgebra& a = p.algebra;
  const FiniteCoalgebra& c = p.coalgebra;
  const std::size_t da = a.dim(), dc = c.dim();
  require_shape(p.mu_ac, da * dc, da * dc * da, "mu_AC");
  require_shape(p.delta_ca, dc * da * dc, dc * da, "delta_CA");
  const Matrix ia = id(f, da), ic = id(f, dc), iac = id(f, da * dc);
  const Matrix& mu = p.mu_ac;
  const Matrix& delta = p.delta_ca;
  Report r("structure maps");
  r.identity("mu_AC associative", "μ_{A⊗C}∘(μ_{A⊗C}⊗A) = μ_{A⊗C}∘(A⊗C⊗m)", mu * kron(mu, ia),
             mu * tensor(ia, ic, a.mult));
  r.identity("mu_AC unital", "μ_{A⊗C}∘(A⊗C⊗η) = A⊗C", mu * kron(iac, a.unit), iac);
  r.identity("mu_AC left linear", "μ_{A⊗C}∘(m⊗C⊗A) = (m⊗C)∘(A⊗μ_{A⊗C})", mu * tensor(a.mult, ic, ia),
             kron(a.mult, ic) * kron(ia, mu));
  const Matrix ica = id(f, dc * da);
  r.identity("delta_CA coassociative", "(Δ_{C⊗A}⊗C)∘Δ_{C⊗A} = (C⊗A⊗Δ)∘Δ_{C⊗A}", kron(delta, ic) * delta,
             tensor(ic, ia, c.comult) * delta);
  r.identity("delta_CA counital", "(C⊗A⊗ε)∘Δ_{C⊗A} = C⊗A", kron(ica, c.counit) * delta, ica);
  r.identity("delta_CA left colinear", "(Δ⊗A⊗C)∘Δ_{C⊗A} = (C⊗Δ_{C⊗A})∘(Δ⊗A)", tensor(c.comult, ia, ic) * delta,
             kron(ic, delta) * kron(c.comult, ia));
  r.identity("compatibility", "(ε⊗A⊗C)∘Δ_{C⊗A} = μ_{A⊗C}∘(η⊗C⊗A)", tensor(c.counit, ia, ic) * delta,
             mu * tensor(a.unit, ic, ia));
  return r;
}

EntwiningStructure structure_maps_to_psi(const StructureMapPair& p) {
  const Field& f = p.algebra.field;
  Report r = validate_structure_maps(p);
  const Matrix ia = id(f, p.algebra.dim()), ic = id(f, p.coalgebra.dim());
  Matrix from_delta = tensor(p.coalgebra.counit, ia, ic) * p.delta_ca;
  Matrix from_mu = p.mu_ac * tensor(p.algebra.unit, ic, ia);
  if (from_delta != from_mu)
    throw AxiomViolation("structure_maps_to_psi: (ε⊗A⊗C)∘Δ_{C⊗A} and μ_{A⊗C}∘(η⊗C⊗A) differ", from_delta - from_mu);
  if (!r.passed()) throw AxiomViolation("structure_maps_to_psi: pair fails " + first_failure(r), first_residual(r));
  return {p.algebra, p.coalgebra, from_delta};
}

Report validate_entwined_module(const RightModule& action, const RightComodule& coaction,
                                const EntwiningStructure& e) {
  const Field& f = e.field();
  const std::size_t n = action.dim, da = e.algebra.dim(), dc = e.coalgebra.dim();
  if (coaction.dim != n) throw DimensionMismatch("entwined module: action and coaction live on different spaces");
  if (action.over.dim() != da || coaction.over.dim() != dc)
    throw DimensionMismatch("entwined module: structures are over a different algebra or coalgebra");
  require_shape(action.action, n, n * da, "module action");
  require_shape(coaction.coaction, n * dc, n, "module coaction");
  require_shape(e.psi, da * dc, dc * da, "entwining map");
  Report r("entwined module");
  r.absorb(validate_module(action));
  r.absorb(validate_comodule(coaction));
  const Matrix& mu = action.action;
  const Matrix& d = coaction.coaction;
  r.identity("entwined compatibility", "Δ_V∘μ_V = (μ_V⊗C)∘(V⊗ψ)∘(Δ_V⊗A)", d * mu,
             kron(mu, id(f, dc)) * kron(id(f, n), e.psi) * kron(d, id(f, da)));
  return r;
}

}  // namespace entwine

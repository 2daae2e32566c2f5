#include "entwine/cogalois.hpp"

#include "entwine/error.hpp"
#include "entwine/linear_system.hpp"
#include "entwine/tensor.hpp"

namespace entwine {

namespace {

Matrix row(const Field& f, const Vector& v) { return Matrix::row_of(f, v); }

Vector unit_row(std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v[i] = 1;
  return v;
}

std::string vector_text(const Field& f, const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + f.format(v[i]);
  return s + ")";
}

std::string dims_text(std::size_t rank, std::size_t from, std::size_t to) {
  return "rank " + std::to_string(rank) + "; domain dim " + std::to_string(from) + ", codomain dim " +
         std::to_string(to);
}

// (C (x) mu)(Delta (x) A)
Matrix cocan_of(const FiniteCoalgebra& c, const Matrix& action, std::size_t da) {
  const Field& f = c.field;
  return kron(id(f, c.dim()), action) * kron(c.comult, id(f, da));
}

// First vector of the basis of w outside image(m), if any.
std::optional<Vector> outside(const Subspace& w, const Matrix& m) {
  Subspace im = image(m);
  for (std::size_t i = 0; i < w.dim(); ++i)
    if (!im.contains(w.vector(i))) return w.vector(i);
  return std::nullopt;
}

}  // namespace

bool is_coideal(const FiniteCoalgebra& c, const Subspace& i) {
  const Field& f = c.field;
  const std::size_t dc = c.dim();
  if (i.ambient_dim() != dc) throw DimensionMismatch("is_coideal: subspace does not live in the coalgebra");
  const Matrix e = i.embedding();
  if (!(c.counit * e).is_zero()) return false;
  Subspace target = sum(image(kron(id(f, dc), e)), image(kron(e, id(f, dc))));
  return target.contains_image_of(c.comult * e);
}

Subspace canonical_coideal(const ModuleCoalgebra& x) {
  if (!validate_module(x.as_module()).passed())
    throw AxiomViolation("canonical_coideal: the action is not a right module structure");
  const Field& f = x.field();
  const FiniteCoalgebra& c = x.coalgebra;
  const std::size_t dc = c.dim(), da = x.algebra.dim();
  const Matrix d = c.comult * x.action - cocan_of(c, x.action, da);
  Subspace i = Subspace::zero(f, dc);
  for (std::size_t t = 0; t < dc; ++t) i = sum(i, image(kron(id(f, dc), row(f, unit_row(dc, t))) * d));
  if (!is_coideal(c, i)) throw AxiomViolation("canonical_coideal: computed subspace is not a coideal");
  return i;
}

Subspace hopf_coideal(const ModuleCoalgebra& x, const HopfAlgebra& h) {
  const Field& f = x.field();
  const FiniteCoalgebra& c = x.coalgebra;
  const std::size_t dc = c.dim(), dh = h.dim();
  if (x.algebra.dim() != dh) throw DimensionMismatch("hopf_coideal: acting algebra is not the Hopf algebra");
  if (!validate_module(x.as_module()).passed())
    throw AxiomViolation("hopf_coideal: the action is not a right module structure");
  Matrix lhs = c.comult * x.action;
  Matrix rhs = kron(x.action, x.action) * permute_factors(f, {dc, dc, dh, dh}, {0, 2, 1, 3}) *
               kron(c.comult, h.coalgebra.comult);
  if (lhs != rhs) throw AxiomViolation("hopf_coideal: Δ∘μ_C ≠ (μ_C⊗μ_C)∘(C⊗flip⊗H)∘(Δ⊗Δ)", lhs - rhs);
  Matrix el = c.counit * x.action, er = kron(c.counit, h.coalgebra.counit);
  if (el != er) throw AxiomViolation("hopf_coideal: ε∘μ_C ≠ ε⊗ε", el - er);
  Subspace i = image(x.action - kron(id(f, dc), h.coalgebra.counit));
  if (!is_coideal(c, i)) throw AxiomViolation("hopf_coideal: computed subspace is not a coideal");
  return i;
}

RightComodule QuotientCoalgebra::right_of(const FiniteCoalgebra& c) const {
  return {c.dim(), coalgebra, kron(id(c.field, c.dim()), projection()) * c.comult};
}

LeftComodule QuotientCoalgebra::left_of(const FiniteCoalgebra& c) const {
  return {c.dim(), coalgebra, kron(projection(), id(c.field, c.dim())) * c.comult};
}

QuotientCoalgebra quotient_coalgebra(const FiniteCoalgebra& c, const Subspace& i) {
  if (!is_coideal(c, i)) throw NotCoideal("quotient_coalgebra: subspace is not a coideal");
  QuotientCoalgebra out;
  out.presentation = quotient(c.dim(), i);
  const QuotientPresentation& q = out.presentation;
  out.coalgebra.field = c.field;
  for (std::size_t k : q.basis_coordinates) out.coalgebra.basis.push_back("[" + c.basis[k] + "]");
  out.coalgebra.comult = kron(q.projection, q.projection) * c.comult * q.section;
  out.coalgebra.counit = c.counit * q.section;
  return out;
}

Subspace cotensor(const RightComodule& m, const LeftComodule& n) {
  if (m.over.dim() != n.over.dim()) throw DimensionMismatch("cotensor: comodules over different coalgebras");
  if (!(m.over.field == n.over.field)) throw FieldMismatch("cotensor: comodules over different fields");
  if (!validate_comodule(m).passed()) throw AxiomViolation("cotensor: left factor is not a right comodule");
  if (!validate_left_comodule(n).passed()) throw AxiomViolation("cotensor: right factor is not a left comodule");
  const Field& f = m.over.field;
  return kernel(kron(m.coaction, id(f, n.dim)) - kron(id(f, m.dim), n.coaction));
}

Matrix CoextensionCertificate::cotau_ambient() const { return *cotau * cotensor.coordinate_map(); }

void CoextensionCertificate::require_coextension(const std::string& operation) const {
  if (bijective) return;
  const Field& f = coextension.field();
  std::string msg = operation + ": not a Galois coextension, cocan has " +
                    dims_text(cocan_rank, cocan.cols(), cotensor.dim());
  if (kernel_witness) msg += "; kernel witness " + vector_text(f, *kernel_witness);
  if (cokernel_witness) msg += "; outside image " + vector_text(f, *cokernel_witness);
  throw NotGaloisCoextension(msg);
}

CoextensionCertificate coextension_check(const ModuleCoalgebra& x) {
  const Field& f = x.field();
  const FiniteCoalgebra& c = x.coalgebra;
  const FiniteAlgebra& a = x.algebra;
  const std::size_t dc = c.dim(), da = a.dim();
  CoextensionCertificate cert;
  cert.coextension = x;
  cert.coideal = canonical_coideal(x);
  cert.quotient = quotient_coalgebra(c, cert.coideal);
  cert.cotensor = cotensor(cert.quotient.right_of(c), cert.quotient.left_of(c));
  cert.cocan_full = cocan_of(c, x.action, da);
  const Subspace& w = cert.cotensor;
  if (!w.contains_image_of(cert.cocan_full)) throw ImageEscape("coextension_check: cocan leaves C□_B C");
  cert.cocan = w.coordinate_map() * cert.cocan_full;

  Report& r = cert.report;
  r = Report("coextension");
  r.set_fact("coideal_dim", static_cast<std::int64_t>(cert.coideal.dim()));
  r.set_fact("quotient_dim", static_cast<std::int64_t>(cert.quotient.coalgebra.dim()));
  r.set_fact("cotensor_dim", static_cast<std::int64_t>(w.dim()));
  r.flag("coideal", "Δ(I) ⊆ C⊗I + I⊗C, ε(I) = 0", true);
  r.flag("cocan lands in cotensor", "cocan(C⊗A) ⊆ C□_B C", true);
  r.identity("cocan left C-colinear", "(C⊗cocan)∘(Δ⊗A) = (Δ⊗C)∘cocan",
             kron(id(f, dc), cert.cocan_full) * kron(c.comult, id(f, da)), kron(c.comult, id(f, dc)) * cert.cocan_full);
  r.identity("cocan right A-linear", "cocan∘(C⊗m) = (C⊗μ_C)∘(cocan⊗A)", cert.cocan_full * kron(id(f, dc), a.mult),
             kron(id(f, dc), x.action) * kron(cert.cocan_full, id(f, da)));

  cert.cocan_rank = rank(cert.cocan);
  r.set_fact("cocan_rank", static_cast<std::int64_t>(cert.cocan_rank));
  cert.bijective = w.dim() == dc * da && cert.cocan_rank == dc * da;
  std::string detail = dims_text(cert.cocan_rank, dc * da, w.dim());
  if (!cert.bijective) {
    if (cert.cocan_rank < dc * da) {
      cert.kernel_witness = kernel(cert.cocan).vector(0);
      detail += "; kernel witness " + vector_text(f, *cert.kernel_witness);
    } else {
      cert.cokernel_witness = outside(w, cert.cocan_full);
      if (cert.cokernel_witness) detail += "; outside image " + vector_text(f, *cert.cokernel_witness);
    }
  }
  r.flag("cocan bijective", "cocan: C⊗A → C□_B C bijective", cert.bijective, detail);
  r.set_fact("coextension", cert.bijective);
  r.set_artifact("cocan", cert.cocan_full);
  if (!cert.bijective) return cert;

  cert.cocan_inverse = std::get<Matrix>(try_invert(cert.cocan));
  cert.cotau = kron(c.counit, id(f, da)) * *cert.cocan_inverse;
  const Matrix t = cert.cotau_ambient();
  const Matrix e = w.embedding();
  r.set_artifact("cocan_inverse", *cert.cocan_inverse * w.coordinate_map());
  r.set_artifact("cotau", t);
  r.identity("cotranslation (i)", "τ̌∘Δ = η∘ε", t * c.comult, a.unit * c.counit);
  r.identity("cotranslation (ii)", "μ_C∘(C⊗τ̌)∘(Δ⊗C) = ε⊗C on C□_B C",
             x.action * kron(id(f, dc), t) * kron(c.comult, id(f, dc)) * e, kron(c.counit, id(f, dc)) * e);
  const Matrix e2 = kron(e, id(f, da));
  r.identity("cotranslation (iii)", "τ̌∘(C⊗μ_C) = m∘(τ̌⊗A) on C□_B C⊗A", t * kron(id(f, dc), x.action) * e2,
             a.mult * kron(t, id(f, da)) * e2);
  const Matrix e3 = intersect(image(kron(e, id(f, dc))), image(kron(id(f, dc), e))).embedding();
  r.identity("cotranslation product", "m∘(τ̌⊗τ̌)∘(C⊗Δ⊗C) = τ̌∘(C⊗ε⊗C) on C□_B C□_B C",
             a.mult * kron(t, t) * tensor(id(f, dc), c.comult, id(f, dc)) * e3,
             t * tensor(id(f, dc), c.counit, id(f, dc)) * e3);
  return cert;
}

EntwiningStructure canonical_entwining_dual(const CoextensionCertificate& cert) {
  cert.require_coextension("canonical_entwining_dual");
  const ModuleCoalgebra& x = cert.coextension;
  const Field& f = x.field();
  const std::size_t dc = x.coalgebra.dim();
  Matrix psi = kron(cert.cotau_ambient(), id(f, dc)) * kron(id(f, dc), x.coalgebra.comult) * cert.cocan_full;
  return {x.algebra, x.coalgebra, psi};
}

Report dual_uniqueness(const CoextensionCertificate& cert) {
  Report r("dual entwining uniqueness");
  const std::string anchor = "unique ψ with Δ∘μ_C = (μ_C⊗C)∘(C⊗ψ)∘(Δ⊗A)";
  if (!cert.bijective) {
    r.skip("psi unique", anchor, "precondition unmet: not a Galois coextension");
    return r;
  }
  const ModuleCoalgebra& x = cert.coextension;
  const Field& f = x.field();
  const FiniteCoalgebra& c = x.coalgebra;
  const std::size_t da = x.algebra.dim(), dc = c.dim();
  MapEquationSystem sys(f, da * dc, dc * da);
  sys.begin_block(dc * dc, dc * da);
  sys.add_term(kron(x.action, id(f, dc)), dc, 1, kron(c.comult, id(f, da)));
  sys.set_constant(c.comult * x.action);
  AffineSolution s = sys.solve();
  r.set_fact("solution_space_dim", static_cast<std::int64_t>(s.homogeneous.dim()));
  r.flag("canonical psi solves", anchor, sys.satisfied_by(canonical_entwining_dual(cert).psi));
  r.flag("psi unique", anchor, s.consistent() && s.homogeneous.dim() == 0,
         "solution space dimension " + std::to_string(s.homogeneous.dim()));
  return r;
}

DualBundleResult dual_bundle_check(const EntwiningStructure& e, const Vector& character) {
  Character kappa(e.algebra, character);
  if (!validate_entwining(e).passed()) throw AxiomViolation("dual_bundle_check: not an entwining structure");
  const Field& f = e.field();
  const FiniteCoalgebra& c = e.coalgebra;
  const std::size_t da = e.algebra.dim(), dc = c.dim();
  const Matrix k = kappa.as_map(f);
  DualBundleResult out;
  out.action = kron(k, id(f, dc)) * e.psi;
  out.coideal = image(out.action - kron(id(f, dc), k));
  out.quotient = quotient_coalgebra(c, out.coideal);
  out.cotensor = cotensor(out.quotient.right_of(c), out.quotient.left_of(c));
  out.cocan_psi = tensor(id(f, dc), k, id(f, dc)) * kron(id(f, dc), e.psi) * kron(c.comult, id(f, da));
  if (!out.cotensor.contains_image_of(out.cocan_psi)) throw ImageEscape("dual_bundle_check: cocan_ψ leaves C□_B C");
  const std::size_t rk = rank(out.cocan_psi);
  out.bijective = out.cotensor.dim() == dc * da && rk == dc * da;
  Report& r = out.report;
  r = Report("dual bundle");
  r.set_fact("coideal_dim", static_cast<std::int64_t>(out.coideal.dim()));
  r.set_fact("cotensor_dim", static_cast<std::int64_t>(out.cotensor.dim()));
  r.set_artifact("cocan_psi", out.cocan_psi);
  r.flag("cocan_psi bijective", "cocan_ψ = (C⊗κ⊗C)∘(C⊗ψ)∘(Δ⊗A): C⊗A → C□_B C bijective", out.bijective,
         dims_text(rk, dc * da, out.cotensor.dim()));
  return out;
}

Report dual_bundle_equivalence(const EntwiningStructure& e, const Vector& character) {
  const Field& f = e.field();
  const FiniteCoalgebra& c = e.coalgebra;
  const std::size_t da = e.algebra.dim(), dc = c.dim();
  Report r("dual bundle equivalence");
  DualBundleResult bundle = dual_bundle_check(e, character);
  const Matrix k = Matrix::row_of(f, character);
  r.set_fact("dual_bundle", bundle.bijective);

  ModuleCoalgebra x{c, e.algebra, bundle.action};
  r.flag("(κ⊗C)∘ψ is an action", "c·a = (κ⊗C)ψ(c⊗a) is a right A-action", validate_module(x.as_module()).passed());
  const bool counit_ok = c.counit * bundle.action == kron(c.counit, k);
  r.identity("counit condition", "ε∘μ_C = ε⊗κ", c.counit * bundle.action, kron(c.counit, k));
  r.flag("C entwined", "C ∈ M_A^C(ψ) via μ_C and Δ",
         validate_entwined_module(x.as_module(), {dc, c, c.comult}, e).passed());

  CoextensionCertificate cert = coextension_check(x);
  r.set_fact("coextension", cert.bijective);
  r.flag("coideals agree", "I_κ = canonical coideal of μ_C", cert.coideal == bundle.coideal);
  r.identity("cocan_psi = cocan", "cocan_ψ = cocan", bundle.cocan_psi, cert.cocan_full);

  // any action mu' with eps o mu' = eps (x) kappa making C entwined is (kappa (x) C) psi
  MapEquationSystem sys(f, dc, dc * da);
  sys.begin_block(dc * dc, dc * da);
  sys.add_term(c.comult, 1, 1, id(f, dc * da));
  sys.add_term(id(f, dc * dc), 1, dc, kron(id(f, dc), e.psi) * kron(c.comult, id(f, da)), Scalar(-1));
  sys.set_constant(Matrix(f, dc * dc, dc * da));
  sys.begin_block(1, dc * da);
  sys.add_term(c.counit, 1, 1, id(f, dc * da));
  sys.set_constant(kron(c.counit, k));
  AffineSolution s = sys.solve();
  r.flag("action unique", "Δ∘μ′ = (μ′⊗C)∘(C⊗ψ)∘(Δ⊗A), ε∘μ′ = ε⊗κ ⇒ μ′ = (κ⊗C)∘ψ",
         s.consistent() && s.homogeneous.dim() == 0 &&
             MapEquationSystem::unvectorise(f, *s.particular, dc, dc * da) == bundle.action);

  bool statement2 = false;
  if (cert.bijective) {
    EntwiningStructure canonical = canonical_entwining_dual(cert);
    statement2 = counit_ok && canonical.psi == e.psi;
    r.identity("psi recovered", "dual canonical entwining of (C, μ_C) = ψ", canonical.psi, e.psi);
    r.identity("action recovered", "(κ⊗C)∘ψ′ = μ_C", kron(k, id(f, dc)) * canonical.psi, bundle.action);
    r.flag("I_kappa recovered", "I_κ of ψ′ = I_κ of ψ", dual_bundle_check(canonical, character).coideal == bundle.coideal);
  } else {
    r.skip("psi recovered", "dual canonical entwining of (C, μ_C) = ψ", "μ_C = (κ⊗C)∘ψ is not a Galois coextension");
  }
  r.flag("statements equivalent", "dual ψ-principal bundle ⇔ Galois coextension with canonical ψ and ε∘μ_C = ε⊗κ",
         bundle.bijective == statement2);
  return r;
}

Report dual_bundle_from_coextension(const ModuleCoalgebra& x) {
  Report r("dual bundle from coextension");
  const std::string anchor = "Galois coextension with ε∘μ_C = ε⊗κ ⇒ dual ψ-principal bundle with cocan_ψ = cocan";
  const Field& f = x.field();
  const FiniteCoalgebra& c = x.coalgebra;
  const std::size_t da = x.algebra.dim(), dc = c.dim();
  // eps o mu = eps (x) kappa pins kappa down from any c with eps(c) != 0
  std::size_t i = 0;
  while (i < dc && c.counit(0, i) == 0) ++i;
  std::optional<Vector> kappa;
  if (i < dc) {
    Vector k(da);
    for (std::size_t j = 0; j < da; ++j)
      k[j] = f.div((c.counit * x.action)(0, i * da + j), c.counit(0, i));
    if (c.counit * x.action == kron(c.counit, Matrix::row_of(f, k)) && verify_character(x.algebra, k)) kappa = k;
  }
  if (!kappa) {
    r.skip("dual bundle from coextension", anchor, "not applicable: ε∘μ_C ≠ ε⊗κ for every character κ");
    return r;
  }
  CoextensionCertificate cert = coextension_check(x);
  if (!cert.bijective) {
    r.skip("dual bundle from coextension", anchor, "not applicable: not a Galois coextension");
    return r;
  }
  EntwiningStructure psi = canonical_entwining_dual(cert);
  DualBundleResult bundle = dual_bundle_check(psi, *kappa);
  r.set_artifact("character", Matrix::row_of(f, *kappa));
  r.flag("coideals agree", "I = I_κ", bundle.coideal == cert.coideal);
  r.identity("cocan_psi = cocan", "cocan_ψ = cocan", bundle.cocan_psi, cert.cocan_full);
  r.flag("dual bundle", anchor, bundle.bijective);
  r.identity("action recovered", "(κ⊗C)∘ψ = μ_C", bundle.action, x.action);
  return r;
}

}  // namespace entwine

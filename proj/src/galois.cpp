#include "entwine/galois.hpp"

#include "entwine/error.hpp"
#include "entwine/linear_system.hpp"
#include "entwine/tensor.hpp"

namespace entwine {

namespace {

Matrix col(const Field& f, const Vector& v) { return Matrix::column_of(f, v); }

Matrix stack(const Field& f, std::size_t cols, const std::vector<Matrix>& blocks) {
  std::size_t rows = 0;
  for (const auto& b : blocks) rows += b.rows();
  Matrix out(f, rows, cols);
  std::size_t at = 0;
  for (const auto& b : blocks) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < cols; ++c)
        if (b(r, c) != 0) out.set(at + r, c, b(r, c));
    at += b.rows();
  }
  return out;
}

bool is_unital_subalgebra(const FiniteAlgebra& a, const Subspace& b) {
  if (!b.contains(a.unit_vector())) return false;
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t k = 0; k < b.dim(); ++k)
      if (!b.contains(a.product(b.vector(i), b.vector(k)))) return false;
  return true;
}

std::string dims_text(std::size_t rank, std::size_t from, std::size_t to) {
  return "rank " + std::to_string(rank) + "; domain dim " + std::to_string(from) + ", codomain dim " +
         std::to_string(to);
}

// e with Delta_A(1) = 1 (x) e and e group-like, if there is one.
std::optional<Vector> unit_grouplike(const ComoduleAlgebra& x) {
  const Field& f = x.field();
  const std::size_t da = x.algebra.dim(), dc = x.coalgebra.dim();
  Vector one = x.algebra.unit_vector();
  Vector d1 = x.coaction.apply(one);
  std::size_t i = 0;
  while (i < da && one[i] == 0) ++i;
  if (i == da) return std::nullopt;
  Vector e(dc);
  for (std::size_t k = 0; k < dc; ++k) e[k] = f.div(d1[i * dc + k], one[i]);
  if (kron(col(f, one), col(f, e)).column_vector(0) != d1) return std::nullopt;
  if (!verify_grouplike(x.coalgebra, e)) return std::nullopt;
  return e;
}

// Some standard basis vector outside the image, or nullopt if surjective.
std::optional<Vector> outside_image(const Matrix& m) {
  Subspace im = image(m);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Vector v(m.rows(), Scalar(0));
    v[i] = 1;
    if (!im.contains(v)) return v;
  }
  return std::nullopt;
}

std::string vector_text(const Field& f, const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + f.format(v[i]);
  return s + ")";
}

}  // namespace

Subspace coinvariants(const ComoduleAlgebra& x) {
  const Field& f = x.field();
  const FiniteAlgebra& a = x.algebra;
  const std::size_t da = a.dim(), dc = x.coalgebra.dim();
  const Matrix m_c = kron(a.mult, id(f, dc));
  std::vector<Matrix> blocks;
  for (std::size_t j = 0; j < da; ++j) {
    Vector ej(da, Scalar(0));
    ej[j] = 1;
    // b -> Delta_A(b e_j) - b Delta_A(e_j)
    blocks.push_back(x.coaction * a.right_multiplication(ej) -
                     m_c * kron(id(f, da), col(f, x.coaction.column_vector(j))));
  }
  Subspace b = kernel(stack(f, da, blocks));
  if (!is_unital_subalgebra(a, b))
    throw AxiomViolation("coinvariants: computed subspace is not a unital subalgebra");
  return b;
}

bool classical_coinvariants_agree(const ComoduleAlgebra& x, const FiniteAlgebra& c_algebra) {
  Report r = validate_coaction_algebra_map(x, c_algebra);
  if (!r.passed()) throw PreconditionViolation("classical coinvariants: the coaction is not an algebra map");
  auto e = unit_grouplike(x);
  if (!e) throw PreconditionViolation("classical coinvariants: Delta_A(1) is not 1 (x) e for a group-like e");
  const Field& f = x.field();
  Subspace classical = kernel(x.coaction - kron(id(f, x.algebra.dim()), col(f, *e)));
  return classical == coinvariants(x);
}

QuotientPresentation balanced_tensor(const FiniteAlgebra& a, const Subspace& b) {
  const Field& f = a.field;
  const std::size_t da = a.dim();
  if (b.ambient_dim() != da) throw DimensionMismatch("balanced_tensor: subspace does not live in the algebra");
  if (!is_unital_subalgebra(a, b)) throw NotSubalgebra("balanced_tensor: B is not a unital subalgebra of A");
  const Matrix i = id(f, da);
  Subspace relations = Subspace::zero(f, da * da);
  for (std::size_t v = 0; v < b.dim(); ++v) {
    Vector bv = b.vector(v);
    // a (x) a' -> ab (x) a' - a (x) ba'
    relations = sum(relations, image(kron(a.right_multiplication(bv), i) - kron(i, a.left_multiplication(bv))));
  }
  return quotient(da * da, relations);
}

void GaloisCertificate::require_galois(const std::string& operation) const {
  if (bijective) return;
  std::string msg = operation + ": not a Galois extension, canonical map has " +
                    dims_text(can_rank, balanced.quotient_dim, can.rows());
  const Field& f = extension.field();
  if (kernel_witness) msg += "; kernel witness " + vector_text(f, *kernel_witness);
  if (cokernel_witness) msg += "; outside image " + vector_text(f, *cokernel_witness);
  throw NotGalois(msg);
}

Matrix GaloisCertificate::left_action() const {
  const Field& f = extension.field();
  const std::size_t da = extension.algebra.dim();
  return balanced.projection * kron(extension.algebra.mult, id(f, da)) * kron(id(f, da), balanced.section);
}

Matrix GaloisCertificate::right_coaction() const {
  const Field& f = extension.field();
  const std::size_t da = extension.algebra.dim(), dc = extension.coalgebra.dim();
  return kron(balanced.projection, id(f, dc)) * kron(id(f, da), extension.coaction) * balanced.section;
}

GaloisCertificate galois_check(const ComoduleAlgebra& x) {
  const Field& f = x.field();
  const FiniteAlgebra& a = x.algebra;
  const FiniteCoalgebra& c = x.coalgebra;
  const std::size_t da = a.dim(), dc = c.dim();
  Report pre = validate_comodule(x.as_comodule());
  if (!pre.passed()) throw AxiomViolation("galois_check: Delta_A is not a right comodule structure");

  GaloisCertificate cert;
  cert.extension = x;
  cert.coinvariants = coinvariants(x);
  cert.balanced = balanced_tensor(a, cert.coinvariants);
  const QuotientPresentation& q = cert.balanced;
  cert.can_unbalanced = kron(a.mult, id(f, dc)) * kron(id(f, da), x.coaction);
  if (!(cert.can_unbalanced * q.relations.embedding()).is_zero())
    throw IllDefined("galois_check: can does not vanish on the balancing relations");
  cert.can = cert.can_unbalanced * q.section;

  Report& r = cert.report;
  r = Report("galois");
  r.set_fact("coinvariants_dim", static_cast<std::int64_t>(cert.coinvariants.dim()));
  r.set_fact("balanced_dim", static_cast<std::int64_t>(q.quotient_dim));
  r.flag("can well defined", "can(ab⊗a′ − a⊗ba′) = 0 for b ∈ A^{co C}", true);
  r.identity("can left A-linear", "can∘(m⊗_B A) = (m⊗C)∘(A⊗can)", cert.can * cert.left_action(),
             kron(a.mult, id(f, dc)) * kron(id(f, da), cert.can));
  r.identity("can right C-colinear", "(can⊗C)∘(A⊗_B Δ_A) = (A⊗Δ)∘can", kron(cert.can, id(f, dc)) * cert.right_coaction(),
             kron(id(f, da), c.comult) * cert.can);

  cert.can_rank = rank(cert.can);
  r.set_fact("can_rank", static_cast<std::int64_t>(cert.can_rank));
  const std::size_t target = da * dc;
  cert.bijective = q.quotient_dim == target && cert.can_rank == target;
  std::string detail = dims_text(cert.can_rank, q.quotient_dim, target);
  if (!cert.bijective) {
    if (cert.can_rank < q.quotient_dim) {
      cert.kernel_witness = kernel(cert.can).vector(0);
      detail += "; kernel witness " + vector_text(f, *cert.kernel_witness);
    } else {
      cert.cokernel_witness = outside_image(cert.can);
      if (cert.cokernel_witness) detail += "; outside image " + vector_text(f, *cert.cokernel_witness);
    }
  }
  r.flag("can bijective", "can: A⊗_B A → A⊗C bijective", cert.bijective, detail);
  r.set_fact("galois", cert.bijective);
  r.set_artifact("can", cert.can);
  if (!cert.bijective) return cert;

  cert.can_inverse = std::get<Matrix>(try_invert(cert.can));
  cert.tau = *cert.can_inverse * kron(a.unit, id(f, dc));
  const Matrix& tau = *cert.tau;
  const Matrix lifted = q.section * tau;
  r.set_artifact("can_inverse", *cert.can_inverse);
  r.set_artifact("tau", tau);
  r.identity("translation (i)", "c⁽¹⁾c⁽²⁾ = ε(c)1", a.mult * lifted, a.unit * c.counit);
  r.identity("translation (ii)", "a₍₀₎a₍₁₎⁽¹⁾⊗a₍₁₎⁽²⁾ = 1⊗a",
             q.projection * kron(a.mult, id(f, da)) * kron(id(f, da), lifted) * x.coaction,
             q.projection * kron(a.unit, id(f, da)));
  r.identity("translation (iii)", "c⁽¹⁾⊗c⁽²⁾₍₀₎⊗c⁽²⁾₍₁₎ = c₍₁₎⁽¹⁾⊗c₍₁₎⁽²⁾⊗c₍₂₎", cert.right_coaction() * tau,
             kron(tau, id(f, dc)) * c.comult);
  return cert;
}

EntwiningStructure canonical_entwining(const GaloisCertificate& cert) {
  cert.require_galois("canonical_entwining");
  const ComoduleAlgebra& x = cert.extension;
  const Field& f = x.field();
  const std::size_t da = x.algebra.dim();
  const QuotientPresentation& q = cert.balanced;
  // C (x) A -> (A (x) A) (x) A -> A (x) A -> A (x)_B A -> A (x) C
  Matrix psi = cert.can * q.projection * kron(id(f, da), x.algebra.mult) * kron(q.section * *cert.tau, id(f, da));
  return {x.algebra, x.coalgebra, psi};
}

Report entwining_uniqueness(const GaloisCertificate& cert) {
  Report r("entwining uniqueness");
  const std::string anchor = "unique ψ with Δ_A∘m = (m⊗C)∘(A⊗ψ)∘(Δ_A⊗A)";
  if (!cert.bijective) {
    r.skip("psi unique", anchor, "precondition unmet: the extension is not Galois");
    return r;
  }
  const ComoduleAlgebra& x = cert.extension;
  const Field& f = x.field();
  const std::size_t da = x.algebra.dim(), dc = x.coalgebra.dim();
  MapEquationSystem sys(f, da * dc, dc * da);
  sys.begin_block(da * dc, da * da);
  sys.add_term(kron(x.algebra.mult, id(f, dc)), da, 1, kron(x.coaction, id(f, da)));
  sys.set_constant(x.coaction * x.algebra.mult);
  AffineSolution s = sys.solve();
  Matrix psi = canonical_entwining(cert).psi;
  r.set_fact("solution_space_dim", static_cast<std::int64_t>(s.homogeneous.dim()));
  r.flag("canonical psi solves", anchor, sys.satisfied_by(psi));
  r.flag("psi unique", anchor, s.consistent() && s.homogeneous.dim() == 0,
         "solution space dimension " + std::to_string(s.homogeneous.dim()));
  return r;
}

Report differential_sequence(const ComoduleAlgebra& x) {
  const Field& f = x.field();
  const FiniteAlgebra& a = x.algebra;
  const std::size_t da = a.dim(), dc = x.coalgebra.dim();
  Report r("differential sequence");
  Subspace omega = kernel(a.mult);
  Subspace c_plus = kernel(x.coalgebra.counit);
  Subspace target = image(kron(id(f, da), c_plus.embedding()));
  Matrix canbar = kron(a.mult, id(f, dc)) * kron(id(f, da), x.coaction);
  Matrix restricted = canbar * omega.embedding();
  Subspace kernel_part = image(omega.embedding() * kernel(restricted).embedding());

  Subspace b = coinvariants(x);
  Matrix bb = kron(b.embedding(), b.embedding());
  Matrix omega_b = bb * kernel(a.mult * bb).embedding();
  Subspace generated = Subspace::zero(f, da * da);
  for (std::size_t k = 0; k < omega_b.cols(); ++k)
    generated = sum(generated, image(kron(a.mult, a.mult) * tensor(id(f, da), col(f, omega_b.column_vector(k)), id(f, da))));

  r.set_fact("omega1_dim", static_cast<std::int64_t>(omega.dim()));
  r.set_fact("target_dim", static_cast<std::int64_t>(target.dim()));
  r.set_fact("a_omega1b_a_dim", static_cast<std::int64_t>(generated.dim()));
  r.flag("lands in A⊗C⁺", "can̄(Ω¹A) ⊆ A⊗C⁺", target.contains_image_of(restricted));
  const bool onto = image(restricted) == target;
  const bool kernel_ok = kernel_part == generated;
  r.flag("surjective at A⊗C⁺", "can̄(Ω¹A) = A⊗C⁺", onto,
         "image dim " + std::to_string(rank(restricted)) + " vs " + std::to_string(target.dim()));
  r.flag("exact at Ω¹A", "Ker(can̄|Ω¹A) = A(Ω¹B)A", kernel_ok,
         "kernel dim " + std::to_string(kernel_part.dim()) + " vs " + std::to_string(generated.dim()));
  const bool exact = onto && kernel_ok;
  r.set_fact("exact", exact);
  const bool galois = galois_check(x).bijective;
  r.set_fact("galois", galois);
  r.flag("exact iff Galois", "sequence exact ⇔ can bijective", exact == galois);
  return r;
}

Matrix coaction_from_entwining(const EntwiningStructure& e, const Vector& grouplike) {
  const Field& f = e.field();
  return e.psi * kron(col(f, grouplike), id(f, e.algebra.dim()));
}

BundleResult bundle_check(const EntwiningStructure& e, const Vector& grouplike) {
  GroupLike g(e.coalgebra, grouplike);
  Report valid = validate_entwining(e);
  if (!valid.passed()) throw AxiomViolation("bundle_check: not an entwining structure");
  const Field& f = e.field();
  const FiniteAlgebra& a = e.algebra;
  const std::size_t da = a.dim(), dc = e.coalgebra.dim();
  const Matrix ecol = col(f, g.element());
  BundleResult out;
  out.coinvariants = kernel(coaction_from_entwining(e, grouplike) - kron(id(f, da), ecol));
  out.balanced = balanced_tensor(a, out.coinvariants);
  Matrix full = kron(a.mult, id(f, dc)) * kron(id(f, da), e.psi) * tensor(id(f, da), ecol, id(f, da));
  if (!(full * out.balanced.relations.embedding()).is_zero())
    throw IllDefined("bundle_check: can_psi does not vanish on the balancing relations");
  out.can_psi = full * out.balanced.section;
  const std::size_t rk = rank(out.can_psi);
  out.bijective = out.balanced.quotient_dim == da * dc && rk == da * dc;
  Report& r = out.report;
  r = Report("bundle");
  r.set_fact("coinvariants_dim", static_cast<std::int64_t>(out.coinvariants.dim()));
  r.set_artifact("can_psi", out.can_psi);
  r.flag("can_psi bijective", "can_ψ: A⊗_B A → A⊗C, a⊗a′ ↦ aψ(e⊗a′) bijective", out.bijective,
         dims_text(rk, out.balanced.quotient_dim, da * dc));
  return out;
}

Report bundle_equivalence(const EntwiningStructure& e, const Vector& grouplike) {
  const Field& f = e.field();
  const FiniteAlgebra& a = e.algebra;
  const std::size_t da = a.dim(), dc = e.coalgebra.dim();
  const Matrix ecol = col(f, grouplike);
  Report r("bundle equivalence");
  BundleResult bundle = bundle_check(e, grouplike);
  r.set_fact("bundle", bundle.bijective);

  Matrix delta = coaction_from_entwining(e, grouplike);
  ComoduleAlgebra x{a, e.coalgebra, delta};
  r.flag("psi(e⊗·) is a coaction", "a ↦ ψ(e⊗a) is a right C-coaction", validate_comodule(x.as_comodule()).passed());
  const bool normalised = delta * a.unit == kron(a.unit, ecol);
  r.flag("coaction normalised", "Δ_A(1) = 1⊗e", normalised);
  r.flag("A entwined", "A ∈ M_A^C(ψ) via m and Δ_A",
         validate_entwined_module({da, a, a.mult}, x.as_comodule(), e).passed());

  GaloisCertificate cert = galois_check(x);
  r.set_fact("galois", cert.bijective);
  r.flag("coinvariants agree", "{b | ψ(e⊗b) = b⊗e} = A^{co C}", cert.coinvariants == bundle.coinvariants);
  r.identity("can_psi = can", "can_ψ = can", bundle.can_psi, cert.can);

  // any coaction D with D(1) = 1 (x) e making A entwined is a -> psi(e (x) a)
  MapEquationSystem sys(f, da * dc, da);
  sys.begin_block(da * dc, da * da);
  sys.add_term(id(f, da * dc), 1, 1, a.mult);
  sys.add_term(kron(a.mult, id(f, dc)) * kron(id(f, da), e.psi), 1, da, id(f, da * da), Scalar(-1));
  sys.set_constant(Matrix(f, da * dc, da * da));
  sys.begin_block(da * dc, 1);
  sys.add_term(id(f, da * dc), 1, 1, a.unit);
  sys.set_constant(kron(a.unit, ecol));
  AffineSolution s = sys.solve();
  r.flag("coaction unique", "Δ′∘m = (m⊗C)∘(A⊗ψ)∘(Δ′⊗A), Δ′(1) = 1⊗e ⇒ Δ′ = ψ(e⊗·)",
         s.consistent() && s.homogeneous.dim() == 0 && MapEquationSystem::unvectorise(f, *s.particular, da * dc, da) == delta);

  bool statement2 = false;
  if (cert.bijective) {
    EntwiningStructure canonical = canonical_entwining(cert);
    statement2 = normalised && canonical.psi == e.psi;
    r.identity("psi recovered", "canonical entwining of (A, Δ_A) = ψ", canonical.psi, e.psi);
    r.identity("coaction recovered", "ψ′(e⊗·) = Δ_A", coaction_from_entwining(canonical, grouplike), delta);
    r.flag("B recovered", "{b | ψ′(e⊗b) = b⊗e} = B", bundle_check(canonical, grouplike).coinvariants == bundle.coinvariants);
  } else {
    r.skip("psi recovered", "canonical entwining of (A, Δ_A) = ψ", "Δ_A = ψ(e⊗·) is not Galois");
  }
  r.flag("statements equivalent", "ψ-principal bundle ⇔ Galois with canonical ψ and Δ_A(1) = 1⊗e",
         bundle.bijective == statement2);
  return r;
}

Report bundle_from_extension(const ComoduleAlgebra& x) {
  Report r("bundle from extension");
  const std::string anchor = "Galois with Δ_A(1) = 1⊗e ⇒ ψ-principal bundle with can_ψ = can";
  auto e = unit_grouplike(x);
  if (!e) {
    r.skip("bundle from extension", anchor, "not applicable: Δ_A(1) is not 1⊗e for any group-like e");
    return r;
  }
  GaloisCertificate cert = galois_check(x);
  if (!cert.bijective) {
    r.skip("bundle from extension", anchor, "not applicable: the extension is not Galois");
    return r;
  }
  EntwiningStructure psi = canonical_entwining(cert);
  BundleResult bundle = bundle_check(psi, *e);
  r.set_artifact("grouplike", Matrix::column_of(x.field(), *e));
  r.flag("coinvariants agree", "A^{co C} = {b | ψ(e⊗b) = b⊗e}", bundle.coinvariants == cert.coinvariants);
  r.identity("can_psi = can", "can_ψ = can", bundle.can_psi, cert.can);
  r.flag("bundle", anchor, bundle.bijective);
  r.identity("coaction recovered", "ψ(e⊗a) = Δ_A(a)", coaction_from_entwining(psi, *e), x.coaction);
  return r;
}

Report left_canonical_check(const HopfAlgebra& h, const ComoduleAlgebra& x) {
  const Field& f = h.field();
  const std::size_t da = x.algebra.dim(), dh = h.dim();
  const Matrix s_inv = inverse_or_throw(h.antipode, "antipode");
  EntwiningStructure psi = hopf_entwining(h, x);
  GaloisCertificate cert = galois_check(x);
  const QuotientPresentation& q = cert.balanced;
  // A (x) A -> A (x) H (x) A -> A (x) H (x) A -> H (x) A (x) A -> H (x) A
  Matrix full = kron(id(f, dh), x.algebra.mult) * permute_factors(f, {da, dh, da}, {1, 0, 2}) *
                tensor(id(f, da), s_inv, id(f, da)) * kron(x.coaction, id(f, da));
  Report r("left canonical map");
  r.flag("can_L well defined", "can_L vanishes on ab⊗a′ − a⊗ba′", (full * q.relations.embedding()).is_zero());
  Matrix can_l = full * q.section;
  r.set_artifact("can_L", can_l);
  r.identity("psi∘can_L = can", "ψ∘can_L = can", psi.psi * can_l, cert.can);
  const std::size_t rk = rank(can_l);
  r.flag("can_L bijective", "can_L: A⊗_B A → H⊗A bijective", q.quotient_dim == da * dh && rk == da * dh,
         dims_text(rk, q.quotient_dim, da * dh));
  return r;
}

}  // namespace entwine

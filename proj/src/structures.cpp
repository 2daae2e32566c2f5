#include "entwine/structures.hpp"

#include <functional>

#include "entwine/error.hpp"
#include "entwine/tensor.hpp"

namespace entwine {

namespace {

std::string shape_text(const Matrix& m) { return std::to_string(m.rows()) + "x" + std::to_string(m.cols()); }

// Records a failed "shape" check and returns false when m is not rows x cols over f.
bool shaped(Report& r, const std::string& what, const Matrix& m, std::size_t rows, std::size_t cols,
            const Field& f) {
  if (m.rows() == rows && m.cols() == cols && m.field() == f) return true;
  r.flag("shape:" + what, what + " is " + std::to_string(rows) + "x" + std::to_string(cols) + " over " + f.name(),
         false, "got " + shape_text(m) + " over " + m.field().name());
  return false;
}

std::string toggle_star(const std::string& name) {
  if (!name.empty() && name.back() == '*') return name.substr(0, name.size() - 1);
  return name + "*";
}

std::vector<std::string> toggle_stars(const std::vector<std::string>& names) {
  std::vector<std::string> out;
  out.reserve(names.size());
  for (const auto& n : names) out.push_back(toggle_star(n));
  return out;
}

// Every vector of length n over GF(p), in lexicographic order.
void enumerate(const Field& f, std::size_t n, const std::function<void(const Vector&)>& visit) {
  if (!f.is_prime() || f.modulus() > 7 || n > 4)
    throw PreconditionViolation("exhaustive search needs GF(p) with p <= 7 and dim <= 4 (got " + f.name() +
                                ", dim " + std::to_string(n) + ")");
  Vector v(n, Scalar(0));
  const long p = static_cast<long>(f.modulus());
  while (true) {
    visit(v);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (v[i] + 1 < p) {
        v[i] += 1;
        break;
      }
      v[i] = 0;
      if (i == 0) return;
    }
    if (n == 0) return;
  }
}

}  // namespace

Vector FiniteAlgebra::product(const Vector& a, const Vector& b) const {
  return mult.apply(kron(Matrix::column_of(field, a), Matrix::column_of(field, b)).column_vector(0));
}

Matrix FiniteAlgebra::left_multiplication(const Vector& a) const {
  return mult * kron(Matrix::column_of(field, a), id(field, dim()));
}

Matrix FiniteAlgebra::right_multiplication(const Vector& a) const {
  return mult * kron(id(field, dim()), Matrix::column_of(field, a));
}

GroupLike::GroupLike(const FiniteCoalgebra& c, Vector element) : element_(std::move(element)) {
  if (!verify_grouplike(c, element_)) throw NotGroupLike("element is not group-like: need Delta(e) = e(x)e, eps(e) = 1");
}

Character::Character(const FiniteAlgebra& a, Vector values) : values_(std::move(values)) {
  if (!verify_character(a, values_))
    throw NotCharacter("functional is not a character: need kappa(ab) = kappa(a)kappa(b), kappa(1) = 1");
}

FiniteAlgebra ground_algebra(const Field& f) {
  return {f, {"1"}, Matrix::identity(f, 1), Matrix::identity(f, 1)};
}

FiniteCoalgebra ground_coalgebra(const Field& f) {
  return {f, {"1"}, Matrix::identity(f, 1), Matrix::identity(f, 1)};
}

Report validate_algebra(const FiniteAlgebra& a) {
  Report r("algebra");
  const Field& f = a.field;
  const std::size_t n = a.dim();
  if (!shaped(r, "m", a.mult, n, n * n, f) || !shaped(r, "eta", a.unit, n, 1, f)) return r;
  const Matrix i = id(f, n);
  r.identity("associativity", "m∘(m⊗A) = m∘(A⊗m)", a.mult * kron(a.mult, i), a.mult * kron(i, a.mult));
  r.identity("left unit", "m∘(η⊗A) = A", a.mult * kron(a.unit, i), i);
  r.identity("right unit", "m∘(A⊗η) = A", a.mult * kron(i, a.unit), i);
  return r;
}

Report validate_coalgebra(const FiniteCoalgebra& c) {
  Report r("coalgebra");
  const Field& f = c.field;
  const std::size_t n = c.dim();
  if (!shaped(r, "Delta", c.comult, n * n, n, f) || !shaped(r, "eps", c.counit, 1, n, f)) return r;
  const Matrix i = id(f, n);
  r.identity("coassociativity", "(Δ⊗C)∘Δ = (C⊗Δ)∘Δ", kron(c.comult, i) * c.comult, kron(i, c.comult) * c.comult);
  r.identity("left counit", "(ε⊗C)∘Δ = C", kron(c.counit, i) * c.comult, i);
  r.identity("right counit", "(C⊗ε)∘Δ = C", kron(i, c.counit) * c.comult, i);
  return r;
}

Report validate_comodule(const RightComodule& v) {
  Report r("right comodule");
  const Field& f = v.over.field;
  const std::size_t n = v.dim, d = v.over.dim();
  if (!shaped(r, "Delta_V", v.coaction, n * d, n, f)) return r;
  const Matrix iv = id(f, n);
  r.identity("coaction coassociativity", "(Δ_V⊗C)∘Δ_V = (V⊗Δ)∘Δ_V", kron(v.coaction, id(f, d)) * v.coaction,
             kron(iv, v.over.comult) * v.coaction);
  r.identity("coaction counit", "(V⊗ε)∘Δ_V = V", kron(iv, v.over.counit) * v.coaction, iv);
  return r;
}

Report validate_left_comodule(const LeftComodule& v) {
  Report r("left comodule");
  const Field& f = v.over.field;
  const std::size_t n = v.dim, d = v.over.dim();
  if (!shaped(r, "Delta_V", v.coaction, d * n, n, f)) return r;
  const Matrix iv = id(f, n);
  r.identity("coaction coassociativity", "(Δ⊗V)∘Δ_V = (C⊗Δ_V)∘Δ_V", kron(v.over.comult, iv) * v.coaction,
             kron(id(f, d), v.coaction) * v.coaction);
  r.identity("coaction counit", "(ε⊗V)∘Δ_V = V", kron(v.over.counit, iv) * v.coaction, iv);
  return r;
}

Report validate_module(const RightModule& v) {
  Report r("right module");
  const Field& f = v.over.field;
  const std::size_t n = v.dim, d = v.over.dim();
  if (!shaped(r, "mu_V", v.action, n, n * d, f)) return r;
  const Matrix iv = id(f, n);
  r.identity("action associativity", "μ_V∘(μ_V⊗A) = μ_V∘(V⊗m)", v.action * kron(v.action, id(f, d)),
             v.action * kron(iv, v.over.mult));
  r.identity("action unit", "μ_V∘(V⊗η) = V", v.action * kron(iv, v.over.unit), iv);
  return r;
}

Report validate_hopf(const HopfAlgebra& h) {
  if (h.algebra.dim() != h.coalgebra.dim())
    throw DimensionMismatch("validate_hopf: algebra has dim " + std::to_string(h.algebra.dim()) +
                            ", coalgebra has dim " + std::to_string(h.coalgebra.dim()));
  if (!(h.algebra.field == h.coalgebra.field)) throw FieldMismatch("validate_hopf: algebra and coalgebra fields differ");
  Report r("hopf algebra");
  r.absorb(validate_algebra(h.algebra));
  r.absorb(validate_coalgebra(h.coalgebra));
  const Field& f = h.field();
  const std::size_t n = h.dim();
  if (!shaped(r, "S", h.antipode, n, n, f) || !r.passed()) return r;
  const Matrix& m = h.algebra.mult;
  const Matrix& eta = h.algebra.unit;
  const Matrix& delta = h.coalgebra.comult;
  const Matrix& eps = h.coalgebra.counit;
  const Matrix i = id(f, n);
  r.identity("comultiplication multiplicative", "Δ∘m = (m⊗m)∘(H⊗flip⊗H)∘(Δ⊗Δ)", delta * m,
             tensor_product_multiplication(h.algebra, h.algebra) * kron(delta, delta));
  r.identity("comultiplication unital", "Δ∘η = η⊗η", delta * eta, kron(eta, eta));
  r.identity("counit multiplicative", "ε∘m = ε⊗ε", eps * m, kron(eps, eps));
  r.identity("counit unital", "ε∘η = 1", eps * eta, id(f, 1));
  const Matrix ee = eta * eps;
  r.identity("left antipode", "m∘(S⊗H)∘Δ = η∘ε", m * kron(h.antipode, i) * delta, ee);
  r.identity("right antipode", "m∘(H⊗S)∘Δ = η∘ε", m * kron(i, h.antipode) * delta, ee);
  const bool invertible = rank(h.antipode) == n;
  r.set_fact("antipode_invertible", invertible);
  r.set_fact("antipode_squared_is_identity", (h.antipode * h.antipode).is_identity());
  r.flag("antipode invertible", "S bijective", invertible,
         invertible ? "" : "rank " + std::to_string(rank(h.antipode)) + " < " + std::to_string(n));
  return r;
}

FiniteAlgebra dualize(const FiniteCoalgebra& c) {
  return {c.field, toggle_stars(c.basis), c.comult.transpose(), c.counit.transpose()};
}

FiniteCoalgebra dualize(const FiniteAlgebra& a) {
  return {a.field, toggle_stars(a.basis), a.mult.transpose(), a.unit.transpose()};
}

bool verify_grouplike(const FiniteCoalgebra& c, const Vector& e) {
  if (e.size() != c.dim()) return false;
  const Matrix col = Matrix::column_of(c.field, e);
  return c.comult * col == kron(col, col) && (c.counit * col).is_identity();
}

bool verify_character(const FiniteAlgebra& a, const Vector& kappa) {
  if (kappa.size() != a.dim()) return false;
  const Matrix k = Matrix::row_of(a.field, kappa);
  return k * a.mult == kron(k, k) && (k * a.unit).is_identity();
}

std::vector<Vector> find_grouplikes(const FiniteCoalgebra& c) {
  std::vector<Vector> out;
  enumerate(c.field, c.dim(), [&](const Vector& v) {
    if (verify_grouplike(c, v)) out.push_back(v);
  });
  return out;
}

std::vector<Vector> find_characters(const FiniteAlgebra& a) {
  std::vector<Vector> out;
  enumerate(a.field, a.dim(), [&](const Vector& v) {
    if (verify_character(a, v)) out.push_back(v);
  });
  return out;
}

Matrix convolution(const FiniteCoalgebra& c, const FiniteAlgebra& a, const Matrix& f, const Matrix& g) {
  for (const Matrix* x : {&f, &g})
    if (x->rows() != a.dim() || x->cols() != c.dim())
      throw DimensionMismatch("convolution: expected " + std::to_string(a.dim()) + "x" + std::to_string(c.dim()) +
                              " maps, got " + shape_text(*x));
  return a.mult * kron(f, g) * c.comult;
}

FiniteAlgebra change_basis(const FiniteAlgebra& a, const Matrix& t) {
  const Matrix ti = inverse_or_throw(t, "change of basis");
  return {a.field, a.basis, t * a.mult * kron(ti, ti), t * a.unit};
}

FiniteCoalgebra change_basis(const FiniteCoalgebra& c, const Matrix& t) {
  const Matrix ti = inverse_or_throw(t, "change of basis");
  return {c.field, c.basis, kron(t, t) * c.comult * ti, c.counit * ti};
}

HopfAlgebra change_basis(const HopfAlgebra& h, const Matrix& t) {
  const Matrix ti = inverse_or_throw(t, "change of basis");
  return {change_basis(h.algebra, t), change_basis(h.coalgebra, t), t * h.antipode * ti};
}

Matrix tensor_product_multiplication(const FiniteAlgebra& a, const FiniteAlgebra& c) {
  // (m⊗m)∘(A⊗flip⊗C) only reorders the columns of m⊗m
  const std::size_t da = a.dim(), dc = c.dim();
  std::vector<std::size_t> cols;
  cols.reserve(da * dc * da * dc);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < dc; ++j)
      for (std::size_t k = 0; k < da; ++k)
        for (std::size_t l = 0; l < dc; ++l) cols.push_back((i * da + k) * dc * dc + j * dc + l);
  return kron(a.mult, c.mult).select_cols(cols);
}

Matrix inverse_or_throw(const Matrix& m, const std::string& what) {
  auto inv = try_invert(m);
  if (auto* ok = std::get_if<Matrix>(&inv)) return std::move(*ok);
  const auto& bad = std::get<NotInvertible>(inv);
  throw NotInvertibleError(what + " is not invertible (rank " + std::to_string(bad.rank) + " of " +
                           std::to_string(m.rows()) + ")");
}

}  // namespace entwine

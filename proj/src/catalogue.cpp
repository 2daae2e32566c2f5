#include "entwine/catalogue.hpp"

#include <algorithm>
#include <sstream>

#include "entwine/error.hpp"
#include "entwine/tensor.hpp"

namespace entwine {

namespace {

Vector unit(std::size_t n, std::size_t i) {
  Vector v(n, Scalar(0));
  v[i] = 1;
  return v;
}

std::string param(const Params& p, const std::string& key, const std::string& fallback) {
  auto it = p.find(key);
  return it == p.end() ? fallback : it->second;
}

void allow_only(const std::string& example, const Params& p, std::initializer_list<const char*> keys) {
  for (const auto& [k, v] : p)
    if (std::find_if(keys.begin(), keys.end(), [&](const char* x) { return k == x; }) == keys.end())
      throw BadParams(example + ": unknown parameter '" + k + "'");
}

Field field_param(const std::string& example, const Params& p) {
  try {
    return field_from_name(param(p, "field", "Q"));
  } catch (const std::invalid_argument& e) {
    throw BadParams(example + ": " + e.what());
  }
}

std::vector<std::size_t> index_list(const std::string& example, const std::string& text, std::size_t bound) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &pos);
    } catch (const std::exception&) {
      throw BadParams(example + ": '" + item + "' is not an element index");
    }
    if (pos != item.size() || v >= bound) throw BadParams(example + ": '" + item + "' is not an element index");
    out.push_back(v);
  }
  if (out.empty()) throw BadParams(example + ": empty element list");
  return out;
}

void set_spaces(Document& d) {
  if (d.algebra) d.space_a = d.algebra->basis;
  if (d.coalgebra) d.space_c = d.coalgebra->basis;
}

void put_hopf(Document& d, const HopfAlgebra& h) {
  d.algebra = h.algebra;
  d.coalgebra = h.coalgebra;
  d.antipode = h.antipode;
}

// Every catalogue structure passes its validators; a failure here is a bug.
void check_built(const Document& d) {
  auto require = [&](bool ok, const std::string& what) {
    if (!ok) throw AxiomViolation("catalogue: " + d.name + " fails " + what);
  };
  if (d.algebra) require(validate_algebra(*d.algebra).passed(), "algebra axioms");
  if (d.coalgebra) require(validate_coalgebra(*d.coalgebra).passed(), "coalgebra axioms");
  if (d.antipode) require(validate_hopf(d.hopf()).passed(), "Hopf axioms");
  if (d.coaction) require(validate_comodule(d.comodule_algebra().as_comodule()).passed(), "comodule axioms");
  if (d.action) require(validate_module(d.module_coalgebra().as_module()).passed(), "module axioms");
  if (d.psi) require(validate_entwining({*d.algebra, *d.coalgebra, *d.psi}).passed(), "entwining axioms");
  for (const auto& e : d.grouplikes) require(verify_grouplike(*d.coalgebra, e), "group-like check");
  for (const auto& k : d.characters) require(verify_character(*d.algebra, k), "character check");
  for (const auto& i : d.coideals) require(is_coideal(*d.coalgebra, i), "coideal check");
}

GroupTable cyclic(std::size_t n) {
  GroupTable g;
  g.table.assign(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    g.names.push_back("g" + std::to_string(i));
    for (std::size_t j = 0; j < n; ++j) g.table[i][j] = (i + j) % n;
  }
  return g;
}

GroupTable checked(GroupTable g) {
  const std::size_t n = g.order();
  if (n == 0) throw BadParams("group table is empty");
  for (const auto& row : g.table) {
    if (row.size() != n) throw BadParams("group table is not square");
    for (std::size_t x : row)
      if (x >= n) throw BadParams("group table entry out of range");
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = g.table[e][x] == x && g.table[x][e] == x;
    if (ok) {
      g.identity = e;
      found = true;
    }
  }
  if (!found) throw BadParams("group table has no identity element");
  for (std::size_t x = 0; x < n; ++x) {
    std::vector<bool> row(n), col(n);
    for (std::size_t y = 0; y < n; ++y) {
      row[g.table[x][y]] = true;
      col[g.table[y][x]] = true;
    }
    if (std::count(row.begin(), row.end(), false) || std::count(col.begin(), col.end(), false))
      throw BadParams("group table is not a Latin square");
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      for (std::size_t z = 0; z < n; ++z)
        if (g.table[g.table[x][y]][z] != g.table[x][g.table[y][z]])
          throw BadParams("group table is not associative at (" + std::to_string(x) + ", " + std::to_string(y) +
                          ", " + std::to_string(z) + ")");
  return g;
}

}  // namespace

std::size_t GroupTable::inverse(std::size_t g) const {
  for (std::size_t x = 0; x < order(); ++x)
    if (table[g][x] == identity) return x;
  throw BadParams("group element without inverse");
}

GroupTable group_table(const std::string& spec) {
  if (spec == "Z2") return cyclic(2);
  if (spec == "Z3") return cyclic(3);
  if (spec == "Z4") return cyclic(4);
  if (spec == "S3") {
    GroupTable g;
    g.names = {"e", "(01)", "(02)", "(12)", "(012)", "(021)"};
    g.table = {
        {0, 1, 2, 3, 4, 5}, {1, 0, 5, 4, 3, 2}, {2, 4, 0, 5, 1, 3},
        {3, 5, 4, 0, 2, 1}, {4, 2, 3, 1, 5, 0}, {5, 3, 1, 2, 0, 4},
    };
    return g;
  }
  // rows separated by ';', entries by whitespace
  GroupTable g;
  std::stringstream rows(spec);
  std::string line;
  while (std::getline(rows, line, ';')) {
    std::stringstream cells(line);
    std::vector<std::size_t> row;
    std::string cell;
    while (cells >> cell) {
      std::size_t pos = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(cell, &pos);
      } catch (const std::exception&) {
        throw BadParams("group '" + spec + "' is neither Z2, Z3, Z4, S3 nor a Cayley table");
      }
      if (pos != cell.size()) throw BadParams("group table entry '" + cell + "' is not an index");
      row.push_back(v);
    }
    g.table.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < g.table.size(); ++i) g.names.push_back("g" + std::to_string(i));
  return checked(std::move(g));
}

HopfAlgebra group_hopf_algebra(const Field& f, const GroupTable& g) {
  const std::size_t n = g.order();
  FiniteAlgebra a{f, g.names, Matrix(f, n, n * n), Matrix::column_of(f, unit(n, g.identity))};
  FiniteCoalgebra c{f, g.names, Matrix(f, n * n, n), Matrix(f, 1, n)};
  Matrix s(f, n, n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) a.mult.set(g.table[x][y], x * n + y, 1);
    c.comult.set(x * n + x, x, 1);
    c.counit.set(0, x, 1);
    s.set(g.inverse(x), x, 1);
  }
  return {a, c, s};
}

HopfAlgebra dual_group_hopf_algebra(const Field& f, const GroupTable& g) {
  const std::size_t n = g.order();
  std::vector<std::string> names;
  for (const auto& x : g.names) names.push_back("p_" + x);
  FiniteAlgebra a{f, names, Matrix(f, n, n * n), Matrix(f, n, 1)};
  FiniteCoalgebra c{f, names, Matrix(f, n * n, n), Matrix(f, 1, n)};
  Matrix s(f, n, n);
  for (std::size_t x = 0; x < n; ++x) {
    a.mult.set(x, x * n + x, 1);
    a.unit.set(x, 0, 1);
    for (std::size_t y = 0; y < n; ++y) c.comult.set(y * n + g.table[g.inverse(y)][x], x, 1);
    s.set(g.inverse(x), x, 1);
  }
  c.counit.set(0, g.identity, 1);
  return {a, c, s};
}

Subspace coset_coideal(const Field& f, const GroupTable& g, const std::vector<std::size_t>& h) {
  const std::size_t n = g.order();
  for (std::size_t x : h) {
    if (x >= n) throw BadParams("subgroup element out of range");
    for (std::size_t y : h)
      if (std::find(h.begin(), h.end(), g.table[x][y]) == h.end())
        throw BadParams("element list is not a subgroup: not closed under the product");
  }
  if (std::find(h.begin(), h.end(), g.identity) == h.end()) throw BadParams("element list is not a subgroup: no identity");
  std::vector<Vector> vs;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y : h) {
      Vector v = unit(n, x);
      v[g.table[x][y]] -= 1;
      vs.push_back(v);
    }
  // normalise entries through the field
  for (auto& v : vs)
    for (auto& s : v) s = f.normalize(s);
  return Subspace::span(f, n, vs);
}

const std::vector<std::string>& example_names() {
  static const std::vector<std::string> names{
      "group-algebra",      "dual-group-algebra", "sweedler-h4",   "trivial-hopf-galois",
      "quadratic-field-extension", "group-coextension", "coset-coideal", "flip-entwining",
      "ground-comodule",    "comatrix-extension",
  };
  return names;
}

Document build_example(const std::string& name, const Params& p) {
  Document d;
  d.name = name;
  if (std::find(example_names().begin(), example_names().end(), name) == example_names().end())
    throw UnknownExample("unknown example '" + name + "'");

  if (name == "group-algebra" || name == "trivial-hopf-galois" || name == "group-coextension") {
    allow_only(name, p, {"field", "group"});
    d.field = field_param(name, p);
    GroupTable g = group_table(param(p, "group", "Z2"));
    HopfAlgebra h = group_hopf_algebra(d.field, g);
    put_hopf(d, h);
    d.characters = {h.coalgebra.counit.row_vector(0)};
    if (name == "group-algebra") {
      for (std::size_t x = 0; x < g.order(); ++x) d.grouplikes.push_back(unit(g.order(), x));
    } else {
      d.grouplikes = {unit(g.order(), g.identity)};
      if (name == "trivial-hopf-galois") d.coaction = h.coalgebra.comult;
      else d.action = h.algebra.mult;
    }
  } else if (name == "dual-group-algebra") {
    allow_only(name, p, {"field", "group"});
    d.field = field_param(name, p);
    GroupTable g = group_table(param(p, "group", "Z2"));
    HopfAlgebra h = dual_group_hopf_algebra(d.field, g);
    put_hopf(d, h);
    d.grouplikes = {h.algebra.unit_vector()};
    for (std::size_t x = 0; x < g.order(); ++x) d.characters.push_back(unit(g.order(), x));
  } else if (name == "sweedler-h4") {
    allow_only(name, p, {"field"});
    d.field = field_param(name, p);
    const Field& f = d.field;
    if (f.is_prime() && f.modulus() == 2) throw BadParams("sweedler-h4: needs characteristic other than 2");
    // basis 1, g, x, gx with g^2 = 1, x^2 = 0, xg = -gx
    std::vector<std::string> names{"1", "g", "x", "gx"};
    FiniteAlgebra a{f, names, Matrix(f, 4, 16), Matrix::column_of(f, unit(4, 0))};
    auto put = [&](std::size_t i, std::size_t j, std::size_t k, long c) { a.mult.set(k, i * 4 + j, f.from_int(c)); };
    for (std::size_t j = 0; j < 4; ++j) put(0, j, j, 1);
    put(1, 0, 1, 1), put(1, 1, 0, 1), put(1, 2, 3, 1), put(1, 3, 2, 1);
    put(2, 0, 2, 1), put(2, 1, 3, -1);
    put(3, 0, 3, 1), put(3, 1, 2, -1);
    FiniteCoalgebra c{f, names, Matrix(f, 16, 4), Matrix::row_of(f, Vector{1, 1, 0, 0})};
    // Delta(g) = g (x) g, Delta(x) = x (x) 1 + g (x) x, Delta(gx) = gx (x) g + 1 (x) gx
    c.comult.set(0 * 4 + 0, 0, 1);
    c.comult.set(1 * 4 + 1, 1, 1);
    c.comult.set(2 * 4 + 0, 2, 1);
    c.comult.set(1 * 4 + 2, 2, 1);
    c.comult.set(3 * 4 + 1, 3, 1);
    c.comult.set(0 * 4 + 3, 3, 1);
    Matrix s(f, 4, 4);
    s.set(0, 0, 1);
    s.set(1, 1, 1);
    s.set(3, 2, f.from_int(-1));  // S(x) = -gx
    s.set(2, 3, 1);               // S(gx) = x
    put_hopf(d, {a, c, s});
    d.coaction = c.comult;
    d.action = a.mult;
    d.grouplikes = {unit(4, 0), unit(4, 1)};
    d.characters = {Vector{1, 1, 0, 0}, Vector{1, f.from_int(-1), 0, 0}};
  } else if (name == "quadratic-field-extension") {
    allow_only(name, p, {"field", "d"});
    d.field = field_param(name, p);
    const Field& f = d.field;
    const std::string dtext = param(p, "d", "2");
    Scalar dv;
    try {
      dv = f.parse(dtext);
    } catch (const FieldParseError&) {
      throw BadParams(name + ": d must be an integer");
    }
    if (dv.get_den() != 1 || dtext.find('/') != std::string::npos) throw BadParams(name + ": d must be an integer");
    // A = k[r]/(r^2 - d), C = k^{Z2}, a -> a (x) p_e + sigma(a) (x) p_s with sigma(r) = -r
    FiniteAlgebra a{f, {"1", "r"}, Matrix(f, 2, 4), Matrix::column_of(f, unit(2, 0))};
    a.mult.set(0, 0, 1);
    a.mult.set(1, 1, 1);
    a.mult.set(1, 2, 1);
    a.mult.set(0, 3, dv);
    d.algebra = a;
    d.coalgebra = dual_group_hopf_algebra(f, group_table("Z2")).coalgebra;
    d.coalgebra->basis = {"p_e", "p_s"};
    d.coaction = Matrix::from_rows(f, {{1, 0}, {1, 0}, {0, 1}, {0, -1}});
    d.grouplikes = {Vector{1, 1}};
  } else if (name == "coset-coideal") {
    allow_only(name, p, {"field", "group", "h1", "h2"});
    d.field = field_param(name, p);
    const std::string gname = param(p, "group", "S3");
    GroupTable g = group_table(gname);
    std::string h1 = "0", h2;
    for (std::size_t x = 0; x < g.order(); ++x) h2 += (x ? "," : "") + std::to_string(x);
    if (gname == "S3") h1 = "0,1", h2 = "0,4,5";
    if (gname == "Z4") h1 = "0,2", h2 = "0,2";
    HopfAlgebra h = group_hopf_algebra(d.field, g);
    put_hopf(d, h);
    d.coaction = h.coalgebra.comult;
    d.grouplikes = {unit(g.order(), g.identity)};
    d.coideals = {coset_coideal(d.field, g, index_list(name, param(p, "h1", h1), g.order())),
                  coset_coideal(d.field, g, index_list(name, param(p, "h2", h2), g.order()))};
  } else if (name == "flip-entwining") {
    allow_only(name, p, {"field", "group", "algebra"});
    d.field = field_param(name, p);
    const Field& f = d.field;
    GroupTable g = group_table(param(p, "group", "Z2"));
    const std::string an = param(p, "algebra", "dual-numbers");
    if (an == "dual-numbers") {
      FiniteAlgebra a{f, {"1", "x"}, Matrix(f, 2, 4), Matrix::column_of(f, unit(2, 0))};
      a.mult.set(0, 0, 1);
      a.mult.set(1, 1, 1);
      a.mult.set(1, 2, 1);
      d.algebra = a;
    } else if (an == "ground") {
      d.algebra = ground_algebra(f);
    } else {
      throw BadParams(name + ": algebra must be dual-numbers or ground");
    }
    d.coalgebra = group_hopf_algebra(f, g).coalgebra;
    d.psi = flip_entwining(*d.algebra, *d.coalgebra).psi;
    for (std::size_t x = 0; x < g.order(); ++x) d.grouplikes.push_back(unit(g.order(), x));
    d.characters = {unit(d.algebra->dim(), 0)};
  } else if (name == "ground-comodule") {
    allow_only(name, p, {"field", "group"});
    d.field = field_param(name, p);
    GroupTable g = group_table(param(p, "group", "Z2"));
    d.algebra = ground_algebra(d.field);
    d.coalgebra = group_hopf_algebra(d.field, g).coalgebra;
    d.coaction = Matrix::column_of(d.field, unit(g.order(), g.identity));
    d.grouplikes = {unit(g.order(), g.identity)};
    d.characters = {Vector{1}};
  } else if (name == "comatrix-extension") {
    allow_only(name, p, {"field"});
    d.field = field_param(name, p);
    const Field& f = d.field;
    // M_2 with E_ab at 2a+b, over the comatrix coalgebra M_2*: a -> sum_i e_i a (x) e^i
    FiniteAlgebra a{f, {"E11", "E12", "E21", "E22"}, Matrix(f, 4, 16), Matrix::column_of(f, Vector{1, 0, 0, 1})};
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j)
        if (i % 2 == j / 2) a.mult.set((i / 2) * 2 + j % 2, i * 4 + j, 1);
    d.algebra = a;
    d.coalgebra = dualize(a);
    Matrix coaction(f, 16, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      Matrix li = a.left_multiplication(unit(4, i));
      for (std::size_t r = 0; r < 4; ++r)
        for (std::size_t s = 0; s < 4; ++s)
          if (li(r, s) != 0) coaction.set(r * 4 + i, s, li(r, s));
    }
    d.coaction = coaction;
  }
  set_spaces(d);
  check_built(d);
  return d;
}

}  // namespace entwine

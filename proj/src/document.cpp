#include "entwine/document.hpp"

#include <json.hpp>
#include <set>

#include "entwine/error.hpp"

namespace entwine {

using json = nlohmann::json;

namespace {

json coefficient(const Field& f, const Scalar& s) {
  if (f.is_prime()) return s.get_num().get_si();
  return f.format(s);
}

json sparse_vector(const Field& f, const Vector& v) {
  json out = json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.push_back({{"i", i}, {"c", coefficient(f, v[i])}});
  return out;
}

// Entries of a map from a two-factor (or one-factor) domain, with `at`
// giving the matrix position of each index tuple.
template <typename At>
json sparse_entries(const Field& f, const Matrix& m, const std::vector<std::string>& keys,
                    const std::vector<std::size_t>& bounds, At at) {
  json out = json::array();
  std::vector<std::size_t> idx(keys.size(), 0);
  while (true) {
    auto [r, c] = at(idx);
    if (m(r, c) != 0) {
      json e = {{"c", coefficient(f, m(r, c))}};
      for (std::size_t t = 0; t < keys.size(); ++t) e[keys[t]] = idx[t];
      out.push_back(e);
    }
    std::size_t t = keys.size();
    while (t > 0) {
      --t;
      if (++idx[t] < bounds[t]) break;
      idx[t] = 0;
      if (t == 0) return out;
    }
  }
}

class Parser {
 public:
  explicit Parser(Field f) : f_(f) {}

  Scalar coeff(const json& j, const std::string& path) const {
    std::string text;
    if (j.is_number_integer()) {
      text = j.dump();
    } else if (j.is_string()) {
      text = j.get<std::string>();
    } else {
      throw SchemaError(path, "coefficient must be a string or an integer");
    }
    try {
      return f_.parse(text);
    } catch (const FieldParseError& e) {
      throw FieldParseError(path + ": " + e.what());
    }
  }

  static std::size_t index(const json& j, const std::string& path, std::size_t bound) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0))
      throw SchemaError(path, "index must be a nonnegative integer");
    auto v = j.get<unsigned long long>();
    if (v >= bound) throw SchemaError(path, "index " + std::to_string(v) + " out of range (dimension " + std::to_string(bound) + ")");
    return static_cast<std::size_t>(v);
  }

  // Sparse entries with the given index keys; `put` receives indices and coefficient.
  template <typename Put>
  void entries(const json& j, const std::string& path, const std::vector<std::string>& keys,
               const std::vector<std::size_t>& bounds, Put put) const {
    if (!j.is_array()) throw SchemaError(path, "expected an array of entries");
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t n = 0; n < j.size(); ++n) {
      const json& e = j[n];
      const std::string ep = path + "/" + std::to_string(n);
      if (!e.is_object()) throw SchemaError(ep, "entry must be an object");
      for (auto it = e.begin(); it != e.end(); ++it)
        if (it.key() != "c" && std::find(keys.begin(), keys.end(), it.key()) == keys.end())
          throw SchemaError(ep + "/" + it.key(), "unexpected key");
      std::vector<std::size_t> idx;
      for (std::size_t t = 0; t < keys.size(); ++t) {
        if (!e.contains(keys[t])) throw SchemaError(ep, "missing index '" + keys[t] + "'");
        idx.push_back(index(e[keys[t]], ep + "/" + keys[t], bounds[t]));
      }
      if (!e.contains("c")) throw SchemaError(ep, "missing coefficient 'c'");
      Scalar c = coeff(e["c"], ep + "/c");
      if (!seen.insert(idx).second) throw SchemaError(ep, "duplicate entry");
      put(idx, c);
    }
  }

  Vector vector(const json& j, const std::string& path, std::size_t dim) const {
    Vector v(dim, Scalar(0));
    entries(j, path, {"i"}, {dim}, [&](const std::vector<std::size_t>& i, const Scalar& c) { v[i[0]] = c; });
    return v;
  }

 private:
  Field f_;
};

const json& member(const json& obj, const std::string& key, const std::string& path) {
  if (!obj.contains(key)) throw SchemaError(path, "missing '" + key + "'");
  return obj[key];
}

void only_keys(const json& obj, const std::string& path, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) throw SchemaError(path, "expected an object");
  for (auto it = obj.begin(); it != obj.end(); ++it)
    if (std::find_if(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }) == keys.end())
      throw SchemaError(path + "/" + it.key(), "unexpected key");
}

}  // namespace

Field field_from_name(std::string_view name) {
  if (name == "Q") return Field::rational();
  if (name.size() > 4 && name.substr(0, 3) == "GF(" && name.back() == ')') {
    std::string digits(name.substr(3, name.size() - 4));
    if (!digits.empty() && digits.find_first_not_of("0123456789") == std::string::npos && digits.size() < 10)
      return Field::prime(std::stoull(digits));
  }
  throw std::invalid_argument("field must be Q or GF(p), got '" + std::string(name) + "'");
}

const FiniteAlgebra& Document::need_algebra() const {
  if (!algebra) throw MissingSection("algebra");
  return *algebra;
}

const FiniteCoalgebra& Document::need_coalgebra() const {
  if (!coalgebra) throw MissingSection("coalgebra");
  return *coalgebra;
}

HopfAlgebra Document::hopf() const {
  const FiniteAlgebra& a = need_algebra();
  const FiniteCoalgebra& c = need_coalgebra();
  if (!antipode) throw MissingSection("antipode");
  return {a, c, *antipode};
}

ComoduleAlgebra Document::comodule_algebra() const {
  const FiniteAlgebra& a = need_algebra();
  const FiniteCoalgebra& c = need_coalgebra();
  if (!coaction) throw MissingSection("coaction");
  return {a, c, *coaction};
}

ModuleCoalgebra Document::module_coalgebra() const {
  const FiniteAlgebra& a = need_algebra();
  const FiniteCoalgebra& c = need_coalgebra();
  if (!action) throw MissingSection("action");
  return {c, a, *action};
}

Document parse_document(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError("", std::string("invalid JSON: ") + e.what());
  }
  only_keys(j, "", {"field", "name", "spaces", "algebra", "coalgebra", "antipode", "coaction", "action", "psi",
                    "grouplikes", "characters", "coideals"});
  Document d;
  const json& fj = member(j, "field", "");
  if (!fj.is_string()) throw SchemaError("/field", "expected a string");
  try {
    d.field = field_from_name(fj.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError("/field", e.what());
  }
  const Field& f = d.field;
  Parser p(f);
  if (j.contains("name")) {
    if (!j["name"].is_string()) throw SchemaError("/name", "expected a string");
    d.name = j["name"].get<std::string>();
  }

  const json& spaces = member(j, "spaces", "");
  only_keys(spaces, "/spaces", {"A", "C"});
  auto read_space = [&](const char* key) -> std::optional<std::vector<std::string>> {
    if (!spaces.contains(key)) return std::nullopt;
    const std::string path = std::string("/spaces/") + key;
    const json& s = spaces[key];
    if (!s.is_array() || s.empty()) throw SchemaError(path, "expected a nonempty array of basis names");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (!s[i].is_string()) throw SchemaError(path + "/" + std::to_string(i), "basis name must be a string");
      names.push_back(s[i].get<std::string>());
    }
    return names;
  };
  d.space_a = read_space("A");
  d.space_c = read_space("C");
  auto need = [&](const char* section, bool a, bool c) {
    if (a && !d.space_a) throw SchemaError(std::string("/") + section, "needs space A");
    if (c && !d.space_c) throw SchemaError(std::string("/") + section, "needs space C");
  };
  const std::size_t da = d.space_a ? d.space_a->size() : 0, dc = d.space_c ? d.space_c->size() : 0;

  if (j.contains("algebra")) {
    need("algebra", true, false);
    const json& a = j["algebra"];
    only_keys(a, "/algebra", {"mult", "unit"});
    FiniteAlgebra alg{f, *d.space_a, Matrix(f, da, da * da), Matrix(f, da, 1)};
    p.entries(member(a, "mult", "/algebra"), "/algebra/mult", {"i", "j", "k"}, {da, da, da},
              [&](const auto& i, const Scalar& c) { alg.mult.set(i[2], i[0] * da + i[1], c); });
    alg.unit = Matrix::column_of(f, p.vector(member(a, "unit", "/algebra"), "/algebra/unit", da));
    d.algebra = alg;
  }
  if (j.contains("coalgebra")) {
    need("coalgebra", false, true);
    const json& c = j["coalgebra"];
    only_keys(c, "/coalgebra", {"comult", "counit"});
    FiniteCoalgebra co{f, *d.space_c, Matrix(f, dc * dc, dc), Matrix(f, 1, dc)};
    p.entries(member(c, "comult", "/coalgebra"), "/coalgebra/comult", {"i", "j", "k"}, {dc, dc, dc},
              [&](const auto& i, const Scalar& v) { co.comult.set(i[1] * dc + i[2], i[0], v); });
    co.counit = Matrix::row_of(f, p.vector(member(c, "counit", "/coalgebra"), "/coalgebra/counit", dc));
    d.coalgebra = co;
  }
  if (j.contains("antipode")) {
    need("antipode", true, true);
    if (da != dc) throw SchemaError("/antipode", "spaces A and C must have equal dimension");
    Matrix s(f, dc, dc);
    p.entries(j["antipode"], "/antipode", {"i", "j"}, {dc, dc},
              [&](const auto& i, const Scalar& v) { s.set(i[1], i[0], v); });
    d.antipode = s;
  }
  if (j.contains("coaction")) {
    need("coaction", true, true);
    Matrix m(f, da * dc, da);
    p.entries(j["coaction"], "/coaction", {"i", "j", "k"}, {da, da, dc},
              [&](const auto& i, const Scalar& v) { m.set(i[1] * dc + i[2], i[0], v); });
    d.coaction = m;
  }
  if (j.contains("action")) {
    need("action", true, true);
    Matrix m(f, dc, dc * da);
    p.entries(j["action"], "/action", {"i", "j", "k"}, {dc, da, dc},
              [&](const auto& i, const Scalar& v) { m.set(i[2], i[0] * da + i[1], v); });
    d.action = m;
  }
  if (j.contains("psi")) {
    need("psi", true, true);
    Matrix m(f, da * dc, dc * da);
    p.entries(j["psi"], "/psi", {"i", "j", "k", "l"}, {dc, da, da, dc},
              [&](const auto& i, const Scalar& v) { m.set(i[2] * dc + i[3], i[0] * da + i[1], v); });
    d.psi = m;
  }
  auto vectors = [&](const char* key, std::size_t dim, std::vector<Vector>& out) {
    if (!j.contains(key)) return;
    const std::string path = std::string("/") + key;
    if (!j[key].is_array()) throw SchemaError(path, "expected an array of vectors");
    for (std::size_t n = 0; n < j[key].size(); ++n) out.push_back(p.vector(j[key][n], path + "/" + std::to_string(n), dim));
  };
  if (j.contains("grouplikes")) need("grouplikes", false, true);
  vectors("grouplikes", dc, d.grouplikes);
  if (j.contains("characters")) need("characters", true, false);
  vectors("characters", da, d.characters);
  if (j.contains("coideals")) {
    need("coideals", false, true);
    const json& cs = j["coideals"];
    if (!cs.is_array()) throw SchemaError("/coideals", "expected an array of spanning sets");
    for (std::size_t n = 0; n < cs.size(); ++n) {
      const std::string path = "/coideals/" + std::to_string(n);
      if (!cs[n].is_array()) throw SchemaError(path, "expected an array of vectors");
      std::vector<Vector> span;
      for (std::size_t k = 0; k < cs[n].size(); ++k) span.push_back(p.vector(cs[n][k], path + "/" + std::to_string(k), dc));
      d.coideals.push_back(Subspace::span(f, dc, span));
    }
  }
  return d;
}

std::string emit_document(const Document& d) {
  const Field& f = d.field;
  json j;
  j["field"] = f.name();
  if (!d.name.empty()) j["name"] = d.name;
  json spaces = json::object();
  if (d.space_a) spaces["A"] = *d.space_a;
  if (d.space_c) spaces["C"] = *d.space_c;
  j["spaces"] = spaces;
  const std::size_t da = d.space_a ? d.space_a->size() : 0, dc = d.space_c ? d.space_c->size() : 0;
  using Idx = std::vector<std::size_t>;
  using Pos = std::pair<std::size_t, std::size_t>;
  if (d.algebra)
    j["algebra"] = {
        {"mult", sparse_entries(f, d.algebra->mult, {"i", "j", "k"}, {da, da, da},
                                [&](const Idx& i) { return Pos{i[2], i[0] * da + i[1]}; })},
        {"unit", sparse_vector(f, d.algebra->unit_vector())},
    };
  if (d.coalgebra)
    j["coalgebra"] = {
        {"comult", sparse_entries(f, d.coalgebra->comult, {"i", "j", "k"}, {dc, dc, dc},
                                  [&](const Idx& i) { return Pos{i[1] * dc + i[2], i[0]}; })},
        {"counit", sparse_vector(f, d.coalgebra->counit.row_vector(0))},
    };
  if (d.antipode)
    j["antipode"] = sparse_entries(f, *d.antipode, {"i", "j"}, {dc, dc}, [&](const Idx& i) { return Pos{i[1], i[0]}; });
  if (d.coaction)
    j["coaction"] = sparse_entries(f, *d.coaction, {"i", "j", "k"}, {da, da, dc},
                                   [&](const Idx& i) { return Pos{i[1] * dc + i[2], i[0]}; });
  if (d.action)
    j["action"] = sparse_entries(f, *d.action, {"i", "j", "k"}, {dc, da, dc},
                                 [&](const Idx& i) { return Pos{i[2], i[0] * da + i[1]}; });
  if (d.psi)
    j["psi"] = sparse_entries(f, *d.psi, {"i", "j", "k", "l"}, {dc, da, da, dc},
                              [&](const Idx& i) { return Pos{i[2] * dc + i[3], i[0] * da + i[1]}; });
  auto vectors = [&](const std::vector<Vector>& vs) {
    json out = json::array();
    for (const auto& v : vs) out.push_back(sparse_vector(f, v));
    return out;
  };
  if (!d.grouplikes.empty()) j["grouplikes"] = vectors(d.grouplikes);
  if (!d.characters.empty()) j["characters"] = vectors(d.characters);
  if (!d.coideals.empty()) {
    json cs = json::array();
    for (const auto& i : d.coideals) {
      std::vector<Vector> basis;
      for (std::size_t k = 0; k < i.dim(); ++k) basis.push_back(i.vector(k));
      cs.push_back(vectors(basis));
    }
    j["coideals"] = cs;
  }
  return j.dump(2) + "\n";
}

}  // namespace entwine

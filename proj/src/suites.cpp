#include "entwine/suites.hpp"

#include <json.hpp>

#include "entwine/cogenerate.hpp"
#include "entwine/error.hpp"
#include "entwine/galois.hpp"

namespace entwine {

using json = nlohmann::json;

namespace {

// Runs fn; any library error other than a missing section becomes a failing check.
template <typename Fn>
bool guarded(Report& r, const std::string& id, Fn fn) {
  try {
    fn();
    return true;
  } catch (const MissingSection&) {
    throw;
  } catch (const AxiomViolation& e) {
    r.add({id, "input satisfies the operation's preconditions", Status::fail, e.residual(), e.what()});
  } catch (const Error& e) {
    r.add({id, "input satisfies the operation's preconditions", Status::fail, std::nullopt, e.what()});
  }
  return false;
}

std::string numbered(const std::string& stem, std::size_t i) { return stem + std::to_string(i); }

void run_structures(const Document& d, Report& r) {
  if (!d.algebra && !d.coalgebra) throw MissingSection("algebra");
  if (d.antipode) {
    guarded(r, "hopf", [&] { r.absorb(validate_hopf(d.hopf()), "hopf/"); });
  } else {
    if (d.algebra) r.absorb(validate_algebra(*d.algebra), "algebra/");
    if (d.coalgebra) r.absorb(validate_coalgebra(*d.coalgebra), "coalgebra/");
  }
  if (d.coaction) r.absorb(validate_comodule(d.comodule_algebra().as_comodule()), "coaction/");
  if (d.action) r.absorb(validate_module(d.module_coalgebra().as_module()), "action/");
  for (std::size_t i = 0; i < d.grouplikes.size(); ++i)
    r.flag(numbered("grouplike ", i), "Δ(e) = e⊗e, ε(e) = 1", verify_grouplike(d.need_coalgebra(), d.grouplikes[i]));
  for (std::size_t i = 0; i < d.characters.size(); ++i)
    r.flag(numbered("character ", i), "κ(ab) = κ(a)κ(b), κ(1) = 1", verify_character(d.need_algebra(), d.characters[i]));
  for (std::size_t i = 0; i < d.coideals.size(); ++i)
    r.flag(numbered("coideal ", i), "Δ(I) ⊆ C⊗I + I⊗C, ε(I) = 0", is_coideal(d.need_coalgebra(), d.coideals[i]));
}

void run_entwining(const Document& d, Report& r) {
  if (!d.psi && !(d.antipode && d.coaction)) throw MissingSection("psi");
  const FiniteAlgebra& a = d.need_algebra();
  const FiniteCoalgebra& c = d.need_coalgebra();
  std::optional<EntwiningStructure> built;
  if (d.psi) {
    built = EntwiningStructure{a, c, *d.psi};
  } else {
    r.set_fact("psi_source", std::string("hopf"));
    if (!guarded(r, "hopf entwining", [&] { built = hopf_entwining(d.hopf(), d.comodule_algebra()); })) return;
    r.set_artifact("psi", built->psi);
  }
  const EntwiningStructure& e = *built;
  bool valid = false;
  guarded(r, "entwining", [&] {
    Report v = validate_entwining(e);
    valid = v.passed();
    r.absorb(v, "entwining/");
  });
  if (!valid) return;
  guarded(r, "structure maps", [&] {
    StructureMapPair p = psi_to_structure_maps(e);
    r.absorb(validate_structure_maps(p), "structure maps/");
    r.identity("structure maps/round trip", "ψ → (μ_AC, Δ_CA) → ψ is the identity", structure_maps_to_psi(p).psi, e.psi);
  });
  if (d.antipode && d.coaction && !d.psi) {
    guarded(r, "hopf inverse", [&] {
      Matrix inv = invert_hopf_entwining(d.hopf(), d.comodule_algebra());
      r.identity("psi∘psi⁻¹ = id", "ψ∘ψ⁻¹ = id, ψ⁻¹(a⊗h) = hS⁻¹(a₍₁₎)⊗a₍₀₎", e.psi * inv,
                 Matrix::identity(d.field, e.psi.rows()));
      r.identity("psi⁻¹∘psi = id", "ψ⁻¹∘ψ = id", inv * e.psi, Matrix::identity(d.field, e.psi.cols()));
    });
  }
  for (std::size_t i = 0; i < d.grouplikes.size(); ++i) {
    const std::string p = numbered("bundle e", i) + "/";
    guarded(r, p, [&] { r.absorb(bundle_equivalence(e, d.grouplikes[i]), p); });
  }
  for (std::size_t i = 0; i < d.characters.size(); ++i) {
    const std::string p = numbered("dual bundle kappa", i) + "/";
    guarded(r, p, [&] { r.absorb(dual_bundle_equivalence(e, d.characters[i]), p); });
  }
}

void run_galois(const Document& d, Report& r) {
  if (!d.coaction) throw MissingSection("coaction");
  const ComoduleAlgebra x = d.comodule_algebra();
  std::optional<GaloisCertificate> held;
  if (!guarded(r, "galois", [&] { held = galois_check(x); })) return;
  const GaloisCertificate& cert = *held;
  r.absorb(cert.report, "galois/");
  std::optional<EntwiningStructure> psi;
  if (cert.bijective) {
    psi = canonical_entwining(cert);
    r.set_artifact("psi", psi->psi);
    r.absorb(validate_entwining(*psi), "canonical entwining/");
    r.flag("A entwined", "A ∈ M_A^C(ψ) via m and Δ_A",
           validate_entwined_module({x.algebra.dim(), x.algebra, x.algebra.mult}, x.as_comodule(), *psi).passed());
    r.absorb(entwining_uniqueness(cert), "uniqueness/");
  } else {
    try {
      cert.require_galois("galois");
    } catch (const NotGalois& e) {
      r.set_fact("not_galois", std::string(e.what()));
    }
  }
  guarded(r, "sequence", [&] { r.absorb(differential_sequence(x), "sequence/"); });
  guarded(r, "bundle", [&] { r.absorb(bundle_from_extension(x), "bundle/"); });
  if (d.antipode) {
    guarded(r, "left canonical", [&] {
      HopfAlgebra h = d.hopf();
      r.absorb(left_canonical_check(h, x), "left canonical/");
      if (psi) r.identity("hopf psi = canonical psi", "ψ(h⊗a) = a₍₀₎⊗ha₍₁₎", hopf_entwining(h, x).psi, psi->psi);
    });
  }
}

void run_cogalois(const Document& d, Report& r) {
  if (!d.action) throw MissingSection("action");
  const ModuleCoalgebra x = d.module_coalgebra();
  std::optional<CoextensionCertificate> held;
  if (!guarded(r, "coextension", [&] { held = coextension_check(x); })) return;
  const CoextensionCertificate& cert = *held;
  r.absorb(cert.report, "coextension/");
  if (cert.bijective) {
    EntwiningStructure psi = canonical_entwining_dual(cert);
    r.set_artifact("psi", psi.psi);
    r.absorb(validate_entwining(psi), "dual entwining/");
    r.flag("C entwined", "C ∈ M_A^C(ψ) via μ_C and Δ",
           validate_entwined_module(x.as_module(), {x.coalgebra.dim(), x.coalgebra, x.coalgebra.comult}, psi).passed());
    r.absorb(dual_uniqueness(cert), "uniqueness/");
  } else {
    try {
      cert.require_coextension("cogalois");
    } catch (const NotGaloisCoextension& e) {
      r.set_fact("not_coextension", std::string(e.what()));
    }
  }
  guarded(r, "dual bundle", [&] { r.absorb(dual_bundle_from_coextension(x), "dual bundle/"); });
  if (d.antipode) {
    const std::string anchor = "{μ_C(c,h) − ε(h)c} = canonical coideal";
    try {
      Subspace i = hopf_coideal(x, d.hopf());
      r.flag("hopf coideal", anchor, i == cert.coideal);
    } catch (const AxiomViolation&) {
      r.skip("hopf coideal", anchor, "not applicable: the action is not by coalgebra maps");
    } catch (const DimensionMismatch&) {
      r.skip("hopf coideal", anchor, "not applicable: the acting algebra is not the Hopf algebra");
    }
  }
}

void run_cogenerate(const Document& d, Report& r, const RunOptions& o) {
  if (d.coideals.size() < 2) throw MissingSection("coideals");
  const FiniteCoalgebra& c = d.need_coalgebra();
  const std::size_t cutoff = o.cutoff.value_or(default_cutoff(c));
  guarded(r, "cogeneration", [&] {
    r.absorb(cogeneration_check(c, d.coideals[0], d.coideals[1], cutoff).report, "cogeneration/");
  });
  if (d.algebra && d.coaction)
    guarded(r, "intersection", [&] {
      r.absorb(coinvariant_intersection_check(d.comodule_algebra(), d.coideals[0], d.coideals[1], cutoff), "intersection/");
    });
}

std::optional<std::string> missing_for(const Document& d, Suite s) {
  switch (s) {
    case Suite::structures:
      if (!d.algebra && !d.coalgebra) return "algebra";
      return std::nullopt;
    case Suite::entwining:
      if (!d.psi && !(d.antipode && d.coaction)) return "psi";
      break;
    case Suite::galois:
      if (!d.coaction) return "coaction";
      break;
    case Suite::cogalois:
      if (!d.action) return "action";
      break;
    case Suite::cogenerate:
      if (d.coideals.size() < 2) return "coideals";
      if (!d.coalgebra) return "coalgebra";
      return std::nullopt;
    case Suite::all:
      return std::nullopt;
  }
  if (!d.algebra) return "algebra";
  if (!d.coalgebra) return "coalgebra";
  return std::nullopt;
}

json matrix_json(const Field& f, const Matrix& m) {
  json entries = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) {
        json c = f.is_prime() ? json(m(i, j).get_num().get_si()) : json(f.format(m(i, j)));
        entries.push_back({{"i", i}, {"j", j}, {"c", c}});
      }
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

std::string fact_text(const FactValue& v) {
  if (auto b = std::get_if<bool>(&v)) return *b ? "true" : "false";
  if (auto i = std::get_if<std::int64_t>(&v)) return std::to_string(*i);
  return std::get<std::string>(v);
}

}  // namespace

Suite parse_suite(std::string_view name) {
  for (Suite s : {Suite::structures, Suite::entwining, Suite::galois, Suite::cogalois, Suite::cogenerate, Suite::all})
    if (to_string(s) == name) return s;
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::structures: return "structures";
    case Suite::entwining: return "entwining";
    case Suite::galois: return "galois";
    case Suite::cogalois: return "cogalois";
    case Suite::cogenerate: return "cogenerate";
    case Suite::all: return "all";
  }
  return "?";
}

Report run_suite(const Document& d, Suite s, const RunOptions& options) {
  Report r{std::string(to_string(s))};
  switch (s) {
    case Suite::structures: run_structures(d, r); break;
    case Suite::entwining: run_entwining(d, r); break;
    case Suite::galois: run_galois(d, r); break;
    case Suite::cogalois: run_cogalois(d, r); break;
    case Suite::cogenerate: run_cogenerate(d, r, options); break;
    case Suite::all: {
      bool any = false;
      for (Suite t : {Suite::structures, Suite::entwining, Suite::galois, Suite::cogalois, Suite::cogenerate}) {
        const std::string name(to_string(t));
        if (auto missing = missing_for(d, t)) {
          r.skip(name, "suite " + name, "not applicable: missing " + *missing);
          continue;
        }
        any = true;
        r.absorb(run_suite(d, t, options), name + "/");
      }
      if (!any) throw MissingSection("algebra");
      break;
    }
  }
  return r;
}

std::string render_json(const Report& r, const Field& f) {
  json checks = json::array();
  for (const Check& c : r.checks()) {
    json j = {{"id", c.id}, {"anchor", c.anchor}, {"status", std::string(to_string(c.status))}};
    if (!c.detail.empty()) j["detail"] = c.detail;
    if (c.residual && !c.residual->is_zero()) j["residual"] = matrix_json(f, *c.residual);
    checks.push_back(j);
  }
  json facts = json::object();
  for (const auto& [k, v] : r.facts()) {
    if (auto b = std::get_if<bool>(&v)) facts[k] = *b;
    else if (auto i = std::get_if<std::int64_t>(&v)) facts[k] = *i;
    else facts[k] = std::get<std::string>(v);
  }
  json artifacts = json::object();
  for (const auto& [k, m] : r.artifacts()) artifacts[k] = matrix_json(f, m);
  json out = {{"suite", r.name()},       {"field", f.name()}, {"verdict", r.passed() ? "pass" : "fail"},
              {"checks", checks},        {"facts", facts},    {"artifacts", artifacts}};
  return out.dump(2) + "\n";
}

std::string render_text(const Report& r, const Field& f) {
  std::size_t failed = 0, skipped = 0;
  for (const Check& c : r.checks()) {
    failed += c.status == Status::fail;
    skipped += c.status == Status::skipped;
  }
  std::string out = "suite " + r.name() + " over " + f.name() + ": " + (r.passed() ? "PASS" : "FAIL") + " (" +
                    std::to_string(r.checks().size()) + " checks, " + std::to_string(failed) + " failed, " +
                    std::to_string(skipped) + " skipped)\n";
  for (const Check& c : r.checks()) {
    const char* tag = c.status == Status::pass ? "pass" : c.status == Status::fail ? "FAIL" : "skip";
    out += "  " + std::string(tag) + "  " + c.id + "  [" + c.anchor + "]";
    if (!c.detail.empty()) out += "  " + c.detail;
    out += "\n";
    if (c.residual && !c.residual->is_zero())
      out += "        residual has " + std::to_string(c.residual->nonzero_count()) + " nonzero entries\n";
  }
  if (!r.facts().empty()) {
    out += "facts:\n";
    for (const auto& [k, v] : r.facts()) out += "  " + k + " = " + fact_text(v) + "\n";
  }
  if (!r.artifacts().empty()) {
    out += "artifacts:\n";
    for (const auto& [k, m] : r.artifacts())
      out += "  " + k + ": " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + "\n";
  }
  return out;
}

}  // namespace entwine

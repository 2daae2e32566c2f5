#include <gtest/gtest.h>

#include <json.hpp>

#include "entwine/catalogue.hpp"
#include "entwine/error.hpp"
#include "entwine/suites.hpp"
#include "entwine/tensor.hpp"
#include "instances.hpp"
#include "oracle.hpp"

using namespace entwine;
using json = nlohmann::json;

namespace {

const Field Q = Field::rational();

bool fact_bool(const Report& r, const std::string& key) {
  const FactValue* v = r.fact(key);
  EXPECT_NE(v, nullptr) << key;
  return v && std::get<bool>(*v);
}

TEST(Suites, Z2SelfExtensionGalois) {
  const Document d = build_example("trivial-hopf-galois", {{"group", "Z2"}});
  const Report r = run_suite(d, Suite::galois);
  EXPECT_TRUE(r.passed());
  ASSERT_NE(r.artifact("galois/tau"), nullptr);
  ASSERT_NE(r.artifact("psi"), nullptr);
  const HopfAlgebra h = oracle::cyclic_group_algebra(Q, 2);
  EXPECT_EQ(*r.artifact("psi"), oracle::hopf_psi(h, 2, h.coalgebra.comult));
  EXPECT_TRUE(r.passed("left canonical/psi∘can_L = can"));
  EXPECT_TRUE(r.passed("hopf psi = canonical psi"));

  const json j = json::parse(render_json(r, d.field));
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["suite"], "galois");
  EXPECT_EQ(j["artifacts"]["galois/tau"]["rows"], 4);
  for (const auto& c : j["checks"]) EXPECT_FALSE(c["anchor"].get<std::string>().empty());
}

TEST(Suites, GroundComoduleIsNotGalois) {
  const Document d = build_example("ground-comodule", {{"group", "Z2"}});
  const Report r = run_suite(d, Suite::galois);
  EXPECT_FALSE(r.passed());
  EXPECT_FALSE(r.passed("galois/can bijective"));
  const FactValue* msg = r.fact("not_galois");
  ASSERT_NE(msg, nullptr);
  EXPECT_NE(std::get<std::string>(*msg).find("rank 1"), std::string::npos);
  EXPECT_EQ(std::get<std::int64_t>(*r.fact("galois/can_rank")), 1);
  EXPECT_EQ(json::parse(render_json(r, d.field))["verdict"], "fail");
}

TEST(Suites, MissingSections) {
  Document d = build_example("group-algebra", {{"group", "Z2"}});
  d.coalgebra.reset();
  d.antipode.reset();
  d.space_c.reset();
  d.grouplikes.clear();
  try {
    run_suite(d, Suite::cogalois);
    FAIL();
  } catch (const MissingSection& e) {
    EXPECT_EQ(e.section(), "action");
    EXPECT_STREQ(e.what(), "MissingSection: action");
  }
  EXPECT_THROW(run_suite(d, Suite::galois), MissingSection);
  EXPECT_THROW(run_suite(d, Suite::cogenerate), MissingSection);
  EXPECT_THROW(run_suite(d, Suite::entwining), MissingSection);
  EXPECT_TRUE(run_suite(d, Suite::structures).passed());
  const Report all = run_suite(d, Suite::all);
  EXPECT_TRUE(all.passed());
  EXPECT_EQ(all.find("cogalois")->status, Status::skipped);
}

TEST(Suites, CogaloisOnGroupCoextension) {
  const Report r = run_suite(build_example("group-coextension", {{"group", "S3"}}), Suite::cogalois);
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.passed("hopf coideal"));
  EXPECT_EQ(std::get<std::int64_t>(*r.fact("uniqueness/solution_space_dim")), 0);
}

TEST(Suites, CogenerateVerdicts) {
  const Report s3 = run_suite(build_example("coset-coideal"), Suite::cogenerate);
  EXPECT_TRUE(s3.passed());
  EXPECT_TRUE(s3.passed("intersection/equality"));
  const Document z4 = build_example("coset-coideal", {{"group", "Z4"}});
  const Report r = run_suite(z4, Suite::cogenerate);
  EXPECT_FALSE(r.passed("cogeneration/cogenerates"));
  EXPECT_EQ(std::get<std::string>(*r.fact("cogeneration/verdict")), "does-not-cogenerate");
  EXPECT_EQ(r.find("intersection/equality")->status, Status::skipped);
  EXPECT_TRUE(r.passed("intersection/inclusion"));
  const Report cut = run_suite(z4, Suite::cogenerate, {1});
  EXPECT_EQ(std::get<std::string>(*cut.fact("cogeneration/verdict")), "inconclusive-at-cutoff");
}

TEST(Suites, EntwiningSuiteFromPsiAndFromHopf) {
  const Report flip = run_suite(build_example("flip-entwining", {{"group", "Z3"}}), Suite::entwining);
  EXPECT_TRUE(flip.passed());
  const Report sweedler = run_suite(build_example("sweedler-h4"), Suite::entwining);
  EXPECT_TRUE(sweedler.passed());
  EXPECT_TRUE(sweedler.passed("psi∘psi⁻¹ = id"));
  EXPECT_TRUE(sweedler.passed("structure maps/round trip"));
}

TEST(Suites, BrokenPsiFailsWithResidual) {
  Document d = build_example("flip-entwining", {{"group", "Z2"}});
  d.psi->set(0, 0, (*d.psi)(0, 0) + 1);
  const Report r = run_suite(d, Suite::entwining);
  EXPECT_FALSE(r.passed());
  bool has_residual = false;
  for (const Check& c : r.checks())
    if (c.status == Status::fail && c.residual && !c.residual->is_zero()) has_residual = true;
  EXPECT_TRUE(has_residual);
  const json j = json::parse(render_json(r, d.field));
  bool json_residual = false;
  for (const auto& c : j["checks"]) json_residual |= c.contains("residual");
  EXPECT_TRUE(json_residual);
}

// The exactness of the differential sequence and bijectivity of can must agree
// on every catalogue instance that carries a coaction.
TEST(Suites, ExactIffGaloisAcrossTheCatalogue) {
  std::size_t positive = 0, negative = 0;
  for (const auto& inst : instances::all()) {
    const Document d = build_example(inst.name, inst.params);
    if (!d.coaction) continue;
    const Report r = run_suite(d, Suite::galois);
    const bool galois = fact_bool(r, "galois/galois");
    EXPECT_EQ(fact_bool(r, "sequence/exact"), galois) << inst.label();
    EXPECT_TRUE(r.passed("sequence/exact iff Galois")) << inst.label();
    (galois ? positive : negative) += 1;
  }
  EXPECT_GT(positive, 0u);
  EXPECT_GT(negative, 0u);
}

TEST(Suites, ReportsAreDeterministic) {
  const Document d = build_example("sweedler-h4");
  EXPECT_EQ(render_json(run_suite(d, Suite::all), d.field), render_json(run_suite(d, Suite::all), d.field));
  const std::string text = render_text(run_suite(d, Suite::galois), d.field);
  EXPECT_EQ(text.rfind("suite galois over Q: PASS", 0), 0u) << text;
}

TEST(Suites, ParseSuiteNames) {
  for (const char* n : {"structures", "entwining", "galois", "cogalois", "cogenerate", "all"})
    EXPECT_EQ(to_string(parse_suite(n)), n);
  EXPECT_THROW(parse_suite("everything"), std::invalid_argument);
}

}  // namespace

#include <gtest/gtest.h>

#include "entwine/cogenerate.hpp"
#include "entwine/error.hpp"
#include "entwine/tensor.hpp"
#include "oracle.hpp"

using namespace entwine;
using oracle::basis_vector;

namespace {

const Field Q = Field::rational();

// Delta_{m-1} expanded left to right, then the projections: the composite
// as written, with no recursion shared with the library.
Matrix wp_direct(const FiniteCoalgebra& c, const Matrix& p1, const Matrix& p2, const Chain& chain) {
  const Field& f = c.field;
  Matrix d = id(f, c.dim());
  std::size_t width = 1;
  for (std::size_t k = 1; k < chain.size(); ++k) {
    d = kron(c.comult, id(f, width)) * d;
    width *= c.dim();
  }
  Matrix p = chain[0] == 1 ? p1 : p2;
  for (std::size_t k = 1; k < chain.size(); ++k) p = kron(p, chain[k] == 1 ? p1 : p2);
  return p * d;
}

// Intersection of kernels over every chain with at most n factors.
Subspace brute_kernel(const FiniteCoalgebra& c, const Subspace& i1, const Subspace& i2, std::size_t n) {
  const Matrix p1 = quotient(c.dim(), i1).projection, p2 = quotient(c.dim(), i2).projection;
  Subspace k = Subspace::full(c.field, c.dim());
  for (std::size_t m = 1; m <= n; ++m)
    for (std::size_t bits = 0; bits < (1u << m); ++bits) {
      Chain chain;
      for (std::size_t t = 0; t < m; ++t) chain.push_back((bits >> t) & 1 ? 2 : 1);
      k = intersect(k, kernel(wp_direct(c, p1, p2, chain)));
    }
  return k;
}

struct GroupCase {
  HopfAlgebra h;
  Subspace i1, i2;
};

GroupCase s3_case() {
  auto t = oracle::s3_table();
  // <(01)> = {e, (01)}, <(012)> = {e, (012), (021)}
  return {oracle::group_algebra(Q, t), oracle::coset_coideal(Q, t, {0, 1}), oracle::coset_coideal(Q, t, {0, 4, 5})};
}

GroupCase z4_case() {
  auto t = oracle::cyclic_table(4);
  Subspace i = oracle::coset_coideal(Q, t, {0, 2});
  return {oracle::group_algebra(Q, t), i, i};
}

}  // namespace

TEST(WpMatrix, Examples) {
  HopfAlgebra z2 = oracle::cyclic_group_algebra(Q, 2);
  Subspace zero = Subspace::zero(Q, 2);
  EXPECT_TRUE(wp_matrix(z2.coalgebra, zero, zero, {1}).is_identity());
  Subspace i = Subspace::span(Q, 2, {Vector{-1, 1}});
  EXPECT_EQ(kernel(wp_matrix(z2.coalgebra, i, zero, {1})), i);
  EXPECT_THROW(wp_matrix(z2.coalgebra, i, zero, {}), PreconditionViolation);
  EXPECT_THROW(wp_matrix(z2.coalgebra, i, zero, {3}), PreconditionViolation);
  EXPECT_THROW(wp_matrix(z2.coalgebra, Subspace::span(Q, 2, {Vector{1, 0}}), zero, {1}), NotCoideal);

  GroupCase s3 = s3_case();
  Matrix w12 = wp_matrix(s3.h.coalgebra, s3.i1, s3.i2, {1, 2});
  EXPECT_EQ(w12.rows(), 6u);  // 3 cosets x 2 cosets
  Subspace k12 = kernel(w12);
  Subspace k1 = kernel(wp_matrix(s3.h.coalgebra, s3.i1, s3.i2, {1}));
  Subspace k2 = kernel(wp_matrix(s3.h.coalgebra, s3.i1, s3.i2, {2}));
  EXPECT_LT(k12.dim(), k1.dim());
  EXPECT_LT(k12.dim(), k2.dim());
}

TEST(WpMatrix, MatchesDirectComposite) {
  for (const GroupCase& g : {s3_case(), z4_case()}) {
    const Matrix p1 = quotient(g.h.dim(), g.i1).projection, p2 = quotient(g.h.dim(), g.i2).projection;
    for (const Chain& chain : std::vector<Chain>{{1}, {2}, {1, 2}, {2, 1}, {2, 2, 1}, {1, 2, 1, 2}})
      EXPECT_EQ(wp_matrix(g.h.coalgebra, g.i1, g.i2, chain), wp_direct(g.h.coalgebra, p1, p2, chain));
  }
}

TEST(Cogeneration, S3GeneratingSubgroups) {
  GroupCase g = s3_case();
  CogenerationReport r = cogeneration_check(g.h.coalgebra, g.i1, g.i2, 7);
  EXPECT_EQ(r.verdict, Verdict::cogenerates);
  ASSERT_TRUE(r.zero_at.has_value());
  EXPECT_LE(*r.zero_at, 7u);
  EXPECT_TRUE(r.report.passed());
  ASSERT_EQ(r.kernels.size(), 7u);
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(r.kernels[n - 1], brute_kernel(g.h.coalgebra, g.i1, g.i2, n)) << n;
}

TEST(Cogeneration, Z4NonGeneratingSubgroup) {
  GroupCase g = z4_case();
  CogenerationReport r = cogeneration_check(g.h.coalgebra, g.i1, g.i2, default_cutoff(g.h.coalgebra));
  EXPECT_EQ(r.cutoff, 5u);
  EXPECT_EQ(r.verdict, Verdict::does_not_cogenerate);
  EXPECT_FALSE(r.zero_at.has_value());
  EXPECT_EQ(r.dims(), (std::vector<std::size_t>{2, 2, 2, 2, 2}));
  EXPECT_TRUE(r.report.passed("K_n weakly decreasing"));
  EXPECT_FALSE(r.report.passed("cogenerates"));
  for (std::size_t n = 1; n <= 4; ++n) EXPECT_EQ(r.kernels[n - 1], brute_kernel(g.h.coalgebra, g.i1, g.i2, n));
  // a cutoff of 1 cannot see the fixed point
  EXPECT_EQ(cogeneration_check(g.h.coalgebra, g.i1, g.i2, 1).verdict, Verdict::inconclusive_at_cutoff);
}

TEST(Cogeneration, TrivialCoideals) {
  HopfAlgebra z3 = oracle::cyclic_group_algebra(Q, 3);
  Subspace zero = Subspace::zero(Q, 3);
  CogenerationReport r = cogeneration_check(z3.coalgebra, zero, zero, 4);
  EXPECT_EQ(r.verdict, Verdict::cogenerates);
  EXPECT_EQ(r.zero_at, 1u);
  EXPECT_THROW(cogeneration_check(z3.coalgebra, zero, zero, 0), PreconditionViolation);
}

TEST(CoinvariantIntersection, S3Equality) {
  GroupCase g = s3_case();
  ComoduleAlgebra x{g.h.algebra, g.h.coalgebra, g.h.coalgebra.comult};
  Report r = coinvariant_intersection_check(x, g.i1, g.i2, 7);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(r.find("equality")->status, Status::pass);
  // only e is fixed: the core of <(01)> is trivial, A3 is normal
  EXPECT_EQ(std::get<std::int64_t>(*r.fact("coinvariants_dim")), 1);
  EXPECT_EQ(std::get<std::int64_t>(*r.fact("coinvariants_1_dim")), 1);
  EXPECT_EQ(std::get<std::int64_t>(*r.fact("coinvariants_2_dim")), 3);
  EXPECT_EQ(std::get<std::int64_t>(*r.fact("intersection_dim")), 1);
}

TEST(CoinvariantIntersection, Z4InclusionOnly) {
  GroupCase g = z4_case();
  ComoduleAlgebra x{g.h.algebra, g.h.coalgebra, g.h.coalgebra.comult};
  Report r = coinvariant_intersection_check(x, g.i1, g.i2, 5);
  EXPECT_TRUE(r.passed("inclusion"));
  EXPECT_EQ(r.find("equality")->status, Status::skipped);
  EXPECT_FALSE(std::get<bool>(*r.fact("equal")));
  EXPECT_EQ(std::get<std::int64_t>(*r.fact("intersection_dim")), 2);
  EXPECT_EQ(std::get<std::int64_t>(*r.fact("coinvariants_dim")), 1);
}

TEST(CoinvariantIntersection, ZeroCoideal) {
  GroupCase g = s3_case();
  ComoduleAlgebra x{g.h.algebra, g.h.coalgebra, g.h.coalgebra.comult};
  Report r = coinvariant_intersection_check(x, Subspace::zero(Q, 6), g.i2, 7);
  EXPECT_TRUE(r.passed());
  EXPECT_EQ(std::get<std::int64_t>(*r.fact("coinvariants_1_dim")), 1);
  EXPECT_TRUE(std::get<bool>(*r.fact("equal")));
}

// Random pairs of subgroups of S3 and Z4 over GF(7): K_n never grows, the
// recursion agrees with brute force, and the inclusion always holds.
TEST(Property, KernelsAndInclusion) {
  Field f = Field::prime(7);
  std::mt19937 rng(77);
  const std::vector<std::vector<std::size_t>> s3_subgroups{{0}, {0, 1}, {0, 2}, {0, 3}, {0, 4, 5}, {0, 1, 2, 3, 4, 5}};
  const std::vector<std::vector<std::size_t>> z4_subgroups{{0}, {0, 2}, {0, 1, 2, 3}};
  int trials = 0;
  for (int trial = 0; trial < 20; ++trial) {
    const bool s3 = trial % 2 == 0;
    auto t = s3 ? oracle::s3_table() : oracle::cyclic_table(4);
    const auto& subs = s3 ? s3_subgroups : z4_subgroups;
    std::uniform_int_distribution<std::size_t> pick(0, subs.size() - 1);
    HopfAlgebra h = oracle::group_algebra(f, t);
    Subspace i1 = oracle::coset_coideal(f, t, subs[pick(rng)]), i2 = oracle::coset_coideal(f, t, subs[pick(rng)]);
    CogenerationReport r = cogeneration_check(h.coalgebra, i1, i2, 3);
    ASSERT_TRUE(r.report.passed("K_n weakly decreasing"));
    for (std::size_t n = 1; n <= 3; ++n) ASSERT_EQ(r.kernels[n - 1], brute_kernel(h.coalgebra, i1, i2, n));
    ComoduleAlgebra x{h.algebra, h.coalgebra, h.coalgebra.comult};
    Report p = coinvariant_intersection_check(x, i1, i2, 3);
    ASSERT_TRUE(p.passed());
    ++trials;
  }
  EXPECT_GE(trials, 20);
}

#include <gtest/gtest.h>

#include "gmlag/gmlag.hpp"

using namespace gmlag;

namespace {

Subspace plane(std::initializer_list<std::size_t> idx) { return Subspace::coordinate(kV6, idx); }

}  // namespace

TEST(Sigma, FivefoldHasEmptyExceptionalLoci) {
  const FibrationContext ctx(fixtures::fivefold_lagrangian());
  Rng rng(71);
  for (int t = 0; t < 20; ++t) {
    EXPECT_EQ(sigma1_level(ctx, invariants::detail::random_in_v5(rng)), 0u);
    EXPECT_EQ(sigma2_level(ctx, invariants::detail::random_plane(rng, true)), 0u);
  }
}

TEST(Sigma, OmegaFixturePoints) {
  const LagrangianData ld = fixtures::omega_fourfold_lagrangian();
  const MultiVector omega6 = embed_v5(fixtures::omega());
  ASSERT_TRUE(ld.a.contains(omega6.coords()));
  ASSERT_TRUE(wedge_space(line(unit_vector(kV6, 0)), detail::v5_in_v6(), 2).contains(omega6.coords()));
  EXPECT_GE(sigma1_level(ld, unit_vector(kV6, 0)), 1u);

  const Subspace v3 = plane({0, 1, 3});
  ASSERT_TRUE(wedge_space(detail::v5_in_v6(), v3, 2).contains(omega6.coords()));
  EXPECT_GE(sigma2_level(ld, v3), 1u);
}

TEST(Sigma, ExceptionalLociLieInStrata) {
  const LagrangianData ld = fixtures::omega_fourfold_lagrangian();
  const FibrationContext ctx(ld);
  Rng rng(72);
  std::vector<RatVector> points = {unit_vector(kV6, 0)};
  for (int t = 0; t < 20; ++t) points.push_back(invariants::detail::random_in_v5(rng));
  for (const auto& v : points)
    if (sigma1_level(ctx, v) >= 1) {
      EXPECT_GE(y_stratum(ctx.a(), v), 1u);
    }
  std::vector<Subspace> planes = {plane({0, 1, 3})};
  for (int t = 0; t < 20; ++t) planes.push_back(invariants::detail::random_plane(rng, true));
  for (const auto& p : planes)
    if (sigma2_level(ctx, p) >= 1) {
      EXPECT_GE(z_stratum(ctx.a(), p), 1u);
    }
}

TEST(Sigma, RejectsQueriesOutsideV5) {
  const LagrangianData ld = fixtures::fivefold_lagrangian();
  EXPECT_THROW(sigma1_level(ld, unit_vector(kV6, 5)), InputError);
  EXPECT_THROW(sigma2_level(ld, plane({0, 1, 5})), InputError);
  EXPECT_THROW(fibration1_fiber(ld, unit_vector(kV6, 5)), InputError);
  EXPECT_THROW(fibration2_fiber(ld, plane({0, 1, 5})), InputError);
  LagrangianData inf = ld;
  inf.a1 = A1Tag::Infinity;
  EXPECT_THROW(fibration1_fiber(inf, unit_vector(kV6, 0)), InputError);
}

TEST(Fibration1, FivefoldGenericPointAndYPoint) {
  const FibrationContext ctx(fixtures::fivefold_lagrangian());
  Rng rng(73);
  int generic = 0;
  for (int t = 0; t < 10; ++t) {
    const RatVector v = invariants::detail::random_in_v5(rng);
    const FiberReport r = fibration1_fiber(ctx, v);
    ASSERT_TRUE(r.agreement);
    if (r.stratum_prediction != 0) continue;
    ++generic;
    EXPECT_EQ(r.ambient_proj_dim, 3);
    EXPECT_EQ(r.corank, 0u);
  }
  EXPECT_GT(generic, 0);

  const FiberReport y = fibration1_fiber(ctx, unit_vector(kV6, 0));
  EXPECT_EQ(y.stratum_prediction, 1u);
  EXPECT_EQ(y.ambient_proj_dim, 3);
  EXPECT_EQ(y.corank, 1u);
  EXPECT_TRUE(y.agreement);
}

TEST(Fibration1, OmegaSigmaPointBumpsAmbient) {
  const LagrangianData ld = fixtures::omega_fourfold_lagrangian();
  const FiberReport r = fibration1_fiber(ld, unit_vector(kV6, 0));
  ASSERT_EQ(r.predicted_n, 4);
  EXPECT_EQ(r.sigma_level, 1u);
  EXPECT_EQ(r.ambient_proj_dim, r.predicted_n - 1);
  EXPECT_EQ(static_cast<int>(r.corank), static_cast<int>(r.stratum_prediction) - 1);
  EXPECT_TRUE(r.formulas_hold);
  EXPECT_TRUE(r.agreement);
}

TEST(Fibration2, FivefoldGenericPlaneAndZPlane) {
  const FibrationContext ctx(fixtures::fivefold_lagrangian());
  Rng rng(74);
  int generic = 0;
  for (int t = 0; t < 10; ++t) {
    const FiberReport r = fibration2_fiber(ctx, invariants::detail::random_plane(rng, true));
    ASSERT_TRUE(r.agreement);
    if (r.stratum_prediction != 0) continue;
    ++generic;
    EXPECT_EQ(r.ambient_proj_dim, 2);
    EXPECT_EQ(r.corank, 0u);
  }
  EXPECT_GT(generic, 0);

  const FiberReport z = fibration2_fiber(ctx, plane({0, 1, 2}));
  EXPECT_EQ(z.stratum_prediction, 1u);
  EXPECT_EQ(z.corank, 1u);
  EXPECT_EQ(z.ambient_proj_dim, 2);
  EXPECT_TRUE(z.agreement);
}

TEST(Fibration2, OmegaSigmaPlane) {
  const FiberReport r = fibration2_fiber(fixtures::omega_fourfold_lagrangian(), plane({0, 1, 3}));
  EXPECT_EQ(r.sigma_level, 1u);
  EXPECT_EQ(r.ambient_proj_dim, r.predicted_n - 2);
  EXPECT_TRUE(r.agreement);
}

TEST(Fibrations, SpecialTagShiftsTheAmbient) {
  LagrangianData ld = fixtures::fivefold_lagrangian();
  ld.a1 = A1Tag::One;
  const FiberReport r = fibration1_fiber(ld, unit_vector(kV6, 1));
  EXPECT_EQ(r.predicted_n, 6);
  EXPECT_TRUE(r.agreement);
  const FiberReport r2 = fibration2_fiber(ld, plane({1, 2, 4}));
  EXPECT_TRUE(r2.agreement);
}

// Degenerate inputs: the two paths are pure linear algebra and are still expected to agree.
TEST(Fibrations, DegenerateLagrangiansAgree) {
  Rng rng(75);
  for (const LagrangianData& ld : {fixtures::l3v5_lagrangian(), fixtures::e1_l2v6_lagrangian()}) {
    const FibrationContext ctx(ld);
    for (int t = 0; t < 10; ++t) {
      const FiberReport r1 = fibration1_fiber(ctx, invariants::detail::random_in_v5(rng));
      EXPECT_TRUE(r1.agreement) << "ambient " << r1.ambient_proj_dim << " vs " << r1.closed_form_ambient << ", corank "
                                << r1.corank << " vs " << r1.closed_form_corank;
      const FiberReport r2 = fibration2_fiber(ctx, invariants::detail::random_plane(rng, true));
      EXPECT_TRUE(r2.agreement) << "ambient " << r2.ambient_proj_dim << " vs " << r2.closed_form_ambient << ", corank "
                                << r2.corank << " vs " << r2.closed_form_corank;
    }
    EXPECT_EQ(fibration1_fiber(ctx, unit_vector(kV6, 0)).degenerate, ctx.predicted_n() < 1);
  }
}

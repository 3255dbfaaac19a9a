#include <gtest/gtest.h>

#include "gmlag/gmlag.hpp"
#include "oracles.hpp"

using namespace gmlag;

namespace {

Subspace l3v5() { return fixtures::l3v5_lagrangian().a; }
Subspace fivefold_a() { return fixtures::fivefold_lagrangian().a; }

// Monomials e_abc counted directly from index sets.
std::size_t count_monomials(unsigned allowed, unsigned v3, int min_in_v3, bool forbid6) {
  const ExteriorBasis& b = ExteriorBasis::get(kV6, 3);
  std::size_t n = 0;
  for (std::size_t k = 0; k < b.size(); ++k) {
    const unsigned m = b.mask(k);
    if ((m & ~allowed) != 0) continue;
    if (forbid6 && (m & (1U << 5))) continue;
    if (__builtin_popcount(m & v3) >= min_in_v3) ++n;
  }
  return n;
}

Subspace random_v3_in_v5(Rng& rng) {
  for (;;) {
    const Subspace s = Subspace::span(
        {invariants::detail::random_in_v5(rng), invariants::detail::random_in_v5(rng), invariants::detail::random_in_v5(rng)},
        kV6);
    if (s.dim() == 3) return s;
  }
}

}  // namespace

TEST(YStratum, TrivialLagrangians) {
  EXPECT_EQ(y_stratum(l3v5(), unit_vector(kV6, 0)), 6u);
  EXPECT_EQ(y_stratum(l3v5(), unit_vector(kV6, 5)), 0u);
  EXPECT_EQ(y_stratum(fixtures::e1_l2v6_lagrangian().a, unit_vector(kV6, 1)), 4u);
  // For A = e1∧Λ²V6 every point lies in Y^{≥4}.
  Rng rng(61);
  for (int t = 0; t < 10; ++t) EXPECT_GE(y_stratum(fixtures::e1_l2v6_lagrangian().a, rng.nonzero_int_vector(kV6, 3)), 4u);
}

TEST(YStratum, RejectsBadInput) {
  EXPECT_THROW(y_stratum(l3v5(), RatVector(kV6, Rat(0))), InputError);
  EXPECT_THROW(y_stratum(Subspace::full(3), unit_vector(kV6, 0)), InputError);
}

TEST(YDualStratum, Examples) {
  EXPECT_EQ(y_dual_stratum(l3v5(), detail::v5_in_v6()), 10u);
  EXPECT_EQ(y_dual_stratum(l3v5(), Subspace::coordinate(kV6, {1, 2, 3, 4, 5})), static_cast<std::size_t>(oracle::binomial(4, 3)));
  EXPECT_EQ(y_dual_stratum(fivefold_a(), detail::v5_in_v6()), 0u);
  EXPECT_EQ(y_dual_stratum(fivefold_a(), detail::v5_in_v6()), dim_report(fixtures::fivefold_lagrangian()).dim_a_cap_l3v5);
}

TEST(YDualStratum, MatchesYStratumOfDual) {
  Rng rng(62);
  const LagrangianData ld = fixtures::threefold_lagrangian();
  const Subspace dual = dualize(ld).a;
  for (int t = 0; t < 20; ++t) {
    const Subspace h = hyperplane_from_form(rng.nonzero_int_vector(kV6, 2));
    ASSERT_EQ(y_dual_stratum(ld.a, h), y_stratum(dual, dual_point(h)));
  }
}

TEST(YHat, Examples) {
  EXPECT_EQ(y_hat_member(l3v5(), unit_vector(kV6, 0), detail::v5_in_v6()), 6u);
  Rng rng(63);
  int zero = 0;
  for (int t = 0; t < 10; ++t) zero += y_hat_member(fivefold_a(), invariants::detail::random_in_v5(rng), detail::v5_in_v6()) == 0;
  EXPECT_GE(zero, 9);
  EXPECT_THROW(y_hat_member(l3v5(), unit_vector(kV6, 5), detail::v5_in_v6()), InputError);
}

TEST(ZStratum, L3V5Examples) {
  const unsigned all = 0b111111U;
  const Subspace v123 = Subspace::coordinate(kV6, {0, 1, 2});
  // Oracle: monomials with at least two indices in V₃ and none equal to 6.
  EXPECT_EQ(count_monomials(all, 0b000111U, 2, true), 7u);
  EXPECT_EQ(z_stratum(l3v5(), v123), 7u);

  const Subspace v456 = Subspace::coordinate(kV6, {3, 4, 5});
  const std::size_t direct = count_monomials(all, 0b111000U, 2, true);
  EXPECT_EQ(z_stratum(l3v5(), v456), direct);
  // Dual side: A^⊥ is spanned by the e6 monomials and V₃^⊥ = span(e1, e2, e3).
  EXPECT_EQ(z_stratum(dualize(fixtures::l3v5_lagrangian()).a, annihilator(v456)), direct);
}

TEST(ZStratum, ContainsV5WedgeOnL3V5) {
  Rng rng(64);
  for (int t = 0; t < 10; ++t) {
    const Subspace v3 = random_v3_in_v5(rng);
    const Subspace expected = wedge_space(detail::v5_in_v6(), v3, 2);
    ASSERT_EQ(expected.dim(), 7u);
    ASSERT_EQ(subspace_intersect(l3v5(), wedge_space(Subspace::full(kV6), v3, 2)), expected);
    ASSERT_EQ(z_stratum(l3v5(), v3), 7u);
  }
}

TEST(ZStratum, RejectsWrongDimension) {
  EXPECT_THROW(z_stratum(l3v5(), Subspace::coordinate(kV6, {0, 1})), InputError);
}

TEST(LineCertificate, L3V5VanishesOnlyWhereTheLineMeetsV5) {
  Rng rng(65);
  for (int t = 0; t < 5; ++t) {
    RatVector base = rng.int_vector(kV6, 3);
    RatVector dir = rng.int_vector(kV6, 3);
    base[5] = rng.uniform(1, 4);
    dir[5] = rng.uniform(1, 4);
    if (rank(RatMatrix::from_rows({base, dir}, kV6)) < 2) continue;
    const LineDegreeCertificate c = y_line_certificate(l3v5(), base, dir, rng.next(), 20);
    ASSERT_FALSE(c.whole_line);
    const Rat hit = -base[5] / dir[5];
    ASSERT_EQ(c.rational_roots, RatVector{hit});
    ASSERT_EQ(squarefree_part(c.poly).degree(), 1);
    ASSERT_GE(c.checked_points, 20u);
  }
}

TEST(LineCertificate, FivefoldSexticAndQuartic) {
  Rng rng(66);
  const Subspace a = fivefold_a();
  const LineDegreeCertificate y = y_line_certificate(a, rng.int_vector(kV6, 3), rng.int_vector(kV6, 3), 1, 20);
  EXPECT_EQ(y.kind, StratumKind::Y);
  EXPECT_EQ(y.degree, 6);
  EXPECT_GE(y.checked_points, 20u);
  std::vector<RatVector> u;
  for (int i = 0; i < 4; ++i) u.push_back(rng.int_vector(kV6, 3));
  const LineDegreeCertificate z = z_pencil_certificate(a, u, 2, 20);
  EXPECT_EQ(z.kind, StratumKind::Z);
  EXPECT_EQ(z.degree, 4);
  EXPECT_GE(z.checked_points, 20u);
}

TEST(LineCertificate, RootsAreExactlyTheStratumPoints) {
  // Y line through the Y-point e1 of the fivefold fixture.
  const Subspace a = fivefold_a();
  ASSERT_EQ(y_stratum(a, unit_vector(kV6, 0)), 1u);
  Rng rng(67);
  const RatVector dir = rng.int_vector(kV6, 3);
  const LineDegreeCertificate c = y_line_certificate(a, unit_vector(kV6, 0), dir, 3, 20);
  bool has_zero = false;
  for (const Rat& r : c.rational_roots) {
    has_zero = has_zero || r == 0;
    EXPECT_GE(y_stratum(a, axpy(r, dir, unit_vector(kV6, 0))), 1u);
  }
  EXPECT_TRUE(has_zero);
}

TEST(Decomposables, Scan) {
  const std::vector<DecomposableHit> hits = scan_decomposables(l3v5(), {unit_vector(kL3V6, 0)});
  ASSERT_EQ(hits.size(), 1u);
  EXPECT_EQ(hits[0].v3, Subspace::coordinate(kV6, {0, 1, 2}));

  const Subspace a = fivefold_a();
  Rng rng(68);
  std::vector<RatVector> candidates;
  for (int t = 0; t < 100; ++t) candidates.push_back(row_times(rng.nonzero_int_vector(10, 3), a.basis()));
  EXPECT_TRUE(scan_decomposables(a, candidates).empty());

  EXPECT_THROW(scan_decomposables(a, {unit_vector(kL3V6, 0)}), InputError);
}

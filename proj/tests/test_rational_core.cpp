#include <gtest/gtest.h>

#include "gmlag/gmlag.hpp"
#include "oracles.hpp"

using namespace gmlag;

namespace {

RatMatrix mat(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<RatVector> out;
  std::size_t cols = 0;
  for (const auto& r : rows) {
    RatVector v;
    for (long x : r) v.push_back(Rat(x));
    cols = v.size();
    out.push_back(v);
  }
  return RatMatrix::from_rows(out, cols);
}

RatVector vec(std::initializer_list<long> xs) {
  RatVector v;
  for (long x : xs) v.push_back(Rat(x));
  return v;
}

}  // namespace

TEST(ParseRat, AcceptsIntegersAndFractions) {
  EXPECT_EQ(parse_rat("3/6"), Rat(1, 2));
  EXPECT_EQ(parse_rat("-4"), Rat(-4));
  EXPECT_EQ(parse_rat("-10/4"), Rat(-5, 2));
  EXPECT_EQ(to_string(parse_rat("6/3")), "2");
  EXPECT_EQ(to_string(parse_rat("-2/6")), "-1/3");
}

TEST(ParseRat, RejectsMalformed) {
  for (const char* bad : {"1/0", "", "abc", "1.5", "1/", "/2", "--1", "1/-2", " 1"}) EXPECT_THROW(parse_rat(bad), InputError) << bad;
}

TEST(Rref, IdentityIsFixed) {
  const Rref r = rref(RatMatrix::identity(3));
  EXPECT_EQ(r.rank, 3u);
  EXPECT_EQ(r.reduced, RatMatrix::identity(3));
}

TEST(Rref, ProportionalRowsCollapse) {
  const Rref r = rref(mat({{1, 2}, {2, 4}}));
  EXPECT_EQ(r.rank, 1u);
  EXPECT_EQ(r.reduced, mat({{1, 2}}));
}

TEST(Rref, PermutationBecomesIdentity) {
  const Rref r = rref(mat({{0, 1}, {1, 0}}));
  EXPECT_EQ(r.rank, 2u);
  EXPECT_EQ(r.reduced, RatMatrix::identity(2));
}

TEST(Rref, MatchesTextbookEliminationOnRandomMatrices) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 8));
    const std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 10));
    const std::size_t r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(std::min(rows, cols))));
    RatMatrix m = oracle::random_low_rank(rng, rows, cols, r);
    // Scale a row by a fraction so the integer path sees denominators.
    for (std::size_t j = 0; j < cols; ++j) m(0, j) *= Rat(3, 7);
    const Rref got = rref(m);
    const RatMatrix want = oracle::rref(m);
    ASSERT_EQ(got.reduced, want) << "trial " << t;
    ASSERT_EQ(got.rank, want.rows());
    ASSERT_EQ(rref(got.reduced).reduced, got.reduced) << "rref is not idempotent";
  }
}

TEST(Determinant, MatchesLeibnizExpansion) {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    const RatMatrix m = oracle::random_matrix(rng, n, n, 4);
    ASSERT_EQ(determinant(m), oracle::leibniz_det(m));
  }
}

TEST(Inverse, IsTwoSided) {
  Rng rng(13);
  int done = 0;
  while (done < 50) {
    const RatMatrix m = oracle::random_matrix(rng, 5, 5, 3);
    if (determinant(m) == 0) {
      EXPECT_THROW(inverse(m), InputError);
      continue;
    }
    const RatMatrix inv = inverse(m);
    ASSERT_EQ(m * inv, RatMatrix::identity(5));
    ASSERT_EQ(inv * m, RatMatrix::identity(5));
    ++done;
  }
}

TEST(Subspace, IntersectExamples) {
  const Subspace a = Subspace::coordinate(3, {0, 1});
  const Subspace b = Subspace::coordinate(3, {1, 2});
  EXPECT_EQ(subspace_intersect(a, b), Subspace::coordinate(3, {1}));
  EXPECT_EQ(subspace_intersect(a, a), a);
  EXPECT_TRUE(subspace_intersect(Subspace::coordinate(2, {0}), Subspace::coordinate(2, {1})).is_zero());
}

TEST(Subspace, KernelAnnihilatorImageExamples) {
  EXPECT_EQ(kernel(RatMatrix(2, 2)), Subspace::full(2));
  EXPECT_EQ(annihilator(Subspace::coordinate(3, {0})), Subspace::coordinate(3, {1, 2}));
  EXPECT_EQ(image(mat({{1, 0}, {1, 0}})), Subspace::span({vec({1, 1})}, 2));
}

TEST(Subspace, SpanIsCanonical) {
  const Subspace s = Subspace::span({vec({2, 4, 0}), vec({1, 1, 1})}, 3);
  const Subspace t = Subspace::span({vec({0, 2, -2}), vec({3, 5, 1})}, 3);
  EXPECT_EQ(s, t);
  EXPECT_EQ(s.basis(), oracle::rref(s.basis()));
}

TEST(Subspace, GrassmannFormulaAndContainment) {
  Rng rng(14);
  for (int t = 0; t < 150; ++t) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 8));
    const Subspace a = Subspace::span(oracle::random_low_rank(rng, static_cast<std::size_t>(rng.uniform(0, 6)), n,
                                                              static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)))));
    const Subspace b = Subspace::span(oracle::random_low_rank(rng, static_cast<std::size_t>(rng.uniform(0, 6)), n,
                                                              static_cast<std::size_t>(rng.uniform(0, static_cast<long>(n)))));
    const Subspace cap = subspace_intersect(a, b);
    const Subspace sum = subspace_sum(a, b);
    ASSERT_EQ(cap.dim() + sum.dim(), a.dim() + b.dim());
    ASSERT_TRUE(a.contains(cap) && b.contains(cap));
    ASSERT_TRUE(sum.contains(a) && sum.contains(b));
    ASSERT_EQ(annihilator(annihilator(a)), a);
    ASSERT_EQ(annihilator(a).dim(), n - a.dim());
  }
}

TEST(Subspace, KernelVectorsAreKilled) {
  Rng rng(15);
  for (int t = 0; t < 100; ++t) {
    const RatMatrix m = oracle::random_low_rank(rng, 5, 7, static_cast<std::size_t>(rng.uniform(0, 5)));
    const Subspace k = kernel(m);
    ASSERT_EQ(k.dim() + rank(m), 7u);
    for (const auto& x : k.basis_vectors()) ASSERT_TRUE(is_zero(m * x));
  }
}

TEST(Subspace, CoordinatesRejectOutsideVectors) {
  const Subspace s = Subspace::coordinate(3, {0});
  EXPECT_EQ(s.coordinates(vec({5, 0, 0})), vec({5}));
  EXPECT_THROW(s.coordinates(vec({0, 1, 0})), InputError);
  EXPECT_THROW(subspace_intersect(s, Subspace::full(2)), InputError);
}

TEST(SolveRowCombinations, ReproducesTargets) {
  Rng rng(16);
  for (int t = 0; t < 50; ++t) {
    const RatMatrix rows = oracle::random_low_rank(rng, 6, 8, 4);
    const RatMatrix targets = oracle::random_matrix(rng, 3, 6, 3) * rows;
    const auto c = solve_row_combinations(rows, targets);
    ASSERT_TRUE(c.has_value());
    ASSERT_EQ(*c * rows, targets);
  }
  EXPECT_FALSE(solve_row_combinations(mat({{1, 0}}), mat({{0, 1}})).has_value());
}

TEST(Polynomial, DivisionIdentity) {
  Rng rng(17);
  for (int t = 0; t < 100; ++t) {
    const Poly a(rng.int_vector(static_cast<std::size_t>(rng.uniform(1, 9)), 5));
    Poly b(rng.int_vector(static_cast<std::size_t>(rng.uniform(1, 5)), 5));
    if (b.is_zero()) b = Poly::constant(1);
    const PolyDivMod qr = divmod(a, b);
    ASSERT_EQ(qr.quotient * b + qr.remainder, a);
    ASSERT_LT(qr.remainder.degree(), b.degree() == 0 ? 0 : b.degree());
  }
}

TEST(Polynomial, InterpolationRecoversCoefficients) {
  Rng rng(18);
  for (int t = 0; t < 50; ++t) {
    const Poly p(rng.int_vector(7, 6));
    RatVector xs;
    RatVector ys;
    for (long x = -3; x <= 3; ++x) {
      xs.push_back(Rat(x));
      ys.push_back(p(Rat(x)));
    }
    ASSERT_EQ(interpolate(xs, ys), p);
  }
}

TEST(Polynomial, SquarefreeAndRationalRoots) {
  const Poly f = Poly::linear(-1, 2);                   // 2t − 1
  const Poly g = Poly::linear(3, 1);                    // t + 3
  const Poly h(RatVector{Rat(1), Rat(0), Rat(1)});      // t² + 1
  const Poly p = pow(f, 3) * g * h * Poly::constant(6);
  const auto parts = squarefree_decomposition(p);
  Poly product = Poly::constant(1);
  for (const auto& [factor, mult] : parts) product = product * pow(factor, mult);
  EXPECT_EQ(product.monic(), p.monic());
  EXPECT_EQ(squarefree_part(p).monic(), (f * g * h).monic());
  EXPECT_EQ(multiplicity(p, f), 3u);
  const RationalRoots rr = rational_roots(p);
  EXPECT_TRUE(rr.complete);
  EXPECT_EQ(rr.roots, (RatVector{Rat(-3), Rat(1, 2)}));
}

TEST(Rng, IsDeterministicAcrossInstances) {
  Rng a(99);
  Rng b(99);
  for (int i = 0; i < 20; ++i) ASSERT_EQ(a.next(), b.next());
  Rng c(5);
  for (int i = 0; i < 1000; ++i) {
    const long x = c.uniform(-3, 3);
    ASSERT_GE(x, -3);
    ASSERT_LE(x, 3);
  }
}

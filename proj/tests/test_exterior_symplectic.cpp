#include <gtest/gtest.h>

#include "gmlag/gmlag.hpp"
#include "oracles.hpp"

using namespace gmlag;

namespace {

MultiVector mono(const std::string& label) { return MultiVector::from_label(kV6, label); }

// Coefficient of e123456 in ξ∧η, expanded monomial by monomial with the inversion-count sign.
Rat omega_oracle(const RatVector& xi, const RatVector& eta) {
  const ExteriorBasis& b = ExteriorBasis::get(kV6, 3);
  Rat total = 0;
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (xi[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (eta[j] == 0) continue;
      total += xi[i] * eta[j] * oracle::monomial_wedge_sign(b.indices(i), b.indices(j));
    }
  }
  return total;
}

MultiVector random_multivector(Rng& rng, int degree) {
  return MultiVector(kV6, degree, rng.int_vector(ExteriorBasis::get(kV6, degree).size(), 2));
}

}  // namespace

TEST(Wedge, MonomialExamples) {
  const MultiVector e12 = mono("12");
  EXPECT_EQ(e12.wedge(mono("3")), mono("123"));
  EXPECT_EQ(mono("123").wedge(mono("456")), mono("123456"));
  EXPECT_EQ(mono("135").wedge(mono("246")), Rat(-1) * mono("123456"));
  EXPECT_TRUE(mono("12").wedge(mono("2")).is_zero());
}

TEST(Wedge, MonomialSignsMatchInversionCount) {
  for (int p = 0; p <= 3; ++p) {
    for (int q = 0; q + p <= kV6; ++q) {
      const ExteriorBasis& bp = ExteriorBasis::get(kV6, p);
      const ExteriorBasis& bq = ExteriorBasis::get(kV6, q);
      for (std::size_t i = 0; i < bp.size(); ++i) {
        for (std::size_t j = 0; j < bq.size(); ++j) {
          const MultiVector w = MultiVector::monomial(kV6, bp.indices(i)).wedge(MultiVector::monomial(kV6, bq.indices(j)));
          const int s = oracle::monomial_wedge_sign(bp.indices(i), bq.indices(j));
          const ExteriorBasis& bpq = ExteriorBasis::get(kV6, p + q);
          Rat coeff = 0;
          for (std::size_t k = 0; k < bpq.size(); ++k) coeff += w[k];
          ASSERT_EQ(coeff, Rat(s)) << p << " " << q << " " << i << " " << j;
        }
      }
    }
  }
}

TEST(Wedge, AssociativeAndGradedCommutative) {
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    const MultiVector a = random_multivector(rng, 1);
    const MultiVector b = random_multivector(rng, 2);
    const MultiVector c = random_multivector(rng, 2);
    ASSERT_EQ(a.wedge(b).wedge(c), a.wedge(b.wedge(c)));
    ASSERT_EQ(a.wedge(b), b.wedge(a));                   // (−1)^{1·2} = +1
    const MultiVector d = random_multivector(rng, 3);
    const MultiVector e = random_multivector(rng, 3);
    ASSERT_EQ(d.wedge(e), Rat(-1) * e.wedge(d));         // (−1)^{3·3} = −1
  }
}

TEST(SymplecticForm, Examples) {
  EXPECT_EQ(symplectic_form_l3v6(mono("123"), mono("456")), Rat(1));
  EXPECT_EQ(symplectic_form_l3v6(mono("123"), mono("124")), Rat(0));
  EXPECT_EQ(symplectic_form_l3v6(mono("135"), mono("246")), Rat(-1));
}

TEST(SymplecticForm, MatchesMonomialExpansionAndIsAlternating) {
  Rng rng(22);
  for (int t = 0; t < 100; ++t) {
    const RatVector x = rng.int_vector(kL3V6, 3);
    const RatVector y = rng.int_vector(kL3V6, 3);
    ASSERT_EQ(symplectic_form_l3v6(MultiVector(kV6, 3, x), MultiVector(kV6, 3, y)), omega_oracle(x, y));
    ASSERT_EQ(bilinear(l3v6_form(), x, y), -bilinear(l3v6_form(), y, x));
    ASSERT_EQ(bilinear(l3v6_form(), x, x), Rat(0));
  }
  EXPECT_NE(determinant(l3v6_form()), Rat(0));
}

TEST(SymplecticForm, L3V5IsLagrangian) {
  EXPECT_EQ(l3v5_subspace().dim(), 10u);
  EXPECT_TRUE(l3v6_space().is_lagrangian(l3v5_subspace()));
  EXPECT_TRUE(l3v6_space().is_lagrangian(l3v6_decomposition().l2()));
}

TEST(SymplecticForm, ScalesByDeterminantUnderGL6) {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    const RatMatrix g = oracle::random_matrix(rng, kV6, kV6, 2);
    const RatMatrix g3 = exterior_power_map(g, 3);
    const RatVector x = rng.int_vector(kL3V6, 2);
    const RatVector y = rng.int_vector(kL3V6, 2);
    ASSERT_EQ(bilinear(l3v6_form(), g3 * x, g3 * y), determinant(g) * bilinear(l3v6_form(), x, y));
  }
}

TEST(ExteriorPowerMap, IsFunctorial) {
  Rng rng(24);
  for (int t = 0; t < 10; ++t) {
    const RatMatrix g = oracle::random_matrix(rng, kV6, kV6, 2);
    const RatMatrix h = oracle::random_matrix(rng, kV6, kV6, 2);
    for (int p = 1; p <= 3; ++p) ASSERT_EQ(exterior_power_map(g * h, p), exterior_power_map(g, p) * exterior_power_map(h, p));
  }
}

TEST(Lambda, Examples) {
  EXPECT_TRUE(lambda_p(mono("123")).is_zero());
  EXPECT_EQ(lambda_p(mono("126")), MultiVector::from_label(kV5, "12"));
  EXPECT_EQ(lambda_p(mono("1236")), Rat(-1) * MultiVector::from_label(kV5, "123"));
}

TEST(Lambda, KernelIsTheV5Part) {
  for (int p = 1; p <= 5; ++p) {
    const Subspace k = kernel(lambda_matrix(p));
    EXPECT_EQ(k, Subspace::span(v5_inclusion_matrix(p).transpose())) << p;
  }
}

TEST(Lambda, EmbedAndRestrictAreInverse) {
  Rng rng(25);
  for (int t = 0; t < 20; ++t) {
    const MultiVector x(kV5, 2, rng.int_vector(kL2V5, 3));
    ASSERT_EQ(restrict_v5(embed_v5(x)), x);
  }
  EXPECT_THROW(restrict_v5(mono("126")), InputError);
  EXPECT_EQ(epsilon5(MultiVector::from_label(kV5, "12345")), Rat(1));
  EXPECT_EQ(epsilon5(MultiVector::from_label(kV5, "21345")), Rat(-1));
}

TEST(Decomposability, Examples) {
  const Decomposability d123 = is_decomposable(mono("123"));
  EXPECT_TRUE(d123.decomposable);
  EXPECT_EQ(d123.d, Subspace::coordinate(kV6, {0, 1, 2}));

  const Decomposability generic = is_decomposable(mono("123") + mono("456"));
  EXPECT_FALSE(generic.decomposable);
  EXPECT_TRUE(generic.d.is_zero());

  EXPECT_THROW(is_decomposable(MultiVector(kV6, 3)), InputError);
}

TEST(Decomposability, OmegaHasOneDimensionalKernel) {
  const MultiVector a = mono("123") + mono("145");
  // Hand-built 15×6 matrix of e_j∧a using inversion-count signs.
  const ExteriorBasis& b4 = ExteriorBasis::get(kV6, 4);
  RatMatrix m(b4.size(), kV6);
  const std::vector<std::vector<int>> terms = {{0, 1, 2}, {0, 3, 4}};
  for (int j = 0; j < kV6; ++j) {
    for (const auto& term : terms) {
      const int s = oracle::monomial_wedge_sign({j}, term);
      if (s == 0) continue;
      std::vector<int> idx = term;
      idx.push_back(j);
      std::sort(idx.begin(), idx.end());
      unsigned mask = 0;
      for (int i : idx) mask |= 1U << i;
      m(b4.index_of(mask), static_cast<std::size_t>(j)) += s;
    }
  }
  const Subspace by_hand = Subspace::span(oracle::rref(m));
  EXPECT_EQ(by_hand.dim(), 5u);  // rank 5, so the kernel is a line
  const Decomposability d = is_decomposable(a);
  EXPECT_FALSE(d.decomposable);
  EXPECT_EQ(d.d, Subspace::coordinate(kV6, {0}));
  EXPECT_TRUE(is_zero(m * unit_vector(kV6, 0)));
}

TEST(Decomposability, RandomProductsAreDecomposable) {
  Rng rng(26);
  for (int t = 0; t < 30; ++t) {
    const RatVector u = rng.int_vector(kV6, 3);
    const RatVector v = rng.int_vector(kV6, 3);
    const RatVector w = rng.int_vector(kV6, 3);
    const Subspace span = Subspace::span({u, v, w}, kV6);
    if (span.dim() < 3) continue;
    const MultiVector x = MultiVector::vector(u).wedge(MultiVector::vector(v)).wedge(MultiVector::vector(w));
    const Decomposability d = is_decomposable(x);
    ASSERT_TRUE(d.decomposable);
    ASSERT_EQ(d.d, span);
  }
}

TEST(WedgeSpace, Dimensions) {
  const Subspace e1 = line(unit_vector(kV6, 0));
  EXPECT_EQ(wedge_space(e1, 2).dim(), 10u);
  EXPECT_EQ(wedge_space(e1, detail::v5_in_v6(), 2).dim(), 6u);
  EXPECT_TRUE(l3v5_subspace().contains(wedge_space(e1, detail::v5_in_v6(), 2)));

  const Subspace v3 = Subspace::coordinate(kV6, {0, 1, 2});
  const Subspace w = wedge_space(Subspace::full(kV6), v3, 2);
  // Monomials e_abc with at least two indices in {1,2,3}: 1 + 3·3 = 10.
  const ExteriorBasis& b3 = ExteriorBasis::get(kV6, 3);
  std::vector<std::size_t> idx;
  for (std::size_t k = 0; k < b3.size(); ++k)
    if (__builtin_popcount(b3.mask(k) & 0b111U) >= 2) idx.push_back(k);
  EXPECT_EQ(idx.size(), 10u);
  EXPECT_EQ(w, Subspace::coordinate(kL3V6, idx));
}

TEST(WedgeSpace, ExteriorPowerDimensionsAreBinomial) {
  Rng rng(27);
  for (int t = 0; t < 20; ++t) {
    const Subspace u = Subspace::span(oracle::random_matrix(rng, static_cast<std::size_t>(rng.uniform(1, 6)), kV6, 2));
    for (int p = 1; p <= 3; ++p)
      ASSERT_EQ(static_cast<long>(exterior_power(u, p).dim()), oracle::binomial(static_cast<long>(u.dim()), p));
  }
}

#pragma once

#include <cstddef>
#include <vector>

#include "gmlag/correspondence.hpp"
#include "gmlag/epw.hpp"
#include "gmlag/error.hpp"
#include "gmlag/exterior.hpp"
#include "gmlag/quadric.hpp"
#include "gmlag/subspace.hpp"
#include "gmlag/symplectic.hpp"

namespace gmlag {

struct FiberReport {
  int ambient_proj_dim = 0;          // projective dimension of the span of the reduced quadric
  std::size_t corank = 0;            // kernel dimension of the reduced quadric
  std::size_t stratum_prediction = 0;  // Y-stratum of v, or Z-stratum of V₃
  std::size_t sigma_level = 0;
  int closed_form_ambient = 0;
  int closed_form_corank = 0;
  int predicted_n = 0;
  bool formulas_hold = false;  // span and kernel match their closed-form subspaces
  bool agreement = false;
  bool degenerate = false;     // predicted n < 1
};

namespace detail {

inline const Subspace& v5_in_v6() {
  static const Subspace s = Subspace::coordinate(kV6, {0, 1, 2, 3, 4});
  return s;
}

inline Subspace pad_even(const Subspace& s) {
  RatMatrix rows(s.dim(), kGradedDim);
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t k = 0; k < kL3V6; ++k) rows(i, k) = s.basis()(i, k);
  return Subspace::span(rows);
}

// L₁ = Λ³V₅ ⊕ L and L₂ = e6∧Λ²V₅ ⊕ k inside Λ³V₆ ⊕ (k ⊕ L).
inline const LagrangianDecomposition& graded_decomposition() {
  static const LagrangianDecomposition dec = [] {
    const LagrangianDecomposition& even = l3v6_decomposition();
    Subspace l1 = subspace_sum(pad_even(even.l1()), Subspace::coordinate(kGradedDim, {kOddXPrime}));
    Subspace l2 = subspace_sum(pad_even(even.l2()), Subspace::coordinate(kGradedDim, {kOddX}));
    return LagrangianDecomposition(graded_space(), std::move(l1), std::move(l2));
  }();
  return dec;
}

inline Subspace a_hat(const Subspace& a, A1Tag tag) {
  const RatVector odd = a1_representative(tag);
  RatVector v(kGradedDim, Rat(0));
  v[kOddX] = odd[0];
  v[kOddXPrime] = odd[1];
  return subspace_sum(pad_even(a), line(v));
}

inline Subspace check_fibration_input(const LagrangianData& ld) {
  require(ld.a1 != A1Tag::Infinity, "fibration: A1 = inf is excluded");
  const Subspace a = standard_frame_a(ld);
  require_lagrangian(a);
  return a;
}

inline void fill_from_reduction(FiberReport& rep, const IsotropicReduction& red) {
  const QuadricOnSubspace q2 = quadric_pair_from_lagrangian(red.reduced_dec, red.reduced_a).q2;
  rep.ambient_proj_dim = static_cast<int>(q2.span().dim()) - 1;
  rep.corank = q2.corank();
  rep.formulas_hold = red.to_ambient(q2.span()) == red.span_formula && red.to_ambient(q2.kernel()) == red.kernel_formula;
}

}  // namespace detail

// Everything about ld that does not depend on the query point.
class FibrationContext {
 public:
  explicit FibrationContext(const LagrangianData& ld)
      : a_(detail::check_fibration_input(ld)),
        a_hat_(detail::a_hat(a_, ld.a1)),
        a_l3v5_(subspace_intersect(a_, l3v5_subspace())),
        predicted_n_(dim_report(ld).predicted_dim_x) {}

  const Subspace& a() const { return a_; }
  const Subspace& a_hat() const { return a_hat_; }
  const Subspace& a_cap_l3v5() const { return a_l3v5_; }
  int predicted_n() const { return predicted_n_; }

 private:
  Subspace a_;
  Subspace a_hat_;
  Subspace a_l3v5_;
  int predicted_n_;
};

namespace detail {

inline void require_in_v5(const RatVector& v) {
  require(v.size() == kV6 && !is_zero(v), "v must be a non-zero vector of V₆");
  require(v[5] == 0, "v must lie in V₅");
}

inline void require_plane_in_v5(const Subspace& v3) {
  require(v3.ambient_dim() == kV6 && v3.dim() == 3, "V₃ must be a 3-dimensional subspace of V₆");
  require(v5_in_v6().contains(v3), "V₃ must lie in V₅");
}

}  // namespace detail

// dim(A ∩ Λ³V₅ ∩ (v∧Λ²V₅))
inline std::size_t sigma1_level(const FibrationContext& ctx, const RatVector& v) {
  detail::require_in_v5(v);
  return subspace_intersect(ctx.a_cap_l3v5(), wedge_space(line(v), detail::v5_in_v6(), 2)).dim();
}

inline std::size_t sigma1_level(const LagrangianData& ld, const RatVector& v) {
  detail::require_in_v5(v);
  return sigma1_level(FibrationContext(ld), v);
}

// dim(A ∩ (V₅∧Λ²V₃))
inline std::size_t sigma2_level(const FibrationContext& ctx, const Subspace& v3) {
  detail::require_plane_in_v5(v3);
  return subspace_intersect(ctx.a(), wedge_space(detail::v5_in_v6(), v3, 2)).dim();
}

inline std::size_t sigma2_level(const LagrangianData& ld, const Subspace& v3) {
  detail::require_plane_in_v5(v3);
  return sigma2_level(FibrationContext(ld), v3);
}

// Reduction along I_v = v∧Λ²V₅, compared with corank = y − σ₁ and ambient = n − 2 + σ₁.
inline FiberReport fibration1_fiber(const FibrationContext& ctx, const RatVector& v) {
  FiberReport rep;
  rep.sigma_level = sigma1_level(ctx, v);
  rep.stratum_prediction = y_stratum(ctx.a(), v);
  rep.predicted_n = ctx.predicted_n();
  rep.degenerate = rep.predicted_n < 1;

  const Subspace i = detail::pad_even(wedge_space(line(v), detail::v5_in_v6(), 2));
  const IsotropicReduction red = isotropic_reduce(detail::graded_decomposition(), ctx.a_hat(), i);
  detail::fill_from_reduction(rep, red);

  rep.closed_form_ambient = rep.predicted_n - 2 + static_cast<int>(rep.sigma_level);
  rep.closed_form_corank = static_cast<int>(rep.stratum_prediction) - static_cast<int>(rep.sigma_level);
  rep.agreement = rep.formulas_hold && rep.ambient_proj_dim == rep.closed_form_ambient &&
                  static_cast<int>(rep.corank) == rep.closed_form_corank;
  return rep;
}

inline FiberReport fibration1_fiber(const LagrangianData& ld, const RatVector& v) {
  detail::require_in_v5(v);
  return fibration1_fiber(FibrationContext(ld), v);
}

// Reduction along I = L₁ ∩ L̄₂^⊥ for L̄₂ = e6∧Λ²V₃ ⊕ k, which is V₅∧Λ²V₃; compared with
// corank = z − l and ambient = n + l − 3.
inline FiberReport fibration2_fiber(const FibrationContext& ctx, const Subspace& v3) {
  FiberReport rep;
  rep.sigma_level = sigma2_level(ctx, v3);
  rep.stratum_prediction = z_stratum(ctx.a(), v3);
  rep.predicted_n = ctx.predicted_n();
  rep.degenerate = rep.predicted_n < 1;

  const LagrangianDecomposition& dec = detail::graded_decomposition();
  const Subspace target = subspace_sum(detail::pad_even(wedge_space(line(unit_vector(kV6, 5)), v3, 2)),
                                       Subspace::coordinate(kGradedDim, {kOddX}));
  const Subspace i = isotropic_for_target(dec, target);
  ensure(i == detail::pad_even(wedge_space(detail::v5_in_v6(), v3, 2)), "fibration2: L₁ ∩ L̄₂^⊥ differs from V₅∧Λ²V₃");
  const IsotropicReduction red = isotropic_reduce(dec, ctx.a_hat(), i);
  ensure(red.l2_bar == target, "fibration2: L₂ ∩ I^⊥ differs from the target L̄₂");
  detail::fill_from_reduction(rep, red);

  rep.closed_form_ambient = rep.predicted_n + static_cast<int>(rep.sigma_level) - 3;
  rep.closed_form_corank = static_cast<int>(rep.stratum_prediction) - static_cast<int>(rep.sigma_level);
  rep.agreement = rep.formulas_hold && rep.ambient_proj_dim == rep.closed_form_ambient &&
                  static_cast<int>(rep.corank) == rep.closed_form_corank;
  return rep;
}

inline FiberReport fibration2_fiber(const LagrangianData& ld, const Subspace& v3) {
  detail::require_plane_in_v5(v3);
  return fibration2_fiber(FibrationContext(ld), v3);
}

}  // namespace gmlag

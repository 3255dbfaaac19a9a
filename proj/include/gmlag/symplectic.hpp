#pragma once

#include <cstddef>

#include "gmlag/error.hpp"
#include "gmlag/exterior.hpp"
#include "gmlag/matrix.hpp"
#include "gmlag/subspace.hpp"

namespace gmlag {

// ω(x, y) = xᵀ·form·y with form skew and invertible.
class SymplecticSpace {
 public:
  explicit SymplecticSpace(RatMatrix form) : form_(std::move(form)) {
    require(form_.is_skew(), "symplectic form must be skew-symmetric");
    require(form_.rows() % 2 == 0, "symplectic space must have even dimension");
    require(determinant(form_) != 0, "symplectic form must be non-degenerate");
  }

  std::size_t dim() const { return form_.rows(); }
  const RatMatrix& form() const { return form_; }

  Rat omega(const RatVector& x, const RatVector& y) const { return bilinear(form_, x, y); }

  // {y : ω(x, y) = 0 for all x in s}
  Subspace orthogonal(const Subspace& s) const {
    require(s.ambient_dim() == dim(), "orthogonal: ambient mismatch");
    return kernel(s.basis() * form_);
  }

  bool is_isotropic(const Subspace& s) const {
    require(s.ambient_dim() == dim(), "is_isotropic: ambient mismatch");
    return (s.basis() * form_ * s.basis().transpose()).is_zero();
  }

  bool is_lagrangian(const Subspace& s) const { return 2 * s.dim() == dim() && is_isotropic(s); }

 private:
  RatMatrix form_;
};

// L ⊕ L^∨ with ω((x₁,x₂),(y₁,y₂)) = ⟨x₁,y₂⟩ − ⟨y₁,x₂⟩.
inline SymplecticSpace standard_space(std::size_t m) {
  RatMatrix f(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    f(i, m + i) = 1;
    f(m + i, i) = -1;
  }
  return SymplecticSpace(std::move(f));
}

inline const SymplecticSpace& l3v6_space() {
  static const SymplecticSpace s(l3v6_form());
  return s;
}

// Λ³V₆ ⊕ (k ⊕ L) in coordinates (ξ, x, x′), with ω((ξ,x,x′),(η,y,y′)) = ω(ξ,η) + y·x′ − x·y′.
inline constexpr std::size_t kGradedDim = kL3V6 + 2;
inline constexpr std::size_t kOddX = kL3V6;
inline constexpr std::size_t kOddXPrime = kL3V6 + 1;

inline const SymplecticSpace& graded_space() {
  static const SymplecticSpace s = [] {
    RatMatrix f(kGradedDim, kGradedDim);
    const RatMatrix& g = l3v6_form();
    for (std::size_t i = 0; i < kL3V6; ++i)
      for (std::size_t j = 0; j < kL3V6; ++j) f(i, j) = g(i, j);
    f(kOddX, kOddXPrime) = -1;
    f(kOddXPrime, kOddX) = 1;
    return SymplecticSpace(std::move(f));
  }();
  return s;
}

}  // namespace gmlag

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gmlag/error.hpp"
#include "gmlag/exterior.hpp"
#include "gmlag/gm_data.hpp"
#include "gmlag/matrix.hpp"
#include "gmlag/subspace.hpp"
#include "gmlag/symplectic.hpp"

namespace gmlag {

// Orbit representatives of Lagrangian lines in k ⊕ L: Zero is L, Infinity is k, One is any other.
enum class A1Tag { Zero, One, Infinity };

inline std::string to_string(A1Tag t) {
  switch (t) {
    case A1Tag::Zero:
      return "0";
    case A1Tag::One:
      return "1";
    case A1Tag::Infinity:
      return "inf";
  }
  return "0";
}

inline A1Tag parse_a1(const std::string& s) {
  if (s == "0") return A1Tag::Zero;
  if (s == "1") return A1Tag::One;
  if (s == "inf") return A1Tag::Infinity;
  throw InputError("A1 must be \"0\", \"1\" or \"inf\", got \"" + s + "\"");
}

// A representative vector (x, x′) of the tagged line in k ⊕ L. The One representative
// matches q₁(e6) = 1 under gm_to_lagrangian.
inline RatVector a1_representative(A1Tag t) {
  switch (t) {
    case A1Tag::Zero:
      return {Rat(0), Rat(1)};
    case A1Tag::One:
      return {Rat(1), Rat(-1)};
    case A1Tag::Infinity:
      return {Rat(1), Rat(0)};
  }
  return {Rat(0), Rat(1)};
}

struct LagrangianData {
  Subspace a;                      // in Λ³V₆, 20 monomial coordinates
  A1Tag a1 = A1Tag::Zero;
  std::optional<RatMatrix> frame;  // g ∈ GL(V₆) carrying the chosen hyperplane to span(e1..e5)

  friend bool operator==(const LagrangianData& x, const LagrangianData& y) {
    return x.a == y.a && x.a1 == y.a1 && x.frame == y.frame;
  }
};

inline void require_lagrangian(const Subspace& a) {
  require(a.ambient_dim() == kL3V6, "A must live in the 20-dimensional Λ³V₆");
  require(a.dim() == 10, "A must be 10-dimensional, got " + std::to_string(a.dim()));
  require(l3v6_space().is_lagrangian(a), "A is not Lagrangian for the wedge form");
}

// g with g(V₅′) = span(e1..e5) for a hyperplane V₅′ ⊂ V₆.
inline RatMatrix frame_for_hyperplane(const Subspace& v5prime) {
  require(v5prime.ambient_dim() == kV6 && v5prime.dim() == 5, "frame_for_hyperplane: not a hyperplane of V₆");
  const RatMatrix extra = complement_basis(v5prime, Subspace::full(kV6));
  return inverse(vstack(v5prime.basis(), extra).transpose());
}

inline Subspace apply_frame(const Subspace& a, const RatMatrix& g) { return apply_map(exterior_power_map(g, 3), a); }

inline Subspace standard_frame_a(const LagrangianData& ld) { return ld.frame ? apply_frame(ld.a, *ld.frame) : ld.a; }

namespace detail {

// E(ξ, β) = ε(ξ∧β) for ξ ∈ Λ³V₅, β ∈ Λ²V₅.
inline const RatMatrix& l3_l2_pairing() {
  static const RatMatrix e = [] {
    RatMatrix m(kL3V5, kL2V5);
    for (std::size_t i = 0; i < kL3V5; ++i)
      for (std::size_t j = 0; j < kL2V5; ++j)
        m(i, j) = epsilon5(MultiVector(kV5, 3, unit_vector(kL3V5, i)).wedge(MultiVector(kV5, 2, unit_vector(kL2V5, j))));
    return m;
  }();
  return e;
}

// v0 ∧ β for β ∈ Λ²V₅, as an element of Λ³V₆.
inline RatVector wedge_v_l2v5(const RatVector& v0, const RatVector& beta) {
  return MultiVector::vector(v0).wedge(embed_v5(MultiVector(kV5, 2, beta))).coords();
}

}  // namespace detail

// Â is the kernel of (ξ, x′, w) ↦ [w′ ↦ ε(ξ∧μ(w′)) + μ₁(w′)x′ + q(v0)(w, w′)], embedded
// by (ξ, x′, w) ↦ (ξ + v0∧μ(w), λ(v0)μ₁(w), x′).
inline LagrangianData gm_to_lagrangian(const GMData& d, const RatVector& v0 = unit_vector(kV6, 5)) {
  require(v0.size() == kV6 && v0[5] != 0, "gm_to_lagrangian: v0 must lie outside V₅");
  const WSplit s = split_w(d);
  const std::size_t m = d.w_dim();
  const bool special = s.w1.rows() == 1;

  RatVector mu1(m, Rat(0));
  if (special) {
    const RatMatrix f_inv = inverse(vstack(s.w0, s.w1));
    mu1 = f_inv.col(m - 1);
  }

  const std::size_t unknowns = kL3V5 + 1 + m;
  RatMatrix map(m, unknowns);
  const RatMatrix xi_part = (detail::l3_l2_pairing() * d.mu).transpose();
  const RatMatrix qv = d.q_at(v0);
  for (std::size_t b = 0; b < m; ++b) {
    for (std::size_t k = 0; k < kL3V5; ++k) map(b, k) = xi_part(b, k);
    map(b, kL3V5) = mu1[b];
    for (std::size_t a = 0; a < m; ++a) map(b, kL3V5 + 1 + a) = qv(b, a);
  }
  const Subspace ker = kernel(map);
  ensure(ker.dim() == 11, "gm_to_lagrangian: kernel has dimension " + std::to_string(ker.dim()) + ", expected 11");

  const RatMatrix incl = v5_inclusion_matrix(3);
  std::vector<RatVector> rows;
  for (std::size_t r = 0; r < ker.dim(); ++r) {
    const RatVector z = ker.basis_vector(r);
    RatVector out(kGradedDim, Rat(0));
    const RatVector xi = incl * RatVector(z.begin(), z.begin() + static_cast<long>(kL3V5));
    const RatVector w(z.begin() + static_cast<long>(kL3V5 + 1), z.end());
    const RatVector beta = d.mu * w;
    const RatVector even = axpy(1, detail::wedge_v_l2v5(v0, beta), xi);
    for (std::size_t k = 0; k < kL3V6; ++k) out[k] = even[k];
    out[kOddX] = v0[5] * dot(mu1, w);
    out[kOddXPrime] = z[kL3V5];
    rows.push_back(std::move(out));
  }
  const Subspace a_hat = Subspace::span(rows, kGradedDim);
  ensure(a_hat.dim() == 11, "gm_to_lagrangian: f3 is not injective on the kernel");
  ensure(graded_space().is_lagrangian(a_hat), "gm_to_lagrangian: Â is not Lagrangian");

  std::vector<std::size_t> even_idx;
  for (std::size_t k = 0; k < kL3V6; ++k) even_idx.push_back(k);
  const Subspace even = subspace_intersect(a_hat, Subspace::coordinate(kGradedDim, even_idx));
  const Subspace odd = subspace_intersect(a_hat, Subspace::coordinate(kGradedDim, {kOddX, kOddXPrime}));
  ensure(even.dim() == 10 && odd.dim() == 1, "gm_to_lagrangian: Â does not split by the grading");

  LagrangianData ld;
  ld.a = Subspace::span(even.basis().select_cols(even_idx));
  const RatVector o = odd.basis_vector(0);
  if (o[kOddX] == 0) {
    ld.a1 = A1Tag::Zero;
  } else if (o[kOddXPrime] == 0) {
    ld.a1 = A1Tag::Infinity;
  } else {
    ld.a1 = A1Tag::One;
  }
  ensure(l3v6_space().is_lagrangian(ld.a), "gm_to_lagrangian: A is not Lagrangian");
  return ld;
}

// W₀ = λ₃(A) with μ₀ the inclusion, q₀(v)(ξ₁, ξ₂) = −ε(λ₄(v∧ξ₁)∧λ₃(ξ₂)).
inline GMData lagrangian_to_gm(const LagrangianData& ld) {
  require(ld.a1 != A1Tag::Infinity, "lagrangian_to_gm: A1 = inf gives non-lci GM data");
  const Subspace a = standard_frame_a(ld);
  require_lagrangian(a);

  const RatMatrix lam3 = lambda_matrix(3);
  const RatMatrix lam4 = lambda_matrix(4);
  const RatMatrix a_images = a.basis() * lam3.transpose();
  const Subspace w0 = Subspace::span(a_images);
  const std::size_t k = w0.dim();

  std::vector<RatVector> lifts;
  for (std::size_t i = 0; i < k; ++i) {
    RatVector c;
    ensure(solve_row_combination(a_images, w0.basis_vector(i), c), "lagrangian_to_gm: λ₃ lift failed");
    lifts.push_back(row_times(c, a.basis()));
  }

  const bool special = ld.a1 == A1Tag::One;
  const std::size_t m = k + (special ? 1 : 0);
  GMData d;
  d.n = static_cast<int>(m) - 5;
  d.mu = RatMatrix(kL2V5, m);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t r = 0; r < kL2V5; ++r) d.mu(r, i) = w0.basis()(i, r);

  for (std::size_t v = 0; v < kV6; ++v) {
    RatMatrix q(m, m);
    const MultiVector ev = MultiVector::vector(unit_vector(kV6, v));
    for (std::size_t i = 0; i < k; ++i) {
      const MultiVector contracted(kV5, 3, lam4 * ev.wedge(MultiVector(kV6, 3, lifts[i])).coords());
      for (std::size_t j = 0; j < k; ++j)
        q(i, j) = -epsilon5(contracted.wedge(MultiVector(kV5, 2, w0.basis_vector(j))));
    }
    ensure(q.is_symmetric(), "lagrangian_to_gm: q̃₀(e" + std::to_string(v + 1) + ") is not symmetric");
    d.q[v] = std::move(q);
  }
  if (special) d.q[5](k, k) = 1;
  d.type_hint = to_string(special ? GMType::Special : GMType::Ordinary);
  return d;
}

struct DimReport {
  std::size_t dim_a_cap_l3v5 = 0;
  int predicted_dim_x = 0;
  GMType type = GMType::Ordinary;
  bool degenerate = false;  // predicted dimension below 1
};

inline DimReport dim_report(const LagrangianData& ld) {
  require(ld.a1 != A1Tag::Infinity, "dim_report: A1 = inf is excluded");
  const Subspace a = standard_frame_a(ld);
  require_lagrangian(a);
  DimReport r;
  r.dim_a_cap_l3v5 = subspace_intersect(a, l3v5_subspace()).dim();
  const int base = ld.a1 == A1Tag::Zero ? 5 : 6;
  r.predicted_dim_x = base - static_cast<int>(r.dim_a_cap_l3v5);
  r.type = ld.a1 == A1Tag::Zero ? GMType::Ordinary : GMType::Special;
  r.degenerate = r.predicted_dim_x < 1;
  return r;
}

// A^⊥ ⊂ Λ³V₆^∨ in the dual monomial basis. A frame is not carried over.
inline LagrangianData dualize(const LagrangianData& ld) {
  require_lagrangian(ld.a);
  LagrangianData out;
  out.a = annihilator(ld.a);
  out.a1 = ld.a1;
  ensure(l3v6_space().is_lagrangian(out.a), "dualize: A^⊥ is not Lagrangian");
  return out;
}

// A′ = (A ∩ η₀^⊥) ⊕ kη₀.
inline Subspace hyperplane_section_lagrangian(const Subspace& a, const MultiVector& eta0) {
  require_lagrangian(a);
  const MultiVector eta = eta0.ambient_dim() == kV5 ? embed_v5(eta0) : eta0;
  require(eta.ambient_dim() == kV6 && eta.degree() == 3, "hyperplane update: η₀ must be a 3-vector");
  require(!eta.is_zero(), "hyperplane update: η₀ = 0");
  require(l3v5_subspace().contains(eta.coords()), "hyperplane update: η₀ must lie in Λ³V₅");
  if (a.contains(eta.coords())) return a;
  const Subspace cut = subspace_intersect(a, l3v6_space().orthogonal(line(eta.coords())));
  const Subspace out = subspace_sum(cut, line(eta.coords()));
  ensure(l3v6_space().is_lagrangian(out), "hyperplane update: A′ is not Lagrangian");
  return out;
}

}  // namespace gmlag

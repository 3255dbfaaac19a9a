#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gmlag/error.hpp"
#include "gmlag/exterior.hpp"
#include "gmlag/matrix.hpp"
#include "gmlag/polynomial.hpp"
#include "gmlag/subspace.hpp"

namespace gmlag {

inline void require_l3v6_subspace(const Subspace& a) {
  require(a.ambient_dim() == kL3V6, "A must live in the 20-dimensional Λ³V₆");
}

// dim(A ∩ (v∧Λ²V₆))
inline std::size_t y_stratum(const Subspace& a, const RatVector& v) {
  require_l3v6_subspace(a);
  require(v.size() == kV6 && !is_zero(v), "y_stratum: v must be a non-zero vector of V₆");
  return subspace_intersect(a, wedge_space(line(v), 2)).dim();
}

inline Subspace hyperplane_from_form(const RatVector& f) {
  require(f.size() == kV6 && !is_zero(f), "hyperplane_from_form: f must be a non-zero form on V₆");
  return kernel(RatMatrix::from_rows({f}, kV6));
}

// The point of P(V₆^∨) dual to a hyperplane.
inline RatVector dual_point(const Subspace& v5prime) {
  require(v5prime.ambient_dim() == kV6 && v5prime.dim() == 5, "dual_point: not a hyperplane of V₆");
  return annihilator(v5prime).basis_vector(0);
}

// dim(A ∩ Λ³V₅′)
inline std::size_t y_dual_stratum(const Subspace& a, const Subspace& v5prime) {
  require_l3v6_subspace(a);
  require(v5prime.ambient_dim() == kV6 && v5prime.dim() == 5, "y_dual_stratum: V₅′ is not a hyperplane of V₆");
  return subspace_intersect(a, exterior_power(v5prime, 3)).dim();
}

// dim(A ∩ (v∧Λ²V₅′)); the incidence holds when it is positive.
inline std::size_t y_hat_member(const Subspace& a, const RatVector& v, const Subspace& v5prime) {
  require_l3v6_subspace(a);
  require(v5prime.ambient_dim() == kV6 && v5prime.dim() == 5, "y_hat_member: V₅′ is not a hyperplane of V₆");
  require(v.size() == kV6 && !is_zero(v), "y_hat_member: v must be a non-zero vector of V₆");
  require(v5prime.contains(v), "y_hat_member: v does not lie in V₅′");
  return subspace_intersect(a, wedge_space(line(v), v5prime, 2)).dim();
}

// dim(A ∩ (V₆∧Λ²V₃))
inline std::size_t z_stratum(const Subspace& a, const Subspace& v3) {
  require_l3v6_subspace(a);
  require(v3.ambient_dim() == kV6 && v3.dim() == 3, "z_stratum: V₃ must be a 3-dimensional subspace of V₆");
  return subspace_intersect(a, wedge_space(Subspace::full(kV6), v3, 2)).dim();
}

enum class StratumKind { Y, Z };

inline std::string to_string(StratumKind k) { return k == StratumKind::Y ? "y" : "z"; }

struct LineDegreeCertificate {
  StratumKind kind = StratumKind::Y;
  // Y: base + t·direction in V₆. Z: span(u1, u2, u3 + t·u4), stored as {u1, u2, u3, u4}.
  std::vector<RatVector> line;
  Poly raw_det;               // determinant of the 20×20 chart matrix
  Poly stripped_factor;       // declared base-locus factor of the chart
  unsigned stripped_power = 0;
  Poly poly;                  // primitive integer polynomial after stripping
  int degree = -1;
  std::vector<std::pair<Poly, unsigned>> squarefree;
  RatVector rational_roots;
  bool roots_complete = true;
  std::size_t checked_points = 0;
  bool whole_line = false;    // the stratum contains the whole line or pencil
};

namespace detail {

inline std::vector<std::size_t> mask_indices(unsigned mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < kV6; ++i)
    if (mask & (1U << i)) out.push_back(i);
  return out;
}

// Determinant of [basis(A) | generators(t)] as a polynomial of degree ≤ 10 in t.
template <typename Generators>
Poly chart_determinant(const Subspace& a, Generators&& generators) {
  constexpr long kNodes = 11;
  RatVector xs;
  RatVector ys;
  for (long k = 0; k <= kNodes; ++k) {
    const Rat t(k);
    const RatMatrix cols = vstack(a.basis(), generators(t));
    xs.push_back(t);
    ys.push_back(determinant(cols));
  }
  const Poly p = interpolate(RatVector(xs.begin(), xs.end() - 1), RatVector(ys.begin(), ys.end() - 1));
  ensure(p(xs.back()) == ys.back(), "chart determinant: interpolation check failed");
  return p;
}

template <typename Member, typename Valid>
void finish_certificate(LineDegreeCertificate& cert, std::uint64_t seed, std::size_t min_checks, Member&& member,
                        Valid&& valid) {
  if (cert.raw_det.is_zero()) {
    cert.whole_line = true;
    return;
  }
  cert.poly = primitive(exact_quotient(cert.raw_det, pow(cert.stripped_factor, cert.stripped_power)));
  cert.degree = cert.poly.degree();
  cert.squarefree = squarefree_decomposition(cert.poly);
  const RationalRoots rr = rational_roots(cert.poly);
  cert.rational_roots = rr.roots;
  cert.roots_complete = rr.complete;

  std::set<Rat> params(rr.roots.begin(), rr.roots.end());
  Rng rng(seed);
  while (params.size() < min_checks + rr.roots.size()) {
    Rat t(rng.uniform(-60, 60), rng.uniform(1, 17));
    t.canonicalize();
    params.insert(t);
  }
  for (const Rat& t : params) {
    if (!valid(t)) continue;
    const bool vanishes = cert.poly(t) == 0;
    ensure(vanishes == member(t), "certificate: membership at t = " + to_string(t) + " disagrees with the polynomial");
    ++cert.checked_points;
  }
  ensure(cert.checked_points >= min_checks, "certificate: too few valid sample parameters");
}

}  // namespace detail

// Y_A along base + t·direction. The chart uses v(t)∧e_ij with i, j ≠ k, valid where v_k(t) ≠ 0;
// its determinant is v_k(t)^4 times the restriction of the sextic.
inline LineDegreeCertificate y_line_certificate(const Subspace& a, const RatVector& base, const RatVector& direction,
                                                std::uint64_t seed, std::size_t min_checks = 20) {
  require_l3v6_subspace(a);
  require(base.size() == kV6 && direction.size() == kV6, "y_line_certificate: points must lie in V₆");
  require(rank(RatMatrix::from_rows({base, direction}, kV6)) == 2, "y_line_certificate: points must span a line");
  std::size_t k = 0;
  while (direction[k] == 0) ++k;

  std::vector<MultiVector> pairs;
  const ExteriorBasis& b2 = ExteriorBasis::get(kV6, 2);
  for (std::size_t j = 0; j < b2.size(); ++j)
    if (!(b2.mask(j) & (1U << k))) pairs.emplace_back(kV6, 2, unit_vector(b2.size(), j));

  LineDegreeCertificate cert;
  cert.kind = StratumKind::Y;
  cert.line = {base, direction};
  auto point = [&](const Rat& t) { return axpy(t, direction, base); };
  cert.raw_det = detail::chart_determinant(a, [&](const Rat& t) {
    const MultiVector v = MultiVector::vector(point(t));
    RatMatrix g(pairs.size(), kL3V6);
    for (std::size_t r = 0; r < pairs.size(); ++r) g.set_row(r, v.wedge(pairs[r]).coords());
    return g;
  });
  cert.stripped_factor = Poly::linear(base[k], direction[k]);
  cert.stripped_power = 4;
  detail::finish_certificate(
      cert, seed, min_checks, [&](const Rat& t) { return y_stratum(a, point(t)) >= 1; },
      [&](const Rat& t) { return !is_zero(point(t)); });
  return cert;
}

// Z_A along V₃(t) = span(u1, u2, u3 + t·u4). The chart uses Λ³V₃ and e_x∧Λ²V₃ for x outside a
// column triple J whose Plücker coordinate p_J(t) is not identically zero; its determinant is
// p_J(t)^3 times the restriction of the quartic.
inline LineDegreeCertificate z_pencil_certificate(const Subspace& a, const std::vector<RatVector>& u, std::uint64_t seed,
                                                  std::size_t min_checks = 20) {
  require_l3v6_subspace(a);
  require(u.size() == 4, "z_pencil_certificate: a pencil needs four vectors");
  for (const auto& x : u) require(x.size() == kV6, "z_pencil_certificate: vectors must lie in V₆");
  require(rank(RatMatrix::from_rows(u, kV6)) == 4, "z_pencil_certificate: u1..u4 must be independent");

  auto frame = [&](const Rat& t) { return RatMatrix::from_rows({u[0], u[1], axpy(t, u[3], u[2])}, kV6); };
  const ExteriorBasis& b3 = ExteriorBasis::get(kV6, 3);
  std::size_t j_index = b3.size();
  Poly pj;
  for (std::size_t J = 0; J < b3.size(); ++J) {
    const auto cols = detail::mask_indices(b3.mask(J));
    const Rat c0 = determinant(frame(0).select_cols(cols));
    const Rat c1 = determinant(frame(1).select_cols(cols)) - c0;
    if (c0 == 0 && c1 == 0) continue;
    j_index = J;
    pj = Poly::linear(c0, c1);
    if (c1 != 0) break;
  }
  ensure(j_index < b3.size(), "z_pencil_certificate: no non-vanishing Plücker coordinate");
  const auto outside = detail::mask_indices(0x3FU & ~b3.mask(j_index));

  LineDegreeCertificate cert;
  cert.kind = StratumKind::Z;
  cert.line = u;
  auto plane = [&](const Rat& t) { return Subspace::span(frame(t)); };
  cert.raw_det = detail::chart_determinant(a, [&](const Rat& t) {
    const RatMatrix f = frame(t);
    const MultiVector x = MultiVector::vector(f.row(0));
    const MultiVector y = MultiVector::vector(f.row(1));
    const MultiVector z = MultiVector::vector(f.row(2));
    std::vector<RatVector> rows{x.wedge(y).wedge(z).coords()};
    for (std::size_t e : outside) {
      const MultiVector ex = MultiVector::vector(unit_vector(kV6, e));
      rows.push_back(ex.wedge(x).wedge(y).coords());
      rows.push_back(ex.wedge(x).wedge(z).coords());
      rows.push_back(ex.wedge(y).wedge(z).coords());
    }
    return RatMatrix::from_rows(rows, kL3V6);
  });
  cert.stripped_factor = pj;
  cert.stripped_power = 3;
  detail::finish_certificate(
      cert, seed, min_checks, [&](const Rat& t) { return z_stratum(a, plane(t)) >= 1; },
      [](const Rat&) { return true; });
  return cert;
}

struct DecomposableHit {
  std::size_t index = 0;  // candidate index, or sample index for a pencil
  Rat parameter;          // pencil parameter; zero for plain candidates
  Subspace v3;
};

// Per-vector test only: an empty result says nothing about Θ_A as a whole.
inline std::vector<DecomposableHit> scan_decomposables(const Subspace& a, const std::vector<RatVector>& candidates) {
  require_l3v6_subspace(a);
  std::vector<DecomposableHit> hits;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    require(candidates[i].size() == kL3V6 && a.contains(candidates[i]), "scan_decomposables: candidate " +
                                                                         std::to_string(i) + " does not lie in A");
    if (is_zero(candidates[i])) continue;
    const Decomposability dec = is_decomposable(MultiVector(kV6, 3, candidates[i]));
    if (dec.decomposable) hits.push_back({i, Rat(0), dec.d});
  }
  return hits;
}

inline std::vector<DecomposableHit> scan_decomposable_pencil(const Subspace& a, const RatVector& a0, const RatVector& a1,
                                                             std::size_t samples, std::uint64_t seed) {
  require_l3v6_subspace(a);
  require(a.contains(a0) && a.contains(a1), "scan_decomposable_pencil: pencil does not lie in A");
  Rng rng(seed);
  std::vector<DecomposableHit> hits;
  for (std::size_t s = 0; s < samples; ++s) {
    Rat t(rng.uniform(-40, 40), rng.uniform(1, 9));
    t.canonicalize();
    const RatVector at = axpy(t, a1, a0);
    if (is_zero(at)) continue;
    const Decomposability dec = is_decomposable(MultiVector(kV6, 3, at));
    if (dec.decomposable) hits.push_back({s, t, dec.d});
  }
  return hits;
}

}  // namespace gmlag

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gmlag/error.hpp"
#include "gmlag/exterior.hpp"
#include "gmlag/matrix.hpp"
#include "gmlag/polynomial.hpp"
#include "gmlag/quadric.hpp"
#include "gmlag/subspace.hpp"

namespace gmlag {

enum class GMType { Ordinary, Special, NonLci };

inline std::string to_string(GMType t) {
  switch (t) {
    case GMType::Ordinary:
      return "ordinary";
    case GMType::Special:
      return "special";
    case GMType::NonLci:
      return "non_lci";
  }
  return "non_lci";
}

inline GMType parse_gm_type(const std::string& s) {
  if (s == "ordinary") return GMType::Ordinary;
  if (s == "special") return GMType::Special;
  if (s == "non_lci") return GMType::NonLci;
  throw InputError("unknown GM type \"" + s + "\"");
}

// W is k^{n+5} with its standard basis. Column j of mu is μ(w_j) in the Λ²V₅ monomial
// basis (ε fixed by e12345 ↦ 1); q[i] is the Gram matrix of q(e_{i+1}).
struct GMData {
  int n = 0;
  RatMatrix mu;
  std::array<RatMatrix, 6> q;
  std::string type_hint;

  std::size_t w_dim() const { return static_cast<std::size_t>(n + 5); }

  RatMatrix q_at(const RatVector& v) const {
    require(v.size() == kV6, "q_at expects a vector of V₆");
    RatMatrix out(w_dim(), w_dim());
    for (std::size_t i = 0; i < kV6; ++i)
      if (v[i] != 0) out = out + v[i] * q[i];
    return out;
  }

  friend bool operator==(const GMData& a, const GMData& b) {
    return a.n == b.n && a.mu == b.mu && a.q == b.q && a.type_hint == b.type_hint;
  }
};

// P_i(α, β) = ε(e_i ∧ α ∧ β) on Λ²V₅, for i = 0..4.
inline const std::array<RatMatrix, 5>& plucker_forms() {
  static const std::array<RatMatrix, 5> forms = [] {
    std::array<RatMatrix, 5> out;
    const ExteriorBasis& b2 = ExteriorBasis::get(kV5, 2);
    for (int i = 0; i < kV5; ++i) {
      RatMatrix m(b2.size(), b2.size());
      const MultiVector ei = MultiVector::vector(unit_vector(kV5, static_cast<std::size_t>(i)));
      for (std::size_t a = 0; a < b2.size(); ++a)
        for (std::size_t c = 0; c < b2.size(); ++c) {
          const MultiVector top = ei.wedge(MultiVector(kV5, 2, unit_vector(kL2V5, a))).wedge(MultiVector(kV5, 2, unit_vector(kL2V5, c)));
          m(a, c) = epsilon5(top);
        }
      out[static_cast<std::size_t>(i)] = std::move(m);
    }
    return out;
  }();
  return forms;
}

inline void check_shapes(const GMData& d) {
  require(d.n + 5 >= 0, "GM data: n + 5 must be non-negative");
  require(d.mu.rows() == kL2V5 && d.mu.cols() == d.w_dim(),
          "GM data: mu must be 10x" + std::to_string(d.w_dim()) + ", got " + shape(d.mu));
  for (std::size_t i = 0; i < kV6; ++i)
    require(d.q[i].rows() == d.w_dim() && d.q[i].cols() == d.w_dim(),
            "GM data: q[" + std::to_string(i) + "] must be square of size " + std::to_string(d.w_dim()));
}

struct Violation {
  std::string identity;
  std::size_t v_index = 0;  // 0-based basis vector of V₆
  std::size_t w1 = 0;
  std::size_t w2 = 0;

  std::string message() const {
    return identity + " fails at (e" + std::to_string(v_index + 1) + ", w" + std::to_string(w1 + 1) + ", w" +
           std::to_string(w2 + 1) + ")";
  }
};

struct ValidationReport {
  bool ok = false;
  GMType type = GMType::NonLci;
  std::optional<Violation> violation;
  std::size_t kernel_dim = 0;
  bool v_independent = true;  // special condition agrees for e6 and e6 + e1
  bool degenerate = false;    // dim W − 5 < 1
};

inline ValidationReport validate(const GMData& d) {
  check_shapes(d);
  ValidationReport rep;
  const std::size_t m = d.w_dim();
  for (std::size_t i = 0; i < kV6; ++i)
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a + 1; b < m; ++b)
        if (d.q[i](a, b) != d.q[i](b, a)) {
          rep.violation = Violation{"symmetry of q(v)", i, a, b};
          return rep;
        }
  const RatMatrix mut = d.mu.transpose();
  for (std::size_t i = 0; i < kV5; ++i) {
    const RatMatrix expected = mut * plucker_forms()[i] * d.mu;
    for (std::size_t a = 0; a < m; ++a)
      for (std::size_t b = a; b < m; ++b)
        if (expected(a, b) != d.q[i](a, b)) {
          rep.violation = Violation{"Plücker compatibility q(v)(w1,w2) = ε(v∧μw1∧μw2)", i, a, b};
          return rep;
        }
  }
  const Subspace k = kernel(d.mu);
  rep.kernel_dim = k.dim();
  if (k.dim() == 0) {
    rep.type = GMType::Ordinary;
  } else if (k.dim() == 1) {
    const RatVector w1 = k.basis_vector(0);
    RatVector v = unit_vector(kV6, 5);
    const Rat at_e6 = bilinear(d.q_at(v), w1, w1);
    v[0] = 1;
    const Rat at_other = bilinear(d.q_at(v), w1, w1);
    rep.v_independent = (at_e6 != 0) == (at_other != 0);
    rep.type = (at_e6 != 0 && at_other != 0) ? GMType::Special : GMType::NonLci;
  } else {
    rep.type = GMType::NonLci;
  }
  rep.degenerate = d.n < 1;
  rep.ok = rep.v_independent && !rep.degenerate;
  return rep;
}

inline bool is_lci(GMType t) { return t != GMType::NonLci; }

// W = W₀ ⊕ W₁ with W₁ = Ker μ and W₀ its q(v)-orthogonal for v ∉ V₅.
struct WSplit {
  RatMatrix w0;  // rows: a basis of W₀ in the coordinates of W
  RatMatrix w1;  // 0 or 1 rows
  std::array<RatMatrix, 6> q0;
  std::array<RatMatrix, 6> q1;
};

inline WSplit split_w(const GMData& d) {
  const ValidationReport rep = validate(d);
  require(!rep.violation, "split_w: " + (rep.violation ? rep.violation->message() : std::string()));
  require(is_lci(rep.type), "split_w: GM data is not lci");
  const std::size_t m = d.w_dim();
  WSplit s;
  if (rep.type == GMType::Ordinary) {
    s.w0 = RatMatrix::identity(m);
    s.w1 = RatMatrix(0, m);
  } else {
    s.w1 = kernel(d.mu).basis();
    RatVector v = unit_vector(kV6, 5);
    const Subspace w0 = kernel(s.w1 * d.q_at(v));
    v[0] = 1;
    ensure(w0 == kernel(s.w1 * d.q_at(v)), "split_w: W₀ depends on the choice of v");
    s.w0 = w0.basis();
  }
  for (std::size_t i = 0; i < kV6; ++i) {
    s.q0[i] = s.w0 * d.q[i] * s.w0.transpose();
    s.q1[i] = s.w1 * d.q[i] * s.w1.transpose();
  }
  return s;
}

inline QuadricOnSubspace quadric_at(const GMData& d, const RatVector& v) {
  check_shapes(d);
  return QuadricOnSubspace(Subspace::full(d.w_dim()), d.q_at(v));
}

enum class Membership { OnX, OnHullOnly, Off };

inline std::string to_string(Membership m) {
  switch (m) {
    case Membership::OnX:
      return "on_X";
    case Membership::OnHullOnly:
      return "on_hull_only";
    case Membership::Off:
      return "off";
  }
  return "off";
}

inline Membership membership(const GMData& d, const RatVector& w) {
  require(w.size() == d.w_dim(), "membership: point has the wrong dimension");
  require(!is_zero(w), "membership: zero vector is not a point");
  for (std::size_t i = 0; i < kV5; ++i)
    if (bilinear(d.q[i], w, w) != 0) return Membership::Off;
  return bilinear(d.q[5], w, w) == 0 ? Membership::OnX : Membership::OnHullOnly;
}

inline std::size_t tangent_codim_at(const GMData& d, const RatVector& w) {
  require(w.size() == d.w_dim(), "tangent_codim_at: point has the wrong dimension");
  require(!is_zero(w), "tangent_codim_at: zero vector is not a point");
  RatMatrix grad(kV6, d.w_dim());
  for (std::size_t i = 0; i < kV6; ++i) grad.set_row(i, d.q[i] * w);
  return rank(grad);
}

struct HullSample {
  RatVector w;
  RatVector v1;
  RatVector v2;
  unsigned resamples = 0;
};

// Solves v1∧v2 ∈ μ(W₀) for v2 ∉ span(v1); nullopt when only multiples of v1 solve it.
inline std::optional<HullSample> hull_point_from(const GMData& d, const WSplit& split, const RatVector& v1, Rng& rng) {
  require(v1.size() == kV5 && !is_zero(v1), "hull_point_from: v1 must be a non-zero vector of V₅");
  const Subspace image_mu = image(d.mu);
  const Subspace constraints = annihilator(image_mu);
  const MultiVector mv1 = MultiVector::vector(v1);
  RatMatrix c(constraints.dim(), kV5);
  for (std::size_t j = 0; j < kV5; ++j) {
    const MultiVector p = mv1.wedge(MultiVector::vector(unit_vector(kV5, j)));
    for (std::size_t r = 0; r < constraints.dim(); ++r) c(r, j) = dot(constraints.basis_vector(r), p.coords());
  }
  const Subspace solutions = kernel(c);
  if (solutions.dim() < 2) return std::nullopt;
  RatVector v2;
  MultiVector target(kV5, 2);
  do {
    v2 = row_times(rng.nonzero_int_vector(solutions.dim(), 3), solutions.basis());
    target = mv1.wedge(MultiVector::vector(v2));
  } while (target.is_zero());
  RatVector coeffs;
  ensure(solve_row_combination(split.w0 * d.mu.transpose(), target.coords(), coeffs),
         "hull_point_from: v1∧v2 is not in μ(W₀)");
  RatVector w = row_times(coeffs, split.w0);
  if (split.w1.rows() == 1) w = axpy(rng.small_int(3), split.w1.row(0), w);
  return HullSample{w, v1, v2, 0};
}

inline HullSample hull_point_sample(const GMData& d, std::uint64_t seed, unsigned max_attempts = 1000) {
  const WSplit split = split_w(d);
  Rng rng(seed);
  for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
    const RatVector v1 = rng.nonzero_int_vector(kV5, 3);
    if (auto s = hull_point_from(d, split, v1, rng)) {
      s->resamples = attempt;
      for (std::size_t i = 0; i < kV5; ++i)
        ensure(bilinear(d.q[i], s->w, s->w) == 0, "hull_point_sample: sampled point violates a V₅-quadric");
      return *s;
    }
  }
  throw MathViolation("hull_point_sample: no admissible v1 found");
}

// Best-effort search for a rational point of X on lines of the hull.
inline std::optional<RatVector> find_rational_point(const GMData& d, std::uint64_t seed, unsigned attempts = 200) {
  const WSplit split = split_w(d);
  Rng rng(seed);
  const RatMatrix& q6 = d.q[5];
  auto root_on_line = [&](const RatVector& p, const RatVector& r) -> std::optional<RatVector> {
    // q6(p + s·r) = a + 2b·s + c·s²
    const Rat a = bilinear(q6, p, p);
    const Rat b = bilinear(q6, p, r);
    const Rat c = bilinear(q6, r, r);
    if (a == 0) return p;
    if (c == 0) {
      if (b == 0) return std::nullopt;
      return axpy(-a / (2 * b), r, p);
    }
    const Rat disc = b * b - a * c;
    if (disc < 0 || !mpz_perfect_square_p(disc.get_num().get_mpz_t()) || !mpz_perfect_square_p(disc.get_den().get_mpz_t()))
      return std::nullopt;
    const Rat root(mpz_class(sqrt(disc.get_num())), mpz_class(sqrt(disc.get_den())));
    return axpy((-b + root) / c, r, p);
  };
  for (unsigned t = 0; t < attempts; ++t) {
    const RatVector v1 = rng.nonzero_int_vector(kV5, 3);
    auto s1 = hull_point_from(d, split, v1, rng);
    if (!s1) continue;
    std::optional<RatVector> found;
    if (split.w1.rows() == 1) {
      found = root_on_line(s1->w, split.w1.row(0));
    } else {
      auto s2 = hull_point_from(d, split, v1, rng);
      if (s2 && !is_zero(axpy(-1, s1->w, s2->w))) found = root_on_line(s1->w, s2->w);
    }
    if (found && !is_zero(*found) && membership(d, *found) == Membership::OnX) return found;
  }
  return std::nullopt;
}

// ---- opposite and canonical forms ----

inline GMData opposite(const GMData& d) {
  const ValidationReport rep = validate(d);
  require(!rep.violation, "opposite: " + (rep.violation ? rep.violation->message() : std::string()));
  require(is_lci(rep.type), "opposite: GM data is not lci");
  GMData out;
  if (rep.type == GMType::Ordinary) {
    const std::size_t m = d.w_dim();
    out.n = d.n + 1;
    out.mu = hstack(d.mu, RatMatrix(kL2V5, 1));
    for (std::size_t i = 0; i < kV6; ++i) {
      RatMatrix q(m + 1, m + 1);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) q(a, b) = d.q[i](a, b);
      out.q[i] = std::move(q);
    }
    // The fixed representative t = 1 of V₆/V₅ ≅ Sym²W₁^∨.
    out.q[5](m, m) = 1;
    out.type_hint = to_string(GMType::Special);
  } else {
    require(d.n >= 2, "opposite: special input must have dimension at least 2");
    const WSplit s = split_w(d);
    out.n = d.n - 1;
    out.mu = d.mu * s.w0.transpose();
    out.q = s.q0;
    out.type_hint = to_string(GMType::Ordinary);
  }
  return out;
}

namespace detail {

// Square-free integer in the square class of a non-zero rational. Trial division is
// bounded; a cofactor above the bound is kept unless it is a perfect square.
inline mpz_class squarefree_class(const Rat& c) {
  mpz_class x = c.get_num() * c.get_den();
  const int sign = x < 0 ? -1 : 1;
  x = abs(x);
  mpz_class out = 1;
  for (mpz_class p = 2; p * p <= x && p < 1000000; ++p) {
    unsigned e = 0;
    while (x % p == 0) {
      x /= p;
      ++e;
    }
    if (e % 2 == 1) out *= p;
  }
  if (x > 1 && !mpz_perfect_square_p(x.get_mpz_t())) out *= x;
  return sign * out;
}

// Left inverse of an injective matrix.
inline RatMatrix left_inverse(const RatMatrix& m) {
  const RatMatrix mt = m.transpose();
  return inverse(mt * m) * mt;
}

}  // namespace detail

// W₀ basis mapped by μ to the RREF basis of μ(W); for special data W₁ comes last,
// scaled so that q(e6) on it is the square-free representative of its square class.
inline GMData canonical_form(const GMData& d) {
  const ValidationReport rep = validate(d);
  if (rep.violation || !is_lci(rep.type)) return d;
  const WSplit s = split_w(d);
  const RatMatrix mu0 = d.mu * s.w0.transpose();
  const Subspace img = image(mu0);
  const RatMatrix t0 = detail::left_inverse(mu0) * img.basis().transpose();
  RatMatrix t = s.w0.transpose() * t0;
  if (s.w1.rows() == 1) {
    const Rat c = s.q1[5](0, 0);
    const mpz_class target = detail::squarefree_class(c);
    // c·s² = target with s = |target|·k/|a| where a·b = target·k², c = a/b.
    const mpz_class ab = c.get_num() * c.get_den();
    const mpz_class k = sqrt(mpz_class(ab / target));
    Rat scale(mpz_class(abs(target) * k), mpz_class(abs(c.get_num())));
    scale.canonicalize();
    RatMatrix w1col = scale * s.w1.transpose();
    t = hstack(t, w1col);
    ensure(bilinear(d.q[5], w1col.col(0), w1col.col(0)) == Rat(target), "canonical_form: rescaling failed");
  }
  GMData out;
  out.n = d.n;
  out.mu = d.mu * t;
  for (std::size_t i = 0; i < kV6; ++i) out.q[i] = t.transpose() * d.q[i] * t;
  out.type_hint = to_string(rep.type);
  return out;
}

// ---- discriminant along a line ----

struct DiscriminantReport {
  Poly det_poly;
  unsigned plucker_mult = 0;
  Poly dis_poly;
  bool whole_line = false;        // det_poly ≡ 0, so Dis = P(V₆) on this line
  bool exceeds_expected = false;  // plucker_mult > n − 1
};

inline Poly det_along_line(const GMData& d, const RatVector& va, const RatVector& vb) {
  const std::size_t m = d.w_dim();
  RatVector xs;
  RatVector ys;
  for (std::size_t k = 0; k <= m + 1; ++k) {
    const Rat t(static_cast<long>(k));
    xs.push_back(t);
    ys.push_back(determinant(d.q_at(axpy(t, vb, va))));
  }
  const Poly p = interpolate(RatVector(xs.begin(), xs.end() - 1), RatVector(ys.begin(), ys.end() - 1));
  ensure(p(xs.back()) == ys.back(), "det_along_line: interpolation check failed");
  return p;
}

inline DiscriminantReport discriminant_on_line(const GMData& d, const RatVector& va, const RatVector& vb) {
  check_shapes(d);
  require(va.size() == kV6 && vb.size() == kV6, "discriminant_on_line: points must lie in V₆");
  require(rank(RatMatrix::from_rows({va, vb}, kV6)) == 2, "discriminant_on_line: points must span a line");
  require(va[5] != 0 || vb[5] != 0, "discriminant_on_line: line lies inside P(V₅)");
  require(d.n >= 1, "discriminant_on_line: GM data must have n ≥ 1");
  DiscriminantReport rep;
  rep.det_poly = det_along_line(d, va, vb);
  if (rep.det_poly.is_zero()) {
    rep.whole_line = true;
    return rep;
  }
  const unsigned expected = static_cast<unsigned>(d.n - 1);
  const Poly ell = Poly::linear(va[5], vb[5]);
  if (ell.degree() == 1) {
    rep.plucker_mult = multiplicity(rep.det_poly, ell);
  } else {
    // λ is constant on the affine line; the hyperplane is met at t = ∞.
    rep.plucker_mult = static_cast<unsigned>(static_cast<int>(d.w_dim()) - rep.det_poly.degree());
  }
  ensure(rep.plucker_mult >= expected, "discriminant_on_line: λ^{n−1} does not divide the determinant");
  rep.exceeds_expected = rep.plucker_mult > expected;
  rep.dis_poly = exact_quotient(rep.det_poly, pow(ell, expected));
  ensure(rep.dis_poly.degree() <= 6, "discriminant_on_line: quotient has degree above 6");
  return rep;
}

}  // namespace gmlag

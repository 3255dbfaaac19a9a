#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gmlag/error.hpp"
#include "gmlag/matrix.hpp"
#include "gmlag/subspace.hpp"
#include "gmlag/symplectic.hpp"

namespace gmlag {

// V = L₁ ⊕ L₂ with both summands Lagrangian.
class LagrangianDecomposition {
 public:
  LagrangianDecomposition(SymplecticSpace space, Subspace l1, Subspace l2)
      : space_(std::move(space)), l1_(std::move(l1)), l2_(std::move(l2)) {
    require(l1_.ambient_dim() == space_.dim() && l2_.ambient_dim() == space_.dim(), "decomposition: ambient mismatch");
    require(space_.is_lagrangian(l1_), "decomposition: l1 is not Lagrangian");
    require(space_.is_lagrangian(l2_), "decomposition: l2 is not Lagrangian");
    const RatMatrix both = vstack(l1_.basis(), l2_.basis());
    require(rank(both) == space_.dim(), "decomposition: l1 and l2 are not transverse");
    split_ = inverse(both);
  }

  const SymplecticSpace& space() const { return space_; }
  const Subspace& l1() const { return l1_; }
  const Subspace& l2() const { return l2_; }
  std::size_t half() const { return l1_.dim(); }

  RatVector pr1(const RatVector& x) const {
    RatVector c = row_times(x, split_);
    c.resize(half());
    return row_times(c, l1_.basis());
  }

  RatVector pr2(const RatVector& x) const {
    const RatVector c = row_times(x, split_);
    return row_times(RatVector(c.begin() + static_cast<long>(half()), c.end()), l2_.basis());
  }

  Subspace pr1(const Subspace& s) const { return project(s, true); }
  Subspace pr2(const Subspace& s) const { return project(s, false); }

  // Rows d_j spanning L₂ with ω(b_i, d_j) = δ_ij for the RREF basis b_i of L₁.
  RatMatrix l2_dual_basis() const {
    const RatMatrix pairing = l1_.basis() * space_.form() * l2_.basis().transpose();
    return inverse(pairing).transpose() * l2_.basis();
  }

 private:
  Subspace project(const Subspace& s, bool first) const {
    std::vector<RatVector> rows;
    for (std::size_t i = 0; i < s.dim(); ++i) rows.push_back(first ? pr1(s.basis_vector(i)) : pr2(s.basis_vector(i)));
    return Subspace::span(rows, space_.dim());
  }

  SymplecticSpace space_;
  Subspace l1_;
  Subspace l2_;
  RatMatrix split_;  // inverse of [basis(l1); basis(l2)]
};

// L ⊕ 0 and 0 ⊕ L^∨ inside standard_space(m).
inline LagrangianDecomposition standard_decomposition(std::size_t m) {
  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
  for (std::size_t i = 0; i < m; ++i) {
    first.push_back(i);
    second.push_back(m + i);
  }
  return LagrangianDecomposition(standard_space(m), Subspace::coordinate(2 * m, first), Subspace::coordinate(2 * m, second));
}

// Λ³V₅ and e6∧Λ²V₅ inside Λ³V₆.
inline const LagrangianDecomposition& l3v6_decomposition() {
  static const LagrangianDecomposition dec = [] {
    std::vector<std::size_t> with6;
    const ExteriorBasis& b = ExteriorBasis::get(kV6, 3);
    for (std::size_t k = 0; k < b.size(); ++k)
      if (b.mask(k) & (1U << 5)) with6.push_back(k);
    return LagrangianDecomposition(l3v6_space(), l3v5_subspace(), Subspace::coordinate(kL3V6, with6));
  }();
  return dec;
}

// A quadric inside P(span) ⊂ P(k^ambient); gram is taken on the RREF basis of span.
class QuadricOnSubspace {
 public:
  QuadricOnSubspace(Subspace span, RatMatrix gram) : span_(std::move(span)), gram_(std::move(gram)) {
    require(gram_.rows() == span_.dim() && gram_.cols() == span_.dim(), "quadric: gram size must equal dim(span)");
    require(gram_.is_symmetric(), "quadric: gram must be symmetric");
  }

  std::size_t ambient_dim() const { return span_.ambient_dim(); }
  const Subspace& span() const { return span_; }
  const RatMatrix& gram() const { return gram_; }

  Subspace kernel() const {
    const Subspace k = gmlag::kernel(gram_);
    return Subspace::span(k.basis() * span_.basis());
  }

  std::size_t rank() const { return gmlag::rank(gram_); }
  std::size_t corank() const { return span_.dim() - rank(); }

  Rat evaluate(const RatVector& x, const RatVector& y) const {
    return bilinear(gram_, span_.coordinates(x), span_.coordinates(y));
  }

  // Gram matrix on the given rows, each of which must lie in span.
  RatMatrix gram_on(const RatMatrix& rows) const {
    RatMatrix coords(rows.rows(), span_.dim());
    for (std::size_t i = 0; i < rows.rows(); ++i) coords.set_row(i, span_.coordinates(rows.row(i)));
    return coords * gram_ * coords.transpose();
  }

  friend bool operator==(const QuadricOnSubspace& a, const QuadricOnSubspace& b) {
    return a.span_ == b.span_ && a.gram_ == b.gram_;
  }

 private:
  Subspace span_;
  RatMatrix gram_;
};

struct QuadricPair {
  QuadricOnSubspace q1;  // on pr₁(A) ⊂ L₁
  QuadricOnSubspace q2;  // on pr₂(A) ⊂ L₂
};

// q^A(x, y) = ω(pr₁x, pr₂y) on the RREF basis of a.
inline RatMatrix lagrangian_bilinear_form(const LagrangianDecomposition& dec, const Subspace& a) {
  const std::size_t k = a.dim();
  RatMatrix g(k, k);
  std::vector<RatVector> p1;
  std::vector<RatVector> p2;
  for (std::size_t i = 0; i < k; ++i) {
    p1.push_back(dec.pr1(a.basis_vector(i)));
    p2.push_back(dec.pr2(a.basis_vector(i)));
  }
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g(i, j) = dec.space().omega(p1[i], p2[j]);
  return g;
}

inline QuadricPair quadric_pair_from_lagrangian(const LagrangianDecomposition& dec, const Subspace& a) {
  require(dec.space().is_lagrangian(a), "quadric_pair_from_lagrangian: subspace is not Lagrangian");
  const std::size_t k = a.dim();
  RatMatrix p1(k, dec.space().dim());
  RatMatrix p2(k, dec.space().dim());
  for (std::size_t i = 0; i < k; ++i) {
    p1.set_row(i, dec.pr1(a.basis_vector(i)));
    p2.set_row(i, dec.pr2(a.basis_vector(i)));
  }
  const Subspace w1 = Subspace::span(p1);
  const Subspace w2 = Subspace::span(p2);
  // Lifting the basis of W₁ (resp. W₂) to A and taking the other projection.
  const auto c1 = solve_row_combinations(p1, w1.basis());
  const auto c2 = solve_row_combinations(p2, w2.basis());
  ensure(c1 && c2, "quadric_pair_from_lagrangian: projection basis does not lift to A");
  const RatMatrix& form = dec.space().form();
  const RatMatrix g1 = w1.dim() ? RatMatrix(w1.basis() * form * (*c1 * p2).transpose()) : RatMatrix(0, 0);
  const RatMatrix g2 = w2.dim() ? RatMatrix((*c2 * p1) * form * w2.basis().transpose()) : RatMatrix(0, 0);
  ensure(g1.is_symmetric() && g2.is_symmetric(), "quadric_pair_from_lagrangian: induced forms are not symmetric");
  return {QuadricOnSubspace(w1, g1), QuadricOnSubspace(w2, g2)};
}

// The unique Lagrangian in standard_space(m) with Q₁ = q, namely
// {(x₁, x₂) : x₁ ∈ W, x₂ ≡ q(x₁) mod W^⊥}.
inline Subspace lagrangian_from_quadric(const QuadricOnSubspace& q) {
  const std::size_t m = q.ambient_dim();
  const Subspace& w = q.span();
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < w.dim(); ++i) {
    RatVector v(2 * m, Rat(0));
    for (std::size_t c = 0; c < m; ++c) v[c] = w.basis()(i, c);
    // The functional q(b_i, ·) extended by zero off the pivot columns of W.
    for (std::size_t j = 0; j < w.dim(); ++j) v[m + w.pivots()[j]] = q.gram()(i, j);
    rows.push_back(std::move(v));
  }
  const Subspace perp = annihilator(w);
  for (std::size_t i = 0; i < perp.dim(); ++i) {
    RatVector v(2 * m, Rat(0));
    for (std::size_t c = 0; c < m; ++c) v[m + c] = perp.basis()(i, c);
    rows.push_back(std::move(v));
  }
  return Subspace::span(rows, 2 * m);
}

// Projective dual of a quadric on W₁ ⊂ L₁, living on Ker(q)^⊥ ∩ L₂ through the ω-pairing.
inline QuadricOnSubspace dual_quadric(const LagrangianDecomposition& dec, const QuadricOnSubspace& q1) {
  require(dec.l1().contains(q1.span()), "dual_quadric: quadric must live in l1");
  const Subspace k1 = q1.kernel();
  const Subspace w2 = subspace_intersect(dec.l2(), dec.space().orthogonal(k1));
  const RatMatrix u = complement_basis(k1, q1.span());
  const RatMatrix g = q1.gram_on(u);
  const RatMatrix phi = u * dec.space().form() * w2.basis().transpose();
  RatMatrix g2 = u.rows() == 0 ? RatMatrix(w2.dim(), w2.dim()) : phi.transpose() * inverse(g) * phi;
  return QuadricOnSubspace(w2, std::move(g2));
}

struct IsotropicReduction {
  LagrangianDecomposition reduced_dec;  // on I^⊥/I, basis given by the rows of embedding
  Subspace reduced_a;                   // Ā in reduced coordinates
  Subspace span_formula;                // ((A∩L₁)/(A∩I))^⊥ inside L̄₂, ambient coordinates
  Subspace kernel_formula;              // (A∩(I⊕L̄₂))/(A∩I) inside L̄₂, ambient coordinates
  Subspace l2_bar;                      // L₂ ∩ I^⊥, ambient coordinates
  RatMatrix embedding;                  // complement of I in L₁, then a basis of L̄₂

  Subspace to_ambient(const Subspace& reduced) const {
    return Subspace::span(reduced.basis() * embedding);
  }

  // Coordinates of a vector of L̄₂ in the reduced space.
  RatVector reduced_coords_of_l2bar(const RatVector& y) const {
    RatVector c;
    ensure(solve_row_combination(embedding, y, c), "reduced_coords: vector is not represented");
    return c;
  }
};

inline IsotropicReduction isotropic_reduce(const LagrangianDecomposition& dec, const Subspace& a, const Subspace& i) {
  const SymplecticSpace& space = dec.space();
  require(dec.l1().contains(i), "isotropic_reduce: i is not contained in l1");
  require(space.is_lagrangian(a), "isotropic_reduce: a is not Lagrangian");
  const std::size_t n = space.dim();

  const Subspace i_perp = space.orthogonal(i);
  const Subspace l2_bar = subspace_intersect(dec.l2(), i_perp);
  const RatMatrix c1 = complement_basis(i, dec.l1());
  ensure(c1.rows() == l2_bar.dim(), "isotropic_reduce: reduced summands have different dimensions");
  const RatMatrix embedding = vstack(c1, l2_bar.basis());
  const std::size_t half = c1.rows();

  // Ā: project A ∩ I^⊥ along I onto the chosen representatives.
  const RatMatrix frame = vstack(i.basis(), embedding);
  const Subspace a_perp = subspace_intersect(a, i_perp);
  std::vector<RatVector> reduced_rows;
  for (std::size_t r = 0; r < a_perp.dim(); ++r) {
    RatVector c;
    ensure(solve_row_combination(frame, a_perp.basis_vector(r), c), "isotropic_reduce: I^⊥ frame incomplete");
    reduced_rows.emplace_back(c.begin() + static_cast<long>(i.dim()), c.end());
  }
  Subspace reduced_a = Subspace::span(reduced_rows, 2 * half);

  std::vector<std::size_t> first;
  std::vector<std::size_t> second;
  for (std::size_t k = 0; k < half; ++k) {
    first.push_back(k);
    second.push_back(half + k);
  }
  SymplecticSpace reduced_space(embedding * space.form() * embedding.transpose());
  LagrangianDecomposition reduced_dec(std::move(reduced_space), Subspace::coordinate(2 * half, first),
                                      Subspace::coordinate(2 * half, second));

  const Subspace a_l1 = subspace_intersect(a, dec.l1());
  Subspace span_formula = subspace_intersect(l2_bar, space.orthogonal(a_l1));

  const Subspace i_plus = subspace_sum(i, l2_bar);
  const Subspace a_cap = subspace_intersect(a, i_plus);
  const RatMatrix split = vstack(i.basis(), l2_bar.basis());
  std::vector<RatVector> ker_rows;
  for (std::size_t r = 0; r < a_cap.dim(); ++r) {
    RatVector c;
    ensure(solve_row_combination(split, a_cap.basis_vector(r), c), "isotropic_reduce: I ⊕ L̄₂ split failed");
    ker_rows.push_back(row_times(RatVector(c.begin() + static_cast<long>(i.dim()), c.end()), l2_bar.basis()));
  }
  Subspace kernel_formula = Subspace::span(ker_rows, n);

  return {std::move(reduced_dec), std::move(reduced_a), std::move(span_formula), std::move(kernel_formula), l2_bar,
          embedding};
}

// The isotropic I = L₁ ∩ L̄₂^⊥ whose reduction has the given L̄₂.
inline Subspace isotropic_for_target(const LagrangianDecomposition& dec, const Subspace& l2_bar) {
  require(dec.l2().contains(l2_bar), "isotropic_for_target: target must lie in l2");
  return subspace_intersect(dec.l1(), dec.space().orthogonal(l2_bar));
}

// ---- random Lagrangians ----

// Random symmetric k×k matrix of rank exactly r (entries small integers).
inline RatMatrix random_symmetric(Rng& rng, std::size_t k, std::size_t r, long bound = 3) {
  RatMatrix m(k, k);
  std::size_t achieved = 0;
  while (achieved != r) {
    m = RatMatrix(k, k);
    for (std::size_t t = 0; t < r; ++t) {
      const RatVector u = rng.int_vector(k, bound);
      Rat c = rng.small_int(bound);
      if (c == 0) c = 1;
      for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) m(i, j) += c * u[i] * u[j];
    }
    achieved = rank(m);
  }
  return m;
}

// A random Lagrangian: a symmetric graph over L₁ in ω-dual coordinates, followed by a
// symplectic swap on a random subset of coordinate pairs. Occasionally returns l1 or l2.
inline Subspace random_lagrangian(const LagrangianDecomposition& dec, Rng& rng) {
  const std::size_t k = dec.half();
  const long roll = rng.uniform(0, 19);
  if (roll == 0) return dec.l1();
  if (roll == 1) return dec.l2();
  const std::size_t r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(k)));
  const RatMatrix s = random_symmetric(rng, k, r);
  const RatMatrix d = dec.l2_dual_basis();
  std::vector<bool> swap(k);
  for (std::size_t j = 0; j < k; ++j) swap[j] = rng.uniform(0, 3) == 0;
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < k; ++i) {
    RatVector x = unit_vector(k, i);
    RatVector y = s.row(i);
    for (std::size_t j = 0; j < k; ++j) {
      if (!swap[j]) continue;
      const Rat xj = x[j];
      x[j] = -y[j];
      y[j] = xj;
    }
    rows.push_back(axpy(1, row_times(y, d), row_times(x, dec.l1().basis())));
  }
  return Subspace::span(rows, dec.space().dim());
}

// A random decomposition of standard_space(m): two transverse random Lagrangians.
inline LagrangianDecomposition random_decomposition(std::size_t m, Rng& rng) {
  const LagrangianDecomposition base = standard_decomposition(m);
  for (;;) {
    Subspace l1 = random_lagrangian(base, rng);
    Subspace l2 = random_lagrangian(base, rng);
    if (rank(vstack(l1.basis(), l2.basis())) == 2 * m)
      return LagrangianDecomposition(standard_space(m), std::move(l1), std::move(l2));
  }
}

}  // namespace gmlag

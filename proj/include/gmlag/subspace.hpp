#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "gmlag/error.hpp"
#include "gmlag/matrix.hpp"

namespace gmlag {

// Row space of a matrix kept in reduced row echelon form, so equality is entry-wise.
class Subspace {
 public:
  Subspace() = default;

  static Subspace span(const RatMatrix& rows) {
    Rref r = rref(rows);
    Subspace s;
    s.ambient_ = rows.cols();
    s.basis_ = std::move(r.reduced);
    s.pivots_ = std::move(r.pivots);
    return s;
  }

  static Subspace span(const std::vector<RatVector>& vectors, std::size_t ambient) {
    return span(RatMatrix::from_rows(vectors, ambient));
  }

  static Subspace zero(std::size_t n) { return span(RatMatrix(0, n)); }
  static Subspace full(std::size_t n) { return span(RatMatrix::identity(n)); }

  static Subspace coordinate(std::size_t n, const std::vector<std::size_t>& indices) {
    std::vector<RatVector> rows;
    for (std::size_t i : indices) rows.push_back(unit_vector(n, i));
    return span(rows, n);
  }

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  const RatMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  RatVector basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<RatVector> basis_vectors() const { return basis_.row_vectors(); }

  // Coordinates in the RREF basis are the entries at the pivot columns.
  RatVector coordinates(const RatVector& v) const {
    if (v.size() != ambient_) throw InputError("coordinates: ambient mismatch");
    RatVector c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    if (row_times(c, basis_) != v) throw InputError("coordinates: vector not in subspace");
    return c;
  }

  bool contains(const RatVector& v) const {
    if (v.size() != ambient_) throw InputError("contains: ambient mismatch");
    RatVector c(dim());
    for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
    return row_times(c, basis_) == v;
  }

  bool contains(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw InputError("contains: ambient mismatch");
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_vector(i))) return false;
    return true;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  RatMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// {x : m·x = 0}
inline Subspace kernel(const RatMatrix& m) {
  const Rref r = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : r.pivots) is_pivot[p] = true;
  std::vector<RatVector> vecs;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    RatVector x(n, Rat(0));
    x[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) x[r.pivots[i]] = -r.reduced(i, f);
    vecs.push_back(std::move(x));
  }
  return Subspace::span(vecs, n);
}

// Column space of m.
inline Subspace image(const RatMatrix& m) { return Subspace::span(m.transpose()); }

// Annihilator in the dual space, identified with k^n through the dual basis.
inline Subspace annihilator(const Subspace& a) { return kernel(a.basis()); }

inline Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("subspace_sum: ambient mismatch");
  return Subspace::span(vstack(a.basis(), b.basis()));
}

inline Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw InputError("subspace_intersect: ambient mismatch");
  if (a.is_zero() || b.is_zero()) return Subspace::zero(a.ambient_dim());
  if (a.contains(b)) return b;
  if (b.contains(a)) return a;
  return annihilator(subspace_sum(annihilator(a), annihilator(b)));
}

// Image of s under the linear map with matrix `map` (column convention).
inline Subspace apply_map(const RatMatrix& map, const Subspace& s) {
  if (map.cols() != s.ambient_dim()) throw InputError("apply_map: dimension mismatch");
  return Subspace::span(s.basis() * map.transpose());
}

// Rows extending a basis of `sub` to a basis of `super`, chosen greedily from super's basis.
inline RatMatrix complement_basis(const Subspace& sub, const Subspace& super) {
  if (!super.contains(sub)) throw InputError("complement_basis: not a subspace");
  Subspace current = sub;
  std::vector<RatVector> extra;
  for (std::size_t i = 0; i < super.dim() && current.dim() < super.dim(); ++i) {
    RatVector v = super.basis_vector(i);
    if (current.contains(v)) continue;
    extra.push_back(v);
    current = subspace_sum(current, Subspace::span({v}, super.ambient_dim()));
  }
  return RatMatrix::from_rows(extra, super.ambient_dim());
}

// Solves c·rows = v for c; the rows need not be independent. Returns false when v is not in their span.
inline bool solve_row_combination(const RatMatrix& rows, const RatVector& v, RatVector& c) {
  const std::size_t k = rows.rows();
  const std::size_t n = rows.cols();
  RatMatrix aug(n, k + 1);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) aug(j, i) = rows(i, j);
  for (std::size_t j = 0; j < n; ++j) aug(j, k) = v[j];
  const Rref r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() == k) return false;
  c.assign(k, Rat(0));
  for (std::size_t i = 0; i < r.rank; ++i) c[r.pivots[i]] = r.reduced(i, k);
  return true;
}

// Solves C·rows = targets row by row with one elimination; nullopt if some target is outside the span.
inline std::optional<RatMatrix> solve_row_combinations(const RatMatrix& rows, const RatMatrix& targets) {
  const std::size_t k = rows.rows();
  const std::size_t n = rows.cols();
  const std::size_t t = targets.rows();
  RatMatrix aug(n, k + t);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j) aug(j, i) = rows(i, j);
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < n; ++j) aug(j, k + i) = targets(i, j);
  const Rref r = rref(aug);
  if (!r.pivots.empty() && r.pivots.back() >= k) return std::nullopt;
  RatMatrix c(t, k);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t s = 0; s < t; ++s) c(s, r.pivots[i]) = r.reduced(i, k + s);
  return c;
}

}  // namespace gmlag

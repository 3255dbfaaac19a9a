#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <string>
#include <vector>

#include "gmlag/error.hpp"
#include "gmlag/matrix.hpp"
#include "gmlag/subspace.hpp"

namespace gmlag {

inline constexpr int kMaxAmbient = 6;

// Monomials e_{i1}∧…∧e_{ip} with i1<…<ip, in lexicographic order. Indices are 0-based
// internally; labels are 1-based ("123").
class ExteriorBasis {
 public:
  ExteriorBasis(int ambient, int degree) : ambient_(ambient), degree_(degree), index_(1U << ambient, kAbsent) {
    std::vector<int> current;
    build(0, current);
  }

  static const ExteriorBasis& get(int ambient, int degree) {
    if (ambient < 0 || ambient > kMaxAmbient || degree < 0 || degree > ambient)
      throw InputError("exterior power out of range: ambient " + std::to_string(ambient) + ", degree " +
                       std::to_string(degree));
    static const auto table = [] {
      std::vector<std::vector<ExteriorBasis>> t;
      for (int n = 0; n <= kMaxAmbient; ++n) {
        t.emplace_back();
        for (int p = 0; p <= n; ++p) t[n].emplace_back(n, p);
      }
      return t;
    }();
    return table[ambient][degree];
  }

  int ambient_dim() const { return ambient_; }
  int degree() const { return degree_; }
  std::size_t size() const { return masks_.size(); }
  unsigned mask(std::size_t k) const { return masks_[k]; }

  std::size_t index_of(unsigned mask) const {
    const std::size_t k = index_[mask];
    if (k == kAbsent) throw InputError("mask is not a monomial of this exterior power");
    return k;
  }

  std::vector<int> indices(std::size_t k) const {
    std::vector<int> out;
    for (int i = 0; i < ambient_; ++i)
      if (masks_[k] & (1U << i)) out.push_back(i);
    return out;
  }

  std::string label(std::size_t k) const {
    std::string s;
    for (int i : indices(k)) s += std::to_string(i + 1);
    return s;
  }

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  void build(int start, std::vector<int>& current) {
    if (static_cast<int>(current.size()) == degree_) {
      unsigned m = 0;
      for (int i : current) m |= 1U << i;
      index_[m] = masks_.size();
      masks_.push_back(m);
      return;
    }
    for (int i = start; i < ambient_; ++i) {
      current.push_back(i);
      build(i + 1, current);
      current.pop_back();
    }
  }

  int ambient_;
  int degree_;
  std::vector<unsigned> masks_;
  std::vector<std::size_t> index_;
};

// Sign of e_I ∧ e_J relative to e_{I∪J}; zero when I and J overlap.
inline int wedge_sign(unsigned a, unsigned b) {
  if (a & b) return 0;
  int inversions = 0;
  for (unsigned rest = b; rest != 0; rest &= rest - 1) {
    const int j = std::countr_zero(rest);
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions % 2 == 0) ? 1 : -1;
}

class MultiVector {
 public:
  MultiVector(int ambient, int degree) : basis_(&ExteriorBasis::get(ambient, degree)), coords_(basis_->size(), Rat(0)) {}
  MultiVector(int ambient, int degree, RatVector coords) : basis_(&ExteriorBasis::get(ambient, degree)), coords_(std::move(coords)) {
    if (coords_.size() != basis_->size()) throw InputError("multivector coordinate count mismatch");
  }

  static MultiVector vector(const RatVector& v) { return MultiVector(static_cast<int>(v.size()), 1, v); }

  // 0-based indices in any order; the sign of the sorting permutation is applied.
  static MultiVector monomial(int ambient, const std::vector<int>& idx) {
    MultiVector out(ambient, 0, RatVector{Rat(1)});
    for (int i : idx) out = out.wedge(MultiVector::vector(unit_vector(static_cast<std::size_t>(ambient), static_cast<std::size_t>(i))));
    if (out.degree() != static_cast<int>(idx.size())) throw InputError("monomial: degree mismatch");
    return out;
  }

  // 1-based digit label such as "123" or "1236".
  static MultiVector from_label(int ambient, const std::string& label) {
    std::vector<int> idx;
    for (char c : label) idx.push_back(c - '1');
    return monomial(ambient, idx);
  }

  const ExteriorBasis& basis() const { return *basis_; }
  int ambient_dim() const { return basis_->ambient_dim(); }
  int degree() const { return basis_->degree(); }
  const RatVector& coords() const { return coords_; }
  RatVector& coords() { return coords_; }
  const Rat& operator[](std::size_t k) const { return coords_[k]; }
  bool is_zero() const { return gmlag::is_zero(coords_); }

  MultiVector wedge(const MultiVector& other) const {
    if (ambient_dim() != other.ambient_dim()) throw InputError("wedge: ambient mismatch");
    if (degree() + other.degree() > ambient_dim()) throw InputError("wedge: degree overflow");
    MultiVector out(ambient_dim(), degree() + other.degree());
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i] == 0) continue;
      for (std::size_t j = 0; j < other.coords_.size(); ++j) {
        if (other.coords_[j] == 0) continue;
        const unsigned a = basis_->mask(i);
        const unsigned b = other.basis_->mask(j);
        const int s = wedge_sign(a, b);
        if (s == 0) continue;
        const Rat term = coords_[i] * other.coords_[j];
        if (s > 0) {
          out.coords_[out.basis_->index_of(a | b)] += term;
        } else {
          out.coords_[out.basis_->index_of(a | b)] -= term;
        }
      }
    }
    return out;
  }

  friend MultiVector operator+(MultiVector a, const MultiVector& b) {
    if (a.basis_ != b.basis_) throw InputError("sum of multivectors in different exterior powers");
    for (std::size_t i = 0; i < a.coords_.size(); ++i) a.coords_[i] += b.coords_[i];
    return a;
  }

  friend MultiVector operator*(const Rat& s, MultiVector a) {
    for (auto& x : a.coords_) x *= s;
    return a;
  }

  friend bool operator==(const MultiVector& a, const MultiVector& b) {
    return a.basis_ == b.basis_ && a.coords_ == b.coords_;
  }

 private:
  const ExteriorBasis* basis_;
  RatVector coords_;
};

inline MultiVector wedge(const MultiVector& a, const MultiVector& b) { return a.wedge(b); }

// Matrix of x ↦ a∧x from Λ^q to Λ^{p+q} (column convention).
inline RatMatrix left_wedge_matrix(const MultiVector& a, int q) {
  const int n = a.ambient_dim();
  const ExteriorBasis& src = ExteriorBasis::get(n, q);
  const ExteriorBasis& dst = ExteriorBasis::get(n, a.degree() + q);
  RatMatrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) {
    for (std::size_t i = 0; i < a.coords().size(); ++i) {
      if (a[i] == 0) continue;
      const int s = wedge_sign(a.basis().mask(i), src.mask(j));
      if (s == 0) continue;
      const std::size_t k = dst.index_of(a.basis().mask(i) | src.mask(j));
      if (s > 0) {
        m(k, j) += a[i];
      } else {
        m(k, j) -= a[i];
      }
    }
  }
  return m;
}

// ---- the fixed frame: V₆ = k^6, V₅ = span(e1..e5), λ = e6^* ----

inline constexpr int kV6 = 6;
inline constexpr int kV5 = 5;
inline constexpr std::size_t kL3V6 = 20;
inline constexpr std::size_t kL2V5 = 10;
inline constexpr std::size_t kL3V5 = 10;

// Gram matrix of (ξ, η) ↦ coefficient of e123456 in ξ∧η on Λ³V₆.
inline const RatMatrix& l3v6_form() {
  static const RatMatrix g = [] {
    const ExteriorBasis& b = ExteriorBasis::get(kV6, 3);
    RatMatrix m(b.size(), b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
      const unsigned comp = 0x3FU & ~b.mask(i);
      m(i, b.index_of(comp)) = wedge_sign(b.mask(i), comp);
    }
    return m;
  }();
  return g;
}

inline Rat symplectic_form_l3v6(const MultiVector& xi, const MultiVector& eta) {
  if (xi.ambient_dim() != kV6 || eta.ambient_dim() != kV6 || xi.degree() != 3 || eta.degree() != 3)
    throw InputError("symplectic_form_l3v6 expects two elements of Λ³V₆");
  return bilinear(l3v6_form(), xi.coords(), eta.coords());
}

// Interior contraction by λ = e6^*, landing in Λ^{p-1}V₅.
// A monomial containing e6 has it in last position p, which contributes (−1)^{p−1}.
inline RatMatrix lambda_matrix(int p) {
  if (p < 1 || p > kV6) throw InputError("lambda_p: degree out of range");
  const ExteriorBasis& src = ExteriorBasis::get(kV6, p);
  const ExteriorBasis& dst = ExteriorBasis::get(kV5, p - 1);
  RatMatrix m(dst.size(), src.size());
  const int sign = (p % 2 == 1) ? 1 : -1;
  for (std::size_t j = 0; j < src.size(); ++j) {
    const unsigned mask = src.mask(j);
    if (!(mask & (1U << 5))) continue;
    m(dst.index_of(mask & ~(1U << 5)), j) = sign;
  }
  return m;
}

inline MultiVector lambda_p(const MultiVector& xi) {
  if (xi.ambient_dim() != kV6) throw InputError("lambda_p expects an element of Λ^pV₆");
  return MultiVector(kV5, xi.degree() - 1, lambda_matrix(xi.degree()) * xi.coords());
}

// Inclusion Λ^pV₅ ↪ Λ^pV₆ as a C(6,p)×C(5,p) matrix.
inline RatMatrix v5_inclusion_matrix(int p) {
  const ExteriorBasis& src = ExteriorBasis::get(kV5, p);
  const ExteriorBasis& dst = ExteriorBasis::get(kV6, p);
  RatMatrix m(dst.size(), src.size());
  for (std::size_t j = 0; j < src.size(); ++j) m(dst.index_of(src.mask(j)), j) = 1;
  return m;
}

inline MultiVector embed_v5(const MultiVector& x) {
  if (x.ambient_dim() != kV5) throw InputError("embed_v5 expects an element of Λ^pV₅");
  return MultiVector(kV6, x.degree(), v5_inclusion_matrix(x.degree()) * x.coords());
}

// Inverse of embed_v5 on Λ^pV₅ ⊂ Λ^pV₆.
inline MultiVector restrict_v5(const MultiVector& x) {
  if (x.ambient_dim() != kV6) throw InputError("restrict_v5 expects an element of Λ^pV₆");
  const ExteriorBasis& dst = ExteriorBasis::get(kV5, x.degree());
  MultiVector out(kV5, x.degree());
  for (std::size_t k = 0; k < x.coords().size(); ++k) {
    if (x[k] == 0) continue;
    const unsigned mask = x.basis().mask(k);
    if (mask & (1U << 5)) throw InputError("restrict_v5: element has an e6 component");
    out.coords()[dst.index_of(mask)] = x[k];
  }
  return out;
}

// ε on Λ⁵V₅: the coefficient of e12345.
inline Rat epsilon5(const MultiVector& x) {
  if (x.ambient_dim() != kV5 || x.degree() != 5) throw InputError("epsilon5 expects an element of Λ⁵V₅");
  return x[0];
}

inline Subspace l3v5_subspace() {
  static const Subspace s = Subspace::span(v5_inclusion_matrix(3).transpose());
  return s;
}

// Λ^p(u) inside Λ^p k^n.
inline Subspace exterior_power(const Subspace& u, int p) {
  const int n = static_cast<int>(u.ambient_dim());
  const ExteriorBasis& target = ExteriorBasis::get(n, p);
  if (p > static_cast<int>(u.dim())) return Subspace::zero(target.size());
  std::vector<RatVector> rows;
  const ExteriorBasis& choose = ExteriorBasis::get(static_cast<int>(u.dim()), p);
  for (std::size_t k = 0; k < choose.size(); ++k) {
    MultiVector w(n, 0, RatVector{Rat(1)});
    for (int i : choose.indices(k)) w = w.wedge(MultiVector::vector(u.basis_vector(static_cast<std::size_t>(i))));
    rows.push_back(w.coords());
  }
  return Subspace::span(rows, target.size());
}

// v ∧ Λ^p(u): the span of s∧x for s in a basis of v and x in Λ^p(u).
inline Subspace wedge_space(const Subspace& v, const Subspace& u, int p) {
  if (v.ambient_dim() != u.ambient_dim()) throw InputError("wedge_space: ambient mismatch");
  if (v.is_zero()) throw InputError("wedge_space: trivial subspace");
  const int n = static_cast<int>(v.ambient_dim());
  const Subspace power = exterior_power(u, p);
  const ExteriorBasis& target = ExteriorBasis::get(n, p + 1);
  std::vector<RatVector> rows;
  for (std::size_t i = 0; i < v.dim(); ++i) {
    const MultiVector s = MultiVector::vector(v.basis_vector(i));
    for (std::size_t j = 0; j < power.dim(); ++j) rows.push_back(s.wedge(MultiVector(n, p, power.basis_vector(j))).coords());
  }
  return Subspace::span(rows, target.size());
}

// v ∧ Λ^p V_n for the whole ambient space.
inline Subspace wedge_space(const Subspace& v, int p) { return wedge_space(v, Subspace::full(v.ambient_dim()), p); }

inline Subspace line(const RatVector& v) {
  if (is_zero(v)) throw InputError("zero vector does not span a line");
  return Subspace::span({v}, v.size());
}

struct Decomposability {
  bool decomposable = false;
  Subspace d;  // D(a) = {v : v∧a = 0}; equals V₃ when decomposable
};

inline Decomposability is_decomposable(const MultiVector& a) {
  if (a.degree() != 3 || a.ambient_dim() != kV6) throw InputError("is_decomposable expects an element of Λ³V₆");
  if (a.is_zero()) throw InputError("is_decomposable: zero input");
  // Column j of the matrix is e_j∧a, so its kernel is D(a).
  const ExteriorBasis& b4 = ExteriorBasis::get(kV6, 4);
  RatMatrix m(b4.size(), kV6);
  for (int j = 0; j < kV6; ++j) {
    const MultiVector w = MultiVector::vector(unit_vector(kV6, static_cast<std::size_t>(j))).wedge(a);
    for (std::size_t k = 0; k < b4.size(); ++k) m(k, static_cast<std::size_t>(j)) = w[k];
  }
  Subspace d = kernel(m);
  const bool yes = d.dim() == 3;
  return {yes, std::move(d)};
}

// Λ^p of a linear map g (column convention): entry (J, I) is the minor det g[J, I].
inline RatMatrix exterior_power_map(const RatMatrix& g, int p) {
  if (!g.is_square()) throw InputError("exterior_power_map expects a square matrix");
  const int n = static_cast<int>(g.rows());
  const ExteriorBasis& b = ExteriorBasis::get(n, p);
  RatMatrix m(b.size(), b.size());
  for (std::size_t J = 0; J < b.size(); ++J) {
    std::vector<std::size_t> rows;
    for (int i : b.indices(J)) rows.push_back(static_cast<std::size_t>(i));
    const RatMatrix g_rows = g.select_rows(rows);
    for (std::size_t I = 0; I < b.size(); ++I) {
      std::vector<std::size_t> cols;
      for (int i : b.indices(I)) cols.push_back(static_cast<std::size_t>(i));
      m(J, I) = p == 0 ? Rat(1) : determinant(g_rows.select_cols(cols));
    }
  }
  return m;
}

}  // namespace gmlag

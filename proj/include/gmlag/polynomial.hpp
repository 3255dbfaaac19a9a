#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "gmlag/error.hpp"
#include "gmlag/rational.hpp"

namespace gmlag {

// Univariate polynomial over Q, coefficients stored from the constant term up.
// The top coefficient is never zero; the zero polynomial has no coefficients.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RatVector coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly constant(const Rat& a) { return Poly(RatVector{a}); }
  // a0 + a1·t
  static Poly linear(const Rat& a0, const Rat& a1) { return Poly(RatVector{a0, a1}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const RatVector& coeffs() const { return c_; }
  Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }
  Rat lead() const { return c_.empty() ? Rat(0) : c_.back(); }

  Rat operator()(const Rat& t) const {
    Rat acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * t + *it;
    return acc;
  }

  Poly derivative() const {
    RatVector d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(c_[i] * Rat(static_cast<long>(i)));
    return Poly(std::move(d));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    const Rat inv = 1 / lead();
    RatVector d = c_;
    for (auto& x : d) x *= inv;
    return Poly(std::move(d));
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    RatVector d(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] += b.c_[i];
    return Poly(std::move(d));
  }

  friend Poly operator-(const Poly& a, const Poly& b) {
    RatVector d(std::max(a.c_.size(), b.c_.size()), Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) d[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) d[i] -= b.c_[i];
    return Poly(std::move(d));
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    RatVector d(a.c_.size() + b.c_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(d));
  }

  friend Poly operator*(const Rat& s, const Poly& a) {
    RatVector d = a.c_;
    for (auto& x : d) x *= s;
    return Poly(std::move(d));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  RatVector c_;
};

struct PolyDivMod {
  Poly quotient;
  Poly remainder;
};

inline PolyDivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw InputError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  RatVector r = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  RatVector q(r.size() - db, Rat(0));
  const Rat inv = 1 / b.lead();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rat f = r[k + db] * inv;
    q[k] = f;
    if (f == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[k + j] -= f * b.coeff(j);
  }
  return {Poly(std::move(q)), Poly(std::move(r))};
}

// Throws MathViolation unless b divides a exactly.
inline Poly exact_quotient(const Poly& a, const Poly& b) {
  PolyDivMod qr = divmod(a, b);
  ensure(qr.remainder.is_zero(), "polynomial division is not exact");
  return qr.quotient;
}

// Monic gcd; gcd(0, 0) = 0.
inline Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

inline Poly pow(const Poly& p, unsigned k) {
  Poly out = Poly::constant(1);
  for (unsigned i = 0; i < k; ++i) out = out * p;
  return out;
}

// Largest k with f^k dividing p; f must be non-constant and p non-zero.
inline unsigned multiplicity(Poly p, const Poly& f) {
  if (f.degree() < 1) throw InputError("multiplicity of a constant factor");
  if (p.is_zero()) throw InputError("multiplicity in the zero polynomial");
  unsigned k = 0;
  for (;;) {
    PolyDivMod qr = divmod(p, f);
    if (!qr.remainder.is_zero()) return k;
    p = std::move(qr.quotient);
    ++k;
  }
}

// Integer coefficients with gcd 1 and positive leading coefficient.
inline Poly primitive(const Poly& p) {
  if (p.is_zero()) return p;
  mpz_class den = 1;
  for (const Rat& x : p.coeffs()) den = lcm(den, x.get_den());
  mpz_class g = 0;
  for (const Rat& x : p.coeffs()) g = gcd(g, mpz_class(x.get_num() * (den / x.get_den())));
  Rat scale(den, g);
  scale.canonicalize();
  if (p.lead() < 0) scale = -scale;
  return scale * p;
}

// Yun's algorithm: p = c · Π f_i^{m_i} with monic, square-free, pairwise coprime f_i.
inline std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& p) {
  std::vector<std::pair<Poly, unsigned>> out;
  if (p.degree() < 1) return out;
  const Poly dp = p.derivative();
  Poly a = gcd(p, dp);
  Poly b = exact_quotient(p, a);
  Poly c = exact_quotient(dp, a);
  Poly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() >= 1) {
    Poly g = gcd(b, d);
    if (g.degree() >= 1) out.emplace_back(g, i);
    b = exact_quotient(b, g);
    c = exact_quotient(d, g);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

inline Poly squarefree_part(const Poly& p) {
  Poly out = Poly::constant(1);
  for (const auto& [f, m] : squarefree_decomposition(p)) out = out * f;
  return out;
}

// Newton interpolation through (xs[i], ys[i]) with distinct nodes.
inline Poly interpolate(const RatVector& xs, const RatVector& ys) {
  if (xs.size() != ys.size() || xs.empty()) throw InputError("interpolate: bad node count");
  const std::size_t n = xs.size();
  RatVector dd = ys;
  for (std::size_t k = 1; k < n; ++k)
    for (std::size_t i = n - 1; i >= k; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - k]);
      if (i == k) break;
    }
  Poly result = Poly::constant(dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) result = result * Poly::linear(-xs[k], 1) + Poly::constant(dd[k]);
  return result;
}

namespace detail {

// Positive divisors of |n|, or an empty list when |n| exceeds the trial-division budget.
inline std::vector<mpz_class> divisors(const mpz_class& n) {
  mpz_class m = abs(n);
  if (m == 0 || m > mpz_class("1000000000000")) return {};
  std::vector<std::pair<mpz_class, unsigned>> factors;
  for (mpz_class p = 2; p * p <= m; ++p) {
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    if (e > 0) factors.emplace_back(p, e);
  }
  if (m > 1) factors.emplace_back(m, 1);
  std::vector<mpz_class> divs{1};
  for (const auto& [p, e] : factors) {
    const std::size_t count = divs.size();
    mpz_class pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < count; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace detail

struct RationalRoots {
  RatVector roots;     // sorted, distinct
  bool complete = true;  // false when a factor was too large to search
};

inline RationalRoots rational_roots(const Poly& p) {
  RationalRoots out;
  if (p.degree() < 1) return out;
  for (const auto& [f, m] : squarefree_decomposition(p)) {
    if (f.degree() == 1) {
      out.roots.push_back(-f.coeff(0) / f.coeff(1));
      continue;
    }
    Poly g = primitive(f);
    unsigned zero_mult = 0;
    while (g.coeff(0) == 0) {
      g = Poly(RatVector(g.coeffs().begin() + 1, g.coeffs().end()));
      ++zero_mult;
    }
    if (zero_mult > 0) out.roots.push_back(Rat(0));
    if (g.degree() < 1) continue;
    const auto nums = detail::divisors(g.coeff(0).get_num());
    const auto dens = detail::divisors(g.lead().get_num());
    if (nums.empty() || dens.empty()) {
      out.complete = false;
      continue;
    }
    for (const auto& a : nums)
      for (const auto& b : dens)
        for (int sign : {1, -1}) {
          Rat r(sign * a, b);
          r.canonicalize();
          if (g(r) == 0) out.roots.push_back(r);
        }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
  return out;
}

inline std::vector<std::string> coefficient_strings(const Poly& p) {
  std::vector<std::string> out;
  for (const Rat& c : p.coeffs()) out.push_back(to_string(c));
  return out;
}

}  // namespace gmlag

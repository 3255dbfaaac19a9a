#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "gmlag/error.hpp"

namespace gmlag {

// mpq_class keeps every value in lowest terms with a positive denominator.
using Rat = mpq_class;
using RatVector = std::vector<Rat>;

inline std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

// Accepts "p" or "p/q" with an optional leading minus sign on p.
inline Rat parse_rat(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && s.front() == '-') {
    negative = true;
    s.remove_prefix(1);
  }
  const auto slash = s.find('/');
  const std::string_view num = s.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : s.substr(slash + 1);
  if (!detail::all_digits(num) || !detail::all_digits(den)) {
    throw InputError("malformed rational \"" + std::string(text) + "\"");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw InputError("malformed rational \"" + std::string(text) + "\": zero denominator");
  if (negative) n = -n;
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline bool is_zero(const RatVector& v) {
  for (const Rat& x : v) {
    if (x != 0) return false;
  }
  return true;
}

inline Rat dot(const RatVector& a, const RatVector& b) {
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline RatVector axpy(const Rat& alpha, const RatVector& x, RatVector y) {
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += alpha * x[i];
  return y;
}

inline RatVector unit_vector(std::size_t n, std::size_t i) {
  RatVector v(n, Rat(0));
  v[i] = 1;
  return v;
}

// Deterministic across platforms: only the raw mt19937_64 stream is used, never
// the implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  long uniform(long lo, long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long>(engine_() % span);
  }

  bool coin() { return (engine_() & 1U) != 0; }

  Rat small_int(long bound) { return Rat(uniform(-bound, bound)); }

  RatVector int_vector(std::size_t n, long bound) {
    RatVector v(n);
    for (auto& x : v) x = small_int(bound);
    return v;
  }

  RatVector nonzero_int_vector(std::size_t n, long bound) {
    RatVector v;
    do {
      v = int_vector(n, bound);
    } while (is_zero(v));
    return v;
  }

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace gmlag

#pragma once

#include <string>
#include <vector>

#include "gmlag/correspondence.hpp"
#include "gmlag/error.hpp"
#include "gmlag/exterior.hpp"
#include "gmlag/gm_data.hpp"
#include "gmlag/quadric.hpp"
#include "gmlag/rational.hpp"

// Built-in fixtures. Every generator is seeded, so the data is identical on every build.
namespace gmlag::fixtures {

// Λ²V₅ monomial positions used below: e12 ↦ 0, e25 ↦ 6.
inline constexpr std::size_t kE12 = 0;
inline constexpr std::size_t kE25 = 6;

// q(e6) of the fivefold. Row e12 is zero apart from S(e12, e25) = 1, so e12 spans the kernel
// of S on e1∧V₅ (a corank-1 fibre over e1) and on Λ²⟨e1,e2,e3⟩, and e12 is a rational point
// of X where the gradient has rank 4.
inline RatMatrix fivefold_q6() {
  Rng rng(20241);
  RatMatrix s(kL2V5, kL2V5);
  for (std::size_t i = 0; i < kL2V5; ++i)
    for (std::size_t j = i; j < kL2V5; ++j) s(i, j) = s(j, i) = rng.small_int(3);
  for (std::size_t j = 0; j < kL2V5; ++j) s(kE12, j) = s(j, kE12) = 0;
  s(kE12, kE25) = s(kE25, kE12) = 1;
  return s;
}

// q(e6) of rank 8, so e6 lies on the corank-2 stratum.
inline RatMatrix corank2_q6() {
  Rng rng(7031);
  for (;;) {
    RatMatrix r(8, kL2V5);
    for (std::size_t i = 0; i < 8; ++i) r.set_row(i, rng.int_vector(kL2V5, 2));
    RatMatrix d(8, 8);
    for (std::size_t i = 0; i < 8; ++i) d(i, i) = rng.coin() ? 1 : -1;
    RatMatrix s = r.transpose() * d * r;
    if (rank(s) == 8) return s;
  }
}

inline GMData ordinary_fivefold_with(RatMatrix q6) {
  GMData d;
  d.n = 5;
  d.mu = RatMatrix::identity(kL2V5);
  const auto& p = plucker_forms();
  for (std::size_t i = 0; i < 5; ++i) d.q[i] = p[i];
  d.q[5] = std::move(q6);
  d.type_hint = to_string(GMType::Ordinary);
  return d;
}

inline GMData fivefold() { return ordinary_fivefold_with(fivefold_q6()); }
inline GMData corank2_fivefold() { return ordinary_fivefold_with(corank2_q6()); }
inline GMData special_sixfold() { return opposite(fivefold()); }

inline MultiVector omega() { return MultiVector::from_label(kV5, "123") + MultiVector::from_label(kV5, "145"); }

inline LagrangianData fivefold_lagrangian() { return gm_to_lagrangian(fivefold()); }

// One hyperplane update by ω = e123 + e145; Σ₁ ∋ e1 and Σ₂ ∋ ⟨e1,e2,e4⟩.
inline LagrangianData omega_fourfold_lagrangian() {
  LagrangianData ld = fivefold_lagrangian();
  ld.a = hyperplane_section_lagrangian(ld.a, omega());
  return ld;
}

// Two hyperplane updates, so dim(A ∩ Λ³V₅) = 2.
inline LagrangianData threefold_lagrangian() {
  LagrangianData ld = fivefold_lagrangian();
  ld.a = hyperplane_section_lagrangian(ld.a, MultiVector::from_label(kV5, "123") + MultiVector::from_label(kV5, "245"));
  ld.a = hyperplane_section_lagrangian(ld.a, MultiVector::from_label(kV5, "134") + MultiVector::from_label(kV5, "235"));
  return ld;
}

inline GMData omega_fourfold() { return canonical_form(lagrangian_to_gm(omega_fourfold_lagrangian())); }
inline GMData threefold() { return canonical_form(lagrangian_to_gm(threefold_lagrangian())); }

inline LagrangianData l3v5_lagrangian() {
  LagrangianData ld;
  ld.a = l3v5_subspace();
  return ld;
}

inline LagrangianData e1_l2v6_lagrangian() {
  LagrangianData ld;
  ld.a = wedge_space(line(unit_vector(kV6, 0)), 2);
  return ld;
}

struct Entry {
  std::string name;
  bool is_gm;  // otherwise a Lagrangian-only fixture
};

inline const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = {
      {"fivefold", true},       {"sixfold", true},         {"threefold", true}, {"omega_fourfold", true},
      {"corank2_fivefold", true}, {"l3v5", false},          {"e1_l2v6", false},
  };
  return entries;
}

inline GMData gm_by_name(const std::string& name) {
  if (name == "fivefold") return fivefold();
  if (name == "sixfold") return special_sixfold();
  if (name == "threefold") return threefold();
  if (name == "omega_fourfold") return omega_fourfold();
  if (name == "corank2_fivefold") return corank2_fivefold();
  throw InputError("no GM fixture named \"" + name + "\"");
}

inline LagrangianData lagrangian_by_name(const std::string& name) {
  if (name == "l3v5") return l3v5_lagrangian();
  if (name == "e1_l2v6") return e1_l2v6_lagrangian();
  if (name == "omega_fourfold") return omega_fourfold_lagrangian();
  if (name == "threefold") return threefold_lagrangian();
  return gm_to_lagrangian(gm_by_name(name));
}

}  // namespace gmlag::fixtures

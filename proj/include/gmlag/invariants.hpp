#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gmlag/correspondence.hpp"
#include "gmlag/epw.hpp"
#include "gmlag/fibrations.hpp"
#include "gmlag/fixtures.hpp"
#include "gmlag/gm_data.hpp"
#include "gmlag/quadric.hpp"

// The invariant suite: one check per property family, each run over the built-in fixtures
// and seeded random samples. Every comparison is an exact equality of rationals or subspaces.
namespace gmlag::invariants {

struct CheckResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::size_t cases = 0;
  double seconds = 0;
  double budget_seconds = 0;
  std::string detail;  // first failure, or a short summary
};

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t lagrangians_per_dim = 100;
  std::size_t kernel_samples = 50;
  std::size_t certificate_lines = 5;
  std::size_t discriminant_lines = 5;
  std::size_t duality_samples = 50;
  std::size_t fibration_samples = 200;
  std::size_t hyperplane_samples = 50;
  std::size_t hull_samples = 100;
};

namespace detail {

// Records the first failure; later failures only bump the case count.
class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    ++cases_;
    if (!ok && failure_.empty()) failure_ = what;
  }
  bool ok() const { return failure_.empty(); }
  std::size_t cases() const { return cases_; }
  const std::string& failure() const { return failure_; }

 private:
  std::size_t cases_ = 0;
  std::string failure_;
};

inline RatVector random_in_v5(Rng& rng, long bound = 2) {
  RatVector v;
  do {
    v = rng.int_vector(kV6, bound);
    v[5] = 0;
  } while (is_zero(v));
  return v;
}

inline RatVector random_off_v5(Rng& rng, long bound = 3) {
  RatVector v = rng.int_vector(kV6, bound);
  while (v[5] == 0) v[5] = rng.small_int(bound);
  return v;
}

inline Subspace random_plane(Rng& rng, bool inside_v5, long bound = 2) {
  for (;;) {
    std::vector<RatVector> rows;
    for (int i = 0; i < 3; ++i) rows.push_back(inside_v5 ? random_in_v5(rng, bound) : rng.int_vector(kV6, bound));
    Subspace s = Subspace::span(rows, kV6);
    if (s.dim() == 3) return s;
  }
}

// Quadric on L₁ = first m coordinates of standard_space(m), restated on k^m.
inline QuadricOnSubspace truncate_to_first_half(const QuadricOnSubspace& q, std::size_t m) {
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < m; ++i) cols.push_back(i);
  const RatMatrix b = q.span().basis().select_cols(cols);
  return QuadricOnSubspace(Subspace::span(b.rows() == 0 ? RatMatrix(0, m) : b), q.gram());
}

// 5×5 skew matrix of a 2-vector of V₅; rank 2 exactly for non-zero decomposables.
inline RatMatrix skew_matrix(const RatVector& beta) {
  RatMatrix m(kV5, kV5);
  const ExteriorBasis& b2 = ExteriorBasis::get(kV5, 2);
  for (std::size_t k = 0; k < b2.size(); ++k) {
    const auto idx = b2.indices(k);
    m(idx[0], idx[1]) = beta[k];
    m(idx[1], idx[0]) = -beta[k];
  }
  return m;
}

inline std::vector<std::string> gm_fixture_names() {
  return {"fivefold", "sixfold", "threefold", "omega_fourfold", "corank2_fivefold"};
}

inline std::string vec_str(const RatVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

}  // namespace detail

// Random Lagrangians in symplectic dimensions 4, 6, 8 and 20.
inline CheckResult check_appendix_c(const SuiteOptions& opt) {
  detail::Tally t;
  Rng rng(opt.seed * 1000 + 1);
  for (std::size_t m : {2U, 3U, 4U, 10U}) {
    const LagrangianDecomposition std_dec = standard_decomposition(m);
    for (std::size_t s = 0; s < opt.lagrangians_per_dim; ++s) {
      const std::string where = "dim " + std::to_string(2 * m) + " sample " + std::to_string(s);
      // Alternate between a random decomposition and a fixed one (Λ³V₅ ⊕ e6∧Λ²V₅ in dim 20).
      const LagrangianDecomposition dec =
          s % 2 == 0 ? random_decomposition(m, rng) : (m == 10 ? l3v6_decomposition() : std_dec);
      const Subspace a = random_lagrangian(dec, rng);
      const Subspace a1 = subspace_intersect(a, dec.l1());
      const Subspace a2 = subspace_intersect(a, dec.l2());

      const RatMatrix g = lagrangian_bilinear_form(dec, a);
      t.expect(g.is_symmetric(), where + ": q^A not symmetric");
      const Subspace ker = Subspace::span(kernel(g).basis() * a.basis());
      t.expect(ker == subspace_sum(a1, a2), where + ": ker q^A != (A∩L1)+(A∩L2)");

      const QuadricPair pair = quadric_pair_from_lagrangian(dec, a);
      t.expect(pair.q1.kernel() == a1 && pair.q2.kernel() == a2, where + ": kernel of Q_i != A∩L_i");
      t.expect(pair.q1.span() == subspace_intersect(dec.l1(), dec.space().orthogonal(a2)), where + ": span of Q1");
      t.expect(pair.q2.span() == subspace_intersect(dec.l2(), dec.space().orthogonal(a1)), where + ": span of Q2");
      t.expect(dual_quadric(dec, pair.q1) == pair.q2, where + ": Q2 is not the dual of Q1");

      // Lagrangian → quadric → Lagrangian, in coordinates where dec is standard.
      const RatMatrix f = vstack(dec.l1().basis(), dec.l2_dual_basis());
      const Subspace a_std = Subspace::span(a.basis() * inverse(f));
      const QuadricPair std_pair = quadric_pair_from_lagrangian(std_dec, a_std);
      t.expect(lagrangian_from_quadric(detail::truncate_to_first_half(std_pair.q1, m)) == a_std,
               where + ": Lagrangian round trip");

      // Quadric → Lagrangian → quadric on a random span of random rank.
      const std::size_t w_dim = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(m)));
      std::vector<RatVector> rows;
      for (std::size_t i = 0; i < w_dim; ++i) rows.push_back(rng.int_vector(m, 3));
      const Subspace w = Subspace::span(rows, m);
      const std::size_t r = static_cast<std::size_t>(rng.uniform(0, static_cast<long>(w.dim())));
      const QuadricOnSubspace q(w, random_symmetric(rng, w.dim(), r));
      const Subspace aq = lagrangian_from_quadric(q);
      const QuadricPair back = quadric_pair_from_lagrangian(std_dec, aq);
      t.expect(detail::truncate_to_first_half(back.q1, m) == q, where + ": quadric round trip");
    }
  }
  return {1, "Lagrangian/quadric correspondence", t.ok(), t.cases(), 0, 0, t.ok() ? "" : t.failure()};
}

inline CheckResult check_round_trips(const SuiteOptions&) {
  detail::Tally t;
  for (const std::string name : {"fivefold", "threefold", "sixfold", "omega_fourfold", "corank2_fivefold"}) {
    const GMData d = fixtures::gm_by_name(name);
    const LagrangianData ld = gm_to_lagrangian(d);
    t.expect(canonical_form(lagrangian_to_gm(ld)) == d, name + ": GM → Lagrangian → GM");
    t.expect(gm_to_lagrangian(lagrangian_to_gm(ld)) == ld, name + ": Lagrangian → GM → Lagrangian");
    RatVector v0 = unit_vector(kV6, 5);
    v0[0] = 1;
    t.expect(gm_to_lagrangian(d, v0) == ld, name + ": A depends on v0");
    const ValidationReport rep = validate(lagrangian_to_gm(ld));
    t.expect(!rep.violation && is_lci(rep.type), name + ": reconstructed data does not validate");
  }
  return {2, "GM/Lagrangian round trips", t.ok(), t.cases(), 0, 0, t.ok() ? "" : t.failure()};
}

inline CheckResult check_kernel_identity(const SuiteOptions& opt) {
  detail::Tally t;
  Rng rng(opt.seed * 1000 + 3);
  const RatMatrix lam3 = lambda_matrix(3);
  for (const auto& name : detail::gm_fixture_names()) {
    const GMData d = fixtures::gm_by_name(name);
    const Subspace a = gm_to_lagrangian(d).a;
    for (std::size_t s = 0; s < opt.kernel_samples; ++s) {
      const RatVector v = detail::random_off_v5(rng);
      const Subspace k = kernel(d.q_at(v));
      const Subspace cap = subspace_intersect(a, wedge_space(line(v), gmlag::detail::v5_in_v6(), 2));
      t.expect(k.dim() == cap.dim(), name + ": corank q(v) != dim A∩(v∧Λ²V5) at " + detail::vec_str(v));
      const Subspace mu_k = Subspace::span(k.dim() ? RatMatrix(k.basis() * d.mu.transpose()) : RatMatrix(0, kL2V5));
      const Subspace lam_cap = Subspace::span(cap.dim() ? RatMatrix(cap.basis() * lam3.transpose()) : RatMatrix(0, kL2V5));
      t.expect(mu_k == lam_cap, name + ": μ(Ker q(v)) != λ3(A∩(v∧Λ²V5)) at " + detail::vec_str(v));
    }
    std::vector<RatVector> points;
    for (std::size_t s = 0; s < opt.kernel_samples; ++s) points.push_back(detail::random_off_v5(rng));
    if (name == "corank2_fivefold") points.push_back(unit_vector(kV6, 5));
    for (const RatVector& v : points) {
      const std::size_t y = y_stratum(a, v);
      const std::size_t corank = d.w_dim() - rank(d.q_at(v));
      t.expect(y == corank, name + ": Y-stratum != corank q(v) at " + detail::vec_str(v));
      // Along a line through v the discriminant vanishes at t = 0 to order at least the corank.
      RatVector dir;
      do dir = rng.nonzero_int_vector(kV6, 3);
      while (rank(RatMatrix::from_rows({v, dir}, kV6)) < 2);
      const DiscriminantReport rep = discriminant_on_line(d, v, dir);
      const unsigned order = multiplicity(rep.dis_poly, Poly::linear(0, 1));
      t.expect(!rep.whole_line && order >= y && (order == 0) == (y == 0),
               name + ": discriminant order disagrees with the Y-stratum at " + detail::vec_str(v));
    }
  }
  return {3, "kernel/stratum identity", t.ok(), t.cases(), 0, 0, t.ok() ? "" : t.failure()};
}

inline CheckResult check_dimension_formula(const SuiteOptions&) {
  detail::Tally t;
  for (const auto& name : detail::gm_fixture_names()) {
    const GMData d = fixtures::gm_by_name(name);
    const DimReport r = dim_report(gm_to_lagrangian(d));
    t.expect(r.predicted_dim_x == static_cast<int>(d.w_dim()) - 5, name + ": predicted dim X != dim W − 5");
  }
  for (const std::string name : {"l3v5", "e1_l2v6"}) {
    const LagrangianData ld = fixtures::lagrangian_by_name(name);
    t.expect(dim_report(ld).predicted_dim_x == static_cast<int>(lagrangian_to_gm(ld).w_dim()) - 5,
             name + ": predicted dim X != dim W − 5");
  }
  const LagrangianData five = fixtures::fivefold_lagrangian();
  const LagrangianData six = gm_to_lagrangian(fixtures::special_sixfold());
  t.expect(five.a == six.a && five.a1 == A1Tag::Zero && six.a1 == A1Tag::One, "sixfold does not share A with the fivefold");
  t.expect(dim_report(six).predicted_dim_x == dim_report(five).predicted_dim_x + 1, "A1 = 1 does not shift the dimension by one");
  return {4, "dimension formula", t.ok(), t.cases(), 0, 0, t.ok() ? "" : t.failure()};
}

inline CheckResult check_degree_certificates(const SuiteOptions& opt) {
  detail::Tally t;
  Rng rng(opt.seed * 1000 + 5);
  const Subspace a = fixtures::fivefold_lagrangian().a;
  for (std::size_t s = 0; s < opt.certificate_lines; ++s) {
    RatVector base;
    RatVector dir;
    do {
      base = rng.int_vector(kV6, 3);
      dir = rng.int_vector(kV6, 3);
    } while (rank(RatMatrix::from_rows({base, dir}, kV6)) < 2);
    const LineDegreeCertificate c = y_line_certificate(a, base, dir, rng.next());
    t.expect(!c.whole_line && c.degree == 6 && c.checked_points >= 20,
             "Y line " + std::to_string(s) + ": degree " + std::to_string(c.degree));
  }
  for (std::size_t s = 0; s < opt.certificate_lines; ++s) {
    std::vector<RatVector> u;
    do {
      u.clear();
      for (int i = 0; i < 4; ++i) u.push_back(rng.int_vector(kV6, 3));
    } while (rank(RatMatrix::from_rows(u, kV6)) < 4);
    const LineDegreeCertificate c = z_pencil_certificate(a, u, rng.next());
    t.expect(!c.whole_line && c.degree == 4 && c.checked_points >= 20,
             "Z pencil " + std::to_string(s) + ": degree " + std::to_string(c.degree));
  }
  return {5, "degree certificates", t.ok(), t.cases(), 0, 0, t.ok() ? "" : t.failure()};
}

inline CheckResult check_discriminant(const SuiteOptions& opt) {
  detail::Tally t;
  Rng rng(opt.seed * 1000 + 6);
  std::size_t exceeding = 0;
  for (const auto& name : detail::gm_fixture_names()) {
    const GMData d = fixtures::gm_by_name(name);
    const Subspace a = gm_to_lagrangian(d).a;
    for (std::size_t s = 0; s < opt.discriminant_lines; ++s) {
      const RatVector base = detail::random_off_v5(rng);
      RatVector dir;
      do dir = rng.int_vector(kV6, 3);
      while (rank(RatMatrix::from_rows({base, dir}, kV6)) < 2);
      const std::string where = name + " line " + std::to_string(s);
      const DiscriminantReport rep = discriminant_on_line(d, base, dir);
      t.expect(!rep.whole_line && rep.plucker_mult >= static_cast<unsigned>(d.n - 1) && rep.dis_poly.degree() <= 6,
               where + ": division by λ^{n−1}");
      exceeding += rep.exceeds_expected ? 1 : 0;
      const LineDegreeCertificate c = y_line_certificate(a, base, dir, rng.next());
      const Poly dis = primitive(rep.dis_poly);
      t.expect(squarefree_part(dis) == squarefree_part(c.poly), where + ": zero sets of Dis and Y_A differ");
      t.expect(dis == c.poly || dis == Rat(-1) * c.poly, where + ": Dis and Y_A differ as divisors");
      for (const Rat& r : rational_roots(dis).roots) t.expect(y_stratum(a, axpy(r, dir, base)) >= 1, where + ": root off Y_A");
    }
  }
  CheckResult out{6, "discriminant division", t.ok(), t.cases(), 0, 0, t.ok() ? "" : t.failure()};
  if (out.passed && exceeding) out.detail = std::to_string(exceeding) + " lines with Plücker multiplicity above n − 1";
  return out;
}

inline CheckResult check_duality(const SuiteOptions& opt) {
  detail::Tally t;
  Rng rng(opt.seed * 1000 + 7);
  std::vector<std::pair<std::string, Subspace>> as;
  for (const auto& name : detail::gm_fixture_names()) as.emplace_back(name, gm_to_lagrangian(fixtures::gm_by_name(name)).a);
  as.emplace_back("l3v5", fixtures::l3v5_lagrangian().a);
  as.emplace_back("e1_l2v6", fixtures::e1_l2v6_lagrangian().a);
  for (int i = 0; i < 5; ++i) as.emplace_back("random " + std::to_string(i), random_lagrangian(l3v6_decomposition(), rng));
  for (const auto& [name, a] : as) {
    LagrangianData ld;
    ld.a = a;
    const Subspace dual = dualize(ld).a;
    t.expect(annihilator(dual) == a, name + ": (A^⊥)^⊥ != A");
    std::vector<RatVector> forms{unit_vector(kV6, 5)};
    for (std::size_t s = 0; s < opt.duality_samples; ++s) forms.push_back(rng.nonzero_int_vector(kV6, 2));
    for (const RatVector& f : forms) {
      const Subspace h = hyperplane_from_form(f);
      t.expect(y_dual_stratum(a, h) == y_stratum(dual, dual_point(h)), name + ": dual stratum at " + detail::vec_str(f));
    }
    for (std::size_t s = 0; s < opt.duality_samples; ++s) {
      const Subspace v3 = detail::random_plane(rng, false);
      t.expect(z_stratum(a, v3) == z_stratum(dual, annihilator(v3)), name + ": Z self-duality");
    }
  }
  return {7, "duality", t.ok(), t.cases(), 0, 0, t.ok() ? "" : t.failure()};
}

inline CheckResult check_fibrations(const SuiteOptions& opt) {
  detail::Tally t;
  Rng rng(opt.seed * 1000 + 8);
  auto check1 = [&](const std::string& name, const FibrationContext& ctx, const RatVector& v) {
    const FiberReport r = fibration1_fiber(ctx, v);
    t.expect(r.agreement, name + ": first fibration disagrees at " + detail::vec_str(v));
    t.expect(r.sigma_level == 0 || r.stratum_prediction >= 1, name + ": Σ1 point off Y_A");
    return r;
  };
  auto check2 = [&](const std::string& name, const FibrationContext& ctx, const Subspace& v3) {
    const FiberReport r = fibration2_fiber(ctx, v3);
    t.expect(r.agreement, name + ": second fibration disagrees");
    t.expect(r.sigma_level == 0 || r.stratum_prediction >= 1, name + ": Σ2 plane off Z_A");
    return r;
  };
  for (const auto& name : detail::gm_fixture_names()) {
    const FibrationContext ctx(fixtures::lagrangian_by_name(name));
    for (std::size_t s = 0; s < opt.fibration_samples; ++s) check1(name, ctx, detail::random_in_v5(rng));
    for (std::size_t s = 0; s < opt.fibration_samples; ++s) check2(name, ctx, detail::random_plane(rng, true));
  }
  // Engineered points.
  const FibrationContext five(fixtures::fivefold_lagrangian());
  const FiberReport f1 = check1("fivefold", five, unit_vector(kV6, 0));
  t.expect(f1.corank == 1 && f1.sigma_level == 0 && f1.ambient_proj_dim == 3, "fivefold: e1 is not a corank-1 fibre in P^3");
  const FiberReport f2 = check2("fivefold", five, Subspace::coordinate(kV6, {0, 1, 2}));
  t.expect(f2.corank == 1 && f2.sigma_level == 0 && f2.ambient_proj_dim == 2, "fivefold: <e1,e2,e3> is not a corank-1 fibre in P^2");
  const FibrationContext om(fixtures::omega_fourfold_lagrangian());
  const FiberReport o1 = check1("omega_fourfold", om, unit_vector(kV6, 0));
  t.expect(o1.sigma_level == 1 && o1.ambient_proj_dim == 3 && static_cast<int>(o1.corank) == static_cast<int>(o1.stratum_prediction) - 1,
           "omega_fourfold: e1 is not a Σ1 point with ambient P^{n−1}");
  const FiberReport o2 = check2("omega_fourfold", om, Subspace::coordinate(kV6, {0, 1, 3}));
  t.expect(o2.sigma_level == 1 && o2.ambient_proj_dim == 2, "omega_fourfold: <e1,e2,e4> is not a Σ2 plane with ambient P^{n−2}");
  return {8, "fibration two-path agreement", t.ok(), t.cases(), 0, 0, t.ok() ? "" : t.failure()};
}

inline CheckResult check_hyperplane_update(const SuiteOptions& opt) {
  detail::Tally t;
  Rng rng(opt.seed * 1000 + 9);
  const Subspace a = fixtures::fivefold_lagrangian().a;
  const std::size_t base_cap = subspace_intersect(a, l3v5_subspace()).dim();
  for (std::size_t s = 0; s < opt.hyperplane_samples; ++s) {
    const MultiVector eta(kV5, 3, rng.nonzero_int_vector(kL3V5, 3));
    const MultiVector eta6 = embed_v5(eta);
    const Subspace a2 = hyperplane_section_lagrangian(a, eta);
    const std::string where = "η0 sample " + std::to_string(s);
    t.expect(l3v6_space().is_lagrangian(a2), where + ": A′ not Lagrangian");
    t.expect(subspace_intersect(a, a2).dim() == 9, where + ": dim(A∩A′) != 9");
    const std::size_t cut =
        subspace_intersect(subspace_intersect(a, l3v5_subspace()), l3v6_space().orthogonal(line(eta6.coords()))).dim();
    t.expect(subspace_intersect(a2, l3v5_subspace()).dim() == cut + 1 && cut <= base_cap, where + ": Λ³V5 count");
  }
  return {9, "hyperplane-section update", t.ok(), t.cases(), 0, 0, t.ok() ? "" : t.failure()};
}

inline CheckResult check_hull(const SuiteOptions& opt) {
  detail::Tally t;
  const auto& p = plucker_forms();
  for (const std::string name : {"fivefold", "threefold", "omega_fourfold", "corank2_fivefold"}) {
    const GMData d = fixtures::gm_by_name(name);
    for (std::size_t s = 0; s < opt.hull_samples; ++s) {
      const std::uint64_t seed = opt.seed * 100000 + s;
      const HullSample h = hull_point_sample(d, seed);
      const RatVector beta = d.mu * h.w;
      bool quadrics = true;
      for (std::size_t i = 0; i < kV5; ++i) quadrics = quadrics && bilinear(d.q[i], h.w, h.w) == 0 && bilinear(p[i], beta, beta) == 0;
      t.expect(quadrics, name + ": hull sample " + std::to_string(s) + " violates a V5-quadric");
      t.expect(rank(detail::skew_matrix(beta)) == 2, name + ": μ(w) is not decomposable for sample " + std::to_string(s));
      const MultiVector v12 = MultiVector::vector(h.v1).wedge(MultiVector::vector(h.v2));
      t.expect(rank(RatMatrix::from_rows({beta, v12.coords()}, kL2V5)) == 1, name + ": μ(w) != v1∧v2");
    }
  }
  return {10, "hull sampling", t.ok(), t.cases(), 0, 0, t.ok() ? "" : t.failure()};
}

// Runs one check, converting library exceptions into a failed result and timing it.
inline CheckResult run_check(const std::function<CheckResult(const SuiteOptions&)>& check, const SuiteOptions& opt, int id,
                             const std::string& name, double budget_seconds) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult r;
  try {
    r = check(opt);
  } catch (const std::exception& e) {
    r = {id, name, false, 0, 0, 0, std::string("exception: ") + e.what()};
  }
  r.budget_seconds = budget_seconds;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_seconds > 0 && r.seconds >= budget_seconds) {
    if (r.passed) r.detail = "exceeded the time budget";
    r.passed = false;
  }
  return r;
}

inline std::vector<CheckResult> run_suite(const SuiteOptions& opt) {
  struct Entry {
    std::string name;
    std::function<CheckResult(const SuiteOptions&)> fn;
    double budget_seconds;  // 0 when no time limit applies
  };
  const std::vector<Entry> checks = {
      {"Lagrangian/quadric correspondence", check_appendix_c, 10},
      {"GM/Lagrangian round trips", check_round_trips, 5},
      {"kernel/stratum identity", check_kernel_identity, 30},
      {"dimension formula", check_dimension_formula, 0},
      {"degree certificates", check_degree_certificates, 60},
      {"discriminant division", check_discriminant, 60},
      {"duality", check_duality, 30},
      {"fibration two-path agreement", check_fibrations, 60},
      {"hyperplane-section update", check_hyperplane_update, 0},
      {"hull sampling", check_hull, 0},
  };
  std::vector<CheckResult> out;
  for (std::size_t i = 0; i < checks.size(); ++i)
    out.push_back(run_check(checks[i].fn, opt, static_cast<int>(i + 1), checks[i].name, checks[i].budget_seconds));
  return out;
}

}  // namespace gmlag::invariants

// Command-line front end. Exit codes: 0 success, 1 mathematical violation, 2 input error.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gmlag/gmlag.hpp"

namespace {

using gmlag::Rat;
using gmlag::RatVector;
using gmlag::io::Json;

constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;

struct Streams {
  std::string input = "-";
  std::string output = "-";
};

std::string read_all(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw gmlag::InputError("cannot open input file \"" + path + "\"");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_all(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text << std::flush;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw gmlag::InputError("cannot open output file \"" + path + "\"");
  out << text;
}

Json read_doc(const Streams& s, const std::string& kind) {
  return gmlag::io::parse_document(read_all(s.input), kind);
}

gmlag::GMData read_gm(const Streams& s) { return gmlag::io::gm_from_document(read_doc(s, "gm_data")); }
gmlag::LagrangianData read_lagrangian(const Streams& s) {
  return gmlag::io::lagrangian_from_document(read_doc(s, "lagrangian_data"));
}

void emit(const Streams& s, const Json& doc) { write_all(s.output, gmlag::io::emit(doc)); }

Json report(const std::string& name) {
  Json j = gmlag::io::document("report");
  j["report"] = name;
  return j;
}

gmlag::Subspace plane_arg(const std::string& text) {
  const gmlag::Subspace p = gmlag::Subspace::span(gmlag::io::parse_vectors_arg(text, gmlag::kV6), gmlag::kV6);
  gmlag::require(p.dim() == 3, "plane \"" + text + "\" does not span a 3-dimensional subspace");
  return p;
}

std::string csv_vector(const RatVector& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + gmlag::to_string(v[i]);
  return out;
}

std::string csv_plane(const gmlag::Subspace& p) {
  std::string out;
  for (std::size_t i = 0; i < p.dim(); ++i) out += (i ? ";" : "") + csv_vector(p.basis_vector(i));
  return out;
}

constexpr const char* kFiberCsvHeader = "query,sigma_level,stratum,ambient,corank,agreement\n";

std::string fiber_row(const std::string& query, const gmlag::FiberReport& r) {
  std::ostringstream os;
  os << query << ',' << r.sigma_level << ',' << r.stratum_prediction << ',' << r.ambient_proj_dim << ',' << r.corank << ','
     << (r.agreement ? "yes" : "no") << '\n';
  return os.str();
}

// Sets the exit code to 1 when any row disagrees; all rows are still written.
int write_fiber_table(const Streams& s, const std::string& table, bool all_agree) {
  write_all(s.output, kFiberCsvHeader + table);
  if (!all_agree) {
    std::cerr << "error: reduction and closed-form stratum arithmetic disagree on at least one row\n";
    return kExitViolation;
  }
  return 0;
}

void add_streams(CLI::App* cmd, Streams& s) {
  cmd->add_option("input", s.input, "input document path, or - for standard input")->capture_default_str();
  cmd->add_option("-o,--output", s.output, "output path, or - for standard output")->capture_default_str();
}

int run_selftest(std::uint64_t seed, bool quick) {
  gmlag::invariants::SuiteOptions opt;
  opt.seed = seed;
  if (quick) {
    opt.lagrangians_per_dim = 10;
    opt.kernel_samples = 10;
    opt.duality_samples = 10;
    opt.fibration_samples = 10;
    opt.hyperplane_samples = 10;
    opt.hull_samples = 10;
  }
  const auto results = gmlag::invariants::run_suite(opt);
  bool ok = true;
  std::cout << std::left << std::setw(4) << "#" << std::setw(36) << "check" << std::setw(8) << "result" << std::setw(8)
            << "cases" << "seconds\n";
  for (const auto& r : results) {
    ok = ok && r.passed;
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(2) << r.seconds;
    std::cout << std::left << std::setw(4) << r.id << std::setw(36) << r.name << std::setw(8) << (r.passed ? "PASS" : "FAIL")
              << std::setw(8) << r.cases << secs.str();
    if (!r.detail.empty()) std::cout << "  " << r.detail;
    std::cout << '\n';
  }
  std::cout << (ok ? "all checks passed\n" : "some checks FAILED\n");
  return ok ? 0 : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact GM data, Lagrangian data, EPW strata and quadric fibrations over the rationals"};
  app.require_subcommand(1);
  int exit_code = 0;

  // validate
  Streams validate_io;
  auto* validate = app.add_subcommand("validate", "check the defining identities of GM data and classify it");
  add_streams(validate, validate_io);
  validate->callback([&] {
    const gmlag::ValidationReport rep = gmlag::validate(read_gm(validate_io));
    Json j = report("validation");
    j["ok"] = !rep.violation;
    j["type"] = gmlag::to_string(rep.type);
    j["kernel_dim"] = rep.kernel_dim;
    j["v_independent"] = rep.v_independent;
    j["degenerate"] = rep.degenerate;
    j["violation"] = rep.violation ? Json(rep.violation->message()) : Json(nullptr);
    emit(validate_io, j);
    if (rep.violation) exit_code = kExitViolation;
  });

  // to-lagrangian
  Streams to_l_io;
  std::string v0_text;
  auto* to_l = app.add_subcommand("to-lagrangian", "GM data to Lagrangian data");
  add_streams(to_l, to_l_io);
  to_l->add_option("--v0", v0_text, "vector of V6 outside V5 used to build the kernel (default e6)");
  to_l->callback([&] {
    const gmlag::GMData d = read_gm(to_l_io);
    const RatVector v0 = v0_text.empty() ? gmlag::unit_vector(gmlag::kV6, 5) : gmlag::io::parse_vector_arg(v0_text, gmlag::kV6);
    emit(to_l_io, gmlag::io::to_document(gmlag::gm_to_lagrangian(d, v0)));
  });

  // from-lagrangian
  Streams from_l_io;
  std::string a1_text;
  auto* from_l = app.add_subcommand("from-lagrangian", "Lagrangian data to GM data in canonical form");
  add_streams(from_l, from_l_io);
  from_l->add_option("--a1", a1_text, "override the A1 tag of the input")->check(CLI::IsMember({"0", "1"}));
  from_l->callback([&] {
    gmlag::LagrangianData ld = read_lagrangian(from_l_io);
    if (!a1_text.empty()) ld.a1 = gmlag::parse_a1(a1_text);
    emit(from_l_io, gmlag::io::to_document(gmlag::canonical_form(gmlag::lagrangian_to_gm(ld))));
  });

  // dualize
  Streams dual_io;
  auto* dual = app.add_subcommand("dualize", "A to its annihilator in the dual monomial basis");
  add_streams(dual, dual_io);
  dual->callback([&] { emit(dual_io, gmlag::io::to_document(gmlag::dualize(read_lagrangian(dual_io)))); });

  // dim-report
  Streams dim_io;
  auto* dim = app.add_subcommand("dim-report", "dim(A ∩ Λ³V5) and the predicted dimension of X");
  add_streams(dim, dim_io);
  dim->callback([&] {
    const gmlag::DimReport r = gmlag::dim_report(read_lagrangian(dim_io));
    Json j = report("dim_report");
    j["dim_a_cap_l3v5"] = r.dim_a_cap_l3v5;
    j["predicted_dim_x"] = r.predicted_dim_x;
    j["type"] = gmlag::to_string(r.type);
    j["degenerate"] = r.degenerate;
    emit(dim_io, j);
  });

  // epw-point
  Streams point_io;
  std::string point_text;
  auto* point = app.add_subcommand("epw-point", "Y-stratum dim(A ∩ v∧Λ²V6) of a point");
  add_streams(point, point_io);
  point->add_option("--point", point_text, "comma-separated coordinates of v in V6")->required();
  point->callback([&] {
    const gmlag::LagrangianData ld = read_lagrangian(point_io);
    const RatVector v = gmlag::io::parse_vector_arg(point_text, gmlag::kV6);
    Json j = report("y_stratum");
    j["point"] = gmlag::io::to_json(v);
    j["y_stratum"] = gmlag::y_stratum(gmlag::standard_frame_a(ld), v);
    emit(point_io, j);
  });

  // epw-dual-point
  Streams dpoint_io;
  std::string form_text;
  std::string incidence_text;
  auto* dpoint = app.add_subcommand("epw-dual-point", "dual stratum dim(A ∩ Λ³V5') of a hyperplane");
  add_streams(dpoint, dpoint_io);
  dpoint->add_option("--form", form_text, "linear form cutting out V5', comma-separated")->required();
  dpoint->add_option("--point", incidence_text, "optional v in V5' for the incidence dim(A ∩ v∧Λ²V5')");
  dpoint->callback([&] {
    const gmlag::LagrangianData ld = read_lagrangian(dpoint_io);
    const gmlag::Subspace a = gmlag::standard_frame_a(ld);
    const RatVector f = gmlag::io::parse_vector_arg(form_text, gmlag::kV6);
    const gmlag::Subspace h = gmlag::hyperplane_from_form(f);
    Json j = report("y_dual_stratum");
    j["form"] = gmlag::io::to_json(f);
    j["y_dual_stratum"] = gmlag::y_dual_stratum(a, h);
    gmlag::LagrangianData plain;
    plain.a = a;
    j["y_stratum_of_dual"] = gmlag::y_stratum(gmlag::dualize(plain).a, gmlag::dual_point(h));
    if (!incidence_text.empty()) {
      const RatVector v = gmlag::io::parse_vector_arg(incidence_text, gmlag::kV6);
      j["point"] = gmlag::io::to_json(v);
      j["y_hat"] = gmlag::y_hat_member(a, v, h);
    }
    emit(dpoint_io, j);
  });

  // epw-line
  Streams line_io;
  std::string kind = "y";
  std::string base_text;
  std::string dir_text;
  std::string pencil_text;
  std::uint64_t line_seed = 1;
  std::size_t line_checks = 20;
  auto* line_cmd = app.add_subcommand("epw-line", "degree certificate of Y_A on a line or Z_A on a pencil of planes");
  add_streams(line_cmd, line_io);
  line_cmd->add_option("--kind", kind, "y (sextic, on a line) or z (quartic, on a pencil)")->check(CLI::IsMember({"y", "z"}));
  line_cmd->add_option("--base", base_text, "Y: base point of the line");
  line_cmd->add_option("--direction", dir_text, "Y: direction of the line");
  line_cmd->add_option("--pencil", pencil_text, "Z: u1;u2;u3;u4 for the planes span(u1, u2, u3 + t u4)");
  line_cmd->add_option("--seed", line_seed, "seed for the random line and the sample parameters")->capture_default_str();
  line_cmd->add_option("--checks", line_checks, "minimum number of sample parameters")->capture_default_str();
  line_cmd->callback([&] {
    const gmlag::Subspace a = gmlag::standard_frame_a(read_lagrangian(line_io));
    gmlag::Rng rng(line_seed);
    gmlag::LineDegreeCertificate cert;
    if (kind == "y") {
      gmlag::require(base_text.empty() == dir_text.empty(), "epw-line: give both --base and --direction, or neither");
      RatVector base = base_text.empty() ? RatVector{} : gmlag::io::parse_vector_arg(base_text, gmlag::kV6);
      RatVector dir = dir_text.empty() ? RatVector{} : gmlag::io::parse_vector_arg(dir_text, gmlag::kV6);
      while (base.empty() || gmlag::rank(gmlag::RatMatrix::from_rows({base, dir}, gmlag::kV6)) < 2) {
        gmlag::require(base_text.empty(), "epw-line: base and direction do not span a line");
        base = rng.int_vector(gmlag::kV6, 3);
        dir = rng.int_vector(gmlag::kV6, 3);
      }
      cert = gmlag::y_line_certificate(a, base, dir, rng.next(), line_checks);
    } else {
      std::vector<RatVector> u;
      if (!pencil_text.empty()) u = gmlag::io::parse_vectors_arg(pencil_text, gmlag::kV6);
      gmlag::require(pencil_text.empty() || u.size() == 4, "epw-line: --pencil needs four vectors");
      while (u.size() != 4 || gmlag::rank(gmlag::RatMatrix::from_rows(u, gmlag::kV6)) < 4) {
        gmlag::require(pencil_text.empty(), "epw-line: pencil vectors must be independent");
        u.clear();
        for (int i = 0; i < 4; ++i) u.push_back(rng.int_vector(gmlag::kV6, 3));
      }
      cert = gmlag::z_pencil_certificate(a, u, rng.next(), line_checks);
    }
    emit(line_io, gmlag::io::to_document(cert));
  });

  // zeta-plane
  Streams zeta_io;
  std::string zeta_plane;
  auto* zeta = app.add_subcommand("zeta-plane", "Z-stratum dim(A ∩ V6∧Λ²V3) of a plane");
  add_streams(zeta, zeta_io);
  zeta->add_option("--plane", zeta_plane, "u1;u2;u3 spanning V3")->required();
  zeta->callback([&] {
    const gmlag::Subspace a = gmlag::standard_frame_a(read_lagrangian(zeta_io));
    const gmlag::Subspace v3 = plane_arg(zeta_plane);
    gmlag::LagrangianData plain;
    plain.a = a;
    Json j = report("z_stratum");
    j["plane"] = gmlag::io::to_json(v3);
    j["z_stratum"] = gmlag::z_stratum(a, v3);
    j["z_stratum_of_dual"] = gmlag::z_stratum(gmlag::dualize(plain).a, gmlag::annihilator(v3));
    emit(zeta_io, j);
  });

  // disc-line
  Streams disc_io;
  std::string from_text;
  std::string to_text;
  std::uint64_t disc_seed = 1;
  auto* disc = app.add_subcommand("disc-line", "discriminant of the quadric family along a line");
  add_streams(disc, disc_io);
  disc->add_option("--from", from_text, "first point of the line");
  disc->add_option("--to", to_text, "second point of the line");
  disc->add_option("--seed", disc_seed, "seed for a random line when no points are given")->capture_default_str();
  disc->callback([&] {
    const gmlag::GMData d = read_gm(disc_io);
    gmlag::require(from_text.empty() == to_text.empty(), "disc-line: give both --from and --to, or neither");
    RatVector va;
    RatVector vb;
    if (from_text.empty()) {
      gmlag::Rng rng(disc_seed);
      do {
        va = rng.int_vector(gmlag::kV6, 3);
        vb = rng.int_vector(gmlag::kV6, 3);
      } while (va[5] == 0 || gmlag::rank(gmlag::RatMatrix::from_rows({va, vb}, gmlag::kV6)) < 2);
    } else {
      va = gmlag::io::parse_vector_arg(from_text, gmlag::kV6);
      vb = gmlag::io::parse_vector_arg(to_text, gmlag::kV6);
    }
    const gmlag::DiscriminantReport r = gmlag::discriminant_on_line(d, va, vb);
    Json j = report("discriminant");
    j["line"] = Json::array({gmlag::io::to_json(va), gmlag::io::to_json(vb)});
    j["whole_line"] = r.whole_line;
    j["det_poly"] = gmlag::io::to_json(r.det_poly);
    j["plucker_mult"] = r.plucker_mult;
    j["expected_mult"] = d.n - 1;
    j["exceeds_expected"] = r.exceeds_expected;
    j["dis_poly"] = gmlag::io::to_json(r.dis_poly);
    emit(disc_io, j);
  });

  // fib1
  Streams fib1_io;
  std::vector<std::string> fib1_points;
  std::size_t fib1_random = 0;
  std::uint64_t fib1_seed = 1;
  auto* fib1 = app.add_subcommand("fib1", "first quadric fibration: fibre over points of P(V5), as CSV");
  add_streams(fib1, fib1_io);
  fib1->add_option("--point", fib1_points, "v in V5 (repeatable)")->allow_extra_args(false);
  fib1->add_option("--random", fib1_random, "number of additional random points")->capture_default_str();
  fib1->add_option("--seed", fib1_seed, "seed for random points")->capture_default_str();
  fib1->callback([&] {
    const gmlag::FibrationContext ctx(read_lagrangian(fib1_io));
    std::vector<RatVector> points;
    for (const auto& p : fib1_points) points.push_back(gmlag::io::parse_vector_arg(p, gmlag::kV6));
    gmlag::Rng rng(fib1_seed);
    for (std::size_t i = 0; i < fib1_random; ++i) points.push_back(gmlag::invariants::detail::random_in_v5(rng));
    gmlag::require(!points.empty(), "fib1: give at least one --point or --random N");
    std::string table;
    bool agree = true;
    for (const auto& v : points) {
      const gmlag::FiberReport r = gmlag::fibration1_fiber(ctx, v);
      agree = agree && r.agreement;
      table += fiber_row(csv_vector(v), r);
    }
    exit_code = write_fiber_table(fib1_io, table, agree);
  });

  // fib2
  Streams fib2_io;
  std::vector<std::string> fib2_planes;
  std::size_t fib2_random = 0;
  std::uint64_t fib2_seed = 1;
  auto* fib2 = app.add_subcommand("fib2", "second quadric fibration: fibre over planes V3 ⊂ V5, as CSV");
  add_streams(fib2, fib2_io);
  fib2->add_option("--plane", fib2_planes, "u1;u2;u3 spanning V3 (repeatable)")->allow_extra_args(false);
  fib2->add_option("--random", fib2_random, "number of additional random planes")->capture_default_str();
  fib2->add_option("--seed", fib2_seed, "seed for random planes")->capture_default_str();
  fib2->callback([&] {
    const gmlag::FibrationContext ctx(read_lagrangian(fib2_io));
    std::vector<gmlag::Subspace> planes;
    for (const auto& p : fib2_planes) planes.push_back(plane_arg(p));
    gmlag::Rng rng(fib2_seed);
    for (std::size_t i = 0; i < fib2_random; ++i) planes.push_back(gmlag::invariants::detail::random_plane(rng, true));
    gmlag::require(!planes.empty(), "fib2: give at least one --plane or --random N");
    std::string table;
    bool agree = true;
    for (const auto& p : planes) {
      const gmlag::FiberReport r = gmlag::fibration2_fiber(ctx, p);
      agree = agree && r.agreement;
      table += fiber_row(csv_plane(p), r);
    }
    exit_code = write_fiber_table(fib2_io, table, agree);
  });

  // hull-sample
  Streams hull_io;
  std::uint64_t hull_seed = 1;
  std::size_t hull_count = 1;
  auto* hull = app.add_subcommand("hull-sample", "sample points of the Grassmannian hull");
  add_streams(hull, hull_io);
  hull->add_option("--seed", hull_seed, "seed of the first sample")->capture_default_str();
  hull->add_option("--count", hull_count, "number of samples, seeds seed..seed+count-1")->capture_default_str();
  hull->callback([&] {
    const gmlag::GMData d = read_gm(hull_io);
    Json j = report("hull_samples");
    Json points = Json::array();
    for (std::size_t i = 0; i < hull_count; ++i) {
      const gmlag::HullSample s = gmlag::hull_point_sample(d, hull_seed + i);
      Json p;
      p["w"] = gmlag::io::to_json(s.w);
      p["v1"] = gmlag::io::to_json(s.v1);
      p["v2"] = gmlag::io::to_json(s.v2);
      p["resamples"] = s.resamples;
      p["membership"] = gmlag::to_string(gmlag::membership(d, s.w));
      points.push_back(std::move(p));
    }
    j["samples"] = std::move(points);
    emit(hull_io, j);
  });

  // opposite
  Streams opp_io;
  auto* opp = app.add_subcommand("opposite", "ordinary to special GM data and back (representative t = 1)");
  add_streams(opp, opp_io);
  opp->callback([&] { emit(opp_io, gmlag::io::to_document(gmlag::canonical_form(gmlag::opposite(read_gm(opp_io))))); });

  // hyperplane-update
  Streams hyp_io;
  std::string eta_text;
  auto* hyp = app.add_subcommand("hyperplane-update", "A' = (A ∩ η0^⊥) + kη0 for η0 in Λ³V5");
  add_streams(hyp, hyp_io);
  hyp->add_option("--eta0", eta_text, "η0 as 10 coordinates in Λ³V5 or 20 in Λ³V6")->required();
  hyp->callback([&] {
    gmlag::LagrangianData ld = read_lagrangian(hyp_io);
    const std::size_t n = std::count(eta_text.begin(), eta_text.end(), ',') + 1;
    gmlag::require(n == gmlag::kL3V5 || n == gmlag::kL3V6, "hyperplane-update: --eta0 needs 10 or 20 coordinates");
    const RatVector eta = gmlag::io::parse_vector_arg(eta_text, n);
    const gmlag::MultiVector mv(n == gmlag::kL3V5 ? gmlag::kV5 : gmlag::kV6, 3, eta);
    ld.a = gmlag::hyperplane_section_lagrangian(gmlag::standard_frame_a(ld), mv);
    ld.frame.reset();
    emit(hyp_io, gmlag::io::to_document(ld));
  });

  // selftest
  std::uint64_t self_seed = 1;
  bool quick = false;
  auto* self = app.add_subcommand("selftest", "run the invariant suite on the built-in fixtures");
  self->add_option("--seed", self_seed, "seed of the random samples")->capture_default_str();
  self->add_flag("--quick", quick, "use small sample counts");
  self->callback([&] { exit_code = run_selftest(self_seed, quick); });

  // fixture
  std::string fixture_name;
  bool fixture_lagrangian = false;
  std::string fixture_out = "-";
  auto* fixture = app.add_subcommand("fixture", "print a built-in fixture");
  std::vector<std::string> names;
  for (const auto& e : gmlag::fixtures::catalog()) names.push_back(e.name);
  fixture->add_option("name", fixture_name, "fixture name")->required()->check(CLI::IsMember(names));
  fixture->add_flag("--lagrangian", fixture_lagrangian, "print the Lagrangian data instead of the GM data");
  fixture->add_option("-o,--output", fixture_out, "output path, or - for standard output")->capture_default_str();
  fixture->callback([&] {
    bool is_gm = false;
    for (const auto& e : gmlag::fixtures::catalog()) is_gm = is_gm || (e.name == fixture_name && e.is_gm);
    const Json doc = (is_gm && !fixture_lagrangian) ? gmlag::io::to_document(gmlag::fixtures::gm_by_name(fixture_name))
                                                    : gmlag::io::to_document(gmlag::fixtures::lagrangian_by_name(fixture_name));
    write_all(fixture_out, gmlag::io::emit(doc));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  } catch (const gmlag::InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const gmlag::MathViolation& e) {
    std::cerr << "violation: " << e.what() << '\n';
    return kExitViolation;
  }
  return exit_code;
}

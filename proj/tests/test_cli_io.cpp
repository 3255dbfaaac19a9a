#include <gtest/gtest.h>

#include <fstream>
#include <iterator>
#include <sstream>

#include "gmlag/gmlag.hpp"

using namespace gmlag;
using io::Json;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  EXPECT_TRUE(in.good()) << "missing " << path;
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "<no InputError>";
}

std::string fivefold_text() { return io::emit(io::to_document(fixtures::fivefold())); }

}  // namespace

TEST(Documents, EmitParseIsIdentityOnFixtures) {
  for (const auto& e : fixtures::catalog()) {
    const std::string lag = io::emit(io::to_document(fixtures::lagrangian_by_name(e.name)));
    EXPECT_EQ(io::emit(io::parse_document(lag)), lag) << e.name;
    EXPECT_EQ(io::lagrangian_from_document(io::parse_document(lag)), fixtures::lagrangian_by_name(e.name));
    if (!e.is_gm) continue;
    const std::string gm = io::emit(io::to_document(fixtures::gm_by_name(e.name)));
    EXPECT_EQ(io::emit(io::parse_document(gm)), gm) << e.name;
    EXPECT_EQ(io::gm_from_document(io::parse_document(gm, "gm_data")), fixtures::gm_by_name(e.name));
  }
}

TEST(Documents, ShippedDataMatchesBuiltInFixtures) {
  for (const auto& e : fixtures::catalog()) {
    const std::string dir = GMLAG_DATA_DIR;
    EXPECT_EQ(read_file(dir + "/" + e.name + ".lag.json"), io::emit(io::to_document(fixtures::lagrangian_by_name(e.name))))
        << e.name;
    if (e.is_gm) {
      EXPECT_EQ(read_file(dir + "/" + e.name + ".gm.json"), io::emit(io::to_document(fixtures::gm_by_name(e.name)))) << e.name;
    }
  }
}

TEST(Documents, QuadricAndCertificateRoundTrip) {
  Rng rng(81);
  const Subspace w = Subspace::span(RatMatrix::from_rows({RatVector{1, 2, 0}, RatVector{0, 1, 1}}, 3));
  const QuadricOnSubspace q(w, random_symmetric(rng, 2, 1));
  const std::string qt = io::emit(io::to_document(q));
  EXPECT_EQ(io::quadric_from_document(io::parse_document(qt, "quadric")), q);
  EXPECT_EQ(io::emit(io::parse_document(qt)), qt);

  const LineDegreeCertificate c =
      y_line_certificate(fixtures::fivefold_lagrangian().a, rng.int_vector(kV6, 3), rng.int_vector(kV6, 3), 5, 20);
  const std::string ct = io::emit(io::to_document(c));
  EXPECT_EQ(io::emit(io::to_document(io::certificate_from_document(io::parse_document(ct, "certificate")))), ct);
}

TEST(Documents, MalformedRationalNamesTheField) {
  Json doc = io::parse_document(fivefold_text());
  doc["q"][2][3][4] = "1/0";
  const std::string msg = error_of([&] { io::gm_from_document(doc); });
  EXPECT_NE(msg.find("q[2][3][4]"), std::string::npos) << msg;
  EXPECT_NE(msg.find("malformed rational"), std::string::npos) << msg;
}

TEST(Documents, NonRrefSubspaceIsCanonicalized) {
  const LagrangianData ld = fixtures::l3v5_lagrangian();
  Json doc = io::to_document(ld);
  // Replace the basis by a shuffled, rescaled, mixed spanning set of the same space.
  Json basis = Json::array();
  const RatMatrix b = ld.a.basis();
  for (std::size_t i = 0; i < b.rows(); ++i) {
    const RatVector row = axpy(Rat(3), b.row((i + 1) % b.rows()), RatVector(b.row(i)));
    basis.push_back(io::to_json(row));
  }
  doc["A"]["basis"] = basis;
  const LagrangianData parsed = io::lagrangian_from_document(doc);
  EXPECT_EQ(parsed, ld);
  EXPECT_EQ(io::emit(io::to_document(parsed)), io::emit(io::to_document(ld)));
}

TEST(Documents, HeaderErrors) {
  EXPECT_NE(error_of([] { io::parse_document(R"({"kind":"poem","version":"1"})"); }).find("unknown kind"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_document(R"({"kind":"gm_data","version":"2"})"); }).find("version"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_document(R"({"version":"1"})"); }).find("kind"), std::string::npos);
  EXPECT_NE(error_of([] { io::parse_document(R"({"kind":"quadric","version":"1"})", "gm_data"); }).find("expected \"gm_data\""),
            std::string::npos);
  const std::string syntax = error_of([] { io::parse_document("{\n  \"kind\": \"gm_data\",\n  oops\n}"); });
  EXPECT_NE(syntax.find("line 3"), std::string::npos) << syntax;
}

TEST(Documents, DimensionErrorsNameTheField) {
  Json doc = io::parse_document(fivefold_text());
  doc["mu"].erase(doc["mu"].begin());
  EXPECT_NE(error_of([&] { io::gm_from_document(doc); }).find("mu"), std::string::npos);

  Json lag = io::to_document(fixtures::fivefold_lagrangian());
  lag["A"]["basis"].erase(lag["A"]["basis"].begin());
  EXPECT_NE(error_of([&] { io::lagrangian_from_document(lag); }).find("10-dimensional"), std::string::npos);

  lag = io::to_document(fixtures::fivefold_lagrangian());
  lag["A1"] = "2";
  EXPECT_NE(error_of([&] { io::lagrangian_from_document(lag); }).find("A1"), std::string::npos);
}

TEST(Documents, NonLagrangianIsRejected) {
  Json lag = io::to_document(fixtures::fivefold_lagrangian());
  Json basis = Json::array();
  for (std::size_t i = 0; i < 10; ++i) basis.push_back(io::to_json(unit_vector(kL3V6, i == 9 ? 19 : i)));
  lag["A"]["basis"] = basis;
  EXPECT_THROW(io::lagrangian_from_document(lag), InputError);
}

TEST(Documents, EmitterLayoutIsStable) {
  Json doc = io::document("report");
  doc["values"] = Json::array({"1", "-2/3"});
  doc["nested"] = Json::array({Json::array({"1"}), Json::array()});
  EXPECT_EQ(io::emit(doc),
            "{\n  \"kind\": \"report\",\n  \"version\": \"1\",\n  \"values\": [\"1\", \"-2/3\"],\n  \"nested\": [\n    "
            "[\"1\"],\n    []\n  ]\n}\n");
}

TEST(Arguments, VectorParsing) {
  EXPECT_EQ(io::parse_vector_arg("1,-2/3,0", 3), (RatVector{Rat(1), Rat(-2, 3), Rat(0)}));
  EXPECT_THROW(io::parse_vector_arg("1,2", 3), InputError);
  EXPECT_THROW(io::parse_vector_arg("1,x,2", 3), InputError);
  EXPECT_EQ(io::parse_vectors_arg("1,0;0,1", 2).size(), 2u);
}

#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "gmlag/correspondence.hpp"
#include "gmlag/epw.hpp"
#include "gmlag/error.hpp"
#include "gmlag/gm_data.hpp"
#include "gmlag/matrix.hpp"
#include "gmlag/polynomial.hpp"
#include "gmlag/quadric.hpp"
#include "gmlag/rational.hpp"
#include "gmlag/subspace.hpp"
#include "json.hpp"

// Structured-text documents: JSON objects with "kind" and "version" first, every scalar a
// "p/q" string. Emission is deterministic, so emit(parse(x)) == x for canonical input.
namespace gmlag::io {

using Json = nlohmann::ordered_json;

inline constexpr const char* kFormatVersion = "1";
inline constexpr std::size_t kAny = std::numeric_limits<std::size_t>::max();

// ---- emission ----

namespace detail {

inline bool is_flat(const Json& j) {
  for (const auto& e : j)
    if (e.is_array() || e.is_object()) return false;
  return true;
}

inline void emit_value(const Json& j, std::string& out, std::size_t indent) {
  const std::string pad(indent + 2, ' ');
  if (j.is_array()) {
    if (j.empty()) {
      out += "[]";
    } else if (is_flat(j)) {
      out += '[';
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ", ";
        out += j[i].dump();
      }
      out += ']';
    } else {
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        out += pad;
        emit_value(j[i], out, indent + 2);
        out += i + 1 < j.size() ? ",\n" : "\n";
      }
      out += std::string(indent, ' ') + ']';
    }
  } else if (j.is_object()) {
    if (j.empty()) {
      out += "{}";
      return;
    }
    out += "{\n";
    std::size_t i = 0;
    for (auto it = j.begin(); it != j.end(); ++it, ++i) {
      out += pad + Json(it.key()).dump() + ": ";
      emit_value(it.value(), out, indent + 2);
      out += i + 1 < j.size() ? ",\n" : "\n";
    }
    out += std::string(indent, ' ') + '}';
  } else {
    out += j.dump();
  }
}

}  // namespace detail

inline std::string emit(const Json& doc) {
  std::string out;
  detail::emit_value(doc, out, 0);
  out += '\n';
  return out;
}

inline Json document(const std::string& kind) {
  Json j;
  j["kind"] = kind;
  j["version"] = kFormatVersion;
  return j;
}

inline Json to_json(const Rat& r) { return to_string(r); }

inline Json to_json(const RatVector& v) {
  Json a = Json::array();
  for (const Rat& x : v) a.push_back(to_string(x));
  return a;
}

inline Json to_json(const RatMatrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(to_json(m.row(i)));
  return a;
}

inline Json to_json(const Subspace& s) {
  Json j;
  j["ambient_dim"] = s.ambient_dim();
  Json basis = Json::array();
  for (std::size_t i = 0; i < s.dim(); ++i) basis.push_back(to_json(s.basis_vector(i)));
  j["basis"] = std::move(basis);
  return j;
}

inline Json to_json(const Poly& p) {
  Json a = Json::array();
  for (const auto& s : coefficient_strings(p)) a.push_back(s);
  return a;
}

// ---- parsing ----

// Field paths look like "q[3][2][1]" or "A.basis[0]".
inline std::string child(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
inline std::string child(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

inline InputError field_error(const std::string& path, const std::string& msg) {
  return InputError("field " + (path.empty() ? std::string("<root>") : path) + ": " + msg);
}

inline const Json& field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) throw field_error(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw field_error(child(path, key), "missing");
  return *it;
}

inline Rat read_rat(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rat(mpz_class(j.dump(), 10));
  if (!j.is_string()) throw field_error(path, "expected a rational string \"p/q\"");
  try {
    return parse_rat(j.get<std::string>());
  } catch (const InputError& e) {
    throw field_error(path, e.what());
  }
}

inline std::size_t read_count(const Json& j, const std::string& path) {
  if (!j.is_number_unsigned()) throw field_error(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

inline RatVector read_vector(const Json& j, const std::string& path, std::size_t size = kAny) {
  if (!j.is_array()) throw field_error(path, "expected an array");
  if (size != kAny && j.size() != size)
    throw field_error(path, "expected " + std::to_string(size) + " entries, found " + std::to_string(j.size()));
  RatVector v;
  for (std::size_t i = 0; i < j.size(); ++i) v.push_back(read_rat(j[i], child(path, i)));
  return v;
}

inline RatMatrix read_matrix(const Json& j, const std::string& path, std::size_t rows = kAny, std::size_t cols = kAny) {
  if (!j.is_array()) throw field_error(path, "expected an array of rows");
  if (rows != kAny && j.size() != rows)
    throw field_error(path, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
  if (cols == kAny) cols = j.empty() ? 0 : (j[0].is_array() ? j[0].size() : 0);
  RatMatrix m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) m.set_row(i, read_vector(j[i], child(path, i), cols));
  return m;
}

// A non-RREF basis is accepted and canonicalized.
inline Subspace read_subspace(const Json& j, const std::string& path, std::size_t ambient = kAny) {
  const std::size_t n = read_count(field(j, "ambient_dim", path), child(path, "ambient_dim"));
  if (ambient != kAny && n != ambient)
    throw field_error(child(path, "ambient_dim"), "expected " + std::to_string(ambient) + ", found " + std::to_string(n));
  const RatMatrix basis = read_matrix(field(j, "basis", path), child(path, "basis"), kAny, n);
  return Subspace::span(basis.rows() == 0 ? RatMatrix(0, n) : basis);
}

inline Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("line " + std::to_string(line) + ", column " + std::to_string(col) + ": malformed document");
  }
}

inline const std::vector<std::string>& known_kinds() {
  static const std::vector<std::string> kinds = {"gm_data", "lagrangian_data", "quadric", "certificate", "report"};
  return kinds;
}

// Checks the header; expected_kind, if given, must match.
inline Json parse_document(std::string_view text, const std::optional<std::string>& expected_kind = std::nullopt) {
  Json doc = parse_json(text);
  const Json& kind = field(doc, "kind", "");
  if (!kind.is_string()) throw field_error("kind", "expected a string");
  const std::string k = kind.get<std::string>();
  bool known = false;
  for (const auto& s : known_kinds()) known = known || s == k;
  if (!known) throw field_error("kind", "unknown kind \"" + k + "\"");
  const Json& version = field(doc, "version", "");
  if (!version.is_string() || version.get<std::string>() != kFormatVersion)
    throw field_error("version", std::string("unsupported version, expected \"") + kFormatVersion + "\"");
  if (expected_kind && k != *expected_kind) throw field_error("kind", "expected \"" + *expected_kind + "\", found \"" + k + "\"");
  return doc;
}

// ---- gm_data ----

inline Json to_document(const GMData& d) {
  Json j = document("gm_data");
  j["n"] = d.n;
  j["type_hint"] = d.type_hint;
  j["mu"] = to_json(d.mu);
  Json q = Json::array();
  for (const auto& m : d.q) q.push_back(to_json(m));
  j["q"] = std::move(q);
  return j;
}

inline GMData gm_from_document(const Json& doc) {
  GMData d;
  const Json& n = field(doc, "n", "");
  if (!n.is_number_integer()) throw field_error("n", "expected an integer");
  d.n = n.get<int>();
  if (d.n < -5 || d.n > 25) throw field_error("n", "dimension out of range");
  const std::size_t m = d.w_dim();
  d.mu = read_matrix(field(doc, "mu", ""), "mu", kL2V5, m);
  const Json& q = field(doc, "q", "");
  if (!q.is_array() || q.size() != kV6) throw field_error("q", "expected six matrices");
  for (std::size_t i = 0; i < kV6; ++i) d.q[i] = read_matrix(q[i], child("q", i), m, m);
  if (doc.contains("type_hint")) {
    if (!doc["type_hint"].is_string()) throw field_error("type_hint", "expected a string");
    d.type_hint = doc["type_hint"].get<std::string>();
  }
  return d;
}

// ---- lagrangian_data ----

inline Json to_document(const LagrangianData& ld) {
  Json j = document("lagrangian_data");
  j["A"] = to_json(ld.a);
  j["A1"] = to_string(ld.a1);
  if (ld.frame) j["frame"] = to_json(*ld.frame);
  return j;
}

inline LagrangianData lagrangian_from_document(const Json& doc) {
  LagrangianData ld;
  ld.a = read_subspace(field(doc, "A", ""), "A", kL3V6);
  if (ld.a.dim() != 10) throw field_error("A", "expected a 10-dimensional subspace, found " + std::to_string(ld.a.dim()));
  if (!l3v6_space().is_isotropic(ld.a)) throw field_error("A", "not isotropic for the wedge form");
  const Json& a1 = field(doc, "A1", "");
  if (!a1.is_string()) throw field_error("A1", "expected \"0\", \"1\" or \"inf\"");
  try {
    ld.a1 = parse_a1(a1.get<std::string>());
  } catch (const InputError& e) {
    throw field_error("A1", e.what());
  }
  if (doc.contains("frame")) {
    ld.frame = read_matrix(doc["frame"], "frame", kV6, kV6);
    if (rank(*ld.frame) != kV6) throw field_error("frame", "change of basis is singular");
  }
  return ld;
}

// ---- quadric ----

inline Json to_document(const QuadricOnSubspace& q) {
  Json j = document("quadric");
  j["ambient_dim"] = q.ambient_dim();
  j["span"] = to_json(q.span());
  j["gram"] = to_json(q.gram());
  return j;
}

inline QuadricOnSubspace quadric_from_document(const Json& doc) {
  const std::size_t n = read_count(field(doc, "ambient_dim", ""), "ambient_dim");
  const Subspace span = read_subspace(field(doc, "span", ""), "span", n);
  const RatMatrix gram = read_matrix(field(doc, "gram", ""), "gram", span.dim(), span.dim());
  if (!gram.is_symmetric()) throw field_error("gram", "not symmetric");
  // The Gram matrix refers to the RREF basis; a non-RREF span would silently change it.
  if (!(read_matrix(field(doc, "span", "")["basis"], "span.basis", kAny, n) == span.basis()))
    throw field_error("span.basis", "must be in reduced row echelon form when a Gram matrix refers to it");
  return QuadricOnSubspace(span, gram);
}

// ---- certificate ----

inline Json to_document(const LineDegreeCertificate& c) {
  Json j = document("certificate");
  j["stratum"] = to_string(c.kind);
  Json line = Json::array();
  for (const auto& v : c.line) line.push_back(to_json(v));
  j["line"] = std::move(line);
  j["whole_line"] = c.whole_line;
  j["raw_det"] = to_json(c.raw_det);
  j["stripped_factor"] = to_json(c.stripped_factor);
  j["stripped_power"] = c.stripped_power;
  j["poly"] = to_json(c.poly);
  j["degree"] = c.degree;
  Json sf = Json::array();
  for (const auto& [f, e] : c.squarefree) {
    Json entry;
    entry["factor"] = to_json(f);
    entry["multiplicity"] = e;
    sf.push_back(std::move(entry));
  }
  j["squarefree"] = std::move(sf);
  j["rational_roots"] = to_json(c.rational_roots);
  j["roots_complete"] = c.roots_complete;
  j["checked_points"] = c.checked_points;
  return j;
}

inline Poly read_poly(const Json& j, const std::string& path) { return Poly(read_vector(j, path)); }

inline bool read_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw field_error(path, "expected true or false");
  return j.get<bool>();
}

inline LineDegreeCertificate certificate_from_document(const Json& doc) {
  LineDegreeCertificate c;
  const Json& kind = field(doc, "stratum", "");
  if (kind != "y" && kind != "z") throw field_error("stratum", "expected \"y\" or \"z\"");
  c.kind = kind == "y" ? StratumKind::Y : StratumKind::Z;
  const Json& line = field(doc, "line", "");
  const std::size_t expected = c.kind == StratumKind::Y ? 2 : 4;
  if (!line.is_array() || line.size() != expected)
    throw field_error("line", "expected " + std::to_string(expected) + " vectors");
  for (std::size_t i = 0; i < line.size(); ++i) c.line.push_back(read_vector(line[i], child("line", i), kV6));
  c.whole_line = read_bool(field(doc, "whole_line", ""), "whole_line");
  c.raw_det = read_poly(field(doc, "raw_det", ""), "raw_det");
  c.stripped_factor = read_poly(field(doc, "stripped_factor", ""), "stripped_factor");
  c.stripped_power = static_cast<unsigned>(read_count(field(doc, "stripped_power", ""), "stripped_power"));
  c.poly = read_poly(field(doc, "poly", ""), "poly");
  const Json& deg = field(doc, "degree", "");
  if (!deg.is_number_integer()) throw field_error("degree", "expected an integer");
  c.degree = deg.get<int>();
  if (c.degree != c.poly.degree()) throw field_error("degree", "does not match poly");
  const Json& sf = field(doc, "squarefree", "");
  if (!sf.is_array()) throw field_error("squarefree", "expected an array");
  for (std::size_t i = 0; i < sf.size(); ++i) {
    const std::string p = child("squarefree", i);
    c.squarefree.emplace_back(read_poly(field(sf[i], "factor", p), child(p, "factor")),
                              static_cast<unsigned>(read_count(field(sf[i], "multiplicity", p), child(p, "multiplicity"))));
  }
  c.rational_roots = read_vector(field(doc, "rational_roots", ""), "rational_roots");
  c.roots_complete = read_bool(field(doc, "roots_complete", ""), "roots_complete");
  c.checked_points = read_count(field(doc, "checked_points", ""), "checked_points");
  return c;
}

// ---- command-line values ----

// "1,-2,3/4"
inline RatVector parse_vector_arg(const std::string& text, std::size_t size) {
  RatVector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(parse_rat(item));
  if (v.size() != size)
    throw InputError("expected " + std::to_string(size) + " comma-separated rationals, found " + std::to_string(v.size()) +
                     " in \"" + text + "\"");
  return v;
}

// "v1;v2;v3"
inline std::vector<RatVector> parse_vectors_arg(const std::string& text, std::size_t size) {
  std::vector<RatVector> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) out.push_back(parse_vector_arg(item, size));
  return out;
}

}  // namespace gmlag::io

#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "revaff/affine.hpp"
#include "revaff/oracle.hpp"

namespace revaff::io {

using json = nlohmann::json;

using MatrixVar = std::variant<Matrix<Rational>, Matrix<GaussianRational>, Matrix<Quaternion>>;
using AffineVar = std::variant<AffineMap<Rational>, AffineMap<GaussianRational>, AffineMap<Quaternion>>;

Ring parse_ring(const std::string& name);

// Textual scalar grammar: a signed sum of terms, each a rational literal
// ("p/q" or "p") optionally followed by a unit i, j or k (whitespace allowed
// before the unit, bare units mean coefficient 1). Returns the (1, i, j, k)
// components.
std::array<Rational, 4> parse_scalar_components(const std::string& text);

Scalar parse_scalar(const std::string& text, Ring ring);

std::string emit_rational(const Rational& r);
std::string emit_gaussian(const GaussianRational& z);
std::string emit_quaternion(const Quaternion& q);
std::string emit_scalar(const Scalar& s);

template <typename T> std::string emit(const T& x);
template <> inline std::string emit<Rational>(const Rational& x) { return emit_rational(x); }
template <> inline std::string emit<GaussianRational>(const GaussianRational& x) { return emit_gaussian(x); }
template <> inline std::string emit<Quaternion>(const Quaternion& x) { return emit_quaternion(x); }

template <typename T> T scalar_narrow(const std::array<Rational, 4>& c);

// ---- JSON decoding (ring chosen at runtime) ----

MatrixVar matrix_from_json(const json& j, std::optional<Ring> ring_override = {});
AffineVar affine_from_json(const json& j, std::optional<Ring> ring_override = {});
Spectrum spectrum_from_json(const json& j);

inline Ring ring_of_var(const MatrixVar& m) {
  return std::visit([](const auto& mm) { return ring_of_v<typename std::decay_t<decltype(mm)>::value_type>; }, m);
}

// ---- JSON encoding ----

template <typename T>
json matrix_json(const Matrix<T>& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(emit<T>(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"ring", ring_name(ring_of_v<T>)}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <typename T>
json vector_json(const Vector<T>& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(emit<T>(x));
  return a;
}

template <typename T>
json affine_json(const AffineMap<T>& g) {
  return json{{"linear", matrix_json(g.A)}, {"translation", vector_json(g.v)}};
}

json block_json(const JordanBlockSpec& b);
json pairing_json(const PairingCertificate& cert);

template <typename T>
json jordan_json(const JordanForm<T>& f) {
  json blocks = json::array();
  for (const auto& b : f.blocks) blocks.push_back(block_json(b));
  return json{{"blocks", std::move(blocks)}, {"S", matrix_json(f.S)}, {"J", matrix_json(f.J)}};
}

template <typename T>
json witness_json(const ReverserWitness<T>& w) {
  return json{{"matrix", matrix_json(w.element)}, {"involution", w.is_involution}, {"verified", w.verified}};
}

template <typename T>
json witness_json(const AffineWitness<T>& w) {
  return json{{"affine", affine_json(w.element)}, {"involution", w.is_involution}, {"verified", w.verified}};
}

template <typename T>
json report_json(const ReversibilityReport<T>& rep) {
  const char* primary = rep.mode == ReportMode::Group ? "reversible" : "ad_real";
  const char* strong = rep.mode == ReportMode::Group ? "strongly_reversible" : "strongly_ad_real";
  json j{{primary, flag_name(rep.primary)}, {strong, flag_name(rep.strong)}, {"pairing", pairing_json(rep.pairing)}};
  if (rep.witness) j["witness"] = witness_json(*rep.witness);
  return j;
}

template <typename T>
json report_json(const AffineReport<T>& rep) {
  json j{{"reversible", flag_name(rep.reversible)},
         {"strongly_reversible", flag_name(rep.strongly_reversible)},
         {"pairing", pairing_json(rep.pairing)}};
  if (rep.witness) j["witness"] = witness_json(*rep.witness);
  return j;
}

json error_json(const Error& e);

} // namespace revaff::io

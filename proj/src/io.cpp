#include "revaff/io.hpp"

#include <cctype>

namespace revaff::io {

Ring parse_ring(const std::string& name) {
  if (name == "R") return Ring::R;
  if (name == "C") return Ring::C;
  if (name == "H") return Ring::H;
  throw_input("SchemaError", "unknown ring '" + name + "' (expected R, C or H)");
}

std::array<Rational, 4> parse_scalar_components(const std::string& text) {
  std::array<Rational, 4> comp{Rational(0), Rational(0), Rational(0), Rational(0)};
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_digits = [&]() -> mpz_class {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw_input("ParseError", "expected digits in scalar literal '" + text + "'");
    return mpz_class(text.substr(start, pos - start));
  };

  skip_ws();
  bool any = false;
  while (pos < text.size()) {
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (any) {
      throw_input("ParseError", "expected '+' or '-' between terms in '" + text + "'");
    }
    bool have_number = pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
    Rational value(1);
    if (have_number) {
      mpz_class num = read_digits();
      mpz_class den(1);
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        den = read_digits();
        if (den == 0) throw_input("ParseError", "zero denominator in '" + text + "'");
      }
      value = Rational(num, den);
      skip_ws();
    }
    int unit = 0;
    if (pos < text.size() && (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
      unit = text[pos] == 'i' ? 1 : text[pos] == 'j' ? 2 : 3;
      ++pos;
    } else if (!have_number) {
      if (pos >= text.size()) throw_input("ParseError", "dangling sign in scalar literal '" + text + "'");
      throw_input("ParseError", "unexpected character '" + std::string(1, text[pos]) + "' in scalar literal '" + text + "'");
    }
    comp[unit] += sign < 0 ? -value : value;
    any = true;
    skip_ws();
  }
  if (!any) throw_input("ParseError", "empty scalar literal");
  return comp;
}

template <>
Rational scalar_narrow<Rational>(const std::array<Rational, 4>& c) {
  if (!c[1].is_zero() || !c[2].is_zero() || !c[3].is_zero())
    throw_input("RingMismatch", "literal has imaginary components but the ring is R");
  return c[0];
}

template <>
GaussianRational scalar_narrow<GaussianRational>(const std::array<Rational, 4>& c) {
  if (!c[2].is_zero() || !c[3].is_zero())
    throw_input("RingMismatch", "literal has j/k components but the ring is C");
  return {c[0], c[1]};
}

template <>
Quaternion scalar_narrow<Quaternion>(const std::array<Rational, 4>& c) {
  return {{c[0], c[1]}, {c[2], c[3]}};
}

Scalar parse_scalar(const std::string& text, Ring ring) {
  auto c = parse_scalar_components(text);
  switch (ring) {
    case Ring::R: return scalar_narrow<Rational>(c);
    case Ring::C: return scalar_narrow<GaussianRational>(c);
    default: return scalar_narrow<Quaternion>(c);
  }
}

std::string emit_rational(const Rational& r) { return r.str(); }

std::string emit_gaussian(const GaussianRational& z) {
  if (z.im.is_zero()) return emit_rational(z.re);
  std::string s;
  if (!z.re.is_zero()) s = emit_rational(z.re) + (z.im.sign() > 0 ? "+" : "-");
  else if (z.im.sign() < 0) s = "-";
  return s + emit_rational(z.im.abs()) + " i";
}

std::string emit_quaternion(const Quaternion& q) {
  const std::array<Rational, 4> comp{q.a.re, q.a.im, q.b.re, q.b.im};
  const char* units[4] = {"", "i", "j", "k"};
  std::string s;
  for (int t = 0; t < 4; ++t) {
    if (comp[t].is_zero()) continue;
    if (s.empty()) {
      s += (comp[t].sign() < 0 ? "-" : "");
    } else {
      s += comp[t].sign() < 0 ? "-" : "+";
    }
    s += emit_rational(comp[t].abs()) + units[t];
  }
  return s.empty() ? "0" : s;
}

std::string emit_scalar(const Scalar& s) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        return emit<T>(v);
      },
      s);
}

namespace {

std::string entry_text(const json& e) {
  if (e.is_string()) return e.get<std::string>();
  if (e.is_number_integer()) return std::to_string(e.get<long long>());
  throw_input("SchemaError", "matrix entries must be scalar literals (strings) or integers");
}

template <typename T>
Matrix<T> typed_matrix(const json& j, int rows, int cols) {
  Matrix<T> m(rows, cols);
  const json& entries = j.at("entries");
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c)
      m(r, c) = scalar_narrow<T>(parse_scalar_components(entry_text(entries[r][c])));
  return m;
}

Ring effective_ring(const json& j, std::optional<Ring> ring_override) {
  Ring declared = parse_ring(j.at("ring").get<std::string>());
  return ring_override.value_or(declared);
}

} // namespace

MatrixVar matrix_from_json(const json& j, std::optional<Ring> ring_override) {
  if (!j.is_object() || !j.contains("ring") || !j.contains("rows") || !j.contains("cols") || !j.contains("entries"))
    throw_input("SchemaError", "matrix object needs ring, rows, cols, entries");
  int rows = j.at("rows").get<int>(), cols = j.at("cols").get<int>();
  if (rows <= 0 || cols <= 0) throw_input("SchemaError", "matrix dimensions must be positive");
  const json& entries = j.at("entries");
  if (!entries.is_array() || static_cast<int>(entries.size()) != rows)
    throw_input("SchemaError", "entries must be an array of 'rows' rows");
  for (const auto& row : entries)
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw_input("SchemaError", "each entries row must have 'cols' elements");
  switch (effective_ring(j, ring_override)) {
    case Ring::R: return typed_matrix<Rational>(j, rows, cols);
    case Ring::C: return typed_matrix<GaussianRational>(j, rows, cols);
    default: return typed_matrix<Quaternion>(j, rows, cols);
  }
}

AffineVar affine_from_json(const json& j, std::optional<Ring> ring_override) {
  if (!j.is_object() || !j.contains("linear") || !j.contains("translation"))
    throw_input("SchemaError", "affine object needs linear and translation");
  MatrixVar lin = matrix_from_json(j.at("linear"), ring_override);
  const json& tr = j.at("translation");
  if (!tr.is_array()) throw_input("SchemaError", "translation must be an array of scalar literals");
  return std::visit(
      [&](auto&& a) -> AffineVar {
        using T = typename std::decay_t<decltype(a)>::value_type;
        if (!a.is_square() || static_cast<int>(tr.size()) != a.rows())
          throw_input("SchemaError", "translation length must equal the linear part's dimension");
        Vector<T> v;
        v.reserve(tr.size());
        for (const auto& e : tr) v.push_back(scalar_narrow<T>(parse_scalar_components(entry_text(e))));
        return AffineMap<T>{std::move(a), std::move(v)};
      },
      std::move(lin));
}

Spectrum spectrum_from_json(const json& j) {
  const json* arr = &j;
  if (j.is_object() && j.contains("spectrum")) arr = &j.at("spectrum");
  if (!arr->is_array()) throw_input("SchemaError", "spectrum must be an array of {value, multiplicity}");
  Spectrum s;
  for (const auto& e : *arr) {
    if (!e.is_object() || !e.contains("value") || !e.contains("multiplicity"))
      throw_input("SchemaError", "spectrum entries need value and multiplicity");
    auto c = parse_scalar_components(entry_text(e.at("value")));
    s.entries.push_back({scalar_narrow<GaussianRational>(c), e.at("multiplicity").get<int>()});
  }
  return s;
}

json block_json(const JordanBlockSpec& b) {
  if (b.kind == JordanBlockSpec::Kind::Standard)
    return json{{"kind", "standard"}, {"lambda", emit_gaussian(b.lambda)}, {"size", b.size}};
  return json{{"kind", "realpair"}, {"mu", emit_rational(b.mu)}, {"nu", emit_rational(b.nu)}, {"half_size", b.size}};
}

json pairing_json(const PairingCertificate& cert) {
  json a = json::array();
  for (const auto& e : cert.entries) {
    if (e.is_pair)
      a.push_back(json{{"kind", "pair"}, {"blocks", json::array({e.first, e.second})}, {"rule", e.rule}});
    else
      a.push_back(json{{"kind", "singleton"}, {"block", e.first}, {"rule", e.rule}});
  }
  return a;
}

json error_json(const Error& e) {
  return json{{"error", json{{"kind", e.kind()}, {"detail", e.what()}}}};
}

} // namespace revaff::io

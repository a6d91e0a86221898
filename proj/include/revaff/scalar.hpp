#pragma once

#include <string>
#include <variant>

#include "revaff/rational.hpp"

namespace revaff {

// The three ground rings: Q, Q(i), and quaternions with Q(i) components.
enum class Ring { R, C, H };

inline const char* ring_name(Ring r) {
  switch (r) {
    case Ring::R: return "R";
    case Ring::C: return "C";
    default: return "H";
  }
}

// Gaussian rational re + im*i.
struct GaussianRational {
  Rational re, im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}
  GaussianRational(int r) : re(r) {}
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  GaussianRational conj() const { return {re, -im}; }
  Rational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }
  friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) { return {a.re + b.re, a.im + b.im}; }
  friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) { return {a.re - b.re, a.im - b.im}; }
  friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  GaussianRational& operator+=(const GaussianRational& o) { *this = *this + o; return *this; }
  GaussianRational& operator-=(const GaussianRational& o) { *this = *this - o; return *this; }
  GaussianRational& operator*=(const GaussianRational& o) { *this = *this * o; return *this; }

  GaussianRational inverse() const {
    if (is_zero()) throw_domain("DivisionByZero", "inverse of zero");
    Rational n = norm().inverse();
    return {re * n, -im * n};
  }

  friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }
};

inline GaussianRational gaussian_i() { return {Rational(0), Rational(1)}; }

// Lexicographic (re, im) order; used only for canonical block sorting.
inline bool lex_less(const GaussianRational& a, const GaussianRational& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

// Quaternion a + b*j with a, b in Q(i), i.e. a.re + a.im*i + b.re*j + b.im*k.
// Multiplication uses j*z = conj(z)*j for complex z.
struct Quaternion {
  GaussianRational a, b;

  Quaternion() = default;
  Quaternion(int r) : a(r) {}
  Quaternion(Rational r) : a(std::move(r)) {}
  Quaternion(GaussianRational z) : a(std::move(z)) {}
  Quaternion(GaussianRational a_, GaussianRational b_) : a(std::move(a_)), b(std::move(b_)) {}

  bool is_zero() const { return a.is_zero() && b.is_zero(); }
  bool is_complex() const { return b.is_zero(); }
  bool is_real() const { return b.is_zero() && a.is_real(); }

  Quaternion conj() const { return {a.conj(), -b}; }
  Rational norm() const { return a.norm() + b.norm(); }

  Quaternion operator-() const { return {-a, -b}; }
  friend Quaternion operator+(const Quaternion& p, const Quaternion& q) { return {p.a + q.a, p.b + q.b}; }
  friend Quaternion operator-(const Quaternion& p, const Quaternion& q) { return {p.a - q.a, p.b - q.b}; }
  friend Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    // (a1 + b1 j)(a2 + b2 j) = (a1 a2 - b1 conj(b2)) + (a1 b2 + b1 conj(a2)) j
    return {p.a * q.a - p.b * q.b.conj(), p.a * q.b + p.b * q.a.conj()};
  }
  Quaternion& operator+=(const Quaternion& o) { *this = *this + o; return *this; }
  Quaternion& operator-=(const Quaternion& o) { *this = *this - o; return *this; }
  Quaternion& operator*=(const Quaternion& o) { *this = *this * o; return *this; }

  Quaternion inverse() const {
    if (is_zero()) throw_domain("DivisionByZero", "inverse of zero");
    Rational n = norm().inverse();
    Quaternion c = conj();
    return {{c.a.re * n, c.a.im * n}, {c.b.re * n, c.b.im * n}};
  }

  friend bool operator==(const Quaternion& p, const Quaternion& q) { return p.a == q.a && p.b == q.b; }
  friend bool operator!=(const Quaternion& p, const Quaternion& q) { return !(p == q); }
};

inline Quaternion quat_i() { return {gaussian_i(), GaussianRational()}; }
inline Quaternion quat_j() { return {GaussianRational(), GaussianRational(1)}; }
inline Quaternion quat_k() { return {GaussianRational(), gaussian_i()}; }

// ---- scalar trait surface used by the generic matrix code ----

template <typename T> struct scalar_traits;

template <> struct scalar_traits<Rational> {
  static constexpr Ring ring = Ring::R;
  static constexpr bool commutative = true;
  static Rational conj(const Rational& x) { return x; }
  static Rational norm(const Rational& x) { return x * x; }
};

template <> struct scalar_traits<GaussianRational> {
  static constexpr Ring ring = Ring::C;
  static constexpr bool commutative = true;
  static GaussianRational conj(const GaussianRational& x) { return x.conj(); }
  static Rational norm(const GaussianRational& x) { return x.norm(); }
};

template <> struct scalar_traits<Quaternion> {
  static constexpr Ring ring = Ring::H;
  static constexpr bool commutative = false;
  static Quaternion conj(const Quaternion& x) { return x.conj(); }
  static Rational norm(const Quaternion& x) { return x.norm(); }
};

template <typename T> constexpr Ring ring_of_v = scalar_traits<T>::ring;

template <typename T> inline bool is_zero(const T& x) { return x.is_zero(); }

template <typename T> inline T conj(const T& x) { return scalar_traits<T>::conj(x); }
template <typename T> inline Rational norm_rat(const T& x) { return scalar_traits<T>::norm(x); }
template <typename T> inline T inverse(const T& x) { return x.inverse(); }

template <typename T> inline T power(T base, long e) {
  if (e < 0) return power(inverse(base), -e);
  T acc(1);
  for (; e > 0; e >>= 1) {
    if (e & 1) acc = acc * base;
    base = base * base;
  }
  return acc;
}

// Explicit promotions along Q -> Q(i) -> H.
inline GaussianRational promote_c(const Rational& r) { return GaussianRational(r); }
inline Quaternion promote_h(const GaussianRational& z) { return Quaternion(z); }

template <typename T> T from_gaussian(const GaussianRational& z);
template <> inline Rational from_gaussian<Rational>(const GaussianRational& z) {
  require_internal(z.is_real(), "non-real scalar used in ring R");
  return z.re;
}
template <> inline GaussianRational from_gaussian<GaussianRational>(const GaussianRational& z) { return z; }
template <> inline Quaternion from_gaussian<Quaternion>(const GaussianRational& z) { return Quaternion(z); }

template <typename T> T from_rational(const Rational& r) { return from_gaussian<T>(GaussianRational(r)); }

// Canonical representative of a quaternionic eigenvalue similarity class:
// the unique complex number in the class with non-negative imaginary part.
inline GaussianRational canonical_class(const GaussianRational& z) {
  return z.im.sign() < 0 ? z.conj() : z;
}

// ---- runtime-tagged scalar (external interface layer) ----

// Tagged union over the three ground rings. The templated core never mixes
// rings; this variant exists for the textual grammar, JSON, and the CLI.
using Scalar = std::variant<Rational, GaussianRational, Quaternion>;

inline Ring ring_of(const Scalar& s) {
  return std::visit([](const auto& v) { return ring_of_v<std::decay_t<decltype(v)>>; }, s);
}

enum class ArithOp { Add, Sub, Mul };

inline Scalar scalar_arith(const Scalar& x, const Scalar& y, ArithOp op) {
  if (ring_of(x) != ring_of(y))
    throw_input("RingMismatch", std::string("cannot combine ring ") + ring_name(ring_of(x)) + " with ring " + ring_name(ring_of(y)));
  return std::visit(
      [&](const auto& a) -> Scalar {
        using T = std::decay_t<decltype(a)>;
        const T& b = std::get<T>(y);
        switch (op) {
          case ArithOp::Add: return a + b;
          case ArithOp::Sub: return a - b;
          default: return a * b;
        }
      },
      x);
}

inline Scalar scalar_inverse(const Scalar& x) {
  return std::visit([](const auto& v) -> Scalar { return v.inverse(); }, x);
}

inline Scalar scalar_conj(const Scalar& x) {
  return std::visit([](const auto& v) -> Scalar { return revaff::conj(v); }, x);
}

inline Rational scalar_norm(const Scalar& x) {
  return std::visit([](const auto& v) { return norm_rat(v); }, x);
}

} // namespace revaff

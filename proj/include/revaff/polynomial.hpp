#pragma once

#include <vector>

#include "revaff/scalar.hpp"

namespace revaff {

// Dense univariate polynomial over Q or Q(i). Coefficients ascending; the
// zero polynomial is the empty coefficient list.
template <typename T>
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly x_power(int k, const T& lead = T(1)) {
    std::vector<T> c(k + 1, T(0));
    c[k] = lead;
    return Poly(std::move(c));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const T& coeff(int k) const {
    static const T zero(0);
    return k >= 0 && k <= degree() ? c_[k] : zero;
  }
  const std::vector<T>& coeffs() const { return c_; }
  const T& lead() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == T(1); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<T> c(std::max(a.c_.size(), b.c_.size()), T(0));
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Poly(std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> c(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(c));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly scaled(const T& s) const {
    std::vector<T> c = c_;
    for (auto& x : c) x = s * x;
    return Poly(std::move(c));
  }

  Poly monic() const {
    require_internal(!is_zero(), "monic of zero polynomial");
    return scaled(inverse(lead()));
  }

  Poly derivative() const {
    if (degree() < 1) return Poly();
    std::vector<T> c(c_.size() - 1, T(0));
    for (int k = 1; k <= degree(); ++k) c[k - 1] = from_rational<T>(Rational(k)) * c_[k];
    return Poly(std::move(c));
  }

  T eval(const T& x) const {
    T acc(0);
    for (int k = degree(); k >= 0; --k) acc = acc * x + c_[k];
    return acc;
  }

  // Quotient and remainder; the divisor's leading coefficient is inverted, so
  // the ground ring must be a field (it is: Q or Q(i)).
  std::pair<Poly, Poly> divmod(const Poly& d) const {
    require_internal(!d.is_zero(), "division by zero polynomial");
    std::vector<T> rem = c_;
    if (degree() < d.degree()) return {Poly(), *this};
    std::vector<T> quot(degree() - d.degree() + 1, T(0));
    T lead_inv = inverse(d.lead());
    for (int k = degree(); k >= d.degree(); --k) {
      T f = rem[k] * lead_inv;
      if (revaff::is_zero(f)) continue;
      quot[k - d.degree()] = f;
      for (int j = 0; j <= d.degree(); ++j) rem[k - d.degree() + j] -= f * d.c_[j];
    }
    return {Poly(std::move(quot)), Poly(std::move(rem))};
  }

  // Remainder-free division by (x - root); fails (returns false) when root is
  // not actually a root.
  bool deflate(const T& root, Poly& out) const {
    if (is_zero()) return false;
    std::vector<T> q(c_.size() - 1, T(0));
    T carry(0);
    for (int k = degree(); k >= 1; --k) {
      carry = c_[k] + carry * root;
      q[k - 1] = carry;
    }
    if (!revaff::is_zero(c_[0] + carry * root)) return false;
    out = Poly(std::move(q));
    return true;
  }

private:
  void trim() {
    while (!c_.empty() && revaff::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<T> c_;
};

template <typename T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

// p with all repeated roots collapsed to multiplicity one.
template <typename T>
Poly<T> squarefree_part(const Poly<T>& p) {
  if (p.degree() < 1) return p;
  Poly<T> g = gcd(p, p.derivative());
  if (g.degree() < 1) return p.monic();
  return p.divmod(g).first.monic();
}

// Promote a rational polynomial into Q(i)[x].
inline Poly<GaussianRational> promote_c(const Poly<Rational>& p) {
  std::vector<GaussianRational> c;
  c.reserve(p.coeffs().size());
  for (const auto& x : p.coeffs()) c.emplace_back(x);
  return Poly<GaussianRational>(std::move(c));
}

} // namespace revaff

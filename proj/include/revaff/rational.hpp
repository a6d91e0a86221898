#pragma once

#include <gmpxx.h>

#include <string>

#include "revaff/error.hpp"

namespace revaff {

// Exact rational number. Thin value wrapper around mpq_class that keeps the
// representation canonical (positive denominator, reduced fraction) after
// every operation, so equality is structural.
class Rational {
public:
  Rational() : q_(0) {}
  Rational(int n) : q_(n) {}
  Rational(long n) : q_(n) {}
  Rational(long n, long d) : q_(n, d) { normalize(); }
  explicit Rational(const mpz_class& n) : q_(n) {}
  Rational(const mpz_class& n, const mpz_class& d) : q_(n, d) { normalize(); }
  explicit Rational(mpq_class q) : q_(std::move(q)) { normalize(); }

  const mpq_class& raw() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ + b.q_)); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ - b.q_)); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.q_ * b.q_)); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw_domain("DivisionByZero", "rational division by zero");
    return Rational(mpq_class(a.q_ / b.q_));
  }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_.get_mpq_t(), b.q_.get_mpq_t()) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

  Rational inverse() const {
    if (is_zero()) throw_domain("DivisionByZero", "inverse of zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return Rational(std::move(r));
  }

  Rational abs() const { return sign() < 0 ? -*this : *this; }

  Rational pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    Rational base = *this, acc = Rational(1);
    for (; e > 0; e >>= 1) {
      if (e & 1) acc *= base;
      base *= base;
    }
    return acc;
  }

  // True when *this is r*r for some rational r; if so, stores the
  // non-negative root in `root`.
  bool sqrt_exact(Rational& root) const {
    if (sign() < 0) return false;
    mpz_class num = numerator(), den = denominator(), rn, rd;
    if (mpz_perfect_square_p(num.get_mpz_t()) == 0) return false;
    if (mpz_perfect_square_p(den.get_mpz_t()) == 0) return false;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    root = Rational(rn, rd);
    return true;
  }

  std::string str() const { return q_.get_str(); }

private:
  void normalize() {
    if (q_.get_den() == 0) throw_input("ParseError", "zero denominator");
    q_.canonicalize();
  }

  mpq_class q_;
};

inline Rational factorial_inv(unsigned k) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), k);
  return Rational(mpz_class(1), f);
}

inline Rational binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return Rational(b);
}

} // namespace revaff

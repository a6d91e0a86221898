#pragma once

#include "revaff/embed.hpp"
#include "revaff/matrix.hpp"

namespace revaff {

// Jordan block J(lambda, n): lambda on the diagonal, 1 on the superdiagonal.
template <typename T>
Matrix<T> jordan_block(const T& lambda, int n) {
  Matrix<T> j(n, n);
  for (int i = 0; i < n; ++i) {
    j(i, i) = lambda;
    if (i + 1 < n) j(i, i + 1) = T(1);
  }
  return j;
}

// Real Jordan block for the non-real pair mu +- i*nu: the realification of
// J(mu + i*nu, n), a 2n x 2n rational matrix.
inline Matrix<Rational> real_jordan_block(const Rational& mu, const Rational& nu, int n) {
  return psi_embed(jordan_block(GaussianRational(mu, nu), n));
}

// diag(1, -1, 1, ..., (-1)^(n-1)).
template <typename T>
Matrix<T> alternating_diag(int n) {
  Matrix<T> d(n, n);
  for (int i = 0; i < n; ++i) d(i, i) = (i % 2 == 0) ? T(1) : T(-1);
  return d;
}

// The upper-triangular reverser matrix Omega(lambda, n): zero below the
// diagonal and in the last column except the (n,n) entry -1, and satisfying
// the backward recurrence
//   x[i][j] = -lambda^-1 x[i+1][j] - lambda^-2 x[i+1][j+1].
// Closed form (1-based): x[i][i] = (-1)^(n-i+1) lambda^(-2(n-i)) and
// x[i][j] = (-1)^(n-i+1) C(n-i-1, j-i) lambda^(i+j-2n) for i < j < n.
// Key identities: Omega(l,n) J(l^-1,n) = J(l,n)^-1 Omega(l,n) and
// Omega(l,n)^-1 = Omega(l^-1,n); an involution for lambda = +-1.
template <typename T>
Matrix<T> omega(const T& lambda, int n) {
  if (is_zero(lambda)) throw_domain("DivisionByZero", "omega requires lambda != 0");
  Matrix<T> x(n, n);
  for (int r = 0; r < n; ++r) {
    int i = r + 1;
    T sign = ((n - i + 1) % 2 == 0) ? T(1) : T(-1);
    x(r, r) = sign * power(lambda, -2L * (n - i));
    for (int c = r + 1; c < n - 1; ++c) {
      int j = c + 1;
      x(r, c) = sign * from_rational<T>(binomial(n - i - 1, j - i)) * power(lambda, static_cast<long>(i + j - 2 * n));
    }
  }
  return x;
}

// Block analogue over R for K = psi(mu + i*nu): 2n x 2n, block upper
// triangular with X[n][n] = I2 and the same recurrence in K. Coincides with
// psi(-Omega(mu + i*nu, n)).
inline Matrix<Rational> omega_real(const Rational& mu, const Rational& nu, int n) {
  if (nu.sign() <= 0) throw_domain("DivisionByZero", "omega_real requires nu > 0");
  GaussianRational lambda(mu, nu);
  Matrix<GaussianRational> neg = omega(lambda, n);
  return psi_embed(-neg);
}

} // namespace revaff

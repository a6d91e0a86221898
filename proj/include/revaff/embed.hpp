#pragma once

#include <utility>

#include "revaff/matrix.hpp"

namespace revaff {

// Complex adjoint embedding M(n,H) -> M(2n,C): write A = A1 + A2*j and map to
// [[A1, A2], [-conj(A2), conj(A1)]]. Multiplicative and unit-preserving.
inline Matrix<GaussianRational> phi_embed(const Matrix<Quaternion>& a) {
  int n = a.rows(), m = a.cols();
  Matrix<GaussianRational> r(2 * n, 2 * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      const Quaternion& q = a(i, j);
      r(i, j) = q.a;
      r(i, j + m) = q.b;
      r(i + n, j) = -q.b.conj();
      r(i + n, j + m) = q.a.conj();
    }
  return r;
}

// Realification M(n,C) -> M(2n,R): each entry z becomes the 2x2 block
// [[Re z, Im z], [-Im z, Re z]]. Multiplicative; commutes with exp on
// nilpotent inputs.
inline Matrix<Rational> psi_embed(const Matrix<GaussianRational>& a) {
  int n = a.rows(), m = a.cols();
  Matrix<Rational> r(2 * n, 2 * m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < m; ++j) {
      const GaussianRational& z = a(i, j);
      r(2 * i, 2 * j) = z.re;
      r(2 * i, 2 * j + 1) = z.im;
      r(2 * i + 1, 2 * j) = -z.im;
      r(2 * i + 1, 2 * j + 1) = z.re;
    }
  return r;
}

inline Matrix<Rational> psi_scalar(const GaussianRational& z) {
  Matrix<GaussianRational> m(1, 1);
  m(0, 0) = z;
  return psi_embed(m);
}

// Column identification H^n <-> C^2n compatible with phi: a quaternionic
// vector v = v1 + v2*j corresponds to the complex vector (v1; -conj(v2)), so
// that phi(A) * chi(v) = chi(A v) and chi(v * z) = z * chi(v) for complex z.
inline Vector<GaussianRational> chi_push(const Vector<Quaternion>& v) {
  size_t n = v.size();
  Vector<GaussianRational> u(2 * n, GaussianRational());
  for (size_t i = 0; i < n; ++i) {
    u[i] = v[i].a;
    u[i + n] = -v[i].b.conj();
  }
  return u;
}

inline Vector<Quaternion> chi_pull(const Vector<GaussianRational>& u) {
  require_internal(u.size() % 2 == 0, "chi_pull wants an even-length vector");
  size_t n = u.size() / 2;
  Vector<Quaternion> v(n, Quaternion());
  for (size_t i = 0; i < n; ++i) v[i] = Quaternion(u[i], -u[i + n].conj());
  return v;
}

// Determinant and trace of a quaternionic matrix, defined through phi. The
// determinant of phi(A) is structurally real and non-negative; that is
// checked, not assumed.
inline std::pair<GaussianRational, GaussianRational> det_trace_h(const Matrix<Quaternion>& a) {
  if (!a.is_square()) throw_input("ShapeMismatch", "det/trace of non-square matrix");
  Matrix<GaussianRational> p = phi_embed(a);
  GaussianRational det = determinant(p);
  GaussianRational tr = trace(p);
  require_internal(det.is_real() && det.re.sign() >= 0, "phi determinant left the real non-negative cone");
  return {det, tr};
}

// Exact exponential of a verified nilpotent matrix: finite sum of N^k / k!.
template <typename T>
Matrix<T> nilpotent_exp(const Matrix<T>& n) {
  if (!n.is_square()) throw_input("ShapeMismatch", "exp of non-square matrix");
  int dim = n.rows();
  if (dim == 0) return n;
  Matrix<T> power_k = Matrix<T>::identity(dim);
  Matrix<T> sum = power_k;
  int k = 1;
  for (; k <= dim; ++k) {
    power_k = power_k * n;
    if (power_k == Matrix<T>::zero(dim, dim)) break;
    sum = sum + scale_left(from_rational<T>(factorial_inv(static_cast<unsigned>(k))), power_k);
  }
  if (k > dim) throw_domain("NonNilpotentInput", "matrix is not nilpotent");
  return sum;
}

template <typename T>
bool is_nilpotent(const Matrix<T>& n) {
  if (!n.is_square()) return false;
  return mat_pow(n, n.rows()) == Matrix<T>::zero(n.rows(), n.cols());
}

// Promotions between matrices over the tower Q -> Q(i) -> H.
inline Matrix<GaussianRational> promote_c(const Matrix<Rational>& a) {
  Matrix<GaussianRational> r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = GaussianRational(a(i, j));
  return r;
}

inline Matrix<Quaternion> promote_h(const Matrix<GaussianRational>& a) {
  Matrix<Quaternion> r(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) r(i, j) = Quaternion(a(i, j));
  return r;
}

} // namespace revaff

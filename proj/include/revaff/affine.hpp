#pragma once

#include <array>

#include "revaff/reversibility.hpp"

namespace revaff {

// Affine transformation x -> A x + v with invertible linear part.
template <typename T>
struct AffineMap {
  using value_type = T;

  Matrix<T> A;
  Vector<T> v;

  AffineMap() = default;
  AffineMap(Matrix<T> a, Vector<T> t) : A(std::move(a)), v(std::move(t)) {
    require_internal(A.is_square() && A.rows() == static_cast<int>(v.size()), "affine map shape mismatch");
  }

  static AffineMap identity(int n) { return {Matrix<T>::identity(n), Vector<T>(n, T(0))}; }

  int dim() const { return A.rows(); }
  Vector<T> operator()(const Vector<T>& x) const { return A * x + v; }

  friend bool operator==(const AffineMap& g, const AffineMap& h) { return g.A == h.A && g.v == h.v; }
  friend bool operator!=(const AffineMap& g, const AffineMap& h) { return !(g == h); }
};

// Element (X, x) of the affine Lie algebra gl(n,D) + D^n with bracket
// [(A,0),(0,v)] = (0, Av).
template <typename T>
struct AffLieElement {
  Matrix<T> X;
  Vector<T> x;
};

template <typename T>
AffineMap<T> compose(const AffineMap<T>& g, const AffineMap<T>& h) {
  if (g.dim() != h.dim()) throw_input("ShapeMismatch", "composition of affine maps of different dimension");
  return {g.A * h.A, g.A * h.v + g.v};
}

// g^-1(x) = A^-1 x - A^-1 v.
template <typename T>
AffineMap<T> inverse(const AffineMap<T>& g) {
  Matrix<T> ai = inverse(g.A);
  return {ai, negate(ai * g.v)};
}

template <typename T>
AffineMap<T> conjugate(const AffineMap<T>& c, const AffineMap<T>& g) {
  return compose(compose(c, g), inverse(c));
}

template <typename T>
AffineMap<T> aff_direct_sum(const AffineMap<T>& g, const AffineMap<T>& h) {
  Matrix<T> a = direct_sum<T>({g.A, h.A});
  Vector<T> v = g.v;
  v.insert(v.end(), h.v.begin(), h.v.end());
  return {std::move(a), std::move(v)};
}

template <typename T>
bool is_affine_involution(const AffineMap<T>& g) {
  return compose(g, g) == AffineMap<T>::identity(g.dim());
}

// Embedding into GL(n+1): (A, v) -> [[A, v], [0, 1]].
template <typename T>
Matrix<T> theta_embed(const AffineMap<T>& g) {
  int n = g.dim();
  Matrix<T> m(n + 1, n + 1);
  place(m, 0, 0, g.A);
  for (int i = 0; i < n; ++i) m(i, n) = g.v[i];
  m(n, n) = T(1);
  return m;
}

// Lie algebra embedding: (X, w) -> [[X, w], [0, 0]].
template <typename T>
Matrix<T> rho_embed(const AffLieElement<T>& e) {
  int n = e.X.rows();
  Matrix<T> m(n + 1, n + 1);
  place(m, 0, 0, e.X);
  for (int i = 0; i < n; ++i) m(i, n) = e.x[i];
  return m;
}

// exp through the rho model; X must be nilpotent.
template <typename T>
AffineMap<T> aff_exp(const AffLieElement<T>& e) {
  if (!is_nilpotent(e.X)) throw_domain("NonNilpotentInput", "affine exponential needs a nilpotent linear part");
  Matrix<T> m = nilpotent_exp(rho_embed(e));
  int n = e.X.rows();
  AffineMap<T> g{block(m, 0, 0, n, n), column_of(block(m, 0, n, n, 1), 0)};
  return g;
}

// Conjugacy normal form: h g h^-1 = (T + U, 0 + v~) where T has no eigenvalue
// 1, U is unipotent, and the translation is supported on the unipotent
// coordinates. When 1 is not an eigenvalue at all the translation vanishes.
template <typename T>
struct AffineNormalForm {
  AffineMap<T> conjugator;
  AffineMap<T> result;
  int t_dim = 0;                                 // dimension of the eigenvalue-1-free part
  std::vector<JordanBlockSpec> t_blocks, u_blocks; // u_blocks: the J(1,m) blocks in result order
};

namespace detail {

inline bool is_unity_block(const JordanBlockSpec& b) {
  return b.kind == JordanBlockSpec::Kind::Standard && b.lambda == GaussianRational(1);
}

} // namespace detail

template <typename T>
AffineNormalForm<T> normal_form(const AffineMap<T>& g) {
  int n = g.dim();
  JordanForm<T> form = jordan_form(g.A);

  AffineNormalForm<T> nf;
  std::vector<int> order;
  for (int i = 0; i < static_cast<int>(form.blocks.size()); ++i)
    if (!detail::is_unity_block(form.blocks[i])) {
      order.push_back(i);
      nf.t_blocks.push_back(form.blocks[i]);
    }
  for (int i = 0; i < static_cast<int>(form.blocks.size()); ++i)
    if (detail::is_unity_block(form.blocks[i])) {
      order.push_back(i);
      nf.u_blocks.push_back(form.blocks[i]);
    }

  std::vector<int> offset(form.blocks.size(), 0);
  for (size_t i = 1; i < form.blocks.size(); ++i) offset[i] = offset[i - 1] + form.blocks[i - 1].dim();
  Matrix<T> pi(n, n);
  int at = 0;
  for (int idx : order) {
    for (int k = 0; k < form.blocks[idx].dim(); ++k) pi(at + k, offset[idx] + k) = T(1);
    at += form.blocks[idx].dim();
  }

  nf.t_dim = 0;
  for (const auto& b : nf.t_blocks) nf.t_dim += b.dim();

  Matrix<T> b_lin = pi * form.S; // B A B^-1 = T + U
  Vector<T> w = b_lin * g.v;

  // kill the translation on the T coordinates: u_t = (T - I)^-1 w_t
  std::vector<JordanBlockSpec> ordered = nf.t_blocks;
  ordered.insert(ordered.end(), nf.u_blocks.begin(), nf.u_blocks.end());
  Matrix<T> a_prime = assemble<T>(ordered);
  Vector<T> u(n, T(0));
  if (nf.t_dim > 0) {
    Matrix<T> t_part = block(a_prime, 0, 0, nf.t_dim, nf.t_dim);
    Matrix<T> shift = t_part - Matrix<T>::identity(nf.t_dim);
    Vector<T> w_t(w.begin(), w.begin() + nf.t_dim);
    Vector<T> u_t = inverse(shift) * w_t;
    for (int i = 0; i < nf.t_dim; ++i) u[i] = u_t[i];
  }

  nf.conjugator = AffineMap<T>{b_lin, u};
  nf.result = conjugate(nf.conjugator, g);
  require_internal(nf.result.A == a_prime, "normal form linear part mismatch");
  for (int i = 0; i < nf.t_dim; ++i)
    require_internal(is_zero(nf.result.v[i]), "normal form translation not supported on unipotent coordinates");
  return nf;
}

template <typename T>
struct AffineWitness {
  AffineMap<T> element;
  bool is_involution = false;
  bool verified = false;
};

template <typename T>
struct AffineReport {
  Flag reversible = Flag::No;
  Flag strongly_reversible = Flag::No;
  PairingCertificate pairing; // of the linear part
  std::optional<AffineWitness<T>> witness;
};

namespace detail {

template <typename T>
AffineWitness<T> checked_affine_witness(const AffineMap<T>& g, const AffineMap<T>& h) {
  AffineWitness<T> w;
  w.element = h;
  w.verified = conjugate(h, g) == inverse(g);
  w.is_involution = is_affine_involution(h);
  require_internal(w.verified, "synthesized affine reverser failed exact verification");
  return w;
}

// Reverser of the normal form (T + U, 0 + v~): block reverser of T joined
// with Omega(1, m) per unipotent block, translation from the linear system
// (A^-1 - I) w = (A^-1 + B) v, free variables zero.
template <typename T>
AffineMap<T> normal_form_reverser(const AffineNormalForm<T>& nf) {
  int n = nf.result.dim();
  Matrix<T> b(n, n);
  if (nf.t_dim > 0) {
    Matrix<T> t_part = block(nf.result.A, 0, 0, nf.t_dim, nf.t_dim);
    JordanForm<T> tform = jordan_form(t_part);
    auto rep = classify_reversible(t_part, tform);
    if (rep.primary != Flag::Yes) throw_domain("NotReversible", rep.pairing.failure);
    place(b, 0, 0, rep.witness->element);
  }
  int at = nf.t_dim;
  for (const auto& ub : nf.u_blocks) {
    place(b, at, at, omega(T(1), ub.size));
    at += ub.size;
  }

  Matrix<T> a_inv = inverse(nf.result.A);
  Matrix<T> lhs = a_inv - Matrix<T>::identity(n);
  Vector<T> rhs = (a_inv + b) * nf.result.v;
  auto sol = solve(lhs, rhs);
  require_internal(sol.consistent, "affine reverser system is inconsistent");
  return AffineMap<T>{b, sol.particular};
}

// Strong reverser of one unipotent piece (J(1,m), v_b), through the Lie
// algebra: reverse (J(0,m), x) by (B, w) with B = diag(..., 1, -1), then
// exponentiate and transport by the certificate of exp(J(0,m)).
template <typename T>
AffineMap<T> nilpotent_block_lie_reverser(int m, const Vector<T>& x) {
  Matrix<T> b(m, m);
  for (int t = 0; t < m; ++t) b(t, t) = ((m - t) % 2 == 0) ? T(1) : T(-1);
  Matrix<T> nb = jordan_block(T(0), m);
  Vector<T> rhs = negate((b + Matrix<T>::identity(m)) * x);
  auto sol = solve(nb, rhs);
  require_internal(sol.consistent, "Lie-level reverser system is inconsistent");
  return AffineMap<T>{b, sol.particular};
}

template <typename T>
AffineMap<T> unipotent_block_strong_reverser(int m, const Vector<T>& v_b) {
  Matrix<T> nil = jordan_block(T(0), m);
  Matrix<T> expn = nilpotent_exp(nil);
  JordanForm<T> eform = jordan_form(expn);
  require_internal(eform.J == jordan_block(T(1), m), "exp of a nilpotent block is a single unipotent block");
  // exp((N,x)) = (e^N, f(N) x) with f(N) = sum N^k/(k+1)!
  Matrix<T> f(m, m);
  Matrix<T> pk = Matrix<T>::identity(m);
  for (int k = 0; k < m; ++k) {
    f = f + scale_left(from_rational<T>(factorial_inv(static_cast<unsigned>(k + 1))), pk);
    pk = pk * nil;
  }
  Vector<T> x = inverse(f) * (eform.S_inv * v_b);
  AffineMap<T> lie = nilpotent_block_lie_reverser(m, x);
  AffineMap<T> sgm{eform.S, Vector<T>(m, T(0))};
  AffineMap<T> h = conjugate(sgm, lie);
  // sanity: h reverses (J(1,m), v_b) and is an involution
  AffineMap<T> gb{jordan_block(T(1), m), v_b};
  require_internal(conjugate(h, gb) == inverse(gb) && is_affine_involution(h),
                   "unipotent strong reverser failed verification");
  return h;
}

template <typename T>
AffineMap<T> normal_form_strong_reverser(const AffineNormalForm<T>& nf) {
  int n = nf.result.dim();
  AffineMap<T> h{Matrix<T>(0, 0), Vector<T>{}};
  if (nf.t_dim > 0) {
    Matrix<T> t_part = block(nf.result.A, 0, 0, nf.t_dim, nf.t_dim);
    JordanForm<T> tform = jordan_form(t_part);
    auto rep = classify_strongly_reversible(t_part, tform);
    if (rep.strong != Flag::Yes)
      throw_domain("NotStronglyReversible", "linear part is not certified strongly reversible");
    require_internal(rep.witness->is_involution, "strong linear witness must be an involution");
    h = AffineMap<T>{rep.witness->element, Vector<T>(nf.t_dim, T(0))};
  }
  int at = nf.t_dim;
  for (const auto& ub : nf.u_blocks) {
    Vector<T> v_b(nf.result.v.begin() + at, nf.result.v.begin() + at + ub.size);
    h = h.dim() == 0 ? unipotent_block_strong_reverser(ub.size, v_b)
                     : aff_direct_sum(h, unipotent_block_strong_reverser(ub.size, v_b));
    at += ub.size;
  }
  require_internal(h.dim() == n, "normal form strong reverser dimension mismatch");
  return h;
}

} // namespace detail

// Reverser h = (B, w) with h g h^-1 = g^-1; exists iff the linear part is
// reversible.
template <typename T>
AffineWitness<T> aff_reverser(const AffineMap<T>& g) {
  AffineNormalForm<T> nf = normal_form(g);
  AffineMap<T> h_nf = detail::normal_form_reverser(nf);
  AffineMap<T> h = conjugate(inverse(nf.conjugator), h_nf);
  return detail::checked_affine_witness(g, h);
}

// Involutive reverser; exists iff the linear part is strongly reversible.
template <typename T>
AffineWitness<T> aff_strong_reverser(const AffineMap<T>& g) {
  AffineNormalForm<T> nf = normal_form(g);
  AffineMap<T> h_nf = detail::normal_form_strong_reverser(nf);
  AffineMap<T> h = conjugate(inverse(nf.conjugator), h_nf);
  AffineWitness<T> w = detail::checked_affine_witness(g, h);
  require_internal(w.is_involution, "strong affine reverser must be an involution");
  return w;
}

// Reversibility flags of g = (A, v) equal those of the linear part A; the
// affine witnesses are synthesized independently through the normal form.
template <typename T>
AffineReport<T> aff_classify(const AffineMap<T>& g) {
  if (!is_invertible(g.A)) throw_domain("SingularInput", "affine map needs an invertible linear part");
  JordanForm<T> form = jordan_form(g.A);
  auto lin = classify_reversible(g.A, form);
  AffineReport<T> rep;
  rep.reversible = lin.primary;
  rep.strongly_reversible = lin.strong;
  rep.pairing = lin.pairing;
  if (rep.strongly_reversible == Flag::Yes)
    rep.witness = aff_strong_reverser(g);
  else if (rep.reversible == Flag::Yes)
    rep.witness = aff_reverser(g);
  return rep;
}

// Two affine involutions with g = h1 h2; exists iff g is strongly reversible.
template <typename T>
std::pair<AffineWitness<T>, AffineWitness<T>> aff_two_involutions(const AffineMap<T>& g) {
  AffineWitness<T> r = aff_strong_reverser(g);
  AffineMap<T> h2 = compose(r.element, g);
  if (!is_affine_involution(r.element) || !is_affine_involution(h2) || !(compose(r.element, h2) == g))
    throw_domain("WitnessConstructionFailed", "affine two-involution factorization failed exact verification");
  AffineWitness<T> w2{h2, true, true};
  return {r, w2};
}

namespace detail {

// Involutive signed permutation matrices of size n in a fixed deterministic
// order, identity first. Involutive permutations are built by matching the
// smallest free index either to itself (any sign) or to a larger free index
// (joint sign on the 2-cycle).
template <typename T>
std::vector<Matrix<T>> signed_permutation_involutions(int n) {
  std::vector<Matrix<T>> out;
  std::vector<int> match(n, -1);
  auto emit = [&]() {
    int cells = 0;
    for (int i = 0; i < n; ++i) cells += (match[i] == i) ? 1 : (match[i] > i ? 1 : 0);
    for (int mask = 0; mask < (1 << cells); ++mask) {
      Matrix<T> w(n, n);
      int bit = 0;
      for (int i = 0; i < n; ++i) {
        if (match[i] < i) continue;
        T s = ((mask >> bit) & 1) ? T(-1) : T(1);
        ++bit;
        if (match[i] == i) {
          w(i, i) = s;
        } else {
          w(i, match[i]) = s;
          w(match[i], i) = s;
        }
      }
      out.push_back(std::move(w));
    }
  };
  auto rec = [&](auto&& self, int i) -> void {
    while (i < n && match[i] >= 0) ++i;
    if (i == n) {
      emit();
      return;
    }
    match[i] = i;
    self(self, i + 1);
    match[i] = -1;
    for (int j = i + 1; j < n; ++j) {
      if (match[j] >= 0) continue;
      match[i] = j;
      match[j] = i;
      self(self, i + 1);
      match[i] = match[j] = -1;
    }
  };
  rec(rec, 0);
  return out;
}

template <typename T>
std::vector<Matrix<T>> diagonal_sign_matrices(int n) {
  std::vector<Matrix<T>> out;
  for (long mask = 0; mask < (1L << n); ++mask) {
    Matrix<T> w(n, n);
    for (int i = 0; i < n; ++i) w(i, i) = ((mask >> i) & 1) ? T(-1) : T(1);
    out.push_back(std::move(w));
  }
  return out;
}

// Four involutions B1..B4 with product T_part, or failure. W = I first covers
// the reversible case with B3 = B4 = I.
template <typename T>
std::optional<std::array<Matrix<T>, 4>> linear_four_involutions(const Matrix<T>& t_part) {
  int k = t_part.rows();
  Matrix<T> id = Matrix<T>::identity(k);
  std::vector<Matrix<T>> candidates =
      k <= 6 ? signed_permutation_involutions<T>(k) : diagonal_sign_matrices<T>(k);
  for (const auto& w : candidates) {
    Matrix<T> tw = t_part * w;
    try {
      JordanForm<T> form = jordan_form(tw);
      auto rep = classify_strongly_reversible(tw, form);
      if (rep.strong != Flag::Yes) continue;
      auto [g1, g2] = two_involutions(tw, form);
      return std::array<Matrix<T>, 4>{g1.element, g2.element, w, id};
    } catch (const Error& e) {
      if (e.kind() == "SpectrumNotSupported") continue;
      throw;
    }
  }
  return std::nullopt;
}

} // namespace detail

// g = f1 f2 f3 f4 with each fi an affine involution; needs det(A) = +-1
// (det through the complex embedding equal to 1 over H).
template <typename T>
std::array<AffineMap<T>, 4> four_involutions(const AffineMap<T>& g) {
  constexpr Ring ring = ring_of_v<T>;
  if (!is_invertible(g.A)) throw_domain("SingularInput", "affine map needs an invertible linear part");
  if constexpr (ring == Ring::H) {
    auto [det, tr] = det_trace_h(g.A);
    (void)tr;
    if (!(det == GaussianRational(1)))
      throw_domain("DeterminantNotUnit", "four-involution factorization over H needs det_H = 1, got " + gaussian_str(det));
  } else {
    T det = determinant(g.A);
    if (!(det == T(1) || det == T(-1)))
      throw_domain("DeterminantNotUnit", "four-involution factorization needs determinant +-1");
  }

  AffineNormalForm<T> nf = normal_form(g);
  int n = g.dim(), k = nf.t_dim, m = n - k;

  std::array<Matrix<T>, 4> lin{Matrix<T>::identity(k), Matrix<T>::identity(k), Matrix<T>::identity(k),
                               Matrix<T>::identity(k)};
  if (k > 0) {
    auto found = detail::linear_four_involutions(block(nf.result.A, 0, 0, k, k));
    if (!found)
      throw_domain("UnsupportedFactorization",
                   "no involutive signed permutation W makes T*W certifiably strongly reversible");
    lin = *found;
  }

  AffineMap<T> p_aff = AffineMap<T>::identity(m), q_aff = AffineMap<T>::identity(m);
  if (m > 0) {
    Matrix<T> u_part = block(nf.result.A, k, k, m, m);
    Vector<T> v_u(nf.result.v.begin() + k, nf.result.v.end());
    auto [h1, h2] = aff_two_involutions(AffineMap<T>{u_part, v_u});
    p_aff = h1.element;
    q_aff = h2.element;
  }

  auto pad_linear = [&](const Matrix<T>& bl) {
    return AffineMap<T>{direct_sum<T>({bl, Matrix<T>::identity(m)}), Vector<T>(n, T(0))};
  };
  auto pad_mixed = [&](const Matrix<T>& bl, const AffineMap<T>& tail) {
    Matrix<T> a = direct_sum<T>({bl, tail.A});
    Vector<T> v(n, T(0));
    for (int i = 0; i < m; ++i) v[k + i] = tail.v[i];
    return AffineMap<T>{std::move(a), std::move(v)};
  };

  std::array<AffineMap<T>, 4> fs{pad_linear(lin[0]), pad_linear(lin[1]), pad_mixed(lin[2], p_aff),
                                 pad_mixed(lin[3], q_aff)};
  AffineMap<T> c_inv = inverse(nf.conjugator);
  std::array<AffineMap<T>, 4> out{conjugate(c_inv, fs[0]), conjugate(c_inv, fs[1]), conjugate(c_inv, fs[2]),
                                  conjugate(c_inv, fs[3])};
  AffineMap<T> prod = compose(compose(out[0], out[1]), compose(out[2], out[3]));
  for (const auto& f : out)
    require_internal(is_affine_involution(f), "four-involution factor is not an involution");
  require_internal(prod == g, "four-involution product does not reproduce the input");
  return out;
}

} // namespace revaff

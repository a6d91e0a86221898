#pragma once

#include <algorithm>
#include <optional>

#include "revaff/embed.hpp"
#include "revaff/omega.hpp"
#include "revaff/roots.hpp"

namespace revaff {

// One block of a Jordan form: either a standard block J(lambda, size) or, over
// R only, the realified pair block of J(mu + i*nu, half_size) with nu > 0.
struct JordanBlockSpec {
  enum class Kind { Standard, RealPair };

  Kind kind = Kind::Standard;
  GaussianRational lambda; // Standard
  Rational mu, nu;         // RealPair, nu > 0
  int size = 0;            // block size, or half size for RealPair

  static JordanBlockSpec standard(GaussianRational l, int s) {
    JordanBlockSpec b;
    b.kind = Kind::Standard;
    b.lambda = std::move(l);
    b.size = s;
    return b;
  }
  static JordanBlockSpec real_pair(Rational mu, Rational nu, int half) {
    JordanBlockSpec b;
    b.kind = Kind::RealPair;
    b.mu = std::move(mu);
    b.nu = std::move(nu);
    b.size = half;
    return b;
  }

  int dim() const { return kind == Kind::Standard ? size : 2 * size; }

  friend bool operator==(const JordanBlockSpec& a, const JordanBlockSpec& b) {
    if (a.kind != b.kind || a.size != b.size) return false;
    return a.kind == Kind::Standard ? a.lambda == b.lambda : (a.mu == b.mu && a.nu == b.nu);
  }
};

// Canonical order: Standard blocks first, sorted by (Re, Im) ascending then
// size descending; RealPair blocks after, by (mu, nu) ascending then half size
// descending. A convention (any permutation is a valid Jordan form).
inline bool canonical_block_less(const JordanBlockSpec& a, const JordanBlockSpec& b) {
  if (a.kind != b.kind) return a.kind == JordanBlockSpec::Kind::Standard;
  if (a.kind == JordanBlockSpec::Kind::Standard) {
    if (a.lambda != b.lambda) return lex_less(a.lambda, b.lambda);
    return a.size > b.size;
  }
  if (a.mu != b.mu) return a.mu < b.mu;
  if (a.nu != b.nu) return a.nu < b.nu;
  return a.size > b.size;
}

inline void canonical_sort(std::vector<JordanBlockSpec>& blocks) {
  std::stable_sort(blocks.begin(), blocks.end(), canonical_block_less);
}

// Eigenvalue data. Semantics per ring:
//   R: every root of the characteristic polynomial (non-real ones appear as
//      both members of the conjugate pair);
//   C: every root;
//   H: canonical similarity-class representatives (Im >= 0) with their
//      quaternionic multiplicities (sum = n).
struct Spectrum {
  std::vector<std::pair<GaussianRational, int>> entries;
};

template <typename T>
struct JordanForm {
  std::vector<JordanBlockSpec> blocks; // canonically ordered
  Matrix<T> S;                         // similarity certificate: S A S^-1 = J
  Matrix<T> S_inv;                     // cached exact inverse of S
  Matrix<T> J;                         // assembled form
};

// ---- characteristic polynomial (Faddeev-LeVerrier over Q or Q(i)) ----

template <typename F>
Poly<F> fl_char_poly(const Matrix<F>& a) {
  static_assert(scalar_traits<F>::commutative);
  int n = a.rows();
  std::vector<F> c(n + 1, F(0));
  c[n] = F(1);
  Matrix<F> m = a;
  for (int k = 1; k <= n; ++k) {
    F ck = -(trace(m) * from_rational<F>(Rational(1, k)));
    c[n - k] = ck;
    if (k < n) m = a * (m + scale_left(ck, Matrix<F>::identity(n)));
  }
  return Poly<F>(std::move(c));
}

// Monic characteristic polynomial with Q(i) coefficients; for ring H this is
// the characteristic polynomial of phi(A), of degree 2n.
template <typename T>
Poly<GaussianRational> char_poly(const Matrix<T>& a) {
  if (!a.is_square()) throw_input("ShapeMismatch", "characteristic polynomial of non-square matrix");
  if constexpr (std::is_same_v<T, Quaternion>) {
    return fl_char_poly(phi_embed(a));
  } else if constexpr (std::is_same_v<T, Rational>) {
    return promote_c(fl_char_poly(a));
  } else {
    return fl_char_poly(a);
  }
}

namespace detail {

template <typename T>
std::vector<std::pair<GaussianRational, int>> verify_hint_roots(const Poly<GaussianRational>& p,
                                                                const Spectrum& hint) {
  // Hints are re-verified by exact deflation of the characteristic polynomial;
  // the hinted values are never trusted.
  std::vector<std::pair<GaussianRational, int>> roots;
  for (const auto& [z, m] : hint.entries) {
    if (m <= 0) throw_domain("SpectrumNotSupported", "hint with non-positive multiplicity");
    if constexpr (std::is_same_v<T, Quaternion>) {
      if (z.im.sign() < 0)
        throw_domain("SpectrumNotSupported", "quaternionic hint representative must have Im >= 0");
      if (z.is_real()) roots.push_back({z, 2 * m});
      else {
        roots.push_back({z, m});
        roots.push_back({z.conj(), m});
      }
    } else {
      roots.push_back({z, m});
    }
  }
  Poly<GaussianRational> rest = p.monic();
  for (const auto& [z, m] : roots) {
    for (int k = 0; k < m; ++k) {
      Poly<GaussianRational> q;
      if (!rest.deflate(z, q))
        throw_domain("SpectrumNotSupported",
                     "hint verification failed: " + gaussian_str(z) + " is not a root of multiplicity " + std::to_string(m));
      rest = q;
    }
  }
  if (rest.degree() > 0)
    throw_domain("SpectrumNotSupported", "hint does not account for factor " + poly_str(rest));
  return roots;
}

template <typename T>
Spectrum canonicalize_spectrum(std::vector<std::pair<GaussianRational, int>> roots, int n) {
  std::sort(roots.begin(), roots.end(), [](const auto& a, const auto& b) { return lex_less(a.first, b.first); });
  auto mult_of = [&](const GaussianRational& z) -> int {
    for (const auto& [w, m] : roots)
      if (w == z) return m;
    return 0;
  };
  Spectrum spec;
  long total = 0;
  if constexpr (std::is_same_v<T, Quaternion>) {
    for (const auto& [z, m] : roots) {
      if (z.im.sign() < 0) continue;
      if (z.is_real()) {
        if (m % 2 != 0)
          throw_domain("SpectrumNotSupported", "real eigenvalue of odd multiplicity in the complex model");
        spec.entries.push_back({z, m / 2});
        total += m / 2;
      } else {
        if (mult_of(z.conj()) != m)
          throw_domain("SpectrumNotSupported", "conjugate class multiplicities differ in the complex model");
        spec.entries.push_back({z, m});
        total += m;
      }
    }
  } else if constexpr (std::is_same_v<T, Rational>) {
    for (const auto& [z, m] : roots) {
      if (!z.is_real() && mult_of(z.conj()) != m)
        throw_domain("SpectrumNotSupported", "conjugate pair multiplicities differ");
      spec.entries.push_back({z, m});
      total += m;
    }
  } else {
    for (const auto& [z, m] : roots) {
      spec.entries.push_back({z, m});
      total += m;
    }
  }
  if (total != n)
    throw_domain("SpectrumNotSupported", "spectrum multiplicities do not sum to the dimension");
  return spec;
}

// #blocks of each size for the map M restricted to its generalized kernel of
// dimension amult: #blocks of size >= k is dim ker M^k - dim ker M^(k-1).
template <typename F>
std::vector<int> block_sizes(const Matrix<F>& m, int amult) {
  int n = m.rows();
  std::vector<int> kdim{0};
  Matrix<F> mk = Matrix<F>::identity(n);
  while (kdim.back() < amult) {
    if (static_cast<int>(kdim.size()) > n + 1)
      throw_domain("SpectrumMismatch", "spectrum does not certify the matrix");
    mk = mk * m;
    int d = n - rank(mk);
    if (d == kdim.back())
      throw_domain("SpectrumMismatch", "generalized eigenspace smaller than claimed multiplicity");
    kdim.push_back(d);
  }
  if (kdim.back() != amult)
    throw_domain("SpectrumMismatch", "generalized eigenspace dimension mismatch");
  int p = static_cast<int>(kdim.size()) - 1;
  std::vector<int> sizes;
  for (int k = p; k >= 1; --k) {
    int geq_k = kdim[k] - kdim[k - 1];
    int geq_k1 = k + 1 <= p ? kdim[k + 1] - kdim[k] : 0;
    for (int c = 0; c < geq_k - geq_k1; ++c) sizes.push_back(k);
  }
  return sizes; // descending
}

template <typename F>
Matrix<F> shifted(const Matrix<F>& a, const F& lambda) {
  Matrix<F> m = a;
  for (int i = 0; i < a.rows(); ++i) m(i, i) = m(i, i) - lambda;
  return m;
}

// Jordan chains for the generalized eigenspace of M (already shifted by the
// eigenvalue) of dimension amult. Each chain is returned eigenvector-first:
// [M^(k-1) v, ..., M v, v].
template <typename F>
std::vector<std::vector<Vector<F>>> jordan_chains(const Matrix<F>& m, int amult) {
  int n = m.rows();
  std::vector<std::vector<Vector<F>>> kernels{{}}; // kernels[k] = basis of ker M^k
  std::vector<int> kdim{0};
  Matrix<F> mk = Matrix<F>::identity(n);
  while (kdim.back() < amult) {
    if (static_cast<int>(kdim.size()) > n + 1)
      throw_domain("SpectrumMismatch", "spectrum does not certify the matrix");
    mk = mk * m;
    auto kb = kernel(mk);
    if (static_cast<int>(kb.size()) == kdim.back())
      throw_domain("SpectrumMismatch", "generalized eigenspace smaller than claimed multiplicity");
    kdim.push_back(static_cast<int>(kb.size()));
    kernels.push_back(std::move(kb));
  }
  int p = static_cast<int>(kdim.size()) - 1;

  struct Chain {
    int level;
    std::vector<Vector<F>> vecs; // [top, M top, ...] i.e. levels level..1
  };
  std::vector<Chain> chains;
  for (int k = p; k >= 1; --k) {
    SpanBasis<F> basis(n);
    for (const auto& v : kernels[k - 1]) basis.insert(v);
    for (const auto& c : chains) basis.insert(c.vecs[c.level - k]);
    int geq_k = kdim[k] - kdim[k - 1];
    int geq_k1 = k + 1 <= p ? kdim[k + 1] - kdim[k] : 0;
    int need = geq_k - geq_k1;
    for (const auto& v : kernels[k]) {
      if (need == 0) break;
      if (!basis.insert(v)) continue;
      Chain c{k, {v}};
      for (int j = 1; j < k; ++j) c.vecs.push_back(m * c.vecs.back());
      chains.push_back(std::move(c));
      --need;
    }
    require_internal(need == 0, "chain construction ran out of independent vectors");
  }

  std::vector<std::vector<Vector<F>>> out;
  for (auto& c : chains) {
    std::reverse(c.vecs.begin(), c.vecs.end());
    // normalize: first nonzero coordinate of the eigenvector becomes 1 (a
    // right-module scaling, so the chain relation survives over H as well)
    for (const auto& entry : c.vecs.front()) {
      if (is_zero(entry)) continue;
      F q = inverse(entry);
      for (auto& v : c.vecs)
        for (auto& x : v) x = x * q;
      break;
    }
    out.push_back(std::move(c.vecs));
  }
  return out;
}

} // namespace detail

template <typename T>
Spectrum find_spectrum(const Matrix<T>& a, const std::optional<Spectrum>& hint = {}) {
  if (!a.is_square()) throw_input("ShapeMismatch", "spectrum of non-square matrix");
  if (a.rows() > 64) throw_domain("SpectrumNotSupported", "dimension exceeds the supported cap of 64");
  Poly<GaussianRational> p = char_poly(a);
  std::vector<std::pair<GaussianRational, int>> roots;
  if (hint.has_value()) {
    roots = detail::verify_hint_roots<T>(p, *hint);
  } else {
    RootList rl = gaussian_roots(p);
    if (rl.residual.degree() > 0)
      throw_domain("SpectrumNotSupported", "factor without roots in Q(i): " + poly_str(rl.residual));
    roots = std::move(rl.roots);
  }
  int model_dim = std::is_same_v<T, Quaternion> ? 2 * a.rows() : a.rows();
  long covered = 0;
  for (const auto& [z, m] : roots) covered += m;
  (void)model_dim;
  require_internal(covered == model_dim, "root multiplicities do not sum to the polynomial degree");
  return detail::canonicalize_spectrum<T>(std::move(roots), a.rows());
}

// Block structure from the rank sequences alone (no chains, no certificate).
template <typename T>
std::vector<JordanBlockSpec> jordan_structure(const Matrix<T>& a, const Spectrum& spec) {
  std::vector<JordanBlockSpec> blocks;
  if constexpr (std::is_same_v<T, Rational>) {
    std::optional<Matrix<GaussianRational>> ac;
    for (const auto& [z, m] : spec.entries) {
      if (z.im.sign() < 0) continue;
      if (z.is_real()) {
        for (int s : detail::block_sizes(detail::shifted(a, z.re), m))
          blocks.push_back(JordanBlockSpec::standard(z, s));
      } else {
        if (!ac) ac = promote_c(a);
        for (int s : detail::block_sizes(detail::shifted(*ac, z), m))
          blocks.push_back(JordanBlockSpec::real_pair(z.re, z.im, s));
      }
    }
  } else if constexpr (std::is_same_v<T, GaussianRational>) {
    for (const auto& [z, m] : spec.entries)
      for (int s : detail::block_sizes(detail::shifted(a, z), m))
        blocks.push_back(JordanBlockSpec::standard(z, s));
  } else {
    Matrix<GaussianRational> b = phi_embed(a);
    for (const auto& [z, m] : spec.entries) {
      if (z.is_real()) {
        // blocks in the complex model appear twice for a real class
        auto sizes = detail::block_sizes(detail::shifted(b, z), 2 * m);
        require_internal(sizes.size() % 2 == 0, "real-class blocks must pair up in the complex model");
        for (size_t i = 0; i < sizes.size(); i += 2) {
          require_internal(sizes[i] == sizes[i + 1], "real-class block sizes must pair up");
          blocks.push_back(JordanBlockSpec::standard(z, sizes[i]));
        }
      } else {
        for (int s : detail::block_sizes(detail::shifted(b, z), m))
          blocks.push_back(JordanBlockSpec::standard(z, s));
      }
    }
  }
  canonical_sort(blocks);
  return blocks;
}

// Assemble the canonical matrix for a block list (blocks are used in the given
// order; callers wanting the canonical arrangement sort first).
template <typename T>
Matrix<T> assemble(const std::vector<JordanBlockSpec>& blocks) {
  std::vector<Matrix<T>> parts;
  for (const auto& b : blocks) {
    if (b.kind == JordanBlockSpec::Kind::Standard) {
      if constexpr (std::is_same_v<T, Rational>) {
        if (!b.lambda.is_real())
          throw_input("IllegalBlock", "standard block over R needs a rational eigenvalue");
      }
      parts.push_back(jordan_block(from_gaussian<T>(b.lambda), b.size));
    } else {
      if constexpr (std::is_same_v<T, Rational>) {
        if (b.nu.sign() <= 0) throw_input("IllegalBlock", "real-pair block needs nu > 0");
        parts.push_back(real_jordan_block(b.mu, b.nu, b.size));
      } else {
        throw_input("IllegalBlock", "real-pair blocks exist only over R");
      }
    }
  }
  return direct_sum(parts);
}

// sigma J_R(mu +- i nu, 2n) sigma^-1 with sigma = diag(1,-1,...): the real
// Jordan block of the conjugate parameter pair.
inline Matrix<Rational> conjugate_real_pair(const JordanBlockSpec& b) {
  require_internal(b.kind == JordanBlockSpec::Kind::RealPair, "conjugate_real_pair wants a RealPair block");
  Matrix<Rational> j = real_jordan_block(b.mu, b.nu, b.size);
  Matrix<Rational> sigma = alternating_diag<Rational>(2 * b.size);
  return sigma * j * sigma; // sigma is an involution
}

template <typename T>
JordanForm<T> jordan_form(const Matrix<T>& a, const std::optional<Spectrum>& hint = {}) {
  if (!a.is_square()) throw_input("ShapeMismatch", "jordan form of non-square matrix");
  Spectrum spec = find_spectrum(a, hint);

  struct Group {
    JordanBlockSpec block;
    std::vector<Vector<T>> columns;
  };
  std::vector<Group> groups;

  if constexpr (std::is_same_v<T, Rational>) {
    std::optional<Matrix<GaussianRational>> ac;
    for (const auto& [z, m] : spec.entries) {
      if (z.im.sign() < 0) continue;
      if (z.is_real()) {
        for (auto& chain : detail::jordan_chains(detail::shifted(a, z.re), m)) {
          Group g{JordanBlockSpec::standard(z, static_cast<int>(chain.size())), {}};
          for (auto& v : chain) g.columns.push_back(std::move(v));
          groups.push_back(std::move(g));
        }
      } else {
        if (!ac) ac = promote_c(a);
        for (auto& chain : detail::jordan_chains(detail::shifted(*ac, z), m)) {
          Group g{JordanBlockSpec::real_pair(z.re, z.im, static_cast<int>(chain.size())), {}};
          for (auto& w : chain) {
            Vector<Rational> re(w.size()), im(w.size());
            for (size_t i = 0; i < w.size(); ++i) {
              re[i] = w[i].re;
              im[i] = w[i].im;
            }
            g.columns.push_back(std::move(re));
            g.columns.push_back(std::move(im));
          }
          groups.push_back(std::move(g));
        }
      }
    }
  } else if constexpr (std::is_same_v<T, GaussianRational>) {
    for (const auto& [z, m] : spec.entries) {
      for (auto& chain : detail::jordan_chains(detail::shifted(a, z), m)) {
        Group g{JordanBlockSpec::standard(z, static_cast<int>(chain.size())), {}};
        for (auto& v : chain) g.columns.push_back(std::move(v));
        groups.push_back(std::move(g));
      }
    }
  } else {
    std::optional<Matrix<GaussianRational>> phi;
    for (const auto& [z, m] : spec.entries) {
      if (z.is_real()) {
        // rational class representative is central: chains directly over H
        for (auto& chain : detail::jordan_chains(detail::shifted(a, Quaternion(z)), m)) {
          Group g{JordanBlockSpec::standard(z, static_cast<int>(chain.size())), {}};
          for (auto& v : chain) g.columns.push_back(std::move(v));
          groups.push_back(std::move(g));
        }
      } else {
        // complex chains in the phi model, pulled back through the column
        // identification chi
        if (!phi) phi = phi_embed(a);
        for (auto& chain : detail::jordan_chains(detail::shifted(*phi, z), m)) {
          Group g{JordanBlockSpec::standard(z, static_cast<int>(chain.size())), {}};
          for (auto& w : chain) g.columns.push_back(chi_pull(w));
          groups.push_back(std::move(g));
        }
      }
    }
  }

  std::stable_sort(groups.begin(), groups.end(),
                   [](const Group& x, const Group& y) { return canonical_block_less(x.block, y.block); });

  std::vector<JordanBlockSpec> blocks;
  std::vector<Vector<T>> columns;
  for (auto& g : groups) {
    blocks.push_back(g.block);
    for (auto& c : g.columns) columns.push_back(std::move(c));
  }
  Matrix<T> p = columns_to_matrix(columns, a.rows());
  Matrix<T> s = inverse(p);
  Matrix<T> j = assemble<T>(blocks);
  require_internal(s * a * p == j, "similarity certificate failed: S A S^-1 != J");
  return {std::move(blocks), std::move(s), std::move(p), std::move(j)};
}

// Multiset equality of Jordan block lists (both canonically sorted).
inline bool same_block_multiset(const std::vector<JordanBlockSpec>& a, const std::vector<JordanBlockSpec>& b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!(a[i] == b[i])) return false;
  return true;
}

} // namespace revaff

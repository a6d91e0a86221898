#pragma once

#include <random>

#include "revaff/affine.hpp"

namespace revaff {

// Definition-level checks, independent of the classifiers and constructions
// they validate.
struct OracleVerdict {
  bool holds = false;
  std::string counterexample; // empty iff holds
};

template <typename T>
OracleVerdict verify_reverser(const Matrix<T>& g, const Matrix<T>& r) {
  if (!is_invertible(r)) return {false, "candidate reverser is singular"};
  Matrix<T> got = r * g * inverse(r);
  Matrix<T> expected = inverse(g);
  if (got == expected) return {true, ""};
  return {false, "r g r^-1 != g^-1"};
}

template <typename T>
OracleVerdict verify_reverser(const AffineMap<T>& g, const AffineMap<T>& r) {
  if (!is_invertible(r.A)) return {false, "candidate reverser has singular linear part"};
  if (conjugate(r, g) == inverse(g)) return {true, ""};
  return {false, "r g r^-1 != g^-1"};
}

template <typename T>
OracleVerdict verify_ad_reverser(const Matrix<T>& x, const Matrix<T>& g) {
  if (!is_invertible(g)) return {false, "candidate reverser is singular"};
  if (g * x * inverse(g) == -x) return {true, ""};
  return {false, "g X g^-1 != -X"};
}

template <typename T>
OracleVerdict verify_involution(const Matrix<T>& r) {
  if (!r.is_square()) return {false, "not square"};
  if (r * r == Matrix<T>::identity(r.rows())) return {true, ""};
  return {false, "r^2 != I"};
}

template <typename T>
OracleVerdict verify_involution(const AffineMap<T>& r) {
  if (is_affine_involution(r)) return {true, ""};
  return {false, "r^2 != id"};
}

// Omega built purely from the backward recurrence; compared entrywise with
// the closed form in tests.
template <typename T>
Matrix<T> omega_recurrence_oracle(const T& lambda, int n) {
  if (is_zero(lambda)) throw_domain("DivisionByZero", "omega requires lambda != 0");
  Matrix<T> x(n, n);
  x(n - 1, n - 1) = T(-1);
  T li = inverse(lambda);
  T li2 = li * li;
  for (int r = n - 2; r >= 0; --r)
    for (int c = r; c <= n - 2; ++c) x(r, c) = -(li * x(r + 1, c)) - li2 * x(r + 1, c + 1);
  return x;
}

// Block analogue of the recurrence oracle: 2x2 blocks in K instead of scalars
// in lambda, X[n][n] = I2.
inline Matrix<Rational> omega_real_recurrence_oracle(const Rational& mu, const Rational& nu, int n) {
  Matrix<Rational> k = psi_scalar(GaussianRational(mu, nu));
  if (!is_invertible(k)) throw_domain("DivisionByZero", "omega_real requires an invertible K");
  Matrix<Rational> ki = inverse(k);
  Matrix<Rational> ki2 = ki * ki;
  std::vector<std::vector<Matrix<Rational>>> x(
      static_cast<size_t>(n), std::vector<Matrix<Rational>>(static_cast<size_t>(n), Matrix<Rational>::zero(2, 2)));
  x[n - 1][n - 1] = Matrix<Rational>::identity(2);
  for (int r = n - 2; r >= 0; --r)
    for (int c = r; c <= n - 2; ++c) x[r][c] = -(ki * x[r + 1][c]) - ki2 * x[r + 1][c + 1];
  Matrix<Rational> out(2 * n, 2 * n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) place(out, 2 * r, 2 * c, x[r][c]);
  return out;
}

// Reversibility decided from the definition: A ~ A^-1 iff A and A^-1 have the
// same Jordan block multiset. Independent of the pairing-rule classifier.
template <typename T>
OracleVerdict reversible_oracle(const Matrix<T>& a) {
  if (!is_invertible(a)) throw_domain("SingularInput", "reversibility oracle needs an invertible matrix");
  JordanForm<T> fa = jordan_form(a);
  JordanForm<T> fi = jordan_form(inverse(a));
  if (same_block_multiset(fa.blocks, fi.blocks)) return {true, ""};
  return {false, "Jordan block multisets of A and A^-1 differ"};
}

// ---- seeded case generation ----

class SeededGen {
public:
  explicit SeededGen(uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) {
    return static_cast<long>(rng_() % static_cast<uint64_t>(hi - lo + 1)) + lo;
  }
  bool coin() { return (rng_() & 1) != 0; }
  template <typename V>
  const V& pick(const std::vector<V>& pool) {
    return pool[static_cast<size_t>(integer(0, static_cast<long>(pool.size()) - 1))];
  }

private:
  std::mt19937_64 rng_;
};

// Unimodular integer matrix built from elementary row operations; exactly
// invertible over every ground ring.
template <typename T>
Matrix<T> random_unimodular(SeededGen& gen, int n) {
  Matrix<T> s = Matrix<T>::identity(n);
  int ops = 2 * n + 2;
  for (int t = 0; t < ops; ++t) {
    int i = static_cast<int>(gen.integer(0, n - 1));
    int j = static_cast<int>(gen.integer(0, n - 1));
    if (n == 1) break;
    if (i == j) continue;
    long c = gen.integer(-2, 2);
    if (c == 0) c = 1;
    for (int k = 0; k < n; ++k) s(i, k) = s(i, k) + from_rational<T>(Rational(c)) * s(j, k);
  }
  return s;
}

enum class BlockMode {
  Any,          // arbitrary supported spectra (may be singular)
  Invertible,   // arbitrary nonzero supported spectra
  Reversible,   // paired so that the GL classification is "yes"
  StronglyRev,  // reversible, and over H strong-certifiable (even multiplicities)
  AdReal,       // paired for the Lie-mode classification
};

template <typename T>
std::vector<GaussianRational> eigenvalue_pool(BlockMode mode) {
  constexpr Ring ring = ring_of_v<T>;
  std::vector<GaussianRational> pool;
  auto add = [&](long nr, long dr, long ni, long di) {
    pool.push_back(GaussianRational(Rational(nr, dr), Rational(ni, di)));
  };
  add(1, 1, 0, 1);
  add(-1, 1, 0, 1);
  add(2, 1, 0, 1);
  add(-3, 1, 0, 1);
  add(1, 2, 0, 1);
  add(5, 7, 0, 1);
  if (ring != Ring::R) {
    add(0, 1, 1, 1);   // i
    add(1, 1, 1, 1);   // 1+i
    add(3, 5, 4, 5);   // unit modulus
    add(0, 1, 2, 1);   // 2i
    add(-2, 1, 1, 1);
  }
  if (mode == BlockMode::Any) add(0, 1, 0, 1);
  return pool;
}

inline std::vector<std::pair<Rational, Rational>> real_pair_pool() {
  return {{Rational(0), Rational(1)},
          {Rational(1), Rational(1)},
          {Rational(3, 5), Rational(4, 5)},
          {Rational(-3, 5), Rational(4, 5)},
          {Rational(1), Rational(2)},
          {Rational(-2), Rational(3)}};
}

// Random Jordan block multiset of total dimension max_dim, arranged so the
// requested classification holds by construction.
template <typename T>
std::vector<JordanBlockSpec> random_blocks(SeededGen& gen, int max_dim, BlockMode mode) {
  constexpr Ring ring = ring_of_v<T>;
  std::vector<JordanBlockSpec> blocks;
  auto pool = eigenvalue_pool<T>(mode);
  auto rpool = real_pair_pool();
  int budget = max_dim;
  bool paired = mode == BlockMode::Reversible || mode == BlockMode::StronglyRev || mode == BlockMode::AdReal;

  for (int guard = 0; budget > 0 && guard < 64; ++guard) {
    if (ring == Ring::R && budget >= 2 && gen.integer(0, 3) == 0) {
      auto [mu, nu] = gen.pick(rpool);
      int half = static_cast<int>(gen.integer(1, std::min<long>(2, budget / 2)));
      if (!paired) {
        blocks.push_back(JordanBlockSpec::real_pair(mu, nu, half));
        budget -= 2 * half;
        continue;
      }
      Rational n2 = mu * mu + nu * nu;
      bool self = (mode == BlockMode::AdReal) ? mu.is_zero() : n2 == Rational(1);
      if (self) {
        blocks.push_back(JordanBlockSpec::real_pair(mu, nu, half));
        budget -= 2 * half;
      } else if (4 * half <= budget) {
        blocks.push_back(JordanBlockSpec::real_pair(mu, nu, half));
        if (mode == BlockMode::AdReal)
          blocks.push_back(JordanBlockSpec::real_pair(-mu, nu, half));
        else
          blocks.push_back(JordanBlockSpec::real_pair(mu / n2, nu / n2, half));
        budget -= 4 * half;
      }
      continue;
    }

    GaussianRational lambda = gen.pick(pool);
    if (ring == Ring::R && !lambda.is_real()) continue;
    int size = static_cast<int>(gen.integer(1, std::min<long>(3, budget)));
    if (!paired) {
      blocks.push_back(JordanBlockSpec::standard(lambda, size));
      budget -= size;
      continue;
    }
    if (lambda.is_zero() && mode != BlockMode::AdReal) continue;

    bool self;
    GaussianRational partner;
    if (mode == BlockMode::AdReal) {
      partner = ring == Ring::H ? canonical_class(-lambda) : -lambda;
      self = ring == Ring::H ? lambda.re.is_zero() : lambda.is_zero();
    } else {
      partner = ring == Ring::H ? canonical_class(lambda.inverse()) : lambda.inverse();
      self = ring == Ring::H ? lambda.norm() == Rational(1)
                             : (lambda == GaussianRational(1) || lambda == GaussianRational(-1));
    }
    if (self) {
      // strong certification over H needs unit-modulus non-real classes in
      // identical pairs
      if (mode == BlockMode::StronglyRev && ring == Ring::H && !lambda.is_real()) {
        if (2 * size > budget) continue;
        blocks.push_back(JordanBlockSpec::standard(lambda, size));
        blocks.push_back(JordanBlockSpec::standard(lambda, size));
        budget -= 2 * size;
      } else {
        blocks.push_back(JordanBlockSpec::standard(lambda, size));
        budget -= size;
      }
    } else if (2 * size <= budget) {
      blocks.push_back(JordanBlockSpec::standard(lambda, size));
      blocks.push_back(JordanBlockSpec::standard(partner, size));
      budget -= 2 * size;
    }
  }
  while (budget > 0) {
    blocks.push_back(JordanBlockSpec::standard(GaussianRational(mode == BlockMode::AdReal ? 0 : 1), 1));
    --budget;
  }
  return blocks;
}

// S^-1 J S for a random unimodular S: a matrix with known, supported spectrum.
template <typename T>
Matrix<T> random_similar(SeededGen& gen, const std::vector<JordanBlockSpec>& blocks) {
  Matrix<T> j = assemble<T>(blocks);
  Matrix<T> s = random_unimodular<T>(gen, j.rows());
  return inverse(s) * j * s;
}

template <typename T>
Matrix<T> random_supported_matrix(SeededGen& gen, int max_dim, BlockMode mode) {
  return random_similar<T>(gen, random_blocks<T>(gen, max_dim, mode));
}

template <typename T>
T random_scalar(SeededGen& gen) {
  auto r = [&] { return Rational(gen.integer(-3, 3), gen.integer(1, 2)); };
  if constexpr (std::is_same_v<T, Rational>) return r();
  if constexpr (std::is_same_v<T, GaussianRational>) return GaussianRational(r(), r());
  if constexpr (std::is_same_v<T, Quaternion>) return Quaternion(GaussianRational(r(), r()), GaussianRational(r(), r()));
}

template <typename T>
Vector<T> random_vector(SeededGen& gen, int n) {
  Vector<T> v(n, T(0));
  for (auto& x : v) x = random_scalar<T>(gen);
  return v;
}

template <typename T>
Matrix<T> random_matrix(SeededGen& gen, int rows, int cols) {
  Matrix<T> m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = random_scalar<T>(gen);
  return m;
}

// Strictly upper triangular (hence nilpotent) random matrix.
template <typename T>
Matrix<T> random_nilpotent(SeededGen& gen, int n) {
  Matrix<T> m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) m(i, j) = random_scalar<T>(gen);
  return m;
}

} // namespace revaff

#include "revaff/roots.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "revaff/error.hpp"

namespace revaff {
namespace {

constexpr unsigned long kTrialLimit = 100000;
constexpr int kRhoAttempts = 64;
constexpr unsigned long kRhoIterations = 1u << 21;
constexpr size_t kDivisorCap = 200000;

mpz_class pollard_brent(const mpz_class& n, gmp_randstate_t state) {
  // Brent's cycle variant of Pollard rho; n odd composite, not a prime power.
  for (int attempt = 0; attempt < kRhoAttempts; ++attempt) {
    mpz_class y, c, m(128), g(1), r(1), q(1), x, ys;
    mpz_urandomm(y.get_mpz_t(), state, n.get_mpz_t());
    mpz_urandomm(c.get_mpz_t(), state, n.get_mpz_t());
    if (c == 0) c = 1;
    unsigned long steps = 0;
    while (g == 1 && steps < kRhoIterations) {
      x = y;
      for (mpz_class i = 0; i < r; ++i) y = (y * y + c) % n;
      mpz_class k(0);
      while (k < r && g == 1) {
        ys = y;
        mpz_class lim = std::min(m, mpz_class(r - k));
        for (mpz_class i = 0; i < lim; ++i) {
          y = (y * y + c) % n;
          q = q * abs(x - y) % n;
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
        steps += mpz_get_ui(lim.get_mpz_t());
      }
      r *= 2;
    }
    if (g == n) {
      // backtrack one step at a time
      g = 1;
      while (g == 1) {
        ys = (ys * ys + c) % n;
        mpz_gcd(g.get_mpz_t(), mpz_class(abs(x - ys)).get_mpz_t(), n.get_mpz_t());
      }
    }
    if (g != n && g != 1) return g;
  }
  throw_domain("SpectrumNotSupported", "integer factorization cap exceeded for " + n.get_str());
}

void factor_into(mpz_class n, std::map<mpz_class, int>& out, gmp_randstate_t state) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
    out[n] += 1;
    return;
  }
  // peel perfect powers so rho only sees products of distinct primes
  if (mpz_perfect_power_p(n.get_mpz_t())) {
    for (unsigned long e = 2; e <= mpz_sizeinbase(n.get_mpz_t(), 2); ++e) {
      mpz_class root, rem;
      mpz_rootrem(root.get_mpz_t(), rem.get_mpz_t(), n.get_mpz_t(), e);
      if (rem == 0) {
        std::map<mpz_class, int> base;
        factor_into(root, base, state);
        for (auto& [p, k] : base) out[p] += k * static_cast<int>(e);
        return;
      }
    }
  }
  mpz_class d = pollard_brent(n, state);
  factor_into(d, out, state);
  factor_into(n / d, out, state);
}

struct GaussInt {
  mpz_class re, im;

  bool is_zero() const { return re == 0 && im == 0; }
  GaussInt conj() const { return {re, -im}; }
  mpz_class norm() const { return re * re + im * im; }

  friend GaussInt operator*(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend bool operator==(const GaussInt& a, const GaussInt& b) { return a.re == b.re && a.im == b.im; }
  friend bool operator<(const GaussInt& a, const GaussInt& b) {
    if (a.re != b.re) return a.re < b.re;
    return a.im < b.im;
  }
};

mpz_class round_div(const mpz_class& a, const mpz_class& b) {
  mpz_class q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  if (2 * r >= b) q += 1;
  return q;
}

// Nearest-lattice-point division making Z[i] Euclidean.
GaussInt gauss_div_round(const GaussInt& a, const GaussInt& b) {
  mpz_class n = b.norm();
  GaussInt num = a * b.conj();
  return {round_div(num.re, n), round_div(num.im, n)};
}

bool gauss_divides(const GaussInt& d, const GaussInt& a, GaussInt* quot = nullptr) {
  mpz_class n = d.norm();
  GaussInt num = a * d.conj();
  if (num.re % n != 0 || num.im % n != 0) return false;
  if (quot) *quot = {num.re / n, num.im / n};
  return true;
}

GaussInt gauss_gcd(GaussInt a, GaussInt b) {
  while (!b.is_zero()) {
    GaussInt q = gauss_div_round(a, b);
    GaussInt r{a.re - (q * b).re, a.im - (q * b).im};
    a = b;
    b = r;
  }
  return a;
}

// Square root of -1 modulo a prime p = 1 (mod 4).
mpz_class sqrt_minus_one(const mpz_class& p) {
  mpz_class e = (p - 1) / 4, half = (p - 1) / 2;
  for (mpz_class n = 2; n < p; ++n) {
    mpz_class t;
    mpz_powm(t.get_mpz_t(), n.get_mpz_t(), half.get_mpz_t(), p.get_mpz_t());
    if (t == p - 1) {
      mpz_class a;
      mpz_powm(a.get_mpz_t(), n.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
      return a;
    }
  }
  throw_internal("no quadratic non-residue found mod " + p.get_str());
}

// Gaussian prime factorization of c != 0, up to units.
std::vector<std::pair<GaussInt, int>> gauss_factor(const GaussInt& c) {
  std::vector<std::pair<GaussInt, int>> result;
  mpz_class n = c.norm();
  if (n == 1) return result;
  auto rational_primes = factor_integer(n);
  GaussInt rest = c;
  for (const auto& [p, norm_exp] : rational_primes) {
    (void)norm_exp; // exponents are recovered by exact division below
    std::vector<GaussInt> candidates;
    if (p == 2) {
      candidates.push_back({1, 1});
    } else if (p % 4 == 3) {
      candidates.push_back({p, 0});
    } else {
      mpz_class a = sqrt_minus_one(p);
      GaussInt pi = gauss_gcd({p, 0}, {a, 1});
      candidates.push_back(pi);
      candidates.push_back(pi.conj());
    }
    for (const auto& pi : candidates) {
      int e = 0;
      GaussInt q;
      while (gauss_divides(pi, rest, &q)) {
        rest = q;
        ++e;
      }
      if (e > 0) result.push_back({pi, e});
    }
  }
  require_internal(rest.norm() == 1, "gaussian factorization left a non-unit");
  return result;
}

std::vector<GaussInt> gauss_divisors(const GaussInt& c) {
  auto factors = gauss_factor(c);
  std::vector<GaussInt> divisors{{1, 0}};
  for (const auto& [pi, e] : factors) {
    std::vector<GaussInt> next;
    next.reserve(divisors.size() * (e + 1));
    for (const auto& d : divisors) {
      GaussInt acc = d;
      next.push_back(acc);
      for (int k = 1; k <= e; ++k) {
        acc = acc * pi;
        next.push_back(acc);
      }
    }
    divisors = std::move(next);
    if (divisors.size() > kDivisorCap)
      throw_domain("SpectrumNotSupported", "divisor enumeration cap exceeded");
  }
  return divisors;
}

struct GaussLess {
  bool operator()(const GaussianRational& a, const GaussianRational& b) const { return lex_less(a, b); }
};

std::string rational_term(const Rational& r) {
  return r.str();
}

} // namespace

std::vector<std::pair<mpz_class, int>> factor_integer(mpz_class n) {
  require_internal(n > 0, "factor_integer wants n > 0");
  std::map<mpz_class, int> acc;
  for (unsigned long p = 2; p <= kTrialLimit && n > 1; p += (p == 2 ? 1 : 2)) {
    if (mpz_cmp_ui(n.get_mpz_t(), p * p) < 0) break; // remaining n is prime
    if (mpz_fdiv_ui(n.get_mpz_t(), p) != 0) continue;
    while (mpz_fdiv_ui(n.get_mpz_t(), p) == 0) {
      acc[mpz_class(p)] += 1;
      n /= p;
    }
  }
  if (n > 1) {
    if (mpz_cmp_ui(n.get_mpz_t(), kTrialLimit * kTrialLimit) < 0 ||
        mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
      acc[n] += 1;
    } else {
      gmp_randstate_t state;
      gmp_randinit_mt(state);
      gmp_randseed_ui(state, 0x5eedUL);
      factor_into(n, acc, state);
      gmp_randclear(state);
    }
  }
  return {acc.begin(), acc.end()};
}

std::string gaussian_str(const GaussianRational& z) {
  if (z.is_real()) return rational_term(z.re);
  std::string s;
  if (!z.re.is_zero()) s += rational_term(z.re) + (z.im.sign() > 0 ? "+" : "-");
  else if (z.im.sign() < 0) s += "-";
  s += rational_term(z.im.abs()) + "i";
  return s;
}

std::string poly_str(const Poly<GaussianRational>& p) {
  if (p.is_zero()) return "0";
  std::string s;
  for (int k = p.degree(); k >= 0; --k) {
    const GaussianRational& c = p.coeff(k);
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    std::string cs = gaussian_str(c);
    if (k == 0) {
      s += cs;
    } else {
      if (cs != "1") s += (cs == "-1" ? "-" : "(" + cs + ")*");
      s += k == 1 ? "x" : "x^" + std::to_string(k);
    }
  }
  return s;
}

RootList gaussian_roots(const Poly<GaussianRational>& p) {
  require_internal(!p.is_zero(), "root search on the zero polynomial");
  RootList out;
  Poly<GaussianRational> s = squarefree_part(p);

  std::set<GaussianRational, GaussLess> candidates;
  // strip roots at zero
  if (s.degree() >= 1 && s.coeff(0).is_zero()) candidates.insert(GaussianRational());
  Poly<GaussianRational> stripped = s;
  while (stripped.degree() >= 1 && stripped.coeff(0).is_zero()) {
    Poly<GaussianRational> q;
    require_internal(stripped.deflate(GaussianRational(), q), "deflation at zero failed");
    stripped = q;
  }

  if (stripped.degree() >= 1) {
    // clear denominators to a Z[i] polynomial
    mpz_class lcm(1);
    for (const auto& c : stripped.coeffs()) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re.denominator().get_mpz_t());
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.im.denominator().get_mpz_t());
    }
    std::vector<GaussInt> f(stripped.coeffs().size());
    for (size_t k = 0; k < f.size(); ++k) {
      const GaussianRational& c = stripped.coeff(static_cast<int>(k));
      f[k] = {mpz_class(c.re.numerator() * (lcm / c.re.denominator())),
              mpz_class(c.im.numerator() * (lcm / c.im.denominator()))};
    }
    const GaussInt units[4] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
    auto g_div = gauss_divisors(f.front());
    auto h_div = gauss_divisors(f.back());
    if (g_div.size() * h_div.size() * 4 > kDivisorCap)
      throw_domain("SpectrumNotSupported", "root candidate enumeration cap exceeded");
    for (const auto& g : g_div)
      for (const auto& h : h_div)
        for (const auto& u : units) {
          GaussInt num = g * u;
          mpz_class hn = h.norm();
          GaussInt scaled = num * h.conj();
          candidates.insert(GaussianRational(Rational(scaled.re, hn), Rational(scaled.im, hn)));
        }
  }

  Poly<GaussianRational> residual = p.monic();
  for (const auto& z : candidates) {
    if (!is_zero(s.eval(z))) continue;
    int mult = 0;
    Poly<GaussianRational> q;
    while (residual.deflate(z, q)) {
      residual = q;
      ++mult;
    }
    require_internal(mult > 0, "squarefree root vanished in the original polynomial");
    out.roots.push_back({z, mult});
  }
  out.residual = residual;
  return out;
}

} // namespace revaff

#include <doctest.h>

#include "revaff/jordan.hpp"
#include "revaff/roots.hpp"

using namespace revaff;

namespace {
Poly<GaussianRational> from_real(std::initializer_list<long> coeffs) {
  std::vector<GaussianRational> c;
  for (long x : coeffs) c.push_back(GaussianRational(Rational(x)));
  return Poly<GaussianRational>(std::move(c));
}
} // namespace

TEST_CASE("polynomial division and gcd") {
  // (x-1)^2 (x+2) = x^3 - 3x + 2
  auto p = from_real({2, -3, 0, 1});
  auto d = from_real({-1, 1});
  auto [q, r] = p.divmod(d);
  CHECK(r.is_zero());
  CHECK(q == from_real({-2, 1, 1}));
  CHECK(gcd(p, p.derivative()) == from_real({-1, 1}));
  CHECK(squarefree_part(p) == from_real({-2, 1, 1}));
}

TEST_CASE("integer factorization") {
  auto f1 = factor_integer(mpz_class(1));
  CHECK(f1.empty());
  auto f2 = factor_integer(mpz_class(360));
  REQUIRE(f2.size() == 3);
  CHECK(f2[0] == std::pair<mpz_class, int>{mpz_class(2), 3});
  CHECK(f2[1] == std::pair<mpz_class, int>{mpz_class(3), 2});
  CHECK(f2[2] == std::pair<mpz_class, int>{mpz_class(5), 1});
  // semiprime beyond the trial-division bound
  mpz_class a("1000003"), b("1000033");
  auto f3 = factor_integer(a * b);
  REQUIRE(f3.size() == 2);
  CHECK(f3[0].first == a);
  CHECK(f3[1].first == b);
}

TEST_CASE("gaussian rational roots with multiplicity") {
  auto rl = gaussian_roots(from_real({2, -3, 0, 1})); // (x-1)^2 (x+2)
  REQUIRE(rl.roots.size() == 2);
  CHECK(rl.roots[0].first == GaussianRational(-2));
  CHECK(rl.roots[0].second == 1);
  CHECK(rl.roots[1].first == GaussianRational(1));
  CHECK(rl.roots[1].second == 2);
  CHECK(rl.residual.degree() == 0);

  auto ri = gaussian_roots(from_real({1, 0, 1})); // x^2 + 1
  REQUIRE(ri.roots.size() == 2);
  CHECK(ri.roots[0].first == -gaussian_i());
  CHECK(ri.roots[1].first == gaussian_i());

  auto r2 = gaussian_roots(from_real({2, 0, 1})); // x^2 + 2: no Q(i) roots
  CHECK(r2.roots.empty());
  CHECK(r2.residual.degree() == 2);
  CHECK(poly_str(r2.residual) == "x^2 + 2");
}

TEST_CASE("roots of polynomials with non-real coefficients") {
  GaussianRational z1(Rational(1), Rational(1)), z2(Rational(0), Rational(2));
  Poly<GaussianRational> p =
      Poly<GaussianRational>({-z1, GaussianRational(1)}) * Poly<GaussianRational>({-z2, GaussianRational(1)});
  auto rl = gaussian_roots(p);
  REQUIRE(rl.roots.size() == 2);
  CHECK(((rl.roots[0].first == z1 && rl.roots[1].first == z2) || (rl.roots[0].first == z2 && rl.roots[1].first == z1)));
  // rational root with denominator: (2x - 1) -> root 1/2
  auto rh = gaussian_roots(from_real({-1, 2}));
  REQUIRE(rh.roots.size() == 1);
  CHECK(rh.roots[0].first == GaussianRational(Rational(1, 2)));
  // root at zero
  auto rz = gaussian_roots(from_real({0, 0, 1}));
  REQUIRE(rz.roots.size() == 1);
  CHECK(rz.roots[0].first == GaussianRational(0));
  CHECK(rz.roots[0].second == 2);
}

TEST_CASE("characteristic polynomials") {
  CHECK(char_poly(jordan_block(Rational(1), 2)) == from_real({1, -2, 1}));
  Matrix<Rational> rot{{Rational(0), Rational(-1)}, {Rational(1), Rational(0)}};
  CHECK(char_poly(rot) == from_real({1, 0, 1}));
  Matrix<Quaternion> qj(1, 1);
  qj(0, 0) = quat_j();
  CHECK(char_poly(qj) == from_real({1, 0, 1})); // x^2 + 1 via the complex model
}

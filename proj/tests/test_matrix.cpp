#include <doctest.h>

#include "revaff/embed.hpp"
#include "revaff/omega.hpp"
#include "revaff/oracle.hpp"

using namespace revaff;

namespace {
Matrix<Rational> rq(std::initializer_list<std::initializer_list<long>> rows) {
  Matrix<Rational> m(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (long x : r) m(i, j++) = Rational(x);
    ++i;
  }
  return m;
}
} // namespace

TEST_CASE("matrix product basics") {
  auto a = rq({{1, 2}, {3, 4}});
  CHECK(Matrix<Rational>::identity(2) * a == a);

  Matrix<Quaternion> di(1, 1), dj(1, 1);
  di(0, 0) = quat_i();
  dj(0, 0) = quat_j();
  CHECK((di * dj)(0, 0) == quat_k());

  // permutation conjugation of diag(2, 1/2)
  Matrix<Rational> p = rq({{0, 1}, {1, 0}});
  Matrix<Rational> d(2, 2);
  d(0, 0) = Rational(2);
  d(1, 1) = Rational(1, 2);
  Matrix<Rational> want(2, 2);
  want(0, 0) = Rational(1, 2);
  want(1, 1) = Rational(2);
  CHECK(p * d * p == want);

  CHECK_THROWS_AS(a * rq({{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}), Error);
}

TEST_CASE("inverse of a unipotent Jordan block is the alternating triangle") {
  auto j13 = jordan_block(Rational(1), 3);
  auto inv = inverse(j13);
  CHECK(inv == rq({{1, -1, 1}, {0, 1, -1}, {0, 0, 1}}));
  CHECK(inv * j13 == Matrix<Rational>::identity(3));
  CHECK(inverse(inv) == j13);

  Matrix<Quaternion> di(1, 1);
  di(0, 0) = quat_i();
  CHECK(inverse(di)(0, 0) == -quat_i());

  CHECK(inverse(rq({{0, 1}, {-1, 0}})) == rq({{0, -1}, {1, 0}}));
  CHECK_THROWS_AS(inverse(rq({{1, 1}, {1, 1}})), Error);
}

TEST_CASE("rank over rationals and the paper's unipotent example") {
  CHECK(rank(jordan_block(Rational(0), 4)) == 3);
  CHECK(rank(Matrix<Rational>::zero(3, 3)) == 0);
  // rank(J(1,6)^-1 + Omega(1,6)) = 3, with matching diagonals of B + I
  auto a_inv = inverse(jordan_block(Rational(1), 6));
  auto b = omega(Rational(1), 6);
  CHECK(rank(a_inv + b) == 3);
  CHECK(rank(b + Matrix<Rational>::identity(6)) == 3);
  for (int i = 0; i < 6; ++i) CHECK((a_inv + b)(i, i) == (b + Matrix<Rational>::identity(6))(i, i));
}

TEST_CASE("solve reports the full solution set") {
  auto id = Matrix<Rational>::identity(2);
  auto r1 = solve(id, Vector<Rational>{Rational(1), Rational(2)});
  CHECK(r1.consistent);
  CHECK(r1.particular == Vector<Rational>{Rational(1), Rational(2)});
  CHECK(r1.kernel.empty());

  auto a = rq({{0, -1}, {0, 0}});
  auto r2 = solve(a, Vector<Rational>{Rational(5), Rational(0)});
  CHECK(r2.consistent);
  CHECK(r2.particular == Vector<Rational>{Rational(0), Rational(-5)});
  REQUIRE(r2.kernel.size() == 1);
  CHECK(r2.kernel[0] == Vector<Rational>{Rational(1), Rational(0)});

  auto r3 = solve(Matrix<Rational>::zero(2, 2), Vector<Rational>{Rational(1), Rational(0)});
  CHECK_FALSE(r3.consistent);

  SeededGen gen(7);
  for (int t = 0; t < 25; ++t) {
    auto m = random_matrix<Quaternion>(gen, 3, 4);
    auto sol = solve(m, Vector<Quaternion>(3, Quaternion(0)));
    CHECK(rank(m) + static_cast<int>(sol.kernel.size()) == m.cols());
    for (const auto& k : sol.kernel) CHECK(is_zero_vector(m * k));
  }
}

TEST_CASE("phi embedding") {
  Matrix<Quaternion> qj(1, 1), qi(1, 1);
  qj(0, 0) = quat_j();
  qi(0, 0) = quat_i();
  CHECK(psi_embed(phi_embed(qj)) == psi_embed(Matrix<GaussianRational>{{GaussianRational(0), GaussianRational(1)},
                                                                       {GaussianRational(-1), GaussianRational(0)}}));
  auto pi = phi_embed(qi);
  CHECK(pi(0, 0) == gaussian_i());
  CHECK(pi(1, 1) == -gaussian_i());
  CHECK(pi(0, 1) == GaussianRational(0));
  CHECK(phi_embed(qi) * phi_embed(qj) == phi_embed(qi * qj));

  SeededGen gen(11);
  for (int t = 0; t < 20; ++t) {
    auto a = random_matrix<Quaternion>(gen, 2, 2);
    auto b = random_matrix<Quaternion>(gen, 2, 2);
    CHECK(phi_embed(a * b) == phi_embed(a) * phi_embed(b));
    CHECK(phi_embed(a + b) == phi_embed(a) + phi_embed(b));
  }
  CHECK(phi_embed(Matrix<Quaternion>::identity(3)) == Matrix<GaussianRational>::identity(6));
}

TEST_CASE("psi embedding") {
  Matrix<GaussianRational> zi(1, 1);
  zi(0, 0) = gaussian_i();
  CHECK(psi_embed(zi) == rq({{0, 1}, {-1, 0}}));

  // psi(J(mu + i nu, n)) is the real-pair Jordan block
  auto jr = psi_embed(jordan_block(GaussianRational(Rational(2), Rational(3)), 2));
  CHECK(jr == rq({{2, 3, 1, 0}, {-3, 2, 0, 1}, {0, 0, 2, 3}, {0, 0, -3, 2}}));

  SeededGen gen(13);
  for (int t = 0; t < 20; ++t) {
    auto a = random_matrix<GaussianRational>(gen, 2, 2);
    auto b = random_matrix<GaussianRational>(gen, 2, 2);
    CHECK(psi_embed(a * b) == psi_embed(a) * psi_embed(b));
  }
}

TEST_CASE("chi identification is phi-compatible") {
  SeededGen gen(17);
  for (int t = 0; t < 20; ++t) {
    auto a = random_matrix<Quaternion>(gen, 3, 3);
    auto v = random_vector<Quaternion>(gen, 3);
    CHECK(chi_push(a * v) == phi_embed(a) * chi_push(v));
    CHECK(chi_pull(chi_push(v)) == v);
    // chi(v z) = z chi(v) for complex z
    GaussianRational z = random_scalar<GaussianRational>(gen);
    Vector<Quaternion> vz = v;
    for (auto& x : vz) x = x * Quaternion(z);
    Vector<GaussianRational> zu = chi_push(v);
    for (auto& x : zu) x = z * x;
    CHECK(chi_push(vz) == zu);
  }
}

TEST_CASE("quaternionic determinant and trace through phi") {
  Matrix<Quaternion> qj(1, 1);
  qj(0, 0) = quat_j();
  auto [dj, tj] = det_trace_h(qj);
  CHECK(dj == GaussianRational(1));
  CHECK(tj == GaussianRational(0));

  auto [di, ti] = det_trace_h(Matrix<Quaternion>::identity(2));
  CHECK(di == GaussianRational(1));
  CHECK(ti == GaussianRational(4));

  Matrix<Quaternion> d2(1, 1);
  d2(0, 0) = Quaternion(2);
  auto [dd, td] = det_trace_h(d2);
  CHECK(dd == GaussianRational(4));
  CHECK(td == GaussianRational(4));
}

TEST_CASE("direct sums") {
  CHECK(direct_sum<Rational>({jordan_block(Rational(1), 1)}) == rq({{1}}));
  Matrix<Rational> d(2, 2);
  d(0, 0) = Rational(2);
  d(1, 1) = Rational(1, 2);
  CHECK(direct_sum<Rational>({jordan_block(Rational(2), 1), jordan_block(Rational(1, 2), 1)}) == d);
  CHECK(direct_sum<Rational>({Matrix<Rational>::identity(1), Matrix<Rational>::identity(1), Matrix<Rational>::identity(1)}) ==
        Matrix<Rational>::identity(3));
}

TEST_CASE("nilpotent exponentials") {
  CHECK(nilpotent_exp(Matrix<Rational>::zero(3, 3)) == Matrix<Rational>::identity(3));
  CHECK(nilpotent_exp(jordan_block(Rational(0), 2)) == rq({{1, 1}, {0, 1}}));
  Matrix<Rational> e3 = nilpotent_exp(jordan_block(Rational(0), 3));
  Matrix<Rational> want(3, 3);
  want(0, 0) = want(1, 1) = want(2, 2) = Rational(1);
  want(0, 1) = want(1, 2) = Rational(1);
  want(0, 2) = Rational(1, 2);
  CHECK(e3 == want);
  CHECK_THROWS_AS(nilpotent_exp(rq({{1, 0}, {0, 1}})), Error);

  // psi(exp P) = exp(psi P) for nilpotent P
  SeededGen gen(19);
  for (int t = 0; t < 10; ++t) {
    auto p = random_nilpotent<GaussianRational>(gen, 4);
    CHECK(psi_embed(nilpotent_exp(p)) == nilpotent_exp(psi_embed(p)));
  }
}

#include <doctest.h>

#include "revaff/affine.hpp"
#include "revaff/oracle.hpp"

using namespace revaff;

namespace {
AffineMap<Rational> aff(std::initializer_list<std::initializer_list<long>> rows, std::initializer_list<long> t) {
  Matrix<Rational> a(static_cast<int>(rows.size()), static_cast<int>(rows.begin()->size()));
  int i = 0;
  for (const auto& r : rows) {
    int j = 0;
    for (long x : r) a(i, j++) = Rational(x);
    ++i;
  }
  Vector<Rational> v;
  for (long x : t) v.push_back(Rational(x));
  return {a, v};
}
} // namespace

TEST_CASE("composition and inversion") {
  auto g = AffineMap<Rational>::identity(2);
  g.v = {Rational(1), Rational(2)};
  auto h = AffineMap<Rational>::identity(2);
  h.v = {Rational(3), Rational(-1)};
  auto gh = compose(g, h);
  CHECK(gh.A == Matrix<Rational>::identity(2));
  CHECK(gh.v == Vector<Rational>{Rational(4), Rational(1)});

  auto k = aff({{2}}, {3});
  auto ki = inverse(k);
  CHECK(ki.A(0, 0) == Rational(1, 2));
  CHECK(ki.v[0] == Rational(-3, 2));
  CHECK(compose(k, ki) == AffineMap<Rational>::identity(1));

  // (I, v) = (-I, 0) * (-I, -v)
  auto m1 = aff({{-1, 0}, {0, -1}}, {0, 0});
  auto m2 = aff({{-1, 0}, {0, -1}}, {-5, -7});
  CHECK(compose(m1, m2) == aff({{1, 0}, {0, 1}}, {5, 7}));
}

TEST_CASE("theta and rho embeddings") {
  CHECK(theta_embed(aff({{1}}, {5})) == Matrix<Rational>{{Rational(1), Rational(5)}, {Rational(0), Rational(1)}});
  AffLieElement<Rational> e{Matrix<Rational>::zero(1, 1), {Rational(1)}};
  CHECK(rho_embed(e) == Matrix<Rational>{{Rational(0), Rational(1)}, {Rational(0), Rational(0)}});

  SeededGen gen(6001);
  for (int t = 0; t < 12; ++t) {
    auto a = random_supported_matrix<Rational>(gen, 2, BlockMode::Invertible);
    auto b = random_supported_matrix<Rational>(gen, 2, BlockMode::Invertible);
    AffineMap<Rational> g{a, random_vector<Rational>(gen, 2)};
    AffineMap<Rational> h{b, random_vector<Rational>(gen, 2)};
    CHECK(theta_embed(compose(g, h)) == theta_embed(g) * theta_embed(h));
  }
}

TEST_CASE("affine exponential through rho") {
  AffLieElement<Rational> t{Matrix<Rational>::zero(2, 2), {Rational(1), Rational(4)}};
  auto gt = aff_exp(t);
  CHECK(gt.A == Matrix<Rational>::identity(2));
  CHECK(gt.v == Vector<Rational>{Rational(1), Rational(4)});

  AffLieElement<Rational> n{jordan_block(Rational(0), 2), {Rational(0), Rational(0)}};
  CHECK(aff_exp(n).A == jordan_block(Rational(1), 2));

  AffLieElement<Rational> bad{Matrix<Rational>::identity(2), {Rational(0), Rational(0)}};
  CHECK_THROWS_AS(aff_exp(bad), Error);

  SeededGen gen(6002);
  for (int t2 = 0; t2 < 10; ++t2) {
    AffLieElement<Rational> e{random_nilpotent<Rational>(gen, 3), random_vector<Rational>(gen, 3)};
    CHECK(theta_embed(aff_exp(e)) == nilpotent_exp(rho_embed(e)));
  }
}

TEST_CASE("normal form worked examples") {
  auto g1 = aff({{2}}, {3});
  auto nf1 = normal_form(g1);
  CHECK(nf1.result == aff({{2}}, {0}));
  CHECK(nf1.conjugator == aff({{1}}, {3}));
  CHECK(conjugate(nf1.conjugator, g1) == nf1.result);

  auto g2 = AffineMap<Rational>::identity(3);
  g2.v = {Rational(1), Rational(2), Rational(3)};
  auto nf2 = normal_form(g2);
  CHECK(nf2.result == g2);
  CHECK(nf2.t_dim == 0);

  auto g3 = aff({{2, 0}, {0, 1}}, {1, 7});
  auto nf3 = normal_form(g3);
  CHECK(nf3.result.A == g3.A);
  CHECK(nf3.result.v == Vector<Rational>{Rational(0), Rational(7)});
  CHECK(nf3.t_dim == 1);
}

TEST_CASE("affine classification mirrors the linear part") {
  auto g1 = AffineMap<Rational>::identity(2);
  g1.v = {Rational(4), Rational(-1)};
  auto r1 = aff_classify(g1);
  CHECK(r1.reversible == Flag::Yes);
  CHECK(r1.strongly_reversible == Flag::Yes);
  REQUIRE(r1.witness.has_value());
  CHECK(r1.witness->is_involution);

  auto r2_in = aff({{3}}, {0});
  auto r2 = aff_classify(r2_in);
  CHECK(r2.reversible == Flag::No);
  CHECK_FALSE(r2.witness.has_value());

  Matrix<Quaternion> qi(1, 1);
  qi(0, 0) = quat_i();
  AffineMap<Quaternion> gh{qi, Vector<Quaternion>{Quaternion(0)}};
  auto r3 = aff_classify(gh);
  CHECK(r3.reversible == Flag::Yes);
  CHECK(r3.strongly_reversible == Flag::No);
  REQUIRE(r3.witness.has_value());
  CHECK(r3.witness->verified);
  CHECK_FALSE(r3.witness->is_involution);
}

TEST_CASE("affine reverser worked examples") {
  // g = (J(1,2), v): B = diag(1,-1), w = (0, v2 - 2 v1)
  auto g = AffineMap<Rational>{jordan_block(Rational(1), 2), {Rational(3), Rational(1)}};
  auto w = aff_reverser(g);
  CHECK(w.element.A == Matrix<Rational>{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}});
  CHECK(w.element.v == Vector<Rational>{Rational(0), Rational(-5)});
  CHECK(w.verified);

  CHECK_THROWS_AS(aff_reverser(aff({{2}}, {0})), Error);

  auto id2 = AffineMap<Rational>::identity(2);
  id2.v = {Rational(5), Rational(6)};
  auto wid = aff_reverser(id2);
  CHECK(wid.element == aff({{-1, 0}, {0, -1}}, {0, 0}));
}

TEST_CASE("Lie-level nilpotent block reverser") {
  auto h = detail::nilpotent_block_lie_reverser<Rational>(2, {Rational(7), Rational(2)});
  CHECK(h.A == Matrix<Rational>{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}});
  CHECK(h.v == Vector<Rational>{Rational(0), Rational(-14)}); // w2 = -2 x1
  // conditions: B N B^-1 = -N and N w = -(B + I) x
  auto n = jordan_block(Rational(0), 2);
  CHECK(h.A * n * inverse(h.A) == -n);
  CHECK(is_affine_involution(h));
}

TEST_CASE("affine strong reverser") {
  auto id2 = AffineMap<Rational>::identity(2);
  id2.v = {Rational(5), Rational(6)};
  auto w = aff_strong_reverser(id2);
  CHECK(w.element == aff({{-1, 0}, {0, -1}}, {0, 0}));
  CHECK(w.is_involution);

  // the 6x6 unipotent block regression: h^2 = id and h g h^-1 = g^-1
  Vector<Rational> v;
  for (long i = 1; i <= 6; ++i) v.push_back(Rational(i));
  AffineMap<Rational> g{jordan_block(Rational(1), 6), v};
  auto h = aff_strong_reverser(g);
  CHECK(h.is_involution);
  CHECK(h.verified);
  CHECK(conjugate(h.element, g) == inverse(g));
  CHECK(verify_involution(h.element).holds);

  // mixed spectrum with nonzero unipotent translation
  auto mixed = aff({{2, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}}, {5, 3, 1, 2});
  mixed.A(1, 1) = Rational(1, 2);
  auto hm = aff_strong_reverser(mixed);
  CHECK(hm.is_involution);
  CHECK(conjugate(hm.element, mixed) == inverse(mixed));
}

TEST_CASE("four involutions") {
  auto g1 = AffineMap<Rational>::identity(2);
  g1.v = {Rational(2), Rational(-3)};
  auto f1 = four_involutions(g1);
  CHECK(compose(compose(f1[0], f1[1]), compose(f1[2], f1[3])) == g1);
  for (const auto& f : f1) CHECK(is_affine_involution(f));

  auto g2 = aff({{2, 0}, {0, 0}}, {0, 0});
  g2.A(1, 1) = Rational(1, 2);
  auto f2 = four_involutions(g2);
  CHECK(compose(compose(f2[0], f2[1]), compose(f2[2], f2[3])) == g2);

  // determinant -1, non-reversible linear part: the heuristic path
  auto g3 = aff({{2, 0}, {0, 0}}, {1, 1});
  g3.A(1, 1) = Rational(-1, 2);
  CHECK(determinant(g3.A) == Rational(-1));
  auto f3 = four_involutions(g3);
  CHECK(compose(compose(f3[0], f3[1]), compose(f3[2], f3[3])) == g3);
  for (const auto& f : f3) CHECK(is_affine_involution(f));

  // determinant far from a unit: rejected up front
  CHECK_THROWS_AS(four_involutions(aff({{3}}, {0})), Error);

  // over H: involutions in Aff(1,H) have linear part +-1 only, so the scalar
  // i cannot be factored; the heuristic must fail loudly, not wrongly
  Matrix<Quaternion> qa(1, 1);
  qa(0, 0) = quat_i();
  AffineMap<Quaternion> gq{qa, Vector<Quaternion>{Quaternion(2)}};
  CHECK_THROWS_WITH_AS(four_involutions(gq), doctest::Contains("UnsupportedFactorization"), Error);

  // with even class multiplicity the quaternionic factorization goes through
  Matrix<Quaternion> qb(2, 2);
  qb(0, 0) = qb(1, 1) = quat_i();
  AffineMap<Quaternion> gq2{qb, Vector<Quaternion>{Quaternion(2), quat_j()}};
  auto fq = four_involutions(gq2);
  CHECK(compose(compose(fq[0], fq[1]), compose(fq[2], fq[3])) == gq2);
  for (const auto& f : fq) CHECK(is_affine_involution(f));
}

TEST_CASE("Theorem-style consistency: affine flags equal linear flags") {
  SeededGen gen(6003);
  auto run = [&](auto tag, int dim, int count) {
    using T = decltype(tag);
    for (int t = 0; t < count; ++t) {
      BlockMode mode = gen.coin() ? BlockMode::Invertible : BlockMode::Reversible;
      Matrix<T> a = random_supported_matrix<T>(gen, dim, mode);
      AffineMap<T> g{a, random_vector<T>(gen, a.rows())};
      auto ar = aff_classify(g);
      auto lr = classify_reversible(a, jordan_form(a));
      CHECK(ar.reversible == lr.primary);
      CHECK(ar.strongly_reversible == lr.strong);
      if constexpr (ring_of_v<T> != Ring::H) CHECK(ar.reversible == ar.strongly_reversible);
      if (ar.witness) CHECK(verify_reverser(g, ar.witness->element).holds);
    }
  };
  run(Rational(), 4, 12);
  run(GaussianRational(), 3, 8);
  run(Quaternion(), 3, 8);
}

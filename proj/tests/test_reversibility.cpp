#include <doctest.h>

#include "revaff/oracle.hpp"
#include "revaff/reversibility.hpp"

using namespace revaff;

namespace {
template <typename T>
ReversibilityReport<T> gl(const Matrix<T>& a) {
  return classify_reversible(a, jordan_form(a));
}
template <typename T>
ReversibilityReport<T> lie(const Matrix<T>& a) {
  return classify_ad_real(a, jordan_form(a));
}
Matrix<Quaternion> scalar_h(const Quaternion& q) {
  Matrix<Quaternion> m(1, 1);
  m(0, 0) = q;
  return m;
}
} // namespace

TEST_CASE("Ad-reality classification") {
  auto z3 = jordan_block(Rational(0), 3);
  auto r1 = lie(z3);
  CHECK(r1.primary == Flag::Yes);
  REQUIRE(r1.pairing.entries.size() == 1);
  CHECK_FALSE(r1.pairing.entries[0].is_pair);
  CHECK(r1.pairing.entries[0].rule == "zero singleton");

  Matrix<Rational> pm(2, 2);
  pm(0, 0) = Rational(1);
  pm(1, 1) = Rational(-1);
  auto r2 = lie(pm);
  CHECK(r2.primary == Flag::Yes);
  REQUIRE(r2.pairing.entries.size() == 1);
  CHECK(r2.pairing.entries[0].is_pair);
  CHECK(r2.pairing.entries[0].rule == "lambda<->-lambda");

  auto r3 = lie(scalar_h(quat_i()));
  CHECK(r3.primary == Flag::Yes);
  CHECK(r3.strong == Flag::No); // the 1x1 purely imaginary obstruction
  CHECK(r3.witness.has_value());
  CHECK(r3.witness->verified);
  CHECK_FALSE(r3.witness->is_involution);
  // the scalar j is a valid Ad-reverser of (i)
  CHECK(verify_ad_reverser(scalar_h(quat_i()), scalar_h(quat_j())).holds);

  // J(3,1) alone is not Ad-real
  auto r4 = lie(jordan_block(Rational(3), 1));
  CHECK(r4.primary == Flag::No);
  CHECK_FALSE(r4.witness.has_value());
}

TEST_CASE("strong Ad-reality witnesses") {
  // J(0,5) over C: involutive witness diag(1,-1,1,-1,1)
  auto z5 = jordan_block(GaussianRational(0), 5);
  auto r = classify_strongly_ad_real(z5, jordan_form(z5));
  CHECK(r.strong == Flag::Yes);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->is_involution);
  CHECK(r.witness->element == alternating_diag<GaussianRational>(5));

  // J(i,2) + J(i,2) over H: strongly Ad-real via the j-block construction
  auto x = direct_sum<Quaternion>({jordan_block(Quaternion(gaussian_i()), 2), jordan_block(Quaternion(gaussian_i()), 2)});
  auto rh = classify_strongly_ad_real(x, jordan_form(x));
  CHECK(rh.primary == Flag::Yes);
  CHECK(rh.strong == Flag::Yes);
  REQUIRE(rh.witness.has_value());
  CHECK(rh.witness->is_involution);
  CHECK(verify_ad_reverser(x, rh.witness->element).holds);

  // odd multiplicity within a larger matrix stays unknown
  auto x3 = direct_sum<Quaternion>(
      {jordan_block(Quaternion(gaussian_i()), 1), jordan_block(Quaternion(2), 1), jordan_block(Quaternion(Rational(1, 2)), 1)});
  auto r3 = classify_strongly_ad_real(x3, jordan_form(x3));
  CHECK(r3.primary == Flag::No); // 2 pairs with -2 under the Lie rule, absent here
  auto x4 = direct_sum<Quaternion>({jordan_block(Quaternion(gaussian_i()), 1), jordan_block(Quaternion(2), 1),
                                    jordan_block(Quaternion(-2), 1)});
  auto r4 = classify_strongly_ad_real(x4, jordan_form(x4));
  CHECK(r4.primary == Flag::Yes);
  CHECK(r4.strong == Flag::Unknown);
}

TEST_CASE("ad_reverser worked examples") {
  auto z2 = jordan_block(Rational(0), 2);
  auto w1 = ad_reverser(z2, jordan_form(z2));
  CHECK(w1.element == alternating_diag<Rational>(2));
  CHECK(w1.is_involution);

  auto pair31 = direct_sum<Rational>({jordan_block(Rational(-3), 1), jordan_block(Rational(3), 1)});
  auto w2 = ad_reverser(pair31, jordan_form(pair31));
  CHECK(w2.element == Matrix<Rational>{{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});

  auto jr = real_jordan_block(Rational(0), Rational(1), 1);
  auto w3 = ad_reverser(jr, jordan_form(jr));
  CHECK(w3.element == Matrix<Rational>{{Rational(1), Rational(0)}, {Rational(0), Rational(-1)}});
  CHECK_THROWS_AS(ad_reverser(jordan_block(Rational(3), 1), jordan_form(jordan_block(Rational(3), 1))), Error);
}

TEST_CASE("GL reversibility classification") {
  Matrix<Rational> d(2, 2);
  d(0, 0) = Rational(2);
  d(1, 1) = Rational(1, 2);
  auto r1 = gl(d);
  CHECK(r1.primary == Flag::Yes);
  CHECK(r1.strong == Flag::Yes);
  REQUIRE(r1.pairing.entries.size() == 1);
  CHECK(r1.pairing.entries[0].rule == "lambda<->lambda^-1");

  auto r2 = gl(jordan_block(Rational(3), 1));
  CHECK(r2.primary == Flag::No);

  auto r3 = gl(scalar_h(quat_i()));
  CHECK(r3.primary == Flag::Yes);
  CHECK(r3.strong == Flag::No);
  CHECK(r3.pairing.entries[0].rule == "unit-modulus singleton");

  CHECK_THROWS_AS(gl(jordan_block(Rational(0), 2)), Error); // SingularInput
}

TEST_CASE("strong reversibility: unipotent, quaternionic, paired") {
  auto j14 = jordan_block(Rational(1), 4);
  auto r1 = classify_strongly_reversible(j14, jordan_form(j14));
  CHECK(r1.strong == Flag::Yes);
  CHECK(r1.witness->is_involution);

  auto mu = GaussianRational(Rational(3, 5), Rational(4, 5));
  auto one = scalar_h(Quaternion(mu));
  auto ro = classify_strongly_reversible(one, jordan_form(one));
  CHECK(ro.primary == Flag::Yes);
  CHECK(ro.strong == Flag::No); // 1x1 non-real unit modulus

  auto two = direct_sum<Quaternion>({jordan_block(Quaternion(mu), 3), jordan_block(Quaternion(mu), 3)});
  auto rt = classify_strongly_reversible(two, jordan_form(two));
  CHECK(rt.strong == Flag::Yes);
  CHECK(rt.witness->is_involution);
  CHECK(verify_reverser(two, rt.witness->element).holds);

  // odd leftover inside a bigger matrix: unknown
  auto odd = direct_sum<Quaternion>({jordan_block(Quaternion(mu), 1), jordan_block(Quaternion(2), 1),
                                     jordan_block(Quaternion(Rational(1, 2)), 1)});
  auto rodd = classify_strongly_reversible(odd, jordan_form(odd));
  CHECK(rodd.primary == Flag::Yes);
  CHECK(rodd.strong == Flag::Unknown);
  CHECK(rodd.witness->verified);

  // quaternionic non-unit class pairs with the inverse class lambda/|lambda|^2
  GaussianRational l(Rational(1), Rational(1));
  auto pair_h = direct_sum<Quaternion>(
      {jordan_block(Quaternion(l), 2), jordan_block(Quaternion(GaussianRational(Rational(1, 2), Rational(1, 2))), 2)});
  auto rp = classify_strongly_reversible(pair_h, jordan_form(pair_h));
  CHECK(rp.primary == Flag::Yes);
  CHECK(rp.strong == Flag::Yes);
  CHECK(rp.witness->is_involution);
  CHECK(verify_reverser(pair_h, rp.witness->element).holds);
}

TEST_CASE("reverser worked examples") {
  auto j13 = jordan_block(Rational(1), 3);
  auto w = reverser(j13, jordan_form(j13));
  Matrix<Rational> want{{Rational(-1), Rational(-1), Rational(0)},
                        {Rational(0), Rational(1), Rational(0)},
                        {Rational(0), Rational(0), Rational(-1)}};
  CHECK(w.element == want);
  CHECK(w.element == omega(Rational(1), 3));
  CHECK(w.is_involution);
  CHECK(w.verified);

  Matrix<Rational> d(2, 2);
  d(0, 0) = Rational(2);
  d(1, 1) = Rational(1, 2);
  auto wd = reverser(d, jordan_form(d));
  CHECK(verify_reverser(d, wd.element).holds);
  CHECK(wd.is_involution);

  auto jr = real_jordan_block(Rational(3, 5), Rational(4, 5), 1);
  auto wr = reverser(jr, jordan_form(jr));
  CHECK(wr.is_involution);
  CHECK(verify_reverser(jr, wr.element).holds);
  CHECK(wr.element == omega_real(Rational(3, 5), Rational(4, 5), 1) * alternating_diag<Rational>(2));

  CHECK_THROWS_AS(reverser(jordan_block(Rational(3), 1), jordan_form(jordan_block(Rational(3), 1))), Error);
}

TEST_CASE("two involutions") {
  auto id3 = Matrix<Rational>::identity(3);
  auto [a1, a2] = two_involutions(id3, jordan_form(id3));
  CHECK(a1.element * a2.element == id3);
  CHECK(verify_involution(a1.element).holds);
  CHECK(verify_involution(a2.element).holds);

  Matrix<Rational> d(2, 2);
  d(0, 0) = Rational(2);
  d(1, 1) = Rational(1, 2);
  auto [b1, b2] = two_involutions(d, jordan_form(d));
  CHECK(b1.element * b2.element == d);
  CHECK(verify_involution(b1.element).holds);
  CHECK(verify_involution(b2.element).holds);

  auto j12 = jordan_block(Rational(1), 2);
  auto [c1, c2] = two_involutions(j12, jordan_form(j12));
  CHECK(c1.element == omega(Rational(1), 2));
  CHECK(c2.element == Matrix<Rational>{{Rational(1), Rational(1)}, {Rational(0), Rational(-1)}});

  auto qi = scalar_h(quat_i());
  CHECK_THROWS_AS(two_involutions(qi, jordan_form(qi)), Error);
}

TEST_CASE("reversing symmetry description") {
  auto id2 = Matrix<Rational>::identity(2);
  auto rs1 = reversing_symmetry(id2, jordan_form(id2));
  CHECK(rs1.reversible);
  CHECK(rs1.index == 1);

  auto j31 = jordan_block(Rational(3), 1);
  auto rs2 = reversing_symmetry(j31, jordan_form(j31));
  CHECK_FALSE(rs2.reversible);
  CHECK(rs2.statement == "E(g) = Z(g)");

  auto j13 = jordan_block(Rational(1), 3);
  auto rs3 = reversing_symmetry(j13, jordan_form(j13));
  CHECK(rs3.reversible);
  CHECK(rs3.index == 2);
  CHECK(rs3.representative->element == omega(Rational(1), 3));
}

TEST_CASE("classifier agrees with the Jordan-multiset oracle") {
  SeededGen gen(5001);
  auto run = [&](auto tag, int dim, int count) {
    using T = decltype(tag);
    for (int t = 0; t < count; ++t) {
      BlockMode mode = gen.coin() ? BlockMode::Invertible : BlockMode::Reversible;
      auto a = random_supported_matrix<T>(gen, dim, mode);
      auto rep = gl(a);
      CHECK((rep.primary == Flag::Yes) == reversible_oracle(a).holds);
      if (rep.primary == Flag::Yes) {
        CHECK(rep.witness->verified);
        CHECK(verify_reverser(a, rep.witness->element).holds);
      }
    }
  };
  run(Rational(), 5, 15);
  run(GaussianRational(), 4, 10);
  run(Quaternion(), 3, 10);
}

TEST_CASE("Lie classifier agrees with the negation-multiset oracle") {
  SeededGen gen(5002);
  auto run = [&](auto tag, int dim, int count) {
    using T = decltype(tag);
    for (int t = 0; t < count; ++t) {
      BlockMode mode = gen.coin() ? BlockMode::Any : BlockMode::AdReal;
      auto a = random_supported_matrix<T>(gen, dim, mode);
      auto rep = lie(a);
      bool oracle = same_block_multiset(jordan_form(a).blocks, jordan_form(-a).blocks);
      CHECK((rep.primary == Flag::Yes) == oracle);
      if (rep.primary == Flag::Yes) CHECK(verify_ad_reverser(a, rep.witness->element).holds);
    }
  };
  run(Rational(), 5, 15);
  run(GaussianRational(), 4, 10);
  run(Quaternion(), 3, 10);
}

TEST_CASE("transport invariance of witnesses") {
  SeededGen gen(5003);
  for (int t = 0; t < 10; ++t) {
    auto a = random_supported_matrix<Rational>(gen, 4, BlockMode::Reversible);
    auto w = reverser(a, jordan_form(a));
    auto p = random_unimodular<Rational>(gen, a.rows());
    Matrix<Rational> conj_a = inverse(p) * a * p;
    Matrix<Rational> conj_r = inverse(p) * w.element * p;
    CHECK(verify_reverser(conj_a, conj_r).holds);
    CHECK(verify_involution(conj_r).holds == w.is_involution);
  }
}

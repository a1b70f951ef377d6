#include <doctest.h>

#include <random>

#include "hg/cyclotomic.hpp"
#include "hg/field.hpp"
#include "hg/finite_field.hpp"
#include "hg/rational.hpp"

using namespace hg;

TEST_CASE("rational parsing and canonical form") {
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK(Rational::parse(" -2 ") == Rational(-2));
  CHECK(Rational(3, -6).str() == "-1/2");
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("abc"));
  CHECK_THROWS(Rational::parse("1/-2"));
  CHECK(padic_valuation(Rational(12, 5), 2) == 2);
  CHECK(padic_valuation(Rational(12, 5), 5) == -1);
  CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
}

TEST_CASE("cyclotomic canonical form") {
  auto z3 = Cyclotomic::root_of_unity(3, 1);
  CHECK(z3 + z3 * z3 == Cyclotomic(-1));
  CHECK((z3 + z3 * z3).is_rational());
  auto i = Cyclotomic::root_of_unity(4, 1);
  CHECK(i * i == Cyclotomic(-1));
  // zeta_4 written over Q(zeta_8)
  CHECK(Cyclotomic::root_of_unity(8, 2) == i);
  CHECK(Cyclotomic::root_of_unity(12, 4) == z3);
  // sqrt(2) = zeta8 + zeta8^-1
  auto z8 = Cyclotomic::root_of_unity(8, 1);
  auto r2 = z8 + z8.conj();
  CHECK(r2 * r2 == Cyclotomic(2));
  CHECK(parse_cyclotomic("zeta3^2 - zeta3") == z3 * z3 - z3);
  CHECK(parse_cyclotomic("1/2*zeta4^-1") == Cyclotomic(Rational(1, 2)) * i.conj());
  CHECK_THROWS(parse_cyclotomic("zeta3^^"));
  CHECK_THROWS(parse_cyclotomic("zetaq"));
}

TEST_CASE("cyclotomic field axioms on random values") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> c(-4, 4);
  for (long n : {5L, 8L, 9L, 12L}) {
    auto rnd = [&] {
      std::vector<Rational> v(n);
      for (auto &x : v)
        x = Rational(c(rng), 1 + (c(rng) + 4) % 3);
      return Cyclotomic::from_exponent_coeffs(n, v);
    };
    for (int trial = 0; trial < 20; ++trial) {
      auto a = rnd(), b = rnd(), d = rnd();
      CHECK(a * (b + d) == a * b + a * d);
      CHECK(a.conj().conj() == a);
      CHECK((a * b).conj() == a.conj() * b.conj());
      if (!a.is_zero())
        CHECK(a * a.inverse() == Cyclotomic(1));
    }
  }
}

TEST_CASE("finite field F_4") {
  FiniteField f(2, 2);
  CHECK(f.q() == 4);
  int w = f.generator();
  // w^2 = w + 1
  CHECK(f.mul(w, w) == f.add(w, 1));
  CHECK(f.pow(w, 3) == 1);
  for (int a = 1; a < 4; ++a)
    CHECK(f.mul(a, f.inv(a)) == 1);
  CHECK(f.parse("w^2+1") == w);
  CHECK(f.parse(f.str(w)) == w);
  CHECK_THROWS(FiniteField(4, 1));
}

TEST_CASE("gauss valuation and weierstrass degree") {
  for (int p : {2, 3, 5}) {
    CycloLocalField k(p, 1);
    auto z = Cyclotomic::root_of_unity(p, 1);
    Cyclotomic pc(p);
    CHECK(gauss_valuation(k, Poly{0, pc, 1}) == Rational(0));
    // (zeta - 1)(z + p)
    Poly f = poly_mul(Poly{z - 1}, Poly{pc, 1});
    CHECK(gauss_valuation(k, f) == Rational(1, p - 1));
    CHECK(weierstrass_degree(k, f) == 1);
    CHECK(weierstrass_degree(k, Poly{-pc, 1}) == 1);
    CHECK(weierstrass_degree(k, Poly{pc, 0, 1}) == 2);
    CHECK(k.val(z - 1) == Rational(1, p - 1));
  }
}

TEST_CASE("gauss valuation is multiplicative") {
  std::mt19937 rng(11);
  CycloLocalField k(3, 1);
  auto z = Cyclotomic::root_of_unity(3, 1);
  std::vector<Cyclotomic> pool{1, 3, z, z - 1, Cyclotomic(9), (z - 1) * z, Cyclotomic(Rational(1, 3)), 2};
  std::uniform_int_distribution<int> pick(0, static_cast<int>(pool.size()) - 1), len(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    Poly f(len(rng)), g(len(rng));
    for (auto &x : f)
      x = pool[pick(rng)];
    for (auto &x : g)
      x = pool[pick(rng)];
    CHECK(gauss_valuation(k, poly_mul(f, g)) == gauss_valuation(k, f) + gauss_valuation(k, g));
  }
}

TEST_CASE("field square roots") {
  CycloLocalField k(2, 3);
  auto z8 = Cyclotomic::root_of_unity(8, 1);
  auto r = field_sqrt(k, Cyclotomic(2));
  REQUIRE(r);
  CHECK(*r * *r == Cyclotomic(2));
  CHECK(!field_sqrt(CycloLocalField(3, 1), Cyclotomic(2)));
  auto s = field_sqrt(k, z8 * z8);
  REQUIRE(s);
  CHECK(*s * *s == z8 * z8);
}

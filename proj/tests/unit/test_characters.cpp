#include <doctest.h>

#include "hg/characters.hpp"
#include "hg/subgroups.hpp"
#include "oracles.hpp"

using namespace hg;

namespace {

std::vector<FiniteGroup> table_groups() {
  return {builders::cyclic(1),
          builders::cyclic(9),
          builders::dihedral(5),
          builders::generalized_quaternion(2),
          builders::generalized_quaternion(3),
          builders::generalized_quaternion(4),
          builders::elementary_abelian(3, 2),
          builders::metacyclic(7, 3, 2),
          builders::from_permutations({{1, 2, 3, 0}, {1, 0, 2, 3}}),
          builders::from_permutations({{1, 2, 0, 3, 4}, {0, 2, 3, 4, 1}})};
}

// element x of Z/p^m has order p^m / gcd(x, p^m); returns the exponent k
int order_exponent(long x, long pm, int p) {
  long o = pm / std::gcd(x, pm);
  int k = 0;
  while (o > 1) {
    o /= p;
    ++k;
  }
  return k;
}

long ipow(long b, int e) {
  long r = 1;
  while (e-- > 0)
    r *= b;
  return r;
}

// linear character of Q8 with the given subgroup in its kernel
ClassFunction kernel_character(const FiniteGroup &g, int h) {
  const auto &rep = subgroup_class(g, h).rep;
  for (const auto &chi : character_table(g).irreducibles) {
    if (chi.degree() != Cyclotomic(1) || chi == trivial_character(g))
      continue;
    bool kernel = true;
    for (Elem x = 0; x < g.order(); ++x)
      if (rep[x] && chi.at(x) != Cyclotomic(1))
        kernel = false;
    if (kernel)
      return chi;
  }
  throw std::runtime_error("no such character");
}

}  // namespace

TEST_CASE("inner products") {
  for (const auto &g : table_groups())
    CHECK(inner_product(regular_character(g), trivial_character(g)) == Cyclotomic(1));
  auto q8 = builders::generalized_quaternion(2);
  auto u = augmentation_character(q8);
  CHECK(inner_product(u, u) == Cyclotomic(7));
  CHECK(oracle::inner(u, u) == Cyclotomic(7));
  int h0 = parse_subgroup(q8, "<tau>"), h1 = parse_subgroup(q8, "<sigma>");
  auto chi0 = kernel_character(q8, h0);
  CHECK(inner_product(chi0, induced_augmentation(q8, h1)) == Cyclotomic(1));
  CHECK(inner_product(chi0, induced_augmentation(q8, h0)) == Cyclotomic(0));
  CHECK_THROWS(inner_product(u, augmentation_character(builders::cyclic(8))));
}

TEST_CASE("standard characters") {
  for (const auto &g : table_groups()) {
    auto u = augmentation_character(g);
    CHECK(u.degree() == Cyclotomic(g.order() - 1));
    for (int c = 1; c < g.class_count(); ++c)
      CHECK(u[c] == Cyclotomic(-1));
    CHECK(inner_product(u, trivial_character(g)).is_zero());
    CHECK(regular_character(g).degree() == Cyclotomic(g.order()));
  }
}

TEST_CASE("induction") {
  for (const auto &g : table_groups()) {
    auto whole = embed_subgroup(g, g.all_elements());
    auto u = augmentation_character(whole.sub);
    CHECK(induce(u, whole).values() == augmentation_character(g).values());
    for (const auto &c : subgroup_classes(g, true)) {
      const auto &ind = induced_augmentation(g, c.id);
      CHECK(ind.degree() == Cyclotomic(g.order() - g.order() / c.order));
      auto e = embed_subgroup(g, c.rep);
      auto direct = oracle::induce_direct(e, augmentation_character(e.sub));
      for (Elem x = 0; x < g.order(); ++x)
        CHECK(ind.at(x) == direct[x]);
      CHECK(inner_product(ind, trivial_character(g)).is_zero());
    }
    for (const auto &c : subgroup_classes(g))
      CHECK(inner_product(induced_augmentation(g, c.id), trivial_character(g)).is_zero());
  }
}

TEST_CASE("psi on Q8 pairs to 2 with every nontrivial cyclic class") {
  auto q8 = builders::generalized_quaternion(2);
  auto e = embed_subgroup(q8, subgroup_class(q8, parse_subgroup(q8, "<tau>")).rep);
  ClassFunction faithful;
  for (const auto &chi : character_table(e.sub).irreducibles) {
    int kernel = 0;
    for (Elem x = 0; x < e.sub.order(); ++x)
      kernel += chi.at(x) == Cyclotomic(1);
    if (kernel == 1)
      faithful = chi;
  }
  REQUIRE(faithful.group().valid());
  auto psi = induce(faithful, e);
  int count = 0;
  for (const auto &c : subgroup_classes(q8, true)) {
    if (c.order == 1)
      continue;
    CHECK(inner_product(psi, induced_augmentation(q8, c.id)) == Cyclotomic(2));
    ++count;
  }
  CHECK(count == 4);
}

TEST_CASE("restriction") {
  auto q16 = builders::generalized_quaternion(3);
  auto e = embed_subgroup(q16, subgroup_class(q16, parse_subgroup(q16, "<tau>")).rep);
  for (const auto &chi : character_table(q16).irreducibles) {
    auto r = restrict_to(chi, e);
    CHECK(r.degree() == chi.degree());
    for (Elem x = 0; x < e.sub.order(); ++x)
      CHECK(r.at(x) == chi.at(e.image[x]));
  }
}

TEST_CASE("delta_mult values") {
  CHECK(delta_mult(2, 0).is_zero());
  auto d = delta_mult(2, 2);
  const auto &g = d.group();
  CHECK(d.at(g.parse_element("1")) == Cyclotomic(8));
  CHECK(d.at(g.parse_element("g")) == Cyclotomic(-2));
  CHECK(d.at(g.parse_element("g^2")) == Cyclotomic(-4));
  CHECK(d.at(g.parse_element("g^3")) == Cyclotomic(-2));
  for (const auto &chi : character_table(g).irreducibles) {
    bool faithful = chi.at(g.parse_element("g^2")) == Cyclotomic(-1);
    if (faithful)
      CHECK(inner_product(chi, d) == Cyclotomic(3));
  }
  auto d3 = delta_mult(3, 1);
  for (const auto &chi : character_table(d3.group()).irreducibles)
    if (!(chi == trivial_character(d3.group())))
      CHECK(inner_product(chi, d3) == Cyclotomic(Rational(3, 2)));
}

TEST_CASE("delta_mult against the defining values") {
  for (int p : {2, 3, 5})
    for (int m = 1; ipow(p, m) <= 256; ++m) {
      auto d = delta_mult(p, m);
      const auto &g = d.group();
      Cyclotomic sum;
      for (Elem x = 0; x < g.order(); ++x) {
        int k = 0;
        for (int o = g.element_order(x); o > 1; o /= p)
          ++k;
        CHECK(d.at(x) == Cyclotomic(oracle::delta_mult_value(p, m, k)));
        sum += d.at(x);
      }
      CHECK(sum.is_zero());
      CHECK(inner_product(d, trivial_character(g)).is_zero());
    }
}

TEST_CASE("delta_mult pairings for 1 <= n <= m <= 4") {
  // direct sums over Z/p^m, no group object, so 5^4 is covered too
  for (int p : {2, 3, 5})
    for (int m = 1; m <= 4; ++m) {
      long pm = ipow(p, m);
      std::vector<Rational> by_order(m + 1);
      for (int k = 0; k <= m; ++k)
        by_order[k] = delta_mult_value(p, static_cast<int>(pm), static_cast<int>(ipow(p, k)));
      for (int k = 0; k <= m; ++k)
        CHECK(by_order[k] == oracle::delta_mult_value(p, m, k));
      for (int n = 0; n <= m; ++n) {
        long pn = ipow(p, n);
        std::vector<Rational> coeffs(pn);
        for (long x = 0; x < pm; ++x)
          coeffs[(pn - x % pn) % pn] += by_order[order_exponent(x, pm, p)];
        Cyclotomic pairing = Cyclotomic::from_exponent_coeffs(pn, coeffs) * Cyclotomic(Rational(1, pm));
        if (n == 0)
          CHECK(pairing.is_zero());
        else
          CHECK(pairing == Cyclotomic(oracle::delta_mult_pairing(p, n)));
      }
    }
}

TEST_CASE("character tables") {
  auto c4 = builders::cyclic(4);
  const auto &t4 = character_table(c4).irreducibles;
  CHECK(t4.size() == 4);
  for (const auto &chi : t4)
    for (int c = 0; c < c4.class_count(); ++c)
      CHECK(chi[c].pow(4) == Cyclotomic(1));

  auto degrees = [](const FiniteGroup &g) {
    std::vector<Rational> d;
    for (const auto &chi : character_table(g).irreducibles)
      d.push_back(chi.degree().rational());
    return d;
  };
  CHECK(degrees(builders::generalized_quaternion(2)) == std::vector<Rational>{1, 1, 1, 1, 2});
  CHECK(degrees(builders::generalized_quaternion(3)) == std::vector<Rational>{1, 1, 1, 1, 2, 2, 2});

  for (const auto &g : table_groups()) {
    const auto &irr = character_table(g).irreducibles;
    CHECK(static_cast<int>(irr.size()) == g.class_count());
    Rational sq;
    for (const auto &chi : irr)
      sq += chi.degree().rational() * chi.degree().rational();
    CHECK(sq == Rational(g.order()));
    for (std::size_t i = 0; i < irr.size(); ++i)
      for (std::size_t j = 0; j < irr.size(); ++j)
        CHECK(oracle::inner(irr[i], irr[j]) == Cyclotomic(i == j ? 1 : 0));
    // column orthogonality
    for (int a = 0; a < g.class_count(); ++a)
      for (int b = 0; b < g.class_count(); ++b) {
        Cyclotomic s;
        for (const auto &chi : irr)
          s += chi[a] * chi[b].conj();
        Cyclotomic want = a == b ? Cyclotomic(Rational(g.order(), g.class_size(a))) : Cyclotomic(0);
        CHECK(s == want);
      }
  }
}

TEST_CASE("multiplicities and positivity") {
  for (const auto &g : table_groups()) {
    auto m = multiplicities(regular_character(g));
    const auto &irr = character_table(g).irreducibles;
    for (std::size_t i = 0; i < irr.size(); ++i)
      CHECK(m[i] == irr[i].degree());
    auto u = augmentation_character(g);
    if (g.order() > 1) {
      CHECK(is_true_character(u));
      CHECK(!is_true_character(-u));
      CHECK(!is_positive_rational(-u));
    }
  }
  auto d = delta_mult(3, 1);
  CHECK(is_positive_rational(d));
  CHECK(!is_true_character(d));
  CHECK(is_true_character(delta_mult(2, 2)));
}

TEST_CASE("symmetry check on non-characters") {
  auto c3 = builders::cyclic(3);
  auto z = Cyclotomic::root_of_unity(3, 1);
  ClassFunction bad(c3, {Cyclotomic(1), z, z});
  CHECK_THROWS_AS(check_character_symmetry(bad), CharacterError);
}

TEST_CASE("inflation") {
  auto q8 = builders::generalized_quaternion(2);
  auto q = quotient(q8, generate_subgroup(q8, std::vector<Elem>{q8.parse_element("tau^2")}));
  CHECK(inflate(trivial_character(q.group), q) == trivial_character(q8));
  const auto &irr = character_table(q.group).irreducibles;
  std::vector<std::string> hs{"<tau>", "<sigma>", "<sigma tau>"};
  for (const auto &lam : irr) {
    auto chi = inflate(lam, q);
    CHECK(inner_product(chi, chi) == Cyclotomic(1));
    if (lam == trivial_character(q.group))
      continue;
    int kernels = 0;
    for (const auto &h : hs)
      kernels += kernel_character(q8, parse_subgroup(q8, h)) == chi;
    CHECK(kernels == 1);
  }
  for (const auto &a : irr)
    for (const auto &b : irr) {
      auto x = a + Cyclotomic(2) * b;
      CHECK(inner_product(inflate(x, q), inflate(b, q)) == oracle::inner(x, b));
    }
}

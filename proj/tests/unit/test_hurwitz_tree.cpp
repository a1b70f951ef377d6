#include <doctest.h>

#include <map>

#include "hg/obstruction.hpp"
#include "hg/subgroups.hpp"
#include "hg/tree.hpp"
#include "oracles.hpp"

using namespace hg;

namespace {

// root -> v1 -> {b1, b2}, everything labelled G
HurwitzTree two_leaf(const FiniteGroup &g, int p, const Rational &eps) {
  int w = whole_class(g);
  return star_tree(g, p, {w, w}, eps);
}

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

ClassFunction faithful_character(const FiniteGroup &g) {
  for (const auto &chi : character_table(g).irreducibles) {
    int kernel = 0;
    for (Elem x = 0; x < g.order(); ++x)
      kernel += chi.at(x) == chi.degree();
    if (kernel == 1)
      return chi;
  }
  throw std::runtime_error("no faithful irreducible");
}

ClassFunction leaf_sum(const FiniteGroup &g, const std::vector<int> &classes) {
  ClassFunction a = ClassFunction::zero(g);
  for (int c : classes) {
    auto e = embed_subgroup(g, subgroup_class(g, c).rep);
    a += ClassFunction(g, [&] {
      auto direct = oracle::induce_direct(e, augmentation_character(e.sub));
      std::vector<Cyclotomic> v;
      for (int k = 0; k < g.class_count(); ++k)
        v.push_back(direct[g.class_rep(k)]);
      return v;
    }());
  }
  return a;
}

}  // namespace

TEST_CASE("metric tree construction errors") {
  using E = TreeEdge;
  CHECK_THROWS_AS(MetricTree::make({0}, {}), TreeError);
  CHECK_THROWS_AS(MetricTree::make({0, 0}, {E{0, 1, 0}}), TreeError);
  CHECK_THROWS_AS(MetricTree::make({0, 1, 2}, {E{0, 1, 0}}), TreeError);
  CHECK_THROWS_AS(MetricTree::make({0, 1, 2}, {E{0, 1, 1}, E{2, 1, 0}}), TreeError);
  CHECK_THROWS_AS(MetricTree::make({0, 1, 2}, {E{0, 1, 0}, E{0, 2, 0}}), TreeError);
  auto t = MetricTree::make({10, 11, 12, 13}, {E{0, 1, 2}, E{1, 2, 0}, E{1, 3, 0}});
  CHECK(t.root == 0);
  CHECK(t.leaves() == std::vector<int>{2, 3});
  CHECK(t.vname(1) == "v11");
  CHECK(metric_failures(t).empty());
  t.edges[0].eps = 0;
  CHECK(!metric_failures(t).empty());
}

TEST_CASE("validate: two-leaf Z/p tree") {
  for (int p : {2, 3, 5}) {
    auto g = builders::cyclic(p);
    auto good = two_leaf(g, p, Rational(p, p - 1));
    CHECK(validate(good).ok());
    CHECK(good.depth_character().is_zero());
    auto bad = validate(two_leaf(g, p, Rational(1, 3)));
    CHECK(!bad.ok());
    CHECK(!bad.check("H5").pass);
    CHECK(bad.check("H1").pass);
    CHECK(bad.check("H4").pass);
  }
  auto g = builders::cyclic(3);
  CHECK(!validate(two_leaf(g, 3, Rational(1))).check("H5").pass);
}

TEST_CASE("validate: tame single leaf") {
  auto g = builders::cyclic(2);
  auto t = star_tree(g, 3, {whole_class(g)}, Rational(0));
  CHECK(validate(t).ok());
  CHECK(t.depth_character().is_zero());
  for (const auto &d : t.depth)
    CHECK(d.is_zero());
}

TEST_CASE("validate reports H1 and H2 failures") {
  auto q8 = builders::generalized_quaternion(2);
  int s = parse_subgroup(q8, "<sigma>"), t = parse_subgroup(q8, "<tau>");
  // a vertex labelled <sigma> with a child labelled <tau>
  using E = TreeEdge;
  auto mt = MetricTree::make({0, 1, 2, 3, 4},
                             {E{0, 1, 1}, E{1, 2, 1}, E{2, 3, 0}, E{2, 4, 0}});
  auto h = make_hurwitz_tree(q8, 2, mt, {whole_class(q8), whole_class(q8), s, t, s});
  auto r = validate(h);
  CHECK(!r.check("H1").pass);
  CHECK(r.check("H2").pass);
  CHECK(r.h3_forms_agree);
  auto trivial_leaf = make_hurwitz_tree(q8, 2, mt, {whole_class(q8), whole_class(q8), s, trivial_class(q8), s});
  CHECK(!validate(trivial_leaf).check("H2").pass);
  CHECK_THROWS_AS(derive_artin(q8, mt, {whole_class(q8), whole_class(q8), s, whole_class(q8), s}), TreeError);
  CHECK_THROWS_AS(make_hurwitz_tree(q8, 4, mt, {whole_class(q8), whole_class(q8), s, t, s}), TreeError);
}

TEST_CASE("derive_artin") {
  auto q8 = builders::generalized_quaternion(2);
  int w = whole_class(q8);
  for (const auto &c : subgroup_classes(q8, true)) {
    if (c.order == 1)
      continue;
    auto one = star_tree(q8, 2, {c.id}, Rational(0));
    CHECK(one.artin_character() == induced_augmentation(q8, c.id));
  }
  std::vector<int> h{parse_subgroup(q8, "<tau>"), parse_subgroup(q8, "<sigma>"), parse_subgroup(q8, "<sigma tau>")};
  auto star = star_tree(q8, 2, h, Rational(1));
  for (int i = 0; i < 3; ++i)
    CHECK(inner_product(kernel_character(q8, h[i]), star.artin_character()) == Cyclotomic(2));
  CHECK(star.artin_character() == leaf_sum(q8, h));

  // root -> v1 -> {v2 -> {b, b}, b'}: trunk = branch sum
  using E = TreeEdge;
  auto mt = MetricTree::make({0, 1, 2, 3, 4, 5}, {E{0, 1, 1}, E{1, 2, 1}, E{2, 3, 0}, E{2, 4, 0}, E{1, 5, 0}});
  auto two = make_hurwitz_tree(q8, 2, mt, {w, w, h[0], h[0], h[0], h[1]});
  CHECK(two.artin[0] == two.artin[1] + two.artin[4]);
  CHECK(two.artin[0] == leaf_sum(q8, {h[0], h[0], h[1]}));
  CHECK(validate(two).check("H3").pass);
}

TEST_CASE("derive_depths") {
  for (int p : {2, 3, 5}) {
    auto g = builders::cyclic(p);
    auto t = two_leaf(g, p, Rational(p, p - 1));
    auto d = derive_depths(g, p, t.tree, t.monodromy, t.artin, ClassFunction::zero(g));
    CHECK(d.h5_failures.empty());
  }
  auto g = builders::cyclic(3);
  auto t = two_leaf(g, 3, Rational(1));
  auto flat = t.tree;
  for (auto &e : flat.edges)
    e.eps = 0;
  CHECK_THROWS_AS(derive_depths(g, 3, flat, t.monodromy, t.artin, ClassFunction::zero(g)), TreeError);

  // single branch over Z/p^2 with delta_root = delta^mult
  for (int p : {2, 3}) {
    auto d = delta_mult(p, 2);
    const auto &c = d.group();
    auto h = star_tree(c, p, {whole_class(c)}, Rational(0), d);
    CHECK(validate(h).ok());
    const auto &irr = character_table(c).irreducibles;
    auto leaf = h.tree.leaves().front();
    for (const auto &chi : irr) {
      int n = 0;
      for (int o = c.order(); o > 1; o /= p)
        if (chi.at(c.pow(c.parse_element("g"), o / p)) != Cyclotomic(1))
          ++n;
      Rational want = n == 0 ? Rational(0) : oracle::delta_mult_pairing(p, n);
      CHECK(inner_product(chi, h.depth[leaf]) == Cyclotomic(want));
    }
  }
}

TEST_CASE("equivariant lift") {
  auto c3 = builders::cyclic(3);
  auto t = two_leaf(c3, 3, Rational(3, 2));
  auto lift = equivariant_lift(t);
  CHECK(lift.vertices.size() == 4);
  CHECK(lift.quotient_matches);
  int leaves = 0;
  for (const auto &v : lift.vertices)
    if (t.tree.is_leaf(v.base)) {
      ++leaves;
      CHECK(static_cast<int>(v.stabilizer.count()) == 3);
    }
  CHECK(leaves == 2);

  auto q8 = builders::generalized_quaternion(2);
  std::vector<int> h{parse_subgroup(q8, "<tau>"), parse_subgroup(q8, "<sigma>"), parse_subgroup(q8, "<sigma tau>")};
  auto star = star_tree(q8, 2, h, Rational(1));
  auto ql = equivariant_lift(star);
  CHECK(ql.quotient_matches);
  std::map<int, int> per_base;
  for (const auto &v : ql.vertices)
    if (star.tree.is_leaf(v.base)) {
      ++per_base[v.base];
      CHECK(static_cast<int>(v.stabilizer.count()) == 4);
      CHECK(v.stabilizer == conjugate_set(q8, v.coset_rep, ql.representatives[v.base]));
    }
  CHECK(per_base.size() == 3);
  for (auto [b, n] : per_base)
    CHECK(n == 2);
  CHECK(ql.edges.size() == ql.vertices.size() - 1);
  CHECK(!lifted_dot(star, ql).empty());
}

TEST_CASE("inverse distance and density") {
  for (int p : {2, 3, 5}) {
    auto g = builders::cyclic(p);
    auto t = two_leaf(g, p, Rational(p, p - 1));
    auto b = t.tree.leaves();
    CHECK(inverse_distance(t, b[0], b[1]) == Rational(p, p - 1));
    CHECK(density(t, {b[0]}, b[0]) == Rational(0));
    CHECK(density(t, b, b[0]) == oracle::density_pairwise(t, b, b[0]));
    CHECK_THROWS_AS(density(t, {b[1]}, b[0]), TreeError);
  }
}

TEST_CASE("density identity") {
  auto g = builders::cyclic(3);
  auto t = two_leaf(g, 3, Rational(3, 2));
  auto b = t.tree.leaves();
  auto one = density_character_identity(t, trivial_character(g), {b[0]}, b[0]);
  CHECK(one.m == Rational(0));
  CHECK(one.lhs.is_zero());
  CHECK(one.rhs.is_zero());
  CHECK(one.holds);
  for (const auto &chi : character_table(g).irreducibles) {
    if (chi == trivial_character(g))
      continue;
    auto r = density_character_identity(t, chi, b, b[0]);
    CHECK(r.holds);
    CHECK(r.density == oracle::delta_mult_pairing(3, 1));
  }
  CHECK_THROWS_AS(density_character_identity(t, character_table(g).irreducibles[1], {b[0]}, b[0]), TreeError);
}

TEST_CASE("density over Z/p^2 witnesses") {
  // leaves drawn from G and its order-p subgroup; for a faithful character every witness
  // (delta_T = 0) gives d(B, b) = (np - n + 1)/(p - 1) with |G_b| = p^n
  int found = 0;
  for (int p : {2, 3}) {
    auto g = builders::cyclic(p * p);
    int big = whole_class(g), small = -1;
    for (const auto &c : subgroup_classes(g, true))
      if (c.order == p)
        small = c.id;
    auto chi = faithful_character(g);
    for (int nb = 0; nb <= 2; ++nb)
      for (int ns = 0; nb + ns <= 3; ++ns) {
        if (nb + ns == 0)
          continue;
        std::vector<int> leaves(nb, big);
        leaves.insert(leaves.end(), ns, small);
        auto rep = hurwitz_feasibility(g, p, leaf_sum(g, leaves), 1);
        if (rep.verdict != Verdict::Witness)
          continue;
        ++found;
        const auto &w = *rep.witness;
        auto all = w.tree.leaves();
        for (int b : all) {
          auto r = density_character_identity(w, chi, all, b);
          CHECK(r.holds);
          int n = w.monodromy[b] == big ? 2 : 1;
          CHECK(r.density == oracle::delta_mult_pairing(p, n));
        }
      }
  }
  CHECK(found > 0);
}

TEST_CASE("canonical code ignores child order") {
  auto q8 = builders::generalized_quaternion(2);
  int s = parse_subgroup(q8, "<sigma>"), t = parse_subgroup(q8, "<tau>");
  auto a = star_tree(q8, 2, {s, t, t}, Rational(1));
  auto b = star_tree(q8, 2, {t, s, t}, Rational(1));
  CHECK(canonical_code(a) == canonical_code(b));
  auto c = star_tree(q8, 2, {s, s, t}, Rational(1));
  CHECK(canonical_code(a) != canonical_code(c));
  CHECK(tree_dot(a).find("digraph") != std::string::npos);
}

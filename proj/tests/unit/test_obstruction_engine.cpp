#include <doctest.h>

#include <cstdlib>
#include <set>

#include "hg/io.hpp"
#include "hg/obstruction.hpp"
#include "hg/quaternion.hpp"
#include "hg/subgroups.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using namespace hg;

namespace {

std::vector<int> h_classes(const FiniteGroup &q) {
  return {parse_subgroup(q, "<tau>"), parse_subgroup(q, "<sigma>"), parse_subgroup(q, "<sigma tau>")};
}

ClassFunction sum_u(const FiniteGroup &g, const std::vector<int> &classes) {
  ClassFunction a = ClassFunction::zero(g);
  for (int c : classes)
    a += induced_augmentation(g, c);
  return a;
}

}  // namespace

TEST_CASE("bertin: cyclic groups") {
  for (int n : {2, 3, 4, 6, 9}) {
    auto g = builders::cyclic(n);
    auto d = bertin_check(augmentation_character(g));
    REQUIRE(!d.empty());
    CHECK(std::find(d.begin(), d.end(), std::vector<int>{whole_class(g)}) != d.end());
  }
  auto c3 = builders::cyclic(3);
  const auto &irr = character_table(c3).irreducibles;
  CHECK(bertin_check(irr[1]).empty());
  CHECK(bertin_check(irr[1] + irr[1]).empty());
  CHECK_THROWS_AS(bertin_check(-augmentation_character(c3)), CharacterError);
  CHECK_THROWS_AS(bertin_check(regular_character(c3)), CharacterError);
}

TEST_CASE("bertin: quaternion minimal character") {
  auto q8 = builders::generalized_quaternion(2);
  auto h = h_classes(q8);
  auto a = sum_u(q8, h);
  auto d = bertin_check(a);
  auto sorted = h;
  std::sort(sorted.begin(), sorted.end(), [&](int x, int y) { return x > y; });
  bool found = false;
  for (auto dec : d) {
    // every decomposition reproduces a on a star tree
    auto star = star_tree(q8, 2, dec, Rational(1));
    CHECK(star.artin_character() == a);
    std::sort(dec.begin(), dec.end(), [&](int x, int y) { return x > y; });
    found = found || dec == sorted;
  }
  CHECK(found);
}

TEST_CASE("bertin decompositions reproduce the character") {
  for (const auto &g : {builders::dihedral(4), builders::generalized_quaternion(3), builders::elementary_abelian(2, 2)}) {
    std::vector<int> cyc;
    for (const auto &c : subgroup_classes(g, true))
      if (c.order > 1)
        cyc.push_back(c.id);
    for (std::size_t i = 0; i < cyc.size(); ++i)
      for (std::size_t j = i; j < cyc.size(); ++j) {
        auto a = sum_u(g, {cyc[i], cyc[j]});
        auto d = bertin_check(a);
        CHECK(!d.empty());
        for (const auto &dec : d)
          CHECK(star_tree(g, 2, dec, Rational(1)).artin_character() == a);
      }
  }
}

TEST_CASE("candidate enumeration") {
  auto c3 = builders::cyclic(3);
  int w = whole_class(c3);
  auto three = enumerate_candidates(c3, {w, w, w});
  CHECK(three.size() == 2);
  auto q8 = builders::generalized_quaternion(2);
  auto h = h_classes(q8);
  for (const auto &leaves : std::vector<std::vector<int>>{{h[0]}, {h[0], h[1]}, {h[0], h[1], h[2]}, {h[0], h[0], h[1], h[2]}}) {
    auto cands = enumerate_candidates(q8, leaves);
    CHECK(!cands.empty());
    std::set<std::string> codes;
    for (const auto &c : cands) {
      codes.insert(c.code);
      auto t = make_hurwitz_tree(q8, 2, c.tree, c.monodromy);
      auto r = validate(t);
      CHECK(r.check("H1").pass);
      CHECK(r.check("H2").pass);
      CHECK(r.check("metric").pass);
      std::multiset<int> got;
      for (int b : c.tree.leaves())
        got.insert(c.monodromy[b]);
      CHECK(got == std::multiset<int>(leaves.begin(), leaves.end()));
    }
    CHECK(codes.size() == cands.size());
    CHECK(std::is_sorted(cands.begin(), cands.end(),
                         [](const TreeCandidate &a, const TreeCandidate &b) { return a.code < b.code; }));
  }
}

TEST_CASE("hurwitz: two-leaf Z/p witness") {
  for (int p : {2, 3, 5}) {
    auto g = builders::cyclic(p);
    auto a = Cyclotomic(2) * augmentation_character(g);
    auto r = hurwitz_feasibility(g, p, a, 1);
    REQUIRE(r.verdict == Verdict::Witness);
    const auto &w = *r.witness;
    CHECK(w.tree.leaves().size() == 2);
    CHECK(w.tree.edges[w.tree.trunk].eps == Rational(p, p - 1));
    CHECK(r.witness_validation->ok());
    CHECK(r.witness_matches);
    CHECK(validate(w).ok());
    CHECK(w.depth_character().is_zero());
    CHECK(w.artin_character() == a);
  }
}

TEST_CASE("hurwitz: tame single leaf") {
  auto g = builders::cyclic(2);
  auto r = hurwitz_feasibility(g, 3, augmentation_character(g), 1);
  REQUIRE(r.verdict == Verdict::Witness);
  CHECK(r.witness->tree.leaves().size() == 1);
  CHECK(validate(*r.witness).ok());
  for (const auto &d : r.witness->depth)
    CHECK(d.is_zero());
  auto two = hurwitz_feasibility(g, 3, Cyclotomic(2) * augmentation_character(g), 1);
  CHECK(two.verdict == Verdict::Infeasible);
}

TEST_CASE("hurwitz: quaternion minimal character is infeasible") {
  auto q8 = builders::generalized_quaternion(2);
  auto a = sum_u(q8, h_classes(q8));
  auto r = hurwitz_feasibility(q8, 2, a, 1);
  CHECK(r.verdict == Verdict::Infeasible);
  CHECK(!r.witness);
  CHECK(r.topology_count > 0);
  CHECK(r.lp_solved == r.topology_count);
  CHECK(r.all_certificates_verified);
  for (const auto &c : r.candidates) {
    CHECK(c.status == LpStatus::Infeasible);
    CHECK(c.certificate_verified);
  }
}

TEST_CASE("hurwitz: non-Bertin input has no candidates") {
  auto c3 = builders::cyclic(3);
  auto r = hurwitz_feasibility(c3, 3, character_table(c3).irreducibles[1], 1);
  CHECK(r.verdict == Verdict::Infeasible);
  CHECK(r.topology_count == 0);
}

TEST_CASE("hurwitz: determinism across thread counts") {
  auto q8 = builders::generalized_quaternion(2);
  auto h = h_classes(q8);
  std::vector<std::pair<FiniteGroup, ClassFunction>> inputs{
      {q8, sum_u(q8, h)},
      {q8, sum_u(q8, {h[0], h[0]})},
      {q8, sum_u(q8, {h[0], h[1], h[1]})},
  };
  auto c9 = builders::cyclic(9);
  inputs.emplace_back(c9, Cyclotomic(2) * augmentation_character(c9));
  auto c4 = builders::cyclic(4);
  int small = parse_subgroup(c4, "<g^2>");
  inputs.emplace_back(c4, augmentation_character(c4) + induced_augmentation(c4, small) + induced_augmentation(c4, small));
  for (const auto &[g, a] : inputs) {
    int p = 2;
    if (g.order() == 9)
      p = 3;
    auto base = hurwitz_feasibility(g, p, a, 1);
    for (int threads : {2, 4}) {
      auto r = hurwitz_feasibility(g, p, a, threads);
      CHECK(r.verdict == base.verdict);
      CHECK(r.topology_count == base.topology_count);
      if (base.witness) {
        REQUIRE(r.witness);
        CHECK(canonical_code(*r.witness) == canonical_code(*base.witness));
        CHECK(io::tree_json(*r.witness, {}).dump() == io::tree_json(*base.witness, {}).dump());
      }
    }
    if (base.witness) {
      CHECK(validate(*base.witness).ok());
      CHECK(base.witness->artin_character() == a);
      CHECK(base.witness->depth_character().is_zero());
    }
  }
}

TEST_CASE("thread resolution") {
  CHECK(resolve_threads(3) == 3);
  setenv("HG_THREADS", "5", 1);
  CHECK(resolve_threads(0) == 5);
  unsetenv("HG_THREADS");
  CHECK(resolve_threads(0) >= 1);
}

TEST_CASE("hurwitz on local actions") {
  auto klein = io::read_local_action_file(fixtures::data("klein_f4.json"));
  auto r = hurwitz_feasibility(klein, 1);
  CHECK(r.verdict != Verdict::Inconclusive);
  if (r.witness)
    CHECK(validate(*r.witness).ok());
  auto low = io::read_local_action_file(fixtures::data("c4_f2_precision.json"));
  auto inc = hurwitz_feasibility(low, 1);
  CHECK(inc.verdict == Verdict::Inconclusive);
  CHECK(!inc.note.empty());
}

TEST_CASE("quaternion report, n = 2") {
  auto r = quaternion_report(2, 1, 1);
  CHECK(r.lemma_holds);
  for (int i = 0; i < 3; ++i) {
    CHECK(r.klein_pairings[i] == Rational(2));
    CHECK(r.simple_pairings[i] == Rational(2));
  }
  CHECK(r.simple);
  CHECK(r.psi_pairings.size() == 4);
  for (const auto &[c, v] : r.psi_pairings)
    CHECK(v == Rational(2));
  CHECK(r.psi_pairings_two);
  CHECK(r.delta_b0_psi == Rational(6));
  CHECK(r.d_bi_b0[0] == Rational(2));
  CHECK(r.d_bi_b0[1] == Rational(2));
  CHECK(r.d_bprime_b0 == Rational(4));
  CHECK(r.d_b_b0 == Rational(3));
  CHECK(r.density_contradiction);
  CHECK(r.all_infeasible);
  CHECK(r.completions.size() >= 2);
  for (const auto &c : r.completions) {
    CHECK(c.report.verdict == Verdict::Infeasible);
    CHECK(c.report.all_certificates_verified);
  }
}

TEST_CASE("quaternion report, n = 3 without completions") {
  auto r = quaternion_report(3, 0, 0);
  CHECK(r.group.order() == 16);
  CHECK(r.lemma_holds);
  CHECK(r.delta_b0_psi == Rational(6));
  CHECK(r.d_bprime_b0 == Rational(4));
  CHECK(r.d_b_b0 == Rational(3));
  CHECK(r.all_infeasible);
}

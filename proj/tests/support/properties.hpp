#pragma once

// Randomised property suites shared by the unit tests and the acceptance binary.

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hg/characters.hpp"
#include "hg/disk.hpp"
#include "hg/obstruction.hpp"
#include "hg/subgroups.hpp"
#include "hg/tree.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace props {

struct Outcome {
  long cases = 0;
  long failures = 0;
  std::vector<std::string> messages;  // first few failures

  void fail(const std::string &m) {
    ++failures;
    if (messages.size() < 10)
      messages.push_back(m);
  }
  void merge(const Outcome &o) {
    cases += o.cases;
    failures += o.failures;
    for (const auto &m : o.messages)
      if (messages.size() < 10)
        messages.push_back(m);
  }
};

inline hg::ClassFunction random_class_function(const hg::FiniteGroup &g, std::mt19937 &rng) {
  std::uniform_int_distribution<int> num(-4, 4), den(1, 3);
  hg::ClassFunction f = hg::ClassFunction::zero(g);
  for (const auto &chi : hg::character_table(g).irreducibles)
    f += hg::Cyclotomic(hg::Rational(num(rng), den(rng))) * chi;
  return f;
}

inline std::vector<std::pair<std::string, hg::FiniteGroup>> reciprocity_groups() {
  using namespace hg::builders;
  return {{"Z/4", cyclic(4)}, {"Z/9", cyclic(9)}, {"Q8", generalized_quaternion(2)},
          {"Q16", generalized_quaternion(3)}, {"D4", dihedral(4)}};
}

/// <psi, Ind chi>_G = <Res psi, chi>_H for random (H, chi, psi), plus induction against the direct formula.
inline Outcome frobenius_suite(int per_group, unsigned seed) {
  Outcome out;
  std::mt19937 rng(seed);
  for (const auto &[name, g] : reciprocity_groups()) {
    std::uniform_int_distribution<int> el(0, g.order() - 1), ngen(0, 2);
    for (int i = 0; i < per_group; ++i) {
      std::vector<hg::Elem> gens;
      for (int k = ngen(rng); k > 0; --k)
        gens.push_back(el(rng));
      auto h = hg::generate_subgroup(g, gens);
      auto e = hg::embed_subgroup(g, h);
      auto chi = random_class_function(e.sub, rng);
      auto psi = random_class_function(g, rng);
      auto ind = hg::induce(chi, e);
      auto lhs = hg::inner_product(psi, ind);
      auto rhs = hg::inner_product(hg::restrict_to(psi, e), chi);
      ++out.cases;
      auto direct = oracle::induce_direct(e, chi);
      bool same = true;
      for (hg::Elem x = 0; x < g.order(); ++x)
        same = same && ind.at(x) == direct[x];
      if (!(lhs == rhs) || !same || !(oracle::inner(psi, ind) == lhs))
        out.fail(name + ": reciprocity fails for |H| = " + std::to_string(e.sub.order()));
    }
  }
  return out;
}

struct TreeFamily {
  std::string name;
  hg::FiniteGroup group;
  int p;
};

inline std::vector<TreeFamily> tree_families() {
  using namespace hg::builders;
  return {{"Z/2", cyclic(2), 2}, {"Z/3", cyclic(3), 3}, {"Z/5", cyclic(5), 5},
          {"Z/4", cyclic(4), 2}, {"Z/9", cyclic(9), 3}, {"Q8", generalized_quaternion(2), 2}};
}

/// Checks density formulas and tree invariants on one valid tree.
inline void check_tree(const hg::HurwitzTree &t, const std::string &tag, std::mt19937 &rng, Outcome &out) {
  using namespace hg;
  const auto &g = t.group;
  auto leaves = t.tree.leaves();
  auto fail = [&](const std::string &m) { out.fail(tag + " " + canonical_code(t) + ": " + m); };
  if (!validate(t).ok())
    return fail("generated tree does not validate");

  // a_T = sum of u_{G_b}^*, orthogonal to 1
  ClassFunction sum = ClassFunction::zero(g);
  for (int b : leaves)
    sum += induced_augmentation(g, t.monodromy[b]);
  if (!(sum == t.artin_character()) || !inner_product(sum, trivial_character(g)).is_zero())
    fail("a_T differs from the leaf sum");

  // (i): random A containing b
  std::bernoulli_distribution coin(0.5);
  for (int b : leaves) {
    std::vector<int> a{b};
    for (int x : leaves)
      if (x != b && coin(rng))
        a.push_back(x);
    std::sort(a.begin(), a.end());
    Rational pairwise = oracle::density_pairwise(t, a, b);
    if (density(t, a, b) != pairwise || density_path_formula(t, a, b) != pairwise)
      fail("density path formula");
  }

  // (ii): every irreducible with constant pairing m on A = {b : <chi, u_b^*> != 0}
  for (const auto &chi : character_table(g).irreducibles) {
    Cyclotomic m = inner_product(chi, augmentation_character(g));
    std::vector<int> a;
    bool uniform = true;
    for (int b : leaves) {
      auto v = inner_product(chi, induced_augmentation(g, t.monodromy[b]));
      if (v.is_zero())
        continue;
      uniform = uniform && v == m;
      a.push_back(b);
    }
    if (!uniform || a.empty())
      continue;
    for (int b : a) {
      auto r = density_character_identity(t, chi, a, b);
      Cyclotomic rhs = inner_product(chi, t.depth[b]) - inner_product(chi, t.depth[t.tree.root]);
      if (!r.holds || !(Cyclotomic(r.m * oracle::density_pairwise(t, a, b)) == rhs))
        fail("m d(A, b) != delta_b(chi) - delta_root(chi)");
    }
  }

  // monotone chain along root paths for irreducible chi
  for (const auto &chi : character_table(g).irreducibles) {
    Cyclotomic top = inner_product(chi, augmentation_character(g));
    for (int b : leaves) {
      Rational prev = top.rational();
      auto path = oracle::path_to(t.tree, b);
      for (std::size_t i = 1; i < path.size(); ++i) {
        int v = t.tree.edges[path[i]].target;
        Rational cur = inner_product(chi, induced_augmentation(g, t.monodromy[v])).rational();
        if (cur > prev)
          fail("monotone chain");
        prev = cur;
      }
    }
  }

  auto lift = equivariant_lift(t);
  if (!lift.quotient_matches)
    fail("equivariant lift does not recover the tree");
}

/// Random valid trees for Z/p, Z/p^2 and Q8 (per_family each).
inline Outcome lemma_suite(int per_family, unsigned seed, std::vector<std::string> *summary = nullptr) {
  Outcome out;
  std::mt19937 rng(seed);
  auto families = tree_families();
  // Z/p trees are pooled over p = 2, 3, 5; Z/p^2 over 4, 9
  std::vector<std::vector<int>> pools{{0, 1, 2}, {3, 4}, {5}};
  std::vector<std::string> names{"Z/p", "Z/p^2", "Q8"};
  for (std::size_t k = 0; k < pools.size(); ++k) {
    int made = 0, attempts = 0, internal_edges = 0;
    while (made < per_family && attempts < 200 * per_family) {
      ++attempts;
      const auto &f = families[pools[k][attempts % pools[k].size()]];
      auto t = oracle::random_valid_tree(f.group, f.p, rng);
      if (!t)
        continue;
      ++made;
      ++out.cases;
      for (const auto &e : t->tree.edges)
        internal_edges += e.eps.sign() > 0;
      check_tree(*t, f.name, rng, out);
    }
    if (made < per_family)
      out.fail(names[k] + ": only " + std::to_string(made) + " valid trees generated");
    if (summary)
      summary->push_back(names[k] + ": " + std::to_string(made) + " trees, " + std::to_string(internal_edges) +
                         " internal edges");
  }
  return out;
}

/// break_decomposition reassembles depth_character on every bundled disk action.
inline Outcome break_suite() {
  Outcome out;
  std::vector<hg::DiskAction> acts;
  for (const auto &f : fixtures::bundled_actions())
    acts.push_back(hg::io::read_action_file(f));
  for (int p : {2, 3, 5})
    acts.push_back(fixtures::affine(p));
  for (const auto &act : acts) {
    ++out.cases;
    auto br = hg::break_decomposition(act);
    if (!br.matches_depth || !(br.reassembled == hg::depth_character(act)))
      out.fail("break reassembly on " + act.group().label());
  }
  return out;
}

/// Every witness from hurwitz_feasibility validates, has a_T = a and delta_T = 0.
inline Outcome witness_suite(unsigned seed, int per_family) {
  Outcome out;
  std::mt19937 rng(seed);
  for (const auto &f : tree_families()) {
    std::vector<int> cyc;
    for (const auto &c : hg::subgroup_classes(f.group, true))
      if (c.order > 1)
        cyc.push_back(c.id);
    std::uniform_int_distribution<int> n(1, f.group.order() == 8 ? 3 : 4), pick(0, static_cast<int>(cyc.size()) - 1);
    for (int i = 0; i < per_family; ++i) {
      hg::ClassFunction a = hg::ClassFunction::zero(f.group);
      for (int k = n(rng); k > 0; --k)
        a += hg::induced_augmentation(f.group, cyc[pick(rng)]);
      auto r = hg::hurwitz_feasibility(f.group, f.p, a, 1);
      if (!r.witness)
        continue;
      ++out.cases;
      const auto &w = *r.witness;
      if (!hg::validate(w).ok() || !(w.artin_character() == a) || !w.depth_character().is_zero() ||
          !r.witness_matches)
        out.fail(f.name + ": witness " + hg::canonical_code(w) + " fails validation");
    }
  }
  return out;
}

inline std::string describe(const Outcome &o) {
  std::ostringstream s;
  s << o.cases << " cases, " << o.failures << " failures";
  for (const auto &m : o.messages)
    s << "; " << m;
  return s.str();
}

}  // namespace props

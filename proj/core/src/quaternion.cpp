#include "hg/quaternion.hpp"

#include <functional>
#include <stdexcept>

#include "hg/local_action.hpp"
#include "hg/subgroups.hpp"

namespace hg {

QuaternionReport quaternion_report(int n, int extra_leaves, int threads) {
  if (n < 2 || n > 7)
    throw std::invalid_argument("quaternion report needs 2 <= n and 2^(n+1) <= 256, got n = " + std::to_string(n));
  if (extra_leaves < 0)
    throw std::invalid_argument("extra leaf budget must be nonnegative");
  QuaternionReport r;
  r.n = n;
  r.group = builders::generalized_quaternion(n);
  const FiniteGroup &g = r.group;
  r.h = {parse_subgroup(g, "<tau>"), parse_subgroup(g, "<sigma>"), parse_subgroup(g, "<sigma tau>")};

  Elem tau = g.parse_element("tau");
  std::vector<Elem> zgen{g.pow(tau, 2)};
  ElementSet z = generate_subgroup(g, zgen);
  Quotient q = quotient(g, z);

  // chi_i: the order-2 linear character with H_i in its kernel
  const auto &qtab = character_table(q.group);
  for (int i = 0; i < 3; ++i) {
    const ElementSet &hi = subgroup_class(g, r.h[i]).rep;
    bool found = false;
    for (std::size_t k = 1; k < qtab.irreducibles.size() && !found; ++k) {
      ClassFunction f = inflate(qtab.irreducibles[k], q);
      bool kernel = true;
      for (Elem x = 0; x < g.order(); ++x)
        if (hi.test(x) && !(f.at(x) == Cyclotomic(1)))
          kernel = false;
      if (kernel) {
        r.chi[i] = f;
        found = true;
      }
    }
    if (!found)
      throw std::logic_error("no order-2 character with " + subgroup_class(g, r.h[i]).name + " in its kernel");
  }

  r.lemma_holds = true;
  for (const auto &c : subgroup_classes(g, true)) {
    if ((c.rep & ~z).none())
      continue;
    bool hit = c.id == r.h[0] || c.id == r.h[1] || c.id == r.h[2];
    r.lemma_detail.push_back(c.name + (hit ? " is one of H_0, H_1, H_2" : " has nontrivial image but is not conjugate to any H_i"));
    r.lemma_holds = r.lemma_holds && hit;
  }

  // Klein-four action t -> t/(1 + mu t) over F_4, sigma -> 1 and tau -> w
  FiniteField f4(2, 2);
  const int prec = 8;
  std::map<std::string, FqSeries> gens{{"sigma", additive_translation_series(f4, 1, prec)},
                                       {"tau", additive_translation_series(f4, f4.parse("w"), prec)}};
  LocalAction klein = LocalAction::make(f4, q.group, gens, prec);
  r.klein_artin = local_artin_character(klein);
  for (int i = 0; i < 3; ++i) {
    // chi_i on the quotient, read off through the section
    std::vector<Cyclotomic> vals;
    for (int c = 0; c < q.group.class_count(); ++c)
      vals.push_back(r.chi[i].at(q.section[q.group.class_rep(c)]));
    r.klein_pairings[i] = inner_product(r.klein_artin, ClassFunction(q.group, vals)).rational();
  }

  r.minimal = induced_augmentation(g, r.h[0]) + induced_augmentation(g, r.h[1]) + induced_augmentation(g, r.h[2]);
  for (int i = 0; i < 3; ++i)
    r.simple_pairings[i] = inner_product(r.minimal, r.chi[i]).rational();
  r.simple = r.simple_pairings[0] == Rational(2) && r.simple_pairings[1] == r.simple_pairings[2] &&
             r.simple_pairings[1] >= Rational(2) && r.klein_pairings[0] == Rational(2);

  // psi: induced from a faithful linear character of <tau>
  ElementSet h0 = generate_subgroup(g, std::vector<Elem>{tau});
  const long m = 1L << n;
  std::vector<Elem> powers(g.order(), -1);
  for (long k = 0; k < m; ++k)
    powers[g.pow(tau, k)] = static_cast<Elem>(k);
  r.psi = induce_from(g, h0, [&](Elem x) { return Cyclotomic::root_of_unity(m, powers[x]); });
  r.psi_pairings_two = true;
  for (const auto &c : subgroup_classes(g, true)) {
    if (c.order == 1)
      continue;
    Rational v = inner_product(r.psi, induced_augmentation(g, c.id)).rational();
    r.psi_pairings.emplace_back(c.id, v);
    r.psi_pairings_two = r.psi_pairings_two && v == Rational(2);
  }
  // b0 has monodromy H_2; by (H5) delta_b0 is the induced delta^mult of H_2
  ClassFunction delta_b0 = induced_delta_mult(g, r.h[2], 2);
  r.delta_b0_psi = inner_product(r.psi, delta_b0).rational();
  r.d_bi_b0[0] = inner_product(r.chi[0], delta_b0).rational();
  r.d_bi_b0[1] = inner_product(r.chi[1], delta_b0).rational();
  r.d_bprime_b0 = r.d_bi_b0[0] + r.d_bi_b0[1];
  r.d_b_b0 = r.delta_b0_psi / Rational(2);
  r.density_contradiction = r.d_bprime_b0 > r.d_b_b0;

  // completions: extra leaves with cyclic classes inside <tau^2> (invisible to the chi_i)
  std::vector<int> hidden;
  for (const auto &c : subgroup_classes(g, true))
    if (c.order > 1 && (c.rep & ~z).none())
      hidden.push_back(c.id);
  std::vector<int> extra;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    QuaternionCompletion comp;
    comp.extra = extra;
    comp.artin = r.minimal;
    for (int c : extra)
      comp.artin = comp.artin + induced_augmentation(g, c);
    comp.bertin = bertin_check(comp.artin);
    comp.report = hurwitz_feasibility(g, 2, comp.artin, threads);
    r.completions.push_back(std::move(comp));
    if (static_cast<int>(extra.size()) == extra_leaves)
      return;
    for (std::size_t i = from; i < hidden.size(); ++i) {
      extra.push_back(hidden[i]);
      rec(i);
      extra.pop_back();
    }
  };
  rec(0);
  r.all_infeasible = true;
  for (const auto &c : r.completions)
    r.all_infeasible = r.all_infeasible && c.report.verdict == Verdict::Infeasible;
  return r;
}

}  // namespace hg

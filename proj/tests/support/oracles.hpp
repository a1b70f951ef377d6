#pragma once

// Test-side reference computations. These deliberately avoid the library's
// class bookkeeping and LP machinery: they work element by element on the
// Cayley table, or enumerate candidates by brute force.

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "hg/characters.hpp"
#include "hg/group.hpp"
#include "hg/obstruction.hpp"
#include "hg/simplex.hpp"
#include "hg/subgroups.hpp"
#include "hg/tree.hpp"

namespace oracle {

using hg::ClassFunction;
using hg::Cyclotomic;
using hg::Elem;
using hg::ElementSet;
using hg::FiniteGroup;
using hg::Rational;

/// Conjugacy classes by orbit computation, as sorted element lists.
inline std::vector<std::vector<Elem>> brute_classes(const FiniteGroup &g) {
  const int n = g.order();
  std::vector<int> seen(n, 0);
  std::vector<std::vector<Elem>> out;
  for (Elem x = 0; x < n; ++x) {
    if (seen[x])
      continue;
    std::set<Elem> orbit;
    for (Elem y = 0; y < n; ++y)
      orbit.insert(g.mul(g.mul(y, x), g.inv(y)));
    for (Elem z : orbit)
      seen[z] = 1;
    out.emplace_back(orbit.begin(), orbit.end());
  }
  return out;
}

inline int brute_exponent(const FiniteGroup &g) {
  int e = 1;
  for (Elem x = 0; x < g.order(); ++x) {
    int k = 1;
    for (Elem y = x; y != 0; y = g.mul(y, x))
      ++k;
    e = std::lcm(e, k);
  }
  return e;
}

inline int brute_center_order(const FiniteGroup &g) {
  int c = 0;
  for (Elem x = 0; x < g.order(); ++x) {
    bool central = true;
    for (Elem y = 0; y < g.order() && central; ++y)
      central = g.mul(x, y) == g.mul(y, x);
    c += central;
  }
  return c;
}

/// Distinct cyclic subgroups <g> as element sets.
inline std::set<std::vector<Elem>> brute_cyclic_subgroups(const FiniteGroup &g) {
  std::set<std::vector<Elem>> out;
  for (Elem x = 0; x < g.order(); ++x) {
    std::vector<Elem> s{0};
    for (Elem y = x; y != 0; y = g.mul(y, x))
      s.push_back(y);
    std::sort(s.begin(), s.end());
    out.insert(s);
  }
  return out;
}

/// Is some conjugate of h inside k?
inline bool brute_contained(const FiniteGroup &g, const ElementSet &h, const ElementSet &k) {
  for (Elem x = 0; x < g.order(); ++x) {
    bool inside = true;
    for (Elem y = 0; y < g.order() && inside; ++y)
      if (h[y])
        inside = k[g.conjugate(x, y)];
    if (inside)
      return true;
  }
  return false;
}

/// |G|^-1 sum over elements of conj(a(x)) b(x).
inline Cyclotomic inner(const ClassFunction &a, const ClassFunction &b) {
  const FiniteGroup &g = a.group();
  Cyclotomic s;
  for (Elem x = 0; x < g.order(); ++x)
    s += a.at(x).conj() * b.at(x);
  return s * Cyclotomic(Rational(1, g.order()));
}

/// Ind_H^G f(x) = |H|^-1 sum over y in G with y x y^-1 in H of f(y x y^-1).
inline std::vector<Cyclotomic> induce_direct(const hg::Embedding &e, const ClassFunction &f) {
  const FiniteGroup &g = e.parent;
  std::vector<Elem> back(g.order(), -1);
  for (Elem s = 0; s < e.sub.order(); ++s)
    back[e.image[s]] = s;
  int h = e.sub.order();
  std::vector<Cyclotomic> out(g.order());
  for (Elem x = 0; x < g.order(); ++x) {
    Cyclotomic s;
    for (Elem y = 0; y < g.order(); ++y) {
      Elem c = g.conjugate(y, x);
      if (back[c] >= 0)
        s += f.at(back[c]);
    }
    out[x] = s * Cyclotomic(Rational(1, h));
  }
  return out;
}

/// Expected <delta^mult, chi> for an irreducible chi of order p^n.
inline Rational delta_mult_pairing(int p, int n) { return Rational(n * p - n + 1, p - 1); }

/// delta^mult on Z/p^m at an element of order p^k, straight from the defining values.
inline Rational delta_mult_value(int p, int m, int k) {
  long pm = 1;
  for (int i = 0; i < m; ++i)
    pm *= p;
  if (k == 0)
    return Rational(m * pm);
  long top = 1;
  for (int i = 0; i < m - k + 1; ++i)
    top *= p;
  return Rational(-top, p - 1);
}

/// Vertex ids are positions; edges (source, target, eps).
struct Shape {
  std::vector<std::pair<int, int>> edges;
  int vertices = 0;
};

/// All rooted shapes with at most three leaves, every vertex labelled G.
/// Includes shapes that break (H1) on purpose so that validate() does the filtering.
inline std::vector<Shape> small_shapes(int leaves) {
  std::vector<Shape> out;
  if (leaves == 1) {
    out.push_back({{{0, 1}}, 2});
    out.push_back({{{0, 1}, {1, 2}}, 3});
  } else if (leaves == 2) {
    out.push_back({{{0, 1}, {1, 2}, {1, 3}}, 4});
    out.push_back({{{0, 1}, {1, 2}, {2, 3}, {2, 4}}, 5});
  } else if (leaves == 3) {
    out.push_back({{{0, 1}, {1, 2}, {1, 3}, {1, 4}}, 5});
    out.push_back({{{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}}, 6});
  }
  return out;
}

/// Rational grid search for G = Z/q: trees with 1..3 leaves, all labels G, internal
/// thicknesses k / (2(p-1)) for k = 1..4p, delta_root = 0.
/// Returns a valid tree with a_T = a if one exists.
inline std::optional<hg::HurwitzTree> zp_grid_search(const FiniteGroup &g, int p, const ClassFunction &a) {
  const int whole = hg::whole_class(g);
  const int den = 2 * std::max(p - 1, 1);
  for (int leaves = 1; leaves <= 3; ++leaves) {
    for (const Shape &s : small_shapes(leaves)) {
      std::vector<int> out_deg(s.vertices, 0);
      for (auto [u, v] : s.edges)
        ++out_deg[u];
      std::vector<int> internal;
      for (int i = 0; i < static_cast<int>(s.edges.size()); ++i)
        if (out_deg[s.edges[i].second] > 0)
          internal.push_back(i);
      std::vector<int> k(internal.size(), 1);
      const int top = 4 * p;
      while (true) {
        std::vector<hg::TreeEdge> edges;
        for (int i = 0; i < static_cast<int>(s.edges.size()); ++i)
          edges.push_back({s.edges[i].first, s.edges[i].second, Rational(0)});
        for (std::size_t j = 0; j < internal.size(); ++j)
          edges[internal[j]].eps = Rational(k[j], den);
        std::vector<long> ids(s.vertices);
        for (int i = 0; i < s.vertices; ++i)
          ids[i] = i;
        try {
          auto t = hg::MetricTree::make(ids, edges);
          auto h = hg::make_hurwitz_tree(g, p, t, std::vector<int>(s.vertices, whole));
          if (hg::validate(h).ok() && h.artin_character() == a)
            return h;
        } catch (const hg::TreeError &) {
        }
        std::size_t j = 0;
        while (j < k.size() && k[j] == top)
          k[j++] = 1;
        if (j == k.size())
          break;
        ++k[j];
      }
    }
  }
  return std::nullopt;
}

/// Root-to-vertex edge lists from parent pointers.
inline std::vector<int> path_to(const hg::MetricTree &t, int v) {
  std::vector<int> path;
  while (t.parent_edge[v] >= 0) {
    path.push_back(t.parent_edge[v]);
    v = t.edges[t.parent_edge[v]].source;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

/// d(A, b) computed pairwise: sum of common root-path thickness.
inline Rational density_pairwise(const hg::HurwitzTree &h, const std::vector<int> &a, int b) {
  auto pb = path_to(h.tree, b);
  Rational d;
  for (int x : a) {
    if (x == b)
      continue;
    auto px = path_to(h.tree, x);
    for (std::size_t i = 0; i < std::min(pb.size(), px.size()) && pb[i] == px[i]; ++i)
      d += h.tree.edges[pb[i]].eps;
  }
  return d;
}

/// Random valid Hurwitz tree: random leaf multiset, random candidate shape, then an LP over
/// thicknesses and the multiplicities of delta_root with a random objective. Returns nullopt
/// when the drawn shape admits no valid metric.
inline std::optional<hg::HurwitzTree> random_valid_tree(const FiniteGroup &g, int p, std::mt19937 &rng,
                                                        int max_leaves = 4) {
  std::vector<int> cyc;
  for (const auto &c : hg::subgroup_classes(g, true))
    if (c.order > 1)
      cyc.push_back(c.id);
  int nleaves = std::uniform_int_distribution<int>(1, max_leaves)(rng);
  std::vector<int> leaves;
  for (int i = 0; i < nleaves; ++i)
    leaves.push_back(cyc[std::uniform_int_distribution<int>(0, static_cast<int>(cyc.size()) - 1)(rng)]);
  std::sort(leaves.begin(), leaves.end());
  auto cands = hg::enumerate_candidates(g, leaves);
  if (cands.empty())
    return std::nullopt;
  const auto &c = cands[std::uniform_int_distribution<int>(0, static_cast<int>(cands.size()) - 1)(rng)];
  const auto &t = c.tree;
  const auto &irr = hg::character_table(g).irreducibles;
  const int nirr = static_cast<int>(irr.size());

  // one delta_root variable per pair {chi, conj chi} of nontrivial irreducibles
  std::vector<int> orbit_of(nirr, -1);
  int norbits = 0;
  for (int i = 1; i < nirr; ++i) {
    if (orbit_of[i] >= 0)
      continue;
    orbit_of[i] = norbits;
    auto cc = irr[i].conj();
    for (int j = i + 1; j < nirr; ++j)
      if (irr[j] == cc)
        orbit_of[j] = norbits;
    ++norbits;
  }
  std::vector<int> internal;
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e)
    if (!t.is_leaf(t.edges[e].target))
      internal.push_back(e);
  const int ne = static_cast<int>(internal.size());
  const int nv = ne + norbits + 1;  // last variable: slack t
  std::vector<int> var_of_edge(t.edges.size(), -1);
  for (int i = 0; i < ne; ++i)
    var_of_edge[internal[i]] = i;

  auto s_mult = [&](int e) {
    int w = t.edges[e].target;
    ClassFunction a = ClassFunction::zero(g);
    for (int b : t.leaves_below(w))
      a += hg::induced_augmentation(g, c.monodromy[b]);
    return hg::rational_multiplicities(a - hg::induced_augmentation(g, c.monodromy[w]));
  };
  std::vector<std::vector<Rational>> sm(t.edges.size());
  for (int e : internal)
    sm[e] = s_mult(e);

  hg::LinearProgram lp;
  lp.variables = nv;
  auto path_row = [&](int v, int chi) {
    std::vector<Rational> row(nv);
    row[ne + orbit_of[chi]] = 1;
    for (int e : path_to(t, v))
      if (var_of_edge[e] >= 0)
        row[var_of_edge[e]] += sm[e][chi];
    return row;
  };
  for (int b : t.leaves()) {
    auto want = hg::rational_multiplicities(hg::induced_delta_mult(g, c.monodromy[b], p));
    for (int chi = 1; chi < nirr; ++chi)
      lp.add_row(path_row(b, chi), hg::Sense::Eq, want[chi]);
  }
  for (int v = 0; v < t.vertex_count(); ++v)
    if (!t.is_leaf(v))
      for (int chi = 1; chi < nirr; ++chi)
        lp.add_row(path_row(v, chi), hg::Sense::Ge, Rational(0));
  for (int i = 0; i < nv - 1; ++i) {
    std::vector<Rational> row(nv);
    row[i] = 1;
    lp.add_row(row, hg::Sense::Le, Rational(4));
  }
  for (int i = 0; i < ne; ++i) {
    std::vector<Rational> row(nv);
    row[i] = 1;
    row[nv - 1] = -1;
    lp.add_row(row, hg::Sense::Ge, Rational(0));
  }
  lp.objective.assign(nv, Rational(0));
  std::uniform_int_distribution<int> w(-3, 3);
  for (int i = 0; i < nv - 1; ++i)
    lp.objective[i] = Rational(w(rng), 8);
  lp.objective[nv - 1] = Rational(4);
  auto res = hg::solve_lp(lp);
  if (res.status != hg::LpStatus::Optimal || (ne > 0 && res.x[nv - 1].sign() <= 0))
    return std::nullopt;

  auto tree = t;
  for (int i = 0; i < ne; ++i)
    tree.edges[internal[i]].eps = res.x[i];
  ClassFunction root = ClassFunction::zero(g);
  for (int chi = 1; chi < nirr; ++chi)
    root += Cyclotomic(res.x[ne + orbit_of[chi]]) * irr[chi];
  return hg::make_hurwitz_tree(g, p, tree, c.monodromy, root);
}

}  // namespace oracle

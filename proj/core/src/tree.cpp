#include "hg/tree.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hg/arith.hpp"
#include "hg/subgroups.hpp"

namespace hg {

MetricTree MetricTree::make(std::vector<long> ids, std::vector<TreeEdge> edges, std::optional<long> root_id) {
  MetricTree t;
  t.ids = std::move(ids);
  t.edges = std::move(edges);
  const int n = t.vertex_count();
  if (n < 2)
    throw TreeError("tree needs at least a root and one further vertex");
  std::set<long> unique(t.ids.begin(), t.ids.end());
  if (static_cast<int>(unique.size()) != n)
    throw TreeError("duplicate vertex ids");
  if (static_cast<int>(t.edges.size()) != n - 1)
    throw TreeError("tree with " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) + " edges, got " +
                    std::to_string(t.edges.size()));
  t.parent_edge.assign(n, -1);
  t.child_edges.assign(n, {});
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    const auto &ed = t.edges[e];
    if (ed.source < 0 || ed.source >= n || ed.target < 0 || ed.target >= n || ed.source == ed.target)
      throw TreeError("edge " + std::to_string(e) + " has invalid endpoints");
    if (t.parent_edge[ed.target] >= 0)
      throw TreeError("vertex " + t.vname(ed.target) + " has more than one incoming edge");
    t.parent_edge[ed.target] = e;
    t.child_edges[ed.source].push_back(e);
  }
  std::vector<int> roots;
  for (int v = 0; v < n; ++v)
    if (t.parent_edge[v] < 0)
      roots.push_back(v);
  if (root_id) {
    t.root = t.index_of(*root_id);
    if (t.parent_edge[t.root] >= 0)
      throw TreeError("root " + t.vname(t.root) + " has an incoming edge");
  } else {
    if (roots.size() != 1)
      throw TreeError("tree must have exactly one vertex without incoming edge");
    t.root = roots.front();
  }
  if (t.child_edges[t.root].size() != 1)
    throw TreeError("root " + t.vname(t.root) + " must have exactly one outgoing edge (the trunk)");
  t.trunk = t.child_edges[t.root].front();
  std::vector<bool> seen(n, false);
  std::vector<int> stack{t.root};
  seen[t.root] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : t.child_edges[v]) {
      int w = t.edges[e].target;
      if (seen[w])
        throw TreeError("cycle through vertex " + t.vname(w));
      seen[w] = true;
      ++reached;
      stack.push_back(w);
    }
  }
  if (reached != n)
    throw TreeError("tree is not connected from the root");
  return t;
}

int MetricTree::index_of(long id) const {
  auto it = std::find(ids.begin(), ids.end(), id);
  if (it == ids.end())
    throw TreeError("unknown vertex id " + std::to_string(id));
  return static_cast<int>(it - ids.begin());
}

std::vector<int> MetricTree::leaves() const {
  std::vector<int> out;
  for (int v = 0; v < vertex_count(); ++v)
    if (is_leaf(v))
      out.push_back(v);
  return out;
}

std::vector<int> MetricTree::leaves_below(int v) const {
  std::vector<int> out;
  std::vector<int> stack{v};
  while (!stack.empty()) {
    int w = stack.back();
    stack.pop_back();
    if (is_leaf(w))
      out.push_back(w);
    for (int e : child_edges[w])
      stack.push_back(edges[e].target);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> MetricTree::path_edges(int v) const {
  std::vector<int> out;
  while (parent_edge[v] >= 0) {
    out.push_back(parent_edge[v]);
    v = edges[parent_edge[v]].source;
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::string MetricTree::ename(int e) const {
  return "edge " + vname(edges[e].source).substr(1) + "->" + vname(edges[e].target).substr(1);
}

std::vector<std::string> metric_failures(const MetricTree &t) {
  std::vector<std::string> out;
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    const auto &ed = t.edges[e];
    bool leaf = t.is_leaf(ed.target);
    if (ed.eps.sign() < 0)
      out.push_back(t.ename(e) + ": negative thickness " + ed.eps.str());
    else if (leaf && !ed.eps.is_zero())
      out.push_back(t.ename(e) + ": leaf edge must have thickness 0, got " + ed.eps.str());
    else if (!leaf && ed.eps.is_zero())
      out.push_back(t.ename(e) + ": internal edge must have positive thickness");
  }
  return out;
}

namespace {

void check_classes(const FiniteGroup &g, const MetricTree &t, const std::vector<int> &monodromy) {
  if (static_cast<int>(monodromy.size()) != t.vertex_count())
    throw TreeError("monodromy must be given for every vertex");
  int count = static_cast<int>(subgroup_lattice(g).classes.size());
  for (int v = 0; v < t.vertex_count(); ++v)
    if (monodromy[v] < 0 || monodromy[v] >= count)
      throw TreeError("vertex " + t.vname(v) + ": invalid monodromy class");
}

std::vector<ClassFunction> leaf_sum_artin(const FiniteGroup &g, const MetricTree &t,
                                          const std::vector<int> &monodromy) {
  std::vector<ClassFunction> out;
  for (const auto &ed : t.edges) {
    ClassFunction a = ClassFunction::zero(g);
    for (int b : t.leaves_below(ed.target))
      a += induced_augmentation(g, monodromy[b]);
    out.push_back(std::move(a));
  }
  return out;
}

std::vector<ClassFunction> propagate(const FiniteGroup &g, const MetricTree &t, const std::vector<int> &monodromy,
                                     const std::vector<ClassFunction> &artin, const ClassFunction &depth_root) {
  std::vector<ClassFunction> depth(t.vertex_count(), ClassFunction::zero(g));
  depth[t.root] = depth_root;
  std::vector<int> stack{t.root};
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int e : t.child_edges[v]) {
      int w = t.edges[e].target;
      ClassFunction s = artin[e] - induced_augmentation(g, monodromy[w]);
      depth[w] = depth[v] + Cyclotomic(t.edges[e].eps) * s;
      stack.push_back(w);
    }
  }
  return depth;
}

std::optional<ClassFunction> expected_leaf_depth(const FiniteGroup &g, int p, int cls) {
  const auto &c = subgroup_class(g, cls);
  if (!c.cyclic)
    return std::nullopt;
  return induced_delta_mult(g, cls, p);
}

}  // namespace

std::vector<ClassFunction> derive_artin(const FiniteGroup &g, const MetricTree &t, const std::vector<int> &monodromy) {
  check_classes(g, t, monodromy);
  for (int b : t.leaves()) {
    const auto &c = subgroup_class(g, monodromy[b]);
    if (!c.cyclic || c.order == 1)
      throw TreeError("H2: leaf " + t.vname(b) + " has monodromy " + c.name + ", which is not nontrivial cyclic");
  }
  return leaf_sum_artin(g, t, monodromy);
}

DepthResult derive_depths(const FiniteGroup &g, int p, const MetricTree &t, const std::vector<int> &monodromy,
                          const std::vector<ClassFunction> &artin, const ClassFunction &depth_root) {
  check_classes(g, t, monodromy);
  auto bad = metric_failures(t);
  if (!bad.empty())
    throw TreeError("metric axiom: " + bad.front());
  DepthResult r;
  r.depth = propagate(g, t, monodromy, artin, depth_root);
  for (int b : t.leaves()) {
    auto want = expected_leaf_depth(g, p, monodromy[b]);
    if (!want || !(*want == r.depth[b]))
      r.h5_failures.push_back(b);
  }
  return r;
}

HurwitzTree make_hurwitz_tree(const FiniteGroup &g, int p, MetricTree t, std::vector<int> monodromy,
                              std::optional<ClassFunction> depth_root) {
  if (!is_prime(p))
    throw TreeError("p = " + std::to_string(p) + " is not prime");
  check_classes(g, t, monodromy);
  HurwitzTree h;
  h.group = g;
  h.p = p;
  h.artin = leaf_sum_artin(g, t, monodromy);
  ClassFunction root = depth_root ? *depth_root : ClassFunction::zero(g);
  if (!root.group().same_as(g))
    throw TreeError("root depth is not a class function on the tree's group");
  h.depth = propagate(g, t, monodromy, h.artin, root);
  h.tree = std::move(t);
  h.monodromy = std::move(monodromy);
  return h;
}

HurwitzTree star_tree(const FiniteGroup &g, int p, const std::vector<int> &leaf_classes, const Rational &trunk_eps,
                      std::optional<ClassFunction> depth_root) {
  const int k = static_cast<int>(leaf_classes.size());
  if (k < 1)
    throw TreeError("star tree needs at least one leaf");
  std::vector<long> ids;
  std::vector<TreeEdge> edges;
  std::vector<int> mono;
  int whole = whole_class(g);
  if (k == 1) {
    ids = {0, 1};
    edges.push_back({0, 1, Rational(0)});
    mono = {whole, leaf_classes[0]};
  } else {
    ids = {0, 1};
    edges.push_back({0, 1, trunk_eps});
    mono = {whole, whole};
    for (int i = 0; i < k; ++i) {
      ids.push_back(2 + i);
      edges.push_back({1, 2 + i, Rational(0)});
      mono.push_back(leaf_classes[i]);
    }
  }
  return make_hurwitz_tree(g, p, MetricTree::make(ids, edges), mono, std::move(depth_root));
}

bool ValidationReport::ok() const {
  return h3_forms_agree && std::all_of(checks.begin(), checks.end(), [](const AxiomCheck &c) { return c.pass; });
}

const AxiomCheck &ValidationReport::check(const std::string &name) const {
  for (const auto &c : checks)
    if (c.name == name)
      return c;
  throw TreeError("no axiom check named " + name);
}

ValidationReport validate(const HurwitzTree &h) {
  const FiniteGroup &g = h.group;
  const MetricTree &t = h.tree;
  if (!is_prime(h.p))
    throw TreeError("p = " + std::to_string(h.p) + " is not prime");
  check_classes(g, t, h.monodromy);
  if (h.artin.size() != t.edges.size() || static_cast<int>(h.depth.size()) != t.vertex_count())
    throw TreeError("decorations do not match the tree shape");
  for (const auto &a : h.artin)
    if (!a.group().same_as(g))
      throw TreeError("Artin character on a different group than the tree");
  for (const auto &d : h.depth)
    if (!d.group().same_as(g))
      throw TreeError("depth character on a different group than the tree");

  ValidationReport rep;
  auto add = [&](const std::string &name, std::vector<std::string> failures) {
    AxiomCheck c;
    c.name = name;
    c.pass = failures.empty();
    c.failures = std::move(failures);
    rep.checks.push_back(std::move(c));
  };
  add("metric", metric_failures(t));

  std::vector<std::string> f1;
  const int whole = whole_class(g);
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    int s = t.edges[e].source, w = t.edges[e].target;
    if (!class_contained(g, h.monodromy[w], h.monodromy[s]))
      f1.push_back(t.ename(e) + ": " + subgroup_class(g, h.monodromy[w]).name + " is not contained in " +
                   subgroup_class(g, h.monodromy[s]).name + " up to conjugacy");
  }
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (v == t.root) {
      int child = t.edges[t.trunk].target;
      if (h.monodromy[v] != whole || h.monodromy[child] != whole)
        f1.push_back("root " + t.vname(v) + ": root and its successor must both have monodromy G");
      continue;
    }
    if (t.is_leaf(v))
      continue;
    long sum = 0;
    for (int e : t.child_edges[v])
      sum += subgroup_class(g, h.monodromy[v]).order / subgroup_class(g, h.monodromy[t.edges[e].target]).order;
    if (sum <= 1)
      f1.push_back("vertex " + t.vname(v) + ": sum of indices [G_v:G_v'] is " + std::to_string(sum) +
                   ", must exceed 1");
  }
  add("H1", f1);

  std::vector<std::string> f2;
  for (int b : t.leaves()) {
    const auto &c = subgroup_class(g, h.monodromy[b]);
    if (!c.cyclic || c.order == 1)
      f2.push_back("leaf " + t.vname(b) + ": monodromy " + c.name + " is not nontrivial cyclic");
  }
  add("H2", f2);

  std::vector<std::string> f3, f3_remark;
  auto leaf_sums = leaf_sum_artin(g, t, h.monodromy);
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    int w = t.edges[e].target;
    ClassFunction expected = ClassFunction::zero(g);
    if (t.is_leaf(w))
      expected = induced_augmentation(g, h.monodromy[w]);
    else
      for (int c : t.child_edges[w])
        expected += h.artin[c];
    if (!(expected == h.artin[e]))
      f3.push_back(t.ename(e) + ": Artin character " + h.artin[e].str() + " differs from " + expected.str());
    if (!(leaf_sums[e] == h.artin[e]))
      f3_remark.push_back(t.ename(e));
  }
  rep.h3_forms_agree = f3.empty() == f3_remark.empty();
  add("H3", f3);

  std::vector<std::string> f4;
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    int s = t.edges[e].source, w = t.edges[e].target;
    ClassFunction se = h.artin[e] - induced_augmentation(g, h.monodromy[w]);
    ClassFunction expected = h.depth[s] + Cyclotomic(t.edges[e].eps) * se;
    if (!(expected == h.depth[w]))
      f4.push_back(t.ename(e) + ": depth at " + t.vname(w) + " is " + h.depth[w].str() + ", expected " +
                   expected.str());
  }
  add("H4", f4);

  std::vector<std::string> f5;
  for (int b : t.leaves()) {
    auto want = expected_leaf_depth(g, h.p, h.monodromy[b]);
    if (!want)
      f5.push_back("leaf " + t.vname(b) + ": Sylow subgroup undefined for a non-cyclic monodromy");
    else if (!(*want == h.depth[b]))
      f5.push_back("leaf " + t.vname(b) + ": depth " + h.depth[b].str() + " differs from induced delta^mult " +
                   want->str());
  }
  add("H5", f5);

  std::vector<std::string> fm;
  const ClassFunction one = trivial_character(g);
  for (int e = 0; e < static_cast<int>(t.edges.size()); ++e) {
    if (!is_true_character(h.artin[e]))
      fm.push_back(t.ename(e) + ": Artin character is not a true character");
    if (!inner_product(h.artin[e], one).is_zero())
      fm.push_back(t.ename(e) + ": Artin character pairs nontrivially with 1_G");
  }
  for (int v = 0; v < t.vertex_count(); ++v) {
    if (!is_positive_rational(h.depth[v]))
      fm.push_back("vertex " + t.vname(v) + ": depth is not in R+(G,Q)");
    if (!inner_product(h.depth[v], one).is_zero())
      fm.push_back("vertex " + t.vname(v) + ": depth pairs nontrivially with 1_G");
  }
  add("membership", fm);
  return rep;
}

}  // namespace hg

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "hg/subgroups.hpp"
#include "hg/tree.hpp"

namespace hg {

namespace {

void require_leaf(const HurwitzTree &h, int b) {
  if (b < 0 || b >= h.tree.vertex_count() || !h.tree.is_leaf(b))
    throw TreeError("vertex index " + std::to_string(b) + " is not a leaf");
}

}  // namespace

Rational inverse_distance(const HurwitzTree &h, int b1, int b2) {
  require_leaf(h, b1);
  require_leaf(h, b2);
  if (b1 == b2)
    throw TreeError("inverse distance needs two distinct leaves");
  auto p1 = h.tree.path_edges(b1), p2 = h.tree.path_edges(b2);
  Rational d;
  for (std::size_t i = 0; i < std::min(p1.size(), p2.size()) && p1[i] == p2[i]; ++i)
    d += h.tree.edges[p1[i]].eps;
  return d;
}

Rational density(const HurwitzTree &h, const std::vector<int> &a, int b) {
  if (std::find(a.begin(), a.end(), b) == a.end())
    throw TreeError("density: leaf " + h.tree.vname(b) + " is not in A");
  Rational d;
  for (int x : a)
    if (x != b)
      d += inverse_distance(h, b, x);
  return d;
}

Rational density_path_formula(const HurwitzTree &h, const std::vector<int> &a, int b) {
  if (std::find(a.begin(), a.end(), b) == a.end())
    throw TreeError("density: leaf " + h.tree.vname(b) + " is not in A");
  for (int x : a)
    require_leaf(h, x);
  Rational d;
  for (int e : h.tree.path_edges(b)) {
    auto below = h.tree.leaves_below(h.tree.edges[e].target);
    long n = std::count_if(a.begin(), a.end(), [&](int x) {
      return x != b && std::binary_search(below.begin(), below.end(), x);
    });
    d += h.tree.edges[e].eps * Rational(n);
  }
  return d;
}

DensityIdentity density_character_identity(const HurwitzTree &h, const ClassFunction &chi, const std::vector<int> &a,
                                           int b) {
  const FiniteGroup &g = h.group;
  Cyclotomic m = inner_product(chi, augmentation_character(g));
  if (!m.is_rational())
    throw TreeError("density identity: <chi, u_G> is not rational");
  for (int leaf : h.tree.leaves()) {
    bool in_a = std::find(a.begin(), a.end(), leaf) != a.end();
    Cyclotomic v = inner_product(chi, induced_augmentation(g, h.monodromy[leaf]));
    if (!(v == (in_a ? m : Cyclotomic(0))))
      throw TreeError("density identity: hypothesis fails at leaf " + h.tree.vname(leaf) + " (<chi, u*> = " +
                      v.str() + ", expected " + (in_a ? m.str() : "0") + ")");
  }
  DensityIdentity r;
  r.m = m.rational();
  r.density = density(h, a, b);
  r.lhs = Cyclotomic(r.m * r.density);
  r.rhs = inner_product(chi, h.depth[b]) - inner_product(chi, h.depth[h.tree.root]);
  r.holds = r.lhs == r.rhs;
  return r;
}

LiftedTree equivariant_lift(const HurwitzTree &h) {
  const FiniteGroup &g = h.group;
  const MetricTree &t = h.tree;
  LiftedTree out;
  out.representatives.assign(t.vertex_count(), ElementSet{});
  out.representatives[t.root] = g.all_elements();
  if (h.monodromy[t.root] != whole_class(g))
    throw TreeError("H1: root monodromy must be G");
  std::vector<int> order{t.root};
  for (std::size_t i = 0; i < order.size(); ++i) {
    int v = order[i];
    for (int e : t.child_edges[v]) {
      int w = t.edges[e].target;
      const ElementSet &parent = out.representatives[v];
      const ElementSet &rep = subgroup_class(g, h.monodromy[w]).rep;
      bool found = false;
      for (int x = 0; x < g.order() && !found; ++x) {
        ElementSet c = conjugate_set(g, x, rep);
        if ((c & parent) == c) {
          out.representatives[w] = c;
          found = true;
        }
      }
      if (!found)
        throw TreeError("H1: " + t.ename(e) + " has a child class not contained in the parent class");
      order.push_back(w);
    }
  }

  std::vector<std::vector<int>> coset_index(t.vertex_count(), std::vector<int>(g.order(), -1));
  for (int v : order) {
    const ElementSet &hset = out.representatives[v];
    auto hel = to_elements(hset, g.order());
    for (int x = 0; x < g.order(); ++x) {
      if (coset_index[v][x] >= 0)
        continue;
      int idx = static_cast<int>(out.vertices.size());
      for (Elem k : hel)
        coset_index[v][g.mul(x, k)] = idx;
      ElementSet stab;
      for (Elem k : hel)
        stab.set(g.conjugate(x, k));
      out.vertices.push_back({v, x, stab});
      if (v != t.root)
        out.edges.emplace_back(coset_index[t.parent(v)][x], idx);
    }
  }

  bool ok = true;
  for (std::size_t i = 0; i < out.vertices.size() && ok; ++i) {
    const auto &lv = out.vertices[i];
    if (classify_subgroup(g, lv.stabilizer).class_id != h.monodromy[lv.base])
      ok = false;
  }
  for (const auto &[par, child] : out.edges)
    for (Elem s : g.generators()) {
      const auto &pc = out.vertices[par], &cc = out.vertices[child];
      int gp = coset_index[pc.base][g.mul(s, pc.coset_rep)];
      int gc = coset_index[cc.base][g.mul(s, cc.coset_rep)];
      if (std::find(out.edges.begin(), out.edges.end(), std::make_pair(gp, gc)) == out.edges.end())
        ok = false;
    }
  std::vector<int> per_base(t.vertex_count(), 0);
  for (const auto &lv : out.vertices)
    ++per_base[lv.base];
  for (int v = 0; v < t.vertex_count(); ++v)
    if (per_base[v] * subgroup_class(g, h.monodromy[v]).order != g.order())
      ok = false;
  out.quotient_matches = ok;
  return out;
}

namespace {

std::string dot_escape(const std::string &s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string tree_dot(const HurwitzTree &h) {
  std::ostringstream os;
  os << "digraph hurwitz_tree {\n";
  for (int v = 0; v < h.tree.vertex_count(); ++v)
    os << "  n" << h.tree.ids[v] << " [label=\"" << h.tree.vname(v) << "\\n"
       << dot_escape(subgroup_class(h.group, h.monodromy[v]).name) << "\"];\n";
  for (const auto &e : h.tree.edges)
    os << "  n" << h.tree.ids[e.source] << " -> n" << h.tree.ids[e.target] << " [label=\"" << e.eps.str()
       << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string lifted_dot(const HurwitzTree &h, const LiftedTree &lift) {
  std::ostringstream os;
  os << "digraph equivariant_tree {\n";
  for (std::size_t i = 0; i < lift.vertices.size(); ++i) {
    const auto &lv = lift.vertices[i];
    os << "  n" << i << " [label=\"" << h.tree.vname(lv.base) << " / " << dot_escape(h.group.element_name(lv.coset_rep))
       << "\\nstab " << dot_escape(subgroup_name(h.group, lv.stabilizer)) << "\"];\n";
  }
  for (const auto &[a, b] : lift.edges) {
    int e = h.tree.parent_edge[lift.vertices[b].base];
    os << "  n" << a << " -> n" << b << " [label=\"" << h.tree.edges[e].eps.str() << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

std::string canonical_code(const HurwitzTree &h) {
  const MetricTree &t = h.tree;
  std::function<std::string(int)> code = [&](int v) {
    std::vector<std::tuple<int, Rational, std::string>> kids;
    for (int e : t.child_edges[v]) {
      int w = t.edges[e].target;
      kids.emplace_back(h.monodromy[w], t.edges[e].eps, code(w));
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(" + std::to_string(h.monodromy[v]);
    for (const auto &[c, eps, sub] : kids)
      s += " " + eps.str() + ":" + sub;
    return s + ")";
  };
  return code(t.root);
}

}  // namespace hg

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hg/characters.hpp"
#include "hg/group.hpp"
#include "hg/rational.hpp"

namespace hg {

class TreeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct TreeEdge {
  int source = 0;
  int target = 0;
  Rational eps;
};

/// Rooted tree with edge thicknesses. Vertices are indexed 0..n-1 and carry an
/// external id used in files and messages.
struct MetricTree {
  std::vector<long> ids;
  std::vector<TreeEdge> edges;
  int root = 0;
  std::vector<int> parent_edge;  ///< -1 for the root
  std::vector<std::vector<int>> child_edges;
  int trunk = -1;

  /// Checks connectivity, orientation and the single trunk; throws TreeError.
  static MetricTree make(std::vector<long> ids, std::vector<TreeEdge> edges, std::optional<long> root_id = {});

  int vertex_count() const { return static_cast<int>(ids.size()); }
  int index_of(long id) const;
  bool is_leaf(int v) const { return v != root && child_edges[v].empty(); }
  std::vector<int> leaves() const;
  std::vector<int> leaves_below(int v) const;
  /// Edges from the root down to v, in order.
  std::vector<int> path_edges(int v) const;
  int parent(int v) const { return parent_edge[v] < 0 ? -1 : edges[parent_edge[v]].source; }
  std::string vname(int v) const { return "v" + std::to_string(ids[v]); }
  std::string ename(int e) const;
};

/// Failures of the metric axiom: eps_e = 0 exactly when t(e) is a leaf, eps >= 0.
std::vector<std::string> metric_failures(const MetricTree &t);

struct HurwitzTree {
  FiniteGroup group;
  int p = 2;
  MetricTree tree;
  std::vector<int> monodromy;         ///< subgroup class id per vertex
  std::vector<ClassFunction> artin;   ///< per edge
  std::vector<ClassFunction> depth;   ///< per vertex

  const ClassFunction &artin_character() const { return artin.at(tree.trunk); }
  const ClassFunction &depth_character() const { return depth.at(tree.root); }
};

/// a_e = sum of u_{G_b}^* over the leaves below t(e). Throws TreeError on a non-cyclic or trivial leaf class.
std::vector<ClassFunction> derive_artin(const FiniteGroup &g, const MetricTree &t, const std::vector<int> &monodromy);

struct DepthResult {
  std::vector<ClassFunction> depth;
  std::vector<int> h5_failures;  ///< leaves where delta_b differs from the induced delta^mult
};

/// Propagates delta from the root with delta_t = delta_s + eps * s_e. Throws TreeError if the metric is invalid.
DepthResult derive_depths(const FiniteGroup &g, int p, const MetricTree &t, const std::vector<int> &monodromy,
                          const std::vector<ClassFunction> &artin, const ClassFunction &depth_root);

/// Tree with derived Artin characters and depths (delta at the root defaults to 0).
HurwitzTree make_hurwitz_tree(const FiniteGroup &g, int p, MetricTree t, std::vector<int> monodromy,
                              std::optional<ClassFunction> depth_root = {});

/// root -> v1 -> leaves, with every non-leaf vertex labelled G.
HurwitzTree star_tree(const FiniteGroup &g, int p, const std::vector<int> &leaf_classes, const Rational &trunk_eps,
                      std::optional<ClassFunction> depth_root = {});

struct AxiomCheck {
  std::string name;
  bool pass = true;
  std::vector<std::string> failures;
};

struct ValidationReport {
  std::vector<AxiomCheck> checks;  ///< metric, H1..H5, membership
  bool h3_forms_agree = true;      ///< local (H3) and the leaf-sum form give the same verdict
  bool ok() const;
  const AxiomCheck &check(const std::string &name) const;
};

ValidationReport validate(const HurwitzTree &t);

/// Sum of eps along the root path to the lowest common ancestor of two distinct leaves.
Rational inverse_distance(const HurwitzTree &t, int b1, int b2);
/// d(A, b) = sum over b' in A \ {b} of d(b, b').
Rational density(const HurwitzTree &t, const std::vector<int> &a, int b);
/// sum_i eps_{e_i} n(A, v_i) along the root path of b.
Rational density_path_formula(const HurwitzTree &t, const std::vector<int> &a, int b);

struct DensityIdentity {
  Rational m;
  Rational density;
  Cyclotomic lhs;  ///< m * d(A, b)
  Cyclotomic rhs;  ///< delta_b(chi) - delta_root(chi)
  bool holds = false;
};

/// Checks m d(A,b) = delta_b(chi) - delta_root(chi); throws TreeError if chi does not satisfy the hypothesis.
DensityIdentity density_character_identity(const HurwitzTree &t, const ClassFunction &chi, const std::vector<int> &a,
                                           int b);

/// Equivariant tree: vertices above v are the cosets x G_v of compatible representatives.
struct LiftedTree {
  struct Vertex {
    int base;       ///< vertex of the quotient tree
    Elem coset_rep; ///< least element of the coset
    ElementSet stabilizer;
  };
  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;  ///< (parent, child) lifted vertex indices
  std::vector<ElementSet> representatives; ///< chosen G_v per base vertex
  bool quotient_matches = false;           ///< orbits and stabiliser classes recover (T, [G_v])
};

LiftedTree equivariant_lift(const HurwitzTree &t);
std::string lifted_dot(const HurwitzTree &t, const LiftedTree &lift);
std::string tree_dot(const HurwitzTree &t);

/// Canonical encoding: children sorted by (monodromy class, eps, code).
std::string canonical_code(const HurwitzTree &t);

}  // namespace hg

#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hg/group.hpp"

namespace hg {

/// One conjugacy class of subgroups.
struct SubgroupClass {
  int id = 0;
  ElementSet rep;        ///< least conjugate in sorted-id order
  int order = 1;
  int conjugates = 1;    ///< size of the conjugacy class
  bool cyclic = true;
  Elem generator = 0;    ///< least generator id when cyclic, else -1
  bool normal = true;
  std::string name;      ///< "1", "G", "<tau>", "<sigma,tau^2>"
};

struct SubgroupLattice {
  std::vector<SubgroupClass> classes;  ///< sorted by (order, rep)
  std::unordered_map<ElementSet, int> index;  ///< every subgroup -> its class id
};

/// Upper bound on the number of subgroups (all conjugates) the lattice will enumerate.
inline constexpr int kMaxSubgroups = 60000;

/// Full lattice of subgroup classes, memoised on the group. Throws GroupError past kMaxSubgroups.
const SubgroupLattice &subgroup_lattice(const FiniteGroup &g);

/// All classes, or only the cyclic ones.
std::vector<SubgroupClass> subgroup_classes(const FiniteGroup &g, bool cyclic_only = false);

const SubgroupClass &subgroup_class(const FiniteGroup &g, int id);
int trivial_class(const FiniteGroup &g);
int whole_class(const FiniteGroup &g);

struct Classified {
  int class_id;
  Elem witness;  ///< least x with x H x^-1 = rep
};

/// Class of an arbitrary subgroup (throws if h is not a subgroup).
Classified classify_subgroup(const FiniteGroup &g, const ElementSet &h);

/// Least x with x H_rep x^-1 contained in K_rep, if any.
std::optional<Elem> contained_up_to_conjugacy(const FiniteGroup &g, int h, int k);

/// Cached boolean form of contained_up_to_conjugacy.
bool class_contained(const FiniteGroup &g, int h, int k);

/// Sylow p-subgroup of a cyclic class (unique subgroup of order p^v).
int sylow_p_of_cyclic(const FiniteGroup &g, int c, int p);

/// Parses "G", "1" or "<w1,w2,...>" with words in the generators; returns the class id.
int parse_subgroup(const FiniteGroup &g, const std::string &text);

/// Generator-word name of an arbitrary subgroup, e.g. "<sigma tau>".
std::string subgroup_name(const FiniteGroup &g, const ElementSet &h);

/// Lexicographic order on sorted element lists of equal-size sets.
bool set_less(const ElementSet &a, const ElementSet &b);

}  // namespace hg

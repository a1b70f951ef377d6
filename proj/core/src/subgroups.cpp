#include "hg/subgroups.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace hg {

bool set_less(const ElementSet &a, const ElementSet &b) {
  ElementSet x = a ^ b;
  if (x.none())
    return false;
  for (int i = 0; i < kMaxGroupOrder; ++i)
    if (x.test(i))
      return a.test(i);
  return false;
}

namespace {

std::vector<Elem> greedy_generators(const FiniteGroup &g, const ElementSet &h) {
  std::vector<Elem> gens;
  ElementSet closure;
  closure.set(g.identity());
  // Prefer elements of large order so cyclic groups get a single generator.
  std::vector<Elem> el = to_elements(h, g.order());
  std::stable_sort(el.begin(), el.end(),
                   [&](Elem a, Elem b) { return g.element_order(a) > g.element_order(b); });
  for (Elem a : el) {
    if (closure.test(a))
      continue;
    gens.push_back(a);
    closure = generate_subgroup(g, gens);
  }
  std::sort(gens.begin(), gens.end());
  return gens;
}

SubgroupLattice build_lattice(const FiniteGroup &g) {
  const int n = g.order();
  SubgroupLattice lat;
  struct Raw {
    ElementSet rep;
    std::vector<Elem> gens;
    int conjugates;
  };
  std::vector<Raw> raw;
  std::unordered_map<ElementSet, int> seen;
  int total = 0;

  auto add = [&](const ElementSet &h, std::vector<Elem> gens) {
    if (seen.count(h))
      return;
    ElementSet best = h;
    std::vector<ElementSet> conj;
    for (int x = 0; x < n; ++x) {
      ElementSet c = conjugate_set(g, x, h);
      if (seen.emplace(c, static_cast<int>(raw.size())).second)
        conj.push_back(c);
      if (set_less(c, best)) {
        best = c;
      }
    }
    total += static_cast<int>(conj.size());
    if (total > kMaxSubgroups)
      throw GroupError("subgroup lattice of " + g.label() + " exceeds " + std::to_string(kMaxSubgroups) +
                       " subgroups");
    raw.push_back({best, std::move(gens), static_cast<int>(conj.size())});
  };

  ElementSet trivial;
  trivial.set(g.identity());
  add(trivial, {});
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const ElementSet h = raw[i].rep;
    std::vector<Elem> base = greedy_generators(g, h);
    ElementSet done = h;
    for (int x = 0; x < n; ++x) {
      if (done.test(x))
        continue;
      std::vector<Elem> gens = base;
      gens.push_back(x);
      ElementSet k = generate_subgroup(g, gens);
      // <H, y> = <H, x> for y in the coset Hx and for generators of <x>
      for (int e = 1; e <= g.element_order(x); ++e) {
        if (std::gcd(e, g.element_order(x)) != 1)
          continue;
        Elem y = g.pow(x, e);
        for (Elem a : to_elements(h, n))
          done.set(g.mul(a, y));
      }
      add(k, gens);
    }
  }

  std::vector<int> order(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i)
    order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    auto ca = raw[a].rep.count(), cb = raw[b].rep.count();
    if (ca != cb)
      return ca < cb;
    return set_less(raw[a].rep, raw[b].rep);
  });
  std::vector<int> relabel(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    relabel[order[i]] = static_cast<int>(i);

  for (std::size_t i = 0; i < order.size(); ++i) {
    const Raw &r = raw[order[i]];
    SubgroupClass c;
    c.id = static_cast<int>(i);
    c.rep = r.rep;
    c.order = static_cast<int>(r.rep.count());
    c.conjugates = r.conjugates;
    c.normal = r.conjugates == 1;
    c.generator = -1;
    for (Elem a : to_elements(r.rep, n))
      if (g.element_order(a) == c.order) {
        c.generator = a;
        break;
      }
    c.cyclic = c.generator >= 0;
    c.name = subgroup_name(g, r.rep);
    lat.classes.push_back(std::move(c));
  }
  for (auto &[set, id] : seen)
    lat.index.emplace(set, relabel[id]);
  return lat;
}

struct Containment {
  std::vector<std::vector<char>> table;
};

}  // namespace

std::string subgroup_name(const FiniteGroup &g, const ElementSet &h) {
  int size = static_cast<int>(h.count());
  if (size == 1)
    return "1";
  if (size == g.order())
    return "G";
  auto gens = greedy_generators(g, h);
  std::ostringstream os;
  os << '<';
  for (std::size_t i = 0; i < gens.size(); ++i)
    os << (i ? "," : "") << g.element_name(gens[i]);
  os << '>';
  return os.str();
}

const SubgroupLattice &subgroup_lattice(const FiniteGroup &g) {
  return *g.memo<SubgroupLattice>("subgroup_lattice", [&] { return build_lattice(g); });
}

std::vector<SubgroupClass> subgroup_classes(const FiniteGroup &g, bool cyclic_only) {
  std::vector<SubgroupClass> out;
  for (const auto &c : subgroup_lattice(g).classes)
    if (!cyclic_only || c.cyclic)
      out.push_back(c);
  return out;
}

const SubgroupClass &subgroup_class(const FiniteGroup &g, int id) {
  const auto &cls = subgroup_lattice(g).classes;
  if (id < 0 || id >= static_cast<int>(cls.size()))
    throw GroupError("subgroup class id " + std::to_string(id) + " out of range");
  return cls[id];
}

int trivial_class(const FiniteGroup &) { return 0; }
int whole_class(const FiniteGroup &g) { return static_cast<int>(subgroup_lattice(g).classes.size()) - 1; }

Classified classify_subgroup(const FiniteGroup &g, const ElementSet &h) {
  const auto &lat = subgroup_lattice(g);
  auto it = lat.index.find(h);
  if (it == lat.index.end())
    throw GroupError("element set is not a subgroup of " + g.label());
  const ElementSet &rep = lat.classes[it->second].rep;
  for (int x = 0; x < g.order(); ++x)
    if (conjugate_set(g, x, h) == rep)
      return {it->second, x};
  throw GroupError("internal: subgroup not conjugate to its class representative");
}

std::optional<Elem> contained_up_to_conjugacy(const FiniteGroup &g, int h, int k) {
  const auto &H = subgroup_class(g, h);
  const auto &K = subgroup_class(g, k);
  if (K.order % H.order)
    return std::nullopt;
  for (int x = 0; x < g.order(); ++x) {
    ElementSet c = conjugate_set(g, x, H.rep);
    if ((c & K.rep) == c)
      return x;
  }
  return std::nullopt;
}

bool class_contained(const FiniteGroup &g, int h, int k) {
  auto table = g.memo<Containment>("subgroup_containment", [&] {
    int m = static_cast<int>(subgroup_lattice(g).classes.size());
    Containment c;
    c.table.assign(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        c.table[i][j] = contained_up_to_conjugacy(g, i, j).has_value();
    return c;
  });
  return table->table.at(h).at(k);
}

int sylow_p_of_cyclic(const FiniteGroup &g, int c, int p) {
  const auto &C = subgroup_class(g, c);
  if (!C.cyclic)
    throw GroupError("sylow_p_of_cyclic: class " + C.name + " is not cyclic");
  int m = C.order;
  while (m % p == 0)
    m /= p;
  Elem x = g.pow(C.generator, m);
  std::vector<Elem> gens{x};
  return classify_subgroup(g, generate_subgroup(g, gens)).class_id;
}

int parse_subgroup(const FiniteGroup &g, const std::string &text) {
  std::string t;
  for (char ch : text)
    if (ch != '\n' && ch != '\t')
      t += ch;
  while (!t.empty() && t.front() == ' ')
    t.erase(t.begin());
  while (!t.empty() && t.back() == ' ')
    t.pop_back();
  if (t == "G")
    return whole_class(g);
  if (t == "1" || t == "<>" || t == "<1>")
    return trivial_class(g);
  if (t.size() < 2 || t.front() != '<' || t.back() != '>')
    throw GroupError("cannot parse subgroup '" + text + "': expected G, 1 or <words>");
  std::vector<Elem> gens;
  std::string inner = t.substr(1, t.size() - 2);
  std::stringstream ss(inner);
  std::string word;
  while (std::getline(ss, word, ','))
    gens.push_back(g.parse_element(word));
  return classify_subgroup(g, generate_subgroup(g, gens)).class_id;
}

}  // namespace hg

#include "hg/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>

#include "hg/arith.hpp"

namespace hg {

namespace detail {

struct GroupData {
  int n = 0;
  std::vector<int> table;  // n*n
  std::vector<Elem> inverse;
  std::vector<int> orders;
  std::vector<Elem> gens;
  std::vector<std::string> gen_names;
  std::vector<std::vector<int>> words;
  std::vector<std::string> names;
  std::string label;
  std::vector<std::vector<Elem>> classes;
  std::vector<int> class_of;
  std::vector<int> inverse_class;
  int exponent = 1;
  bool abelian = true;

  mutable std::mutex memo_mu;
  mutable std::map<std::string, std::shared_ptr<const void>> memo;
};

}  // namespace detail

namespace {

std::string compress_word(const std::vector<int> &word, const std::vector<std::string> &names) {
  if (word.empty())
    return "1";
  std::ostringstream os;
  std::size_t i = 0;
  bool first = true;
  while (i < word.size()) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i])
      ++j;
    if (!first)
      os << ' ';
    first = false;
    os << names[word[i]];
    if (j - i > 1)
      os << '^' << (j - i);
    i = j;
  }
  return os.str();
}

using Key = std::vector<int>;
using MulFn = std::function<Key(const Key &, const Key &)>;

/// Closes the generator set under the product and hands the table to from_table.
FiniteGroup generate(const std::vector<std::string> &gen_names, const std::vector<Key> &gens,
                     const Key &identity, const MulFn &mul, const std::string &label) {
  std::map<Key, int> index;
  std::vector<Key> keys{identity};
  index[identity] = 0;
  for (std::size_t i = 0; i < keys.size(); ++i) {
    for (const auto &g : gens) {
      Key y = mul(keys[i], g);
      if (index.emplace(y, static_cast<int>(keys.size())).second) {
        keys.push_back(std::move(y));
        if (static_cast<int>(keys.size()) > kMaxGroupOrder)
          throw GroupError("group '" + label + "' exceeds the order bound " +
                           std::to_string(kMaxGroupOrder));
      }
    }
  }
  int n = static_cast<int>(keys.size());
  std::vector<std::vector<int>> table(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      auto it = index.find(mul(keys[a], keys[b]));
      if (it == index.end())
        throw GroupError("group '" + label + "': product not closed");
      table[a][b] = it->second;
    }
  std::vector<int> gen_ids;
  for (const auto &g : gens)
    gen_ids.push_back(index.at(g));
  return FiniteGroup::from_table(table, 0, gen_ids, gen_names, label);
}

}  // namespace

const detail::GroupData &FiniteGroup::data() const {
  if (!d_)
    throw GroupError("use of an empty FiniteGroup");
  return *d_;
}

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<int>> &table, int identity,
                                    std::vector<int> generators, std::vector<std::string> generator_names,
                                    std::string label) {
  const int n = static_cast<int>(table.size());
  if (n < 1 || n > kMaxGroupOrder)
    throw GroupError("group order " + std::to_string(n) + " outside 1.." + std::to_string(kMaxGroupOrder));
  if (generators.size() != generator_names.size())
    throw GroupError("generator names do not match generators");
  for (const auto &row : table) {
    if (static_cast<int>(row.size()) != n)
      throw GroupError("Cayley table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw GroupError("Cayley table entry out of range");
  }
  for (int a = 0; a < n; ++a)
    if (table[identity][a] != a || table[a][identity] != a)
      throw GroupError("table has no two-sided identity");
  std::vector<int> inverse(n, -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (table[a][b] == identity && table[b][a] == identity) {
        inverse[a] = b;
        break;
      }
    if (inverse[a] < 0)
      throw GroupError("element without two-sided inverse in Cayley table");
  }
  auto assoc = [&](int a, int b, int c) { return table[table[a][b]][c] == table[a][table[b][c]]; };
  if (n <= 64) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (!assoc(a, b, c))
            throw GroupError("Cayley table is not associative");
  } else {
    std::mt19937 rng(12345);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int t = 0; t < 20000; ++t)
      if (!assoc(pick(rng), pick(rng), pick(rng)))
        throw GroupError("Cayley table is not associative");
  }

  // Shortlex words by breadth-first search over right multiplication.
  std::vector<std::vector<int>> words(n);
  std::vector<int> discovered(n, -1);
  std::vector<int> bfs{identity};
  discovered[identity] = 0;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    int x = bfs[i];
    for (std::size_t g = 0; g < generators.size(); ++g) {
      int y = table[x][generators[g]];
      if (discovered[y] < 0) {
        discovered[y] = static_cast<int>(bfs.size());
        words[y] = words[x];
        words[y].push_back(static_cast<int>(g));
        bfs.push_back(y);
      }
    }
  }
  if (static_cast<int>(bfs.size()) != n)
    throw GroupError("generators of '" + label + "' do not generate the table");

  std::vector<int> order(n, 0);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != identity) {
      x = table[x][a];
      ++k;
    }
    order[a] = k;
    if (n % k)
      throw GroupError("element order does not divide the group order");
  }

  std::vector<int> perm(n);  // new id -> old id
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    return std::pair(order[a], discovered[a]) < std::pair(order[b], discovered[b]);
  });
  std::vector<int> relabel(n);
  for (int i = 0; i < n; ++i)
    relabel[perm[i]] = i;

  auto d = std::make_shared<detail::GroupData>();
  d->n = n;
  d->label = std::move(label);
  d->gen_names = std::move(generator_names);
  d->table.resize(static_cast<std::size_t>(n) * n);
  d->inverse.resize(n);
  d->orders.resize(n);
  d->words.resize(n);
  d->names.resize(n);
  for (int a = 0; a < n; ++a) {
    int oa = perm[a];
    for (int b = 0; b < n; ++b)
      d->table[static_cast<std::size_t>(a) * n + b] = relabel[table[oa][perm[b]]];
    d->inverse[a] = relabel[inverse[oa]];
    d->orders[a] = order[oa];
    d->words[a] = words[oa];
    d->names[a] = compress_word(d->words[a], d->gen_names);
  }
  for (int g : generators)
    d->gens.push_back(relabel[g]);
  d->exponent = 1;
  for (int a = 0; a < n; ++a)
    d->exponent = std::lcm(d->exponent, d->orders[a]);
  for (int a = 0; a < n && d->abelian; ++a)
    for (int b = 0; b < n; ++b)
      if (d->table[a * n + b] != d->table[b * n + a]) {
        d->abelian = false;
        break;
      }

  d->class_of.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    if (d->class_of[a] >= 0)
      continue;
    int c = static_cast<int>(d->classes.size());
    std::vector<Elem> members;
    for (int g = 0; g < n; ++g) {
      int x = d->table[d->table[g * n + a] * n + d->inverse[g]];
      if (d->class_of[x] < 0) {
        d->class_of[x] = c;
        members.push_back(x);
      }
    }
    std::sort(members.begin(), members.end());
    d->classes.push_back(std::move(members));
  }
  for (auto &cls : d->classes)
    d->inverse_class.push_back(d->class_of[d->inverse[cls.front()]]);
  return FiniteGroup(std::move(d));
}

int FiniteGroup::order() const { return data().n; }
Elem FiniteGroup::mul(Elem a, Elem b) const { return data().table[static_cast<std::size_t>(a) * data().n + b]; }
Elem FiniteGroup::inv(Elem a) const { return data().inverse[a]; }

Elem FiniteGroup::pow(Elem a, long k) const {
  int o = element_order(a);
  k = positive_mod(k, o);
  Elem r = identity();
  for (long i = 0; i < k; ++i)
    r = mul(r, a);
  return r;
}

int FiniteGroup::element_order(Elem a) const { return data().orders[a]; }
int FiniteGroup::exponent() const { return data().exponent; }
bool FiniteGroup::is_abelian() const { return data().abelian; }
const std::vector<Elem> &FiniteGroup::generators() const { return data().gens; }
const std::vector<std::string> &FiniteGroup::generator_names() const { return data().gen_names; }
const std::string &FiniteGroup::element_name(Elem a) const { return data().names[a]; }
const std::vector<int> &FiniteGroup::element_word(Elem a) const { return data().words[a]; }
const std::string &FiniteGroup::label() const { return data().label; }
int FiniteGroup::class_count() const { return static_cast<int>(data().classes.size()); }
const std::vector<std::vector<Elem>> &FiniteGroup::classes() const { return data().classes; }
int FiniteGroup::class_of(Elem a) const { return data().class_of[a]; }
int FiniteGroup::inverse_class(int c) const { return data().inverse_class[c]; }
int FiniteGroup::power_class(int c, long k) const { return class_of(pow(class_rep(c), k)); }

ElementSet FiniteGroup::all_elements() const {
  ElementSet s;
  for (int a = 0; a < order(); ++a)
    s.set(a);
  return s;
}

ElementSet FiniteGroup::center() const {
  ElementSet s;
  for (int c = 0; c < class_count(); ++c)
    if (class_size(c) == 1)
      s.set(class_rep(c));
  return s;
}

Elem FiniteGroup::parse_element(std::string_view word) const {
  const auto &d = data();
  Elem result = identity();
  std::string text(word);
  for (char &c : text)
    if (c == '*')
      c = ' ';
  std::istringstream is(text);
  std::string token;
  bool any = false;
  while (is >> token) {
    any = true;
    if (token == "1" || token == "e")
      continue;
    std::string name = token;
    long power = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      try {
        std::size_t used = 0;
        std::string exp = token.substr(caret + 1);
        power = std::stol(exp, &used);
        if (used != exp.size())
          throw std::invalid_argument(exp);
      } catch (const std::exception &) {
        throw GroupError("bad exponent in word '" + std::string(word) + "'");
      }
    }
    auto it = std::find(d.gen_names.begin(), d.gen_names.end(), name);
    if (it == d.gen_names.end())
      throw GroupError("unknown generator '" + name + "' in word '" + std::string(word) + "' for group " +
                       d.label);
    result = mul(result, pow(d.gens[it - d.gen_names.begin()], power));
  }
  if (!any)
    throw GroupError("empty group word");
  return result;
}

std::shared_ptr<const void> FiniteGroup::memo_erased(
    const std::string &key, const std::function<std::shared_ptr<const void>()> &f) const {
  const auto &d = data();
  {
    std::lock_guard<std::mutex> lock(d.memo_mu);
    auto it = d.memo.find(key);
    if (it != d.memo.end())
      return it->second;
  }
  auto value = f();
  std::lock_guard<std::mutex> lock(d.memo_mu);
  return d.memo.emplace(key, std::move(value)).first->second;
}

namespace builders {

FiniteGroup cyclic(int n) {
  if (n < 1 || n > kMaxGroupOrder)
    throw GroupError("cyclic(" + std::to_string(n) + "): order outside 1.." + std::to_string(kMaxGroupOrder));
  return generate({"g"}, {{n == 1 ? 0 : 1}}, {0}, [n](const Key &a, const Key &b) { return Key{(a[0] + b[0]) % n}; },
                  "C" + std::to_string(n));
}

FiniteGroup dihedral(int n) {
  if (n < 1 || 2 * n > kMaxGroupOrder)
    throw GroupError("dihedral(" + std::to_string(n) + "): order bound exceeded");
  auto mul = [n](const Key &a, const Key &b) {
    int k = a[1] ? a[0] - b[0] : a[0] + b[0];
    return Key{static_cast<int>(positive_mod(k, n)), a[1] ^ b[1]};
  };
  return generate({"r", "s"}, {{n == 1 ? 0 : 1, 0}, {0, 1}}, {0, 0}, mul, "D" + std::to_string(2 * n));
}

FiniteGroup generalized_quaternion(int n) {
  if (n < 2)
    throw GroupError("generalized_quaternion(n) requires n >= 2");
  if (n + 1 > 8)
    throw GroupError("generalized_quaternion(" + std::to_string(n) + "): order bound exceeded");
  const int m = 1 << n, h = 1 << (n - 1);
  // tau^a sigma^b with sigma tau = tau^-1 sigma and sigma^2 = tau^h
  auto mul = [m, h](const Key &x, const Key &y) {
    long a = x[1] ? x[0] - y[0] : x[0] + y[0];
    if (x[1] && y[1])
      a += h;
    return Key{static_cast<int>(positive_mod(a, m)), x[1] ^ y[1]};
  };
  auto g = generate({"sigma", "tau"}, {{0, 1}, {1, 0}}, {0, 0}, mul, "Q" + std::to_string(2 * m));
  Elem sigma = g.generators()[0], tau = g.generators()[1];
  if (g.pow(tau, m) != g.identity() || g.pow(tau, h) != g.pow(sigma, 2) ||
      g.mul(g.mul(sigma, tau), g.inv(sigma)) != g.inv(tau) || g.order() != 2 * m)
    throw GroupError("generalized quaternion relations violated");
  return g;
}

FiniteGroup elementary_abelian(int p, int k) {
  if (!is_prime(p) || k < 0)
    throw GroupError("elementary_abelian(p,k) requires prime p and k >= 0");
  long size = ipow(p, k);
  if (size > kMaxGroupOrder)
    throw GroupError("elementary_abelian: order bound exceeded");
  if (k == 0)
    return cyclic(1);
  std::vector<std::string> names;
  std::vector<Key> gens;
  for (int i = 0; i < k; ++i) {
    names.push_back("e" + std::to_string(i + 1));
    Key g(k, 0);
    g[i] = 1;
    gens.push_back(g);
  }
  auto mul = [p](const Key &a, const Key &b) {
    Key r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
      r[i] = (a[i] + b[i]) % p;
    return r;
  };
  return generate(names, gens, Key(k, 0), mul, "E" + std::to_string(size));
}

FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b) {
  if (static_cast<long>(a.order()) * b.order() > kMaxGroupOrder)
    throw GroupError("direct_product: order bound exceeded");
  std::vector<std::string> names;
  std::vector<Key> gens;
  auto clash = [&](const std::string &s) {
    return std::find(b.generator_names().begin(), b.generator_names().end(), s) != b.generator_names().end();
  };
  for (std::size_t i = 0; i < a.generators().size(); ++i) {
    std::string n = a.generator_names()[i];
    names.push_back(clash(n) ? n + "_1" : n);
    gens.push_back({a.generators()[i], 0});
  }
  for (std::size_t i = 0; i < b.generators().size(); ++i) {
    std::string n = b.generator_names()[i];
    auto in_a = std::find(a.generator_names().begin(), a.generator_names().end(), n) != a.generator_names().end();
    names.push_back(in_a ? n + "_2" : n);
    gens.push_back({0, b.generators()[i]});
  }
  auto mul = [a, b](const Key &x, const Key &y) { return Key{a.mul(x[0], y[0]), b.mul(x[1], y[1])}; };
  return generate(names, gens, {0, 0}, mul, a.label() + "x" + b.label());
}

FiniteGroup metacyclic(int modulus, int k, int r) {
  if (modulus < 1 || k < 1 || static_cast<long>(modulus) * k > kMaxGroupOrder)
    throw GroupError("metacyclic: order outside 1.." + std::to_string(kMaxGroupOrder));
  if (std::gcd(r, modulus) != 1 || mod_pow(r, k, modulus) != 1 % modulus)
    throw GroupError("metacyclic: action exponent r must satisfy r^k = 1 mod modulus");
  std::vector<long> rpow(k);
  for (int i = 0; i < k; ++i)
    rpow[i] = mod_pow(r, i, modulus);
  auto mul = [modulus, k, rpow](const Key &x, const Key &y) {
    long a = (x[0] + rpow[x[1]] * y[0]) % modulus;
    return Key{static_cast<int>(a), (x[1] + y[1]) % k};
  };
  return generate({"a", "b"}, {{1 % modulus, 0}, {0, 1 % k}}, {0, 0}, mul,
                  "M" + std::to_string(modulus) + "_" + std::to_string(k) + "_" + std::to_string(r));
}

namespace {

void check_permutation(const std::vector<int> &p, std::size_t degree) {
  if (p.size() != degree)
    throw GroupError("permutations of different degrees");
  std::vector<bool> seen(degree, false);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= degree || seen[v])
      throw GroupError("not a permutation of 0.." + std::to_string(degree - 1));
    seen[v] = true;
  }
}

Key compose(const Key &x, const Key &y) {
  Key r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    r[i] = x[y[i]];
  return r;
}

}  // namespace

FiniteGroup from_permutations(const std::vector<std::vector<int>> &generators) {
  if (generators.empty())
    throw GroupError("from_permutations: no generators");
  std::size_t degree = generators.front().size();
  for (const auto &g : generators)
    check_permutation(g, degree);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < generators.size(); ++i)
    names.push_back("g" + std::to_string(i + 1));
  Key id(degree);
  std::iota(id.begin(), id.end(), 0);
  return generate(names, generators, id, compose, "Perm" + std::to_string(degree));
}

FiniteGroup from_permutation_set(const std::vector<std::vector<int>> &elements) {
  if (elements.empty())
    throw GroupError("from_permutation_set: empty set");
  std::size_t degree = elements.front().size();
  for (const auto &g : elements)
    check_permutation(g, degree);
  std::map<Key, int> set;
  for (const auto &g : elements)
    set.emplace(g, 0);
  for (const auto &x : set)
    for (const auto &y : set)
      if (!set.count(compose(x.first, y.first)))
        throw GroupError("non-closed permutation set");
  std::vector<std::vector<int>> gens;
  std::map<Key, int> closure;
  Key id(degree);
  std::iota(id.begin(), id.end(), 0);
  closure.emplace(id, 0);
  for (const auto &g : elements) {
    if (closure.count(g))
      continue;
    gens.push_back(g);
    std::vector<Key> frontier;
    for (const auto &c : closure)
      frontier.push_back(c.first);
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (const auto &s : gens) {
        Key y = compose(frontier[i], s);
        if (closure.emplace(y, 0).second)
          frontier.push_back(y);
      }
  }
  if (gens.empty())
    gens.push_back(id);
  auto g = from_permutations(gens);
  if (static_cast<std::size_t>(g.order()) != set.size())
    throw GroupError("non-closed permutation set");
  return g;
}

}  // namespace builders

std::vector<Elem> to_elements(const ElementSet &s, int order) {
  std::vector<Elem> out;
  for (int a = 0; a < order; ++a)
    if (s.test(a))
      out.push_back(a);
  return out;
}

ElementSet generate_subgroup(const FiniteGroup &g, std::span<const Elem> gens) {
  ElementSet s;
  std::vector<Elem> list{g.identity()};
  s.set(g.identity());
  for (std::size_t i = 0; i < list.size(); ++i)
    for (Elem x : gens) {
      Elem y = g.mul(list[i], x);
      if (!s.test(y)) {
        s.set(y);
        list.push_back(y);
      }
    }
  return s;
}

bool is_subgroup(const FiniteGroup &g, const ElementSet &h) {
  if (!h.test(g.identity()))
    return false;
  auto el = to_elements(h, g.order());
  for (Elem a : el)
    for (Elem b : el)
      if (!h.test(g.mul(a, b)))
        return false;
  return true;
}

ElementSet conjugate_set(const FiniteGroup &g, Elem x, const ElementSet &h) {
  ElementSet out;
  for (int a = 0; a < g.order(); ++a)
    if (h.test(a))
      out.set(g.conjugate(x, a));
  return out;
}

bool is_normal(const FiniteGroup &g, const ElementSet &h) {
  if (!is_subgroup(g, h))
    return false;
  for (Elem x : g.generators())
    if (conjugate_set(g, x, h) != h)
      return false;
  return true;
}

namespace {

/// Image of every element under the map generator i -> gen_images[i], following shortlex words.
std::vector<Elem> images_from_words(const FiniteGroup &src, const FiniteGroup &dst,
                                    const std::vector<Elem> &gen_images) {
  std::vector<Elem> image(src.order());
  for (int a = 0; a < src.order(); ++a) {
    Elem r = dst.identity();
    for (int gi : src.element_word(a))
      r = dst.mul(r, gen_images[gi]);
    image[a] = r;
  }
  return image;
}

}  // namespace

Quotient quotient(const FiniteGroup &g, const ElementSet &normal) {
  if (!is_subgroup(g, normal))
    throw GroupError("quotient: kernel is not a subgroup");
  if (!is_normal(g, normal))
    throw GroupError("quotient: subgroup is not normal");
  const int n = g.order();
  std::vector<int> coset(n, -1);
  std::vector<Elem> reps;
  auto nel = to_elements(normal, n);
  for (int a = 0; a < n; ++a) {
    if (coset[a] >= 0)
      continue;
    int c = static_cast<int>(reps.size());
    reps.push_back(a);
    for (Elem k : nel)
      coset[g.mul(a, k)] = c;
  }
  std::vector<Key> gens;
  for (Elem x : g.generators())
    gens.push_back({coset[x]});
  auto mul = [&g, coset, reps](const Key &x, const Key &y) { return Key{coset[g.mul(reps[x[0]], reps[y[0]])]}; };
  Quotient q;
  q.group = generate(g.generator_names(), gens, {0}, mul, g.label() + "/N" + std::to_string(nel.size()));
  q.parent = g;
  q.kernel = normal;
  q.projection = images_from_words(g, q.group, q.group.generators());
  q.section.assign(q.group.order(), -1);
  for (int a = 0; a < n; ++a)
    if (q.section[q.projection[a]] < 0)
      q.section[q.projection[a]] = a;
  return q;
}

Embedding embed_subgroup(const FiniteGroup &g, const ElementSet &h) {
  if (!is_subgroup(g, h))
    throw GroupError("embed_subgroup: set is not a subgroup of " + g.label());
  std::vector<Elem> gens;
  ElementSet closure;
  closure.set(g.identity());
  for (int a = 0; a < g.order(); ++a) {
    if (!h.test(a) || closure.test(a))
      continue;
    gens.push_back(a);
    closure = generate_subgroup(g, gens);
  }
  if (gens.empty())
    gens.push_back(g.identity());
  std::vector<std::string> names;
  std::vector<Key> keys;
  for (Elem x : gens) {
    std::string nm = g.element_name(x);
    std::replace(nm.begin(), nm.end(), ' ', '.');
    names.push_back(nm);
    keys.push_back({x});
  }
  auto mul = [g](const Key &x, const Key &y) { return Key{g.mul(x[0], y[0])}; };
  Embedding e;
  e.parent = g;
  e.members = h;
  e.sub = generate(names, keys, {g.identity()}, mul, g.label() + "_sub" + std::to_string(h.count()));
  e.image = images_from_words(e.sub, g, gens);
  return e;
}

bool is_homomorphism(const FiniteGroup &a, const FiniteGroup &b, std::span<const Elem> image) {
  if (static_cast<int>(image.size()) != a.order())
    return false;
  for (int x = 0; x < a.order(); ++x)
    for (int y = 0; y < a.order(); ++y)
      if (image[a.mul(x, y)] != b.mul(image[x], image[y]))
        return false;
  return true;
}

std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup &a, const FiniteGroup &b) {
  if (a.order() != b.order() || a.class_count() != b.class_count() || a.exponent() != b.exponent())
    return std::nullopt;
  const auto &gens = a.generators();
  std::vector<std::vector<Elem>> candidates(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (int y = 0; y < b.order(); ++y)
      if (b.element_order(y) == a.element_order(gens[i]))
        candidates[i].push_back(y);
  std::vector<std::size_t> idx(gens.size(), 0);
  for (auto &c : candidates)
    if (c.empty())
      return std::nullopt;
  while (true) {
    std::vector<Elem> gen_images(gens.size());
    for (std::size_t i = 0; i < gens.size(); ++i)
      gen_images[i] = candidates[i][idx[i]];
    auto image = images_from_words(a, b, gen_images);
    bool ok = true;
    for (int x = 0; x < a.order() && ok; ++x)
      for (std::size_t i = 0; i < gens.size() && ok; ++i)
        if (image[a.mul(x, gens[i])] != b.mul(image[x], gen_images[i]))
          ok = false;
    if (ok) {
      std::vector<bool> hit(b.order(), false);
      for (Elem y : image)
        hit[y] = true;
      if (std::all_of(hit.begin(), hit.end(), [](bool v) { return v; }))
        return image;
    }
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == candidates[k].size())
      idx[k++] = 0;
    if (k == idx.size())
      return std::nullopt;
  }
}

}  // namespace hg

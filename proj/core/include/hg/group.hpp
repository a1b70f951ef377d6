#pragma once

#include <bitset>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hg {

inline constexpr int kMaxGroupOrder = 256;

/// Element id, 0..|G|-1; 0 is always the identity.
using Elem = int;
using ElementSet = std::bitset<kMaxGroupOrder>;

namespace detail {
struct GroupData;
}

/// Finite group stored as a full Cayley table.
///
/// Element ids are sorted by (element order, shortlex word in the generators),
/// so the identity is 0 and ids are reproducible from the generator list.
/// Values are immutable and cheap to copy; derived data (subgroup lattice,
/// character table, induced characters) is memoised per group and shared by
/// all copies.
class FiniteGroup {
public:
  FiniteGroup() = default;

  int order() const;
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem pow(Elem a, long k) const;
  /// g * x * g^-1
  Elem conjugate(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  int element_order(Elem a) const;
  int exponent() const;
  bool is_abelian() const;

  const std::vector<Elem> &generators() const;
  const std::vector<std::string> &generator_names() const;
  /// Shortlex word in the generators, e.g. "tau^3 sigma"; "1" for the identity.
  const std::string &element_name(Elem a) const;
  /// Generator indices of the shortlex word of a.
  const std::vector<int> &element_word(Elem a) const;
  /// Parses a word such as "tau^2 sigma", "sigma*tau^-1" or "1".
  Elem parse_element(std::string_view word) const;
  const std::string &label() const;

  int class_count() const;
  const std::vector<std::vector<Elem>> &classes() const;
  const std::vector<Elem> &class_members(int c) const { return classes()[c]; }
  Elem class_rep(int c) const { return classes()[c].front(); }
  int class_size(int c) const { return static_cast<int>(classes()[c].size()); }
  int class_of(Elem a) const;
  int inverse_class(int c) const;
  int power_class(int c, long k) const;

  ElementSet all_elements() const;
  ElementSet center() const;

  bool same_as(const FiniteGroup &o) const { return d_ == o.d_; }
  bool valid() const { return static_cast<bool>(d_); }

  /// Thread-safe memoisation keyed by string; the first stored value wins.
  template <class T>
  std::shared_ptr<const T> memo(const std::string &key, const std::function<T()> &compute) const {
    auto erased = memo_erased(key, [&]() -> std::shared_ptr<const void> {
      return std::make_shared<const T>(compute());
    });
    return std::static_pointer_cast<const T>(erased);
  }

  /// Builds a group from a verified Cayley table. `table[a][b]` is a*b; the
  /// table is relabelled so ids follow the (order, word) convention.
  static FiniteGroup from_table(const std::vector<std::vector<int>> &table, int identity,
                                std::vector<int> generators, std::vector<std::string> generator_names,
                                std::string label);

private:
  std::shared_ptr<const void> memo_erased(const std::string &key,
                                          const std::function<std::shared_ptr<const void>()> &f) const;
  explicit FiniteGroup(std::shared_ptr<detail::GroupData> d) : d_(std::move(d)) {}
  const detail::GroupData &data() const;

  std::shared_ptr<detail::GroupData> d_;
};

/// Error raised when a construction or precondition on groups fails.
class GroupError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

namespace builders {

FiniteGroup cyclic(int n);
/// Dihedral group of order 2n, generators r (rotation) and s (reflection).
FiniteGroup dihedral(int n);
/// Generalised quaternion group of order 2^(n+1), generators sigma and tau with
/// tau^(2^n) = 1, tau^(2^(n-1)) = sigma^2, sigma tau sigma^-1 = tau^-1.
FiniteGroup generalized_quaternion(int n);
FiniteGroup elementary_abelian(int p, int k);
FiniteGroup direct_product(const FiniteGroup &a, const FiniteGroup &b);
/// Z/modulus x| Z/k where the generator b acts by a -> a^r (r^k = 1 mod modulus).
FiniteGroup metacyclic(int modulus, int k, int r);
/// Group generated by permutations of {0..d-1}; product is composition (x*y)(i) = x(y(i)).
FiniteGroup from_permutations(const std::vector<std::vector<int>> &generators);
/// The given permutations must already form a group (closed under composition).
FiniteGroup from_permutation_set(const std::vector<std::vector<int>> &elements);

}  // namespace builders

/// Subgroup generated by the given elements.
ElementSet generate_subgroup(const FiniteGroup &g, std::span<const Elem> gens);
bool is_subgroup(const FiniteGroup &g, const ElementSet &h);
bool is_normal(const FiniteGroup &g, const ElementSet &h);
ElementSet conjugate_set(const FiniteGroup &g, Elem x, const ElementSet &h);
std::vector<Elem> to_elements(const ElementSet &s, int order);

/// Group homomorphism given as an image table; `image[a]` is the image of a.
struct Quotient {
  FiniteGroup group;
  FiniteGroup parent;
  ElementSet kernel;
  std::vector<Elem> projection;  ///< parent element -> quotient element
  std::vector<Elem> section;     ///< quotient element -> least parent id in the coset
};

Quotient quotient(const FiniteGroup &g, const ElementSet &normal);

/// A subgroup viewed as a group in its own right, with the inclusion map.
struct Embedding {
  FiniteGroup parent;
  FiniteGroup sub;
  ElementSet members;
  std::vector<Elem> image;  ///< sub element -> parent element
};

Embedding embed_subgroup(const FiniteGroup &g, const ElementSet &h);

/// Brute-force isomorphism search for small groups; returns the image of each element of `a`.
std::optional<std::vector<Elem>> find_isomorphism(const FiniteGroup &a, const FiniteGroup &b);

/// Checks every product of the map; true if `image` is a homomorphism a -> b.
bool is_homomorphism(const FiniteGroup &a, const FiniteGroup &b, std::span<const Elem> image);

}  // namespace hg

#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hg/cyclotomic.hpp"
#include "hg/group.hpp"
#include "hg/rational.hpp"

namespace hg {

/// Cyclotomic-valued class function: one value per conjugacy class of the group.
class ClassFunction {
public:
  ClassFunction() = default;
  ClassFunction(FiniteGroup g, std::vector<Cyclotomic> values);
  static ClassFunction zero(const FiniteGroup &g);
  /// Rational values, one per class.
  static ClassFunction from_rationals(const FiniteGroup &g, const std::vector<Rational> &values);

  const FiniteGroup &group() const { return g_; }
  const std::vector<Cyclotomic> &values() const { return v_; }
  const Cyclotomic &operator[](int cls) const { return v_.at(cls); }
  const Cyclotomic &at(Elem a) const { return v_.at(g_.class_of(a)); }
  const Cyclotomic &degree() const { return v_.front(); }

  bool is_rational() const;
  /// Values as rationals; throws if some value is irrational.
  std::vector<Rational> rational_values() const;
  bool is_zero() const;
  ClassFunction conj() const;

  ClassFunction &operator+=(const ClassFunction &o);
  ClassFunction &operator-=(const ClassFunction &o);
  friend ClassFunction operator+(ClassFunction a, const ClassFunction &b) { return a += b; }
  friend ClassFunction operator-(ClassFunction a, const ClassFunction &b) { return a -= b; }
  ClassFunction operator-() const;
  friend ClassFunction operator*(const Cyclotomic &s, const ClassFunction &f);
  /// Pointwise product (tensor product of characters).
  friend ClassFunction operator*(const ClassFunction &a, const ClassFunction &b);
  friend bool operator==(const ClassFunction &a, const ClassFunction &b);

  std::string str() const;

private:
  FiniteGroup g_;
  std::vector<Cyclotomic> v_;
};

class CharacterError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// <a, b> = |G|^-1 sum conj(a(x)) b(x).
Cyclotomic inner_product(const ClassFunction &a, const ClassFunction &b);
/// Inner product that must be rational (throws otherwise).
Rational inner_product_q(const ClassFunction &a, const ClassFunction &b);

ClassFunction trivial_character(const FiniteGroup &g);
ClassFunction regular_character(const FiniteGroup &g);
/// u_G = r_G - 1_G.
ClassFunction augmentation_character(const FiniteGroup &g);

/// Restriction of a class function on e.parent to e.sub.
ClassFunction restrict_to(const ClassFunction &f, const Embedding &e);
/// Induction of a class function on e.sub to e.parent.
ClassFunction induce(const ClassFunction &f, const Embedding &e);
/// Induction of an element-level function on the subgroup h (must be constant on h-classes).
ClassFunction induce_from(const FiniteGroup &g, const ElementSet &h, const std::function<Cyclotomic(Elem)> &f);
/// f composed with the projection G -> G/N.
ClassFunction inflate(const ClassFunction &f, const Quotient &q);

/// delta^mult on cyclic(p^m) (as built by builders::cyclic).
ClassFunction delta_mult(int p, int m);
/// delta^mult of a cyclic p-subgroup, as an element-level function on that subgroup.
Rational delta_mult_value(int p, int subgroup_order, int element_order);

/// u_H^* for subgroup class h (memoised on the group).
const ClassFunction &induced_augmentation(const FiniteGroup &g, int h);
/// (delta^mult_P)^* where P is the Sylow p-subgroup of the cyclic class c (memoised).
const ClassFunction &induced_delta_mult(const FiniteGroup &g, int c, int p);

/// Irreducible characters: trivial first, then by degree, then by values.
struct CharacterTable {
  std::vector<ClassFunction> irreducibles;
  long prime = 0;  ///< modulus used by the modular computation
};

const CharacterTable &character_table(const FiniteGroup &g);

/// <chi_i, f> for every irreducible chi_i.
std::vector<Cyclotomic> multiplicities(const ClassFunction &f);
/// Multiplicities that must be rational (throws otherwise).
std::vector<Rational> rational_multiplicities(const ClassFunction &f);
/// Memoised rational multiplicities of u_H^* and (delta^mult)^*.
const std::vector<Rational> &induced_augmentation_mult(const FiniteGroup &g, int h);
const std::vector<Rational> &induced_delta_mult_mult(const FiniteGroup &g, int c, int p);

/// Throws CharacterError unless f(x^-1) = conj(f(x)) on every class.
void check_character_symmetry(const ClassFunction &f);
/// Nonnegative integer multiplicities.
bool is_true_character(const ClassFunction &f);
/// Nonnegative rational multiplicities (membership in R^+(G, Q)).
bool is_positive_rational(const ClassFunction &f);

}  // namespace hg

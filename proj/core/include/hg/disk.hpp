#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hg/characters.hpp"
#include "hg/field.hpp"
#include "hg/group.hpp"

namespace hg {

class PrecisionError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// z -> (a z + b) / (c z + d).
struct Mobius {
  Cyclotomic a{1}, b{0}, c{0}, d{1};
  Mobius compose(const Mobius &inner) const;  ///< this o inner
  bool projectively_equal(const Mobius &o) const;
  Cyclotomic apply(const Cyclotomic &z) const;
};

/// Finite group of automorphisms of the open unit disk over Q(zeta_{p^m}), given either by
/// Moebius maps or by truncated power series fixing 0.
class DiskAction {
public:
  enum class Kind { Mobius, Series };

  static DiskAction from_mobius(const CycloLocalField &k, const FiniteGroup &g,
                                const std::map<std::string, Mobius> &generators);
  static DiskAction from_series(const CycloLocalField &k, const FiniteGroup &g,
                                const std::map<std::string, Poly> &generators, int precision);

  const CycloLocalField &field() const { return k_; }
  const FiniteGroup &group() const { return g_; }
  Kind kind() const { return kind_; }
  int precision() const { return precision_; }
  const Mobius &mobius(Elem x) const { return mob_.at(x); }
  const Poly &series(Elem x) const { return ser_.at(x); }
  /// True when the generators compose as anti-homomorphism (maps on functions rather than points).
  bool contravariant() const { return contravariant_; }

  /// sigma(z) - z as a rational function (series: denominator 1).
  RationalFunction displacement(Elem x) const;
  /// Same action with the series precision raised (generators are kept as polynomials).
  DiskAction with_precision(int precision) const;

private:
  DiskAction(CycloLocalField k) : k_(std::move(k)) {}
  CycloLocalField k_;
  FiniteGroup g_;
  Kind kind_ = Kind::Mobius;
  int precision_ = 0;
  bool contravariant_ = false;
  std::map<std::string, Poly> series_gens_;
  std::vector<Mobius> mob_;
  std::vector<Poly> ser_;
};

/// val_Y(sigma(z) - z) for every element; nullopt at the identity.
std::vector<std::optional<Rational>> displacement_valuations(const DiskAction &act);

ClassFunction depth_character(const DiskAction &act);

struct FixedPoint {
  Cyclotomic z;
  ElementSet stabilizer;
};

struct ArtinResult {
  ClassFunction artin;
  bool fixed_points_computed = false;  ///< false when a discriminant is not a square (or series input)
  std::string notice;
  std::vector<std::vector<FixedPoint>> orbits;
  std::optional<bool> matches_orbit_sum;  ///< a = sum over orbits of u_{G_b}^*
};

ArtinResult artin_character(const DiskAction &act);

/// All fixed points in the open disk of non-identity elements (Moebius actions).
std::optional<std::vector<FixedPoint>> disk_fixed_points(const DiskAction &act, std::string *notice = nullptr);

struct Break {
  Rational h;
  ElementSet subgroup;
  Rational lambda;
};

struct BreakDecomposition {
  std::vector<Break> breaks;
  ClassFunction reassembled;
  bool matches_depth = false;
};

BreakDecomposition break_decomposition(const DiskAction &act);

struct BoundaryShiftReport {
  Rational eps;
  Cyclotomic center;
  ClassFunction depth_before, depth_after, artin, s;
  ClassFunction predicted;  ///< delta_Y + |G| eps s_Y
  bool holds = false;
};

/// Recomputes the depth character after z = a w + center with val(a) = eps.
BoundaryShiftReport boundary_shift_check(const DiskAction &act, const Rational &eps, const Cyclotomic &center);

struct DerivationReport {
  Rational val_sigma_z;  ///< val_Y(sigma(z) - z)
  Rational val_sigma_f;  ///< val_Y(sigma(f) - f)
  bool inequality_holds = false;
  bool reduction_derivative_nonzero = false;
  bool equality = false;
  bool consistent = false;  ///< equality exactly when d(f bar) != 0
};

DerivationReport derivation_test(const DiskAction &act, Elem sigma, const Poly &f);

}  // namespace hg

#pragma once

#include <map>
#include <string>
#include <vector>

#include "hg/characters.hpp"
#include "hg/disk.hpp"
#include "hg/finite_field.hpp"
#include "hg/group.hpp"

namespace hg {

/// Truncated power series over F_q, constant term first.
using FqSeries = std::vector<int>;

/// Faithful action of a finite group on k[[z]] given by generator series to z-precision d.
class LocalAction {
public:
  static LocalAction make(const FiniteField &k, const FiniteGroup &g, const std::map<std::string, FqSeries> &generators,
                          int precision);

  const FiniteField &field() const { return k_; }
  const FiniteGroup &group() const { return g_; }
  int precision() const { return d_; }
  const FqSeries &series(Elem x) const { return images_.at(x); }
  /// ord_z(sigma(z) - z); throws PrecisionError when it reaches the precision.
  int displacement_order(Elem x) const;

private:
  LocalAction(FiniteField k) : k_(std::move(k)) {}
  FiniteField k_;
  FiniteGroup g_;
  int d_ = 0;
  std::vector<FqSeries> images_;
};

/// a(sigma) = -ord_z(sigma(z) - z) off the identity, a(1) = -sum of the other values.
ClassFunction local_artin_character(const LocalAction &act);

/// t -> t / (1 + mu t) as a series to the given precision.
FqSeries additive_translation_series(const FiniteField &k, int mu, int precision);

}  // namespace hg

#pragma once

#include <optional>
#include <vector>

#include "hg/cyclotomic.hpp"
#include "hg/rational.hpp"

namespace hg {

class FieldError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The field Q(zeta_{p^m}) with its unique p-adic valuation normalised by val(p) = 1.
class CycloLocalField {
public:
  CycloLocalField(int p, int m);

  int p() const { return p_; }
  int m() const { return m_; }
  long root_order() const { return n_; }
  /// [K : Q_p] = phi(p^m); val(pi) = 1/degree().
  long degree() const { return phi_; }

  bool contains(const Cyclotomic &x) const;
  /// Throws FieldError unless x lies in the field.
  void require(const Cyclotomic &x, const char *what) const;
  /// Valuation of a nonzero element; nullopt for zero (infinite valuation).
  std::optional<Rational> val(const Cyclotomic &x) const;
  Cyclotomic uniformizer() const;
  /// An element of valuation eps (a power of the uniformizer); throws if eps is not attainable.
  Cyclotomic element_of_valuation(const Rational &eps) const;

private:
  int p_, m_;
  long n_, norm_n_, phi_;
};

/// Polynomial (or truncated series) with coefficients in a cyclotomic field, constant term first.
using Poly = std::vector<Cyclotomic>;

Poly poly_add(const Poly &a, const Poly &b);
Poly poly_sub(const Poly &a, const Poly &b);
Poly poly_mul(const Poly &a, const Poly &b, std::size_t limit = static_cast<std::size_t>(-1));
Poly poly_scale(const Poly &a, const Cyclotomic &s);
bool poly_is_zero(const Poly &a);
void poly_trim(Poly &a);

/// min_i val(a_i); throws FieldError on the zero polynomial.
Rational gauss_valuation(const CycloLocalField &k, const Poly &f);
/// First index attaining the Gauss valuation (order of the reduction of f / p^val).
int weierstrass_degree(const CycloLocalField &k, const Poly &f);

struct RationalFunction {
  Poly num, den;
};
Rational gauss_valuation(const CycloLocalField &k, const RationalFunction &f);
int weierstrass_degree(const CycloLocalField &k, const RationalFunction &f);

/// Square root in the field if one exists (found numerically, verified exactly).
std::optional<Cyclotomic> field_sqrt(const CycloLocalField &k, const Cyclotomic &x);

}  // namespace hg

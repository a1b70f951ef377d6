#pragma once

#include <string>
#include <vector>

#include "hg/rational.hpp"

namespace hg {

/// Element of the cyclotomic field Q(zeta_N), stored in the power basis
/// 1, zeta_N, ..., zeta_N^(phi(N)-1), i.e. reduced modulo the N-th cyclotomic
/// polynomial. The conductor is kept normalised: never 2 mod 4, and 1 for
/// rational values, so equal values of the same field have equal vectors.
class Cyclotomic {
public:
  Cyclotomic() : Cyclotomic(Rational(0)) {}
  Cyclotomic(const Rational &r);  // NOLINT(google-explicit-constructor)
  template <std::integral I>
  Cyclotomic(I v) : Cyclotomic(Rational(v)) {}  // NOLINT(google-explicit-constructor)

  /// zeta_N^k.
  static Cyclotomic root_of_unity(long n, long k);
  /// Sum_j coeffs[j] * zeta_N^j for an arbitrary-length vector (exponents mod N).
  static Cyclotomic from_exponent_coeffs(long n, const std::vector<Rational> &coeffs);

  long conductor() const { return n_; }
  /// Reduced power-basis coefficients (length phi(conductor)).
  const std::vector<Rational> &coeffs() const { return c_; }
  /// Coefficients over exponents 0..N-1 of the given multiple N of the conductor.
  std::vector<Rational> exponent_coeffs(long n) const;

  bool is_zero() const;
  bool is_rational() const { return n_ == 1; }
  /// Throws if the value is not rational.
  const Rational &rational() const;

  /// The same value written over Q(zeta_m); m must be a multiple of conductor().
  Cyclotomic lift(long m) const;
  /// Field automorphism zeta -> zeta^k (gcd(k, N) = 1).
  Cyclotomic galois(long k) const;
  Cyclotomic conj() const { return galois(-1); }

  Cyclotomic inverse() const;
  /// Absolute norm N_{Q(zeta_m)/Q}; m a multiple of the conductor.
  Rational norm(long m) const;

  Cyclotomic &operator+=(const Cyclotomic &o);
  Cyclotomic &operator-=(const Cyclotomic &o);
  Cyclotomic &operator*=(const Cyclotomic &o);
  Cyclotomic &operator/=(const Cyclotomic &o) { return *this *= o.inverse(); }
  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic &b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic &b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic &b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic &b) { return a /= b; }
  Cyclotomic operator-() const;
  Cyclotomic pow(long e) const;

  friend bool operator==(const Cyclotomic &a, const Cyclotomic &b);

  /// Human readable form, e.g. "1 + 2*E(4)^3" style: "-1/2 + zeta8^3".
  std::string str() const;
  /// Total order used for deterministic sorting only (no field meaning).
  friend bool canonical_less(const Cyclotomic &a, const Cyclotomic &b);

private:
  Cyclotomic(long n, std::vector<Rational> reduced);
  void normalize();

  long n_ = 1;
  std::vector<Rational> c_;
};

/// Integer coefficients of the n-th cyclotomic polynomial, constant term first.
const std::vector<long> &cyclotomic_polynomial(long n);

/// Parses "3/2", "zeta4", "-zeta8^3 + 1/2", "2*zeta3^2 - zeta3".
Cyclotomic parse_cyclotomic(const std::string &text);

}  // namespace hg

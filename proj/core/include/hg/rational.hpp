#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hg {

/// Exact rational number in canonical form (GMP backed).
class Rational {
public:
  Rational() = default;
  template <std::integral I>
  Rational(I value) : q_(static_cast<long>(value)) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class q);

  /// Parses "a", "-a", "a/b". Whitespace around the value is ignored.
  static Rational parse(std::string_view text);

  std::string str() const;
  const mpq_class &raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const;
  int sign() const { return sgn(q_); }
  /// Value as a signed 64-bit integer; throws if not an integer or out of range.
  std::int64_t to_int64() const;
  double to_double() const { return q_.get_d(); }

  Rational numerator() const;
  Rational denominator() const;
  Rational abs() const;
  Rational inverse() const;

  Rational &operator+=(const Rational &o);
  Rational &operator-=(const Rational &o);
  Rational &operator*=(const Rational &o);
  Rational &operator/=(const Rational &o);

  friend Rational operator+(Rational a, const Rational &b) { return a += b; }
  friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational &b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational &a, const Rational &b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational &a, const Rational &b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

private:
  mpq_class q_{0};
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

/// p-adic valuation of a nonzero rational.
long padic_valuation(const Rational &r, long p);

Rational rational_pow(const Rational &base, long exponent);

}  // namespace hg

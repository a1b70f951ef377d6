#include "hg/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace hg {

Rational::Rational(long num, long den) {
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
      s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
      s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty())
    throw std::invalid_argument("empty rational literal");
  auto valid_int = [](std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
      s.remove_prefix(1);
    if (s.empty())
      return false;
    for (char c : s)
      if (c < '0' || c > '9')
        return false;
    return true;
  };
  auto slash = text.find('/');
  std::string num(trim(text.substr(0, slash)));
  std::string den = slash == std::string_view::npos ? "1" : std::string(trim(text.substr(slash + 1)));
  if (!valid_int(num) || !valid_int(den) || den.front() == '-' || den.front() == '+')
    throw std::invalid_argument("malformed rational literal '" + std::string(text) + "'");
  if (num.front() == '+')
    num.erase(0, 1);
  mpz_class n(num, 10), d(den, 10);
  if (d == 0)
    throw std::invalid_argument("rational literal with zero denominator '" + std::string(text) + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return Rational(std::move(q));
}

std::string Rational::str() const {
  if (q_.get_den() == 1)
    return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

bool Rational::is_integer() const { return q_.get_den() == 1; }

std::int64_t Rational::to_int64() const {
  if (!is_integer())
    throw std::domain_error("rational " + str() + " is not an integer");
  const mpz_class &n = q_.get_num();
  if (!n.fits_slong_p())
    throw std::overflow_error("integer " + str() + " does not fit in 64 bits");
  return n.get_si();
}

Rational Rational::numerator() const { return Rational(mpq_class(q_.get_num())); }
Rational Rational::denominator() const { return Rational(mpq_class(q_.get_den())); }
Rational Rational::abs() const { return Rational(mpq_class(::abs(q_))); }

Rational Rational::inverse() const {
  if (is_zero())
    throw std::domain_error("inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational &Rational::operator+=(const Rational &o) {
  q_ += o.q_;
  return *this;
}
Rational &Rational::operator-=(const Rational &o) {
  q_ -= o.q_;
  return *this;
}
Rational &Rational::operator*=(const Rational &o) {
  q_ *= o.q_;
  return *this;
}
Rational &Rational::operator/=(const Rational &o) {
  if (o.is_zero())
    throw std::domain_error("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_)); }

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

long padic_valuation(const Rational &r, long p) {
  if (r.is_zero())
    throw std::domain_error("valuation of zero");
  auto count = [p](mpz_class v) {
    long k = 0;
    v = ::abs(v);
    while (mpz_divisible_ui_p(v.get_mpz_t(), static_cast<unsigned long>(p))) {
      v /= p;
      ++k;
    }
    return k;
  };
  return count(r.raw().get_num()) - count(r.raw().get_den());
}

Rational rational_pow(const Rational &base, long exponent) {
  if (exponent < 0)
    return rational_pow(base.inverse(), -exponent);
  Rational result(1), b = base;
  while (exponent > 0) {
    if (exponent & 1)
      result *= b;
    b *= b;
    exponent >>= 1;
  }
  return result;
}

}  // namespace hg

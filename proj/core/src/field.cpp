#include "hg/field.hpp"

#include <cmath>
#include <complex>

#include "hg/arith.hpp"

namespace hg {

CycloLocalField::CycloLocalField(int p, int m) : p_(p), m_(m) {
  if (!is_prime(p))
    throw FieldError("field: p = " + std::to_string(p) + " is not prime");
  if (m < 0 || ipow(p, m) > 1024)
    throw FieldError("field: level m = " + std::to_string(m) + " out of range");
  n_ = ipow(p, m);
  norm_n_ = n_ % 4 == 2 ? n_ / 2 : n_;
  phi_ = euler_phi(n_);
}

bool CycloLocalField::contains(const Cyclotomic &x) const { return norm_n_ % x.conductor() == 0; }

void CycloLocalField::require(const Cyclotomic &x, const char *what) const {
  if (!contains(x))
    throw FieldError(std::string(what) + " " + x.str() + " is not in Q(zeta" + std::to_string(n_) + ")");
}

std::optional<Rational> CycloLocalField::val(const Cyclotomic &x) const {
  if (x.is_zero())
    return std::nullopt;
  require(x, "element");
  Rational nm = x.norm(norm_n_);
  return Rational(padic_valuation(nm, p_)) / Rational(phi_);
}

Cyclotomic CycloLocalField::uniformizer() const {
  if (n_ == 1)
    return Cyclotomic(p_);
  return Cyclotomic::root_of_unity(n_, 1) - Cyclotomic(1);
}

Cyclotomic CycloLocalField::element_of_valuation(const Rational &eps) const {
  Rational k = eps * Rational(phi_);
  if (!k.is_integer())
    throw FieldError("valuation " + eps.str() + " is not attainable in Q(zeta" + std::to_string(n_) +
                     "): must be a multiple of 1/" + std::to_string(phi_));
  return uniformizer().pow(k.to_int64());
}

void poly_trim(Poly &a) {
  while (!a.empty() && a.back().is_zero())
    a.pop_back();
}

Poly poly_add(const Poly &a, const Poly &b) {
  Poly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    r[i] += b[i];
  poly_trim(r);
  return r;
}

Poly poly_sub(const Poly &a, const Poly &b) { return poly_add(a, poly_scale(b, Cyclotomic(-1))); }

Poly poly_mul(const Poly &a, const Poly &b, std::size_t limit) {
  if (a.empty() || b.empty())
    return {};
  Poly r(std::min(a.size() + b.size() - 1, limit));
  for (std::size_t i = 0; i < a.size() && i < r.size(); ++i) {
    if (a[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b.size() && i + j < r.size(); ++j)
      if (!b[j].is_zero())
        r[i + j] += a[i] * b[j];
  }
  poly_trim(r);
  return r;
}

Poly poly_scale(const Poly &a, const Cyclotomic &s) {
  Poly r;
  for (const auto &c : a)
    r.push_back(c * s);
  poly_trim(r);
  return r;
}

bool poly_is_zero(const Poly &a) {
  for (const auto &c : a)
    if (!c.is_zero())
      return false;
  return true;
}

Rational gauss_valuation(const CycloLocalField &k, const Poly &f) {
  std::optional<Rational> best;
  for (const auto &c : f)
    if (auto v = k.val(c); v && (!best || *v < *best))
      best = v;
  if (!best)
    throw FieldError("Gauss valuation of the zero function");
  return *best;
}

int weierstrass_degree(const CycloLocalField &k, const Poly &f) {
  Rational g = gauss_valuation(k, f);
  for (std::size_t i = 0; i < f.size(); ++i)
    if (auto v = k.val(f[i]); v && *v == g)
      return static_cast<int>(i);
  return 0;
}

Rational gauss_valuation(const CycloLocalField &k, const RationalFunction &f) {
  return gauss_valuation(k, f.num) - gauss_valuation(k, f.den);
}

int weierstrass_degree(const CycloLocalField &k, const RationalFunction &f) {
  return weierstrass_degree(k, f.num) - weierstrass_degree(k, f.den);
}

namespace {

std::optional<Rational> rationalize(double x) {
  if (!std::isfinite(x) || std::abs(x) > 1e12)
    return std::nullopt;
  // continued fraction convergents
  long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  double r = x;
  for (int it = 0; it < 40; ++it) {
    double a = std::floor(r);
    long ai = static_cast<long>(a);
    long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (std::abs(k2) > 100000000L)
      break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    if (std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) < 1e-9 * std::max(1.0, std::abs(x)))
      return Rational(h1, k1);
    double frac = r - a;
    if (frac < 1e-15)
      break;
    r = 1.0 / frac;
  }
  if (k1 != 0 && std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) < 1e-7)
    return Rational(h1, k1);
  return std::nullopt;
}

}  // namespace

std::optional<Cyclotomic> field_sqrt(const CycloLocalField &k, const Cyclotomic &x) {
  using C = std::complex<double>;
  if (x.is_zero())
    return Cyclotomic(0);
  k.require(x, "element");
  long n = k.root_order() % 4 == 2 ? k.root_order() / 2 : k.root_order();
  if (n == 1 || x.is_rational()) {
    if (x.is_rational() && x.rational().sign() > 0) {
      mpz_class num = x.rational().raw().get_num(), den = x.rational().raw().get_den();
      if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class a, b;
        mpz_sqrt(a.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(b.get_mpz_t(), den.get_mpz_t());
        return Cyclotomic(Rational(mpq_class(a, b)));
      }
    }
    if (n == 1)
      return std::nullopt;
  }
  const long phi = euler_phi(n);
  auto coeffs = x.exponent_coeffs(n);
  std::vector<long> units;
  for (long u = 1; u < n; ++u)
    if (std::gcd(u, n) == 1)
      units.push_back(u);
  std::vector<long> half;
  for (long u : units)
    if (2 * u < n)
      half.push_back(u);
  if (half.size() > 12)
    return std::nullopt;
  const double two_pi = 2.0 * std::acos(-1.0);
  auto root = [&](long u, long j) { return std::polar(1.0, two_pi * static_cast<double>(u * j % n) / n); };
  std::vector<C> xval(units.size());
  for (std::size_t i = 0; i < units.size(); ++i)
    for (long j = 0; j < n; ++j)
      xval[i] += coeffs[j].to_double() * root(units[i], j);

  for (unsigned mask = 0; mask < (1u << half.size()); ++mask) {
    // target values of the square root in each embedding
    std::vector<C> target(units.size());
    for (std::size_t i = 0; i < units.size(); ++i) {
      long u = units[i];
      long rep = 2 * u < n ? u : n - u;
      std::size_t hi = std::find(half.begin(), half.end(), rep) - half.begin();
      C s = std::sqrt(xval[std::find(units.begin(), units.end(), rep) - units.begin()]);
      if (mask & (1u << hi))
        s = -s;
      target[i] = 2 * u < n ? s : std::conj(s);
    }
    // solve sum_j y_j zeta_u^j = target_u for j < phi
    std::vector<std::vector<C>> a(phi, std::vector<C>(phi + 1));
    for (long i = 0; i < phi; ++i) {
      for (long j = 0; j < phi; ++j)
        a[i][j] = root(units[i], j);
      a[i][phi] = target[i];
    }
    bool singular = false;
    for (long c = 0; c < phi && !singular; ++c) {
      long piv = c;
      for (long r = c + 1; r < phi; ++r)
        if (std::abs(a[r][c]) > std::abs(a[piv][c]))
          piv = r;
      if (std::abs(a[piv][c]) < 1e-12) {
        singular = true;
        break;
      }
      std::swap(a[piv], a[c]);
      for (long r = 0; r < phi; ++r) {
        if (r == c)
          continue;
        C f = a[r][c] / a[c][c];
        for (long j = c; j <= phi; ++j)
          a[r][j] -= f * a[c][j];
      }
    }
    if (singular)
      continue;
    std::vector<Rational> y(phi);
    bool ok = true;
    for (long j = 0; j < phi && ok; ++j) {
      C v = a[j][phi] / a[j][j];
      auto r = std::abs(v.imag()) < 1e-6 ? rationalize(v.real()) : std::nullopt;
      if (!r)
        ok = false;
      else
        y[j] = *r;
    }
    if (!ok)
      continue;
    Cyclotomic s = Cyclotomic::from_exponent_coeffs(n, y);
    if (s * s == x)
      return s;
  }
  return std::nullopt;
}

}  // namespace hg

#include "hg/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "hg/arith.hpp"

namespace hg {

namespace {

std::vector<long> compute_cyclotomic_polynomial(long n) {
  // x^n - 1 divided by Phi_d for all proper divisors d.
  std::vector<long> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d)
      continue;
    const auto &div = cyclotomic_polynomial(d);
    long deg = static_cast<long>(div.size()) - 1;
    long pdeg = static_cast<long>(poly.size()) - 1;
    std::vector<long> quot(pdeg - deg + 1, 0);
    for (long k = pdeg; k >= deg; --k) {
      long c = poly[k];
      quot[k - deg] = c;
      if (c)
        for (long j = 0; j <= deg; ++j)
          poly[k - deg + j] -= c * div[j];
    }
    poly = std::move(quot);
  }
  return poly;
}

/// Reduce a coefficient vector over exponents (mod n) to the power basis of Q(zeta_n).
std::vector<Rational> reduce(std::vector<Rational> v, long n) {
  const auto &phi_poly = cyclotomic_polynomial(n);
  long deg = static_cast<long>(phi_poly.size()) - 1;
  if (static_cast<long>(v.size()) > n) {
    std::vector<Rational> folded(n);
    for (std::size_t j = 0; j < v.size(); ++j)
      folded[j % n] += v[j];
    v = std::move(folded);
  }
  for (long k = static_cast<long>(v.size()) - 1; k >= deg; --k) {
    if (v[k].is_zero())
      continue;
    Rational c = v[k];
    for (long j = 0; j < deg; ++j)
      if (phi_poly[j])
        v[k - deg + j] -= c * Rational(phi_poly[j]);
    v[k] = Rational(0);
  }
  v.resize(deg);
  return v;
}

std::vector<Rational> raw_lift(const std::vector<Rational> &c, long n, long m) {
  if (m % n)
    throw std::invalid_argument("cannot lift conductor " + std::to_string(n) + " to " +
                                std::to_string(m));
  long step = m / n;
  std::vector<Rational> v(m);
  for (std::size_t j = 0; j < c.size(); ++j)
    v[(static_cast<long>(j) * step) % m] += c[j];
  return reduce(std::move(v), m);
}

std::vector<Rational> raw_mul(const std::vector<Rational> &a, const std::vector<Rational> &b, long m) {
  std::vector<Rational> prod(a.size() + b.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero())
      continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero())
        prod[i + j] += a[i] * b[j];
  }
  return reduce(std::move(prod), m);
}

/// Multiplication-by-x matrix in the power basis of Q(zeta_m); column j is x*zeta^j.
std::vector<std::vector<Rational>> mult_matrix(const std::vector<Rational> &x, long m) {
  long d = euler_phi(m);
  std::vector<std::vector<Rational>> mat(d, std::vector<Rational>(d));
  for (long j = 0; j < d; ++j) {
    std::vector<Rational> basis(d);
    basis[j] = Rational(1);
    auto col = raw_mul(x, basis, m);
    for (long i = 0; i < d; ++i)
      mat[i][j] = col[i];
  }
  return mat;
}

}  // namespace

const std::vector<long> &cyclotomic_polynomial(long n) {
  static std::mutex mu;
  static std::map<long, std::vector<long>> cache;
  if (n < 1)
    throw std::invalid_argument("cyclotomic polynomial of non-positive index");
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end())
      return it->second;
  }
  std::vector<long> poly = n == 1 ? std::vector<long>{-1, 1} : compute_cyclotomic_polynomial(n);
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(poly)).first->second;
}

Cyclotomic::Cyclotomic(const Rational &r) : n_(1), c_{r} {}

Cyclotomic::Cyclotomic(long n, std::vector<Rational> reduced) : n_(n), c_(std::move(reduced)) {
  normalize();
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n < 1)
    throw std::invalid_argument("root of unity of non-positive order");
  std::vector<Rational> v(n);
  v[positive_mod(k, n)] = Rational(1);
  return Cyclotomic(n, reduce(std::move(v), n));
}

Cyclotomic Cyclotomic::from_exponent_coeffs(long n, const std::vector<Rational> &coeffs) {
  if (n < 1)
    throw std::invalid_argument("non-positive conductor");
  return Cyclotomic(n, reduce(coeffs, n));
}

void Cyclotomic::normalize() {
  // Conductor 2 mod 4: zeta_{2k} = -zeta_k^((k+1)/2) for odd k.
  if (n_ % 4 == 2) {
    long k = n_ / 2;
    std::vector<Rational> v(k);
    for (std::size_t j = 0; j < c_.size(); ++j) {
      if (c_[j].is_zero())
        continue;
      long e = (static_cast<long>(j) * ((k + 1) / 2)) % k;
      if (j % 2)
        v[e] -= c_[j];
      else
        v[e] += c_[j];
    }
    n_ = k;
    c_ = reduce(std::move(v), k);
  }
  bool changed = true;
  while (changed && n_ > 1) {
    changed = false;
    bool rational = true;
    for (std::size_t j = 1; j < c_.size(); ++j)
      if (!c_[j].is_zero()) {
        rational = false;
        break;
      }
    if (rational) {
      c_.resize(1);
      n_ = 1;
      return;
    }
    for (auto [q, e] : factorize(n_)) {
      long m = n_ / q;
      if (e >= 2) {
        // Phi_n(x) = Phi_m(x^q): the subfield Q(zeta_m) is spanned by exponents divisible by q.
        bool ok = true;
        for (std::size_t j = 0; j < c_.size() && ok; ++j)
          if (j % q && !c_[j].is_zero())
            ok = false;
        if (!ok)
          continue;
        std::vector<Rational> v((c_.size() + q - 1) / q);
        for (std::size_t j = 0; j < c_.size(); j += q)
          v[j / q] = c_[j];
        n_ = m;
        c_ = reduce(std::move(v), m);
      } else {
        // n = q*m with gcd(q, m) = 1: zeta_n = zeta_q^a zeta_m^b with a/q + b/m = 1/n.
        long a = mod_inverse(m % q, q);  // a*m = 1 mod q
        long b = 0;
        if (m > 1) {
          // b*q = 1 mod m
          for (long t = 1; t < m; ++t)
            if ((t * q) % m == 1) {
              b = t;
              break;
            }
        }
        std::vector<std::vector<Rational>> parts(q, std::vector<Rational>(m));
        for (std::size_t j = 0; j < c_.size(); ++j) {
          if (c_[j].is_zero())
            continue;
          long r = (a * static_cast<long>(j)) % q;
          long s = m > 1 ? (b * static_cast<long>(j)) % m : 0;
          parts[r][s] += c_[j];
        }
        std::vector<std::vector<Rational>> y(q);
        for (long r = 0; r < q; ++r)
          y[r] = reduce(parts[r], m);
        bool ok = true;
        for (long r = 1; r + 1 < q && ok; ++r)
          if (y[r] != y[q - 1])
            ok = false;
        if (!ok)
          continue;
        std::vector<Rational> v(y[0].size());
        for (std::size_t j = 0; j < v.size(); ++j)
          v[j] = y[0][j] - y[q - 1][j];
        n_ = m;
        c_ = std::move(v);
      }
      if (n_ % 4 == 2) {
        Cyclotomic tmp;
        tmp.n_ = n_;
        tmp.c_ = c_;
        tmp.normalize();
        n_ = tmp.n_;
        c_ = tmp.c_;
      }
      changed = true;
      break;
    }
  }
  if (n_ == 1)
    c_.resize(1);
}

std::vector<Rational> Cyclotomic::exponent_coeffs(long n) const {
  auto lifted = raw_lift(c_, n_, n);
  lifted.resize(n);
  return lifted;
}

bool Cyclotomic::is_zero() const { return n_ == 1 && c_[0].is_zero(); }

const Rational &Cyclotomic::rational() const {
  if (n_ != 1)
    throw std::domain_error("cyclotomic value " + str() + " is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::lift(long m) const {
  if (m % n_)
    throw std::invalid_argument("cannot lift conductor " + std::to_string(n_) + " to " +
                                std::to_string(m));
  return *this;
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (n_ == 1)
    return *this;
  if (std::gcd(positive_mod(k, n_), n_) != 1)
    throw std::invalid_argument("galois exponent not coprime to conductor");
  std::vector<Rational> v(n_);
  for (std::size_t j = 0; j < c_.size(); ++j)
    v[positive_mod(static_cast<long>(j) * k, n_)] += c_[j];
  return Cyclotomic(n_, reduce(std::move(v), n_));
}

namespace {

/// Solve mat * x = rhs over Q (square, nonsingular). Returns determinant via `det` if non-null.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> mat, std::vector<Rational> rhs,
                                   Rational *det) {
  std::size_t n = mat.size();
  Rational d(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && mat[piv][col].is_zero())
      ++piv;
    if (piv == n) {
      if (det) {
        *det = Rational(0);
        return {};
      }
      throw std::domain_error("singular linear system");
    }
    if (piv != col) {
      std::swap(mat[piv], mat[col]);
      std::swap(rhs[piv], rhs[col]);
      d = -d;
    }
    d *= mat[col][col];
    Rational inv = mat[col][col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (mat[r][col].is_zero())
        continue;
      Rational f = mat[r][col] * inv;
      for (std::size_t c = col; c < n; ++c)
        mat[r][c] -= f * mat[col][c];
      rhs[r] -= f * rhs[col];
    }
  }
  if (det)
    *det = d;
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = rhs[i];
    for (std::size_t c = i + 1; c < n; ++c)
      s -= mat[i][c] * x[c];
    x[i] = s / mat[i][i];
  }
  return x;
}

}  // namespace

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero())
    throw std::domain_error("inverse of zero cyclotomic");
  if (n_ == 1)
    return Cyclotomic(c_[0].inverse());
  auto mat = mult_matrix(c_, n_);
  std::vector<Rational> rhs(c_.size());
  rhs[0] = Rational(1);
  return Cyclotomic(n_, solve_linear(std::move(mat), std::move(rhs), nullptr));
}

Rational Cyclotomic::norm(long m) const {
  if (m % n_)
    throw std::invalid_argument("norm: " + std::to_string(m) + " is not a multiple of conductor " +
                                std::to_string(n_));
  auto x = raw_lift(c_, n_, m);
  auto mat = mult_matrix(x, m);
  Rational det;
  std::vector<Rational> rhs(mat.size());
  solve_linear(std::move(mat), std::move(rhs), &det);
  return det;
}

Cyclotomic &Cyclotomic::operator+=(const Cyclotomic &o) {
  if (n_ == o.n_) {
    for (std::size_t j = 0; j < c_.size(); ++j)
      c_[j] += o.c_[j];
    normalize();
    return *this;
  }
  long m = std::lcm(n_, o.n_);
  auto a = raw_lift(c_, n_, m);
  auto b = raw_lift(o.c_, o.n_, m);
  for (std::size_t j = 0; j < a.size(); ++j)
    a[j] += b[j];
  *this = Cyclotomic(m, std::move(a));
  return *this;
}

Cyclotomic &Cyclotomic::operator-=(const Cyclotomic &o) { return *this += -o; }

Cyclotomic &Cyclotomic::operator*=(const Cyclotomic &o) {
  if (o.n_ == 1) {
    if (o.c_[0].is_zero()) {
      *this = Cyclotomic();
      return *this;
    }
    for (auto &c : c_)
      c *= o.c_[0];
    return *this;
  }
  if (n_ == 1) {
    Rational s = c_[0];
    *this = o;
    for (auto &c : c_)
      c *= s;
    if (s.is_zero())
      *this = Cyclotomic();
    return *this;
  }
  long m = std::lcm(n_, o.n_);
  auto a = n_ == m ? c_ : raw_lift(c_, n_, m);
  auto b = o.n_ == m ? o.c_ : raw_lift(o.c_, o.n_, m);
  *this = Cyclotomic(m, raw_mul(a, b, m));
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto &c : r.c_)
    c = -c;
  return r;
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e < 0)
    return inverse().pow(-e);
  Cyclotomic result(1), b = *this;
  while (e > 0) {
    if (e & 1)
      result *= b;
    b *= b;
    e >>= 1;
  }
  return result;
}

bool operator==(const Cyclotomic &a, const Cyclotomic &b) {
  return a.n_ == b.n_ && a.c_ == b.c_;
}

bool canonical_less(const Cyclotomic &a, const Cyclotomic &b) {
  if (a.n_ != b.n_)
    return a.n_ < b.n_;
  return a.c_ < b.c_;
}

std::string Cyclotomic::str() const {
  if (n_ == 1)
    return c_[0].str();
  std::ostringstream os;
  bool first = true;
  for (std::size_t j = 0; j < c_.size(); ++j) {
    const Rational &c = c_[j];
    if (c.is_zero())
      continue;
    Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0)
        os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (j == 0) {
      os << mag.str();
      continue;
    }
    if (mag != Rational(1))
      os << mag.str() << "*";
    os << "zeta" << n_;
    if (j > 1)
      os << "^" << j;
  }
  return os.str();
}

Cyclotomic parse_cyclotomic(const std::string &text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t')
      s += c;
  if (s.empty())
    throw std::invalid_argument("empty cyclotomic literal");
  Cyclotomic total;
  std::size_t pos = 0;
  while (pos < s.size()) {
    std::size_t end = pos + 1;
    while (end < s.size() && s[end] != '+' && s[end] != '-')
      ++end;
    // a '-' directly after '^' is an exponent sign, not a term separator
    while (end < s.size() && s[end - 1] == '^') {
      ++end;
      while (end < s.size() && s[end] != '+' && s[end] != '-')
        ++end;
    }
    std::string term = s.substr(pos, end - pos);
    pos = end;
    auto z = term.find("zeta");
    if (z == std::string::npos) {
      total += Cyclotomic(Rational::parse(term));
      continue;
    }
    std::string coef = term.substr(0, z);
    if (!coef.empty() && coef.back() == '*')
      coef.pop_back();
    Rational c(1);
    if (coef == "-")
      c = Rational(-1);
    else if (!coef.empty() && coef != "+")
      c = Rational::parse(coef);
    std::string rest = term.substr(z + 4);
    auto caret = rest.find('^');
    std::string order = rest.substr(0, caret);
    long k = 1;
    if (order.empty() || order.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("malformed root of unity in '" + text + "'");
    if (caret != std::string::npos) {
      std::string e = rest.substr(caret + 1);
      std::size_t digits = (!e.empty() && e[0] == '-') ? 1 : 0;
      if (e.size() == digits || e.find_first_not_of("0123456789", digits) != std::string::npos)
        throw std::invalid_argument("malformed exponent in '" + text + "'");
      k = std::stol(e);
    }
    total += Cyclotomic(c) * Cyclotomic::root_of_unity(std::stol(order), k);
  }
  return total;
}

}  // namespace hg

#include "hg/finite_field.hpp"

#include <sstream>
#include <stdexcept>

#include "hg/arith.hpp"

namespace hg {

namespace {

std::vector<int> digits(int a, int p, int k) {
  std::vector<int> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

int undigits(const std::vector<int> &d, int p) {
  int a = 0;
  for (int i = static_cast<int>(d.size()); i-- > 0;)
    a = a * p + d[i];
  return a;
}

/// Product of two polynomials of degree < k reduced modulo the monic modulus.
std::vector<int> mulmod(const std::vector<int> &a, const std::vector<int> &b, const std::vector<int> &m, int p) {
  int k = static_cast<int>(m.size()) - 1;
  std::vector<int> r(2 * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  for (int d = 2 * k - 1; d >= k; --d) {
    int c = r[d];
    if (!c)
      continue;
    for (int i = 0; i <= k; ++i)
      r[d - k + i] = ((r[d - k + i] - c * m[i]) % p + p) % p;
  }
  r.resize(k);
  return r;
}

bool irreducible(const std::vector<int> &m, int p) {
  // no root-free check suffices only for k <= 3; test divisibility by all monic polys of degree <= k/2
  int k = static_cast<int>(m.size()) - 1;
  for (int d = 1; d <= k / 2; ++d) {
    long count = ipow(p, d);
    for (long code = 0; code < count; ++code) {
      std::vector<int> f = digits(static_cast<int>(code), p, d);
      f.push_back(1);
      std::vector<int> r = m;
      for (int i = k; i >= d; --i) {
        int c = r[i];
        if (!c)
          continue;
        for (int j = 0; j <= d; ++j)
          r[i - d + j] = ((r[i - d + j] - c * f[j]) % p + p) % p;
      }
      bool zero = true;
      for (int i = 0; i < d; ++i)
        zero = zero && r[i] == 0;
      if (zero)
        return false;
    }
  }
  return true;
}

}  // namespace

FiniteField::FiniteField(int p, int k) : p_(p), k_(k) {
  if (!is_prime(p) || k < 1 || ipow(p, k) > 256)
    throw std::invalid_argument("finite field F_" + std::to_string(p) + "^" + std::to_string(k) +
                                " not supported (need prime p and p^k <= 256)");
  q_ = static_cast<int>(ipow(p, k));
  if (k == 1) {
    modulus_ = {0, 1};
  } else {
    for (int code = 0; code < ipow(p, k); ++code) {
      std::vector<int> m = digits(code, p, k);
      m.push_back(1);
      if (m[0] != 0 && irreducible(m, p)) {
        modulus_ = m;
        break;
      }
    }
  }
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  for (int a = 0; a < q_; ++a) {
    auto da = digits(a, p, k);
    std::vector<int> n(k);
    for (int i = 0; i < k; ++i)
      n[i] = (p - da[i]) % p;
    neg_[a] = undigits(n, p);
    for (int b = 0; b < q_; ++b) {
      auto db = digits(b, p, k);
      std::vector<int> s(k);
      for (int i = 0; i < k; ++i)
        s[i] = (da[i] + db[i]) % p;
      add_[a * q_ + b] = undigits(s, p);
      mul_[a * q_ + b] = k == 1 ? (a * b) % p : undigits(mulmod(da, db, modulus_, p), p);
    }
  }
}

int FiniteField::inv(int a) const {
  if (a == 0)
    throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
  for (int b = 1; b < q_; ++b)
    if (mul(a, b) == 1)
      return b;
  throw std::logic_error("finite field table is not a field");
}

int FiniteField::pow(int a, long e) const {
  if (e < 0)
    return pow(inv(a), -e);
  int r = 1;
  for (long i = 0; i < e; ++i)
    r = mul(r, a);
  return r;
}

int FiniteField::parse(const std::string &text) const {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t')
      s += c;
  if (s.empty())
    throw std::invalid_argument("empty finite field element");
  if (s[0] == '#') {
    int v = std::stoi(s.substr(1));
    if (v < 0 || v >= q_)
      throw std::invalid_argument("finite field code out of range: " + text);
    return v;
  }
  int total = 0;
  std::size_t pos = 0;
  while (pos < s.size()) {
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
      negative = s[pos] == '-';
      ++pos;
    }
    std::size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-')
      ++end;
    std::string term = s.substr(pos, end - pos);
    pos = end;
    if (term.empty())
      throw std::invalid_argument("malformed finite field element '" + text + "'");
    int coef = 1;
    int power = 0;
    auto wpos = term.find('w');
    std::string cpart = wpos == std::string::npos ? term : term.substr(0, wpos);
    if (!cpart.empty() && cpart.back() == '*')
      cpart.pop_back();
    if (!cpart.empty()) {
      if (cpart.find_first_not_of("0123456789") != std::string::npos)
        throw std::invalid_argument("malformed finite field element '" + text + "'");
      coef = std::stoi(cpart) % p_;
    }
    if (wpos != std::string::npos) {
      power = 1;
      std::string rest = term.substr(wpos + 1);
      if (!rest.empty()) {
        if (rest[0] != '^' || rest.size() < 2 || rest.find_first_not_of("0123456789", 1) != std::string::npos)
          throw std::invalid_argument("malformed finite field element '" + text + "'");
        power = std::stoi(rest.substr(1));
      }
    }
    int value = mul(coef % p_, pow(k_ == 1 ? 1 : p_, power));
    if (k_ == 1 && wpos != std::string::npos)
      throw std::invalid_argument("prime field F_" + std::to_string(p_) + " has no generator symbol w");
    total = add(total, negative ? neg(value) : value);
  }
  return total;
}

std::string FiniteField::str(int a) const {
  if (a == 0)
    return "0";
  auto d = digits(a, p_, k_);
  std::ostringstream os;
  bool first = true;
  for (int i = k_ - 1; i >= 0; --i) {
    if (!d[i])
      continue;
    if (!first)
      os << " + ";
    first = false;
    if (i == 0)
      os << d[i];
    else {
      if (d[i] != 1)
        os << d[i] << "*";
      os << "w";
      if (i > 1)
        os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace hg

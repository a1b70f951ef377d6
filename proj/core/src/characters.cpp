#include "hg/characters.hpp"

#include <numeric>
#include <sstream>

#include "hg/arith.hpp"
#include "hg/subgroups.hpp"

namespace hg {

namespace {

void require_same(const ClassFunction &a, const ClassFunction &b, const char *op) {
  if (!a.group().same_as(b.group()))
    throw CharacterError(std::string(op) + ": class functions live on different groups (" + a.group().label() +
                         ", " + b.group().label() + ")");
}

}  // namespace

ClassFunction::ClassFunction(FiniteGroup g, std::vector<Cyclotomic> values) : g_(std::move(g)), v_(std::move(values)) {
  if (static_cast<int>(v_.size()) != g_.class_count())
    throw CharacterError("class function on " + g_.label() + " needs " + std::to_string(g_.class_count()) +
                         " values, got " + std::to_string(v_.size()));
}

ClassFunction ClassFunction::zero(const FiniteGroup &g) {
  return ClassFunction(g, std::vector<Cyclotomic>(g.class_count()));
}

ClassFunction ClassFunction::from_rationals(const FiniteGroup &g, const std::vector<Rational> &values) {
  return ClassFunction(g, std::vector<Cyclotomic>(values.begin(), values.end()));
}

bool ClassFunction::is_rational() const {
  return std::all_of(v_.begin(), v_.end(), [](const Cyclotomic &c) { return c.is_rational(); });
}

std::vector<Rational> ClassFunction::rational_values() const {
  std::vector<Rational> out;
  for (const auto &c : v_)
    out.push_back(c.rational());
  return out;
}

bool ClassFunction::is_zero() const {
  return std::all_of(v_.begin(), v_.end(), [](const Cyclotomic &c) { return c.is_zero(); });
}

ClassFunction ClassFunction::conj() const {
  std::vector<Cyclotomic> v;
  for (const auto &c : v_)
    v.push_back(c.conj());
  return ClassFunction(g_, std::move(v));
}

ClassFunction &ClassFunction::operator+=(const ClassFunction &o) {
  require_same(*this, o, "add");
  for (std::size_t i = 0; i < v_.size(); ++i)
    v_[i] += o.v_[i];
  return *this;
}

ClassFunction &ClassFunction::operator-=(const ClassFunction &o) {
  require_same(*this, o, "subtract");
  for (std::size_t i = 0; i < v_.size(); ++i)
    v_[i] -= o.v_[i];
  return *this;
}

ClassFunction ClassFunction::operator-() const {
  std::vector<Cyclotomic> v;
  for (const auto &c : v_)
    v.push_back(-c);
  return ClassFunction(g_, std::move(v));
}

ClassFunction operator*(const Cyclotomic &s, const ClassFunction &f) {
  std::vector<Cyclotomic> v;
  for (const auto &c : f.v_)
    v.push_back(s * c);
  return ClassFunction(f.g_, std::move(v));
}

ClassFunction operator*(const ClassFunction &a, const ClassFunction &b) {
  require_same(a, b, "multiply");
  std::vector<Cyclotomic> v;
  for (std::size_t i = 0; i < a.v_.size(); ++i)
    v.push_back(a.v_[i] * b.v_[i]);
  return ClassFunction(a.g_, std::move(v));
}

bool operator==(const ClassFunction &a, const ClassFunction &b) {
  return a.g_.same_as(b.g_) && a.v_ == b.v_;
}

std::string ClassFunction::str() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v_.size(); ++i)
    os << (i ? ", " : "") << v_[i].str();
  os << ')';
  return os.str();
}

Cyclotomic inner_product(const ClassFunction &a, const ClassFunction &b) {
  require_same(a, b, "inner_product");
  const FiniteGroup &g = a.group();
  if (a.is_rational() && b.is_rational()) {
    Rational s;
    for (int c = 0; c < g.class_count(); ++c)
      s += Rational(g.class_size(c)) * a[c].rational() * b[c].rational();
    return s / Rational(g.order());
  }
  // terms with a rational factor are summed as exponent coefficients over a common conductor
  long n = 1;
  for (int c = 0; c < g.class_count(); ++c)
    n = std::lcm(n, std::lcm(a[c].conductor(), b[c].conductor()));
  std::vector<Rational> acc(n);
  Cyclotomic s;
  for (int c = 0; c < g.class_count(); ++c) {
    if (a[c].is_zero() || b[c].is_zero())
      continue;
    Rational w(g.class_size(c));
    if (a[c].is_rational() || b[c].is_rational()) {
      const bool conj = b[c].is_rational();
      w *= conj ? b[c].rational() : a[c].rational();
      const Cyclotomic &v = conj ? a[c] : b[c];
      const long step = n / v.conductor();
      const auto &co = v.coeffs();
      for (std::size_t j = 0; j < co.size(); ++j)
        if (!co[j].is_zero()) {
          long e = static_cast<long>(j) * step % n;
          acc[conj ? (n - e) % n : e] += w * co[j];
        }
    } else {
      s += Cyclotomic(w) * a[c].conj() * b[c];
    }
  }
  s += Cyclotomic::from_exponent_coeffs(n, acc);
  return s / Cyclotomic(g.order());
}

Rational inner_product_q(const ClassFunction &a, const ClassFunction &b) {
  Cyclotomic v = inner_product(a, b);
  if (!v.is_rational())
    throw CharacterError("inner product is not rational: " + v.str());
  return v.rational();
}

ClassFunction trivial_character(const FiniteGroup &g) {
  return ClassFunction(g, std::vector<Cyclotomic>(g.class_count(), Cyclotomic(1)));
}

ClassFunction regular_character(const FiniteGroup &g) {
  auto f = ClassFunction::zero(g);
  std::vector<Cyclotomic> v = f.values();
  v[0] = Cyclotomic(g.order());
  return ClassFunction(g, std::move(v));
}

ClassFunction augmentation_character(const FiniteGroup &g) { return regular_character(g) - trivial_character(g); }

ClassFunction restrict_to(const ClassFunction &f, const Embedding &e) {
  if (!f.group().same_as(e.parent))
    throw CharacterError("restrict: class function is not on the embedding's parent group");
  std::vector<Cyclotomic> v;
  for (int c = 0; c < e.sub.class_count(); ++c)
    v.push_back(f.at(e.image[e.sub.class_rep(c)]));
  return ClassFunction(e.sub, std::move(v));
}

ClassFunction induce_from(const FiniteGroup &g, const ElementSet &h, const std::function<Cyclotomic(Elem)> &f) {
  if (!is_subgroup(g, h))
    throw CharacterError("induce: element set is not a subgroup of " + g.label());
  const long hs = static_cast<long>(h.count());
  std::vector<Cyclotomic> v;
  for (int c = 0; c < g.class_count(); ++c) {
    Cyclotomic s;
    bool any = false;
    for (Elem x : g.class_members(c))
      if (h.test(x)) {
        s += f(x);
        any = true;
      }
    if (any)
      s *= Cyclotomic(Rational(g.order() / g.class_size(c)) / Rational(hs));
    v.push_back(std::move(s));
  }
  return ClassFunction(g, std::move(v));
}

ClassFunction induce(const ClassFunction &f, const Embedding &e) {
  if (!f.group().same_as(e.sub))
    throw CharacterError("induce: class function is not on the embedded subgroup");
  std::vector<Elem> pre(e.parent.order(), -1);
  for (int a = 0; a < e.sub.order(); ++a)
    pre[e.image[a]] = a;
  return induce_from(e.parent, e.members, [&](Elem x) { return f.at(pre[x]); });
}

ClassFunction inflate(const ClassFunction &f, const Quotient &q) {
  if (!f.group().same_as(q.group))
    throw CharacterError("inflate: class function is not on the quotient group");
  std::vector<Cyclotomic> v;
  for (int c = 0; c < q.parent.class_count(); ++c)
    v.push_back(f.at(q.projection[q.parent.class_rep(c)]));
  return ClassFunction(q.parent, std::move(v));
}

Rational delta_mult_value(int p, int subgroup_order, int element_order) {
  if (!is_prime(p))
    throw CharacterError("delta_mult: " + std::to_string(p) + " is not prime");
  int m = ord_p(subgroup_order, p);
  if (ipow(p, m) != subgroup_order)
    throw CharacterError("delta_mult: subgroup order " + std::to_string(subgroup_order) + " is not a power of " +
                         std::to_string(p));
  if (element_order == 1)
    return Rational(static_cast<long>(m) * subgroup_order);
  int i = m - ord_p(element_order, p);
  return -Rational(ipow(p, i + 1)) / Rational(p - 1);
}

ClassFunction delta_mult(int p, int m) {
  if (!is_prime(p))
    throw CharacterError("delta_mult: " + std::to_string(p) + " is not prime");
  if (m < 0)
    throw CharacterError("delta_mult: negative exponent");
  int n = static_cast<int>(ipow(p, m));
  FiniteGroup g = builders::cyclic(n);
  std::vector<Rational> v;
  for (int c = 0; c < g.class_count(); ++c)
    v.push_back(delta_mult_value(p, n, g.element_order(g.class_rep(c))));
  return ClassFunction::from_rationals(g, v);
}

const ClassFunction &induced_augmentation(const FiniteGroup &g, int h) {
  auto r = g.memo<ClassFunction>("u_star:" + std::to_string(h), [&] {
    const auto &H = subgroup_class(g, h);
    return induce_from(g, H.rep, [&](Elem x) { return Cyclotomic(x == g.identity() ? H.order - 1 : -1); });
  });
  return *r;
}

const ClassFunction &induced_delta_mult(const FiniteGroup &g, int c, int p) {
  auto r = g.memo<ClassFunction>("delta_star:" + std::to_string(c) + ":" + std::to_string(p), [&] {
    const auto &P = subgroup_class(g, sylow_p_of_cyclic(g, c, p));
    return induce_from(g, P.rep, [&](Elem x) {
      return Cyclotomic(delta_mult_value(p, P.order, g.element_order(x)));
    });
  });
  return *r;
}

std::vector<Cyclotomic> multiplicities(const ClassFunction &f) {
  std::vector<Cyclotomic> out;
  for (const auto &chi : character_table(f.group()).irreducibles)
    out.push_back(inner_product(chi, f));
  return out;
}

std::vector<Rational> rational_multiplicities(const ClassFunction &f) {
  std::vector<Rational> out;
  for (const auto &m : multiplicities(f)) {
    if (!m.is_rational())
      throw CharacterError("multiplicity is not rational: " + m.str());
    out.push_back(m.rational());
  }
  return out;
}

const std::vector<Rational> &induced_augmentation_mult(const FiniteGroup &g, int h) {
  return *g.memo<std::vector<Rational>>("u_star_mult:" + std::to_string(h),
                                        [&] { return rational_multiplicities(induced_augmentation(g, h)); });
}

const std::vector<Rational> &induced_delta_mult_mult(const FiniteGroup &g, int c, int p) {
  return *g.memo<std::vector<Rational>>("delta_star_mult:" + std::to_string(c) + ":" + std::to_string(p),
                                        [&] { return rational_multiplicities(induced_delta_mult(g, c, p)); });
}

void check_character_symmetry(const ClassFunction &f) {
  const FiniteGroup &g = f.group();
  for (int c = 0; c < g.class_count(); ++c)
    if (!(f[g.inverse_class(c)] == f[c].conj()))
      throw CharacterError("not a virtual character: value at class " + std::to_string(c) + " (" +
                           g.element_name(g.class_rep(c)) + ") is not conjugate to the value at its inverse");
}

bool is_true_character(const ClassFunction &f) {
  check_character_symmetry(f);
  for (const auto &m : multiplicities(f))
    if (!m.is_rational() || !m.rational().is_integer() || m.rational().sign() < 0)
      return false;
  return true;
}

bool is_positive_rational(const ClassFunction &f) {
  check_character_symmetry(f);
  for (const auto &m : multiplicities(f))
    if (!m.is_rational() || m.rational().sign() < 0)
      return false;
  return true;
}

}  // namespace hg

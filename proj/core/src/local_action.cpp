#include "hg/local_action.hpp"

#include <algorithm>

namespace hg {

namespace {

FqSeries trim(FqSeries s) {
  while (!s.empty() && s.back() == 0)
    s.pop_back();
  return s;
}

FqSeries mul(const FiniteField &k, const FqSeries &a, const FqSeries &b, int d) {
  FqSeries r(std::min<std::size_t>(d, a.size() + b.size()), 0);
  for (std::size_t i = 0; i < a.size() && i < r.size(); ++i)
    if (a[i])
      for (std::size_t j = 0; j < b.size() && i + j < r.size(); ++j)
        r[i + j] = k.add(r[i + j], k.mul(a[i], b[j]));
  return trim(r);
}

/// f o h mod z^d, h without constant term.
FqSeries compose(const FiniteField &k, const FqSeries &f, const FqSeries &h, int d) {
  FqSeries result(d, 0);
  FqSeries power{1};
  for (std::size_t i = 0; i < f.size() && static_cast<int>(i) < d; ++i) {
    if (i > 0)
      power = mul(k, power, h, d);
    if (f[i])
      for (std::size_t j = 0; j < power.size(); ++j)
        result[j] = k.add(result[j], k.mul(f[i], power[j]));
    if (power.empty())
      break;
  }
  return trim(result);
}

}  // namespace

LocalAction LocalAction::make(const FiniteField &k, const FiniteGroup &g,
                              const std::map<std::string, FqSeries> &generators, int precision) {
  if (precision < 4)
    throw PrecisionError("series precision must be at least 4");
  LocalAction act(k);
  act.g_ = g;
  act.d_ = precision;
  for (const auto &[name, s] : generators)
    if (std::find(g.generator_names().begin(), g.generator_names().end(), name) == g.generator_names().end())
      throw FieldError("local action assigns a series to unknown generator '" + name + "'");
  std::vector<FqSeries> gens;
  for (std::size_t i = 0; i < g.generator_names().size(); ++i) {
    const auto &name = g.generator_names()[i];
    auto it = generators.find(name);
    if (it == generators.end())
      throw FieldError("local action has no series for generator '" + name + "'");
    FqSeries s = it->second;
    for (int c : s)
      if (c < 0 || c >= k.q())
        throw FieldError("generator '" + name + "': coefficient outside F_" + std::to_string(k.q()));
    if (static_cast<int>(s.size()) > precision)
      s.resize(precision);
    s = trim(s);
    if (s.empty() || s[0] != 0)
      throw FieldError("generator '" + name + "': series must have zero constant term");
    if (s.size() < 2 || s[1] == 0)
      throw FieldError("generator '" + name + "': linear coefficient must be a unit");
    if (s == FqSeries{0, 1} && g.generators()[i] != g.identity())
      throw FieldError("non-faithful action: generator '" + name + "' acts as the identity to precision " +
                       std::to_string(precision));
    gens.push_back(s);
  }
  auto build = [&](bool anti) {
    act.images_.assign(g.order(), FqSeries{0, 1});
    for (int x = 0; x < g.order(); ++x) {
      FqSeries m{0, 1};
      for (int w : g.element_word(x))
        m = anti ? compose(k, gens[w], m, precision) : compose(k, m, gens[w], precision);
      act.images_[x] = m;
    }
    for (int x = 0; x < g.order(); ++x)
      for (std::size_t i = 0; i < gens.size(); ++i) {
        FqSeries expect = anti ? compose(k, gens[i], act.images_[x], precision)
                               : compose(k, act.images_[x], gens[i], precision);
        if (act.images_[g.mul(x, g.generators()[i])] != expect)
          return false;
      }
    return true;
  };
  if (!build(false) && !build(true))
    throw FieldError("generator series violate the group relations of " + g.label() + " to precision " +
                     std::to_string(precision));
  return act;
}

int LocalAction::displacement_order(Elem x) const {
  const FqSeries &s = images_.at(x);
  for (int i = 0; i < d_; ++i) {
    int c = i < static_cast<int>(s.size()) ? s[i] : 0;
    if (i == 1)
      c = k_.sub(c, 1);
    if (c != 0)
      return i;
  }
  throw PrecisionError("ord_z(sigma(z) - z) >= precision " + std::to_string(d_) + " for element " +
                       g_.element_name(x) + "; raise the precision");
}

ClassFunction local_artin_character(const LocalAction &act) {
  const FiniteGroup &g = act.group();
  std::vector<Rational> v(g.class_count());
  Rational sum;
  for (int c = 1; c < g.class_count(); ++c) {
    int ord = act.displacement_order(g.class_rep(c));
    for (Elem x : g.class_members(c))
      if (act.displacement_order(x) != ord)
        throw FieldError("local Artin character is not constant on the class of " + g.element_name(g.class_rep(c)));
    v[c] = Rational(-ord);
    sum += v[c] * Rational(g.class_size(c));
  }
  v[0] = -sum;
  return ClassFunction::from_rationals(g, v);
}

FqSeries additive_translation_series(const FiniteField &k, int mu, int precision) {
  // t / (1 + mu t) = sum_{i>=0} (-mu)^i t^(i+1)
  FqSeries s(precision, 0);
  int c = 1;
  for (int i = 1; i < precision; ++i) {
    s[i] = c;
    c = k.mul(c, k.neg(mu));
  }
  return trim(s);
}

}  // namespace hg

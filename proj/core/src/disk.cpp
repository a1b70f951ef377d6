#include "hg/disk.hpp"

#include <algorithm>
#include <set>

#include "hg/subgroups.hpp"

namespace hg {

Mobius Mobius::compose(const Mobius &o) const {
  return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

bool Mobius::projectively_equal(const Mobius &o) const {
  return a * o.b == b * o.a && a * o.c == c * o.a && a * o.d == d * o.a && b * o.c == c * o.b &&
         b * o.d == d * o.b && c * o.d == d * o.c;
}

Cyclotomic Mobius::apply(const Cyclotomic &z) const { return (a * z + b) / (c * z + d); }

namespace {

Mobius normalized(const Mobius &m) {
  Cyclotomic inv = m.d.inverse();
  return {m.a * inv, m.b * inv, m.c * inv, Cyclotomic(1)};
}

/// f o h mod z^limit, h without constant term.
Poly compose_series(const Poly &f, const Poly &h, std::size_t limit) {
  Poly result;
  Poly power{Cyclotomic(1)};
  for (std::size_t i = 0; i < f.size() && i < limit; ++i) {
    if (i > 0)
      power = poly_mul(power, h, limit);
    if (!f[i].is_zero())
      result = poly_add(result, poly_scale(power, f[i]));
    if (power.empty())
      break;
  }
  if (result.size() > limit)
    result.resize(limit);
  poly_trim(result);
  return result;
}

bool series_equal(Poly a, Poly b) {
  poly_trim(a);
  poly_trim(b);
  return a == b;
}

Rational safe_val(const CycloLocalField &k, const Cyclotomic &x, const Rational &inf) {
  auto v = k.val(x);
  return v ? *v : inf;
}

template <class Map, class Compose, class Equal>
bool build_images(const FiniteGroup &g, const std::vector<Map> &gen_maps, const Map &identity, bool anti,
                  const Compose &compose, const Equal &equal, std::vector<Map> &out) {
  out.assign(g.order(), identity);
  for (int x = 0; x < g.order(); ++x) {
    Map m = identity;
    for (int w : g.element_word(x))
      m = anti ? compose(gen_maps[w], m) : compose(m, gen_maps[w]);
    out[x] = m;
  }
  for (int x = 0; x < g.order(); ++x)
    for (std::size_t i = 0; i < g.generators().size(); ++i) {
      Elem y = g.mul(x, g.generators()[i]);
      Map expect = anti ? compose(gen_maps[i], out[x]) : compose(out[x], gen_maps[i]);
      if (!equal(out[y], expect))
        return false;
    }
  return true;
}

}  // namespace

DiskAction DiskAction::from_mobius(const CycloLocalField &k, const FiniteGroup &g,
                                   const std::map<std::string, Mobius> &generators) {
  DiskAction act(k);
  act.g_ = g;
  act.kind_ = Kind::Mobius;
  for (const auto &[name, m] : generators)
    if (std::find(g.generator_names().begin(), g.generator_names().end(), name) == g.generator_names().end())
      throw FieldError("action assigns a map to unknown generator '" + name + "'");
  std::vector<Mobius> gens;
  const Rational inf(1000000);
  for (const auto &name : g.generator_names()) {
    auto it = generators.find(name);
    if (it == generators.end())
      throw FieldError("action has no map for generator '" + name + "'");
    const Mobius &m = it->second;
    for (const auto *x : {&m.a, &m.b, &m.c, &m.d})
      k.require(*x, "matrix entry");
    if ((m.a * m.d - m.b * m.c).is_zero())
      throw FieldError("generator '" + name + "': singular matrix");
    if (m.d.is_zero())
      throw FieldError("generator '" + name + "': does not preserve the open disk (d = 0)");
    Rational va = safe_val(k, m.a, inf), vb = safe_val(k, m.b, inf), vc = safe_val(k, m.c, inf),
             vd = safe_val(k, m.d, inf);
    if (!(vb > vd) || vc < vd || !(va == vd))
      throw FieldError("generator '" + name +
                       "': matrix does not preserve the open disk (need val(b) > val(d), val(c) >= val(d), "
                       "val(a) = val(d))");
    gens.push_back(normalized(m));
  }
  auto compose = [](const Mobius &x, const Mobius &y) { return normalized(x.compose(y)); };
  auto equal = [](const Mobius &x, const Mobius &y) { return x.projectively_equal(y); };
  if (!build_images(g, gens, Mobius{}, false, compose, equal, act.mob_)) {
    if (!build_images(g, gens, Mobius{}, true, compose, equal, act.mob_))
      throw FieldError("generator maps violate the group relations of " + g.label());
    act.contravariant_ = true;
  }
  return act;
}

DiskAction DiskAction::from_series(const CycloLocalField &k, const FiniteGroup &g,
                                   const std::map<std::string, Poly> &generators, int precision) {
  if (precision < 4)
    throw PrecisionError("series precision must be at least 4");
  DiskAction act(k);
  act.g_ = g;
  act.kind_ = Kind::Series;
  act.precision_ = precision;
  act.series_gens_ = generators;
  for (const auto &[name, s] : generators)
    if (std::find(g.generator_names().begin(), g.generator_names().end(), name) == g.generator_names().end())
      throw FieldError("action assigns a series to unknown generator '" + name + "'");
  std::vector<Poly> gens;
  for (const auto &name : g.generator_names()) {
    auto it = generators.find(name);
    if (it == generators.end())
      throw FieldError("action has no series for generator '" + name + "'");
    Poly s = it->second;
    poly_trim(s);
    for (const auto &c : s)
      k.require(c, "series coefficient");
    if (s.empty() || !s[0].is_zero())
      throw FieldError("generator '" + name + "': series must fix the origin (zero constant term)");
    if (s.size() < 2 || s[1].is_zero() || *k.val(s[1]) != Rational(0))
      throw FieldError("generator '" + name + "': linear coefficient must be a unit");
    for (const auto &c : s)
      if (!c.is_zero() && k.val(c)->sign() < 0)
        throw FieldError("generator '" + name + "': coefficients must be integral");
    if (static_cast<int>(s.size()) > precision)
      s.resize(precision);
    gens.push_back(s);
  }
  const std::size_t lim = precision;
  auto compose = [lim](const Poly &x, const Poly &y) { return compose_series(x, y, lim); };
  Poly identity{Cyclotomic(0), Cyclotomic(1)};
  if (!build_images(g, gens, identity, false, compose, series_equal, act.ser_)) {
    if (!build_images(g, gens, identity, true, compose, series_equal, act.ser_))
      throw FieldError("generator series violate the group relations of " + g.label() + " to precision " +
                       std::to_string(precision));
    act.contravariant_ = true;
  }
  return act;
}

DiskAction DiskAction::with_precision(int precision) const {
  if (kind_ != Kind::Series)
    return *this;
  return from_series(k_, g_, series_gens_, precision);
}

RationalFunction DiskAction::displacement(Elem x) const {
  RationalFunction f;
  if (kind_ == Kind::Mobius) {
    const Mobius &m = mob_.at(x);
    f.num = {m.b, m.a - m.d, -m.c};
    f.den = {m.d, m.c};
  } else {
    f.num = poly_sub(ser_.at(x), Poly{Cyclotomic(0), Cyclotomic(1)});
    f.den = {Cyclotomic(1)};
  }
  poly_trim(f.num);
  poly_trim(f.den);
  return f;
}

namespace {

RationalFunction nonzero_displacement(const DiskAction &act, Elem x) {
  RationalFunction f = act.displacement(x);
  if (f.num.empty()) {
    std::string who = act.group().element_name(x);
    if (act.kind() == DiskAction::Kind::Series)
      throw PrecisionError("sigma(z) - z vanishes to precision " + std::to_string(act.precision()) +
                           " for element " + who);
    throw FieldError("degenerate action: element " + who + " acts as the identity");
  }
  return f;
}

template <class F>
ClassFunction class_function_from_elements(const FiniteGroup &g, const F &value, const char *what) {
  std::vector<Rational> v(g.class_count());
  Rational sum;
  for (int c = 1; c < g.class_count(); ++c) {
    v[c] = value(g.class_rep(c));
    for (Elem x : g.class_members(c))
      if (!(value(x) == v[c]))
        throw FieldError(std::string(what) + " is not constant on the class of " + g.element_name(g.class_rep(c)));
    sum += v[c] * Rational(g.class_size(c));
  }
  v[0] = -sum;
  return ClassFunction::from_rationals(g, v);
}

}  // namespace

std::vector<std::optional<Rational>> displacement_valuations(const DiskAction &act) {
  std::vector<std::optional<Rational>> out(act.group().order());
  for (int x = 1; x < act.group().order(); ++x)
    out[x] = gauss_valuation(act.field(), nonzero_displacement(act, x));
  return out;
}

ClassFunction depth_character(const DiskAction &act) {
  auto vals = displacement_valuations(act);
  const Rational n(act.group().order());
  return class_function_from_elements(
      act.group(), [&](Elem x) { return -n * *vals[x]; }, "depth");
}

std::optional<std::vector<FixedPoint>> disk_fixed_points(const DiskAction &act, std::string *notice) {
  if (act.kind() != DiskAction::Kind::Mobius) {
    if (notice)
      *notice = "fixed points are only computed for Moebius actions";
    return std::nullopt;
  }
  const auto &k = act.field();
  const FiniteGroup &g = act.group();
  std::vector<Cyclotomic> points;
  auto in_disk = [&](const Cyclotomic &z) { return z.is_zero() || k.val(z)->sign() > 0; };
  auto add = [&](const Cyclotomic &z) {
    if (in_disk(z) && std::find(points.begin(), points.end(), z) == points.end())
      points.push_back(z);
  };
  for (int x = 1; x < g.order(); ++x) {
    const Mobius &m = act.mobius(x);
    // c z^2 + (d - a) z - b = 0
    if (m.c.is_zero()) {
      if (!(m.a == m.d))
        add(m.b / (m.d - m.a));
      continue;
    }
    Cyclotomic bq = m.d - m.a;
    Cyclotomic disc = bq * bq + Cyclotomic(4) * m.b * m.c;
    auto root = field_sqrt(k, disc);
    if (!root) {
      if (notice)
        *notice = "discriminant " + disc.str() + " of element " + g.element_name(x) +
                  " is not a square in the field; orbit verification skipped";
      return std::nullopt;
    }
    Cyclotomic two_c = Cyclotomic(2) * m.c;
    add((-bq + *root) / two_c);
    add((-bq - *root) / two_c);
  }
  std::vector<FixedPoint> out;
  for (const auto &z : points) {
    FixedPoint fp{z, {}};
    fp.stabilizer.set(g.identity());
    for (int x = 1; x < g.order(); ++x)
      if (act.mobius(x).apply(z) == z)
        fp.stabilizer.set(x);
    out.push_back(fp);
  }
  return out;
}

ArtinResult artin_character(const DiskAction &act) {
  const FiniteGroup &g = act.group();
  const auto &k = act.field();
  std::vector<int> w(g.order(), 0);
  for (int x = 1; x < g.order(); ++x)
    w[x] = weierstrass_degree(k, nonzero_displacement(act, x));
  ArtinResult r;
  r.artin = class_function_from_elements(
      g, [&](Elem x) { return Rational(-w[x]); }, "Artin character");
  auto pts = disk_fixed_points(act, &r.notice);
  if (!pts)
    return r;
  r.fixed_points_computed = true;
  if (pts->empty())
    r.notice = "the action has no fixed points in the open disk";
  std::vector<bool> used(pts->size(), false);
  ClassFunction sum = ClassFunction::zero(g);
  for (std::size_t i = 0; i < pts->size(); ++i) {
    if (used[i])
      continue;
    std::vector<FixedPoint> orbit;
    for (int x = 0; x < g.order(); ++x) {
      Cyclotomic y = act.mobius(x).apply((*pts)[i].z);
      for (std::size_t j = 0; j < pts->size(); ++j)
        if (!used[j] && (*pts)[j].z == y) {
          used[j] = true;
          orbit.push_back((*pts)[j]);
        }
    }
    sum += induced_augmentation(g, classify_subgroup(g, orbit.front().stabilizer).class_id);
    r.orbits.push_back(std::move(orbit));
  }
  r.matches_orbit_sum = sum == r.artin;
  return r;
}

BreakDecomposition break_decomposition(const DiskAction &act) {
  const FiniteGroup &g = act.group();
  auto vals = displacement_valuations(act);
  std::set<Rational> hs;
  for (int x = 1; x < g.order(); ++x)
    if (vals[x]->sign() > 0)
      hs.insert(*vals[x]);
  BreakDecomposition out;
  out.reassembled = ClassFunction::zero(g);
  Rational prev(0);
  for (const auto &h : hs) {
    Break b;
    b.h = h;
    b.subgroup.set(g.identity());
    for (int x = 1; x < g.order(); ++x)
      if (*vals[x] >= h)
        b.subgroup.set(x);
    if (!is_normal(g, b.subgroup))
      throw FieldError("ramification group at break " + h.str() + " is not a normal subgroup");
    b.lambda = Rational(static_cast<long>(b.subgroup.count())) * (h - prev);
    prev = h;
    out.reassembled += Cyclotomic(b.lambda) *
                       induced_augmentation(g, classify_subgroup(g, b.subgroup).class_id);
    out.breaks.push_back(b);
  }
  out.matches_depth = out.reassembled == depth_character(act);
  return out;
}

BoundaryShiftReport boundary_shift_check(const DiskAction &act, const Rational &eps, const Cyclotomic &center) {
  const auto &k = act.field();
  const FiniteGroup &g = act.group();
  if (eps.sign() <= 0)
    throw FieldError("boundary shift: eps must be positive");
  k.require(center, "center");
  if (!center.is_zero() && k.val(center)->sign() <= 0)
    throw FieldError("boundary shift: center " + center.str() + " is not in the open disk");
  Cyclotomic a = k.element_of_valuation(eps);

  BoundaryShiftReport r;
  r.eps = eps;
  r.center = center;
  r.depth_before = depth_character(act);
  r.artin = artin_character(act).artin;
  r.s = r.artin - augmentation_character(g);
  r.predicted = r.depth_before + Cyclotomic(Rational(g.order()) * eps) * r.s;

  std::vector<Rational> val(g.order());
  if (act.kind() == DiskAction::Kind::Mobius) {
    std::string notice;
    auto pts = disk_fixed_points(act, &notice);
    if (!pts)
      throw FieldError("boundary shift: cannot verify that fixed points lie in the subdisk (" + notice + ")");
    for (const auto &fp : *pts) {
      Cyclotomic diff = fp.z - center;
      if (!diff.is_zero() && *k.val(diff) < eps)
        throw FieldError("boundary shift: fixed point " + fp.z.str() + " lies outside the subdisk val(z - c) >= " +
                         eps.str());
    }
    Mobius t{a, center, Cyclotomic(0), Cyclotomic(1)};
    Mobius tinv{Cyclotomic(1), -center, Cyclotomic(0), a};
    for (int x = 1; x < g.order(); ++x) {
      Mobius m = tinv.compose(act.mobius(x)).compose(t);
      RationalFunction f{{m.b, m.a - m.d, -m.c}, {m.d, m.c}};
      poly_trim(f.num);
      poly_trim(f.den);
      val[x] = gauss_valuation(k, f);
    }
  } else {
    if (!center.is_zero())
      throw FieldError("boundary shift: series actions only support center 0");
    for (int x = 1; x < g.order(); ++x) {
      const Poly &s = act.series(x);
      Poly shifted;
      Cyclotomic scale(1);  // a^(i-1)
      for (std::size_t i = 1; i < s.size(); ++i) {
        shifted.resize(i + 1);
        shifted[i] = s[i] * scale;
        scale *= a;
      }
      Poly f = poly_sub(shifted, Poly{Cyclotomic(0), Cyclotomic(1)});
      if (f.empty())
        throw PrecisionError("boundary shift: displacement vanishes to the given precision");
      val[x] = gauss_valuation(k, f);
    }
  }
  const Rational n(g.order());
  r.depth_after = class_function_from_elements(
      g, [&](Elem x) { return -n * val[x]; }, "shifted depth");
  r.holds = r.depth_after == r.predicted;
  return r;
}

DerivationReport derivation_test(const DiskAction &act, Elem sigma, const Poly &f_in) {
  const auto &k = act.field();
  const FiniteGroup &g = act.group();
  if (sigma <= 0 || sigma >= g.order())
    throw FieldError("derivation test: sigma must be a non-identity element");
  DerivationReport r;
  r.val_sigma_z = gauss_valuation(k, nonzero_displacement(act, sigma));
  if (r.val_sigma_z.sign() <= 0)
    throw FieldError("derivation test: " + g.element_name(sigma) + " is not in the inertia group");
  Poly f = f_in;
  poly_trim(f);
  for (const auto &c : f) {
    k.require(c, "coefficient");
    if (!c.is_zero() && k.val(c)->sign() < 0)
      throw FieldError("derivation test: f must have integral coefficients");
  }
  for (std::size_t i = 1; i < f.size(); ++i)
    if (!f[i].is_zero() && k.val(f[i])->is_zero() && i % k.p() != 0)
      r.reduction_derivative_nonzero = true;

  std::optional<Rational> vf;
  if (act.kind() == DiskAction::Kind::Mobius) {
    const Mobius &m = act.mobius(sigma);
    const std::size_t deg = f.empty() ? 0 : f.size() - 1;
    Poly lin_num{m.b, m.a}, lin_den{m.d, m.c};
    Poly num;
    for (std::size_t i = 0; i < f.size(); ++i) {
      Poly term{f[i]};
      for (std::size_t j = 0; j < i; ++j)
        term = poly_mul(term, lin_num);
      for (std::size_t j = i; j < deg; ++j)
        term = poly_mul(term, lin_den);
      num = poly_add(num, term);
    }
    Poly den{Cyclotomic(1)};
    for (std::size_t j = 0; j < deg; ++j)
      den = poly_mul(den, lin_den);
    num = poly_sub(num, poly_mul(f, den));
    if (!num.empty())
      vf = gauss_valuation(k, RationalFunction{num, den});
  } else {
    Poly diff = poly_sub(compose_series(f, act.series(sigma), act.precision()), f);
    if (diff.size() > static_cast<std::size_t>(act.precision()))
      diff.resize(act.precision());
    poly_trim(diff);
    if (!diff.empty())
      vf = gauss_valuation(k, diff);
  }
  if (!vf) {
    r.val_sigma_f = Rational(1000000);
    r.inequality_holds = true;
    r.equality = false;
  } else {
    r.val_sigma_f = *vf;
    r.inequality_holds = *vf >= r.val_sigma_z;
    r.equality = *vf == r.val_sigma_z;
  }
  r.consistent = r.inequality_holds && r.equality == r.reduction_derivative_nonzero;
  return r;
}

}  // namespace hg

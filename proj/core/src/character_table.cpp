#include <algorithm>
#include <cmath>
#include <optional>

#include "hg/arith.hpp"
#include "hg/characters.hpp"

namespace hg {

namespace {

using Vec = std::vector<long>;
using Mat = std::vector<Vec>;

long choose_prime(long order, long exponent) {
  double bound = 2.0 * std::sqrt(static_cast<double>(order)) * static_cast<double>(order);
  for (long q = exponent + 1;; q += exponent)
    if (q > bound && is_prime(q))
      return q;
}

long primitive_root(long q) {
  auto fac = factorize(q - 1);
  for (long g = 2; g < q; ++g) {
    bool ok = true;
    for (auto [f, e] : fac)
      if (mod_pow(g, (q - 1) / f, q) == 1) {
        ok = false;
        break;
      }
    if (ok)
      return g;
  }
  return 1;
}

/// Row-reduced basis of the nullspace of a (rows x cols) matrix mod q.
Mat nullspace(Mat a, long q) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (a[i][c]) {
        piv = i;
        break;
      }
    if (piv < 0)
      continue;
    std::swap(a[r], a[piv]);
    long inv = mod_inverse(a[r][c], q);
    for (auto &x : a[r])
      x = x * inv % q;
    for (int i = 0; i < rows; ++i)
      if (i != r && a[i][c]) {
        long f = a[i][c];
        for (int k = 0; k < cols; ++k)
          a[i][k] = positive_mod(a[i][k] - f * a[r][k], q);
      }
    pivot_col.push_back(c);
    ++r;
  }
  Mat basis;
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col)
    is_pivot[c] = true;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[free])
      continue;
    Vec v(cols, 0);
    v[free] = 1;
    for (int i = 0; i < static_cast<int>(pivot_col.size()); ++i)
      v[pivot_col[i]] = positive_mod(-a[i][free], q);
    basis.push_back(v);
  }
  return basis;
}

/// Characteristic polynomial via reduction to Hessenberg form (coefficients low to high).
Vec charpoly(Mat h, long q) {
  const int n = static_cast<int>(h.size());
  for (int m = 1; m + 1 < n; ++m) {
    int piv = -1;
    for (int i = m; i < n; ++i)
      if (h[i][m - 1]) {
        piv = i;
        break;
      }
    if (piv < 0)
      continue;
    if (piv != m) {
      std::swap(h[piv], h[m]);
      for (int i = 0; i < n; ++i)
        std::swap(h[i][piv], h[i][m]);
    }
    long inv = mod_inverse(h[m][m - 1], q);
    for (int i = m + 1; i < n; ++i) {
      long u = h[i][m - 1] * inv % q;
      if (!u)
        continue;
      for (int j = 0; j < n; ++j)
        h[i][j] = positive_mod(h[i][j] - u * h[m][j], q);
      for (int j = 0; j < n; ++j)
        h[j][m] = (h[j][m] + u * h[j][i]) % q;
    }
  }
  std::vector<Vec> p(n + 1);
  p[0] = {1};
  for (int m = 1; m <= n; ++m) {
    Vec next(m + 1, 0);
    // (x - h[m-1][m-1]) p[m-1]
    for (int k = 0; k < m; ++k) {
      next[k + 1] = (next[k + 1] + p[m - 1][k]) % q;
      next[k] = positive_mod(next[k] - h[m - 1][m - 1] * p[m - 1][k], q);
    }
    long t = 1;
    for (int i = 1; i < m; ++i) {
      t = t * h[m - i][m - i - 1] % q;
      long coef = t * h[m - i - 1][m - 1] % q;
      for (int k = 0; k <= m - i - 1; ++k)
        next[k] = positive_mod(next[k] - coef * p[m - i - 1][k], q);
    }
    p[m] = next;
  }
  return p[n];
}

long eval_poly(const Vec &p, long x, long q) {
  long r = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    r = (r * x + *it) % q;
  return r;
}


void sort_characters(std::vector<std::pair<Vec, ClassFunction>> &chars) {
  auto is_trivial = [](const ClassFunction &f) {
    return std::all_of(f.values().begin(), f.values().end(), [](const Cyclotomic &c) { return c == Cyclotomic(1); });
  };
  std::stable_sort(chars.begin(), chars.end(), [&](const auto &a, const auto &b) {
    const auto &x = a.second.values(), &y = b.second.values();
    bool ta = is_trivial(a.second), tb = is_trivial(b.second);
    if (ta != tb)
      return ta;
    if (!(x[0] == y[0]))
      return x[0].rational() < y[0].rational();
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (canonical_less(x[i], y[i]))
        return true;
      if (canonical_less(y[i], x[i]))
        return false;
    }
    return false;
  });
}

/// Abelian groups: characters are the homomorphisms to the e-th roots of unity,
/// enumerated by the images of the generators.
std::optional<CharacterTable> abelian_table(const FiniteGroup &g) {
  const auto &gens = g.generators();
  const long e = g.exponent();
  long space = 1;
  for (Elem x : gens) {
    space *= g.element_order(x);
    if (space > 4L * g.order())
      return std::nullopt;
  }
  std::vector<Cyclotomic> roots;
  for (long t = 0; t < e; ++t)
    roots.push_back(Cyclotomic::root_of_unity(e, t));
  std::vector<std::pair<Vec, ClassFunction>> chars;
  std::vector<long> a(gens.size(), 0);
  while (true) {
    Vec t(g.order());
    for (int x = 0; x < g.order(); ++x) {
      long s = 0;
      for (int w : g.element_word(x))
        s += a[w];
      t[x] = s % e;
    }
    bool ok = true;
    for (int x = 0; x < g.order() && ok; ++x)
      for (std::size_t i = 0; i < gens.size() && ok; ++i)
        ok = t[g.mul(x, gens[i])] == (t[x] + a[i]) % e;
    if (ok) {
      std::vector<Cyclotomic> values;
      for (int c = 0; c < g.class_count(); ++c)
        values.push_back(roots[t[g.class_rep(c)]]);
      chars.emplace_back(t, ClassFunction(g, std::move(values)));
    }
    std::size_t k = 0;
    for (; k < a.size(); ++k) {
      a[k] += e / g.element_order(gens[k]);
      if (a[k] < e)
        break;
      a[k] = 0;
    }
    if (k == a.size())
      break;
  }
  if (static_cast<int>(chars.size()) != g.order())
    return std::nullopt;
  sort_characters(chars);
  CharacterTable tab;
  for (auto &c : chars)
    tab.irreducibles.push_back(std::move(c.second));
  return tab;
}
}  // namespace

namespace {

CharacterTable compute_table(const FiniteGroup &g) {
  if (g.is_abelian())
    if (auto t = abelian_table(g))
      return *t;
  const int r = g.class_count();
  const long n = g.order();
  const long q = choose_prime(n, g.exponent());

  // cls[j][l][k] = #{x in C_j : x^-1 g_k in C_l}
  std::vector<Mat> cls(r, Mat(r, Vec(r, 0)));
  for (int j = 0; j < r; ++j)
    for (int k = 0; k < r; ++k) {
      Elem gk = g.class_rep(k);
      for (Elem x : g.class_members(j))
        ++cls[j][g.class_of(g.mul(g.inv(x), gk))][k];
    }

  // Simultaneous eigenspaces of the class matrices, as row bases.
  std::vector<Mat> spaces{Mat{}};
  for (int i = 0; i < r; ++i) {
    Vec e(r, 0);
    e[i] = 1;
    spaces[0].push_back(e);
  }
  for (int j = 1; j < r; ++j) {
    std::vector<Mat> next;
    for (auto &basis : spaces) {
      const int d = static_cast<int>(basis.size());
      if (d == 1) {
        next.push_back(basis);
        continue;
      }
      // Express A_j b_i in the basis: solve with the pivot columns of the basis.
      Mat img(d, Vec(r, 0));
      for (int i = 0; i < d; ++i)
        for (int l = 0; l < r; ++l) {
          long s = 0;
          for (int k = 0; k < r; ++k)
            s = (s + cls[j][l][k] * basis[i][k]) % q;
          img[i][l] = s;
        }
      // Coordinates: solve coeffs * basis = img via augmented nullspace trick.
      Mat restricted(d, Vec(d, 0));  // restricted[a][b]: coefficient of basis a in image of basis b
      {
        // Reduce the basis to echelon form on columns to read coordinates.
        Mat sys(r, Vec(d + 1, 0));
        for (int b = 0; b < d; ++b) {
          for (int l = 0; l < r; ++l) {
            for (int a = 0; a < d; ++a)
              sys[l][a] = basis[a][l];
            sys[l][d] = positive_mod(-img[b][l], q);
          }
          auto ns = nullspace(sys, q);
          if (ns.size() != 1 || ns[0][d] == 0)
            throw CharacterError("character table: eigenspace not invariant (internal)");
          long inv = mod_inverse(ns[0][d], q);
          for (int a = 0; a < d; ++a)
            restricted[a][b] = ns[0][a] * inv % q;
        }
      }
      Vec cp = charpoly(restricted, q);
      int found = 0;
      for (long lambda = 0; lambda < q && found < d; ++lambda) {
        if (eval_poly(cp, lambda, q) != 0)
          continue;
        Mat m = restricted;
        for (int a = 0; a < d; ++a)
          m[a][a] = positive_mod(m[a][a] - lambda, q);
        auto coords = nullspace(m, q);
        Mat sub;
        for (const auto &c : coords) {
          Vec v(r, 0);
          for (int a = 0; a < d; ++a)
            for (int l = 0; l < r; ++l)
              v[l] = (v[l] + c[a] * basis[a][l]) % q;
          sub.push_back(v);
        }
        found += static_cast<int>(sub.size());
        next.push_back(sub);
      }
      if (found != d)
        throw CharacterError("character table: class matrix not diagonalisable mod " + std::to_string(q));
    }
    spaces = std::move(next);
  }

  const long root = mod_pow(primitive_root(q), (q - 1) / g.exponent(), q);
  const long e = g.exponent();
  Vec zpow(e);
  zpow[0] = 1;
  for (long t = 1; t < e; ++t)
    zpow[t] = zpow[t - 1] * root % q;
  std::vector<std::vector<int>> pcls(r);
  for (int k = 0; k < r; ++k) {
    Elem x = g.class_rep(k), y = g.identity();
    for (int l = 0; l < g.element_order(x); ++l, y = g.mul(y, x))
      pcls[k].push_back(g.class_of(y));
  }
  std::vector<std::pair<Vec, ClassFunction>> chars;
  long total = 0;
  for (auto &basis : spaces) {
    if (basis.size() != 1)
      throw CharacterError("character table: class sums do not separate characters");
    Vec w = basis[0];
    if (w[0] == 0)
      throw CharacterError("character table: degenerate eigenvector");
    long inv0 = mod_inverse(w[0], q);
    for (auto &x : w)
      x = x * inv0 % q;
    long s = 0;
    for (int k = 0; k < r; ++k)
      s = (s + w[k] * w[g.inverse_class(k)] % q * mod_inverse(g.class_size(k), q)) % q;
    long d2 = n % q * mod_inverse(s, q) % q;
    long d = std::lround(std::sqrt(static_cast<double>(d2)));
    if (d * d != d2 || d < 1)
      throw CharacterError("character table: degree is not an integer square root");
    total += d * d;
    Vec val(r);
    for (int k = 0; k < r; ++k)
      val[k] = d * w[k] % q * mod_inverse(g.class_size(k), q) % q;

    // chi(g) = sum_j m_j zeta_o^j with m_j = o^-1 sum_l chi(g^l) zeta_o^(-jl)
    std::vector<Cyclotomic> values;
    for (int k = 0; k < r; ++k) {
      const long o = g.element_order(g.class_rep(k));
      const long step = e / o;
      std::vector<Rational> mult(o);
      long inv_o = mod_inverse(o % q, q);
      for (long j = 0; j < o; ++j) {
        long m = 0;
        for (long l = 0; l < o; ++l)
          m = (m + val[pcls[k][l]] * zpow[positive_mod(-j * l, o) * step]) % q;
        m = m * inv_o % q;
        if (m > d)
          throw CharacterError("character table: eigenvalue multiplicity out of range");
        mult[j] = Rational(m);
      }
      values.push_back(Cyclotomic::from_exponent_coeffs(o, mult));
    }
    chars.emplace_back(val, ClassFunction(g, std::move(values)));
  }
  if (total != n)
    throw CharacterError("character table: degrees do not satisfy sum of squares = |G|");

  sort_characters(chars);
  CharacterTable t;
  t.prime = q;
  for (auto &c : chars)
    t.irreducibles.push_back(std::move(c.second));
  return t;
}

}  // namespace

const CharacterTable &character_table(const FiniteGroup &g) {
  return *g.memo<CharacterTable>("character_table", [&] { return compute_table(g); });
}

}  // namespace hg

#include "hg/simplex.hpp"

#include <stdexcept>

namespace hg {

void LinearProgram::add_row(std::vector<Rational> coeffs, Sense s, Rational b) {
  if (static_cast<int>(coeffs.size()) != variables)
    throw std::invalid_argument("LP row has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                                std::to_string(variables));
  rows.push_back(std::move(coeffs));
  senses.push_back(s);
  rhs.push_back(std::move(b));
}

std::string to_string(LpStatus s) {
  switch (s) {
  case LpStatus::Optimal:
    return "optimal";
  case LpStatus::Infeasible:
    return "infeasible";
  case LpStatus::Unbounded:
    return "unbounded";
  }
  return "?";
}

namespace {

struct Tableau {
  int m = 0, n = 0;  // rows, columns (excluding rhs)
  std::vector<std::vector<Rational>> a;  // m rows of n+1 entries, last is rhs
  std::vector<int> basis;
  long pivots = 0;

  void pivot(int r, int c) {
    Rational inv = a[r][c].inverse();
    for (auto &v : a[r])
      v *= inv;
    for (int i = 0; i < m; ++i) {
      if (i == r || a[i][c].is_zero())
        continue;
      Rational f = a[i][c];
      for (int j = 0; j <= n; ++j)
        if (!a[r][j].is_zero())
          a[i][j] -= f * a[r][j];
    }
    basis[r] = c;
    ++pivots;
  }

  /// Maximizes cost over columns allowed[j]; returns false if unbounded.
  bool optimize(const std::vector<Rational> &cost, const std::vector<bool> &allowed) {
    for (;;) {
      // reduced cost c_j - c_B B^-1 A_j; with the tableau in canonical form this is c_j - sum c_basis[i] a[i][j]
      int enter = -1;
      for (int j = 0; j < n && enter < 0; ++j) {
        if (!allowed[j])
          continue;
        bool basic = false;
        for (int b : basis)
          basic = basic || b == j;
        if (basic)
          continue;
        Rational rc = cost[j];
        for (int i = 0; i < m; ++i)
          if (!a[i][j].is_zero())
            rc -= cost[basis[i]] * a[i][j];
        if (rc.sign() > 0)
          enter = j;
      }
      if (enter < 0)
        return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m; ++i) {
        if (a[i][enter].sign() <= 0)
          continue;
        Rational ratio = a[i][n] / a[i][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0)
        return false;
      pivot(leave, enter);
    }
  }
};

/// y = c_B B^-1, read from the columns that formed the starting identity basis.
std::vector<Rational> tableau_duals(const Tableau &t, const std::vector<int> &start, const std::vector<Rational> &cost) {
  std::vector<Rational> y(start.size());
  for (std::size_t i = 0; i < start.size(); ++i)
    for (int k = 0; k < t.m; ++k)
      if (!cost[t.basis[k]].is_zero() && !t.a[k][start[i]].is_zero())
        y[i] += cost[t.basis[k]] * t.a[k][start[i]];
  return y;
}

}  // namespace

std::optional<std::vector<Rational>> equality_conflict(const LinearProgram &lp) {
  const int m0 = static_cast<int>(lp.rows.size());
  const int nv = lp.variables;
  std::vector<int> eq;
  for (int i = 0; i < m0; ++i)
    if (lp.senses[i] == Sense::Eq)
      eq.push_back(i);
  const int m = static_cast<int>(eq.size());
  // [A | b | I] row reduced; a row with zero A part and nonzero b gives the combination
  std::vector<std::vector<Rational>> s(m, std::vector<Rational>(nv + 1 + m));
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < nv; ++j)
      s[r][j] = lp.rows[eq[r]][j];
    s[r][nv] = lp.rhs[eq[r]];
    s[r][nv + 1 + r] = 1;
  }
  int row = 0;
  for (int col = 0; col < nv && row < m; ++col) {
    int piv = -1;
    for (int r = row; r < m && piv < 0; ++r)
      if (!s[r][col].is_zero())
        piv = r;
    if (piv < 0)
      continue;
    std::swap(s[row], s[piv]);
    for (int r = row + 1; r < m; ++r) {
      if (s[r][col].is_zero())
        continue;
      Rational f = s[r][col] / s[row][col];
      for (std::size_t j = col; j < s[r].size(); ++j)
        if (!s[row][j].is_zero())
          s[r][j] -= f * s[row][j];
    }
    ++row;
  }
  for (int r = row; r < m; ++r) {
    if (s[r][nv].is_zero())
      continue;
    std::vector<Rational> y(m0);
    bool negate = s[r][nv].sign() > 0;
    for (int k = 0; k < m; ++k)
      y[eq[k]] = negate ? -s[r][nv + 1 + k] : s[r][nv + 1 + k];
    return y;
  }
  return std::nullopt;
}

LpResult solve_lp(const LinearProgram &lp) {
  const int m0 = static_cast<int>(lp.rows.size());
  const int nv = lp.variables;
  if (static_cast<int>(lp.objective.size()) != nv)
    throw std::invalid_argument("LP objective length does not match the variable count");
  if (auto y = equality_conflict(lp)) {
    LpResult res;
    res.status = LpStatus::Infeasible;
    res.certificate = *y;
    res.certificate_verified = verify_farkas(lp, res.certificate);
    return res;
  }

  // Normalize to b >= 0, then columns: x | slack or surplus per inequality | artificial per row needing one.
  std::vector<Sense> sense = lp.senses;
  std::vector<int> flip(m0, 1);
  for (int i = 0; i < m0; ++i)
    if (lp.rhs[i].sign() < 0) {
      flip[i] = -1;
      if (sense[i] == Sense::Le)
        sense[i] = Sense::Ge;
      else if (sense[i] == Sense::Ge)
        sense[i] = Sense::Le;
    }
  int slack_count = 0;
  for (Sense s : sense)
    slack_count += s != Sense::Eq;
  int art_count = 0;
  for (Sense s : sense)
    art_count += s != Sense::Le;
  const int n = nv + slack_count + art_count;

  Tableau t;
  t.m = m0;
  t.n = n;
  t.a.assign(m0, std::vector<Rational>(n + 1));
  t.basis.assign(m0, -1);
  std::vector<bool> artificial(n, false);
  int sc = nv, ac = nv + slack_count;
  for (int i = 0; i < m0; ++i) {
    for (int j = 0; j < nv; ++j)
      t.a[i][j] = flip[i] > 0 ? lp.rows[i][j] : -lp.rows[i][j];
    t.a[i][n] = flip[i] > 0 ? lp.rhs[i] : -lp.rhs[i];
    if (sense[i] == Sense::Le) {
      t.a[i][sc] = 1;
      t.basis[i] = sc++;
    } else {
      if (sense[i] == Sense::Ge)
        t.a[i][sc++] = -1;
      t.a[i][ac] = 1;
      artificial[ac] = true;
      t.basis[i] = ac++;
    }
  }
  const std::vector<int> start = t.basis;

  LpResult res;
  std::vector<bool> all(n, true);
  std::vector<Rational> phase1(n);
  for (int j = 0; j < n; ++j)
    if (artificial[j])
      phase1[j] = -1;
  t.optimize(phase1, all);
  Rational infeas;
  for (int i = 0; i < m0; ++i)
    if (artificial[t.basis[i]])
      infeas += t.a[i][n];

  auto unflip = [&](std::vector<Rational> y) {
    for (int i = 0; i < m0; ++i)
      if (flip[i] < 0)
        y[i] = -y[i];
    return y;
  };

  if (infeas.sign() > 0) {
    res.status = LpStatus::Infeasible;
    // phase-1 duals of max -sum(art): y A_j >= c_j. The Farkas ray for the original system is y itself.
    std::vector<Rational> y = tableau_duals(t, start, phase1);
    res.certificate = unflip(y);
    res.certificate_verified = verify_farkas(lp, res.certificate);
    res.pivots = t.pivots;
    return res;
  }

  // Drive zero-level artificials out of the basis; rows where that is impossible are redundant.
  std::vector<bool> keep(m0, true);
  for (int i = 0; i < m0; ++i) {
    if (!artificial[t.basis[i]])
      continue;
    int col = -1;
    for (int j = 0; j < n && col < 0; ++j)
      if (!artificial[j] && !t.a[i][j].is_zero())
        col = j;
    if (col >= 0)
      t.pivot(i, col);
    else
      keep[i] = false;
  }
  {
    Tableau r;
    r.n = n;
    r.pivots = t.pivots;
    for (int i = 0; i < m0; ++i)
      if (keep[i]) {
        r.a.push_back(t.a[i]);
        r.basis.push_back(t.basis[i]);
      }
    r.m = static_cast<int>(r.a.size());
    std::vector<bool> allowed(n);
    for (int j = 0; j < n; ++j)
      allowed[j] = !artificial[j];
    std::vector<Rational> cost(n);
    for (int j = 0; j < nv; ++j)
      cost[j] = lp.objective[j];
    bool bounded = r.optimize(cost, allowed);
    res.pivots = r.pivots;
    res.x.assign(nv, Rational());
    for (int i = 0; i < r.m; ++i)
      if (r.basis[i] < nv)
        res.x[r.basis[i]] = r.a[i][n];
    if (!bounded) {
      res.status = LpStatus::Unbounded;
      return res;
    }
    res.status = LpStatus::Optimal;
    for (int j = 0; j < nv; ++j)
      res.value += lp.objective[j] * res.x[j];
    // dropped rows hold a basic artificial at cost 0, so they add nothing to y
    res.certificate = unflip(tableau_duals(r, start, cost));
    res.certificate_verified = verify_optimal_duals(lp, res.x, res.certificate);
  }
  return res;
}

namespace {

bool signs_ok(const LinearProgram &lp, const std::vector<Rational> &y) {
  if (y.size() != lp.rows.size())
    return false;
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (lp.senses[i] == Sense::Le && y[i].sign() < 0)
      return false;
    if (lp.senses[i] == Sense::Ge && y[i].sign() > 0)
      return false;
  }
  return true;
}

std::vector<Rational> ya(const LinearProgram &lp, const std::vector<Rational> &y) {
  std::vector<Rational> r(lp.variables);
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!y[i].is_zero())
      for (int j = 0; j < lp.variables; ++j)
        r[j] += y[i] * lp.rows[i][j];
  return r;
}

}  // namespace

bool verify_farkas(const LinearProgram &lp, const std::vector<Rational> &y) {
  if (!signs_ok(lp, y))
    return false;
  for (const auto &v : ya(lp, y))
    if (v.sign() < 0)
      return false;
  Rational yb;
  for (std::size_t i = 0; i < y.size(); ++i)
    yb += y[i] * lp.rhs[i];
  return yb.sign() < 0;
}

bool verify_optimal_duals(const LinearProgram &lp, const std::vector<Rational> &x, const std::vector<Rational> &y) {
  if (!signs_ok(lp, y) || static_cast<int>(x.size()) != lp.variables)
    return false;
  auto r = ya(lp, y);
  for (int j = 0; j < lp.variables; ++j)
    if (r[j] < lp.objective[j] || x[j].sign() < 0)
      return false;
  Rational yb, cx;
  for (std::size_t i = 0; i < y.size(); ++i) {
    yb += y[i] * lp.rhs[i];
    Rational ax;
    for (int j = 0; j < lp.variables; ++j)
      ax += lp.rows[i][j] * x[j];
    bool ok = lp.senses[i] == Sense::Le ? ax <= lp.rhs[i] : lp.senses[i] == Sense::Ge ? ax >= lp.rhs[i] : ax == lp.rhs[i];
    if (!ok)
      return false;
  }
  for (int j = 0; j < lp.variables; ++j)
    cx += lp.objective[j] * x[j];
  return yb == cx;
}

}  // namespace hg

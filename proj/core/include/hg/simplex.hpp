#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hg/rational.hpp"

namespace hg {

enum class Sense { Le, Eq, Ge };

/// maximize c.x subject to A x (sense) b, x >= 0.
struct LinearProgram {
  int variables = 0;
  std::vector<std::vector<Rational>> rows;
  std::vector<Sense> senses;
  std::vector<Rational> rhs;
  std::vector<Rational> objective;

  void add_row(std::vector<Rational> coeffs, Sense s, Rational b);
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Rational value;
  std::vector<Rational> x;
  /// Optimal duals (Optimal) or a Farkas ray (Infeasible), one entry per row.
  std::vector<Rational> certificate;
  bool certificate_verified = false;
  long pivots = 0;
};

/// Farkas ray supported on the equality rows when they are inconsistent on their own.
std::optional<std::vector<Rational>> equality_conflict(const LinearProgram &lp);

/// Exact two-phase simplex with Bland's rule.
LpResult solve_lp(const LinearProgram &lp);

/// y >= 0 on <= rows, y <= 0 on >= rows, y A >= 0 and y b < 0.
bool verify_farkas(const LinearProgram &lp, const std::vector<Rational> &y);
/// Dual feasibility y A >= c with the sign pattern above, and y b equal to the primal value.
bool verify_optimal_duals(const LinearProgram &lp, const std::vector<Rational> &x, const std::vector<Rational> &y);

std::string to_string(LpStatus s);

}  // namespace hg

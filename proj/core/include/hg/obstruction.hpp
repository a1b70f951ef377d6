#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hg/characters.hpp"
#include "hg/group.hpp"
#include "hg/local_action.hpp"
#include "hg/simplex.hpp"
#include "hg/tree.hpp"

namespace hg {

/// All multisets of nontrivial cyclic subgroup classes C_1..C_r with sum u_{C_i}^* = a.
/// Each decomposition lists class ids by decreasing order (ties by id). Throws CharacterError
/// unless a is a true character orthogonal to 1.
std::vector<std::vector<int>> bertin_check(const ClassFunction &a);

/// A tree shape with monodromy, before thicknesses are chosen.
struct TreeCandidate {
  int decomposition = 0;
  std::string code;
  MetricTree tree;  ///< eps = 1 on internal edges, 0 on leaf edges
  std::vector<int> monodromy;
};

/// Rooted trees with the given leaf classes satisfying (H1), up to isomorphism, sorted by code.
std::vector<TreeCandidate> enumerate_candidates(const FiniteGroup &g, const std::vector<int> &leaves);

/// LP in the internal thicknesses plus a slack t (last variable): eps_e >= t, t <= 1, maximize t.
struct CandidateLp {
  LinearProgram lp;
  std::vector<int> edge_of_variable;
};
CandidateLp candidate_lp(const FiniteGroup &g, int p, const TreeCandidate &c);

struct CandidateResult {
  int index = 0;
  int decomposition = 0;
  std::string code;
  LpStatus status = LpStatus::Infeasible;
  Rational slack;  ///< optimal t when feasible
  bool certificate_verified = false;
  std::vector<Rational> certificate;
  long pivots = 0;
  int rows = 0;
  int variables = 0;
};

enum class Verdict { Witness, Infeasible, Inconclusive };
std::string to_string(Verdict v);

struct ObstructionReport {
  Verdict verdict = Verdict::Infeasible;
  std::optional<HurwitzTree> witness;
  std::optional<ValidationReport> witness_validation;
  bool witness_matches = false;  ///< a_T equals the input and delta_T = 0
  std::vector<std::vector<int>> decompositions;
  long topology_count = 0;
  long lp_solved = 0;
  long lp_pivots = 0;
  bool all_certificates_verified = true;
  std::vector<CandidateResult> candidates;  ///< up to and including the witness
  std::string note;
  double elapsed_ms = 0;
  int threads = 1;
};

/// Thread count: explicit value if positive, else HG_THREADS, else hardware concurrency.
int resolve_threads(int requested);

/// Complete search for a Hurwitz tree of type (G, p) with a_T = a and delta_T = 0.
ObstructionReport hurwitz_feasibility(const FiniteGroup &g, int p, const ClassFunction &a, int threads = 0);

/// Runs the search on the Artin character of a local action; precision failures give Inconclusive.
ObstructionReport hurwitz_feasibility(const LocalAction &act, int threads = 0);

}  // namespace hg

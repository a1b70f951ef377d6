#pragma once

#include <array>
#include <string>
#include <vector>

#include "hg/characters.hpp"
#include "hg/group.hpp"
#include "hg/obstruction.hpp"

namespace hg {

struct QuaternionCompletion {
  std::vector<int> extra;  ///< extra leaf classes inside <tau^2>
  ClassFunction artin;
  std::vector<std::vector<int>> bertin;
  ObstructionReport report;
};

struct QuaternionReport {
  int n = 2;
  FiniteGroup group;
  std::array<int, 3> h{};  ///< subgroup classes of <tau>, <sigma>, <sigma tau>
  std::array<ClassFunction, 3> chi;
  bool lemma_holds = false;  ///< cyclic subgroups with nontrivial image in G/<tau^2> are conjugate to some H_i
  std::vector<std::string> lemma_detail;

  ClassFunction klein_artin;               ///< Artin character of the Klein-four action over F_4
  std::array<Rational, 3> klein_pairings;  ///< <a, chi_i> on the quotient
  std::array<Rational, 3> simple_pairings; ///< <a_min, chi_i> for the minimal simple character
  bool simple = false;

  ClassFunction psi;
  std::vector<std::pair<int, Rational>> psi_pairings;  ///< <psi, u_C^*> per nontrivial cyclic class
  bool psi_pairings_two = false;
  Rational delta_b0_psi;   ///< 6
  std::array<Rational, 2> d_bi_b0;  ///< d(B^0, b0), d(B^1, b0): both 2
  Rational d_bprime_b0;   ///< 4
  Rational d_b_b0;        ///< delta_b0(psi) / 2 = 3
  bool density_contradiction = false;

  ClassFunction minimal;
  std::vector<QuaternionCompletion> completions;
  bool all_infeasible = false;
};

/// Q_{2^{n+1}}, 2 <= n, with completions adding up to extra_leaves leaves inside <tau^2>.
QuaternionReport quaternion_report(int n, int extra_leaves = 1, int threads = 0);

}  // namespace hg

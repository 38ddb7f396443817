#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "equiarbor/cuts.hpp"

namespace equiarbor {

/// One instance check inside a theorem report.
struct TheoremCheck {
  std::string name;
  bool applicable = true;
  bool holds = true;
  std::string detail;
};

struct MainTheoremReport {
  std::size_t k = 0;
  std::size_t vertex_count = 0;
  std::size_t lambda = 0;
  Rational omega;
  bool enumerated = false;           // exhaustive cut search was run
  std::size_t cuts_examined = 0;     // cuts with |C| <= k
  std::size_t nontrivial_cuts = 0;
  std::vector<TheoremCheck> checks;
  /// Cuts that contradict a check; any entry fails the report.
  std::vector<EdgeCut> counterexamples;

  bool passed() const;
};

/// For a connected k-regular equiarboreal graph: lambda = k, parity of lambda
/// for even k, and (when n <= enumeration_limit) every cut with |C| <= k is
/// exhaustively tested against the structural consequences of equiarboreality:
/// no cut below k, trivial minimum cuts for k >= 11, |A1|,|B1| >= 2, the F
/// bound, K2-component freedom, strong S_x / S_{x,y} freedom, no degree-1
/// vertex in G[C], and the |C| >= 2 floor(k - sqrt k) - 2 size bound.
/// Throws PreconditionError when the hypotheses fail.
MainTheoremReport verify_main_theorem(const Graph& g,
                                      std::size_t enumeration_limit = kDefaultEnumerationLimit);

nlohmann::json to_json(const MainTheoremReport& report);

}  // namespace equiarbor

#include "equiarbor/theorems.hpp"


#include "equiarbor/bounds.hpp"
#include "equiarbor/equiarboreal.hpp"
#include "equiarbor/errors.hpp"

namespace equiarbor {

bool MainTheoremReport::passed() const {
  if (!counterexamples.empty()) return false;
  for (const TheoremCheck& c : checks) {
    if (c.applicable && !c.holds) return false;
  }
  return true;
}

namespace {

struct CutCheck {
  std::string name;
  bool applicable;
  std::size_t violations = 0;
};

}  // namespace

MainTheoremReport verify_main_theorem(const Graph& g, std::size_t enumeration_limit) {
  if (!g.is_connected()) throw PreconditionError("the main theorem needs a connected graph");
  if (!g.is_simple()) throw PreconditionError("the main theorem is stated for simple graphs");
  if (!g.regularity()) throw PreconditionError("the main theorem needs a regular graph");
  const std::size_t k = *g.regularity();
  if (k == 0 || g.vertex_count() < 2) throw PreconditionError("the main theorem needs a regular graph of degree >= 1");
  const EquiarborealVerdict verdict = check_equiarboreal(g);
  if (!verdict.is_equiarboreal) throw PreconditionError("the main theorem needs an equiarboreal graph");

  MainTheoremReport report;
  report.k = k;
  report.vertex_count = g.vertex_count();
  report.omega = *verdict.omega;
  report.lambda = edge_connectivity(g);
  const long kl = static_cast<long>(k);

  report.checks.push_back({"lambda equals degree", true, report.lambda == k,
                           "lambda = " + std::to_string(report.lambda) + ", k = " + std::to_string(k)});
  report.checks.push_back({"even degree gives even lambda", k % 2 == 0, report.lambda % 2 == 0, ""});

  if (g.vertex_count() > enumeration_limit) {
    report.checks.push_back({"exhaustive cut search", false, true,
                             "skipped: " + std::to_string(g.vertex_count()) + " vertices exceed the limit of " +
                                 std::to_string(enumeration_limit)});
    return report;
  }
  report.enumerated = true;
  const std::vector<EdgeCut> cuts = enumerate_cuts(g, k, enumeration_limit);
  report.cuts_examined = cuts.size();

  // x + y bound for strong S_{x,y} freedom, and x*k <= k^2 + 4 - 3k for S_x.
  const long sxy_limit = floor_k_minus_sqrt_k_minus_2(kl);
  auto claim1_range = [kl](long x) { return x >= 3 && x * kl <= kl * kl + 4 - 3 * kl; };
  const long claim3_bound = k >= 8 ? 2 * floor_k_minus_sqrt_k(kl) - 2 : 0;

  std::vector<CutCheck> cut_checks = {
      {"no cut smaller than k", true},
      {"minimum cuts trivial (k >= 11)", k >= 11},
      {"|A1|, |B1| >= 2", k >= 3},
      {"Omega >= F bound", k >= 3},
      {"K2-component-free", k >= 4},
      {"strongly S_{x,y}-free for x+y <= k-sqrt(k)-2", k >= 7},
      {"strongly S_x-free for 3 <= x <= k+4/k-3", k >= 6},
      {"strongly S_x-free, |C| <= k-1 (k >= 6)", k >= 6},
      {"strongly S_x-free, non-trivial (k >= 8)", k >= 8},
      {"no degree-1 vertex in G[C], |C| <= k-1 (k >= 6)", k >= 6},
      {"no degree-1 vertex in G[C], non-trivial (k >= 8)", k >= 8},
      {"|C| >= 2 floor(k-sqrt k) - 2", k >= 8},
  };

  for (const EdgeCut& cut : cuts) {
    const std::size_t size = cut.size();
    const bool trivial = cut.is_trivial();
    bool bad = false;
    auto flag = [&](std::size_t index, bool violated) {
      if (cut_checks[index].applicable && violated) {
        ++cut_checks[index].violations;
        bad = true;
      }
    };
    flag(0, size < k);
    flag(1, size == k && !trivial);
    const CutClassification cls = classify_cut(g, cut);
    auto sx_free_all = [&]() {
      for (const auto& [x, free] : cls.strongly_sx_free) {
        if (!free) return false;
      }
      return true;
    };
    if (size < k) {
      flag(7, !sx_free_all());
      flag(9, cls.min_degree_in_cut_graph == 1);
    }
    if (!trivial) {
      ++report.nontrivial_cuts;
      flag(2, cls.a1_size < 2 || cls.b1_size < 2);
      if (k >= 3) {
        try {
          flag(3, report.omega < cut_lower_bound(g, cut, kl));
        } catch (const DomainError&) {
          // every crossing edge sits at a vertex with all k edges in the cut
        }
      }
      flag(4, !cls.k2_component_free);
      bool sxy_ok = true;
      for (const auto& [xy, free] : cls.strongly_sxy_free) {
        if (static_cast<long>(xy.first + xy.second) <= sxy_limit && !free) sxy_ok = false;
      }
      flag(5, !sxy_ok);
      bool claim1_ok = true;
      for (const auto& [x, free] : cls.strongly_sx_free) {
        if (claim1_range(static_cast<long>(x)) && !free) claim1_ok = false;
      }
      flag(6, !claim1_ok);
      flag(8, !sx_free_all());
      flag(10, cls.min_degree_in_cut_graph == 1);
      flag(11, static_cast<long>(size) < claim3_bound);
    }
    if (bad) report.counterexamples.push_back(cut);
  }
  for (const CutCheck& c : cut_checks) {
    report.checks.push_back({c.name, c.applicable, c.violations == 0,
                             c.applicable ? std::to_string(c.violations) + " violating cut(s)" : "not applicable"});
  }
  return report;
}

nlohmann::json to_json(const MainTheoremReport& report) {
  nlohmann::json checks = nlohmann::json::array();
  for (const TheoremCheck& c : report.checks) {
    checks.push_back({{"name", c.name}, {"applicable", c.applicable}, {"holds", c.holds}, {"detail", c.detail}});
  }
  nlohmann::json counterexamples = nlohmann::json::array();
  for (const EdgeCut& cut : report.counterexamples) counterexamples.push_back(to_json(cut));
  return {{"k", report.k},
          {"vertexCount", report.vertex_count},
          {"lambda", report.lambda},
          {"omega", to_string(report.omega)},
          {"enumerated", report.enumerated},
          {"cutsExamined", report.cuts_examined},
          {"nontrivialCuts", report.nontrivial_cuts},
          {"checks", checks},
          {"counterexamples", counterexamples},
          {"passed", report.passed()}};
}

}  // namespace equiarbor

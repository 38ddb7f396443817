#include "equiarbor/survey.hpp"

#include <atomic>
#include <chrono>
#include <ctime>
#include <thread>

#include "equiarbor/equiarboreal.hpp"
#include "equiarbor/errors.hpp"
#include "equiarbor/matching.hpp"
#include "equiarbor/scheme.hpp"
#include "equiarbor/theorems.hpp"

namespace equiarbor {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

SurveyEntry survey_entry(const ManifestItem& item, std::size_t enumeration_limit) {
  SurveyEntry e;
  e.graph_name = item.name;
  e.negative_control = item.negative_control;
  GraphCatalogEntry loaded;
  try {
    loaded = load_entry(item);
  } catch (const std::exception& ex) {
    e.status = Verdict::Fail;
    e.notes.push_back(std::string("load failed: ") + ex.what());
    return e;
  }
  const Graph& g = loaded.graph;
  e.vertex_count = g.vertex_count();
  e.regularity = g.regularity();
  bool failed = false;
  try {
    if (!g.is_connected() || g.edge_count() == 0) {
      e.status = Verdict::Skipped;
      e.notes.push_back("not a connected graph with edges; nothing to verify");
      return e;
    }
    const EquiarborealVerdict verdict = check_equiarboreal(g);
    e.equiarboreal = verdict.is_equiarboreal;
    e.omega = verdict.omega;
    if (g.vertex_count() >= 2) e.lambda = edge_connectivity(g);

    if (!verdict.is_equiarboreal) {
      const auto& w = *verdict.witness;
      e.notes.push_back("edges " + std::to_string(w.first.u) + "-" + std::to_string(w.first.v) + " and " +
                        std::to_string(w.second.u) + "-" + std::to_string(w.second.v) + " have resistances " +
                        to_string(w.first_resistance) + " and " + to_string(w.second_resistance));
      if (item.negative_control) {
        e.notes.push_back("negative control: hypotheses fail as expected");
        e.status = Verdict::Pass;
      } else {
        e.notes.push_back("not equiarboreal; hypotheses fail");
        e.status = Verdict::Skipped;
      }
      if (item.scheme) {
        e.godsil = scheme_from_distance_partition(g) ? Verdict::Fail : Verdict::Skipped;
        if (e.godsil == Verdict::Fail) {
          e.notes.push_back("distance partition is a scheme yet the graph is not equiarboreal");
          e.status = Verdict::Fail;
        }
      }
      return e;
    }
    if (item.negative_control) {
      e.notes.push_back("negative control turned out equiarboreal");
      failed = true;
    }

    if (e.regularity && g.is_simple()) {
      const MainTheoremReport report = verify_main_theorem(g, enumeration_limit);
      e.main_theorem = report.passed() ? Verdict::Pass : Verdict::Fail;
      if (!report.enumerated) e.notes.push_back("cut enumeration skipped above the vertex limit");
      if (!report.passed()) {
        for (const TheoremCheck& c : report.checks) {
          if (c.applicable && !c.holds) e.notes.push_back("main theorem check failed: " + c.name + " (" + c.detail + ")");
        }
      }
    } else {
      e.notes.push_back(e.regularity ? "multigraph: main theorem skipped" : "not regular: main theorem skipped");
    }

    if (e.regularity && g.vertex_count() % 2 == 0) {
      const MatchingResult m = has_perfect_matching(g);
      e.matching = m.has_perfect ? Verdict::Pass : Verdict::Fail;
    }

    if (item.scheme) {
      const auto scheme = scheme_from_distance_partition(g);
      if (!scheme) {
        e.godsil = Verdict::Fail;
        e.notes.push_back("distance partition is not an association scheme");
      } else {
        const GodsilReport report = verify_godsil_theorems(*scheme);
        e.godsil = report.passed() ? Verdict::Pass : Verdict::Fail;
        for (const ColourClassReport& c : report.classes) {
          if (!c.connected) {
            e.notes.push_back("colour class " + std::to_string(c.index) + " is disconnected (" +
                              std::to_string(c.components) + " components)");
          }
        }
      }
    }
  } catch (const std::exception& ex) {
    e.notes.push_back(std::string("error: ") + ex.what());
    failed = true;
  }
  for (Verdict v : {e.main_theorem, e.matching, e.godsil}) {
    if (v == Verdict::Fail) failed = true;
  }
  e.status = failed ? Verdict::Fail : Verdict::Pass;
  return e;
}

SurveyReport survey(const std::vector<ManifestItem>& manifest, const SurveyOptions& options) {
  SurveyReport report;
  report.entries.resize(manifest.size());
  const std::size_t jobs = std::max<std::size_t>(1, std::min(options.jobs, manifest.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < manifest.size(); i = next++) {
      report.entries[i] = survey_entry(manifest[i], options.enumeration_limit);
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  for (const SurveyEntry& e : report.entries) {
    ++report.summary.total;
    switch (e.status) {
      case Verdict::Pass: ++report.summary.passed; break;
      case Verdict::Fail: ++report.summary.failed; break;
      case Verdict::Skipped: ++report.summary.skipped; break;
    }
  }
  return report;
}

nlohmann::json SurveyReport::to_json(bool deterministic) const {
  auto opt = [](const auto& o) { return o ? nlohmann::json(*o) : nlohmann::json(nullptr); };
  nlohmann::json rows = nlohmann::json::array();
  for (const SurveyEntry& e : entries) {
    rows.push_back({{"graphName", e.graph_name},
                    {"vertexCount", opt(e.vertex_count)},
                    {"regularity", opt(e.regularity)},
                    {"equiarboreal", opt(e.equiarboreal)},
                    {"omega", e.omega ? nlohmann::json(equiarbor::to_string(*e.omega)) : nlohmann::json(nullptr)},
                    {"lambda", opt(e.lambda)},
                    {"mainTheoremPass", equiarbor::to_string(e.main_theorem)},
                    {"matchingPass", equiarbor::to_string(e.matching)},
                    {"godsilPass", equiarbor::to_string(e.godsil)},
                    {"negativeControl", e.negative_control},
                    {"status", equiarbor::to_string(e.status)},
                    {"notes", e.notes}});
  }
  nlohmann::json doc = {{"entries", rows},
                        {"summary",
                         {{"total", summary.total},
                          {"passed", summary.passed},
                          {"failed", summary.failed},
                          {"skipped", summary.skipped}}}};
  if (!deterministic) {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
    doc["generatedAt"] = buf;
  }
  return doc;
}

}  // namespace equiarbor

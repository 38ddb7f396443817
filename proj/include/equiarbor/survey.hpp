#pragma once

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "equiarbor/catalog.hpp"
#include "equiarbor/cuts.hpp"

namespace equiarbor {

enum class Verdict { Pass, Fail, Skipped };

std::string to_string(Verdict v);

struct SurveyEntry {
  std::string graph_name;
  std::optional<std::size_t> vertex_count;
  std::optional<std::size_t> regularity;
  std::optional<bool> equiarboreal;
  std::optional<Rational> omega;
  std::optional<std::size_t> lambda;
  Verdict main_theorem = Verdict::Skipped;
  Verdict matching = Verdict::Skipped;
  Verdict godsil = Verdict::Skipped;
  bool negative_control = false;
  Verdict status = Verdict::Pass;
  std::vector<std::string> notes;
};

struct SurveySummary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

struct SurveyReport {
  std::vector<SurveyEntry> entries;
  SurveySummary summary;

  /// Deterministic documents omit the timestamp.
  nlohmann::json to_json(bool deterministic) const;
};

struct SurveyOptions {
  std::size_t jobs = 1;
  std::size_t enumeration_limit = kDefaultEnumerationLimit;
};

/// Evaluates one manifest row; load failures become failed entries.
SurveyEntry survey_entry(const ManifestItem& item, std::size_t enumeration_limit);

/// Runs every entry (concurrently when jobs > 1); entries keep manifest order.
SurveyReport survey(const std::vector<ManifestItem>& manifest, const SurveyOptions& options = {});

}  // namespace equiarbor

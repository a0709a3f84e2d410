#pragma once

#include "minrep/spaces.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace minrep {

struct PartnerRecord {
  IndexPair index;
  Rational h;
  friend bool operator==(const PartnerRecord&, const PartnerRecord&) = default;
};

// Everything the library knows about one (p, q, m, n).
struct AnalysisRecord {
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::int64_t m = 0;
  std::int64_t n = 0;
  Rational c;
  Rational h;
  std::int64_t s = 0;
  std::vector<PartnerRecord> partners;
  std::vector<Rational> lambda;
  std::vector<Rational> r;
  Level level;
  Integer min_congruence_dim;
  // "Irreducible", "Inconclusive", or "Skipped" past the subset cap.
  std::string irreducibility;
  std::optional<Rational> k0;
  std::optional<std::vector<Rational>> alpha;
  CongruenceVerdict verdict;
  SpaceComparison spaces;

  friend bool operator==(const AnalysisRecord&, const AnalysisRecord&) = default;
};

AnalysisRecord analyze(const MinimalModel& model, const ModuleLabel& label);

void to_json(nlohmann::json& j, const AnalysisRecord& rec);
void from_json(const nlohmann::json& j, AnalysisRecord& rec);

std::string to_json_line(const AnalysisRecord& rec);
std::string to_json_pretty(const AnalysisRecord& rec);
AnalysisRecord record_from_json(const std::string& text);

std::string csv_header();
std::string to_csv_row(const AnalysisRecord& rec);
std::string to_table(const AnalysisRecord& rec);

}  // namespace minrep

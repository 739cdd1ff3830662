#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carterlab/subgroups.hpp"

namespace carterlab {

enum class Tier { Quick, Full };
enum class Status { Pass, Fail, Skip };

std::string to_string(Tier t);
std::string to_string(Status s);
/// "quick" or "full"; throws std::invalid_argument otherwise.
Tier parse_tier(const std::string& s);

struct RunOptions {
  SearchOptions search;
  /// Record wall time as metric "ms". Off gives byte-identical reports.
  bool timing = true;
};

struct CheckReport {
  std::string id;
  Status status = Status::Fail;
  std::string anchor;
  /// Insertion-ordered; "ms" comes last when timing is on.
  std::vector<std::pair<std::string, std::int64_t>> metrics;
  std::string details;
  /// Set iff status is Skip.
  std::string reason;

  std::optional<std::int64_t> metric(const std::string& key) const;
  friend bool operator==(const CheckReport&, const CheckReport&) = default;
};

struct CheckCase {
  std::string id;
  std::string description;
  /// The mathematical claim the case checks, stated in full.
  std::string anchor;
  Tier tier = Tier::Quick;
  std::vector<std::string> group_specs;
  /// Human-readable expectation, e.g. "1 class, order 8".
  std::string expected;
  std::int64_t budget_ms = 1000;
  std::function<CheckReport(const RunOptions&)> run;
};

/// All registered cases in registry order. Ids are unique.
const std::vector<CheckCase>& registry();
/// Cases of the given tier (all cases when nullopt), registry order.
std::vector<const CheckCase*> list_cases(std::optional<Tier> tier);
const CheckCase* find_case(const std::string& id);

/// Runs one case. Exceptions become Fail reports, CapExceeded a Skip.
/// Throws std::invalid_argument for an unknown id.
CheckReport run_case(const std::string& id, const RunOptions& opts = {});
CheckReport run_case(const CheckCase& c, const RunOptions& opts = {});
/// Runs the selection on up to `parallelism` threads; reports come back in
/// selection order.
std::vector<CheckReport> run_all(const std::vector<const CheckCase*>& cases, unsigned parallelism,
                                 const RunOptions& opts = {});

/// JSON array of {"id", "status", "anchor", "metrics", "details"[, "reason"]}.
std::string render_json(const std::vector<CheckReport>& reports);
/// One line per report: "PASS id (12 ms)", "FAIL id: details", ...
std::string render_text(const std::vector<CheckReport>& reports);
/// Inverse of render_json. Throws std::invalid_argument on malformed input.
std::vector<CheckReport> parse_reports_json(const std::string& text);

}  // namespace carterlab

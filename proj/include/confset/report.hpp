#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace confset {

inline constexpr std::string_view kToolVersion = "0.1.0";

/// pass         - the claim holds and every oracle agrees
/// observed     - a value was computed; there is no claim to compare against
/// finding      - oracles agree with each other but contradict the claim
/// skipped      - not run (cap or budget)
/// invariant-failure, disagreement - internal inconsistency; exit code 2
enum class Outcome { Pass, Observed, Finding, Skipped, InvariantFailure, Disagreement };

std::string_view to_string(Outcome o);

struct CheckEntry {
  std::string name;
  std::string claim;
  nlohmann::json inputs = nlohmann::json::object();
  Outcome outcome = Outcome::Pass;
  nlohmann::json result = nlohmann::json::object();
  std::optional<double> wall_ms;
};

class AnalysisReport {
 public:
  AnalysisReport(std::string command, nlohmann::json parameters);

  void add(CheckEntry entry) { entries_.push_back(std::move(entry)); }
  /// Sorted by name.
  std::vector<CheckEntry> entries() const;
  const CheckEntry* find(std::string_view name) const;

  /// "consistent" or "inconsistent".
  std::string verdict() const;
  /// 0 when consistent, 2 otherwise.
  int exit_code() const;

  nlohmann::json to_json() const;
  std::string to_json_string() const;
  /// Fixed-width table, one row per entry.
  std::string to_text() const;

 private:
  std::string command_;
  nlohmann::json parameters_;
  std::vector<CheckEntry> entries_;
};

}  // namespace confset

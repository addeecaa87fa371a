#include "confset/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

namespace confset {

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Pass: return "pass";
    case Outcome::Observed: return "observed";
    case Outcome::Finding: return "finding";
    case Outcome::Skipped: return "skipped";
    case Outcome::InvariantFailure: return "invariant-failure";
    case Outcome::Disagreement: return "disagreement";
  }
  return "unknown";
}

AnalysisReport::AnalysisReport(std::string command, nlohmann::json parameters)
    : command_(std::move(command)), parameters_(std::move(parameters)) {}

std::vector<CheckEntry> AnalysisReport::entries() const {
  auto sorted = entries_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const CheckEntry& a, const CheckEntry& b) { return a.name < b.name; });
  return sorted;
}

const CheckEntry* AnalysisReport::find(std::string_view name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

std::string AnalysisReport::verdict() const { return exit_code() == 0 ? "consistent" : "inconsistent"; }

int AnalysisReport::exit_code() const {
  for (const auto& e : entries_)
    if (e.outcome == Outcome::InvariantFailure || e.outcome == Outcome::Disagreement) return 2;
  return 0;
}

nlohmann::json AnalysisReport::to_json() const {
  nlohmann::json j;
  j["tool"] = "confset";
  j["version"] = std::string(kToolVersion);
  j["command"] = command_;
  j["parameters"] = parameters_;
  j["checks"] = nlohmann::json::array();
  std::size_t findings = 0;
  for (const auto& e : entries()) {
    nlohmann::json c;
    c["name"] = e.name;
    c["claim"] = e.claim;
    c["inputs"] = e.inputs;
    c["outcome"] = std::string(to_string(e.outcome));
    c["result"] = e.result;
    if (e.wall_ms) c["wall_ms"] = *e.wall_ms;
    if (e.outcome == Outcome::Finding) ++findings;
    j["checks"].push_back(std::move(c));
  }
  j["findings"] = findings;
  j["verdict"] = verdict();
  return j;
}

std::string AnalysisReport::to_json_string() const { return to_json().dump(2) + "\n"; }

std::string AnalysisReport::to_text() const {
  std::ostringstream out;
  char line[512];
  std::snprintf(line, sizeof line, "%-44s %-18s %s\n", "CHECK", "OUTCOME", "RESULT");
  out << line;
  for (const auto& e : entries()) {
    std::string summary = e.result.dump();
    if (summary.size() > 100) summary = summary.substr(0, 97) + "...";
    std::snprintf(line, sizeof line, "%-44s %-18s %s\n", e.name.c_str(),
                  std::string(to_string(e.outcome)).c_str(), summary.c_str());
    out << line;
  }
  out << "verdict: " << verdict() << "\n";
  return out.str();
}

}  // namespace confset

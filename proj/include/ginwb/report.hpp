#pragma once

#include <chrono>

#include <json.hpp>

#include "ginwb/audit.hpp"
#include "ginwb/enumeration.hpp"

namespace ginwb {

inline const char* kToolVersion = "1.0.0";

/// Structured result of one CLI run. The comparable part (everything except
/// `timings`) is byte-stable for fixed inputs and tool version.
struct ReportDocument {
  std::string command;
  std::string inputs_digest;
  nlohmann::json sections = nlohmann::json::object();
  std::vector<std::string> discrepancies;
  nlohmann::json timings = nlohmann::json::object();

  nlohmann::json to_json() const {
    nlohmann::json j;
    j["tool_version"] = kToolVersion;
    j["command"] = command;
    j["inputs_digest"] = inputs_digest;
    j["sections"] = sections;
    j["discrepancies"] = discrepancies;
    j["timings"] = timings;  // excluded from byte-comparisons by consumers
    return j;
  }
};

inline std::string fnv_digest(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[24];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

class StageTimer {
public:
  explicit StageTimer(ReportDocument& doc, std::string name)
      : doc_(doc), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
  ~StageTimer() {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start_)
                  .count();
    doc_.timings[name_] = ms;
  }

private:
  ReportDocument& doc_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

inline nlohmann::json record_json(const EnumerationRecord& r) {
  nlohmann::json j;
  j["ideal"] = ideal_str(r.ideal);
  j["colength"] = r.colength;
  j["regularity"] = r.regularity;
  j["cone_genus"] = r.cone_genus;
  j["bound"] = r.bound;
  j["matches_reference"] = r.matches_reference;
  j["notes"] = r.notes;
  return j;
}

inline nlohmann::json case_json(const CaseRecord& c) {
  nlohmann::json j;
  j["case"] = c.descriptor;
  j["inputs"] = c.inputs;
  j["g"] = c.g;
  j["i"] = c.i;
  nlohmann::json contribs = nlohmann::json::array();
  for (const auto& cb : c.contributions) {
    nlohmann::json cj;
    cj["source"] = cb.source;
    cj["value"] = cb.value;
    cj["kind"] = cb.kind == ContributionKind::Computed ? "computed" : "assumed";
    contribs.push_back(cj);
  }
  j["contributions"] = contribs;
  j["verdict"] = c.verdict ? "nonproblematic" : "problematic";
  j["notes"] = c.notes;
  return j;
}

}  // namespace ginwb

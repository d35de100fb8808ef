#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace cubecover {

/// Outcome of a verification run. "exploratory" marks runs outside the domain
/// where an identity is claimed: their numbers are data, not failures.
enum class ReportStatus { pass, fail, exploratory };

inline std::string to_string(ReportStatus s) {
  switch (s) {
    case ReportStatus::pass: return "pass";
    case ReportStatus::fail: return "fail";
    case ReportStatus::exploratory: return "exploratory";
  }
  return "fail";
}

inline ReportStatus report_status_from_string(const std::string& s) {
  if (s == "pass") return ReportStatus::pass;
  if (s == "fail") return ReportStatus::fail;
  if (s == "exploratory") return ReportStatus::exploratory;
  throw std::invalid_argument("ReportStatus: bad value '" + s + "'");
}

/// One per-case record. All mathematical values are exact decimal strings;
/// nothing in a report is ever a float.
struct DetailRecord {
  std::map<std::string, std::string> params;
  std::string expected;
  std::string got;
  std::string note;         // finding, counterexample context, certificate path
  bool informational = false;  // recorded but not asserted; never fails a run
  bool pass = true;

  friend bool operator==(const DetailRecord& a, const DetailRecord& b) {
    return a.params == b.params && a.expected == b.expected && a.got == b.got &&
           a.note == b.note && a.informational == b.informational && a.pass == b.pass;
  }
};

/// Structured pass/fail result of a verification run: parameter echo,
/// per-case details with counterexamples, timing. Serialization is stable
/// (sorted keys, fixed field order), so identical runs emit identical bytes.
struct Report {
  std::string command;
  std::map<std::string, std::string> params;
  ReportStatus status = ReportStatus::pass;
  std::vector<DetailRecord> details;
  std::int64_t timing_ms = 0;

  /// fail if any asserted detail failed; else exploratory if requested; else
  /// pass.
  void finalize(bool exploratory = false) {
    status = exploratory ? ReportStatus::exploratory : ReportStatus::pass;
    for (const auto& d : details) {
      if (!d.informational && !d.pass) {
        status = ReportStatus::fail;
        return;
      }
    }
  }

  bool passed() const { return status != ReportStatus::fail; }

  friend bool operator==(const Report& a, const Report& b) {
    return a.command == b.command && a.params == b.params && a.status == b.status &&
           a.details == b.details && a.timing_ms == b.timing_ms;
  }
};

inline nlohmann::ordered_json to_json(const DetailRecord& d) {
  nlohmann::ordered_json j;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : d.params) j["params"][k] = v;
  j["expected"] = d.expected;
  j["got"] = d.got;
  j["note"] = d.note;
  j["informational"] = d.informational;
  j["pass"] = d.pass;
  return j;
}

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["params"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.params) j["params"][k] = v;
  j["status"] = to_string(r.status);
  j["details"] = nlohmann::ordered_json::array();
  for (const auto& d : r.details) j["details"].push_back(to_json(d));
  j["timing_ms"] = r.timing_ms;
  return j;
}

inline DetailRecord detail_from_json(const nlohmann::json& j) {
  DetailRecord d;
  for (const auto& [k, v] : j.at("params").items()) d.params[k] = v.get<std::string>();
  d.expected = j.at("expected").get<std::string>();
  d.got = j.at("got").get<std::string>();
  d.note = j.at("note").get<std::string>();
  d.informational = j.at("informational").get<bool>();
  d.pass = j.at("pass").get<bool>();
  return d;
}

inline Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("params").items()) r.params[k] = v.get<std::string>();
  r.status = report_status_from_string(j.at("status").get<std::string>());
  for (const auto& d : j.at("details")) r.details.push_back(detail_from_json(d));
  r.timing_ms = j.at("timing_ms").get<std::int64_t>();
  return r;
}

/// Canonical serialization: 2-space indent, '\n' terminated.
inline std::string report_to_json_string(const Report& r) { return to_json(r).dump(2) + "\n"; }

/// Human-readable rendering: one status line, then any failing or noteworthy
/// details.
inline std::string report_to_text(const Report& r) {
  std::string out = "[" + to_string(r.status) + "] " + r.command;
  for (const auto& [k, v] : r.params) out += " " + k + "=" + v;
  out += "\n";
  for (const auto& d : r.details) {
    const bool interesting = !d.pass || d.informational || !d.note.empty();
    if (!interesting) continue;
    out += d.pass ? (d.informational ? "  (info) " : "  (note) ") : "  FAIL ";
    for (const auto& [k, v] : d.params) out += k + "=" + v + " ";
    if (!d.expected.empty() || !d.got.empty()) {
      out += "expected=" + d.expected + " got=" + d.got + " ";
    }
    if (!d.note.empty()) out += d.note;
    out += "\n";
  }
  return out;
}

}  // namespace cubecover

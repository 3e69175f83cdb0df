#include "frullani/report.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "frullani/catalog.hpp"

namespace frullani {

namespace {

std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string e3(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

nlohmann::ordered_json number_or_null(double v) {
  if (!std::isfinite(v)) return nullptr;
  return v;
}

}  // namespace

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::NotApplicable: return "NOT_APPLICABLE";
    case Status::OracleFailed: return "ORACLE_FAILED";
    case Status::ConstraintViolation: return "CONSTRAINT_VIOLATION";
  }
  return "?";
}

Summary summarize(const std::vector<VerificationRecord>& records) {
  Summary s;
  s.total = records.size();
  for (const auto& r : records) {
    switch (r.status) {
      case Status::Pass: ++s.pass; break;
      case Status::Fail:
      case Status::OracleFailed: ++s.fail; break;
      case Status::NotApplicable:
      case Status::ConstraintViolation: ++s.skipped; break;
    }
  }
  return s;
}

bool all_clear(const std::vector<VerificationRecord>& records) { return summarize(records).fail == 0; }

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::Text;
  if (name == "json") return ReportFormat::Json;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "' (expected text or json)");
}

std::string format_record(const VerificationRecord& rec) {
  return "entry=" + rec.entry_id + " params=" + format_params(rec.params) + " expected=" + g17(rec.expected) +
         " numeric=" + g17(rec.numeric) + " abs_err=" + e3(rec.abs_error) +
         " status=" + std::string(to_string(rec.status));
}

std::string format_summary(const Summary& s) {
  return "total=" + std::to_string(s.total) + " pass=" + std::to_string(s.pass) +
         " fail=" + std::to_string(s.fail) + " skipped=" + std::to_string(s.skipped);
}

void emit_report(const std::vector<VerificationRecord>& records, ReportFormat format, std::ostream& sink) {
  if (format == ReportFormat::Text) {
    for (const auto& r : records) sink << format_record(r) << '\n';
    sink << format_summary(summarize(records)) << '\n';
  } else {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : records) {
      nlohmann::ordered_json params = nlohmann::ordered_json::object();
      for (const auto& [k, v] : r.params) params[k] = number_or_null(v);
      nlohmann::ordered_json obj;
      obj["entry"] = r.entry_id;
      obj["params"] = params;
      obj["expected"] = number_or_null(r.expected);
      obj["numeric"] = number_or_null(r.numeric);
      obj["abs_err"] = number_or_null(r.abs_error);
      obj["status"] = std::string(to_string(r.status));
      if (!r.detail.empty()) obj["detail"] = r.detail;
      arr.push_back(std::move(obj));
    }
    sink << arr.dump(2) << '\n';
  }
  if (!sink) throw std::runtime_error("failed writing report");
}

}  // namespace frullani

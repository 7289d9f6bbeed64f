#include "snl/report.hpp"

#include <cmath>

#include "snl/errors.hpp"

namespace snl {

Json to_json(const VerificationReport& report) {
  Json j;
  j["name"] = report.name;
  j["passed"] = report.passed;
  j["worst_margin"] = report.worst_margin;
  j["witness"] = report.witness;
  Json details = Json::object();
  for (const auto& [k, v] : report.details) details[k] = v;
  j["details"] = std::move(details);
  return j;
}

VerificationReport report_from_json(const Json& j) {
  try {
    VerificationReport r;
    r.name = j.at("name").get<std::string>();
    r.passed = j.at("passed").get<bool>();
    r.worst_margin = j.at("worst_margin").get<double>();
    r.witness = j.contains("witness") ? j.at("witness") : Json();
    if (j.contains("details")) {
      for (const auto& [k, v] : j.at("details").items()) r.details[k] = v.get<double>();
    }
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed report: ") + e.what());
  }
}

ReportBuilder::ReportBuilder(std::string name, ToleranceConfig tol) : name_(std::move(name)), tol_(tol) {}

bool ReportBuilder::observe(double margin) {
  observed_ = true;
  if (std::isnan(margin)) {
    worst_ = margin;
    return true;
  }
  if (margin < worst_) {
    worst_ = margin;
    return true;
  }
  return false;
}

void ReportBuilder::require(const std::string& condition, bool holds) {
  const std::string key = "cond:" + condition;
  auto it = details_.find(key);
  // A condition evaluated several times holds only if it held every time.
  if (it == details_.end()) {
    details_[key] = holds ? 1.0 : 0.0;
  } else if (!holds) {
    it->second = 0.0;
  }
  conditions_ok_ = conditions_ok_ && holds;
}

VerificationReport ReportBuilder::finish() const {
  VerificationReport r;
  r.name = name_;
  r.worst_margin = observed_ ? worst_ : 0.0;
  r.passed = margin_ok() && conditions_ok_ && !std::isnan(r.worst_margin);
  r.witness = witness_;
  r.details = details_;
  r.details["scale"] = scale_;
  r.details["threshold"] = threshold();
  return r;
}

}  // namespace snl

#pragma once

#include <limits>
#include <map>
#include <string>

#include <nlohmann/json.hpp>

#include "snl/tolerance.hpp"

namespace snl {

using Json = nlohmann::ordered_json;

// Outcome of one inequality check.
//
// worst_margin is the minimum over all checkpoints of (RHS - LHS). The margin
// passes when worst_margin >= -(abs_tol + rel_tol * scale), with `scale`
// recorded under details["scale"]. Checks that also assert logical conditions
// (rank equalities, biconditionals) record each one as details["cond:<name>"]
// = 0/1, and `passed` additionally requires all of them.
struct VerificationReport {
  std::string name;
  bool passed = false;
  double worst_margin = 0.0;
  Json witness;  // null when there is nothing to show
  std::map<std::string, double> details;
};

[[nodiscard]] Json to_json(const VerificationReport& report);
[[nodiscard]] VerificationReport report_from_json(const Json& j);

// Accumulates margins and conditions for a VerificationReport.
class ReportBuilder {
 public:
  ReportBuilder(std::string name, ToleranceConfig tol);

  // Records one checkpoint; returns true if it is the new worst.
  bool observe(double margin);
  void require(const std::string& condition, bool holds);
  void set_scale(double scale) { scale_ = scale; }
  void detail(const std::string& key, double value) { details_[key] = value; }
  void witness(Json w) { witness_ = std::move(w); }

  [[nodiscard]] double worst() const { return worst_; }
  [[nodiscard]] double threshold() const { return tol_.threshold(scale_); }
  [[nodiscard]] bool margin_ok() const { return !observed_ || worst_ >= -threshold(); }

  [[nodiscard]] VerificationReport finish() const;

 private:
  std::string name_;
  ToleranceConfig tol_;
  double scale_ = 0.0;
  double worst_ = std::numeric_limits<double>::infinity();
  bool observed_ = false;
  bool conditions_ok_ = true;
  Json witness_;
  std::map<std::string, double> details_;
};

}  // namespace snl

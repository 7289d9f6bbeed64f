#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "snl/algebra.hpp"
#include "snl/inequalities.hpp"
#include "snl/report.hpp"

namespace snl {

struct CampaignConfig {
  std::uint64_t seed = 20240601;
  int trials = 500;
  // Each entry is one algebra; the default sweeps the factors M_2 ... M_6.
  std::vector<TracialAlgebra> algebras = default_algebras();
  std::vector<double> p_values{1.1, 1.5, 2.0, 3.0, 10.0};
  ToleranceConfig tolerance;
  std::vector<std::string> checks = default_checks();
  std::string output_path;
  std::string format = "json";
  // 0 picks std::thread::hardware_concurrency()
  int threads = 0;
  // parameters of the find_xy_counterexample check
  int falsify_dim = 2;
  int falsify_seeds = 10000;

  static std::vector<TracialAlgebra> default_algebras();
  static std::vector<std::string> default_checks();
  // Throws PreconditionError on an invalid configuration.
  void validate() const;
};

[[nodiscard]] CampaignConfig campaign_config_from_json(const Json& j);
[[nodiscard]] Json to_json(const CampaignConfig& config);

// Every check the campaign knows, in report order.
[[nodiscard]] const std::vector<std::string>& known_checks();
// True for checks that assert a theorem; a failure of one of these is a bug.
[[nodiscard]] bool is_paper_true(const std::string& check);

struct CheckAggregate {
  std::string name;
  bool paper_true = true;
  long runs = 0;
  long failures = 0;
  long skipped = 0;
  double worst_margin = 0.0;
  Json worst;  // report of the worst run
};

struct CampaignResult {
  CampaignConfig config;
  std::vector<CheckAggregate> checks;
  double wall_seconds = 0.0;

  [[nodiscard]] bool ok() const;
};

[[nodiscard]] CampaignResult run_campaign(const CampaignConfig& config);
// wall_seconds is written last, under "wall_time_s".
[[nodiscard]] Json to_json(const CampaignResult& result);
[[nodiscard]] std::string to_csv(const CampaignResult& result);

struct BatteryEntry {
  VerificationReport report;
  bool paper_true = true;
};

// Every check that applies to the pair (x, y): the general ones always, the
// factor-only ones on single blocks, the positive-operand ones when both are
// positive, and the compression lemma when additionally y is invertible.
[[nodiscard]] std::vector<BatteryEntry> run_battery(const Operator& x, const Operator& y, ConjugatePair pq,
                                                    const ToleranceConfig& tol = {});

// Loads x and y from operator JSON files and runs the battery. The summary
// passes iff every theorem-backed check passes; its witness lists all
// sub-reports.
[[nodiscard]] VerificationReport verify_file(const std::filesystem::path& x_path, const std::filesystem::path& y_path,
                                             double p, const ToleranceConfig& tol = {});

}  // namespace snl

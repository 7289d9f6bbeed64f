// snl: command-line front end for the inequality harness.
//
//   snl verify --config cfg.json [--seed N] [--trials N] [--out r.json]
//   snl verify --x x.json --y y.json --p 3
//   snl falsify --dim 2 --seeds 10000 [--x-out x.json --y-out y.json]
//   snl demo
//
// Exit codes: 0 all theorem-backed checks passed, 1 some failed, 2 usage or
// input error.

#include <cstdio>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "snl/campaign.hpp"
#include "snl/errors.hpp"
#include "snl/serialization.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

struct Common {
  std::optional<std::uint64_t> seed;
  std::optional<int> trials;
  std::optional<double> tol_abs;
  std::optional<double> tol_rel;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "base RNG seed (overrides SNL_SEED and the config)");
  cmd->add_option("--trials", c.trials, "trials per algebra")->check(CLI::PositiveNumber);
  cmd->add_option("--tol-abs", c.tol_abs, "absolute tolerance")->check(CLI::NonNegativeNumber);
  cmd->add_option("--tol-rel", c.tol_rel, "relative tolerance")->check(CLI::NonNegativeNumber);
  cmd->add_option("--out", c.out, "write the report here instead of stdout");
  cmd->add_option("--format", c.format, "report format")->check(CLI::IsMember({"json", "csv"}));
}

std::optional<std::uint64_t> env_seed() {
  const char* s = std::getenv("SNL_SEED");
  if (s == nullptr || *s == '\0') return std::nullopt;
  try {
    std::size_t used = 0;
    const auto v = std::stoull(s, &used, 10);
    if (used != std::string(s).size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw snl::FormatError(std::string("SNL_SEED is not an unsigned integer: ") + s);
  }
}

snl::ToleranceConfig tolerance_from(const Common& c, snl::ToleranceConfig base = {}) {
  if (c.tol_abs) base.abs_tol = *c.tol_abs;
  if (c.tol_rel) base.rel_tol = *c.tol_rel;
  base.validate();
  return base;
}

std::uint64_t seed_from(const Common& c, std::uint64_t config_seed) {
  if (c.seed) return *c.seed;
  if (auto e = env_seed()) return *e;
  return config_seed;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
  } else {
    snl::write_text_file(out, text);
  }
}

std::string report_csv(const snl::VerificationReport& r) {
  std::ostringstream os;
  os << std::setprecision(17) << "key,value\n";
  os << "name," << r.name << "\npassed," << (r.passed ? 1 : 0) << "\nworst_margin," << r.worst_margin << '\n';
  for (const auto& [k, v] : r.details) os << k << ',' << v << '\n';
  return os.str();
}

void print_summary(const snl::CampaignResult& result, std::ostream& os) {
  os << std::left << std::setw(24) << "check" << std::right << std::setw(8) << "runs" << std::setw(10) << "failures"
     << std::setw(9) << "skipped" << std::setw(16) << "worst margin" << '\n';
  for (const auto& c : result.checks) {
    os << std::left << std::setw(24) << c.name << std::right << std::setw(8) << c.runs << std::setw(10) << c.failures
       << std::setw(9) << c.skipped << std::setw(16) << std::setprecision(4) << std::scientific << c.worst_margin
       << std::defaultfloat << (c.paper_true ? "" : "  (search)") << '\n';
  }
  os << "wall time " << std::fixed << std::setprecision(2) << result.wall_seconds << " s" << std::defaultfloat << '\n';
}

int run_config(const std::string& path, const Common& c) {
  auto config = snl::campaign_config_from_json(snl::read_json_file(path));
  config.seed = seed_from(c, config.seed);
  if (c.trials) config.trials = *c.trials;
  config.tolerance = tolerance_from(c, config.tolerance);
  if (!c.out.empty()) config.output_path = c.out;
  config.format = c.format;

  const auto result = snl::run_campaign(config);
  const std::string text = config.format == "csv" ? snl::to_csv(result) : snl::to_json(result).dump(2);
  emit(text, config.output_path);
  print_summary(result, std::cerr);
  return result.ok() ? 0 : kExitFail;
}

int run_pair(const std::string& x, const std::string& y, double p, const Common& c) {
  const auto tol = tolerance_from(c);
  const auto report = snl::verify_file(x, y, p, tol);
  std::cerr << std::left << std::setw(24) << "check" << std::setw(8) << "result" << "margin\n";
  for (const auto& sub : report.witness) {
    std::cerr << std::left << std::setw(24) << sub.at("name").get<std::string>() << std::setw(8)
              << (sub.at("passed").get<bool>() ? "pass" : "FAIL") << std::setprecision(6)
              << sub.at("worst_margin").get<double>() << (sub.at("paper_true").get<bool>() ? "" : "  (not a theorem)")
              << '\n';
  }
  emit(c.format == "csv" ? report_csv(report) : snl::to_json(report).dump(2), c.out);
  return report.passed ? 0 : kExitFail;
}

int run_falsify(int dim, int seeds, const Common& c, const std::string& x_out, const std::string& y_out) {
  const auto tol = tolerance_from(c);
  const auto seed = seed_from(c, 0);
  const auto report = snl::find_xy_counterexample(dim, seeds, seed, tol);
  if (report.passed) {
    std::cerr << "witness found after " << report.details.at("trials_run") << " trials at t = "
              << report.details.at("violation_t") << '\n';
    if (!x_out.empty()) snl::save_operator(x_out, snl::operator_from_json(report.witness.at("x")));
    if (!y_out.empty()) snl::save_operator(y_out, snl::operator_from_json(report.witness.at("y")));
  } else {
    std::cerr << "no witness in " << seeds << " trials\n";
  }
  emit(c.format == "csv" ? report_csv(report) : snl::to_json(report).dump(2), c.out);
  return report.passed ? 0 : kExitFail;
}

int run_demo(const Common& c) {
  snl::CampaignConfig config;
  config.seed = seed_from(c, config.seed);
  config.trials = c.trials.value_or(20);
  config.tolerance = tolerance_from(c);
  config.falsify_seeds = 2000;
  config.checks = snl::known_checks();
  const auto result = snl::run_campaign(config);
  print_summary(result, std::cout);
  if (!c.out.empty()) {
    snl::write_text_file(c.out, c.format == "csv" ? snl::to_csv(result) : snl::to_json(result).dump(2));
  }
  return result.ok() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Randomized verification of singular value and trace inequalities"};
  app.require_subcommand(1);

  Common common;

  auto* verify = app.add_subcommand("verify", "run a campaign config, or check one (x, y) pair");
  std::string config_path, x_path, y_path;
  double p = 0.0;
  auto* cfg_opt = verify->add_option("--config", config_path, "campaign config JSON")->check(CLI::ExistingFile);
  auto* x_opt = verify->add_option("--x", x_path, "operator JSON for x")->check(CLI::ExistingFile);
  auto* y_opt = verify->add_option("--y", y_path, "operator JSON for y")->check(CLI::ExistingFile);
  auto* p_opt = verify->add_option("--p", p, "Young exponent p > 1");
  x_opt->needs(y_opt, p_opt)->excludes(cfg_opt);
  y_opt->needs(x_opt);
  p_opt->needs(x_opt);
  add_common(verify, common);

  auto* falsify = app.add_subcommand("falsify", "search for x, y violating the unstarred Young form");
  int dim = 2, seeds = 10000;
  std::string x_out, y_out;
  falsify->add_option("--dim", dim, "matrix size")->check(CLI::Range(2, 16));
  falsify->add_option("--seeds", seeds, "number of random trials")->check(CLI::PositiveNumber);
  falsify->add_option("--x-out", x_out, "save the witness x as operator JSON");
  falsify->add_option("--y-out", y_out, "save the witness y as operator JSON");
  add_common(falsify, common);

  auto* demo = app.add_subcommand("demo", "small campaign over every check");
  add_common(demo, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (verify->parsed()) {
      if (!config_path.empty()) return run_config(config_path, common);
      if (!x_path.empty()) return run_pair(x_path, y_path, p, common);
      std::cerr << "verify needs --config or --x/--y/--p\n";
      return kExitError;
    }
    if (falsify->parsed()) return run_falsify(dim, seeds, common, x_out, y_out);
    if (demo->parsed()) return run_demo(common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

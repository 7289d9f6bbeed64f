#include "snl/campaign.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <map>
#include <sstream>
#include <thread>

#include "snl/errors.hpp"
#include "snl/majorization.hpp"
#include "snl/random.hpp"
#include "snl/serialization.hpp"
#include "snl/snumbers.hpp"
#include "snl/spectral.hpp"

namespace snl {

namespace {

const std::vector<std::string> kChecks{
    "young_sv",       "young_trace",      "equality_trace",      "equality_sv",         "compression",
    "agm",            "submajorization",  "young_preorder",      "correction",          "log_majorization",
    "fenchel_young",  "polar_identity",   "pass_to_positives",   "trace_integral",      "projection_snumbers",
    "functional_calculus", "mu_lipschitz", "trace_commutation",  "find_xy_counterexample",
};

const std::vector<std::string> kPerExponent{
    "young_sv", "young_trace", "equality_trace", "equality_sv", "compression", "young_preorder", "correction",
    "fenchel_young",
};

const std::vector<std::string> kFactorOnly{"young_preorder", "correction"};

constexpr double kPerturbation = 1e-2;

bool contains(const std::vector<std::string>& v, const std::string& s) {
  return std::find(v.begin(), v.end(), s) != v.end();
}

}  // namespace

std::vector<TracialAlgebra> CampaignConfig::default_algebras() {
  std::vector<TracialAlgebra> out;
  for (int n = 2; n <= 6; ++n) out.push_back(TracialAlgebra::factor(n));
  return out;
}

std::vector<std::string> CampaignConfig::default_checks() {
  std::vector<std::string> out;
  for (const auto& c : kChecks) {
    if (is_paper_true(c)) out.push_back(c);
  }
  return out;
}

void CampaignConfig::validate() const {
  if (trials < 1) throw PreconditionError("trials must be >= 1");
  if (algebras.empty()) throw PreconditionError("at least one algebra is required");
  if (p_values.empty()) throw PreconditionError("at least one exponent p is required");
  for (double p : p_values) {
    if (!(p > 1.0) || !std::isfinite(p)) throw PreconditionError("every p must be finite and > 1");
  }
  tolerance.validate();
  if (checks.empty()) throw PreconditionError("no checks selected");
  for (const auto& c : checks) {
    if (!contains(kChecks, c)) throw PreconditionError("unknown check: " + c);
  }
  if (format != "json" && format != "csv") throw PreconditionError("format must be json or csv");
  if (threads < 0) throw PreconditionError("threads must be >= 0");
  if (falsify_dim < 2 || falsify_seeds < 1) throw PreconditionError("falsify needs dim >= 2 and seeds >= 1");
}

const std::vector<std::string>& known_checks() { return kChecks; }

bool is_paper_true(const std::string& check) { return check != "find_xy_counterexample"; }

CampaignConfig campaign_config_from_json(const Json& j) {
  try {
    CampaignConfig c;
    if (!j.is_object()) throw FormatError("campaign config must be a JSON object");
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("trials")) c.trials = j.at("trials").get<int>();
    if (j.contains("algebras")) {
      c.algebras.clear();
      for (const auto& ja : j.at("algebras")) c.algebras.push_back(algebra_from_json(ja));
    }
    if (j.contains("p_values")) c.p_values = j.at("p_values").get<std::vector<double>>();
    if (j.contains("tolerance")) {
      const auto& t = j.at("tolerance");
      if (t.contains("abs_tol")) c.tolerance.abs_tol = t.at("abs_tol").get<double>();
      if (t.contains("rel_tol")) c.tolerance.rel_tol = t.at("rel_tol").get<double>();
    }
    if (j.contains("checks")) c.checks = j.at("checks").get<std::vector<std::string>>();
    if (j.contains("output_path")) c.output_path = j.at("output_path").get<std::string>();
    if (j.contains("format")) c.format = j.at("format").get<std::string>();
    if (j.contains("threads")) c.threads = j.at("threads").get<int>();
    if (j.contains("falsify")) {
      const auto& f = j.at("falsify");
      if (f.contains("dim")) c.falsify_dim = f.at("dim").get<int>();
      if (f.contains("seeds")) c.falsify_seeds = f.at("seeds").get<int>();
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed campaign config: ") + e.what());
  }
}

Json to_json(const CampaignConfig& c) {
  Json j;
  j["seed"] = c.seed;
  j["trials"] = c.trials;
  Json algebras = Json::array();
  for (const auto& a : c.algebras) algebras.push_back(to_json(a));
  j["algebras"] = std::move(algebras);
  j["p_values"] = c.p_values;
  j["tolerance"] = Json{{"abs_tol", c.tolerance.abs_tol}, {"rel_tol", c.tolerance.rel_tol}};
  j["checks"] = c.checks;
  j["output_path"] = c.output_path;
  j["format"] = c.format;
  j["falsify"] = Json{{"dim", c.falsify_dim}, {"seeds", c.falsify_seeds}};
  return j;
}

bool CampaignResult::ok() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckAggregate& c) { return !c.paper_true || c.failures == 0; });
}

namespace {

struct Tally {
  long runs = 0;
  long failures = 0;
  long skipped = 0;
  bool has_worst = false;
  double worst_margin = 0.0;
  Json worst;

  void add(const VerificationReport& r) {
    ++runs;
    if (!r.passed) ++failures;
    // failed runs outrank passing ones; otherwise the smaller margin wins
    const bool worse = !has_worst || (!r.passed && worst.at("passed").get<bool>()) ||
                       (r.passed == worst.at("passed").get<bool>() && r.worst_margin < worst_margin);
    if (worse) {
      has_worst = true;
      worst_margin = r.worst_margin;
      worst = to_json(r);
    }
  }

  void merge(const Tally& o) {
    runs += o.runs;
    failures += o.failures;
    skipped += o.skipped;
    if (!o.has_worst) return;
    const bool worse = !has_worst || (!o.worst.at("passed").get<bool>() && worst.at("passed").get<bool>()) ||
                       (o.worst.at("passed") == worst.at("passed") && o.worst_margin < worst_margin);
    if (worse) {
      has_worst = true;
      worst_margin = o.worst_margin;
      worst = o.worst;
    }
  }
};

class TrialRunner {
 public:
  TrialRunner(const CampaignConfig& config, std::size_t algebra_index, int trial)
      : config_(config), algebra_(config.algebras[algebra_index]), algebra_index_(algebra_index), trial_(trial) {}

  void run(const std::string& check, Tally& tally) const {
    const bool per_exponent = contains(kPerExponent, check);
    if (contains(kFactorOnly, check) && !algebra_.is_factor()) {
      tally.skipped += per_exponent ? static_cast<long>(config_.p_values.size()) : 1;
      return;
    }
    if (per_exponent) {
      for (std::size_t pi = 0; pi < config_.p_values.size(); ++pi) {
        run_one(check, key(pi), ConjugatePair::from_p(config_.p_values[pi]), tally);
      }
    } else {
      run_one(check, key(0), ConjugatePair{2.0, 2.0}, tally);
    }
  }

 private:
  std::uint64_t key(std::size_t pi) const {
    const auto trials = static_cast<std::uint64_t>(config_.trials);
    const auto np = static_cast<std::uint64_t>(config_.p_values.size());
    return (static_cast<std::uint64_t>(algebra_index_) * trials + static_cast<std::uint64_t>(trial_)) * np + pi;
  }

  Operator gen(std::uint64_t k, std::uint64_t slot, OperatorKind kind) const {
    return gen_operator(config_.seed, k, slot, algebra_, kind);
  }

  void run_one(const std::string& check, std::uint64_t k, ConjugatePair pq, Tally& tally) const {
    const auto& tol = config_.tolerance;
    const auto general = [&](std::uint64_t slot) { return gen(k, slot, OperatorKind::general); };
    const auto positive = [&](std::uint64_t slot) { return gen(k, slot, OperatorKind::positive); };

    if (check == "young_sv") {
      tally.add(check_young_sv(general(0), general(1), pq, tol));
    } else if (check == "young_trace") {
      tally.add(check_young_trace_all(general(0), general(1), pq, tol));
    } else if (check == "equality_trace") {
      const Operator a = positive(0);
      Operator b = power_pos(a, pq.p / pq.q, tol);
      if (trial_ % 2 == 1) b = b + kPerturbation * Operator::identity(algebra_);
      tally.add(check_equality_trace(a, b, pq, tol));
    } else if (check == "equality_sv") {
      const Operator x = general(0);
      const Operator y = trial_ % 2 == 0 ? gen(k, 1, OperatorKind::unitary) * abs_power(x, pq.p / pq.q, tol)
                                         : general(1);
      tally.add(check_equality_sv(x, y, pq, tol));
    } else if (check == "compression") {
      const Operator a = gen(k, 0, OperatorKind::invertible_positive);
      const Operator b = gen(k, 1, OperatorKind::invertible_positive);
      // p > 2 goes through the symmetric case with the roles of a and b swapped
      tally.add(pq.p <= 2.0 ? check_compression_sweep(a, b, pq, tol)
                            : check_compression_sweep(b, a, pq.swapped(), tol));
    } else if (check == "agm") {
      tally.add(check_agm(positive(0), positive(1), tol));
    } else if (check == "submajorization") {
      tally.add(check_submajorization(general(0), general(1), tol));
    } else if (check == "young_preorder") {
      tally.add(check_young_preorder(general(0), general(1), pq, tol));
    } else if (check == "correction") {
      tally.add(doubly_stochastic_correction(general(0), general(1), pq, tol).report);
    } else if (check == "log_majorization") {
      tally.add(check_log_majorization(positive(0), positive(1), tol));
    } else if (check == "fenchel_young") {
      tally.add(check_fenchel_young(positive(0), positive(1), ConvexFunction::power(pq.p), tol));
    } else if (check == "polar_identity") {
      tally.add(check_polar_identity(general(0), general(1), tol));
    } else if (check == "pass_to_positives") {
      tally.add(check_pass_to_positives(general(0), general(1), tol));
    } else if (check == "trace_integral") {
      tally.add(check_trace_integral(general(0)));
    } else if (check == "projection_snumbers") {
      tally.add(check_projection_snumbers(gen(k, 0, OperatorKind::projection), 1e-12, tol));
    } else if (check == "functional_calculus") {
      const Operator h = positive(0);
      for (double r : {0.5, 2.0, 3.0}) tally.add(check_functional_calculus(h, r, 1e-9, tol));
    } else if (check == "mu_lipschitz") {
      tally.add(mu_distance_bound(general(0), general(1), tol));
    } else if (check == "trace_commutation") {
      tally.add(trace_commutation_check(general(0), 3, tol));
    } else {
      throw PreconditionError("check is not run per trial: " + check);
    }
  }

  const CampaignConfig& config_;
  const TracialAlgebra& algebra_;
  std::size_t algebra_index_;
  int trial_;
};

}  // namespace

CampaignResult run_campaign(const CampaignConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();

  std::vector<std::string> trial_checks;
  for (const auto& c : config.checks) {
    if (c != "find_xy_counterexample") trial_checks.push_back(c);
  }

  const std::size_t tasks = config.algebras.size() * static_cast<std::size_t>(config.trials);
  std::vector<std::vector<Tally>> per_task(tasks, std::vector<Tally>(trial_checks.size()));
  std::vector<std::string> errors(tasks);

  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t task = next++; task < tasks; task = next++) {
      const std::size_t ai = task / static_cast<std::size_t>(config.trials);
      const int trial = static_cast<int>(task % static_cast<std::size_t>(config.trials));
      const TrialRunner runner(config, ai, trial);
      for (std::size_t ci = 0; ci < trial_checks.size(); ++ci) {
        try {
          runner.run(trial_checks[ci], per_task[task][ci]);
        } catch (const std::exception& e) {
          // a thrown precondition inside a theorem check counts as a failure
          VerificationReport r;
          r.name = trial_checks[ci];
          r.passed = false;
          r.worst_margin = 0.0;
          r.witness = Json{{"error", e.what()}, {"algebra", ai}, {"trial", trial}};
          per_task[task][ci].add(r);
        }
      }
    }
  };

  unsigned n_threads = config.threads > 0 ? static_cast<unsigned>(config.threads)
                                          : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(std::max<std::size_t>(tasks, 1)));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  CampaignResult result;
  result.config = config;
  for (const auto& name : known_checks()) {
    if (!contains(config.checks, name)) continue;
    CheckAggregate agg;
    agg.name = name;
    agg.paper_true = is_paper_true(name);
    if (name == "find_xy_counterexample") {
      const auto r = find_xy_counterexample(config.falsify_dim, config.falsify_seeds, config.seed, config.tolerance);
      agg.runs = 1;
      agg.failures = r.passed ? 0 : 1;
      agg.worst_margin = r.worst_margin;
      agg.worst = to_json(r);
    } else {
      const auto ci = static_cast<std::size_t>(
          std::find(trial_checks.begin(), trial_checks.end(), name) - trial_checks.begin());
      Tally total;
      for (const auto& task : per_task) total.merge(task[ci]);
      agg.runs = total.runs;
      agg.failures = total.failures;
      agg.skipped = total.skipped;
      agg.worst_margin = total.worst_margin;
      agg.worst = total.worst;
    }
    result.checks.push_back(std::move(agg));
  }
  result.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

Json to_json(const CampaignResult& result) {
  Json j;
  j["config"] = to_json(result.config);
  j["ok"] = result.ok();
  Json checks = Json::array();
  for (const auto& c : result.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["paper_true"] = c.paper_true;
    jc["runs"] = c.runs;
    jc["failures"] = c.failures;
    jc["skipped"] = c.skipped;
    jc["worst_margin"] = c.worst_margin;
    jc["worst"] = c.worst;
    checks.push_back(std::move(jc));
  }
  j["checks"] = std::move(checks);
  j["wall_time_s"] = result.wall_seconds;
  return j;
}

std::string to_csv(const CampaignResult& result) {
  std::ostringstream os;
  os << "check,paper_true,runs,failures,skipped,worst_margin,worst_passed\n";
  os << std::setprecision(17);
  for (const auto& c : result.checks) {
    const bool worst_passed = c.worst.is_object() && c.worst.value("passed", true);
    os << c.name << ',' << (c.paper_true ? 1 : 0) << ',' << c.runs << ',' << c.failures << ',' << c.skipped << ','
       << c.worst_margin << ',' << (worst_passed ? 1 : 0) << '\n';
  }
  return os.str();
}

std::vector<BatteryEntry> run_battery(const Operator& x, const Operator& y, ConjugatePair pq,
                                      const ToleranceConfig& tol) {
  require_same_algebra(x, y);
  std::vector<BatteryEntry> out;
  out.push_back({check_young_sv(x, y, pq, tol), true});
  out.push_back({check_young_sv_unstarred(x, y, pq, tol), false});
  out.push_back({check_young_trace_all(x, y, pq, tol), true});
  out.push_back({check_equality_sv(x, y, pq, tol), true});
  out.push_back({check_submajorization(x, y, tol), true});
  out.push_back({check_polar_identity(x, y, tol), true});
  out.push_back({check_pass_to_positives(x, y, tol), true});
  out.push_back({mu_distance_bound(x, y, tol), true});
  out.push_back({trace_commutation_check(x, 2, tol), true});
  out.push_back({check_trace_integral(x), true});
  if (x.algebra().is_factor()) {
    out.push_back({check_young_preorder(x, y, pq, tol), true});
    out.push_back({doubly_stochastic_correction(x, y, pq, tol).report, true});
  }
  if (is_positive(x, tol) && is_positive(y, tol)) {
    out.push_back({check_equality_trace(x, y, pq, tol), true});
    out.push_back({check_agm(x, y, tol), true});
    out.push_back({check_log_majorization(x, y, tol), true});
    out.push_back({check_fenchel_young(x, y, ConvexFunction::power(pq.p), tol), true});
    const auto spec_y = eig_hermitian(y, tol);
    if (spec_y.min_value() > 1e-8 * spec_y.spectral_radius()) {
      out.push_back({pq.p <= 2.0 ? check_compression_sweep(x, y, pq, tol)
                                 : check_compression_sweep(y, x, pq.swapped(), tol),
                     true});
    }
  }
  return out;
}

VerificationReport verify_file(const std::filesystem::path& x_path, const std::filesystem::path& y_path, double p,
                               const ToleranceConfig& tol) {
  const Operator x = load_operator(x_path);
  const Operator y = load_operator(y_path);
  const auto pq = ConjugatePair::from_p(p);
  const auto battery = run_battery(x, y, pq, tol);

  VerificationReport summary;
  summary.name = "verify_file";
  summary.passed = true;
  double worst = kInfinity;
  Json subs = Json::array();
  for (const auto& entry : battery) {
    const auto& r = entry.report;
    Json jr = to_json(r);
    jr["paper_true"] = entry.paper_true;
    subs.push_back(std::move(jr));
    summary.details[r.name + ":margin"] = r.worst_margin;
    summary.details[r.name + ":passed"] = r.passed ? 1.0 : 0.0;
    if (entry.paper_true) {
      summary.passed = summary.passed && r.passed;
      worst = std::min(worst, r.worst_margin);
    }
  }
  summary.worst_margin = std::isfinite(worst) ? worst : 0.0;
  summary.witness = std::move(subs);
  summary.details["p"] = p;
  return summary;
}

}  // namespace snl

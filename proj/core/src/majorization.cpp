#include "snl/majorization.hpp"

#include <algorithm>
#include <cmath>

#include "snl/errors.hpp"
#include "snl/snumbers.hpp"
#include "snl/spectral.hpp"

namespace snl {

double majorization_margin(const StepFunction& f, const StepFunction& g) {
  double worst = kInfinity;
  for (double s : merged_breakpoints(f, g)) worst = std::min(worst, g.integrate(s) - f.integrate(s));
  worst = std::min(worst, g.integrate() - f.integrate());
  return worst;
}

bool weak_majorize(const StepFunction& f, const StepFunction& g, const ToleranceConfig& tol) {
  return majorization_margin(f, g) >= -tol.threshold(std::max(f.integrate(), g.integrate()));
}

VerificationReport check_submajorization(const Operator& x, const Operator& y, const ToleranceConfig& tol) {
  require_same_algebra(x, y);
  const auto lhs = mu(x * y);
  const auto rhs = mu(x) * mu(y);
  ReportBuilder rb("submajorization", tol);
  rb.set_scale(rhs.integrate());
  rb.observe(majorization_margin(lhs, rhs));
  rb.detail("lhs_total", lhs.integrate());
  rb.detail("rhs_total", rhs.integrate());
  return rb.finish();
}

namespace {

void require_factor(const Operator& x, const char* what) {
  if (!x.algebra().is_factor()) {
    throw PreconditionError(std::string(what) + " is only defined on a single factor");
  }
}

int count_above(const std::vector<double>& values, double cut) {
  return static_cast<int>(std::count_if(values.begin(), values.end(), [cut](double v) { return v > cut; }));
}

// Worst value of rank p^b(s, inf) - rank p^a(s, inf) over all s >= 0.
int preorder_slack(const std::vector<double>& a, const std::vector<double>& b, double tie) {
  std::vector<double> all(a);
  all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  // cluster values that are numerically equal; each cluster is represented
  // by its largest member
  std::vector<double> clusters;
  for (double v : all) {
    if (!clusters.empty() && v - clusters.back() <= 2.0 * tie) {
      clusters.back() = v;
    } else {
      clusters.push_back(v);
    }
  }
  std::vector<double> cuts{0.0};
  for (std::size_t i = 0; i < clusters.size(); ++i) {
    if (clusters[i] >= 0.0) cuts.push_back(clusters[i]);
    const double below = i == 0 ? 0.5 * clusters[i] : 0.5 * (clusters[i - 1] + clusters[i]);
    if (below >= 0.0) cuts.push_back(below);
  }
  int worst = a.size() + b.size();
  for (double s : cuts) {
    worst = std::min(worst, count_above(b, s + tie) - count_above(a, s + tie));
  }
  return worst;
}

}  // namespace

bool spectral_preorder(const Operator& a, const Operator& b, const ToleranceConfig& tol) {
  require_same_algebra(a, b);
  require_factor(a, "spectral_preorder");
  if (!is_positive(a, tol) || !is_positive(b, tol)) throw PreconditionError("spectral_preorder needs positive operands");
  const auto ea = eig_hermitian(a, tol);
  const auto eb = eig_hermitian(b, tol);
  const double tie = kEigTieTol * std::max(ea.spectral_radius(), eb.spectral_radius());
  return preorder_slack(ea.eigenvalues(), eb.eigenvalues(), tie) >= 0;
}

VerificationReport check_young_preorder(const Operator& x, const Operator& y, ConjugatePair pq,
                                        const ToleranceConfig& tol) {
  require_same_algebra(x, y);
  require_factor(x, "check_young_preorder");
  const Operator k = abs_op(x * adjoint(y));
  const Operator h = young_rhs(x, y, pq, tol);
  const auto ek = eig_hermitian(k, tol);
  const auto eh = eig_hermitian(h, tol);
  const double tie = kEigTieTol * std::max(ek.spectral_radius(), eh.spectral_radius());
  const int slack = preorder_slack(ek.eigenvalues(), eh.eigenvalues(), tie);

  ReportBuilder rb("young_preorder", tol);
  rb.set_scale(eh.spectral_radius());
  rb.require("rank_domination", slack >= 0);
  rb.detail("rank_slack", slack);
  rb.detail("p", pq.p);
  return rb.finish();
}

Correction doubly_stochastic_correction(const Operator& x, const Operator& y, ConjugatePair pq,
                                        const ToleranceConfig& tol) {
  require_same_algebra(x, y);
  require_factor(x, "doubly_stochastic_correction");
  const Operator k = abs_op(x * adjoint(y));
  const Operator h = young_rhs(x, y, pq, tol);
  const auto ek = eig_hermitian(k, tol);
  const auto eh = eig_hermitian(h, tol);

  // columns of both eigenvector matrices are in descending eigenvalue order
  const Matrix u = ek.vectors(0) * eh.vectors(0).adjoint();
  const Operator unitary(x.algebra(), {u});
  const Operator id = Operator::identity(x.algebra());
  const Operator moved = unitary * h * adjoint(unitary);
  const Operator difference = hermitian_part(moved - k);

  const double unitarity = norm(adjoint(unitary) * unitary - id);
  const double min_eig = eig_hermitian(difference, tol).min_value();
  const double trace_shift = std::abs(trace(moved).real() - trace(h).real());
  const double h_norm = eh.spectral_radius();

  ReportBuilder rb("correction", tol);
  rb.set_scale(h_norm);
  rb.observe(min_eig);
  rb.require("unitary", unitarity <= 1e-9);
  rb.require("trace_preserved", trace_shift <= tol.threshold(std::abs(trace(h).real())));
  rb.detail("unitarity_defect", unitarity);
  rb.detail("min_eig_difference", min_eig);
  rb.detail("trace_shift", trace_shift);
  rb.detail("p", pq.p);
  return {unitary, rb.finish()};
}

VerificationReport check_log_majorization(const Operator& a, const Operator& b, const ToleranceConfig& tol) {
  require_same_algebra(a, b);
  if (!is_positive(a, tol) || !is_positive(b, tol)) {
    throw PreconditionError("check_log_majorization needs positive operands");
  }
  const auto mu_ab = mu(a * b);
  const auto mu_a = mu(a);
  const auto mu_b = mu(b);
  const auto mu_root_a = mu(power_pos(a, 0.5, tol));
  const auto mu_root_b = mu(power_pos(b, 0.5, tol));
  const double total = a.algebra().total_trace();

  std::vector<double> bp = merged_breakpoints(mu_ab, mu_a);
  const auto more = merged_breakpoints(mu_b, StepFunction::indicator(total));
  bp.insert(bp.end(), more.begin(), more.end());
  bp.push_back(total);
  std::sort(bp.begin(), bp.end());
  bp.erase(std::unique(bp.begin(), bp.end()), bp.end());
  std::vector<double> points;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    const double s = 0.5 * (bp[i] + bp[i + 1]);
    if (s > 0.0 && s < total) points.push_back(s);
  }
  points.push_back(total * (1.0 - 1e-12));

  double scale = 0.0;
  std::vector<double> rhs_values;
  for (double s : points) {
    rhs_values.push_back(log_integral_exp(mu_a, s) * log_integral_exp(mu_b, s));
    scale = std::max(scale, rhs_values.back());
  }

  ReportBuilder rb("log_majorization", tol);
  rb.set_scale(scale);
  double worst_root_defect = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double s = points[i];
    if (rb.observe(rhs_values[i] - log_integral_exp(mu_ab, s))) rb.detail("worst_s", s);
    const double da = std::abs(log_integral_exp(mu_root_a, s) - std::sqrt(log_integral_exp(mu_a, s)));
    const double db = std::abs(log_integral_exp(mu_root_b, s) - std::sqrt(log_integral_exp(mu_b, s)));
    worst_root_defect = std::max({worst_root_defect, da, db});
  }
  rb.require("root_identity", worst_root_defect <= tol.threshold(std::max(1.0, std::sqrt(scale))));
  rb.detail("root_identity_defect", worst_root_defect);
  rb.detail("points", static_cast<double>(points.size()));
  return rb.finish();
}

}  // namespace snl

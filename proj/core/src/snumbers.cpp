#include "snl/snumbers.hpp"

#include <cmath>
#include <sstream>

#include "snl/errors.hpp"
#include "snl/spectral.hpp"

namespace snl {

StepFunction mu(const Operator& z) {
  const auto sv = singular_values(z);
  double top = 0.0;
  std::vector<std::pair<double, double>> atoms;
  for (std::size_t k = 0; k < sv.size(); ++k) {
    const double w = z.algebra().block(k).weight;
    for (Eigen::Index i = 0; i < sv[k].size(); ++i) {
      atoms.emplace_back(sv[k](i), w);
      top = std::max(top, sv[k](i));
    }
  }
  return StepFunction::from_atoms(std::move(atoms), kEigTieTol * top);
}

double log_integral_exp(const StepFunction& f, double s) {
  if (!(s > 0.0)) throw PreconditionError("log_integral_exp needs s > 0");
  if (s > f.support()) return 0.0;
  double acc = 0.0;
  const auto& bp = f.breakpoints();
  const auto& v = f.values();
  for (std::size_t i = 0; i < v.size() && bp[i] < s; ++i) {
    acc += std::log(v[i]) * (std::min(s, bp[i + 1]) - bp[i]);
  }
  return std::exp(acc);
}

double lambda_fn(const Operator& h, double s, const ToleranceConfig& tol) {
  const double total = h.algebra().total_trace();
  if (!(s > 0.0) || !(s < total)) {
    std::ostringstream os;
    os << "lambda_fn: s = " << s << " outside (0, " << total << ")";
    throw PreconditionError(os.str());
  }
  if (!is_positive(h, tol)) throw PreconditionError("lambda_fn needs a positive operator");
  return log_integral_exp(mu(h), s);
}

double sup_distance(const StepFunction& f, const StepFunction& g) {
  double worst = 0.0;
  for (double t : checkpoints(f, g)) worst = std::max(worst, std::abs(f.eval(t) - g.eval(t)));
  return worst;
}

VerificationReport mu_distance_bound(const Operator& z1, const Operator& z2, const ToleranceConfig& tol) {
  require_same_algebra(z1, z2);
  const auto m1 = mu(z1);
  const auto m2 = mu(z2);
  const double bound = norm(z1 - z2);

  ReportBuilder rb("mu_lipschitz", tol);
  rb.set_scale(std::max(m1.sup(), m2.sup()));
  double sup = 0.0;
  for (double t : checkpoints(m1, m2)) {
    const double gap = std::abs(m1.eval(t) - m2.eval(t));
    sup = std::max(sup, gap);
    if (rb.observe(bound - gap)) rb.detail("worst_t", t);
  }
  rb.detail("sup_difference", sup);
  rb.detail("norm_difference", bound);
  return rb.finish();
}

}  // namespace snl

namespace snl {

VerificationReport check_trace_integral(const Operator& z, double rel) {
  const double integral = mu(z).integrate();
  const double tr = trace(abs_op(z)).real();
  const double diff = std::abs(integral - tr);
  ReportBuilder rb("trace_integral", ToleranceConfig{0.0, rel});
  rb.set_scale(std::abs(tr));
  rb.observe(-diff);
  rb.detail("integral", integral);
  rb.detail("trace_abs", tr);
  return rb.finish();
}

VerificationReport check_projection_snumbers(const Operator& f, double eps, const ToleranceConfig& tol) {
  if (!is_projection(f, tol)) throw PreconditionError("check_projection_snumbers needs a projection");
  const auto m = mu(f);
  const double tf = trace(f).real();

  ReportBuilder rb("projection_snumbers", ToleranceConfig{eps, 0.0});
  rb.detail("trace_f", tf);
  rb.detail("steps", static_cast<double>(m.steps()));
  if (tf < 0.5 * eps) {
    rb.require("zero_projection_has_zero_mu", m.is_zero());
    return rb.finish();
  }
  rb.require("single_step", m.steps() == 1);
  if (m.steps() == 1) {
    rb.observe(-std::abs(m.values()[0] - 1.0));
    rb.observe(-std::abs(m.support() - tf));
    rb.detail("support", m.support());
    rb.detail("height", m.values()[0]);
  }
  return rb.finish();
}

VerificationReport check_functional_calculus(const Operator& h, double r, double rel, const ToleranceConfig& tol) {
  const auto psi = ScalarFunction::power(r);
  const auto via_step = mu(h).transform(psi);
  const auto via_operator = mu(power_pos(h, r, tol));

  ReportBuilder rb("functional_calculus", ToleranceConfig{0.0, rel});
  rb.set_scale(std::max(via_step.sup(), via_operator.sup()));
  rb.detail("r", r);
  for (double t : checkpoints(via_step, via_operator)) {
    if (rb.observe(-std::abs(via_step.eval(t) - via_operator.eval(t)))) rb.detail("worst_t", t);
  }
  return rb.finish();
}

}  // namespace snl

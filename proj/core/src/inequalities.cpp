#include "snl/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "snl/errors.hpp"
#include "snl/majorization.hpp"
#include "snl/random.hpp"
#include "snl/serialization.hpp"
#include "snl/snumbers.hpp"
#include "snl/spectral.hpp"

namespace snl {

ConjugatePair ConjugatePair::from_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    std::ostringstream os;
    os << "conjugate exponent needs p > 1, got " << p;
    throw PreconditionError(os.str());
  }
  return {p, p / (p - 1.0)};
}

std::string_view to_string(Dagger d) {
  switch (d) {
    case Dagger::plain: return "x";
    case Dagger::star: return "x*";
    case Dagger::abs: return "|x|";
    case Dagger::abs_star: return "|x*|";
  }
  return "?";
}

Operator apply_dagger(const Operator& x, Dagger d) {
  switch (d) {
    case Dagger::plain: return x;
    case Dagger::star: return adjoint(x);
    case Dagger::abs: return abs_op(x);
    case Dagger::abs_star: return abs_op(adjoint(x));
  }
  return x;
}

Operator abs_power(const Operator& x, double r, const ToleranceConfig& tol) {
  return power_pos(abs_op(x), r, tol);
}

Operator young_rhs(const Operator& x, const Operator& y, ConjugatePair pq, const ToleranceConfig& tol) {
  require_same_algebra(x, y);
  return (1.0 / pq.p) * abs_power(x, pq.p, tol) + (1.0 / pq.q) * abs_power(y, pq.q, tol);
}

double trace_abs(const Operator& z) {
  const auto sv = singular_values(z);
  double t = 0.0;
  for (std::size_t k = 0; k < sv.size(); ++k) t += z.algebra().block(k).weight * sv[k].sum();
  return t;
}

namespace {

void require_positive(const Operator& a, const char* what, const ToleranceConfig& tol) {
  if (!is_positive(a, tol)) throw PreconditionError(std::string(what) + ": operand is not positive");
}

Json pair_witness(const Operator& x, const Operator& y, ConjugatePair pq) {
  Json w;
  w["p"] = pq.p;
  w["q"] = pq.q;
  w["x"] = to_json(x);
  w["y"] = to_json(y);
  return w;
}

// Pointwise comparison lhs <= rhs on the merged partition.
VerificationReport compare_pointwise(const std::string& name, const StepFunction& lhs, const StepFunction& rhs,
                                     const ToleranceConfig& tol, const Json& witness_base) {
  ReportBuilder rb(name, tol);
  rb.set_scale(rhs.sup());
  double worst_t = 0.0;
  for (double t : checkpoints(lhs, rhs)) {
    if (rb.observe(rhs.eval(t) - lhs.eval(t))) worst_t = t;
  }
  rb.detail("worst_t", worst_t);
  rb.detail("lhs_sup", lhs.sup());
  rb.detail("rhs_sup", rhs.sup());
  if (!rb.margin_ok()) {
    Json w = witness_base;
    w["t"] = worst_t;
    w["lhs"] = lhs.eval(worst_t);
    w["rhs"] = rhs.eval(worst_t);
    rb.witness(std::move(w));
  }
  return rb.finish();
}

double young_trace_rhs(const Operator& x, const Operator& y, ConjugatePair pq, const ToleranceConfig& tol) {
  return trace(abs_power(x, pq.p, tol)).real() / pq.p + trace(abs_power(y, pq.q, tol)).real() / pq.q;
}

}  // namespace

VerificationReport check_young_sv(const Operator& x, const Operator& y, ConjugatePair pq, const ToleranceConfig& tol) {
  require_same_algebra(x, y);
  auto r = compare_pointwise("young_sv", mu(x * adjoint(y)), mu(young_rhs(x, y, pq, tol)), tol,
                             pair_witness(x, y, pq));
  r.details["p"] = pq.p;
  return r;
}

VerificationReport check_young_sv_unstarred(const Operator& x, const Operator& y, ConjugatePair pq,
                                            const ToleranceConfig& tol) {
  require_same_algebra(x, y);
  auto r = compare_pointwise("young_sv_xy", mu(x * y), mu(young_rhs(x, y, pq, tol)), tol, pair_witness(x, y, pq));
  r.details["p"] = pq.p;
  return r;
}

namespace {

VerificationReport young_trace_report(const Operator& x, const Operator& y, ConjugatePair pq, Dagger dagger_x,
                                      Dagger dagger_y, double lhs, double rhs, double rhs_dagger,
                                      const ToleranceConfig& tol) {
  std::string name = "young_trace[";
  name += to_string(dagger_x);
  name += ",";
  name += to_string(dagger_y);
  name += "]";
  ReportBuilder rb(name, tol);
  rb.set_scale(rhs);
  rb.observe(rhs - lhs);
  rb.require("rhs_dagger_invariant", std::abs(rhs_dagger - rhs) <= tol.threshold(rhs));
  rb.detail("lhs", lhs);
  rb.detail("rhs", rhs);
  rb.detail("rhs_dagger", rhs_dagger);
  rb.detail("p", pq.p);
  if (!rb.margin_ok()) rb.witness(pair_witness(x, y, pq));
  return rb.finish();
}

}  // namespace

VerificationReport check_young_trace(const Operator& x, const Operator& y, ConjugatePair pq, Dagger dagger_x,
                                     Dagger dagger_y, const ToleranceConfig& tol) {
  require_same_algebra(x, y);
  const Operator xd = apply_dagger(x, dagger_x);
  const Operator yd = apply_dagger(y, dagger_y);
  return young_trace_report(x, y, pq, dagger_x, dagger_y, trace_abs(xd * yd), young_trace_rhs(x, y, pq, tol),
                            young_trace_rhs(xd, yd, pq, tol), tol);
}

VerificationReport check_young_trace_all(const Operator& x, const Operator& y, ConjugatePair pq,
                                         const ToleranceConfig& tol) {
  require_same_algebra(x, y);
  // each dagger variant and its half of the right-hand side is computed once
  std::array<Operator, 4> xs{x, x, x, x};
  std::array<Operator, 4> ys{y, y, y, y};
  std::array<double, 4> x_terms{};
  std::array<double, 4> y_terms{};
  for (std::size_t i = 0; i < kAllDaggers.size(); ++i) {
    xs[i] = apply_dagger(x, kAllDaggers[i]);
    ys[i] = apply_dagger(y, kAllDaggers[i]);
    x_terms[i] = trace(abs_power(xs[i], pq.p, tol)).real() / pq.p;
    y_terms[i] = trace(abs_power(ys[i], pq.q, tol)).real() / pq.q;
  }
  const double rhs = x_terms[0] + y_terms[0];

  ReportBuilder rb("young_trace", tol);
  double lo = kInfinity;
  double hi = -kInfinity;
  int failures = 0;
  for (std::size_t i = 0; i < kAllDaggers.size(); ++i) {
    for (std::size_t j = 0; j < kAllDaggers.size(); ++j) {
      const double rhs_dagger = x_terms[i] + y_terms[j];
      const auto r = young_trace_report(x, y, pq, kAllDaggers[i], kAllDaggers[j], trace_abs(xs[i] * ys[j]), rhs,
                                        rhs_dagger, tol);
      rb.observe(r.worst_margin);
      lo = std::min(lo, rhs_dagger);
      hi = std::max(hi, rhs_dagger);
      if (!r.passed) {
        ++failures;
        rb.witness(to_json(r));
      }
    }
  }
  const double spread = rhs > 0.0 ? (hi - lo) / rhs : hi - lo;
  rb.set_scale(rhs);
  rb.require("rhs_spread_small", spread <= 1e-9);
  rb.require("all_variants_pass", failures == 0);
  rb.detail("rhs", rhs);
  rb.detail("rhs_spread", spread);
  rb.detail("p", pq.p);
  return rb.finish();
}

VerificationReport check_equality_trace(const Operator& a, const Operator& b, ConjugatePair pq,
                                        const ToleranceConfig& tol) {
  require_same_algebra(a, b);
  require_positive(a, "check_equality_trace", tol);
  require_positive(b, "check_equality_trace", tol);
  const Operator ap = power_pos(a, pq.p, tol);
  const Operator bq = power_pos(b, pq.q, tol);
  const double lhs = trace_abs(a * b);
  const double rhs = trace(ap).real() / pq.p + trace(bq).real() / pq.q;
  const double gap = rhs - lhs;
  const double dist = norm(bq - ap);
  const double tol_eq = kTraceEqualityRel * (1.0 + rhs);
  const double tol_op = kOperatorEqualityRel * (1.0 + norm(ap));
  const bool trace_equal = gap <= tol_eq;
  const bool operator_equal = dist <= tol_op;

  ReportBuilder rb("equality_trace", tol);
  rb.set_scale(rhs);
  rb.observe(gap);
  rb.require("biconditional", trace_equal == operator_equal);
  rb.detail("gap", gap);
  rb.detail("dist", dist);
  rb.detail("tol_eq", tol_eq);
  rb.detail("tol_op", tol_op);
  rb.detail("trace_equal", trace_equal ? 1.0 : 0.0);
  rb.detail("operator_equal", operator_equal ? 1.0 : 0.0);
  rb.detail("p", pq.p);
  if (trace_equal != operator_equal) rb.witness(pair_witness(a, b, pq));
  return rb.finish();
}

VerificationReport check_equality_sv(const Operator& x, const Operator& y, ConjugatePair pq,
                                     const ToleranceConfig& tol) {
  require_same_algebra(x, y);
  const Operator xp = abs_power(x, pq.p, tol);
  const Operator yq = abs_power(y, pq.q, tol);
  const auto lhs = mu(x * adjoint(y));
  const auto rhs = mu((1.0 / pq.p) * xp + (1.0 / pq.q) * yq);
  const double tol_eq = kTraceEqualityRel * (1.0 + rhs.sup());
  const double tol_op = kOperatorEqualityRel * (1.0 + norm(xp));

  ReportBuilder rb("equality_sv", tol);
  rb.set_scale(rhs.sup());
  double sup_gap = 0.0;
  for (double t : checkpoints(lhs, rhs)) {
    const double d = rhs.eval(t) - lhs.eval(t);
    rb.observe(d);
    sup_gap = std::max(sup_gap, std::abs(d));
  }
  const double dist = norm(yq - xp);
  const bool sv_equal = sup_gap <= tol_eq;
  const bool operator_equal = dist <= tol_op;
  rb.require("biconditional", sv_equal == operator_equal);
  rb.detail("sup_gap", sup_gap);
  rb.detail("dist", dist);
  rb.detail("tol_eq", tol_eq);
  rb.detail("tol_op", tol_op);
  rb.detail("sv_equal", sv_equal ? 1.0 : 0.0);
  rb.detail("operator_equal", operator_equal ? 1.0 : 0.0);
  rb.detail("p", pq.p);
  if (sv_equal != operator_equal) rb.witness(pair_witness(x, y, pq));
  return rb.finish();
}

namespace {

constexpr double kInvertibilityTol = 1e-8;

struct CompressionInputs {
  Operator abs_ab;
  Operator b_inverse;
  Operator rhs;
};

CompressionInputs compression_inputs(const Operator& a, const Operator& b, ConjugatePair pq,
                                     const ToleranceConfig& tol) {
  require_same_algebra(a, b);
  if (!(pq.p > 1.0 && pq.p <= 2.0)) {
    std::ostringstream os;
    os << "check_compression needs p in (1, 2], got " << pq.p;
    throw PreconditionError(os.str());
  }
  require_positive(a, "check_compression", tol);
  require_positive(b, "check_compression", tol);
  const Operator b_inverse = inverse_pos(b, kInvertibilityTol * norm(b), tol);
  return {abs_op(a * b), b_inverse, (1.0 / pq.p) * power_pos(a, pq.p, tol) + (1.0 / pq.q) * power_pos(b, pq.q, tol)};
}

void compression_at(ReportBuilder& rb, const CompressionInputs& in, double s, const ToleranceConfig& tol) {
  const Operator e = spectral_projection(in.abs_ab, s, tol);
  const Operator f = range_projection(in.b_inverse * e);
  const Operator gap = hermitian_part(f * in.rhs * f - s * f);
  const double min_eig = eig_hermitian(gap, tol).min_value();
  if (rb.observe(min_eig)) rb.detail("worst_s", s);
  const bool equivalent = mvn_equivalent(f, e, tol);
  rb.require("mvn_equivalent", equivalent);
  if (!equivalent) rb.detail("non_equivalent_s", s);
}

}  // namespace

VerificationReport check_compression(const Operator& a, const Operator& b, ConjugatePair pq, double s,
                                     const ToleranceConfig& tol) {
  const auto in = compression_inputs(a, b, pq, tol);
  ReportBuilder rb("compression", tol);
  rb.set_scale(norm(in.rhs));
  rb.detail("s", s);
  rb.detail("p", pq.p);
  compression_at(rb, in, s, tol);
  if (!rb.margin_ok()) rb.witness(pair_witness(a, b, pq));
  return rb.finish();
}

VerificationReport check_compression_sweep(const Operator& a, const Operator& b, ConjugatePair pq,
                                           const ToleranceConfig& tol) {
  const auto in = compression_inputs(a, b, pq, tol);
  const auto m = mu(in.abs_ab);
  std::vector<double> cuts{0.0};
  const auto& v = m.values();
  for (std::size_t i = 0; i + 1 < v.size(); ++i) cuts.push_back(0.5 * (v[i] + v[i + 1]));
  if (!v.empty()) {
    cuts.push_back(0.5 * v.back());
    cuts.push_back(v.front());
  }

  ReportBuilder rb("compression", tol);
  rb.set_scale(norm(in.rhs));
  rb.detail("p", pq.p);
  rb.detail("cuts", static_cast<double>(cuts.size()));
  for (double s : cuts) compression_at(rb, in, s, tol);
  if (!rb.margin_ok()) rb.witness(pair_witness(a, b, pq));
  return rb.finish();
}

VerificationReport check_agm(const Operator& a, const Operator& b, const ToleranceConfig& tol) {
  require_same_algebra(a, b);
  require_positive(a, "check_agm", tol);
  require_positive(b, "check_agm", tol);
  const Operator ab = a * b;
  const Operator root = power_pos(hermitian_part(adjoint(ab) * ab), 0.25, tol);  // |ab|^{1/2}
  const auto mu_root = mu(root);
  const auto mu_a = mu(a);
  const auto mu_b = mu(b);
  const auto arithmetic = (mu_a + mu_b).scaled(0.5);
  const auto geometric = (mu_a * mu_b).transform(ScalarFunction::power(0.5));

  const double ta = trace(a).real();
  const double tb = trace(b).real();
  const double t_root = trace(root).real();
  const double gm = std::sqrt(ta * tb);
  const double am = 0.5 * (ta + tb);

  ReportBuilder rb("agm", tol);
  rb.set_scale(am);
  rb.observe(majorization_margin(mu_root, arithmetic));
  rb.observe(gm - t_root);
  rb.observe(am - gm);
  // the integrated chain at every merged breakpoint:
  // int mu_root <= int sqrt(mu_a mu_b) <= sqrt(int mu_a int mu_b) <= (int mu_a + int mu_b) / 2
  std::vector<double> cuts = merged_breakpoints(mu_a, mu_b);
  const auto more = merged_breakpoints(mu_root, geometric);
  cuts.insert(cuts.end(), more.begin(), more.end());
  cuts.push_back(kInfinity);
  for (double s : cuts) {
    const double i_root = mu_root.integrate(s);
    const double i_geo = geometric.integrate(s);
    const double i_a = mu_a.integrate(s);
    const double i_b = mu_b.integrate(s);
    rb.observe(i_geo - i_root);
    rb.observe(std::sqrt(i_a * i_b) - i_geo);
  }
  rb.detail("trace_root_abs_ab", t_root);
  rb.detail("geometric_mean", gm);
  rb.detail("arithmetic_mean", am);
  rb.detail("majorization_margin", majorization_margin(mu_root, arithmetic));
  if (!rb.margin_ok()) rb.witness(pair_witness(a, b, ConjugatePair{2.0, 2.0}));
  return rb.finish();
}

VerificationReport check_fenchel_young(const Operator& a, const Operator& b, const ConvexFunction& f,
                                       const ToleranceConfig& tol) {
  require_same_algebra(a, b);
  require_positive(a, "check_fenchel_young", tol);
  require_positive(b, "check_fenchel_young", tol);
  const auto spec_a = eig_hermitian(a, tol);
  const auto spec_b = eig_hermitian(b, tol);
  const Interval& domain = f.conjugate_domain();
  for (const auto& pair : spec_b.pairs()) {
    const double r = std::max(pair.value, 0.0);
    if (!domain.contains(r)) {
      std::ostringstream os;
      os << "check_fenchel_young: eigenvalue " << r << " of b lies outside the conjugate domain of " << f.name();
      throw PreconditionError(os.str());
    }
  }

  FenchelGrid grid;
  grid.upper = 2.0 * std::max({spec_a.spectral_radius(), spec_b.spectral_radius(), 1e-300});
  const Operator fa = spec_a.assemble([&](double t) { return f(std::max(t, 0.0)); });
  const Operator fb = spec_b.assemble([&](double r) { return fenchel_conjugate(f, std::max(r, 0.0), grid); });
  const double lhs = trace_abs(a * b);
  const double rhs = trace(fa).real() + trace(fb).real();
  const double grid_error = f.has_closed_form_conjugate() ? 0.0 : grid.spacing() * trace(b).real();

  ReportBuilder rb("fenchel_young", tol);
  rb.set_scale(std::abs(rhs));
  rb.observe(rhs + grid_error - lhs);
  rb.detail("lhs", lhs);
  rb.detail("rhs", rhs);
  rb.detail("grid_error", grid_error);
  rb.detail("grid_upper", f.has_closed_form_conjugate() ? 0.0 : grid.upper);
  rb.detail("grid_points", f.has_closed_form_conjugate() ? 0.0 : grid.points);
  return rb.finish();
}

VerificationReport check_polar_identity(const Operator& x, const Operator& y, const ToleranceConfig& tol) {
  require_same_algebra(x, y);
  const auto pol = polar(y);
  const Operator left = abs_op(x * adjoint(y));
  const Operator inner = abs_op(abs_op(x) * pol.modulus);
  const Operator right = pol.partial_isometry * inner * adjoint(pol.partial_isometry);
  const double diff = norm(left - right);
  ReportBuilder rb("polar_identity", tol);
  rb.set_scale(std::max(norm(left), norm(right)));
  rb.observe(-diff);
  rb.detail("difference", diff);
  return rb.finish();
}

VerificationReport check_pass_to_positives(const Operator& x, const Operator& y, const ToleranceConfig& tol) {
  require_same_algebra(x, y);
  return compare_pointwise("pass_to_positives", mu(x * adjoint(y)), mu(abs_op(x) * abs_op(y)), tol, Json());
}

VerificationReport find_xy_counterexample(int dim, int seeds, std::uint64_t base_seed, const ToleranceConfig& tol) {
  if (dim < 2) throw PreconditionError("find_xy_counterexample needs dim >= 2");
  if (seeds < 1) throw PreconditionError("find_xy_counterexample needs seeds >= 1");
  const auto algebra = TracialAlgebra::factor(dim);

  VerificationReport out;
  out.name = "find_xy_counterexample";
  out.details["dim"] = dim;
  out.details["seeds"] = seeds;
  double best = kInfinity;
  for (int trial = 0; trial < seeds; ++trial) {
    const auto t = static_cast<std::uint64_t>(trial);
    const Operator x = gen_operator(base_seed, t, 0, algebra, OperatorKind::general);
    const Operator y = gen_operator(base_seed, t, 1, algebra, OperatorKind::general);
    const auto pq = ConjugatePair::from_p(gen_uniform(base_seed, t, 2, 1.1, 4.0));
    const auto r = check_young_sv_unstarred(x, y, pq, tol);
    best = std::min(best, r.worst_margin);
    // a witness must separate the two forms: |xy| fails, |xy*| holds
    if (!r.passed && check_young_sv(x, y, pq, tol).passed) {
      out.passed = true;
      out.worst_margin = r.worst_margin;
      Json w = r.witness;
      w["seed"] = base_seed;
      w["trial"] = trial;
      out.witness = std::move(w);
      out.details["trials_run"] = trial + 1;
      out.details["violation_t"] = r.details.at("worst_t");
      return out;
    }
  }
  out.passed = false;
  out.worst_margin = best;
  out.details["trials_run"] = seeds;
  return out;
}

}  // namespace snl

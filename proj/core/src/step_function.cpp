#include "snl/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "snl/errors.hpp"

namespace snl {

StepFunction::StepFunction() : breakpoints_{0.0} {}

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breakpoints_(std::move(breakpoints)), values_(std::move(values)) {
  if (breakpoints_.size() != values_.size() + 1) {
    throw PreconditionError("step function needs exactly one more breakpoint than values");
  }
  if (breakpoints_.front() != 0.0) throw PreconditionError("first breakpoint must be 0");
  for (std::size_t i = 1; i < breakpoints_.size(); ++i) {
    if (!std::isfinite(breakpoints_[i]) || !(breakpoints_[i] > breakpoints_[i - 1])) {
      throw PreconditionError("breakpoints must be finite and strictly increasing");
    }
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]) || !(values_[i] > 0.0)) {
      throw PreconditionError("step values must be finite and positive");
    }
    if (i > 0 && !(values_[i] < values_[i - 1])) {
      throw PreconditionError("step values must be strictly decreasing");
    }
  }
}

StepFunction StepFunction::from_pieces(const std::vector<double>& breakpoints, const std::vector<double>& values) {
  if (breakpoints.size() != values.size() + 1) {
    throw PreconditionError("step function needs exactly one more breakpoint than values");
  }
  std::vector<double> bp{0.0};
  std::vector<double> vals;
  for (std::size_t i = 0; i < values.size(); ++i) {
    const double v = values[i];
    if (v < 0.0 || !std::isfinite(v)) throw PreconditionError("step values must be finite and nonnegative");
    if (!vals.empty() && v > vals.back()) throw PreconditionError("step values must be nonincreasing");
    if (!(breakpoints[i + 1] > breakpoints[i])) continue;  // zero-length piece
    if (v == 0.0) break;
    if (!vals.empty() && v == vals.back()) {
      bp.back() = breakpoints[i + 1];
    } else {
      vals.push_back(v);
      bp.push_back(breakpoints[i + 1]);
    }
  }
  return StepFunction(std::move(bp), std::move(vals));
}

StepFunction StepFunction::from_atoms(std::vector<std::pair<double, double>> atoms, double merge_tol) {
  std::stable_sort(atoms.begin(), atoms.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  std::vector<double> bp{0.0};
  std::vector<double> vals;
  double cluster_top = 0.0;
  double t = 0.0;
  for (const auto& [value, mass] : atoms) {
    if (!(mass > 0.0)) throw PreconditionError("atom masses must be positive");
    if (value <= merge_tol) break;
    t += mass;
    if (!vals.empty() && cluster_top - value <= merge_tol) {
      bp.back() = t;
    } else {
      cluster_top = value;
      vals.push_back(value);
      bp.push_back(t);
    }
  }
  return StepFunction(std::move(bp), std::move(vals));
}

StepFunction StepFunction::indicator(double length, double height) {
  if (length < 0.0 || height < 0.0) throw PreconditionError("indicator needs nonnegative length and height");
  if (length == 0.0 || height == 0.0) return StepFunction();
  return StepFunction({0.0, length}, {height});
}

double StepFunction::eval(double t) const {
  if (!(t >= 0.0)) throw PreconditionError("step functions are evaluated at t >= 0");
  const auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
  const auto i = static_cast<std::size_t>(it - breakpoints_.begin()) - 1;
  return i < values_.size() ? values_[i] : 0.0;
}

double StepFunction::integrate(double s) const {
  if (!(s >= 0.0)) throw PreconditionError("integration limit must be >= 0");
  double total = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const double lo = breakpoints_[i];
    if (s <= lo) break;
    const double hi = std::min(s, breakpoints_[i + 1]);
    total += values_[i] * (hi - lo);
  }
  return total;
}

StepFunction StepFunction::transform(const ScalarFunction& psi) const {
  if (psi(0.0) != 0.0) throw PreconditionError("transform needs psi(0) = 0, got psi = " + psi.name());
  std::vector<double> mapped;
  mapped.reserve(values_.size());
  for (double v : values_) {
    const double m = psi(v);
    if (!std::isfinite(m) || m < 0.0) throw PreconditionError("transform produced a negative or non-finite value");
    if (!mapped.empty() && m > mapped.back()) throw PreconditionError("transform needs a nondecreasing psi");
    mapped.push_back(m);
  }
  return from_pieces(breakpoints_, mapped);
}

StepFunction StepFunction::scaled(double c) const {
  if (!(c >= 0.0)) throw PreconditionError("step functions scale by c >= 0");
  std::vector<double> v(values_);
  for (double& x : v) x *= c;
  return from_pieces(breakpoints_, v);
}

namespace {

std::vector<double> exact_union(const StepFunction& f, const StepFunction& g) {
  std::vector<double> u;
  std::merge(f.breakpoints().begin(), f.breakpoints().end(), g.breakpoints().begin(), g.breakpoints().end(),
             std::back_inserter(u));
  u.erase(std::unique(u.begin(), u.end()), u.end());
  return u;
}

template <typename Op>
StepFunction combine(const StepFunction& f, const StepFunction& g, Op op) {
  const auto bp = exact_union(f, g);
  std::vector<double> vals;
  vals.reserve(bp.size() - 1);
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) vals.push_back(op(f.eval(bp[i]), g.eval(bp[i])));
  return StepFunction::from_pieces(bp, vals);
}

}  // namespace

StepFunction operator+(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](double a, double b) { return a + b; });
}

StepFunction operator*(const StepFunction& f, const StepFunction& g) {
  return combine(f, g, [](double a, double b) { return a * b; });
}

std::vector<double> merged_breakpoints(const StepFunction& f, const StepFunction& g, double rel_gap) {
  const auto u = exact_union(f, g);
  const double gap = rel_gap * std::max(f.support(), g.support());
  std::vector<double> out;
  for (double t : u) {
    if (out.empty() || t - out.back() > gap) out.push_back(t);
  }
  return out;
}

std::vector<double> checkpoints(const StepFunction& f, const StepFunction& g) {
  const auto bp = merged_breakpoints(f, g);
  std::vector<double> pts;
  pts.reserve(bp.size());
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) pts.push_back(0.5 * (bp[i] + bp[i + 1]));
  pts.push_back(bp.back() + 1.0);
  return pts;
}

}  // namespace snl

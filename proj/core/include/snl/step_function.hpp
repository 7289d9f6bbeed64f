#pragma once

#include <cstddef>
#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

#include "snl/spectral.hpp"

namespace snl {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Right-continuous, nonincreasing, nonnegative step function on [0, inf)
// with compact support, kept in canonical form:
//
//   breakpoints  0 = t_0 < t_1 < ... < t_m
//   values       v_0 > v_1 > ... > v_{m-1} > 0
//
// f(t) = v_i on [t_i, t_{i+1}) and f(t) = 0 on [t_m, inf). The zero
// function has breakpoints {0} and no values.
class StepFunction {
 public:
  StepFunction();
  // Throws PreconditionError unless the input is already canonical.
  StepFunction(std::vector<double> breakpoints, std::vector<double> values);

  // Nonincreasing nonnegative pieces; adjacent equal values are merged and
  // the zero tail dropped.
  static StepFunction from_pieces(const std::vector<double>& breakpoints, const std::vector<double>& values);

  // Rearranges (value, mass) atoms into a decreasing step function. Values
  // within merge_tol of their cluster's largest member are merged into it;
  // values <= merge_tol are treated as zero.
  static StepFunction from_atoms(std::vector<std::pair<double, double>> atoms, double merge_tol = 0.0);

  // height on [0, length), 0 afterwards
  static StepFunction indicator(double length, double height = 1.0);

  [[nodiscard]] const std::vector<double>& breakpoints() const { return breakpoints_; }
  [[nodiscard]] const std::vector<double>& values() const { return values_; }
  [[nodiscard]] std::size_t steps() const { return values_.size(); }
  [[nodiscard]] double support() const { return breakpoints_.back(); }
  // f(0)
  [[nodiscard]] double sup() const { return values_.empty() ? 0.0 : values_.front(); }
  [[nodiscard]] bool is_zero() const { return values_.empty(); }

  [[nodiscard]] double eval(double t) const;
  // Exact integral over [0, s]; s may be kInfinity.
  [[nodiscard]] double integrate(double s = kInfinity) const;
  // Pointwise psi o f; psi must be nondecreasing with psi(0) = 0.
  [[nodiscard]] StepFunction transform(const ScalarFunction& psi) const;
  [[nodiscard]] StepFunction scaled(double c) const;

  friend bool operator==(const StepFunction&, const StepFunction&) = default;

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

[[nodiscard]] StepFunction operator+(const StepFunction& f, const StepFunction& g);
// Pointwise product.
[[nodiscard]] StepFunction operator*(const StepFunction& f, const StepFunction& g);

// Sorted union of the breakpoints of f and g; points closer than
// rel_gap * max(support) are collapsed into one.
[[nodiscard]] std::vector<double> merged_breakpoints(const StepFunction& f, const StepFunction& g,
                                                     double rel_gap = 1e-12);

// One evaluation point inside every interval of the merged partition (its
// midpoint) plus one point past both supports. Both functions are constant
// on each such interval, so pointwise comparisons need only these points.
[[nodiscard]] std::vector<double> checkpoints(const StepFunction& f, const StepFunction& g);

}  // namespace snl

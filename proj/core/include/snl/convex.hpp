#pragma once

#include <functional>
#include <optional>
#include <string>

namespace snl {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;  // may be +inf

  [[nodiscard]] bool contains(double r) const { return r >= lo && r <= hi; }
};

// Uniform grid [0, upper] used to approximate sup_t (r t - F(t)).
struct FenchelGrid {
  double upper = 2.0;
  int points = 2048;

  [[nodiscard]] double spacing() const { return upper / (points - 1); }
  // Bound on the gap between the grid maximum and the true supremum.
  [[nodiscard]] double error_bound(double r) const { return spacing() * r; }
};

// Convex F: [0, inf) -> R together with the domain of its conjugate.
class ConvexFunction {
 public:
  // t^p / p with closed-form conjugate r^q / q on [0, inf).
  static ConvexFunction power(double p);
  // Any convex nondecreasing F; the conjugate is taken on a grid.
  static ConvexFunction sampled(std::string name, std::function<double(double)> f, Interval conjugate_domain);

  [[nodiscard]] double operator()(double t) const { return f_(t); }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const Interval& conjugate_domain() const { return domain_; }
  [[nodiscard]] double at_zero() const { return f_(0.0); }
  [[nodiscard]] bool has_closed_form_conjugate() const { return closed_conjugate_.has_value(); }
  [[nodiscard]] const std::optional<std::function<double(double)>>& closed_conjugate() const {
    return closed_conjugate_;
  }

  // Midpoint convexity and monotonicity on a uniform grid over [0, upper].
  [[nodiscard]] bool is_convex(double upper, int samples = 257) const;

 private:
  ConvexFunction(std::string name, std::function<double(double)> f, Interval domain,
                 std::optional<std::function<double(double)>> conj);

  std::string name_;
  std::function<double(double)> f_;
  Interval domain_;
  std::optional<std::function<double(double)>> closed_conjugate_;
};

// F*(r) = sup_{t >= 0} (r t - F(t)). Closed form when F has one, otherwise
// the maximum over `grid`. Throws PreconditionError for r outside the
// conjugate domain.
[[nodiscard]] double fenchel_conjugate(const ConvexFunction& f, double r, const FenchelGrid& grid = {});

}  // namespace snl

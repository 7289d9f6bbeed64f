#include "snl/convex.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "snl/errors.hpp"

namespace snl {

ConvexFunction::ConvexFunction(std::string name, std::function<double(double)> f, Interval domain,
                               std::optional<std::function<double(double)>> conj)
    : name_(std::move(name)), f_(std::move(f)), domain_(domain), closed_conjugate_(std::move(conj)) {}

ConvexFunction ConvexFunction::power(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw PreconditionError("power form needs p > 1");
  const double q = p / (p - 1.0);
  std::ostringstream os;
  os << "t^" << p << "/" << p;
  return ConvexFunction(
      os.str(), [p](double t) { return std::pow(t, p) / p; },
      Interval{0.0, std::numeric_limits<double>::infinity()},
      [q](double r) { return r <= 0.0 ? 0.0 : std::pow(r, q) / q; });
}

ConvexFunction ConvexFunction::sampled(std::string name, std::function<double(double)> f, Interval conjugate_domain) {
  if (!(conjugate_domain.lo <= conjugate_domain.hi)) throw PreconditionError("empty conjugate domain");
  return ConvexFunction(std::move(name), std::move(f), conjugate_domain, std::nullopt);
}

bool ConvexFunction::is_convex(double upper, int samples) const {
  const double h = upper / (samples - 1);
  double prev = f_(0.0);
  if (!std::isfinite(prev)) return false;
  for (int i = 1; i < samples; ++i) {
    const double t = i * h;
    const double v = f_(t);
    if (!std::isfinite(v) || v < prev) return false;
    prev = v;
    if (i + 1 < samples) {
      const double mid = f_(t);
      const double avg = 0.5 * (f_(t - h) + f_(t + h));
      if (mid > avg + 1e-12 * (1.0 + std::abs(avg))) return false;
    }
  }
  return true;
}

double fenchel_conjugate(const ConvexFunction& f, double r, const FenchelGrid& grid) {
  if (!f.conjugate_domain().contains(r)) {
    std::ostringstream os;
    os << "fenchel_conjugate: r = " << r << " outside the conjugate domain of " << f.name();
    throw PreconditionError(os.str());
  }
  if (f.has_closed_form_conjugate()) return (*f.closed_conjugate())(r);
  if (grid.points < 2 || !(grid.upper > 0.0)) throw PreconditionError("fenchel grid needs >= 2 points on [0, upper]");
  double best = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid.points; ++i) {
    const double t = grid.upper * i / (grid.points - 1);
    best = std::max(best, r * t - f(t));
  }
  return best;
}

}  // namespace snl

#pragma once

#include <array>
#include <cstdint>
#include <string_view>

#include "snl/algebra.hpp"
#include "snl/convex.hpp"
#include "snl/report.hpp"

namespace snl {

// Conjugate exponents 1/p + 1/q = 1 with p, q > 1.
struct ConjugatePair {
  double p = 2.0;
  double q = 2.0;

  static ConjugatePair from_p(double p);
  [[nodiscard]] ConjugatePair swapped() const { return {q, p}; }
};

// x-dagger in {x, x*, |x|, |x*|}
enum class Dagger { plain, star, abs, abs_star };
inline constexpr std::array<Dagger, 4> kAllDaggers{Dagger::plain, Dagger::star, Dagger::abs, Dagger::abs_star};
[[nodiscard]] std::string_view to_string(Dagger d);
[[nodiscard]] Operator apply_dagger(const Operator& x, Dagger d);

// Equality detection thresholds: trace gap <= kTraceEqualityRel * (1 + RHS),
// operator distance <= kOperatorEqualityRel * (1 + ||a^p||).
inline constexpr double kTraceEqualityRel = 1e-8;
inline constexpr double kOperatorEqualityRel = 1e-6;

// |x|^r = (x* x)^{r/2}
[[nodiscard]] Operator abs_power(const Operator& x, double r, const ToleranceConfig& tol = {});
// p^{-1} |x|^p + q^{-1} |y|^q
[[nodiscard]] Operator young_rhs(const Operator& x, const Operator& y, ConjugatePair pq,
                                 const ToleranceConfig& tol = {});
// tau(|z|), summed from the singular values.
[[nodiscard]] double trace_abs(const Operator& z);

// mu_{|xy*|}(t) <= mu_{p^{-1}|x|^p + q^{-1}|y|^q}(t) for all t.
[[nodiscard]] VerificationReport check_young_sv(const Operator& x, const Operator& y, ConjugatePair pq,
                                                const ToleranceConfig& tol = {});
// The same comparison with |xy| on the left. Not a theorem: 2x2
// counterexamples exist.
[[nodiscard]] VerificationReport check_young_sv_unstarred(const Operator& x, const Operator& y, ConjugatePair pq,
                                                          const ToleranceConfig& tol = {});

// tau(|x'y'|) <= p^{-1} tau(|x|^p) + q^{-1} tau(|y|^q) for one dagger choice,
// together with the invariance of the right-hand side under the daggers.
[[nodiscard]] VerificationReport check_young_trace(const Operator& x, const Operator& y, ConjugatePair pq,
                                                   Dagger dagger_x, Dagger dagger_y, const ToleranceConfig& tol = {});
// All 16 dagger combinations; details["rhs_spread"] is the relative spread
// of the right-hand side across them.
[[nodiscard]] VerificationReport check_young_trace_all(const Operator& x, const Operator& y, ConjugatePair pq,
                                                       const ToleranceConfig& tol = {});

// tau(|ab|) = p^{-1} tau(a^p) + q^{-1} tau(b^q)  <=>  b^q = a^p
[[nodiscard]] VerificationReport check_equality_trace(const Operator& a, const Operator& b, ConjugatePair pq,
                                                      const ToleranceConfig& tol = {});
// mu_{|xy*|} = mu_{p^{-1}|x|^p + q^{-1}|y|^q}  <=>  |y|^q = |x|^p
[[nodiscard]] VerificationReport check_equality_sv(const Operator& x, const Operator& y, ConjugatePair pq,
                                                   const ToleranceConfig& tol = {});

// For p in (1, 2], positive a and invertible positive b, with
// f_s = R[b^{-1} p^{|ab|}(s, inf)]:
//   s f_s <= f_s (p^{-1} a^p + q^{-1} b^q) f_s   and   f_s ~ p^{|ab|}(s, inf).
[[nodiscard]] VerificationReport check_compression(const Operator& a, const Operator& b, ConjugatePair pq, double s,
                                                   const ToleranceConfig& tol = {});
// check_compression at s = 0, at the midpoints between consecutive values
// of mu_{|ab|}, below its smallest value and at ||ab||.
[[nodiscard]] VerificationReport check_compression_sweep(const Operator& a, const Operator& b, ConjugatePair pq,
                                                         const ToleranceConfig& tol = {});

// mu(|ab|^{1/2}) weakly majorized by (mu(a) + mu(b)) / 2, and
// tau(|ab|^{1/2}) <= sqrt(tau(a) tau(b)) <= (tau(a) + tau(b)) / 2.
[[nodiscard]] VerificationReport check_agm(const Operator& a, const Operator& b, const ToleranceConfig& tol = {});

// tau(|ab|) <= tau(F(a)) + tau(F*(b)) (+ conjugate grid error).
[[nodiscard]] VerificationReport check_fenchel_young(const Operator& a, const Operator& b, const ConvexFunction& f,
                                                     const ToleranceConfig& tol = {});

// |xy*| = w ||x||y|| w* with y = w|y|.
[[nodiscard]] VerificationReport check_polar_identity(const Operator& x, const Operator& y,
                                                      const ToleranceConfig& tol = {});
// mu_{|xy*|} <= mu_{| |x||y| |}
[[nodiscard]] VerificationReport check_pass_to_positives(const Operator& x, const Operator& y,
                                                         const ToleranceConfig& tol = {});

// Random search over dim x dim complex Gaussian x, y and p ~ U[1.1, 4] for a
// time t with mu_{|xy|}(t) > mu_{p^{-1}|x|^p + q^{-1}|y|^q}(t). `passed`
// means a witness was found; the witness carries x, y, p and t.
[[nodiscard]] VerificationReport find_xy_counterexample(int dim, int seeds, std::uint64_t base_seed = 0,
                                                        const ToleranceConfig& tol = {});

}  // namespace snl

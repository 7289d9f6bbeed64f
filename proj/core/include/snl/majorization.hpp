#pragma once

#include "snl/algebra.hpp"
#include "snl/inequalities.hpp"
#include "snl/report.hpp"
#include "snl/step_function.hpp"

namespace snl {

// min over s of (int_0^s g - int_0^s f), evaluated at every merged
// breakpoint and at s = inf. The difference of the cumulative integrals is
// piecewise linear, so this is the exact minimum.
[[nodiscard]] double majorization_margin(const StepFunction& f, const StepFunction& g);

// f weakly majorized by g.
[[nodiscard]] bool weak_majorize(const StepFunction& f, const StepFunction& g, const ToleranceConfig& tol = {});

// int_0^s mu_{xy} <= int_0^s mu_x mu_y for all s.
[[nodiscard]] VerificationReport check_submajorization(const Operator& x, const Operator& y,
                                                       const ToleranceConfig& tol = {});

// a <_sp b in a factor: rank p^a(s, inf) <= rank p^b(s, inf) for every s.
[[nodiscard]] bool spectral_preorder(const Operator& a, const Operator& b, const ToleranceConfig& tol = {});

// |xy*| <_sp p^{-1}|x|^p + q^{-1}|y|^q (factors only).
[[nodiscard]] VerificationReport check_young_preorder(const Operator& x, const Operator& y, ConjugatePair pq,
                                                      const ToleranceConfig& tol = {});

struct Correction {
  Operator unitary;
  VerificationReport report;
};

// In a single factor, builds U carrying the descending eigenbasis of
// h = p^{-1}|x|^p + q^{-1}|y|^q onto that of |xy*| and verifies
// |xy*| <= U h U*, i.e. the Loewner bound after the doubly stochastic map Ad U.
[[nodiscard]] Correction doubly_stochastic_correction(const Operator& x, const Operator& y, ConjugatePair pq,
                                                      const ToleranceConfig& tol = {});

// Lambda_{|ab|}(s) <= Lambda_a(s) Lambda_b(s), plus
// Lambda_{h^{1/2}}(s) = sqrt(Lambda_h(s)) for h = a, b.
[[nodiscard]] VerificationReport check_log_majorization(const Operator& a, const Operator& b,
                                                        const ToleranceConfig& tol = {});

}  // namespace snl

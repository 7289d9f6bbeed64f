#pragma once

#include "snl/algebra.hpp"
#include "snl/report.hpp"
#include "snl/step_function.hpp"

namespace snl {

// Generalized singular values t -> mu_z(t).
//
// Every singular value of every block carries the weight of its block as
// mass; sorting them in decreasing order and stacking the masses gives
// mu_z(t) = min{ s : tau(p^{|z|}(s, inf)) <= t }. Singular values within
// kEigTieTol * ||z|| of each other are merged, and those below that
// threshold count as zero.
[[nodiscard]] StepFunction mu(const Operator& z);

// exp(int_0^s log f(t) dt); 0 when f vanishes on part of [0, s).
[[nodiscard]] double log_integral_exp(const StepFunction& f, double s);

// Lambda_h(s) = exp(int_0^s log mu_h(t) dt) for positive h and 0 < s < tau(1).
[[nodiscard]] double lambda_fn(const Operator& h, double s, const ToleranceConfig& tol = {});

// sup_t |mu_{z1}(t) - mu_{z2}(t)| <= ||z1 - z2||
[[nodiscard]] VerificationReport mu_distance_bound(const Operator& z1, const Operator& z2,
                                                   const ToleranceConfig& tol = {});

// Largest pointwise gap sup_t |f(t) - g(t)| over the merged partition.
[[nodiscard]] double sup_distance(const StepFunction& f, const StepFunction& g);

// |int_0^inf mu_z - tau(|z|)| <= rel * tau(|z|)
[[nodiscard]] VerificationReport check_trace_integral(const Operator& z, double rel = 1e-10);

// mu_f is the indicator of [0, tau(f)) for a projection f: one step of
// height 1 (within `eps`) ending at tau(f) (within `eps`).
[[nodiscard]] VerificationReport check_projection_snumbers(const Operator& f, double eps = 1e-12,
                                                           const ToleranceConfig& tol = {});

// transform(mu(h), t^r) against mu(power_pos(h, r)), within rel * mu_h(0)^r.
[[nodiscard]] VerificationReport check_functional_calculus(const Operator& h, double r, double rel = 1e-9,
                                                           const ToleranceConfig& tol = {});

}  // namespace snl

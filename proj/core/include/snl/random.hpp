#pragma once

#include <cstdint>
#include <random>
#include <string_view>

#include "snl/algebra.hpp"

namespace snl {

enum class OperatorKind { general, hermitian, positive, projection, unitary, invertible_positive };

[[nodiscard]] std::string_view to_string(OperatorKind kind);

// Counter-based seeding: the engine for (seed, trial, stream) does not depend
// on how many other draws happened before, so trials can run in any order.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream);
[[nodiscard]] std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream);

// Random operator of the requested kind; `slot` distinguishes several
// operators drawn in the same trial.
//
//   general              entries standard complex Gaussian
//   hermitian            (z + z*) / 2
//   positive             z* z scaled to norm 1
//   projection           spectral projection of a random Hermitian at its median eigenvalue
//   unitary              partial isometry of the polar decomposition of z
//   invertible_positive  positive + 0.1
[[nodiscard]] Operator gen_operator(std::uint64_t seed, std::uint64_t trial, std::uint64_t slot,
                                    const TracialAlgebra& algebra, OperatorKind kind);

// Uniform draw in [lo, hi) on its own stream.
[[nodiscard]] double gen_uniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t slot, double lo, double hi);

}  // namespace snl

#include "snl/random.hpp"

#include <algorithm>
#include <cmath>

#include "snl/spectral.hpp"

namespace snl {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t kUniformStream = 0x75ULL;

Operator gaussian(std::mt19937_64& rng, const TracialAlgebra& algebra) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double s = 1.0 / std::sqrt(2.0);
  std::vector<Matrix> blocks;
  for (const auto& b : algebra.blocks()) {
    Matrix m(b.dim, b.dim);
    for (int r = 0; r < b.dim; ++r) {
      for (int c = 0; c < b.dim; ++c) {
        const double re = normal(rng);
        const double im = normal(rng);
        m(r, c) = Complex(s * re, s * im);
      }
    }
    blocks.push_back(std::move(m));
  }
  return Operator(algebra, std::move(blocks));
}

Operator normalized_positive(const Operator& z) {
  const Operator h = hermitian_part(adjoint(z) * z);
  const double n = norm(h);
  return n > 0.0 ? (1.0 / n) * h : h;
}

}  // namespace

std::string_view to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::general: return "general";
    case OperatorKind::hermitian: return "hermitian";
    case OperatorKind::positive: return "positive";
    case OperatorKind::projection: return "projection";
    case OperatorKind::unitary: return "unitary";
    case OperatorKind::invertible_positive: return "invertible_positive";
  }
  return "unknown";
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream) {
  return splitmix64(splitmix64(splitmix64(seed) ^ trial) ^ stream);
}

std::mt19937_64 trial_engine(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream) {
  return std::mt19937_64(derive_seed(seed, trial, stream));
}

Operator gen_operator(std::uint64_t seed, std::uint64_t trial, std::uint64_t slot, const TracialAlgebra& algebra,
                      OperatorKind kind) {
  auto rng = trial_engine(seed, trial, slot * 256 + static_cast<std::uint64_t>(kind));
  const Operator z = gaussian(rng, algebra);
  switch (kind) {
    case OperatorKind::general:
      return z;
    case OperatorKind::hermitian:
      return hermitian_part(z);
    case OperatorKind::positive:
      return normalized_positive(z);
    case OperatorKind::projection: {
      const Operator h = hermitian_part(z);
      auto values = eig_hermitian(h).eigenvalues();
      std::sort(values.begin(), values.end());
      const std::size_t n = values.size();
      const double median = n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
      return spectral_projection(h, median);
    }
    case OperatorKind::unitary:
      return polar(z).partial_isometry;
    case OperatorKind::invertible_positive:
      return normalized_positive(z) + 0.1 * Operator::identity(algebra);
  }
  return z;
}

double gen_uniform(std::uint64_t seed, std::uint64_t trial, std::uint64_t slot, double lo, double hi) {
  auto rng = trial_engine(seed, trial, slot * 256 + kUniformStream);
  std::uniform_real_distribution<double> dist(lo, hi);
  return dist(rng);
}

}  // namespace snl

#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "snl/report.hpp"
#include "snl/tolerance.hpp"

namespace snl {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;

inline constexpr int kMaxBlockDim = 16;
inline constexpr std::size_t kMaxBlocks = 8;

struct Block {
  int dim = 1;
  double weight = 1.0;

  friend bool operator==(const Block&, const Block&) = default;
};

// M = M_{n_1}(C) + ... + M_{n_k}(C) with the trace tau(x) = sum_k w_k Tr(x_k).
class TracialAlgebra {
 public:
  explicit TracialAlgebra(std::vector<Block> blocks);

  // One factor M_n(C) with weight 1.
  static TracialAlgebra factor(int dim, double weight = 1.0);

  [[nodiscard]] const std::vector<Block>& blocks() const { return blocks_; }
  [[nodiscard]] std::size_t block_count() const { return blocks_.size(); }
  [[nodiscard]] const Block& block(std::size_t k) const { return blocks_.at(k); }
  [[nodiscard]] bool is_factor() const { return blocks_.size() == 1; }
  [[nodiscard]] int total_dim() const;
  // tau(1)
  [[nodiscard]] double total_trace() const;

  friend bool operator==(const TracialAlgebra&, const TracialAlgebra&) = default;

 private:
  std::vector<Block> blocks_;
};

// A block-diagonal element of a TracialAlgebra. Immutable once built.
class Operator {
 public:
  Operator(TracialAlgebra algebra, std::vector<Matrix> blocks);

  static Operator identity(const TracialAlgebra& algebra);
  static Operator zero(const TracialAlgebra& algebra);
  // Diagonal operator; `entries` runs over all blocks in order.
  static Operator diagonal(const TracialAlgebra& algebra, std::span<const double> entries);

  [[nodiscard]] const TracialAlgebra& algebra() const { return algebra_; }
  [[nodiscard]] const std::vector<Matrix>& blocks() const { return blocks_; }
  [[nodiscard]] const Matrix& block(std::size_t k) const { return blocks_.at(k); }
  [[nodiscard]] std::size_t block_count() const { return blocks_.size(); }

 private:
  TracialAlgebra algebra_;
  std::vector<Matrix> blocks_;
};

void require_same_algebra(const Operator& x, const Operator& y);

[[nodiscard]] Complex trace(const Operator& x);
[[nodiscard]] Operator adjoint(const Operator& x);
[[nodiscard]] Operator multiply(const Operator& x, const Operator& y);
[[nodiscard]] Operator add(const Operator& x, const Operator& y);
[[nodiscard]] Operator subtract(const Operator& x, const Operator& y);
[[nodiscard]] Operator scale(Complex c, const Operator& x);

inline Operator operator*(const Operator& x, const Operator& y) { return multiply(x, y); }
inline Operator operator+(const Operator& x, const Operator& y) { return add(x, y); }
inline Operator operator-(const Operator& x, const Operator& y) { return subtract(x, y); }
inline Operator operator*(Complex c, const Operator& x) { return scale(c, x); }
inline Operator operator*(double c, const Operator& x) { return scale(Complex(c, 0.0), x); }

// Operator norm: largest singular value over all blocks.
[[nodiscard]] double norm(const Operator& x);
// sum_k ||x_k||_F^2 (unweighted); cheap, used for pre-checks only.
[[nodiscard]] double frobenius_norm(const Operator& x);

// ||x - y|| <= abs_tol + rel_tol * max(||x||, ||y||)
[[nodiscard]] bool approx_equal(const Operator& x, const Operator& y, const ToleranceConfig& tol = {});

[[nodiscard]] bool is_hermitian(const Operator& x, const ToleranceConfig& tol = {});
[[nodiscard]] bool is_positive(const Operator& x, const ToleranceConfig& tol = {});
[[nodiscard]] bool is_projection(const Operator& x, const ToleranceConfig& tol = {});

// (x + x*) / 2
[[nodiscard]] Operator hermitian_part(const Operator& x);

// x^k for a non-negative integer k.
[[nodiscard]] Operator matrix_power(const Operator& x, int k);

// |tau((x*x)^k) - tau((xx*)^k)| against the tolerance.
[[nodiscard]] VerificationReport trace_commutation_check(const Operator& x, int k,
                                                         const ToleranceConfig& tol = {});

}  // namespace snl

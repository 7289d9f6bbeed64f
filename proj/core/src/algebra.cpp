#include "snl/algebra.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "snl/errors.hpp"
#include "snl/spectral.hpp"

namespace snl {

TracialAlgebra::TracialAlgebra(std::vector<Block> blocks) : blocks_(std::move(blocks)) {
  if (blocks_.empty()) {
    throw PreconditionError("algebra needs at least one block");
  }
  if (blocks_.size() > kMaxBlocks) {
    throw PreconditionError("algebra has more than " + std::to_string(kMaxBlocks) + " blocks");
  }
  for (const auto& b : blocks_) {
    if (b.dim < 1 || b.dim > kMaxBlockDim) {
      throw PreconditionError("block dimension " + std::to_string(b.dim) + " outside [1, " +
                              std::to_string(kMaxBlockDim) + "]");
    }
    if (!std::isfinite(b.weight) || !(b.weight > 0.0)) {
      throw PreconditionError("block weights must be finite and positive");
    }
  }
}

TracialAlgebra TracialAlgebra::factor(int dim, double weight) {
  return TracialAlgebra({Block{dim, weight}});
}

int TracialAlgebra::total_dim() const {
  int n = 0;
  for (const auto& b : blocks_) n += b.dim;
  return n;
}

double TracialAlgebra::total_trace() const {
  double t = 0.0;
  for (const auto& b : blocks_) t += b.weight * b.dim;
  return t;
}

Operator::Operator(TracialAlgebra algebra, std::vector<Matrix> blocks)
    : algebra_(std::move(algebra)), blocks_(std::move(blocks)) {
  if (blocks_.size() != algebra_.block_count()) {
    std::ostringstream os;
    os << "operator has " << blocks_.size() << " blocks, algebra declares " << algebra_.block_count();
    throw AlgebraMismatch(os.str());
  }
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    const int n = algebra_.block(k).dim;
    if (blocks_[k].rows() != n || blocks_[k].cols() != n) {
      std::ostringstream os;
      os << "block " << k << " is " << blocks_[k].rows() << "x" << blocks_[k].cols() << ", expected " << n
         << "x" << n;
      throw AlgebraMismatch(os.str());
    }
    if (!blocks_[k].allFinite()) {
      throw PreconditionError("operator block " + std::to_string(k) + " has non-finite entries");
    }
  }
}

Operator Operator::identity(const TracialAlgebra& algebra) {
  std::vector<Matrix> blocks;
  for (const auto& b : algebra.blocks()) blocks.push_back(Matrix::Identity(b.dim, b.dim));
  return Operator(algebra, std::move(blocks));
}

Operator Operator::zero(const TracialAlgebra& algebra) {
  std::vector<Matrix> blocks;
  for (const auto& b : algebra.blocks()) blocks.push_back(Matrix::Zero(b.dim, b.dim));
  return Operator(algebra, std::move(blocks));
}

Operator Operator::diagonal(const TracialAlgebra& algebra, std::span<const double> entries) {
  if (entries.size() != static_cast<std::size_t>(algebra.total_dim())) {
    throw AlgebraMismatch("diagonal has " + std::to_string(entries.size()) + " entries, algebra has dimension " +
                          std::to_string(algebra.total_dim()));
  }
  std::vector<Matrix> blocks;
  std::size_t at = 0;
  for (const auto& b : algebra.blocks()) {
    Matrix m = Matrix::Zero(b.dim, b.dim);
    for (int i = 0; i < b.dim; ++i) m(i, i) = entries[at++];
    blocks.push_back(std::move(m));
  }
  return Operator(algebra, std::move(blocks));
}

void require_same_algebra(const Operator& x, const Operator& y) {
  if (!(x.algebra() == y.algebra())) {
    throw AlgebraMismatch("operands live in different algebras");
  }
}

namespace {

template <typename F>
Operator blockwise(const Operator& x, F&& f) {
  std::vector<Matrix> out;
  out.reserve(x.block_count());
  for (std::size_t k = 0; k < x.block_count(); ++k) out.push_back(f(x.block(k), k));
  return Operator(x.algebra(), std::move(out));
}

}  // namespace

Complex trace(const Operator& x) {
  Complex t{0.0, 0.0};
  for (std::size_t k = 0; k < x.block_count(); ++k) {
    t += x.algebra().block(k).weight * x.block(k).trace();
  }
  return t;
}

Operator adjoint(const Operator& x) {
  return blockwise(x, [](const Matrix& m, std::size_t) -> Matrix { return m.adjoint(); });
}

Operator multiply(const Operator& x, const Operator& y) {
  require_same_algebra(x, y);
  return blockwise(x, [&](const Matrix& m, std::size_t k) -> Matrix { return m * y.block(k); });
}

Operator add(const Operator& x, const Operator& y) {
  require_same_algebra(x, y);
  return blockwise(x, [&](const Matrix& m, std::size_t k) -> Matrix { return m + y.block(k); });
}

Operator subtract(const Operator& x, const Operator& y) {
  require_same_algebra(x, y);
  return blockwise(x, [&](const Matrix& m, std::size_t k) -> Matrix { return m - y.block(k); });
}

Operator scale(Complex c, const Operator& x) {
  return blockwise(x, [&](const Matrix& m, std::size_t) -> Matrix { return c * m; });
}

Operator hermitian_part(const Operator& x) {
  return blockwise(x, [](const Matrix& m, std::size_t) -> Matrix { return 0.5 * (m + m.adjoint()); });
}

Operator matrix_power(const Operator& x, int k) {
  if (k < 0) throw PreconditionError("matrix_power needs k >= 0");
  Operator result = Operator::identity(x.algebra());
  for (int i = 0; i < k; ++i) result = multiply(result, x);
  return result;
}

double frobenius_norm(const Operator& x) {
  double s = 0.0;
  for (const auto& m : x.blocks()) s += m.squaredNorm();
  return std::sqrt(s);
}

bool approx_equal(const Operator& x, const Operator& y, const ToleranceConfig& tol) {
  require_same_algebra(x, y);
  return norm(x - y) <= tol.threshold(std::max(norm(x), norm(y)));
}

bool is_hermitian(const Operator& x, const ToleranceConfig& tol) {
  return norm(x - adjoint(x)) <= tol.threshold(norm(x));
}

bool is_positive(const Operator& x, const ToleranceConfig& tol) {
  if (!is_hermitian(x, tol)) return false;
  const auto spec = eig_hermitian(hermitian_part(x), tol);
  return spec.min_value() >= -tol.threshold(spec.spectral_radius());
}

bool is_projection(const Operator& x, const ToleranceConfig& tol) {
  if (!is_hermitian(x, tol)) return false;
  return norm(x * x - x) <= tol.threshold(norm(x));
}

VerificationReport trace_commutation_check(const Operator& x, int k, const ToleranceConfig& tol) {
  if (k < 1) throw PreconditionError("trace_commutation_check needs k >= 1");
  const Operator xs = adjoint(x);
  const Complex left = trace(matrix_power(xs * x, k));
  const Complex right = trace(matrix_power(x * xs, k));
  const double diff = std::abs(left - right);

  ReportBuilder rb("trace_commutation", tol);
  rb.set_scale(std::max(std::abs(left), std::abs(right)));
  rb.observe(-diff);
  rb.detail("k", k);
  rb.detail("trace_xstar_x_pow_k", left.real());
  rb.detail("trace_x_xstar_pow_k", right.real());
  rb.detail("difference", diff);
  return rb.finish();
}

}  // namespace snl

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "snl/algebra.hpp"

namespace snl {

struct Eigenpair {
  double value = 0.0;
  std::size_t block = 0;
  std::size_t column = 0;  // column of the block's eigenvector matrix
};

// Eigen-decomposition of a Hermitian operator.
//
// pairs() is sorted by descending eigenvalue; exact ties keep
// (block, column) order. vectors(k) holds the orthonormal eigenvectors of
// block k as columns, in descending order of their eigenvalues.
class SpectralDecomposition {
 public:
  SpectralDecomposition(TracialAlgebra algebra, std::vector<Eigen::VectorXd> values,
                        std::vector<Matrix> vectors);

  [[nodiscard]] const TracialAlgebra& algebra() const { return algebra_; }
  [[nodiscard]] const std::vector<Eigenpair>& pairs() const { return pairs_; }
  [[nodiscard]] const Eigen::VectorXd& values(std::size_t k) const { return values_.at(k); }
  [[nodiscard]] const Matrix& vectors(std::size_t k) const { return vectors_.at(k); }
  [[nodiscard]] std::vector<double> eigenvalues() const;

  [[nodiscard]] double max_value() const;
  [[nodiscard]] double min_value() const;
  // max |lambda|, the operator norm of the decomposed operator
  [[nodiscard]] double spectral_radius() const;

  // sum_i fn(lambda_i) v_i v_i*
  [[nodiscard]] Operator assemble(const std::function<double(double)>& fn) const;
  [[nodiscard]] Operator reconstruct() const;

 private:
  TracialAlgebra algebra_;
  std::vector<Eigen::VectorXd> values_;
  std::vector<Matrix> vectors_;
  std::vector<Eigenpair> pairs_;
};

// Increasing continuous psi: [0, inf) -> [0, inf) with psi(0) = 0.
class ScalarFunction {
 public:
  ScalarFunction(std::string name, std::function<double(double)> fn);

  // t^r, r > 0 (0^r = 0)
  static ScalarFunction power(double r);
  // exp(rate * t) - 1
  static ScalarFunction exp_minus_one(double rate = 1.0);
  // Piecewise-linear interpolant through (t_i, psi_i) with t_0 = 0, psi_0 = 0,
  // extended past the last sample with the last slope.
  static ScalarFunction interpolant(std::vector<std::pair<double, double>> samples);
  static ScalarFunction identity();

  [[nodiscard]] double operator()(double t) const { return fn_(t); }
  [[nodiscard]] const std::string& name() const { return name_; }

  // psi(0) == 0, finite, nondecreasing on a uniform grid over [0, upper].
  [[nodiscard]] bool is_admissible(double upper, int samples = 257) const;

 private:
  std::string name_;
  std::function<double(double)> fn_;
};

struct PolarDecomposition {
  Operator partial_isometry;  // w
  Operator modulus;           // |z|
};

// Cyclic Jacobi eigensolver for one dense Hermitian matrix. Eigenvalues are
// returned in descending order with matching eigenvector columns.
struct HermitianEigen {
  Eigen::VectorXd values;
  Matrix vectors;
  int sweeps = 0;
};
[[nodiscard]] HermitianEigen jacobi_eigen(const Matrix& h);

// One-sided (Hestenes) Jacobi SVD of a square block: m * right.col(i) has
// norm values(i), descending. Small singular values keep relative accuracy.
struct SingularSystem {
  Eigen::VectorXd values;
  Matrix left;   // columns with values(i) == 0 are left zero
  Matrix right;
  int sweeps = 0;
};
[[nodiscard]] SingularSystem jacobi_svd(const Matrix& m);

[[nodiscard]] SpectralDecomposition eig_hermitian(const Operator& h, const ToleranceConfig& tol = {});

// Singular values of each block, descending, computed from the Hermitian
// dilation [[0, z], [z*, 0]].
[[nodiscard]] std::vector<Eigen::VectorXd> singular_values(const Operator& z);

// Per-block count of singular values above kRankTol * ||z||.
[[nodiscard]] std::vector<int> numerical_rank(const Operator& z);

// sum_i fn(lambda_i) v_i v_i* with no restriction on fn.
[[nodiscard]] Operator spectral_map(const Operator& h, const std::function<double(double)>& fn,
                                    const ToleranceConfig& tol = {});

// psi(h) for positive h; eigenvalues in [-tol, 0) are clamped to 0.
[[nodiscard]] Operator functional_calculus(const Operator& h, const ScalarFunction& psi,
                                           const ToleranceConfig& tol = {});
[[nodiscard]] Operator power_pos(const Operator& a, double r, const ToleranceConfig& tol = {});
// a^{-1} for positive invertible a.
[[nodiscard]] Operator inverse_pos(const Operator& a, double inv_tol, const ToleranceConfig& tol = {});

[[nodiscard]] Operator abs_op(const Operator& z);
[[nodiscard]] PolarDecomposition polar(const Operator& z);

// Projection onto span{v_i : lambda_i > s + kEigTieTol * ||h||}.
[[nodiscard]] Operator spectral_projection(const Operator& h, double s, const ToleranceConfig& tol = {});
[[nodiscard]] Operator range_projection(const Operator& x);

// Per-block rank of a projection (eigenvalues above 1/2).
[[nodiscard]] std::vector<int> projection_ranks(const Operator& e, const ToleranceConfig& tol = {});
[[nodiscard]] bool mvn_equivalent(const Operator& e, const Operator& f, const ToleranceConfig& tol = {});

}  // namespace snl

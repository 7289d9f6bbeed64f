#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "snl/spectral.hpp"

namespace snl {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kOffDiagonalTol = 1e-13;

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// One complex Jacobi rotation annihilating a(p, q). The rotation is the
// product of the phase fix diag(1, conj(e^{i phi})) with a real Givens
// rotation on (p, q).
void rotate(Matrix& a, Matrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex apq = a(p, q);
  const double r = std::abs(apq);
  if (r == 0.0) return;
  const Complex phase = apq / r;
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();

  const double theta = (aqq - app) / (2.0 * r);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const Complex u_pp = c;
  const Complex u_pq = s;
  const Complex u_qp = -s * std::conj(phase);
  const Complex u_qq = c * std::conj(phase);

  const Eigen::Index n = a.rows();
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = akp * u_pp + akq * u_qp;
    a(k, q) = akp * u_pq + akq * u_qq;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = std::conj(u_pp) * apk + std::conj(u_qp) * aqk;
    a(q, k) = std::conj(u_pq) * apk + std::conj(u_qq) * aqk;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    const Complex vkp = v(k, p);
    const Complex vkq = v(k, q);
    v(k, p) = vkp * u_pp + vkq * u_qp;
    v(k, q) = vkp * u_pq + vkq * u_qq;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = app - t * r;
  a(q, q) = aqq + t * r;
}

}  // namespace

HermitianEigen jacobi_eigen(const Matrix& h) {
  const Eigen::Index n = h.rows();
  if (h.cols() != n) throw std::invalid_argument("jacobi_eigen needs a square matrix");

  Matrix a = 0.5 * (h + h.adjoint());
  Matrix v = Matrix::Identity(n, n);
  const double target = kOffDiagonalTol * a.norm();

  int sweeps = 0;
  while (off_diagonal_norm(a) > target) {
    if (sweeps == kMaxSweeps) {
      throw std::runtime_error("Jacobi eigensolver did not converge");
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
    ++sweeps;
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Eigen::Index i, Eigen::Index j) { return a(i, i).real() > a(j, j).real(); });

  HermitianEigen out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    out.values(i) = a(order[i], order[i]).real();
    out.vectors.col(i) = v.col(order[i]);
  }
  out.sweeps = sweeps;
  return out;
}

SingularSystem jacobi_svd(const Matrix& m) {
  const Eigen::Index n = m.cols();
  Matrix a = m;
  Matrix v = Matrix::Identity(n, n);
  // columns below this are rounding noise; rotating them never settles
  const double floor = std::pow(1e-16 * m.norm(), 2);

  int sweeps = 0;
  for (bool rotated = true; rotated; ++sweeps) {
    if (sweeps == kMaxSweeps) throw std::runtime_error("Jacobi SVD did not converge");
    rotated = false;
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double alpha = a.col(p).squaredNorm();
        const double beta = a.col(q).squaredNorm();
        const Complex gamma = a.col(p).dot(a.col(q));  // conj(a_p) . a_q
        const double r = std::abs(gamma);
        if (r == 0.0 || r <= 1e-15 * std::sqrt(alpha * beta) || std::min(alpha, beta) <= floor) continue;
        rotated = true;
        // same rotation as the two-sided solver, applied to columns only
        const Complex phase = gamma / r;
        const double theta = (beta - alpha) / (2.0 * r);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const Complex u_qp = -s * std::conj(phase);
        const Complex u_qq = c * std::conj(phase);
        for (Matrix* x : {&a, &v}) {
          for (Eigen::Index k = 0; k < x->rows(); ++k) {
            const Complex xp = (*x)(k, p);
            const Complex xq = (*x)(k, q);
            (*x)(k, p) = xp * c + xq * u_qp;
            (*x)(k, q) = xp * s + xq * u_qq;
          }
        }
      }
    }
  }

  Eigen::VectorXd norms(n);
  for (Eigen::Index i = 0; i < n; ++i) norms(i) = a.col(i).norm();
  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) { return norms(i) > norms(j); });

  SingularSystem out;
  out.values.resize(n);
  out.left = Matrix::Zero(m.rows(), n);
  out.right.resize(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index j = order[static_cast<std::size_t>(i)];
    out.values(i) = norms(j);
    out.right.col(i) = v.col(j);
    if (norms(j) > 0.0) out.left.col(i) = a.col(j) / norms(j);
  }
  out.sweeps = sweeps;
  return out;
}

}  // namespace snl

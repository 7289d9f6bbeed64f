#include "snl/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "snl/errors.hpp"

namespace snl {

SpectralDecomposition::SpectralDecomposition(TracialAlgebra algebra, std::vector<Eigen::VectorXd> values,
                                             std::vector<Matrix> vectors)
    : algebra_(std::move(algebra)), values_(std::move(values)), vectors_(std::move(vectors)) {
  if (values_.size() != algebra_.block_count() || vectors_.size() != algebra_.block_count()) {
    throw AlgebraMismatch("spectral decomposition does not match the algebra's blocks");
  }
  for (std::size_t k = 0; k < values_.size(); ++k) {
    for (Eigen::Index i = 0; i < values_[k].size(); ++i) {
      pairs_.push_back({values_[k](i), k, static_cast<std::size_t>(i)});
    }
  }
  std::stable_sort(pairs_.begin(), pairs_.end(),
                   [](const Eigenpair& a, const Eigenpair& b) { return a.value > b.value; });
}

std::vector<double> SpectralDecomposition::eigenvalues() const {
  std::vector<double> out;
  out.reserve(pairs_.size());
  for (const auto& p : pairs_) out.push_back(p.value);
  return out;
}

double SpectralDecomposition::max_value() const { return pairs_.front().value; }
double SpectralDecomposition::min_value() const { return pairs_.back().value; }

double SpectralDecomposition::spectral_radius() const {
  return std::max(std::abs(max_value()), std::abs(min_value()));
}

Operator SpectralDecomposition::assemble(const std::function<double(double)>& fn) const {
  std::vector<Matrix> blocks;
  blocks.reserve(values_.size());
  for (std::size_t k = 0; k < values_.size(); ++k) {
    Eigen::VectorXd mapped(values_[k].size());
    for (Eigen::Index i = 0; i < mapped.size(); ++i) mapped(i) = fn(values_[k](i));
    Matrix m = vectors_[k] * mapped.cast<Complex>().asDiagonal() * vectors_[k].adjoint();
    blocks.push_back(0.5 * (m + m.adjoint()));
  }
  return Operator(algebra_, std::move(blocks));
}

Operator SpectralDecomposition::reconstruct() const {
  return assemble([](double t) { return t; });
}

SpectralDecomposition eig_hermitian(const Operator& h, const ToleranceConfig& tol) {
  for (std::size_t k = 0; k < h.block_count(); ++k) {
    const Matrix& m = h.block(k);
    const double defect = (m - m.adjoint()).norm();
    if (defect > tol.threshold(m.norm())) {
      std::ostringstream os;
      os << "eig_hermitian: block " << k << " is not Hermitian (defect " << defect << ")";
      throw PreconditionError(os.str());
    }
  }
  std::vector<Eigen::VectorXd> values;
  std::vector<Matrix> vectors;
  for (const auto& m : h.blocks()) {
    auto e = jacobi_eigen(m);
    values.push_back(std::move(e.values));
    vectors.push_back(std::move(e.vectors));
  }
  return SpectralDecomposition(h.algebra(), std::move(values), std::move(vectors));
}

std::vector<Eigen::VectorXd> singular_values(const Operator& z) {
  std::vector<Eigen::VectorXd> out;
  out.reserve(z.block_count());
  for (const auto& m : z.blocks()) {
    const Eigen::Index n = m.rows();
    Matrix dilation = Matrix::Zero(2 * n, 2 * n);
    dilation.topRightCorner(n, n) = m;
    dilation.bottomLeftCorner(n, n) = m.adjoint();
    const auto e = jacobi_eigen(dilation);
    Eigen::VectorXd s = e.values.head(n).cwiseMax(0.0);
    out.push_back(std::move(s));
  }
  return out;
}

double norm(const Operator& x) {
  double best = 0.0;
  for (const auto& s : singular_values(x)) {
    if (s.size() > 0) best = std::max(best, s(0));
  }
  return best;
}

namespace {

std::vector<int> ranks_from(const std::vector<Eigen::VectorXd>& sv) {
  double top = 0.0;
  for (const auto& s : sv) {
    if (s.size() > 0) top = std::max(top, s(0));
  }
  std::vector<int> ranks;
  for (const auto& s : sv) {
    int r = 0;
    if (top > 0.0) {
      for (Eigen::Index i = 0; i < s.size(); ++i) {
        if (s(i) > kRankTol * top) ++r;
      }
    }
    ranks.push_back(r);
  }
  return ranks;
}

}  // namespace

std::vector<int> numerical_rank(const Operator& z) { return ranks_from(singular_values(z)); }

Operator spectral_map(const Operator& h, const std::function<double(double)>& fn, const ToleranceConfig& tol) {
  return eig_hermitian(h, tol).assemble(fn);
}

ScalarFunction::ScalarFunction(std::string name, std::function<double(double)> fn)
    : name_(std::move(name)), fn_(std::move(fn)) {}

ScalarFunction ScalarFunction::power(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw PreconditionError("power exponent must be positive");
  std::ostringstream os;
  os << "t^" << r;
  return ScalarFunction(os.str(), [r](double t) { return t <= 0.0 ? 0.0 : std::pow(t, r); });
}

ScalarFunction ScalarFunction::exp_minus_one(double rate) {
  if (!(rate > 0.0)) throw PreconditionError("exp rate must be positive");
  std::ostringstream os;
  os << "exp(" << rate << "t)-1";
  return ScalarFunction(os.str(), [rate](double t) { return std::expm1(rate * t); });
}

ScalarFunction ScalarFunction::identity() {
  return ScalarFunction("t", [](double t) { return t; });
}

ScalarFunction ScalarFunction::interpolant(std::vector<std::pair<double, double>> samples) {
  if (samples.size() < 2) throw PreconditionError("interpolant needs at least two samples");
  if (samples.front().first != 0.0 || samples.front().second != 0.0) {
    throw PreconditionError("interpolant must start at (0, 0)");
  }
  for (std::size_t i = 1; i < samples.size(); ++i) {
    if (!(samples[i].first > samples[i - 1].first)) {
      throw PreconditionError("interpolant abscissae must be strictly increasing");
    }
    if (samples[i].second < samples[i - 1].second) {
      throw PreconditionError("interpolant values must be nondecreasing");
    }
  }
  auto fn = [s = std::move(samples)](double t) {
    if (t <= 0.0) return 0.0;
    auto it = std::upper_bound(s.begin(), s.end(), t,
                               [](double v, const std::pair<double, double>& p) { return v < p.first; });
    if (it == s.end()) it = s.end() - 1;  // extrapolate with the last segment
    const auto& hi = *it;
    const auto& lo = *(it - 1);
    const double slope = (hi.second - lo.second) / (hi.first - lo.first);
    return lo.second + slope * (t - lo.first);
  };
  return ScalarFunction("interpolant", std::move(fn));
}

bool ScalarFunction::is_admissible(double upper, int samples) const {
  if (fn_(0.0) != 0.0) return false;
  double prev = 0.0;
  for (int i = 1; i < samples; ++i) {
    const double t = upper * i / (samples - 1);
    const double v = fn_(t);
    if (!std::isfinite(v) || v < prev) return false;
    prev = v;
  }
  return true;
}

Operator functional_calculus(const Operator& h, const ScalarFunction& psi, const ToleranceConfig& tol) {
  const auto spec = eig_hermitian(h, tol);
  const double floor = -tol.threshold(spec.spectral_radius());
  if (spec.min_value() < floor) {
    std::ostringstream os;
    os << "functional_calculus: operator is not positive (min eigenvalue " << spec.min_value() << ")";
    throw PreconditionError(os.str());
  }
  return spec.assemble([&](double t) { return psi(std::max(t, 0.0)); });
}

Operator power_pos(const Operator& a, double r, const ToleranceConfig& tol) {
  return functional_calculus(a, ScalarFunction::power(r), tol);
}

Operator inverse_pos(const Operator& a, double inv_tol, const ToleranceConfig& tol) {
  const auto spec = eig_hermitian(a, tol);
  if (!(spec.min_value() > inv_tol)) {
    std::ostringstream os;
    os << "inverse_pos: min eigenvalue " << spec.min_value() << " is not above " << inv_tol;
    throw PreconditionError(os.str());
  }
  return spec.assemble([](double t) { return 1.0 / t; });
}

PolarDecomposition polar(const Operator& z) {
  const auto ranks = numerical_rank(z);
  std::vector<Matrix> w_blocks;
  std::vector<Matrix> mod_blocks;
  for (std::size_t k = 0; k < z.block_count(); ++k) {
    const Matrix& m = z.block(k);
    const Eigen::Index n = m.rows();
    const auto svd = jacobi_svd(m);
    Matrix w = Matrix::Zero(n, n);
    Matrix mod = Matrix::Zero(n, n);
    // the rank cut shapes the partial isometry only; |z| keeps every value
    for (Eigen::Index i = 0; i < n; ++i) {
      const Eigen::VectorXcd v = svd.right.col(i);
      if (i < ranks[k]) w += svd.left.col(i) * v.adjoint();
      mod += svd.values(i) * v * v.adjoint();
    }
    w_blocks.push_back(std::move(w));
    mod_blocks.push_back(0.5 * (mod + mod.adjoint()));
  }
  return {Operator(z.algebra(), std::move(w_blocks)), Operator(z.algebra(), std::move(mod_blocks))};
}

Operator abs_op(const Operator& z) { return polar(z).modulus; }

Operator spectral_projection(const Operator& h, double s, const ToleranceConfig& tol) {
  const auto spec = eig_hermitian(h, tol);
  const double cut = s + kEigTieTol * spec.spectral_radius();
  return spec.assemble([cut](double t) { return t > cut ? 1.0 : 0.0; });
}

Operator range_projection(const Operator& x) {
  const auto ranks = numerical_rank(x);
  std::vector<Matrix> blocks;
  for (std::size_t k = 0; k < x.block_count(); ++k) {
    const Matrix& m = x.block(k);
    const auto e = jacobi_eigen(m * m.adjoint());
    const Matrix u = e.vectors.leftCols(ranks[k]);
    Matrix p = u * u.adjoint();
    blocks.push_back(0.5 * (p + p.adjoint()));
  }
  return Operator(x.algebra(), std::move(blocks));
}

std::vector<int> projection_ranks(const Operator& e, const ToleranceConfig& tol) {
  if (!is_projection(e, tol)) throw PreconditionError("projection_ranks: input is not a projection");
  const auto spec = eig_hermitian(e, tol);
  std::vector<int> ranks;
  for (std::size_t k = 0; k < e.block_count(); ++k) {
    const auto& v = spec.values(k);
    ranks.push_back(static_cast<int>((v.array() > 0.5).count()));
  }
  return ranks;
}

bool mvn_equivalent(const Operator& e, const Operator& f, const ToleranceConfig& tol) {
  require_same_algebra(e, f);
  return projection_ranks(e, tol) == projection_ranks(f, tol);
}

}  // namespace snl

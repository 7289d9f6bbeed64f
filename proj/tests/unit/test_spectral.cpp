#include <doctest.h>

#include <cmath>
#include <random>

#include "../support/oracles.hpp"
#include "snl/errors.hpp"
#include "snl/inequalities.hpp"
#include "snl/spectral.hpp"

using namespace snl;

namespace {

Operator diag(std::initializer_list<double> e, double w = 1.0) {
  const std::vector<double> v(e);
  return Operator::diagonal(TracialAlgebra::factor(static_cast<int>(v.size()), w), v);
}

Operator single(const Matrix& m) { return Operator(TracialAlgebra::factor(static_cast<int>(m.rows())), {m}); }

Operator nilpotent() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  return single(m);
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("eig_hermitian examples") {
  CHECK(eig_hermitian(diag({3, 1})).eigenvalues() == std::vector<double>{3, 1});

  Matrix swap = Matrix::Zero(2, 2);
  swap(0, 1) = swap(1, 0) = 1.0;
  const auto e = eig_hermitian(single(swap)).eigenvalues();
  CHECK(e[0] == doctest::Approx(1.0));
  CHECK(e[1] == doctest::Approx(-1.0));

  const auto one = eig_hermitian(Operator::identity(TracialAlgebra::factor(4)));
  for (double v : one.eigenvalues()) CHECK(v == 1.0);
  const Matrix& vecs = one.vectors(0);
  CHECK((vecs.adjoint() * vecs - Matrix::Identity(4, 4)).norm() < 1e-14);

  CHECK_THROWS_AS(eig_hermitian(nilpotent()), PreconditionError);
}

TEST_CASE("jacobi agrees with Eigen on random and degenerate spectra") {
  std::mt19937_64 rng(2024);
  for (int n = 1; n <= 16; ++n) {
    for (int rep = 0; rep < 4; ++rep) {
      Matrix h;
      if (rep == 3) {
        // clustered spectrum: three distinct values repeated
        std::vector<double> ev;
        for (int i = 0; i < n; ++i) ev.push_back(static_cast<double>(i % 3) - 1.0);
        h = oracle::with_spectrum(rng, ev);
      } else {
        const Matrix z = oracle::gaussian(rng, n);
        h = (z + z.adjoint()) / 2.0;
      }
      const auto ours = jacobi_eigen(h);
      const auto ref = oracle::eigenvalues(h);
      const double scale = std::max(1.0, h.norm());
      for (int i = 0; i < n; ++i) CHECK(std::abs(ours.values(i) - ref[static_cast<std::size_t>(i)]) <= 1e-12 * scale);
      for (int i = 1; i < n; ++i) CHECK(ours.values(i - 1) >= ours.values(i));
      const Matrix& v = ours.vectors;
      CHECK((v.adjoint() * v - Matrix::Identity(n, n)).norm() <= 1e-12 * n);
      const Matrix rec = v * ours.values.cast<Complex>().asDiagonal() * v.adjoint();
      CHECK((rec - h).norm() <= 1e-12 * scale * n);
      CHECK(ours.sweeps <= 100);
    }
  }
}

TEST_CASE("decomposition invariants on multi-block operators") {
  std::mt19937_64 rng(5);
  const TracialAlgebra alg({{3, 1.0}, {2, 0.5}, {4, 2.0}});
  const ToleranceConfig tol;
  for (int i = 0; i < 20; ++i) {
    const auto z = oracle::random_general(rng, alg);
    const auto h = hermitian_part(z);
    const auto d = eig_hermitian(h);
    CHECK(norm(d.reconstruct() - h) <= tol.rel_tol * norm(h));
    const auto& pairs = d.pairs();
    CHECK(pairs.size() == 9);
    for (std::size_t k = 1; k < pairs.size(); ++k) CHECK(pairs[k - 1].value >= pairs[k].value);
    for (std::size_t k = 0; k < alg.block_count(); ++k) {
      const Matrix& v = d.vectors(k);
      CHECK((v.adjoint() * v - Matrix::Identity(v.cols(), v.cols())).norm() <= 1e-12);
    }
  }
}

TEST_CASE("ties keep block then column order") {
  const TracialAlgebra alg({{2, 1.0}, {2, 1.0}});
  const double e[] = {1.0, 1.0, 1.0, 0.5};
  const auto d = eig_hermitian(Operator::diagonal(alg, e));
  const auto& p = d.pairs();
  REQUIRE(p.size() == 4);
  CHECK(p[0].block == 0);
  CHECK(p[0].column == 0);
  CHECK(p[1].block == 0);
  CHECK(p[1].column == 1);
  CHECK(p[2].block == 1);
  CHECK(p[2].column == 0);
  CHECK(p[3].value == 0.5);
}

TEST_CASE("functional calculus examples") {
  std::mt19937_64 rng(9);
  const auto h = oracle::random_positive(rng, TracialAlgebra::factor(4));
  CHECK(approx_equal(functional_calculus(h, ScalarFunction::identity()), h));
  CHECK(approx_equal(functional_calculus(diag({4, 1}), ScalarFunction::power(0.5)), diag({2, 1})));
  CHECK(approx_equal(functional_calculus(diag({4, 1}), ScalarFunction::power(3)), diag({64, 1})));
  CHECK_THROWS_AS(functional_calculus(diag({1, -1}), ScalarFunction::power(2)), PreconditionError);

  // against Eigen
  for (double r : {0.3, 0.5, 1.7, 3.0}) {
    const auto ours = power_pos(h, r);
    const Matrix ref = oracle::matrix_function(h.block(0), [r](double t) { return std::pow(t, r); });
    CHECK((ours.block(0) - ref).norm() <= 1e-10 * ref.norm());
  }
}

TEST_CASE("scalar functions") {
  CHECK(ScalarFunction::power(2).is_admissible(10));
  CHECK(ScalarFunction::exp_minus_one(0.5).is_admissible(10));
  CHECK(ScalarFunction::exp_minus_one()(0.0) == 0.0);
  const auto lin = ScalarFunction::interpolant({{0, 0}, {1, 2}, {3, 3}});
  CHECK(lin(0.5) == doctest::Approx(1.0));
  CHECK(lin(2.0) == doctest::Approx(2.5));
  CHECK(lin(5.0) == doctest::Approx(4.0));
  CHECK(lin.is_admissible(5));
  CHECK_THROWS_AS(ScalarFunction::interpolant({{1, 1}, {2, 2}}), PreconditionError);
  CHECK_THROWS_AS(ScalarFunction::power(0.0), PreconditionError);
  const ScalarFunction shifted("shifted", [](double t) { return t + 1; });
  CHECK_FALSE(shifted.is_admissible(1));
  const ScalarFunction dec("decreasing", [](double t) { return -t; });
  CHECK_FALSE(dec.is_admissible(1));
}

TEST_CASE("power_pos examples") {
  const auto one = Operator::identity(TracialAlgebra::factor(3));
  for (double r : {0.25, 1.0, 2.5}) CHECK(approx_equal(power_pos(one, r), one));
  CHECK(approx_equal(power_pos(diag({4, 1}), 1.5), diag({8, 1})));
  const auto half = power_pos(diag({4, 0}), 0.5);
  CHECK(approx_equal(half, diag({2, 0})));
  CHECK(half.block(0)(1, 1) == Complex(0, 0));
  CHECK_THROWS_AS(power_pos(diag({1, 1}), -1.0), PreconditionError);
}

TEST_CASE("abs_op examples") {
  std::mt19937_64 rng(21);
  const auto a = oracle::random_positive(rng, TracialAlgebra::factor(3));
  CHECK(approx_equal(abs_op(a), a));
  CHECK(approx_equal(abs_op(nilpotent()), diag({0, 1})));
  const auto u = single(oracle::unitary(rng, 4));
  CHECK(approx_equal(abs_op(u), Operator::identity(u.algebra())));
  // against sqrt(z* z) from Eigen
  const auto z = oracle::random_general(rng, TracialAlgebra({{3, 1.0}, {2, 2.0}}));
  const auto ref = oracle::apply(z, [](const Matrix& m) {
    return oracle::matrix_function(m.adjoint() * m, [](double t) { return std::sqrt(t); });
  });
  CHECK(norm(abs_op(z) - ref) <= 1e-10 * norm(ref));
}

TEST_CASE("polar examples") {
  const auto zero = Operator::zero(TracialAlgebra::factor(2));
  const auto pz = polar(zero);
  CHECK(norm(pz.partial_isometry) == 0.0);
  CHECK(norm(pz.modulus) == 0.0);

  std::mt19937_64 rng(4);
  const auto u = single(oracle::unitary(rng, 3));
  const auto pu = polar(u);
  CHECK(approx_equal(pu.partial_isometry, u));
  CHECK(approx_equal(pu.modulus, Operator::identity(u.algebra())));

  const auto pn = polar(nilpotent());
  CHECK(approx_equal(pn.modulus, diag({0, 1})));
  CHECK(approx_equal(pn.partial_isometry, nilpotent()));
}

TEST_CASE("one-sided svd keeps graded singular values") {
  std::mt19937_64 rng(41);
  for (int n : {1, 2, 5, 9}) {
    const Matrix u = oracle::unitary(rng, n);
    const Matrix v = oracle::unitary(rng, n);
    Eigen::VectorXd s(n);
    for (int i = 0; i < n; ++i) s(i) = std::pow(1e-3, i);  // down to 1e-24
    const Matrix m = u * s.cast<Complex>().asDiagonal() * v.adjoint();
    const auto svd = jacobi_svd(m);
    for (int i = 0; i < n; ++i) {
      // relative accuracy, far below what sqrt(eig(m* m)) can give
      CHECK(std::abs(svd.values(i) - s(i)) <= 1e-12 * s(i) + 1e-15);
    }
    const Matrix back = svd.left * svd.values.cast<Complex>().asDiagonal() * svd.right.adjoint();
    CHECK((back - m).norm() <= 1e-13);
    CHECK((svd.right.adjoint() * svd.right - Matrix::Identity(n, n)).norm() <= 1e-13);
  }

  const Matrix g = oracle::gaussian(rng, 7);
  const auto got = jacobi_svd(g).values;
  const auto want = oracle::singular_values(g);
  for (int i = 0; i < 7; ++i) CHECK(got(i) == doctest::Approx(want[static_cast<std::size_t>(i)]).epsilon(1e-12));

  Matrix low = oracle::gaussian(rng, 6).leftCols(2) * oracle::gaussian(rng, 6).topRows(2);
  const auto lr = jacobi_svd(low);
  CHECK(lr.values(2) <= 1e-14 * lr.values(0));
  CHECK((lr.left.leftCols(2) * lr.values.head(2).cast<Complex>().asDiagonal() * lr.right.leftCols(2).adjoint() - low)
            .norm() <= 1e-12 * low.norm());
}

TEST_CASE("abs_power on a wide dynamic range") {
  std::mt19937_64 rng(43);
  const Matrix u = oracle::unitary(rng, 4);
  const Matrix w = oracle::unitary(rng, 4);
  const std::vector<double> s = {40.0, 3.0, 1e-2, 1e-5};
  Eigen::VectorXcd d(4), dq(4);
  const double r = 10.0 / 9.0;
  for (int i = 0; i < 4; ++i) {
    d(i) = std::pow(s[static_cast<std::size_t>(i)], 9.0);
    dq(i) = std::pow(s[static_cast<std::size_t>(i)], 10.0);
  }
  const Operator y = single(w * d.asDiagonal() * u.adjoint());
  const Matrix want = u * dq.asDiagonal() * u.adjoint();
  const Matrix got = abs_power(y, r).block(0);
  // absolute error relative to ||y||^r
  CHECK((got - want).norm() <= 1e-12 * std::pow(40.0, 10.0));
}

TEST_CASE("polar invariants on random and rank-deficient operators") {
  std::mt19937_64 rng(31);
  const ToleranceConfig tol;
  const TracialAlgebra alg({{4, 1.0}, {3, 0.5}});
  for (int i = 0; i < 30; ++i) {
    auto z = oracle::random_general(rng, alg);
    if (i % 3 == 0) {
      // force rank deficiency
      std::vector<Matrix> b = z.blocks();
      b[0].col(1) = b[0].col(0) * Complex(0.5, -1.0);
      b[1].row(2).setZero();
      z = Operator(alg, b);
    }
    const auto p = polar(z);
    const auto& w = p.partial_isometry;
    CHECK(norm(z - w * p.modulus) <= 1e-9 * norm(z));
    CHECK(norm(adjoint(w) * w - range_projection(p.modulus)) <= 1e-9);
    CHECK(norm(w) <= 1 + 1e-9);
    CHECK(is_positive(p.modulus, tol));
  }
}

TEST_CASE("spectral projections") {
  const auto h = diag({3, 1});
  CHECK(approx_equal(spectral_projection(h, 2), diag({1, 0})));
  CHECK(approx_equal(spectral_projection(h, 0), diag({1, 1})));
  CHECK(norm(spectral_projection(h, 5)) == 0.0);
  // open interval: the eigenvalue 1 sits on the cut and is excluded
  CHECK(approx_equal(spectral_projection(h, 1.0), diag({1, 0})));
  CHECK(approx_equal(spectral_projection(h, 1.0 - 1e-13), diag({1, 0})));
  CHECK(approx_equal(spectral_projection(h, 1.0 - 1e-6), diag({1, 1})));
}

TEST_CASE("range projections") {
  std::mt19937_64 rng(8);
  const auto x = single(oracle::gaussian(rng, 4));
  CHECK(approx_equal(range_projection(x), Operator::identity(x.algebra())));
  CHECK(norm(range_projection(Operator::zero(TracialAlgebra::factor(3)))) == 0.0);
  CHECK(approx_equal(range_projection(nilpotent()), diag({1, 0})));
  CHECK(is_projection(range_projection(hermitian_part(x))));
}

TEST_CASE("Murray-von Neumann equivalence") {
  const auto e = diag({1, 0});
  CHECK(mvn_equivalent(e, e));
  CHECK(mvn_equivalent(diag({1, 0}), diag({0, 1})));
  CHECK_FALSE(mvn_equivalent(diag({1, 0, 0}), diag({1, 1, 0})));
  const TracialAlgebra alg({{2, 1.0}, {2, 1.0}});
  const double a[] = {1, 0, 0, 0};
  const double b[] = {0, 0, 1, 0};
  // same trace, different blocks
  CHECK_FALSE(mvn_equivalent(Operator::diagonal(alg, a), Operator::diagonal(alg, b)));
  CHECK_THROWS_AS(mvn_equivalent(diag({0.5, 0}), e), PreconditionError);
}

TEST_CASE("polar identity |xy*| = w ||x||y|| w*") {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 40; ++i) {
    const TracialAlgebra alg({{1 + i % 5, 1.0}, {2, 0.3}});
    const auto x = oracle::random_general(rng, alg);
    const auto y = oracle::random_general(rng, alg);
    CHECK(check_polar_identity(x, y).passed);
  }
}

TEST_CASE("compression-lemma equivalence construction") {
  // for invertible b and a projection e, v = polar(b^{-1} e) links R[e b^{-1}] and R[b^{-1} e]
  std::mt19937_64 rng(13);
  for (int n = 2; n <= 6; ++n) {
    const TracialAlgebra alg = TracialAlgebra::factor(n);
    const auto b = oracle::random_positive(rng, alg) + 0.1 * Operator::identity(alg);
    const auto binv = inverse_pos(b, 1e-8 * norm(b));
    CHECK(norm(binv * b - Operator::identity(alg)) <= 1e-9);
    const Matrix z = oracle::gaussian(rng, n);
    const auto e = spectral_projection(single((z + z.adjoint()) / 2.0), 0.0);
    const auto v = polar(binv * e).partial_isometry;
    CHECK(norm(adjoint(v) * v - range_projection(e * binv)) <= 1e-8);
    CHECK(norm(v * adjoint(v) - range_projection(binv * e)) <= 1e-8);
    CHECK(mvn_equivalent(e, range_projection(binv * e)));
  }
}

TEST_CASE("numerical rank and singular values") {
  CHECK(numerical_rank(nilpotent()) == std::vector<int>{1});
  CHECK(numerical_rank(Operator::zero(TracialAlgebra::factor(3))) == std::vector<int>{0});
  std::mt19937_64 rng(1);
  const auto z = oracle::random_general(rng, TracialAlgebra({{5, 1.0}, {3, 1.0}}));
  const auto sv = singular_values(z);
  for (std::size_t k = 0; k < 2; ++k) {
    const auto ref = oracle::singular_values(z.block(k));
    for (std::size_t i = 0; i < ref.size(); ++i) CHECK(std::abs(sv[k](static_cast<Eigen::Index>(i)) - ref[i]) <= 1e-12 * ref[0]);
  }
}

}  // TEST_SUITE

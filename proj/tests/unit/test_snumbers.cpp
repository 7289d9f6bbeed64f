#include <doctest.h>

#include <cmath>
#include <random>

#include "../support/oracles.hpp"
#include "snl/errors.hpp"
#include "snl/random.hpp"
#include "snl/snumbers.hpp"
#include "snl/spectral.hpp"

using namespace snl;

namespace {

Operator diag(std::initializer_list<double> e, double w = 1.0) {
  const std::vector<double> v(e);
  return Operator::diagonal(TracialAlgebra::factor(static_cast<int>(v.size()), w), v);
}

// mu agrees with the sorted-SVD oracle at every checkpoint and at every breakpoint.
void check_against_oracle(const Operator& z) {
  const auto f = mu(z);
  const double scale = std::max(1.0, norm(z));
  for (double t : checkpoints(f, f)) CHECK(std::abs(f.eval(t) - oracle::mu_at(z, t)) <= 1e-11 * scale);
  CHECK(f.support() <= z.algebra().total_trace() * (1 + 1e-12));
}

}  // namespace

TEST_SUITE("snumbers") {

TEST_CASE("mu examples") {
  const auto f = mu(diag({3, 1}));
  CHECK(f.breakpoints() == std::vector<double>{0, 1, 2});
  CHECK(f.values() == std::vector<double>{3, 1});

  const auto g = mu(diag({1, 0}));
  CHECK(g.breakpoints() == std::vector<double>{0, 1});
  CHECK(g.values() == std::vector<double>{1});

  const TracialAlgebra two({{1, 0.5}, {1, 1.5}});
  const double e[] = {2.0, 1.0};
  const auto h = mu(Operator::diagonal(two, e));
  CHECK(h.breakpoints() == std::vector<double>{0, 0.5, 2.0});
  CHECK(h.values() == std::vector<double>{2, 1});

  CHECK(mu(Operator::zero(TracialAlgebra::factor(3))).is_zero());
  // equal values in different blocks share one step
  const TracialAlgebra ab({{1, 1.0}, {2, 0.5}});
  const double same[] = {2.0, 2.0, 1.0};
  const auto m = mu(Operator::diagonal(ab, same));
  CHECK(m.breakpoints() == std::vector<double>{0, 1.5, 2.0});
}

TEST_CASE("mu evaluation facts") {
  std::mt19937_64 rng(17);
  const auto h = oracle::random_positive(rng, TracialAlgebra::factor(5));
  CHECK(mu(h).eval(0) == doctest::Approx(norm(h)).epsilon(1e-14));
  CHECK(mu(h).eval(5) == 0);
  CHECK(mu(diag({3, 1})).integrate() == doctest::Approx(4.0));
}

TEST_CASE("mu against SVD oracle") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 60; ++i) {
    const TracialAlgebra alg({{1 + i % 6, 1.0 + 0.25 * (i % 3)}, {2, 0.5}, {1 + i % 4, 3.0}});
    check_against_oracle(oracle::random_general(rng, alg));
  }
  // rank-deficient and nilpotent
  Matrix n = Matrix::Zero(3, 3);
  n(0, 1) = 2.0;
  n(1, 2) = 1.0;
  check_against_oracle(Operator(TracialAlgebra::factor(3), {n}));
}

TEST_CASE("mu_z = mu_{z*} = mu_{|z|} and mu_{|xy*|} = mu_{|yx*|}") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 40; ++i) {
    const TracialAlgebra alg({{2 + i % 4, 1.0}, {3, 0.7}});
    const auto z = oracle::random_general(rng, alg);
    const auto f = mu(z);
    const auto scale = norm(z);
    CHECK(sup_distance(f, mu(adjoint(z))) <= 1e-11 * scale);
    CHECK(sup_distance(f, mu(abs_op(z))) <= 1e-10 * scale);
    const auto x = oracle::random_general(rng, alg);
    const auto y = oracle::random_general(rng, alg);
    CHECK(sup_distance(mu(abs_op(x * adjoint(y))), mu(abs_op(y * adjoint(x)))) <= 1e-10 * norm(x) * norm(y));
  }
}

TEST_CASE("mu_{w1 z w2} <= ||w1|| ||w2|| mu_z") {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 50; ++i) {
    const TracialAlgebra alg({{3, 1.0}, {2, 2.0}});
    const auto z = oracle::random_general(rng, alg);
    const auto w1 = oracle::random_general(rng, alg);
    const auto w2 = oracle::random_general(rng, alg);
    const auto lhs = mu(w1 * z * w2);
    const auto rhs = mu(z).scaled(norm(w1) * norm(w2));
    for (double t : checkpoints(lhs, rhs)) CHECK(lhs.eval(t) <= rhs.eval(t) + 1e-9 * rhs.sup());
  }
}

TEST_CASE("lambda_fn") {
  const auto one = Operator::identity(TracialAlgebra::factor(3));
  for (double s : {0.1, 1.0, 2.9}) CHECK(lambda_fn(one, s) == doctest::Approx(1.0));
  const double e = std::exp(1.0);
  for (double s : {0.5, 1.0, 1.5}) CHECK(lambda_fn(diag({e, e}), s) == doctest::Approx(std::exp(s)));
  CHECK(lambda_fn(diag({1, 0}), 1.5) == 0.0);
  CHECK(lambda_fn(diag({1, 0}), 0.5) == doctest::Approx(1.0));
  CHECK_THROWS_AS((void)lambda_fn(one, 0.0), PreconditionError);
  CHECK_THROWS_AS((void)lambda_fn(one, 3.0), PreconditionError);
  CHECK_THROWS_AS((void)lambda_fn(diag({1, -1}), 1.0), PreconditionError);
  // diag(4, 1): log-integral over [0, 1.5] is log 4 + 0.5 log 1
  CHECK(lambda_fn(diag({4, 1}), 1.5) == doctest::Approx(4.0));
  CHECK(log_integral_exp(mu(diag({4, 2})), 2.0) == doctest::Approx(8.0));
}

TEST_CASE("mu_distance_bound") {
  std::mt19937_64 rng(12);
  const auto z = oracle::random_general(rng, TracialAlgebra::factor(3));
  const auto same = mu_distance_bound(z, z);
  CHECK(same.passed);
  CHECK(same.details.at("sup_difference") == 0.0);

  const auto a = oracle::random_positive(rng, TracialAlgebra::factor(4));
  const double eps = 0.125;
  const auto shifted = mu_distance_bound(a, a + eps * Operator::identity(a.algebra()));
  CHECK(shifted.passed);
  CHECK(shifted.details.at("sup_difference") == doctest::Approx(eps).epsilon(1e-12));

  for (int i = 0; i < 30; ++i) {
    const auto x = oracle::random_general(rng, TracialAlgebra::factor(3));
    const auto y = oracle::random_general(rng, TracialAlgebra::factor(3));
    CHECK(mu_distance_bound(x, y).passed);
  }
}

TEST_CASE("trace integral identity against SVD oracle") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    const auto z = oracle::random_general(rng, TracialAlgebra({{1 + i % 6, 0.5}, {2, 1.0}}));
    const auto r = check_trace_integral(z);
    CHECK(r.passed);
    const double ref = oracle::trace_abs(z);
    CHECK(std::abs(mu(z).integrate() - ref) <= 1e-10 * ref);
  }
}

TEST_CASE("projection s-numbers are an exact indicator") {
  for (std::uint64_t t = 0; t < 30; ++t) {
    const TracialAlgebra alg({{2 + static_cast<int>(t % 5), 1.0}, {3, 0.5}});
    const auto f = gen_operator(1, t, 0, alg, OperatorKind::projection);
    const auto r = check_projection_snumbers(f);
    CHECK(r.passed);
    const auto m = mu(f);
    if (!m.is_zero()) {
      CHECK(m.steps() == 1);
      CHECK(std::abs(m.values()[0] - 1.0) <= 1e-12);
      CHECK(std::abs(m.support() - trace(f).real()) <= 1e-12 * alg.total_trace());
    }
  }
  CHECK_THROWS_AS(check_projection_snumbers(diag({0.5, 0})), PreconditionError);
}

TEST_CASE("functional calculus commutes with mu") {
  std::mt19937_64 rng(55);
  for (int i = 0; i < 30; ++i) {
    const auto h = oracle::random_positive(rng, TracialAlgebra({{3, 1.0}, {2, 0.5}}));
    for (double r : {0.5, 2.0, 3.0}) CHECK(check_functional_calculus(h, r).passed);
  }
}

}  // TEST_SUITE

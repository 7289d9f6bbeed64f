#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "snl/errors.hpp"
#include "snl/inequalities.hpp"
#include "snl/majorization.hpp"
#include "snl/snumbers.hpp"
#include "snl/spectral.hpp"

using namespace snl;

namespace {

Operator diag(std::initializer_list<double> e) {
  const std::vector<double> v(e);
  return Operator::diagonal(TracialAlgebra::factor(static_cast<int>(v.size())), v);
}

StepFunction random_step(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  std::vector<std::pair<double, double>> atoms;
  for (int i = 0; i < 4; ++i) atoms.emplace_back(u(rng), u(rng));
  return StepFunction::from_atoms(atoms);
}

}  // namespace

TEST_SUITE("majorization") {

TEST_CASE("weak_majorize examples") {
  const auto f = StepFunction::indicator(2, 1);
  const auto g = StepFunction::indicator(1, 2);
  CHECK(weak_majorize(f, f));
  CHECK(weak_majorize(f, g));
  CHECK_FALSE(weak_majorize(g, f));
  CHECK(majorization_margin(g, f) == doctest::Approx(-1.0));
  CHECK(weak_majorize(StepFunction(), f));
  CHECK_FALSE(weak_majorize(f, StepFunction()));
}

TEST_CASE("weak_majorize is reflexive and transitive on random triples") {
  std::mt19937_64 rng(123);
  int chains = 0;
  for (int i = 0; i < 2000; ++i) {
    const auto f = random_step(rng);
    const auto g = random_step(rng);
    const auto h = random_step(rng);
    CHECK(weak_majorize(f, f));
    if (weak_majorize(f, g) && weak_majorize(g, h)) {
      ++chains;
      CHECK(weak_majorize(f, h));
    }
  }
  CHECK(chains > 50);
}

TEST_CASE("submajorization mu(xy) <_w mu(x) mu(y)") {
  std::mt19937_64 rng(4);
  const auto x = oracle::random_general(rng, TracialAlgebra::factor(3));
  const auto one = Operator::identity(x.algebra());
  const auto r = check_submajorization(x, one);
  CHECK(r.passed);
  CHECK(r.details.at("lhs_total") == doctest::Approx(r.details.at("rhs_total")));
  const auto eq = check_submajorization(diag({3, 2, 1}), diag({5, 4, 0.5}));
  CHECK(eq.passed);
  CHECK(eq.worst_margin == doctest::Approx(0.0));
  for (int i = 0; i < 100; ++i) {
    const TracialAlgebra alg({{4, 1.0}, {2, 0.5}});
    CHECK(check_submajorization(oracle::random_general(rng, alg), oracle::random_general(rng, alg)).passed);
  }
}

TEST_CASE("spectral_preorder examples") {
  const auto a = diag({1, 0});
  CHECK(spectral_preorder(a, a));
  CHECK(spectral_preorder(diag({1, 0}), diag({2, 1})));
  CHECK_FALSE(spectral_preorder(diag({2, 2}), diag({3, 0})));
  CHECK(spectral_preorder(Operator::zero(TracialAlgebra::factor(2)), diag({1, 0})));
  CHECK_THROWS_AS((void)spectral_preorder(diag({1, -1}), diag({1, 1})), PreconditionError);
  const TracialAlgebra two({{1, 1.0}, {1, 1.0}});
  const double e[] = {1.0, 1.0};
  CHECK_THROWS_AS((void)spectral_preorder(Operator::diagonal(two, e), Operator::diagonal(two, e)), PreconditionError);
}

TEST_CASE("preorder agrees with pointwise s-number domination") {
  std::mt19937_64 rng(66);
  int dominated = 0;
  for (int i = 0; i < 300; ++i) {
    const auto alg = TracialAlgebra::factor(2 + i % 4);
    const auto a = oracle::random_positive(rng, alg);
    auto b = oracle::random_positive(rng, alg);
    if (i % 2 == 0) b = b + a;  // b >= a, so mu_a <= mu_b
    const auto ma = mu(a);
    const auto mb = mu(b);
    bool pointwise = true;
    for (double t : checkpoints(ma, mb)) pointwise = pointwise && ma.eval(t) <= mb.eval(t) + 1e-12;
    if (pointwise) {
      ++dominated;
      CHECK(spectral_preorder(a, b));
    } else {
      CHECK_FALSE(spectral_preorder(a, b));
    }
  }
  CHECK(dominated >= 150);
}

TEST_CASE("young preorder on random factors") {
  std::mt19937_64 rng(71);
  for (int i = 0; i < 60; ++i) {
    const auto alg = TracialAlgebra::factor(2 + i % 5);
    const auto x = oracle::random_general(rng, alg);
    const auto y = oracle::random_general(rng, alg);
    for (double p : {1.1, 2.0, 10.0}) CHECK(check_young_preorder(x, y, ConjugatePair::from_p(p)).passed);
  }
}

TEST_CASE("doubly stochastic correction") {
  const auto pq = ConjugatePair::from_p(2);
  const auto d = diag({3, 2, 1});
  const auto c = doubly_stochastic_correction(d, d, pq);
  CHECK(c.report.passed);
  CHECK(approx_equal(abs_op(c.unitary), Operator::identity(d.algebra())));
  // sorted commuting diagonal: U is diagonal (phases only)
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) CHECK(std::abs(c.unitary.block(0)(i, j)) < 1e-12);

  const auto one = Operator::identity(TracialAlgebra::factor(3));
  const auto ci = doubly_stochastic_correction(one, one, pq);
  CHECK(ci.report.passed);
  CHECK(ci.report.details.at("unitarity_defect") <= 1e-12);
  CHECK(std::abs(ci.report.worst_margin) <= 1e-12);

  std::mt19937_64 rng(72);
  for (int i = 0; i < 100; ++i) {
    const auto alg = TracialAlgebra::factor(4);
    const auto x = oracle::random_general(rng, alg);
    const auto y = oracle::random_general(rng, alg);
    const auto r = doubly_stochastic_correction(x, y, ConjugatePair::from_p(1.5 + i % 3)).report;
    CHECK(r.passed);
    CHECK(r.details.at("unitarity_defect") <= 1e-9);
    CHECK(r.details.at("cond:trace_preserved") == 1.0);
  }
  const TracialAlgebra two({{1, 1.0}, {1, 1.0}});
  const double e[] = {1.0, 1.0};
  CHECK_THROWS_AS((void)doubly_stochastic_correction(Operator::diagonal(two, e), Operator::diagonal(two, e), pq),
                  PreconditionError);
}

TEST_CASE("log majorization") {
  std::mt19937_64 rng(73);
  const auto a = oracle::random_positive(rng, TracialAlgebra::factor(4));
  const auto eq = check_log_majorization(a, Operator::identity(a.algebra()));
  CHECK(eq.passed);
  CHECK(std::abs(eq.worst_margin) <= 1e-9 * eq.details.at("scale"));
  const auto aligned = check_log_majorization(diag({3, 2, 1}), diag({4, 1, 0.5}));
  CHECK(aligned.passed);
  CHECK(std::abs(aligned.worst_margin) <= 1e-12 * aligned.details.at("scale"));
  for (int i = 0; i < 100; ++i) {
    const TracialAlgebra alg({{3, 1.0}, {2, 0.5}});
    CHECK(check_log_majorization(oracle::random_positive(rng, alg), oracle::random_positive(rng, alg)).passed);
  }
  CHECK_THROWS_AS((void)check_log_majorization(diag({1, -1}), diag({1, 1})), PreconditionError);
}

TEST_CASE("young in s-numbers implies the weak majorization corollary") {
  std::mt19937_64 rng(74);
  for (int i = 0; i < 100; ++i) {
    const TracialAlgebra alg({{3, 1.0}, {2, 2.0}});
    const auto x = oracle::random_general(rng, alg);
    const auto y = oracle::random_general(rng, alg);
    const auto pq = ConjugatePair::from_p(1.2 + 0.3 * (i % 10));
    if (check_young_sv(x, y, pq).passed) {
      CHECK(weak_majorize(mu(abs_op(x * adjoint(y))), mu(young_rhs(x, y, pq))));
    }
  }
}

}  // TEST_SUITE

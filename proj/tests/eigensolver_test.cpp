#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "doctest.h"
#include "distsl/distance.hpp"
#include "distsl/eigensolver.hpp"
#include "distsl/errors.hpp"
#include "support.hpp"

using namespace distsl;

namespace {

Matrix random_symmetric(std::mt19937_64& rng, std::size_t n, bool nonnegative) {
  std::uniform_real_distribution<double> dist(nonnegative ? 0.0 : -1.0, 1.0);
  Matrix m(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = dist(rng);
  }
  return m;
}

Eigen::VectorXd eigen_oracle(const Matrix& m) {
  const auto n = static_cast<Eigen::Index>(m.order());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m(i, j);
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().reverse();
}

}  // namespace

TEST_CASE("Jacobi agrees with Eigen") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = testing::uniform_int(rng, 1, 30);
    const Matrix m = random_symmetric(rng, n, false);
    const auto ours = full_spectrum(m).eigenvalues;
    const auto ref = eigen_oracle(m);
    REQUIRE(ours.size() == n);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ours[i] - ref(i)) < 1e-9);
  }
}

TEST_CASE("Q spectra agree with Eigen") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const Graph g = testing::random_connected_graph(rng, testing::uniform_int(rng, 2, 40), 0.1);
    const Matrix q = dsl_matrix(g).to_real();
    const auto ours = full_spectrum(q).eigenvalues;
    const auto ref = eigen_oracle(q);
    for (std::size_t i = 0; i < ours.size(); ++i) CHECK(std::abs(ours[i] - ref(i)) < 1e-8);
  }
}

TEST_CASE("power iteration agrees with Jacobi above the full-diagonalization limit") {
  std::mt19937_64 rng(5);
  for (int n : {65, 80, 100, 130}) {
    const Graph g = testing::random_connected_graph(rng, n, 0.05);
    const Matrix q = dsl_matrix(g).to_real();
    const double power = spectral_radius(q, kDefaultTolerance, EigenMethod::power);
    const double jacobi = spectral_radius(q, kDefaultTolerance, EigenMethod::jacobi);
    const double automatic = spectral_radius(q);
    CHECK(std::abs(power - jacobi) < 1e-7);
    CHECK(automatic == power);
    CHECK(std::abs(jacobi - eigen_oracle(q)(0)) < 1e-8);
  }
  CHECK(std::abs(eta(make_named(NamedGraph::complete, 100)) - 198.0) < 1e-8);
}

TEST_CASE("power iteration on nonnegative matrices") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 10; ++t) {
    const Matrix m = random_symmetric(rng, 70, true);
    CHECK(std::abs(spectral_radius(m, 1e-12, EigenMethod::power) - eigen_oracle(m)(0)) < 1e-7);
  }
}

TEST_CASE("eigensolver input validation") {
  Matrix m(2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(spectral_radius(m), InvalidMatrix);
  CHECK_THROWS_AS(full_spectrum(m), InvalidMatrix);
  CHECK_THROWS_AS(spectral_radius(Matrix()), InvalidMatrix);
  CHECK_THROWS_AS(Matrix(2, {1.0, 2.0}), InvalidMatrix);
  Matrix ok(2);
  CHECK_THROWS_AS(spectral_radius(ok, 0.0), InvalidParameter);
}

TEST_CASE("trivial matrices") {
  Matrix one(1);
  one(0, 0) = 5.0;
  CHECK(spectral_radius(one) == 5.0);
  Matrix diag(3);
  diag(0, 0) = 1.0;
  diag(1, 1) = 3.0;
  diag(2, 2) = 2.0;
  CHECK(full_spectrum(diag).eigenvalues == std::vector<double>{3.0, 2.0, 1.0});
}

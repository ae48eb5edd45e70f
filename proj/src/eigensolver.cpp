#include "distsl/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "distsl/errors.hpp"

namespace distsl {
namespace {

constexpr int kMaxJacobiSweeps = 100;
constexpr long kMaxPowerIterations = 1'000'000;

void require_symmetric(const Matrix& m) {
  if (m.order() == 0) throw InvalidMatrix("matrix has order 0");
  const double asym = m.max_asymmetry();
  if (asym > kAsymmetryLimit) {
    throw InvalidMatrix("matrix is not symmetric (max asymmetry " +
                        std::to_string(asym) + ")");
  }
}

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.order(); ++i) {
    for (std::size_t j = 0; j < a.order(); ++j) {
      if (i != j) sum += a(i, j) * a(i, j);
    }
  }
  return std::sqrt(sum);
}

// Cyclic Jacobi. Each eigenvalue ends within the final off-diagonal
// Frobenius norm of the exact value (Weyl), so sweeping until that norm is
// below the target bounds the error.
std::vector<double> jacobi_eigenvalues(Matrix a, double tol) {
  const std::size_t n = a.order();
  const double target =
      std::max(0.01 * tol, 8.0 * std::numeric_limits<double>::epsilon() *
                               a.frobenius_norm());
  for (int sweep = 0; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= target) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = std::copysign(1.0, theta) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

// Power iteration from the all-ones vector. The matrix is shifted by the
// Gershgorin lower bound when that bound is negative so the top eigenvalue
// dominates in modulus.
double power_iteration_radius(const Matrix& a, double tol) {
  const std::size_t n = a.order();
  double lower = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    double off = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) off += std::abs(a(i, j));
    }
    lower = std::min(lower, a(i, i) - off);
  }
  const double shift = lower < 0.0 ? -lower : 0.0;
  const double residual_limit = std::sqrt(tol) * a.frobenius_norm();

  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> ax(n);
  double previous = std::numeric_limits<double>::infinity();
  for (long iter = 0; iter < kMaxPowerIterations; ++iter) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * x[j];
      ax[i] = acc;
    }
    double rayleigh = 0.0;
    for (std::size_t i = 0; i < n; ++i) rayleigh += x[i] * ax[i];
    double residual = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double r = ax[i] - rayleigh * x[i];
      residual += r * r;
    }
    residual = std::sqrt(residual);
    if (std::abs(rayleigh - previous) < tol && residual < residual_limit) {
      return rayleigh;
    }
    previous = rayleigh;
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      ax[i] += shift * x[i];
      norm += ax[i] * ax[i];
    }
    norm = std::sqrt(norm);
    if (norm == 0.0) return 0.0;
    for (std::size_t i = 0; i < n; ++i) x[i] = ax[i] / norm;
  }
  throw Error("power iteration did not converge");
}

}  // namespace

Matrix::Matrix(std::size_t n, std::vector<double> row_major)
    : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n) {
    throw InvalidMatrix("expected " + std::to_string(n * n) + " entries, got " +
                        std::to_string(data_.size()));
  }
}

double Matrix::row_sum(std::size_t i) const {
  double sum = 0.0;
  for (std::size_t j = 0; j < n_; ++j) sum += (*this)(i, j);
  return sum;
}

double Matrix::trace() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < n_; ++i) sum += (*this)(i, i);
  return sum;
}

double Matrix::max_asymmetry() const {
  double worst = 0.0;
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    }
  }
  return worst;
}

double Matrix::frobenius_norm() const {
  double sum = 0.0;
  for (double v : data_) sum += v * v;
  return std::sqrt(sum);
}

double spectral_radius(const Matrix& m, double tol, EigenMethod method) {
  if (!(tol > 0.0)) throw InvalidParameter("tolerance must be positive");
  require_symmetric(m);
  if (method == EigenMethod::automatic) {
    method = m.order() <= kFullDiagonalizationLimit ? EigenMethod::jacobi
                                                    : EigenMethod::power;
  }
  if (method == EigenMethod::power) return power_iteration_radius(m, tol);
  return jacobi_eigenvalues(m, tol).front();
}

Spectrum full_spectrum(const Matrix& m, double tol) {
  if (!(tol > 0.0)) throw InvalidParameter("tolerance must be positive");
  require_symmetric(m);
  return Spectrum{jacobi_eigenvalues(m, tol)};
}

}  // namespace distsl

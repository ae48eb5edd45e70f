#pragma once

#include <cstddef>
#include <vector>

namespace distsl {

inline constexpr double kDefaultTolerance = 1e-10;
// Symmetry check threshold for eigensolver inputs.
inline constexpr double kAsymmetryLimit = 1e-12;
// Orders above this use power iteration for the largest eigenvalue.
inline constexpr std::size_t kFullDiagonalizationLimit = 64;

// Dense square real matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t n) : n_(n), data_(n * n, 0.0) {}
  Matrix(std::size_t n, std::vector<double> row_major);

  std::size_t order() const { return n_; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  double row_sum(std::size_t i) const;
  double trace() const;
  double max_asymmetry() const;
  double frobenius_norm() const;

 private:
  std::size_t n_ = 0;
  std::vector<double> data_;
};

struct Spectrum {
  std::vector<double> eigenvalues;  // descending
  double radius() const { return eigenvalues.front(); }
};

enum class EigenMethod { automatic, jacobi, power };

// Largest eigenvalue of a symmetric matrix. `automatic` diagonalizes fully up
// to kFullDiagonalizationLimit and runs power iteration above it. Throws
// InvalidMatrix when the input is not symmetric.
double spectral_radius(const Matrix& m, double tol = kDefaultTolerance,
                       EigenMethod method = EigenMethod::automatic);

// Every eigenvalue of a symmetric matrix by cyclic Jacobi rotations.
Spectrum full_spectrum(const Matrix& m, double tol = kDefaultTolerance);

}  // namespace distsl

#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "distsl/distance.hpp"
#include "distsl/eigensolver.hpp"
#include "distsl/graph.hpp"

namespace distsl {

// Ordered partition of 0..n-1 into nonempty, pairwise disjoint blocks.
class Partition {
 public:
  Partition(int n, std::vector<VertexSet> blocks);

  // Parses "0|1,2,3": blocks separated by '|', vertices by ','.
  static Partition parse(std::string_view text, int n);

  int order() const { return n_; }
  std::size_t block_count() const { return blocks_.size(); }
  const VertexSet& block(std::size_t i) const { return blocks_[i]; }
  const std::vector<VertexSet>& blocks() const { return blocks_; }
  std::vector<std::size_t> block_sizes() const;
  std::string to_string() const;

 private:
  int n_;
  std::vector<VertexSet> blocks_;
};

// k x k matrix of block-average row sums b(i,j). `block_sizes` lets the
// quotient be symmetrized as D^{1/2} B D^{-1/2}, which is how all of its
// eigenvalues are obtained.
class QuotientMatrix {
 public:
  QuotientMatrix(std::size_t k, std::vector<double> entries,
                 std::vector<std::size_t> block_sizes, bool equitable);

  std::size_t order() const { return k_; }
  double operator()(std::size_t i, std::size_t j) const { return b_[i * k_ + j]; }
  const std::vector<std::size_t>& block_sizes() const { return sizes_; }
  // False when some block M_ij has non-constant row sums; the eigenvalue
  // containment guarantee does not hold then.
  bool equitable() const { return equitable_; }
  double row_sum(std::size_t i) const;

  friend bool operator==(const QuotientMatrix&, const QuotientMatrix&) = default;

 private:
  std::size_t k_;
  std::vector<double> b_;
  std::vector<std::size_t> sizes_;
  bool equitable_;
};

// Equitability on the integral Q matrix is decided exactly.
QuotientMatrix quotient_matrix(const DslMatrix& m, const Partition& p);
// Real-valued variant; row sums compared with tolerance 1e-9.
QuotientMatrix quotient_matrix(const Matrix& m, const Partition& p);

bool is_equitable(const DslMatrix& m, const Partition& p);
bool is_equitable(const Matrix& m, const Partition& p);

// Monic characteristic polynomial, highest degree first:
// {1, -trace, sum of principal 2x2 minors, -det} for k = 3. Orders above 3
// throw UnsupportedOrder.
std::vector<double> char_poly_coeffs(const QuotientMatrix& b);

// Horner evaluation of highest-degree-first coefficients.
double poly_eval(std::span<const double> coeffs, double x);

// Largest eigenvalue. For k <= 3 this is the largest real root of the
// characteristic polynomial, located by bisection inside the widened Perron
// bracket [min row sum - 1, max row sum + 1]; larger orders go through the
// symmetric eigensolver.
double quotient_largest_eigenvalue(const QuotientMatrix& b);

// All eigenvalues, descending, via the symmetrized quotient.
std::vector<double> quotient_eigenvalues(const QuotientMatrix& b);

// Printable form such as "x^3 - 20x^2 + 107x - 172".
std::string format_polynomial(std::span<const double> coeffs);

}  // namespace distsl

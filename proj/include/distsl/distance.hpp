#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "distsl/eigensolver.hpp"
#include "distsl/graph.hpp"

namespace distsl {

// All-pairs hop counts of a connected graph.
class DistanceMatrix {
 public:
  DistanceMatrix(int n, std::vector<int> entries);

  int order() const { return n_; }
  int operator()(Vertex i, Vertex j) const {
    return d_[static_cast<std::size_t>(i) * n_ + j];
  }
  std::span<const int> row(Vertex i) const {
    return {d_.data() + static_cast<std::size_t>(i) * n_,
            static_cast<std::size_t>(n_)};
  }

 private:
  int n_;
  std::vector<int> d_;
};

// Transmission Tr(v) of every vertex: the row sums of the distance matrix.
using Transmissions = std::vector<std::int64_t>;

// Q(G) = Tr(G) + D(G), kept integral; promoted to real only for eigensolves.
class DslMatrix {
 public:
  DslMatrix(int n, std::vector<std::int64_t> entries);

  int order() const { return n_; }
  std::int64_t operator()(Vertex i, Vertex j) const {
    return q_[static_cast<std::size_t>(i) * n_ + j];
  }
  std::int64_t row_sum(Vertex i) const;
  std::int64_t trace() const;
  Matrix to_real() const;

 private:
  int n_;
  std::vector<std::int64_t> q_;
};

// BFS from every vertex. Throws DistanceUndefined naming an unreachable pair.
DistanceMatrix distance_matrix(const Graph& g);
Transmissions transmissions(const DistanceMatrix& d);
Transmissions transmissions(const Graph& g);
DslMatrix dsl_matrix(const DistanceMatrix& d);
DslMatrix dsl_matrix(const Graph& g);

double spectral_radius(const DslMatrix& m, double tol = kDefaultTolerance,
                       EigenMethod method = EigenMethod::automatic);
Spectrum full_spectrum(const DslMatrix& m, double tol = kDefaultTolerance);

// Distance signless Laplacian spectral radius eta(G).
double eta(const Graph& g);

}  // namespace distsl

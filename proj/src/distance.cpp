#include "distsl/distance.hpp"

#include <numeric>
#include <queue>

#include "distsl/errors.hpp"

namespace distsl {

DistanceMatrix::DistanceMatrix(int n, std::vector<int> entries)
    : n_(n), d_(std::move(entries)) {
  if (d_.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidParameter("distance matrix has the wrong number of entries");
  }
}

DslMatrix::DslMatrix(int n, std::vector<std::int64_t> entries)
    : n_(n), q_(std::move(entries)) {
  if (q_.size() != static_cast<std::size_t>(n) * n) {
    throw InvalidParameter("Q matrix has the wrong number of entries");
  }
}

std::int64_t DslMatrix::row_sum(Vertex i) const {
  std::int64_t sum = 0;
  for (Vertex j = 0; j < n_; ++j) sum += (*this)(i, j);
  return sum;
}

std::int64_t DslMatrix::trace() const {
  std::int64_t sum = 0;
  for (Vertex i = 0; i < n_; ++i) sum += (*this)(i, i);
  return sum;
}

Matrix DslMatrix::to_real() const {
  std::vector<double> values(q_.begin(), q_.end());
  return Matrix(static_cast<std::size_t>(n_), std::move(values));
}

DistanceMatrix distance_matrix(const Graph& g) {
  const int n = g.order();
  std::vector<int> d(static_cast<std::size_t>(n) * n, -1);
  std::vector<Vertex> queue(n);
  for (Vertex source = 0; source < n; ++source) {
    int* row = d.data() + static_cast<std::size_t>(source) * n;
    row[source] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = source;
    while (head < tail) {
      const Vertex u = queue[head++];
      for (Vertex v : g.neighbors(u)) {
        if (row[v] < 0) {
          row[v] = row[u] + 1;
          queue[tail++] = v;
        }
      }
    }
    for (Vertex v = 0; v < n; ++v) {
      if (row[v] < 0) throw DistanceUndefined(source, v);
    }
  }
  return DistanceMatrix(n, std::move(d));
}

Transmissions transmissions(const DistanceMatrix& d) {
  Transmissions tr(d.order());
  for (Vertex i = 0; i < d.order(); ++i) {
    const auto row = d.row(i);
    tr[i] = std::accumulate(row.begin(), row.end(), std::int64_t{0});
  }
  return tr;
}

Transmissions transmissions(const Graph& g) { return transmissions(distance_matrix(g)); }

DslMatrix dsl_matrix(const DistanceMatrix& d) {
  const int n = d.order();
  const Transmissions tr = transmissions(d);
  std::vector<std::int64_t> q(static_cast<std::size_t>(n) * n);
  for (Vertex i = 0; i < n; ++i) {
    for (Vertex j = 0; j < n; ++j) {
      q[static_cast<std::size_t>(i) * n + j] = i == j ? tr[i] : d(i, j);
    }
  }
  return DslMatrix(n, std::move(q));
}

DslMatrix dsl_matrix(const Graph& g) { return dsl_matrix(distance_matrix(g)); }

double spectral_radius(const DslMatrix& m, double tol, EigenMethod method) {
  return spectral_radius(m.to_real(), tol, method);
}

Spectrum full_spectrum(const DslMatrix& m, double tol) {
  return full_spectrum(m.to_real(), tol);
}

double eta(const Graph& g) { return spectral_radius(dsl_matrix(g), kDefaultTolerance); }

}  // namespace distsl

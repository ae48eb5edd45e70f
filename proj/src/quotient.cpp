#include "distsl/quotient.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>

#include "distsl/errors.hpp"

namespace distsl {
namespace {

constexpr double kRealEquitableTolerance = 1e-9;
constexpr double kBisectionWidth = 1e-12;

// Row sums of block (i, j) for every row of block i, via the accessor.
template <typename Accessor>
auto block_row_sums(const Partition& p, std::size_t i, std::size_t j,
                    Accessor&& at) {
  using Value = decltype(at(0, 0));
  std::vector<Value> sums;
  sums.reserve(p.block(i).size());
  for (Vertex u : p.block(i)) {
    Value acc{};
    for (Vertex v : p.block(j)) acc += at(u, v);
    sums.push_back(acc);
  }
  return sums;
}

void require_matching_order(int matrix_order, const Partition& p) {
  if (matrix_order != p.order()) {
    throw InvalidPartition("partition covers " + std::to_string(p.order()) +
                           " vertices but the matrix has order " +
                           std::to_string(matrix_order));
  }
}

template <typename Accessor>
QuotientMatrix build_quotient(const Partition& p, Accessor&& at,
                              double equitable_tol) {
  const std::size_t k = p.block_count();
  std::vector<double> entries(k * k);
  bool equitable = true;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto sums = block_row_sums(p, i, j, at);
      double total = 0.0;
      for (auto s : sums) total += static_cast<double>(s);
      entries[i * k + j] = total / static_cast<double>(sums.size());
      const auto [lo, hi] = std::minmax_element(sums.begin(), sums.end());
      if (static_cast<double>(*hi - *lo) > equitable_tol) equitable = false;
    }
  }
  return QuotientMatrix(k, std::move(entries), p.block_sizes(), equitable);
}

Matrix symmetrized(const QuotientMatrix& b) {
  const std::size_t k = b.order();
  Matrix s(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const double ratio = static_cast<double>(b.block_sizes()[i]) /
                           static_cast<double>(b.block_sizes()[j]);
      s(i, j) = b(i, j) * std::sqrt(ratio);
    }
  }
  // Rounding in sqrt leaves tiny asymmetry; average it out.
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const double mean = 0.5 * (s(i, j) + s(j, i));
      s(i, j) = mean;
      s(j, i) = mean;
    }
  }
  return s;
}

// Largest critical point of a monic polynomial of degree <= 3, or -inf.
double largest_critical_point(const std::vector<double>& c) {
  if (c.size() == 3) return -c[1] / 2.0;
  if (c.size() == 4) {
    const double disc = 4.0 * c[1] * c[1] - 12.0 * c[2];
    if (disc >= 0.0) return (-2.0 * c[1] + std::sqrt(disc)) / 6.0;
  }
  return -std::numeric_limits<double>::infinity();
}

std::string format_number(double v) {
  if (v == std::floor(v) && std::abs(v) < 1e15) {
    return std::to_string(static_cast<long long>(v));
  }
  std::ostringstream os;
  os.precision(10);
  os << v;
  return os.str();
}

}  // namespace

Partition::Partition(int n, std::vector<VertexSet> blocks)
    : n_(n), blocks_(std::move(blocks)) {
  if (n < 1) throw InvalidPartition("partition order must be at least 1");
  std::vector<int> owner(n, -1);
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (blocks_[b].empty()) {
      throw InvalidPartition("block " + std::to_string(b) + " is empty");
    }
    for (Vertex v : blocks_[b]) {
      if (v >= n) {
        throw InvalidPartition("vertex " + std::to_string(v) +
                               " out of range for order " + std::to_string(n));
      }
      if (owner[v] >= 0) {
        throw InvalidPartition("vertex " + std::to_string(v) +
                               " appears in more than one block");
      }
      owner[v] = static_cast<int>(b);
    }
  }
  const auto missing = std::find(owner.begin(), owner.end(), -1);
  if (missing != owner.end()) {
    throw InvalidPartition("vertex " + std::to_string(missing - owner.begin()) +
                           " is not covered by any block");
  }
}

Partition Partition::parse(std::string_view text, int n) {
  std::vector<VertexSet> blocks;
  std::size_t start = 0;
  while (true) {
    const std::size_t bar = text.find('|', start);
    const std::string_view block_text =
        text.substr(start, bar == std::string_view::npos ? std::string_view::npos
                                                         : bar - start);
    std::vector<Vertex> members;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = block_text.find(',', pos);
      std::string_view token = block_text.substr(
          pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
      while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
      int value = 0;
      const auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size() ||
          value < 0) {
        throw InvalidPartition("bad vertex label '" + std::string(token) +
                               "' in partition block " +
                               std::to_string(blocks.size()));
      }
      members.push_back(value);
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    try {
      blocks.emplace_back(std::move(members));
    } catch (const InvalidParameter& e) {
      throw InvalidPartition(std::string("partition block ") +
                             std::to_string(blocks.size()) + ": " + e.what());
    }
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return Partition(n, std::move(blocks));
}

std::vector<std::size_t> Partition::block_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(blocks_.size());
  for (const auto& b : blocks_) sizes.push_back(b.size());
  return sizes;
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t b = 0; b < blocks_.size(); ++b) {
    if (b > 0) out += '|';
    bool first = true;
    for (Vertex v : blocks_[b]) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
  }
  return out;
}

QuotientMatrix::QuotientMatrix(std::size_t k, std::vector<double> entries,
                               std::vector<std::size_t> block_sizes, bool equitable)
    : k_(k), b_(std::move(entries)), sizes_(std::move(block_sizes)), equitable_(equitable) {
  if (k == 0 || b_.size() != k * k || sizes_.size() != k) {
    throw InvalidParameter("quotient matrix dimensions are inconsistent");
  }
  if (std::find(sizes_.begin(), sizes_.end(), std::size_t{0}) != sizes_.end()) {
    throw InvalidParameter("quotient matrix has an empty block");
  }
}

double QuotientMatrix::row_sum(std::size_t i) const {
  double sum = 0.0;
  for (std::size_t j = 0; j < k_; ++j) sum += (*this)(i, j);
  return sum;
}

QuotientMatrix quotient_matrix(const DslMatrix& m, const Partition& p) {
  require_matching_order(m.order(), p);
  return build_quotient(p, [&m](Vertex u, Vertex v) { return m(u, v); }, 0.0);
}

QuotientMatrix quotient_matrix(const Matrix& m, const Partition& p) {
  require_matching_order(static_cast<int>(m.order()), p);
  return build_quotient(
      p, [&m](Vertex u, Vertex v) { return m(u, v); }, kRealEquitableTolerance);
}

bool is_equitable(const DslMatrix& m, const Partition& p) {
  return quotient_matrix(m, p).equitable();
}

bool is_equitable(const Matrix& m, const Partition& p) {
  return quotient_matrix(m, p).equitable();
}

std::vector<double> char_poly_coeffs(const QuotientMatrix& b) {
  switch (b.order()) {
    case 1:
      return {1.0, -b(0, 0)};
    case 2:
      return {1.0, -(b(0, 0) + b(1, 1)), b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0)};
    case 3: {
      const double trace = b(0, 0) + b(1, 1) + b(2, 2);
      const double minors = (b(0, 0) * b(1, 1) - b(0, 1) * b(1, 0)) +
                            (b(0, 0) * b(2, 2) - b(0, 2) * b(2, 0)) +
                            (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1));
      const double det = b(0, 0) * (b(1, 1) * b(2, 2) - b(1, 2) * b(2, 1)) -
                         b(0, 1) * (b(1, 0) * b(2, 2) - b(1, 2) * b(2, 0)) +
                         b(0, 2) * (b(1, 0) * b(2, 1) - b(1, 1) * b(2, 0));
      return {1.0, -trace, minors, -det};
    }
    default:
      throw UnsupportedOrder("characteristic polynomial is only available for order <= 3, got " +
                             std::to_string(b.order()));
  }
}

double poly_eval(std::span<const double> coeffs, double x) {
  double acc = 0.0;
  for (double c : coeffs) acc = acc * x + c;
  return acc;
}

double quotient_largest_eigenvalue(const QuotientMatrix& b) {
  const std::size_t k = b.order();
  if (k == 1) return b(0, 0);
  if (k > 3) return spectral_radius(symmetrized(b));

  const auto coeffs = char_poly_coeffs(b);
  double min_row = std::numeric_limits<double>::infinity();
  double max_row = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < k; ++i) {
    min_row = std::min(min_row, b.row_sum(i));
    max_row = std::max(max_row, b.row_sum(i));
  }
  // Above the largest critical point the polynomial is increasing, so the
  // sign change there is the largest root.
  double lo = std::max(min_row - 1.0, largest_critical_point(coeffs));
  double hi = max_row + 1.0;
  if (poly_eval(coeffs, lo) > 0.0 || poly_eval(coeffs, hi) < 0.0) {
    return spectral_radius(symmetrized(b));
  }
  while (hi - lo > kBisectionWidth) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (poly_eval(coeffs, mid) > 0.0) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

std::vector<double> quotient_eigenvalues(const QuotientMatrix& b) {
  return full_spectrum(symmetrized(b)).eigenvalues;
}

std::string format_polynomial(std::span<const double> coeffs) {
  const std::size_t degree = coeffs.size() - 1;
  std::string out;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const double c = coeffs[i];
    const std::size_t power = degree - i;
    if (c == 0.0 && !(out.empty() && power == 0)) continue;
    const double mag = std::abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (mag != 1.0 || power == 0) out += format_number(mag);
    if (power >= 1) out += "x";
    if (power >= 2) out += "^" + std::to_string(power);
  }
  return out;
}

}  // namespace distsl

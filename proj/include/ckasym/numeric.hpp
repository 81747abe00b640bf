#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace ckasym {

// Pairwise (recursive halving) reduction of f(lo), ..., f(hi-1).
//
// Every reduction in this library goes through this scheme. The association
// order depends only on the index range, so results are bit-identical no
// matter how work is distributed across threads, and rounding error grows
// like O(log n) instead of O(n) -- the large-bandwidth sweeps resolve
// relative differences near 2^-40 and need both properties.
template <class F>
double pairwise_reduce(std::size_t lo, std::size_t hi, F&& f) {
  const std::size_t n = hi - lo;
  if (n == 0) return 0.0;
  if (n == 1) return f(lo);
  if (n == 2) return f(lo) + f(lo + 1);
  const std::size_t mid = lo + n / 2;
  return pairwise_reduce(lo, mid, f) + pairwise_reduce(mid, hi, f);
}

double pairwise_sum(std::span<const double> values);
double pairwise_dot(std::span<const double> a, std::span<const double> b);

// |a - b|^2 accumulated from coordinate differences. Never computed via the
// dot-product expansion |a|^2 + |b|^2 - 2 a.b, which cancels catastrophically
// for nearby rows.
double pairwise_squared_distance(std::span<const double> a,
                                 std::span<const double> b);

// Dense row-major matrix of doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  double operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<double> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }

  std::span<const double> data() const { return data_; }
  std::span<double> data() { return data_; }

  bool all_finite() const;

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace ckasym

#include "ckasym/numeric.hpp"

#include <cmath>

namespace ckasym {

double pairwise_sum(std::span<const double> values) {
  return pairwise_reduce(0, values.size(),
                         [&](std::size_t k) { return values[k]; });
}

double pairwise_dot(std::span<const double> a, std::span<const double> b) {
  return pairwise_reduce(0, a.size(),
                         [&](std::size_t k) { return a[k] * b[k]; });
}

double pairwise_squared_distance(std::span<const double> a,
                                 std::span<const double> b) {
  return pairwise_reduce(0, a.size(), [&](std::size_t k) {
    const double d = a[k] - b[k];
    return d * d;
  });
}

bool Matrix::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

}  // namespace ckasym

#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include "ckasym/errors.hpp"
#include "ckasym/numeric.hpp"

namespace ckasym {

enum class KernelFamily { Linear, Gaussian, Euclidean };
enum class Centering { None, Column, Row, Double };

// Which entries of the distance matrix enter the median d_X. The default
// excludes the structural zeros on the diagonal; the inclusive variant
// (median over all N^2 entries) is exposed for cross-checks.
enum class MedianConvention { ExcludeDiagonal, IncludeDiagonal };

const char* to_string(KernelFamily family);
const char* to_string(Centering centering);

// Kernel family plus centering mode. For the Gaussian family `bandwidth` is
// expressed in units of the median pairwise distance of the representation
// it is applied to (sigma = 2 means twice the median distance).
struct KernelSpec {
  KernelFamily family = KernelFamily::Linear;
  std::optional<double> bandwidth;
  Centering centering = Centering::Column;

  static KernelSpec linear(Centering c = Centering::Column) {
    return {KernelFamily::Linear, std::nullopt, c};
  }
  static KernelSpec gaussian(double sigma, Centering c = Centering::Column) {
    return {KernelFamily::Gaussian, sigma, c};
  }
  static KernelSpec euclidean(Centering c = Centering::Column) {
    return {KernelFamily::Euclidean, std::nullopt, c};
  }

  // Throws InvalidArgument unless (family == Gaussian) == bandwidth.has_value()
  // and any bandwidth is positive and finite.
  void validate() const;

  std::string describe() const;
};

// N x d matrix of feature vectors, one example per row. Validated on
// construction: N >= 2, d >= 1, all entries finite.
class FeatureMatrix {
 public:
  explicit FeatureMatrix(Matrix data);

  std::size_t n() const { return data_.rows(); }
  std::size_t dim() const { return data_.cols(); }
  const Matrix& data() const { return data_; }
  std::span<const double> row(std::size_t i) const { return data_.row(i); }

 private:
  Matrix data_;
};

// Pairwise Euclidean distances |x_i - x_j| with the summary statistics the
// Gaussian scaling and the eccentricity ratio are built from.
struct DistanceMatrix {
  Matrix dist;
  double median_distance = 0.0;
  double diameter = 0.0;
  MedianConvention convention = MedianConvention::ExcludeDiagonal;

  std::size_t n() const { return dist.rows(); }
};

struct GramMatrix {
  Matrix values;
  KernelSpec spec;
  // Median pairwise distance used for bandwidth scaling (Gaussian only).
  double source_median = 0.0;

  std::size_t n() const { return values.rows(); }
};

DistanceMatrix pairwise_distances(
    const FeatureMatrix& x,
    MedianConvention convention = MedianConvention::ExcludeDiagonal);

// Gram matrix for the requested kernel, with centering already applied when
// spec.centering != None.
//
// Centered Gaussian Gram matrices are computed from expm1 of the exponent
// rather than by centering exp values: the constant term of the exponential
// cancels under mean-centering, and removing it before rounding keeps the
// centered entries accurate relative to their own magnitude at very large
// bandwidths instead of relative to 1.
GramMatrix gram(const FeatureMatrix& x, const KernelSpec& spec,
                MedianConvention convention = MedianConvention::ExcludeDiagonal);

// Same as gram() for the Gaussian family, reusing a precomputed distance
// matrix. Bandwidth sweeps call this so distances and the median are computed
// once per representation.
GramMatrix gaussian_gram(const DistanceMatrix& distances, double sigma,
                         Centering centering);

// Applies mean-centering to an uncentered Gram matrix. Column subtracts
// column means (left-multiplication by H = I - (1/N) 11^T), Row subtracts row
// means, Double applies column then row centering (H K H).
GramMatrix center(const GramMatrix& g, Centering mode);

}  // namespace ckasym

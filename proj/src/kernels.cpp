#include "ckasym/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ckasym/parallel.hpp"

namespace ckasym {

const char* to_string(KernelFamily family) {
  switch (family) {
    case KernelFamily::Linear:
      return "linear";
    case KernelFamily::Gaussian:
      return "gaussian";
    case KernelFamily::Euclidean:
      return "euclidean";
  }
  return "?";
}

const char* to_string(Centering centering) {
  switch (centering) {
    case Centering::None:
      return "none";
    case Centering::Column:
      return "column";
    case Centering::Row:
      return "row";
    case Centering::Double:
      return "double";
  }
  return "?";
}

void KernelSpec::validate() const {
  if (family == KernelFamily::Gaussian) {
    if (!bandwidth.has_value()) {
      throw Error(ErrorCode::InvalidArgument,
                  "gaussian kernel requires a bandwidth");
    }
    if (!(*bandwidth > 0.0) || !std::isfinite(*bandwidth)) {
      throw Error(ErrorCode::InvalidArgument,
                  "gaussian bandwidth must be positive and finite");
    }
  } else if (bandwidth.has_value()) {
    throw Error(ErrorCode::InvalidArgument,
                "bandwidth is only meaningful for the gaussian kernel");
  }
}

std::string KernelSpec::describe() const {
  std::string s = to_string(family);
  if (bandwidth) {
    s += "(sigma=" + std::to_string(*bandwidth) + ")";
  }
  s += "/";
  s += to_string(centering);
  return s;
}

FeatureMatrix::FeatureMatrix(Matrix data) : data_(std::move(data)) {
  if (data_.rows() < 2) {
    throw Error(ErrorCode::InvalidArgument,
                "feature matrix needs at least 2 rows, got " +
                    std::to_string(data_.rows()));
  }
  if (data_.cols() < 1) {
    throw Error(ErrorCode::InvalidArgument,
                "feature matrix needs at least 1 column");
  }
  if (!data_.all_finite()) {
    throw Error(ErrorCode::NonFiniteInput,
                "feature matrix contains NaN or infinite entries");
  }
}

namespace {

// k-th smallest (1-based) of the multiset that contains N diagonal zeros plus
// every unordered pair distance twice, given the sorted pair distances.
double inclusive_order_statistic(const std::vector<double>& sorted_pairs,
                                 std::size_t n, std::size_t k) {
  if (k <= n) return 0.0;
  return sorted_pairs[(k - n - 1) / 2];
}

double median_of_distances(const std::vector<double>& sorted_pairs,
                           std::size_t n, MedianConvention convention) {
  if (convention == MedianConvention::ExcludeDiagonal) {
    const std::size_t m = sorted_pairs.size();
    if (m % 2 == 1) return sorted_pairs[m / 2];
    return 0.5 * (sorted_pairs[m / 2 - 1] + sorted_pairs[m / 2]);
  }
  // Median over all N^2 entries, diagonal zeros included.
  const std::size_t total = n * n;
  if (total % 2 == 1) {
    return inclusive_order_statistic(sorted_pairs, n, total / 2 + 1);
  }
  return 0.5 * (inclusive_order_statistic(sorted_pairs, n, total / 2) +
                inclusive_order_statistic(sorted_pairs, n, total / 2 + 1));
}

void center_columns(Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<double> col_mean(n);
  parallel::for_blocks(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t j = lo; j < hi; ++j) {
      col_mean[j] =
          pairwise_reduce(0, n, [&](std::size_t k) { return m(k, j); }) /
          static_cast<double>(n);
    }
  });
  parallel::for_blocks(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= col_mean[j];
    }
  });
}

void center_rows(Matrix& m) {
  const std::size_t n = m.rows();
  parallel::for_blocks(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      const double mean = pairwise_sum(m.row(i)) / static_cast<double>(n);
      for (std::size_t j = 0; j < n; ++j) m(i, j) -= mean;
    }
  });
}

void apply_centering(Matrix& m, Centering mode) {
  switch (mode) {
    case Centering::None:
      break;
    case Centering::Column:
      center_columns(m);
      break;
    case Centering::Row:
      center_rows(m);
      break;
    case Centering::Double:
      center_columns(m);
      center_rows(m);
      break;
  }
}

Matrix squared_distances(const FeatureMatrix& x) {
  const std::size_t n = x.n();
  Matrix d2(n, n);
  parallel::for_blocks(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        d2(i, j) = pairwise_squared_distance(x.row(i), x.row(j));
      }
    }
  });
  for (std::size_t i = 0; i < n; ++i) {
    d2(i, i) = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) d2(j, i) = d2(i, j);
  }
  return d2;
}

}  // namespace

DistanceMatrix pairwise_distances(const FeatureMatrix& x,
                                  MedianConvention convention) {
  const std::size_t n = x.n();
  DistanceMatrix result;
  result.convention = convention;
  result.dist = squared_distances(x);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      result.dist(i, j) = std::sqrt(result.dist(i, j));
    }
  }

  std::vector<double> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.push_back(result.dist(i, j));
  }
  std::sort(pairs.begin(), pairs.end());
  result.diameter = pairs.back();
  result.median_distance = median_of_distances(pairs, n, convention);
  return result;
}

GramMatrix gaussian_gram(const DistanceMatrix& distances, double sigma,
                         Centering centering) {
  KernelSpec spec = KernelSpec::gaussian(sigma, centering);
  spec.validate();
  const double median = distances.median_distance;
  if (!(median > 0.0)) {
    throw Error(ErrorCode::DegenerateRepresentation,
                "median pairwise distance is zero; gaussian bandwidth "
                "scaling is undefined (all examples coincide?)");
  }
  const std::size_t n = distances.n();
  const double scaled_sigma = median * sigma;
  const double inv_two_sigma_sq = 1.0 / (2.0 * scaled_sigma * scaled_sigma);

  GramMatrix g{Matrix(n, n), spec, median};
  const bool centered = centering != Centering::None;
  parallel::for_blocks(n, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const double d = distances.dist(i, j);
        const double u = d * d * inv_two_sigma_sq;
        // Centered variants drop the constant 1: centering annihilates it
        // exactly, and expm1 keeps the remainder accurate when u is tiny.
        g.values(i, j) = centered ? std::expm1(-u) : std::exp(-u);
      }
    }
  });
  apply_centering(g.values, centering);
  return g;
}

GramMatrix gram(const FeatureMatrix& x, const KernelSpec& spec,
                MedianConvention convention) {
  spec.validate();
  const std::size_t n = x.n();

  if (spec.family == KernelFamily::Gaussian) {
    return gaussian_gram(pairwise_distances(x, convention), *spec.bandwidth,
                         spec.centering);
  }

  GramMatrix g{Matrix(n, n), spec, 0.0};
  if (spec.family == KernelFamily::Linear) {
    parallel::for_blocks(n, [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        for (std::size_t j = i; j < n; ++j) {
          g.values(i, j) = pairwise_dot(x.row(i), x.row(j));
        }
      }
    });
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) g.values(j, i) = g.values(i, j);
    }
  } else {
    g.values = squared_distances(x);
  }
  apply_centering(g.values, spec.centering);
  return g;
}

GramMatrix center(const GramMatrix& g, Centering mode) {
  if (g.spec.centering != Centering::None) {
    throw Error(ErrorCode::AlreadyCentered,
                std::string("gram matrix is already ") +
                    to_string(g.spec.centering) + "-centered");
  }
  if (mode == Centering::None) {
    throw Error(ErrorCode::InvalidArgument, "center() requires a mode");
  }
  GramMatrix out = g;
  out.spec.centering = mode;
  apply_centering(out.values, mode);
  return out;
}

}  // namespace ckasym

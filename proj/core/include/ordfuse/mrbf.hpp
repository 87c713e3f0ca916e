#pragma once

// Modified RBF kernel over (order, mass) pairs and its truncated feature map.
//
// exp(-k (o - m)^2) = exp(-k o^2) exp(-k m^2) * sum_j (2 k o m)^j / j!
//
// so component j of the feature vector is
//
//   ((2 k o m)^j / j!) * exp(-k (o^2 + m^2)),   j = 0 .. dims-1
//
// and the infinite sum of components reproduces the kernel. Every term is
// non-negative, so truncation only ever under-estimates it.

#include <cstddef>

#include <Eigen/Core>

#include "ordfuse/config.hpp"
#include "ordfuse/types.hpp"

namespace ordfuse {

inline constexpr std::size_t kDefaultDims = 4;

struct FeatureVector {
  Eigen::RowVectorXd components;

  std::size_t dims() const { return static_cast<std::size_t>(components.size()); }
  double operator[](std::size_t j) const { return components(static_cast<Eigen::Index>(j)); }
  double sum() const { return components.sum(); }
};

/// One feature vector per evidence entry, rows in position order.
struct FeatureMatrix {
  Eigen::MatrixXd values;

  std::size_t rows() const { return static_cast<std::size_t>(values.rows()); }
  std::size_t dims() const { return static_cast<std::size_t>(values.cols()); }
};

struct ExpansionOptions {
  std::size_t dims = kDefaultDims;
  /// Use 2^j / j! coefficients (dropping k^j), as the printed four-term
  /// matrix does. The sum then no longer converges to the kernel.
  bool eq22_literal = false;
  OrderScale order_scale = OrderScale::raw;
};

/// exp(-k (order - mass)^2). Throws InputError for negative or non-finite
/// arguments.
double mrbf_kernel(double order, double mass, double k);

/// Truncated feature vector of (order, mass) under width k.
/// Throws InputError when dims < 1 or the arguments are out of range.
FeatureVector expand(double order, double mass, double k,
                     std::size_t dims = kDefaultDims, bool eq22_literal = false);

/// Numeric order of the entry at 0-based `position` in an evidence of
/// `count` entries.
double order_value(std::size_t position, std::size_t count, OrderScale scale);

FeatureMatrix expand_evidence(const OrdinalEvidence& e, double k,
                              const ExpansionOptions& options = {});

}  // namespace ordfuse

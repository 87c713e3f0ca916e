#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "ordfuse/ifs_structure.hpp"

namespace ordfuse {

/// Normalized complement G of a normalized matrix; entries sum to 1.
struct NegatedMatrix {
  Eigen::MatrixXd values;

  std::size_t rows() const { return static_cast<std::size_t>(values.rows()); }
  std::size_t dims() const { return static_cast<std::size_t>(values.cols()); }
};

/// Per-row uncertainty scores of one evidence. Smaller means more uncertain.
struct UncertaintyScore {
  std::vector<double> values;
};

/// G = (1 - M) / sum(1 - M). Throws InputError for entries outside [0, 1]
/// and NumericError when every entry of 1 - M is zero.
NegatedMatrix negate_matrix(const NormalizedMatrix& m);

/// U(j) = sum_{y != i} M[j][y] G[j][i] + sum_{y != i} sum_{f != j} M[j][y] G[f][i]
/// with y, i over dimensions and f over rows. Throws InputError on shape
/// mismatch or an out-of-range row.
double uncertainty(const NormalizedMatrix& m, const NegatedMatrix& g, std::size_t j);

/// As above, additionally dropping every product whose G row plays the same
/// role toward row j as row j itself. For composite targets, where every
/// row is membership, only the same-row products are dropped.
double uncertainty(const NormalizedMatrix& m, const NegatedMatrix& g, std::size_t j,
                   const RoleAssignment& roles);

UncertaintyScore uncertainty_scores(const NormalizedMatrix& m, const NegatedMatrix& g);
UncertaintyScore uncertainty_scores(const NormalizedMatrix& m, const NegatedMatrix& g,
                                    const RoleAssignment& roles);

}  // namespace ordfuse

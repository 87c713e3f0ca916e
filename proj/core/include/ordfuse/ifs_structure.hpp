#pragma once

// Intuitionistic-fuzzy role structure over a feature matrix.
//
// Toward a singleton target p, every row of the matrix plays one role:
//   membership      p's own row
//   non-membership  rows of singletons disjoint from p
//   hesitancy       rows of composites that contain p
//   none            anything else
// Toward a composite target every row is membership: its support is the
// column sums Co_i over the whole matrix, with no opposition or hesitancy.

#include <cstddef>
#include <vector>

#include <Eigen/Core>

#include "ordfuse/mrbf.hpp"
#include "ordfuse/types.hpp"

namespace ordfuse {

/// (mu, nu, pi) with mu + nu <= 1 and pi = 1 - mu - nu.
struct IfsTriple {
  double membership = 0.0;
  double non_membership = 0.0;
  double hesitancy = 0.0;

  /// Throws InputError when mu or nu leave [0, 1] or mu + nu > 1.
  static IfsTriple from_pair(double membership, double non_membership);
};

enum class Role { none, membership, non_membership, hesitancy };

class RoleAssignment {
 public:
  RoleAssignment(std::vector<Proposition> rows, std::vector<std::vector<Role>> roles)
      : rows_(std::move(rows)), roles_(std::move(roles)) {}

  /// Number of rows (and of targets: each row's proposition is a target).
  std::size_t size() const { return rows_.size(); }
  Proposition proposition(std::size_t row) const { return rows_.at(row); }

  /// Role that `row` plays toward the proposition of row `target`.
  Role role(std::size_t target, std::size_t row) const { return roles_.at(target).at(row); }

  std::vector<std::size_t> rows_with(std::size_t target, Role r) const;

 private:
  std::vector<Proposition> rows_;
  std::vector<std::vector<Role>> roles_;
};

RoleAssignment assign_roles(const Frame& frame, const OrdinalEvidence& e);

/// Element-wise sum of the rows playing `role` toward `target`.
Eigen::RowVectorXd role_aggregate(const FeatureMatrix& matrix,
                                  const RoleAssignment& roles,
                                  std::size_t target, Role role);

/// (MRatio, NRatio, HRatio) of `target`: each role aggregate's component
/// sum over the sum of all three. Throws NumericError when all are zero.
IfsTriple role_ratios(const FeatureMatrix& matrix, const RoleAssignment& roles,
                      std::size_t target);

/// Non-negative matrix whose entries sum to 1; same shape as the features.
struct NormalizedMatrix {
  Eigen::MatrixXd values;

  std::size_t rows() const { return static_cast<std::size_t>(values.rows()); }
  std::size_t dims() const { return static_cast<std::size_t>(values.cols()); }
};

/// Scales each singleton row by its MRatio and each composite row's
/// component i by Co_i / sum(Co), then rescales the whole matrix to a unit
/// total. Throws NumericError on an all-zero matrix or zero denominators.
NormalizedMatrix majorize(const FeatureMatrix& matrix, const RoleAssignment& roles);

}  // namespace ordfuse

#pragma once

// Uncertainty-weighted fusion of ordinal evidences.
//
//   width_k -> expand_evidence -> assign_roles/majorize -> negate_matrix
//   -> uncertainty -> weights -> fuse_modified -> collapse (modified BPA)
//   -> self_combine n-1 times (final BPA)

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Core>

#include "ordfuse/config.hpp"
#include "ordfuse/ifs_structure.hpp"
#include "ordfuse/mrbf.hpp"
#include "ordfuse/types.hpp"
#include "ordfuse/uncertainty.hpp"

namespace ordfuse {

/// w(e, j): weight of evidence e for proposition j. Under the default axis
/// every column sums to 1.
struct WeightTable {
  Eigen::MatrixXd values;

  std::size_t evidences() const { return static_cast<std::size_t>(values.rows()); }
  std::size_t propositions() const { return static_cast<std::size_t>(values.cols()); }
  double operator()(std::size_t e, std::size_t j) const {
    return values(static_cast<Eigen::Index>(e), static_cast<Eigen::Index>(j));
  }
};

/// Scores laid out [evidence][proposition]. Normalizes each column
/// (evidences axis) or each row (propositions axis). Throws InputError for
/// negative scores and NumericError when a line to normalize is all zero.
WeightTable weights(const Eigen::MatrixXd& u, WeightAxis axis = WeightAxis::evidences);

/// Fused features, rows = propositions, columns = dimensions.
struct FusedFeatures {
  Eigen::MatrixXd values;
};

/// For proposition j and dimension y: sum_e w(e, j) M_e[j][y], normalized
/// over propositions at that dimension. Matrices must be row-aligned with
/// the weight table's propositions.
///
/// A dimension that is zero in every input matrix carries no information
/// and stays zero. Throws NumericError when a dimension with non-zero input
/// still ends up with a zero denominator.
FusedFeatures fuse_modified(std::span<const NormalizedMatrix> aligned, const WeightTable& w);

/// Dimension sums per proposition, normalized to a mass function.
MassFunction collapse(const Frame& frame, std::span<const Proposition> propositions,
                      const FusedFeatures& fused);

/// Per-evidence intermediates, rows in the evidence's own position order.
struct EvidenceTrace {
  FeatureMatrix features;
  RoleAssignment roles;
  NormalizedMatrix normalized;
  NegatedMatrix negated;
  UncertaintyScore uncertainty;
};

struct FusionReport {
  Configuration config;
  Frame frame;
  std::vector<Proposition> propositions;  // canonical order
  double k_width = 0.0;
  std::vector<EvidenceTrace> evidences;
  Eigen::MatrixXd scores;  // [evidence][proposition], canonical order
  WeightTable weights;
  FusedFeatures fused;
  MassFunction modified_bpa;
  MassFunction final_bpa;
};

/// Reorders the rows of an evidence's matrix into `propositions` order.
Eigen::MatrixXd align_rows(const Eigen::MatrixXd& rows, const OrdinalEvidence& e,
                           std::span<const Proposition> propositions);

/// Runs every stage. Failures are rethrown as StageError naming the stage.
FusionReport pipeline(const EvidenceSet& es, const Configuration& cfg = {});

}  // namespace ordfuse

#include "ordfuse/uncertainty.hpp"

#include <cmath>
#include <string>

#include "ordfuse/error.hpp"

namespace ordfuse {

namespace {

constexpr double kUnitSlack = 1e-12;

void check_shapes(const NormalizedMatrix& m, const NegatedMatrix& g, std::size_t j) {
  if (m.values.rows() != g.values.rows() || m.values.cols() != g.values.cols()) {
    throw InputError("matrix and its negation differ in shape");
  }
  if (j >= m.rows()) {
    throw InputError("row " + std::to_string(j) + " out of range for a " +
                     std::to_string(m.rows()) + "-row matrix");
  }
}

// sum_y M[j][y] * sum_{i != y} S[i], where S holds the column sums of the
// admitted G rows. Expanding the double sum over (y, i) gives exactly the
// index set y != i of the definition.
double score(const NormalizedMatrix& m, const Eigen::RowVectorXd& admitted_colsums,
             std::size_t j) {
  const double total = admitted_colsums.sum();
  const auto row = m.values.row(static_cast<Eigen::Index>(j));
  double u = 0.0;
  for (Eigen::Index y = 0; y < row.size(); ++y) {
    u += row(y) * (total - admitted_colsums(y));
  }
  return u;
}

}  // namespace

NegatedMatrix negate_matrix(const NormalizedMatrix& m) {
  for (Eigen::Index r = 0; r < m.values.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.values.cols(); ++c) {
      const double v = m.values(r, c);
      if (!std::isfinite(v) || v < 0.0 || v > 1.0 + kUnitSlack) {
        throw InputError("matrix negation needs entries in [0, 1]");
      }
    }
  }
  NegatedMatrix g{(1.0 - m.values.array()).max(0.0).matrix()};
  const double total = g.values.sum();
  if (!(total > 0.0)) {
    throw NumericError("negated matrix is all zero; cannot normalize");
  }
  g.values /= total;
  return g;
}

double uncertainty(const NormalizedMatrix& m, const NegatedMatrix& g, std::size_t j) {
  check_shapes(m, g, j);
  return score(m, g.values.colwise().sum(), j);
}

double uncertainty(const NormalizedMatrix& m, const NegatedMatrix& g, std::size_t j,
                   const RoleAssignment& roles) {
  check_shapes(m, g, j);
  if (roles.size() != m.rows()) {
    throw InputError("role assignment does not match the matrix rows");
  }
  const bool composite = roles.proposition(j).is_composite();
  const Role own = roles.role(j, j);
  Eigen::RowVectorXd admitted = Eigen::RowVectorXd::Zero(g.values.cols());
  for (std::size_t f = 0; f < roles.size(); ++f) {
    const bool dropped = composite ? f == j : roles.role(j, f) == own;
    if (!dropped) admitted += g.values.row(static_cast<Eigen::Index>(f));
  }
  return score(m, admitted, j);
}

UncertaintyScore uncertainty_scores(const NormalizedMatrix& m, const NegatedMatrix& g) {
  UncertaintyScore out;
  for (std::size_t j = 0; j < m.rows(); ++j) out.values.push_back(uncertainty(m, g, j));
  return out;
}

UncertaintyScore uncertainty_scores(const NormalizedMatrix& m, const NegatedMatrix& g,
                                    const RoleAssignment& roles) {
  UncertaintyScore out;
  for (std::size_t j = 0; j < m.rows(); ++j) {
    out.values.push_back(uncertainty(m, g, j, roles));
  }
  return out;
}

}  // namespace ordfuse

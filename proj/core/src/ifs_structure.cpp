#include "ordfuse/ifs_structure.hpp"

#include <cmath>
#include <string>

#include "ordfuse/error.hpp"

namespace ordfuse {

namespace {

constexpr double kTripleTolerance = 1e-12;

Role singleton_role(Proposition target, Proposition row) {
  if (row == target) return Role::membership;
  if (row.is_singleton() && row.disjoint(target)) return Role::non_membership;
  if (row.is_composite() && row.contains(target)) return Role::hesitancy;
  return Role::none;
}

}  // namespace

IfsTriple IfsTriple::from_pair(double membership, double non_membership) {
  auto in_unit = [](double v) { return std::isfinite(v) && v >= 0.0 && v <= 1.0; };
  if (!in_unit(membership) || !in_unit(non_membership)) {
    throw InputError("membership and non-membership must lie in [0, 1]");
  }
  if (membership + non_membership > 1.0 + kTripleTolerance) {
    throw InputError("membership + non-membership exceeds 1");
  }
  const double hesitancy = std::max(0.0, 1.0 - membership - non_membership);
  return {membership, non_membership, hesitancy};
}

std::vector<std::size_t> RoleAssignment::rows_with(std::size_t target, Role r) const {
  std::vector<std::size_t> out;
  const auto& row_roles = roles_.at(target);
  for (std::size_t i = 0; i < row_roles.size(); ++i) {
    if (row_roles[i] == r) out.push_back(i);
  }
  return out;
}

RoleAssignment assign_roles(const Frame& frame, const OrdinalEvidence& e) {
  std::vector<Proposition> rows;
  rows.reserve(e.size());
  for (const auto& entry : e.entries()) {
    if (entry.proposition.empty() || !frame.covers(entry.proposition)) {
      throw InputError("proposition outside the frame in role assignment");
    }
    rows.push_back(entry.proposition);
  }

  std::vector<std::vector<Role>> roles(rows.size(), std::vector<Role>(rows.size()));
  for (std::size_t t = 0; t < rows.size(); ++t) {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      roles[t][r] = rows[t].is_composite() ? Role::membership
                                           : singleton_role(rows[t], rows[r]);
    }
  }
  return RoleAssignment(std::move(rows), std::move(roles));
}

Eigen::RowVectorXd role_aggregate(const FeatureMatrix& matrix, const RoleAssignment& roles,
                                  std::size_t target, Role role) {
  Eigen::RowVectorXd sum = Eigen::RowVectorXd::Zero(matrix.values.cols());
  for (std::size_t r : roles.rows_with(target, role)) {
    sum += matrix.values.row(static_cast<Eigen::Index>(r));
  }
  return sum;
}

IfsTriple role_ratios(const FeatureMatrix& matrix, const RoleAssignment& roles,
                      std::size_t target) {
  const double vm = role_aggregate(matrix, roles, target, Role::membership).sum();
  const double vn = role_aggregate(matrix, roles, target, Role::non_membership).sum();
  const double vh = role_aggregate(matrix, roles, target, Role::hesitancy).sum();
  const double total = vm + vn + vh;
  if (!(total > 0.0)) {
    throw NumericError("membership, non-membership and hesitancy of row " +
                       std::to_string(target + 1) + " all sum to zero");
  }
  return IfsTriple::from_pair(vm / total, vn / total);
}

NormalizedMatrix majorize(const FeatureMatrix& matrix, const RoleAssignment& roles) {
  if (matrix.rows() != roles.size()) {
    throw InputError("feature matrix has " + std::to_string(matrix.rows()) +
                     " rows but the role assignment covers " +
                     std::to_string(roles.size()));
  }
  if (matrix.rows() == 0 || !(matrix.values.sum() > 0.0)) {
    throw NumericError("cannot majorize an all-zero feature matrix");
  }

  const Eigen::RowVectorXd co = matrix.values.colwise().sum();
  const double co_total = co.sum();

  NormalizedMatrix out{matrix.values};
  for (std::size_t t = 0; t < roles.size(); ++t) {
    auto row = out.values.row(static_cast<Eigen::Index>(t));
    if (roles.proposition(t).is_singleton()) {
      row *= role_ratios(matrix, roles, t).membership;
    } else {
      row = row.cwiseProduct(co / co_total);
    }
  }

  const double total = out.values.sum();
  if (!(total > 0.0)) {
    throw NumericError("majorized matrix sums to zero; cannot rescale");
  }
  out.values /= total;
  return out;
}

}  // namespace ordfuse

#include "ordfuse/mrbf.hpp"

#include <cmath>
#include <string>

#include "ordfuse/error.hpp"

namespace ordfuse {

namespace {

void check_arguments(double order, double mass, double k) {
  if (!std::isfinite(order) || order < 0.0) {
    throw InputError("order must be a finite value >= 0");
  }
  if (!std::isfinite(mass) || mass < 0.0 || mass > 1.0) {
    throw InputError("mass must lie in [0, 1]");
  }
  if (!std::isfinite(k) || k < 0.0) {
    throw InputError("kernel width k must be a finite value >= 0");
  }
}

}  // namespace

double mrbf_kernel(double order, double mass, double k) {
  check_arguments(order, mass, k);
  const double d = order - mass;
  return std::exp(-k * d * d);
}

FeatureVector expand(double order, double mass, double k, std::size_t dims,
                     bool eq22_literal) {
  check_arguments(order, mass, k);
  if (dims < 1) throw InputError("feature expansion needs dims >= 1");

  const double x = (eq22_literal ? 2.0 : 2.0 * k) * order * mass;
  const auto n = static_cast<Eigen::Index>(dims);
  FeatureVector out{Eigen::RowVectorXd(n)};
  double term = std::exp(-k * (order * order + mass * mass));
  for (Eigen::Index j = 0; j < n; ++j) {
    if (j > 0) term *= x / static_cast<double>(j);
    out.components(j) = term;
  }
  return out;
}

double order_value(std::size_t position, std::size_t count, OrderScale scale) {
  const auto order = static_cast<double>(OrdinalEvidence::order_of(position));
  if (scale == OrderScale::normalized) {
    return order / static_cast<double>(count);
  }
  return order;
}

FeatureMatrix expand_evidence(const OrdinalEvidence& e, double k,
                              const ExpansionOptions& options) {
  if (options.dims < 1) throw InputError("feature expansion needs dims >= 1");
  FeatureMatrix out{Eigen::MatrixXd(static_cast<Eigen::Index>(e.size()),
                                    static_cast<Eigen::Index>(options.dims))};
  for (std::size_t i = 0; i < e.size(); ++i) {
    const double order = order_value(i, e.size(), options.order_scale);
    out.values.row(static_cast<Eigen::Index>(i)) =
        expand(order, e.at(i).mass, k, options.dims, options.eq22_literal).components;
  }
  return out;
}

}  // namespace ordfuse

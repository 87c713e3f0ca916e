#include "ordfuse/negation.hpp"

#include <cmath>
#include <string>

#include "ordfuse/error.hpp"

namespace ordfuse {

namespace {

constexpr double kClosedFormTolerance = 1e-12;

// Sum as an unevaluated pair hi + lo (compensated summation).
struct CompensatedSum {
  double hi = 0.0;
  double lo = 0.0;

  void add(double x) {
    const double t = hi + x;
    lo += std::abs(hi) >= std::abs(x) ? (hi - t) + x : (x - t) + hi;
    hi = t;
  }
};

// x / (hi + lo) with one Newton correction, so equal shares of a total come
// out as the correctly rounded 1/n.
double divide(double x, const CompensatedSum& d) {
  const double q = x / d.hi;
  const double r = std::fma(-q, d.hi, x) - q * d.lo;
  return q + r / d.hi;
}

std::vector<std::pair<Proposition, double>> focal_or_throw(const MassFunction& m) {
  auto focal = m.focal_elements();
  if (focal.size() < 2) {
    throw NumericError("negation needs at least two focal elements, got " +
                       std::to_string(focal.size()));
  }
  return focal;
}

}  // namespace

MassFunction negate_bpa(const MassFunction& m) {
  const auto focal = focal_or_throw(m);

  // Complement each focal mass, then normalize by the complements' sum.
  std::vector<double> complement;
  complement.reserve(focal.size());
  CompensatedSum total;
  for (const auto& [p, mass] : focal) {
    complement.push_back(1.0 - mass);
    total.add(complement.back());
  }
  if (!(total.hi > 0.0)) throw NumericError("negation complements sum to zero");

  // The two forms agree exactly only for a unit total; a total of 1 + d
  // moves them apart by at most |d| / (n - 1).
  const double n_minus_1 = static_cast<double>(focal.size() - 1);
  const double tolerance = kClosedFormTolerance + std::abs(m.total() - 1.0);
  MassFunction::Map out;
  for (std::size_t i = 0; i < focal.size(); ++i) {
    const double value = divide(complement[i], total);
    const double closed = (1.0 - focal[i].second) / n_minus_1;
    if (std::abs(value - closed) > tolerance) {
      throw InternalError("negation disagrees with its closed form for " +
                          m.frame().format(focal[i].first));
    }
    out.emplace(focal[i].first, value);
  }
  return MassFunction(m.frame(), std::move(out));
}

MassFunction negate_bpa_closed_form(const MassFunction& m) {
  const auto focal = focal_or_throw(m);
  const double n_minus_1 = static_cast<double>(focal.size() - 1);
  MassFunction::Map out;
  for (const auto& [p, mass] : focal) out.emplace(p, (1.0 - mass) / n_minus_1);
  return MassFunction(m.frame(), std::move(out));
}

}  // namespace ordfuse

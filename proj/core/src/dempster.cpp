#include "ordfuse/dempster.hpp"

#include <algorithm>
#include <sstream>

#include "ordfuse/error.hpp"

namespace ordfuse {

namespace {

void require_same_frame(const MassFunction& m1, const MassFunction& m2) {
  if (m1.frame() != m2.frame()) {
    throw InputError("mass functions are defined on different frames");
  }
}

}  // namespace

ConflictCoefficient conflict_k(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1, m2);
  double k = 0.0;
  for (const auto& [g, a] : m1.focal_elements()) {
    for (const auto& [h, b] : m2.focal_elements()) {
      if (g.disjoint(h)) k += a * b;
    }
  }
  return {std::clamp(k, 0.0, 1.0)};
}

MassFunction combine(const MassFunction& m1, const MassFunction& m2) {
  require_same_frame(m1, m2);
  const auto f1 = m1.focal_elements();
  const auto f2 = m2.focal_elements();

  double k = 0.0;
  MassFunction::Map joint;
  for (const auto& [g, a] : f1) {
    for (const auto& [h, b] : f2) {
      const Proposition e = g & h;
      if (e.empty()) {
        k += a * b;
      } else {
        joint[e] += a * b;
      }
    }
  }
  if (k >= 1.0 - kTotalConflictTolerance || joint.empty()) {
    std::ostringstream os;
    os.precision(17);
    os << "total conflict (K = " << k << "); Dempster's rule is undefined";
    throw NumericError(os.str());
  }
  const double scale = 1.0 - k;
  for (auto& [e, mass] : joint) mass /= scale;
  return MassFunction(m1.frame(), std::move(joint));
}

MassFunction self_combine(const MassFunction& m, std::size_t times) {
  MassFunction acc = m;
  for (std::size_t i = 0; i < times; ++i) acc = combine(acc, m);
  return acc;
}

double width_k(const EvidenceSet& es, KMode mode) {
  const auto bpas = es.bpas();
  double sum = 0.0;
  double max = 0.0;
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < bpas.size(); ++i) {
    for (std::size_t j = i + 1; j < bpas.size(); ++j) {
      const double k = conflict_k(bpas[i], bpas[j]).value;
      sum += k;
      max = std::max(max, k);
      ++pairs;
    }
  }
  if (pairs == 0) return 0.0;
  return mode == KMode::pairwise_max ? max : sum / static_cast<double>(pairs);
}

}  // namespace ordfuse

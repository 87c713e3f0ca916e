#pragma once

// Classical Dempster-Shafer conflict and combination.

#include <cstddef>

#include "ordfuse/config.hpp"
#include "ordfuse/types.hpp"

namespace ordfuse {

/// Combinations whose conflict is within this distance of 1 are rejected.
inline constexpr double kTotalConflictTolerance = 1e-12;

/// Degree of conflict between two mass functions, in [0, 1].
struct ConflictCoefficient {
  double value = 0.0;

  friend auto operator<=>(const ConflictCoefficient&, const ConflictCoefficient&) = default;
};

/// Sum of m1(G) * m2(H) over focal pairs with an empty intersection.
/// Throws InputError when the frames differ.
ConflictCoefficient conflict_k(const MassFunction& m1, const MassFunction& m2);

/// Dempster's rule. Only focal elements are enumerated; the result holds
/// the non-zero intersections. Throws NumericError on total conflict.
MassFunction combine(const MassFunction& m1, const MassFunction& m2);

/// m combined with itself `times` times (m ⊕ m ⊕ ... with `times` ⊕).
MassFunction self_combine(const MassFunction& m, std::size_t times);

/// Kernel width for the feature expansion: the mean (or max) conflict over
/// all unordered pairs of order-erased evidences; 0 for a single evidence.
double width_k(const EvidenceSet& es, KMode mode = KMode::pairwise_mean);

}  // namespace ordfuse

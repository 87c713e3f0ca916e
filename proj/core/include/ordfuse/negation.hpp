#pragma once

#include "ordfuse/types.hpp"

namespace ordfuse {

/// Negation of a mass function over its n focal elements (zero-mass entries
/// are dropped first). Each focal element's complement 1 - m is divided by
/// the sum of all complements; the result is cross-checked against the
/// closed form (1 - m) / (n - 1) to 1e-12.
///
/// Throws NumericError when fewer than two focal elements remain.
MassFunction negate_bpa(const MassFunction& m);

/// The closed form (1 - m) / (n - 1) alone, for comparison and tests.
MassFunction negate_bpa_closed_form(const MassFunction& m);

}  // namespace ordfuse

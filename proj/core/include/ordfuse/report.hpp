#pragma once

#include <span>
#include <string>

#include "ordfuse/fusion.hpp"

namespace ordfuse {

/// Stage-keyed JSON, full precision, byte-stable for identical reports.
/// Without `trace` only the width and the two BPAs are written.
std::string report_json(const FusionReport& report, bool trace);

/// Aligned text table, 6 decimals.
std::string report_table(const FusionReport& report, bool trace);

/// A single mass function, listing `order` in that order.
std::string bpa_json(const MassFunction& m, std::span<const Proposition> order);
std::string bpa_table(const MassFunction& m, std::span<const Proposition> order,
                      const std::string& row_label);

}  // namespace ordfuse

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace ordfuse {

/// How pairwise conflict coefficients are aggregated into the kernel width.
enum class KMode { pairwise_mean, pairwise_max };

/// Numeric order fed to the kernel for the entry at 1-based position i.
enum class OrderScale {
  raw,         // i
  normalized,  // i / n
};

/// Axis along which uncertainty scores are normalized into weights.
enum class WeightAxis { evidences, propositions };

enum class OutputFormat { table, json };

/// Every tunable of the fusion pipeline. Defaults give the reference
/// behaviour.
struct Configuration {
  KMode k_mode = KMode::pairwise_mean;
  OrderScale order_scale = OrderScale::raw;
  std::size_t dims = 4;
  bool eq22_literal = false;
  bool role_filter = false;
  WeightAxis weight_axis = WeightAxis::evidences;
  OutputFormat output = OutputFormat::table;
  bool trace = false;

  friend bool operator==(const Configuration&, const Configuration&) = default;
};

// Kebab-case names, shared by the CLI flags and the document "config" block.
std::string_view to_string(KMode v);
std::string_view to_string(OrderScale v);
std::string_view to_string(WeightAxis v);
std::string_view to_string(OutputFormat v);

std::optional<KMode> parse_k_mode(std::string_view s);
std::optional<OrderScale> parse_order_scale(std::string_view s);
std::optional<WeightAxis> parse_weight_axis(std::string_view s);
std::optional<OutputFormat> parse_output_format(std::string_view s);

}  // namespace ordfuse

#include "ordfuse/config.hpp"

namespace ordfuse {

std::string_view to_string(KMode v) {
  return v == KMode::pairwise_mean ? "pairwise-mean" : "pairwise-max";
}

std::string_view to_string(OrderScale v) {
  return v == OrderScale::raw ? "raw" : "normalized";
}

std::string_view to_string(WeightAxis v) {
  return v == WeightAxis::evidences ? "evidences" : "propositions";
}

std::string_view to_string(OutputFormat v) {
  return v == OutputFormat::table ? "table" : "json";
}

std::optional<KMode> parse_k_mode(std::string_view s) {
  if (s == "pairwise-mean") return KMode::pairwise_mean;
  if (s == "pairwise-max") return KMode::pairwise_max;
  return std::nullopt;
}

std::optional<OrderScale> parse_order_scale(std::string_view s) {
  if (s == "raw") return OrderScale::raw;
  if (s == "normalized") return OrderScale::normalized;
  return std::nullopt;
}

std::optional<WeightAxis> parse_weight_axis(std::string_view s) {
  if (s == "evidences") return WeightAxis::evidences;
  if (s == "propositions") return WeightAxis::propositions;
  return std::nullopt;
}

std::optional<OutputFormat> parse_output_format(std::string_view s) {
  if (s == "table") return OutputFormat::table;
  if (s == "json") return OutputFormat::json;
  return std::nullopt;
}

}  // namespace ordfuse

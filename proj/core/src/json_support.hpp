#pragma once

// Private JSON helpers shared by the document and report writers.

#include <json.hpp>

#include "ordfuse/config.hpp"
#include "ordfuse/types.hpp"

#include <Eigen/Core>

namespace ordfuse::detail {

using Json = nlohmann::ordered_json;

inline Json config_to_json(const Configuration& cfg) {
  Json j;
  j["k-mode"] = to_string(cfg.k_mode);
  j["order-scale"] = to_string(cfg.order_scale);
  j["dims"] = cfg.dims;
  j["eq22-literal"] = cfg.eq22_literal;
  j["role-filter"] = cfg.role_filter;
  j["weight-axis"] = to_string(cfg.weight_axis);
  j["output"] = to_string(cfg.output);
  j["trace"] = cfg.trace;
  return j;
}

inline Json matrix_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline Json bpa_to_json(const MassFunction& m, std::span<const Proposition> order) {
  Json out = Json::array();
  for (const auto& p : order) {
    out.push_back(Json{{"proposition", m.frame().members(p)}, {"mass", m.mass(p)}});
  }
  return out;
}

}  // namespace ordfuse::detail

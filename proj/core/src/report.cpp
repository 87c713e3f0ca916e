#include "ordfuse/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json_support.hpp"
#include "ordfuse/document.hpp"

namespace ordfuse {

namespace {

using detail::Json;

std::string_view role_name(Role r) {
  switch (r) {
    case Role::membership: return "membership";
    case Role::non_membership: return "non-membership";
    case Role::hesitancy: return "hesitancy";
    case Role::none: break;
  }
  return "none";
}

// Fixed-width text grid: a label column followed by numeric columns.
class Grid {
 public:
  explicit Grid(std::vector<std::string> header) : header_(std::move(header)) {}

  void add(std::string label, const std::vector<double>& values) {
    std::vector<std::string> cells{std::move(label)};
    for (double v : values) {
      std::ostringstream os;
      os << std::fixed << std::setprecision(6) << v;
      cells.push_back(os.str());
    }
    rows_.push_back(std::move(cells));
  }

  void write(std::ostream& os) const {
    std::vector<std::size_t> width(header_.size(), 0);
    auto measure = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size() && c < width.size(); ++c) {
        width[c] = std::max(width[c], cells[c].size());
      }
    };
    measure(header_);
    for (const auto& r : rows_) measure(r);

    auto line = [&](const std::vector<std::string>& cells) {
      for (std::size_t c = 0; c < cells.size(); ++c) {
        if (c == 0) {
          os << std::left << std::setw(static_cast<int>(width[c])) << cells[c];
        } else {
          os << "  " << std::right << std::setw(static_cast<int>(width[c])) << cells[c];
        }
      }
      os << '\n';
    };
    line(header_);
    for (const auto& r : rows_) line(r);
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::vector<double> row_values(const Eigen::MatrixXd& m, Eigen::Index r) {
  std::vector<double> out;
  for (Eigen::Index c = 0; c < m.cols(); ++c) out.push_back(m(r, c));
  return out;
}

std::vector<double> masses(const MassFunction& m, std::span<const Proposition> order) {
  std::vector<double> out;
  for (const auto& p : order) out.push_back(m.mass(p));
  return out;
}

std::vector<std::string> proposition_header(const Frame& frame,
                                            std::span<const Proposition> order,
                                            std::string first) {
  std::vector<std::string> header{std::move(first)};
  for (const auto& p : order) header.push_back(frame.format(p));
  return header;
}

void write_matrix(std::ostream& os, const std::string& title, const Eigen::MatrixXd& m,
                  const std::vector<std::string>& row_labels) {
  std::vector<std::string> header{title};
  for (Eigen::Index c = 0; c < m.cols(); ++c) header.push_back("M" + std::to_string(c + 1));
  Grid grid(std::move(header));
  for (std::size_t r = 0; r < row_labels.size(); ++r) {
    grid.add(row_labels[r], row_values(m, static_cast<Eigen::Index>(r)));
  }
  grid.write(os);
}

}  // namespace

std::string report_json(const FusionReport& report, bool trace) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["config"] = detail::config_to_json(report.config);
  doc["frame"] = report.frame.labels();
  Json props = Json::array();
  for (const auto& p : report.propositions) props.push_back(report.frame.members(p));
  doc["propositions"] = std::move(props);
  doc["k_width"] = report.k_width;

  if (trace) {
    Json evidences = Json::array();
    for (const auto& t : report.evidences) {
      Json e;
      Json order = Json::array();
      for (std::size_t r = 0; r < t.roles.size(); ++r) {
        order.push_back(report.frame.members(t.roles.proposition(r)));
      }
      e["order"] = std::move(order);
      e["features"] = detail::matrix_to_json(t.features.values);
      Json roles = Json::array();
      for (std::size_t target = 0; target < t.roles.size(); ++target) {
        Json row = Json::array();
        for (std::size_t r = 0; r < t.roles.size(); ++r) {
          row.push_back(role_name(t.roles.role(target, r)));
        }
        roles.push_back(std::move(row));
      }
      e["roles"] = std::move(roles);
      e["normalized"] = detail::matrix_to_json(t.normalized.values);
      e["negated"] = detail::matrix_to_json(t.negated.values);
      e["uncertainty"] = t.uncertainty.values;
      evidences.push_back(std::move(e));
    }
    doc["evidences"] = std::move(evidences);
    doc["scores"] = detail::matrix_to_json(report.scores);
    doc["weights"] = detail::matrix_to_json(report.weights.values);
    doc["fused"] = detail::matrix_to_json(report.fused.values);
  }

  doc["modified_bpa"] = detail::bpa_to_json(report.modified_bpa, report.propositions);
  doc["final_bpa"] = detail::bpa_to_json(report.final_bpa, report.propositions);
  return doc.dump(2) + "\n";
}

std::string report_table(const FusionReport& report, bool trace) {
  std::ostringstream os;
  os << "k_width " << std::fixed << std::setprecision(6) << report.k_width << "\n\n";

  if (trace) {
    for (std::size_t e = 0; e < report.evidences.size(); ++e) {
      const auto& t = report.evidences[e];
      std::vector<std::string> labels;
      for (std::size_t r = 0; r < t.roles.size(); ++r) {
        labels.push_back(report.frame.format(t.roles.proposition(r)));
      }
      os << "evidence " << e + 1 << "\n";
      write_matrix(os, "features", t.features.values, labels);
      write_matrix(os, "normalized", t.normalized.values, labels);
      write_matrix(os, "negated", t.negated.values, labels);
      Grid u({"uncertainty", "U"});
      for (std::size_t r = 0; r < labels.size(); ++r) u.add(labels[r], {t.uncertainty.values[r]});
      u.write(os);
      os << '\n';
    }
    Grid w(proposition_header(report.frame, report.propositions, "weights"));
    for (Eigen::Index e = 0; e < report.weights.values.rows(); ++e) {
      w.add("evidence " + std::to_string(e + 1), row_values(report.weights.values, e));
    }
    w.write(os);
    os << '\n';
  }

  Grid bpas(proposition_header(report.frame, report.propositions, "bpa"));
  bpas.add("modified", masses(report.modified_bpa, report.propositions));
  bpas.add("final", masses(report.final_bpa, report.propositions));
  bpas.write(os);
  return os.str();
}

std::string bpa_json(const MassFunction& m, std::span<const Proposition> order) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["frame"] = m.frame().labels();
  doc["bpa"] = detail::bpa_to_json(m, order);
  return doc.dump(2) + "\n";
}

std::string bpa_table(const MassFunction& m, std::span<const Proposition> order,
                      const std::string& row_label) {
  std::ostringstream os;
  Grid grid(proposition_header(m.frame(), order, "bpa"));
  grid.add(row_label, masses(m, order));
  grid.write(os);
  return os.str();
}

}  // namespace ordfuse

#include "ordfuse/document.hpp"

#include <cmath>
#include <set>
#include <string>

#include "json_support.hpp"

namespace ordfuse {

namespace {

using detail::Json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

const Json& field(const Json& object, const std::string& key, const std::string& path) {
  auto it = object.find(key);
  if (it == object.end()) throw ParseError(path, "missing field '" + key + "'");
  return *it;
}

std::string expect_string(const Json& j, const std::string& path) {
  if (!j.is_string()) throw ParseError(path, "expected a string");
  return j.get<std::string>();
}

bool expect_bool(const Json& j, const std::string& path) {
  if (!j.is_boolean()) throw ParseError(path, "expected true or false");
  return j.get<bool>();
}

template <typename Parse>
auto expect_enum(const Json& j, const std::string& path, Parse parse, const char* allowed) {
  auto value = parse(expect_string(j, path));
  if (!value) throw ParseError(path, std::string("expected one of ") + allowed);
  return *value;
}

Configuration parse_config(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ParseError(path, "expected an object");
  Configuration cfg;
  for (const auto& [key, value] : j.items()) {
    const std::string where = path + "/" + key;
    if (key == "k-mode") {
      cfg.k_mode = expect_enum(value, where, parse_k_mode, "pairwise-mean, pairwise-max");
    } else if (key == "order-scale") {
      cfg.order_scale = expect_enum(value, where, parse_order_scale, "raw, normalized");
    } else if (key == "dims") {
      if (!value.is_number_integer() || value.get<long long>() < 1) {
        throw ParseError(where, "expected an integer >= 1");
      }
      cfg.dims = value.get<std::size_t>();
    } else if (key == "eq22-literal") {
      cfg.eq22_literal = expect_bool(value, where);
    } else if (key == "role-filter") {
      cfg.role_filter = expect_bool(value, where);
    } else if (key == "weight-axis") {
      cfg.weight_axis = expect_enum(value, where, parse_weight_axis, "evidences, propositions");
    } else if (key == "output") {
      cfg.output = expect_enum(value, where, parse_output_format, "table, json");
    } else if (key == "trace") {
      cfg.trace = expect_bool(value, where);
    } else {
      throw ParseError(where, "unknown configuration key");
    }
  }
  return cfg;
}

OrdinalEvidence parse_evidence(const Json& j, const Frame& frame, std::size_t index) {
  const std::string path = "/evidences/" + std::to_string(index);
  if (!j.is_array()) throw ParseError(path, "expected an array of entries");
  if (j.empty()) throw ParseError(path, "evidence has no entries");

  std::vector<OrdinalEntry> entries;
  std::set<Proposition> seen;
  double total = 0.0;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const std::string where = path + "/" + std::to_string(k);
    const Json& entry = j[k];
    if (!entry.is_object()) throw ParseError(where, "expected an object");
    for (const auto& [key, value] : entry.items()) {
      if (key != "proposition" && key != "mass") throw ParseError(where + "/" + key, "unknown field");
    }

    const Json& members = field(entry, "proposition", where);
    if (!members.is_array() || members.empty()) {
      throw ParseError(where + "/proposition", "expected a non-empty array of element labels");
    }
    std::vector<std::string> labels;
    for (std::size_t m = 0; m < members.size(); ++m) {
      labels.push_back(expect_string(members[m], where + "/proposition/" + std::to_string(m)));
    }
    Proposition p;
    try {
      p = frame.proposition(labels);
    } catch (const InputError& err) {
      throw ParseError(where + "/proposition", err.what());
    }
    if (!seen.insert(p).second) {
      throw ParseError(where + "/proposition", "evidence " + std::to_string(index + 1) +
                                                   " repeats proposition " + frame.format(p));
    }

    const Json& mass = field(entry, "mass", where);
    if (!mass.is_number()) throw ParseError(where + "/mass", "expected a number");
    const double value = mass.get<double>();
    if (!std::isfinite(value) || value < 0.0 || value > 1.0) {
      throw ParseError(where + "/mass", "mass must lie in [0, 1]");
    }
    total += value;
    entries.push_back({p, value});
  }

  if (std::abs(total - 1.0) > kIngestionTolerance) {
    throw ParseError(path, "masses of evidence " + std::to_string(index + 1) + " sum to " +
                               std::to_string(total) + ", expected 1");
  }
  if (std::abs(total - 1.0) > kMassSumTolerance) {
    for (auto& entry : entries) entry.mass /= total;
  }
  return OrdinalEvidence(frame, std::move(entries));
}

}  // namespace

EvidenceDocument parse_evidence_document(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& err) {
    throw ParseError(line_column(text, err.byte), "malformed JSON");
  }
  if (!doc.is_object()) throw ParseError("/", "expected a JSON object");

  for (const auto& [key, value] : doc.items()) {
    if (key != "schema_version" && key != "description" && key != "frame" &&
        key != "evidences" && key != "config") {
      throw ParseError("/" + key, "unknown field");
    }
  }

  const Json& version = field(doc, "schema_version", "");
  if (!version.is_number_integer() || version.get<long long>() != kSchemaVersion) {
    throw ParseError("/schema_version", "unsupported schema version (expected " +
                                            std::to_string(kSchemaVersion) + ")");
  }
  if (auto it = doc.find("description"); it != doc.end()) expect_string(*it, "/description");

  const Json& labels = field(doc, "frame", "");
  if (!labels.is_array()) throw ParseError("/frame", "expected an array of labels");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    names.push_back(expect_string(labels[i], "/frame/" + std::to_string(i)));
  }
  std::optional<Frame> frame;
  try {
    frame.emplace(std::move(names));
  } catch (const InputError& err) {
    throw ParseError("/frame", err.what());
  }

  const Json& evidences = field(doc, "evidences", "");
  if (!evidences.is_array()) throw ParseError("/evidences", "expected an array");
  if (evidences.empty()) throw ParseError("/evidences", "at least one evidence is required");
  std::vector<OrdinalEvidence> parsed;
  for (std::size_t i = 0; i < evidences.size(); ++i) {
    parsed.push_back(parse_evidence(evidences[i], *frame, i));
  }

  Configuration cfg;
  if (auto it = doc.find("config"); it != doc.end()) cfg = parse_config(*it, "/config");

  return EvidenceDocument{EvidenceSet(*frame, std::move(parsed)), cfg};
}

std::string serialize_evidence_document(const EvidenceSet& es, const Configuration& cfg) {
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["frame"] = es.frame().labels();
  Json evidences = Json::array();
  for (const auto& e : es.evidences()) {
    Json entries = Json::array();
    for (const auto& entry : e.entries()) {
      entries.push_back(
          Json{{"proposition", es.frame().members(entry.proposition)}, {"mass", entry.mass}});
    }
    evidences.push_back(std::move(entries));
  }
  doc["evidences"] = std::move(evidences);
  doc["config"] = detail::config_to_json(cfg);
  return doc.dump(2) + "\n";
}

}  // namespace ordfuse

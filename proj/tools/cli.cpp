#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ordfuse/config.hpp"
#include "ordfuse/dempster.hpp"
#include "ordfuse/document.hpp"
#include "ordfuse/error.hpp"
#include "ordfuse/fusion.hpp"
#include "ordfuse/mrbf.hpp"
#include "ordfuse/negation.hpp"
#include "ordfuse/report.hpp"

namespace ordfuse::cli {

namespace {

struct ConfigFlags {
  std::optional<std::string> k_mode;
  std::optional<std::string> order_scale;
  std::optional<std::size_t> dims;
  CLI::Option* eq22_literal = nullptr;
  bool eq22_literal_value = false;
  CLI::Option* role_filter = nullptr;
  bool role_filter_value = false;
  std::optional<std::string> weight_axis;
  std::optional<std::string> output;
  CLI::Option* trace = nullptr;
  bool trace_value = false;
};

void add_output_flag(CLI::App* cmd, std::optional<std::string>& output) {
  cmd->add_option("--output", output, "table or json")
      ->check(CLI::IsMember({"table", "json"}));
}

void add_config_flags(CLI::App* cmd, ConfigFlags& f) {
  cmd->add_option("--k-mode", f.k_mode, "Conflict aggregation for the kernel width")
      ->check(CLI::IsMember({"pairwise-mean", "pairwise-max"}));
  cmd->add_option("--order-scale", f.order_scale, "Numeric encoding of positions")
      ->check(CLI::IsMember({"raw", "normalized"}));
  cmd->add_option("--dims", f.dims, "Feature dimensions")->check(CLI::PositiveNumber);
  f.eq22_literal = cmd->add_flag("--eq22-literal{true}", f.eq22_literal_value,
                                 "Use 2^j/j! feature coefficients");
  f.role_filter = cmd->add_flag("--role-filter{true}", f.role_filter_value,
                                "Drop same-role products in the uncertainty score");
  cmd->add_option("--weight-axis", f.weight_axis, "Normalization axis of the weights")
      ->check(CLI::IsMember({"evidences", "propositions"}));
  add_output_flag(cmd, f.output);
  f.trace = cmd->add_flag("--trace{true}", f.trace_value, "Emit every pipeline stage");
}

void apply(const ConfigFlags& f, Configuration& cfg) {
  if (f.k_mode) cfg.k_mode = *parse_k_mode(*f.k_mode);
  if (f.order_scale) cfg.order_scale = *parse_order_scale(*f.order_scale);
  if (f.dims) cfg.dims = *f.dims;
  if (f.eq22_literal->count() > 0) cfg.eq22_literal = f.eq22_literal_value;
  if (f.role_filter->count() > 0) cfg.role_filter = f.role_filter_value;
  if (f.weight_axis) cfg.weight_axis = *parse_weight_axis(*f.weight_axis);
  if (f.output) cfg.output = *parse_output_format(*f.output);
  if (f.trace->count() > 0) cfg.trace = f.trace_value;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

EvidenceDocument load(const std::string& path) {
  try {
    return parse_evidence_document(read_file(path));
  } catch (const ParseError& err) {
    throw InputError(path + ": " + err.what());
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string part;
  std::istringstream in(s);
  while (std::getline(in, part, sep)) out.push_back(part);
  return out;
}

// "a:0.7,b:0.2,a+b:0.1"; the frame defaults to labels in order of appearance.
MassFunction parse_bpa_spec(const std::string& spec, const std::string& frame_spec) {
  std::vector<std::pair<std::vector<std::string>, double>> items;
  std::vector<std::string> labels;
  for (const auto& item : split(spec, ',')) {
    auto colon = item.rfind(':');
    if (colon == std::string::npos) throw InputError("bpa entry '" + item + "' lacks ':mass'");
    double mass = 0.0;
    try {
      std::size_t used = 0;
      mass = std::stod(item.substr(colon + 1), &used);
      if (used != item.size() - colon - 1) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("bad mass in bpa entry '" + item + "'");
    }
    auto members = split(item.substr(0, colon), '+');
    for (const auto& m : members) {
      if (std::find(labels.begin(), labels.end(), m) == labels.end()) labels.push_back(m);
    }
    items.emplace_back(std::move(members), mass);
  }
  Frame frame(frame_spec.empty() ? labels : split(frame_spec, ','));
  MassFunction::Map masses;
  for (const auto& [members, mass] : items) {
    if (!masses.emplace(frame.proposition(members), mass).second) {
      throw InputError("bpa repeats a proposition");
    }
  }
  return MassFunction::checked(std::move(frame), std::move(masses));
}

std::vector<Proposition> keys(const MassFunction& m) {
  std::vector<Proposition> out;
  for (const auto& [p, mass] : m) out.push_back(p);
  return out;
}

int exit_code(ErrorKind kind) { return static_cast<int>(kind); }

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ordinal evidence fusion and classical Dempster-Shafer tools", "ordfuse"};
  app.require_subcommand(1);

  std::string fuse_path;
  ConfigFlags fuse_flags;
  auto* fuse = app.add_subcommand("fuse", "Fuse the ordinal evidences of a document");
  fuse->add_option("document", fuse_path, "Evidence document (JSON)")->required();
  add_config_flags(fuse, fuse_flags);

  std::string combine_path;
  std::optional<std::string> combine_output;
  auto* combine_cmd = app.add_subcommand(
      "combine", "Combine a document's evidences left to right with Dempster's rule");
  combine_cmd->add_option("document", combine_path, "Evidence document (JSON)")->required();
  add_output_flag(combine_cmd, combine_output);

  std::string negate_path;
  std::string bpa_spec;
  std::string negate_frame;
  std::optional<std::string> negate_output;
  auto* negate = app.add_subcommand("negate", "Negate mass functions");
  auto* negate_doc = negate->add_option("document", negate_path,
                                        "Evidence document; each evidence is negated");
  auto* negate_spec = negate->add_option("--bpa", bpa_spec, "Inline BPA, e.g. a:0.7,b:0.3");
  negate->add_option("--frame", negate_frame, "Frame labels, e.g. a,b,c (default: from --bpa)");
  negate_doc->excludes(negate_spec);
  add_output_flag(negate, negate_output);

  double order = 0.0;
  double mass = 0.0;
  double k = 0.0;
  std::size_t dims = kDefaultDims;
  bool literal = false;
  std::optional<std::string> mrbf_output;
  auto* mrbf = app.add_subcommand("mrbf", "Feature vector of one (order, mass) pair");
  mrbf->add_option("--order", order, "Order value")->required();
  mrbf->add_option("--mass", mass, "Mass value")->required();
  mrbf->add_option("--k", k, "Kernel width")->required();
  mrbf->add_option("--dims", dims, "Feature dimensions")->check(CLI::PositiveNumber);
  mrbf->add_flag("--eq22-literal", literal, "Use 2^j/j! feature coefficients");
  add_output_flag(mrbf, mrbf_output);

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : exit_code(ErrorKind::input);
  }

  auto wants_json = [](const std::optional<std::string>& o) { return o && *o == "json"; };

  try {
    if (fuse->parsed()) {
      auto doc = load(fuse_path);
      apply(fuse_flags, doc.config);
      auto report = pipeline(doc.evidences, doc.config);
      out << (doc.config.output == OutputFormat::json ? report_json(report, doc.config.trace)
                                                      : report_table(report, doc.config.trace));
    } else if (combine_cmd->parsed()) {
      auto doc = load(combine_path);
      auto bpas = doc.evidences.bpas();
      MassFunction acc = bpas.front();
      for (std::size_t i = 1; i < bpas.size(); ++i) {
        try {
          acc = combine(acc, bpas[i]);
        } catch (const Error& e) {
          throw StageError("combine (evidence " + std::to_string(i + 1) + ")", e);
        }
      }
      const auto order_keys = keys(acc);
      out << (wants_json(combine_output) ? bpa_json(acc, order_keys)
                                         : bpa_table(acc, order_keys, "combined"));
    } else if (negate->parsed()) {
      std::vector<MassFunction> inputs;
      if (!negate_path.empty()) {
        inputs = load(negate_path).evidences.bpas();
      } else if (!bpa_spec.empty()) {
        inputs.push_back(parse_bpa_spec(bpa_spec, negate_frame));
      } else {
        throw InputError("negate needs a document or --bpa");
      }
      for (std::size_t i = 0; i < inputs.size(); ++i) {
        auto negated = negate_bpa(inputs[i]);
        const auto order_keys = keys(negated);
        out << (wants_json(negate_output)
                    ? bpa_json(negated, order_keys)
                    : bpa_table(negated, order_keys, "negated " + std::to_string(i + 1)));
      }
    } else if (mrbf->parsed()) {
      auto v = expand(order, mass, k, dims, literal);
      if (wants_json(mrbf_output)) {
        nlohmann::ordered_json j;
        j["order"] = order;
        j["mass"] = mass;
        j["k"] = k;
        j["kernel"] = mrbf_kernel(order, mass, k);
        std::vector<double> comps(v.components.data(), v.components.data() + v.components.size());
        j["features"] = comps;
        out << j.dump(2) << "\n";
      } else {
        out << std::fixed << std::setprecision(6);
        for (std::size_t j = 0; j < v.dims(); ++j) {
          out << (j ? " " : "") << v[j];
        }
        out << "\n";
      }
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    err << "error: internal: " << e.what() << "\n";
    return exit_code(ErrorKind::internal);
  }
  return 0;
}

}  // namespace ordfuse::cli

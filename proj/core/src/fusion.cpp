#include "ordfuse/fusion.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "ordfuse/dempster.hpp"
#include "ordfuse/error.hpp"

namespace ordfuse {

WeightTable weights(const Eigen::MatrixXd& u, WeightAxis axis) {
  if ((u.array() < 0.0).any() || !u.allFinite()) {
    throw InputError("uncertainty scores must be finite and non-negative");
  }
  WeightTable w{u};
  if (axis == WeightAxis::evidences) {
    for (Eigen::Index j = 0; j < u.cols(); ++j) {
      const double sum = u.col(j).sum();
      if (!(sum > 0.0)) {
        throw NumericError("all evidences score zero for proposition " +
                           std::to_string(j + 1) + "; weights undefined");
      }
      w.values.col(j) /= sum;
    }
  } else {
    for (Eigen::Index e = 0; e < u.rows(); ++e) {
      const double sum = u.row(e).sum();
      if (!(sum > 0.0)) {
        throw NumericError("evidence " + std::to_string(e + 1) +
                           " scores zero for every proposition; weights undefined");
      }
      w.values.row(e) /= sum;
    }
  }
  return w;
}

FusedFeatures fuse_modified(std::span<const NormalizedMatrix> aligned, const WeightTable& w) {
  if (aligned.empty()) throw InputError("no matrices to fuse");
  if (aligned.size() != w.evidences()) {
    throw InputError("weight table covers " + std::to_string(w.evidences()) +
                     " evidences but " + std::to_string(aligned.size()) + " matrices were given");
  }
  const Eigen::Index rows = aligned.front().values.rows();
  const Eigen::Index dims = aligned.front().values.cols();
  if (static_cast<std::size_t>(rows) != w.propositions()) {
    throw InputError("matrix rows do not match the weight table's propositions");
  }

  Eigen::MatrixXd numerator = Eigen::MatrixXd::Zero(rows, dims);
  Eigen::RowVectorXd input_mass = Eigen::RowVectorXd::Zero(dims);
  for (std::size_t e = 0; e < aligned.size(); ++e) {
    const auto& m = aligned[e].values;
    if (m.rows() != rows || m.cols() != dims) {
      throw InputError("matrices to fuse differ in shape");
    }
    for (Eigen::Index j = 0; j < rows; ++j) {
      numerator.row(j) += w(e, static_cast<std::size_t>(j)) * m.row(j);
    }
    input_mass += m.colwise().sum();
  }

  FusedFeatures fused{numerator};
  for (Eigen::Index y = 0; y < dims; ++y) {
    const double denominator = numerator.col(y).sum();
    if (denominator > 0.0) {
      fused.values.col(y) /= denominator;
    } else if (input_mass(y) > 0.0) {
      throw NumericError("weighted dimension " + std::to_string(y + 1) +
                         " sums to zero; cannot normalize");
    }
  }
  return fused;
}

MassFunction collapse(const Frame& frame, std::span<const Proposition> propositions,
                      const FusedFeatures& fused) {
  if (static_cast<std::size_t>(fused.values.rows()) != propositions.size()) {
    throw InputError("fused rows do not match the proposition list");
  }
  if ((fused.values.array() < 0.0).any() || !fused.values.allFinite()) {
    throw InputError("fused values must be finite and non-negative");
  }
  const Eigen::VectorXd sums = fused.values.rowwise().sum();
  const double total = sums.sum();
  if (!(total > 0.0)) throw NumericError("fused values are all zero");

  MassFunction::Map masses;
  for (std::size_t j = 0; j < propositions.size(); ++j) {
    masses.emplace(propositions[j], sums(static_cast<Eigen::Index>(j)) / total);
  }
  return MassFunction(frame, std::move(masses));
}

Eigen::MatrixXd align_rows(const Eigen::MatrixXd& rows, const OrdinalEvidence& e,
                           std::span<const Proposition> propositions) {
  Eigen::MatrixXd out(static_cast<Eigen::Index>(propositions.size()), rows.cols());
  for (std::size_t j = 0; j < propositions.size(); ++j) {
    auto position = e.position_of(propositions[j]);
    if (!position) {
      throw InputError("evidence lacks proposition " + e.frame().format(propositions[j]));
    }
    out.row(static_cast<Eigen::Index>(j)) = rows.row(static_cast<Eigen::Index>(*position));
  }
  return out;
}

namespace {

template <typename F>
auto run_stage(const std::string& name, F&& f) {
  try {
    return std::forward<F>(f)();
  } catch (const StageError&) {
    throw;
  } catch (const Error& err) {
    throw StageError(name, err);
  }
}

}  // namespace

FusionReport pipeline(const EvidenceSet& es, const Configuration& cfg) {
  const auto& props = es.propositions();
  const ExpansionOptions expansion{cfg.dims, cfg.eq22_literal, cfg.order_scale};

  const double k = run_stage("width_k", [&] { return width_k(es, cfg.k_mode); });

  std::vector<EvidenceTrace> traces;
  std::vector<NormalizedMatrix> aligned;
  Eigen::MatrixXd scores(static_cast<Eigen::Index>(es.size()),
                         static_cast<Eigen::Index>(props.size()));
  for (std::size_t e = 0; e < es.size(); ++e) {
    const auto& evidence = es.evidences()[e];
    const std::string tag = " (evidence " + std::to_string(e + 1) + ")";

    auto features = run_stage("expand_evidence" + tag,
                              [&] { return expand_evidence(evidence, k, expansion); });
    auto roles = run_stage("assign_roles" + tag,
                           [&] { return assign_roles(es.frame(), evidence); });
    auto normalized = run_stage("majorize" + tag, [&] { return majorize(features, roles); });
    auto negated = run_stage("negate_matrix" + tag, [&] { return negate_matrix(normalized); });
    auto u = run_stage("uncertainty" + tag, [&] {
      return cfg.role_filter ? uncertainty_scores(normalized, negated, roles)
                             : uncertainty_scores(normalized, negated);
    });

    Eigen::Map<const Eigen::VectorXd> u_rows(u.values.data(),
                                             static_cast<Eigen::Index>(u.values.size()));
    scores.row(static_cast<Eigen::Index>(e)) =
        align_rows(u_rows, evidence, props).transpose();
    aligned.push_back({align_rows(normalized.values, evidence, props)});
    traces.push_back({std::move(features), std::move(roles), std::move(normalized),
                      std::move(negated), std::move(u)});
  }

  auto w = run_stage("weights", [&] { return weights(scores, cfg.weight_axis); });
  auto fused = run_stage("fuse_modified", [&] { return fuse_modified(aligned, w); });
  auto modified = run_stage("collapse", [&] { return collapse(es.frame(), props, fused); });
  auto final_bpa = run_stage("self_combine", [&] { return self_combine(modified, es.size() - 1); });

  return FusionReport{cfg,
                      es.frame(),
                      props,
                      k,
                      std::move(traces),
                      std::move(scores),
                      std::move(w),
                      std::move(fused),
                      std::move(modified),
                      std::move(final_bpa)};
}

}  // namespace ordfuse

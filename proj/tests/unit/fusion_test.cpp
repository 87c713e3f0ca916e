#include <gtest/gtest.h>

#include "ordfuse/error.hpp"
#include "ordfuse/fusion.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

namespace ordfuse {
namespace {

Eigen::MatrixXd mat(std::initializer_list<std::initializer_list<double>> rows) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

TEST(WeightsTest, Columns) {
  auto w = weights(mat({{0.2}, {0.3}, {0.5}}));
  EXPECT_NEAR(w(0, 0), 0.2, 1e-15);
  EXPECT_NEAR(w(2, 0), 0.5, 1e-15);
  auto even = weights(mat({{0.7, 0.1}, {0.7, 0.1}, {0.7, 0.1}, {0.7, 0.1}}));
  for (std::size_t e = 0; e < 4; ++e) EXPECT_NEAR(even(e, 1), 0.25, 1e-15);
  auto w13 = weights(mat({{1.0}, {3.0}}));
  EXPECT_NEAR(w13(0, 0), 0.25, 1e-15);
  EXPECT_NEAR(w13(1, 0), 0.75, 1e-15);
}

TEST(WeightsTest, PropositionAxisNormalizesRows) {
  auto w = weights(mat({{1.0, 3.0}, {2.0, 2.0}}), WeightAxis::propositions);
  EXPECT_NEAR(w(0, 1), 0.75, 1e-15);
  EXPECT_NEAR(w(1, 0), 0.5, 1e-15);
}

TEST(WeightsTest, Errors) {
  EXPECT_THROW(weights(mat({{0.0, 1.0}, {0.0, 2.0}})), NumericError);
  EXPECT_THROW(weights(mat({{-1.0}, {2.0}})), InputError);
}

TEST(FuseTest, SingleEvidenceNormalizesColumns) {
  std::vector<NormalizedMatrix> one{{mat({{0.1, 0.3}, {0.3, 0.3}})}};
  auto fused = fuse_modified(one, WeightTable{Eigen::MatrixXd::Ones(1, 2)});
  EXPECT_NEAR(fused.values(0, 0), 0.25, 1e-15);
  EXPECT_NEAR(fused.values(1, 0), 0.75, 1e-15);
  EXPECT_NEAR(fused.values(0, 1), 0.5, 1e-15);
}

TEST(FuseTest, IdenticalEvidencesMatchOne) {
  NormalizedMatrix m{mat({{0.2, 0.1}, {0.4, 0.3}})};
  std::vector<NormalizedMatrix> one{m};
  std::vector<NormalizedMatrix> two{m, m};
  auto single = fuse_modified(one, WeightTable{Eigen::MatrixXd::Ones(1, 2)});
  auto pair = fuse_modified(two, WeightTable{mat({{0.3, 0.9}, {0.7, 0.1}})});
  EXPECT_TRUE(pair.values.isApprox(single.values, 1e-15));
}

TEST(FuseTest, TwoWeightedEvidences) {
  std::vector<NormalizedMatrix> ms{{mat({{0.6, 0.1}, {0.2, 0.1}})}, {mat({{0.3, 0.2}, {0.4, 0.1}})}};
  WeightTable w{mat({{1.0 / 4.0, 2.0 / 3.0}, {3.0 / 4.0, 1.0 / 3.0}})};
  auto fused = fuse_modified(ms, w);
  EXPECT_NEAR(fused.values(0, 0), 45.0 / 77.0, 1e-15);
  EXPECT_NEAR(fused.values(0, 1), 7.0 / 11.0, 1e-15);
  EXPECT_NEAR(fused.values(1, 0), 32.0 / 77.0, 1e-15);
  EXPECT_NEAR(fused.values(1, 1), 4.0 / 11.0, 1e-15);

  const Frame f({"a", "b"});
  std::vector<Proposition> props{f.proposition({"a"}), f.proposition({"b"})};
  auto bpa = collapse(f, props, fused);
  EXPECT_NEAR(bpa.mass(props[0]), 47.0 / 77.0, 1e-15);
  EXPECT_NEAR(bpa.mass(props[1]), 30.0 / 77.0, 1e-15);
}

TEST(FuseTest, ZeroInputDimensionStaysZero) {
  std::vector<NormalizedMatrix> ms{{mat({{0.5, 0.0}, {0.5, 0.0}})}};
  auto fused = fuse_modified(ms, WeightTable{Eigen::MatrixXd::Ones(1, 2)});
  EXPECT_EQ(fused.values(0, 1), 0.0);
  EXPECT_NEAR(fused.values(0, 0), 0.5, 1e-15);
}

TEST(FuseTest, ZeroWeightedDenominatorThrows) {
  std::vector<NormalizedMatrix> ms{{mat({{0.5, 0.0}, {0.0, 0.5}})}, {mat({{0.0, 0.5}, {0.5, 0.0}})}};
  // every non-zero entry meets a zero weight
  WeightTable w{mat({{0.0, 1.0}, {1.0, 0.0}})};
  EXPECT_THROW(fuse_modified(ms, w), NumericError);
}

TEST(CollapseTest, Examples) {
  const Frame f({"a", "b", "c", "d"});
  std::vector<Proposition> props{f.proposition({"a"}), f.proposition({"b"}),
                                 f.proposition({"c"}), f.proposition({"d"})};
  auto uniform = collapse(f, props, FusedFeatures{Eigen::MatrixXd::Constant(4, 4, 0.25)});
  for (auto p : props) EXPECT_NEAR(uniform.mass(p), 0.25, 1e-15);

  Eigen::MatrixXd peak = Eigen::MatrixXd::Zero(4, 4);
  peak.row(2).setOnes();
  EXPECT_EQ(collapse(f, props, FusedFeatures{peak}).mass(props[2]), 1.0);

  std::vector<Proposition> two{props[0], props[1]};
  auto m = collapse(f, two, FusedFeatures{mat({{0.5, 0.2, 0.0, 0.1}, {0.5, 0.8, 1.0, 0.9}})});
  EXPECT_NEAR(m.mass(props[0]), 0.2, 1e-15);
  EXPECT_NEAR(m.mass(props[1]), 0.8, 1e-15);

  EXPECT_THROW(collapse(f, two, FusedFeatures{Eigen::MatrixXd::Zero(2, 4)}), NumericError);
}

TEST(PipelineTest, SingleEvidenceFinalEqualsModified) {
  const Frame f = test::abc();
  OrdinalEvidence e(f, {{f.proposition({"b"}), 0.5}, {f.proposition({"a"}), 0.3},
                        {f.proposition({"a", "b"}), 0.2}});
  auto report = pipeline(EvidenceSet(f, {e}));
  EXPECT_EQ(report.k_width, 0.0);
  EXPECT_EQ(report.final_bpa.masses(), report.modified_bpa.masses());
  EXPECT_TRUE(validate_bpa(report.final_bpa).ok());
}

TEST(PipelineTest, FailuresNameTheStage) {
  const Frame f({"a"});
  OrdinalEvidence e(f, {{f.proposition({"a"}), 1.0}});
  Configuration cfg;
  cfg.dims = 1;
  try {
    pipeline(EvidenceSet(f, {e, e}), cfg);
    FAIL() << "expected a stage error";
  } catch (const StageError& err) {
    EXPECT_EQ(err.stage(), "negate_matrix (evidence 1)");
    EXPECT_EQ(err.kind(), ErrorKind::numeric);
  }
}

TEST(PipelineProperty, InvariantsAndDeterminism) {
  testkit::Generator gen(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t frame_size = gen.index(2, 4);
    const std::size_t limit = (std::size_t{1} << frame_size) - 1;
    auto es = gen.evidence_set(frame_size, gen.index(2, std::min<std::size_t>(limit, 5)),
                               gen.index(1, 5));
    Configuration cfg;
    cfg.role_filter = trial % 2 == 1;
    cfg.order_scale = trial % 3 == 0 ? OrderScale::normalized : OrderScale::raw;
    FusionReport report = pipeline(es, cfg);
    EXPECT_TRUE(validate_bpa(report.modified_bpa).ok());
    EXPECT_TRUE(validate_bpa(report.final_bpa).ok());
    for (Eigen::Index j = 0; j < report.weights.values.cols(); ++j) {
      EXPECT_NEAR(report.weights.values.col(j).sum(), 1.0, 1e-9);
    }
    for (Eigen::Index y = 0; y < report.fused.values.cols(); ++y) {
      const double s = report.fused.values.col(y).sum();
      if (s != 0.0) EXPECT_NEAR(s, 1.0, 1e-9);
    }
    FusionReport again = pipeline(es, cfg);
    EXPECT_EQ(again.final_bpa.masses(), report.final_bpa.masses());
    EXPECT_EQ(again.fused.values, report.fused.values);
    EXPECT_EQ(again.scores, report.scores);
  }
}

}  // namespace
}  // namespace ordfuse

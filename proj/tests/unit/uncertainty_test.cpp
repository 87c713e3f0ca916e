#include <gtest/gtest.h>

#include "ordfuse/error.hpp"
#include "ordfuse/uncertainty.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

namespace ordfuse {
namespace {

NormalizedMatrix nm(std::initializer_list<std::initializer_list<double>> rows) {
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index r = 0;
  for (const auto& row : rows) {
    Eigen::Index c = 0;
    for (double v : row) m(r, c++) = v;
    ++r;
  }
  return NormalizedMatrix{m};
}

TEST(NegateMatrixTest, TwoByTwo) {
  auto g = negate_matrix(nm({{0.1, 0.2}, {0.3, 0.4}}));
  EXPECT_NEAR(g.values(0, 0), 0.3, 1e-15);
  EXPECT_NEAR(g.values(0, 1), 0.8 / 3.0, 1e-15);
  EXPECT_NEAR(g.values(1, 0), 0.7 / 3.0, 1e-15);
  EXPECT_NEAR(g.values(1, 1), 0.2, 1e-15);
}

TEST(NegateMatrixTest, UniformStaysUniform) {
  auto g = negate_matrix(NormalizedMatrix{Eigen::MatrixXd::Constant(3, 4, 1.0 / 12.0)});
  EXPECT_NEAR((g.values.array() - 1.0 / 12.0).abs().maxCoeff(), 0.0, 1e-15);
}

TEST(NegateMatrixTest, SinglePeak) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(2, 3);
  m(1, 2) = 1.0;
  auto g = negate_matrix(NormalizedMatrix{m});
  EXPECT_EQ(g.values(1, 2), 0.0);
  EXPECT_NEAR(g.values(0, 0), 0.2, 1e-15);
  EXPECT_THROW(negate_matrix(nm({{1.0}})), NumericError);
  EXPECT_THROW(negate_matrix(nm({{1.5, -0.5}})), InputError);
}

TEST(NegateMatrixProperty, SumsToOne) {
  testkit::Generator gen(4);
  for (int trial = 0; trial < 200; ++trial) {
    const auto rows = gen.index(1, 8), cols = gen.index(1, 4);
    if (rows * cols == 1) continue;
    auto g = negate_matrix(NormalizedMatrix{gen.normalized_matrix(rows, cols)});
    EXPECT_NEAR(g.values.sum(), 1.0, 1e-9);
  }
}

TEST(UncertaintyTest, ZeroMatrixScoresZero) {
  NormalizedMatrix zero{Eigen::MatrixXd::Zero(3, 2)};
  NegatedMatrix g{Eigen::MatrixXd::Constant(3, 2, 1.0 / 6.0)};
  for (double u : uncertainty_scores(zero, g).values) EXPECT_EQ(u, 0.0);
}

TEST(UncertaintyTest, SingleRowCrossTerms) {
  NegatedMatrix g{Eigen::RowVector2d(0.7, 0.3)};
  EXPECT_NEAR(uncertainty(nm({{0.4, 0.6}}), g, 0), 0.4 * 0.3 + 0.6 * 0.7, 1e-15);
}

TEST(UncertaintyTest, TwoByTwoAgainstEnumeration) {
  auto m = nm({{0.3, 0.2}, {0.1, 0.4}});
  auto g = negate_matrix(m);
  EXPECT_NEAR(g.values(0, 0), 0.7 / 3.0, 1e-15);
  auto u = uncertainty_scores(m, g);
  EXPECT_NEAR(u.values[0], 37.0 / 150.0, 1e-15);
  EXPECT_NEAR(u.values[1], 13.0 / 50.0, 1e-15);
  for (std::size_t j = 0; j < 2; ++j) {
    EXPECT_NEAR(u.values[j], testkit::oracle_uncertainty(m.values, g.values, j), 1e-15);
  }
}

TEST(UncertaintyTest, ShapeMismatch) {
  NegatedMatrix g{Eigen::MatrixXd::Constant(2, 3, 1.0 / 6.0)};
  EXPECT_THROW(uncertainty(nm({{0.5, 0.5}}), g, 0), InputError);
  EXPECT_THROW(uncertainty(nm({{0.2, 0.3}, {0.1, 0.4}}), negate_matrix(nm({{0.2, 0.3}, {0.1, 0.4}})), 2),
               InputError);
}

// Second sum of the definition only: products with G rows f != j.
double cross_row_part(const NormalizedMatrix& m, const NegatedMatrix& g, std::size_t j) {
  const auto jr = static_cast<Eigen::Index>(j);
  double u = 0.0;
  for (Eigen::Index y = 0; y < m.values.cols(); ++y) {
    for (Eigen::Index i = 0; i < m.values.cols(); ++i) {
      if (y == i) continue;
      for (Eigen::Index f = 0; f < m.values.rows(); ++f) {
        if (f != jr) u += m.values(jr, y) * g.values(f, i);
      }
    }
  }
  return u;
}

TEST(UncertaintyTest, RoleFilterDropsSameRoleRows) {
  testkit::Generator gen(12);
  const Frame f({"a", "b"});
  OrdinalEvidence e(f, {{f.proposition({"a"}), 0.5}, {f.proposition({"b"}), 0.3},
                        {f.proposition({"a", "b"}), 0.2}});
  auto roles = assign_roles(f, e);
  NormalizedMatrix m{gen.normalized_matrix(3, 3)};
  auto g = negate_matrix(m);
  // only the target's own row is membership toward a singleton, and composite
  // targets drop only their own row
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_NEAR(uncertainty(m, g, j, roles), cross_row_part(m, g, j), 1e-15);
    EXPECT_LT(uncertainty(m, g, j, roles), uncertainty(m, g, j));
  }

  const Frame fc = test::abc();
  OrdinalEvidence wide(fc, {{fc.proposition({"a"}), 0.4}, {fc.proposition({"b"}), 0.3},
                            {fc.proposition({"c"}), 0.3}});
  auto wide_roles = assign_roles(fc, wide);
  NormalizedMatrix m3{gen.normalized_matrix(3, 2)};
  auto g3 = negate_matrix(m3);
  for (std::size_t j = 0; j < 3; ++j) {
    EXPECT_NEAR(uncertainty(m3, g3, j, wide_roles), cross_row_part(m3, g3, j), 1e-15);
  }
}

TEST(UncertaintyProperty, MatchesEnumerationAndIsLinearInRow) {
  testkit::Generator gen(27);
  for (std::size_t rows = 1; rows <= 4; ++rows) {
    for (std::size_t cols = 1; cols <= 4; ++cols) {
      for (int trial = 0; trial < 20; ++trial) {
        NormalizedMatrix m{gen.normalized_matrix(rows, cols)};
        NegatedMatrix g{gen.normalized_matrix(rows, cols)};
        for (std::size_t j = 0; j < rows; ++j) {
          const double u = uncertainty(m, g, j);
          EXPECT_NEAR(u, testkit::oracle_uncertainty(m.values, g.values, j), 1e-12);
          NormalizedMatrix scaled = m;
          scaled.values.row(static_cast<Eigen::Index>(j)) *= 2.5;
          EXPECT_NEAR(uncertainty(scaled, g, j), 2.5 * u, 1e-12);
        }
      }
    }
  }
}

}  // namespace
}  // namespace ordfuse

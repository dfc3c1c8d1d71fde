#include <gtest/gtest.h>

#include "budgeted/error.hpp"
#include "budgeted/regret.hpp"
#include "fixtures.hpp"

using namespace budgeted;

namespace {

void expect_matches_printed(const RegretMatrix& m, const fixtures::Table& printed, double tol) {
  ASSERT_EQ(m.size(), static_cast<int>(printed.size()));
  for (int j = 0; j < m.size(); ++j) {
    for (int i = 0; i < m.size(); ++i) {
      if (i == j) continue;
      EXPECT_NEAR(m(i, j), printed[j][i], tol) << "i=" << i + 1 << " j=" << j + 1;
    }
  }
}

}  // namespace

TEST(Regret, ThreeStateExamplesMatchPrintedTables) {
  const CredalSet c = fixtures::three_state_credal();
  const RegretMatrix m1 = regret_matrix(fixtures::example1_acts(), c);
  expect_matches_printed(m1, fixtures::kExample1Printed, 1e-6);
  // Printed (row j, column i) cells (1,2), (3,1) and (5,4).
  EXPECT_NEAR(m1(1, 0), 4.0, 1e-12);
  EXPECT_NEAR(m1(0, 2), 1.4, 1e-12);
  EXPECT_NEAR(m1(3, 4), -1.1, 1e-12);
  expect_matches_printed(regret_matrix(fixtures::example3_acts(), c), fixtures::kExample3Printed,
                         1e-6);
}

TEST(Regret, FinancialMatchesPrintedTable) {
  const RegretMatrix m = regret_matrix(fixtures::financial_acts(), fixtures::financial_credal());
  // Printed cells (1,2), (4,8), (9,10) and (6,5).
  EXPECT_NEAR(m(1, 0), 11.65, 5e-3);
  EXPECT_NEAR(m(7, 3), -11.2, 5e-3);
  EXPECT_NEAR(m(9, 8), 20.25, 5e-3);
  EXPECT_NEAR(m(4, 5), -5.55, 5e-3);
}

TEST(Regret, DuplicateActsHaveZeroRegret) {
  const std::vector<Act> acts = {{"x", {1, 5, 2}}, {"y", {1, 5, 2}}, {"z", {0, 0, 9}}};
  const RegretMatrix m = regret_matrix(acts, fixtures::three_state_credal());
  EXPECT_EQ(m(0, 1), 0.0);
  EXPECT_EQ(m(1, 0), 0.0);
}

TEST(Regret, FromPrintedTableOrientation) {
  const RegretMatrix m = RegretMatrix::from_row_j_col_i(fixtures::kExample1Printed);
  EXPECT_EQ(m(0, 1), 4.0);   // row 2, column 1
  EXPECT_EQ(m(2, 0), 2.0);   // row 1, column 3
  EXPECT_EQ(m(3, 4), -1.1);  // row 5, column 4
}

TEST(Regret, WorstRegretAndSetEvaluators) {
  const RegretMatrix m = RegretMatrix::from_row_j_col_i(fixtures::kExample1Printed);
  EXPECT_EQ(worst_regret(m, 0, {1, 2}).value(), 4.0);
  EXPECT_TRUE(worst_regret(m, 0, {}).is_neg_infinity());
  EXPECT_THROW(worst_regret(m, 0, {0, 1}), Error);
  EXPECT_THROW(worst_regret(m, 7, {1}), Error);

  EXPECT_DOUBLE_EQ(minimax_regret(m, {3}).value(), 3.0);
  EXPECT_DOUBLE_EQ(minimax_regret(m, {0, 1}).value(), 1.4);
  EXPECT_DOUBLE_EQ(maximin_regret(m, {0, 1}).value(), 1.4);
  EXPECT_DOUBLE_EQ(minimax_regret(m, {0, 1, 2, 3}).value(), -1.1);
  EXPECT_TRUE(minimax_regret(m, full_set(5)).is_neg_infinity());
  EXPECT_TRUE(maximin_regret(m, full_set(5)).is_neg_infinity());
  EXPECT_THROW(minimax_regret(m, {}), Error);

  // Where the two orders of play differ.
  const RegretMatrix m3 = RegretMatrix::from_row_j_col_i(fixtures::kExample3Printed);
  EXPECT_DOUBLE_EQ(minimax_regret(m3, {2, 5}).value(), 2.1);
  EXPECT_DOUBLE_EQ(maximin_regret(m3, {2, 5}).value(), -0.7);
}

TEST(Regret, Maximality) {
  EXPECT_EQ(maximality(RegretMatrix::from_row_j_col_i(fixtures::kExample1Printed)),
            (IndexSet{0, 1, 2, 3}));
  EXPECT_EQ(maximality(RegretMatrix::from_row_j_col_i(fixtures::kExample3Printed)),
            (IndexSet{2, 5}));
  // Within tolerance counts as not dominated.
  RegretMatrix m(2);
  m.set(0, 1, -5e-10);
  m.set(1, 0, 1.0);
  EXPECT_EQ(maximality(m), (IndexSet{0, 1}));
  m.set(0, 1, -2e-9);
  EXPECT_EQ(maximality(m), (IndexSet{0}));
}

TEST(Regret, CsvRoundTrip) {
  const RegretMatrix m = regret_matrix(fixtures::example3_acts(), fixtures::three_state_credal());
  std::vector<std::string> names = {"a1", "a2", "a3", "a4", "a5", "a6"};
  const std::string csv = to_csv(m, names);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "j\\i,a1,a2,a3,a4,a5,a6");
  std::vector<std::string> back;
  const RegretMatrix r = parse_matrix_csv(csv, &back);
  EXPECT_EQ(back, names);
  for (int i = 0; i < 6; ++i) {
    for (int j = 0; j < 6; ++j) {
      if (i == j) continue;
      EXPECT_NEAR(r(i, j), m(i, j), 5e-7);
    }
  }
  EXPECT_THROW(parse_matrix_csv("j\\i,a,b\na,,1\n"), Error);
}

TEST(RegretProperties, RandomInstances) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const auto inst = fixtures::random_instance(seed, 6, 3, 4);
    const CredalSet c = CredalSet::from_vertices(inst.vertices);
    const RegretMatrix m = regret_matrix(inst.acts, c);
    for (int i = 0; i < 6; ++i) {
      for (int j = 0; j < 6; ++j) {
        if (i == j) continue;
        EXPECT_NEAR(m(i, j), inst.e[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)], 1e-9);
        EXPECT_GE(m(i, j) + m(j, i), -1e-9);
      }
    }
    EXPECT_EQ(maximality(m), normalize(fixtures::bf_maximal(fixtures::raw(m))));
    EXPECT_FALSE(maximality(m).empty());
  }
}

TEST(RegretProperties, ConstraintFormAgreesWithItsVertices) {
  const CredalSet c = fixtures::financial_credal();
  const CredalSet v = CredalSet::from_vertices(vertices_of(c));
  const auto acts = fixtures::financial_acts();
  const RegretMatrix a = regret_matrix(acts, c);
  const RegretMatrix b = regret_matrix(acts, v);
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) EXPECT_NEAR(a(i, j), b(i, j), 1e-9);
  }
}

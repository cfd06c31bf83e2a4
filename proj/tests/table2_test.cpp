#include <gtest/gtest.h>

#include "rgc/table2.hpp"

using namespace rgc;

namespace {

TEST(Table, ScopesAreDisjointAndNonEmpty) {
  std::size_t total = 0;
  for (const auto& s : table_scopes()) {
    auto rows = rows_in_scope(s);
    EXPECT_FALSE(rows.empty()) << s;
    total += rows.size();
  }
  EXPECT_EQ(total, golden_rows().size());
  EXPECT_THROW(rows_in_scope("everything"), InputError);
  EXPECT_THROW(run_table("heavy"), InputError);
}

TEST(Table, ClassicalSmall) {
  for (const auto& r : run_table("classical-small", 2)) {
    EXPECT_TRUE(r.check.ok) << row_name(r.row) << ": "
                            << (r.check.mismatches.empty() ? "" : r.check.mismatches.front());
  }
}

TEST(Table, ExceptionalFG) {
  for (const auto& r : run_table("exceptional-fg", 2)) {
    EXPECT_TRUE(r.check.ok) << row_name(r.row) << ": "
                            << (r.check.mismatches.empty() ? "" : r.check.mismatches.front());
  }
}

TEST(Table, OrderIndependentOfThreads) {
  auto a = run_table("exceptional-fg", 1);
  auto b = run_table("exceptional-fg", 4);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(row_name(a[i].row), row_name(b[i].row));
    EXPECT_EQ(a[i].vertex, b[i].vertex);
  }
}

GoldenRow find_row(const char* type, const char* module) {
  for (const auto& r : golden_rows())
    if (r.type == type && r.module == module) return r;
  throw std::logic_error("no such row");
}

// The comparator must reject perturbed golden data.
TEST(Table, DetectsWrongVerdict) {
  auto row = find_row("G2", "w1");
  row.smooth = Verdict::NotSmooth;
  EXPECT_FALSE(run_row(row).check.ok);
}

TEST(Table, DetectsWrongLabels) {
  auto row = find_row("G2", "w1");
  row.l_weights[1].labels = {{1}};
  EXPECT_FALSE(run_row(row).check.ok);
}

TEST(Table, DetectsWrongDegreeRatio) {
  auto row = find_row("B3", "w3");
  row.l_weights[2].degree = 4;
  EXPECT_FALSE(run_row(row).check.ok);
}

TEST(Table, DetectsMissingCompleteEntry) {
  auto row = find_row("F4", "w1");
  row.l_weights.pop_back();
  EXPECT_FALSE(run_row(row).check.ok);
  row.l_weights_complete = false;
  EXPECT_TRUE(run_row(row).check.ok);
}

TEST(Table, DetectsWrongWitness) {
  auto row = find_row("F4", "w3");
  row.witness->missing.labels = {{1, 0}, {1}};
  EXPECT_FALSE(run_row(row).check.ok);
  row = find_row("C2", "w2");
  row.witness->multiple = 3;
  EXPECT_FALSE(run_row(row).check.ok);
}

TEST(Table, DetectsWrongLevi) {
  auto row = find_row("C3", "w1");
  row.levi = "A1xA1+T1";
  EXPECT_FALSE(run_row(row).check.ok);
}

TEST(Table, UnknownCountsAsFailure) {
  auto row = find_row("C2", "w2");
  row.cap = 1;
  auto r = run_row(row);
  EXPECT_EQ(r.vertex.normality.verdict, Verdict::Unknown);
  EXPECT_FALSE(r.check.ok);
}

TEST(Table, ForkOrientationOfD) {
  // Swapping the two fork labels of D5 is accepted.
  auto row = find_row("E6", "w1");
  std::swap(row.l_weights[0].labels[0][3], row.l_weights[0].labels[0][4]);
  EXPECT_TRUE(run_row(row).check.ok);
}

}  // namespace

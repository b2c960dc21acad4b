#include <gtest/gtest.h>

#include "k3auto/families.hpp"

using namespace k3auto;

namespace {

const std::vector<ClassificationRow>& rows() {
  static const auto r = enumerate_cases();
  return r;
}

std::vector<VariantResult> run(int id, const std::string& deg) { return verify_example(paper_example(id, deg), rows()); }

std::optional<int> row_of(const VariantResult& v) { return v.analysis.matched_row; }

}  // namespace

TEST(Families, PresetsSatisfyTheirConditions) {
  for (int id = 1; id <= 4; ++id) {
    for (const auto& deg : example_degenerations(id)) {
      const auto ex = paper_example(id, deg);
      for (const auto& c : ex.conditions) EXPECT_TRUE(c.pass) << id << " " << deg << " " << c.name;
    }
  }
}

TEST(Families, BadParametersAndIdsAreRejected) {
  EXPECT_THROW(paper_example(5, "generic"), InvalidDatum);
  EXPECT_THROW(paper_example(1, "i8"), InvalidDatum);
  EXPECT_THROW(paper_example(3, "i8", {Rational(1), Rational(2), Rational(3), Rational(5)}), InvalidDatum);
  EXPECT_THROW(paper_example(4, "generic", {Rational(1), Rational(2)}), InvalidDatum);
  // 1,1,1,1 gives a discriminant with repeated factors.
  EXPECT_THROW(paper_example(1, "generic", {Rational(1), Rational(1), Rational(1), Rational(1)}), InvalidDatum);
}

TEST(Families, EulerSumAndMultiplierForEveryVariant) {
  for (int id = 1; id <= 4; ++id) {
    for (const auto& deg : example_degenerations(id)) {
      for (const auto& v : run(id, deg)) {
        SCOPED_TRACE(std::to_string(id) + " " + deg + " " + v.variant.name);
        EXPECT_EQ(v.analysis.euler_sum, 24);
        EXPECT_EQ(v.analysis.two_form_exponent, 1);
        EXPECT_TRUE(v.analysis.invariants_ok());
      }
    }
  }
}

TEST(Families, ExampleOne) {
  const auto g = run(1, "generic");
  EXPECT_EQ(g[0].analysis.inventory, (std::map<std::string, int>{{"I_1", 24}}));
  EXPECT_EQ(row_of(g[0]), 1);
  EXPECT_TRUE(g[0].all_pass());
  const auto a0 = run(1, "a0");
  EXPECT_EQ(a0[0].analysis.fibers.back().kodaira.name(), "IV*");
  EXPECT_EQ(row_of(a0[0]), 5);
  EXPECT_TRUE(a0[0].all_pass());
}

TEST(Families, ExampleTwo) {
  EXPECT_EQ(row_of(run(2, "generic")[0]), 4);
  EXPECT_EQ(row_of(run(2, "a0")[0]), 11);
  EXPECT_TRUE(run(2, "a0")[0].all_pass());
}

TEST(Families, ExampleThree) {
  const auto g = run(3, "generic");
  EXPECT_EQ(row_of(g[0]), 1);
  EXPECT_EQ(row_of(g[1]), 4);
  const auto i8 = run(3, "i8");
  EXPECT_EQ(i8[0].analysis.inventory, (std::map<std::string, int>{{"I_8", 1}, {"I_1", 16}}));
  EXPECT_EQ(row_of(i8[0]), 12);
  EXPECT_EQ(row_of(i8[1]), 10);
  const auto i16 = run(3, "i16");
  EXPECT_EQ(i16[0].analysis.inventory, (std::map<std::string, int>{{"I_16", 1}, {"I_1", 8}}));
  EXPECT_EQ(row_of(i16[0]), 16);
  EXPECT_EQ(row_of(i16[1]), 15);
  for (const auto* set : {&i8, &i16}) {
    for (const auto& v : *set) EXPECT_TRUE(v.all_pass()) << v.variant.name;
  }
}

TEST(Families, ExampleFourGenericAndI16) {
  const auto g = run(4, "generic");
  EXPECT_EQ(g[0].analysis.inventory, (std::map<std::string, int>{{"I_2", 8}, {"I_1", 8}}));
  EXPECT_EQ(row_of(g[0]), 2);
  EXPECT_EQ(row_of(g[1]), 1);
  ASSERT_TRUE(g[0].analysis.translation.has_value());
  EXPECT_TRUE(g[0].analysis.translation->all());
  const auto i16 = run(4, "i16");
  EXPECT_EQ(i16[0].analysis.fibers.back().kodaira.name(), "I_16");
  EXPECT_EQ(row_of(i16[0]), 13);
  EXPECT_EQ(row_of(i16[1]), 16);
  EXPECT_TRUE(i16[0].all_pass());
}

// The claimed row for the double-root degeneration is 8 (rotation of order 2
// on I_8). The section meets the zero component of I_8 (see the two-torsion
// tests), so the composite preserves each component and the row is 12.
TEST(Families, ExampleFourDoubleRootComputesRowTwelve) {
  const auto i8 = run(4, "i8");
  EXPECT_EQ(i8[0].analysis.fibers.back().kodaira.name(), "I_8");
  EXPECT_EQ(i8[0].analysis.actions.back().label, "preserves each curve of I_8");
  EXPECT_EQ(row_of(i8[0]), 12);
  ASSERT_TRUE(i8[0].variant.claimed_row.has_value());
  EXPECT_EQ(*i8[0].variant.claimed_row, 8);
  EXPECT_FALSE(i8[0].all_pass());
}

TEST(Families, MatchRowNeedsSupportedActions) {
  const auto f = WeierstrassFibration::make(RationalPolynomial::monomial(Rational(1), 8) + RationalPolynomial(Rational(2)),
                                            RationalPolynomial::monomial(Rational(3), 8) + RationalPolynomial(Rational(5)));
  // (0,1,1) does not preserve the fibration: the analysis reports the failure.
  const auto r = analyze(f, {0, 1, 1}, std::nullopt, rows());
  EXPECT_FALSE(r.invariants_ok());
  EXPECT_FALSE(r.matched_row.has_value());
}

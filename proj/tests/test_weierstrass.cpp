#include <gtest/gtest.h>

#include "k3auto/weierstrass.hpp"

using namespace k3auto;

namespace {

RationalPolynomial tp(long long c, unsigned e) { return RationalPolynomial::monomial(Rational(c), e); }
RationalPolynomial cst(long long c) { return RationalPolynomial(Rational(c)); }

using K = KodairaType::Kind;

// a = -3 t^8 + 1, b = 2 t^12 - t^4: the I_16 witness of the order-8 family
// with a cyclic t^4 twist.
WeierstrassFibration i16_witness() { return WeierstrassFibration::make(tp(-3, 8) + cst(1), tp(2, 12) - tp(1, 4)); }

}  // namespace

TEST(Kodaira, ValuationTable) {
  EXPECT_EQ(kodaira_from_valuations(0, 0, 0), (KodairaType{K::I0, 0}));
  EXPECT_EQ(kodaira_from_valuations(0, 0, 1), (KodairaType{K::In, 1}));
  EXPECT_EQ(kodaira_from_valuations(0, 0, 16).name(), "I_16");
  EXPECT_EQ(kodaira_from_valuations(1, 1, 2).kind, K::II);
  EXPECT_EQ(kodaira_from_valuations(2, 1, 2).kind, K::II);
  EXPECT_EQ(kodaira_from_valuations(1, 2, 3).kind, K::III);
  EXPECT_EQ(kodaira_from_valuations(2, 2, 4).kind, K::IV);
  EXPECT_EQ(kodaira_from_valuations(2, 3, 6).name(), "I_0*");
  EXPECT_EQ(kodaira_from_valuations(2, 3, 9).name(), "I_3*");
  EXPECT_EQ(kodaira_from_valuations(8, 4, 8).name(), "IV*");
  EXPECT_EQ(kodaira_from_valuations(3, 5, 9).name(), "III*");
  EXPECT_EQ(kodaira_from_valuations(4, 5, 10).name(), "II*");
  EXPECT_THROW(kodaira_from_valuations(4, 6, 12), NonMinimalDatum);
  EXPECT_THROW(kodaira_from_valuations(1, 1, 3), InvalidDatum);
}

TEST(Kodaira, EulerNumbersOfTableTypesMatchDiscriminantOrder) {
  // Oracle: the Euler number of a Kodaira fiber is v(Delta) in characteristic 0.
  const std::vector<std::array<int, 3>> data{{0, 0, 5}, {1, 1, 2}, {1, 2, 3}, {2, 2, 4}, {2, 3, 6}, {3, 4, 8}, {3, 5, 9}, {4, 5, 10}};
  for (const auto& v : data) {
    std::vector<FiberReport> one{{Place::rational(0), v[0], v[1], v[2], kodaira_from_valuations(v[0], v[1], v[2])}};
    EXPECT_EQ(euler_sum(one), v[2]);
  }
}

TEST(Weierstrass, MakeRejectsBadData) {
  EXPECT_THROW(WeierstrassFibration::make(tp(1, 9), cst(1)), InvalidDatum);
  EXPECT_THROW(WeierstrassFibration::make(cst(1), tp(1, 13)), InvalidDatum);
  // a = -3 c^2, b = 2 c^3 makes 4a^3 + 27b^2 vanish.
  EXPECT_THROW(WeierstrassFibration::make(cst(-3), cst(2)), InvalidDatum);
}

TEST(Weierstrass, GenericDatumHasTwentyFourNodalFibers) {
  // a = t^8 + 2, b = 3 t^8 + 5
  const auto f = WeierstrassFibration::make(tp(1, 8) + cst(2), tp(3, 8) + cst(5));
  const auto reports = fiber_reports(f);
  EXPECT_EQ(euler_sum(reports), 24);
  EXPECT_EQ(fiber_inventory(reports), (std::map<std::string, int>{{"I_1", 24}}));
  EXPECT_TRUE(reports.front().place.is_origin());
  EXPECT_TRUE(reports.back().place.is_infinity());
}

TEST(Weierstrass, VanishingLeadingCoefficientGivesIVStarAtInfinity) {
  // a = 1 (weight 8 in the chart at infinity), b = t^8 + 1
  const auto f = WeierstrassFibration::make(cst(1), tp(1, 8) + cst(1));
  const auto inf = kodaira_type_at(f, Place::infinity());
  EXPECT_EQ(inf.v_a, 8);
  EXPECT_EQ(inf.v_b, 4);
  EXPECT_EQ(inf.v_delta, 8);
  EXPECT_EQ(inf.kodaira.name(), "IV*");
  const auto reports = fiber_reports(f);
  EXPECT_EQ(euler_sum(reports), 24);
  EXPECT_EQ(fiber_inventory(reports), (std::map<std::string, int>{{"IV*", 1}, {"I_1", 16}}));
}

TEST(Weierstrass, CyclicDegenerationGivesI16) {
  const auto f = i16_witness();
  const auto reports = fiber_reports(f);
  EXPECT_EQ(euler_sum(reports), 24);
  EXPECT_EQ(fiber_inventory(reports), (std::map<std::string, int>{{"I_16", 1}, {"I_1", 8}}));
  EXPECT_EQ(reports.back().kodaira.name(), "I_16");
}

TEST(Weierstrass, NonMinimalDatumIsRejected) {
  const auto f = WeierstrassFibration::make(tp(1, 4) + tp(1, 8), tp(1, 6));
  EXPECT_THROW(kodaira_type_at(f, Place::rational(0)), NonMinimalDatum);
  EXPECT_THROW(fiber_reports(f), NonMinimalDatum);
}

TEST(Weierstrass, KodairaTypesAreStableUnderRescaling) {
  // (a, b) -> (u^4 a(c t), u^6 b(c t)) is an isomorphism of fibrations.
  const auto f = i16_witness();
  const auto g = WeierstrassFibration::make(Rational(16) * f.a.scale_variable(Rational(3)),
                                            Rational(64) * f.b.scale_variable(Rational(3)));
  EXPECT_EQ(fiber_inventory(f), fiber_inventory(g));
  EXPECT_EQ(kodaira_type_at(f, Place::infinity()).kodaira, kodaira_type_at(g, Place::infinity()).kodaira);
}

TEST(Weierstrass, InvarianceAndTwoFormMultiplier) {
  const auto ex1 = WeierstrassFibration::make(tp(1, 8) + cst(2), tp(3, 8) + cst(5));
  EXPECT_TRUE(check_invariance(ex1, {0, 0, 1}));
  EXPECT_TRUE(check_invariance(ex1, {0, 4, 5}));
  const auto bad = check_invariance_report(ex1, {0, 1, 1});
  EXPECT_FALSE(bad.invariant);
  EXPECT_FALSE(bad.failures.empty());
  EXPECT_TRUE(check_invariance(i16_witness(), {4, 2, 7}));
  EXPECT_TRUE(check_invariance(i16_witness(), {4, 6, 3}));
  EXPECT_FALSE(check_invariance(i16_witness(), {4, 2, 2}));

  EXPECT_EQ(two_form_multiplier({0, 0, 1}), 1);
  EXPECT_EQ(two_form_multiplier({4, 2, 7}), 1);
  EXPECT_EQ(two_form_multiplier({4, 6, 3}), 1);
  EXPECT_EQ(two_form_multiplier({0, 4, 1}), 5);
  EXPECT_EQ(two_form_multiplier(DiagonalAutomorphism{0, 4, 1}.power(5)), 1);
}

TEST(Weierstrass, BaseFixedFibers) {
  const auto places = base_fixed_fibers({4, 2, 7});
  ASSERT_EQ(places.size(), 2u);
  EXPECT_TRUE(places[0].place.is_origin());
  EXPECT_EQ(places[0].base_exponent, 7);
  EXPECT_TRUE(places[1].place.is_infinity());
  EXPECT_EQ(places[1].base_exponent, 1);
  EXPECT_THROW(base_fixed_fibers({0, 0, 2}), InvalidDatum);
}

TEST(Weierstrass, ChartAtInfinity) {
  const auto c = chart_action({4, 2, 7}, Place::infinity());
  EXPECT_EQ(c.x, 0);
  EXPECT_EQ(c.y, 0);
  EXPECT_EQ(c.s, 1);
}

TEST(Weierstrass, LocalTypesOnTheFiberOverZero) {
  const auto f = i16_witness();
  const auto sigma = fixed_points_on_fiber(f, {4, 2, 7}, Place::rational(0));
  ASSERT_EQ(sigma.size(), 2u);
  for (const auto& p : sigma) {
    EXPECT_EQ(p.tangent, 2);
    EXPECT_EQ(p.transverse, 7);
    EXPECT_EQ(p.type, PointType{2});
  }
  const auto tau = fixed_points_on_fiber(f, {4, 6, 3}, Place::rational(0));
  ASSERT_EQ(tau.size(), 2u);
  for (const auto& p : tau) EXPECT_EQ(p.type, PointType{3});
  // Pointwise fixed fiber and singular fiber.
  EXPECT_THROW(fixed_points_on_fiber(f, {4, 2, 7}, Place::infinity()), InvalidDatum);
  const auto ex1 = WeierstrassFibration::make(tp(1, 8) + cst(2), tp(3, 8) + cst(5));
  EXPECT_THROW(fixed_points_on_fiber(ex1, {0, 0, 1}, Place::rational(0)), IncompatibleAction);
}

TEST(Weierstrass, FiberActions) {
  const auto f = i16_witness();
  EXPECT_EQ(fiber_action_at(f, {4, 2, 7}, Place::rational(0)).label, "order four");
  EXPECT_EQ(fiber_action_at(f, {4, 2, 7}, Place::infinity()).label, "preserves each curve of I_16");
  EXPECT_EQ(fiber_action_at(f, {4, 6, 3}, Place::infinity()).label, "reflection on I_16");

  const auto a0 = WeierstrassFibration::make(cst(1), tp(1, 8) + cst(1));
  EXPECT_EQ(fiber_action_at(a0, {0, 0, 1}, Place::rational(0)).label, "identity");
  EXPECT_EQ(fiber_action_at(a0, {0, 0, 1}, Place::infinity()).label, "reflection of IV*");
  EXPECT_EQ(fiber_action_at(a0, {0, 4, 5}, Place::rational(0)).label, "involution");
  EXPECT_EQ(fiber_action_at(a0, {0, 4, 5}, Place::infinity()).label, "preserves each curve of IV*");

  EXPECT_THROW(fiber_action_at(f, {4, 2, 7, true}, Place::infinity()), InvalidDatum);
}

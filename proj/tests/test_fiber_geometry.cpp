#include <gtest/gtest.h>

#include <set>

#include "k3auto/fiber_geometry.hpp"

using namespace k3auto;

TEST(FiberGeometry, ChainStepClosesAfterEightSteps) {
  int starts = 0;
  for (int t = 0; t < 8; ++t) {
    const std::pair<int, int> start{t, mod8(1 - t)};
    std::set<std::pair<int, int>> orbit;
    auto p = start;
    for (int i = 0; i < 8; ++i) {
      orbit.insert(p);
      EXPECT_EQ(mod8(p.first + p.second), 1);
      p = chain_step(p);
    }
    EXPECT_EQ(p, start);
    EXPECT_EQ(orbit.size(), 8u);
    ++starts;
  }
  EXPECT_EQ(starts, 8);
}

TEST(FiberGeometry, ShapesAndEulerNumbers) {
  EXPECT_EQ(euler_number(FiberShape::I(16)), 16);
  EXPECT_EQ(euler_number(FiberShape::IV_star()), 8);
  EXPECT_EQ(FiberShape::IV_star().components(), 7);
  EXPECT_EQ(FiberShape::smooth().euler_number(), 0);
  EXPECT_THROW(FiberShape::I(0), InvalidDatum);
}

TEST(FiberGeometry, EllipticActionData) {
  const auto inv = elliptic_action_data({EllipticKind::involution});
  EXPECT_EQ(inv.points, (PointCounts{0, 0, 4}));
  const auto o4 = elliptic_action_data(EllipticAction::order_four(1, 1));
  EXPECT_EQ(o4.points, (PointCounts{1, 1, 0}));
  EXPECT_EQ(o4.sigma2_isolated, 4);
  EXPECT_THROW(EllipticAction::order_four(2, 1), IncompatibleAction);
  EXPECT_TRUE(elliptic_action_data({EllipticKind::identity}).elliptic_fixed[0]);
  EXPECT_FALSE(elliptic_action_data({EllipticKind::translation2}).elliptic_fixed[0]);
  EXPECT_TRUE(elliptic_action_data({EllipticKind::translation2}).elliptic_fixed[1]);
  EXPECT_FALSE(elliptic_action_data({EllipticKind::translation4}).elliptic_fixed[1]);
}

namespace {

struct FrozenFiber {
  FiberShape shape;
  GraphAction action;
  int k;
  PointCounts points;
  int k2;
  int iso2;
  int k4;
};

}  // namespace

// Frozen from the engine. Oracle: subtracting the smooth fiber's share from
// the classification rows, e.g. (6,4,4) - (2,0,0) on I_16 and
// (3,3,4) - (0,0,4) on IV*; the sigma^4 column equals the number of
// components fixed pointwise by an involution fixing the zero component.
TEST(FiberGeometry, FrozenSingularFiberTable) {
  using G = GraphAction;
  const std::vector<FrozenFiber> table{
      {FiberShape::I(8), G::preserve, 1, {2, 2, 2}, 2, 4, 4},
      {FiberShape::I(16), G::preserve, 2, {4, 4, 4}, 4, 8, 8},
      {FiberShape::I(8), G::reflection, 0, {0, 0, 4}, 2, 4, 4},
      {FiberShape::I(16), G::reflection, 0, {0, 0, 4}, 4, 8, 8},
      {FiberShape::I(8), G::rotation2, 0, {0, 0, 0}, 2, 4, 4},
      {FiberShape::I(16), G::rotation2, 0, {0, 0, 0}, 4, 8, 8},
      {FiberShape::I(8), G::rotation4, 0, {0, 0, 0}, 0, 0, 4},
      {FiberShape::I(16), G::rotation4, 0, {0, 0, 0}, 0, 0, 8},
      {FiberShape::IV_star(), G::preserve, 1, {3, 3, 0}, 1, 6, 4},
      {FiberShape::IV_star(), G::branch_swap, 0, {1, 1, 2}, 1, 6, 4},
  };
  for (const auto& f : table) {
    SCOPED_TRACE(graph_action_label(f.shape, f.action));
    const auto d = fiber_fixed_data(f.shape, f.action);
    EXPECT_EQ(d.k_sigma, f.k);
    EXPECT_EQ(d.points, f.points);
    EXPECT_EQ(d.k_sigma2, f.k2);
    EXPECT_EQ(d.sigma2_isolated, f.iso2);
    EXPECT_EQ(d.k_sigma4, f.k4);
  }
}

TEST(FiberGeometry, SquareFixedDataIsHolomorphicallyConsistent) {
  // The square acts on each fiber with all isolated points of type (6,4):
  // its share of the square's Euler characteristic is 2 k2 + iso2, and on
  // I_n this is n exactly when the square preserves every component.
  for (int n : {8, 16}) {
    const auto d = fiber_fixed_data(FiberShape::I(n), GraphAction::preserve);
    EXPECT_EQ(2 * d.k_sigma2 + d.sigma2_isolated, n);
  }
}

TEST(FiberGeometry, Labels) {
  EXPECT_EQ(graph_action_label(FiberShape::IV_star(), GraphAction::branch_swap), "reflection of IV*");
  EXPECT_EQ(graph_action_label(FiberShape::I(8), GraphAction::reflection), "reflection on I_8");
  EXPECT_EQ(graph_action_label(FiberShape::I(16), GraphAction::rotation2), "rotation of order 2 on I_16");
  EXPECT_EQ(elliptic_label(EllipticKind::translation4), "translation of order four");
}

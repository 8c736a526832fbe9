#include <gtest/gtest.h>

#include <random>

#include "ivg/errors.hpp"
#include "ivg/fixtures.hpp"
#include "ivg/gadgets.hpp"
#include "ivg/oracle.hpp"
#include "ivg/orderability.hpp"

namespace {

using namespace ivg;

TEST(EnumerateAssociatedOrders, Examples) {
  const OrientationSet k3 = enumerate_associated_orders(fixtures::complete(3));
  ASSERT_EQ(k3.orders.size(), 1u);
  EXPECT_EQ(k3.orders[0], StrictPartialOrder(3));
  EXPECT_EQ(k3.dual_classes, 1u);

  const OrientationSet e3 = enumerate_associated_orders(fixtures::empty(3));
  EXPECT_EQ(e3.orders.size(), 6u);
  EXPECT_EQ(e3.dual_classes, 3u);
  for (const auto& o : e3.orders) EXPECT_EQ(o.relation_size(), 3u);

  const OrientationSet p4 = enumerate_associated_orders(fixtures::path(4));
  EXPECT_EQ(p4.orders.size(), 2u);
  EXPECT_EQ(p4.dual_classes, 1u);
}

TEST(EnumerateAssociatedOrders, NoOrdersForC5) {
  // The complement of C5 is C5, which has no transitive orientation.
  EXPECT_TRUE(enumerate_associated_orders(fixtures::cycle(5)).orders.empty());
  EXPECT_THROW(oracle_unique(fixtures::cycle(5)), InternalInconsistency);
  EXPECT_FALSE(oracle_unique(fixtures::cycle(5), 12, false));
}

TEST(EnumerateAssociatedOrders, RefusesLargeGraphs) {
  EXPECT_THROW(enumerate_associated_orders(fixtures::path(13)), InputError);
  EXPECT_NO_THROW(enumerate_associated_orders(fixtures::path(13), {13, std::nullopt}));
}

TEST(EnumerateAssociatedOrders, LimitStopsEarly) {
  const OrientationSet some = enumerate_associated_orders(fixtures::empty(4), {12, 3});
  EXPECT_FALSE(some.exhaustive);
  EXPECT_EQ(some.orders.size(), 3u);
  const OrientationSet all = enumerate_associated_orders(fixtures::empty(4));
  EXPECT_TRUE(all.exhaustive);
  EXPECT_EQ(all.orders.size(), 24u);
  EXPECT_EQ(all.dual_classes, 12u);
}

TEST(OracleUnique, Examples) {
  EXPECT_TRUE(oracle_unique(fixtures::diamond()));
  EXPECT_FALSE(oracle_unique(fixtures::star(3)));
  EXPECT_TRUE(oracle_unique(fixtures::two_k2()));
  EXPECT_EQ(enumerate_associated_orders(fixtures::star(3)).orders.size(), 6u);
  EXPECT_EQ(enumerate_associated_orders(fixtures::two_k2()).orders.size(), 2u);
}

TEST(EnumerateAssociatedOrders, OrdersAreAssociatedClosedAndDistinct) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    const auto [g, rep] = random_interval_graph(1 + rng() % 8, rng());
    const OrientationSet set = enumerate_associated_orders(g);
    ASSERT_FALSE(set.orders.empty());
    ASSERT_TRUE(std::is_sorted(set.orders.begin(), set.orders.end()));
    ASSERT_EQ(std::adjacent_find(set.orders.begin(), set.orders.end()), set.orders.end());
    for (const auto& o : set.orders) {
      ASSERT_TRUE(is_associated(g, o));
      ASSERT_EQ(StrictPartialOrder::closure_of(o.size(), o.pairs()), o);
      ASSERT_TRUE(std::binary_search(set.orders.begin(), set.orders.end(), o.dual()));
    }
  }
}

TEST(OracleUnique, AgreesWithDecideUniqueOnRandomGraphs) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 500; ++trial) {
    const auto [g, rep] = random_interval_graph(1 + rng() % 10, rng());
    const UniquenessVerdict v = decide_unique(g);
    ASSERT_EQ(v.unique, oracle_unique(g));
    if (v.unique) {
      const OrientationSet set = enumerate_associated_orders(g);
      ASSERT_TRUE(std::binary_search(set.orders.begin(), set.orders.end(), *v.order));
    }
  }
}

}  // namespace

#include "gyro/holomorph.hpp"

#include <gtest/gtest.h>

#include "gyro/construct.hpp"
#include "gyro/groups.hpp"
#include "gyro/verify.hpp"

using namespace gyro;

TEST(GyroautomorphismGroup, IsZ2GeneratedByA) {
  for (int n = 3; n <= 8; ++n) {
    const auto gamma = gyroautomorphism_group(g2::build_g2(n));
    ASSERT_EQ(gamma.size(), 2u) << n;
    EXPECT_TRUE(gamma[0].is_identity());
    EXPECT_EQ(gamma[1], g2::G2Tables(g2::CyclicParams::make(n)).a_permutation());
    EXPECT_EQ(gamma[1].order(), 2u);
  }
}

TEST(GyroautomorphismGroup, TrivialForGroups) {
  EXPECT_EQ(gyroautomorphism_group(groups::cyclic(6)).size(), 1u);
}

TEST(Holomorph, G2Of4IsGroupOfOrder32) {
  const auto h = gyroholomorph(g2::build_g2(4));
  EXPECT_EQ(h.order(), 32u);
  const auto report = verify(h.table);
  for (const auto& s : report.checks)
    EXPECT_EQ(s.passed, s.check != Check::Gyrocommutativity) << check_name(s.check);
  const auto inv = groups::invariants(h.table);
  EXPECT_FALSE(inv.abelian);
  EXPECT_EQ(inv.element_orders, (std::map<std::size_t, std::size_t>{{1, 1}, {2, 7}, {4, 8}, {8, 16}}));
  EXPECT_EQ(inv.center_size, 8u);
  EXPECT_EQ(inv.derived_size, 2u);
  EXPECT_EQ(h.element_order_multiset, inv.element_orders);
  EXPECT_EQ(h.decode(h.encode(13, 1)), (std::pair<Element, std::size_t>{13, 1}));
}

TEST(Holomorph, MatchesModularCandidateOnly) {
  const auto h = gyroholomorph(g2::build_g2(4));
  const auto candidates = holomorph_candidates(8);
  ASSERT_EQ(candidates.size(), 3u);
  const auto match = identify_structure(groups::invariants(h.table), candidates);
  ASSERT_EQ(match.matches.size(), 1u);
  EXPECT_NE(match.matches[0].find("modular"), std::string::npos);
}

TEST(Holomorph, CandidatesAreDistinct) {
  const auto c = holomorph_candidates(8);
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = i + 1; j < c.size(); ++j) EXPECT_NE(c[i].invariants, c[j].invariants);
  EXPECT_EQ(holomorph_candidates(4).size(), 1u);
}

TEST(Holomorph, OtherOrders) {
  for (int n : {3, 5}) {
    const auto h = gyroholomorph(g2::build_g2(n));
    EXPECT_EQ(h.order(), 2u << n);
    EXPECT_FALSE(identify_structure(groups::invariants(h.table),
                                    holomorph_candidates(std::size_t{1} << (n - 1)))
                     .matches.empty());
  }
}

TEST(Groups, Invariants) {
  const auto d8 = groups::invariants(groups::dihedral(4));
  EXPECT_EQ(d8.order, 8u);
  EXPECT_FALSE(d8.abelian);
  EXPECT_EQ(d8.center_size, 2u);
  EXPECT_EQ(d8.derived_size, 2u);
  EXPECT_EQ(d8.element_orders, (std::map<std::size_t, std::size_t>{{1, 1}, {2, 5}, {4, 2}}));
  EXPECT_TRUE(groups::invariants(groups::cyclic(8)).abelian);
  EXPECT_THROW(groups::invariants(g2::build_g2(3)), std::invalid_argument);
  EXPECT_THROW(groups::semidirect_cyclic(8, 2), std::invalid_argument);
}

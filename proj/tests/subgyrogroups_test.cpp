#include "gyro/subgyrogroups.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "gyro/construct.hpp"
#include "gyro/groups.hpp"
#include "test_support.hpp"

using namespace gyro;

namespace {

using ElementSets = std::set<std::vector<Element>>;

ElementSets sets_of(const std::vector<Subgyrogroup>& nodes) {
  ElementSets out;
  for (const auto& s : nodes) out.insert(s.elements);
  return out;
}

// Oracle: every subset containing 0 that passes is_subgyrogroup.
ElementSets brute_force(const FiniteGyrogroup& g) {
  ElementSets out;
  const std::size_t n = g.order();
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<Element> s{0};
    for (std::size_t i = 1; i < n; ++i)
      if (mask & (1u << (i - 1))) s.push_back(static_cast<Element>(i));
    if (is_subgyrogroup(g, s)) out.insert(s);
  }
  return out;
}

}  // namespace

TEST(Closure, Examples) {
  const auto g3 = g2::build_g2(3);
  const std::vector<Element> five{5};
  const auto c = closure(g3, five);
  EXPECT_EQ(c.elements, (std::vector<Element>{0, 2, 5, 7}));
  EXPECT_EQ(c.generators, five);
  EXPECT_EQ(c.label(), "<5>");

  const auto g4 = g2::build_g2(4);
  const std::vector<Element> gens{2, 8};
  EXPECT_EQ(closure(g4, gens).elements, (std::vector<Element>{0, 2, 4, 6, 8, 10, 12, 14}));
  const std::vector<Element> bad{16};
  EXPECT_THROW(closure(g4, bad), std::out_of_range);
}

TEST(Closure, TrivialLabel) {
  const std::vector<Element> none;
  const auto c = closure(g2::build_g2(3), none);
  EXPECT_EQ(c.elements, std::vector<Element>{0});
  EXPECT_EQ(c.label(), "<0>");
}

TEST(Enumerate, MatchesBruteForceOracle) {
  for (int n = 3; n <= 4; ++n) {
    const auto g = g2::build_g2(n);
    EXPECT_EQ(sets_of(enumerate_subgyrogroups(g).nodes), brute_force(g)) << n;
  }
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_subgyrogroups(g2::build_g2(3)).nodes.size(), 8u);
  EXPECT_EQ(enumerate_subgyrogroups(g2::build_g2(4)).nodes.size(), 11u);
  EXPECT_EQ(enumerate_subgyrogroups(groups::cyclic(8)).nodes.size(), 4u);
  EXPECT_EQ(enumerate_subgyrogroups(groups::direct_product(groups::cyclic(2), groups::cyclic(2)))
                .nodes.size(),
            5u);
}

TEST(Enumerate, ProperSubgyrogroupsAreGroups) {
  for (int n = 3; n <= 6; ++n) {
    const auto lattice = enumerate_subgyrogroups(g2::build_g2(n));
    for (const auto& s : lattice.nodes) {
      const bool whole = s.order() == (1u << n);
      EXPECT_EQ(s.is_group, !whole) << s.label();
      EXPECT_EQ(s.is_group, internal_gyrations_trivial(g2::build_g2(n), s.elements));
    }
  }
}

TEST(Classify, AgreesWithEnumeration) {
  for (int n = 3; n <= 6; ++n) {
    const auto closed = classify_subgyrogroups(n);
    const auto g = g2::build_g2(n);
    EXPECT_EQ(sets_of(closed), sets_of(enumerate_subgyrogroups(g).nodes)) << n;
    EXPECT_EQ(closed.size(), static_cast<std::size_t>(3 * n - 1)) << n;
    for (const auto& s : closed) EXPECT_TRUE(is_subgyrogroup(g, s.elements)) << s.label();
  }
  EXPECT_THROW(classify_subgyrogroups(2), std::invalid_argument);
}

TEST(Classify, UpperHalfGenerator) {
  // <m + 1> in G2(4): the multiples of 2 in P together with 9 + <2> shifted by m.
  const auto g = g2::build_g2(4);
  const std::vector<Element> gens{9};
  EXPECT_EQ(closure(g, gens).elements, (std::vector<Element>{0, 2, 4, 6, 9, 11, 13, 15}));
  const auto closed = classify_subgyrogroups(4);
  const auto it = std::find_if(closed.begin(), closed.end(), [](const Subgyrogroup& s) {
    return s.closed_form && s.closed_form->family == ClosedFormLabel::Family::MPlusPow2 &&
           s.closed_form->s == 0;
  });
  ASSERT_NE(it, closed.end());
  EXPECT_EQ(it->elements, (std::vector<Element>{0, 2, 4, 6, 9, 11, 13, 15}));
  EXPECT_EQ(it->closed_form->to_string(), "M_PLUS_POW2(0)");
}

TEST(Classify, PowerChainIsNested) {
  const int n = 5;
  const auto closed = classify_subgyrogroups(n);
  std::vector<std::vector<Element>> chain;
  for (const auto& s : closed)
    if (s.closed_form && s.closed_form->family == ClosedFormLabel::Family::Pow2)
      chain.push_back(s.elements);
  ASSERT_EQ(chain.size(), static_cast<std::size_t>(n));
  for (std::size_t i = 1; i < chain.size(); ++i)
    EXPECT_TRUE(std::includes(chain[i - 1].begin(), chain[i - 1].end(), chain[i].begin(),
                              chain[i].end()));
}

TEST(Lattice, CanonicalLabelsAndCovers) {
  const auto lattice = enumerate_subgyrogroups(g2::build_g2(3));
  std::set<std::string> labels;
  for (const auto& s : lattice.nodes) labels.insert(s.label());
  EXPECT_EQ(labels, (std::set<std::string>{"<0>", "<4>", "<2>", "<1>", "<5>", "<2,4>", "<6>",
                                           "<1,4>"}));
  // Every maximal proper node is covered by the whole gyrogroup, and <0> only covers upward.
  EXPECT_EQ(lattice.nodes.front().label(), "<0>");
  EXPECT_EQ(lattice.nodes.back().order(), 8u);
  for (const auto& [child, parent] : lattice.covers) {
    EXPECT_LT(lattice.nodes[child].order(), lattice.nodes[parent].order());
    EXPECT_TRUE(std::includes(lattice.nodes[parent].elements.begin(),
                              lattice.nodes[parent].elements.end(),
                              lattice.nodes[child].elements.begin(),
                              lattice.nodes[child].elements.end()));
  }
  const std::vector<Element> two_four{0, 2, 4, 6};
  EXPECT_TRUE(lattice.find(two_four).has_value());
}

TEST(Lattice, LabelsForG2Of4) {
  const auto lattice = enumerate_subgyrogroups(g2::build_g2(4));
  std::set<std::string> labels;
  for (const auto& s : lattice.nodes) labels.insert(s.label());
  EXPECT_TRUE(labels.contains("<1,8>"));
  EXPECT_TRUE(labels.contains("<2,8>"));
  EXPECT_TRUE(labels.contains("<9>"));
}

TEST(Degenerate, GroupsAndGyrogroups) {
  EXPECT_TRUE(is_degenerate_group(groups::cyclic(8)));
  EXPECT_TRUE(is_degenerate_group(groups::dihedral(4)));
  EXPECT_FALSE(is_degenerate_group(g2::build_g2(3)));
  // Trivial gyrations on a non-associative table disagree with associativity.
  EXPECT_THROW(is_degenerate_group(testing_support::with_trivial_gyrations(g2::build_g2(3))),
               std::logic_error);
}

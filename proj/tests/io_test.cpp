#include "gyro/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

#include "gyro/construct.hpp"
#include "gyro/groups.hpp"
#include "gyro/subgyrogroups.hpp"
#include "gyro/verify.hpp"
#include "test_support.hpp"

using namespace gyro;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(EmitCsv, G2Of4Layout) {
  const auto lines = lines_of(io::emit_tables(g2::build_g2(4), io::TableFormat::Csv));
  ASSERT_EQ(lines.size(), 1u + 1 + 16 + 1 + 16 + 2);
  EXPECT_EQ(lines[0], "order,16");
  EXPECT_EQ(lines[1], "cayley");
  EXPECT_EQ(lines[2 + 8], "8,13,10,15,12,9,14,11,0,5,2,7,4,1,6,3");
  EXPECT_EQ(lines[18], "gyration");
  EXPECT_EQ(lines[19 + 9], "I,A,I,A,I,A,I,A,A,I,A,I,A,I,A,I");
  EXPECT_EQ(lines[35], "perm I: 0 1 2 3 4 5 6 7 8 9 10 11 12 13 14 15");
  EXPECT_EQ(lines[36], "perm A: 0 5 2 7 4 1 6 3 8 13 10 15 12 9 14 11");
}

TEST(EmitCsv, TrivialGroup) {
  const auto g = groups::cyclic(1);
  EXPECT_EQ(io::emit_tables(g, io::TableFormat::Csv),
            "order,1\ncayley\n0\ngyration\nI\nperm I: 0\n");
}

TEST(EmitText, ShowsLegendInCycleNotation) {
  const auto text = io::emit_tables(g2::build_g2(3), io::TableFormat::Text);
  EXPECT_NE(text.find("A = (1,3)(5,7)"), std::string::npos);
  EXPECT_NE(text.find("I = ()"), std::string::npos);
}

TEST(Legend, SkipsLetterI) {
  // 27 distinct gyrations: identity plus 26 transpositions-like permutations.
  const std::size_t n = 30;
  std::vector<Element> cayley(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) cayley[a * n + b] = static_cast<Element>((a + b) % n);
  std::vector<Permutation> perms{Permutation::identity(n)};
  std::vector<GyrIndex> gyr(n * n, 0);
  for (std::size_t k = 1; k <= 26; ++k) {
    std::vector<Element> m(n);
    for (std::size_t x = 0; x < n; ++x) m[x] = static_cast<Element>(x);
    std::swap(m[0], m[k]);
    perms.emplace_back(m);
    gyr[k] = static_cast<GyrIndex>(k);
  }
  const auto symbols = io::legend_symbols(FiniteGyrogroup(n, cayley, gyr, perms));
  ASSERT_EQ(symbols.size(), 27u);
  EXPECT_EQ(symbols[0], "I");
  EXPECT_EQ(symbols[8], "H");
  EXPECT_EQ(symbols[9], "J");
  EXPECT_EQ(symbols[25], "Z");
  EXPECT_EQ(symbols[26], "P26");
}

TEST(Load, RoundTripIsByteIdentical) {
  for (int n = 3; n <= 6; ++n) {
    const auto g = g2::build_g2(n);
    const auto csv = io::emit_tables(g, io::TableFormat::Csv);
    const auto loaded = io::load_tables(csv);
    EXPECT_EQ(loaded, g);
    EXPECT_EQ(io::emit_tables(loaded, io::TableFormat::Csv), csv);
  }
}

TEST(Load, AcceptsCrlfCommentsAndBlankLines) {
  const std::string text = "# Z2\r\norder,2\r\n\r\ncayley\r\n0,1\r\n1,0\r\ngyration\r\nI,I\r\nI,I\r\nperm I: 0 1\r\n";
  EXPECT_EQ(io::load_tables(text), groups::cyclic(2));
}

TEST(Load, ShortRowIsParseError) {
  auto csv = io::emit_tables(g2::build_g2(3), io::TableFormat::Csv);
  const std::string row = "4,7,6,5,0,3,2,1\n";
  csv.replace(csv.find(row), row.size(), "4,7,6,5,0,3,2\n");
  try {
    io::load_tables(csv);
    FAIL() << "expected ParseError";
  } catch (const io::ParseError& e) {
    EXPECT_EQ(e.line(), 7u);
    EXPECT_EQ(e.column(), 8u);
  }
}

TEST(Load, BadEntryIsParseError) {
  auto csv = io::emit_tables(groups::cyclic(2), io::TableFormat::Csv);
  csv.replace(csv.find("1,0\n"), 4, "1,x\n");
  try {
    io::load_tables(csv);
    FAIL() << "expected ParseError";
  } catch (const io::ParseError& e) {
    EXPECT_EQ(e.line(), 4u);
    EXPECT_EQ(e.column(), 2u);
  }
  EXPECT_THROW(io::load_tables("order,2\ncayley\n0,1\n"), io::ParseError);
  EXPECT_THROW(io::load_tables("size,2\n"), io::ParseError);
}

TEST(Load, UndefinedSymbolIsStructureError) {
  auto csv = io::emit_tables(g2::build_g2(3), io::TableFormat::Csv);
  csv.replace(csv.find("perm A:"), 7, "perm B:");
  EXPECT_THROW(io::load_tables(csv), io::StructureError);
}

TEST(Load, LatinDefectIsStructureErrorUnlessRelaxed) {
  const auto bad = testing_support::with_entry(groups::cyclic(4), 3, 1, 1);
  const auto csv = io::emit_tables(bad, io::TableFormat::Csv);
  EXPECT_THROW(io::load_tables(csv), io::StructureError);
  EXPECT_EQ(io::load_tables(csv, {.require_latin = false}), bad);
}

TEST(Load, RelabelsIdentityToZero) {
  // Z4 with labels 0 and 3 swapped, so 3 is the identity.
  const std::vector<Element> swap{3, 1, 2, 0};
  std::vector<Element> cayley(16);
  const auto z4 = groups::cyclic(4);
  for (Element a = 0; a < 4; ++a)
    for (Element b = 0; b < 4; ++b) cayley[swap[a] * 4 + swap[b]] = swap[z4.op(a, b)];
  const auto shifted = FiniteGyrogroup::from_group_table(4, cayley);
  ASSERT_EQ(find_left_identity(shifted), 3u);
  EXPECT_EQ(io::load_tables(io::emit_tables(shifted, io::TableFormat::Csv)), z4);
}

TEST(Dot, LatticeOfG2Of3) {
  const auto lattice = enumerate_subgyrogroups(g2::build_g2(3));
  const auto dot = io::emit_lattice_dot(lattice);
  EXPECT_EQ(dot.rfind("digraph lattice {", 0), 0u);
  std::size_t nodes = 0, edges = 0;
  for (const auto& l : lines_of(dot)) {
    if (l.find("[label=") != std::string::npos) ++nodes;
    if (l.find("->") != std::string::npos) ++edges;
  }
  EXPECT_EQ(nodes, 8u);
  EXPECT_EQ(edges, lattice.covers.size());
  EXPECT_NE(dot.find("\"<1,4> |8|\", style=bold"), std::string::npos);
  EXPECT_NE(dot.find("\"<5> |4|\""), std::string::npos);
  // <0> is covered by exactly the three subgroups of order 2.
  std::size_t from_bottom = 0;
  for (const auto& [child, parent] : lattice.covers)
    if (child == 0) {
      ++from_bottom;
      EXPECT_EQ(lattice.nodes[parent].order(), 2u);
    }
  EXPECT_EQ(from_bottom, 3u);
}

TEST(Report, JsonRoundTrip) {
  const auto g = g2::build_g2(3);
  auto doc = io::make_report(verify(g), g.order());
  doc.n = 3;
  doc.m = 4;
  doc.subgyrogroup_count = 8;
  doc.gyroauto_order = 2;
  EXPECT_TRUE(doc.gyrocommutative);
  EXPECT_EQ(io::ReportDocument::from_json(doc.to_json()), doc);

  const auto bad = testing_support::with_trivial_gyrations(g);
  const auto failed = io::make_report(verify(bad), bad.order());
  EXPECT_FALSE(failed.all_passed());
  EXPECT_EQ(io::ReportDocument::from_json(failed.to_json()), failed);
  EXPECT_NE(failed.to_json().find("\"status\": \"fail\""), std::string::npos);
  EXPECT_NE(io::format_report(failed).find("verification FAILED"), std::string::npos);
  EXPECT_NE(io::format_report(doc).find("result: all checks pass"), std::string::npos);
}

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <regex>
#include <sstream>

#include "ttl/diagram_codes.hpp"
#include "ttl/error.hpp"

namespace ttl {
namespace {

TEST(BraidWordFormat, Serializes) {
  EXPECT_EQ(export_code(BraidWord(2, {1, 1}), DiagramFormat::BraidWord), "2 | 1 1\n");
  EXPECT_EQ(export_code(BraidWord(4, {1, -3, 2}), DiagramFormat::BraidWord), "4 | 1 -3 2\n");
  EXPECT_EQ(export_code(BraidWord(3), DiagramFormat::BraidWord), "3 |\n");
}

TEST(BraidWordFormat, ParsesAndRejects) {
  EXPECT_EQ(parse_braid_word("2 | 1 1"), BraidWord(2, {1, 1}));
  EXPECT_EQ(parse_braid_word("  5|  -4 +2 \n"), BraidWord(5, {-4, 2}));
  EXPECT_EQ(parse_braid_word("3 |"), BraidWord(3));
  EXPECT_THROW(parse_braid_word("2 1 1"), Error);
  EXPECT_THROW(parse_braid_word("x | 1"), Error);
  EXPECT_THROW(parse_braid_word("2 3 | 1"), Error);
  EXPECT_THROW(parse_braid_word("2 | 1 a"), Error);
  EXPECT_THROW(parse_braid_word("2 | 2"), Error);
  EXPECT_THROW(parse_braid_word("2 | 0"), Error);
}

TEST(BraidWordFormat, RoundTripsRandomWords) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 30)(rng);
    std::vector<int> letters(std::uniform_int_distribution<int>(0, 40)(rng));
    for (int& l : letters) {
      l = std::uniform_int_distribution<int>(1, n - 1)(rng) * (rng() % 2 ? 1 : -1);
    }
    const BraidWord word(n, letters);
    const std::string text = export_code(word, DiagramFormat::BraidWord);
    EXPECT_EQ(parse_braid_word(text), word);
    EXPECT_EQ(export_code(parse_braid_word(text), DiagramFormat::BraidWord), text);
  }
}

TEST(PdFormat, HopfLink) {
  // Hand trace of sigma1 sigma1: strand 1 takes arcs 1, 2 and strand 2 arcs
  // 3, 4; at each crossing the strand entering from the left passes under.
  EXPECT_EQ(export_code(BraidWord(2, {1, 1}), DiagramFormat::Pd), "X[1,4,2,3]\nX[4,1,3,2]\n");
}

TEST(PdFormat, PositiveTrefoil) {
  // Single component visiting c1 L, c2 R, c3 L, c1 R, c2 L, c3 R on arcs 1..6.
  EXPECT_EQ(export_code(BraidWord(2, {1, 1, 1}), DiagramFormat::Pd),
            "X[1,5,2,4]\nX[5,3,6,2]\nX[3,1,4,6]\n");
}

TEST(PdFormat, NegativeCrossingOrder) {
  // Mirror Hopf link: the strand entering from the right passes under.
  EXPECT_EQ(export_code(BraidWord(2, {-1, -1}), DiagramFormat::Pd), "X[3,1,4,2]\nX[2,4,1,3]\n");
}

struct PdCrossing {
  int a, b, c, d;
};

std::vector<PdCrossing> parse_pd(const std::string& text) {
  std::vector<PdCrossing> out;
  const std::regex line(R"(X\[(\d+),(\d+),(\d+),(\d+)\])");
  std::istringstream in(text);
  std::string row;
  while (std::getline(in, row)) {
    std::smatch m;
    EXPECT_TRUE(std::regex_match(row, m, line)) << row;
    out.push_back({std::stoi(m[1]), std::stoi(m[2]), std::stoi(m[3]), std::stoi(m[4])});
  }
  return out;
}

TEST(PdFormat, ArcsAndSignsAreConsistent) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    std::vector<int> letters(std::uniform_int_distribution<int>(1, 30)(rng));
    for (int& l : letters) {
      l = std::uniform_int_distribution<int>(1, n - 1)(rng) * (rng() % 2 ? 1 : -1);
    }
    const BraidWord word(n, letters);
    const auto pd = parse_pd(export_code(word, DiagramFormat::Pd));
    ASSERT_EQ(pd.size(), letters.size());

    // Every arc label occurs exactly twice.
    std::map<int, int> uses;
    for (const auto& x : pd) {
      for (int label : {x.a, x.b, x.c, x.d}) ++uses[label];
    }
    for (const auto& [label, count] : uses) EXPECT_EQ(count, 2) << "arc " << label;
    ASSERT_EQ(static_cast<int>(uses.size()), 2 * static_cast<int>(letters.size()));

    // Labels run consecutively along each component; the component sizes are
    // the visit counts of the Gauss code. next_label follows the orientation.
    std::vector<int> first(uses.size() + 1, 0);
    std::vector<int> last(uses.size() + 1, 0);
    std::istringstream gauss(export_code(word, DiagramFormat::Gauss));
    std::string row;
    int start = 1;
    while (std::getline(gauss, row)) {
      std::istringstream tokens(row);
      int visits = 0;
      for (std::string tok; tokens >> tok;) ++visits;
      for (int v = 0; v < visits; ++v) {
        first[start + v] = start;
        last[start + v] = start + visits - 1;
      }
      start += visits;
    }
    auto next_label = [&](int label) { return label == last[label] ? first[label] : label + 1; };

    // Under strand runs a -> c; a positive crossing has its over strand d -> b.
    for (std::size_t t = 0; t < pd.size(); ++t) {
      const auto& x = pd[t];
      EXPECT_EQ(x.c, next_label(x.a));
      const bool positive = x.b == next_label(x.d);
      const bool negative = x.d == next_label(x.b);
      ASSERT_TRUE(positive || negative);
      // On a two-arc component both directions look like successors.
      if (positive != negative) EXPECT_EQ(positive, letters[t] > 0) << "crossing " << t + 1;
    }
  }
}

TEST(GaussFormat, EmptyWordIsUnlinkOfEmptySequences) {
  EXPECT_EQ(export_code(BraidWord(2), DiagramFormat::Gauss), "\n\n");
  EXPECT_EQ(export_code(BraidWord(2), DiagramFormat::Pd), "");
}

TEST(GaussFormat, HopfLink) {
  EXPECT_EQ(export_code(BraidWord(2, {1, 1}), DiagramFormat::Gauss), "U+1 O+2\nO+1 U+2\n");
  EXPECT_EQ(export_code(BraidWord(2, {-1}), DiagramFormat::Gauss), "O-1 U-1\n");
}

TEST(GaussFormat, EveryCrossingOnceOverOnceUnder) {
  const BraidWord word(4, {1, -2, 3, 2, -1, 3, 3, -2});
  std::istringstream in(export_code(word, DiagramFormat::Gauss));
  std::map<std::string, int> over, under;
  std::string tok;
  while (in >> tok) (tok[0] == 'O' ? over : under)[tok.substr(1)]++;
  EXPECT_EQ(over.size(), word.size());
  EXPECT_EQ(under.size(), word.size());
  for (const auto& [id, count] : over) {
    EXPECT_EQ(count, 1);
    EXPECT_EQ(under[id], 1);
  }
}

TEST(DiagramFormat, ParsesNames) {
  EXPECT_EQ(parse_format("pd"), DiagramFormat::Pd);
  EXPECT_EQ(parse_format("gauss"), DiagramFormat::Gauss);
  EXPECT_EQ(parse_format("braid-word"), DiagramFormat::BraidWord);
  EXPECT_THROW(parse_format("dt"), Error);
}

}  // namespace
}  // namespace ttl

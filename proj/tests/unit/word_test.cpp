#include <gtest/gtest.h>

#include <coxa/coxa.hpp>

#include "oracles.hpp"

namespace coxa {
namespace {

TEST(Rank, RejectsRankBelowTwo) {
  EXPECT_THROW(Rank(1), DomainError);
  EXPECT_EQ(Rank(4).period(), 5);
}

TEST(Generator, SigmaIndexRange) {
  EXPECT_THROW(Generator::sigma(0), DomainError);
  EXPECT_TRUE(Generator::affine().is_affine());
  EXPECT_EQ(Generator::from_code(3).index(), 3);
  EXPECT_FALSE(Generator::sigma(3).valid_for(Rank(2)));
}

TEST(Word, ParseAndFormatRoundTrip) {
  const Rank r(3);
  const Word w = parse_word("s1 s2*a  s3", r);
  ASSERT_EQ(w.size(), 4u);
  EXPECT_EQ(w[2], Generator::affine());
  EXPECT_EQ(format_word(w), "s1 s2 a s3");
  EXPECT_EQ(parse_word(format_word(w), r), w);
  EXPECT_TRUE(parse_word("", r).empty());
}

TEST(Word, ParseRejectsBadTokens) {
  const Rank r(2);
  EXPECT_THROW(parse_word("s3", r), DomainError);
  EXPECT_THROW(parse_word("s0", r), DomainError);
  EXPECT_THROW(parse_word("b", r), DomainError);
  EXPECT_THROW(parse_word("s", r), DomainError);
}

TEST(Word, WithoutDropsTwoPositions) {
  const Rank r(3);
  const Word w = parse_word("s1 s2 s3 a", r);
  EXPECT_EQ(format_word(w.without(1, 3)), "s1 s3");
  EXPECT_EQ(w.count_affine(), 1u);
  EXPECT_EQ(format_word(w.reversed()), "a s3 s2 s1");
}

TEST(Word, RotateIsDiagramAutomorphism) {
  const Rank r(3);
  const Word w = parse_word("a s1 s3", r);
  EXPECT_EQ(format_word(rotate(w, 1)), "s1 s2 a");
  EXPECT_EQ(rotate(rotate(w, 3), -3), w);
  EXPECT_EQ(rotate(w, 4), w);
  for (const auto& e : bfs_enumerate(r, 5)) {
    EXPECT_EQ(perm_length(to_permutation(rotate(e.word, 1))), e.length);
  }
}

TEST(IsReduced, AgreesWithPermutationLength) {
  for (int n : {2, 3}) {
    const Rank r(n);
    const auto gens = generators(r);
    // Every word of length <= 5.
    std::vector<Word> layer{Word(r)};
    for (int len = 1; len <= 5; ++len) {
      std::vector<Word> next;
      for (const auto& w : layer) {
        for (auto g : gens) {
          Word x = w;
          x.push_back(g);
          EXPECT_EQ(is_reduced(x), perm_length(to_permutation(x)) == x.size()) << format_word(x);
          next.push_back(std::move(x));
        }
      }
      layer = std::move(next);
    }
  }
}

TEST(HatPartner, MatchesBruteForce) {
  const Rank r(2);
  for (const auto& e : bfs_enumerate(r, 6)) {
    for (auto g : generators(r)) {
      Word w = e.word;
      w.push_back(g);
      EXPECT_EQ(hat_partner(w), oracle::brute_hat_partner(w)) << format_word(w);
    }
  }
}

TEST(HatPartner, SmallExample) {
  const Rank r(2);
  EXPECT_EQ(hat_partner(parse_word("s1 s2 s1 s2", r)), std::optional<std::size_t>(0));
  EXPECT_EQ(hat_partner(parse_word("s1 s2", r)), std::nullopt);
  EXPECT_THROW(hat_partner(parse_word("s1 s1 s2", r)), DomainError);
}

}  // namespace
}  // namespace coxa

#include <gtest/gtest.h>

#include <map>
#include <set>

#include <coxa/coxa.hpp>

#include "oracles.hpp"

namespace coxa {
namespace {

TEST(EnumerateBlocks, ValidSortedAndCounted) {
  for (int n : {2, 3, 4}) {
    const Rank r(n);
    for (std::size_t m = 0; m <= 4; ++m) {
      const auto fam = enumerate_blocks(r, m);
      EXPECT_EQ(fam.items.size(), count_blocks(r, m));
      for (std::size_t k = 0; k < fam.items.size(); ++k) {
        EXPECT_EQ(fam.items[k].size(), m);
        EXPECT_TRUE(validate_block(fam.items[k].pairs(), r));
        if (k > 0) EXPECT_LT(fam.items[k - 1], fam.items[k]);
      }
    }
  }
  EXPECT_EQ(count_blocks(Rank(3), 0), 1u);
}

TEST(EnumerateBlocks, MinimalCosetRepresentatives) {
  // Every element of the ball is block * x with x finite, and the block is
  // the shortest element of its coset.
  const Rank r(2);
  const oracle::Ball ball(r, 10);
  std::map<AffinePermutation, std::size_t> shortest;
  const auto finite = oracle::finite_group(r);
  for (const auto& e : ball.elements()) {
    std::size_t best = e.length;
    for (const auto& [p, w] : finite) best = std::min(best, perm_length(e.perm * p));
    const Element c = canonicalize(e.word);
    EXPECT_EQ(c.block().length(), best);
    EXPECT_EQ(coset_rep(c).length(), best);
    EXPECT_TRUE(coset_rep(c).finite().is_identity());
  }
}

TEST(EnumerateBlocks, CapThrows) {
  EXPECT_THROW(enumerate_blocks(Rank(4), 6, 10), ResourceLimit);
}

}  // namespace
}  // namespace coxa

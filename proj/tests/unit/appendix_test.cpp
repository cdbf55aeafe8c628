#include <gtest/gtest.h>

#include <set>

#include <coxa/coxa.hpp>

namespace coxa {
namespace {

TEST(Appendix, RankTwoMatchesEnumeration) {
  const Rank r(2);
  const auto entries = appendix_blocks(r, 3);
  std::set<AffineBlock> listed;
  for (const auto& e : entries) {
    EXPECT_TRUE(listed.insert(e.block).second) << format_block(e.block);
    EXPECT_FALSE(e.block.empty());
    EXPECT_FALSE(e.family.empty());
  }
  for (std::size_t m = 1; m <= 3; ++m) {
    for (const auto& b : enumerate_blocks(r, m).items) EXPECT_TRUE(listed.contains(b)) << format_block(b);
  }
}

TEST(Appendix, RankThreeFamiliesPresent) {
  const auto entries = appendix_blocks(Rank(3), 2);
  std::set<std::string> families;
  for (const auto& e : entries) families.insert(e.family);
  EXPECT_EQ(families, (std::set<std::string>{"A", "B", "C", "D"}));
}

TEST(Appendix, OtherRanksRejected) {
  EXPECT_THROW(appendix_blocks(Rank(4), 1), DomainError);
  EXPECT_THROW(appendix_blocks(Rank(2), -1), DomainError);
}

TEST(SelfCheck, AllPass) {
  for (const auto& c : run_selfcheck()) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
}

}  // namespace
}  // namespace coxa

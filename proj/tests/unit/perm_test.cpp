#include <gtest/gtest.h>

#include <set>

#include <coxa/coxa.hpp>

namespace coxa {
namespace {

TEST(AffinePermutation, GeneratorWindows) {
  const Rank r(2);
  EXPECT_EQ(AffinePermutation::generator(r, Generator::affine()).window(),
            (std::vector<std::int64_t>{0, 2, 4}));
  EXPECT_EQ(AffinePermutation::generator(r, Generator::sigma(1)).window(),
            (std::vector<std::int64_t>{2, 1, 3}));
}

TEST(AffinePermutation, FromWindowValidates) {
  const Rank r(2);
  EXPECT_THROW(AffinePermutation::from_window(r, {1, 2}), DomainError);
  EXPECT_THROW(AffinePermutation::from_window(r, {1, 1, 4}), DomainError);
  EXPECT_THROW(AffinePermutation::from_window(r, {2, 3, 4}), DomainError);
  EXPECT_NO_THROW(AffinePermutation::from_window(r, {-1, 3, 4}));
}

TEST(AffinePermutation, PeriodicExtension) {
  const Rank r(2);
  const auto a = AffinePermutation::generator(r, Generator::affine());
  EXPECT_EQ(a(0), 1);
  EXPECT_EQ(a(4), 3);
  EXPECT_EQ(a(-2), -3);
}

TEST(AffinePermutation, CoxeterRelations) {
  for (int n : {2, 3, 4}) {
    const Rank r(n);
    const auto id = AffinePermutation::identity(r);
    const auto gens = generators(r);
    for (auto s : gens) {
      const auto ps = AffinePermutation::generator(r, s);
      EXPECT_EQ(ps * ps, id);
      for (auto t : gens) {
        if (s == t) continue;
        const auto pt = AffinePermutation::generator(r, t);
        const int d = std::abs(s.code() - t.code());
        const int m = (d == 1 || d == n) ? 3 : 2;
        auto prod = id;
        for (int k = 0; k < m; ++k) prod = prod * ps * pt;
        EXPECT_EQ(prod, id);
      }
    }
  }
}

TEST(AffinePermutation, TimesAndLeftTimesAgreeWithProduct) {
  const Rank r(3);
  for (const auto& e : bfs_enumerate(r, 4)) {
    for (auto g : generators(r)) {
      const auto pg = AffinePermutation::generator(r, g);
      EXPECT_EQ(e.perm.times(g), e.perm * pg);
      EXPECT_EQ(e.perm.left_times(g), pg * e.perm);
    }
    EXPECT_EQ(e.perm * e.perm.inverse(), AffinePermutation::identity(r));
  }
}

TEST(PermLength, EqualsBfsDistance) {
  for (int n : {2, 3}) {
    for (const auto& e : bfs_enumerate(Rank(n), 7)) {
      EXPECT_EQ(perm_length(e.perm), e.length);
      EXPECT_EQ(e.word.size(), e.length);
      EXPECT_EQ(to_permutation(e.word), e.perm);
    }
  }
}

TEST(BfsEnumerate, LevelSizesAtRankTwo) {
  // Spheres of W(~A_2) have 1, 3, 6, 9, ... elements.
  const auto all = bfs_enumerate(Rank(2), 12);
  EXPECT_EQ(all.size(), 235u);
  std::vector<std::size_t> sizes(13, 0);
  for (const auto& e : all) ++sizes[e.length];
  EXPECT_EQ(sizes[0], 1u);
  for (std::size_t k = 1; k <= 12; ++k) EXPECT_EQ(sizes[k], 3 * k) << k;
}

TEST(BfsEnumerate, OrderedAndDistinct) {
  const auto all = bfs_enumerate(Rank(3), 6);
  std::set<AffinePermutation> seen;
  for (std::size_t k = 0; k < all.size(); ++k) {
    EXPECT_TRUE(seen.insert(all[k].perm).second);
    if (k > 0) {
      EXPECT_TRUE(all[k - 1].length < all[k].length ||
                  (all[k - 1].length == all[k].length && all[k - 1].perm < all[k].perm));
    }
  }
}

TEST(BfsEnumerate, CapThrows) {
  EXPECT_THROW(bfs_enumerate(Rank(3), 10, 100), ResourceLimit);
}

}  // namespace
}  // namespace coxa

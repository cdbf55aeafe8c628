#include <gtest/gtest.h>

#include <map>
#include <set>

#include <coxa/coxa.hpp>

#include "oracles.hpp"

namespace coxa {
namespace {

TEST(FiniteElement, FromBricksValidates) {
  const Rank r(3);
  EXPECT_NO_THROW(FiniteElement::from_bricks(r, {{1, 3}, {2, 2}, {1, 1}}));
  EXPECT_THROW(FiniteElement::from_bricks(r, {{1, 2}, {1, 2}}), DomainError);
  EXPECT_THROW(FiniteElement::from_bricks(r, {{2, 1}}), DomainError);
  EXPECT_THROW(FiniteElement::from_bricks(r, {{1, 4}}), DomainError);
}

TEST(FiniteElement, BrickWords) {
  const Rank r(4);
  EXPECT_EQ(format_word(floor_word(r, 2, 4)), "s2 s3 s4");
  EXPECT_EQ(format_word(ceil_word(r, 3, 1)), "s3 s2 s1");
  EXPECT_TRUE(floor_word(r, 5, 4).empty());
  EXPECT_TRUE(ceil_word(r, 0, 1).empty());
}

TEST(FiniteElement, CanonicalFormIsBijective) {
  for (int n : {2, 3, 4}) {
    const Rank r(n);
    const auto all = all_finite_elements(r);
    const auto group = oracle::finite_group(r);
    ASSERT_EQ(all.size(), group.size());
    std::set<AffinePermutation> images;
    for (const auto& x : all) {
      const Word w = finite_word(x);
      EXPECT_TRUE(is_reduced(w));
      EXPECT_EQ(w.size(), x.length());
      EXPECT_EQ(canonicalize_finite(w), x);
      images.insert(to_permutation(w));
    }
    EXPECT_EQ(images.size(), all.size());
  }
}

TEST(FiniteElement, CanonicalizeMatchesGroup) {
  const Rank r(3);
  for (const auto& [perm, word] : oracle::finite_group(r)) {
    EXPECT_EQ(to_permutation(finite_word(canonicalize_finite(word))), perm);
  }
  EXPECT_THROW(canonicalize_finite(parse_word("s1 a", r)), DomainError);
}

TEST(FiniteElement, ProductsAndInverses) {
  const Rank r(3);
  const auto all = all_finite_elements(r);
  for (const auto& x : all) {
    EXPECT_TRUE(finite_mul(x, finite_inverse(x)).is_identity());
    for (std::size_t k = 0; k < all.size(); k += 5) {
      const auto& y = all[k];
      EXPECT_EQ(to_permutation(finite_word(finite_mul(x, y))),
                to_permutation(finite_word(x) + finite_word(y)));
    }
    for (int u = 1; u <= r.n(); ++u) {
      Word w(r, {Generator::sigma(u)});
      EXPECT_EQ(finite_left_mul(u, x), canonicalize_finite(w + finite_word(x)));
    }
  }
}

TEST(FiniteElement, ApplyActsAsPermutation) {
  const Rank r(3);
  const auto s1 = canonicalize_finite(parse_word("s1", r));
  EXPECT_EQ(finite_apply(s1, 1), 2);
  EXPECT_EQ(finite_apply(s1, 3), 3);
  for (const auto& x : all_finite_elements(r)) {
    std::set<int> values;
    for (int k = 1; k <= 4; ++k) values.insert(finite_apply(x, k));
    EXPECT_EQ(values.size(), 4u);
  }
}

TEST(HPrefix, ClassificationAtRankThree) {
  const Rank r(3);
  EXPECT_TRUE(is_trivial(r, {4, 0}));
  EXPECT_TRUE(is_extremal(r, {1, 0}));
  EXPECT_TRUE(is_extremal(r, {3, 1}));
  EXPECT_FALSE(is_extremal(r, {4, 2}));
  EXPECT_FALSE(is_extremal(r, {2, 0}));
  EXPECT_EQ(format_word(h_word(r, {2, 2})), "s2 s3 s2 s1");
  EXPECT_EQ(hprefix_length(r, {2, 2}), 4u);
  EXPECT_FALSE(valid_hprefix(r, {5, 0}));
}

TEST(PeelH, UniqueAdditiveFactorisation) {
  for (int n : {2, 3, 4}) {
    const Rank r(n);
    std::map<HPrefix, std::size_t> per_prefix;
    for (const auto& x : all_finite_elements(r)) {
      const auto peeled = peel_h(x);
      EXPECT_TRUE(in_parabolic_p(peeled.p));
      EXPECT_EQ(finite_mul(h_element(r, peeled.h), peeled.p), x);
      EXPECT_EQ(hprefix_length(r, peeled.h) + peeled.p.length(), x.length());
      ++per_prefix[peeled.h];
    }
    // n(n+1) prefixes, each with |P| = (n-1)! completions.
    EXPECT_EQ(per_prefix.size(), static_cast<std::size_t>(n * (n + 1)));
    std::size_t p_size = 1;
    for (int k = 2; k <= n - 1; ++k) p_size *= static_cast<std::size_t>(k);
    for (const auto& [h, count] : per_prefix) EXPECT_EQ(count, p_size);
  }
}

TEST(HTimesFloor, MatchesGroup) {
  for (int n : {3, 4, 5}) {
    const Rank r(n);
    for (int jp = 1; jp <= n + 1; ++jp)
      for (int ip = 0; ip <= n - 1; ++ip)
        for (int j = 2; j <= n; ++j) {
          const bool c1 = jp > j && j > ip + 1;
          const bool c2 = jp > ip + 1 && ip + 1 >= j;
          const bool c3 = ip + 1 >= jp && jp >= j;
          if (!(c1 || c2 || c3)) {
            EXPECT_THROW(h_times_floor(r, jp, ip, j), DomainError);
            continue;
          }
          const auto fp = h_times_floor(r, jp, ip, j);
          EXPECT_GE(fp.tail_lo, 2);
          const Word lhs = h_word(r, {jp, ip}) + floor_word(r, j, n);
          const Word rhs = h_word(r, fp.h) + floor_word(r, fp.tail_lo, n - 1);
          EXPECT_EQ(to_permutation(lhs), to_permutation(rhs));
          EXPECT_EQ(lhs.size(), rhs.size());
        }
  }
}

TEST(BrickIdentities, HoldInTheGroup) {
  for (int n = 2; n <= 5; ++n) {
    const auto report = brick_identities_check(Rank(n));
    EXPECT_GT(report.instances, 0u);
    EXPECT_TRUE(report.group_violations.empty()) << "n=" << n;
  }
}

}  // namespace
}  // namespace coxa

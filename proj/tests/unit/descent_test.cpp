#include <gtest/gtest.h>

#include <coxa/coxa.hpp>

#include "oracles.hpp"

namespace coxa {
namespace {

bool ends_in_affine_descent(const Element& e) {
  for (auto g : right_descents(e))
    if (g.is_affine()) return true;
  return false;
}

TEST(DeficiencyM1, ExactAtRankTwo) {
  const Rank r(2);
  for (int j1 = 1; j1 <= 3; ++j1)
    for (int i1 = 0; i1 <= 1; ++i1)
      for (int j = 1; j <= 3; ++j)
        for (int i = 0; i <= 1; ++i) {
          if (is_trivial(r, {j, i})) {
            EXPECT_THROW(deficiency_m1(r, {j1, i1}, {j, i}), DomainError);
            continue;
          }
          const Word w = deficiency_m1_word(r, {j1, i1}, {j, i});
          const auto hit = deficiency_m1(r, {j1, i1}, {j, i});
          EXPECT_EQ(hit.has_value(), !is_reduced(w)) << format_word(w);
          if (hit) {
            EXPECT_EQ(hit->kind, DescentCase::Kind::Deficient);
            EXPECT_EQ(oracle::brute_hat_partner(w), hit->hat_partner);
          }
          if (is_extremal(r, {j, i})) EXPECT_FALSE(hit.has_value());
        }
}

TEST(DeficiencyM1, SoundAtHigherRanks) {
  for (int n : {3, 4}) {
    const Rank r(n);
    for (int j1 = 1; j1 <= n + 1; ++j1)
      for (int i1 = 0; i1 <= n - 1; ++i1)
        for (int j = 1; j <= n + 1; ++j)
          for (int i = 0; i <= n - 1; ++i) {
            if (is_trivial(r, {j, i})) continue;
            const auto hit = deficiency_m1(r, {j1, i1}, {j, i});
            if (!hit) continue;
            const Word w = deficiency_m1_word(r, {j1, i1}, {j, i});
            EXPECT_FALSE(is_reduced(w));
            EXPECT_EQ(oracle::brute_hat_partner(w), hit->hat_partner) << format_word(w);
          }
  }
}

TEST(DeficiencyM1, CaseFourListedOnlyForFirstPairOneOne) {
  // Also non-reduced: h(1, 2) a h(2, 0) a at n = 3, which the list omits.
  const Rank r(3);
  EXPECT_TRUE(deficiency_m1(r, {1, 1}, {2, 0}).has_value());
  EXPECT_FALSE(is_reduced(deficiency_m1_word(r, {1, 2}, {2, 0})));
  EXPECT_FALSE(deficiency_m1(r, {1, 2}, {2, 0}).has_value());
}

TEST(AffineDescentCasesM2, ExactAtRankTwo) {
  const Rank r(2);
  for (const auto& b : enumerate_blocks(r, 2).items) {
    for (const auto& x : all_finite_elements(r)) {
      const auto peeled = peel_h(x);
      const bool generic = ends_in_affine_descent(Element(b, x));
      if (is_trivial(r, peeled.h)) {
        EXPECT_TRUE(generic);
        EXPECT_THROW(affine_descent_cases_m2(b, peeled.h), DomainError);
        continue;
      }
      const auto hit = affine_descent_cases_m2(b, peeled.h);
      EXPECT_EQ(hit.has_value(), generic);
      if (hit) {
        EXPECT_EQ(oracle::brute_hat_partner(descent_probe_word(b, peeled.h)), hit->hat_partner);
      }
    }
  }
}

TEST(AffineDescentSufficient, HitsAreDescentsForLongerBlocks) {
  const Rank r(3);
  for (std::size_t m = 1; m <= 3; ++m) {
    for (const auto& b : enumerate_blocks(r, m).items) {
      for (int j = 1; j <= 4; ++j)
        for (int i = 0; i <= 2; ++i) {
          if (is_trivial(r, {j, i})) continue;
          if (affine_descent_sufficient(b, {j, i})) {
            EXPECT_TRUE(ends_in_affine_descent(Element(b, h_element(r, {j, i}))));
          }
        }
    }
  }
  EXPECT_THROW(affine_descent_cases_m2(AffineBlock(r, {{4, 0}}), {2, 0}), DomainError);
}

}  // namespace
}  // namespace coxa

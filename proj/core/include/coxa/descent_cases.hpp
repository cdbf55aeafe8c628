#pragma once

#include <cstddef>
#include <optional>

#include "coxa/affine.hpp"
#include "coxa/finite.hpp"

namespace coxa {

/// Which listed case made a_{n+1} a right descent, and the hat partner of
/// the rightmost a_{n+1}: a 0-based position in the associated word.
struct DescentCase {
  enum class Kind {
    Deficient,  // one of the four deficient cases on the last pair
    Listed,     // one of the extra cases involving the last two pairs
  };
  Kind kind;
  int number;  // 1..4 for Deficient, 1..3 for Listed
  std::size_t hat_partner;

  friend bool operator==(const DescentCase&, const DescentCase&) = default;
};

/// The word h(j1, i1) a h(j, i) a examined by deficiency_m1.
Word deficiency_m1_word(Rank rank, BlockPair first, HPrefix second);

/// Matches h(j1, i1) a h(j, i) a against the four deficient cases. A hit is
/// always non-reduced. Exact at n = 2; from n = 3 on the list misses words
/// such as h(1, i1) a h(2, 0) a with i1 >= 2. `first` ranges over
/// 1 <= j1 <= n+1, 0 <= i1 <= n-1. Throws DomainError if h(j, i) is trivial.
std::optional<DescentCase> deficiency_m1(Rank rank, BlockPair first, HPrefix second);

/// The word block_word(block) h(j, i) a examined by the two functions below.
Word descent_probe_word(const AffineBlock& block, HPrefix x_prefix);

/// Case list for blocks of affine length 2: a hit means a_{n+1} is a right
/// descent of block * x for every x = h(j, i) p, p in P. Exact at n = 2,
/// incomplete from n = 3 on (see deficiency_m1).
/// Throws DomainError unless block.size() == 2 and h(j, i) is non-trivial.
std::optional<DescentCase> affine_descent_cases_m2(const AffineBlock& block, HPrefix x_prefix);

/// The same case list applied to the last two pairs of a block of any affine
/// length m >= 1. A hit is always a right descent; some descents are not
/// detected.
std::optional<DescentCase> affine_descent_sufficient(const AffineBlock& block, HPrefix x_prefix);

}  // namespace coxa

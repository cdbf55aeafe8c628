#pragma once

#include <cstddef>
#include <vector>

#include "coxa/affine.hpp"

namespace coxa {

/// All affine blocks of a fixed affine length, in lexicographic order of
/// their pairs. These are the minimal length representatives of the right
/// cosets w W(A_n) with L(w) = affine_length.
struct BlockFamily {
  Rank rank;
  std::size_t affine_length;
  std::vector<AffineBlock> items;
};

inline constexpr std::size_t kDefaultBlockCap = 5'000'000;

/// Depth-first extension pruned by the pairwise inequalities.
/// Throws ResourceLimit past `cap` blocks.
BlockFamily enumerate_blocks(Rank rank, std::size_t m, std::size_t cap = kDefaultBlockCap);

/// Same count as enumerate_blocks(rank, m).items.size(), without materialising.
std::size_t count_blocks(Rank rank, std::size_t m);

/// The block of e with trivial finite part.
Element coset_rep(const Element& e);

}  // namespace coxa

#pragma once

#include <string>
#include <vector>

#include "coxa/affine.hpp"

namespace coxa {

/// One affine block of the low-rank listings, with the parametric family it
/// came from (e.g. "A" with exponents eps, f, h, k).
struct AppendixEntry {
  std::string family;
  std::string prefix;          // the left factor alpha, as a word
  std::vector<int> exponents;  // in the family's order
  AffineBlock block;
};

/// Regenerates the parametric listings of the blocks of positive affine
/// length for n = 2 or n = 3, with every core exponent in [0, max_core].
/// Duplicates across families (same block) are kept once, first occurrence
/// wins. Throws DomainError for other ranks.
std::vector<AppendixEntry> appendix_blocks(Rank rank, int max_core);

}  // namespace coxa

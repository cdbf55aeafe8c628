#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

#include "coxa/word.hpp"

namespace coxa {

/// An element of the affine symmetric group in window notation: the values
/// w(1), ..., w(n+1) of a bijection of Z with w(i + n + 1) = w(i) + n + 1 and
/// sum(w(i) - i) = 0.
///
/// Generators act on positions from the right: sigma_i swaps positions i and
/// i+1, a_{n+1} swaps positions 0 and 1 (equivalently n+1 and n+2). With this
/// convention a_3 at rank 2 has window (0, 2, 4).
class AffinePermutation {
 public:
  static AffinePermutation identity(Rank rank);
  /// Validates both window invariants.
  static AffinePermutation from_window(Rank rank, std::vector<std::int64_t> window);
  static AffinePermutation generator(Rank rank, Generator g);

  Rank rank() const noexcept { return rank_; }
  const std::vector<std::int64_t>& window() const noexcept { return window_; }

  /// Value at an arbitrary integer position (periodic extension).
  std::int64_t operator()(std::int64_t position) const;

  /// Group product: (*this * other)(i) = (*this)(other(i)).
  AffinePermutation operator*(const AffinePermutation& other) const;
  AffinePermutation inverse() const;

  /// this * g, computed in O(1) by swapping window entries.
  AffinePermutation times(Generator g) const;
  /// g * this, computed by relabelling values.
  AffinePermutation left_times(Generator g) const;

  friend bool operator==(const AffinePermutation&, const AffinePermutation&) = default;
  friend auto operator<=>(const AffinePermutation& a, const AffinePermutation& b) {
    return a.window_ <=> b.window_;
  }

 private:
  AffinePermutation(Rank rank, std::vector<std::int64_t> window)
      : rank_(rank), window_(std::move(window)) {}

  Rank rank_;
  std::vector<std::int64_t> window_;
};

struct AffinePermutationHash {
  std::size_t operator()(const AffinePermutation& p) const noexcept;
};

AffinePermutation to_permutation(const Word& w);

/// Coxeter length via the affine inversion count
/// sum_{1<=i<j<=n+1} |floor((w(j) - w(i)) / (n+1))|.
std::size_t perm_length(const AffinePermutation& p);

struct EnumeratedElement {
  AffinePermutation perm;
  std::size_t length;
  /// A reduced word for perm (the shortlex-least one reached by the search).
  Word word;
};

inline constexpr std::size_t kDefaultEnumerationCap = 5'000'000;

/// Breadth-first enumeration of every element of length <= max_len.
/// Ordered by length, then lexicographically by window.
/// Throws ResourceLimit when more than `cap` elements would be produced.
std::vector<EnumeratedElement> bfs_enumerate(Rank rank, std::size_t max_len,
                                             std::size_t cap = kDefaultEnumerationCap);

}  // namespace coxa

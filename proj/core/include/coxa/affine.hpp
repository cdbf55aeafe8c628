#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "coxa/finite.hpp"
#include "coxa/word.hpp"

namespace coxa {

/// One factor h(j, i) a_{n+1} of an affine block.
struct BlockPair {
  int j;
  int i;

  friend bool operator==(const BlockPair&, const BlockPair&) = default;
  friend auto operator<=>(const BlockPair&, const BlockPair&) = default;
};

/// Whether `cur`, placed directly after `prev` in a block (so at position
/// >= 2), satisfies the pairwise inequalities:
///   (i_s = 0 and j_s = 1) or (1 <= i_s <= n-1 and 1 <= j_s <= n);
///   j_s <= j_{s-1} and i_s >= i_{s-1};
///   j_{s-1} > i_{s-1} + 1  implies  j_s < j_{s-1};
///   j_s > i_s + 1          implies  i_s > i_{s-1}.
bool compatible_pairs(Rank rank, BlockPair prev, BlockPair cur) noexcept;

/// All five pairwise inequalities for a whole family (empty is valid).
bool validate_block(std::span<const BlockPair> pairs, Rank rank) noexcept;

/// h(j_1, i_1) a_{n+1} ... h(j_m, i_m) a_{n+1}: the minimal length
/// representative of a right coset of W(A_n).
class AffineBlock {
 public:
  explicit AffineBlock(Rank rank) : rank_(rank) {}
  /// Throws DomainError unless the pairs satisfy the pairwise inequalities.
  AffineBlock(Rank rank, std::vector<BlockPair> pairs);

  Rank rank() const noexcept { return rank_; }
  const std::vector<BlockPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }
  /// m + sum (n + 1 - j_s + i_s).
  std::size_t length() const noexcept;

  friend bool operator==(const AffineBlock&, const AffineBlock&) = default;
  friend auto operator<=>(const AffineBlock& a, const AffineBlock& b) {
    return a.pairs_ <=> b.pairs_;
  }

 private:
  Rank rank_;
  std::vector<BlockPair> pairs_;
};

Word block_word(const AffineBlock& b);

/// s * w_a = w_a * sigma_v: the coset does not change.
struct Absorbed {
  int v;
  friend bool operator==(const Absorbed&, const Absorbed&) = default;
};

/// s * w_a is again minimal in its coset, with this block.
struct NewBlock {
  AffineBlock block;
  friend bool operator==(const NewBlock&, const NewBlock&) = default;
};

using LeftMulOutcome = std::variant<Absorbed, NewBlock>;

/// Left multiplication of a non-empty affine block by a generator, computed
/// locally on the pairs: for sigma_u the single-pair tables are threaded
/// through the block left to right, a pair that falls out of the pairwise
/// inequalities is repaired by one exchange rule; for a_{n+1} the first pair
/// is dropped, a trivial pair is prepended, or a braid with sigma_1/sigma_n
/// reduces to the sigma case on the remaining pairs.
LeftMulOutcome left_mul_block(Generator s, const AffineBlock& b);

/// Canonical form of an element of W(~A_n): affine block times finite part.
class Element {
 public:
  explicit Element(Rank rank) : block_(rank), finite_(rank) {}
  /// Throws DomainError on a rank mismatch.
  Element(AffineBlock block, FiniteElement finite);

  static Element identity(Rank rank) { return Element(rank); }

  Rank rank() const noexcept { return block_.rank(); }
  const AffineBlock& block() const noexcept { return block_; }
  const FiniteElement& finite() const noexcept { return finite_; }

  std::size_t length() const noexcept { return block_.length() + finite_.length(); }
  std::size_t affine_length() const noexcept { return block_.size(); }
  bool is_identity() const noexcept { return block_.empty() && finite_.is_identity(); }

  friend bool operator==(const Element&, const Element&) = default;
  /// Length first, then block pairs, then finite bricks.
  friend std::strong_ordering operator<=>(const Element& a, const Element& b);

 private:
  AffineBlock block_;
  FiniteElement finite_;
};

std::size_t length(const Element& e) noexcept;
std::size_t affine_length(const Element& e) noexcept;

Element left_mul(Generator s, const Element& e);
Element right_mul(const Element& e, Generator s);

/// Folds the letters right to left through left_mul from the identity.
/// Works for any word, reduced or not.
Element canonicalize(const Word& w);

/// block_word followed by finite_word; always reduced.
Word element_word(const Element& e);

Element mul(const Element& u, const Element& v);
Element inverse(const Element& u);

/// Generators s with l(s e) < l(e), resp. l(e s) < l(e), in generator order
/// (a_{n+1} first, then sigma_1..sigma_n).
std::vector<Generator> left_descents(const Element& e);
std::vector<Generator> right_descents(const Element& e);

// ---------------------------------------------------------------------------
// Exchange rules for h(r, u) a h(s, v) a: six guarded rewrites to
// h(.,.) a h(.,.) a sigma_t with t in {1, n}.

struct ExchangeResult {
  int rule;  // 1..6
  BlockPair first;
  BlockPair second;
  int trailing_sigma;
};

/// Whether the guard of `rule` holds for (left, right); ranges are not checked.
bool exchange_guard(int rule, BlockPair left, BlockPair right) noexcept;
/// The rewrite prescribed by `rule`, regardless of its guard.
ExchangeResult exchange_apply(Rank rank, int rule, BlockPair left, BlockPair right);
/// The first rule (in order 1..6) whose guard holds.
std::optional<ExchangeResult> exchange_rule(Rank rank, BlockPair left, BlockPair right);

}  // namespace coxa

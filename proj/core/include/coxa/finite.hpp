#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "coxa/word.hpp"

namespace coxa {

/// The ascending brick floor(lo, hi) = sigma_lo sigma_{lo+1} ... sigma_hi.
struct Brick {
  int lo;
  int hi;

  int size() const noexcept { return hi - lo + 1; }
  friend bool operator==(const Brick&, const Brick&) = default;
  friend auto operator<=>(const Brick&, const Brick&) = default;
};

/// An element of the finite group W(A_n) in its canonical form
/// floor(lo_1, hi_1) floor(lo_2, hi_2) ... with n >= hi_1 > hi_2 > ... >= 1
/// and hi_t >= lo_t >= 1. No bricks means the identity.
class FiniteElement {
 public:
  explicit FiniteElement(Rank rank) : rank_(rank) {}
  /// Throws DomainError unless the bricks are in canonical form.
  static FiniteElement from_bricks(Rank rank, std::vector<Brick> bricks);

  Rank rank() const noexcept { return rank_; }
  const std::vector<Brick>& bricks() const noexcept { return bricks_; }
  bool is_identity() const noexcept { return bricks_.empty(); }
  std::size_t length() const noexcept;

  /// Membership of sigma_k in the support; the canonical word is reduced,
  /// so reading it off the bricks is exact.
  bool supports(int k) const noexcept;

  friend bool operator==(const FiniteElement&, const FiniteElement&) = default;
  friend auto operator<=>(const FiniteElement& a, const FiniteElement& b) {
    return a.bricks_ <=> b.bricks_;
  }

 private:
  Rank rank_;
  std::vector<Brick> bricks_;
};

/// floor(lo, hi) as a word; empty when lo > hi (so floor(n+1, n) = 1).
Word floor_word(Rank rank, int lo, int hi);
/// ceil(hi, lo) = sigma_hi sigma_{hi-1} ... sigma_lo; empty when hi < lo
/// (so ceil(0, 1) = 1).
Word ceil_word(Rank rank, int hi, int lo);

/// Canonical form of a word in sigma-letters only. Throws DomainError on an
/// affine letter.
FiniteElement canonicalize_finite(const Word& w);
Word finite_word(const FiniteElement& x);

/// sigma_u * x, inserted directly into the brick form.
FiniteElement finite_left_mul(int u, const FiniteElement& x);
FiniteElement finite_mul(const FiniteElement& x, const FiniteElement& y);
FiniteElement finite_inverse(const FiniteElement& x);

/// Image of the position k under x viewed as a permutation of {1..n+1},
/// sigma_i acting as the transposition (i i+1).
int finite_apply(const FiniteElement& x, int k);

/// Every element of W(A_n), ordered by the brick sequence.
/// Intended for small n (there are (n+1)! of them).
std::vector<FiniteElement> all_finite_elements(Rank rank);

// ---------------------------------------------------------------------------
// The elements h(r, i) = floor(r, n) ceil(i, 1) and the extremal
// decomposition of W(A_n) over P = <sigma_2, ..., sigma_{n-1}>.

struct HPrefix {
  int r;  // 1 <= r <= n+1
  int i;  // 0 <= i <= n-1

  friend bool operator==(const HPrefix&, const HPrefix&) = default;
  friend auto operator<=>(const HPrefix&, const HPrefix&) = default;
};

bool valid_hprefix(Rank rank, HPrefix h) noexcept;
bool is_trivial(Rank rank, HPrefix h) noexcept;
/// Both sigma_1 and sigma_n occur: (r, i) = (1, 0), or i >= 1 and r <= n.
bool is_extremal(Rank rank, HPrefix h) noexcept;
bool is_extremal(const FiniteElement& x) noexcept;
std::size_t hprefix_length(Rank rank, HPrefix h) noexcept;

Word h_word(Rank rank, HPrefix h);
FiniteElement h_element(Rank rank, HPrefix h);

/// True when x lies in P, i.e. neither sigma_1 nor sigma_n is in its support.
bool in_parabolic_p(const FiniteElement& x) noexcept;

struct Peeled {
  HPrefix h;
  FiniteElement p;  // in P
};

/// The unique length-additive factorisation x = h(r, i) * p with p in P.
Peeled peel_h(const FiniteElement& x);

struct FloorProduct {
  HPrefix h;
  int tail_lo;  // the tail is floor(tail_lo, n-1), tail_lo >= 2
};

/// Rewrites h(j_prev, i_prev) floor(j, n) as h(j', i') floor(u, n-1) following
/// the three cases j_prev > j > i_prev+1; j_prev > i_prev+1 >= j > 1;
/// i_prev+1 >= j_prev >= j > 1. Throws DomainError outside those cases.
FloorProduct h_times_floor(Rank rank, int j_prev, int i_prev, int j);

// ---------------------------------------------------------------------------
// Two- and three-brick product identities, instantiated over their full
// parameter ranges for a given rank.

struct IdentityInstance {
  std::string family;      // e.g. "ceil*floor (1)"
  std::vector<int> params;
  Word lhs;
  Word rhs;
};

std::vector<IdentityInstance> brick_identity_instances(Rank rank);

struct IdentityCheck {
  IdentityInstance instance;
  bool equal_in_group;
  std::size_t lhs_letters;
  std::size_t rhs_letters;
};

struct BrickIdentityReport {
  std::size_t instances = 0;
  /// Instances whose two sides differ as group elements.
  std::vector<IdentityCheck> group_violations;
  /// Instances whose two sides have different letter counts.
  std::vector<IdentityCheck> letter_count_differences;
};

BrickIdentityReport brick_identities_check(Rank rank);

}  // namespace coxa

#include "coxa/finite.hpp"

#include <algorithm>
#include <functional>

#include "coxa/error.hpp"
#include "coxa/perm.hpp"

namespace coxa {

namespace {

// Level form: start[k] is the lo of the brick ending at k, or k+1 when that
// brick is empty. Index 0 is unused.
std::vector<int> to_levels(const FiniteElement& x) {
  const int n = x.rank().n();
  std::vector<int> start(n + 1);
  for (int k = 1; k <= n; ++k) start[k] = k + 1;
  for (const auto& b : x.bricks()) start[b.hi] = b.lo;
  return start;
}

FiniteElement from_levels(Rank rank, const std::vector<int>& start) {
  std::vector<Brick> bricks;
  for (int k = rank.n(); k >= 1; --k) {
    if (start[k] <= k) bricks.push_back({start[k], k});
  }
  return FiniteElement::from_bricks(rank, std::move(bricks));
}

void insert_left(std::vector<int>& start, int u, int top) {
  for (int k = top; k >= 1; --k) {
    const int r = start[k];
    if (u == r - 1) {
      start[k] = r - 1;
      return;
    }
    if (u == r) {
      start[k] = r + 1;
      return;
    }
    // sigma_u commutes past the brick (u < r-1) or is shifted down by one
    // through it (u > r).
    if (u > r) --u;
  }
  throw InternalError("finite_left_mul: generator fell through every level");
}

void check_same_rank(Rank a, Rank b) {
  if (a != b) {
    throw DomainError("rank mismatch: " + std::to_string(a.n()) + " vs " + std::to_string(b.n()));
  }
}

}  // namespace

FiniteElement FiniteElement::from_bricks(Rank rank, std::vector<Brick> bricks) {
  int prev_hi = rank.n() + 1;
  for (const auto& b : bricks) {
    if (b.hi >= prev_hi || b.hi < 1 || b.lo < 1 || b.lo > b.hi) {
      throw DomainError("bricks not in canonical form: need n >= hi_1 > hi_2 > ... >= 1 and "
                        "1 <= lo <= hi");
    }
    prev_hi = b.hi;
  }
  FiniteElement x(rank);
  x.bricks_ = std::move(bricks);
  return x;
}

std::size_t FiniteElement::length() const noexcept {
  std::size_t total = 0;
  for (const auto& b : bricks_) total += static_cast<std::size_t>(b.size());
  return total;
}

bool FiniteElement::supports(int k) const noexcept {
  return std::any_of(bricks_.begin(), bricks_.end(),
                     [k](const Brick& b) { return b.lo <= k && k <= b.hi; });
}

Word floor_word(Rank rank, int lo, int hi) {
  Word w(rank);
  for (int k = lo; k <= hi; ++k) w.push_back(Generator::sigma(k));
  return w;
}

Word ceil_word(Rank rank, int hi, int lo) {
  Word w(rank);
  for (int k = hi; k >= lo; --k) w.push_back(Generator::sigma(k));
  return w;
}

FiniteElement finite_left_mul(int u, const FiniteElement& x) {
  const int n = x.rank().n();
  if (u < 1 || u > n) throw DomainError("sigma index out of range for rank");
  auto start = to_levels(x);
  insert_left(start, u, n);
  return from_levels(x.rank(), start);
}

FiniteElement canonicalize_finite(const Word& w) {
  const int n = w.rank().n();
  std::vector<int> start(n + 1);
  for (int k = 1; k <= n; ++k) start[k] = k + 1;
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
    if (it->is_affine()) throw DomainError("canonicalize_finite: affine letter in word");
    insert_left(start, it->index(), n);
  }
  return from_levels(w.rank(), start);
}

Word finite_word(const FiniteElement& x) {
  Word w(x.rank());
  for (const auto& b : x.bricks()) w.append(floor_word(x.rank(), b.lo, b.hi));
  return w;
}

FiniteElement finite_mul(const FiniteElement& x, const FiniteElement& y) {
  check_same_rank(x.rank(), y.rank());
  auto start = to_levels(y);
  const auto word = finite_word(x);
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) {
    insert_left(start, it->index(), x.rank().n());
  }
  return from_levels(x.rank(), start);
}

FiniteElement finite_inverse(const FiniteElement& x) {
  return canonicalize_finite(finite_word(x).reversed());
}

int finite_apply(const FiniteElement& x, int k) {
  if (k < 1 || k > x.rank().period()) throw DomainError("finite_apply: position out of range");
  for (auto b = x.bricks().rbegin(); b != x.bricks().rend(); ++b) {
    for (int s = b->hi; s >= b->lo; --s) {
      if (k == s) {
        k = s + 1;
      } else if (k == s + 1) {
        k = s;
      }
    }
  }
  return k;
}

std::vector<FiniteElement> all_finite_elements(Rank rank) {
  const int n = rank.n();
  std::vector<FiniteElement> out;
  std::vector<int> start(n + 1);
  std::function<void(int)> rec = [&](int k) {
    if (k == 0) {
      out.push_back(from_levels(rank, start));
      return;
    }
    for (int r = 1; r <= k + 1; ++r) {
      start[k] = r;
      rec(k - 1);
    }
  };
  rec(n);
  std::sort(out.begin(), out.end());
  return out;
}

bool valid_hprefix(Rank rank, HPrefix h) noexcept {
  return h.r >= 1 && h.r <= rank.n() + 1 && h.i >= 0 && h.i <= rank.n() - 1;
}

bool is_trivial(Rank rank, HPrefix h) noexcept { return h.r == rank.n() + 1 && h.i == 0; }

bool is_extremal(Rank rank, HPrefix h) noexcept {
  return (h.r == 1 && h.i == 0) || (h.i >= 1 && h.r <= rank.n());
}

bool is_extremal(const FiniteElement& x) noexcept {
  return x.supports(1) && x.supports(x.rank().n());
}

std::size_t hprefix_length(Rank rank, HPrefix h) noexcept {
  return static_cast<std::size_t>(rank.n() + 1 - h.r + h.i);
}

Word h_word(Rank rank, HPrefix h) {
  if (!valid_hprefix(rank, h)) {
    throw DomainError("h(" + std::to_string(h.r) + "," + std::to_string(h.i) +
                      ") out of range");
  }
  return floor_word(rank, h.r, rank.n()) + ceil_word(rank, h.i, 1);
}

FiniteElement h_element(Rank rank, HPrefix h) { return canonicalize_finite(h_word(rank, h)); }

bool in_parabolic_p(const FiniteElement& x) noexcept {
  return !x.supports(1) && !x.supports(x.rank().n());
}

Peeled peel_h(const FiniteElement& x) {
  const Rank rank = x.rank();
  const int n = rank.n();
  int r = n + 1;
  std::vector<Brick> rest = x.bricks();
  if (!rest.empty() && rest.front().hi == n) {
    r = rest.front().lo;
    rest.erase(rest.begin());
  }
  auto tail = FiniteElement::from_bricks(rank, std::move(rest));
  const int i = finite_apply(tail, 1) - 1;
  auto p = finite_mul(canonicalize_finite(floor_word(rank, 1, i)), tail);
  if (!in_parabolic_p(p)) throw InternalError("peel_h: remainder escapes P");
  return {{r, i}, std::move(p)};
}

FloorProduct h_times_floor(Rank rank, int j_prev, int i_prev, int j) {
  if (!valid_hprefix(rank, {j_prev, i_prev}) || j <= 1 || j > rank.n()) {
    throw DomainError("h_times_floor: arguments out of range");
  }
  if (j_prev > j && j > i_prev + 1) return {{j, i_prev}, j_prev - 1};
  if (j_prev > i_prev + 1 && i_prev + 1 >= j) return {{j - 1, i_prev - 1}, j_prev - 1};
  if (i_prev + 1 >= j_prev && j_prev >= j) return {{j - 1, i_prev}, j_prev};
  throw DomainError("h_times_floor: (" + std::to_string(j_prev) + "," + std::to_string(i_prev) +
                    ") followed by floor(" + std::to_string(j) + ",n) matches no case");
}

std::vector<IdentityInstance> brick_identity_instances(Rank rank) {
  const int n = rank.n();
  std::vector<IdentityInstance> out;
  auto fl = [&](int lo, int hi) { return floor_word(rank, lo, hi); };
  auto ce = [&](int hi, int lo) { return ceil_word(rank, hi, lo); };
  auto add = [&](std::string family, std::vector<int> params, Word lhs, Word rhs) {
    out.push_back({std::move(family), std::move(params), std::move(lhs), std::move(rhs)});
  };

  for (int a = 1; a <= n; ++a)
    for (int b = 2; b <= a + 1; ++b)
      add("ceil*floor (1)", {a, b}, ce(a, 1) + fl(b, n), fl(b - 1, n) + ce(a - 1, 1));
  for (int a = 0; a <= n - 1; ++a)
    for (int b = a + 2; b <= n + 1; ++b)
      add("ceil*floor (2)", {a, b}, ce(a, 1) + fl(b, n), fl(b, n) + ce(a, 1));
  for (int a = 0; a <= n; ++a) add("ceil*floor (3)", {a}, ce(a, 1) + fl(1, n), fl(a + 1, n));
  for (int a = 2; a <= n + 1; ++a)
    for (int b = 1; b < a; ++b)
      add("floor*floor (4)", {a, b}, fl(a, n) + fl(b, n), fl(b, n) + fl(a - 1, n - 1));
  for (int a = 1; a <= n; ++a)
    for (int b = a; b <= n; ++b)
      add("floor*floor (5)", {a, b}, fl(a, n) + fl(b, n), fl(b + 1, n) + fl(a, n - 1));
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      add("ceil*ceil (6)", {a, b}, ce(a, 1) + ce(b, 1), ce(b, 1) + ce(a + 1, 2));
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= a; ++b)
      add("ceil*ceil (7)", {a, b}, ce(a, 1) + ce(b, 1), ce(b - 1, 1) + ce(a, 2));

  for (int a = 0; a <= n - 1; ++a) {
    for (int b = 1; b <= n + 1; ++b) {
      for (int c = 1; c <= n; ++c) {
        const Word lhs = fl(b, n) + ce(a, 1) + fl(c, n);
        const std::vector<int> params{a, b, c};
        if (c > a + 1 && b > c) {
          add("floor*ceil*floor (1)", params, lhs, fl(c, n) + ce(a, 1) + fl(b - 1, n - 1));
        } else if (c > a + 1 && b == c) {
          add("floor*ceil*floor (2)", params, lhs, fl(b + 1, n) + ce(a, 1) + fl(b, n - 1));
        } else if (1 < c && c <= a + 1 && a + 1 < b) {
          add("floor*ceil*floor (3)", params, lhs,
              fl(c - 1, n) + ce(a - 1, 1) + fl(b - 1, n - 1));
        } else if (1 < c && c <= b && b <= a + 1) {
          add("floor*ceil*floor (4)", params, lhs, fl(c - 1, n) + ce(a, 1) + fl(b, n - 1));
        }
      }
    }
  }
  return out;
}

BrickIdentityReport brick_identities_check(Rank rank) {
  BrickIdentityReport report;
  for (auto& inst : brick_identity_instances(rank)) {
    IdentityCheck check{inst, to_permutation(inst.lhs) == to_permutation(inst.rhs),
                        inst.lhs.size(), inst.rhs.size()};
    ++report.instances;
    if (!check.equal_in_group) report.group_violations.push_back(check);
    if (check.lhs_letters != check.rhs_letters) report.letter_count_differences.push_back(check);
  }
  return report;
}

}  // namespace coxa

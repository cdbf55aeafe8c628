#include "coxa/affine.hpp"
#include "coxa/error.hpp"

namespace coxa {

bool exchange_guard(int rule, BlockPair left, BlockPair right) noexcept {
  const int r = left.j, u = left.i, s = right.j, v = right.i;
  switch (rule) {
    case 1: return r > u + 1 && s >= r;
    case 2: return s > u + 1 && u + 1 >= v + 1;
    case 3: return v + 1 < s && s <= u + 1;
    case 4: return s <= v + 1 && v < u;
    case 5: return r <= u + 1 && u + 1 < s;
    case 6: return r < s && s <= u + 1;
    default: return false;
  }
}

ExchangeResult exchange_apply(Rank rank, int rule, BlockPair left, BlockPair right) {
  const int n = rank.n();
  const int r = left.j, u = left.i, s = right.j, v = right.i;
  switch (rule) {
    case 1: return {1, {s + 1, u}, {r, v}, 1};
    case 2: return {2, {r, v - 1}, {s, u}, n};
    case 3: return {3, {r, v - 1}, {s - 1, u - 1}, n};
    case 4: return {4, {r, v}, {s, u - 1}, n};
    case 5: return {5, {s + 1, u + 1}, {r + 1, v}, 1};
    case 6: return {6, {s, u}, {r + 1, v}, 1};
    default: throw DomainError("exchange rule must be in 1..6");
  }
}

std::optional<ExchangeResult> exchange_rule(Rank rank, BlockPair left, BlockPair right) {
  for (int rule = 1; rule <= 6; ++rule) {
    if (exchange_guard(rule, left, right)) return exchange_apply(rank, rule, left, right);
  }
  return std::nullopt;
}

}  // namespace coxa

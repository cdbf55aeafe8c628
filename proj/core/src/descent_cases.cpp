#include "coxa/descent_cases.hpp"

#include "coxa/error.hpp"

namespace coxa {

namespace {

// The four deficient cases for h(j_m, i_m) a h(j, i) a, where h(j_m, i_m)
// starts at `offset` in the examined word.
std::optional<DescentCase> deficient(int n, BlockPair last, HPrefix h, std::size_t offset) {
  const int jm = last.j, im = last.i, j = h.r, i = h.i;
  auto at = [&](int number, int pos) {
    return DescentCase{DescentCase::Kind::Deficient, number, offset + static_cast<std::size_t>(pos)};
  };
  if (j == n + 1 && i >= 1 && im >= i) return at(1, (n - jm + 1) + (im - i));
  if (i == 0 && 1 < j && j <= n && jm <= j && im < j - 1) return at(2, j - jm);
  if (i == 0 && 2 < j && j <= n && jm < j && im >= j - 1) return at(3, j - 1 - jm);
  if (j == 2 && i == 0 && jm == 1 && im == 1) return at(4, 0);
  return std::nullopt;
}

// The cases involving the last two pairs; h(j_{m-1}, i_{m-1}) starts at `offset`.
std::optional<DescentCase> listed(int n, BlockPair prev, BlockPair last, HPrefix h,
                                  std::size_t offset) {
  const int jp = prev.j, ip = prev.i, jm = last.j, im = last.i;
  if (h.r != n) return std::nullopt;
  const int i = h.i;
  const auto prev_len = static_cast<std::size_t>(n + 1 - jp + ip);
  auto at = [&](int number, std::size_t pos) {
    return DescentCase{DescentCase::Kind::Listed, number, offset + pos};
  };
  if (i == 1 && jm > 1 && 1 <= im && im < n - 1) return at(1, prev_len);
  if (1 <= i && i <= im && im < n - 1 && i < jm && ip >= i - 1) {
    return at(2, static_cast<std::size_t>((n - jp + 1) + (ip - (i - 1))));
  }
  if (1 <= i && i <= im && im < n - 1 && i >= jm && ip >= i) {
    return at(3, static_cast<std::size_t>((n - jp + 1) + (ip - i)));
  }
  return std::nullopt;
}

void require_nontrivial(Rank rank, HPrefix h) {
  if (!valid_hprefix(rank, h)) throw DomainError("h(j,i) out of range");
  if (is_trivial(rank, h)) throw DomainError("h(j,i) must not be the identity");
}

}  // namespace

Word deficiency_m1_word(Rank rank, BlockPair first, HPrefix second) {
  Word w = h_word(rank, {first.j, first.i});
  w.push_back(Generator::affine());
  w.append(h_word(rank, second));
  w.push_back(Generator::affine());
  return w;
}

std::optional<DescentCase> deficiency_m1(Rank rank, BlockPair first, HPrefix second) {
  require_nontrivial(rank, second);
  if (!valid_hprefix(rank, {first.j, first.i})) throw DomainError("first pair out of range");
  return deficient(rank.n(), first, second, 0);
}

Word descent_probe_word(const AffineBlock& block, HPrefix x_prefix) {
  Word w = block_word(block);
  w.append(h_word(block.rank(), x_prefix));
  w.push_back(Generator::affine());
  return w;
}

std::optional<DescentCase> affine_descent_sufficient(const AffineBlock& block, HPrefix x_prefix) {
  const Rank rank = block.rank();
  const int n = rank.n();
  require_nontrivial(rank, x_prefix);
  if (block.empty()) throw DomainError("affine descent cases need a non-empty block");
  const auto& pairs = block.pairs();
  const std::size_t m = pairs.size();

  std::vector<std::size_t> starts;
  std::size_t pos = 0;
  for (const auto& p : pairs) {
    starts.push_back(pos);
    pos += static_cast<std::size_t>(n + 1 - p.j + p.i) + 1;
  }
  if (auto hit = deficient(n, pairs[m - 1], x_prefix, starts[m - 1])) return hit;
  if (m >= 2) return listed(n, pairs[m - 2], pairs[m - 1], x_prefix, starts[m - 2]);
  return std::nullopt;
}

std::optional<DescentCase> affine_descent_cases_m2(const AffineBlock& block, HPrefix x_prefix) {
  if (block.size() != 2) throw DomainError("affine_descent_cases_m2 needs exactly two pairs");
  return affine_descent_sufficient(block, x_prefix);
}

}  // namespace coxa

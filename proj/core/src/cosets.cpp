#include "coxa/cosets.hpp"

#include <map>

#include "coxa/error.hpp"

namespace coxa {

namespace {

std::vector<BlockPair> first_pairs(Rank rank) {
  std::vector<BlockPair> out;
  for (int j = 1; j <= rank.n() + 1; ++j)
    for (int i = 0; i <= rank.n() - 1; ++i) out.push_back({j, i});
  return out;
}

std::vector<BlockPair> successors(Rank rank, BlockPair prev) {
  std::vector<BlockPair> out;
  for (int j = 1; j <= rank.n(); ++j)
    for (int i = 0; i <= rank.n() - 1; ++i)
      if (compatible_pairs(rank, prev, {j, i})) out.push_back({j, i});
  return out;
}

}  // namespace

BlockFamily enumerate_blocks(Rank rank, std::size_t m, std::size_t cap) {
  BlockFamily family{rank, m, {}};
  if (m == 0) {
    family.items.emplace_back(rank);
    return family;
  }
  std::map<BlockPair, std::vector<BlockPair>> next;
  std::vector<BlockPair> current;
  auto extend = [&](auto&& self, BlockPair last) -> void {
    if (current.size() == m) {
      if (family.items.size() >= cap) {
        throw ResourceLimit("enumerate_blocks: more than " + std::to_string(cap) + " blocks");
      }
      family.items.emplace_back(rank, current);
      return;
    }
    auto it = next.find(last);
    if (it == next.end()) it = next.emplace(last, successors(rank, last)).first;
    for (auto p : it->second) {
      current.push_back(p);
      self(self, p);
      current.pop_back();
    }
  };
  for (auto p : first_pairs(rank)) {
    current.assign(1, p);
    extend(extend, p);
  }
  return family;
}

std::size_t count_blocks(Rank rank, std::size_t m) {
  if (m == 0) return 1;
  std::map<BlockPair, std::size_t> ways;
  for (auto p : first_pairs(rank)) ways[p] = 1;
  for (std::size_t step = 1; step < m; ++step) {
    std::map<BlockPair, std::size_t> nxt;
    for (const auto& [p, c] : ways)
      for (auto q : successors(rank, p)) nxt[q] += c;
    ways = std::move(nxt);
  }
  std::size_t total = 0;
  for (const auto& [p, c] : ways) total += c;
  return total;
}

Element coset_rep(const Element& e) { return Element(e.block(), FiniteElement(e.rank())); }

}  // namespace coxa

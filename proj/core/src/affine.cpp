#include "coxa/affine.hpp"

#include <algorithm>
#include <string>

#include "coxa/error.hpp"

namespace coxa {

bool compatible_pairs(Rank rank, BlockPair prev, BlockPair cur) noexcept {
  const int n = rank.n();
  const bool range = (cur.i == 0 && cur.j == 1) || (cur.i >= 1 && cur.i <= n - 1 && cur.j >= 1 &&
                                                    cur.j <= n);
  if (!range) return false;
  if (cur.j > prev.j || cur.i < prev.i) return false;
  if (prev.j > prev.i + 1 && !(cur.j < prev.j)) return false;
  if (cur.j > cur.i + 1 && !(cur.i > prev.i)) return false;
  return true;
}

bool validate_block(std::span<const BlockPair> pairs, Rank rank) noexcept {
  if (pairs.empty()) return true;
  const auto& first = pairs.front();
  if (first.j < 1 || first.j > rank.n() + 1 || first.i < 0 || first.i > rank.n() - 1) {
    return false;
  }
  for (std::size_t s = 1; s < pairs.size(); ++s) {
    if (!compatible_pairs(rank, pairs[s - 1], pairs[s])) return false;
  }
  return true;
}

AffineBlock::AffineBlock(Rank rank, std::vector<BlockPair> pairs)
    : rank_(rank), pairs_(std::move(pairs)) {
  if (!validate_block(pairs_, rank_)) {
    std::string text;
    for (const auto& p : pairs_) {
      text += "(" + std::to_string(p.j) + "," + std::to_string(p.i) + ")";
    }
    throw DomainError("pairs " + text + " violate the pairwise inequalities at rank " +
                      std::to_string(rank_.n()));
  }
}

std::size_t AffineBlock::length() const noexcept {
  std::size_t total = pairs_.size();
  for (const auto& p : pairs_) total += static_cast<std::size_t>(rank_.n() + 1 - p.j + p.i);
  return total;
}

Word block_word(const AffineBlock& b) {
  Word w(b.rank());
  for (const auto& p : b.pairs()) {
    w.append(h_word(b.rank(), {p.j, p.i}));
    w.push_back(Generator::affine());
  }
  return w;
}

namespace {

using PairOutcome = std::variant<Absorbed, BlockPair>;

// sigma_u * h(j,i) a_{n+1}, for a single pair.
PairOutcome pair_table(int n, int u, BlockPair p) {
  const int j = p.j, i = p.i;
  if (j > i + 1) {
    if (u < i) return Absorbed{u + 1};
    if (u == i) return BlockPair{j, i - 1};
    if (u == i + 1 && u < j - 1) return BlockPair{j, i + 1};
    if (i + 1 < u && u < j - 1) return Absorbed{u};
    if (u == j - 1 && u >= i + 1) return BlockPair{j - 1, i};
    if (u == j) return BlockPair{j + 1, i};
    if (j < u && u <= n) return Absorbed{u - 1};
  } else {
    if (u < j - 1) return Absorbed{u + 1};
    if (u == j - 1) return BlockPair{j - 1, i};
    if (u == j) return BlockPair{j + 1, i};
    if (j < u && u < i + 1) return Absorbed{u};
    if (u == i + 1 && u > j) return BlockPair{j, i - 1};
    if (u == i + 2) return BlockPair{j, i + 1};
    if (u > i + 2 && u <= n) return Absorbed{u - 1};
  }
  throw InternalError("no table row for sigma_" + std::to_string(u) + " on h(" +
                      std::to_string(j) + "," + std::to_string(i) + ")");
}

LeftMulOutcome left_mul_sigma(Rank rank, int u, const std::vector<BlockPair>& pairs) {
  std::vector<BlockPair> out = pairs;
  int carry = u;
  for (std::size_t k = 0; k < out.size(); ++k) {
    auto step = pair_table(rank.n(), carry, out[k]);
    if (const auto* ab = std::get_if<Absorbed>(&step)) {
      carry = ab->v;
      continue;
    }
    out[k] = std::get<BlockPair>(step);
    if (k + 1 == out.size() || compatible_pairs(rank, out[k], out[k + 1])) {
      return NewBlock{AffineBlock(rank, std::move(out))};
    }
    auto ex = exchange_rule(rank, out[k], out[k + 1]);
    if (!ex || ex->first != pairs[k] || ex->second != pairs[k + 1]) {
      throw InternalError("exchange repair did not restore the block");
    }
    out[k] = pairs[k];
    carry = ex->trailing_sigma;
    ++k;
  }
  return Absorbed{carry};
}

}  // namespace

LeftMulOutcome left_mul_block(Generator s, const AffineBlock& b) {
  if (b.empty()) throw DomainError("left_mul_block needs a non-empty block");
  if (!s.valid_for(b.rank())) throw DomainError("generator out of range for rank");
  const Rank rank = b.rank();
  const int n = rank.n();
  const auto& pairs = b.pairs();
  if (!s.is_affine()) return left_mul_sigma(rank, s.index(), pairs);

  const BlockPair first = pairs.front();
  const HPrefix h{first.j, first.i};
  if (is_trivial(rank, h)) {
    return NewBlock{AffineBlock(rank, std::vector<BlockPair>(pairs.begin() + 1, pairs.end()))};
  }
  if (is_extremal(rank, h)) {
    std::vector<BlockPair> out{{n + 1, 0}};
    out.insert(out.end(), pairs.begin(), pairs.end());
    return NewBlock{AffineBlock(rank, std::move(out))};
  }
  // a h a = h a sigma_t, with t = n for floor(j,n) and t = 1 for ceil(i,1).
  const int t = first.i == 0 ? n : 1;
  std::vector<BlockPair> rest(pairs.begin() + 1, pairs.end());
  if (rest.empty()) return Absorbed{t};
  auto inner = left_mul_sigma(rank, t, rest);
  if (const auto* ab = std::get_if<Absorbed>(&inner)) return *ab;
  std::vector<BlockPair> out{first};
  const auto& tail = std::get<NewBlock>(inner).block.pairs();
  out.insert(out.end(), tail.begin(), tail.end());
  if (!validate_block(out, rank)) {
    throw InternalError("braid through the first pair left the pairwise inequalities");
  }
  return NewBlock{AffineBlock(rank, std::move(out))};
}

Element::Element(AffineBlock block, FiniteElement finite)
    : block_(std::move(block)), finite_(std::move(finite)) {
  if (block_.rank() != finite_.rank()) throw DomainError("block and finite part ranks differ");
}

std::strong_ordering operator<=>(const Element& a, const Element& b) {
  if (auto c = a.length() <=> b.length(); c != 0) return c;
  if (auto c = a.block_.pairs() <=> b.block_.pairs(); c != 0) return c;
  return a.finite_.bricks() <=> b.finite_.bricks();
}

std::size_t length(const Element& e) noexcept { return e.length(); }
std::size_t affine_length(const Element& e) noexcept { return e.affine_length(); }

Element left_mul(Generator s, const Element& e) {
  const Rank rank = e.rank();
  if (!s.valid_for(rank)) throw DomainError("generator out of range for rank");
  if (e.block().empty()) {
    if (s.is_affine()) return Element(AffineBlock(rank, {{rank.n() + 1, 0}}), e.finite());
    return Element(e.block(), finite_left_mul(s.index(), e.finite()));
  }
  auto outcome = left_mul_block(s, e.block());
  if (const auto* ab = std::get_if<Absorbed>(&outcome)) {
    return Element(e.block(), finite_left_mul(ab->v, e.finite()));
  }
  return Element(std::move(std::get<NewBlock>(outcome).block), e.finite());
}

Element canonicalize(const Word& w) {
  Element e(w.rank());
  for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) e = left_mul(*it, e);
  return e;
}

Word element_word(const Element& e) { return block_word(e.block()) + finite_word(e.finite()); }

Element mul(const Element& u, const Element& v) {
  if (u.rank() != v.rank()) throw DomainError("rank mismatch in mul");
  Element e = v;
  const auto word = element_word(u);
  for (auto it = word.letters().rbegin(); it != word.letters().rend(); ++it) e = left_mul(*it, e);
  return e;
}

Element right_mul(const Element& e, Generator s) {
  if (!s.valid_for(e.rank())) throw DomainError("generator out of range for rank");
  if (!s.is_affine()) {
    return Element(e.block(), finite_mul(e.finite(), canonicalize_finite(Word(e.rank(), {s}))));
  }
  return mul(e, canonicalize(Word(e.rank(), {s})));
}

Element inverse(const Element& u) { return canonicalize(element_word(u).reversed()); }

std::vector<Generator> left_descents(const Element& e) {
  std::vector<Generator> out;
  std::vector<Generator> gens{Generator::affine()};
  for (int k = 1; k <= e.rank().n(); ++k) gens.push_back(Generator::sigma(k));
  for (auto g : gens) {
    if (left_mul(g, e).length() < e.length()) out.push_back(g);
  }
  return out;
}

std::vector<Generator> right_descents(const Element& e) {
  std::vector<Generator> out;
  std::vector<Generator> gens{Generator::affine()};
  for (int k = 1; k <= e.rank().n(); ++k) gens.push_back(Generator::sigma(k));
  for (auto g : gens) {
    if (right_mul(e, g).length() < e.length()) out.push_back(g);
  }
  return out;
}

}  // namespace coxa

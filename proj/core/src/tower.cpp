#include "coxa/tower.hpp"

#include "coxa/error.hpp"

namespace coxa {

namespace {

// max{k : n - k - i_k > 0}, 1-based; 0 when no k qualifies.
int break_index(int n, const std::vector<BlockPair>& pairs) {
  int s = 0;
  for (std::size_t k = 1; k <= pairs.size(); ++k) {
    if (n - static_cast<int>(k) - pairs[k - 1].i > 0) s = static_cast<int>(k);
  }
  return s;
}

}  // namespace

EmbeddingWitness embedding_witness(const AffineBlock& block) {
  const int n = block.rank().n() + 1;
  const int s = break_index(n, block.pairs());
  if (s == 0) throw InternalError("embedding_witness: no pair satisfies n - k - i_k > 0");
  std::vector<bool> shifted(block.size());
  for (std::size_t k = 1; k <= block.size(); ++k) shifted[k - 1] = static_cast<int>(k) > s;
  return {s, n - s + 1, std::move(shifted)};
}

Element embed(const Element& e) {
  const Rank target(e.rank().n() + 1);
  const int n = target.n();
  if (e.block().empty()) return Element(AffineBlock(target), FiniteElement::from_bricks(target, e.finite().bricks()));

  const auto w = embedding_witness(e.block());
  std::vector<BlockPair> pairs = e.block().pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    if (w.shifted[k]) ++pairs[k].i;
  }
  std::vector<Brick> bricks{{w.t, n}};
  bricks.insert(bricks.end(), e.finite().bricks().begin(), e.finite().bricks().end());
  return Element(AffineBlock(target, std::move(pairs)),
                 FiniteElement::from_bricks(target, std::move(bricks)));
}

Word substitute_tower_word(const Word& w) {
  const Rank target(w.rank().n() + 1);
  const int n = target.n();
  Word out(target);
  for (auto g : w.letters()) {
    if (g.is_affine()) {
      out.push_back(Generator::sigma(n));
      out.push_back(Generator::affine());
      out.push_back(Generator::sigma(n));
    } else {
      out.push_back(g);
    }
  }
  return out;
}

bool is_in_image(const Element& e) {
  const int n = e.rank().n();
  if (n < 3) throw DomainError("the tower image is only defined from rank 3 (source rank >= 2)");
  const auto& pairs = e.block().pairs();
  const auto& bricks = e.finite().bricks();
  if (pairs.empty()) return !e.finite().supports(n);

  if (!(pairs[0].j <= n && pairs[0].i < n - 1)) return false;
  const int s = break_index(n, pairs);
  if (s == 0) return false;
  if (s < static_cast<int>(pairs.size()) && !(n - (s + 1) - pairs[s].i < 0)) return false;
  return !bricks.empty() && bricks.front() == Brick{n - s + 1, n};
}

std::optional<Element> preimage(const Element& e) {
  if (!is_in_image(e)) return std::nullopt;
  const Rank source(e.rank().n() - 1);
  if (e.block().empty()) {
    return Element(AffineBlock(source), FiniteElement::from_bricks(source, e.finite().bricks()));
  }
  const int s = break_index(e.rank().n(), e.block().pairs());
  std::vector<BlockPair> pairs = e.block().pairs();
  for (std::size_t k = static_cast<std::size_t>(s); k < pairs.size(); ++k) --pairs[k].i;
  std::vector<Brick> bricks(e.finite().bricks().begin() + 1, e.finite().bricks().end());
  try {
    return Element(AffineBlock(source, std::move(pairs)),
                   FiniteElement::from_bricks(source, std::move(bricks)));
  } catch (const DomainError& err) {
    throw InternalError(std::string("preimage: image conditions hold but ") + err.what());
  }
}

}  // namespace coxa

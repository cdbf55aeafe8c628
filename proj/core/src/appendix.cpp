#include "coxa/appendix.hpp"

#include <optional>
#include <set>

#include "coxa/error.hpp"

namespace coxa {

namespace {

struct Prefix {
  std::string word;
  std::optional<BlockPair> pair;
};

class Collector {
 public:
  explicit Collector(Rank rank) : rank_(rank) {}

  void add(const std::string& family, const Prefix& alpha, std::vector<int> exponents,
           const std::vector<BlockPair>& core_pairs) {
    std::vector<BlockPair> pairs;
    if (alpha.pair) pairs.push_back(*alpha.pair);
    for (std::size_t k = 0; k < core_pairs.size(); ++k) {
      pairs.insert(pairs.end(), static_cast<std::size_t>(exponents[k]), core_pairs[k]);
    }
    if (pairs.empty()) return;
    AffineBlock block(rank_, pairs);
    if (!seen_.insert(pairs).second) return;
    out_.push_back({family, alpha.word, std::move(exponents), std::move(block)});
  }

  std::vector<AppendixEntry> take() { return std::move(out_); }

 private:
  Rank rank_;
  std::set<std::vector<BlockPair>> seen_;
  std::vector<AppendixEntry> out_;
};

const Prefix kOne{"1", std::nullopt};

std::vector<AppendixEntry> rank2(int cap) {
  Collector c(Rank(2));
  const Prefix a3{"a", BlockPair{3, 0}};
  const Prefix s1a3{"s1 a", BlockPair{3, 1}};
  const Prefix s2a3{"s2 a", BlockPair{2, 0}};
  for (int h = 0; h <= cap; ++h) {
    for (int k = 0; k <= cap; ++k) {
      const std::vector<BlockPair> core{{2, 1}, {1, 1}};
      if (h + k != 0) c.add("I", kOne, {h, k}, core);
      c.add("I", a3, {h, k}, core);
      c.add("I", s1a3, {h, k}, core);
      if (h == 0) c.add("I", s2a3, {h, k}, core);
    }
  }
  for (int h = 0; h <= cap; ++h) {
    for (int k = 0; k <= cap; ++k) {
      if (h + k == 0) continue;
      const std::vector<BlockPair> core{{1, 0}, {1, 1}};
      c.add("II", kOne, {h, k}, core);
      c.add("II", a3, {h, k}, core);
      c.add("II", s2a3, {h, k}, core);
      if (h == 0) c.add("II", s1a3, {h, k}, core);
    }
  }
  return c.take();
}

std::vector<AppendixEntry> rank3(int cap) {
  Collector c(Rank(3));
  const Prefix a4{"a", BlockPair{4, 0}};
  const Prefix s1a4{"s1 a", BlockPair{4, 1}};
  const Prefix s3a4{"s3 a", BlockPair{3, 0}};
  const Prefix s2s3a4{"s2 s3 a", BlockPair{2, 0}};
  const Prefix s2s1a4{"s2 s1 a", BlockPair{4, 2}};

  for (int eps = 0; eps <= 1; ++eps) {
    for (int f = 0; f <= cap; ++f) {
      for (int h = 0; h <= cap; ++h) {
        for (int k = 0; k <= cap; ++k) {
          std::vector<Prefix> alphas{kOne, a4};
          if (eps == 0 && f > 0) {
            alphas.insert(alphas.end(), {s1a4, s3a4});
          } else if (eps == 0 && f == 0 && h > 0) {
            alphas.insert(alphas.end(), {s1a4, s3a4, s2s3a4});
          } else if (eps == 0 && f == 0 && h == 0) {
            alphas.insert(alphas.end(), {s1a4, s3a4, s2s3a4, s2s1a4});
          }
          for (const auto& alpha : alphas) {
            c.add("A", alpha, {eps, f, h, k}, {{3, 1}, {2, 1}, {1, 1}, {1, 2}});
          }
        }
      }
    }
  }
  for (int eps = 0; eps <= 1; ++eps) {
    for (int f = 0; f <= cap; ++f) {
      for (int h = 1; h <= cap; ++h) {
        for (int k = 0; k <= cap; ++k) {
          std::vector<Prefix> alphas{kOne, a4};
          if (eps == 0 && f > 0) {
            alphas.insert(alphas.end(), {s1a4, s3a4});
          } else if (eps == 0 && f == 0) {
            alphas.insert(alphas.end(), {s1a4, s3a4, s2s1a4});
          }
          for (const auto& alpha : alphas) {
            c.add("B", alpha, {eps, f, h, k}, {{3, 1}, {2, 1}, {2, 2}, {1, 2}});
          }
        }
      }
    }
  }
  for (int f = 1; f <= cap; ++f) {
    for (int h = 0; h <= cap; ++h) {
      for (int k = 0; k <= cap; ++k) {
        for (const auto& alpha : {kOne, a4, s3a4, s2s3a4}) {
          c.add("C", alpha, {f, h, k}, {{1, 0}, {1, 1}, {1, 2}});
        }
        for (const auto& alpha : {kOne, a4, s1a4, s2s1a4}) {
          c.add("D", alpha, {f, h, k}, {{3, 2}, {2, 2}, {1, 2}});
        }
      }
    }
  }
  return c.take();
}

}  // namespace

std::vector<AppendixEntry> appendix_blocks(Rank rank, int max_core) {
  if (max_core < 0) throw DomainError("max_core must be non-negative");
  if (rank.n() == 2) return rank2(max_core);
  if (rank.n() == 3) return rank3(max_core);
  throw DomainError("appendix listings exist for ranks 2 and 3 only");
}

}  // namespace coxa

#include "coxa/perm.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "coxa/error.hpp"

namespace coxa {

namespace {

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Residue of v in 1..N.
std::int64_t residue(std::int64_t v, std::int64_t period) {
  return v - period * floor_div(v - 1, period);
}

}  // namespace

AffinePermutation AffinePermutation::identity(Rank rank) {
  std::vector<std::int64_t> w(rank.period());
  std::iota(w.begin(), w.end(), 1);
  return AffinePermutation(rank, std::move(w));
}

AffinePermutation AffinePermutation::from_window(Rank rank, std::vector<std::int64_t> window) {
  const std::int64_t period = rank.period();
  if (static_cast<std::int64_t>(window.size()) != period) {
    throw DomainError("window must have n+1 entries");
  }
  std::vector<bool> hit(period, false);
  std::int64_t drift = 0;
  for (std::int64_t i = 0; i < period; ++i) {
    auto r = residue(window[i], period) - 1;
    if (hit[r]) throw DomainError("window values must be distinct modulo n+1");
    hit[r] = true;
    drift += window[i] - (i + 1);
  }
  if (drift != 0) throw DomainError("window entries must satisfy sum(w(i) - i) = 0");
  return AffinePermutation(rank, std::move(window));
}

AffinePermutation AffinePermutation::generator(Rank rank, Generator g) {
  return identity(rank).times(g);
}

std::int64_t AffinePermutation::operator()(std::int64_t position) const {
  const std::int64_t period = rank_.period();
  const std::int64_t shift = floor_div(position - 1, period);
  return window_[position - 1 - shift * period] + shift * period;
}

AffinePermutation AffinePermutation::operator*(const AffinePermutation& other) const {
  if (other.rank_ != rank_) throw DomainError("rank mismatch in permutation product");
  std::vector<std::int64_t> w(window_.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = (*this)(other.window_[i]);
  return AffinePermutation(rank_, std::move(w));
}

AffinePermutation AffinePermutation::inverse() const {
  const std::int64_t period = rank_.period();
  std::vector<std::int64_t> w(window_.size());
  for (std::int64_t i = 1; i <= period; ++i) {
    const std::int64_t v = window_[i - 1];
    const std::int64_t shift = floor_div(v - 1, period);
    w[v - shift * period - 1] = i - shift * period;
  }
  return AffinePermutation(rank_, std::move(w));
}

AffinePermutation AffinePermutation::times(Generator g) const {
  if (!g.valid_for(rank_)) throw DomainError("generator out of range for rank");
  auto w = window_;
  const std::int64_t period = rank_.period();
  if (g.is_affine()) {
    const std::int64_t first = w.front();
    w.front() = w.back() - period;
    w.back() = first + period;
  } else {
    std::swap(w[g.index() - 1], w[g.index()]);
  }
  return AffinePermutation(rank_, std::move(w));
}

AffinePermutation AffinePermutation::left_times(Generator g) const {
  if (!g.valid_for(rank_)) throw DomainError("generator out of range for rank");
  const std::int64_t period = rank_.period();
  // sigma_i swaps the values i and i+1 (mod N); a swaps 0 and 1 (mod N).
  const std::int64_t lo = g.is_affine() ? period : g.index();
  const std::int64_t hi = g.is_affine() ? 1 : g.index() + 1;
  auto w = window_;
  for (auto& v : w) {
    const auto r = residue(v, period);
    if (r == lo) {
      v += 1;
    } else if (r == hi) {
      v -= 1;
    }
  }
  return AffinePermutation(rank_, std::move(w));
}

std::size_t AffinePermutationHash::operator()(const AffinePermutation& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ull;
  for (auto v : p.window()) {
    h ^= static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

AffinePermutation to_permutation(const Word& w) {
  auto p = AffinePermutation::identity(w.rank());
  for (auto g : w.letters()) p = p.times(g);
  return p;
}

std::size_t perm_length(const AffinePermutation& p) {
  const auto& w = p.window();
  const std::int64_t period = p.rank().period();
  std::int64_t total = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t j = i + 1; j < w.size(); ++j) {
      total += std::abs(floor_div(w[j] - w[i], period));
    }
  }
  return static_cast<std::size_t>(total);
}

std::vector<EnumeratedElement> bfs_enumerate(Rank rank, std::size_t max_len, std::size_t cap) {
  std::vector<EnumeratedElement> out;
  std::unordered_set<AffinePermutation, AffinePermutationHash> seen;

  // The current level is kept sorted by word so that the first discovery of
  // an element is through its lexicographically least reduced word.
  std::vector<EnumeratedElement> level;
  level.push_back({AffinePermutation::identity(rank), 0, Word(rank)});
  seen.insert(level.front().perm);

  const auto gens = [&] {
    auto g = generators(rank);
    std::sort(g.begin(), g.end());
    return g;
  }();

  for (std::size_t len = 0;; ++len) {
    if (out.size() + level.size() > cap) {
      throw ResourceLimit("bfs_enumerate: more than " + std::to_string(cap) + " elements");
    }
    std::vector<EnumeratedElement> next;
    if (len < max_len) {
      for (const auto& e : level) {
        for (auto g : gens) {
          auto p = e.perm.times(g);
          if (seen.contains(p)) continue;
          seen.insert(p);
          Word word = e.word;
          word.push_back(g);
          next.push_back({std::move(p), len + 1, std::move(word)});
        }
      }
    }
    std::sort(level.begin(), level.end(),
              [](const auto& a, const auto& b) { return a.perm < b.perm; });
    for (auto& e : level) out.push_back(std::move(e));
    if (next.empty()) break;
    level = std::move(next);
  }
  return out;
}

}  // namespace coxa

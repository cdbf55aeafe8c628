#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coxa {

/// Number n of finite generators sigma_1..sigma_n; the affine group
/// carries one more generator a_{n+1}. Only n >= 2 is supported.
class Rank {
 public:
  explicit Rank(int n);

  int n() const noexcept { return n_; }
  /// n + 1: size of the generating set, also the period of affine permutations.
  int period() const noexcept { return n_ + 1; }

  friend bool operator==(Rank, Rank) = default;
  friend auto operator<=>(Rank, Rank) = default;

 private:
  int n_;
};

/// A simple reflection: sigma_i (1 <= i <= n) or the affine generator a_{n+1}.
/// Encoded as 0 for the affine generator and i for sigma_i, which makes the
/// diagram rotation a_{n+1} -> sigma_1 -> ... -> sigma_n -> a_{n+1} a
/// shift modulo n + 1.
class Generator {
 public:
  static Generator sigma(int i);
  static Generator affine() noexcept { return Generator(0); }
  static Generator from_code(int code) { return code == 0 ? affine() : sigma(code); }

  bool is_affine() const noexcept { return code_ == 0; }
  /// Index i of sigma_i. Only meaningful when !is_affine().
  int index() const noexcept { return code_; }
  int code() const noexcept { return code_; }

  bool valid_for(Rank rank) const noexcept { return code_ >= 0 && code_ <= rank.n(); }

  friend bool operator==(Generator, Generator) = default;
  friend auto operator<=>(Generator, Generator) = default;

 private:
  explicit Generator(int code) noexcept : code_(code) {}
  int code_;
};

/// All generators of the given rank: sigma_1, ..., sigma_n, a_{n+1}.
std::vector<Generator> generators(Rank rank);

/// A finite sequence of generators over a fixed rank. Words are plain
/// syntax: nothing is simplified on construction or concatenation.
class Word {
 public:
  explicit Word(Rank rank) : rank_(rank) {}
  Word(Rank rank, std::vector<Generator> letters);

  Rank rank() const noexcept { return rank_; }
  const std::vector<Generator>& letters() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Generator operator[](std::size_t k) const { return letters_[k]; }

  void push_back(Generator g);
  Word& append(const Word& other);
  Word reversed() const;
  Word without(std::size_t first, std::size_t second) const;
  std::size_t count_affine() const noexcept;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  Rank rank_;
  std::vector<Generator> letters_;
};

Word operator+(Word lhs, const Word& rhs);

/// Tokens `s<k>` for sigma_k and `a` for a_{n+1}, separated by whitespace
/// and/or `*`. Empty text is the empty word.
Word parse_word(std::string_view text, Rank rank);
std::string format_word(const Word& w);
std::string format_generator(Generator g);

/// Applies the diagram automorphism a_{n+1} -> sigma_1 -> ... -> sigma_n ->
/// a_{n+1} letter-wise `steps` times; negative steps rotate backwards.
Word rotate(const Word& w, int steps);

/// Bourbaki criterion: the reflections t_k = (s_1..s_{k-1}) s_k (s_1..s_{k-1})^{-1}
/// are pairwise distinct. Reflections are compared as affine permutations.
bool is_reduced(const Word& w);

/// For a word whose proper prefix is reduced, returns the 0-based position
/// j < size()-1 of the hat partner of the last letter, or nothing when the
/// whole word is reduced. Throws DomainError if the prefix is not reduced.
std::optional<std::size_t> hat_partner(const Word& w);

}  // namespace coxa

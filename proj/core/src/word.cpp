#include "coxa/word.hpp"

#include <cctype>
#include <charconv>
#include <set>
#include <sstream>

#include "coxa/error.hpp"
#include "coxa/perm.hpp"

namespace coxa {

Rank::Rank(int n) : n_(n) {
  if (n < 2) {
    throw DomainError("rank must be at least 2, got " + std::to_string(n));
  }
}

Generator Generator::sigma(int i) {
  if (i < 1) {
    throw DomainError("sigma index must be >= 1, got " + std::to_string(i));
  }
  return Generator(i);
}

std::vector<Generator> generators(Rank rank) {
  std::vector<Generator> out;
  out.reserve(rank.period());
  for (int i = 1; i <= rank.n(); ++i) out.push_back(Generator::sigma(i));
  out.push_back(Generator::affine());
  return out;
}

namespace {

void check_letter(Rank rank, Generator g) {
  if (!g.valid_for(rank)) {
    throw DomainError("generator s" + std::to_string(g.index()) + " out of range for rank " +
                      std::to_string(rank.n()));
  }
}

}  // namespace

Word::Word(Rank rank, std::vector<Generator> letters) : rank_(rank), letters_(std::move(letters)) {
  for (auto g : letters_) check_letter(rank_, g);
}

void Word::push_back(Generator g) {
  check_letter(rank_, g);
  letters_.push_back(g);
}

Word& Word::append(const Word& other) {
  if (other.rank_ != rank_) {
    throw DomainError("cannot concatenate words of ranks " + std::to_string(rank_.n()) +
                      " and " + std::to_string(other.rank_.n()));
  }
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

Word Word::reversed() const {
  return Word(rank_, std::vector<Generator>(letters_.rbegin(), letters_.rend()));
}

Word Word::without(std::size_t first, std::size_t second) const {
  std::vector<Generator> out;
  out.reserve(letters_.size());
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k != first && k != second) out.push_back(letters_[k]);
  }
  return Word(rank_, std::move(out));
}

std::size_t Word::count_affine() const noexcept {
  std::size_t c = 0;
  for (auto g : letters_) c += g.is_affine() ? 1 : 0;
  return c;
}

Word operator+(Word lhs, const Word& rhs) {
  lhs.append(rhs);
  return lhs;
}

Word parse_word(std::string_view text, Rank rank) {
  Word w(rank);
  std::size_t pos = 0;
  auto is_sep = [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '*'; };
  while (pos < text.size()) {
    if (is_sep(text[pos])) {
      ++pos;
      continue;
    }
    std::size_t end = pos;
    while (end < text.size() && !is_sep(text[end])) ++end;
    std::string_view tok = text.substr(pos, end - pos);
    pos = end;

    if (tok == "a") {
      w.push_back(Generator::affine());
      continue;
    }
    if (tok.size() < 2 || tok[0] != 's') {
      throw DomainError("malformed token '" + std::string(tok) + "' (expected s<k> or a)");
    }
    int k = 0;
    auto digits = tok.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) {
      throw DomainError("malformed token '" + std::string(tok) + "' (expected s<k> or a)");
    }
    if (k < 1 || k > rank.n()) {
      throw DomainError("index out of range in token '" + std::string(tok) + "' for rank " +
                        std::to_string(rank.n()));
    }
    w.push_back(Generator::sigma(k));
  }
  return w;
}

std::string format_generator(Generator g) {
  return g.is_affine() ? std::string("a") : "s" + std::to_string(g.index());
}

std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k) out += ' ';
    out += format_generator(w[k]);
  }
  return out;
}

Word rotate(const Word& w, int steps) {
  const int period = w.rank().period();
  const int shift = ((steps % period) + period) % period;
  std::vector<Generator> out;
  out.reserve(w.size());
  for (auto g : w.letters()) out.push_back(Generator::from_code((g.code() + shift) % period));
  return Word(w.rank(), std::move(out));
}

namespace {

// The reflections t_1, ..., t_r of a word, as affine permutations.
std::vector<AffinePermutation> reflection_sequence(const Word& w) {
  std::vector<AffinePermutation> out;
  out.reserve(w.size());
  auto prefix = AffinePermutation::identity(w.rank());
  for (auto g : w.letters()) {
    out.push_back(prefix.times(g) * prefix.inverse());
    prefix = prefix.times(g);
  }
  return out;
}

}  // namespace

bool is_reduced(const Word& w) {
  auto refl = reflection_sequence(w);
  std::set<AffinePermutation> seen;
  for (auto& t : refl) {
    if (!seen.insert(std::move(t)).second) return false;
  }
  return true;
}

std::optional<std::size_t> hat_partner(const Word& w) {
  if (w.empty()) return std::nullopt;
  auto refl = reflection_sequence(w);
  std::set<AffinePermutation> seen;
  for (std::size_t k = 0; k + 1 < refl.size(); ++k) {
    if (!seen.insert(refl[k]).second) {
      throw DomainError("hat_partner: the proper prefix is not reduced");
    }
  }
  const auto& last = refl.back();
  for (std::size_t k = 0; k + 1 < refl.size(); ++k) {
    if (refl[k] == last) return k;
  }
  return std::nullopt;
}

}  // namespace coxa

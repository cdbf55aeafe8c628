#include "coxa/selfcheck.hpp"

#include <cstdlib>

#include "coxa/affine.hpp"
#include "coxa/finite.hpp"
#include "coxa/perm.hpp"

namespace coxa {

namespace {

// Order of the product of two generators in the Coxeter diagram of type ~A_n.
int coxeter_order(Rank rank, Generator s, Generator t) {
  if (s == t) return 1;
  const int d = std::abs(s.code() - t.code());
  return (d == 1 || d == rank.n()) ? 3 : 2;
}

CheckResult coxeter_relations(Rank rank) {
  const auto id = AffinePermutation::identity(rank);
  for (auto s : generators(rank)) {
    for (auto t : generators(rank)) {
      const int m = coxeter_order(rank, s, t);
      const auto st = AffinePermutation::generator(rank, s) * AffinePermutation::generator(rank, t);
      auto p = id;
      for (int k = 1; k <= m; ++k) {
        p = p * st;
        if (k < m && p == id) {
          return {"coxeter relations n=" + std::to_string(rank.n()), false,
                  format_generator(s) + format_generator(t) + " has order below " +
                      std::to_string(m)};
        }
      }
      if (p != id) {
        return {"coxeter relations n=" + std::to_string(rank.n()), false,
                "(" + format_generator(s) + " " + format_generator(t) + ")^" +
                    std::to_string(m) + " is not the identity"};
      }
    }
  }
  return {"coxeter relations n=" + std::to_string(rank.n()), true, "all pairs"};
}

CheckResult length_formula(Rank rank, std::size_t max_len) {
  const auto all = bfs_enumerate(rank, max_len);
  for (const auto& e : all) {
    if (perm_length(e.perm) != e.length) {
      return {"inversion length n=" + std::to_string(rank.n()), false,
              "mismatch at word " + format_word(e.word)};
    }
  }
  return {"inversion length n=" + std::to_string(rank.n()), true,
          std::to_string(all.size()) + " elements up to length " + std::to_string(max_len)};
}

CheckResult brick_identities(Rank rank) {
  const auto report = brick_identities_check(rank);
  const std::string name = "brick identities n=" + std::to_string(rank.n());
  if (!report.group_violations.empty()) {
    const auto& v = report.group_violations.front();
    return {name, false, v.instance.family + " fails in the group"};
  }
  return {name, true,
          std::to_string(report.instances) + " instances equal in the group, " +
              std::to_string(report.letter_count_differences.size()) +
              " with different letter counts"};
}

CheckResult exchange_rules(Rank rank) {
  const int n = rank.n();
  const std::string name = "exchange rules n=" + std::to_string(n);
  std::size_t count = 0;
  for (int r = 1; r <= n + 1; ++r)
    for (int u = 0; u <= n - 1; ++u)
      for (int s = 1; s <= n; ++s)
        for (int v = 1; v <= n - 1; ++v)
          for (int rule = 1; rule <= 6; ++rule) {
            if (!exchange_guard(rule, {r, u}, {s, v})) continue;
            const auto ex = exchange_apply(rank, rule, {r, u}, {s, v});
            Word lhs = h_word(rank, {r, u}) + Word(rank, {Generator::affine()}) +
                       h_word(rank, {s, v}) + Word(rank, {Generator::affine()});
            Word rhs = h_word(rank, {ex.first.j, ex.first.i}) +
                       Word(rank, {Generator::affine()}) +
                       h_word(rank, {ex.second.j, ex.second.i}) +
                       Word(rank, {Generator::affine(), Generator::sigma(ex.trailing_sigma)});
            if (to_permutation(lhs) != to_permutation(rhs)) {
              return {name, false, "rule " + std::to_string(rule) + " fails"};
            }
            ++count;
          }
  return {name, true, std::to_string(count) + " guarded instances"};
}

CheckResult canonical_round_trip(Rank rank, std::size_t max_len) {
  const std::string name = "canonical form n=" + std::to_string(rank.n());
  const auto all = bfs_enumerate(rank, max_len);
  for (const auto& e : all) {
    const Element c = canonicalize(e.word);
    const Word w = element_word(c);
    if (to_permutation(w) != e.perm || c.length() != e.length || w.size() != e.length) {
      return {name, false, "mismatch at word " + format_word(e.word)};
    }
  }
  return {name, true, std::to_string(all.size()) + " elements up to length " +
                          std::to_string(max_len)};
}

}  // namespace

std::vector<CheckResult> run_selfcheck() {
  std::vector<CheckResult> out;
  for (int n : {2, 3, 4}) out.push_back(coxeter_relations(Rank(n)));
  out.push_back(length_formula(Rank(2), 8));
  out.push_back(length_formula(Rank(3), 8));
  for (int n : {2, 3, 4, 5}) out.push_back(brick_identities(Rank(n)));
  for (int n : {2, 3, 4, 5}) out.push_back(exchange_rules(Rank(n)));
  out.push_back(canonical_round_trip(Rank(2), 8));
  out.push_back(canonical_round_trip(Rank(3), 6));
  return out;
}

}  // namespace coxa

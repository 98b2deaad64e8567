#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "deltaring/scalar.hpp"

namespace deltaring::rewrite {

/// A word in single-character letters.
using Word = std::string;

/// Linear combination of words with coefficients c * w^t, where w is a
/// central invertible scalar. Keys are (t, word); zero entries are absent.
using Poly = std::map<std::pair<int, Word>, Scalar>;

struct Rule {
  Word lhs;
  Poly rhs;
};

struct CriticalPair {
  Word overlap;
  Poly left, right;
  [[nodiscard]] bool resolves() const { return left == right; }
};

struct ConfluenceReport {
  bool confluent = true;
  std::size_t words_checked = 0;
  std::vector<CriticalPair> critical_pairs;
  /// A word with two one-step rewrites whose normal forms differ.
  std::optional<Word> failing_word;
};

/// Noncommutative rewriting over a field ℤ/p with central scalar w.
/// Reduction always rewrites the leftmost redex, trying rules in order.
class RewriteSystem {
 public:
  RewriteSystem(Coeffs k, std::vector<Rule> rules, std::size_t step_limit = 1'000'000);

  [[nodiscard]] Coeffs const& coeffs() const noexcept { return k_; }
  [[nodiscard]] std::vector<Rule> const& rules() const noexcept { return rules_; }

  [[nodiscard]] bool is_normal(Word const& w) const;
  [[nodiscard]] Poly reduce(Poly const& p) const;
  [[nodiscard]] Poly reduce(Word const& w) const;

  /// Overlaps of left-hand sides (suffix of one equal to a prefix of
  /// another, or one contained in the other), each reduced both ways.
  [[nodiscard]] std::vector<CriticalPair> critical_pairs() const;

  /// Critical pairs plus an exhaustive check: for every word of length at
  /// most max_len, every single rewrite step leads to the same normal form.
  [[nodiscard]] ConfluenceReport check_confluence(std::size_t max_len) const;

 private:
  /// Result of rewriting one occurrence of rule r at position pos.
  [[nodiscard]] Poly rewrite_at(Word const& w, std::size_t r, std::size_t pos) const;

  Coeffs k_;
  std::vector<Rule> rules_;
  std::size_t step_limit_;
};

void add_term(Coeffs const& k, Poly& p, int t, Word const& w, Scalar c);
Poly add(Coeffs const& k, Poly const& a, Poly const& b);
Poly scale(Coeffs const& k, Scalar c, Poly const& a);
/// Concatenation product; scalar powers add.
Poly multiply(Coeffs const& k, Poly const& a, Poly const& b);
Poly word(Word const& w);
std::string to_string(Poly const& p, char scalar = 'w');

}  // namespace deltaring::rewrite

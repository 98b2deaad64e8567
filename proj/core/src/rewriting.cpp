#include "deltaring/rewriting.hpp"

#include <set>
#include <sstream>

#include "deltaring/error.hpp"

namespace deltaring::rewrite {

void add_term(Coeffs const& k, Poly& p, int t, Word const& w, Scalar c) {
  if (k.is_zero(c)) return;
  auto key = std::make_pair(t, w);
  auto it = p.find(key);
  if (it == p.end()) {
    p.emplace(std::move(key), c);
    return;
  }
  it->second = k.add(it->second, c);
  if (k.is_zero(it->second)) p.erase(it);
}

Poly add(Coeffs const& k, Poly const& a, Poly const& b) {
  Poly out = a;
  for (auto const& [key, c] : b) add_term(k, out, key.first, key.second, c);
  return out;
}

Poly scale(Coeffs const& k, Scalar c, Poly const& a) {
  Poly out;
  for (auto const& [key, x] : a) add_term(k, out, key.first, key.second, k.mul(c, x));
  return out;
}

Poly multiply(Coeffs const& k, Poly const& a, Poly const& b) {
  Poly out;
  for (auto const& [ka, ca] : a)
    for (auto const& [kb, cb] : b)
      add_term(k, out, ka.first + kb.first, ka.second + kb.second, k.mul(ca, cb));
  return out;
}

Poly word(Word const& w) {
  return Poly{{{0, w}, Scalar{1, 1}}};
}

std::string to_string(Poly const& p, char scalar) {
  if (p.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto const& [key, c] : p) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (key.first != 0) os << '*' << scalar << '^' << key.first;
    if (!key.second.empty()) os << '*' << key.second;
  }
  return os.str();
}

RewriteSystem::RewriteSystem(Coeffs k, std::vector<Rule> rules, std::size_t step_limit)
    : k_(k), rules_(std::move(rules)), step_limit_(step_limit) {
  for (auto const& r : rules_)
    if (r.lhs.empty()) throw Error(Errc::InvalidArgument, "rule with empty left-hand side");
}

bool RewriteSystem::is_normal(Word const& w) const {
  for (auto const& r : rules_)
    if (w.find(r.lhs) != Word::npos) return false;
  return true;
}

Poly RewriteSystem::rewrite_at(Word const& w, std::size_t r, std::size_t pos) const {
  auto const& rule = rules_[r];
  Word prefix = w.substr(0, pos);
  Word suffix = w.substr(pos + rule.lhs.size());
  Poly out;
  for (auto const& [key, c] : rule.rhs)
    add_term(k_, out, key.first, prefix + key.second + suffix, c);
  return out;
}

Poly RewriteSystem::reduce(Poly const& p) const {
  Poly done;
  Poly work = p;
  std::size_t steps = 0;
  while (!work.empty()) {
    auto it = work.begin();
    auto [t, w] = it->first;
    Scalar c = it->second;
    work.erase(it);
    // leftmost redex
    std::size_t best_pos = Word::npos, best_rule = 0;
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      auto pos = w.find(rules_[r].lhs);
      if (pos < best_pos) {
        best_pos = pos;
        best_rule = r;
      }
    }
    if (best_pos == Word::npos) {
      add_term(k_, done, t, w, c);
      continue;
    }
    if (++steps > step_limit_)
      throw Error(Errc::Overflow, "rewriting did not terminate within the step limit");
    for (auto const& [key, x] : rewrite_at(w, best_rule, best_pos))
      add_term(k_, work, t + key.first, key.second, k_.mul(c, x));
  }
  return done;
}

Poly RewriteSystem::reduce(Word const& w) const { return reduce(word(w)); }

std::vector<CriticalPair> RewriteSystem::critical_pairs() const {
  std::vector<CriticalPair> out;
  std::set<std::tuple<Word, std::size_t, std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    auto const& l1 = rules_[i].lhs;
    for (std::size_t j = 0; j < rules_.size(); ++j) {
      auto const& l2 = rules_[j].lhs;
      // suffix of l1 == prefix of l2
      for (std::size_t len = 1; len < l1.size() && len <= l2.size(); ++len) {
        if (l1.compare(l1.size() - len, len, l2, 0, len) != 0) continue;
        if (len == l2.size()) continue;  // inclusion, handled below
        Word w = l1 + l2.substr(len);
        std::size_t pos2 = l1.size() - len;
        if (!seen.emplace(w, i, j, pos2).second) continue;
        out.push_back({w, reduce(rewrite_at(w, i, 0)), reduce(rewrite_at(w, j, pos2))});
      }
      // l2 strictly inside l1
      if (i != j && l2.size() < l1.size()) {
        for (auto pos = l1.find(l2); pos != Word::npos; pos = l1.find(l2, pos + 1)) {
          if (!seen.emplace(l1, i, j, pos).second) continue;
          out.push_back({l1, reduce(rewrite_at(l1, i, 0)), reduce(rewrite_at(l1, j, pos))});
        }
      }
    }
  }
  return out;
}

ConfluenceReport RewriteSystem::check_confluence(std::size_t max_len) const {
  ConfluenceReport rep;
  rep.critical_pairs = critical_pairs();
  for (auto const& cp : rep.critical_pairs)
    if (!cp.resolves()) {
      rep.confluent = false;
      if (!rep.failing_word) rep.failing_word = cp.overlap;
    }

  std::set<char> letters;
  for (auto const& r : rules_) {
    letters.insert(r.lhs.begin(), r.lhs.end());
    for (auto const& [key, c] : r.rhs) letters.insert(key.second.begin(), key.second.end());
  }
  std::vector<char> alphabet(letters.begin(), letters.end());

  std::vector<Word> layer{Word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<Word> next;
    for (auto const& w : layer)
      for (char c : alphabet) next.push_back(w + c);
    layer = std::move(next);
    for (auto const& w : layer) {
      ++rep.words_checked;
      std::optional<Poly> nf;
      for (std::size_t r = 0; r < rules_.size(); ++r) {
        auto const& lhs = rules_[r].lhs;
        for (auto pos = w.find(lhs); pos != Word::npos; pos = w.find(lhs, pos + 1)) {
          Poly red = reduce(rewrite_at(w, r, pos));
          if (!nf) {
            nf = std::move(red);
          } else if (red != *nf) {
            rep.confluent = false;
            if (!rep.failing_word) rep.failing_word = w;
          }
        }
      }
    }
  }
  return rep;
}

}  // namespace deltaring::rewrite

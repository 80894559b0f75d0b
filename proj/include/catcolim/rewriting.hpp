#pragma once

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <utility>
#include <vector>

namespace catcolim {

using Word = std::vector<std::uint32_t>;

struct RewriteRule {
  Word lhs;
  Word rhs;
};

struct CompletionLimits {
  std::size_t max_len = 12;     // longest left-hand side completion may create
  std::size_t max_rules = 5000; // active rules before giving up
};

// Shortlex Knuth-Bendix completion over words of generator ids.
//
// Words are arrow sequences of typed paths. Completion never needs to know the
// types: an overlap of two composable left-hand sides is again composable, and
// no rule ever rewrites the empty word, so every critical pair is a pair of
// parallel paths.
class RewriteSystem {
 public:
  RewriteSystem() = default;
  // rank[g] is the position of generator g in the letter order.
  RewriteSystem(std::vector<std::uint32_t> rank, CompletionLimits limits);

  // Returns true when the final system is confluent (and therefore decides
  // equality). When a bound is hit the rules collected so far stay sound.
  bool complete(const std::vector<std::pair<Word, Word>>& equations);

  bool confluent() const { return confluent_; }
  Word reduce(const Word& w) const;
  bool less(const Word& a, const Word& b) const;
  std::vector<RewriteRule> rules() const;
  std::size_t num_rules() const { return active_count_; }

 private:
  using Hash = std::uint64_t;
  Hash hash_of(const Word& w) const;
  // Index of an active rule whose lhs is a suffix of w[0..n), or -1.
  long match_suffix(const std::uint32_t* w, std::size_t n) const;
  void consider(const Word& u, const Word& v);
  void deactivate(std::size_t r);
  template <class F>
  void for_each_overlap(std::size_t a, std::size_t b, F&& f) const;
  bool joinable_everywhere() const;

  std::vector<std::uint32_t> rank_;
  CompletionLimits limits_;
  std::vector<RewriteRule> rules_;
  std::vector<char> active_;
  std::size_t active_count_ = 0;
  std::unordered_multimap<Hash, std::size_t> index_;
  std::vector<std::size_t> len_count_;
  std::size_t max_active_len_ = 0;
  bool confluent_ = true;
  bool overflow_ = false;
};

}  // namespace catcolim

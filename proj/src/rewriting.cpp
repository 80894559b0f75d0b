#include "catcolim/rewriting.hpp"

#include <algorithm>

namespace catcolim {

namespace {
constexpr std::uint64_t kBase = 1000003ULL;
}  // namespace

RewriteSystem::RewriteSystem(std::vector<std::uint32_t> rank, CompletionLimits limits)
    : rank_(std::move(rank)), limits_(limits), len_count_(limits.max_len + 2, 0) {}

bool RewriteSystem::less(const Word& a, const Word& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return rank_[a[i]] < rank_[b[i]];
  }
  return false;
}

RewriteSystem::Hash RewriteSystem::hash_of(const Word& w) const {
  Hash h = 0;
  for (std::size_t i = w.size(); i-- > 0;) h = h * kBase + (w[i] + 1);
  return h;
}

long RewriteSystem::match_suffix(const std::uint32_t* w, std::size_t n) const {
  Hash h = 0;
  const std::size_t top = std::min(n, max_active_len_);
  for (std::size_t len = 1; len <= top; ++len) {
    h = h * kBase + (w[n - len] + 1);
    if (len_count_[len] == 0) continue;
    auto [lo, hi] = index_.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      const Word& lhs = rules_[it->second].lhs;
      if (lhs.size() == len && std::equal(lhs.begin(), lhs.end(), w + (n - len))) {
        return static_cast<long>(it->second);
      }
    }
  }
  return -1;
}

Word RewriteSystem::reduce(const Word& w) const {
  Word out;
  out.reserve(w.size());
  Word in(w.rbegin(), w.rend());
  while (!in.empty()) {
    out.push_back(in.back());
    in.pop_back();
    long r = match_suffix(out.data(), out.size());
    if (r < 0) continue;
    const RewriteRule& rule = rules_[static_cast<std::size_t>(r)];
    out.resize(out.size() - rule.lhs.size());
    in.insert(in.end(), rule.rhs.rbegin(), rule.rhs.rend());
  }
  return out;
}

std::vector<RewriteRule> RewriteSystem::rules() const {
  std::vector<RewriteRule> out;
  for (std::size_t i = 0; i < rules_.size(); ++i) {
    if (active_[i]) out.push_back(rules_[i]);
  }
  std::sort(out.begin(), out.end(), [&](const RewriteRule& a, const RewriteRule& b) { return less(a.lhs, b.lhs); });
  return out;
}

void RewriteSystem::deactivate(std::size_t r) {
  active_[r] = 0;
  --active_count_;
  --len_count_[rules_[r].lhs.size()];
  Hash h = hash_of(rules_[r].lhs);
  auto [lo, hi] = index_.equal_range(h);
  for (auto it = lo; it != hi; ++it) {
    if (it->second == r) {
      index_.erase(it);
      break;
    }
  }
}

void RewriteSystem::consider(const Word& u0, const Word& v0) {
  std::vector<std::pair<Word, Word>> todo{{u0, v0}};
  while (!todo.empty()) {
    auto [a, b] = std::move(todo.back());
    todo.pop_back();
    Word u = reduce(a);
    Word v = reduce(b);
    if (u == v) continue;
    if (less(u, v)) std::swap(u, v);
    if (u.size() > limits_.max_len || active_count_ >= limits_.max_rules) {
      overflow_ = true;
      continue;
    }
    const std::size_t r = rules_.size();
    // rules whose lhs contains the new lhs are retired and their equations revisited
    for (std::size_t s = 0; s < r; ++s) {
      if (!active_[s]) continue;
      const Word& ls = rules_[s].lhs;
      if (ls.size() < u.size()) continue;
      if (std::search(ls.begin(), ls.end(), u.begin(), u.end()) != ls.end()) {
        deactivate(s);
        todo.emplace_back(rules_[s].lhs, rules_[s].rhs);
      }
    }
    rules_.push_back({std::move(u), std::move(v)});
    active_.push_back(1);
    ++active_count_;
    ++len_count_[rules_[r].lhs.size()];
    max_active_len_ = std::max(max_active_len_, rules_[r].lhs.size());
    index_.emplace(hash_of(rules_[r].lhs), r);
  }
}

template <class F>
void RewriteSystem::for_each_overlap(std::size_t a, std::size_t b, F&& f) const {
  const Word& la = rules_[a].lhs;
  const Word& lb = rules_[b].lhs;
  const std::size_t top = std::min(la.size(), lb.size());
  for (std::size_t k = 1; k < top; ++k) {
    if (!std::equal(la.end() - static_cast<long>(k), la.end(), lb.begin())) continue;
    // la = x.o and lb = o.y, so x.o.y rewrites two ways
    Word left = rules_[a].rhs;
    left.insert(left.end(), lb.begin() + static_cast<long>(k), lb.end());
    Word right(la.begin(), la.end() - static_cast<long>(k));
    right.insert(right.end(), rules_[b].rhs.begin(), rules_[b].rhs.end());
    f(left, right);
  }
}

bool RewriteSystem::joinable_everywhere() const {
  for (std::size_t a = 0; a < rules_.size(); ++a) {
    if (!active_[a]) continue;
    for (std::size_t b = 0; b < rules_.size(); ++b) {
      if (!active_[b]) continue;
      bool ok = true;
      for_each_overlap(a, b, [&](const Word& u, const Word& v) { ok = ok && reduce(u) == reduce(v); });
      if (!ok) return false;
    }
  }
  return true;
}

bool RewriteSystem::complete(const std::vector<std::pair<Word, Word>>& equations) {
  for (const auto& [u, v] : equations) consider(u, v);
  bool verified = false;
  for (int pass = 0; pass < 4 && !verified; ++pass) {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        if (!active_[i]) break;
        if (!active_[j]) continue;
        std::vector<std::pair<Word, Word>> pairs;
        auto collect = [&](const Word& u, const Word& v) { pairs.emplace_back(u, v); };
        for_each_overlap(i, j, collect);
        if (j != i) for_each_overlap(j, i, collect);
        for (const auto& [u, v] : pairs) consider(u, v);
        if (active_count_ >= limits_.max_rules) break;
      }
      if (active_count_ >= limits_.max_rules) {
        overflow_ = true;
        break;
      }
    }
    if (overflow_) break;
    verified = active_count_ > 3000 || joinable_everywhere();
  }
  // tidy right-hand sides
  for (std::size_t s = 0; s < rules_.size(); ++s) {
    if (active_[s]) rules_[s].rhs = reduce(rules_[s].rhs);
  }
  confluent_ = !overflow_ && verified;
  return confluent_;
}

}  // namespace catcolim

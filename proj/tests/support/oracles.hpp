#pragma once
// Reference implementations used only by tests. They share no code with the
// library's decision procedures.

#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "catcolim/category.hpp"

namespace oracle {

using catcolim::GenId;
using catcolim::ObjId;

// Coset enumeration of Hom(X, -) for a presented category: nodes are
// morphisms out of X, edges right multiplication by generators; every
// relation is traced from every node and the two ends identified.
class HomEnumeration {
 public:
  HomEnumeration(const catcolim::Category& c, ObjId x, std::size_t cap) : c_(c) {
    out_.resize(c.num_objects());
    for (GenId g = 0; g < c.num_arrows(); ++g) out_[c.arrow(g).src].push_back(g);
    new_node(x);
    for (std::size_t n = 0; n < obj_.size(); ++n) {
      if (find(n) != n) continue;
      for (const auto& r : c.relations()) {
        if (r.lhs.src != obj_[n]) continue;
        std::size_t a = trace(n, r.lhs);
        std::size_t b = trace(find(n), r.rhs);
        merge(a, b);
        if (alive_ > cap) return;
      }
      if (find(n) != n) continue;
      for (GenId g : out_[obj_[n]]) {
        if (next_[n].count(g) == 0) {
          std::size_t m = new_node(c.arrow(g).tgt);
          next_[n][g] = m;
        }
      }
      if (alive_ > cap) return;
    }
    closed_ = true;
  }

  bool closed() const { return closed_; }
  std::size_t size() const { return alive_; }
  std::size_t root() const { return 0; }
  std::optional<std::size_t> step(std::size_t n, GenId g) {
    n = find(n);
    auto it = next_[n].find(g);
    if (it == next_[n].end()) return std::nullopt;
    return find(it->second);
  }
  std::size_t count_to(ObjId y) {
    std::size_t k = 0;
    for (std::size_t n = 0; n < obj_.size(); ++n) {
      if (find(n) == n && obj_[n] == y) ++k;
    }
    return k;
  }

 private:
  std::size_t new_node(ObjId o) {
    obj_.push_back(o);
    parent_.push_back(obj_.size() - 1);
    next_.emplace_back();
    ++alive_;
    return obj_.size() - 1;
  }
  std::size_t find(std::size_t n) {
    while (parent_[n] != n) n = parent_[n] = parent_[parent_[n]];
    return n;
  }
  std::size_t trace(std::size_t n, const catcolim::Path& p) {
    n = find(n);
    for (GenId g : p.arrows) {
      auto it = next_[n].find(g);
      if (it == next_[n].end()) {
        std::size_t m = new_node(c_.arrow(g).tgt);
        next_[n][g] = m;
        n = m;
      } else {
        n = find(it->second);
      }
    }
    return n;
  }
  void merge(std::size_t a, std::size_t b) {
    std::vector<std::pair<std::size_t, std::size_t>> queue{{a, b}};
    while (!queue.empty()) {
      auto [x, y] = queue.back();
      queue.pop_back();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      if (y < x) std::swap(x, y);
      parent_[y] = x;
      --alive_;
      for (auto& [g, t] : next_[y]) {
        auto it = next_[x].find(g);
        if (it == next_[x].end()) {
          next_[x][g] = t;
        } else {
          queue.emplace_back(it->second, t);
        }
      }
      next_[y].clear();
    }
  }

  const catcolim::Category& c_;
  std::vector<std::vector<GenId>> out_;
  std::vector<ObjId> obj_;
  std::vector<std::size_t> parent_;
  std::vector<std::map<GenId, std::size_t>> next_;
  std::size_t alive_ = 0;
  bool closed_ = false;
};

// A random finitely presented category.
inline catcolim::CategoryPtr random_category(std::mt19937& rng, int index, catcolim::Bounds bounds) {
  std::uniform_int_distribution<int> nobj(1, 4), ngen(1, 6), nrel(1, 4);
  int no = nobj(rng), ng = ngen(rng), nr = nrel(rng);
  catcolim::CategoryBuilder b("R" + std::to_string(index));
  for (int i = 0; i < no; ++i) b.object("X" + std::to_string(i));
  std::uniform_int_distribution<int> pick(0, no - 1);
  for (int i = 0; i < ng; ++i) {
    b.arrow("g" + std::to_string(i), static_cast<ObjId>(pick(rng)), static_cast<ObjId>(pick(rng)));
  }
  const auto& q = b.quiver();
  // random walk of given length from x; empty when stuck
  auto walk = [&](ObjId x, int len) -> std::optional<catcolim::Path> {
    catcolim::Path p{x, x, {}};
    for (int k = 0; k < len; ++k) {
      std::vector<GenId> out;
      for (GenId g = 0; g < q.arrows.size(); ++g) {
        if (q.arrows[g].src == p.tgt) out.push_back(g);
      }
      if (out.empty()) return std::nullopt;
      GenId g = out[std::uniform_int_distribution<std::size_t>(0, out.size() - 1)(rng)];
      p.arrows.push_back(g);
      p.tgt = q.arrows[g].tgt;
    }
    return p;
  };
  std::uniform_int_distribution<int> len(1, 4), len0(0, 3);
  for (int i = 0, tries = 0; i < nr && tries < 200; ++tries) {
    auto lhs = walk(static_cast<ObjId>(pick(rng)), len(rng));
    if (!lhs) continue;
    // look for a parallel right-hand side
    for (int t = 0; t < 50; ++t) {
      auto rhs = walk(lhs->src, len0(rng));
      if (rhs && rhs->tgt == lhs->tgt && rhs->arrows != lhs->arrows) {
        b.relation(*lhs, *rhs);
        ++i;
        break;
      }
    }
  }
  return b.build(catcolim::Backend::Rewrite, bounds);
}

}  // namespace oracle

#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace catcolim {

// Finite-domain backtracking. Variables are assigned in order; a constraint is
// checked as soon as its last variable is assigned.
class Search {
 public:
  using Assignment = std::vector<int>;
  using Domain = std::function<std::vector<int>(const Assignment&)>;
  using Predicate = std::function<bool(const Assignment&)>;

  std::size_t add_var(Domain domain) {
    domains_.push_back(std::move(domain));
    checks_.emplace_back();
    return domains_.size() - 1;
  }
  std::size_t add_fixed(std::vector<int> values) {
    return add_var([values = std::move(values)](const Assignment&) { return values; });
  }
  // ready: the largest variable index the predicate reads
  void add_constraint(std::size_t ready, Predicate pred) { checks_.at(ready).push_back(std::move(pred)); }
  std::size_t size() const { return domains_.size(); }

  // on_solution returns false to stop the search.
  void run(const std::function<bool(const Assignment&)>& on_solution) const {
    Assignment a(domains_.size(), -1);
    if (domains_.empty()) {
      on_solution(a);
      return;
    }
    bool stop = false;
    descend(a, 0, on_solution, stop);
  }

 private:
  void descend(Assignment& a, std::size_t i, const std::function<bool(const Assignment&)>& on_solution, bool& stop) const {
    for (int v : domains_[i](a)) {
      a[i] = v;
      bool ok = true;
      for (const auto& c : checks_[i]) {
        if (!c(a)) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      if (i + 1 == domains_.size()) {
        if (!on_solution(a)) stop = true;
      } else {
        descend(a, i + 1, on_solution, stop);
      }
      if (stop) break;
    }
    a[i] = -1;
  }

  std::vector<Domain> domains_;
  std::vector<std::vector<Predicate>> checks_;
};

}  // namespace catcolim

#include "catcolim/monoid.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "catcolim/tensor.hpp"

namespace catcolim {

CommMonoid CommMonoid::from_table(std::vector<std::string> names, std::size_t unit, std::vector<std::vector<std::size_t>> mult) {
  const std::size_t n = names.size();
  if (n == 0 || unit >= n || mult.size() != n) throw Error(ErrorCode::IllDefinedProduct, "monoid table has the wrong shape");
  for (const auto& row : mult) {
    if (row.size() != n) throw Error(ErrorCode::IllDefinedProduct, "monoid table row has the wrong length");
    for (auto v : row) {
      if (v >= n) throw Error(ErrorCode::IllDefinedProduct, "product is not an element");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mult[unit][a] != a || mult[a][unit] != a) throw Error(ErrorCode::IllDefinedProduct, "'" + names[unit] + "' is not a unit");
    for (std::size_t b = 0; b < n; ++b) {
      if (mult[a][b] != mult[b][a]) throw Error(ErrorCode::NoncommutativeObjectTable, names[a] + " and " + names[b] + " do not commute");
      for (std::size_t c = 0; c < n; ++c) {
        if (mult[mult[a][b]][c] != mult[a][mult[b][c]]) {
          throw Error(ErrorCode::IllDefinedProduct, "not associative on (" + names[a] + ", " + names[b] + ", " + names[c] + ")");
        }
      }
    }
  }
  CommMonoid m;
  m.names_ = std::move(names);
  m.unit_ = unit;
  m.table_ = std::move(mult);
  return m;
}

CommMonoid CommMonoid::cyclic(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  }
  return from_table(std::move(names), 0, std::move(t));
}

CommMonoid CommMonoid::of(const ObjectMonoid& m) {
  std::vector<std::vector<std::size_t>> t(m.size(), std::vector<std::size_t>(m.size()));
  for (ObjId a = 0; a < m.size(); ++a) {
    for (ObjId b = 0; b < m.size(); ++b) t[a][b] = m.mul_or_throw(a, b);
  }
  return from_table(m.names(), m.unit(), std::move(t));
}

CommMonoid CommMonoid::product(const CommMonoid& a, const CommMonoid& b) {
  const std::size_t nb = b.size(), n = a.size() * nb;
  std::vector<std::string> names;
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t p = 0; p < n; ++p) {
    names.push_back("(" + a.name(p / nb) + "," + b.name(p % nb) + ")");
    for (std::size_t q = 0; q < n; ++q) t[p][q] = a.mul(p / nb, q / nb) * nb + b.mul(p % nb, q % nb);
  }
  return from_table(std::move(names), a.unit() * nb + b.unit(), std::move(t));
}

CommMonoid CommMonoid::quotient(const CommMonoid& m, const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                                std::vector<std::size_t>* classes) {
  const std::size_t n = m.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  };
  for (auto [x, y] : pairs) {
    for (std::size_t b = 0; b < n; ++b) unite(m.mul(b, x), m.mul(b, y));
  }
  // close under multiplication (already closed for stabilized pairs; kept as a check)
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t c = 0; c < n; ++c) {
        if (find(a) != find(c)) continue;
        for (std::size_t b = 0; b < n; ++b) changed |= unite(m.mul(a, b), m.mul(c, b));
      }
    }
  }
  std::map<std::size_t, std::size_t> dense;
  std::vector<std::size_t> cls(n);
  std::vector<std::string> names;
  for (std::size_t x = 0; x < n; ++x) {
    auto [it, fresh] = dense.emplace(find(x), dense.size());
    if (fresh) names.push_back(m.name(x));
    cls[x] = it->second;
  }
  std::vector<std::vector<std::size_t>> t(names.size(), std::vector<std::size_t>(names.size()));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) t[cls[a]][cls[b]] = cls[m.mul(a, b)];
  }
  if (classes) *classes = cls;
  return from_table(std::move(names), cls[m.unit()], std::move(t));
}

std::string CommMonoid::format() const {
  std::string out;
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = 0; b < size(); ++b) out += (b ? " " : "") + names_[table_[a][b]];
    out += "\n";
  }
  return out;
}

CommMonoid monoid_colimit_oracle(Kind kind, const MonoidColimitData& d) {
  auto need = [&](std::size_t monoids, std::size_t maps) {
    if (d.monoids.size() != monoids || d.maps.size() != maps) {
      throw Error(ErrorCode::UnresolvedReference, std::string("wrong inputs for the ") + kind_name(kind) + " oracle");
    }
  };
  switch (kind) {
    case Kind::Coproduct:
      need(2, 0);
      return CommMonoid::product(d.monoids[0], d.monoids[1]);
    case Kind::Coequalizer: {
      need(1, 2);
      if (d.maps[0].size() != d.maps[1].size()) throw Error(ErrorCode::NotParallel, "maps have different sources");
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t a = 0; a < d.maps[0].size(); ++a) pairs.emplace_back(d.maps[0][a], d.maps[1][a]);
      return CommMonoid::quotient(d.monoids[0], pairs);
    }
    case Kind::Pushout: {
      need(2, 2);
      if (d.maps[0].size() != d.maps[1].size()) throw Error(ErrorCode::NotParallel, "maps have different sources");
      CommMonoid p = CommMonoid::product(d.monoids[0], d.monoids[1]);
      const std::size_t nb = d.monoids[1].size();
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t c = 0; c < d.maps[0].size(); ++c) {
        pairs.emplace_back(d.maps[0][c] * nb + d.monoids[1].unit(), d.monoids[0].unit() * nb + d.maps[1][c]);
      }
      return CommMonoid::quotient(p, pairs);
    }
    default:
      throw Error(ErrorCode::Unsupported, std::string("no monoid oracle for ") + kind_name(kind));
  }
}

std::optional<std::vector<std::size_t>> monoid_isomorphism(const CommMonoid& a, const CommMonoid& b) {
  const std::size_t n = a.size();
  if (b.size() != n) return std::nullopt;
  std::vector<std::size_t> phi(n, n), used(n, 0);
  phi[a.unit()] = b.unit();
  used[b.unit()] = 1;
  std::vector<std::size_t> order;
  for (std::size_t x = 0; x < n; ++x) {
    if (x != a.unit()) order.push_back(x);
  }
  auto consistent = [&]() {
    for (std::size_t x = 0; x < n; ++x) {
      if (phi[x] == n) continue;
      for (std::size_t y = 0; y < n; ++y) {
        if (phi[y] == n) continue;
        std::size_t xy = a.mul(x, y);
        if (phi[xy] != n && phi[xy] != b.mul(phi[x], phi[y])) return false;
      }
    }
    return true;
  };
  std::function<bool(std::size_t)> go = [&](std::size_t k) {
    if (k == order.size()) return true;
    std::size_t x = order[k];
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y]) continue;
      phi[x] = y;
      used[y] = 1;
      if (consistent() && go(k + 1)) return true;
      used[y] = 0;
      phi[x] = n;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return phi;
}

}  // namespace catcolim

#include "catcolim/tensor.hpp"

#include <algorithm>
#include <set>

namespace catcolim {

// ---------------------------------------------------------------------------
// ObjectMonoid

namespace {

void check_names(const std::vector<std::string>& names) {
  std::set<std::string> seen;
  for (const auto& n : names) {
    if (!seen.insert(n).second) throw Error(ErrorCode::DuplicateName, "object '" + n + "' declared twice");
  }
}

}  // namespace

ObjectMonoid ObjectMonoid::partial(std::vector<std::string> names, ObjId unit, std::vector<std::vector<int>> mult) {
  const std::size_t n = names.size();
  if (n == 0) throw Error(ErrorCode::IllDefinedProduct, "object monoid needs a unit");
  check_names(names);
  if (unit >= n) throw Error(ErrorCode::IllDefinedProduct, "unit is not an object");
  if (mult.size() != n) throw Error(ErrorCode::IllDefinedProduct, "multiplication table has the wrong number of rows");
  for (const auto& row : mult) {
    if (row.size() != n) throw Error(ErrorCode::IllDefinedProduct, "multiplication table row has the wrong length");
    for (int v : row) {
      if (v < -1 || v >= static_cast<int>(n)) throw Error(ErrorCode::IllDefinedProduct, "product is not an object");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (mult[unit][a] != static_cast<int>(a) || mult[a][unit] != static_cast<int>(a)) {
      throw Error(ErrorCode::IllDefinedProduct, "'" + names[unit] + "' is not a unit for '" + names[a] + "'");
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      int ab = mult[a][b];
      for (std::size_t c = 0; c < n; ++c) {
        int bc = mult[b][c];
        int l = ab < 0 ? -1 : mult[static_cast<std::size_t>(ab)][c];
        int r = bc < 0 ? -1 : mult[a][static_cast<std::size_t>(bc)];
        if (l >= 0 && r >= 0 && l != r) {
          throw Error(ErrorCode::IllDefinedProduct,
                      "product is not associative on (" + names[a] + ", " + names[b] + ", " + names[c] + ")");
        }
      }
    }
  }
  ObjectMonoid m;
  m.type_ = Type::Table;
  m.names_ = std::move(names);
  m.unit_ = unit;
  m.table_ = std::move(mult);
  return m;
}

ObjectMonoid ObjectMonoid::table(std::vector<std::string> names, ObjId unit, std::vector<std::vector<ObjId>> mult) {
  std::vector<std::vector<int>> t;
  for (const auto& row : mult) t.emplace_back(row.begin(), row.end());
  ObjectMonoid m = partial(std::move(names), unit, std::move(t));
  for (std::size_t a = 0; a < m.size(); ++a) {
    for (std::size_t b = a + 1; b < m.size(); ++b) {
      if (m.table_[a][b] != m.table_[b][a]) {
        throw Error(ErrorCode::NoncommutativeObjectTable, m.names_[a] + " * " + m.names_[b] + " differs from " +
                                                              m.names_[b] + " * " + m.names_[a]);
      }
    }
  }
  return m;
}

ObjectMonoid ObjectMonoid::words(std::vector<std::string> letters, std::size_t max_length) {
  if (letters.empty()) max_length = 0;
  check_names(letters);
  bool single = std::all_of(letters.begin(), letters.end(), [](const std::string& l) { return l.size() == 1; });
  std::vector<std::vector<std::uint32_t>> ws{{}};
  for (std::size_t i = 0; i < ws.size(); ++i) {
    if (ws[i].size() == max_length) continue;
    for (std::uint32_t l = 0; l < letters.size(); ++l) {
      auto w = ws[i];
      w.push_back(l);
      ws.push_back(std::move(w));
    }
  }
  std::map<std::vector<std::uint32_t>, int> index;
  std::vector<std::string> names;
  for (std::size_t i = 0; i < ws.size(); ++i) {
    index[ws[i]] = static_cast<int>(i);
    std::string n;
    for (std::size_t k = 0; k < ws[i].size(); ++k) {
      if (k && !single) n += ".";
      n += letters[ws[i][k]];
    }
    names.push_back(ws[i].empty() ? "1" : n);
  }
  std::vector<std::vector<int>> t(ws.size(), std::vector<int>(ws.size(), -1));
  for (std::size_t a = 0; a < ws.size(); ++a) {
    for (std::size_t b = 0; b < ws.size(); ++b) {
      auto w = ws[a];
      w.insert(w.end(), ws[b].begin(), ws[b].end());
      auto it = index.find(w);
      if (it != index.end()) t[a][b] = it->second;
    }
  }
  ObjectMonoid m = partial(std::move(names), 0, std::move(t));
  m.type_ = Type::Words;
  m.letters_ = std::move(letters);
  m.max_length_ = max_length;
  return m;
}

ObjectMonoid ObjectMonoid::trivial(const std::string& unit_name) { return table({unit_name}, 0, {{0}}); }

ObjectMonoid ObjectMonoid::product(const ObjectMonoid& a, const ObjectMonoid& b) {
  std::vector<std::string> names;
  for (ObjId x = 0; x < a.size(); ++x) {
    for (ObjId y = 0; y < b.size(); ++y) names.push_back(pair_name(a.name(x), b.name(y)));
  }
  const std::size_t n = names.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n, -1));
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      int u = a.table_[p / b.size()][q / b.size()];
      int v = b.table_[p % b.size()][q % b.size()];
      if (u >= 0 && v >= 0) t[p][q] = u * static_cast<int>(b.size()) + v;
    }
  }
  return partial(std::move(names), static_cast<ObjId>(a.unit() * b.size() + b.unit()), std::move(t));
}

bool ObjectMonoid::total() const {
  for (const auto& row : table_) {
    for (int v : row) {
      if (v < 0) return false;
    }
  }
  return true;
}

std::optional<ObjId> ObjectMonoid::find(const std::string& name) const {
  for (ObjId x = 0; x < names_.size(); ++x) {
    if (names_[x] == name) return x;
  }
  return std::nullopt;
}

ObjId ObjectMonoid::mul_or_throw(ObjId a, ObjId b) const {
  auto v = mul(a, b);
  if (!v) throw Error(ErrorCode::IllDefinedProduct, names_[a] + " * " + names_[b] + " is outside the word bound");
  return *v;
}

// ---------------------------------------------------------------------------
// carrier layout

namespace {

std::vector<bool> explicit_arrows(const TensorPresentation& p) {
  std::vector<bool> ex(p.arrows.size(), false);
  for (const auto& [key, path] : p.whisker) {
    if (key.second >= p.arrows.size()) throw Error(ErrorCode::UnresolvedReference, "whisker entry for an unknown arrow");
    ex[key.second] = true;
  }
  return ex;
}

bool whiskerable(const ObjectMonoid& m, ObjId a, ObjId src, ObjId tgt) {
  return m.mul(a, src).has_value() && m.mul(a, tgt).has_value();
}

std::vector<std::pair<ObjId, ObjId>> sigma_pairs(const TensorPresentation& p) {
  std::vector<std::pair<ObjId, ObjId>> out;
  if (p.symmetry_mode != SymmetryMode::Free) return out;
  const ObjectMonoid& m = p.monoid;
  for (ObjId x = 0; x < m.size(); ++x) {
    for (ObjId y = 0; y < m.size(); ++y) {
      if (x == m.unit() || y == m.unit()) continue;
      if (m.mul(x, y) && m.mul(y, x)) out.emplace_back(x, y);
    }
  }
  return out;
}

std::string whiskered_name(const ObjectMonoid& m, ObjId a, const std::string& g) { return m.name(a) + "*" + g; }

}  // namespace

std::vector<GenKey> carrier_keys(const TensorPresentation& p) {
  const ObjectMonoid& m = p.monoid;
  auto ex = explicit_arrows(p);
  std::vector<GenKey> keys;
  auto copies = [&](GenKey k, ObjId src, ObjId tgt) {
    keys.push_back(k);
    for (ObjId a = 0; a < m.size(); ++a) {
      if (a == m.unit() || !whiskerable(m, a, src, tgt)) continue;
      GenKey c = k;
      c.whisker = a;
      keys.push_back(c);
    }
  };
  for (std::uint32_t i = 0; i < p.arrows.size(); ++i) {
    GenKey k{GenKey::Declared, i, 0, m.unit()};
    if (ex[i]) {
      keys.push_back(k);
    } else {
      copies(k, p.arrows[i].src, p.arrows[i].tgt);
    }
  }
  for (auto [x, y] : sigma_pairs(p)) {
    copies(GenKey{GenKey::Sigma, x, y, m.unit()}, m.mul_or_throw(x, y), m.mul_or_throw(y, x));
  }
  return keys;
}

Quiver carrier_quiver(const TensorPresentation& p) {
  const ObjectMonoid& m = p.monoid;
  Quiver q;
  q.objects = m.names();
  for (const GenKey& k : carrier_keys(p)) {
    Arrow root;
    if (k.type == GenKey::Declared) {
      if (k.i >= p.arrows.size()) throw Error(ErrorCode::UnresolvedReference, "arrow index out of range");
      root = p.arrows[k.i];
      if (root.src >= m.size() || root.tgt >= m.size()) {
        throw Error(ErrorCode::UnresolvedReference, "arrow '" + root.name + "' has an endpoint outside the monoid");
      }
    } else {
      root.name = "s<" + m.name(k.i) + "," + m.name(k.j) + ">";
      root.src = m.mul_or_throw(k.i, k.j);
      root.tgt = m.mul_or_throw(k.j, k.i);
    }
    if (k.whisker == m.unit()) {
      q.arrows.push_back(root);
    } else {
      q.arrows.push_back(Arrow{whiskered_name(m, k.whisker, root.name), m.mul_or_throw(k.whisker, root.src),
                               m.mul_or_throw(k.whisker, root.tgt)});
    }
  }
  return q;
}

// ---------------------------------------------------------------------------
// TensorCategory

std::optional<GenId> TensorCategory::gen(const GenKey& k) const {
  auto it = by_key_.find(k);
  if (it == by_key_.end()) return std::nullopt;
  return it->second;
}

Path TensorCategory::compose(const Path& a, const Path& b) const {
  if (a.tgt != b.src) {
    throw Error(ErrorCode::NotComposable, monoid().name(a.tgt) + " is not " + monoid().name(b.src));
  }
  Path r{a.src, b.tgt, a.arrows};
  r.arrows.insert(r.arrows.end(), b.arrows.begin(), b.arrows.end());
  return r;
}

Path TensorCategory::whisker(ObjId a, const Path& p) const {
  Path r{mul(a, p.src), mul(a, p.tgt), {}};
  for (GenId g : p.arrows) {
    const auto& w = whisker_[a][g];
    if (!w) {
      throw Error(ErrorCode::IllDefinedProduct,
                  monoid().name(a) + " * " + carrier_->arrow(g).name + " is outside the word bound");
    }
    r.arrows.insert(r.arrows.end(), w->arrows.begin(), w->arrows.end());
  }
  return r;
}

Path TensorCategory::symmetry(ObjId x, ObjId y) const {
  const auto& s = sigma_[x][y];
  if (!s) throw Error(ErrorCode::IllDefinedProduct, "symmetry at (" + monoid().name(x) + ", " + monoid().name(y) + ") is outside the word bound");
  return *s;
}

Path TensorCategory::whisker_right(const Path& p, ObjId b) const {
  if (p.is_identity()) return Path{mul(p.src, b), mul(p.src, b), {}};
  return compose(compose(symmetry(p.src, b), whisker(b, p)), symmetry(b, p.tgt));
}

Path TensorCategory::tensor(const Path& f, const Path& g) const {
  return compose(whisker_right(f, g.src), whisker(f.tgt, g));
}

namespace {

bool sigma_source(TensorRelationInfo::Source s) {
  switch (s) {
    case TensorRelationInfo::Involution:
    case TensorRelationInfo::UnitSymmetry:
    case TensorRelationInfo::Hexagon:
    case TensorRelationInfo::LeftRight:
    case TensorRelationInfo::RightRight:
    case TensorRelationInfo::Naturality:
      return true;
    default:
      return false;
  }
}

const char* source_name(TensorRelationInfo::Source s) {
  switch (s) {
    case TensorRelationInfo::Whiskered: return "whiskered relation";
    case TensorRelationInfo::Action: return "whiskering action";
    case TensorRelationInfo::Interchange: return "interchange";
    case TensorRelationInfo::Involution: return "symmetry involution";
    case TensorRelationInfo::UnitSymmetry: return "symmetry at the unit";
    case TensorRelationInfo::Hexagon: return "hexagon";
    case TensorRelationInfo::LeftRight: return "left/right whiskering";
    case TensorRelationInfo::RightRight: return "right whiskering action";
    case TensorRelationInfo::Naturality: return "symmetry naturality";
  }
  return "?";
}

// Runs f, skipping terms that leave the word bound.
template <class F>
void defined(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IllDefinedProduct) throw;
  }
}

}  // namespace

const char* tensor_relation_name(TensorRelationInfo::Source s) { return source_name(s); }

TensorPtr make_tensor_category(TensorPresentation p) {
  auto t = std::shared_ptr<TensorCategory>(new TensorCategory());
  const ObjectMonoid& m = p.monoid;
  const std::size_t n = m.size();
  Quiver q = carrier_quiver(p);
  t->keys_ = carrier_keys(p);
  for (GenId g = 0; g < t->keys_.size(); ++g) t->by_key_.emplace(t->keys_[g], g);
  const std::size_t ngen = q.arrows.size();
  auto ex = explicit_arrows(p);

  auto check_path = [&](const Path& path, const std::string& what) {
    ObjId cur = path.src;
    for (GenId g : path.arrows) {
      if (g >= ngen || q.arrows[g].src != cur) throw Error(ErrorCode::NotComposable, what + " is not a composable path");
      cur = q.arrows[g].tgt;
    }
    if (cur != path.tgt || path.src >= n || path.tgt >= n) throw Error(ErrorCode::NotComposable, what + " has wrong endpoints");
  };

  // whiskering of generators
  t->whisker_.assign(n, std::vector<std::optional<Path>>(ngen));
  for (GenId g = 0; g < ngen; ++g) {
    const GenKey& k = t->keys_[g];
    const Arrow& ar = q.arrows[g];
    for (ObjId a = 0; a < n; ++a) {
      if (a == m.unit()) {
        t->whisker_[a][g] = Path{ar.src, ar.tgt, {g}};
        continue;
      }
      if (!whiskerable(m, a, ar.src, ar.tgt)) continue;
      if (k.type == GenKey::Declared && ex[k.i]) {
        auto it = p.whisker.find({a, k.i});
        if (it == p.whisker.end()) {
          throw Error(ErrorCode::IllDefinedProduct, m.name(a) + " * " + ar.name + " is not given");
        }
        Path w = it->second;
        check_path(w, "whiskering " + m.name(a) + " * " + ar.name);
        if (w.src != m.mul_or_throw(a, ar.src) || w.tgt != m.mul_or_throw(a, ar.tgt)) {
          throw Error(ErrorCode::IllDefinedProduct, "whiskering " + m.name(a) + " * " + ar.name + " has wrong endpoints");
        }
        t->whisker_[a][g] = w;
        continue;
      }
      auto aw = m.mul(a, k.whisker);
      if (!aw) continue;
      GenKey c = k;
      c.whisker = *aw;
      auto it = t->by_key_.find(c);
      if (it == t->by_key_.end()) continue;
      t->whisker_[a][g] = Path{q.arrows[it->second].src, q.arrows[it->second].tgt, {it->second}};
    }
  }

  // symmetry components
  t->sigma_.assign(n, std::vector<std::optional<Path>>(n));
  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) {
      auto xy = m.mul(x, y), yx = m.mul(y, x);
      if (!xy || !yx) continue;
      std::string where = "(" + m.name(x) + ", " + m.name(y) + ")";
      auto given = p.symmetry.find({x, y});
      if (given != p.symmetry.end()) {
        if (p.symmetry_mode != SymmetryMode::Explicit) {
          throw Error(ErrorCode::IncoherentSymmetry, "symmetry component " + where + " given outside explicit mode");
        }
        const Path& s = given->second;
        bool ok = s.src == *xy && s.tgt == *yx;
        if (ok) {
          try {
            check_path(s, "symmetry " + where);
          } catch (const Error&) {
            ok = false;
          }
        }
        if (!ok) throw Error(ErrorCode::IncoherentSymmetry, "symmetry component " + where + " is not a morphism " +
                                                                m.name(*xy) + " -> " + m.name(*yx));
        t->sigma_[x][y] = s;
        continue;
      }
      if (p.symmetry_mode == SymmetryMode::Free && x != m.unit() && y != m.unit()) {
        GenId g = t->by_key_.at(GenKey{GenKey::Sigma, x, y, m.unit()});
        t->sigma_[x][y] = Path{*xy, *yx, {g}};
        continue;
      }
      if (*xy != *yx) {
        throw Error(ErrorCode::IncoherentSymmetry, "no symmetry component " + where + " between distinct objects " +
                                                       m.name(*xy) + " and " + m.name(*yx));
      }
      t->sigma_[x][y] = Path{*xy, *xy, {}};
    }
  }

  for (const Relation& r : p.relations) {
    check_path(r.lhs, "relation side");
    check_path(r.rhs, "relation side");
    if (r.lhs.src != r.rhs.src || r.lhs.tgt != r.rhs.tgt) {
      throw Error(ErrorCode::NonParallelRelation, "relation sides are not parallel");
    }
  }

  // structural equations
  std::vector<TensorRelationInfo> base;
  auto add = [&](std::vector<TensorRelationInfo>& out, Path l, Path r, TensorRelationInfo::Source s) {
    if (l == r) return;
    out.push_back({Relation{std::move(l), std::move(r)}, s});
  };
  t->pres_ = p;
  const TensorCategory& tc = *t;
  for (const Relation& r : p.relations) {
    for (ObjId a = 0; a < n; ++a) {
      if (a != m.unit()) defined([&] { add(base, tc.whisker(a, r.lhs), tc.whisker(a, r.rhs), TensorRelationInfo::Whiskered); });
    }
  }
  for (GenId g = 0; g < ngen; ++g) {
    const GenKey& k = t->keys_[g];
    if (!(k.type == GenKey::Declared && ex[k.i])) continue;
    Path pg{q.arrows[g].src, q.arrows[g].tgt, {g}};
    for (ObjId a = 0; a < n; ++a) {
      for (ObjId b = 0; b < n; ++b) {
        if (a == m.unit() || b == m.unit()) continue;
        defined([&] { add(base, tc.whisker(m.mul_or_throw(a, b), pg), tc.whisker(a, tc.whisker(b, pg)), TensorRelationInfo::Action); });
      }
    }
  }
  for (GenId f = 0; f < ngen; ++f) {
    Path pf{q.arrows[f].src, q.arrows[f].tgt, {f}};
    for (GenId g = 0; g < ngen; ++g) {
      Path pg{q.arrows[g].src, q.arrows[g].tgt, {g}};
      defined([&] {
        add(base, tc.compose(tc.whisker_right(pf, pg.src), tc.whisker(pf.tgt, pg)),
            tc.compose(tc.whisker(pf.src, pg), tc.whisker_right(pf, pg.tgt)), TensorRelationInfo::Interchange);
      });
    }
    for (ObjId y = 0; y < n; ++y) {
      defined([&] {
        add(base, tc.compose(tc.symmetry(pf.src, y), tc.whisker(y, pf)),
            tc.compose(tc.whisker_right(pf, y), tc.symmetry(pf.tgt, y)), TensorRelationInfo::Naturality);
      });
      for (ObjId a = 0; a < n; ++a) {
        if (a == m.unit() || y == m.unit()) continue;
        defined([&] {
          add(base, tc.whisker_right(tc.whisker(a, pf), y), tc.whisker(a, tc.whisker_right(pf, y)), TensorRelationInfo::LeftRight);
        });
        defined([&] {
          add(base, tc.whisker_right(tc.whisker_right(pf, a), y), tc.whisker_right(pf, m.mul_or_throw(a, y)),
              TensorRelationInfo::RightRight);
        });
      }
    }
  }
  for (ObjId x = 0; x < n; ++x) {
    defined([&] { add(base, tc.symmetry(m.unit(), x), tc.carrier_identity(x), TensorRelationInfo::UnitSymmetry); });
    defined([&] { add(base, tc.symmetry(x, m.unit()), tc.carrier_identity(x), TensorRelationInfo::UnitSymmetry); });
    for (ObjId y = 0; y < n; ++y) {
      defined([&] {
        add(base, tc.compose(tc.symmetry(x, y), tc.symmetry(y, x)), tc.carrier_identity(m.mul_or_throw(x, y)),
            TensorRelationInfo::Involution);
      });
      for (ObjId z = 0; z < n; ++z) {
        defined([&] {
          add(base, tc.symmetry(x, m.mul_or_throw(y, z)),
              tc.compose(tc.whisker_right(tc.symmetry(x, y), z), tc.whisker(y, tc.symmetry(x, z))), TensorRelationInfo::Hexagon);
        });
      }
    }
  }
  // whiskered copies of everything but interchange (implied by left/right compatibility)
  std::vector<TensorRelationInfo> all = base;
  for (const auto& info : base) {
    if (info.source == TensorRelationInfo::Interchange || info.source == TensorRelationInfo::Whiskered) continue;
    for (ObjId a = 0; a < n; ++a) {
      if (a == m.unit()) continue;
      defined([&] { add(all, tc.whisker(a, info.relation.lhs), tc.whisker(a, info.relation.rhs), info.source); });
    }
  }
  std::set<std::pair<std::vector<GenId>, std::vector<GenId>>> seen;
  for (const Relation& r : p.relations) seen.insert({r.lhs.arrows, r.rhs.arrows});
  for (auto& info : all) {
    auto key = std::make_pair(info.relation.lhs.arrows, info.relation.rhs.arrows);
    auto rkey = std::make_pair(info.relation.rhs.arrows, info.relation.lhs.arrows);
    if (seen.count(key) || seen.count(rkey)) continue;
    seen.insert(key);
    t->structural_.push_back(std::move(info));
  }

  if (p.finite) {
    t->carrier_ = make_category(p.name, q, p.relations, Backend::Table, p.bounds);
    for (const auto& info : t->structural_) {
      Tri e = t->carrier_->equal(info.relation.lhs, info.relation.rhs);
      if (e != Tri::Equal) {
        std::string what = std::string(source_name(info.source)) + " fails: " + t->carrier_->format_relation(info.relation);
        throw Error(sigma_source(info.source) ? ErrorCode::IncoherentSymmetry : ErrorCode::IllDefinedProduct, what);
      }
    }
  } else {
    std::vector<Relation> rels = p.relations;
    for (const auto& info : t->structural_) rels.push_back(info.relation);
    t->carrier_ = make_category(p.name, q, std::move(rels), Backend::Rewrite, p.bounds);
  }
  return t;
}

Path TensorCategory::carrier_identity(ObjId x) const { return Path{x, x, {}}; }

Path tensor_path(const TensorCategory& t, std::string_view text) { return t.carrier()->parse_path(text); }

ValidityReport check_tensor_invariants(const TensorCategory& t) {
  ValidityReport rep;
  const Category& c = *t.carrier();
  for (const auto& info : t.structural_relations()) {
    rep.record(c.equal(info.relation.lhs, info.relation.rhs),
               std::string(source_name(info.source)) + ": " + c.format_relation(info.relation));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// tensor functors

bool TensorFunctor::strict() const {
  if (!eta.is_identity()) return false;
  for (const auto& row : mu) {
    for (const auto& p : row) {
      if (p && !p->is_identity()) return false;
    }
  }
  return true;
}

TensorFunctor strict_tensor_functor(const TensorPtr& dom, const TensorPtr& cod, const Functor& f, std::string name) {
  TensorFunctor r;
  r.name = name.empty() ? f.name : std::move(name);
  r.dom = dom;
  r.cod = cod;
  r.functor = f;
  r.functor.name = r.name;
  const ObjectMonoid& m = dom->monoid();
  if (f(m.unit()) != cod->unit()) {
    throw Error(ErrorCode::ConditionsNotSatisfied, r.name + " does not preserve the unit strictly");
  }
  r.eta = Path{cod->unit(), cod->unit(), {}};
  r.eta_inv = r.eta;
  r.mu.assign(m.size(), std::vector<std::optional<Path>>(m.size()));
  r.mu_inv = r.mu;
  for (ObjId x = 0; x < m.size(); ++x) {
    for (ObjId y = 0; y < m.size(); ++y) {
      auto xy = m.mul(x, y);
      if (!xy) continue;
      auto img = cod->monoid().mul(f(x), f(y));
      if (!img || *img != f(*xy)) {
        throw Error(ErrorCode::ConditionsNotSatisfied, r.name + " does not preserve " + m.name(x) + " * " + m.name(y) + " strictly");
      }
      r.mu[x][y] = Path{*img, *img, {}};
      r.mu_inv[x][y] = r.mu[x][y];
    }
  }
  return r;
}

TensorFunctor identity_tensor_functor(const TensorPtr& t) {
  return strict_tensor_functor(t, t, identity_functor(t->carrier()), "Id");
}

TensorFunctor compose(const TensorFunctor& f, const TensorFunctor& g) {
  TensorFunctor r;
  r.name = f.name + ";" + g.name;
  r.dom = f.dom;
  r.cod = g.cod;
  r.functor = compose(f.functor, g.functor);
  r.functor.name = r.name;
  const Category& c = *g.cod->carrier();
  r.eta = c.compose(g.eta, g.functor.apply(f.eta));
  if (f.eta_inv && g.eta_inv) r.eta_inv = c.compose(g.functor.apply(*f.eta_inv), *g.eta_inv);
  const ObjectMonoid& m = f.dom->monoid();
  r.mu.assign(m.size(), std::vector<std::optional<Path>>(m.size()));
  r.mu_inv = r.mu;
  for (ObjId x = 0; x < m.size(); ++x) {
    for (ObjId y = 0; y < m.size(); ++y) {
      const auto& fm = f.mu[x][y];
      if (!fm) continue;
      const auto& gm = g.mu[f(x)][f(y)];
      if (!gm) continue;
      r.mu[x][y] = c.compose(*gm, g.functor.apply(*fm));
      const auto& fi = f.mu_inv.empty() ? std::nullopt : f.mu_inv[x][y];
      const auto& gi = g.mu_inv.empty() ? std::nullopt : g.mu_inv[f(x)][f(y)];
      if (fi && gi) r.mu_inv[x][y] = c.compose(g.functor.apply(*fi), *gi);
    }
  }
  return r;
}

namespace {

std::optional<Path> table_inverse(const Category& c, const Path& p) {
  if (p.is_identity()) return p;
  if (!c.finite()) return std::nullopt;
  const FiniteView& v = c.table();
  int e = v.eval(p);
  int i = v.inverse_of[static_cast<std::size_t>(e)];
  if (i < 0) return std::nullopt;
  return v.element[static_cast<std::size_t>(i)];
}

// Is p invertible with the claimed inverse (or, lacking one, by table)?
Tri invertible(const Category& c, const Path& p, const std::optional<Path>& inv) {
  if (p.is_identity()) return Tri::Equal;
  if (inv) {
    if (inv->src != p.tgt || inv->tgt != p.src) return Tri::Distinct;
    Tri a = c.equal(c.compose(p, *inv), c.identity(p.src));
    Tri b = c.equal(c.compose(*inv, p), c.identity(p.tgt));
    if (a == Tri::Distinct || b == Tri::Distinct) {
      // the claimed inverse is wrong; fall back to the table when possible
      if (!c.finite()) return Tri::Distinct;
    } else if (a == Tri::Equal && b == Tri::Equal) {
      return Tri::Equal;
    }
  }
  if (c.finite()) return c.table().is_iso(c.table().eval(p)) ? Tri::Equal : Tri::Distinct;
  return Tri::Unknown;
}

}  // namespace

void fill_inverses(TensorFunctor& f) {
  const Category& c = *f.cod->carrier();
  if (!f.eta_inv) f.eta_inv = table_inverse(c, f.eta);
  if (f.mu_inv.size() != f.mu.size()) f.mu_inv.assign(f.mu.size(), std::vector<std::optional<Path>>(f.mu.size()));
  for (std::size_t x = 0; x < f.mu.size(); ++x) {
    for (std::size_t y = 0; y < f.mu.size(); ++y) {
      if (f.mu[x][y] && !f.mu_inv[x][y]) f.mu_inv[x][y] = table_inverse(c, *f.mu[x][y]);
    }
  }
}

ValidityReport check_tensor_functor(const TensorFunctor& f) {
  ValidityReport rep = check_functor(f.functor);
  if (!rep.valid) return rep;
  const TensorCategory& a = *f.dom;
  const TensorCategory& b = *f.cod;
  const Category& c = *b.carrier();
  const ObjectMonoid& m = a.monoid();
  const std::string& nm = f.name;
  auto same = [&](const Path& l, const Path& r, const std::string& what) {
    if (l.src != r.src || l.tgt != r.tgt) {
      rep.fail(nm + ": " + what + " (endpoints differ)");
      return;
    }
    rep.record(c.equal(l, r), nm + ": " + what);
  };
  if (f.eta.src != b.unit() || f.eta.tgt != f(a.unit())) {
    rep.fail(nm + ": eta has wrong endpoints");
    return rep;
  }
  rep.record(invertible(c, f.eta, f.eta_inv), nm + ": eta invertible");
  if (f.mu.size() != m.size()) {
    rep.fail(nm + ": mu has the wrong size");
    return rep;
  }
  for (ObjId x = 0; x < m.size(); ++x) {
    for (ObjId y = 0; y < m.size(); ++y) {
      auto xy = m.mul(x, y);
      const auto& mu = f.mu[x][y];
      if (!xy) continue;
      auto fxfy = b.monoid().mul(f(x), f(y));
      if (!mu || !fxfy || mu->src != *fxfy || mu->tgt != f(*xy)) {
        rep.fail(nm + ": mu(" + m.name(x) + ", " + m.name(y) + ") has wrong endpoints");
        return rep;
      }
      std::optional<Path> inv;
      if (x < f.mu_inv.size()) inv = f.mu_inv[x][y];
      rep.record(invertible(c, *mu, inv), nm + ": mu(" + m.name(x) + ", " + m.name(y) + ") invertible");
    }
  }
  auto mu = [&](ObjId x, ObjId y) -> const Path& {
    const auto& p = f.mu[x][y];
    if (!p) throw Error(ErrorCode::IllDefinedProduct, "mu outside the word bound");
    return *p;
  };
  for (ObjId x = 0; x < m.size(); ++x) {
    const std::string xs = m.name(x);
    Path idfx = c.identity(f(x));
    defined([&] { same(c.compose(b.tensor(f.eta, idfx), mu(a.unit(), x)), idfx, "left unit at " + xs); });
    defined([&] { same(c.compose(b.tensor(idfx, f.eta), mu(x, a.unit())), idfx, "right unit at " + xs); });
    for (ObjId y = 0; y < m.size(); ++y) {
      const std::string ys = m.name(y);
      defined([&] {
        same(c.compose(mu(x, y), f.functor.apply(a.symmetry(x, y))), c.compose(b.symmetry(f(x), f(y)), mu(y, x)),
             "symmetry at (" + xs + ", " + ys + ")");
      });
      for (ObjId z = 0; z < m.size(); ++z) {
        defined([&] {
          ObjId xy = m.mul_or_throw(x, y), yz = m.mul_or_throw(y, z);
          Path l = c.compose(b.tensor(mu(x, y), c.identity(f(z))), mu(xy, z));
          Path r = c.compose(b.tensor(c.identity(f(x)), mu(y, z)), mu(x, yz));
          same(l, r, "associativity at (" + xs + ", " + ys + ", " + m.name(z) + ")");
        });
      }
    }
  }
  const Category& ac = *a.carrier();
  for (GenId g = 0; g < ac.num_arrows(); ++g) {
    Path pg = ac.generator(g);
    Path fg = f.functor.on_arrows[g];
    for (ObjId x = 0; x < m.size(); ++x) {
      std::string where = ac.arrow(g).name + " and " + m.name(x);
      defined([&] {
        same(c.compose(b.whisker(f(x), fg), mu(x, pg.tgt)), c.compose(mu(x, pg.src), f.functor.apply(a.whisker(x, pg))),
             "left naturality of mu at " + where);
      });
      defined([&] {
        same(c.compose(b.whisker_right(fg, f(x)), mu(pg.tgt, x)),
             c.compose(mu(pg.src, x), f.functor.apply(a.whisker_right(pg, x))), "right naturality of mu at " + where);
      });
    }
  }
  return rep;
}

ValidityReport check_monoidal(const TensorTransformation& t) {
  ValidityReport rep = check_natural(t.plain());
  const TensorFunctor& f = t.source;
  const TensorFunctor& g = t.target;
  const TensorCategory& a = *f.dom;
  const TensorCategory& b = *f.cod;
  const Category& c = *b.carrier();
  const ObjectMonoid& m = a.monoid();
  rep.record(c.equal(c.compose(f.eta, t.components[a.unit()]), g.eta), t.name + ": unit condition");
  for (ObjId x = 0; x < m.size(); ++x) {
    for (ObjId y = 0; y < m.size(); ++y) {
      auto xy = m.mul(x, y);
      if (!xy || !f.mu[x][y] || !g.mu[x][y]) continue;
      defined([&] {
        Path l = c.compose(*f.mu[x][y], t.components[*xy]);
        Path r = c.compose(b.tensor(t.components[x], t.components[y]), *g.mu[x][y]);
        rep.record(c.equal(l, r), t.name + ": multiplication condition at (" + m.name(x) + ", " + m.name(y) + ")");
      });
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// tensor table

int TensorTable::whisker_right(int f, ObjId b) const {
  const auto s = view->src[static_cast<std::size_t>(f)];
  const auto d = view->tgt[static_cast<std::size_t>(f)];
  int l = sigma[s][b], w = whisker[b][static_cast<std::size_t>(f)], r = sigma[b][d];
  if (l < 0 || w < 0 || r < 0) return -1;
  return view->compose(view->compose(l, w), r);
}

int TensorTable::tensor(int f, int g) const {
  int l = whisker_right(f, view->src[static_cast<std::size_t>(g)]);
  int r = whisker[view->tgt[static_cast<std::size_t>(f)]][static_cast<std::size_t>(g)];
  if (l < 0 || r < 0) return -1;
  return view->compose(l, r);
}

TensorTable tensor_table(const TensorCategory& t) {
  TensorTable tt;
  const FiniteView& v = t.carrier()->table();
  tt.view = &v;
  const ObjectMonoid& m = t.monoid();
  tt.obj_mul = m.raw_table();
  tt.whisker.assign(m.size(), std::vector<int>(v.size(), -1));
  tt.sigma.assign(m.size(), std::vector<int>(m.size(), -1));
  for (ObjId a = 0; a < m.size(); ++a) {
    for (std::size_t e = 0; e < v.size(); ++e) {
      defined([&] { tt.whisker[a][e] = v.eval(t.whisker(a, v.element[e])); });
    }
    for (ObjId b = 0; b < m.size(); ++b) {
      defined([&] { tt.sigma[a][b] = v.eval(t.symmetry(a, b)); });
    }
  }
  return tt;
}

}  // namespace catcolim

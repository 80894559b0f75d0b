#include "catcolim/colimits.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace catcolim {

const char* kind_name(Kind k) {
  switch (k) {
    case Kind::Coproduct: return "coproduct";
    case Kind::Coinserter: return "coinserter";
    case Kind::Coequifier: return "coequifier";
    case Kind::Coinverter: return "coinverter";
    case Kind::Coequalizer: return "coequalizer";
    case Kind::Pushout: return "pushout";
    case Kind::Directed: return "directed";
    case Kind::TensorWith: return "tensor-with";
    case Kind::CoinserterInto: return "coinserter-into";
    case Kind::CoisoinserterInto: return "coisoinserter-into";
    case Kind::CoequifierInto: return "coequifier-into";
    case Kind::MonoidalCoinserter: return "monoidal-coinserter";
  }
  return "?";
}

std::optional<Kind> kind_from_name(std::string_view s) {
  for (Kind k : {Kind::Coproduct, Kind::Coinserter, Kind::Coequifier, Kind::Coinverter, Kind::Coequalizer,
                 Kind::Pushout, Kind::Directed, Kind::TensorWith, Kind::CoinserterInto, Kind::CoisoinserterInto,
                 Kind::CoequifierInto, Kind::MonoidalCoinserter}) {
    if (s == kind_name(k)) return k;
  }
  return std::nullopt;
}

std::string fresh_arrow_name(const Quiver& q, const std::string& want) {
  std::string name = want;
  auto taken = [&](const std::string& n) {
    return std::any_of(q.arrows.begin(), q.arrows.end(), [&](const Arrow& a) { return a.name == n; });
  };
  while (taken(name)) name += "'";
  return name;
}

std::string fresh_object_name(const Quiver& q, const std::string& want) {
  std::string name = want;
  while (std::find(q.objects.begin(), q.objects.end(), name) != q.objects.end()) name += "'";
  return name;
}

Functor retarget(const Functor& f, const CategoryPtr& cod) {
  Functor out = f;
  out.cod = cod;
  return out;
}

namespace {

Transformation retarget(const Transformation& t, const CategoryPtr& cod) {
  Transformation out = t;
  out.source.cod = cod;
  out.target.cod = cod;
  return out;
}

// the functor B -> C for C an extension of B with the same objects
Functor inclusion(const CategoryPtr& b, const CategoryPtr& c, const std::string& name) {
  Functor p = identity_functor(b);
  p.cod = c;
  p.name = name;
  return p;
}

std::vector<GenRole> base_roles(const Category& b) {
  std::vector<GenRole> roles(b.num_arrows());
  for (GenId g = 0; g < b.num_arrows(); ++g) roles[g] = GenRole{GenRole::Base, 0, g, 0, 0};
  return roles;
}

Path append(Path p, const Path& q) {
  p.arrows.insert(p.arrows.end(), q.arrows.begin(), q.arrows.end());
  p.tgt = q.tgt;
  return p;
}

Path single(GenId g, ObjId s, ObjId t) { return Path{s, t, {g}}; }

void require_parallel(const Functor& f, const Functor& g) {
  if (f.dom != g.dom || f.cod != g.cod) throw Error(ErrorCode::NotParallel, f.name + " and " + g.name + " are not parallel");
}

}  // namespace

ConstructionResult coproduct(const CategoryPtr& a, const CategoryPtr& b) {
  ConstructionResult r;
  r.kind = Kind::Coproduct;
  r.in_categories = {a, b};
  std::string pa = a->name(), pb = b->name();
  if (pa == pb) {
    pa += ".1";
    pb += ".2";
  }
  Quiver q;
  std::vector<Relation> rels;
  std::vector<ObjId> oa, ob;
  for (ObjId x = 0; x < a->num_objects(); ++x) {
    oa.push_back(static_cast<ObjId>(q.objects.size()));
    q.objects.push_back(pa + ":" + a->object_name(x));
  }
  for (ObjId x = 0; x < b->num_objects(); ++x) {
    ob.push_back(static_cast<ObjId>(q.objects.size()));
    q.objects.push_back(pb + ":" + b->object_name(x));
  }
  auto copy = [&](const CategoryPtr& c, const std::vector<ObjId>& om, const std::string& prefix, std::size_t src) {
    GenId base = static_cast<GenId>(q.arrows.size());
    for (GenId g = 0; g < c->num_arrows(); ++g) {
      const Arrow& ar = c->arrow(g);
      q.arrows.push_back({prefix + ":" + ar.name, om[ar.src], om[ar.tgt]});
      r.roles.push_back(GenRole{GenRole::Base, src, g, 0, 0});
    }
    auto tr = [&](const Path& p) {
      Path out{om[p.src], om[p.tgt], {}};
      for (GenId g : p.arrows) out.arrows.push_back(base + g);
      return out;
    };
    for (const Relation& rel : c->relations()) rels.push_back({tr(rel.lhs), tr(rel.rhs)});
    return base;
  };
  GenId ba = copy(a, oa, pa, 0);
  GenId bb = copy(b, ob, pb, 1);
  r.target = make_category(a->name() + "+" + b->name(), std::move(q), std::move(rels), Backend::Rewrite, a->bounds());
  auto leg = [&](const CategoryPtr& c, const std::vector<ObjId>& om, GenId base, const std::string& nm) {
    Functor f{nm, c, r.target, om, {}};
    for (GenId g = 0; g < c->num_arrows(); ++g) f.on_arrows.push_back(r.target->generator(base + g));
    return f;
  };
  r.universal = {leg(a, oa, ba, "i1"), leg(b, ob, bb, "i2")};
  return r;
}

ConstructionResult coinserter(const Functor& f, const Functor& g, const std::string& tag) {
  require_parallel(f, g);
  const CategoryPtr& a = f.dom;
  const CategoryPtr& b = f.cod;
  ConstructionResult r;
  r.kind = Kind::Coinserter;
  r.in_functors = {f, g};
  r.roles = base_roles(*b);
  Quiver q = b->quiver();
  std::vector<Relation> rels = b->relations();
  std::vector<Path> delta;
  for (ObjId x = 0; x < a->num_objects(); ++x) {
    GenId id = static_cast<GenId>(q.arrows.size());
    q.arrows.push_back({fresh_arrow_name(q, tag + "<" + a->object_name(x) + ">"), f(x), g(x)});
    r.roles.push_back(GenRole{GenRole::Cell, 0, 0, x, 0});
    delta.push_back(single(id, f(x), g(x)));
  }
  for (GenId h = 0; h < a->num_arrows(); ++h) {
    const Arrow& ar = a->arrow(h);
    rels.push_back({append(delta[ar.src], g.on_arrows[h]), append(f.on_arrows[h], delta[ar.tgt])});
  }
  r.target = make_category("Coins(" + f.name + "," + g.name + ")", std::move(q), std::move(rels), Backend::Rewrite, b->bounds());
  Functor p = inclusion(b, r.target, "P");
  r.universal = {p};
  r.cells = {Transformation{"delta", compose(f, p), compose(g, p), delta}};
  r.stages = {r.target};
  return r;
}

ConstructionResult coequifier(const Transformation& alpha, const Transformation& beta) {
  require_parallel(alpha.source, beta.source);
  require_parallel(alpha.target, beta.target);
  if (alpha.source.on_objects != beta.source.on_objects || alpha.target.on_objects != beta.target.on_objects) {
    throw Error(ErrorCode::NotParallel, alpha.name + " and " + beta.name + " are not parallel");
  }
  const CategoryPtr& b = alpha.source.cod;
  ConstructionResult r;
  r.kind = Kind::Coequifier;
  r.in_cells = {alpha, beta};
  r.in_functors = {alpha.source, alpha.target};
  r.roles = base_roles(*b);
  std::vector<Relation> rels = b->relations();
  for (std::size_t x = 0; x < alpha.components.size(); ++x) {
    if (alpha.components[x] != beta.components[x]) rels.push_back({alpha.components[x], beta.components[x]});
  }
  r.target = make_category("Coeq(" + alpha.name + "," + beta.name + ")", b->quiver(), std::move(rels), Backend::Rewrite, b->bounds());
  r.universal = {inclusion(b, r.target, "P")};
  r.stages = {r.target};
  return r;
}

ConstructionResult coinverter(const Transformation& alpha) {
  const Functor& f = alpha.source;
  const Functor& g = alpha.target;
  const CategoryPtr& b = f.cod;
  // reverse cells b_x : G x -> F x, then force them inverse to alpha
  ConstructionResult s1 = coinserter(g, f, "b");
  const CategoryPtr& c1 = s1.target;
  Functor p1 = s1.universal[0];
  const Transformation& rev = s1.cells[0];
  Transformation left{"alpha;b", compose(f, p1), compose(f, p1), {}};
  Transformation right{"b;alpha", compose(g, p1), compose(g, p1), {}};
  for (ObjId x = 0; x < f.dom->num_objects(); ++x) {
    left.components.push_back(append(alpha.components[x], rev.components[x]));
    right.components.push_back(append(rev.components[x], alpha.components[x]));
  }
  ConstructionResult s2 = coequifier(left, identity_transformation(left.source));
  Transformation right2 = retarget(right, s2.target);
  ConstructionResult s3 = coequifier(right2, identity_transformation(right2.source));

  ConstructionResult r;
  r.kind = Kind::Coinverter;
  r.in_cells = {alpha};
  r.in_functors = {f, g};
  r.target = s3.target;
  r.roles = s1.roles;
  for (auto& role : r.roles) {
    if (role.type == GenRole::Cell) role.type = GenRole::CellInverse;
  }
  Functor p = inclusion(b, r.target, "P");
  r.universal = {p};
  Transformation fwd{"alpha", compose(f, p), compose(g, p), alpha.components};
  Transformation inv{"alpha^-1", compose(g, p), compose(f, p), rev.components};
  r.cells = {fwd, inv};
  r.stages = {c1, s2.target, s3.target};
  return r;
}

ConstructionResult coequalizer(const Functor& f, const Functor& g, Route route) {
  require_parallel(f, g);
  const CategoryPtr& b = f.cod;
  ConstructionResult r;
  r.kind = Kind::Coequalizer;
  r.route = route;
  r.in_functors = {f, g};
  if (route == Route::Composite) {
    ConstructionResult s1 = coinserter(f, g, "d");
    ConstructionResult s2 = coinverter(s1.cells[0]);
    r.target = s2.target;
    r.roles = s2.roles;
    for (std::size_t i = 0; i < s1.roles.size(); ++i) r.roles[i] = s1.roles[i];
    Functor p = inclusion(b, r.target, "P");
    r.universal = {p};
    r.cells = {Transformation{"delta", compose(f, p), compose(g, p), s1.cells[0].components},
               Transformation{"delta^-1", compose(g, p), compose(f, p), s2.cells[1].components}};
    r.stages = {s1.target};
    r.stages.insert(r.stages.end(), s2.stages.begin(), s2.stages.end());
    return r;
  }
  const CategoryPtr& a = f.dom;
  r.roles = base_roles(*b);
  Quiver q = b->quiver();
  std::vector<Relation> rels = b->relations();
  std::vector<Path> fwd, inv;
  for (ObjId x = 0; x < a->num_objects(); ++x) {
    GenId id = static_cast<GenId>(q.arrows.size());
    q.arrows.push_back({fresh_arrow_name(q, "d<" + a->object_name(x) + ">"), f(x), g(x)});
    r.roles.push_back(GenRole{GenRole::Cell, 0, 0, x, 0});
    fwd.push_back(single(id, f(x), g(x)));
  }
  for (ObjId x = 0; x < a->num_objects(); ++x) {
    GenId id = static_cast<GenId>(q.arrows.size());
    q.arrows.push_back({fresh_arrow_name(q, "d'<" + a->object_name(x) + ">"), g(x), f(x)});
    r.roles.push_back(GenRole{GenRole::CellInverse, 0, 0, x, 0});
    inv.push_back(single(id, g(x), f(x)));
  }
  for (GenId h = 0; h < a->num_arrows(); ++h) {
    const Arrow& ar = a->arrow(h);
    rels.push_back({append(fwd[ar.src], g.on_arrows[h]), append(f.on_arrows[h], fwd[ar.tgt])});
  }
  for (ObjId x = 0; x < a->num_objects(); ++x) {
    rels.push_back({append(fwd[x], inv[x]), Path{f(x), f(x), {}}});
    rels.push_back({append(inv[x], fwd[x]), Path{g(x), g(x), {}}});
  }
  r.target = make_category("Coeq(" + f.name + "," + g.name + ")", std::move(q), std::move(rels), Backend::Rewrite, b->bounds());
  Functor p = inclusion(b, r.target, "P");
  r.universal = {p};
  r.cells = {Transformation{"delta", compose(f, p), compose(g, p), fwd},
             Transformation{"delta^-1", compose(g, p), compose(f, p), inv}};
  r.stages = {r.target};
  return r;
}

ConstructionResult pushout(const Functor& f, const Functor& g) {
  if (f.dom != g.dom) throw Error(ErrorCode::NotParallel, "pushout legs need a common domain");
  ConstructionResult cp = coproduct(f.cod, g.cod);
  Functor fi = compose(f, cp.universal[0]);
  Functor gi = compose(g, cp.universal[1]);
  ConstructionResult ce = coequalizer(fi, gi, Route::Composite);
  ConstructionResult r;
  r.kind = Kind::Pushout;
  r.in_functors = {f, g};
  r.in_categories = {f.cod, g.cod};
  r.target = ce.target;
  r.roles = ce.roles;
  for (std::size_t i = 0; i < cp.roles.size(); ++i) r.roles[i] = cp.roles[i];
  const Functor& p = ce.universal[0];
  Functor ua = compose(cp.universal[0], p);
  Functor ub = compose(cp.universal[1], p);
  ua.name = "i1";
  ub.name = "i2";
  r.universal = {ua, ub};
  Transformation fwd = ce.cells[0], inv = ce.cells[1];
  fwd.source = compose(f, ua);
  fwd.target = compose(g, ub);
  inv.source = fwd.target;
  inv.target = fwd.source;
  r.cells = {fwd, inv};
  r.stages = {cp.target};
  r.stages.insert(r.stages.end(), ce.stages.begin(), ce.stages.end());
  return r;
}

ConstructionResult directed_colimit(const Diagram& d) {
  const std::size_t n = d.index.size();
  if (n == 0 || d.categories.size() != n) throw Error(ErrorCode::IncoherentDiagram, "diagram needs one category per index");
  // transition functors along all chains; every chain must agree
  std::vector<std::vector<std::optional<Functor>>> trans(n, std::vector<std::optional<Functor>>(n));
  for (std::size_t i = 0; i < n; ++i) trans[i][i] = identity_functor(d.categories[i]);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (const auto& [ij, f] : d.functors) {
    auto [i, j] = ij;
    if (f.dom != d.categories[i] || f.cod != d.categories[j]) {
      throw Error(ErrorCode::IncoherentDiagram, "functor " + f.name + " has the wrong type");
    }
    edges.push_back(ij);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [ij, f] : d.functors) {
      auto [j, k] = ij;
      for (std::size_t i = 0; i < n; ++i) {
        if (!trans[i][j]) continue;
        Functor c = compose(*trans[i][j], f);
        if (!trans[i][k]) {
          trans[i][k] = c;
          changed = true;
        } else if (functors_equal(*trans[i][k], c) != Tri::Equal) {
          throw Error(ErrorCode::IncoherentDiagram,
                      "transition functors " + d.index[i] + " -> " + d.index[k] + " do not agree");
        }
        if (i == k && j != k) throw Error(ErrorCode::IncoherentDiagram, "order has a cycle");
      }
    }
  }
  std::optional<std::size_t> top;
  for (std::size_t t = 0; t < n && !top; ++t) {
    bool all = true;
    for (std::size_t i = 0; i < n; ++i) all = all && trans[i][t].has_value();
    if (all) top = t;
  }
  if (!top) throw Error(ErrorCode::IncoherentDiagram, "index poset is not directed");
  ConstructionResult r;
  r.kind = Kind::Directed;
  r.target = d.categories[*top];
  r.in_categories = d.categories;
  for (std::size_t i = 0; i < n; ++i) {
    Functor u = *trans[i][*top];
    u.name = "u<" + d.index[i] + ">";
    r.universal.push_back(u);
  }
  r.roles = base_roles(*r.target);
  for (auto& role : r.roles) role.source = *top;
  return r;
}

ConstructionResult tensor_with(const CategoryPtr& x, const CategoryPtr& a) {
  ProductCategory pc = product(x, a, x->name() + "(x)" + a->name());
  ConstructionResult r;
  r.kind = Kind::TensorWith;
  r.in_categories = {x, a};
  r.target = pc.category;
  r.roles.resize(pc.category->num_arrows());
  for (GenId g = 0; g < x->num_arrows(); ++g) {
    for (ObjId y = 0; y < a->num_objects(); ++y) r.roles[pc.left_gen[g][y]] = GenRole{GenRole::Base, 0, g, y, 0};
  }
  for (ObjId o = 0; o < x->num_objects(); ++o) {
    for (GenId h = 0; h < a->num_arrows(); ++h) r.roles[pc.right_gen[o][h]] = GenRole{GenRole::Base, 1, h, o, 0};
  }
  for (ObjId o = 0; o < x->num_objects(); ++o) {
    Functor f{"i<" + x->object_name(o) + ">", a, r.target, {}, {}};
    for (ObjId y = 0; y < a->num_objects(); ++y) f.on_objects.push_back(pc.object(o, y));
    for (GenId h = 0; h < a->num_arrows(); ++h) f.on_arrows.push_back(pc.right(o, a->generator(h)));
    r.universal.push_back(f);
  }
  for (GenId g = 0; g < x->num_arrows(); ++g) {
    const Arrow& ar = x->arrow(g);
    Transformation t{"i<" + ar.name + ">", r.universal[ar.src], r.universal[ar.tgt], {}};
    for (ObjId y = 0; y < a->num_objects(); ++y) t.components.push_back(pc.left(x->generator(g), y));
    r.cells.push_back(t);
  }
  return r;
}

Functor factor_through(const ConstructionResult& c, const Cocone& q) {
  if (q.legs.empty()) throw Error(ErrorCode::ConditionsNotSatisfied, "cocone has no legs");
  const CategoryPtr& t = q.legs[0].cod;
  Functor k{"K", c.target, t, {}, {}};
  k.on_objects.assign(c.target->num_objects(), 0);
  std::vector<char> set(c.target->num_objects(), 0);
  const std::size_t nlegs = std::min(q.legs.size(), c.universal.size());
  for (std::size_t s = 0; s < nlegs; ++s) {
    const Functor& u = c.universal[s];
    for (ObjId x = 0; x < u.dom->num_objects(); ++x) {
      ObjId y = u(x);
      if (set[y] && k.on_objects[y] != q.legs[s](x)) {
        throw Error(ErrorCode::ConditionsNotSatisfied, "legs disagree on object " + c.target->object_name(y));
      }
      k.on_objects[y] = q.legs[s](x);
      set[y] = 1;
    }
  }
  if (std::find(set.begin(), set.end(), 0) != set.end()) {
    throw Error(ErrorCode::ConditionsNotSatisfied, "cocone does not cover every object");
  }
  for (GenId g = 0; g < c.target->num_arrows(); ++g) {
    const GenRole& role = c.roles[g];
    switch (role.type) {
      case GenRole::Base:
        k.on_arrows.push_back(q.legs.at(role.source).on_arrows.at(role.gen));
        break;
      case GenRole::Cell:
        if (!q.cell) throw Error(ErrorCode::ConditionsNotSatisfied, "cocone lacks its cell");
        k.on_arrows.push_back(q.cell->components.at(role.index));
        break;
      case GenRole::CellInverse:
        if (!q.inverse) throw Error(ErrorCode::ConditionsNotSatisfied, "cocone cell is not invertible");
        k.on_arrows.push_back(q.inverse->components.at(role.index));
        break;
    }
  }
  ValidityReport rep = check_functor(k);
  if (!rep.valid) {
    throw Error(ErrorCode::ConditionsNotSatisfied, rep.problems.empty() ? "comparison is not a functor" : rep.problems.front());
  }
  if (rep.unknown) throw Error(ErrorCode::UnknownEquality, "comparison functor could not be verified");
  return k;
}

ConstructionResult drop_relation(const ConstructionResult& c, std::size_t which) {
  ConstructionResult r = c;
  std::vector<Relation> rels = c.target->relations();
  rels.erase(rels.begin() + static_cast<long>(which));
  r.target = make_category(c.target->name() + "-", c.target->quiver(), std::move(rels), Backend::Rewrite, c.target->bounds());
  for (auto& u : r.universal) u.cod = r.target;
  for (auto& t : r.cells) t = retarget(t, r.target);
  return r;
}

}  // namespace catcolim

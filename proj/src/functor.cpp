#include "catcolim/functor.hpp"

#include <algorithm>
#include <numeric>

#include "catcolim/search.hpp"

namespace catcolim {

void ValidityReport::record(Tri t, const std::string& what) {
  if (t == Tri::Distinct) fail(what);
  if (t == Tri::Unknown) {
    ++unknown;
    problems.push_back("undecided: " + what);
  }
}

void ValidityReport::merge(const ValidityReport& other) {
  valid = valid && other.valid;
  unknown += other.unknown;
  problems.insert(problems.end(), other.problems.begin(), other.problems.end());
}

Path Functor::apply(const Path& p) const {
  Path out{on_objects[p.src], on_objects[p.tgt], {}};
  for (GenId g : p.arrows) {
    const Path& img = on_arrows[g];
    out.arrows.insert(out.arrows.end(), img.arrows.begin(), img.arrows.end());
  }
  return cod->normalize(out);
}

Functor identity_functor(const CategoryPtr& c) {
  Functor f{"id", c, c, {}, {}};
  for (ObjId x = 0; x < c->num_objects(); ++x) f.on_objects.push_back(x);
  for (GenId g = 0; g < c->num_arrows(); ++g) f.on_arrows.push_back(c->generator(g));
  return f;
}

Functor compose(const Functor& f, const Functor& g) {
  Functor h{g.name + "." + f.name, f.dom, g.cod, {}, {}};
  for (ObjId x : f.on_objects) h.on_objects.push_back(g.on_objects[x]);
  for (const Path& p : f.on_arrows) h.on_arrows.push_back(g.apply(p));
  return h;
}

Functor constant_functor(const CategoryPtr& dom, const CategoryPtr& cod, ObjId x) {
  Functor f{"const", dom, cod, std::vector<ObjId>(dom->num_objects(), x), {}};
  for (GenId g = 0; g < dom->num_arrows(); ++g) f.on_arrows.push_back(cod->identity(x));
  return f;
}

ValidityReport check_functor(const Functor& f) {
  ValidityReport rep;
  if (f.on_objects.size() != f.dom->num_objects() || f.on_arrows.size() != f.dom->num_arrows()) {
    rep.fail("functor " + f.name + " is not defined on every object and generator");
    return rep;
  }
  for (ObjId x : f.on_objects) {
    if (x >= f.cod->num_objects()) {
      rep.fail("object image out of range");
      return rep;
    }
  }
  for (GenId g = 0; g < f.dom->num_arrows(); ++g) {
    const Arrow& a = f.dom->arrow(g);
    const Path& img = f.on_arrows[g];
    try {
      f.cod->check_path(img);
    } catch (const Error&) {
      rep.fail("image of " + a.name + " is not a path");
      continue;
    }
    if (img.src != f.on_objects[a.src] || img.tgt != f.on_objects[a.tgt]) {
      rep.fail("image of " + a.name + " has wrong endpoints");
    }
  }
  if (!rep.valid) return rep;
  for (const Relation& r : f.dom->relations()) {
    rep.record(f.cod->equal(f.apply(r.lhs), f.apply(r.rhs)), "relation " + f.dom->format_relation(r));
  }
  return rep;
}

ValidityReport check_natural(const Transformation& t) {
  ValidityReport rep;
  const Functor& F = t.source;
  const Functor& G = t.target;
  if (F.dom != G.dom || F.cod != G.cod) {
    rep.fail("transformation " + t.name + " between functors of different type");
    return rep;
  }
  const auto& cod = F.cod;
  if (t.components.size() != F.dom->num_objects()) {
    rep.fail("transformation " + t.name + " lacks components");
    return rep;
  }
  for (ObjId x = 0; x < F.dom->num_objects(); ++x) {
    const Path& c = t.components[x];
    try {
      cod->check_path(c);
    } catch (const Error&) {
      rep.fail("component at " + F.dom->object_name(x) + " is not a path");
      continue;
    }
    if (c.src != F(x) || c.tgt != G(x)) rep.fail("component at " + F.dom->object_name(x) + " has wrong endpoints");
  }
  if (!rep.valid) return rep;
  for (GenId g = 0; g < F.dom->num_arrows(); ++g) {
    const Arrow& a = F.dom->arrow(g);
    Path lhs = cod->compose(t.components[a.src], G.on_arrows[g]);
    Path rhs = cod->compose(F.on_arrows[g], t.components[a.tgt]);
    rep.record(cod->equal(lhs, rhs), "naturality at " + a.name);
  }
  return rep;
}

Tri functors_equal(const Functor& f, const Functor& g) {
  if (f.on_objects != g.on_objects) return Tri::Distinct;
  Tri out = Tri::Equal;
  for (GenId a = 0; a < f.dom->num_arrows(); ++a) {
    Tri t = f.cod->equal(f.on_arrows[a], g.on_arrows[a]);
    if (t == Tri::Distinct) return t;
    if (t == Tri::Unknown) out = t;
  }
  return out;
}

Transformation whisker(const Functor& h, const Transformation& t) {
  Transformation out{h.name + "*" + t.name, compose(t.source, h), compose(t.target, h), {}};
  for (const Path& c : t.components) out.components.push_back(h.apply(c));
  return out;
}

Transformation whisker(const Transformation& t, const Functor& k) {
  Transformation out{t.name + "*" + k.name, compose(k, t.source), compose(k, t.target), {}};
  for (ObjId x = 0; x < k.dom->num_objects(); ++x) out.components.push_back(t.components[k(x)]);
  return out;
}

Transformation vertical(const Transformation& s, const Transformation& t) {
  Transformation out{s.name + ";" + t.name, s.source, t.target, {}};
  for (std::size_t x = 0; x < s.components.size(); ++x) {
    out.components.push_back(s.source.cod->compose(s.components[x], t.components[x]));
  }
  return out;
}

Transformation identity_transformation(const Functor& f) {
  Transformation out{"id", f, f, {}};
  for (ObjId x = 0; x < f.dom->num_objects(); ++x) out.components.push_back(f.cod->identity(f(x)));
  return out;
}

// ---------------------------------------------------------------------------
// functors into finite categories

int eval(const FiniteView& t, const TableFunctor& f, const Path& p) {
  int cur = t.identity[f.objects[p.src]];
  for (GenId g : p.arrows) cur = t.compose(cur, f.arrows[g]);
  return cur;
}

bool table_functor_valid(const Category& a, const FiniteView& t, const TableFunctor& f) {
  for (GenId g = 0; g < a.num_arrows(); ++g) {
    const Arrow& ar = a.arrow(g);
    int e = f.arrows[g];
    if (e < 0 || t.src[e] != f.objects[ar.src] || t.tgt[e] != f.objects[ar.tgt]) return false;
  }
  for (const Relation& r : a.relations()) {
    if (eval(t, f, r.lhs) != eval(t, f, r.rhs)) return false;
  }
  return true;
}

std::vector<TableFunctor> enumerate_table_functors(const Category& a, const Category& tc) {
  const FiniteView& t = tc.table();
  const std::size_t no = a.num_objects();
  Search s;
  std::vector<int> all_objects(t.num_objects);
  std::iota(all_objects.begin(), all_objects.end(), 0);
  for (std::size_t x = 0; x < no; ++x) s.add_fixed(all_objects);
  for (GenId g = 0; g < a.num_arrows(); ++g) {
    const Arrow& ar = a.arrow(g);
    s.add_var([&t, ar](const Search::Assignment& as) {
      return t.homset(static_cast<ObjId>(as[ar.src]), static_cast<ObjId>(as[ar.tgt]));
    });
  }
  auto var_of = [&](const Path& p) {
    std::size_t v = p.src;
    for (GenId g : p.arrows) v = std::max(v, no + g);
    return v;
  };
  for (const Relation& r : a.relations()) {
    std::size_t ready = std::max(var_of(r.lhs), var_of(r.rhs));
    s.add_constraint(ready, [&t, r, no](const Search::Assignment& as) {
      auto ev = [&](const Path& p) {
        int cur = t.identity[static_cast<std::size_t>(as[p.src])];
        for (GenId g : p.arrows) cur = t.compose(cur, as[no + g]);
        return cur;
      };
      return ev(r.lhs) == ev(r.rhs);
    });
  }
  std::vector<TableFunctor> out;
  s.run([&](const Search::Assignment& as) {
    TableFunctor f;
    for (std::size_t x = 0; x < no; ++x) f.objects.push_back(static_cast<ObjId>(as[x]));
    for (GenId g = 0; g < a.num_arrows(); ++g) f.arrows.push_back(as[no + g]);
    out.push_back(std::move(f));
    return true;
  });
  return out;
}

Functor to_functor(const CategoryPtr& a, const CategoryPtr& t, const TableFunctor& f, std::string name) {
  const FiniteView& v = t->table();
  Functor out{std::move(name), a, t, f.objects, {}};
  for (int e : f.arrows) out.on_arrows.push_back(v.element[static_cast<std::size_t>(e)]);
  return out;
}

TableFunctor to_table_functor(const Functor& f) {
  const FiniteView& v = f.cod->table();
  TableFunctor out{f.on_objects, {}};
  for (const Path& p : f.on_arrows) out.arrows.push_back(v.eval(p));
  return out;
}

std::vector<Functor> enumerate_functors(const CategoryPtr& a, const CategoryPtr& t) {
  std::vector<Functor> out;
  for (const auto& tf : enumerate_table_functors(*a, *t)) out.push_back(to_functor(a, t, tf));
  return out;
}

std::vector<Transformation> enumerate_transformations(const Functor& f, const Functor& g) {
  const FiniteView& t = f.cod->table();
  TableFunctor tf = to_table_functor(f);
  TableFunctor tg = to_table_functor(g);
  const auto& dom = *f.dom;
  Search s;
  for (ObjId x = 0; x < dom.num_objects(); ++x) s.add_fixed(t.homset(f(x), g(x)));
  for (GenId a = 0; a < dom.num_arrows(); ++a) {
    const Arrow& ar = dom.arrow(a);
    s.add_constraint(std::max(ar.src, ar.tgt), [&t, &tf, &tg, ar, a](const Search::Assignment& as) {
      return t.compose(as[ar.src], tg.arrows[a]) == t.compose(tf.arrows[a], as[ar.tgt]);
    });
  }
  std::vector<Transformation> out;
  s.run([&](const Search::Assignment& as) {
    Transformation tr{"", f, g, {}};
    for (ObjId x = 0; x < dom.num_objects(); ++x) tr.components.push_back(t.element[static_cast<std::size_t>(as[x])]);
    out.push_back(std::move(tr));
    return true;
  });
  return out;
}

// ---------------------------------------------------------------------------

EquivalenceReport check_equivalence(const Functor& f) {
  const FiniteView& d = f.dom->table();
  const FiniteView& c = f.cod->table();
  EquivalenceReport rep;
  rep.fully_faithful = true;
  const std::size_t n = f.dom->num_objects();
  for (ObjId x = 0; x < n && rep.fully_faithful; ++x) {
    for (ObjId y = 0; y < n && rep.fully_faithful; ++y) {
      const auto& src = d.homset(x, y);
      const auto& dst = c.homset(f(x), f(y));
      if (src.size() != dst.size()) {
        rep.fully_faithful = false;
        break;
      }
      std::vector<int> images;
      for (int e : src) images.push_back(c.eval(f.apply(d.element[static_cast<std::size_t>(e)])));
      std::sort(images.begin(), images.end());
      images.erase(std::unique(images.begin(), images.end()), images.end());
      if (images.size() != dst.size()) rep.fully_faithful = false;
    }
  }
  rep.essentially_surjective = true;
  for (ObjId y = 0; y < f.cod->num_objects(); ++y) {
    bool hit = false;
    for (ObjId x = 0; x < n && !hit; ++x) {
      for (int e : c.homset(f(x), y)) {
        if (c.is_iso(e)) {
          hit = true;
          break;
        }
      }
    }
    if (!hit) {
      rep.essentially_surjective = false;
      break;
    }
  }
  return rep;
}

std::vector<std::vector<ObjId>> pi0(const Category& c) {
  std::vector<ObjId> parent(c.num_objects());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](ObjId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (GenId g = 0; g < c.num_arrows(); ++g) {
    ObjId a = find(c.arrow(g).src), b = find(c.arrow(g).tgt);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::vector<ObjId>> comps;
  std::vector<int> slot(c.num_objects(), -1);
  for (ObjId x = 0; x < c.num_objects(); ++x) {
    ObjId r = find(x);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(comps.size());
      comps.emplace_back();
    }
    comps[static_cast<std::size_t>(slot[r])].push_back(x);
  }
  return comps;
}

// ---------------------------------------------------------------------------

std::string pair_name(const std::string& a, const std::string& b) { return "(" + a + "," + b + ")"; }

Path ProductCategory::left(const Path& p, ObjId b) const {
  Path out{object(p.src, b), object(p.tgt, b), {}};
  for (GenId g : p.arrows) out.arrows.push_back(left_gen[g][b]);
  return out;
}

Path ProductCategory::right(ObjId a, const Path& p) const {
  Path out{object(a, p.src), object(a, p.tgt), {}};
  for (GenId h : p.arrows) out.arrows.push_back(right_gen[a][h]);
  return out;
}

ProductCategory product(const CategoryPtr& a, const CategoryPtr& b, const std::string& name) {
  ProductCategory pc;
  pc.left_objects = a->num_objects();
  pc.right_objects = b->num_objects();
  Quiver q;
  for (ObjId x = 0; x < a->num_objects(); ++x) {
    for (ObjId y = 0; y < b->num_objects(); ++y) q.objects.push_back(pair_name(a->object_name(x), b->object_name(y)));
  }
  pc.left_gen.assign(a->num_arrows(), std::vector<GenId>(b->num_objects()));
  pc.right_gen.assign(a->num_objects(), std::vector<GenId>(b->num_arrows()));
  for (GenId g = 0; g < a->num_arrows(); ++g) {
    const Arrow& ar = a->arrow(g);
    for (ObjId y = 0; y < b->num_objects(); ++y) {
      pc.left_gen[g][y] = static_cast<GenId>(q.arrows.size());
      q.arrows.push_back({pair_name(ar.name, b->object_name(y)), pc.object(ar.src, y), pc.object(ar.tgt, y)});
    }
  }
  for (ObjId x = 0; x < a->num_objects(); ++x) {
    for (GenId h = 0; h < b->num_arrows(); ++h) {
      const Arrow& ar = b->arrow(h);
      pc.right_gen[x][h] = static_cast<GenId>(q.arrows.size());
      q.arrows.push_back({pair_name(a->object_name(x), ar.name), pc.object(x, ar.src), pc.object(x, ar.tgt)});
    }
  }
  std::vector<Relation> rels;
  for (const Relation& r : a->relations()) {
    for (ObjId y = 0; y < b->num_objects(); ++y) rels.push_back({pc.left(r.lhs, y), pc.left(r.rhs, y)});
  }
  for (const Relation& r : b->relations()) {
    for (ObjId x = 0; x < a->num_objects(); ++x) rels.push_back({pc.right(x, r.lhs), pc.right(x, r.rhs)});
  }
  for (GenId g = 0; g < a->num_arrows(); ++g) {
    const Arrow& ag = a->arrow(g);
    for (GenId h = 0; h < b->num_arrows(); ++h) {
      const Arrow& bh = b->arrow(h);
      Path lhs = pc.left(a->generator(g), bh.src);
      lhs.arrows.push_back(pc.right_gen[ag.tgt][h]);
      lhs.tgt = pc.object(ag.tgt, bh.tgt);
      Path rhs = pc.right(ag.src, b->generator(h));
      rhs.arrows.push_back(pc.left_gen[g][bh.tgt]);
      rhs.tgt = pc.object(ag.tgt, bh.tgt);
      rels.push_back({lhs, rhs});
    }
  }
  std::string nm = name.empty() ? a->name() + "x" + b->name() : name;
  pc.category = make_category(nm, std::move(q), std::move(rels), Backend::Rewrite, a->bounds());
  return pc;
}

}  // namespace catcolim

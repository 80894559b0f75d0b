#include "catcolim/tensor_verify.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "catcolim/search.hpp"

namespace catcolim {

PairIndex::PairIndex(const ObjectMonoid& m) : at(m.size(), std::vector<int>(m.size(), -1)) {
  for (ObjId x = 0; x < m.size(); ++x) {
    for (ObjId y = 0; y < m.size(); ++y) {
      if (!m.mul(x, y)) continue;
      at[x][y] = static_cast<int>(pairs.size());
      pairs.emplace_back(x, y);
    }
  }
}

namespace {

constexpr std::size_t kAll = std::numeric_limits<std::size_t>::max();

std::vector<int> isos(const FiniteView& v, const std::vector<int>& hs) {
  std::vector<int> out;
  for (int e : hs) {
    if (v.is_iso(e)) out.push_back(e);
  }
  return out;
}

// A finite tensor category with its tables.
struct Target {
  const TensorCategory& t;
  const FiniteView& v;
  TensorTable tt;
  explicit Target(const TensorCategory& tc) : t(tc), v(tc.carrier()->table()), tt(tensor_table(tc)) {}

  int compose(int f, int g) const {
    if (f < 0 || g < 0) return -1;
    return v.compose(f, g);
  }
  int tensor(int f, int g) const {
    if (f < 0 || g < 0) return -1;
    return tt.tensor(f, g);
  }
  int id(int x) const { return v.identity[static_cast<std::size_t>(x)]; }
  const std::vector<int>& hom(int x, int y) const { return v.homset(static_cast<ObjId>(x), static_cast<ObjId>(y)); }
};

// Value of a path given the variable holding each object image and each generator image.
struct PathEval {
  std::size_t obj_var;
  std::vector<std::size_t> gen_vars;
  std::size_t ready() const {
    std::size_t r = obj_var;
    for (auto g : gen_vars) r = std::max(r, g);
    return r;
  }
  int operator()(const Target& t, const Search::Assignment& as) const {
    int cur = t.id(as[obj_var]);
    for (auto g : gen_vars) cur = t.compose(cur, as[g]);
    return cur;
  }
};

// Variable layout of a normalized tensor functor A -> T.
struct FunctorLayout {
  std::size_t base = 0, n = 0, np = 0, ng = 0;
  PairIndex pairs;
  FunctorLayout(const TensorCategory& a, std::size_t offset)
      : base(offset), n(a.monoid().size()), ng(a.carrier()->num_arrows()), pairs(a.monoid()) {
    np = pairs.pairs.size();
  }
  std::size_t obj(ObjId x) const { return base + x; }
  std::size_t mu(ObjId x, ObjId y) const { return base + n + static_cast<std::size_t>(pairs.at[x][y]); }
  bool has_mu(ObjId x, ObjId y) const { return pairs.at[x][y] >= 0; }
  std::size_t gen(GenId g) const { return base + n + np + g; }
  std::size_t size() const { return n + np + ng; }
  PathEval path(const Path& p) const {
    PathEval e{obj(p.src), {}};
    for (GenId g : p.arrows) e.gen_vars.push_back(gen(g));
    return e;
  }
};

template <class F>
void if_defined(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.code() != ErrorCode::IllDefinedProduct) throw;
  }
}

// Adds the variables and constraints of a normalized tensor functor A -> T.
void add_tensor_functor(Search& s, const TensorCategory& a, const Target& t, const FunctorLayout& lay) {
  const ObjectMonoid& m = a.monoid();
  const Category& ac = *a.carrier();
  const ObjId unit = m.unit();
  std::vector<int> all_objects;
  for (ObjId x = 0; x < t.t.monoid().size(); ++x) all_objects.push_back(static_cast<int>(x));
  for (ObjId x = 0; x < lay.n; ++x) s.add_fixed(x == unit ? std::vector<int>{static_cast<int>(t.t.unit())} : all_objects);
  for (auto [x, y] : lay.pairs.pairs) {
    std::size_t vx = lay.obj(x), vy = lay.obj(y), vxy = lay.obj(m.mul_or_throw(x, y));
    bool trivial = x == unit || y == unit;
    s.add_var([&t, vx, vy, vxy, trivial](const Search::Assignment& as) -> std::vector<int> {
      int kx = as[vx], ky = as[vy];
      int p = t.tt.obj_mul[static_cast<std::size_t>(kx)][static_cast<std::size_t>(ky)];
      if (p < 0) return {};
      if (trivial) return p == as[vxy] ? std::vector<int>{t.id(p)} : std::vector<int>{};
      return isos(t.v, t.hom(p, as[vxy]));
    });
  }
  for (GenId g = 0; g < lay.ng; ++g) {
    std::size_t vs = lay.obj(ac.arrow(g).src), vt = lay.obj(ac.arrow(g).tgt);
    s.add_var([&t, vs, vt](const Search::Assignment& as) { return t.hom(as[vs], as[vt]); });
  }
  // associativity
  for (ObjId x = 0; x < m.size(); ++x) {
    for (ObjId y = 0; y < m.size(); ++y) {
      for (ObjId z = 0; z < m.size(); ++z) {
        if (x == unit || y == unit || z == unit) continue;
        auto xy = m.mul(x, y), yz = m.mul(y, z);
        if (!xy || !yz || !m.mul(*xy, z)) continue;
        std::size_t a1 = lay.mu(x, y), a2 = lay.mu(*xy, z), b1 = lay.mu(y, z), b2 = lay.mu(x, *yz);
        std::size_t vx = lay.obj(x), vz = lay.obj(z);
        s.add_constraint(std::max({a1, a2, b1, b2}), [&t, a1, a2, b1, b2, vx, vz](const Search::Assignment& as) {
          int l = t.compose(t.tensor(as[a1], t.id(as[vz])), as[a2]);
          int r = t.compose(t.tensor(t.id(as[vx]), as[b1]), as[b2]);
          return l >= 0 && l == r;
        });
      }
    }
  }
  // symmetry
  for (ObjId x = 0; x < m.size(); ++x) {
    for (ObjId y = 0; y < m.size(); ++y) {
      if (x == unit || y == unit || !lay.has_mu(x, y) || !lay.has_mu(y, x)) continue;
      PathEval sig = lay.path(a.symmetry(x, y));
      std::size_t mxy = lay.mu(x, y), myx = lay.mu(y, x), vx = lay.obj(x), vy = lay.obj(y);
      s.add_constraint(std::max({mxy, myx, sig.ready()}), [&t, sig, mxy, myx, vx, vy](const Search::Assignment& as) {
        int ts = t.tt.sigma[static_cast<std::size_t>(as[vx])][static_cast<std::size_t>(as[vy])];
        int l = t.compose(as[mxy], sig(t, as));
        return l >= 0 && l == t.compose(ts, as[myx]);
      });
    }
  }
  // naturality of mu in each variable
  for (GenId g = 0; g < lay.ng; ++g) {
    Path pg = ac.generator(g);
    std::size_t vg = lay.gen(g);
    for (ObjId x = 0; x < m.size(); ++x) {
      if (x == unit) continue;
      std::size_t vx = lay.obj(x);
      if (lay.has_mu(x, pg.src) && lay.has_mu(x, pg.tgt)) {
        if_defined([&] {
          PathEval w = lay.path(a.whisker(x, pg));
          std::size_t ms = lay.mu(x, pg.src), mt = lay.mu(x, pg.tgt);
          s.add_constraint(std::max({vg, ms, mt, w.ready()}), [&t, w, vg, vx, ms, mt](const Search::Assignment& as) {
            int l = t.compose(t.tt.whisker[static_cast<std::size_t>(as[vx])][static_cast<std::size_t>(as[vg])], as[mt]);
            return l >= 0 && l == t.compose(as[ms], w(t, as));
          });
        });
      }
      if (lay.has_mu(pg.src, x) && lay.has_mu(pg.tgt, x)) {
        if_defined([&] {
          PathEval w = lay.path(a.whisker_right(pg, x));
          std::size_t ms = lay.mu(pg.src, x), mt = lay.mu(pg.tgt, x);
          s.add_constraint(std::max({vg, ms, mt, w.ready()}), [&t, w, vg, vx, ms, mt](const Search::Assignment& as) {
            int l = t.compose(t.tt.whisker_right(as[vg], static_cast<ObjId>(as[vx])), as[mt]);
            return l >= 0 && l == t.compose(as[ms], w(t, as));
          });
        });
      }
    }
  }
  // relations of the carrier
  for (const Relation& r : ac.relations()) {
    PathEval l = lay.path(r.lhs), rr = lay.path(r.rhs);
    s.add_constraint(std::max(l.ready(), rr.ready()),
                     [&t, l, rr](const Search::Assignment& as) { return l(t, as) == rr(t, as); });
  }
}

TableTensorFunctor decode(const FunctorLayout& lay, const Search::Assignment& as) {
  TableTensorFunctor f;
  for (std::size_t i = 0; i < lay.n; ++i) f.objects.push_back(static_cast<ObjId>(as[lay.base + i]));
  f.mu.assign(as.begin() + static_cast<long>(lay.base + lay.n), as.begin() + static_cast<long>(lay.base + lay.n + lay.np));
  f.arrows.assign(as.begin() + static_cast<long>(lay.base + lay.n + lay.np), as.begin() + static_cast<long>(lay.base + lay.size()));
  return f;
}

std::vector<TableTensorFunctor> enumerate_with(const TensorCategory& a, const Target& t) {
  Search s;
  FunctorLayout lay(a, 0);
  add_tensor_functor(s, a, t, lay);
  std::vector<TableTensorFunctor> out;
  s.run([&](const Search::Assignment& as) {
    out.push_back(decode(lay, as));
    return true;
  });
  return out;
}

int eval_enc(const Target& t, const TableTensorFunctor& f, const Path& p) {
  int cur = t.id(static_cast<int>(f.objects[p.src]));
  for (GenId g : p.arrows) cur = t.compose(cur, f.arrows[g]);
  return cur;
}

// Constraints of a monoidal transformation f => g between normalized functors;
// theta_x lives in variable base + x.
void add_monoidal(Search& s, const TensorCategory& a, const Target& t, std::size_t base, const TableTensorFunctor* f,
                  const TableTensorFunctor* g, const PairIndex& pi) {
  const ObjectMonoid& m = a.monoid();
  const Category& ac = *a.carrier();
  for (GenId h = 0; h < ac.num_arrows(); ++h) {
    const Arrow& ar = ac.arrow(h);
    std::size_t vi = base + ar.src, vj = base + ar.tgt;
    s.add_constraint(std::max(vi, vj), [&t, f, g, h, vi, vj](const Search::Assignment& as) {
      return t.compose(as[vi], g->arrows[h]) == t.compose(f->arrows[h], as[vj]);
    });
  }
  for (std::size_t p = 0; p < pi.pairs.size(); ++p) {
    auto [x, y] = pi.pairs[p];
    if (x == m.unit() || y == m.unit()) continue;
    std::size_t vx = base + x, vy = base + y, vxy = base + m.mul_or_throw(x, y);
    s.add_constraint(std::max({vx, vy, vxy}), [&t, f, g, p, vx, vy, vxy](const Search::Assignment& as) {
      int l = t.compose(f->mu[p], as[vxy]);
      return l >= 0 && l == t.compose(t.tensor(as[vx], as[vy]), g->mu[p]);
    });
  }
}

std::vector<std::vector<int>> transformations_with(const TensorCategory& a, const Target& t, const TableTensorFunctor& f,
                                                   const TableTensorFunctor& g, bool iso_only, std::size_t limit) {
  const ObjectMonoid& m = a.monoid();
  PairIndex pi(m);
  Search s;
  for (ObjId x = 0; x < m.size(); ++x) {
    if (x == m.unit()) {
      s.add_fixed({t.id(static_cast<int>(t.t.unit()))});
    } else {
      const auto& hs = t.hom(static_cast<int>(f.objects[x]), static_cast<int>(g.objects[x]));
      s.add_fixed(iso_only ? isos(t.v, hs) : hs);
    }
  }
  add_monoidal(s, a, t, 0, &f, &g, pi);
  std::vector<std::vector<int>> out;
  s.run([&](const Search::Assignment& as) {
    out.push_back(as);
    return out.size() < limit;
  });
  return out;
}

// ---------------------------------------------------------------------------
// cocone categories

struct TCell {
  std::size_t from = 0, to = 0;
  Functor f, g;  // index -> leg carriers
  std::optional<TensorFunctor> tf, tg;  // monoidal cells
  bool invertible = false;
};

struct ConeShape {
  std::vector<TensorPtr> legs;
  std::vector<TCell> cells;
  std::vector<std::pair<Transformation, Transformation>> equified;  // on leg 0
  std::vector<Transformation> inverted;                             // on leg 0
};

ConeShape cone_shape(const TensorConstructionResult& c) {
  ConeShape s;
  auto tensor_cell = [&](std::size_t from, std::size_t to, bool inv) {
    TCell cell;
    cell.from = from;
    cell.to = to;
    cell.f = c.in_functors[0].functor;
    cell.g = c.in_functors[1].functor;
    cell.tf = c.in_functors[0];
    cell.tg = c.in_functors[1];
    cell.invertible = inv;
    s.cells.push_back(cell);
  };
  switch (c.kind) {
    case Kind::Coproduct:
      s.legs = {c.in_categories[0], c.in_categories[1]};
      break;
    case Kind::Coinserter:
      s.legs = {c.base};
      tensor_cell(0, 0, false);
      break;
    case Kind::Coequalizer:
      s.legs = {c.base};
      tensor_cell(0, 0, true);
      break;
    case Kind::Pushout:
      s.legs = {c.in_categories[0], c.in_categories[1]};
      tensor_cell(0, 1, true);
      break;
    case Kind::Coinverter:
      s.legs = {c.base};
      s.inverted.push_back(c.in_plain_cells[0]);
      break;
    case Kind::CoinserterInto:
    case Kind::CoisoinserterInto: {
      s.legs = {c.base};
      TCell cell;
      cell.f = c.in_plain[0];
      cell.g = c.in_plain[1];
      cell.invertible = c.kind == Kind::CoisoinserterInto;
      s.cells.push_back(cell);
      break;
    }
    case Kind::CoequifierInto:
      s.legs = {c.base};
      s.equified.emplace_back(c.in_plain_cells[0], c.in_plain_cells[1]);
      break;
    default:
      throw Error(ErrorCode::Unsupported, std::string("no universal-property check for tensor ") + kind_name(c.kind));
  }
  return s;
}

struct ConeLayout {
  std::vector<FunctorLayout> legs;
  std::vector<std::size_t> cell_offset;
  std::vector<std::size_t> slot_offset;  // per leg, into the slot vector (objects of the leg domains)
  std::size_t total = 0, slots = 0;
  explicit ConeLayout(const ConeShape& s) {
    for (const auto& l : s.legs) {
      legs.emplace_back(*l, total);
      total += legs.back().size();
      slot_offset.push_back(slots);
      slots += l->monoid().size();
    }
    for (const auto& c : s.cells) {
      cell_offset.push_back(total);
      total += c.f.dom->num_objects();
    }
  }
};

int eval_leg(const Target& t, const std::vector<int>& cone, const FunctorLayout& lay, const Path& p) {
  int cur = t.id(cone[lay.obj(p.src)]);
  for (GenId g : p.arrows) cur = t.compose(cur, cone[lay.gen(g)]);
  return cur;
}

std::vector<std::vector<int>> enumerate_cones(const ConeShape& shape, const ConeLayout& lay, const Target& t) {
  std::vector<std::vector<TableTensorFunctor>> legs;
  for (std::size_t s = 0; s < shape.legs.size(); ++s) {
    auto fs = enumerate_with(*shape.legs[s], t);
    if (s == 0) {
      std::vector<TableTensorFunctor> keep;
      for (auto& f : fs) {
        bool ok = true;
        for (const auto& [al, be] : shape.equified) {
          for (std::size_t i = 0; i < al.components.size() && ok; ++i) {
            ok = eval_enc(t, f, al.components[i]) == eval_enc(t, f, be.components[i]);
          }
        }
        for (const auto& al : shape.inverted) {
          for (std::size_t i = 0; i < al.components.size() && ok; ++i) ok = t.v.is_iso(eval_enc(t, f, al.components[i]));
        }
        if (ok) keep.push_back(std::move(f));
      }
      fs = std::move(keep);
    }
    legs.push_back(std::move(fs));
  }
  std::vector<std::vector<int>> out;
  std::vector<int> cone(lay.total, -1);
  std::function<void(std::size_t)> choose = [&](std::size_t s) {
    if (s < legs.size()) {
      const FunctorLayout& fl = lay.legs[s];
      for (const auto& f : legs[s]) {
        for (std::size_t i = 0; i < fl.n; ++i) cone[fl.base + i] = static_cast<int>(f.objects[i]);
        std::copy(f.mu.begin(), f.mu.end(), cone.begin() + static_cast<long>(fl.base + fl.n));
        std::copy(f.arrows.begin(), f.arrows.end(), cone.begin() + static_cast<long>(fl.base + fl.n + fl.np));
        choose(s + 1);
      }
      return;
    }
    Search srch;
    std::vector<std::size_t> var(shape.cells.size());
    for (std::size_t k = 0; k < shape.cells.size(); ++k) {
      const TCell& cs = shape.cells[k];
      const FunctorLayout& lf = lay.legs[cs.from];
      const FunctorLayout& lg = lay.legs[cs.to];
      var[k] = srch.size();
      const Category& idx = *cs.f.dom;
      for (ObjId i = 0; i < idx.num_objects(); ++i) {
        const auto& hs = t.hom(cone[lf.obj(cs.f(i))], cone[lg.obj(cs.g(i))]);
        srch.add_fixed(cs.invertible ? isos(t.v, hs) : hs);
      }
      for (GenId h = 0; h < idx.num_arrows(); ++h) {
        const Arrow& ar = idx.arrow(h);
        std::size_t vi = var[k] + ar.src, vj = var[k] + ar.tgt;
        int qf = eval_leg(t, cone, lf, cs.f.on_arrows[h]);
        int qg = eval_leg(t, cone, lg, cs.g.on_arrows[h]);
        srch.add_constraint(std::max(vi, vj), [&t, vi, vj, qf, qg](const Search::Assignment& as) {
          return t.compose(as[vi], qg) == t.compose(qf, as[vj]);
        });
      }
      if (!cs.tf) continue;
      const TensorFunctor& tf = *cs.tf;
      const TensorFunctor& tg = *cs.tg;
      const ObjectMonoid& m = tf.dom->monoid();
      std::size_t vu = var[k] + m.unit();
      int ef = eval_leg(t, cone, lf, tf.eta), eg = eval_leg(t, cone, lg, tg.eta);
      srch.add_constraint(vu, [&t, vu, ef, eg](const Search::Assignment& as) { return t.compose(ef, as[vu]) == eg; });
      for (ObjId x = 0; x < m.size(); ++x) {
        for (ObjId y = 0; y < m.size(); ++y) {
          auto xy = m.mul(x, y);
          if (!xy || !tf.mu[x][y] || !tg.mu[x][y]) continue;
          if (!lf.has_mu(tf(x), tf(y)) || !lg.has_mu(tg(x), tg(y))) continue;
          int mf = t.compose(cone[lf.mu(tf(x), tf(y))], eval_leg(t, cone, lf, *tf.mu[x][y]));
          int mg = t.compose(cone[lg.mu(tg(x), tg(y))], eval_leg(t, cone, lg, *tg.mu[x][y]));
          std::size_t vx = var[k] + x, vy = var[k] + y, vxy = var[k] + *xy;
          srch.add_constraint(std::max({vx, vy, vxy}), [&t, mf, mg, vx, vy, vxy](const Search::Assignment& as) {
            int l = t.compose(mf, as[vxy]);
            return l >= 0 && l == t.compose(t.tensor(as[vx], as[vy]), mg);
          });
        }
      }
    }
    srch.run([&](const Search::Assignment& as) {
      std::vector<int> full = cone;
      for (std::size_t k = 0; k < shape.cells.size(); ++k) {
        for (ObjId i = 0; i < shape.cells[k].f.dom->num_objects(); ++i) full[lay.cell_offset[k] + i] = as[var[k] + i];
      }
      out.push_back(std::move(full));
      return true;
    });
  };
  choose(0);
  return out;
}

TableTensorFunctor leg_of(const FunctorLayout& fl, const std::vector<int>& cone) {
  TableTensorFunctor f;
  for (std::size_t i = 0; i < fl.n; ++i) f.objects.push_back(static_cast<ObjId>(cone[fl.base + i]));
  f.mu.assign(cone.begin() + static_cast<long>(fl.base + fl.n), cone.begin() + static_cast<long>(fl.base + fl.n + fl.np));
  f.arrows.assign(cone.begin() + static_cast<long>(fl.base + fl.n + fl.np), cone.begin() + static_cast<long>(fl.base + fl.size()));
  return f;
}

}  // namespace

std::vector<TableTensorFunctor> enumerate_tensor_functors(const TensorCategory& a, const TensorCategory& t) {
  Target tg(t);
  return enumerate_with(a, tg);
}

std::vector<std::vector<int>> enumerate_monoidal_transformations(const TensorCategory& a, const TensorCategory& t,
                                                                 const TableTensorFunctor& f, const TableTensorFunctor& g,
                                                                 bool iso_only) {
  Target tg(t);
  return transformations_with(a, tg, f, g, iso_only, kAll);
}

TensorFunctor to_tensor_functor(const TensorPtr& a, const TensorPtr& t, const TableTensorFunctor& f, std::string name) {
  const FiniteView& v = t->carrier()->table();
  const ObjectMonoid& m = a->monoid();
  PairIndex pi(m);
  Functor plain{name, a->carrier(), t->carrier(), f.objects, {}};
  for (int e : f.arrows) plain.on_arrows.push_back(v.element[static_cast<std::size_t>(e)]);
  TensorFunctor r;
  r.name = name;
  r.dom = a;
  r.cod = t;
  r.functor = plain;
  r.eta = t->carrier_identity(t->unit());
  r.mu.assign(m.size(), std::vector<std::optional<Path>>(m.size()));
  for (std::size_t p = 0; p < pi.pairs.size(); ++p) {
    r.mu[pi.pairs[p].first][pi.pairs[p].second] = v.element[static_cast<std::size_t>(f.mu[p])];
  }
  fill_inverses(r);
  return r;
}

UPReport check_universal(const TensorConstructionResult& c, const TensorPtr& tp) {
  ConeShape shape = cone_shape(c);
  Target t(*tp);
  const std::vector<int> tcls = iso_class_ids(t.v);
  const TensorCategory& dom = *c.target;
  ConeLayout lay(shape);
  for (const auto& u : c.universal) {
    if (!u.strict()) throw Error(ErrorCode::Unsupported, "universal tensor functor " + u.name + " is not strict");
  }
  std::vector<ObjId> slot_obj(lay.slots);
  for (std::size_t s = 0; s < shape.legs.size(); ++s) {
    for (ObjId x = 0; x < shape.legs[s]->monoid().size(); ++x) slot_obj[lay.slot_offset[s] + x] = c.universal[s](x);
  }
  PairIndex dpairs(dom.monoid());

  EnumeratedCategory src;
  std::vector<TableTensorFunctor> ks = enumerate_with(dom, t);
  for (const auto& k : ks) {
    std::vector<int> enc(k.objects.begin(), k.objects.end());
    enc.insert(enc.end(), k.mu.begin(), k.mu.end());
    enc.insert(enc.end(), k.arrows.begin(), k.arrows.end());
    src.objects.push_back(std::move(enc));
  }
  src.signature = [&](std::size_t a) {
    std::vector<int> sig;
    for (ObjId x : ks[a].objects) sig.push_back(tcls[x]);
    return sig;
  };
  src.homs = [&](std::size_t a, std::size_t b, bool iso_only, std::size_t limit) {
    return transformations_with(dom, t, ks[a], ks[b], iso_only, limit);
  };

  EnumeratedCategory tgt;
  tgt.objects = enumerate_cones(shape, lay, t);
  std::vector<std::vector<TableTensorFunctor>> tlegs;
  for (const auto& cone : tgt.objects) {
    std::vector<TableTensorFunctor> ls;
    for (const auto& fl : lay.legs) ls.push_back(leg_of(fl, cone));
    tlegs.push_back(std::move(ls));
  }
  tgt.signature = [&](std::size_t a) {
    std::vector<int> sig;
    for (const auto& l : tlegs[a]) {
      for (ObjId x : l.objects) sig.push_back(tcls[x]);
    }
    return sig;
  };
  std::vector<PairIndex> leg_pairs;
  for (const auto& l : shape.legs) leg_pairs.emplace_back(l->monoid());
  tgt.homs = [&](std::size_t a, std::size_t b, bool iso_only, std::size_t limit) {
    const auto& ca = tgt.objects[a];
    const auto& cb = tgt.objects[b];
    Search s;
    for (std::size_t l = 0; l < shape.legs.size(); ++l) {
      const ObjectMonoid& m = shape.legs[l]->monoid();
      for (ObjId x = 0; x < m.size(); ++x) {
        if (x == m.unit()) {
          s.add_fixed({t.id(static_cast<int>(tp->unit()))});
          continue;
        }
        const auto& hs = t.hom(static_cast<int>(tlegs[a][l].objects[x]), static_cast<int>(tlegs[b][l].objects[x]));
        s.add_fixed(iso_only ? isos(t.v, hs) : hs);
      }
    }
    for (std::size_t l = 0; l < shape.legs.size(); ++l) {
      add_monoidal(s, *shape.legs[l], t, lay.slot_offset[l], &tlegs[a][l], &tlegs[b][l], leg_pairs[l]);
    }
    for (std::size_t k = 0; k < shape.cells.size(); ++k) {
      const TCell& cs = shape.cells[k];
      for (ObjId i = 0; i < cs.f.dom->num_objects(); ++i) {
        std::size_t vi = lay.slot_offset[cs.from] + cs.f(i), vj = lay.slot_offset[cs.to] + cs.g(i);
        int ga = ca[lay.cell_offset[k] + i], gb = cb[lay.cell_offset[k] + i];
        s.add_constraint(std::max(vi, vj), [&t, vi, vj, ga, gb](const Search::Assignment& as) {
          return t.compose(as[vi], gb) == t.compose(ga, as[vj]);
        });
      }
    }
    std::vector<std::vector<int>> out;
    s.run([&](const Search::Assignment& as) {
      out.push_back(as);
      return out.size() < limit;
    });
    return out;
  };

  auto q_obj = [&](std::size_t a) {
    const TableTensorFunctor& k = ks[a];
    std::vector<int> cone(lay.total, -1);
    for (std::size_t s = 0; s < shape.legs.size(); ++s) {
      const TensorFunctor& u = c.universal[s];
      const FunctorLayout& fl = lay.legs[s];
      const ObjectMonoid& m = shape.legs[s]->monoid();
      for (ObjId x = 0; x < m.size(); ++x) cone[fl.obj(x)] = static_cast<int>(k.objects[u(x)]);
      for (auto [x, y] : fl.pairs.pairs) {
        int p = dpairs.at[u(x)][u(y)];
        cone[fl.mu(x, y)] = p < 0 ? -1 : k.mu[static_cast<std::size_t>(p)];
      }
      for (GenId g = 0; g < fl.ng; ++g) cone[fl.gen(g)] = eval_enc(t, k, u.functor.on_arrows[g]);
    }
    for (std::size_t j = 0; j < shape.cells.size(); ++j) {
      const Transformation& cell = c.cells[j];
      for (std::size_t i = 0; i < cell.components.size(); ++i) cone[lay.cell_offset[j] + i] = eval_enc(t, k, cell.components[i]);
    }
    return cone;
  };
  auto q_mor = [&](std::size_t, const std::vector<int>& theta) {
    std::vector<int> out(lay.slots);
    for (std::size_t i = 0; i < lay.slots; ++i) out[i] = theta[slot_obj[i]];
    return out;
  };
  return compare_categories(src, tgt, q_obj, q_mor);
}

CommMonoid pi0_tensor(const TensorCategory& t) {
  const ObjectMonoid& m = t.monoid();
  auto comps = pi0(*t.carrier());
  std::vector<std::size_t> cls(m.size());
  std::vector<std::string> names;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    names.push_back(m.name(comps[k].front()));
    for (ObjId x : comps[k]) cls[x] = k;
  }
  const std::size_t n = comps.size();
  constexpr std::size_t none = std::numeric_limits<std::size_t>::max();
  std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n, none));
  for (ObjId x = 0; x < m.size(); ++x) {
    for (ObjId y = 0; y < m.size(); ++y) {
      auto xy = m.mul(x, y);
      if (!xy) continue;
      std::size_t& e = table[cls[x]][cls[y]];
      if (e == none) {
        e = cls[*xy];
      } else if (e != cls[*xy]) {
        throw Error(ErrorCode::IllDefinedProduct, "components of " + m.name(x) + " * " + m.name(y) + " are not well defined");
      }
    }
  }
  for (const auto& row : table) {
    for (auto e : row) {
      if (e == none) throw Error(ErrorCode::IllDefinedProduct, "product of two components is outside the word bound");
    }
  }
  return CommMonoid::from_table(std::move(names), cls[m.unit()], std::move(table));
}

bool compare_pi0(const TensorConstructionResult& c, const CommMonoid& oracle) {
  return isomorphic(pi0_tensor(*c.target), oracle);
}

TensorEquivalenceReport check_tensor_equivalence(const TensorFunctor& k, const TensorFunctor& l) {
  TensorEquivalenceReport rep;
  ValidityReport vk = check_tensor_functor(k), vl = check_tensor_functor(l);
  rep.tensor_functors = vk.verdict() == Tri::Equal && vl.verdict() == Tri::Equal;
  for (const auto& p : vk.problems) rep.notes.push_back(p);
  for (const auto& p : vl.problems) rep.notes.push_back(p);
  if (k.dom != l.cod || k.cod != l.dom) {
    rep.notes.push_back("functors are not composable both ways");
    return rep;
  }
  Functor kl = compose(k.functor, l.functor), lk = compose(l.functor, k.functor);
  rep.inverse_on_generators = kl.on_objects == identity_functor(k.dom->carrier()).on_objects &&
                              lk.on_objects == identity_functor(k.cod->carrier()).on_objects &&
                              functors_equal(kl, identity_functor(k.dom->carrier())) == Tri::Equal &&
                              functors_equal(lk, identity_functor(k.cod->carrier())) == Tri::Equal;
  if (!rep.inverse_on_generators && k.dom->carrier()->finite() && k.cod->carrier()->finite()) {
    rep.carrier_equivalence = check_equivalence(k.functor).equivalence();
  }
  return rep;
}

}  // namespace catcolim

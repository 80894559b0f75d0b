#include "catcolim/tensor_colimits.hpp"

#include <algorithm>

namespace catcolim {

TensorConstructionResult coequifier_named(const Transformation& alpha, const Transformation& beta, const TensorPtr& a,
                                          const std::string& name);

namespace {

Path append(Path p, const Path& q) {
  p.arrows.insert(p.arrows.end(), q.arrows.begin(), q.arrows.end());
  p.tgt = q.tgt;
  return p;
}

// A presentation extending that of `base` by new declared arrows (roots).
// Base carrier ids are remapped through generator keys once the layout is fixed.
class Extension {
 public:
  Extension(TensorPtr base, std::string name) : base_(std::move(base)), pres_(base_->presentation()) {
    pres_.name = std::move(name);
    pres_.finite = false;
    nb_ = pres_.arrows.size();
    names_ = base_->carrier()->quiver();
  }

  std::uint32_t add_root(const std::string& want, ObjId src, ObjId tgt, GenRole::Type type, ObjId index) {
    Arrow a{fresh_arrow_name(names_, want), src, tgt};
    names_.arrows.push_back(a);
    pres_.arrows.push_back(a);
    roots_.push_back({type, index});
    return static_cast<std::uint32_t>(nb_ + roots_.size() - 1);
  }

  void layout() {
    keys_ = carrier_keys(pres_);
    for (GenId g = 0; g < keys_.size(); ++g) by_key_.emplace(keys_[g], g);
    const Category& bc = *base_->carrier();
    for (GenId g = 0; g < bc.num_arrows(); ++g) from_base_.push_back(by_key_.at(base_->key(g)));
    for (auto& r : pres_.relations) r = {map(r.lhs), map(r.rhs)};
    for (auto& [k, p] : pres_.whisker) p = map(p);
    for (auto& [k, p] : pres_.symmetry) p = map(p);
  }

  Path map(const Path& p) const {
    Path out{p.src, p.tgt, {}};
    for (GenId g : p.arrows) out.arrows.push_back(from_base_[g]);
    return out;
  }

  Path root(std::uint32_t i) const {
    const Arrow& a = pres_.arrows[i];
    return Path{a.src, a.tgt, {by_key_.at(GenKey{GenKey::Declared, i, 0, pres_.monoid.unit()})}};
  }

  void relation(Path l, Path r) {
    if (l == r) return;
    pres_.relations.push_back({std::move(l), std::move(r)});
  }

  TensorPtr build() {
    built_ = make_tensor_category(pres_);
    return built_;
  }

  std::vector<GenRole> roles() const {
    std::vector<GenRole> out;
    for (const GenKey& k : keys_) {
      if (k.type == GenKey::Declared && k.i >= nb_) {
        const auto& r = roots_[k.i - nb_];
        out.push_back(GenRole{r.type, 0, 0, r.index, k.whisker});
      } else {
        out.push_back(GenRole{GenRole::Base, 0, *base_->gen(k), 0, 0});
      }
    }
    return out;
  }

  TensorFunctor inclusion() const {
    const Category& bc = *base_->carrier();
    Functor f{"P", base_->carrier(), built_->carrier(), {}, {}};
    for (ObjId x = 0; x < bc.num_objects(); ++x) f.on_objects.push_back(x);
    for (GenId g = 0; g < bc.num_arrows(); ++g) f.on_arrows.push_back(built_->carrier()->generator(from_base_[g]));
    return strict_tensor_functor(base_, built_, f, "P");
  }

 private:
  struct RootInfo {
    GenRole::Type type;
    ObjId index;
  };
  TensorPtr base_;
  TensorPresentation pres_;
  std::size_t nb_ = 0;
  Quiver names_;
  std::vector<RootInfo> roots_;
  std::vector<GenKey> keys_;
  std::map<GenKey, GenId> by_key_;
  std::vector<GenId> from_base_;
  TensorPtr built_;
};

void require_into(const Functor& f, const Functor& g, const TensorPtr& a) {
  if (f.dom != g.dom || f.cod != a->carrier() || g.cod != a->carrier()) {
    throw Error(ErrorCode::NotParallel, f.name + " and " + g.name + " are not parallel functors into " + a->name());
  }
}

void require_parallel(const TensorFunctor& f, const TensorFunctor& g) {
  if (f.dom != g.dom || f.cod != g.cod) {
    throw Error(ErrorCode::NotParallel, f.name + " and " + g.name + " are not parallel tensor functors");
  }
}

TensorConstructionResult cell_into(const Functor& f, const Functor& g, const TensorPtr& a, const std::string& tag,
                                   bool invertible) {
  require_into(f, g, a);
  const Category& idx = *f.dom;
  Extension ext(a, std::string(invertible ? "CoIsoIns" : "CoIns") + "(" + f.name + "," + g.name + ")");
  std::vector<std::uint32_t> fwd, bwd;
  for (ObjId i = 0; i < idx.num_objects(); ++i) {
    fwd.push_back(ext.add_root(tag + "<" + idx.object_name(i) + ">", f(i), g(i), GenRole::Cell, i));
  }
  if (invertible) {
    for (ObjId i = 0; i < idx.num_objects(); ++i) {
      bwd.push_back(ext.add_root(tag + "'<" + idx.object_name(i) + ">", g(i), f(i), GenRole::CellInverse, i));
    }
  }
  ext.layout();
  for (GenId h = 0; h < idx.num_arrows(); ++h) {
    const Arrow& ar = idx.arrow(h);
    ext.relation(append(ext.map(f.on_arrows[h]), ext.root(fwd[ar.tgt])), append(ext.root(fwd[ar.src]), ext.map(g.on_arrows[h])));
  }
  for (ObjId i = 0; invertible && i < idx.num_objects(); ++i) {
    ext.relation(append(ext.root(fwd[i]), ext.root(bwd[i])), Path{f(i), f(i), {}});
    ext.relation(append(ext.root(bwd[i]), ext.root(fwd[i])), Path{g(i), g(i), {}});
  }
  TensorConstructionResult r;
  r.kind = invertible ? Kind::CoisoinserterInto : Kind::CoinserterInto;
  r.target = ext.build();
  r.base = a;
  r.index = f.dom;
  r.in_plain = {f, g};
  r.roles = ext.roles();
  TensorFunctor p = ext.inclusion();
  r.universal = {p};
  Transformation d{"delta", compose(f, p.functor), compose(g, p.functor), {}};
  for (auto i : fwd) d.components.push_back(r.target->carrier()->generator(r.target->declared(i)));
  r.cells = {d};
  if (invertible) {
    Transformation inv{"delta^-1", d.target, d.source, {}};
    for (auto i : bwd) inv.components.push_back(r.target->carrier()->generator(r.target->declared(i)));
    r.cells.push_back(inv);
  }
  return r;
}

// Carries plain cells along a strict inclusion.
Transformation push(const Transformation& t, const TensorFunctor& p, const std::string& name) {
  Transformation out = whisker(p.functor, t);
  out.name = name;
  return out;
}

// Discrete category on the given object names.
CategoryPtr discrete_category(const std::vector<std::string>& names, const std::string& name) {
  Quiver q;
  q.objects = names;
  return make_category(name, std::move(q), {}, Backend::Table);
}

// Second stage of a tensor coinserter: the multiplication and unit coequifiers
// making delta' monoidal for F, G : A -> B, after a (iso)inserter into B.
TensorConstructionResult monoidal_stage(TensorConstructionResult s1, const TensorFunctor& f, const TensorFunctor& g, Kind kind,
                                        const std::string& name) {
  const TensorCategory& a = *f.dom;
  const TensorPtr c1 = s1.target;
  const TensorFunctor p1 = s1.universal[0];
  const ObjectMonoid& m = a.monoid();
  const std::vector<Path>& d = s1.cells[0].components;

  // multiplication: mu_F(x, y) ; delta(xy) = delta(x) (x) delta(y) ; mu_G(x, y)
  std::vector<std::string> pairs;
  Functor src{"PFxPF", nullptr, c1->carrier(), {}, {}};
  Functor tgt{"PG(x)", nullptr, c1->carrier(), {}, {}};
  Transformation alpha{"mult-l", {}, {}, {}}, beta{"mult-r", {}, {}, {}};
  for (ObjId x = 0; x < m.size(); ++x) {
    for (ObjId y = 0; y < m.size(); ++y) {
      auto xy = m.mul(x, y);
      if (!xy || !f.mu[x][y] || !g.mu[x][y]) continue;
      Path l, r;
      try {
        l = append(p1.functor.apply(*f.mu[x][y]), d[*xy]);
        r = append(c1->tensor(d[x], d[y]), p1.functor.apply(*g.mu[x][y]));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::IllDefinedProduct) throw;
        continue;
      }
      pairs.push_back(pair_name(m.name(x), m.name(y)));
      src.on_objects.push_back(l.src);
      tgt.on_objects.push_back(l.tgt);
      alpha.components.push_back(l);
      beta.components.push_back(r);
    }
  }
  CategoryPtr i2 = discrete_category(pairs, a.name() + "x" + a.name());
  src.dom = tgt.dom = i2;
  alpha.source = beta.source = src;
  alpha.target = beta.target = tgt;
  TensorConstructionResult s2 = coequifier_into(alpha, beta, c1);

  // unit: eta_F ; delta(1) = eta_G
  const TensorPtr c2 = s2.target;
  CategoryPtr one = discrete_category({"*"}, "1");
  Path ul = append(p1.functor.apply(f.eta), d[a.unit()]);
  Path ur = p1.functor.apply(g.eta);
  Functor usrc{"1", one, c2->carrier(), {ul.src}, {}};
  Functor utgt{"PG1", one, c2->carrier(), {ul.tgt}, {}};
  TensorConstructionResult s3 =
      coequifier_named(Transformation{"unit-l", usrc, utgt, {ul}}, Transformation{"unit-r", usrc, utgt, {ur}}, c2, name);

  TensorConstructionResult r;
  r.kind = kind;
  r.target = s3.target;
  r.base = f.cod;
  r.index = f.dom->carrier();
  r.in_functors = {f, g};
  r.in_plain = {f.functor, g.functor};
  TensorFunctor p = compose(compose(p1, s2.universal[0]), s3.universal[0]);
  p.name = p.functor.name = "P";
  r.universal = {p};
  // coequifiers keep the generator layout, so the stage-1 roles and paths carry over
  r.roles = s1.roles;
  Transformation cell{"delta", compose(f.functor, p.functor), compose(g.functor, p.functor), d};
  r.cells = {cell};
  if (s1.cells.size() > 1) r.cells.push_back(Transformation{"delta^-1", cell.target, cell.source, s1.cells[1].components});
  for (auto& t : r.cells) {
    for (auto& c : t.components) c = r.target->carrier()->normalize(c);
  }
  r.stages = {c1, c2, s3.target};
  r.stage_cells = {s1.cells[0]};
  return r;
}

std::vector<std::vector<std::optional<Path>>> empty_mu(std::size_t n) {
  return std::vector<std::vector<std::optional<Path>>>(n, std::vector<std::optional<Path>>(n));
}

TensorFunctor pair_impl(const TensorPtr& prod, const std::vector<GenRole>& roles, const TensorFunctor& f,
                        const TensorFunctor& g, bool with_symmetry) {
  if (f.cod != g.cod) throw Error(ErrorCode::NotParallel, f.name + " and " + g.name + " have different codomains");
  const TensorCategory& t = *f.cod;
  const Category& c = *t.carrier();
  const ObjectMonoid& ma = f.dom->monoid();
  const ObjectMonoid& mb = g.dom->monoid();
  const ObjectMonoid& m = prod->monoid();
  auto obj = [&](ObjId a, ObjId b) { return static_cast<ObjId>(a * mb.size() + b); };
  TensorFunctor h;
  h.name = "[" + f.name + "," + g.name + "]";
  h.dom = prod;
  h.cod = f.cod;
  h.functor = Functor{h.name, prod->carrier(), t.carrier(), std::vector<ObjId>(m.size()), {}};
  for (ObjId a = 0; a < ma.size(); ++a) {
    for (ObjId b = 0; b < mb.size(); ++b) h.functor.on_objects[obj(a, b)] = t.mul(f(a), g(b));
  }
  for (GenId gen = 0; gen < prod->carrier()->num_arrows(); ++gen) {
    const GenRole& r = roles[gen];
    if (r.source == 0) {
      h.functor.on_arrows.push_back(t.whisker_right(f.functor.on_arrows[r.gen], g(r.whisker)));
    } else {
      h.functor.on_arrows.push_back(t.whisker(f(r.whisker), g.functor.on_arrows[r.gen]));
    }
  }
  h.eta = t.tensor(f.eta, g.eta);
  if (f.eta_inv && g.eta_inv) h.eta_inv = t.tensor(*f.eta_inv, *g.eta_inv);
  h.mu = empty_mu(m.size());
  h.mu_inv = empty_mu(m.size());
  for (ObjId a = 0; a < ma.size(); ++a) {
    for (ObjId b = 0; b < mb.size(); ++b) {
      for (ObjId a2 = 0; a2 < ma.size(); ++a2) {
        for (ObjId b2 = 0; b2 < mb.size(); ++b2) {
          const auto& fm = f.mu[a][a2];
          const auto& gm = g.mu[b][b2];
          if (!fm || !gm) continue;
          ObjId x = f(a), y = g(b), x2 = f(a2), y2 = g(b2);
          // x y x2 y2 -> x x2 y y2
          Path swap = with_symmetry ? t.whisker(x, t.whisker_right(t.symmetry(y, x2), y2))
                                    : c.identity(t.mul(t.mul(x, x2), t.mul(y, y2)));
          ObjId u = obj(a, b), v = obj(a2, b2);
          Path mu = t.tensor(*fm, *gm);
          if (swap.tgt != mu.src) {
            throw Error(ErrorCode::IllDefinedProduct, "middle factors of " + h.name + " do not commute on objects");
          }
          h.mu[u][v] = c.compose(swap, mu);
          const auto& fi = f.mu_inv.empty() ? std::nullopt : f.mu_inv[a][a2];
          const auto& gi = g.mu_inv.empty() ? std::nullopt : g.mu_inv[b][b2];
          if (fi && gi) {
            Path back = with_symmetry ? t.whisker(x, t.whisker_right(t.symmetry(x2, y), y2)) : c.identity(swap.tgt);
            h.mu_inv[u][v] = c.compose(t.tensor(*fi, *gi), back);
          }
        }
      }
    }
  }
  return h;
}

}  // namespace

TensorPtr initial_tensor(const std::string& name) {
  TensorPresentation p;
  p.name = name;
  p.monoid = ObjectMonoid::trivial();
  p.finite = true;
  return make_tensor_category(p);
}

CategoryPtr discrete_index(const std::vector<std::string>& names, const std::string& name) {
  return discrete_category(names, name);
}

TensorConstructionResult coproduct_tensor(const TensorPtr& a, const TensorPtr& b) {
  const ObjectMonoid& ma = a->monoid();
  const ObjectMonoid& mb = b->monoid();
  const Category& ca = *a->carrier();
  const Category& cb = *b->carrier();
  TensorPresentation p;
  p.name = a->name() + "+" + b->name();
  p.monoid = ObjectMonoid::product(ma, mb);
  p.bounds = a->presentation().bounds;
  const ObjectMonoid& m = p.monoid;
  auto obj = [&](ObjId x, ObjId y) { return static_cast<ObjId>(x * mb.size() + y); };

  TensorConstructionResult r;
  r.kind = Kind::Coproduct;
  r.in_categories = {a, b};
  std::vector<std::vector<GenId>> lg(ca.num_arrows()), rg(ma.size());
  for (GenId g = 0; g < ca.num_arrows(); ++g) {
    for (ObjId y = 0; y < mb.size(); ++y) {
      const Arrow& ar = ca.arrow(g);
      lg[g].push_back(static_cast<GenId>(p.arrows.size()));
      p.arrows.push_back({pair_name(ar.name, mb.name(y)), obj(ar.src, y), obj(ar.tgt, y)});
      r.roles.push_back(GenRole{GenRole::Base, 0, g, 0, y});
    }
  }
  for (ObjId x = 0; x < ma.size(); ++x) {
    for (GenId h = 0; h < cb.num_arrows(); ++h) {
      const Arrow& ar = cb.arrow(h);
      rg[x].push_back(static_cast<GenId>(p.arrows.size()));
      p.arrows.push_back({pair_name(ma.name(x), ar.name), obj(x, ar.src), obj(x, ar.tgt)});
      r.roles.push_back(GenRole{GenRole::Base, 1, h, 0, x});
    }
  }
  auto lift_a = [&](const Path& q, ObjId y) {
    Path out{obj(q.src, y), obj(q.tgt, y), {}};
    for (GenId g : q.arrows) out.arrows.push_back(lg[g][y]);
    return out;
  };
  auto lift_b = [&](ObjId x, const Path& q) {
    Path out{obj(x, q.src), obj(x, q.tgt), {}};
    for (GenId h : q.arrows) out.arrows.push_back(rg[x][h]);
    return out;
  };
  // every arrow is whiskered explicitly
  for (ObjId w = 0; w < m.size(); ++w) {
    if (w == m.unit()) continue;
    ObjId wa = w / static_cast<ObjId>(mb.size()), wb = w % static_cast<ObjId>(mb.size());
    for (GenId i = 0; i < p.arrows.size(); ++i) {
      const Arrow& ar = p.arrows[i];
      if (!m.mul(w, ar.src) || !m.mul(w, ar.tgt)) continue;
      const GenRole& role = r.roles[i];
      if (role.source == 0) {
        p.whisker[{w, i}] = lift_a(a->whisker(wa, ca.generator(role.gen)), mb.mul_or_throw(wb, role.whisker));
      } else {
        p.whisker[{w, i}] = lift_b(ma.mul_or_throw(wa, role.whisker), b->whisker(wb, cb.generator(role.gen)));
      }
    }
  }
  for (const Relation& rel : ca.relations()) {
    for (ObjId y = 0; y < mb.size(); ++y) p.relations.push_back({lift_a(rel.lhs, y), lift_a(rel.rhs, y)});
  }
  for (const Relation& rel : cb.relations()) {
    for (ObjId x = 0; x < ma.size(); ++x) p.relations.push_back({lift_b(x, rel.lhs), lift_b(x, rel.rhs)});
  }
  for (GenId g = 0; g < ca.num_arrows(); ++g) {
    const Arrow& f = ca.arrow(g);
    for (GenId h = 0; h < cb.num_arrows(); ++h) {
      const Arrow& k = cb.arrow(h);
      p.relations.push_back({Path{obj(f.src, k.src), obj(f.tgt, k.tgt), {lg[g][k.src], rg[f.tgt][h]}},
                             Path{obj(f.src, k.src), obj(f.tgt, k.tgt), {rg[f.src][h], lg[g][k.tgt]}}});
    }
  }
  if (a->presentation().symmetry_mode != SymmetryMode::Identity || b->presentation().symmetry_mode != SymmetryMode::Identity) {
    p.symmetry_mode = SymmetryMode::Explicit;
    for (ObjId u = 0; u < m.size(); ++u) {
      for (ObjId v = 0; v < m.size(); ++v) {
        if (!m.mul(u, v) || !m.mul(v, u)) continue;
        ObjId x = u / static_cast<ObjId>(mb.size()), y = u % static_cast<ObjId>(mb.size());
        ObjId x2 = v / static_cast<ObjId>(mb.size()), y2 = v % static_cast<ObjId>(mb.size());
        Path s = append(lift_a(a->symmetry(x, x2), mb.mul_or_throw(y, y2)), lift_b(ma.mul_or_throw(x2, x), b->symmetry(y, y2)));
        if (!s.is_identity()) p.symmetry[{u, v}] = s;
      }
    }
  }
  r.target = make_tensor_category(std::move(p));
  r.base = r.target;
  r.base_roles = r.roles;
  auto leg = [&](const TensorPtr& c, bool left, const std::string& nm) {
    Functor f{nm, c->carrier(), r.target->carrier(), {}, {}};
    for (ObjId x = 0; x < c->monoid().size(); ++x) f.on_objects.push_back(left ? obj(x, mb.unit()) : obj(ma.unit(), x));
    for (GenId g = 0; g < c->carrier()->num_arrows(); ++g) {
      f.on_arrows.push_back(r.target->carrier()->generator(left ? lg[g][mb.unit()] : rg[ma.unit()][g]));
    }
    return strict_tensor_functor(c, r.target, f, nm);
  };
  r.universal = {leg(a, true, "i1"), leg(b, false, "i2")};
  return r;
}

TensorFunctor pair_tensor_functors(const TensorConstructionResult& coproduct, const TensorFunctor& f,
                                   const TensorFunctor& g, bool with_symmetry) {
  return pair_impl(coproduct.target, coproduct.roles, f, g, with_symmetry);
}

TensorConstructionResult coinserter_into(const Functor& f, const Functor& g, const TensorPtr& a, const std::string& tag) {
  return cell_into(f, g, a, tag, false);
}

TensorConstructionResult coisoinserter_into(const Functor& f, const Functor& g, const TensorPtr& a, const std::string& tag) {
  return cell_into(f, g, a, tag, true);
}

TensorConstructionResult coequifier_into(const Transformation& alpha, const Transformation& beta, const TensorPtr& a) {
  return coequifier_named(alpha, beta, a, "CoEq(" + alpha.name + "," + beta.name + ")");
}

TensorConstructionResult coequifier_named(const Transformation& alpha, const Transformation& beta, const TensorPtr& a,
                                          const std::string& name) {
  require_into(alpha.source, alpha.target, a);
  if (beta.source.dom != alpha.source.dom || beta.source.on_objects != alpha.source.on_objects ||
      beta.target.on_objects != alpha.target.on_objects || alpha.components.size() != beta.components.size()) {
    throw Error(ErrorCode::NotParallel, alpha.name + " and " + beta.name + " are not parallel");
  }
  Extension ext(a, name);
  ext.layout();
  for (std::size_t i = 0; i < alpha.components.size(); ++i) ext.relation(ext.map(alpha.components[i]), ext.map(beta.components[i]));
  TensorConstructionResult r;
  r.kind = Kind::CoequifierInto;
  r.target = ext.build();
  r.base = a;
  r.index = alpha.source.dom;
  r.in_plain = {alpha.source, alpha.target};
  r.in_plain_cells = {alpha, beta};
  r.roles = ext.roles();
  r.universal = {ext.inclusion()};
  return r;
}

TensorConstructionResult coinserter_tensor(const TensorFunctor& f, const TensorFunctor& g) {
  require_parallel(f, g);
  TensorConstructionResult s1 = coinserter_into(f.functor, g.functor, f.cod);
  return monoidal_stage(std::move(s1), f, g, Kind::Coinserter, "CoIns(" + f.name + "," + g.name + ")");
}

TensorConstructionResult coinverter_tensor(const TensorTransformation& alpha) {
  const TensorFunctor& f = alpha.source;
  const TensorFunctor& g = alpha.target;
  require_parallel(f, g);
  const ObjectMonoid& m = f.dom->monoid();
  Extension ext(f.cod, "CoInv(" + alpha.name + ")");
  std::vector<std::uint32_t> inv;
  for (ObjId x = 0; x < m.size(); ++x) {
    inv.push_back(ext.add_root("inv<" + m.name(x) + ">", g(x), f(x), GenRole::CellInverse, x));
  }
  ext.layout();
  for (ObjId x = 0; x < m.size(); ++x) {
    Path c = ext.map(alpha.components[x]);
    ext.relation(append(c, ext.root(inv[x])), Path{f(x), f(x), {}});
    ext.relation(append(ext.root(inv[x]), c), Path{g(x), g(x), {}});
  }
  TensorConstructionResult r;
  r.kind = Kind::Coinverter;
  r.target = ext.build();
  r.base = f.cod;
  r.index = f.dom->carrier();
  r.in_functors = {f, g};
  r.in_plain = {f.functor, g.functor};
  r.in_cells = {alpha};
  r.in_plain_cells = {alpha.plain()};
  r.roles = ext.roles();
  TensorFunctor p = ext.inclusion();
  r.universal = {p};
  Transformation fwd = push(alpha.plain(), p, "alpha");
  Transformation bwd{"alpha^-1", fwd.target, fwd.source, {}};
  for (auto i : inv) bwd.components.push_back(r.target->carrier()->generator(r.target->declared(i)));
  r.cells = {fwd, bwd};
  r.stages = {r.target};
  return r;
}

TensorConstructionResult coequalizer_tensor(const TensorFunctor& f, const TensorFunctor& g, Route route) {
  require_parallel(f, g);
  if (route == Route::Direct) {
    TensorConstructionResult s1 = coisoinserter_into(f.functor, g.functor, f.cod);
    TensorConstructionResult r = monoidal_stage(std::move(s1), f, g, Kind::Coequalizer, "CoEq(" + f.name + "," + g.name + ")");
    r.route = Route::Direct;
    return r;
  }
  TensorConstructionResult c1 = coinserter_tensor(f, g);
  const TensorFunctor& p1 = c1.universal[0];
  TensorTransformation d{"delta", compose(f, p1), compose(g, p1), c1.cells[0].components};
  TensorConstructionResult c2 = coinverter_tensor(d);
  const TensorFunctor& p2 = c2.universal[0];
  TensorConstructionResult r;
  r.kind = Kind::Coequalizer;
  r.route = Route::Composite;
  r.target = c2.target;
  r.base = f.cod;
  r.index = f.dom->carrier();
  r.in_functors = {f, g};
  r.in_plain = {f.functor, g.functor};
  TensorFunctor p = compose(p1, p2);
  p.name = p.functor.name = "P";
  r.universal = {p};
  for (const GenRole& role : c2.roles) r.roles.push_back(role.type == GenRole::Base ? c1.roles[role.gen] : role);
  Transformation cell{"delta", compose(f.functor, p.functor), compose(g.functor, p.functor), c2.cells[0].components};
  r.cells = {cell, Transformation{"delta^-1", cell.target, cell.source, c2.cells[1].components}};
  r.stages = c1.stages;
  r.stages.push_back(c2.target);
  r.stage_cells = c1.stage_cells;
  return r;
}

TensorConstructionResult pushout_tensor(const TensorFunctor& f, const TensorFunctor& g) {
  if (f.dom != g.dom) throw Error(ErrorCode::NotParallel, f.name + " and " + g.name + " have different domains");
  TensorConstructionResult cp = coproduct_tensor(f.cod, g.cod);
  TensorFunctor fa = compose(f, cp.universal[0]);
  TensorFunctor gb = compose(g, cp.universal[1]);
  TensorConstructionResult s1 = coisoinserter_into(fa.functor, gb.functor, cp.target);
  TensorConstructionResult r = monoidal_stage(std::move(s1), fa, gb, Kind::Pushout, "Push(" + f.name + "," + g.name + ")");
  r.route = Route::Direct;
  r.base = cp.target;
  r.base_roles = cp.roles;
  r.in_categories = {f.cod, g.cod};
  r.in_functors = {f, g};
  r.in_plain = {f.functor, g.functor};
  const TensorFunctor& p = r.universal[0];
  TensorFunctor ia = compose(cp.universal[0], p), ib = compose(cp.universal[1], p);
  ia.name = ia.functor.name = "i1";
  ib.name = ib.functor.name = "i2";
  r.universal = {ia, ib};
  r.stages.insert(r.stages.begin(), cp.target);
  return r;
}

TensorConstructionResult pushout_tensor_composite(const TensorFunctor& f, const TensorFunctor& g) {
  if (f.dom != g.dom) throw Error(ErrorCode::NotParallel, f.name + " and " + g.name + " have different domains");
  TensorConstructionResult cp = coproduct_tensor(f.cod, g.cod);
  TensorFunctor fa = compose(f, cp.universal[0]);
  TensorFunctor gb = compose(g, cp.universal[1]);
  TensorConstructionResult r = coequalizer_tensor(fa, gb, Route::Composite);
  r.kind = Kind::Pushout;
  r.route = Route::Composite;
  r.base = cp.target;
  r.base_roles = cp.roles;
  r.in_categories = {f.cod, g.cod};
  r.in_functors = {f, g};
  r.in_plain = {f.functor, g.functor};
  const TensorFunctor& p = r.universal[0];
  TensorFunctor ia = compose(cp.universal[0], p), ib = compose(cp.universal[1], p);
  ia.name = ia.functor.name = "i1";
  ib.name = ib.functor.name = "i2";
  r.universal = {ia, ib};
  r.stages.insert(r.stages.begin(), cp.target);
  return r;
}

namespace {

Tri paths_equal(const Category& c, const Path& a, const Path& b) {
  if (a.src != b.src || a.tgt != b.tgt) return Tri::Distinct;
  return c.equal(a, b);
}

// Same functor on generators, same unit and multiplication.
Tri tensor_functors_equal(const TensorFunctor& f, const TensorFunctor& g) {
  if (f.functor.on_objects != g.functor.on_objects) return Tri::Distinct;
  Tri t = functors_equal(f.functor, g.functor);
  if (t != Tri::Equal) return t;
  const Category& c = *f.cod->carrier();
  t = paths_equal(c, f.eta, g.eta);
  for (std::size_t x = 0; x < f.mu.size() && t == Tri::Equal; ++x) {
    for (std::size_t y = 0; y < f.mu.size() && t == Tri::Equal; ++y) {
      if (f.mu[x][y].has_value() != g.mu[x][y].has_value()) return Tri::Distinct;
      if (f.mu[x][y]) t = paths_equal(c, *f.mu[x][y], *g.mu[x][y]);
    }
  }
  return t;
}

}  // namespace

TensorConstructionResult directed_colimit_tensor(const TensorDiagram& d) {
  const std::size_t n = d.index.size();
  if (n == 0 || d.categories.size() != n) throw Error(ErrorCode::IncoherentDiagram, "diagram needs one category per index");
  std::vector<std::vector<std::optional<TensorFunctor>>> trans(n, std::vector<std::optional<TensorFunctor>>(n));
  for (std::size_t i = 0; i < n; ++i) trans[i][i] = identity_tensor_functor(d.categories[i]);
  for (const auto& [ij, f] : d.functors) {
    auto [i, j] = ij;
    if (i >= n || j >= n || f.dom != d.categories[i] || f.cod != d.categories[j]) {
      throw Error(ErrorCode::IncoherentDiagram, "functor " + f.name + " has the wrong type");
    }
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [ij, f] : d.functors) {
      auto [j, k] = ij;
      for (std::size_t i = 0; i < n; ++i) {
        if (!trans[i][j]) continue;
        if (i == k && j != k) throw Error(ErrorCode::IncoherentDiagram, "order has a cycle");
        TensorFunctor c = compose(*trans[i][j], f);
        if (!trans[i][k]) {
          trans[i][k] = c;
          changed = true;
        } else if (tensor_functors_equal(*trans[i][k], c) != Tri::Equal) {
          throw Error(ErrorCode::IncoherentDiagram, "transition functors " + d.index[i] + " -> " + d.index[k] + " do not agree");
        }
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
  TensorConstructionResult r;
  r.kind = Kind::Directed;
  r.target = d.categories[*top];
  r.base = r.target;
  r.top = *top;
  r.in_categories = d.categories;
  for (std::size_t i = 0; i < n; ++i) {
    TensorFunctor u = *trans[i][*top];
    u.name = u.functor.name = "u<" + d.index[i] + ">";
    r.universal.push_back(u);
  }
  for (GenId g = 0; g < r.target->carrier()->num_arrows(); ++g) r.roles.push_back(GenRole{GenRole::Base, *top, g, 0, 0});
  return r;
}

TensorFunctor factor_through(const TensorConstructionResult& c, const TensorCocone& q) {
  if (q.legs.empty()) throw Error(ErrorCode::ConditionsNotSatisfied, "cocone has no legs");
  for (const auto& leg : q.legs) {
    if (leg.cod != q.legs[0].cod) throw Error(ErrorCode::ConditionsNotSatisfied, "cocone legs have different codomains");
  }
  if (c.kind == Kind::Directed) {
    if (q.legs.size() != c.universal.size()) throw Error(ErrorCode::ConditionsNotSatisfied, "cocone needs one leg per index");
    TensorFunctor k = q.legs[c.top];
    k.name = k.functor.name = "K";
    for (std::size_t i = 0; i < q.legs.size(); ++i) {
      Tri t = tensor_functors_equal(compose(c.universal[i], k), q.legs[i]);
      if (t == Tri::Distinct) throw Error(ErrorCode::ConditionsNotSatisfied, "leg " + q.legs[i].name + " is not compatible");
      if (t == Tri::Unknown) throw Error(ErrorCode::UnknownEquality, "leg " + q.legs[i].name + " could not be compared");
    }
    return k;
  }
  const bool product_base = c.kind == Kind::Coproduct || c.kind == Kind::Pushout;
  if (product_base && q.legs.size() < 2) throw Error(ErrorCode::ConditionsNotSatisfied, "cocone needs two legs");
  TensorFunctor k0 = product_base ? pair_impl(c.base, c.base_roles, q.legs[0], q.legs[1], true) : q.legs[0];
  if (k0.dom != c.base) throw Error(ErrorCode::ConditionsNotSatisfied, "cocone leg has the wrong domain");
  const TensorCategory& t = *k0.cod;
  const Category& tc = *t.carrier();
  fill_inverses(k0);

  // the cell (and its inverse) as components between images of the base
  std::optional<std::vector<Path>> cell, inverse;
  if (c.kind == Kind::Coinverter) {
    std::vector<Path> fwd, bwd;
    for (const Path& a : c.in_cells[0].components) {
      Path img = k0.functor.apply(a);
      fwd.push_back(img);
      if (img.is_identity()) {
        bwd.push_back(img);
      } else if (tc.finite() && tc.table().is_iso(tc.table().eval(img))) {
        bwd.push_back(tc.table().element[static_cast<std::size_t>(tc.table().inverse_of[static_cast<std::size_t>(tc.table().eval(img))])]);
      } else {
        throw Error(ErrorCode::ConditionsNotSatisfied, "image of " + c.in_cells[0].name + " is not invertible");
      }
    }
    cell = fwd;
    inverse = bwd;
  } else if (q.cell) {
    cell = q.cell->components;
    if (q.inverse) inverse = q.inverse->components;
    if (c.kind == Kind::Pushout) {
      // transport along the units of the legs: K0(F c, 1) = H_A(F c) H_B(1)
      const TensorFunctor& ha = q.legs[0];
      const TensorFunctor& hb = q.legs[1];
      if (!ha.eta_inv || !hb.eta_inv) {
        TensorFunctor a2 = ha, b2 = hb;
        fill_inverses(a2);
        fill_inverses(b2);
        if (!a2.eta_inv || !b2.eta_inv) throw Error(ErrorCode::Unsupported, "unit inverses of the legs are unknown");
        return factor_through(c, TensorCocone{{a2, b2}, q.cell, q.inverse});
      }
      // H_A(Fc) H_B(1) -> H_A(Fc) -> H_B(Gc) -> H_A(1) H_B(Gc)
      for (auto& g : *cell) {
        Path l = t.whisker(g.src, *hb.eta_inv);
        Path r = t.whisker_right(ha.eta, g.tgt);
        g = append(append(l, g), r);
      }
      if (inverse) {
        for (auto& g : *inverse) {
          Path l = t.whisker_right(*ha.eta_inv, g.src);
          Path r = t.whisker(g.tgt, hb.eta);
          g = append(append(l, g), r);
        }
      }
    }
  }

  TensorFunctor k = k0;
  k.name = "K";
  k.dom = c.target;
  k.functor = Functor{"K", c.target->carrier(), t.carrier(), k0.functor.on_objects, {}};
  const ObjectMonoid& m = c.target->monoid();
  for (GenId g = 0; g < c.target->carrier()->num_arrows(); ++g) {
    const GenRole& role = c.roles[g];
    if (role.type == GenRole::Base) {
      k.functor.on_arrows.push_back(k0.functor.on_arrows.at(role.gen));
      continue;
    }
    const auto& comps = role.type == GenRole::Cell ? cell : inverse;
    if (!comps) {
      throw Error(ErrorCode::ConditionsNotSatisfied, role.type == GenRole::Cell ? "cocone lacks its cell" : "cocone cell is not invertible");
    }
    Path gamma = comps->at(role.index);
    if (role.whisker == m.unit()) {
      k.functor.on_arrows.push_back(gamma);
      continue;
    }
    // b * gamma, conjugated by the multiplication of K0
    ObjId b = role.whisker;
    ObjId s = c.target->presentation().arrows[c.target->key(g).i].src;
    ObjId d = c.target->presentation().arrows[c.target->key(g).i].tgt;
    const auto& mi = k0.mu_inv[b][s];
    const auto& mo = k0.mu[b][d];
    if (!mi || !mo) throw Error(ErrorCode::Unsupported, "multiplication of the comparison is not invertible here");
    k.functor.on_arrows.push_back(append(append(*mi, t.whisker(k0(b), gamma)), *mo));
  }
  ValidityReport rep = check_tensor_functor(k);
  if (!rep.valid) {
    throw Error(ErrorCode::ConditionsNotSatisfied, rep.problems.empty() ? "comparison is not a tensor functor" : rep.problems.front());
  }
  if (rep.unknown) throw Error(ErrorCode::UnknownEquality, "comparison tensor functor could not be verified");
  return k;
}

TensorConstructionResult drop_declared_relation(const TensorConstructionResult& c, std::size_t which) {
  TensorPresentation p = c.target->presentation();
  if (which >= p.relations.size()) throw Error(ErrorCode::UnresolvedReference, "no declared relation " + std::to_string(which));
  p.relations.erase(p.relations.begin() + static_cast<long>(which));
  p.name += "-";
  p.finite = false;
  TensorConstructionResult r = c;
  r.target = make_tensor_category(std::move(p));
  const CategoryPtr& cod = r.target->carrier();
  for (auto& u : r.universal) {
    u.cod = r.target;
    u.functor.cod = cod;
  }
  for (auto& t : r.cells) {
    t.source.cod = cod;
    t.target.cod = cod;
  }
  return r;
}

TensorTransformation as_tensor(const Transformation& t, const TensorFunctor& f, const TensorFunctor& g) {
  if (t.components.size() != f.dom->monoid().size()) throw Error(ErrorCode::NotParallel, t.name + " has the wrong number of components");
  return TensorTransformation{t.name, f, g, t.components};
}

}  // namespace catcolim

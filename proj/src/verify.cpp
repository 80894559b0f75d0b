#include "catcolim/verify.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "catcolim/search.hpp"

namespace catcolim {

std::string UPReport::summary() const {
  std::ostringstream os;
  os << (equivalence() ? "equivalence" : unknown ? "undecided" : "not an equivalence")
     << " (well-defined=" << (comparison_well_defined ? "yes" : "no") << ", fully-faithful=" << (fully_faithful ? "yes" : "no")
     << ", essentially-surjective=" << (essentially_surjective ? "yes" : "no") << "; " << source_objects << " functors in "
     << source_classes << " classes, " << target_objects << " cocones in " << target_classes << " classes";
  if (unknown) os << ", " << unknown << " undecided";
  os << ")";
  return os.str();
}

std::vector<int> iso_class_ids(const FiniteView& t) {
  std::vector<int> cls(t.num_objects, -1);
  int next = 0;
  for (ObjId x = 0; x < t.num_objects; ++x) {
    if (cls[x] >= 0) continue;
    cls[x] = next;
    for (ObjId y = x + 1; y < t.num_objects; ++y) {
      for (int e : t.homset(x, y)) {
        if (t.is_iso(e)) {
          cls[y] = next;
          break;
        }
      }
    }
    ++next;
  }
  return cls;
}

namespace {

struct UnionFind {
  std::vector<std::size_t> p;
  explicit UnionFind(std::size_t n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  std::size_t find(std::size_t x) {
    while (p[x] != x) x = p[x] = p[p[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) p[std::max(a, b)] = std::min(a, b);
  }
};

// iso classes of an enumerated category; returns class id per object
std::vector<std::size_t> classes_of(const EnumeratedCategory& c, std::size_t& count) {
  const std::size_t n = c.objects.size();
  UnionFind uf(n);
  std::map<std::vector<int>, std::vector<std::size_t>> reps;  // signature -> class representatives
  for (std::size_t a = 0; a < n; ++a) {
    auto& list = reps[c.signature(a)];
    bool found = false;
    for (std::size_t r : list) {
      if (!c.homs(r, a, true, 1).empty()) {
        uf.unite(r, a);
        found = true;
        break;
      }
    }
    if (!found) list.push_back(a);
  }
  std::vector<std::size_t> id(n);
  std::map<std::size_t, std::size_t> dense;
  for (std::size_t a = 0; a < n; ++a) {
    auto r = uf.find(a);
    auto it = dense.emplace(r, dense.size()).first;
    id[a] = it->second;
  }
  count = dense.size();
  return id;
}

}  // namespace

UPReport compare_categories(const EnumeratedCategory& s, const EnumeratedCategory& t,
                            const std::function<std::vector<int>(std::size_t)>& q_obj,
                            const std::function<std::vector<int>(std::size_t, const std::vector<int>&)>& q_mor) {
  UPReport rep;
  rep.source_objects = s.objects.size();
  rep.target_objects = t.objects.size();
  std::map<std::vector<int>, std::size_t> tindex;
  for (std::size_t i = 0; i < t.objects.size(); ++i) tindex.emplace(t.objects[i], i);
  std::vector<long> image(s.objects.size(), -1);
  for (std::size_t a = 0; a < s.objects.size(); ++a) {
    auto it = tindex.find(q_obj(a));
    if (it == tindex.end()) {
      if (rep.comparison_well_defined) rep.notes.push_back("a functor out of the construction restricts to no valid cocone");
      rep.comparison_well_defined = false;
    } else {
      image[a] = static_cast<long>(it->second);
    }
  }
  std::size_t scount = 0, tcount = 0;
  auto scls = classes_of(s, scount);
  auto tcls = classes_of(t, tcount);
  rep.source_classes = scount;
  rep.target_classes = tcount;
  if (!rep.comparison_well_defined) {
    rep.fully_faithful = false;
  }
  // one representative per source class
  std::vector<std::size_t> srep(scount, std::numeric_limits<std::size_t>::max());
  for (std::size_t a = 0; a < s.objects.size(); ++a) {
    if (srep[scls[a]] == std::numeric_limits<std::size_t>::max()) srep[scls[a]] = a;
  }
  if (rep.comparison_well_defined) {
    for (std::size_t i = 0; i < scount && rep.fully_faithful; ++i) {
      for (std::size_t j = 0; j < scount && rep.fully_faithful; ++j) {
        std::size_t a = srep[i], b = srep[j];
        auto sm = s.homs(a, b, false, std::numeric_limits<std::size_t>::max());
        std::set<std::vector<int>> mapped;
        for (const auto& m : sm) mapped.insert(q_mor(a, m));
        auto tm = t.homs(static_cast<std::size_t>(image[a]), static_cast<std::size_t>(image[b]), false,
                         std::numeric_limits<std::size_t>::max());
        std::set<std::vector<int>> target(tm.begin(), tm.end());
        if (mapped.size() != sm.size()) {
          rep.fully_faithful = false;
          rep.notes.push_back("comparison identifies distinct transformations");
        } else if (mapped != target) {
          rep.fully_faithful = false;
          rep.notes.push_back("comparison is not full");
        }
      }
    }
    // two source classes landing in one target class also breaks faithfulness on isos
    std::set<std::size_t> hit;
    for (std::size_t i = 0; i < scount; ++i) {
      std::size_t c = tcls[static_cast<std::size_t>(image[srep[i]])];
      if (!hit.insert(c).second && rep.fully_faithful) {
        rep.fully_faithful = false;
        rep.notes.push_back("non-isomorphic functors give isomorphic cocones");
      }
    }
    rep.essentially_surjective = hit.size() == tcount;
    if (!rep.essentially_surjective) rep.notes.push_back("some cocone is not induced by a functor");
  } else {
    std::set<std::size_t> hit;
    for (std::size_t a = 0; a < s.objects.size(); ++a) {
      if (image[a] >= 0) hit.insert(tcls[static_cast<std::size_t>(image[a])]);
    }
    rep.essentially_surjective = hit.size() == tcount;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Cat constructions

namespace {

struct CellShape {
  std::size_t from_leg = 0, to_leg = 0;
  Functor f, g;  // index category -> leg domains
  bool invertible = false;
};

struct ConeShape {
  std::vector<CategoryPtr> legs;
  std::vector<CellShape> cells;
  std::vector<std::pair<Transformation, Transformation>> equified;  // on leg 0
  std::vector<Transformation> inverted;                             // on leg 0
  // relations among cells: pairs of cell-paths per index object
  struct CellRelation {
    std::vector<std::size_t> lhs, rhs;  // cell ids composed in order
    std::size_t start_leg = 0;
  };
  std::vector<CellRelation> cell_relations;
};

ConeShape cone_shape(const ConstructionResult& c) {
  ConeShape s;
  switch (c.kind) {
    case Kind::Coproduct:
      s.legs = {c.in_categories[0], c.in_categories[1]};
      break;
    case Kind::Coinserter:
      s.legs = {c.in_functors[0].cod};
      s.cells.push_back({0, 0, c.in_functors[0], c.in_functors[1], false});
      break;
    case Kind::Coequifier:
      s.legs = {c.in_functors[0].cod};
      s.equified.emplace_back(c.in_cells[0], c.in_cells[1]);
      break;
    case Kind::Coinverter:
      s.legs = {c.in_functors[0].cod};
      s.inverted.push_back(c.in_cells[0]);
      break;
    case Kind::Coequalizer:
      s.legs = {c.in_functors[0].cod};
      s.cells.push_back({0, 0, c.in_functors[0], c.in_functors[1], true});
      break;
    case Kind::Pushout:
      s.legs = {c.in_functors[0].cod, c.in_functors[1].cod};
      s.cells.push_back({0, 1, c.in_functors[0], c.in_functors[1], true});
      break;
    case Kind::TensorWith: {
      const CategoryPtr& x = c.in_categories[0];
      const CategoryPtr& a = c.in_categories[1];
      for (ObjId o = 0; o < x->num_objects(); ++o) s.legs.push_back(a);
      Functor id = identity_functor(a);
      for (GenId m = 0; m < x->num_arrows(); ++m) {
        s.cells.push_back({x->arrow(m).src, x->arrow(m).tgt, id, id, false});
      }
      for (const Relation& r : x->relations()) {
        ConeShape::CellRelation cr;
        cr.lhs.assign(r.lhs.arrows.begin(), r.lhs.arrows.end());
        cr.rhs.assign(r.rhs.arrows.begin(), r.rhs.arrows.end());
        cr.start_leg = r.lhs.src;
        s.cell_relations.push_back(cr);
      }
      break;
    }
    default:
      throw Error(ErrorCode::Unsupported, std::string("no universal-property check for ") + kind_name(c.kind));
  }
  return s;
}

// slot layout: leg s, object x of its domain
struct Slots {
  std::vector<std::size_t> offset;  // per leg
  std::size_t total = 0;
  explicit Slots(const ConeShape& s) {
    for (const auto& l : s.legs) {
      offset.push_back(total);
      total += l->num_objects();
    }
  }
  std::size_t at(std::size_t leg, ObjId x) const { return offset[leg] + x; }
};

// encoded cone: per leg [objects..., arrows...], then cells [components...]
struct ConeLayout {
  std::vector<std::size_t> leg_offset;
  std::vector<std::size_t> cell_offset;
  std::size_t total = 0;
  explicit ConeLayout(const ConeShape& s) {
    for (const auto& l : s.legs) {
      leg_offset.push_back(total);
      total += l->num_objects() + l->num_arrows();
    }
    for (const auto& c : s.cells) {
      cell_offset.push_back(total);
      total += c.f.dom->num_objects();
    }
  }
};

int eval_leg(const FiniteView& t, const std::vector<int>& cone, std::size_t off, const Category& dom, const Path& p) {
  int cur = t.identity[static_cast<std::size_t>(cone[off + p.src])];
  for (GenId g : p.arrows) cur = t.compose(cur, cone[off + dom.num_objects() + g]);
  return cur;
}

std::vector<int> iso_filter(const FiniteView& t, const std::vector<int>& hs) {
  std::vector<int> out;
  for (int e : hs) {
    if (t.is_iso(e)) out.push_back(e);
  }
  return out;
}

std::vector<std::vector<int>> enumerate_cones(const ConeShape& shape, const FiniteView& t, const CategoryPtr& tc) {
  ConeLayout lay(shape);
  std::vector<std::vector<TableFunctor>> legs;
  for (std::size_t s = 0; s < shape.legs.size(); ++s) {
    auto fs = enumerate_table_functors(*shape.legs[s], *tc);
    if (s == 0) {
      std::vector<TableFunctor> keep;
      for (auto& f : fs) {
        bool ok = true;
        for (const auto& [al, be] : shape.equified) {
          for (std::size_t x = 0; x < al.components.size() && ok; ++x) {
            ok = eval(t, f, al.components[x]) == eval(t, f, be.components[x]);
          }
        }
        for (const auto& al : shape.inverted) {
          for (std::size_t x = 0; x < al.components.size() && ok; ++x) ok = t.is_iso(eval(t, f, al.components[x]));
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
      for (const auto& f : legs[s]) {
        std::copy(f.objects.begin(), f.objects.end(), cone.begin() + static_cast<long>(lay.leg_offset[s]));
        std::copy(f.arrows.begin(), f.arrows.end(),
                  cone.begin() + static_cast<long>(lay.leg_offset[s] + shape.legs[s]->num_objects()));
        choose(s + 1);
      }
      return;
    }
    // cells
    Search srch;
    std::vector<std::size_t> cell_var(shape.cells.size());
    for (std::size_t k = 0; k < shape.cells.size(); ++k) {
      const CellShape& cs = shape.cells[k];
      cell_var[k] = srch.size();
      for (ObjId i = 0; i < cs.f.dom->num_objects(); ++i) {
        int src = cone[lay.leg_offset[cs.from_leg] + cs.f(i)];
        int tgt = cone[lay.leg_offset[cs.to_leg] + cs.g(i)];
        auto hs = t.homset(static_cast<ObjId>(src), static_cast<ObjId>(tgt));
        srch.add_fixed(cs.invertible ? iso_filter(t, hs) : hs);
      }
      for (GenId h = 0; h < cs.f.dom->num_arrows(); ++h) {
        const Arrow& ar = cs.f.dom->arrow(h);
        std::size_t vi = cell_var[k] + ar.src, vj = cell_var[k] + ar.tgt;
        int qg = eval_leg(t, cone, lay.leg_offset[cs.to_leg], *shape.legs[cs.to_leg], cs.g.on_arrows[h]);
        int qf = eval_leg(t, cone, lay.leg_offset[cs.from_leg], *shape.legs[cs.from_leg], cs.f.on_arrows[h]);
        srch.add_constraint(std::max(vi, vj), [&t, vi, vj, qg, qf](const Search::Assignment& as) {
          return t.compose(as[vi], qg) == t.compose(qf, as[vj]);
        });
      }
    }
    if (!shape.cell_relations.empty() && srch.size() > 0) {
      const std::size_t last = srch.size() - 1;
      srch.add_constraint(last, [&](const Search::Assignment& as) {
        for (const auto& cr : shape.cell_relations) {
          const CellShape& c0 = shape.cells.empty() ? CellShape{} : shape.cells[0];
          for (ObjId i = 0; i < c0.f.dom->num_objects(); ++i) {
            auto run = [&](const std::vector<std::size_t>& path) {
              int cur = t.identity[static_cast<std::size_t>(cone[lay.leg_offset[cr.start_leg] + i])];
              for (std::size_t k : path) cur = t.compose(cur, as[cell_var[k] + i]);
              return cur;
            };
            if (run(cr.lhs) != run(cr.rhs)) return false;
          }
        }
        return true;
      });
    }
    srch.run([&](const Search::Assignment& as) {
      std::vector<int> full = cone;
      for (std::size_t k = 0; k < shape.cells.size(); ++k) {
        for (ObjId i = 0; i < shape.cells[k].f.dom->num_objects(); ++i) {
          full[lay.cell_offset[k] + i] = as[cell_var[k] + i];
        }
      }
      out.push_back(std::move(full));
      return true;
    });
  };
  choose(0);
  return out;
}

}  // namespace

UPReport check_universal(const ConstructionResult& c, const CategoryPtr& tc) {
  ConeShape shape = cone_shape(c);
  const FiniteView& t = tc->table();
  const std::vector<int> tcls = iso_class_ids(t);
  const Category& dom = *c.target;
  Slots slots(shape);
  ConeLayout lay(shape);
  // slot -> object of the construction
  std::vector<ObjId> slot_obj(slots.total);
  for (std::size_t s = 0; s < shape.legs.size(); ++s) {
    for (ObjId x = 0; x < shape.legs[s]->num_objects(); ++x) slot_obj[slots.at(s, x)] = c.universal[s](x);
  }

  // source: functors out of the construction
  EnumeratedCategory src;
  std::vector<TableFunctor> ks = enumerate_table_functors(dom, *tc);
  for (const auto& k : ks) {
    std::vector<int> enc(k.objects.begin(), k.objects.end());
    enc.insert(enc.end(), k.arrows.begin(), k.arrows.end());
    src.objects.push_back(std::move(enc));
  }
  src.signature = [&](std::size_t a) {
    std::vector<int> sig;
    for (ObjId x : ks[a].objects) sig.push_back(tcls[x]);
    return sig;
  };
  src.homs = [&](std::size_t a, std::size_t b, bool iso_only, std::size_t limit) {
    const TableFunctor& ka = ks[a];
    const TableFunctor& kb = ks[b];
    Search s;
    for (ObjId x = 0; x < dom.num_objects(); ++x) {
      auto hs = t.homset(ka.objects[x], kb.objects[x]);
      s.add_fixed(iso_only ? iso_filter(t, hs) : hs);
    }
    for (GenId g = 0; g < dom.num_arrows(); ++g) {
      const Arrow& ar = dom.arrow(g);
      int fa = ka.arrows[g], fb = kb.arrows[g];
      s.add_constraint(std::max(ar.src, ar.tgt), [&t, ar, fa, fb](const Search::Assignment& as) {
        return t.compose(as[ar.src], fb) == t.compose(fa, as[ar.tgt]);
      });
    }
    std::vector<std::vector<int>> out;
    s.run([&](const Search::Assignment& as) {
      out.push_back(as);
      return out.size() < limit;
    });
    return out;
  };

  // target: cocones
  EnumeratedCategory tgt;
  tgt.objects = enumerate_cones(shape, t, tc);
  tgt.signature = [&](std::size_t a) {
    std::vector<int> sig;
    for (std::size_t s = 0; s < shape.legs.size(); ++s) {
      for (ObjId x = 0; x < shape.legs[s]->num_objects(); ++x) sig.push_back(tcls[static_cast<std::size_t>(tgt.objects[a][lay.leg_offset[s] + x])]);
    }
    return sig;
  };
  tgt.homs = [&](std::size_t a, std::size_t b, bool iso_only, std::size_t limit) {
    const auto& ca = tgt.objects[a];
    const auto& cb = tgt.objects[b];
    Search s;
    for (std::size_t l = 0; l < shape.legs.size(); ++l) {
      for (ObjId x = 0; x < shape.legs[l]->num_objects(); ++x) {
        auto hs = t.homset(static_cast<ObjId>(ca[lay.leg_offset[l] + x]), static_cast<ObjId>(cb[lay.leg_offset[l] + x]));
        s.add_fixed(iso_only ? iso_filter(t, hs) : hs);
      }
    }
    for (std::size_t l = 0; l < shape.legs.size(); ++l) {
      const Category& ld = *shape.legs[l];
      for (GenId g = 0; g < ld.num_arrows(); ++g) {
        const Arrow& ar = ld.arrow(g);
        std::size_t vi = slots.at(l, ar.src), vj = slots.at(l, ar.tgt);
        int fa = ca[lay.leg_offset[l] + ld.num_objects() + g];
        int fb = cb[lay.leg_offset[l] + ld.num_objects() + g];
        s.add_constraint(std::max(vi, vj), [&t, vi, vj, fa, fb](const Search::Assignment& as) {
          return t.compose(as[vi], fb) == t.compose(fa, as[vj]);
        });
      }
    }
    for (std::size_t k = 0; k < shape.cells.size(); ++k) {
      const CellShape& cs = shape.cells[k];
      for (ObjId i = 0; i < cs.f.dom->num_objects(); ++i) {
        std::size_t vi = slots.at(cs.from_leg, cs.f(i)), vj = slots.at(cs.to_leg, cs.g(i));
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
    const TableFunctor& k = ks[a];
    std::vector<int> cone(lay.total, -1);
    for (std::size_t s = 0; s < shape.legs.size(); ++s) {
      const Functor& u = c.universal[s];
      const Category& ld = *shape.legs[s];
      for (ObjId x = 0; x < ld.num_objects(); ++x) cone[lay.leg_offset[s] + x] = static_cast<int>(k.objects[u(x)]);
      for (GenId g = 0; g < ld.num_arrows(); ++g) {
        cone[lay.leg_offset[s] + ld.num_objects() + g] = eval(t, k, u.on_arrows[g]);
      }
    }
    for (std::size_t j = 0; j < shape.cells.size(); ++j) {
      const Transformation& cell = c.cells[j];
      for (std::size_t i = 0; i < cell.components.size(); ++i) {
        cone[lay.cell_offset[j] + i] = eval(t, k, cell.components[i]);
      }
    }
    return cone;
  };
  auto q_mor = [&](std::size_t, const std::vector<int>& theta) {
    std::vector<int> out(slots.total);
    for (std::size_t i = 0; i < slots.total; ++i) out[i] = theta[slot_obj[i]];
    return out;
  };
  return compare_categories(src, tgt, q_obj, q_mor);
}

}  // namespace catcolim

#include "catcolim/category.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>
#include <set>

namespace catcolim {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnresolvedReference: return "UnresolvedReference";
    case ErrorCode::NonParallelRelation: return "NonParallelRelation";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::NotComposable: return "NotComposable";
    case ErrorCode::NotParallel: return "NotParallel";
    case ErrorCode::NotSaturated: return "NotSaturated";
    case ErrorCode::IncoherentDiagram: return "IncoherentDiagram";
    case ErrorCode::NoncommutativeObjectTable: return "NoncommutativeObjectTable";
    case ErrorCode::IncoherentSymmetry: return "IncoherentSymmetry";
    case ErrorCode::IllDefinedProduct: return "IllDefinedProduct";
    case ErrorCode::ConditionsNotSatisfied: return "ConditionsNotSatisfied";
    case ErrorCode::UnknownEquality: return "UnknownEquality";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::Unsupported: return "Unsupported";
  }
  return "Error";
}

const char* tri_name(Tri t) {
  switch (t) {
    case Tri::Equal: return "Equal";
    case Tri::Distinct: return "Distinct";
    case Tri::Unknown: return "Unknown";
  }
  return "?";
}

bool SaturationReport::all_closed() const {
  return std::all_of(homs.begin(), homs.end(), [](const HomInfo& h) { return h.status == HomStatus::Closed; });
}

std::size_t SaturationReport::total() const {
  std::size_t n = 0;
  for (const auto& h : homs) {
    if (h.status == HomStatus::Closed) n += h.size;
  }
  return n;
}

int FiniteView::eval(const Path& p) const {
  int cur = identity[p.src];
  for (GenId g : p.arrows) cur = compose(cur, gen_element[g]);
  return cur;
}

// ---------------------------------------------------------------------------
// names and path text

namespace {

const std::set<std::string, std::less<>>& keywords() {
  static const std::set<std::string, std::less<>> k = {
      "category", "tensor", "functor", "transformation", "construction", "diagram", "objects", "arrows",
      "relations", "unit", "table", "whisker", "symmetry", "backend", "mode", "eta", "mu", "id",
      "index", "order", "functors", "categories", "kind", "inputs", "outputs", "free", "identity",
      "words", "generators", "max_length", "rewrite", "finite", "presented", "object_table", "sigma",
      "route", "target", "universal", "cells"};
  return k;
}

}  // namespace

bool is_plain_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  }
  return keywords().find(s) == keywords().end();
}

std::string quote_name(std::string_view s) {
  if (is_plain_identifier(s)) return std::string(s);
  std::string out = "'";
  for (char c : s) {
    out += c;
    if (c == '\'') out += '\'';
  }
  out += '\'';
  return out;
}

std::vector<std::string> split_path_terms(std::string_view text) {
  std::vector<std::string> terms;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (quoted) {
      cur += c;
      if (c == '\'') {
        if (i + 1 < text.size() && text[i + 1] == '\'') {
          cur += '\'';
          ++i;
        } else {
          quoted = false;
        }
      }
      continue;
    }
    if (c == '\'') {
      quoted = true;
      cur += c;
    } else if (c == ';') {
      terms.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (quoted) throw Error(ErrorCode::ParseError, "unterminated quote in '" + std::string(text) + "'");
  terms.push_back(cur);
  return terms;
}

namespace {

std::string unquote(const std::string& term) {
  if (term.size() >= 2 && term.front() == '\'' && term.back() == '\'') {
    std::string out;
    for (std::size_t i = 1; i + 1 < term.size(); ++i) {
      out += term[i];
      if (term[i] == '\'') ++i;
    }
    return out;
  }
  return term;
}

// Parses a path given name lookups; shared by Category and CategoryBuilder.
Path parse_path_with(std::string_view text, const Quiver& q,
                     const std::function<std::optional<ObjId>(const std::string&)>& find_obj,
                     const std::function<std::optional<GenId>(const std::string&)>& find_arrow) {
  auto terms = split_path_terms(text);
  Path p;
  bool first = true;
  for (const auto& raw : terms) {
    if (raw.empty()) throw Error(ErrorCode::ParseError, "empty term in path '" + std::string(text) + "'");
    if (raw.size() > 4 && raw.compare(0, 3, "id(") == 0 && raw.back() == ')') {
      std::string obj = unquote(raw.substr(3, raw.size() - 4));
      auto x = find_obj(obj);
      if (!x) throw Error(ErrorCode::UnresolvedReference, "unknown object '" + obj + "'");
      if (first) {
        p.src = p.tgt = *x;
      } else if (p.tgt != *x) {
        throw Error(ErrorCode::NotComposable, "identity on '" + obj + "' does not compose in '" + std::string(text) + "'");
      }
      first = false;
      continue;
    }
    std::string name = unquote(raw);
    auto g = find_arrow(name);
    if (!g) throw Error(ErrorCode::UnresolvedReference, "unknown arrow '" + name + "'");
    const Arrow& a = q.arrows[*g];
    if (first) {
      p.src = a.src;
    } else if (p.tgt != a.src) {
      throw Error(ErrorCode::NotComposable, "arrow '" + name + "' does not compose in '" + std::string(text) + "'");
    }
    p.tgt = a.tgt;
    p.arrows.push_back(*g);
    first = false;
  }
  return p;
}

}  // namespace

// ---------------------------------------------------------------------------
// Category

Category::Category(std::string name, Quiver quiver, std::vector<Relation> relations, Backend backend, Bounds bounds)
    : name_(std::move(name)), quiver_(std::move(quiver)), relations_(std::move(relations)), backend_(backend), bounds_(bounds) {
  for (ObjId x = 0; x < quiver_.objects.size(); ++x) {
    if (!object_index_.emplace(quiver_.objects[x], x).second) {
      throw Error(ErrorCode::DuplicateName, "object '" + quiver_.objects[x] + "' in " + name_);
    }
  }
  for (GenId g = 0; g < quiver_.arrows.size(); ++g) {
    const Arrow& a = quiver_.arrows[g];
    if (a.src >= quiver_.objects.size() || a.tgt >= quiver_.objects.size()) {
      throw Error(ErrorCode::UnresolvedReference, "arrow '" + a.name + "' has an unknown endpoint");
    }
    if (!arrow_index_.emplace(a.name, g).second) {
      throw Error(ErrorCode::DuplicateName, "arrow '" + a.name + "' in " + name_);
    }
  }
  std::vector<std::pair<Word, Word>> eqs;
  for (const auto& r : relations_) {
    check_path(r.lhs);
    check_path(r.rhs);
    if (r.lhs.src != r.rhs.src || r.lhs.tgt != r.rhs.tgt) {
      throw Error(ErrorCode::NonParallelRelation, format_path(r.lhs) + " = " + format_path(r.rhs) + " in " + name_);
    }
    eqs.emplace_back(r.lhs.arrows, r.rhs.arrows);
  }
  // letters ordered by arrow name
  std::vector<GenId> order(quiver_.arrows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](GenId a, GenId b) { return quiver_.arrows[a].name < quiver_.arrows[b].name; });
  std::vector<std::uint32_t> rank(order.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
  rewriting_ = RewriteSystem(std::move(rank), CompletionLimits{bounds_.max_len, bounds_.max_rules});
  rewriting_.complete(eqs);
  if (backend_ == Backend::Table) {
    if (!saturation().all_closed()) {
      throw Error(ErrorCode::NotSaturated, "table-backed category " + name_ + " does not close within bounds");
    }
  }
}

CategoryPtr make_category(std::string name, Quiver quiver, std::vector<Relation> relations, Backend backend, Bounds bounds) {
  return std::make_shared<const Category>(std::move(name), std::move(quiver), std::move(relations), backend, bounds);
}

std::optional<ObjId> Category::find_object(std::string_view name) const {
  auto it = object_index_.find(std::string(name));
  if (it == object_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<GenId> Category::find_arrow(std::string_view name) const {
  auto it = arrow_index_.find(std::string(name));
  if (it == arrow_index_.end()) return std::nullopt;
  return it->second;
}

ObjId Category::object(std::string_view name) const {
  auto x = find_object(name);
  if (!x) throw Error(ErrorCode::UnresolvedReference, "unknown object '" + std::string(name) + "' in " + name_);
  return *x;
}

Path Category::generator(GenId g) const {
  const Arrow& a = quiver_.arrows[g];
  return Path{a.src, a.tgt, {g}};
}

void Category::check_path(const Path& p) const {
  if (p.src >= num_objects() || p.tgt >= num_objects()) {
    throw Error(ErrorCode::NotComposable, "path endpoint out of range in " + name_);
  }
  ObjId cur = p.src;
  for (GenId g : p.arrows) {
    if (g >= num_arrows() || quiver_.arrows[g].src != cur) {
      throw Error(ErrorCode::NotComposable, "path is not composable in " + name_);
    }
    cur = quiver_.arrows[g].tgt;
  }
  if (cur != p.tgt) throw Error(ErrorCode::NotComposable, "path target mismatch in " + name_);
}

Path Category::compose(const Path& a, const Path& b) const {
  if (a.tgt != b.src) {
    throw Error(ErrorCode::NotComposable, format_path(a) + " then " + format_path(b) + " in " + name_);
  }
  Path p{a.src, b.tgt, a.arrows};
  p.arrows.insert(p.arrows.end(), b.arrows.begin(), b.arrows.end());
  return normalize(p);
}

Path Category::normalize(const Path& p) const {
  return Path{p.src, p.tgt, rewriting_.reduce(p.arrows)};
}

bool Category::shortlex_less(const Path& a, const Path& b) const {
  if (a.src != b.src) return a.src < b.src;
  if (a.tgt != b.tgt) return a.tgt < b.tgt;
  return rewriting_.less(a.arrows, b.arrows);
}

Tri Category::equal(const Path& a, const Path& b) const {
  if (a.src != b.src || a.tgt != b.tgt) {
    throw Error(ErrorCode::NotParallel, format_path(a) + " vs " + format_path(b) + " in " + name_);
  }
  if (rewriting_.reduce(a.arrows) == rewriting_.reduce(b.arrows)) return Tri::Equal;
  return rewriting_.confluent() ? Tri::Distinct : Tri::Unknown;
}

Path Category::parse_path(std::string_view text) const {
  return parse_path_with(
      text, quiver_, [&](const std::string& s) { return find_object(s); },
      [&](const std::string& s) { return find_arrow(s); });
}

std::string Category::format_path(const Path& p) const {
  if (p.arrows.empty()) return "id(" + quote_name(quiver_.objects[p.src]) + ")";
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += ";";
    out += quote_name(quiver_.arrows[p.arrows[i]].name);
  }
  return out;
}

std::string Category::format_relation(const Relation& r) const {
  return format_path(r.lhs) + " = " + format_path(r.rhs);
}

// ---------------------------------------------------------------------------
// saturation: irreducible words are the walks of an Aho-Corasick automaton
// over the rule left-hand sides that avoid terminal states.

namespace {

struct Automaton {
  struct Node {
    std::map<GenId, int> next;
    int fail = 0;
    bool terminal = false;
    GenId last = 0;
  };
  std::vector<Node> nodes;

  explicit Automaton(const std::vector<RewriteRule>& rules) {
    nodes.emplace_back();
    for (const auto& r : rules) {
      int cur = 0;
      for (GenId g : r.lhs) {
        auto it = nodes[cur].next.find(g);
        if (it == nodes[cur].next.end()) {
          nodes.emplace_back();
          nodes.back().last = g;
          int id = static_cast<int>(nodes.size()) - 1;
          nodes[cur].next.emplace(g, id);
          cur = id;
        } else {
          cur = it->second;
        }
      }
      nodes[cur].terminal = true;
    }
    std::vector<int> queue;
    for (auto& [g, child] : nodes[0].next) {
      nodes[child].fail = 0;
      queue.push_back(child);
    }
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      int v = queue[qi];
      nodes[v].terminal = nodes[v].terminal || nodes[nodes[v].fail].terminal;
      for (auto& [g, child] : nodes[v].next) {
        nodes[child].fail = step(nodes[v].fail, g);
        queue.push_back(child);
      }
    }
  }

  int step(int v, GenId g) const {
    while (true) {
      auto it = nodes[v].next.find(g);
      if (it != nodes[v].next.end()) return it->second;
      if (v == 0) return 0;
      v = nodes[v].fail;
    }
  }
};

}  // namespace

void Category::saturate() const {
  const std::size_t n = num_objects();
  sat_.num_objects = n;
  sat_.rewriting_complete = rewriting_.confluent();
  sat_.homs.assign(n * n, HomInfo{});
  hom_elements_.assign(n * n, {});
  if (!rewriting_.confluent()) return;

  Automaton ac(rewriting_.rules());
  const int nn = static_cast<int>(ac.nodes.size());
  // states: trie nodes 1..nn-1 (object = target of last letter), then nn + x for the root at x
  const int ns = nn + static_cast<int>(n);
  auto obj_of = [&](int s) -> ObjId { return s >= nn ? static_cast<ObjId>(s - nn) : quiver_.arrows[ac.nodes[s].last].tgt; };
  std::vector<std::vector<GenId>> out_arrows(n);
  for (GenId g = 0; g < num_arrows(); ++g) out_arrows[quiver_.arrows[g].src].push_back(g);
  std::vector<std::vector<std::pair<GenId, int>>> edges(ns);
  for (int s = 1; s < ns; ++s) {
    ObjId o = obj_of(s);
    int node = s >= nn ? 0 : s;
    for (GenId g : out_arrows[o]) {
      int w = ac.step(node, g);
      if (ac.nodes[w].terminal) continue;
      int t = w == 0 ? nn + static_cast<int>(quiver_.arrows[g].tgt) : w;
      edges[s].emplace_back(g, t);
    }
  }
  // strongly connected components (iterative Tarjan)
  std::vector<int> index(ns, -1), low(ns, 0), comp(ns, -1);
  std::vector<char> on_stack(ns, 0);
  std::vector<int> stack;
  int counter = 0, ncomp = 0;
  std::vector<char> cyclic_comp;
  for (int root = 1; root < ns; ++root) {
    if (index[root] >= 0) continue;
    std::vector<std::pair<int, std::size_t>> call{{root, 0}};
    index[root] = low[root] = counter++;
    stack.push_back(root);
    on_stack[root] = 1;
    while (!call.empty()) {
      auto& [v, ei] = call.back();
      if (ei < edges[v].size()) {
        int w = edges[v][ei++].second;
        if (index[w] < 0) {
          index[w] = low[w] = counter++;
          stack.push_back(w);
          on_stack[w] = 1;
          call.emplace_back(w, 0);
        } else if (on_stack[w]) {
          low[v] = std::min(low[v], index[w]);
        }
        continue;
      }
      if (low[v] == index[v]) {
        std::size_t count = 0;
        bool self = false;
        while (true) {
          int w = stack.back();
          stack.pop_back();
          on_stack[w] = 0;
          comp[w] = ncomp;
          ++count;
          if (w == v) break;
        }
        for (auto& e : edges[v]) self = self || e.second == v;
        cyclic_comp.push_back(count > 1 || self);
        ++ncomp;
      }
      int done = v;
      call.pop_back();
      if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
    }
  }
  std::vector<std::vector<int>> redges(ns);
  for (int s = 1; s < ns; ++s) {
    for (auto& e : edges[s]) redges[e.second].push_back(s);
  }
  const std::size_t cap = bounds_.max_hom;
  for (ObjId y = 0; y < n; ++y) {
    // states that can reach a state sitting at y
    std::vector<char> reach_y(ns, 0);
    std::vector<int> work;
    for (int s = 1; s < ns; ++s) {
      if (obj_of(s) == y) {
        reach_y[s] = 1;
        work.push_back(s);
      }
    }
    while (!work.empty()) {
      int s = work.back();
      work.pop_back();
      for (int p : redges[s]) {
        if (!reach_y[p]) {
          reach_y[p] = 1;
          work.push_back(p);
        }
      }
    }
    for (ObjId x = 0; x < n; ++x) {
      HomInfo& info = sat_.homs[x * n + y];
      int start = nn + static_cast<int>(x);
      if (!reach_y[start]) {
        info = {HomStatus::Closed, 0};
        continue;
      }
      // reachable part restricted to reach_y
      std::vector<char> seen(ns, 0);
      std::vector<int> stackv{start};
      seen[start] = 1;
      bool infinite = false;
      while (!stackv.empty() && !infinite) {
        int s = stackv.back();
        stackv.pop_back();
        if (cyclic_comp[static_cast<std::size_t>(comp[s])]) infinite = true;
        for (auto& e : edges[s]) {
          if (reach_y[e.second] && !seen[e.second]) {
            seen[e.second] = 1;
            stackv.push_back(e.second);
          }
        }
      }
      if (infinite) {
        info = {HomStatus::Open, 0};
        continue;
      }
      // count walks (acyclic region), saturating above the cap
      std::vector<long long> memo(ns, -1);
      std::function<long long(int)> count = [&](int s) -> long long {
        if (memo[s] >= 0) return memo[s];
        long long c = obj_of(s) == y ? 1 : 0;
        for (auto& e : edges[s]) {
          if (reach_y[e.second]) c = std::min<long long>(c + count(e.second), static_cast<long long>(cap) + 1);
        }
        return memo[s] = c;
      };
      long long total = count(start);
      if (static_cast<std::size_t>(total) > cap) {
        info = {HomStatus::Open, 0};
        continue;
      }
      std::vector<Path> elems;
      Word w;
      std::function<void(int)> walk = [&](int s) {
        if (obj_of(s) == y) elems.push_back(Path{x, y, w});
        for (auto& e : edges[s]) {
          if (!reach_y[e.second]) continue;
          w.push_back(e.first);
          walk(e.second);
          w.pop_back();
        }
      };
      walk(start);
      std::sort(elems.begin(), elems.end(), [&](const Path& a, const Path& b) { return rewriting_.less(a.arrows, b.arrows); });
      info = {HomStatus::Closed, elems.size()};
      hom_elements_[x * n + y] = std::move(elems);
    }
  }
}

const SaturationReport& Category::saturation() const {
  std::call_once(sat_once_, [this] { saturate(); });
  return sat_;
}

std::vector<Path> Category::hom(ObjId x, ObjId y) const {
  const auto& sat = saturation();
  if (sat.at(x, y).status != HomStatus::Closed) {
    throw Error(ErrorCode::NotSaturated, "Hom(" + object_name(x) + ", " + object_name(y) + ") in " + name_ + " is open");
  }
  return hom_elements_[x * num_objects() + y];
}

void Category::build_table() const {
  const auto& sat = saturation();
  if (!sat.all_closed()) throw Error(ErrorCode::NotSaturated, name_ + " is not finite within bounds");
  auto view = std::make_unique<FiniteView>();
  const std::size_t n = num_objects();
  view->num_objects = n;
  view->hom.assign(n * n, {});
  std::map<std::pair<ObjId, Word>, int> lookup;
  for (ObjId x = 0; x < n; ++x) {
    for (ObjId y = 0; y < n; ++y) {
      for (const Path& p : hom_elements_[x * n + y]) {
        int id = static_cast<int>(view->src.size());
        view->src.push_back(x);
        view->tgt.push_back(y);
        view->element.push_back(p);
        view->hom[x * n + y].push_back(id);
        lookup.emplace(std::make_pair(x, p.arrows), id);
      }
    }
  }
  const std::size_t m = view->size();
  view->identity.resize(n);
  for (ObjId x = 0; x < n; ++x) view->identity[x] = lookup.at({x, Word{}});
  view->gen_element.resize(num_arrows());
  for (GenId g = 0; g < num_arrows(); ++g) {
    Path p = normalize(generator(g));
    view->gen_element[g] = lookup.at({p.src, p.arrows});
  }
  view->table.assign(m * m, -1);
  for (std::size_t f = 0; f < m; ++f) {
    for (ObjId z = 0; z < n; ++z) {
      for (int g : view->hom[view->tgt[f] * n + z]) {
        Word w = view->element[f].arrows;
        w.insert(w.end(), view->element[g].arrows.begin(), view->element[g].arrows.end());
        view->table[f * m + static_cast<std::size_t>(g)] = lookup.at({view->src[f], rewriting_.reduce(w)});
      }
    }
  }
  view->inverse_of.assign(m, -1);
  for (std::size_t f = 0; f < m; ++f) {
    for (int g : view->hom[view->tgt[f] * n + view->src[f]]) {
      if (view->table[f * m + static_cast<std::size_t>(g)] == view->identity[view->src[f]] &&
          view->table[static_cast<std::size_t>(g) * m + f] == view->identity[view->tgt[f]]) {
        view->inverse_of[f] = g;
        break;
      }
    }
  }
  table_ = std::move(view);
}

const FiniteView& Category::table() const {
  std::call_once(table_once_, [this] { build_table(); });
  return *table_;
}

// ---------------------------------------------------------------------------
// builder

ObjId CategoryBuilder::object(const std::string& name) {
  if (objs_.count(name)) throw Error(ErrorCode::DuplicateName, "object '" + name + "' in " + name_);
  ObjId id = static_cast<ObjId>(quiver_.objects.size());
  quiver_.objects.push_back(name);
  objs_.emplace(name, id);
  return id;
}

GenId CategoryBuilder::arrow(const std::string& name, ObjId src, ObjId tgt) {
  if (arrows_.count(name)) throw Error(ErrorCode::DuplicateName, "arrow '" + name + "' in " + name_);
  GenId id = static_cast<GenId>(quiver_.arrows.size());
  quiver_.arrows.push_back(Arrow{name, src, tgt});
  arrows_.emplace(name, id);
  return id;
}

GenId CategoryBuilder::arrow(const std::string& name, const std::string& src, const std::string& tgt) {
  return arrow(name, find_object(src), find_object(tgt));
}

ObjId CategoryBuilder::find_object(const std::string& name) const {
  auto it = objs_.find(name);
  if (it == objs_.end()) throw Error(ErrorCode::UnresolvedReference, "unknown object '" + name + "' in " + name_);
  return it->second;
}

void CategoryBuilder::relation(Path lhs, Path rhs) {
  if (lhs.src != rhs.src || lhs.tgt != rhs.tgt) {
    throw Error(ErrorCode::NonParallelRelation, "relation sides are not parallel in " + name_);
  }
  relations_.push_back({std::move(lhs), std::move(rhs)});
}

Path CategoryBuilder::parse(std::string_view text) const {
  return parse_path_with(
      text, quiver_,
      [&](const std::string& s) -> std::optional<ObjId> {
        auto it = objs_.find(s);
        if (it == objs_.end()) return std::nullopt;
        return it->second;
      },
      [&](const std::string& s) -> std::optional<GenId> {
        auto it = arrows_.find(s);
        if (it == arrows_.end()) return std::nullopt;
        return it->second;
      });
}

void CategoryBuilder::relation(std::string_view lhs, std::string_view rhs) { relation(parse(lhs), parse(rhs)); }

CategoryPtr CategoryBuilder::build(Backend backend, Bounds bounds) const {
  return make_category(name_, quiver_, relations_, backend, bounds);
}

}  // namespace catcolim

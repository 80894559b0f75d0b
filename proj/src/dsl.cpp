#include "catcolim/dsl.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "json.hpp"

namespace catcolim {

const char* block_type_name(BlockType t) {
  switch (t) {
    case BlockType::Category: return "category";
    case BlockType::Tensor: return "tensor category";
    case BlockType::Functor: return "functor";
    case BlockType::TensorFunctor: return "tensor functor";
    case BlockType::Transformation: return "transformation";
    case BlockType::TensorTransformation: return "tensor transformation";
    case BlockType::Diagram: return "diagram";
    case BlockType::Construction: return "construction";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Document

void Document::reserve(const std::string& name, BlockType t) {
  if (has(name)) throw Error(ErrorCode::DuplicateName, "'" + name + "' is defined twice");
  blocks_.emplace_back(t, name);
}

void Document::add(const std::string& name, CategoryPtr c) {
  reserve(name, BlockType::Category);
  categories_[name] = std::move(c);
}
void Document::add(const std::string& name, TensorPtr t) {
  reserve(name, BlockType::Tensor);
  tensors_[name] = std::move(t);
}
void Document::add(const std::string& name, Functor f) {
  reserve(name, BlockType::Functor);
  f.name = name;
  functors_[name] = std::move(f);
}
void Document::add(const std::string& name, TensorFunctor f) {
  reserve(name, BlockType::TensorFunctor);
  f.name = f.functor.name = name;
  tensor_functors_[name] = std::move(f);
}
void Document::add(const std::string& name, Transformation t) {
  reserve(name, BlockType::Transformation);
  t.name = name;
  transformations_[name] = std::move(t);
}
void Document::add(const std::string& name, TensorTransformation t) {
  reserve(name, BlockType::TensorTransformation);
  t.name = name;
  tensor_transformations_[name] = std::move(t);
}
void Document::add(const std::string& name, DiagramBlock d) {
  reserve(name, BlockType::Diagram);
  diagrams_[name] = std::move(d);
}
void Document::add(const std::string& name, ConstructionBlock c) {
  reserve(name, BlockType::Construction);
  constructions_[name] = std::move(c);
}

bool Document::has(const std::string& name) const { return type_of(name).has_value(); }

std::optional<BlockType> Document::type_of(const std::string& name) const {
  for (const auto& [t, n] : blocks_) {
    if (n == name) return t;
  }
  return std::nullopt;
}

std::string Document::fresh(const std::string& want) const {
  std::string n = want;
  while (has(n)) n += "'";
  return n;
}

namespace {

template <class M>
const typename M::mapped_type& lookup(const M& m, const std::string& name, const char* what) {
  auto it = m.find(name);
  if (it == m.end()) throw Error(ErrorCode::UnresolvedReference, std::string("no ") + what + " named '" + name + "'");
  return it->second;
}

bool same_functor(const Functor& a, const Functor& b) {
  return a.dom == b.dom && a.cod == b.cod && a.on_objects == b.on_objects && a.on_arrows == b.on_arrows;
}

}  // namespace

const CategoryPtr& Document::category(const std::string& n) const { return lookup(categories_, n, "category"); }
const TensorPtr& Document::tensor(const std::string& n) const { return lookup(tensors_, n, "tensor category"); }
const Functor& Document::functor(const std::string& n) const { return lookup(functors_, n, "functor"); }
const TensorFunctor& Document::tensor_functor(const std::string& n) const {
  return lookup(tensor_functors_, n, "tensor functor");
}
const Transformation& Document::transformation(const std::string& n) const {
  return lookup(transformations_, n, "transformation");
}
const TensorTransformation& Document::tensor_transformation(const std::string& n) const {
  return lookup(tensor_transformations_, n, "tensor transformation");
}
const DiagramBlock& Document::diagram(const std::string& n) const { return lookup(diagrams_, n, "diagram"); }
const ConstructionBlock& Document::construction(const std::string& n) const {
  return lookup(constructions_, n, "construction");
}

std::string Document::name_of(const CategoryPtr& c) const {
  for (const auto& [t, n] : blocks_) {
    if (t == BlockType::Category && categories_.at(n) == c) return n;
  }
  throw Error(ErrorCode::UnresolvedReference, "category " + c->name() + " is not in the document");
}

std::string Document::name_of(const TensorPtr& c) const {
  for (const auto& [t, n] : blocks_) {
    if (t == BlockType::Tensor && tensors_.at(n) == c) return n;
  }
  throw Error(ErrorCode::UnresolvedReference, "tensor category " + c->name() + " is not in the document");
}

std::string Document::name_of_functor(const Functor& f) const {
  auto it = functors_.find(f.name);
  if (it != functors_.end() && same_functor(it->second, f)) return f.name;
  auto jt = tensor_functors_.find(f.name);
  if (jt != tensor_functors_.end() && same_functor(jt->second.functor, f)) return f.name;
  for (const auto& [t, n] : blocks_) {
    if (t == BlockType::Functor && same_functor(functors_.at(n), f)) return n;
    if (t == BlockType::TensorFunctor && same_functor(tensor_functors_.at(n).functor, f)) return n;
  }
  throw Error(ErrorCode::UnresolvedReference, "functor " + f.name + " is not in the document");
}

std::vector<std::string> Document::names(BlockType type) const {
  std::vector<std::string> out;
  for (const auto& [t, n] : blocks_) {
    if (t == type) out.push_back(n);
  }
  return out;
}

// ---------------------------------------------------------------------------
// lexer

namespace {

struct Tok {
  enum Kind { Ident, Sym, End } kind = End;
  std::string text;
  bool quoted = false;
  int line = 1, col = 1;
};

std::string where(const Tok& t) { return std::to_string(t.line) + ":" + std::to_string(t.col) + ": "; }

[[noreturn]] void fail_at(const Tok& t, ErrorCode code, const std::string& msg) { throw Error(code, where(t) + msg); }

std::string strip_code(const Error& e) {
  std::string w = e.what();
  auto p = w.find(": ");
  return p == std::string::npos ? w : w.substr(p + 2);
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Tok> lex(std::string_view s) {
  std::vector<Tok> out;
  int line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance(1);
      continue;
    }
    Tok t;
    t.line = line;
    t.col = col;
    if (c == '\'') {
      t.kind = Tok::Ident;
      t.quoted = true;
      advance(1);
      bool closed = false;
      while (i < s.size()) {
        if (s[i] == '\'') {
          if (i + 1 < s.size() && s[i + 1] == '\'') {
            t.text += '\'';
            advance(2);
            continue;
          }
          advance(1);
          closed = true;
          break;
        }
        t.text += s[i];
        advance(1);
      }
      if (!closed) fail_at(t, ErrorCode::ParseError, "unterminated quoted name");
      out.push_back(t);
      continue;
    }
    if (ident_char(c)) {
      t.kind = Tok::Ident;
      std::size_t j = i;
      while (j < s.size() && (ident_char(s[j]) || (s[j] == '-' && j + 1 < s.size() && ident_char(s[j + 1])))) ++j;
      t.text = std::string(s.substr(i, j - i));
      advance(j - i);
      out.push_back(t);
      continue;
    }
    t.kind = Tok::Sym;
    for (const char* sym : {"|->", "->", "=>", "<="}) {
      std::string_view v(sym);
      if (s.substr(i, v.size()) == v) {
        t.text = sym;
        break;
      }
    }
    if (t.text.empty()) {
      if (std::string_view("{}():,;=*").find(c) == std::string_view::npos) {
        fail_at(t, ErrorCode::ParseError, std::string("unexpected character '") + c + "'");
      }
      t.text = std::string(1, c);
    }
    advance(t.text.size());
    out.push_back(t);
  }
  Tok end;
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------------------
// parser

struct RawTerm {
  std::string name;
  bool identity = false;
  Tok at;
};
struct RawPath {
  std::vector<RawTerm> terms;
  Tok at;
};

struct Names {
  std::map<std::string, ObjId> obj;
  std::map<std::string, GenId> arr;
  explicit Names(const Quiver& q) {
    for (ObjId x = 0; x < q.objects.size(); ++x) obj.emplace(q.objects[x], x);
    for (GenId g = 0; g < q.arrows.size(); ++g) arr.emplace(q.arrows[g].name, g);
  }
};

ObjId resolve_object(const Names& n, const std::string& name, const Tok& at) {
  auto it = n.obj.find(name);
  if (it == n.obj.end()) fail_at(at, ErrorCode::UnresolvedReference, "unknown object '" + name + "'");
  return it->second;
}

Path resolve_path(const Quiver& q, const Names& n, const RawPath& r) {
  Path p;
  bool first = true;
  for (const RawTerm& t : r.terms) {
    ObjId s, e;
    std::optional<GenId> g;
    if (t.identity) {
      s = e = resolve_object(n, t.name, t.at);
    } else {
      auto it = n.arr.find(t.name);
      if (it == n.arr.end()) fail_at(t.at, ErrorCode::UnresolvedReference, "unknown arrow '" + t.name + "'");
      g = it->second;
      s = q.arrows[*g].src;
      e = q.arrows[*g].tgt;
    }
    if (first) {
      p.src = p.tgt = s;
      first = false;
    } else if (p.tgt != s) {
      fail_at(t.at, ErrorCode::NotComposable, "'" + t.name + "' does not compose");
    }
    p.tgt = e;
    if (g) p.arrows.push_back(*g);
  }
  return p;
}

Relation resolve_relation(const Quiver& q, const Names& n, const RawPath& l, const RawPath& r) {
  Relation rel{resolve_path(q, n, l), resolve_path(q, n, r)};
  if (rel.lhs.src != rel.rhs.src || rel.lhs.tgt != rel.rhs.tgt) {
    fail_at(l.at, ErrorCode::NonParallelRelation, "the two sides of the relation have different endpoints");
  }
  return rel;
}

class Parser {
 public:
  Parser(std::string_view text, const Bounds& b) : toks_(lex(text)), bounds_(b) {}

  Document run() {
    while (peek().kind != Tok::End) block();
    return std::move(doc_);
  }

 private:
  const Tok& peek(std::size_t k = 0) const { return toks_[std::min(pos_ + k, toks_.size() - 1)]; }
  Tok next() {
    Tok t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  bool sym(const char* s, std::size_t k = 0) const { return peek(k).kind == Tok::Sym && peek(k).text == s; }
  bool kw(const char* s, std::size_t k = 0) const {
    return peek(k).kind == Tok::Ident && !peek(k).quoted && peek(k).text == s;
  }
  Tok expect(const char* s) {
    if (!sym(s)) fail_at(peek(), ErrorCode::ParseError, std::string("expected '") + s + "'" + found());
    return next();
  }
  void expect_kw(const char* s) {
    if (!kw(s)) fail_at(peek(), ErrorCode::ParseError, std::string("expected '") + s + "'" + found());
    next();
  }
  std::string found() const {
    const Tok& t = peek();
    if (t.kind == Tok::End) return ", found end of input";
    return ", found '" + t.text + "'";
  }
  std::string name() {
    if (peek().kind != Tok::Ident) fail_at(peek(), ErrorCode::ParseError, "expected a name" + found());
    return next().text;
  }
  std::size_t number() {
    const Tok& t = peek();
    if (t.kind != Tok::Ident || t.quoted || !std::all_of(t.text.begin(), t.text.end(), ::isdigit)) {
      fail_at(t, ErrorCode::ParseError, "expected a number" + found());
    }
    return std::stoul(next().text);
  }
  void comma() {
    if (sym(",")) next();
  }
  bool section_start(const std::set<std::string>& keys) const {
    return peek().kind == Tok::Ident && !peek().quoted && keys.count(peek().text) && sym(":", 1);
  }
  bool item_end(const std::set<std::string>& keys) const { return sym("}") || section_start(keys); }

  RawPath raw_path() {
    RawPath p;
    p.at = peek();
    do {
      if (!p.terms.empty()) next();
      RawTerm t;
      t.at = peek();
      if (kw("id") && sym("(", 1)) {
        next();
        next();
        t.name = name();
        t.identity = true;
        expect(")");
      } else {
        t.name = name();
      }
      p.terms.push_back(t);
    } while (sym(";"));
    return p;
  }

  std::vector<std::pair<std::string, Tok>> name_list(const std::set<std::string>& keys) {
    std::vector<std::pair<std::string, Tok>> out;
    while (!item_end(keys)) {
      Tok at = peek();
      out.emplace_back(name(), at);
      comma();
    }
    return out;
  }

  // header "NAME: A -> B" or "NAME: F => G"
  std::array<std::string, 3> signature(const char* arrow) {
    std::array<std::string, 3> s;
    s[0] = name();
    expect(":");
    s[1] = name();
    expect(arrow);
    s[2] = name();
    return s;
  }

  void block() {
    Tok at = peek();
    try {
      if (kw("category")) {
        next();
        category();
      } else if (kw("tensor") && kw("category", 1)) {
        next();
        next();
        tensor_category();
      } else if (kw("tensor") && kw("functor", 1)) {
        next();
        next();
        functor(true);
      } else if (kw("functor")) {
        next();
        functor(false);
      } else if (kw("transformation")) {
        next();
        transformation();
      } else if (kw("diagram")) {
        next();
        diagram();
      } else if (kw("construction")) {
        next();
        construction();
      } else {
        fail_at(at, ErrorCode::ParseError, "expected a block" + found());
      }
    } catch (const Error& e) {
      std::string msg = strip_code(e);
      if (msg.empty() || !std::isdigit(static_cast<unsigned char>(msg[0]))) throw Error(e.code(), where(at) + msg);
      throw;
    }
  }

  void category() {
    static const std::set<std::string> keys{"objects", "arrows", "relations", "backend"};
    std::string nm = name();
    expect("{");
    Quiver q;
    std::vector<std::tuple<std::string, std::string, std::string, Tok>> arrows;
    std::vector<std::pair<RawPath, RawPath>> rels;
    Backend backend = Backend::Rewrite;
    while (!sym("}")) {
      if (!section_start(keys)) fail_at(peek(), ErrorCode::ParseError, "expected a section of category " + nm + found());
      std::string key = next().text;
      next();
      if (key == "objects") {
        for (auto& [o, t] : name_list(keys)) {
          if (std::find(q.objects.begin(), q.objects.end(), o) != q.objects.end()) {
            fail_at(t, ErrorCode::DuplicateName, "object '" + o + "' is declared twice");
          }
          q.objects.push_back(o);
        }
      } else if (key == "arrows") {
        while (!item_end(keys)) {
          Tok at = peek();
          std::string a = name();
          expect(":");
          std::string s = name();
          expect("->");
          std::string t = name();
          arrows.emplace_back(a, s, t, at);
          comma();
        }
      } else if (key == "relations") {
        while (!item_end(keys)) {
          RawPath l = raw_path();
          expect("=");
          rels.emplace_back(l, raw_path());
          comma();
        }
      } else {
        Tok at = peek();
        std::string b = name();
        if (b == "table") {
          backend = Backend::Table;
        } else if (b != "rewrite") {
          fail_at(at, ErrorCode::ParseError, "backend is 'rewrite' or 'table'");
        }
      }
    }
    expect("}");
    Names objs(q);
    for (const auto& [a, s, t, at] : arrows) {
      if (std::any_of(q.arrows.begin(), q.arrows.end(), [&](const Arrow& x) { return x.name == a; })) {
        fail_at(at, ErrorCode::DuplicateName, "arrow '" + a + "' is declared twice");
      }
      q.arrows.push_back(Arrow{a, resolve_object(objs, s, at), resolve_object(objs, t, at)});
    }
    Names n(q);
    std::vector<Relation> relations;
    for (const auto& [l, r] : rels) relations.push_back(resolve_relation(q, n, l, r));
    doc_.add(nm, make_category(nm, std::move(q), std::move(relations), backend, bounds_));
  }

  void tensor_category() {
    static const std::set<std::string> keys{"objects", "unit",     "object_table", "words", "max_length", "arrows",
                                            "whisker", "relations", "symmetry",     "sigma", "mode"};
    std::string nm = name();
    Tok head = peek();
    expect("{");
    std::vector<std::pair<std::string, Tok>> objects, letters;
    std::optional<std::pair<std::string, Tok>> unit;
    std::vector<std::array<std::pair<std::string, Tok>, 3>> table;
    std::optional<std::size_t> max_length;
    std::vector<std::tuple<std::string, std::string, std::string, Tok>> arrows;
    std::vector<std::tuple<std::string, std::string, RawPath, Tok>> whisker;
    std::vector<std::pair<RawPath, RawPath>> rels;
    std::vector<std::tuple<std::string, std::string, RawPath, Tok>> sigma;
    TensorPresentation p;
    p.name = nm;
    p.bounds = bounds_;
    while (!sym("}")) {
      if (!section_start(keys)) fail_at(peek(), ErrorCode::ParseError, "expected a section of tensor category " + nm + found());
      std::string key = next().text;
      next();
      if (key == "objects") {
        auto l = name_list(keys);
        objects.insert(objects.end(), l.begin(), l.end());
      } else if (key == "words") {
        auto l = name_list(keys);
        letters.insert(letters.end(), l.begin(), l.end());
      } else if (key == "unit") {
        Tok at = peek();
        unit.emplace(name(), at);
      } else if (key == "max_length") {
        max_length = number();
      } else if (key == "object_table") {
        while (!item_end(keys)) {
          std::array<std::pair<std::string, Tok>, 3> e;
          e[0].second = peek();
          e[0].first = name();
          expect("*");
          e[1].second = peek();
          e[1].first = name();
          expect("=");
          e[2].second = peek();
          e[2].first = name();
          table.push_back(e);
          comma();
        }
      } else if (key == "arrows") {
        while (!item_end(keys)) {
          Tok at = peek();
          std::string a = name();
          expect(":");
          std::string s = name();
          expect("->");
          std::string t = name();
          arrows.emplace_back(a, s, t, at);
          comma();
        }
      } else if (key == "whisker") {
        while (!item_end(keys)) {
          Tok at = peek();
          std::string a = name();
          expect("*");
          std::string g = name();
          expect("=");
          whisker.emplace_back(a, g, raw_path(), at);
          comma();
        }
      } else if (key == "relations") {
        while (!item_end(keys)) {
          RawPath l = raw_path();
          expect("=");
          rels.emplace_back(l, raw_path());
          comma();
        }
      } else if (key == "symmetry") {
        Tok at = peek();
        std::string m = name();
        if (m == "identity") {
          p.symmetry_mode = SymmetryMode::Identity;
        } else if (m == "explicit") {
          p.symmetry_mode = SymmetryMode::Explicit;
        } else if (m == "free") {
          p.symmetry_mode = SymmetryMode::Free;
        } else {
          fail_at(at, ErrorCode::ParseError, "symmetry is 'identity', 'explicit' or 'free'");
        }
      } else if (key == "sigma") {
        while (!item_end(keys)) {
          Tok at = expect("(");
          std::string x = name();
          expect(",");
          std::string y = name();
          expect(")");
          expect("=");
          sigma.emplace_back(x, y, raw_path(), at);
          comma();
        }
      } else {
        Tok at = peek();
        std::string m = name();
        if (m == "finite") {
          p.finite = true;
        } else if (m != "presented") {
          fail_at(at, ErrorCode::ParseError, "mode is 'finite' or 'presented'");
        }
      }
    }
    expect("}");

    // objects
    if (!letters.empty()) {
      if (!objects.empty() || !table.empty()) fail_at(head, ErrorCode::ParseError, "give either words or objects, not both");
      if (!max_length) fail_at(head, ErrorCode::ParseError, "words need max_length");
      std::vector<std::string> ls;
      for (auto& l : letters) ls.push_back(l.first);
      p.monoid = ObjectMonoid::words(ls, *max_length);
    } else {
      if (objects.empty()) fail_at(head, ErrorCode::ParseError, "tensor category " + nm + " has no objects");
      std::vector<std::string> names;
      for (auto& [o, t] : objects) {
        if (std::find(names.begin(), names.end(), o) != names.end()) {
          fail_at(t, ErrorCode::DuplicateName, "object '" + o + "' is declared twice");
        }
        names.push_back(o);
      }
      auto index = [&](const std::pair<std::string, Tok>& o) -> ObjId {
        auto it = std::find(names.begin(), names.end(), o.first);
        if (it == names.end()) fail_at(o.second, ErrorCode::UnresolvedReference, "unknown object '" + o.first + "'");
        return static_cast<ObjId>(it - names.begin());
      };
      ObjId u = unit ? index(*unit) : 0;
      const std::size_t n = names.size();
      std::vector<std::vector<int>> mult(n, std::vector<int>(n, -1));
      for (ObjId x = 0; x < n; ++x) mult[u][x] = mult[x][u] = static_cast<int>(x);
      for (const auto& e : table) {
        ObjId a = index(e[0]), b = index(e[1]), c = index(e[2]);
        int& cell = mult[a][b];
        if (cell >= 0 && cell != static_cast<int>(c)) {
          fail_at(e[0].second, ErrorCode::IllDefinedProduct, e[0].first + " * " + e[1].first + " is given twice");
        }
        cell = static_cast<int>(c);
      }
      bool total = std::all_of(mult.begin(), mult.end(), [](const auto& r) { return std::all_of(r.begin(), r.end(), [](int v) { return v >= 0; }); });
      if (total) {
        std::vector<std::vector<ObjId>> t(n, std::vector<ObjId>(n));
        for (std::size_t a = 0; a < n; ++a) {
          for (std::size_t b = 0; b < n; ++b) t[a][b] = static_cast<ObjId>(mult[a][b]);
        }
        p.monoid = ObjectMonoid::table(names, u, std::move(t));
      } else {
        p.monoid = ObjectMonoid::partial(names, u, std::move(mult));
      }
    }
    std::map<std::string, ObjId> obj;
    for (ObjId x = 0; x < p.monoid.size(); ++x) obj.emplace(p.monoid.name(x), x);
    auto object = [&](const std::string& s, const Tok& at) {
      auto it = obj.find(s);
      if (it == obj.end()) fail_at(at, ErrorCode::UnresolvedReference, "unknown object '" + s + "'");
      return it->second;
    };
    for (const auto& [a, s, t, at] : arrows) {
      if (std::any_of(p.arrows.begin(), p.arrows.end(), [&](const Arrow& x) { return x.name == a; })) {
        fail_at(at, ErrorCode::DuplicateName, "arrow '" + a + "' is declared twice");
      }
      p.arrows.push_back(Arrow{a, object(s, at), object(t, at)});
    }
    std::vector<std::pair<ObjId, GenId>> wkeys;
    for (const auto& [a, g, path, at] : whisker) {
      auto it = std::find_if(p.arrows.begin(), p.arrows.end(), [&](const Arrow& x) { return x.name == g; });
      if (it == p.arrows.end()) fail_at(at, ErrorCode::UnresolvedReference, "unknown arrow '" + g + "'");
      std::pair<ObjId, GenId> k{object(a, at), static_cast<GenId>(it - p.arrows.begin())};
      if (p.whisker.count(k)) fail_at(at, ErrorCode::DuplicateName, a + " * " + g + " is given twice");
      p.whisker[k] = Path{};
      wkeys.push_back(k);
    }
    Quiver q = carrier_quiver(p);
    Names n(q);
    for (std::size_t i = 0; i < whisker.size(); ++i) p.whisker[wkeys[i]] = resolve_path(q, n, std::get<2>(whisker[i]));
    for (const auto& [l, r] : rels) p.relations.push_back(resolve_relation(q, n, l, r));
    for (const auto& [x, y, path, at] : sigma) {
      std::pair<ObjId, ObjId> k{object(x, at), object(y, at)};
      if (p.symmetry.count(k)) fail_at(at, ErrorCode::DuplicateName, "symmetry (" + x + ", " + y + ") is given twice");
      p.symmetry[k] = resolve_path(q, n, path);
    }
    doc_.add(nm, make_tensor_category(std::move(p)));
  }

  void functor(bool tensor) {
    auto sig = signature("->");
    expect("{");
    struct Entry {
      enum { Map, Mu, Eta } type = Map;
      std::string from, from2;
      RawPath to;
      Tok at;
    };
    std::vector<Entry> entries;
    while (!sym("}")) {
      Entry e;
      e.at = peek();
      if (tensor && kw("mu") && sym("(", 1)) {
        next();
        next();
        e.type = Entry::Mu;
        e.from = name();
        expect(",");
        e.from2 = name();
        expect(")");
      } else if (tensor && kw("eta") && sym("|->", 1)) {
        next();
        e.type = Entry::Eta;
      } else {
        e.from = name();
      }
      expect("|->");
      e.to = raw_path();
      entries.push_back(e);
      comma();
    }
    expect("}");

    CategoryPtr dom, cod;
    TensorPtr tdom, tcod;
    if (tensor) {
      tdom = doc_.tensor(sig[1]);
      tcod = doc_.tensor(sig[2]);
      dom = tdom->carrier();
      cod = tcod->carrier();
    } else {
      dom = doc_.category(sig[1]);
      cod = doc_.category(sig[2]);
    }
    const Quiver& dq = dom->quiver();
    const Quiver& cq = cod->quiver();
    Names dn(dq), cn(cq);
    Functor f{sig[0], dom, cod, std::vector<ObjId>(dom->num_objects()), std::vector<Path>(dom->num_arrows())};
    std::vector<bool> obj_set(dom->num_objects(), false), arr_set(dom->num_arrows(), false);
    std::vector<const Entry*> mus;
    const Entry* eta = nullptr;
    for (const Entry& e : entries) {
      if (e.type == Entry::Mu) {
        mus.push_back(&e);
        continue;
      }
      if (e.type == Entry::Eta) {
        eta = &e;
        continue;
      }
      auto ob = dn.obj.find(e.from);
      if (ob != dn.obj.end() && !obj_set[ob->second]) {
        if (e.to.terms.size() != 1 || e.to.terms[0].identity) fail_at(e.to.at, ErrorCode::ParseError, "an object maps to an object");
        f.on_objects[ob->second] = resolve_object(cn, e.to.terms[0].name, e.to.at);
        obj_set[ob->second] = true;
        continue;
      }
      auto ar = dn.arr.find(e.from);
      if (ar == dn.arr.end()) fail_at(e.at, ErrorCode::UnresolvedReference, "unknown object or arrow '" + e.from + "'");
      if (arr_set[ar->second]) fail_at(e.at, ErrorCode::DuplicateName, "'" + e.from + "' is mapped twice");
      f.on_arrows[ar->second] = resolve_path(cq, cn, e.to);
      arr_set[ar->second] = true;
    }
    for (ObjId x = 0; x < obj_set.size(); ++x) {
      if (!obj_set[x]) throw Error(ErrorCode::UnresolvedReference, sig[0] + " gives no image for object '" + dq.objects[x] + "'");
    }
    if (!tensor) {
      for (GenId g = 0; g < arr_set.size(); ++g) {
        if (!arr_set[g]) throw Error(ErrorCode::UnresolvedReference, sig[0] + " gives no image for arrow '" + dq.arrows[g].name + "'");
      }
      doc_.add(sig[0], std::move(f));
      return;
    }

    const ObjectMonoid& m = tdom->monoid();
    const Category& cc = *cod;
    TensorFunctor t;
    t.name = sig[0];
    t.dom = tdom;
    t.cod = tcod;
    t.functor = f;
    if (eta) {
      t.eta = resolve_path(cq, cn, eta->to);
    } else {
      t.eta = cc.identity(tcod->unit());
    }
    if (t.eta.src != tcod->unit() || t.eta.tgt != f(m.unit())) {
      fail_at(eta ? eta->at : peek(), ErrorCode::ConditionsNotSatisfied, sig[0] + ": eta has the wrong endpoints");
    }
    t.mu.assign(m.size(), std::vector<std::optional<Path>>(m.size()));
    std::map<std::string, ObjId> mobj;
    for (ObjId x = 0; x < m.size(); ++x) mobj.emplace(m.name(x), x);
    for (const Entry* e : mus) {
      auto ix = mobj.find(e->from), iy = mobj.find(e->from2);
      if (ix == mobj.end() || iy == mobj.end()) fail_at(e->at, ErrorCode::UnresolvedReference, "unknown object in mu");
      if (!m.mul(ix->second, iy->second)) fail_at(e->at, ErrorCode::IllDefinedProduct, e->from + " * " + e->from2 + " is undefined");
      if (t.mu[ix->second][iy->second]) fail_at(e->at, ErrorCode::DuplicateName, "mu(" + e->from + ", " + e->from2 + ") is given twice");
      t.mu[ix->second][iy->second] = resolve_path(cq, cn, e->to);
    }
    for (ObjId x = 0; x < m.size(); ++x) {
      for (ObjId y = 0; y < m.size(); ++y) {
        auto xy = m.mul(x, y);
        if (!xy) continue;
        auto img = tcod->monoid().mul(f(x), f(y));
        if (!img) throw Error(ErrorCode::IllDefinedProduct, sig[0] + ": F" + m.name(x) + " * F" + m.name(y) + " is undefined");
        auto& slot = t.mu[x][y];
        if (!slot) {
          if (*img != f(*xy)) throw Error(ErrorCode::ConditionsNotSatisfied, sig[0] + " needs mu(" + m.name(x) + ", " + m.name(y) + ")");
          slot = cc.identity(*img);
        } else if (slot->src != *img || slot->tgt != f(*xy)) {
          throw Error(ErrorCode::ConditionsNotSatisfied, sig[0] + ": mu(" + m.name(x) + ", " + m.name(y) + ") has the wrong endpoints");
        }
      }
    }
    t.mu_inv.assign(m.size(), std::vector<std::optional<Path>>(m.size()));
    for (ObjId x = 0; x < m.size(); ++x) {
      for (ObjId y = 0; y < m.size(); ++y) {
        if (t.mu[x][y] && t.mu[x][y]->is_identity()) t.mu_inv[x][y] = t.mu[x][y];
      }
    }
    if (t.eta.is_identity()) t.eta_inv = t.eta;
    if (cod->finite()) fill_inverses(t);
    // images of whiskered copies: mu^-1 ; (Fa (x) F g) ; mu
    const TensorCategory& a = *tdom;
    const TensorCategory& b = *tcod;
    for (GenId g = 0; g < arr_set.size(); ++g) {
      if (arr_set[g]) continue;
      const GenKey& k = a.key(g);
      GenKey root = k;
      root.whisker = a.unit();
      auto rg = a.gen(root);
      if (k.whisker == a.unit() || !rg) {
        if (k.type == GenKey::Sigma && k.whisker == a.unit()) {
          ObjId x = k.i, y = k.j;
          const auto& mi = t.mu_inv[x][y];
          if (!mi || !t.mu[y][x]) throw Error(ErrorCode::Unsupported, sig[0] + ": give the image of '" + dq.arrows[g].name + "'");
          t.functor.on_arrows[g] = b.compose(b.compose(*mi, b.symmetry(f(x), f(y))), *t.mu[y][x]);
          continue;
        }
        throw Error(ErrorCode::UnresolvedReference, sig[0] + " gives no image for arrow '" + dq.arrows[g].name + "'");
      }
      if (!arr_set[*rg] && k.type != GenKey::Sigma) {
        throw Error(ErrorCode::UnresolvedReference, sig[0] + " gives no image for arrow '" + dq.arrows[*rg].name + "'");
      }
    }
    // roots first (declared arrows and symmetry generators precede their copies)
    for (GenId g = 0; g < arr_set.size(); ++g) {
      if (arr_set[g]) continue;
      const GenKey& k = a.key(g);
      if (k.whisker == a.unit()) continue;
      GenKey root = k;
      root.whisker = a.unit();
      GenId rg = *a.gen(root);
      const Arrow& ar = dq.arrows[rg];
      const auto& mi = t.mu_inv[k.whisker][ar.src];
      const auto& mt = t.mu[k.whisker][ar.tgt];
      if (!mi || !mt) throw Error(ErrorCode::Unsupported, sig[0] + ": give the image of '" + dq.arrows[g].name + "'");
      Path img = b.compose(b.compose(*mi, b.whisker(f(k.whisker), t.functor.on_arrows[rg])), *mt);
      t.functor.on_arrows[g] = img;
    }
    doc_.add(sig[0], std::move(t));
  }

  void transformation() {
    auto sig = signature("=>");
    expect("{");
    std::vector<std::pair<std::string, std::pair<RawPath, Tok>>> entries;
    while (!sym("}")) {
      Tok at = peek();
      std::string x = name();
      expect("|->");
      entries.push_back({x, {raw_path(), at}});
      comma();
    }
    expect("}");
    bool tensor = doc_.type_of(sig[1]) == BlockType::TensorFunctor;
    Functor src = tensor ? doc_.tensor_functor(sig[1]).functor : doc_.functor(sig[1]);
    Functor tgt = tensor ? doc_.tensor_functor(sig[2]).functor : doc_.functor(sig[2]);
    if (src.dom != tgt.dom || src.cod != tgt.cod) throw Error(ErrorCode::NotParallel, sig[1] + " and " + sig[2] + " are not parallel");
    Names dn(src.dom->quiver()), cn(src.cod->quiver());
    std::vector<std::optional<Path>> comps(src.dom->num_objects());
    for (const auto& [x, pe] : entries) {
      ObjId o = resolve_object(dn, x, pe.second);
      if (comps[o]) fail_at(pe.second, ErrorCode::DuplicateName, "component at '" + x + "' is given twice");
      Path p = resolve_path(src.cod->quiver(), cn, pe.first);
      if (p.src != src(o) || p.tgt != tgt(o)) fail_at(pe.second, ErrorCode::NotParallel, "component at '" + x + "' has the wrong endpoints");
      comps[o] = p;
    }
    Transformation t{sig[0], src, tgt, {}};
    for (ObjId o = 0; o < comps.size(); ++o) {
      if (!comps[o]) throw Error(ErrorCode::UnresolvedReference, sig[0] + " gives no component at '" + src.dom->object_name(o) + "'");
      t.components.push_back(*comps[o]);
    }
    if (tensor) {
      doc_.add(sig[0], TensorTransformation{sig[0], doc_.tensor_functor(sig[1]), doc_.tensor_functor(sig[2]), t.components});
    } else {
      doc_.add(sig[0], std::move(t));
    }
  }

  void diagram() {
    static const std::set<std::string> keys{"index", "order"};
    std::string nm = name();
    expect("{");
    DiagramBlock d;
    bool first = true;
    while (!sym("}")) {
      if (!section_start(keys)) fail_at(peek(), ErrorCode::ParseError, "expected a section of diagram " + nm + found());
      std::string key = next().text;
      next();
      while (!item_end(keys)) {
        Tok at = peek();
        if (key == "index") {
          std::string i = name();
          expect("=");
          std::string c = name();
          auto type = doc_.type_of(c);
          if (type != BlockType::Category && type != BlockType::Tensor) {
            fail_at(at, ErrorCode::UnresolvedReference, "no category named '" + c + "'");
          }
          bool tensor = type == BlockType::Tensor;
          if (!first && tensor != d.tensor) fail_at(at, ErrorCode::IncoherentDiagram, "mixed categories and tensor categories");
          d.tensor = tensor;
          first = false;
          d.index.emplace_back(i, c);
        } else {
          std::string i = name();
          expect("<=");
          std::string j = name();
          expect("=");
          std::string f = name();
          auto type = doc_.type_of(f);
          if (type != BlockType::Functor && type != BlockType::TensorFunctor) {
            fail_at(at, ErrorCode::UnresolvedReference, "no functor named '" + f + "'");
          }
          d.order.push_back({i, j, f});
        }
        comma();
      }
    }
    expect("}");
    doc_.add(nm, std::move(d));
  }

  void construction() {
    static const std::set<std::string> keys{"kind", "category", "route", "inputs", "target", "universal", "cells"};
    std::string nm = name();
    expect("{");
    ConstructionBlock c;
    bool has_kind = false;
    while (!sym("}")) {
      if (!section_start(keys)) fail_at(peek(), ErrorCode::ParseError, "expected a section of construction " + nm + found());
      std::string key = next().text;
      next();
      Tok at = peek();
      auto names = [&] {
        std::vector<std::string> out;
        for (auto& [n, t] : name_list(keys)) out.push_back(n);
        return out;
      };
      if (key == "kind") {
        auto k = kind_from_name(name());
        if (!k) fail_at(at, ErrorCode::ParseError, "unknown construction kind");
        c.kind = *k;
        has_kind = true;
      } else if (key == "category") {
        std::string v = name();
        if (v != "cat" && v != "tensor") fail_at(at, ErrorCode::ParseError, "category is 'cat' or 'tensor'");
        c.tensor = v == "tensor";
      } else if (key == "route") {
        std::string v = name();
        if (v != "composite" && v != "direct") fail_at(at, ErrorCode::ParseError, "route is 'composite' or 'direct'");
        c.route = v == "direct" ? Route::Direct : Route::Composite;
      } else if (key == "inputs") {
        c.inputs = names();
      } else if (key == "target") {
        c.target = name();
      } else if (key == "universal") {
        c.universal = names();
      } else {
        c.cells = names();
      }
    }
    expect("}");
    if (!has_kind) throw Error(ErrorCode::ParseError, "construction " + nm + " has no kind");
    for (const auto& n : c.inputs) {
      if (!doc_.has(n)) throw Error(ErrorCode::UnresolvedReference, "construction " + nm + ": no input named '" + n + "'");
    }
    doc_.add(nm, std::move(c));
  }

  std::vector<Tok> toks_;
  std::size_t pos_ = 0;
  Bounds bounds_;
  Document doc_;
};

// ---------------------------------------------------------------------------
// printer

std::string q(const std::string& s) { return quote_name(s); }

std::string path_text(const Category& c, const Path& p) {
  if (p.is_identity()) return "id(" + q(c.object_name(p.src)) + ")";
  std::string out;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) out += ";";
    out += q(c.arrow(p.arrows[i]).name);
  }
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += v[i];
  }
  return out;
}

void print_category(std::ostream& os, const std::string& name, const Category& c) {
  os << "category " << q(name) << " {\n";
  std::vector<std::string> objs;
  for (const auto& o : c.quiver().objects) objs.push_back(q(o));
  os << "  objects: " << join(objs) << "\n";
  if (c.num_arrows()) {
    os << "  arrows:\n";
    for (const auto& a : c.quiver().arrows) os << "    " << q(a.name) << ": " << q(c.object_name(a.src)) << " -> " << q(c.object_name(a.tgt)) << "\n";
  }
  if (!c.relations().empty()) {
    os << "  relations:\n";
    for (const auto& r : c.relations()) os << "    " << path_text(c, r.lhs) << " = " << path_text(c, r.rhs) << "\n";
  }
  if (c.backend() == Backend::Table) os << "  backend: table\n";
  os << "}\n";
}

void print_tensor(std::ostream& os, const std::string& name, const TensorCategory& t) {
  const TensorPresentation& p = t.presentation();
  const ObjectMonoid& m = p.monoid;
  const Category& c = *t.carrier();
  os << "tensor category " << q(name) << " {\n";
  if (m.type() == ObjectMonoid::Type::Words) {
    std::vector<std::string> ls;
    for (const auto& l : m.letters()) ls.push_back(q(l));
    os << "  words: " << join(ls) << "\n";
    os << "  max_length: " << m.max_length() << "\n";
  } else {
    std::vector<std::string> objs;
    for (const auto& o : m.names()) objs.push_back(q(o));
    os << "  objects: " << join(objs) << "\n";
    os << "  unit: " << q(m.name(m.unit())) << "\n";
    std::vector<std::string> rows;
    for (ObjId x = 0; x < m.size(); ++x) {
      if (x == m.unit()) continue;
      std::vector<std::string> row;
      for (ObjId y = 0; y < m.size(); ++y) {
        auto xy = m.mul(x, y);
        if (y == m.unit() || !xy) continue;
        row.push_back(q(m.name(x)) + "*" + q(m.name(y)) + " = " + q(m.name(*xy)));
      }
      if (!row.empty()) rows.push_back(join(row));
    }
    if (!rows.empty()) {
      os << "  object_table:\n";
      for (const auto& r : rows) os << "    " << r << "\n";
    }
  }
  if (!p.arrows.empty()) {
    os << "  arrows:\n";
    for (const auto& a : p.arrows) os << "    " << q(a.name) << ": " << q(m.name(a.src)) << " -> " << q(m.name(a.tgt)) << "\n";
  }
  if (!p.whisker.empty()) {
    os << "  whisker:\n";
    for (const auto& [k, path] : p.whisker) {
      os << "    " << q(m.name(k.first)) << "*" << q(p.arrows[k.second].name) << " = " << path_text(c, path) << "\n";
    }
  }
  if (!p.relations.empty()) {
    os << "  relations:\n";
    for (const auto& r : p.relations) os << "    " << path_text(c, r.lhs) << " = " << path_text(c, r.rhs) << "\n";
  }
  if (p.symmetry_mode != SymmetryMode::Identity) {
    os << "  symmetry: " << (p.symmetry_mode == SymmetryMode::Explicit ? "explicit" : "free") << "\n";
  }
  if (!p.symmetry.empty()) {
    os << "  sigma:\n";
    for (const auto& [k, path] : p.symmetry) {
      os << "    (" << q(m.name(k.first)) << ", " << q(m.name(k.second)) << ") = " << path_text(c, path) << "\n";
    }
  }
  os << "  mode: " << (p.finite ? "finite" : "presented") << "\n";
  os << "}\n";
}

void print_functor_body(std::ostream& os, const Functor& f) {
  const Category& a = *f.dom;
  const Category& b = *f.cod;
  for (ObjId x = 0; x < a.num_objects(); ++x) os << "  " << q(a.object_name(x)) << " |-> " << q(b.object_name(f(x))) << "\n";
  for (GenId g = 0; g < a.num_arrows(); ++g) os << "  " << q(a.arrow(g).name) << " |-> " << path_text(b, f.on_arrows[g]) << "\n";
}

void print_block(std::ostream& os, const Document& d, BlockType type, const std::string& name) {
  switch (type) {
    case BlockType::Category:
      print_category(os, name, *d.category(name));
      break;
    case BlockType::Tensor:
      print_tensor(os, name, *d.tensor(name));
      break;
    case BlockType::Functor: {
      const Functor& f = d.functor(name);
      os << "functor " << q(name) << ": " << q(d.name_of(f.dom)) << " -> " << q(d.name_of(f.cod)) << " {\n";
      print_functor_body(os, f);
      os << "}\n";
      break;
    }
    case BlockType::TensorFunctor: {
      const TensorFunctor& f = d.tensor_functor(name);
      const Category& b = *f.cod->carrier();
      const ObjectMonoid& m = f.dom->monoid();
      os << "tensor functor " << q(name) << ": " << q(d.name_of(f.dom)) << " -> " << q(d.name_of(f.cod)) << " {\n";
      print_functor_body(os, f.functor);
      if (!f.eta.is_identity()) os << "  eta |-> " << path_text(b, f.eta) << "\n";
      for (ObjId x = 0; x < m.size(); ++x) {
        for (ObjId y = 0; y < m.size(); ++y) {
          const auto& mu = f.mu[x][y];
          if (mu && !mu->is_identity()) os << "  mu(" << q(m.name(x)) << ", " << q(m.name(y)) << ") |-> " << path_text(b, *mu) << "\n";
        }
      }
      os << "}\n";
      break;
    }
    case BlockType::Transformation:
    case BlockType::TensorTransformation: {
      Transformation t = type == BlockType::Transformation ? d.transformation(name) : d.tensor_transformation(name).plain();
      std::string s = type == BlockType::Transformation ? d.name_of_functor(t.source) : d.tensor_transformation(name).source.name;
      std::string g = type == BlockType::Transformation ? d.name_of_functor(t.target) : d.tensor_transformation(name).target.name;
      os << "transformation " << q(name) << ": " << q(s) << " => " << q(g) << " {\n";
      for (ObjId x = 0; x < t.components.size(); ++x) {
        os << "  " << q(t.source.dom->object_name(x)) << " |-> " << path_text(*t.source.cod, t.components[x]) << "\n";
      }
      os << "}\n";
      break;
    }
    case BlockType::Diagram: {
      const DiagramBlock& g = d.diagram(name);
      os << "diagram " << q(name) << " {\n";
      std::vector<std::string> idx, ord;
      for (const auto& [i, c] : g.index) idx.push_back(q(i) + " = " + q(c));
      for (const auto& o : g.order) ord.push_back(q(o[0]) + " <= " + q(o[1]) + " = " + q(o[2]));
      os << "  index: " << join(idx) << "\n";
      if (!ord.empty()) os << "  order: " << join(ord) << "\n";
      os << "}\n";
      break;
    }
    case BlockType::Construction: {
      const ConstructionBlock& c = d.construction(name);
      auto list = [](const std::vector<std::string>& v) {
        std::vector<std::string> out;
        for (const auto& s : v) out.push_back(q(s));
        return join(out);
      };
      os << "construction " << q(name) << " {\n";
      os << "  kind: " << kind_name(c.kind) << "\n";
      os << "  category: " << (c.tensor ? "tensor" : "cat") << "\n";
      os << "  route: " << (c.route == Route::Direct ? "direct" : "composite") << "\n";
      os << "  inputs: " << list(c.inputs) << "\n";
      os << "  target: " << q(c.target) << "\n";
      os << "  universal: " << list(c.universal) << "\n";
      if (!c.cells.empty()) os << "  cells: " << list(c.cells) << "\n";
      os << "}\n";
      break;
    }
  }
}

}  // namespace

Document parse_document(std::string_view text, const Bounds& bounds) { return Parser(text, bounds).run(); }

std::string print_document(const Document& d) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [type, name] : d.blocks()) {
    if (!first) os << "\n";
    first = false;
    print_block(os, d, type, name);
  }
  return os.str();
}

bool same_document(const Document& a, const Document& b) {
  return a.blocks() == b.blocks() && print_document(a) == print_document(b);
}

std::string export_records(const Document& d) {
  using json = nlohmann::ordered_json;
  json blocks = json::array();
  auto category_record = [](const Category& c) {
    json r;
    r["objects"] = c.quiver().objects;
    json arrows = json::array();
    for (const auto& a : c.quiver().arrows) {
      arrows.push_back({{"name", a.name}, {"src", c.object_name(a.src)}, {"tgt", c.object_name(a.tgt)}});
    }
    r["arrows"] = arrows;
    json rels = json::array();
    for (const auto& rel : c.relations()) rels.push_back({{"lhs", path_text(c, rel.lhs)}, {"rhs", path_text(c, rel.rhs)}});
    r["relations"] = rels;
    return r;
  };
  auto functor_record = [&](const Functor& f, json& r) {
    json objs = json::object(), arrs = json::object();
    for (ObjId x = 0; x < f.dom->num_objects(); ++x) objs[f.dom->object_name(x)] = f.cod->object_name(f(x));
    for (GenId g = 0; g < f.dom->num_arrows(); ++g) arrs[f.dom->arrow(g).name] = path_text(*f.cod, f.on_arrows[g]);
    r["on_objects"] = objs;
    r["on_arrows"] = arrs;
  };
  for (const auto& [type, name] : d.blocks()) {
    json r;
    r["type"] = block_type_name(type);
    r["name"] = name;
    switch (type) {
      case BlockType::Category: {
        const Category& c = *d.category(name);
        r.update(category_record(c));
        r["backend"] = c.backend() == Backend::Table ? "table" : "rewrite";
        break;
      }
      case BlockType::Tensor: {
        const TensorCategory& t = *d.tensor(name);
        const ObjectMonoid& m = t.monoid();
        r["unit"] = m.name(m.unit());
        json table = json::array();
        for (ObjId x = 0; x < m.size(); ++x) {
          for (ObjId y = 0; y < m.size(); ++y) {
            if (auto xy = m.mul(x, y)) table.push_back({m.name(x), m.name(y), m.name(*xy)});
          }
        }
        r["object_table"] = table;
        json declared = json::array();
        for (const auto& a : t.presentation().arrows) declared.push_back(a.name);
        r["declared_arrows"] = declared;
        r["carrier"] = category_record(*t.carrier());
        r["mode"] = t.presentation().finite ? "finite" : "presented";
        break;
      }
      case BlockType::Functor: {
        const Functor& f = d.functor(name);
        r["dom"] = d.name_of(f.dom);
        r["cod"] = d.name_of(f.cod);
        functor_record(f, r);
        break;
      }
      case BlockType::TensorFunctor: {
        const TensorFunctor& f = d.tensor_functor(name);
        r["dom"] = d.name_of(f.dom);
        r["cod"] = d.name_of(f.cod);
        functor_record(f.functor, r);
        const Category& b = *f.cod->carrier();
        r["eta"] = path_text(b, f.eta);
        json mu = json::array();
        const ObjectMonoid& m = f.dom->monoid();
        for (ObjId x = 0; x < m.size(); ++x) {
          for (ObjId y = 0; y < m.size(); ++y) {
            if (f.mu[x][y]) mu.push_back({m.name(x), m.name(y), path_text(b, *f.mu[x][y])});
          }
        }
        r["mu"] = mu;
        break;
      }
      case BlockType::Transformation:
      case BlockType::TensorTransformation: {
        bool plain = type == BlockType::Transformation;
        Transformation t = plain ? d.transformation(name) : d.tensor_transformation(name).plain();
        r["source"] = plain ? d.name_of_functor(t.source) : d.tensor_transformation(name).source.name;
        r["target"] = plain ? d.name_of_functor(t.target) : d.tensor_transformation(name).target.name;
        json comps = json::object();
        for (ObjId x = 0; x < t.components.size(); ++x) comps[t.source.dom->object_name(x)] = path_text(*t.source.cod, t.components[x]);
        r["components"] = comps;
        break;
      }
      case BlockType::Diagram: {
        const DiagramBlock& g = d.diagram(name);
        json idx = json::array(), ord = json::array();
        for (const auto& [i, c] : g.index) idx.push_back({i, c});
        for (const auto& o : g.order) ord.push_back({o[0], o[1], o[2]});
        r["index"] = idx;
        r["order"] = ord;
        break;
      }
      case BlockType::Construction: {
        const ConstructionBlock& c = d.construction(name);
        r["kind"] = kind_name(c.kind);
        r["category"] = c.tensor ? "tensor" : "cat";
        r["route"] = c.route == Route::Direct ? "direct" : "composite";
        r["inputs"] = c.inputs;
        r["target"] = c.target;
        r["universal"] = c.universal;
        r["cells"] = c.cells;
        break;
      }
    }
    blocks.push_back(std::move(r));
  }
  return json{{"blocks", blocks}}.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// constructions

namespace {

const std::string& input(const ConstructionBlock& c, std::size_t i) {
  if (i >= c.inputs.size()) {
    throw Error(ErrorCode::UnresolvedReference, std::string(kind_name(c.kind)) + " needs " + std::to_string(i + 1) + " inputs");
  }
  return c.inputs[i];
}

std::size_t index_of(const DiagramBlock& d, const std::string& i) {
  for (std::size_t k = 0; k < d.index.size(); ++k) {
    if (d.index[k].first == i) return k;
  }
  throw Error(ErrorCode::UnresolvedReference, "no index '" + i + "' in the diagram");
}

}  // namespace

ConstructionResult run_construction(const Document& d, const ConstructionBlock& c) {
  switch (c.kind) {
    case Kind::Coproduct: return coproduct(d.category(input(c, 0)), d.category(input(c, 1)));
    case Kind::Coinserter: return coinserter(d.functor(input(c, 0)), d.functor(input(c, 1)));
    case Kind::Coequifier: return coequifier(d.transformation(input(c, 0)), d.transformation(input(c, 1)));
    case Kind::Coinverter: return coinverter(d.transformation(input(c, 0)));
    case Kind::Coequalizer: return coequalizer(d.functor(input(c, 0)), d.functor(input(c, 1)), c.route);
    case Kind::Pushout: return pushout(d.functor(input(c, 0)), d.functor(input(c, 1)));
    case Kind::TensorWith: return tensor_with(d.category(input(c, 0)), d.category(input(c, 1)));
    case Kind::Directed: {
      const DiagramBlock& g = d.diagram(input(c, 0));
      Diagram dg;
      for (const auto& [i, cat] : g.index) {
        dg.index.push_back(i);
        dg.categories.push_back(d.category(cat));
      }
      for (const auto& o : g.order) {
        std::pair<std::size_t, std::size_t> ij{index_of(g, o[0]), index_of(g, o[1])};
        dg.order.push_back(ij);
        dg.functors.push_back({ij, d.functor(o[2])});
      }
      return directed_colimit(dg);
    }
    default:
      throw Error(ErrorCode::Unsupported, std::string("no ") + kind_name(c.kind) + " construction for categories");
  }
}

TensorConstructionResult run_tensor_construction(const Document& d, const ConstructionBlock& c) {
  switch (c.kind) {
    case Kind::Coproduct: return coproduct_tensor(d.tensor(input(c, 0)), d.tensor(input(c, 1)));
    case Kind::Coinserter: return coinserter_tensor(d.tensor_functor(input(c, 0)), d.tensor_functor(input(c, 1)));
    case Kind::Coinverter: return coinverter_tensor(d.tensor_transformation(input(c, 0)));
    case Kind::Coequalizer:
      return coequalizer_tensor(d.tensor_functor(input(c, 0)), d.tensor_functor(input(c, 1)), c.route);
    case Kind::Pushout:
      return c.route == Route::Direct ? pushout_tensor(d.tensor_functor(input(c, 0)), d.tensor_functor(input(c, 1)))
                                      : pushout_tensor_composite(d.tensor_functor(input(c, 0)), d.tensor_functor(input(c, 1)));
    case Kind::Directed: {
      const DiagramBlock& g = d.diagram(input(c, 0));
      TensorDiagram dg;
      for (const auto& [i, cat] : g.index) {
        dg.index.push_back(i);
        dg.categories.push_back(d.tensor(cat));
      }
      for (const auto& o : g.order) {
        std::pair<std::size_t, std::size_t> ij{index_of(g, o[0]), index_of(g, o[1])};
        dg.order.push_back(ij);
        dg.functors.push_back({ij, d.tensor_functor(o[2])});
      }
      return directed_colimit_tensor(dg);
    }
    default:
      throw Error(ErrorCode::Unsupported, std::string("no ") + kind_name(c.kind) + " construction for tensor categories");
  }
}

namespace {

void check_counts(const ConstructionBlock& c, std::size_t universal, std::size_t cells) {
  if (c.universal.size() != universal || c.cells.size() != cells) {
    throw Error(ErrorCode::IncoherentDiagram, std::string("stored ") + kind_name(c.kind) + " has " +
                                                  std::to_string(c.universal.size()) + " universal maps and " +
                                                  std::to_string(c.cells.size()) + " cells, expected " +
                                                  std::to_string(universal) + " and " + std::to_string(cells));
  }
}

Transformation cell_of(const Document& d, const std::string& n) {
  if (d.type_of(n) == BlockType::TensorTransformation) return d.tensor_transformation(n).plain();
  return d.transformation(n);
}

}  // namespace

ConstructionResult load_construction(const Document& d, const std::string& name) {
  const ConstructionBlock& c = d.construction(name);
  if (c.tensor) throw Error(ErrorCode::Unsupported, "construction " + name + " is a tensor construction");
  ConstructionResult r = run_construction(d, c);
  check_counts(c, r.universal.size(), r.cells.size());
  r.target = d.category(c.target);
  for (std::size_t i = 0; i < r.universal.size(); ++i) r.universal[i] = d.functor(c.universal[i]);
  for (std::size_t i = 0; i < r.cells.size(); ++i) r.cells[i] = cell_of(d, c.cells[i]);
  return r;
}

TensorConstructionResult load_tensor_construction(const Document& d, const std::string& name) {
  const ConstructionBlock& c = d.construction(name);
  if (!c.tensor) throw Error(ErrorCode::Unsupported, "construction " + name + " is not a tensor construction");
  TensorConstructionResult r = run_tensor_construction(d, c);
  check_counts(c, r.universal.size(), r.cells.size());
  r.target = d.tensor(c.target);
  for (std::size_t i = 0; i < r.universal.size(); ++i) r.universal[i] = d.tensor_functor(c.universal[i]);
  for (std::size_t i = 0; i < r.cells.size(); ++i) r.cells[i] = cell_of(d, c.cells[i]);
  return r;
}

// The target's name; a directed colimit lands on an input that is already present.
template <class Ptr>
std::string add_target(Document& d, const Ptr& target) {
  try {
    return d.name_of(target);
  } catch (const Error&) {
  }
  std::string n = d.fresh(target->name());
  d.add(n, target);
  return n;
}

std::string add_construction(Document& d, ConstructionBlock c, const ConstructionResult& r, const std::string& name) {
  c.tensor = false;
  c.target = add_target(d, r.target);
  c.universal.clear();
  c.cells.clear();
  for (const auto& u : r.universal) {
    c.universal.push_back(d.fresh(u.name));
    d.add(c.universal.back(), u);
  }
  // composites such as P F that the cells run between
  auto named = [&](const Functor& f) {
    try {
      return d.name_of_functor(f);
    } catch (const Error&) {
      std::string n = d.fresh(f.name);
      d.add(n, f);
      return n;
    }
  };
  for (const auto& t : r.cells) {
    Transformation cell = t;
    cell.source.name = named(t.source);
    cell.target.name = named(t.target);
    c.cells.push_back(d.fresh(t.name));
    d.add(c.cells.back(), cell);
  }
  std::string n = d.fresh(name);
  d.add(n, std::move(c));
  return n;
}

std::string add_construction(Document& d, ConstructionBlock c, const TensorConstructionResult& r, const std::string& name) {
  c.tensor = true;
  c.target = add_target(d, r.target);
  c.universal.clear();
  c.cells.clear();
  for (const auto& u : r.universal) {
    c.universal.push_back(d.fresh(u.name));
    d.add(c.universal.back(), u);
  }
  // cells run between universal maps or their composites with the inputs
  auto named = [&](const Functor& f) -> TensorFunctor {
    try {
      return d.tensor_functor(d.name_of_functor(f));
    } catch (const Error&) {
    }
    std::vector<TensorFunctor> candidates;
    for (const auto& u : r.universal) {
      for (const auto& g : r.in_functors) {
        if (g.cod == u.dom) candidates.push_back(compose(g, u));
      }
    }
    for (auto& k : candidates) {
      if (k.functor.dom == f.dom && k.functor.cod == f.cod && k.functor.on_objects == f.on_objects &&
          k.functor.on_arrows == f.on_arrows) {
        std::string n = d.fresh(k.name);
        d.add(n, k);
        return d.tensor_functor(n);
      }
    }
    throw Error(ErrorCode::Unsupported, "cannot name the tensor functor " + f.name);
  };
  for (const auto& t : r.cells) {
    TensorFunctor s = named(t.source), g = named(t.target);
    c.cells.push_back(d.fresh(t.name));
    d.add(c.cells.back(), TensorTransformation{t.name, s, g, t.components});
  }
  std::string n = d.fresh(name);
  d.add(n, std::move(c));
  return n;
}

}  // namespace catcolim

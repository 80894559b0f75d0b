#include "catcolim/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "catcolim/dsl.hpp"
#include "catcolim/tensor_verify.hpp"
#include "json.hpp"

namespace catcolim {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::size_t max_len = 12;
  std::size_t max_hom = 5000;
  std::string format = "dsl";
  std::string kind, category = "cat", in, out, left, right, cell, route, name;
  std::string construction, test;
  std::string src, dst, term;
  Bounds bounds() const {
    Bounds b;
    b.max_len = max_len;
    b.max_hom = max_hom;
    return b;
  }
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int exit_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::ParseError:
    case ErrorCode::UnresolvedReference:
    case ErrorCode::NonParallelRelation:
    case ErrorCode::DuplicateName:
    case ErrorCode::NotComposable:
    case ErrorCode::Unsupported:
      return kExitUsage;
    case ErrorCode::NotSaturated:
    case ErrorCode::UnknownEquality:
    case ErrorCode::BoundExceeded:
      return kExitUnknown;
    default:
      return kExitViolation;
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw UsageError("cannot write " + o.out);
  f << text;
}

Document load(const std::string& path, const Options& o) {
  std::string text = read_file(path);
  try {
    return parse_document(text, o.bounds());
  } catch (const Error& e) {
    throw Error(e.code(), path + ":" + std::string(e.what()).substr(std::string(error_code_name(e.code())).size() + 2));
  }
}

std::string pick(const Document& d, const std::string& given, std::vector<BlockType> types, std::size_t which, const char* what) {
  if (!given.empty()) {
    auto t = d.type_of(given);
    if (!t || std::find(types.begin(), types.end(), *t) == types.end()) throw UsageError(std::string("no ") + what + " named '" + given + "'");
    return given;
  }
  std::vector<std::string> all;
  for (const auto& [t, n] : d.blocks()) {
    if (std::find(types.begin(), types.end(), t) != types.end()) all.push_back(n);
  }
  if (which >= all.size()) throw UsageError(std::string("the input has too few ") + what + " blocks");
  return all[which];
}

// ---------------------------------------------------------------------------

int cmd_construct(const Options& o, std::ostream& out, std::ostream& err) {
  auto kind = kind_from_name(o.kind);
  if (!kind) throw UsageError("unknown kind '" + o.kind + "'");
  bool tensor = o.category == "tensor";
  Document d = load(o.in, o);
  ConstructionBlock c;
  c.kind = *kind;
  c.tensor = tensor;
  c.route = (o.route == "direct" || (o.route.empty() && tensor && *kind == Kind::Pushout)) ? Route::Direct : Route::Composite;
  BlockType cat = tensor ? BlockType::Tensor : BlockType::Category;
  BlockType fun = tensor ? BlockType::TensorFunctor : BlockType::Functor;
  BlockType cellt = tensor ? BlockType::TensorTransformation : BlockType::Transformation;
  switch (*kind) {
    case Kind::Coproduct:
    case Kind::TensorWith:
      c.inputs = {pick(d, o.left, {cat}, 0, "category"), pick(d, o.right, {cat}, 1, "category")};
      break;
    case Kind::Coinserter:
    case Kind::Coequalizer:
    case Kind::Pushout:
      c.inputs = {pick(d, o.left, {fun}, 0, "functor"), pick(d, o.right, {fun}, 1, "functor")};
      break;
    case Kind::Coequifier:
      c.inputs = {pick(d, o.left, {cellt}, 0, "transformation"), pick(d, o.right, {cellt}, 1, "transformation")};
      break;
    case Kind::Coinverter:
      c.inputs = {pick(d, o.cell.empty() ? o.left : o.cell, {cellt}, 0, "transformation")};
      break;
    case Kind::Directed:
      c.inputs = {pick(d, o.left, {BlockType::Diagram}, 0, "diagram")};
      break;
    default:
      throw UsageError("kind '" + o.kind + "' cannot be constructed from the command line");
  }

  // every output re-validates before it is written
  ValidityReport rep;
  std::string name;
  if (tensor) {
    TensorConstructionResult r = run_tensor_construction(d, c);
    rep.merge(check_tensor_invariants(*r.target));
    for (const auto& u : r.universal) rep.merge(check_tensor_functor(u));
    for (const auto& t : r.cells) rep.merge(check_natural(t));
    if (rep.valid) name = add_construction(d, c, r, o.name.empty() ? "C" : o.name);
  } else {
    ConstructionResult r = run_construction(d, c);
    for (const auto& u : r.universal) rep.merge(check_functor(u));
    for (const auto& t : r.cells) rep.merge(check_natural(t));
    if (rep.valid) name = add_construction(d, c, r, o.name.empty() ? "C" : o.name);
  }
  for (const auto& p : rep.problems) err << "invalid: " << p << "\n";
  if (!rep.valid) return kExitViolation;
  write_output(o, o.format == "records" ? export_records(d) : print_document(d), out);
  if (rep.unknown) {
    err << rep.unknown << " checks undecided within the bounds\n";
    return kExitUnknown;
  }
  return kExitOk;
}

int cmd_check_universal(const Options& o, std::ostream& out) {
  Document d = load(o.construction, o);
  Document t = load(o.test, o);
  std::string name = pick(d, o.name, {BlockType::Construction}, 0, "construction");
  if (o.name.empty()) name = d.names(BlockType::Construction).back();
  bool tensor = d.construction(name).tensor;
  std::vector<std::string> tests = t.names(tensor ? BlockType::Tensor : BlockType::Category);
  if (tests.empty()) throw UsageError("the test file has no " + std::string(tensor ? "tensor categories" : "categories"));
  std::vector<std::pair<std::string, UPReport>> reports;
  if (tensor) {
    TensorConstructionResult c = load_tensor_construction(d, name);
    for (const auto& n : tests) reports.emplace_back(n, check_universal(c, t.tensor(n)));
  } else {
    ConstructionResult c = load_construction(d, name);
    for (const auto& n : tests) reports.emplace_back(n, check_universal(c, t.category(n)));
  }
  bool failed = false, unknown = false;
  json records = json::array();
  for (const auto& [n, r] : reports) {
    failed = failed || r.verdict() == Tri::Distinct;
    unknown = unknown || r.verdict() == Tri::Unknown;
    if (o.format == "records") {
      records.push_back({{"construction", name},
                         {"test", n},
                         {"verdict", tri_name(r.verdict())},
                         {"well_defined", r.comparison_well_defined},
                         {"fully_faithful", r.fully_faithful},
                         {"essentially_surjective", r.essentially_surjective},
                         {"source_objects", r.source_objects},
                         {"source_classes", r.source_classes},
                         {"target_objects", r.target_objects},
                         {"target_classes", r.target_classes},
                         {"unknown", r.unknown},
                         {"notes", r.notes}});
    } else {
      out << name << " against " << quote_name(n) << ": " << r.summary() << "\n";
      for (const auto& note : r.notes) out << "  " << note << "\n";
    }
  }
  if (o.format == "records") out << records.dump(2) << "\n";
  return failed ? kExitViolation : unknown ? kExitUnknown : kExitOk;
}

int cmd_pi0(const Options& o, std::ostream& out) {
  Document d = load(o.in, o);
  std::vector<std::string> names;
  if (!o.name.empty()) {
    names = {pick(d, o.name, {BlockType::Category, BlockType::Tensor}, 0, "category")};
  } else {
    for (const auto& [t, n] : d.blocks()) {
      if (t == BlockType::Category || t == BlockType::Tensor) names.push_back(n);
    }
  }
  json records = json::array();
  for (const auto& n : names) {
    if (d.type_of(n) == BlockType::Tensor) {
      CommMonoid m = pi0_tensor(*d.tensor(n));
      if (o.format == "records") {
        std::vector<std::string> elems;
        for (std::size_t i = 0; i < m.size(); ++i) elems.push_back(m.name(i));
        json table = json::array();
        for (const auto& row : m.table()) {
          json r = json::array();
          for (auto v : row) r.push_back(m.name(v));
          table.push_back(r);
        }
        records.push_back({{"name", n}, {"components", elems}, {"unit", m.name(m.unit())}, {"table", table}});
      } else {
        out << quote_name(n) << ": " << m.size() << " components, unit " << quote_name(m.name(m.unit())) << "\n";
        std::istringstream rows(m.format());
        for (std::string line; std::getline(rows, line);) out << "  " << line << "\n";
      }
    } else {
      const Category& c = *d.category(n);
      auto comps = pi0(c);
      json cs = json::array();
      std::vector<std::string> parts;
      for (const auto& comp : comps) {
        std::vector<std::string> objs;
        for (ObjId x : comp) objs.push_back(c.object_name(x));
        cs.push_back(objs);
        std::string s = "{";
        for (std::size_t i = 0; i < objs.size(); ++i) s += (i ? ", " : "") + quote_name(objs[i]);
        parts.push_back(s + "}");
      }
      if (o.format == "records") {
        records.push_back({{"name", n}, {"components", cs}});
      } else {
        out << quote_name(n) << ": " << comps.size() << " components";
        for (const auto& p : parts) out << " " << p;
        out << "\n";
      }
    }
  }
  if (o.format == "records") out << records.dump(2) << "\n";
  return kExitOk;
}

CategoryPtr category_for(const Document& d, const Options& o) {
  std::string n;
  if (!o.name.empty()) {
    n = pick(d, o.name, {BlockType::Category, BlockType::Tensor}, 0, "category");
  } else {
    for (const auto& [t, b] : d.blocks()) {
      if (t == BlockType::Category || t == BlockType::Tensor) n = b;
    }
    if (n.empty()) throw UsageError("the input has no categories");
  }
  return d.type_of(n) == BlockType::Tensor ? d.tensor(n)->carrier() : d.category(n);
}

std::string path_string(const Category& c, const Path& p) {
  if (p.is_identity()) return "id(" + quote_name(c.object_name(p.src)) + ")";
  return c.format_path(p);
}

int cmd_hom(const Options& o, std::ostream& out, std::ostream& err) {
  Document d = load(o.in, o);
  CategoryPtr c = category_for(d, o);
  ObjId x = c->object(o.src), y = c->object(o.dst);
  const HomInfo& h = c->saturation().at(x, y);
  if (h.status == HomStatus::Open) {
    err << "Hom(" << o.src << ", " << o.dst << ") does not close within the bounds\n";
    if (o.format == "records") out << json{{"src", o.src}, {"dst", o.dst}, {"status", "open"}}.dump(2) << "\n";
    return kExitUnknown;
  }
  std::vector<Path> hom = c->hom(x, y);
  std::sort(hom.begin(), hom.end(), [&](const Path& a, const Path& b) { return c->shortlex_less(a, b); });
  if (o.format == "records") {
    json elems = json::array();
    for (const auto& p : hom) elems.push_back(path_string(*c, p));
    out << json{{"src", o.src}, {"dst", o.dst}, {"status", "closed"}, {"size", hom.size()}, {"elements", elems}}.dump(2) << "\n";
  } else {
    out << "Hom(" << quote_name(o.src) << ", " << quote_name(o.dst) << "): " << hom.size() << " morphisms\n";
    for (const auto& p : hom) out << "  " << path_string(*c, p) << "\n";
  }
  return kExitOk;
}

int cmd_normalize(const Options& o, std::ostream& out) {
  Document d = load(o.in, o);
  CategoryPtr c = category_for(d, o);
  Path p = c->normalize(c->parse_path(o.term));
  if (o.format == "records") {
    out << json{{"term", o.term}, {"normal_form", path_string(*c, p)}, {"rewriting_complete", c->rewriting_complete()}}.dump(2) << "\n";
  } else {
    out << path_string(*c, p) << "\n";
  }
  return kExitOk;
}

int cmd_format(const Options& o, std::ostream& out) {
  Document d = load(o.in, o);
  write_output(o, o.format == "records" ? export_records(d) : print_document(d), out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Bicategorical colimits of presented categories and strict symmetric tensor categories", "catcolim"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--max-len", o.max_len, "Maximum path length explored")->capture_default_str();
  app.add_option("--max-hom", o.max_hom, "Maximum hom-set size")->capture_default_str();
  app.add_option("--export", o.format, "Output format")->check(CLI::IsMember({"dsl", "records"}))->capture_default_str();

  auto* construct = app.add_subcommand("construct", "Build a colimit and write it with its inputs");
  construct->add_option("--kind", o.kind, "Construction kind")
      ->required()
      ->check(CLI::IsMember({"coproduct", "coinserter", "coequifier", "coinverter", "coequalizer", "pushout", "directed", "tensor-with"}));
  construct->add_option("--category", o.category, "cat or tensor")->check(CLI::IsMember({"cat", "tensor"}))->capture_default_str();
  construct->add_option("--in", o.in, "Input document")->required();
  construct->add_option("--left", o.left, "First input");
  construct->add_option("--right", o.right, "Second input");
  construct->add_option("--cell", o.cell, "Input cell");
  construct->add_option("--route", o.route, "Route for coequalizers and pushouts")->check(CLI::IsMember({"composite", "direct"}));
  construct->add_option("--name", o.name, "Name of the construction block");
  construct->add_option("--out", o.out, "Output document (standard output when absent)");

  auto* check = app.add_subcommand("check-universal", "Verify the universal property against test categories");
  check->add_option("--construction", o.construction, "Document with a construction block")->required();
  check->add_option("--test", o.test, "Document with the test categories")->required();
  check->add_option("--name", o.name, "Construction block (the last one when absent)");

  auto* pi0c = app.add_subcommand("pi0", "Connected components");
  pi0c->add_option("--in", o.in, "Input document")->required();
  pi0c->add_option("--name", o.name, "Category (all when absent)");

  auto* hom = app.add_subcommand("hom", "List a hom-set in shortlex order");
  hom->add_option("--in", o.in, "Input document")->required();
  hom->add_option("--src", o.src, "Source object")->required();
  hom->add_option("--dst", o.dst, "Target object")->required();
  hom->add_option("--name", o.name, "Category (the last one when absent)");

  auto* norm = app.add_subcommand("normalize", "Normal form of a term");
  norm->add_option("--in", o.in, "Input document")->required();
  norm->add_option("--term", o.term, "Path such as f;g")->required();
  norm->add_option("--name", o.name, "Category (the last one when absent)");

  auto* fmt = app.add_subcommand("format", "Print a document in canonical form");
  fmt->add_option("--in", o.in, "Input document")->required();
  fmt->add_option("--out", o.out, "Output document (standard output when absent)");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (construct->parsed()) return cmd_construct(o, out, err);
    if (check->parsed()) return cmd_check_universal(o, out);
    if (pi0c->parsed()) return cmd_pi0(o, out);
    if (hom->parsed()) return cmd_hom(o, out, err);
    if (norm->parsed()) return cmd_normalize(o, out);
    if (fmt->parsed()) return cmd_format(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.code());
  }
  return kExitUsage;
}

}  // namespace catcolim

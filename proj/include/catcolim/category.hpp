#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "catcolim/error.hpp"
#include "catcolim/rewriting.hpp"

namespace catcolim {

using ObjId = std::uint32_t;
using GenId = std::uint32_t;

enum class Tri { Equal, Distinct, Unknown };
const char* tri_name(Tri t);

struct Arrow {
  std::string name;
  ObjId src = 0;
  ObjId tgt = 0;
};

// A composable sequence of generators, read left to right (f;g means f then g).
struct Path {
  ObjId src = 0;
  ObjId tgt = 0;
  std::vector<GenId> arrows;

  bool is_identity() const { return arrows.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
};

struct Relation {
  Path lhs;
  Path rhs;
  friend bool operator==(const Relation&, const Relation&) = default;
};

struct Quiver {
  std::vector<std::string> objects;
  std::vector<Arrow> arrows;
};

enum class Backend { Rewrite, Table };

struct Bounds {
  std::size_t max_len = 12;
  std::size_t max_hom = 5000;
  std::size_t max_rules = 5000;
};

enum class HomStatus { Closed, Open };

struct HomInfo {
  HomStatus status = HomStatus::Open;
  std::size_t size = 0;  // exact when Closed
};

struct SaturationReport {
  bool rewriting_complete = false;
  std::size_t num_objects = 0;
  std::vector<HomInfo> homs;  // row-major by (src, tgt)

  const HomInfo& at(ObjId x, ObjId y) const { return homs[x * num_objects + y]; }
  bool all_closed() const;
  std::size_t total() const;  // sum of closed hom sizes
};

// Explicit multiplication table of a finite category.
struct FiniteView {
  std::size_t num_objects = 0;
  std::vector<ObjId> src, tgt;
  std::vector<Path> element;        // normal form of each element
  std::vector<int> identity;        // per object
  std::vector<int> gen_element;     // per generator
  std::vector<std::vector<int>> hom;  // hom[x * n + y]
  std::vector<int> table;           // size^2, -1 when not composable
  std::vector<int> inverse_of;      // -1 when not invertible

  std::size_t size() const { return src.size(); }
  int compose(int f, int g) const { return table[static_cast<std::size_t>(f) * size() + static_cast<std::size_t>(g)]; }
  const std::vector<int>& homset(ObjId x, ObjId y) const { return hom[x * num_objects + y]; }
  int eval(const Path& p) const;
  bool is_iso(int f) const { return inverse_of[static_cast<std::size_t>(f)] >= 0; }
};

class Category;
using CategoryPtr = std::shared_ptr<const Category>;

class Category {
 public:
  Category(std::string name, Quiver quiver, std::vector<Relation> relations, Backend backend, Bounds bounds);
  Category(const Category&) = delete;
  Category& operator=(const Category&) = delete;

  const std::string& name() const { return name_; }
  std::size_t num_objects() const { return quiver_.objects.size(); }
  std::size_t num_arrows() const { return quiver_.arrows.size(); }
  const std::string& object_name(ObjId x) const { return quiver_.objects[x]; }
  const Arrow& arrow(GenId g) const { return quiver_.arrows[g]; }
  const Quiver& quiver() const { return quiver_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::optional<ObjId> find_object(std::string_view name) const;
  std::optional<GenId> find_arrow(std::string_view name) const;
  ObjId object(std::string_view name) const;  // throws UnresolvedReference
  Backend backend() const { return backend_; }
  const Bounds& bounds() const { return bounds_; }

  Path identity(ObjId x) const { return Path{x, x, {}}; }
  Path generator(GenId g) const;
  Path compose(const Path& a, const Path& b) const;  // throws NotComposable
  Path normalize(const Path& p) const;
  Tri equal(const Path& a, const Path& b) const;  // throws NotParallel
  bool rewriting_complete() const { return rewriting_.confluent(); }
  const RewriteSystem& rewriting() const { return rewriting_; }
  bool shortlex_less(const Path& a, const Path& b) const;

  const SaturationReport& saturation() const;
  std::vector<Path> hom(ObjId x, ObjId y) const;  // throws NotSaturated if Open
  bool finite() const { return saturation().all_closed(); }
  const FiniteView& table() const;  // throws NotSaturated

  // "f;g;h" or "id(X)"; names may be single-quoted.
  Path parse_path(std::string_view text) const;
  std::string format_path(const Path& p) const;
  std::string format_relation(const Relation& r) const;
  void check_path(const Path& p) const;  // throws NotComposable

 private:
  void saturate() const;
  void build_table() const;

  std::string name_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  Backend backend_;
  Bounds bounds_;
  std::unordered_map<std::string, ObjId> object_index_;
  std::unordered_map<std::string, GenId> arrow_index_;
  RewriteSystem rewriting_;

  mutable std::once_flag sat_once_;
  mutable SaturationReport sat_;
  mutable std::vector<std::vector<Path>> hom_elements_;
  mutable std::once_flag table_once_;
  mutable std::unique_ptr<FiniteView> table_;
};

CategoryPtr make_category(std::string name, Quiver quiver, std::vector<Relation> relations,
                          Backend backend = Backend::Rewrite, Bounds bounds = {});

// Incremental construction by name.
class CategoryBuilder {
 public:
  explicit CategoryBuilder(std::string name) : name_(std::move(name)) {}
  ObjId object(const std::string& name);          // DuplicateName on repeat
  GenId arrow(const std::string& name, ObjId src, ObjId tgt);
  GenId arrow(const std::string& name, const std::string& src, const std::string& tgt);
  void relation(Path lhs, Path rhs);
  // relation given as text, resolved against the arrows added so far
  void relation(std::string_view lhs, std::string_view rhs);
  ObjId find_object(const std::string& name) const;
  const Quiver& quiver() const { return quiver_; }
  std::size_t num_relations() const { return relations_.size(); }
  CategoryPtr build(Backend backend = Backend::Rewrite, Bounds bounds = {}) const;

 private:
  Path parse(std::string_view text) const;
  std::string name_;
  Quiver quiver_;
  std::vector<Relation> relations_;
  std::unordered_map<std::string, ObjId> objs_;
  std::unordered_map<std::string, GenId> arrows_;
};

// Splits "a;b;id(X)" into terms, honouring single quotes.
std::vector<std::string> split_path_terms(std::string_view text);
bool is_plain_identifier(std::string_view s);
std::string quote_name(std::string_view s);

}  // namespace catcolim

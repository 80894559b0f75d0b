#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "catcolim/functor.hpp"

namespace catcolim {

// Objects of a strict tensor category: a finite commutative monoid given by
// its table, or words over letters up to a length bound (a partial monoid).
class ObjectMonoid {
 public:
  enum class Type { Table, Words };

  ObjectMonoid() = default;
  // Checks unit, associativity (IllDefinedProduct) and commutativity
  // (NoncommutativeObjectTable).
  static ObjectMonoid table(std::vector<std::string> names, ObjId unit, std::vector<std::vector<ObjId>> mult);
  static ObjectMonoid words(std::vector<std::string> letters, std::size_t max_length);
  static ObjectMonoid trivial(const std::string& unit_name = "1");
  static ObjectMonoid product(const ObjectMonoid& a, const ObjectMonoid& b);
  // table with undefined entries (-1); unit and associativity are checked where defined
  static ObjectMonoid partial(std::vector<std::string> names, ObjId unit, std::vector<std::vector<int>> mult);

  Type type() const { return type_; }
  std::size_t size() const { return names_.size(); }
  const std::string& name(ObjId x) const { return names_[x]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<ObjId> find(const std::string& name) const;
  ObjId unit() const { return unit_; }
  std::optional<ObjId> mul(ObjId a, ObjId b) const {
    int v = table_[a][b];
    if (v < 0) return std::nullopt;
    return static_cast<ObjId>(v);
  }
  ObjId mul_or_throw(ObjId a, ObjId b) const;
  bool total() const;
  const std::vector<std::string>& letters() const { return letters_; }
  std::size_t max_length() const { return max_length_; }
  // for products: components of an element
  bool operator==(const ObjectMonoid& o) const { return names_ == o.names_ && unit_ == o.unit_ && table_ == o.table_; }
  const std::vector<std::vector<int>>& raw_table() const { return table_; }

 private:
  Type type_ = Type::Table;
  std::vector<std::string> names_;
  ObjId unit_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<std::string> letters_;
  std::size_t max_length_ = 0;
};

enum class SymmetryMode { Identity, Explicit, Free };

// Data a tensor category is generated from. Arrow endpoints are monoid
// elements. Arrows without explicit whisker entries are whiskered freely.
struct TensorPresentation {
  std::string name;
  ObjectMonoid monoid;
  std::vector<Arrow> arrows;
  // explicit a * g for declared arrows; paths over declared arrows only
  std::map<std::pair<ObjId, GenId>, Path> whisker;
  std::vector<Relation> relations;  // over declared arrows and their free copies, named by carrier ids
  SymmetryMode symmetry_mode = SymmetryMode::Identity;
  std::map<std::pair<ObjId, ObjId>, Path> symmetry;  // explicit components (carrier ids)
  bool finite = false;  // check the structural equations instead of imposing them
  Bounds bounds;
};

// Key of a carrier generator: declared arrow i (or symmetry generator for the
// pair (i, j)), whiskered by an object.
struct GenKey {
  enum Type { Declared, Sigma };
  Type type = Declared;
  std::uint32_t i = 0, j = 0;
  ObjId whisker = 0;
  auto operator<=>(const GenKey&) const = default;
};

struct TensorRelationInfo {
  Relation relation;
  enum Source { Whiskered, Action, Interchange, Involution, UnitSymmetry, Hexagon, LeftRight, RightRight, Naturality } source;
};
const char* tensor_relation_name(TensorRelationInfo::Source s);

class TensorCategory;
using TensorPtr = std::shared_ptr<const TensorCategory>;

class TensorCategory {
 public:
  const std::string& name() const { return pres_.name; }
  const ObjectMonoid& monoid() const { return pres_.monoid; }
  const CategoryPtr& carrier() const { return carrier_; }
  const TensorPresentation& presentation() const { return pres_; }
  ObjId unit() const { return pres_.monoid.unit(); }
  ObjId mul(ObjId a, ObjId b) const { return pres_.monoid.mul_or_throw(a, b); }

  // carrier generator for a key, if it exists
  std::optional<GenId> gen(const GenKey& k) const;
  const GenKey& key(GenId g) const { return keys_[g]; }
  // declared arrow i as a carrier generator
  GenId declared(std::uint32_t i) const { return *gen(GenKey{GenKey::Declared, i, 0, unit()}); }
  std::size_t num_declared() const { return pres_.arrows.size(); }

  Path whisker(ObjId a, const Path& p) const;        // a * p
  Path whisker_right(const Path& p, ObjId b) const;  // p * b, by conjugating with the symmetry
  Path tensor(const Path& f, const Path& g) const;   // f (x) g
  Path symmetry(ObjId x, ObjId y) const;
  Path compose(const Path& a, const Path& b) const;  // raw concatenation, checked
  Path carrier_identity(ObjId x) const;

  const std::vector<TensorRelationInfo>& structural_relations() const { return structural_; }

 private:
  friend TensorPtr make_tensor_category(TensorPresentation p);
  TensorPresentation pres_;
  CategoryPtr carrier_;
  std::vector<GenKey> keys_;
  std::map<GenKey, GenId> by_key_;
  // whisker_[a][g]: path for a * g (nullopt when a * src is undefined)
  std::vector<std::vector<std::optional<Path>>> whisker_;
  std::vector<std::vector<std::optional<Path>>> sigma_;
  std::vector<TensorRelationInfo> structural_;
};

// Builds the carrier: declared arrows with their free whiskered copies, the
// declared relations, and the structural equations (whiskered relations,
// interchange, symmetry involution/unit/hexagon, whiskering compatibility).
// With `finite`, the structural equations must already hold.
TensorPtr make_tensor_category(TensorPresentation p);

// Carrier generator layout of a presentation: each declared arrow followed by
// its free whiskered copies, then symmetry generators (free mode) likewise.
std::vector<GenKey> carrier_keys(const TensorPresentation& p);
Quiver carrier_quiver(const TensorPresentation& p);

// Parses a path of carrier generator names in the tensor category.
Path tensor_path(const TensorCategory& t, std::string_view text);

// Every structural equation evaluates Equal in the carrier.
ValidityReport check_tensor_invariants(const TensorCategory& t);

struct TensorFunctor {
  std::string name;
  TensorPtr dom, cod;
  Functor functor;                      // on carriers
  Path eta;                             // unit' -> F(unit)
  // mu[x][y] : F x (x) F y -> F(x y); empty where x y is undefined
  std::vector<std::vector<std::optional<Path>>> mu;
  std::optional<Path> eta_inv;
  std::vector<std::vector<std::optional<Path>>> mu_inv;

  ObjId operator()(ObjId x) const { return functor(x); }
  bool strict() const;
};

struct TensorTransformation {
  std::string name;
  TensorFunctor source, target;
  std::vector<Path> components;
  Transformation plain() const { return Transformation{name, source.functor, target.functor, components}; }
};

// A strict tensor functor from an object map and generator images.
TensorFunctor strict_tensor_functor(const TensorPtr& dom, const TensorPtr& cod, const Functor& f, std::string name = "");
TensorFunctor identity_tensor_functor(const TensorPtr& t);
// first f, then g
TensorFunctor compose(const TensorFunctor& f, const TensorFunctor& g);
// Fills eta_inv / mu_inv from the codomain table when it is finite.
void fill_inverses(TensorFunctor& f);

ValidityReport check_tensor_functor(const TensorFunctor& f);
ValidityReport check_monoidal(const TensorTransformation& t);

// Tensor structure of a finite tensor category, by element ids.
struct TensorTable {
  const FiniteView* view = nullptr;
  std::vector<std::vector<int>> obj_mul;  // monoid table (-1 undefined)
  std::vector<std::vector<int>> whisker;  // [a][element]
  std::vector<std::vector<int>> sigma;    // [x][y]
  int tensor(int f, int g) const;         // (f (x) id) ; (v * g)
  int whisker_right(int f, ObjId b) const;
};
TensorTable tensor_table(const TensorCategory& t);  // carrier must be finite

}  // namespace catcolim

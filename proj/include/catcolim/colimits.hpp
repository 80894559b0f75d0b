#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catcolim/functor.hpp"

namespace catcolim {

enum class Kind {
  Coproduct,
  Coinserter,
  Coequifier,
  Coinverter,
  Coequalizer,
  Pushout,
  Directed,
  TensorWith,
  // tensor-only stages
  CoinserterInto,
  CoisoinserterInto,
  CoequifierInto,
  MonoidalCoinserter,
};
const char* kind_name(Kind k);
std::optional<Kind> kind_from_name(std::string_view s);

// Where a generator of a constructed category came from.
struct GenRole {
  enum Type { Base, Cell, CellInverse };
  Type type = Base;
  std::size_t source = 0;  // Base: which input category
  GenId gen = 0;           // Base: generator in that input
  ObjId index = 0;         // Cell: index object of the cell
  ObjId whisker = 0;       // tensor cells: the whiskering object
};

enum class Route { Composite, Direct };

struct ConstructionResult {
  Kind kind = Kind::Coproduct;
  Route route = Route::Composite;
  CategoryPtr target;
  std::vector<Functor> universal;     // P, or the coprojections
  std::vector<Transformation> cells;  // the universal cell; an invertible one is followed by its inverse
  std::vector<CategoryPtr> in_categories;
  std::vector<Functor> in_functors;
  std::vector<Transformation> in_cells;
  std::vector<GenRole> roles;         // one per generator of target
  std::vector<CategoryPtr> stages;    // intermediate categories, in order
};

ConstructionResult coproduct(const CategoryPtr& a, const CategoryPtr& b);
ConstructionResult coinserter(const Functor& f, const Functor& g, const std::string& tag = "d");
ConstructionResult coequifier(const Transformation& alpha, const Transformation& beta);
ConstructionResult coinverter(const Transformation& alpha);
ConstructionResult coequalizer(const Functor& f, const Functor& g, Route route = Route::Composite);
ConstructionResult pushout(const Functor& f, const Functor& g);

struct Diagram {
  std::vector<std::string> index;                     // index names
  std::vector<std::pair<std::size_t, std::size_t>> order;  // generating i <= j
  std::vector<CategoryPtr> categories;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Functor>> functors;  // F_{i,j} for i < j
};
// Colimit of a diagram over a finite directed poset with strictly commuting
// transition functors: the top category, with u_i = F_{i,top}.
ConstructionResult directed_colimit(const Diagram& d);

// X (x) A in Cat: the product, with coprojections A -> X x A for each object of X.
ConstructionResult tensor_with(const CategoryPtr& x, const CategoryPtr& a);

// A cocone into T: legs for each base input, and (when the construction has
// cells) the image cell and, for invertible cells, its inverse.
struct Cocone {
  std::vector<Functor> legs;
  std::optional<Transformation> cell;
  std::optional<Transformation> inverse;
};

// The comparison functor K with K P = H on the nose. Throws
// ConditionsNotSatisfied when the cocone does not satisfy the relations.
Functor factor_through(const ConstructionResult& c, const Cocone& q);

// Drops relation number `which` from the target (for negative controls).
ConstructionResult drop_relation(const ConstructionResult& c, std::size_t which);

// Names not already used in the quiver.
std::string fresh_arrow_name(const Quiver& q, const std::string& want);
std::string fresh_object_name(const Quiver& q, const std::string& want);

// Re-targets a functor at a category with the same objects and a superset of
// generators (ids preserved).
Functor retarget(const Functor& f, const CategoryPtr& cod);

}  // namespace catcolim

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "catcolim/colimits.hpp"
#include "catcolim/tensor.hpp"

namespace catcolim {

struct TensorConstructionResult {
  Kind kind = Kind::Coproduct;
  Route route = Route::Composite;
  TensorPtr target;
  std::vector<TensorFunctor> universal;  // P, or the coprojections
  // delta' (components indexed by the index category), followed by its inverse when invertible
  std::vector<Transformation> cells;
  TensorPtr base;  // the tensor category the cells were added to (roles refer to its generators)
  std::vector<GenRole> base_roles;  // when the base is a product: (g, b) and (a, h) decompositions
  std::size_t top = 0;              // directed colimits: index of the top category

  // inputs
  std::vector<TensorPtr> in_categories;           // coproduct / pushout factors
  CategoryPtr index;                              // index category of the cells
  std::vector<Functor> in_plain;                  // F, G into the base
  std::vector<Transformation> in_plain_cells;     // alpha, beta (coequifier), alpha (coinverter)
  std::vector<TensorFunctor> in_functors;         // F, G as tensor functors
  std::vector<TensorTransformation> in_cells;     // alpha as a tensor transformation

  std::vector<GenRole> roles;  // per target generator: Base (gen of base), Cell / CellInverse (index, whisker)
  std::vector<TensorPtr> stages;
  std::vector<Transformation> stage_cells;  // delta' after the first stage
};

TensorPtr initial_tensor(const std::string& name = "Init");

// Product tensor category with the coprojections a |-> (a, 1) and b |-> (1, b).
TensorConstructionResult coproduct_tensor(const TensorPtr& a, const TensorPtr& b);

// H(a, b) = F(a) (x) G(b). The multiplication swaps the middle factors with
// the symmetry of T; `with_symmetry = false` omits that swap (negative control).
TensorFunctor pair_tensor_functors(const TensorConstructionResult& coproduct, const TensorFunctor& f,
                                   const TensorFunctor& g, bool with_symmetry = true);

// Universal tensor functor with a plain cell P F -> P G (iso when `invertible`),
// for plain functors F, G : I -> A.
TensorConstructionResult coinserter_into(const Functor& f, const Functor& g, const TensorPtr& a,
                                         const std::string& tag = "d");
TensorConstructionResult coisoinserter_into(const Functor& f, const Functor& g, const TensorPtr& a,
                                            const std::string& tag = "d");
// Universal tensor functor with P alpha = P beta, for plain cells into A.
TensorConstructionResult coequifier_into(const Transformation& alpha, const Transformation& beta, const TensorPtr& a);

TensorConstructionResult coinserter_tensor(const TensorFunctor& f, const TensorFunctor& g);
TensorConstructionResult coinverter_tensor(const TensorTransformation& alpha);
TensorConstructionResult coequalizer_tensor(const TensorFunctor& f, const TensorFunctor& g, Route route = Route::Composite);
// Recipe: product, coisoinserter of the two stabilized maps, then the tensor coequifiers.
TensorConstructionResult pushout_tensor(const TensorFunctor& f, const TensorFunctor& g);
// The composite of the coproduct and the (primary route) coequalizer of i_A F and i_B G.
TensorConstructionResult pushout_tensor_composite(const TensorFunctor& f, const TensorFunctor& g);

struct TensorDiagram {
  std::vector<std::string> index;
  std::vector<std::pair<std::size_t, std::size_t>> order;
  std::vector<TensorPtr> categories;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, TensorFunctor>> functors;
};
TensorConstructionResult directed_colimit_tensor(const TensorDiagram& d);

struct TensorCocone {
  std::vector<TensorFunctor> legs;
  std::optional<Transformation> cell;
  std::optional<Transformation> inverse;
};

// The comparison tensor functor K with K P = H. Throws ConditionsNotSatisfied
// when the cocone violates the defining relations, UnknownEquality if undecided.
TensorFunctor factor_through(const TensorConstructionResult& c, const TensorCocone& q);

// Drops declared relation `which` of the target (negative controls).
TensorConstructionResult drop_declared_relation(const TensorConstructionResult& c, std::size_t which);

// The plain functor I -> A picking objects of A on a discrete index.
CategoryPtr discrete_index(const std::vector<std::string>& names, const std::string& name = "Idx");

// Tensor transformation from a plain one between tensor functors.
TensorTransformation as_tensor(const Transformation& t, const TensorFunctor& f, const TensorFunctor& g);

}  // namespace catcolim

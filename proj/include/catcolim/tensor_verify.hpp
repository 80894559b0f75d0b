#pragma once

#include <string>
#include <vector>

#include "catcolim/monoid.hpp"
#include "catcolim/tensor_colimits.hpp"
#include "catcolim/verify.hpp"

namespace catcolim {

// Tensor functor into a finite tensor category by element ids, normalized so
// that F(1) = 1 and eta = id (every tensor functor is monoidally isomorphic to
// one of these). mu is listed over the defined pairs of the domain monoid.
struct TableTensorFunctor {
  std::vector<ObjId> objects;
  std::vector<int> mu;
  std::vector<int> arrows;
  friend bool operator==(const TableTensorFunctor&, const TableTensorFunctor&) = default;
  friend auto operator<=>(const TableTensorFunctor&, const TableTensorFunctor&) = default;
};

// Defined pairs (x, y) of a monoid in row-major order; index -1 where undefined.
struct PairIndex {
  std::vector<std::pair<ObjId, ObjId>> pairs;
  std::vector<std::vector<int>> at;
  explicit PairIndex(const ObjectMonoid& m);
};

// All normalized tensor functors A -> T. A needs finitely many generators; T finite.
std::vector<TableTensorFunctor> enumerate_tensor_functors(const TensorCategory& a, const TensorCategory& t);
TensorFunctor to_tensor_functor(const TensorPtr& a, const TensorPtr& t, const TableTensorFunctor& f, std::string name = "");
// Components (by object of A) of the monoidal transformations f => g.
std::vector<std::vector<int>> enumerate_monoidal_transformations(const TensorCategory& a, const TensorCategory& t,
                                                                 const TableTensorFunctor& f, const TableTensorFunctor& g,
                                                                 bool iso_only = false);

// Hom(colimit, T) against the category of cocones of the construction kind.
UPReport check_universal(const TensorConstructionResult& c, const TensorPtr& t);

// Connected components with the induced multiplication.
CommMonoid pi0_tensor(const TensorCategory& t);
bool compare_pi0(const TensorConstructionResult& c, const CommMonoid& oracle);

// K : A -> B and L : B -> A are tensor functors that are mutually inverse on
// generators, or K's carrier functor is an equivalence of saturated categories.
struct TensorEquivalenceReport {
  bool tensor_functors = false;
  bool inverse_on_generators = false;
  bool carrier_equivalence = false;
  std::vector<std::string> notes;
  bool ok() const { return tensor_functors && (inverse_on_generators || carrier_equivalence); }
};
TensorEquivalenceReport check_tensor_equivalence(const TensorFunctor& k, const TensorFunctor& l);

}  // namespace catcolim

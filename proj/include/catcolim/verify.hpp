#pragma once

#include <functional>
#include <string>
#include <vector>

#include "catcolim/colimits.hpp"

namespace catcolim {

struct UPReport {
  bool comparison_well_defined = true;
  bool fully_faithful = true;
  bool essentially_surjective = true;
  std::size_t unknown = 0;
  std::size_t source_objects = 0;   // functors out of the construction
  std::size_t source_classes = 0;   // up to isomorphism
  std::size_t target_objects = 0;   // cocones / cells
  std::size_t target_classes = 0;
  std::vector<std::string> notes;

  bool equivalence() const { return comparison_well_defined && fully_faithful && essentially_surjective && unknown == 0; }
  Tri verdict() const { return unknown ? Tri::Unknown : equivalence() ? Tri::Equal : Tri::Distinct; }
  std::string summary() const;
};

// A finite category presented by enumeration: objects are integer vectors,
// morphisms are component vectors over a fixed list of slots.
struct EnumeratedCategory {
  std::vector<std::vector<int>> objects;
  // morphisms a -> b; when iso_only, only those with all components invertible
  std::function<std::vector<std::vector<int>>(std::size_t a, std::size_t b, bool iso_only, std::size_t limit)> homs;
  // T-objects occupied by the slots of an object (used to group candidates)
  std::function<std::vector<int>(std::size_t a)> signature;
};

// Decides whether Q : S -> T is an equivalence. q_obj maps an object of S to an
// encoding that must appear among T's objects; q_mor maps component vectors.
UPReport compare_categories(const EnumeratedCategory& s, const EnumeratedCategory& t,
                            const std::function<std::vector<int>(std::size_t)>& q_obj,
                            const std::function<std::vector<int>(std::size_t, const std::vector<int>&)>& q_mor);

// Universal property of a Cat construction against a finite test category.
UPReport check_universal(const ConstructionResult& c, const CategoryPtr& t);

// Iso classes of objects of a finite category.
std::vector<int> iso_class_ids(const FiniteView& t);

}  // namespace catcolim

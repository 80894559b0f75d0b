#pragma once

#include <string>
#include <vector>

#include "catcolim/category.hpp"

namespace catcolim {

// A functor between presented categories, determined by its values on
// objects and generators.
struct Functor {
  std::string name;
  CategoryPtr dom;
  CategoryPtr cod;
  std::vector<ObjId> on_objects;
  std::vector<Path> on_arrows;

  ObjId operator()(ObjId x) const { return on_objects[x]; }
  Path apply(const Path& p) const;  // normalized in cod
};

struct Transformation {
  std::string name;
  Functor source;
  Functor target;
  std::vector<Path> components;  // one per object of the domain
};

struct ValidityReport {
  bool valid = true;
  std::size_t unknown = 0;
  std::vector<std::string> problems;

  Tri verdict() const { return !valid ? Tri::Distinct : unknown ? Tri::Unknown : Tri::Equal; }
  void fail(std::string what) {
    valid = false;
    problems.push_back(std::move(what));
  }
  void record(Tri t, const std::string& what);
  void merge(const ValidityReport& other);
};

Functor identity_functor(const CategoryPtr& c);
// first f, then g
Functor compose(const Functor& f, const Functor& g);
Functor constant_functor(const CategoryPtr& dom, const CategoryPtr& cod, ObjId x);

ValidityReport check_functor(const Functor& f);
ValidityReport check_natural(const Transformation& t);
// Do two functors agree on generators up to equality in the codomain?
Tri functors_equal(const Functor& f, const Functor& g);

// H * t : components H(t_X)
Transformation whisker(const Functor& h, const Transformation& t);
// t * K : components t_{K X}
Transformation whisker(const Transformation& t, const Functor& k);
Transformation vertical(const Transformation& s, const Transformation& t);
Transformation identity_transformation(const Functor& f);

// All functors A -> T for finite T. A only needs finitely many objects and
// generators; images of generators are checked against the relations of A.
std::vector<Functor> enumerate_functors(const CategoryPtr& a, const CategoryPtr& t);
std::vector<Transformation> enumerate_transformations(const Functor& f, const Functor& g);

// Functor into a finite category, by element ids of the target table.
struct TableFunctor {
  std::vector<ObjId> objects;
  std::vector<int> arrows;
  friend bool operator==(const TableFunctor&, const TableFunctor&) = default;
  friend auto operator<=>(const TableFunctor&, const TableFunctor&) = default;
};
int eval(const FiniteView& t, const TableFunctor& f, const Path& p);
std::vector<TableFunctor> enumerate_table_functors(const Category& a, const Category& t);
bool table_functor_valid(const Category& a, const FiniteView& t, const TableFunctor& f);
Functor to_functor(const CategoryPtr& a, const CategoryPtr& t, const TableFunctor& f, std::string name = "");
TableFunctor to_table_functor(const Functor& f);  // codomain must be finite

// Fully faithful and essentially surjective, decided on saturated categories.
struct EquivalenceReport {
  bool fully_faithful = false;
  bool essentially_surjective = false;
  bool equivalence() const { return fully_faithful && essentially_surjective; }
};
EquivalenceReport check_equivalence(const Functor& f);

// Connected components; each component lists its objects in id order.
std::vector<std::vector<ObjId>> pi0(const Category& c);

// Product category: generators (g,b) and (a,h), with interchange relations.
struct ProductCategory {
  CategoryPtr category;
  std::size_t left_objects = 0;
  std::size_t right_objects = 0;
  ObjId object(ObjId a, ObjId b) const { return static_cast<ObjId>(a * right_objects + b); }
  // generator ids: (g, b) and (a, h)
  std::vector<std::vector<GenId>> left_gen;   // [g][b]
  std::vector<std::vector<GenId>> right_gen;  // [a][h]
  Path left(const Path& p, ObjId b) const;
  Path right(ObjId a, const Path& p) const;
};
std::string pair_name(const std::string& a, const std::string& b);
ProductCategory product(const CategoryPtr& a, const CategoryPtr& b, const std::string& name = "");

}  // namespace catcolim

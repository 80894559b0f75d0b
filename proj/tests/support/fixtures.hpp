#pragma once
// Small categories shared by the test binaries.

#include <string>
#include <vector>

#include "catcolim/functor.hpp"

namespace fx {

using namespace catcolim;

inline CategoryPtr terminal(const std::string& name = "One") {
  CategoryBuilder b(name);
  b.object("X");
  return b.build();
}

inline CategoryPtr discrete(int n, const std::string& name = "Disc") {
  CategoryBuilder b(name);
  for (int i = 0; i < n; ++i) b.object("X" + std::to_string(i));
  return b.build();
}

inline CategoryPtr cyclic(int n, const std::string& name = "") {
  CategoryBuilder b(name.empty() ? "Z" + std::to_string(n) : name);
  b.object("X");
  b.arrow("f", "X", "X");
  std::string lhs = "f";
  for (int i = 1; i < n; ++i) lhs += ";f";
  b.relation(lhs, "id(X)");
  return b.build();
}

inline CategoryPtr arrow(const std::string& name = "Arr") {
  CategoryBuilder b(name);
  b.object("X");
  b.object("Y");
  b.arrow("a", "X", "Y");
  return b.build();
}

inline CategoryPtr idempotent(const std::string& name = "Idem") {
  CategoryBuilder b(name);
  b.object("X");
  b.arrow("e", "X", "X");
  b.relation("e;e", "e");
  return b.build();
}

inline CategoryPtr walking_iso(const std::string& name = "Iso") {
  CategoryBuilder b(name);
  b.object("X");
  b.object("Y");
  b.arrow("u", "X", "Y");
  b.arrow("v", "Y", "X");
  b.relation("u;v", "id(X)");
  b.relation("v;u", "id(Y)");
  return b.build();
}

inline CategoryPtr parallel_pair(const std::string& name = "Par") {
  CategoryBuilder b(name);
  b.object("X");
  b.object("Y");
  b.arrow("s", "X", "Y");
  b.arrow("t", "X", "Y");
  return b.build();
}

inline CategoryPtr chain3(const std::string& name = "Chain") {
  CategoryBuilder b(name);
  b.object("X");
  b.object("Y");
  b.object("Z");
  b.arrow("p", "X", "Y");
  b.arrow("q", "Y", "Z");
  return b.build();
}

// span Y <- X -> Z
inline CategoryPtr span(const std::string& name = "Span") {
  CategoryBuilder b(name);
  b.object("X");
  b.object("Y");
  b.object("Z");
  b.arrow("l", "X", "Y");
  b.arrow("r", "X", "Z");
  return b.build();
}

// Y with an idempotent and an arrow into it
inline CategoryPtr arrow_idem(const std::string& name = "ArrIdem") {
  CategoryBuilder b(name);
  b.object("X");
  b.object("Y");
  b.arrow("a", "X", "Y");
  b.arrow("e", "Y", "Y");
  b.relation("e;e", "e");
  b.relation("a;e", "a");
  return b.build();
}

// a retract: r after s is the identity of Y, s after r is an idempotent on X
inline CategoryPtr split_idempotent(const std::string& name = "Split") {
  CategoryBuilder b(name);
  b.object("X");
  b.object("Y");
  b.arrow("r", "X", "Y");
  b.arrow("s", "Y", "X");
  b.relation("s;r", "id(Y)");
  return b.build();
}

// Finite test categories: at most 3 objects and 6 morphisms.
inline std::vector<CategoryPtr> test_categories() {
  return {terminal("T1"),         discrete(2, "T2"),       arrow("TArr"),         idempotent("TIdem"),
          cyclic(2, "TZ2"),       cyclic(3, "TZ3"),        walking_iso("TIso"),   parallel_pair("TPar"),
          chain3("TChain"),       arrow_idem("TArrIdem"),  split_idempotent("TSplit")};
}

inline Functor functor_by_name(const CategoryPtr& a, const CategoryPtr& b, const std::vector<std::string>& objects,
                               const std::vector<std::string>& arrows, const std::string& name = "F") {
  Functor f{name, a, b, {}, {}};
  for (const auto& o : objects) f.on_objects.push_back(b->object(o));
  for (const auto& p : arrows) f.on_arrows.push_back(b->parse_path(p));
  return f;
}

inline Transformation transformation_by_name(const Functor& f, const Functor& g, const std::vector<std::string>& comps,
                                             const std::string& name = "t") {
  Transformation t{name, f, g, {}};
  for (const auto& p : comps) t.components.push_back(f.cod->parse_path(p));
  return t;
}

}  // namespace fx

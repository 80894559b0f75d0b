#pragma once
// Small strict symmetric tensor categories shared by the test binaries.

#include <string>
#include <vector>

#include "catcolim/tensor.hpp"

namespace tfx {

using namespace catcolim;

inline ObjectMonoid cyclic_monoid(int n) {
  std::vector<std::string> names{"e"};
  for (int i = 1; i < n; ++i) names.push_back(i == 1 ? "x" : "x" + std::to_string(i));
  std::vector<std::vector<ObjId>> t(n, std::vector<ObjId>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = static_cast<ObjId>((a + b) % n);
  }
  return ObjectMonoid::table(names, 0, t);
}

// {0, 1, ..., n-1} under max
inline ObjectMonoid max_monoid(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<std::vector<ObjId>> t(n, std::vector<ObjId>(n));
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) t[a][b] = static_cast<ObjId>(std::max(a, b));
  }
  return ObjectMonoid::table(names, 0, t);
}

inline TensorPtr discrete(const ObjectMonoid& m, const std::string& name, bool finite = true) {
  TensorPresentation p;
  p.name = name;
  p.monoid = m;
  p.finite = finite;
  return make_tensor_category(p);
}

inline TensorPtr initial(const std::string& name = "I") { return discrete(ObjectMonoid::trivial(), name); }
inline TensorPtr z(int n, const std::string& name = "") { return discrete(cyclic_monoid(n), name.empty() ? "Z" + std::to_string(n) : name); }
inline TensorPtr klein(const std::string& name = "K4") {
  return discrete(ObjectMonoid::product(cyclic_monoid(2), cyclic_monoid(2)), name);
}
// the free tensor category on one object, truncated at word length n, with trivial symmetry
inline TensorPtr words(std::size_t n = 3, const std::string& name = "W") {
  return discrete(ObjectMonoid::words({"x"}, n), name, false);
}

// one object whose endomorphisms are Z/2
inline TensorPtr involution(const std::string& name = "Inv") {
  TensorPresentation p;
  p.name = name;
  p.monoid = ObjectMonoid::trivial();
  p.arrows = {{"s", 0, 0}};
  p.relations = {{Path{0, 0, {0, 0}}, Path{0, 0, {}}}};
  p.finite = true;
  return make_tensor_category(p);
}

// super vector spaces in miniature: End(e) = {1, s}, x * s = s_x, symmetry on (x, x) is s
inline TensorPtr svect(const std::string& name = "SVect") {
  TensorPresentation p;
  p.name = name;
  p.monoid = cyclic_monoid(2);
  p.arrows = {{"s", 0, 0}, {"sx", 1, 1}};
  p.relations = {{Path{0, 0, {0, 0}}, Path{0, 0, {}}}, {Path{1, 1, {1, 1}}, Path{1, 1, {}}}};
  p.whisker[{1, 0}] = Path{1, 1, {1}};
  p.whisker[{1, 1}] = Path{0, 0, {0}};
  p.symmetry_mode = SymmetryMode::Explicit;
  p.symmetry[{1, 1}] = Path{0, 0, {0}};
  p.finite = true;
  return make_tensor_category(p);
}

// walking arrow 0 -> 1 with the max monoid
inline TensorPtr arrow(const std::string& name = "TArr") {
  TensorPresentation p;
  p.name = name;
  p.monoid = max_monoid(2);
  p.arrows = {{"a", 0, 1}};
  p.whisker[{1, 0}] = Path{1, 1, {}};
  p.finite = true;
  return make_tensor_category(p);
}

// chain 0 -> 1 -> 2 with the max monoid
inline TensorPtr chain(const std::string& name = "TChain") {
  TensorPresentation p;
  p.name = name;
  p.monoid = max_monoid(3);
  p.arrows = {{"a", 0, 1}, {"b", 1, 2}};
  p.whisker[{1, 0}] = Path{1, 1, {}};
  p.whisker[{2, 0}] = Path{2, 2, {}};
  p.whisker[{1, 1}] = Path{1, 2, {1}};
  p.whisker[{2, 1}] = Path{2, 2, {}};
  p.finite = true;
  return make_tensor_category(p);
}

// e and x isomorphic, over Z/2
inline TensorPtr chaotic(const std::string& name = "TChaos") {
  TensorPresentation p;
  p.name = name;
  p.monoid = cyclic_monoid(2);
  p.arrows = {{"u", 0, 1}, {"v", 1, 0}};
  p.relations = {{Path{0, 0, {0, 1}}, Path{0, 0, {}}}, {Path{1, 1, {1, 0}}, Path{1, 1, {}}}};
  p.whisker[{1, 0}] = Path{1, 0, {1}};
  p.whisker[{1, 1}] = Path{0, 1, {0}};
  p.finite = true;
  return make_tensor_category(p);
}

// End(e) = End(x) = Z/3, x * r = rx, x * rx = r
inline TensorPtr rotations(const std::string& name = "TRot") {
  TensorPresentation p;
  p.name = name;
  p.monoid = cyclic_monoid(2);
  p.arrows = {{"r", 0, 0}, {"rx", 1, 1}};
  p.relations = {{Path{0, 0, {0, 0, 0}}, Path{0, 0, {}}}, {Path{1, 1, {1, 1, 1}}, Path{1, 1, {}}}};
  p.whisker[{1, 0}] = Path{1, 1, {1}};
  p.whisker[{1, 1}] = Path{0, 0, {0}};
  p.finite = true;
  return make_tensor_category(p);
}

// Finite test tensor categories with at most four objects.
inline std::vector<TensorPtr> test_categories() {
  return {initial("T1"), z(2, "TZ2"), z(3, "TZ3"), klein("TK4"), svect("TSVect"), arrow("TArr"), chain("TChain"), chaotic("TChaos"), rotations("TRot")};
}

inline std::vector<TensorPtr> small_test_categories() { return {z(2, "TZ2"), svect("TSVect"), arrow("TArr"), chaotic("TChaos")}; }

}  // namespace tfx

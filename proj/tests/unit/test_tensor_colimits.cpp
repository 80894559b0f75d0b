#include "../support/tensor_fixtures.hpp"
#include "catcolim/tensor_colimits.hpp"
#include "doctest.h"

using namespace catcolim;

namespace {

TensorFunctor strict(const TensorPtr& a, const TensorPtr& b, std::vector<ObjId> objects, const std::string& name) {
  return strict_tensor_functor(a, b, Functor{name, a->carrier(), b->carrier(), std::move(objects), {}}, name);
}

}  // namespace

TEST_CASE("coproduct of discrete cyclic groups") {
  auto z2 = tfx::z(2), z3 = tfx::z(3), z6 = tfx::z(6);
  auto c = coproduct_tensor(z2, z3);
  CHECK(c.target->monoid().size() == 6);
  CHECK(c.target->carrier()->num_arrows() == 0);
  CHECK(check_tensor_invariants(*c.target).valid);
  for (const auto& u : c.universal) CHECK(check_tensor_functor(u).valid);
  auto k = factor_through(c, TensorCocone{{strict(z2, z6, {0, 3}, "H2"), strict(z3, z6, {0, 2, 4}, "H3")}, {}, {}});
  // (a, b) |-> 3a + 2b is a bijection
  std::vector<ObjId> img = k.functor.on_objects;
  std::sort(img.begin(), img.end());
  CHECK(img == std::vector<ObjId>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("coinserter into Z/2 has infinite homs") {
  auto z2 = tfx::z(2);
  auto idx = discrete_index({"*"});
  auto c = coinserter_into(Functor{"E", idx, z2->carrier(), {0}, {}}, Functor{"X", idx, z2->carrier(), {1}, {}}, z2);
  const auto& sat = c.target->carrier()->saturation();
  CHECK(sat.at(0, 1).status == HomStatus::Open);
  CHECK(c.roles.size() == c.target->carrier()->num_arrows());
  CHECK(c.roles[0].type == GenRole::Cell);
  CHECK(c.roles[1].type == GenRole::Cell);
  CHECK(c.roles[1].whisker == 1);
}

TEST_CASE("coinserter of the identity of Z/2 with itself") {
  auto z2 = tfx::z(2);
  auto id = identity_tensor_functor(z2);
  auto c = coinserter_tensor(id, id);
  REQUIRE(c.stages.size() == 3);
  const Category& t = *c.target->carrier();
  REQUIRE(t.finite());
  CHECK(t.hom(0, 0).size() == 2);
  CHECK(t.hom(1, 1).size() == 2);
  CHECK(check_tensor_invariants(*c.target).valid);
  const TensorFunctor& p = c.universal[0];
  CHECK(check_tensor_functor(p).valid);
  // delta' after the inserter stage fails the unit condition, the final one is monoidal
  const Transformation& d1 = c.stage_cells[0];
  TensorFunctor p1 = strict_tensor_functor(z2, c.stages[0], identity_functor(z2->carrier()), "P1");
  p1.functor.cod = c.stages[0]->carrier();
  CHECK(check_natural(d1).valid);
  CHECK_FALSE(check_monoidal(TensorTransformation{"d1", p1, p1, d1.components}).valid);
  CHECK(check_monoidal(TensorTransformation{"d", p, p, c.cells[0].components}).valid);
}

TEST_CASE("coequalizer routes agree") {
  auto z2 = tfx::z(2);
  auto id = identity_tensor_functor(z2);
  auto triv = strict(z2, z2, {0, 0}, "T");
  auto a = coequalizer_tensor(id, triv, Route::Composite);
  auto b = coequalizer_tensor(id, triv, Route::Direct);
  REQUIRE(a.target->carrier()->finite());
  REQUIRE(b.target->carrier()->finite());
  CHECK(a.target->carrier()->hom(1, 0).size() == b.target->carrier()->hom(1, 0).size());
  auto k = factor_through(a, TensorCocone{{b.universal[0]}, b.cells[0], b.cells[1]});
  auto l = factor_through(b, TensorCocone{{a.universal[0]}, a.cells[0], a.cells[1]});
  CHECK(check_tensor_functor(compose(k, l)).valid);
  // K L is the identity on generators
  Functor kl = compose(k.functor, l.functor);
  CHECK(functors_equal(kl, identity_functor(a.target->carrier())) == Tri::Equal);
}

TEST_CASE("pushout over the initial tensor category") {
  auto init = initial_tensor();
  auto z2 = tfx::z(2), z3 = tfx::z(3);
  auto f = strict(init, z2, {0}, "F");
  auto g = strict(init, z3, {0}, "G");
  auto r = pushout_tensor(f, g);
  const Category& t = *r.target->carrier();
  REQUIRE(t.finite());
  CHECK(t.num_objects() == 6);
  for (ObjId x = 0; x < 6; ++x) CHECK(t.hom(x, x).size() == 1);
  auto rc = pushout_tensor_composite(f, g);
  REQUIRE(rc.target->carrier()->finite());
  CHECK(rc.target->carrier()->hom(0, 0).size() == 1);
}

TEST_CASE("pairing needs the symmetry") {
  auto sv = tfx::svect();
  auto c = coproduct_tensor(sv, sv);
  auto id = identity_tensor_functor(sv);
  CHECK(check_tensor_functor(pair_tensor_functors(c, id, id, true)).valid);
  CHECK_FALSE(check_tensor_functor(pair_tensor_functors(c, id, id, false)).valid);
}

TEST_CASE("directed colimit of Z/2 into Z/4") {
  auto z2 = tfx::z(2), z4 = tfx::z(4);
  auto f = strict(z2, z4, {0, 2}, "F");
  TensorDiagram d{{"a", "b"}, {{0, 1}}, {z2, z4}, {{{0, 1}, f}}};
  auto r = directed_colimit_tensor(d);
  CHECK(r.target == z4);
  CHECK(r.universal[0].functor.on_objects == std::vector<ObjId>{0, 2});
  auto k = factor_through(r, TensorCocone{{f, identity_tensor_functor(z4)}, {}, {}});
  CHECK(check_tensor_functor(k).valid);
  CHECK_THROWS_AS(factor_through(r, TensorCocone{{strict(z2, z4, {0, 0}, "T"), identity_tensor_functor(z4)}, {}, {}}), Error);
}

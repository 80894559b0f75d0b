#include "../support/tensor_fixtures.hpp"
#include "catcolim/tensor_verify.hpp"
#include "doctest.h"

using namespace catcolim;

namespace {

TensorFunctor strict(const TensorPtr& a, const TensorPtr& b, std::vector<ObjId> objects, const std::string& name) {
  return strict_tensor_functor(a, b, Functor{name, a->carrier(), b->carrier(), std::move(objects), {}}, name);
}

}  // namespace

TEST_CASE("commutative monoid oracle") {
  auto z2 = CommMonoid::cyclic(2), z3 = CommMonoid::cyclic(3), z6 = CommMonoid::cyclic(6);
  CHECK(isomorphic(monoid_colimit_oracle(Kind::Coproduct, {{z2, z3}, {}}), z6));
  CHECK_FALSE(isomorphic(monoid_colimit_oracle(Kind::Coproduct, {{z2, z2}, {}}), CommMonoid::cyclic(4)));
  // identify x with e in Z/2
  auto q = monoid_colimit_oracle(Kind::Coequalizer, {{z2}, {{0, 1}, {0, 0}}});
  CHECK(q.size() == 1);
  // Z/2 and Z/3 glued along the trivial monoid
  auto p = monoid_colimit_oracle(Kind::Pushout, {{z2, z3}, {{0}, {0}}});
  CHECK(isomorphic(p, z6));
  // Z/4 and Z/2 glued along Z/2 -> Z/4 (2x) and Z/2 -> Z/2 (id): Z/4
  auto z4 = CommMonoid::cyclic(4);
  CHECK(isomorphic(monoid_colimit_oracle(Kind::Pushout, {{z4, z2}, {{0, 2}, {0, 1}}}), z4));
}

TEST_CASE("normalized tensor functors by enumeration") {
  auto z2 = tfx::z(2), sv = tfx::svect();
  // x goes to e (the twist on (x, x) rules out x); mu(x, x) in End(e) = {1, s}
  auto fs = enumerate_tensor_functors(*z2, *sv);
  REQUIRE(fs.size() == 2);
  for (const auto& f : fs) {
    CHECK(f.objects == std::vector<ObjId>{0, 0});
    CHECK(check_tensor_functor(to_tensor_functor(z2, sv, f)).valid);
  }
  // the two are not monoidally isomorphic: theta(x) (x) theta(x) is always 1
  CHECK(enumerate_monoidal_transformations(*z2, *sv, fs[0], fs[1]).empty());
  CHECK(enumerate_monoidal_transformations(*z2, *sv, fs[0], fs[0]).size() == 2);
  CHECK(enumerate_tensor_functors(*z2, *tfx::z(2)).size() == 2);
  CHECK(enumerate_tensor_functors(*tfx::z(3), *tfx::z(2)).size() == 1);
  // max monoid into Z/2: 1 must be idempotent, so 1 |-> e
  CHECK(enumerate_tensor_functors(*tfx::arrow(), *tfx::z(2)).size() == 1);
}

TEST_CASE("components with their multiplication") {
  auto z2 = tfx::z(2), z3 = tfx::z(3);
  auto c = coproduct_tensor(z2, z3);
  CHECK(compare_pi0(c, CommMonoid::cyclic(6)));
  CHECK_FALSE(compare_pi0(c, CommMonoid::cyclic(3)));
  auto id = identity_tensor_functor(z2);
  auto e = coequalizer_tensor(id, strict(z2, z2, {0, 0}, "T"));
  CHECK(pi0_tensor(*e.target).size() == 1);
  CHECK(pi0_tensor(*tfx::chain()).size() == 1);
  CHECK_THROWS_AS(pi0_tensor(*tfx::words(3)), Error);
}

TEST_CASE("tensor universal properties") {
  auto z2 = tfx::z(2);
  auto id = identity_tensor_functor(z2);
  auto triv = strict(z2, z2, {0, 0}, "T");
  std::vector<TensorConstructionResult> cs;
  cs.push_back(coproduct_tensor(z2, tfx::z(2, "B")));
  cs.push_back(coinserter_tensor(id, id));
  cs.push_back(coequalizer_tensor(id, triv, Route::Direct));
  cs.push_back(coequalizer_tensor(id, triv, Route::Composite));
  auto init = initial_tensor();
  cs.push_back(pushout_tensor(strict(init, z2, {0}, "F"), strict(init, tfx::z(2, "B"), {0}, "G")));
  for (const auto& c : cs) {
    for (const auto& t : tfx::small_test_categories()) {
      CAPTURE(kind_name(c.kind));
      CAPTURE(t->name());
      UPReport r = check_universal(c, t);
      CHECK_MESSAGE(r.equivalence(), r.summary());
    }
  }
}

TEST_CASE("dropping a relation breaks the universal property") {
  auto z2 = tfx::z(2);
  auto id = identity_tensor_functor(z2);
  auto c = coinserter_tensor(id, id);
  // relation 3 is d<e> = d<x> (x) d<x>; without it d<x> may go to a rotation of order 3
  auto bad = drop_declared_relation(c, 3);
  CHECK(check_universal(bad, tfx::rotations()).verdict() == Tri::Distinct);
  CHECK(check_universal(c, tfx::rotations()).equivalence());
  CHECK(check_universal(bad, tfx::svect()).equivalence());
}

TEST_CASE("tensor equivalence of the two coequalizer routes") {
  auto z2 = tfx::z(2);
  auto id = identity_tensor_functor(z2);
  auto triv = strict(z2, z2, {0, 0}, "T");
  auto a = coequalizer_tensor(id, triv, Route::Composite);
  auto b = coequalizer_tensor(id, triv, Route::Direct);
  auto k = factor_through(a, TensorCocone{{b.universal[0]}, b.cells[0], b.cells[1]});
  auto l = factor_through(b, TensorCocone{{a.universal[0]}, a.cells[0], a.cells[1]});
  CHECK(check_tensor_equivalence(k, l).ok());
  CHECK_FALSE(check_tensor_equivalence(k, k).ok());
}

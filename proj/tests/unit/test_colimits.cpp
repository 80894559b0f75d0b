#include "../support/fixtures.hpp"
#include "catcolim/colimits.hpp"
#include "catcolim/verify.hpp"
#include "doctest.h"

using namespace catcolim;

namespace {

void require_universal(const ConstructionResult& c, const std::vector<CategoryPtr>& ts) {
  for (const auto& t : ts) {
    UPReport rep = check_universal(c, t);
    INFO(kind_name(c.kind), " against ", t->name(), ": ", rep.summary());
    CHECK(rep.equivalence());
  }
}

bool rejected_somewhere(const ConstructionResult& c, const std::vector<CategoryPtr>& ts) {
  for (const auto& t : ts) {
    if (!check_universal(c, t).equivalence()) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("coproduct is the disjoint union") {
  auto z2 = fx::cyclic(2);
  auto arr = fx::arrow();
  auto c = coproduct(z2, arr);
  CHECK(c.target->num_objects() == 3);
  CHECK(c.target->hom(0, 0).size() == 2);
  CHECK(c.target->hom(1, 2).size() == 1);
  CHECK(c.target->hom(0, 1).empty());
  CHECK(check_functor(c.universal[0]).valid);
  CHECK(check_functor(c.universal[1]).valid);
  require_universal(c, fx::test_categories());
}

TEST_CASE("coinserter of the identity pair on a point is a free loop") {
  auto one = fx::terminal();
  auto id = identity_functor(one);
  auto c = coinserter(id, id);
  CHECK(c.target->saturation().at(0, 0).status == HomStatus::Open);
  CHECK(check_natural(c.cells[0]).valid);
  require_universal(c, fx::test_categories());
}

TEST_CASE("coinserter between arrow and chain") {
  auto arr = fx::arrow();
  auto ch = fx::chain3();
  auto f = fx::functor_by_name(arr, ch, {"X", "Y"}, {"p"}, "F");
  auto g = fx::functor_by_name(arr, ch, {"Y", "Z"}, {"q"}, "G");
  auto c = coinserter(f, g);
  CHECK(check_natural(c.cells[0]).valid);
  // X -> Z: p;q, d<X>;q = p;d<Y>, d<X>;d<Y>
  CHECK(c.target->hom(0, 2).size() == 3);
  require_universal(c, fx::test_categories());
}

TEST_CASE("coequifier identifies parallel arrows") {
  auto one = fx::terminal();
  auto par = fx::parallel_pair();
  auto f = fx::functor_by_name(one, par, {"X"}, {}, "F");
  auto g = fx::functor_by_name(one, par, {"Y"}, {}, "G");
  auto a = fx::transformation_by_name(f, g, {"s"}, "a");
  auto b = fx::transformation_by_name(f, g, {"t"}, "b");
  auto c = coequifier(a, b);
  CHECK(c.target->hom(0, 1).size() == 1);
  require_universal(c, fx::test_categories());

  SUBCASE("equal cells give an equivalent category") {
    auto same = coequifier(a, a);
    CHECK(same.target->hom(0, 1).size() == 2);
    require_universal(same, fx::test_categories());
  }
}

TEST_CASE("coinverter of an arrow is the walking isomorphism") {
  auto one = fx::terminal();
  auto arr = fx::arrow();
  auto f = fx::functor_by_name(one, arr, {"X"}, {}, "F");
  auto g = fx::functor_by_name(one, arr, {"Y"}, {}, "G");
  auto al = fx::transformation_by_name(f, g, {"a"}, "alpha");
  auto c = coinverter(al);
  CHECK(c.target->hom(1, 0).size() == 1);
  CHECK(c.target->hom(0, 0).size() == 1);
  CHECK(c.stages.size() == 3);
  require_universal(c, fx::test_categories());
}

TEST_CASE("coequalizer routes agree") {
  auto one = fx::terminal();
  auto d2 = fx::discrete(2);
  auto f = fx::functor_by_name(one, d2, {"X0"}, {}, "F");
  auto g = fx::functor_by_name(one, d2, {"X1"}, {}, "G");
  auto c1 = coequalizer(f, g, Route::Composite);
  auto c2 = coequalizer(f, g, Route::Direct);
  for (auto* c : {&c1, &c2}) {
    CHECK(c->target->hom(0, 1).size() == 1);
    CHECK(c->target->hom(1, 1).size() == 1);
    require_universal(*c, fx::test_categories());
  }
  // comparison functors both ways compose to identities on generators
  Functor k = factor_through(c1, Cocone{{c2.universal[0]}, c2.cells[0], c2.cells[1]});
  Functor l = factor_through(c2, Cocone{{c1.universal[0]}, c1.cells[0], c1.cells[1]});
  CHECK(functors_equal(compose(k, l), identity_functor(c1.target)) == Tri::Equal);
  CHECK(functors_equal(compose(l, k), identity_functor(c2.target)) == Tri::Equal);

  SUBCASE("identity pair on a point gives a free invertible loop") {
    auto id = identity_functor(one);
    auto z = coequalizer(id, id);
    CHECK(z.target->saturation().at(0, 0).status == HomStatus::Open);
    require_universal(z, fx::test_categories());
  }
}

TEST_CASE("pushout glues along an isomorphism") {
  auto one = fx::terminal();
  auto arr = fx::arrow();
  auto z2 = fx::cyclic(2);
  auto f = fx::functor_by_name(one, arr, {"Y"}, {}, "F");
  auto g = fx::functor_by_name(one, z2, {"X"}, {}, "G");
  auto c = pushout(f, g);
  CHECK(c.target->num_objects() == 3);
  // Arr:X -> Z2:X is a;iso;(1 or f)
  CHECK(c.target->hom(0, 2).size() == 2);
  require_universal(c, fx::test_categories());
}

TEST_CASE("a dropped relation is detected") {
  auto arr = fx::arrow();
  auto ch = fx::chain3();
  auto f = fx::functor_by_name(arr, ch, {"X", "Y"}, {"p"}, "F");
  auto g = fx::functor_by_name(arr, ch, {"Y", "Z"}, {"q"}, "G");
  auto c = coinserter(f, g);
  auto bad = drop_relation(c, c.target->relations().size() - 1);
  CHECK(rejected_somewhere(bad, fx::test_categories()));
}

TEST_CASE("factoring a cocone") {
  auto one = fx::terminal();
  auto id = identity_functor(one);
  auto c = coinserter(id, id);
  auto t = fx::cyclic(3);
  Functor h = fx::functor_by_name(one, t, {"X"}, {}, "H");
  Transformation gam = fx::transformation_by_name(h, h, {"f"}, "gamma");
  Functor k = factor_through(c, Cocone{{h}, gam, std::nullopt});
  CHECK(check_functor(k).valid);
  CHECK(functors_equal(compose(c.universal[0], k), h) == Tri::Equal);

  SUBCASE("a cocone violating the relations is refused") {
    auto z2 = fx::cyclic(2);
    auto hz = fx::functor_by_name(one, z2, {"X"}, {}, "H");
    auto c2 = coequalizer(id, id);
    Transformation bad = fx::transformation_by_name(hz, hz, {"f"}, "g");
    Transformation badinv = fx::transformation_by_name(hz, hz, {"id(X)"}, "g'");
    CHECK_THROWS_AS(factor_through(c2, Cocone{{hz}, bad, badinv}), Error);
  }
}

TEST_CASE("tensor with a category is the product") {
  auto arr = fx::arrow();
  auto z2 = fx::cyclic(2);
  auto c = tensor_with(arr, z2);
  CHECK(c.target->num_objects() == 2);
  CHECK(c.target->hom(0, 1).size() == 2);
  require_universal(c, {fx::terminal("T1"), fx::cyclic(2, "TZ2"), fx::arrow("TArr"), fx::walking_iso("TIso")});
}

TEST_CASE("directed colimit lands at the top") {
  auto a0 = fx::terminal("A0");
  auto a1 = fx::arrow("A1");
  auto a2 = fx::chain3("A2");
  Diagram d;
  d.index = {"i", "j", "k"};
  d.categories = {a0, a1, a2};
  d.functors.push_back({{0, 1}, fx::functor_by_name(a0, a1, {"X"}, {}, "F01")});
  d.functors.push_back({{1, 2}, fx::functor_by_name(a1, a2, {"X", "Y"}, {"p"}, "F12")});
  d.functors.push_back({{0, 2}, fx::functor_by_name(a0, a2, {"X"}, {}, "F02")});
  auto c = directed_colimit(d);
  CHECK(c.target == a2);
  CHECK(c.universal[0](0) == 0);

  SUBCASE("incoherent transition functors are refused") {
    d.functors[2].second = fx::functor_by_name(a0, a2, {"Z"}, {}, "F02");
    CHECK_THROWS_AS(directed_colimit(d), Error);
  }
}

#include <random>

#include "../support/oracles.hpp"
#include "catcolim/functor.hpp"
#include "doctest.h"

using namespace catcolim;

namespace {

CategoryPtr z2_loop() {
  CategoryBuilder b("Z2");
  b.object("X");
  b.arrow("f", "X", "X");
  b.relation("f;f", "id(X)");
  return b.build();
}

CategoryPtr free_loop() {
  CategoryBuilder b("N");
  b.object("X");
  b.arrow("f", "X", "X");
  return b.build(Backend::Rewrite, Bounds{12, 100, 5000});
}

}  // namespace

TEST_CASE("involution closes to two morphisms") {
  auto c = z2_loop();
  CHECK(c->rewriting_complete());
  const auto& sat = c->saturation();
  CHECK(sat.at(0, 0).status == HomStatus::Closed);
  CHECK(sat.at(0, 0).size == 2);
  CHECK(c->equal(c->parse_path("f;f;f"), c->parse_path("f")) == Tri::Equal);
  CHECK(c->equal(c->parse_path("f"), c->identity(0)) == Tri::Distinct);
  CHECK(c->format_path(c->normalize(c->parse_path("f;f;f;f"))) == "id(X)");
}

TEST_CASE("free loop is open") {
  auto c = free_loop();
  CHECK(c->saturation().at(0, 0).status == HomStatus::Open);
  CHECK_THROWS_AS(c->hom(0, 0), Error);
  CHECK(c->equal(c->parse_path("f;f"), c->parse_path("f")) == Tri::Distinct);
}

TEST_CASE("non-parallel relation is rejected") {
  CategoryBuilder b("B");
  b.object("X");
  b.object("Y");
  b.arrow("f", "X", "Y");
  CHECK_THROWS_AS(b.relation("f", "id(X)"), Error);
  CHECK_THROWS_AS(b.object("X"), Error);
}

TEST_CASE("associativity of composition") {
  CategoryBuilder b("C");
  b.object("X");
  b.object("Y");
  b.arrow("f", "X", "Y");
  b.arrow("g", "Y", "X");
  b.relation("f;g;f", "f");
  b.relation("g;f;g", "g");
  auto c = b.build();
  CHECK(c->finite());
  Path f = c->parse_path("f"), g = c->parse_path("g");
  CHECK(c->equal(c->compose(c->compose(f, g), f), c->compose(f, c->compose(g, f))) == Tri::Equal);
  CHECK(c->equal(c->compose(c->identity(0), f), f) == Tri::Equal);
  CHECK_THROWS_AS(c->compose(f, f), Error);
}

TEST_CASE("rewriting agrees with coset enumeration on hom sizes") {
  std::mt19937 rng(7);
  int checked = 0;
  for (int i = 0; i < 40; ++i) {
    auto c = oracle::random_category(rng, i, Bounds{40, 2000, 5000});
    if (!c->rewriting_complete()) continue;
    for (ObjId x = 0; x < c->num_objects(); ++x) {
      oracle::HomEnumeration h(*c, x, 2000);
      if (!h.closed()) continue;
      for (ObjId y = 0; y < c->num_objects(); ++y) {
        const auto& info = c->saturation().at(x, y);
        REQUIRE(info.status == HomStatus::Closed);
        CHECK(info.size == h.count_to(y));
        ++checked;
      }
    }
  }
  CHECK(checked > 10);
}

TEST_CASE("functors into Z2") {
  auto c = z2_loop();
  auto fs = enumerate_functors(c, c);
  CHECK(fs.size() == 2);
  for (const auto& f : fs) CHECK(check_functor(f).valid);
  auto id = identity_functor(c);
  CHECK(check_equivalence(id).equivalence());
  auto ts = enumerate_transformations(id, id);
  CHECK(ts.size() == 2);
}

TEST_CASE("pi0 of two components") {
  CategoryBuilder b("D");
  b.object("A");
  b.object("B");
  b.object("C");
  b.arrow("f", "A", "C");
  auto c = b.build();
  auto comps = pi0(*c);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<ObjId>{0, 2});
}

TEST_CASE("product of arrows commutes") {
  CategoryBuilder a("A");
  a.object("X");
  a.object("Y");
  a.arrow("f", "X", "Y");
  auto A = a.build();
  auto p = product(A, A);
  CHECK(p.category->num_objects() == 4);
  // the square has exactly one diagonal
  CHECK(p.category->hom(p.object(0, 0), p.object(1, 1)).size() == 1);
}
